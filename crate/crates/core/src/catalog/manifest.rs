//! The checked-in list of identities: id, citation and a verbatim quote
//! locating each one in the source text.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::Error;

const RAW: &str = include_str!("../../data/manifest.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErratumKind {
    /// the printed statement fails and a corrected companion is checked
    Printed,
    /// declared up front; always reported as a candidate
    Preflagged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub kind: ErratumKind,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub group: String,
    pub citation: String,
    pub anchor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
}

impl ManifestEntry {
    /// Citation followed by the anchor quote.
    pub fn paper_eq(&self) -> String {
        format!("{}: \"{}\"", self.citation, self.anchor)
    }
}

fn parse(raw: &str) -> Result<Vec<ManifestEntry>, Error> {
    let mut v: Vec<ManifestEntry> = serde_json::from_str(raw).map_err(|e| Error::Manifest(e.to_string()))?;
    v.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = v.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(Error::Manifest(format!("duplicate id {}", w[0].id)));
    }
    if let Some(e) = v.iter().find(|e| !e.id.starts_with(&format!("{}.", e.group))) {
        return Err(Error::Manifest(format!("{} is not in group {}", e.id, e.group)));
    }
    Ok(v)
}

/// The manifest, parsed once and sorted by id.
pub fn manifest() -> Result<Vec<ManifestEntry>, Error> {
    static CELL: OnceLock<Result<Vec<ManifestEntry>, Error>> = OnceLock::new();
    CELL.get_or_init(|| parse(RAW)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_has_the_two_preflagged_entries() {
        let m = manifest().unwrap();
        let pre: Vec<_> = m
            .iter()
            .filter(|e| e.erratum.as_ref().is_some_and(|x| x.kind == ErratumKind::Preflagged))
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(pre, ["DIST.UNIT_INT", "FAC.SCHLOMILCH"]);
        assert!(m.iter().all(|e| !e.anchor.trim().is_empty()));
    }

    #[test]
    fn rejects_duplicates() {
        let one = r#"{"id":"A.X","group":"A","citation":"c","anchor":"a"}"#;
        assert!(parse(&format!("[{one},{one}]")).is_err());
        assert!(parse(r#"[{"id":"B.X","group":"A","citation":"c","anchor":"a"}]"#).is_err());
    }
}
