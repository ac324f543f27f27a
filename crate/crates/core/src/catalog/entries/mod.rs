//! The checks, one module per group of identities.

mod dist;
mod fac;
mod ferm;
mod gf;
mod ident;
mod seq;
mod volk;

use super::{Check, Tally};
use crate::poly::{BiPolynomial, Polynomial};

pub(super) fn all() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(fac::checks());
    v.extend(gf::checks());
    v.extend(volk::checks());
    v.extend(ferm::checks());
    v.extend(ident::checks());
    v.extend(seq::checks());
    v.extend(dist::checks());
    v
}

type Body = fn(&super::Ctx, &mut Tally);

fn ck(id: &'static str, printed: Body, corrected: Option<Body>) -> Check {
    Check { id, printed, corrected }
}

/// Compares two bivariate polynomials; a disagreement is reported at the
/// lowest differing power of `x`.
fn bi_eq(t: &mut Tally, params: &str, lhs: &BiPolynomial, rhs: &BiPolynomial) {
    let z = Polynomial::zero();
    let n = lhs.rows().len().max(rhs.rows().len());
    let row = |b: &BiPolynomial, i: usize| b.rows().get(i).cloned().unwrap_or_else(|| z.clone());
    let i = (0..n).find(|&i| !row(lhs, i).same_as(&row(rhs, i))).unwrap_or(0);
    t.poly_eq(|| format!("{params}, [x^{i}] in y"), &row(lhs, i), &row(rhs, i));
}
