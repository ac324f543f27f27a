use std::str::FromStr;
use std::sync::Arc;

use super::memo::RowMemo;
use super::{binomial, factorial, powu};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Triangle {
    /// signed Stirling numbers of the first kind
    S1,
    /// Stirling numbers of the second kind
    S2,
    /// unsigned Stirling numbers of the first kind, `C(n,k) = |S1(n,k)|`
    CUnsigned,
    /// signed Lah numbers `(-1)^n n!/k! binom(n-1,k-1)`
    Lah,
    LahUnsigned,
    /// central factorial numbers `t(n,k)`: `x^[n] = sum t(n,k) x^k`
    CfSmall,
    /// central factorial numbers `T(n,k)`: `x^n = sum T(n,k) x^[k]`
    CfBig,
    /// `S2(n,k;lambda)`, coefficients of `(lambda e^t - 1)^k / k!`
    LambdaS2(Rational),
}

impl FromStr for Triangle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "s1" | "stirling1" => Triangle::S1,
            "s2" | "stirling2" => Triangle::S2,
            "c" | "cunsigned" | "stirling1unsigned" => Triangle::CUnsigned,
            "lah" => Triangle::Lah,
            "lahunsigned" => Triangle::LahUnsigned,
            "t" | "cfsmall" | "centralt" => Triangle::CfSmall,
            "bigt" | "cfbig" | "centralbigt" => Triangle::CfBig,
            _ => return Err(Error::Parse(format!("unknown triangle {s:?}"))),
        })
    }
}

type Row = Vec<Rational>;

fn prev(rows: &[Arc<Row>], n: usize, k: usize) -> Rational {
    rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
}

fn s1_row(n: usize, rows: &[Arc<Row>]) -> Row {
    if n == 0 {
        return vec![Rational::one()];
    }
    // S1(n,k) = -(n-1) S1(n-1,k) + S1(n-1,k-1)
    let m = Rational::from(n - 1);
    (0..=n)
        .map(|k| {
            let a = -(&m * prev(rows, n - 1, k));
            if k == 0 {
                a
            } else {
                a + prev(rows, n - 1, k - 1)
            }
        })
        .collect()
}

fn s2_row(n: usize, rows: &[Arc<Row>]) -> Row {
    if n == 0 {
        return vec![Rational::one()];
    }
    // S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)
    (0..=n)
        .map(|k| {
            let a = Rational::from(k) * prev(rows, n - 1, k);
            if k == 0 {
                a
            } else {
                a + prev(rows, n - 1, k - 1)
            }
        })
        .collect()
}

fn c_row(n: usize, rows: &[Arc<Row>]) -> Row {
    if n == 0 {
        return vec![Rational::one()];
    }
    let m = Rational::from(n - 1);
    (0..=n)
        .map(|k| {
            let a = &m * prev(rows, n - 1, k);
            if k == 0 {
                a
            } else {
                a + prev(rows, n - 1, k - 1)
            }
        })
        .collect()
}

fn lah_row(n: usize, _: &[Arc<Row>]) -> Row {
    (0..=n)
        .map(|k| {
            if n == 0 && k == 0 {
                return Rational::one();
            }
            if k == 0 {
                return Rational::zero();
            }
            Rational::sign_pow(n as i64) * factorial(n) / factorial(k)
                * binomial(n as i64 - 1, k as i64 - 1)
        })
        .collect()
}

/// `x^[n] = x prod_{j=1}^{n-1} (x + n/2 - j)` expanded in monomials.
fn cf_small_row(n: usize, _: &[Arc<Row>]) -> Row {
    if n == 0 {
        return vec![Rational::one()];
    }
    let half_n = Rational::frac(n as i64, 2);
    let mut p = Polynomial::x();
    for j in 1..n {
        p = p.mul(&Polynomial::linear(Rational::one(), &half_n - Rational::from(j)));
    }
    let mut row = p.coeffs().to_vec();
    row.resize(n + 1, Rational::zero());
    row
}

/// Row `n` of `T = t^{-1}`, using unitriangularity of `t`.
fn cf_big_row(n: usize, _: &[Arc<Row>]) -> Row {
    let mut row = vec![Rational::zero(); n + 1];
    for m in (0..=n).rev() {
        let mut v = if m == n { Rational::one() } else { Rational::zero() };
        for k in m + 1..=n {
            if !row[k].is_zero() {
                v -= &row[k] * CF_SMALL.row(k)[m].clone();
            }
        }
        row[m] = v;
    }
    row
}

static S1: RowMemo<Row> = RowMemo::new(s1_row);
static S2: RowMemo<Row> = RowMemo::new(s2_row);
static C: RowMemo<Row> = RowMemo::new(c_row);
static LAH: RowMemo<Row> = RowMemo::new(lah_row);
static CF_SMALL: RowMemo<Row> = RowMemo::new(cf_small_row);
static CF_BIG: RowMemo<Row> = RowMemo::new(cf_big_row);

/// Entry `(n, k)`; zero when `k > n`.
pub fn triangle(family: &Triangle, n: usize, k: usize) -> Rational {
    if k > n {
        return match family {
            Triangle::LambdaS2(l) => lambda_s2(n, k, l),
            _ => Rational::zero(),
        };
    }
    let memo = match family {
        Triangle::S1 => &S1,
        Triangle::S2 => &S2,
        Triangle::CUnsigned => &C,
        Triangle::Lah | Triangle::LahUnsigned => &LAH,
        Triangle::CfSmall => &CF_SMALL,
        Triangle::CfBig => &CF_BIG,
        Triangle::LambdaS2(l) => return lambda_s2(n, k, l),
    };
    let v = memo.row(n)[k].clone();
    if *family == Triangle::LahUnsigned {
        v.abs()
    } else {
        v
    }
}

/// `S2(n,k;lambda) = (1/k!) sum_j (-1)^(k-j) binom(k,j) lambda^j j^n`
fn lambda_s2(n: usize, k: usize, l: &Rational) -> Rational {
    let s: Rational = (0..=k)
        .map(|j| {
            Rational::sign_pow((k - j) as i64)
                * binomial(k as i64, j as i64)
                * powu(l, j)
                * powu(&Rational::from(j), n)
        })
        .sum();
    s / factorial(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralKind {
    Small,
    Big,
}

/// `t(2i,2j)` or `T(2i,2j)`: the even-index sub-triangles.
pub fn even_central(kind: CentralKind, i: usize, j: usize) -> Rational {
    let fam = match kind {
        CentralKind::Small => Triangle::CfSmall,
        CentralKind::Big => Triangle::CfBig,
    };
    triangle(&fam, 2 * i, 2 * j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{StdSeries, TruncatedSeries};

    fn row(f: &Triangle, n: usize) -> Vec<i64> {
        (0..=n).map(|k| triangle(f, n, k).to_i64().unwrap()).collect()
    }

    #[test]
    fn printed_rows() {
        assert_eq!(row(&Triangle::S1, 4), [0, -6, 11, -6, 1]);
        assert_eq!(row(&Triangle::S2, 5), [0, 1, 15, 25, 10, 1]);
        assert_eq!(row(&Triangle::LahUnsigned, 4), [0, 24, 36, 12, 1]);
        assert_eq!(triangle(&Triangle::S1, 4, 2), Rational::from(11));
        assert_eq!(triangle(&Triangle::LahUnsigned, 4, 2), Rational::from(36));
        assert_eq!(triangle(&Triangle::CfSmall, 6, 4), Rational::from(-5));
        assert_eq!(triangle(&Triangle::S1, 2, 5), Rational::zero());
    }

    #[test]
    fn boundaries() {
        for f in [Triangle::S1, Triangle::S2, Triangle::CUnsigned, Triangle::Lah, Triangle::CfSmall, Triangle::CfBig] {
            assert!(triangle(&f, 0, 0).is_one());
            for n in 1..10 {
                assert!(triangle(&f, n, 0).is_zero(), "{f:?} {n}");
                assert!(triangle(&f, n, n).abs().is_one() || f == Triangle::Lah);
            }
        }
    }

    #[test]
    fn inverse_pairs() {
        for n in 0..=12 {
            for m in 0..=12 {
                let s: Rational = (0..=12)
                    .map(|k| triangle(&Triangle::S1, n, k) * triangle(&Triangle::S2, k, m))
                    .sum();
                let t: Rational = (0..=12)
                    .map(|k| triangle(&Triangle::CfBig, n, k) * triangle(&Triangle::CfSmall, k, m))
                    .sum();
                let d = if n == m { Rational::one() } else { Rational::zero() };
                assert_eq!(s, d);
                assert_eq!(t, d);
            }
        }
    }

    #[test]
    fn lah_recurrences() {
        for n in 0..=10 {
            for k in 0..=n {
                let via: Rational = (0..=n)
                    .map(|j| {
                        Rational::sign_pow(j as i64)
                            * triangle(&Triangle::S1, n, j)
                            * triangle(&Triangle::S2, j, k)
                    })
                    .sum();
                assert_eq!(triangle(&Triangle::Lah, n, k), via);
                // L(n+1,k) = -(n+k) L(n,k) - L(n,k-1)
                if k >= 1 {
                    let r = -(Rational::from(n + k) * triangle(&Triangle::Lah, n, k))
                        - triangle(&Triangle::Lah, n, k - 1);
                    assert_eq!(triangle(&Triangle::Lah, n + 1, k), r);
                }
            }
        }
    }

    #[test]
    fn central_factorial_recurrence() {
        // T(n,k) = T(n-2,k-2) + (k/2)^2 T(n-2,k), an independent route
        for n in 2..=14 {
            for k in 2..=n {
                let kk = Rational::frac(k as i64, 2);
                let r = triangle(&Triangle::CfBig, n - 2, k - 2)
                    + &kk * &kk * triangle(&Triangle::CfBig, n - 2, k);
                assert_eq!(triangle(&Triangle::CfBig, n, k), r);
            }
        }
        // odd rows are rational: x^[3] = x^3 - x/4
        assert_eq!(triangle(&Triangle::CfSmall, 3, 1), Rational::frac(-1, 4));
    }

    #[test]
    fn egf_oracles() {
        let k_max = 12;
        let em1 = TruncatedSeries::expm1(k_max);
        let log = TruncatedSeries::standard(StdSeries::Log1p, k_max);
        let lam = Rational::frac(1, 2);
        let lam_em1 = TruncatedSeries::standard(StdSeries::Exp, k_max)
            .scale(&lam)
            .sub(&TruncatedSeries::one(k_max))
            .unwrap();
        for k in 0..=k_max {
            let s2 = em1.powi(k as u32).scale(&factorial(k).recip().unwrap());
            let s1 = log.powi(k as u32).scale(&factorial(k).recip().unwrap());
            let ls2 = lam_em1.powi(k as u32).scale(&factorial(k).recip().unwrap());
            for n in 0..=k_max {
                assert_eq!(s2.egf_coeff(n), triangle(&Triangle::S2, n, k));
                assert_eq!(s1.egf_coeff(n), triangle(&Triangle::S1, n, k));
                assert_eq!(ls2.egf_coeff(n), triangle(&Triangle::LambdaS2(lam.clone()), n, k));
            }
        }
    }

    #[test]
    fn even_tables() {
        let t: Vec<i64> = (0..=6).map(|j| even_central(CentralKind::Small, 6, j).to_i64().unwrap()).collect();
        assert_eq!(t, [0, -14400, 21076, -7645, 1023, -55, 1]);
        let tb: Vec<i64> = (0..=6).map(|j| even_central(CentralKind::Big, 6, j).to_i64().unwrap()).collect();
        assert_eq!(tb, [0, 1, 341, 1408, 627, 55, 1]);
    }
}
