use std::str::FromStr;

use super::memo::BlockMemo;
use super::{binomial, factorial, powu, triangle, Triangle};
use crate::integrate::{integrate, Functional};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::{StdSeries, TruncatedSeries};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sequence {
    Bernoulli,
    Euler,
    /// `2^n E_n(1/2)`, EGF `2/(e^t + e^{-t})`
    EulerStar,
    /// `D_n`, Volkenborn integral of `x_(n)`
    Daehee1,
    /// Volkenborn integral of `x^(n)`
    Daehee2,
    /// `Ch_n`, fermionic integral of `x_(n)`
    Changhee1,
    /// fermionic integral of `x^(n)`
    Changhee2,
    /// `H_n = sum_{k=0}^n 1/(k+1)`
    Harmonic,
    Fubini,
    /// `b_n(0) = \int_0^1 u_(n) du`
    CauchyB2,
    /// Volkenborn integral of `x_(n) x^(n)`
    YOfB,
    /// fermionic integral of `x_(n) x^(n)`
    YOfE,
}

impl Sequence {
    pub const ALL: [Sequence; 12] = [
        Sequence::Bernoulli,
        Sequence::Euler,
        Sequence::EulerStar,
        Sequence::Daehee1,
        Sequence::Daehee2,
        Sequence::Changhee1,
        Sequence::Changhee2,
        Sequence::Harmonic,
        Sequence::Fubini,
        Sequence::CauchyB2,
        Sequence::YOfB,
        Sequence::YOfE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Bernoulli => "bernoulli",
            Sequence::Euler => "euler",
            Sequence::EulerStar => "euler-star",
            Sequence::Daehee1 => "daehee1",
            Sequence::Daehee2 => "daehee2",
            Sequence::Changhee1 => "changhee1",
            Sequence::Changhee2 => "changhee2",
            Sequence::Harmonic => "harmonic",
            Sequence::Fubini => "fubini",
            Sequence::CauchyB2 => "cauchy-b2",
            Sequence::YOfB => "y-of-b",
            Sequence::YOfE => "y-of-e",
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = |x: &str| x.to_ascii_lowercase().replace(['-', '_'], "");
        Sequence::ALL
            .into_iter()
            .find(|q| norm(q.name()) == norm(s))
            .ok_or_else(|| Error::Parse(format!("unknown sequence {s:?}")))
    }
}

fn egf_values(s: &TruncatedSeries) -> Vec<Rational> {
    (0..=s.order()).map(|n| s.egf_coeff(n)).collect()
}

fn exp(k: usize) -> TruncatedSeries {
    TruncatedSeries::standard(StdSeries::Exp, k)
}

fn bernoulli_block(len: usize) -> Vec<Rational> {
    let k = len - 1;
    // (e^t - 1)/t needs one more exp term before dividing by t
    let d = TruncatedSeries::from_coeffs(TruncatedSeries::expm1(k + 1).div_t().coeffs().to_vec(), k);
    egf_values(&d.inverse().expect("constant term 1"))
}

fn euler_block(len: usize) -> Vec<Rational> {
    let k = len - 1;
    let d = exp(k).add(&TruncatedSeries::one(k)).unwrap();
    egf_values(&d.inverse().unwrap().scale(&Rational::from(2)))
}

fn euler_star_block(len: usize) -> Vec<Rational> {
    let k = len - 1;
    let d = exp(k).add(&exp(k).dilate(&Rational::from(-1))).unwrap();
    egf_values(&d.inverse().unwrap().scale(&Rational::from(2)))
}

static BERNOULLI: BlockMemo<Rational> = BlockMemo::new(bernoulli_block);
static EULER: BlockMemo<Rational> = BlockMemo::new(euler_block);
static EULER_STAR: BlockMemo<Rational> = BlockMemo::new(euler_star_block);

/// `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.get(n)
}

/// `E_n = \int x^n d mu_{-1}`, EGF `2/(e^t+1)`.
pub fn euler(n: usize) -> Rational {
    EULER.get(n)
}

fn appell(n: usize, numbers: impl Fn(usize) -> Rational) -> Polynomial {
    Polynomial::monomial(
        (0..=n).map(|k| binomial(n as i64, k as i64) * numbers(n - k)).collect(),
    )
}

/// `B_n(x) = sum_j binom(n,j) x^{n-j} B_j`
pub fn bernoulli_poly(n: usize) -> Polynomial {
    appell(n, bernoulli)
}

/// `E_n(x) = sum_j binom(n,j) x^{n-j} E_j`
pub fn euler_poly(n: usize) -> Polynomial {
    appell(n, euler)
}

fn rising_falling(n: usize) -> Polynomial {
    Polynomial::falling(n).mul(&Polynomial::rising(n))
}

pub fn sequence(family: Sequence, n: usize) -> Rational {
    let sn = Rational::sign_pow(n as i64);
    match family {
        Sequence::Bernoulli => bernoulli(n),
        Sequence::Euler => euler(n),
        Sequence::EulerStar => EULER_STAR.get(n),
        Sequence::Daehee1 => sn * factorial(n) / Rational::from(n + 1),
        Sequence::Changhee1 => sn * factorial(n) / powu(&Rational::from(2), n),
        Sequence::Daehee2 => integrate(Functional::Volkenborn, &Polynomial::rising(n)),
        Sequence::Changhee2 => integrate(Functional::Fermionic, &Polynomial::rising(n)),
        Sequence::Harmonic => (0..=n).map(|k| Rational::frac(1, k as i64 + 1)).sum(),
        Sequence::Fubini => {
            (0..=n).map(|k| factorial(k) * triangle(&Triangle::S2, n, k)).sum()
        }
        Sequence::CauchyB2 => Polynomial::falling(n).definite_integral_01(),
        Sequence::YOfB => integrate(Functional::Volkenborn, &rising_falling(n)),
        Sequence::YOfE => integrate(Functional::Fermionic, &rising_falling(n)),
    }
}

/// The generating function the family is checked against, when it has
/// one: exponential except for `Harmonic`, which is ordinary.
pub fn generating_function(family: Sequence, k: usize) -> Option<TruncatedSeries> {
    let one = TruncatedSeries::one(k);
    let two = Rational::from(2);
    let t = TruncatedSeries::t(k);
    // log(1+t)/t at order k
    let log_over_t = || {
        let l = TruncatedSeries::standard(StdSeries::Log1p, k + 1).div_t();
        TruncatedSeries::from_coeffs(l.coeffs().to_vec(), k)
    };
    Some(match family {
        Sequence::Daehee1 => log_over_t(),
        // -(1-t) log(1-t)/t
        Sequence::Daehee2 => log_over_t()
            .dilate(&Rational::from(-1))
            .mul(&one.sub(&t).unwrap())
            .unwrap(),
        Sequence::Changhee1 => t.add(&one.scale(&two)).unwrap().inverse().unwrap().scale(&two),
        // 2(1-t)/(2-t)
        Sequence::Changhee2 => one
            .scale(&two)
            .sub(&t)
            .unwrap()
            .inverse()
            .unwrap()
            .mul(&one.sub(&t).unwrap())
            .unwrap()
            .scale(&two),
        Sequence::Fubini => one.scale(&two).sub(&exp(k)).unwrap().inverse().unwrap(),
        Sequence::CauchyB2 => TruncatedSeries::standard(StdSeries::TOverLog1p, k),
        // ordinary: sum H_n t^n = (log(1+s)/s at s=-t) / (1-t), with H_n = 1 + ... + 1/(n+1)
        Sequence::Harmonic => log_over_t()
            .dilate(&Rational::from(-1))
            .mul(&one.sub(&t).unwrap().inverse().unwrap())
            .unwrap(),
        Sequence::Bernoulli => {
            TruncatedSeries::from_coeffs(bernoulli_block(k + 1), k).egf_as_series()
        }
        Sequence::Euler => TruncatedSeries::from_coeffs(euler_block(k + 1), k).egf_as_series(),
        Sequence::EulerStar => {
            TruncatedSeries::from_coeffs(euler_star_block(k + 1), k).egf_as_series()
        }
        Sequence::YOfB | Sequence::YOfE => return None,
    })
}

impl TruncatedSeries {
    /// Reads a value list as EGF coefficients: `c_n = v_n / n!`.
    fn egf_as_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.coeffs().iter().enumerate().map(|(n, v)| v / factorial(n)).collect(),
            self.order(),
        )
    }
}

/// An independent second route for `sequence(family, n)`.
pub fn sequence_oracle(family: Sequence, n: usize) -> Rational {
    let s2k = |k: usize| triangle(&Triangle::S2, n, k) * factorial(k) * Rational::sign_pow(k as i64);
    match family {
        // Mahler expansion of x^n integrated termwise
        Sequence::Bernoulli => (0..=n).map(|k| s2k(k) / Rational::from(k + 1)).sum(),
        Sequence::Euler => (0..=n).map(|k| s2k(k) / powu(&Rational::from(2), k)).sum(),
        Sequence::EulerStar => {
            powu(&Rational::from(2), n) * euler_poly(n).evaluate(&Rational::frac(1, 2))
        }
        Sequence::YOfB => (0..=n)
            .map(|k| triangle(&Triangle::CfSmall, 2 * n, 2 * k) * bernoulli(2 * k))
            .sum(),
        Sequence::YOfE => {
            (0..=n).map(|k| triangle(&Triangle::CfSmall, 2 * n, 2 * k) * euler(2 * k)).sum()
        }
        Sequence::Harmonic => generating_function(family, n).unwrap().coeff(n).clone(),
        _ => generating_function(family, n.max(1)).unwrap().egf_coeff(n),
    }
}
