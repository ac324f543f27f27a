//! Volkenborn and fermionic p-adic integrals of polynomials, their finite
//! level approximants, coset integrals and distributions on Z_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::families::{apostol, bernoulli, bernoulli_poly, euler, euler_poly, powu, Apostol};
use crate::par;
use crate::poly::{Basis, Polynomial};
use crate::rational::{Prime, Rational};
use crate::Error;

/// Which integral: `mu_1` (Volkenborn) or `mu_{-1}` (fermionic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Functional {
    Volkenborn,
    Fermionic,
}

impl std::str::FromStr for Functional {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "volkenborn" | "haar" | "mu1" => Ok(Functional::Volkenborn),
            "fermionic" | "mu-1" => Ok(Functional::Fermionic),
            _ => Err(Error::Parse(format!("unknown measure {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    Mahler,
    Witt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralResult {
    pub value: Rational,
    /// the route whose value is reported (the Mahler one)
    pub route: Route,
    pub agrees: bool,
}

/// `\int binom(x,n) d mu`: `(-1)^n/(n+1)` or `(-1)^n 2^{-n}`.
fn mahler_weight(f: Functional, n: usize) -> Rational {
    let s = Rational::sign_pow(n as i64);
    match f {
        Functional::Volkenborn => s / Rational::from(n + 1),
        Functional::Fermionic => s / powu(&Rational::from(2), n),
    }
}

fn moment(f: Functional, n: usize) -> Rational {
    match f {
        Functional::Volkenborn => bernoulli(n),
        Functional::Fermionic => euler(n),
    }
}

/// Reference route: expand in `binom(x,n)` and integrate termwise.
pub fn integrate_mahler(f: Functional, p: &Polynomial) -> Rational {
    let m = p.convert(Basis::Mahler);
    m.coeffs().iter().enumerate().map(|(n, c)| c * mahler_weight(f, n)).sum()
}

/// Cross-check route: monomial coefficients against `B_j` or `E_j`.
pub fn integrate_witt(f: Functional, p: &Polynomial) -> Rational {
    let m = p.to_monomial();
    m.coeffs().iter().enumerate().map(|(j, a)| a * moment(f, j)).sum()
}

/// Both routes; a disagreement is reported as an error, never returned as a value.
pub fn integral(f: Functional, p: &Polynomial) -> Result<IntegralResult, Error> {
    let mahler = integrate_mahler(f, p);
    let witt = integrate_witt(f, p);
    if mahler != witt {
        return Err(Error::RouteDisagreement { mahler: mahler.to_string(), witt: witt.to_string() });
    }
    Ok(IntegralResult { value: mahler, route: Route::Mahler, agrees: true })
}

pub fn volkenborn(p: &Polynomial) -> Result<IntegralResult, Error> {
    integral(Functional::Volkenborn, p)
}

pub fn fermionic(p: &Polynomial) -> Result<IntegralResult, Error> {
    integral(Functional::Fermionic, p)
}

/// The integral value. Panics if the two routes disagree, which can only
/// come from a broken triangle table.
pub fn integrate(f: Functional, p: &Polynomial) -> Rational {
    match integral(f, p) {
        Ok(r) => r.value,
        Err(e) => panic!("integral of {p}: {e}"),
    }
}

/// `p = (1/den) * sum a_j x^j` with integer `a_j`.
fn integer_form(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let m = p.to_monomial();
    let den = m.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let nums = m
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

/// `sum_{x in range} w(x) p(x)` for integer points, in exact integers.
fn weighted_sum(nums: &[BigInt], lo: u64, hi: u64, alternating: bool) -> BigInt {
    let mut total = BigInt::zero();
    for x in lo..hi {
        let bx = BigInt::from(x);
        let mut v = BigInt::zero();
        for a in nums.iter().rev() {
            v = v * &bx + a;
        }
        if alternating && x % 2 == 1 {
            total -= v;
        } else {
            total += v;
        }
    }
    total
}

fn level_size(prime: Prime, level: u32) -> Result<u64, Error> {
    prime
        .get()
        .checked_pow(level)
        .filter(|m| *m <= 50_000_000)
        .ok_or_else(|| Error::OutOfRange(format!("p^N = {prime}^{level} is too large")))
}

fn chunked_sum(nums: &[BigInt], m: u64, alternating: bool) -> BigInt {
    const CHUNK: u64 = 2048;
    let starts: Vec<u64> = (0..m).step_by(CHUNK as usize).collect();
    par::map(&starts, |&lo| weighted_sum(nums, lo, (lo + CHUNK).min(m), alternating))
        .into_iter()
        .sum()
}

/// `(1/p^N) sum_{x<p^N} p(x)`, exact.
pub fn riemann_sum(p: &Polynomial, prime: Prime, level: u32) -> Result<Rational, Error> {
    if level == 0 {
        return Err(Error::OutOfRange("level N must be at least 1".into()));
    }
    let m = level_size(prime, level)?;
    let (nums, den) = integer_form(p);
    let s = chunked_sum(&nums, m, false);
    Rational::new(s, den * BigInt::from(m))
}

/// `sum_{x<p^N} (-1)^x p(x)`, exact; `p` must be odd.
pub fn alternating_sum(p: &Polynomial, prime: Prime, level: u32) -> Result<Rational, Error> {
    if !prime.is_odd() {
        return Err(Error::EvenPrime);
    }
    if level == 0 {
        return Err(Error::OutOfRange("level N must be at least 1".into()));
    }
    let m = level_size(prime, level)?;
    let (nums, den) = integer_form(p);
    Rational::new(chunked_sum(&nums, m, true), den)
}

/// Finite approximant of the chosen integral at level `N`.
pub fn finite_sum(f: Functional, p: &Polynomial, prime: Prime, level: u32) -> Result<Rational, Error> {
    match f {
        Functional::Volkenborn => riemann_sum(p, prime, level),
        Functional::Fermionic => alternating_sum(p, prime, level),
    }
}

/// Left side minus right side of the shift equation; always zero.
///
/// Volkenborn: `\int f(x+m) = \int f + sum_{j<m} f'(j)`.
/// Fermionic: `\int f(x+m) + (-1)^{m+1} \int f = 2 sum_{j<m} (-1)^{m-1-j} f(j)`.
pub fn shift_equation_residual(p: &Polynomial, m: u32, f: Functional) -> Rational {
    let shifted = integrate(f, &p.shift(&Rational::from(m as i64)));
    let base = integrate(f, p);
    match f {
        Functional::Volkenborn => {
            let d = p.derivative();
            let s: Rational = (0..m).map(|j| d.evaluate(&Rational::from(j as i64))).sum();
            shifted - base - s
        }
        Functional::Fermionic => {
            let s: Rational = (0..m)
                .map(|j| {
                    Rational::sign_pow((m - 1 - j) as i64) * p.evaluate(&Rational::from(j as i64))
                })
                .sum();
            shifted + Rational::sign_pow(m as i64 + 1) * base - Rational::from(2) * s
        }
    }
}

/// `\int f d mu_1 = -f'(0)/2` for odd `f`.
pub fn odd_rule(p: &Polynomial) -> Result<Rational, Error> {
    if !p.is_odd() {
        return Err(Error::NotOdd);
    }
    let v = -p.derivative().evaluate(&Rational::zero()) / Rational::from(2);
    let direct = integrate(Functional::Volkenborn, p);
    if v != direct {
        return Err(Error::RouteDisagreement { mahler: direct.to_string(), witt: v.to_string() });
    }
    Ok(v)
}

/// `p^{n(m-1)} B_m(j/p^n)`, the closed form of the coset integral of `x^m`.
pub fn coset_monomial_closed(m: usize, j: u64, n: u32, prime: Prime) -> Rational {
    let pn = Rational::int(prime.power(n));
    let e = n as i64 * (m as i64 - 1);
    Rational::int(prime.get()).pow(e).expect("p > 0")
        * bernoulli_poly(m).evaluate(&(Rational::from(j) / &pn))
}

/// `\int_{j + p^n Z_p} f d mu_1 = (1/p^n) \int f(j + p^n x) d mu_1`.
pub fn coset_integral(p: &Polynomial, j: u64, n: u32, prime: Prime) -> Result<Rational, Error> {
    let pn = Rational::int(prime.power(n));
    if Rational::from(j) >= pn {
        return Err(Error::OutOfRange(format!("coset index {j} is not below {prime}^{n}")));
    }
    let inner = Polynomial::linear(pn.clone(), Rational::from(j));
    let v = integrate(Functional::Volkenborn, &p.compose(&inner)) / &pn;
    let m = p.to_monomial();
    if let Some(d) = m.degree() {
        if m.coeffs()[..d].iter().all(Rational::is_zero) {
            let closed = &m.coeffs()[d] * coset_monomial_closed(d, j, n, prime);
            if closed != v {
                return Err(Error::RouteDisagreement { mahler: v.to_string(), witt: closed.to_string() });
            }
        }
    }
    Ok(v)
}

/// Integral of `x^m` over the units `Z_p^*`, both the plain value and the
/// variant with the extra `1/m` factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitIntegral {
    /// `\int x^m - \int_{pZ_p} x^m = (1 - p^{m-1}) B_m`
    pub plain: Rational,
    /// `(1 - p^{m-1}) B_m / m`
    pub over_m: Rational,
}

pub fn unit_integral_monomial(m: usize, prime: Prime) -> Result<UnitIntegral, Error> {
    if m == 0 {
        return Err(Error::OutOfRange("unit integral needs m >= 1".into()));
    }
    let xm = Polynomial::x_pow(m);
    let plain = integrate(Functional::Volkenborn, &xm) - coset_integral(&xm, 0, 1, prime)?;
    let over_m = &plain / Rational::from(m);
    Ok(UnitIntegral { plain, over_m })
}

/// `\int lambda^x x^n d mu_{-1} = E_n(lambda)` (Apostol-Euler).
pub fn twisted_fermionic_monomial(n: usize, lambda: &Rational) -> Result<Rational, Error> {
    apostol(Apostol::E, n, lambda)
}

/// `sum_{x<p^N} (-1)^x lambda^x x^n`
pub fn twisted_alternating_sum(n: usize, lambda: &Rational, prime: Prime, level: u32) -> Result<Rational, Error> {
    if !prime.is_odd() {
        return Err(Error::EvenPrime);
    }
    let m = level_size(prime, level)?;
    let mut acc = Rational::zero();
    let mut lx = Rational::one();
    for x in 0..m {
        let term = &lx * powu(&Rational::from(x), n);
        if x % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        lx *= lambda;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Measure {
    Haar,
    MinusOne,
    Dirac(Rational),
    Mazur,
    BernoulliK(usize),
    EulerK(usize),
}

/// `alpha mod p^N` for a p-integral rational.
fn residue(alpha: &Rational, pn: &BigInt) -> Result<BigInt, Error> {
    let g = alpha.denom().extended_gcd(pn);
    if !g.gcd.is_one() {
        return Err(Error::OutOfRange(format!("{alpha} is not a p-adic integer")));
    }
    Ok((alpha.numer() * g.x).mod_floor(pn))
}

/// `mu(a + p^N Z_p)`
pub fn measure_value(mu: &Measure, prime: Prime, a: &BigInt, level: u32) -> Result<Rational, Error> {
    let pn = prime.power(level);
    if a.sign() == num_bigint::Sign::Minus || *a >= pn {
        return Err(Error::OutOfRange(format!("a = {a} is not in [0, {pn})")));
    }
    let pnq = Rational::int(pn.clone());
    let aq = Rational::int(a.clone());
    let sign_a = if a.is_odd() { -Rational::one() } else { Rational::one() };
    Ok(match mu {
        Measure::Haar => pnq.recip()?,
        Measure::MinusOne => sign_a,
        Measure::Dirac(alpha) => {
            if residue(alpha, &pn)? == *a {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        Measure::Mazur => aq / &pnq - Rational::frac(1, 2),
        Measure::BernoulliK(k) => {
            let scale = pnq.pow(*k as i64 - 1)?;
            scale * bernoulli_poly(*k).evaluate(&(aq / &pnq))
        }
        Measure::EulerK(k) => sign_a * powu(&pnq, *k) * euler_poly(*k).evaluate(&(aq / &pnq)),
    })
}

/// `mu(a + p^N Z_p) - sum_{j<p} mu(a + j p^N + p^{N+1} Z_p)`.
///
/// For odd `p` the alternating measures need no extra weights: the `p`
/// children carry signs `(-1)^{a + j p^N}` whose sum is `(-1)^a`.
pub fn additivity_residual(mu: &Measure, prime: Prime, a: &BigInt, level: u32) -> Result<Rational, Error> {
    let parent = measure_value(mu, prime, a, level)?;
    let pn = prime.power(level);
    let mut children = Rational::zero();
    for j in 0..prime.get() {
        let child = a + BigInt::from(j) * &pn;
        children += measure_value(mu, prime, &child, level + 1)?;
    }
    Ok(parent - children)
}

/// `\int f d delta_alpha = f(alpha)`
pub fn dirac_integral(p: &Polynomial, alpha: &Rational) -> Rational {
    p.evaluate(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ord_p, PAdicValuation};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn pr(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(volkenborn(&p("binom(2)")).unwrap().value, q("1/3"));
        assert_eq!(volkenborn(&p("x").mul(&p("ff(2)"))).unwrap().value, q("-1/6"));
        assert_eq!(volkenborn(&p("1")).unwrap().value, q("1"));
        assert_eq!(fermionic(&p("binom(2)")).unwrap().value, q("1/4"));
        assert_eq!(fermionic(&p("ff(3)")).unwrap().value, q("-3/4"));
        assert_eq!(fermionic(&p("1")).unwrap().value, q("1"));
    }

    #[test]
    fn finite_sums() {
        assert_eq!(riemann_sum(&p("x"), pr(3), 2).unwrap(), q("4"));
        let d = riemann_sum(&p("x"), pr(3), 2).unwrap() - bernoulli(1);
        assert_eq!(ord_p(&d, pr(3)), PAdicValuation::Finite(2));
        assert_eq!(riemann_sum(&p("1"), pr(7), 3).unwrap(), q("1"));
        assert_eq!(alternating_sum(&p("1"), pr(3), 1).unwrap(), q("1"));
        assert_eq!(alternating_sum(&p("x"), pr(3), 1).unwrap(), q("1"));
        let d = alternating_sum(&p("x^2"), pr(5), 2).unwrap() - euler(2);
        assert!(ord_p(&d, pr(5)) >= PAdicValuation::Finite(2));
        assert_eq!(alternating_sum(&p("x"), pr(2), 3), Err(Error::EvenPrime));
        assert!(riemann_sum(&p("x"), pr(2), 3).is_ok());
    }

    #[test]
    fn shift_equations() {
        assert!(shift_equation_residual(&p("x^3"), 2, Functional::Volkenborn).is_zero());
        assert!(shift_equation_residual(&p("x^2"), 1, Functional::Fermionic).is_zero());
        // binom(x+1, 4): (-1)^n/(n+1) + (-1)^{n-1}/n at n = 4
        let b = Polynomial::binom_x(4);
        assert!(shift_equation_residual(&b, 1, Functional::Volkenborn).is_zero());
        let lhs = integrate(Functional::Volkenborn, &b.shift(&q("1")));
        assert_eq!(lhs, q("1/5") - q("1/4"));
        for m in 1..5 {
            for s in ["x^5 - 3*x", "ff(4)", "1/2 + cf(3)"] {
                assert!(shift_equation_residual(&p(s), m, Functional::Volkenborn).is_zero());
                assert!(shift_equation_residual(&p(s), m, Functional::Fermionic).is_zero());
            }
        }
    }

    #[test]
    fn odd_functions() {
        assert_eq!(odd_rule(&p("x")).unwrap(), q("-1/2"));
        assert_eq!(odd_rule(&p("x^3")).unwrap(), q("0"));
        let c5 = Polynomial::central(5);
        assert_eq!(odd_rule(&c5).unwrap(), -c5.derivative().evaluate(&q("0")) / q("2"));
        assert_eq!(odd_rule(&p("x^2")), Err(Error::NotOdd));
    }

    #[test]
    fn cosets() {
        assert_eq!(coset_integral(&p("x"), 0, 1, pr(3)).unwrap(), q("-1/2"));
        assert_eq!(coset_integral(&p("1"), 2, 1, pr(3)).unwrap(), q("1/3"));
        assert_eq!(coset_integral(&p("x^2"), 1, 1, pr(3)).unwrap(), q("-1/6"));
        assert!(coset_integral(&p("x"), 9, 2, pr(3)).is_err());
        for n in 0..=2u32 {
            for s in ["x^6 - x", "ff(5)", "3/7*x^2 + 1"] {
                let f = p(s);
                let pn = 3u64.pow(n);
                let total: Rational =
                    (0..pn).map(|j| coset_integral(&f, j, n, pr(3)).unwrap()).sum();
                assert_eq!(total, integrate(Functional::Volkenborn, &f));
            }
        }
    }

    #[test]
    fn units() {
        assert_eq!(unit_integral_monomial(2, pr(3)).unwrap().plain, q("-1/3"));
        assert_eq!(unit_integral_monomial(1, pr(5)).unwrap().plain, q("0"));
        assert_eq!(unit_integral_monomial(3, pr(7)).unwrap().plain, q("0"));
        assert_eq!(unit_integral_monomial(2, pr(3)).unwrap().over_m, q("-1/6"));
    }

    #[test]
    fn twisted() {
        assert_eq!(twisted_fermionic_monomial(4, &q("1")).unwrap(), euler(4));
        assert_eq!(twisted_fermionic_monomial(0, &q("3")).unwrap(), q("1/2"));
        assert_eq!(twisted_fermionic_monomial(1, &q("2")).unwrap(), q("-4/9"));
        assert!(twisted_fermionic_monomial(1, &q("-1")).is_err());
        // lambda = 1 + p: the finite sums approach E_n(lambda) p-adically
        let prime = pr(3);
        let lam = q("4");
        for n in 0..4 {
            let exact = twisted_fermionic_monomial(n, &lam).unwrap();
            let mut last = PAdicValuation::Finite(i64::MIN);
            for level in 1..=4 {
                let d = twisted_alternating_sum(n, &lam, prime, level).unwrap() - &exact;
                let v = ord_p(&d, prime);
                assert!(v > last, "n={n} N={level}");
                last = v;
            }
        }
    }

    #[test]
    fn measures() {
        let a = BigInt::from(1);
        assert_eq!(measure_value(&Measure::Haar, pr(3), &a, 2).unwrap(), q("1/9"));
        assert_eq!(measure_value(&Measure::Mazur, pr(5), &a, 1).unwrap(), q("-3/10"));
        for k in 0..3 {
            for ai in 0..9 {
                let a = BigInt::from(ai);
                let b = measure_value(&Measure::BernoulliK(k), pr(3), &a, 2).unwrap();
                match k {
                    0 => assert_eq!(b, measure_value(&Measure::Haar, pr(3), &a, 2).unwrap()),
                    1 => assert_eq!(b, measure_value(&Measure::Mazur, pr(3), &a, 2).unwrap()),
                    _ => {}
                }
            }
        }
        assert!(measure_value(&Measure::Haar, pr(3), &BigInt::from(9), 2).is_err());
        let d = Measure::Dirac(q("1/2"));
        // 1/2 = 5 mod 9
        assert!(measure_value(&d, pr(3), &BigInt::from(5), 2).unwrap().is_one());
        for mu in [Measure::MinusOne, Measure::EulerK(1), Measure::EulerK(3), d] {
            for n in 0..=2 {
                for ai in 0..3u64.pow(n) {
                    let r = additivity_residual(&mu, pr(3), &BigInt::from(ai), n).unwrap();
                    assert!(r.is_zero(), "{mu:?}");
                }
            }
        }
    }
}
