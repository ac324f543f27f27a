//! Short names for the quantities the checks are written in.

use crate::families::{self, CentralKind, Sequence, Triangle};
use crate::integrate::{integrate, Functional};
use crate::poly::{BiPolynomial, Polynomial};
use crate::rational::Rational;

pub use crate::families::{binomial as bin, factorial as fact};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn qf(a: i64, b: i64) -> Rational {
    Rational::frac(a, b)
}

pub fn u(n: usize) -> Rational {
    Rational::from(n)
}

/// `(-1)^k`
pub fn sg(k: i64) -> Rational {
    Rational::sign_pow(k)
}

pub fn pw(a: &Rational, k: usize) -> Rational {
    families::powu(a, k)
}

/// `a^k` for a possibly negative exponent.
pub fn pwi(a: &Rational, k: i64) -> Rational {
    a.pow(k).expect("nonzero base")
}

pub fn two_pow(k: i64) -> Rational {
    pwi(&q(2), k)
}

pub fn b(n: usize) -> Rational {
    families::bernoulli(n)
}

pub fn e(n: usize) -> Rational {
    families::euler(n)
}

fn tri(f: Triangle, n: usize, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    families::triangle(&f, n, k as usize)
}

pub fn s1(n: usize, k: i64) -> Rational {
    tri(Triangle::S1, n, k)
}

pub fn s2(n: usize, k: i64) -> Rational {
    tri(Triangle::S2, n, k)
}

pub fn cu(n: usize, k: i64) -> Rational {
    tri(Triangle::CUnsigned, n, k)
}

pub fn lah(n: usize, k: i64) -> Rational {
    tri(Triangle::Lah, n, k)
}

pub fn lahu(n: usize, k: i64) -> Rational {
    tri(Triangle::LahUnsigned, n, k)
}

pub fn tc(n: usize, k: i64) -> Rational {
    tri(Triangle::CfSmall, n, k)
}

pub fn tcb(n: usize, k: i64) -> Rational {
    tri(Triangle::CfBig, n, k)
}

pub fn t_even(n: usize, k: usize) -> Rational {
    families::even_central(CentralKind::Small, n, k)
}

pub fn tb_even(n: usize, k: usize) -> Rational {
    families::even_central(CentralKind::Big, n, k)
}

pub fn daehee(n: usize) -> Rational {
    families::sequence(Sequence::Daehee1, n)
}

pub fn changhee(n: usize) -> Rational {
    families::sequence(Sequence::Changhee1, n)
}

pub fn harmonic(n: usize) -> Rational {
    families::sequence(Sequence::Harmonic, n)
}

pub fn iv(p: &Polynomial) -> Rational {
    integrate(Functional::Volkenborn, p)
}

pub fn ife(p: &Polynomial) -> Rational {
    integrate(Functional::Fermionic, p)
}

pub fn int(f: Functional, p: &Polynomial) -> Rational {
    integrate(f, p)
}

/// `B_k` or `E_k` according to the functional.
pub fn moment(f: Functional, k: usize) -> Rational {
    match f {
        Functional::Volkenborn => b(k),
        Functional::Fermionic => e(k),
    }
}

/// Double integral of a bivariate polynomial.
pub fn double(f: Functional, p: &BiPolynomial) -> Rational {
    int(f, &p.integrate_out_x(f))
}

pub fn x() -> Polynomial {
    Polynomial::x()
}

pub fn xp(n: usize) -> Polynomial {
    Polynomial::x_pow(n)
}

pub fn ff(n: usize) -> Polynomial {
    Polynomial::falling(n)
}

pub fn rf(n: usize) -> Polynomial {
    Polynomial::rising(n)
}

pub fn cf(n: usize) -> Polynomial {
    Polynomial::central(n)
}

pub fn cst(c: Rational) -> Polynomial {
    Polynomial::constant(c)
}

/// `a x + b`
pub fn lin(a: i64, b: Rational) -> Polynomial {
    Polynomial::linear(q(a), b)
}

/// `binom(p(x), k)` as a polynomial; zero for `k < 0`.
pub fn binp(p: &Polynomial, k: i64) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    Polynomial::falling(k as usize).compose(p).scale(&fact(k as usize).recip().unwrap())
}

/// `binom(x + a, k)`
pub fn binx(a: Rational, k: i64) -> Polynomial {
    binp(&Polynomial::linear(q(1), a), k)
}

/// `p(x - m)`-style falling factorial `(x + a)_(k)`.
pub fn ffx(a: Rational, k: usize) -> Polynomial {
    Polynomial::falling(k).shift(&a)
}

/// Bernstein basis polynomial `binom(n,k) x^k (1-x)^(n-k)`.
pub fn bernstein(n: usize, k: usize) -> Polynomial {
    let one_minus = Polynomial::linear(q(-1), q(1));
    xp(k).mul(&one_minus.pow((n - k) as u32)).scale(&bin(n as i64, k as i64))
}

pub fn sum<I: IntoIterator<Item = Rational>>(it: I) -> Rational {
    it.into_iter().sum()
}

/// `sum_{k in range} f(k)` over an inclusive signed range, empty when `hi < lo`.
pub fn sum_r(lo: i64, hi: i64, f: impl Fn(i64) -> Rational) -> Rational {
    if hi < lo {
        return Rational::zero();
    }
    (lo..=hi).map(f).sum()
}

/// Falling factorial of an integer, `a_(k)`.
pub fn ffi(a: i64, k: usize) -> Rational {
    families::falling_q(&q(a), k)
}

pub fn ffq(a: &Rational, k: usize) -> Rational {
    families::falling_q(a, k)
}


/// `sum_j binom(n,j) v_j x^{n-j}` for `n = v.len() - 1`.
pub fn appell(v: &[Rational]) -> Polynomial {
    let n = v.len() - 1;
    Polynomial::monomial((0..=n).map(|k| bin(n as i64, k as i64) * &v[n - k]).collect())
}

/// EGF coefficients `0..=n` of a series.
pub fn egf(s: &crate::series::TruncatedSeries, n: usize) -> Vec<Rational> {
    (0..=n).map(|i| s.egf_coeff(i)).collect()
}

/// Value at `l` of the integer polynomial with ascending coefficients `c`.
pub fn ipoly(c: &[i64], l: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |a, &k| a * l + q(k))
}

/// Osgood-Wu coefficient `C^(k)_(l,m)`; `signed` drops the `(-1)^(k-j)` weight.
pub fn osgood_c(k: usize, l: i64, m: i64, signed: bool) -> Rational {
    sum_r(1, k as i64, |j| {
        let w = if signed { q(1) } else { sg(k as i64 - j) };
        w * s1(k, j) * s2(j as usize, l) * s2(j as usize, m)
    })
}

/// Integral of `binom(x, k)`: `(-1)^k/(k+1)` or `(-1)^k/2^k`.
pub fn mw(f: Functional, k: usize) -> Rational {
    match f {
        Functional::Volkenborn => sg(k as i64) / u(k + 1),
        Functional::Fermionic => sg(k as i64) / two_pow(k as i64),
    }
}

/// Integral of `x_(n)`: `D_n` or `Ch_n`.
pub fn dd(f: Functional, n: usize) -> Rational {
    match f {
        Functional::Volkenborn => daehee(n),
        Functional::Fermionic => changhee(n),
    }
}

/// `sum_{k=0}^{top} binom(x,k) sum_j (-1)^j binom(k,j) w(k-j)`
pub fn gould_sum(top: i64, w: impl Fn(i64) -> Rational) -> Polynomial {
    (0..=top).fold(Polynomial::zero(), |a, k| {
        let inner = sum_r(0, k, |j| sg(j) * bin(k, j) * w(k - j));
        a.add(&binx(q(0), k).scale(&inner))
    })
}

/// `B(k, mu) = sum_j binom(mu,j) j^k`
pub fn big_b(k: usize, mu: u32) -> Rational {
    sum((0..=mu as usize).map(|j| bin(mu as i64, j as i64) * pw(&u(j), k)))
}
