use super::{binomial, factorial, falling_q, powu};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::{StdSeries, TruncatedSeries};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Apostol {
    /// Apostol-Bernoulli numbers, `t/(lambda e^t - 1)`
    B,
    /// Apostol-Euler numbers, `2/(lambda e^t + 1)`
    E,
    /// Frobenius-Euler numbers `H_n(u)`, `(1-u)/(e^t - u)`
    Frobenius,
}

fn excluded(name: &'static str, v: &Rational) -> Error {
    Error::ExcludedParameter { name, value: v.to_string() }
}

fn check(family: Apostol, param: &Rational) -> Result<(), Error> {
    match family {
        Apostol::B if param.is_one() => Err(excluded("lambda", param)),
        Apostol::Frobenius if param.is_one() => Err(excluded("u", param)),
        Apostol::E if *param == Rational::from(-1) => Err(excluded("lambda", param)),
        _ => Ok(()),
    }
}

/// Values for indices `0..=n` by the defining recurrences.
pub fn apostol_list(family: Apostol, n: usize, param: &Rational) -> Result<Vec<Rational>, Error> {
    check(family, param)?;
    let one = Rational::one();
    let mut v: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let s = |v: &[Rational]| -> Rational {
            (0..m).map(|j| binomial(m as i64, j as i64) * &v[j]).sum()
        };
        let next = match family {
            Apostol::B => match m {
                0 => Rational::zero(),
                1 => (param - &one).recip()?,
                // B_m = lambda/(1-lambda) sum_{j<m} binom(m,j) B_j
                _ => param / (&one - param) * s(&v),
            },
            Apostol::E => {
                if m == 0 {
                    Rational::from(2) / (param + &one)
                } else {
                    -(param / (param + &one)) * s(&v)
                }
            }
            // (u-1) H_n = sum_{j<n} binom(n,j) H_j
            Apostol::Frobenius => {
                if m == 0 {
                    one.clone()
                } else {
                    s(&v) / (param - &one)
                }
            }
        };
        v.push(next);
    }
    Ok(v)
}

pub fn apostol(family: Apostol, n: usize, param: &Rational) -> Result<Rational, Error> {
    Ok(apostol_list(family, n, param)?.pop().expect("nonempty"))
}

/// Generating-function route, used as the cross-check for `apostol`.
pub fn apostol_series(family: Apostol, k: usize, param: &Rational) -> Result<TruncatedSeries, Error> {
    check(family, param)?;
    let e = TruncatedSeries::standard(StdSeries::Exp, k);
    let one = TruncatedSeries::one(k);
    Ok(match family {
        Apostol::B => {
            let d = e.scale(param).sub(&one)?;
            TruncatedSeries::t(k).mul(&d.inverse()?)?
        }
        Apostol::E => e.scale(param).add(&one)?.inverse()?.scale(&Rational::from(2)),
        Apostol::Frobenius => {
            let d = e.sub(&one.scale(param))?;
            d.inverse()?.scale(&(Rational::one() - param))
        }
    })
}

fn appell_poly(values: &[Rational]) -> Polynomial {
    let n = values.len() - 1;
    Polynomial::monomial(
        (0..=n).map(|k| binomial(n as i64, k as i64) * &values[n - k]).collect(),
    )
}

/// `B_n(x;lambda) = sum_j binom(n,j) x^{n-j} B_j(lambda)`
pub fn apostol_b_poly(n: usize, lambda: &Rational) -> Result<Polynomial, Error> {
    Ok(appell_poly(&apostol_list(Apostol::B, n, lambda)?))
}

/// `E_n(x;lambda) = sum_j binom(n,j) x^{n-j} E_j(lambda)`
pub fn apostol_e_poly(n: usize, lambda: &Rational) -> Result<Polynomial, Error> {
    Ok(appell_poly(&apostol_list(Apostol::E, n, lambda)?))
}

/// `S_k^n(x;lambda) = (1/k!) sum_j (-1)^{k-j} binom(k,j) lambda^j (j+x)^n`
pub fn array_poly(n: usize, k: usize, x: &Rational, lambda: &Rational) -> Rational {
    let s: Rational = (0..=k)
        .map(|j| {
            Rational::sign_pow((k - j) as i64)
                * binomial(k as i64, j as i64)
                * powu(lambda, j)
                * powu(&(Rational::from(j) + x), n)
        })
        .sum();
    s / factorial(k)
}

/// `s_0 .. s_n` of `(1 + (1+t)^lambda)^{-mu}`.
pub fn peters_numbers(n: usize, lambda: &Rational, mu: u32) -> Vec<Rational> {
    let k = n.max(1);
    let base = TruncatedSeries::binom_pow(lambda, k)
        .add(&TruncatedSeries::one(k))
        .expect("same order");
    let s = base.inverse().expect("constant term 2").powi(mu);
    (0..=n).map(|i| s.egf_coeff(i)).collect()
}

/// `s_n(x;lambda,mu) = sum_v binom(n,v) x_(n-v) s_v(lambda,mu)`; with `x = None`
/// this is the Peters number `s_n(lambda, mu)`.
pub fn peters(n: usize, x: Option<&Rational>, lambda: &Rational, mu: u32) -> Rational {
    let s = peters_numbers(n, lambda, mu);
    match x {
        None => s[n].clone(),
        Some(x) => (0..=n)
            .map(|v| binomial(n as i64, v as i64) * falling_q(x, n - v) * &s[v])
            .sum(),
    }
}

/// `s_n(x;lambda,mu)` as a polynomial in `x`.
pub fn peters_poly(n: usize, lambda: &Rational, mu: u32) -> Polynomial {
    let s = peters_numbers(n, lambda, mu);
    (0..=n).fold(Polynomial::zero(), |acc, v| {
        acc.add(&Polynomial::falling(n - v).scale(&(binomial(n as i64, v as i64) * &s[v])))
    })
}

/// `y_1(n,k;lambda) = (1/k!) sum_j binom(k,j) j^n lambda^j`
pub fn y1(n: usize, k: usize, lambda: &Rational) -> Rational {
    let s: Rational = (0..=k)
        .map(|j| binomial(k as i64, j as i64) * powu(&Rational::from(j), n) * powu(lambda, j))
        .sum();
    s / factorial(k)
}

fn y2_check(lambda: &Rational) -> Result<(), Error> {
    if lambda.is_one() {
        return Err(excluded("lambda", lambda));
    }
    Ok(())
}

/// `Y_{n,2}(lambda) = 2 (-1)^n n! lambda^{2n} / (2 lambda - 2)^{n+1}`
pub fn y2_num(n: usize, lambda: &Rational) -> Result<Rational, Error> {
    y2_check(lambda)?;
    let d = Rational::from(2) * lambda - Rational::from(2);
    Ok(Rational::from(2) * Rational::sign_pow(n as i64) * factorial(n) * powu(lambda, 2 * n)
        / powu(&d, n + 1))
}

/// `Y_{n,2}(x;lambda) = sum_j binom(n,j) lambda^{n-j} Y_{j,2}(lambda) x_(n-j)`
pub fn y2_poly(n: usize, lambda: &Rational) -> Result<Polynomial, Error> {
    let mut acc = Polynomial::zero();
    for j in 0..=n {
        let c = binomial(n as i64, j as i64) * powu(lambda, n - j) * y2_num(j, lambda)?;
        acc = acc.add(&Polynomial::falling(n - j).scale(&c));
    }
    Ok(acc)
}

/// The explicit form `2 sum_j (-1)^j j! binom(n,j) lambda^{n+j}/(2lambda-2)^{j+1} x_(n-j)`.
pub fn y2_poly_explicit(n: usize, lambda: &Rational) -> Result<Polynomial, Error> {
    y2_check(lambda)?;
    let d = Rational::from(2) * lambda - Rational::from(2);
    let mut acc = Polynomial::zero();
    for j in 0..=n {
        let c = Rational::from(2)
            * Rational::sign_pow(j as i64)
            * factorial(j)
            * binomial(n as i64, j as i64)
            * powu(lambda, n + j)
            / powu(&d, j + 1);
        acc = acc.add(&Polynomial::falling(n - j).scale(&c));
    }
    Ok(acc)
}

/// `Y_{n,2}(lambda)` for `n = 0..=k` from `2/(lambda^2 t + 2(lambda - 1))`.
pub fn y2_series_numbers(k: usize, lambda: &Rational) -> Result<Vec<Rational>, Error> {
    y2_check(lambda)?;
    let d = TruncatedSeries::t(k)
        .scale(&(lambda * lambda))
        .add(&TruncatedSeries::constant(Rational::from(2) * (lambda - Rational::one()), k))?;
    let s = d.inverse()?.scale(&Rational::from(2));
    Ok((0..=k).map(|n| s.egf_coeff(n)).collect())
}
