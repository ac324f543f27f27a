//! Truncated formal power series with exact rational coefficients.

use std::fmt;

use crate::rational::Rational;
use crate::Error;

pub const DEFAULT_ORDER: usize = 16;

/// `c_0 + c_1 t + ... + c_K t^K`; every operation truncates at `K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StdSeries {
    Exp,
    Log1p,
    TOverLog1p,
}

impl std::str::FromStr for StdSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "exp" => Ok(StdSeries::Exp),
            "log1p" => Ok(StdSeries::Log1p),
            "toverlog1p" => Ok(StdSeries::TOverLog1p),
            _ => Err(Error::Parse(format!("unknown series kind {s:?}"))),
        }
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Pads with zeros or truncates to the requested order.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// `n! c_n`, the EGF reading of coefficient `n`.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        &self.coeffs[n] * crate::families::factorial(n)
    }

    fn same_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.same_order(other)?;
        let k = self.order();
        let mut out = vec![Rational::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=k - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Multiplicative inverse; needs `c_0 != 0`.
    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip()?;
        let k = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(k + 1);
        b.push(inv0.clone());
        for n in 1..=k {
            let s: Rational = (1..=n).map(|i| &self.coeffs[i] * &b[n - i]).sum();
            b.push(-(s * &inv0));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        self.mul(&other.inverse()?)
    }

    /// `self^e` for a nonnegative integer exponent.
    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `outer(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let k = self.order();
        // Horner in the inner series
        let mut acc = Self::zero(k);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Drops the constant term and shifts down: `(f(t) - c_0)/t`, keeping order.
    pub fn div_t(&self) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs[1..].to_vec();
        coeffs.push(Rational::zero());
        TruncatedSeries { coeffs }
    }

    /// `f(c t)`
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pw);
            pw *= c;
        }
        TruncatedSeries { coeffs }
    }

    /// `(1+t)^alpha = sum binom(alpha, n) t^n`.
    pub fn binom_pow(alpha: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        for n in 0..=order {
            coeffs.push(c.clone());
            c = c * (alpha - Rational::from(n)) / Rational::from(n + 1);
        }
        TruncatedSeries { coeffs }
    }

    pub fn standard(kind: StdSeries, order: usize) -> Self {
        match kind {
            StdSeries::Exp => {
                let mut coeffs = Vec::with_capacity(order + 1);
                let mut c = Rational::one();
                for n in 0..=order {
                    coeffs.push(c.clone());
                    c = c / Rational::from(n + 1);
                }
                TruncatedSeries { coeffs }
            }
            StdSeries::Log1p => {
                let mut coeffs = vec![Rational::zero()];
                for n in 1..=order {
                    coeffs.push(Rational::sign_pow(n as i64 + 1) / Rational::from(n));
                }
                TruncatedSeries { coeffs }
            }
            StdSeries::TOverLog1p => {
                // log(1+t)/t needs one extra term before the shift
                let l = Self::standard(StdSeries::Log1p, order + 1).div_t();
                let l = Self::from_coeffs(l.coeffs, order);
                l.inverse().expect("constant term is 1")
            }
        }
    }

    /// `e^{ct} - 1`
    pub fn expm1(order: usize) -> Self {
        let mut e = Self::standard(StdSeries::Exp, order);
        e.coeffs[0] = Rational::zero();
        e
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
