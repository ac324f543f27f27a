//! Univariate polynomials over the rationals in five bases, plus a small
//! bivariate type for `p(x+y)` and `p(xy)` expansions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::families::{binomial, factorial, triangle, Triangle};
use crate::integrate::{integrate, Functional};
use crate::rational::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `x^n`
    Monomial,
    /// `x_(n) = x(x-1)...(x-n+1)`
    Falling,
    /// `x^(n) = x(x+1)...(x+n-1)`
    Rising,
    /// `binom(x, n)`
    Mahler,
    /// central factorial `x^[n]`
    Central,
}

impl Basis {
    pub const ALL: [Basis; 5] =
        [Basis::Monomial, Basis::Falling, Basis::Rising, Basis::Mahler, Basis::Central];

    fn term_name(self) -> &'static str {
        match self {
            Basis::Monomial => "x",
            Basis::Falling => "ff",
            Basis::Rising => "rf",
            Basis::Mahler => "binom",
            Basis::Central => "cf",
        }
    }
}

/// Coefficients are indexed by degree and stripped of trailing zeros; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    basis: Basis,
    coeffs: Vec<Rational>,
}

fn strip(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Rational::is_zero) {
        v.pop();
    }
    v
}

fn add_into(acc: &mut Vec<Rational>, i: usize, c: Rational) {
    if acc.len() <= i {
        acc.resize(i + 1, Rational::zero());
    }
    acc[i] += c;
}

impl Polynomial {
    pub fn new(basis: Basis, coeffs: Vec<Rational>) -> Self {
        Polynomial { basis, coeffs: strip(coeffs) }
    }

    pub fn monomial(coeffs: Vec<Rational>) -> Self {
        Self::new(Basis::Monomial, coeffs)
    }

    /// Integer coefficients in the monomial basis, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::monomial(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The single basis element of degree `n` in `basis`.
    pub fn basis_element(basis: Basis, n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        Self::new(basis, c)
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn x_pow(n: usize) -> Self {
        Self::basis_element(Basis::Monomial, n)
    }

    /// `x_(n)` in the monomial basis.
    pub fn falling(n: usize) -> Self {
        Self::basis_element(Basis::Falling, n).to_monomial()
    }

    /// `x^(n)` in the monomial basis.
    pub fn rising(n: usize) -> Self {
        Self::basis_element(Basis::Rising, n).to_monomial()
    }

    /// `binom(x, n)` in the monomial basis.
    pub fn binom_x(n: usize) -> Self {
        Self::basis_element(Basis::Mahler, n).to_monomial()
    }

    /// `x^[n]` in the monomial basis.
    pub fn central(n: usize) -> Self {
        Self::basis_element(Basis::Central, n).to_monomial()
    }

    /// `a x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::monomial(vec![b, a])
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_monomial(&self) -> Polynomial {
        let mut out: Vec<Rational> = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match self.basis {
                Basis::Monomial => add_into(&mut out, n, c.clone()),
                Basis::Falling | Basis::Mahler | Basis::Rising | Basis::Central => {
                    let (tri, scale) = match self.basis {
                        Basis::Falling => (Triangle::S1, Rational::one()),
                        Basis::Mahler => (Triangle::S1, factorial(n).recip().unwrap()),
                        Basis::Rising => (Triangle::CUnsigned, Rational::one()),
                        _ => (Triangle::CfSmall, Rational::one()),
                    };
                    let c = c * &scale;
                    for k in 0..=n {
                        let e = triangle(&tri, n, k);
                        if !e.is_zero() {
                            add_into(&mut out, k, &c * &e);
                        }
                    }
                }
            }
        }
        Polynomial::monomial(out)
    }

    pub fn convert(&self, target: Basis) -> Polynomial {
        if self.basis == target {
            return self.clone();
        }
        let m = self.to_monomial();
        if target == Basis::Monomial {
            return m;
        }
        let mut out: Vec<Rational> = Vec::new();
        for (j, a) in m.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for k in 0..=j {
                let e = match target {
                    Basis::Falling => triangle(&Triangle::S2, j, k),
                    Basis::Mahler => triangle(&Triangle::S2, j, k) * factorial(k),
                    Basis::Rising => {
                        triangle(&Triangle::S2, j, k) * Rational::sign_pow((j - k) as i64)
                    }
                    Basis::Central => triangle(&Triangle::CfBig, j, k),
                    Basis::Monomial => unreachable!(),
                };
                if !e.is_zero() {
                    add_into(&mut out, k, a * &e);
                }
            }
        }
        Polynomial::new(target, out)
    }

    fn zip_with(&self, other: &Polynomial, f: impl Fn(&Rational, &Rational) -> Rational) -> Polynomial {
        let (a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_monomial(), other.to_monomial())
        };
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = Rational::zero();
        let c = (0..n)
            .map(|i| f(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Polynomial::new(a.basis, c)
    }

    /// Sum; stays in the common basis when both agree, monomial otherwise.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.basis, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product, always computed and returned in the monomial basis.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let a = self.to_monomial();
        let b = other.to_monomial();
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Polynomial::monomial(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn evaluate(&self, a: &Rational) -> Rational {
        let m = self.to_monomial();
        let mut acc = Rational::zero();
        for c in m.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// `p(q(x))`, monomial result.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let m = self.to_monomial();
        let mut acc = Polynomial::zero();
        for c in m.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// `p(x + m)`
    pub fn shift(&self, m: &Rational) -> Polynomial {
        self.compose(&Polynomial::linear(Rational::one(), m.clone()))
    }

    /// `p(x+1) - p(x)`
    pub fn forward_diff(&self) -> Polynomial {
        self.shift(&Rational::one()).sub(&self.to_monomial())
    }

    /// `p(x+1/2) - p(x-1/2)`
    pub fn central_diff(&self) -> Polynomial {
        let h = Rational::frac(1, 2);
        self.shift(&h).sub(&self.shift(&-h))
    }

    pub fn derivative(&self) -> Polynomial {
        let m = self.to_monomial();
        Polynomial::monomial(
            m.coeffs.iter().enumerate().skip(1).map(|(n, c)| c * Rational::from(n)).collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        let m = self.to_monomial();
        let mut c = vec![Rational::zero()];
        c.extend(m.coeffs.iter().enumerate().map(|(n, a)| a / Rational::from(n + 1)));
        Polynomial::monomial(c)
    }

    /// `\int_0^1 p(u) du`
    pub fn definite_integral_01(&self) -> Rational {
        self.to_monomial()
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a / Rational::from(n + 1))
            .sum()
    }

    /// `(even, odd)` parts.
    pub fn parity_split(&self) -> (Polynomial, Polynomial) {
        let m = self.to_monomial();
        let pick = |parity: usize| {
            Polynomial::monomial(
                m.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| if n % 2 == parity { c.clone() } else { Rational::zero() })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    pub fn is_odd(&self) -> bool {
        self.parity_split().0.is_zero()
    }

    /// Equality as functions, whatever the bases.
    pub fn same_as(&self, other: &Polynomial) -> bool {
        self.to_monomial() == other.to_monomial()
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Polynomial::zero()
    }
}

/// Canonical text in the parse grammar, e.g. `1/6 - x + x^2` or `3*ff(2) - binom(1)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let atom = match (self.basis, n) {
                (_, 0) => None,
                (Basis::Monomial, 1) => Some("x".to_string()),
                (Basis::Monomial, _) => Some(format!("x^{n}")),
                (b, _) => Some(format!("{}({n})", b.term_name())),
            };
            match atom {
                None => write!(f, "{mag}")?,
                Some(a) if mag.is_one() => write!(f, "{a}")?,
                Some(a) => write!(f, "{mag}*{a}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.basis, self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Sum of terms `c`, `c*x^n`, `c*x`, `c*ff(n)`, `c*rf(n)`, `c*binom(n)`,
    /// `c*cf(n)`; the coefficient and `*` are optional. If every non-constant
    /// term uses one basis the result keeps it, otherwise it is monomial.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |m: &str| Error::Parse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        // split into signed terms, keeping signs inside c/d fractions out of the way
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut depth = 0;
        for ch in compact.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch)
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch)
                }
                '+' | '-' if depth == 0 && !cur.ends_with('^') && !cur.ends_with('/') => {
                    if !cur.is_empty() {
                        terms.push((neg, std::mem::take(&mut cur)));
                    } else if ch == '-' {
                        neg = !neg;
                        continue;
                    }
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((neg, cur));

        let mut parsed: Vec<(Basis, usize, Rational)> = Vec::new();
        for (neg, t) in terms {
            let (coef, atom) = match t.split_once('*') {
                Some((_, "")) => return Err(err("missing factor after '*'")),
                Some((c, a)) => (c.parse::<Rational>().map_err(|_| err("bad coefficient"))?, a),
                None if t.starts_with(|c: char| c.is_ascii_digit()) => {
                    (t.parse::<Rational>().map_err(|_| err("bad constant"))?, "")
                }
                None => (Rational::one(), t.as_str()),
            };
            let coef = if neg { -coef } else { coef };
            let (basis, n) = if atom.is_empty() {
                (Basis::Monomial, 0)
            } else if atom == "x" {
                (Basis::Monomial, 1)
            } else if let Some(e) = atom.strip_prefix("x^") {
                (Basis::Monomial, e.parse().map_err(|_| err("bad exponent"))?)
            } else {
                let (name, rest) = atom.split_once('(').ok_or_else(|| err("unknown term"))?;
                let n: usize = rest
                    .strip_suffix(')')
                    .ok_or_else(|| err("missing ')'"))?
                    .parse()
                    .map_err(|_| err("bad index"))?;
                let b = Basis::ALL
                    .into_iter()
                    .find(|b| *b != Basis::Monomial && b.term_name() == name)
                    .ok_or_else(|| err("unknown term"))?;
                (b, n)
            };
            parsed.push((basis, n, coef));
        }
        let mut bases: Vec<Basis> = parsed
            .iter()
            .filter(|(b, n, _)| !(*b == Basis::Monomial && *n == 0))
            .map(|t| t.0)
            .collect();
        bases.dedup();
        // a constant is degree 0 in every basis
        let target = if bases.len() == 1 { bases[0] } else { Basis::Monomial };
        let mut acc = Polynomial::new(target, Vec::new());
        for (b, n, c) in parsed {
            let b = if n == 0 { target } else { b };
            acc = acc.add(&Polynomial::basis_element(b, n).scale(&c));
        }
        if acc.basis != target {
            acc = acc.convert(target);
        }
        Ok(acc)
    }
}

/// `sum_i x^i q_i(y)`, both variables in the monomial basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPolynomial {
    rows: Vec<Polynomial>,
}

impl BiPolynomial {
    pub fn new(rows: Vec<Polynomial>) -> Self {
        let mut rows: Vec<Polynomial> = rows.into_iter().map(|r| r.to_monomial()).collect();
        while rows.last().is_some_and(Polynomial::is_zero) {
            rows.pop();
        }
        BiPolynomial { rows }
    }

    /// Polynomial in `x` alone.
    pub fn in_x(p: &Polynomial) -> Self {
        Self::new(p.to_monomial().coeffs.iter().map(|c| Polynomial::constant(c.clone())).collect())
    }

    /// Polynomial in `y` alone.
    pub fn in_y(p: &Polynomial) -> Self {
        Self::new(vec![p.to_monomial()])
    }

    /// `p(x + y)`
    pub fn substitute_sum(p: &Polynomial) -> Self {
        let m = p.to_monomial();
        let mut rows = vec![Polynomial::zero(); m.coeffs.len()];
        for (n, a) in m.coeffs.iter().enumerate() {
            for i in 0..=n {
                let c = a * binomial(n as i64, i as i64);
                rows[i] = rows[i].add(&Polynomial::x_pow(n - i).scale(&c));
            }
        }
        Self::new(rows)
    }

    /// `p(x y)`
    pub fn substitute_product(p: &Polynomial) -> Self {
        let m = p.to_monomial();
        Self::new(m.coeffs.iter().enumerate().map(|(n, a)| Polynomial::x_pow(n).scale(a)).collect())
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.rows.len().max(other.rows.len());
        let z = Polynomial::zero();
        Self::new(
            (0..n)
                .map(|i| self.rows.get(i).unwrap_or(&z).add(other.rows.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn bi_multiply(&self, other: &Self) -> Self {
        if self.rows.is_empty() || other.rows.is_empty() {
            return Self::default();
        }
        let mut rows = vec![Polynomial::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = rows[i + j].add(&a.mul(b));
            }
        }
        Self::new(rows)
    }

    /// Integrates over `x`, leaving a polynomial in `y`.
    pub fn integrate_out_x(&self, f: Functional) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, r) in self.rows.iter().enumerate() {
            let m = integrate(f, &Polynomial::x_pow(i));
            acc = acc.add(&r.scale(&m));
        }
        acc
    }

    /// Integrates over `y`, leaving a polynomial in `x`.
    pub fn integrate_out_y(&self, f: Functional) -> Polynomial {
        Polynomial::monomial(self.rows.iter().map(|r| integrate(f, r)).collect())
    }

    /// Value at `(x, y)`.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for r in self.rows.iter().rev() {
            acc = acc * x + r.evaluate(y);
        }
        acc
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.rows.get(i).map(|r| r.coeff(j)).unwrap_or_else(Rational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn conversions() {
        let ff2 = Polynomial::basis_element(Basis::Falling, 2);
        assert_eq!(ff2.to_monomial(), Polynomial::from_ints(&[0, -1, 1]));
        let x4 = Polynomial::x_pow(4).convert(Basis::Falling);
        assert_eq!(x4.coeffs(), &[q("0"), q("1"), q("7"), q("6"), q("1")]);
        for b in Basis::ALL {
            let r = p("3 - 2*x + 1/2*x^3 + x^5");
            assert_eq!(r.convert(b).convert(Basis::Monomial), r);
        }
    }

    #[test]
    fn arith() {
        let ff2 = Polynomial::falling(2);
        assert_eq!(ff2.mul(&ff2), Polynomial::from_ints(&[0, 0, 1, -2, 1]));
        assert_eq!(p("ff(1) + rf(1)"), Polynomial::from_ints(&[0, 2]));
        // x_(2) x_(2) = sum_k binom(2,k)^2 k! x_(4-k)
        let rhs = (0..=2).fold(Polynomial::zero(), |acc, k| {
            let c = binomial(2, k) * binomial(2, k) * factorial(k as usize);
            acc.add(&Polynomial::falling(4 - k as usize).scale(&c))
        });
        assert_eq!(ff2.mul(&ff2), rhs);
    }

    #[test]
    fn evaluation() {
        assert_eq!(Polynomial::falling(3).evaluate(&q("5")), q("60"));
        assert_eq!(Polynomial::binom_x(2).evaluate(&q("1/2")), q("-1/8"));
        assert_eq!(p("x^2 - x + 1/6").evaluate(&q("0")), q("1/6"));
    }

    #[test]
    fn calculus() {
        let d = Polynomial::falling(3).forward_diff();
        assert_eq!(d, Polynomial::falling(2).scale(&q("3")));
        assert!(Polynomial::x_pow(2).central_diff().same_as(&p("2*x")));
        assert_eq!(Polynomial::falling(2).definite_integral_01(), q("-1/6"));
        assert_eq!(p("x^3").derivative(), p("3*x^2"));
        assert_eq!(p("x^2").antiderivative(), p("1/3*x^3"));
    }

    #[test]
    fn parity() {
        let (e, o) = p("x^3 + x^2").parity_split();
        assert_eq!((e, o), (p("x^2"), p("x^3")));
        assert!(Polynomial::central(5).parity_split().0.is_zero());
        let (e, o) = p("1").parity_split();
        assert_eq!((e, o.is_zero()), (p("1"), true));
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "1/6 - x + x^2", "-ff(1) + 3*ff(2)", "-2/3*cf(4)", "-1/2*binom(1) + binom(3)", "1 + rf(3)"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("2*x^2 - 3*x").basis(), Basis::Monomial);
        assert_eq!(p("ff(2) + x"), p("x^2"));
        assert_eq!(p("-1/2*x"), Polynomial::monomial(vec![q("0"), q("-1/2")]));
        for bad in ["", "x^", "ff(2", "y", "1 +", "3*zz(1)"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad}");
        }
    }

    #[test]
    fn bivariate() {
        let s = BiPolynomial::substitute_sum(&Polynomial::falling(2));
        // x^2 + 2xy + y^2 - x - y
        assert_eq!(s.coeff(2, 0), q("1"));
        assert_eq!(s.coeff(1, 1), q("2"));
        assert_eq!(s.coeff(0, 2), q("1"));
        assert_eq!(s.coeff(1, 0), q("-1"));
        assert_eq!(s.coeff(0, 1), q("-1"));
        let m = BiPolynomial::substitute_product(&Polynomial::falling(2));
        assert_eq!(m.coeff(2, 2), q("1"));
        assert_eq!(m.coeff(1, 1), q("-1"));
        // double Volkenborn integral of binom(x+y, 2)
        let b = BiPolynomial::substitute_sum(&Polynomial::binom_x(2));
        let v = integrate(Functional::Volkenborn, &b.integrate_out_x(Functional::Volkenborn));
        let want: Rational = (0..=2)
            .map(|k| q("1") / (Rational::from(k + 1) * Rational::from(2 - k + 1)))
            .sum();
        assert_eq!(v, want);
    }
}
