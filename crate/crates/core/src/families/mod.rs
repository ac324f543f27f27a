//! Special numbers and polynomials: Stirling, Lah and central factorial
//! triangles, Bernoulli/Euler type sequences, Apostol and Peters families.

mod memo;
mod params;
mod sequences;
mod triangles;

pub use params::{
    apostol, apostol_b_poly, apostol_e_poly, apostol_list, apostol_series, array_poly, peters, peters_numbers, peters_poly,
    y1, y2_num, y2_poly, y2_poly_explicit, y2_series_numbers, Apostol,
};
pub use sequences::{
    bernoulli, bernoulli_poly, euler, euler_poly, generating_function, sequence, sequence_oracle,
    Sequence,
};
pub use triangles::{even_central, triangle, CentralKind, Triangle};

use num_bigint::BigInt;

use crate::rational::Rational;

pub fn factorial(n: usize) -> Rational {
    Rational::int((1..=n as u64).fold(BigInt::from(1), |a, b| a * b))
}

/// `binom(n, k)` for any integer `n` (upper negative allowed), zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    binom_q(&Rational::from(n), k as usize)
}

/// `binom(a, k) = a_(k)/k!` for rational `a`.
pub fn binom_q(a: &Rational, k: usize) -> Rational {
    falling_q(a, k) / factorial(k)
}

/// `a_(k) = a(a-1)...(a-k+1)`
pub fn falling_q(a: &Rational, k: usize) -> Rational {
    (0..k).map(|i| a - Rational::from(i)).product()
}

/// `a^(k) = a(a+1)...(a+k-1)`
pub fn rising_q(a: &Rational, k: usize) -> Rational {
    (0..k).map(|i| a + Rational::from(i)).product()
}

/// `a^k` for a nonnegative integer exponent, with `0^0 = 1`.
pub fn powu(a: &Rational, k: usize) -> Rational {
    a.pow(k as i64).expect("nonnegative exponent")
}
