use padic_core::families::{generating_function, sequence, Sequence};
use padic_core::{Rational, StdSeries, TruncatedSeries};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn series(coeffs: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| q(c)).collect(), coeffs.len() - 1)
}

fn small_series(k: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec((-20i64..20, 1i64..6), k + 1).prop_map(move |v| {
        TruncatedSeries::from_coeffs(v.into_iter().map(|(a, b)| Rational::frac(a, b)).collect(), k)
    })
}

/// Ordered set partitions of an n-set, by counting surjections onto each k.
fn fubini_brute(n: usize) -> i64 {
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for code in 0..n.pow(n as u32) {
        let mut seen = vec![false; n];
        let mut c = code;
        for _ in 0..n {
            seen[c % n] = true;
            c /= n;
        }
        // the image must be {0..k-1} for some k
        let k = seen.iter().filter(|&&s| s).count();
        if seen[..k].iter().all(|&s| s) {
            total += 1;
        }
    }
    total
}

/// `B_n` from `sum_{k<=n} binom(n+1,k) B_k = 0`, independent of any series code.
fn bernoulli_rec(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    let bin = |n: i64, k: i64| -> Rational { (0..k).fold(q(1), |a, i| a * q(n - i) / q(i + 1)) };
    for m in 1..=n {
        let s: Rational = (0..m).map(|k| bin(m as i64 + 1, k as i64) * &b[k]).sum();
        b.push(-s / q(m as i64 + 1));
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn inverse_is_a_two_sided_unit(a in small_series(8)) {
        prop_assume!(!a.coeff(0).is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(8));
        prop_assert_eq!(inv.mul(&a).unwrap(), TruncatedSeries::one(8));
    }

    #[test]
    fn product_is_commutative_and_truncated(a in small_series(6), b in small_series(6)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.coeffs().len(), 7);
        // the Cauchy coefficient at the top index, by hand
        let top: Rational = (0..=6).map(|i| a.coeff(i) * b.coeff(6 - i)).sum();
        prop_assert_eq!(ab.coeff(6), &top);
    }

    #[test]
    fn binomial_powers_add_exponents(a in -6i64..6, b in -6i64..6, d in 1i64..4) {
        let (x, y) = (Rational::frac(a, d), Rational::frac(b, d));
        let lhs = TruncatedSeries::binom_pow(&x, 7).mul(&TruncatedSeries::binom_pow(&y, 7)).unwrap();
        prop_assert_eq!(lhs, TruncatedSeries::binom_pow(&(x + y), 7));
    }

    #[test]
    fn composition_with_zero_constant_is_associative(a in small_series(5), b in small_series(5), c in small_series(5)) {
        let zero_c0 = |s: &TruncatedSeries| {
            let mut v = s.coeffs().to_vec();
            v[0] = Rational::zero();
            TruncatedSeries::from_coeffs(v, 5)
        };
        let (b, c) = (zero_c0(&b), zero_c0(&c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn log_and_exp_are_inverse() {
    for k in [8, 12] {
        let t = TruncatedSeries::t(k);
        let log = TruncatedSeries::standard(StdSeries::Log1p, k);
        let expm1 = TruncatedSeries::expm1(k);
        assert_eq!(log.compose(&expm1).unwrap(), t);
        assert_eq!(expm1.compose(&log).unwrap(), t);
    }
}

#[test]
fn documented_values() {
    let one_plus = series(&[1, 1, 0, 0]);
    let one_minus = series(&[1, -1, 0, 0]);
    assert_eq!(one_plus.mul(&one_minus).unwrap(), series(&[1, 0, -1, 0]));
    assert_eq!(one_minus.inverse().unwrap(), series(&[1, 1, 1, 1]));
    assert!(series(&[0, 1]).inverse().is_err());
    assert!(series(&[1, 1]).compose(&series(&[1, 1])).is_err());
    assert!(series(&[1, 1]).mul(&series(&[1, 1, 1])).is_err());

    let e = TruncatedSeries::standard(StdSeries::Exp, 4);
    assert_eq!(e.mul(&e.dilate(&q(-1))).unwrap(), TruncatedSeries::one(4));
    assert_eq!(
        TruncatedSeries::standard(StdSeries::Log1p, 4).coeffs(),
        [q(0), q(1), Rational::frac(-1, 2), Rational::frac(1, 3), Rational::frac(-1, 4)]
    );
    assert_eq!(TruncatedSeries::binom_pow(&q(2), 4), series(&[1, 2, 1, 0, 0]));
    assert_eq!(TruncatedSeries::binom_pow(&q(-1), 3), series(&[1, -1, 1, -1]));
    assert_eq!(TruncatedSeries::binom_pow(&Rational::frac(1, 2), 2).coeff(2), &Rational::frac(-1, 8));
    assert_eq!(TruncatedSeries::standard(StdSeries::TOverLog1p, 4).egf_coeff(2), Rational::frac(-1, 6));

    // (e^t - 1)^2 / 2!, times 4!, is S2(4,2) = 7
    let sq = TruncatedSeries::expm1(6).powi(2).scale(&Rational::frac(1, 2));
    assert_eq!(sq.egf_coeff(4), q(7));
}

#[test]
fn bernoulli_and_fubini_from_series_match_brute_force() {
    let k = 14;
    let bn = bernoulli_rec(k);
    let egf = generating_function(Sequence::Bernoulli, k).unwrap();
    for (n, b) in bn.iter().enumerate() {
        assert_eq!(&egf.egf_coeff(n), b, "B_{n}");
    }
    // 1/(2 - e^t); the inverse of (2 - e^t)/2 is twice that
    let two = TruncatedSeries::constant(q(2), 7);
    let d = two.sub(&TruncatedSeries::standard(StdSeries::Exp, 7)).unwrap();
    let f = d.inverse().unwrap();
    for n in 0..=6 {
        assert_eq!(f.egf_coeff(n), q(fubini_brute(n)), "Fubini {n}");
    }
    assert_eq!(f.egf_coeff(4), q(75));
    let halved = d.scale(&Rational::frac(1, 2)).inverse().unwrap();
    assert_eq!(halved.egf_coeff(4), q(150));
}

#[test]
fn every_family_matches_its_generating_function() {
    let k = 16;
    for fam in Sequence::ALL {
        let Some(g) = generating_function(fam, k) else { continue };
        for n in 0..=k {
            let want = if fam == Sequence::Harmonic { g.coeff(n).clone() } else { g.egf_coeff(n) };
            assert_eq!(sequence(fam, n), want, "{} at {n}", fam.name());
        }
    }
}
