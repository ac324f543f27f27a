use padic_core::families::{
    apostol, bernoulli, even_central, euler, peters, sequence, triangle, y1, y2_num, y2_poly, Apostol, CentralKind,
    Sequence, Triangle,
};
use padic_core::{Polynomial, Rational};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn fact(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut v = p.clone();
            v.insert(i, n - 1);
            out.push(v);
        }
    }
    out
}

fn cycles(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut c = 0;
    for i in 0..p.len() {
        if !seen[i] {
            c += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = p[j];
            }
        }
    }
    c
}

/// Set partitions of an n-set counted by block number, via restricted growth strings.
fn set_partitions(n: usize) -> Vec<i64> {
    let mut counts = vec![0; n + 1];
    fn go(i: usize, n: usize, max: usize, counts: &mut [i64]) {
        if i == n {
            counts[max] += 1;
            return;
        }
        for b in 0..=max {
            go(i + 1, n, max.max(b + 1), counts);
        }
    }
    go(0, n, 0, &mut counts);
    counts
}

#[test]
fn stirling_numbers_count_permutations_and_partitions() {
    for n in 0..=7 {
        let mut by_cycles = vec![0i64; n + 1];
        for p in permutations(n) {
            by_cycles[cycles(&p)] += 1;
        }
        let parts = set_partitions(n);
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            assert_eq!(triangle(&Triangle::S1, n, k), q(sign * by_cycles[k]), "S1({n},{k})");
            assert_eq!(triangle(&Triangle::CUnsigned, n, k), q(by_cycles[k]), "C({n},{k})");
            assert_eq!(triangle(&Triangle::S2, n, k), q(parts[k]), "S2({n},{k})");
        }
    }
}

#[test]
fn lah_numbers_match_the_closed_form() {
    let bin = |n: i64, k: i64| -> i64 {
        if k < 0 || k > n {
            0
        } else {
            (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
        }
    };
    for n in 1..=10usize {
        for k in 1..=n {
            let u = fact(n) / fact(k) * bin(n as i64 - 1, k as i64 - 1);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(triangle(&Triangle::LahUnsigned, n, k), q(u));
            assert_eq!(triangle(&Triangle::Lah, n, k), q(sign * u));
        }
    }
    assert_eq!(triangle(&Triangle::LahUnsigned, 4, 2), q(36));
}

/// `x^[n]` expanded by hand from its product form.
fn central_product(n: usize) -> Polynomial {
    let x2 = Polynomial::x_pow(2);
    if n == 0 {
        return Polynomial::one();
    }
    let (start, shifts): (Polynomial, Vec<Rational>) = if n.is_multiple_of(2) {
        (x2.clone(), (1..n / 2).map(|k| q((k * k) as i64)).collect())
    } else {
        (Polynomial::x(), (1..=n / 2).map(|k| Rational::frac(((2 * k - 1) * (2 * k - 1)) as i64, 4)).collect())
    };
    shifts.iter().fold(start, |acc, s| acc.mul(&x2.sub(&Polynomial::constant(s.clone()))))
}

#[test]
fn central_factorial_numbers_from_the_product() {
    for n in 0..=12 {
        let p = central_product(n);
        for k in 0..=n {
            assert_eq!(triangle(&Triangle::CfSmall, n, k), p.coeff(k), "t({n},{k})");
        }
        // T inverts t
        for m in 0..=n {
            let s: Rational = (m..=n).map(|k| triangle(&Triangle::CfBig, n, k) * triangle(&Triangle::CfSmall, k, m)).sum();
            assert_eq!(s, if m == n { q(1) } else { q(0) });
        }
    }
    assert_eq!(triangle(&Triangle::CfSmall, 6, 4), q(-5));
    assert_eq!(even_central(CentralKind::Small, 3, 2), q(-5));
    assert_eq!(even_central(CentralKind::Big, 4, 2), q(21));
}

#[test]
fn value_spot_set() {
    assert_eq!(bernoulli(12), r("-691/2730"));
    assert_eq!(bernoulli(20), r("-174611/330"));
    assert_eq!(sequence(Sequence::EulerStar, 10), q(-50521));
    assert_eq!(euler(3), r("1/4"));
    for n in 0..=20 {
        let s = if n % 2 == 0 { 1 } else { -1 };
        let f = Rational::from(fact(n));
        assert_eq!(sequence(Sequence::Daehee1, n), q(s) * &f / q(n as i64 + 1));
        assert_eq!(sequence(Sequence::Changhee1, n), q(s) * f / q(2).pow(n as i64).unwrap());
    }
    assert_eq!(sequence(Sequence::Daehee1, 3), r("-3/2"));
    assert_eq!(sequence(Sequence::Harmonic, 2), r("11/6"));
    assert_eq!(sequence(Sequence::Fubini, 4), q(75));
}

#[test]
fn parity_of_the_moment_sequences() {
    for n in 1..=15 {
        assert!(bernoulli(2 * n + 1).is_zero());
        assert!(euler(2 * n).is_zero());
        assert!(sequence(Sequence::EulerStar, 2 * n - 1).is_zero());
    }
    assert_eq!(bernoulli(1), r("-1/2"));
}

#[test]
fn y_sequences() {
    assert_eq!(sequence(Sequence::YOfB, 2), r("-1/5"));
    assert_eq!(sequence(Sequence::YOfB, 2), bernoulli(4) - bernoulli(2));
    assert_eq!(sequence(Sequence::YOfB, 0), q(1));
    for n in 1..=8 {
        assert!(sequence(Sequence::YOfE, n).is_zero(), "Y({n},E)");
    }
}

#[test]
fn apostol_specializations() {
    let one = q(1);
    for n in 0..=10 {
        assert_eq!(apostol(Apostol::E, n, &one).unwrap(), euler(n));
        assert_eq!(apostol(Apostol::Frobenius, n, &q(-1)).unwrap(), euler(n));
        for l in [q(2), q(3), r("1/2")] {
            let rhs = q(-2) / q(n as i64 + 1) * apostol(Apostol::B, n + 1, &-&l).unwrap();
            assert_eq!(apostol(Apostol::E, n, &l).unwrap(), rhs, "n={n}, lambda={l}");
        }
    }
    assert!(apostol(Apostol::B, 2, &one).is_err());
    assert!(apostol(Apostol::E, 2, &q(-1)).is_err());
    assert_eq!(apostol(Apostol::Frobenius, 2, &q(2)).unwrap(), q(3));
}

#[test]
fn changhee_from_stirling_and_euler() {
    for n in 0..=12 {
        let s: Rational = (0..=n).map(|k| triangle(&Triangle::S1, n, k) * euler(k)).sum();
        assert_eq!(sequence(Sequence::Changhee1, n), s);
    }
}

#[test]
fn peters_and_y_families() {
    // s_n(0;1,1) comes out as Ch_n / 2: 1/(2+t) = (1/2) * 2/(2+t)
    for n in 0..=8 {
        let s = peters(n, Some(&q(0)), &q(1), 1);
        assert_eq!(s * q(2), sequence(Sequence::Changhee1, n));
    }
    assert_eq!(peters(2, Some(&q(0)), &q(1), 1), r("1/4"));
    assert_eq!(peters(2, Some(&q(3)), &q(5), 0), q(6));
    assert_eq!(peters(0, None, &q(1), 2), r("1/4"));
    for k in 0..=6 {
        let two_k = q(2).pow(k as i64).unwrap();
        assert_eq!(y1(0, k, &q(1)), two_k / q(fact(k)));
    }
    assert_eq!(y2_num(0, &q(2)).unwrap(), q(1));
    assert_eq!(y2_poly(0, &q(2)).unwrap(), Polynomial::constant(q(1)));
    assert!(y2_num(3, &q(1)).is_err());
}

proptest! {
    #[test]
    fn stirling_triangles_are_inverse(n in 0usize..=12, m in 0usize..=12) {
        let s: Rational = (0..=n).map(|k| triangle(&Triangle::S1, n, k) * triangle(&Triangle::S2, k, m)).sum();
        prop_assert_eq!(s, if n == m { q(1) } else { q(0) });
    }

    #[test]
    fn lah_is_a_stirling_composition(n in 0usize..=10, k in 0usize..=10) {
        let s: Rational = (0..=n)
            .map(|j| Rational::sign_pow(j as i64) * triangle(&Triangle::S1, n, j) * triangle(&Triangle::S2, j, k))
            .sum();
        prop_assert_eq!(triangle(&Triangle::Lah, n, k), s);
    }

    #[test]
    fn triangles_vanish_above_the_diagonal(n in 0usize..=10, d in 1usize..=5) {
        for f in [Triangle::S1, Triangle::S2, Triangle::CUnsigned, Triangle::Lah, Triangle::CfSmall, Triangle::CfBig] {
            prop_assert!(triangle(&f, n, n + d).is_zero());
        }
    }

    #[test]
    fn lambda_stirling_at_one_is_stirling(n in 0usize..=10, k in 0usize..=10) {
        prop_assert_eq!(triangle(&Triangle::LambdaS2(q(1)), n, k), triangle(&Triangle::S2, n, k));
    }
}
