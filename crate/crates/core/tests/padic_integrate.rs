use num_bigint::BigInt;
use padic_core::families::{bernoulli, euler};
use padic_core::integrate::{
    additivity_residual, alternating_sum, coset_integral, integral, integrate, integrate_mahler, integrate_witt,
    measure_value, odd_rule, riemann_sum, shift_equation_residual, twisted_alternating_sum,
    twisted_fermionic_monomial, unit_integral_monomial, Measure,
};
use padic_core::{ord_p, Basis, Functional, PAdicValuation, Polynomial, Prime, Rational};
use proptest::prelude::*;

const BOTH: [Functional; 2] = [Functional::Volkenborn, Functional::Fermionic];

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-100i64..=100, 1i64..=100).prop_map(|(a, b)| Rational::frac(a, b))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    (0usize..5, proptest::collection::vec(coeff(), 1..=max_deg + 1))
        .prop_map(|(b, c)| Polynomial::new(Basis::ALL[b], c))
}

fn finite_ord(x: &Rational, prime: Prime) -> i64 {
    match ord_p(x, prime) {
        PAdicValuation::Finite(v) => v,
        PAdicValuation::Infinity => i64::MAX,
    }
}

/// Point-by-point sums with rational evaluation; slow but independent of the
/// chunked integer path.
fn brute(f: &Polynomial, prime: Prime, level: u32, alternating: bool) -> Rational {
    let m = prime.get().pow(level) as i64;
    let s: Rational = (0..m)
        .map(|x| {
            let v = f.evaluate(&q(x));
            if alternating && x % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .sum();
    if alternating {
        s
    } else {
        s / q(m)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn both_routes_agree(f in poly(12)) {
        for m in BOTH {
            prop_assert_eq!(integrate_mahler(m, &f), integrate_witt(m, &f));
            prop_assert!(integral(m, &f).unwrap().agrees);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn integrals_are_linear(f in poly(8), g in poly(8), a in coeff(), b in coeff()) {
        for m in BOTH {
            let lhs = integrate(m, &f.scale(&a).add(&g.scale(&b)));
            prop_assert_eq!(lhs, &a * integrate(m, &f) + &b * integrate(m, &g));
        }
    }

    #[test]
    fn odd_part_follows_the_derivative_rule(f in poly(9)) {
        let (_, odd) = f.parity_split();
        let want = -odd.derivative().evaluate(&q(0)) / q(2);
        if odd.is_zero() {
            prop_assert_eq!(integrate(Functional::Volkenborn, &odd), q(0));
        } else {
            prop_assert_eq!(odd_rule(&odd).unwrap(), want);
        }
    }

    #[test]
    fn shift_equations_hold(f in poly(7), m in 1u32..6) {
        for k in BOTH {
            prop_assert!(shift_equation_residual(&f, m, k).is_zero());
        }
    }

    #[test]
    fn cosets_partition_the_integral(f in poly(6), n in 1u32..=2, pi in 0usize..3) {
        let prime = p([2, 3, 5][pi]);
        let total: Rational = (0..prime.get().pow(n)).map(|j| coset_integral(&f, j, n, prime).unwrap()).sum();
        prop_assert_eq!(total, integrate(Functional::Volkenborn, &f));
    }

    #[test]
    fn finite_sums_match_point_evaluation(f in poly(5), level in 1u32..=2) {
        for n in [3, 5] {
            let prime = p(n);
            prop_assert_eq!(riemann_sum(&f, prime, level).unwrap(), brute(&f, prime, level, false));
            prop_assert_eq!(alternating_sum(&f, prime, level).unwrap(), brute(&f, prime, level, true));
        }
    }
}

#[test]
fn documented_integrals() {
    let v = |f: &Polynomial| integrate(Functional::Volkenborn, f);
    let e = |f: &Polynomial| integrate(Functional::Fermionic, f);
    assert_eq!(v(&Polynomial::binom_x(2)), Rational::frac(1, 3));
    assert_eq!(v(&Polynomial::x().mul(&Polynomial::falling(2))), Rational::frac(-1, 6));
    assert_eq!(v(&Polynomial::one()), q(1));
    assert_eq!(e(&Polynomial::binom_x(2)), Rational::frac(1, 4));
    assert_eq!(e(&Polynomial::falling(3)), Rational::frac(-3, 4));
    assert_eq!(e(&Polynomial::one()), q(1));
    for n in 0..=12 {
        assert_eq!(v(&Polynomial::x_pow(n)), bernoulli(n));
        assert_eq!(e(&Polynomial::x_pow(n)), euler(n));
    }
}

#[test]
fn documented_finite_sums() {
    let x = Polynomial::x();
    assert_eq!(riemann_sum(&x, p(3), 2).unwrap(), q(4));
    assert_eq!(ord_p(&(q(4) - bernoulli(1)), p(3)), PAdicValuation::Finite(2));
    assert_eq!(riemann_sum(&Polynomial::one(), p(7), 3).unwrap(), q(1));
    assert_eq!(alternating_sum(&Polynomial::one(), p(3), 1).unwrap(), q(1));
    assert_eq!(alternating_sum(&x, p(3), 1).unwrap(), q(1));
    let d = alternating_sum(&Polynomial::x_pow(2), p(5), 2).unwrap() - euler(2);
    assert!(finite_ord(&d, p(5)) >= 2);
    assert!(alternating_sum(&x, p(2), 3).is_err());
    assert!(riemann_sum(&x, p(2), 3).is_ok());
    assert!(riemann_sum(&x, p(3), 0).is_err());
}

#[test]
fn documented_rules() {
    assert!(shift_equation_residual(&Polynomial::x_pow(3), 2, Functional::Volkenborn).is_zero());
    assert!(shift_equation_residual(&Polynomial::binom_x(4), 1, Functional::Volkenborn).is_zero());
    // binom(x+1,4) = binom(x,4) + binom(x,3)
    let lhs = integrate(Functional::Volkenborn, &Polynomial::binom_x(4).shift(&q(1)));
    assert_eq!(lhs, Rational::frac(1, 5) + Rational::frac(-1, 4));
    assert!(shift_equation_residual(&Polynomial::x_pow(2), 1, Functional::Fermionic).is_zero());

    assert_eq!(odd_rule(&Polynomial::x()).unwrap(), Rational::frac(-1, 2));
    assert_eq!(odd_rule(&Polynomial::x_pow(3)).unwrap(), q(0));
    let c5 = Polynomial::central(5);
    assert_eq!(odd_rule(&c5).unwrap(), -c5.derivative().evaluate(&q(0)) / q(2));
    assert!(odd_rule(&Polynomial::x_pow(2)).is_err());

    // x^[2n] has no constant term, so its fermionic integral is a sum of E_{2k} = 0
    for n in 1..=6 {
        assert!(integrate(Functional::Fermionic, &Polynomial::central(2 * n)).is_zero());
    }
}

#[test]
fn documented_cosets_and_units() {
    let x = Polynomial::x();
    assert_eq!(coset_integral(&x, 0, 1, p(3)).unwrap(), Rational::frac(-1, 2));
    assert_eq!(coset_integral(&Polynomial::one(), 4, 2, p(3)).unwrap(), Rational::frac(1, 9));
    assert_eq!(coset_integral(&Polynomial::x_pow(2), 1, 1, p(3)).unwrap(), Rational::frac(-1, 6));
    assert!(coset_integral(&x, 3, 1, p(3)).is_err());

    let u = unit_integral_monomial(2, p(3)).unwrap();
    assert_eq!(u.plain, Rational::frac(-1, 3));
    assert_eq!(u.over_m, Rational::frac(-1, 6));
    assert!(unit_integral_monomial(1, p(5)).unwrap().plain.is_zero());
    for n in [2, 3, 7] {
        assert!(unit_integral_monomial(3, p(n)).unwrap().plain.is_zero());
    }
    assert!(unit_integral_monomial(0, p(3)).is_err());
}

#[test]
fn twisted_values() {
    assert_eq!(twisted_fermionic_monomial(0, &q(3)).unwrap(), Rational::frac(1, 2));
    assert_eq!(twisted_fermionic_monomial(1, &q(2)).unwrap(), Rational::frac(-4, 9));
    for n in 0..=6 {
        assert_eq!(twisted_fermionic_monomial(n, &q(1)).unwrap(), euler(n));
    }
    assert!(twisted_fermionic_monomial(2, &q(-1)).is_err());
}

#[test]
fn finite_sums_converge_p_adically() {
    for n in [3u64, 5, 7] {
        let prime = p(n);
        for k in 0..=6 {
            let f = Polynomial::x_pow(k);
            for m in BOTH {
                let exact = integrate(m, &f);
                let ords: Vec<i64> = (1..=5)
                    .map(|lvl| {
                        let s = if m == Functional::Volkenborn {
                            riemann_sum(&f, prime, lvl)
                        } else {
                            alternating_sum(&f, prime, lvl)
                        };
                        finite_ord(&(s.unwrap() - &exact), prime)
                    })
                    .collect();
                assert!(
                    ords.windows(2).all(|w| w[0] < w[1] || w[0] == i64::MAX),
                    "x^{k}, p={n}, {m:?}: {ords:?}"
                );
            }
        }
    }
}

#[test]
fn twisted_sums_converge_for_lambda_near_one() {
    for n in [3u64, 5] {
        let prime = p(n);
        let lambda = q(1 + n as i64);
        for k in 0..=3 {
            let exact = twisted_fermionic_monomial(k, &lambda).unwrap();
            let ords: Vec<i64> = (1..=4)
                .map(|lvl| finite_ord(&(twisted_alternating_sum(k, &lambda, prime, lvl).unwrap() - &exact), prime))
                .collect();
            assert!(ords.windows(2).all(|w| w[0] < w[1]), "k={k}, p={n}: {ords:?}");
        }
    }
}

#[test]
fn measure_examples_and_additivity() {
    let a = |n: i64| BigInt::from(n);
    assert_eq!(measure_value(&Measure::Haar, p(3), &a(5), 2).unwrap(), Rational::frac(1, 9));
    assert_eq!(measure_value(&Measure::Mazur, p(5), &a(1), 1).unwrap(), Rational::frac(-3, 10));
    assert_eq!(measure_value(&Measure::MinusOne, p(3), &a(7), 2).unwrap(), q(-1));
    assert!(measure_value(&Measure::Haar, p(3), &a(9), 2).is_err());
    for n in [3u64, 5] {
        let prime = p(n);
        for lvl in 1..=2 {
            for x in 0..n.pow(lvl) {
                let x = BigInt::from(x);
                let v = |mu: &Measure| measure_value(mu, prime, &x, lvl).unwrap();
                assert_eq!(v(&Measure::BernoulliK(0)), v(&Measure::Haar));
                assert_eq!(v(&Measure::BernoulliK(1)), v(&Measure::Mazur));
                let mut all = vec![Measure::Haar, Measure::Mazur, Measure::MinusOne, Measure::Dirac(Rational::frac(2, 7))];
                all.extend((0..=4).map(Measure::BernoulliK));
                for mu in &all {
                    assert!(additivity_residual(mu, prime, &x, lvl).unwrap().is_zero(), "{mu:?} p={n} a={x} N={lvl}");
                }
            }
        }
    }
}
