//! Witt formulas, shift equations, cosets and the measures behind them.

use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use crate::families::{apostol, bernoulli_poly, euler_poly, Apostol};
use crate::integrate::{
    additivity_residual, coset_integral, coset_monomial_closed, integrate_mahler, integrate_witt, odd_rule,
    shift_equation_residual, twisted_fermionic_monomial, unit_integral_monomial, Functional, Measure,
};
use crate::poly::Polynomial;
use crate::rational::{Prime, Rational};
use num_bigint::BigInt;

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("DIST.WITT_B", witt_b, None),
        ck("DIST.WITT_E", witt_e, None),
        ck("DIST.SHIFT_V", shift_v, None),
        ck("DIST.SHIFT_F", shift_f, None),
        ck("DIST.ODD_RULE", odd, None),
        ck("DIST.COSET_MONO", coset_mono, None),
        ck("DIST.UNIT_INT", unit_int, Some(unit_int_fixed)),
        ck("DIST.TWIST_E", twist_e, None),
        ck("DIST.POLY_SUM", poly_sum, Some(poly_sum_fixed)),
        ck("DIST.DISTRIBUTIONS", distributions, None),
    ]
}

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("prime")
}

const ZS: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (1, 2), (-1, 1)];

/// A fixed spread of test polynomials of every degree up to `d`.
fn samples(d: usize) -> Vec<Polynomial> {
    (0..=d)
        .map(|n| Polynomial::monomial((0..=n).map(|i| qf((3 * i as i64 + n as i64) % 7 - 3, 1 + (i % 3) as i64)).collect()))
        .chain([ff(d), rf(d), binx(q(0), d as i64), cf(d)])
        .collect()
}

fn witt(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        t.eq(|| format!("n={n}"), &int(f, &xp(n)), &moment(f, n));
        for &(a, d) in &ZS {
            let z = qf(a, d);
            let lhs = int(f, &lin(1, z.clone()).pow(n as u32));
            let rhs = match f {
                Functional::Volkenborn => bernoulli_poly(n).evaluate(&z),
                Functional::Fermionic => euler_poly(n).evaluate(&z),
            };
            t.eq(|| format!("n={n}, z={z}"), &lhs, &rhs);
        }
    }
    for p in samples(c.max_n) {
        t.eq(|| format!("routes, f={p}"), &integrate_mahler(f, &p), &integrate_witt(f, &p));
    }
}

fn witt_b(c: &Ctx, t: &mut Tally) {
    witt(Functional::Volkenborn, c, t);
}

fn witt_e(c: &Ctx, t: &mut Tally) {
    witt(Functional::Fermionic, c, t);
}

fn shift(f: Functional, c: &Ctx, t: &mut Tally) {
    for p in samples(c.max_n.min(8)) {
        for m in 0..=4u32 {
            t.eq(|| format!("f={p}, m={m}"), &shift_equation_residual(&p, m, f), &q(0));
        }
        match f {
            Functional::Volkenborn => {
                let neg = iv(&p.compose(&lin(-1, q(0))));
                t.eq(|| format!("f={p}, reflection"), &neg, &iv(&p.shift(&q(1))));
            }
            Functional::Fermionic => {
                let lhs = ife(&p.shift(&q(1))) + ife(&p);
                t.eq(|| format!("f={p}, one step"), &lhs, &(q(2) * p.evaluate(&q(0))));
            }
        }
    }
}

fn shift_v(c: &Ctx, t: &mut Tally) {
    shift(Functional::Volkenborn, c, t);
}

fn shift_f(c: &Ctx, t: &mut Tally) {
    shift(Functional::Fermionic, c, t);
}

fn odd(c: &Ctx, t: &mut Tally) {
    for p in samples(c.max_n) {
        let (_, o) = p.parity_split();
        let rule = odd_rule(&o);
        t.holds(|| format!("f={o}"), rule.is_ok());
        if let Ok(v) = rule {
            t.eq(|| format!("f={o}, value"), &v, &(-o.derivative().evaluate(&q(0)) / q(2)));
        }
    }
}

fn coset_mono(c: &Ctx, t: &mut Tally) {
    for pr in [3u64, 5] {
        let p = prime(pr);
        for n in 0..=2u32 {
            for m in 0..=c.max_m.min(6) {
                let xm = xp(m);
                let mut total = Rational::zero();
                for j in 0..pr.pow(n) {
                    let v = coset_integral(&xm, j, n, p).expect("coset");
                    t.eq(|| format!("p={pr}, n={n}, m={m}, j={j}"), &v, &coset_monomial_closed(m, j, n, p));
                    total += v;
                }
                t.eq(|| format!("p={pr}, n={n}, m={m}, partition"), &total, &b(m));
            }
        }
    }
}

/// As printed: `(1 - 2^{n-1}) B_n / n`.
fn unit_int(c: &Ctx, t: &mut Tally) {
    for pr in [2u64, 3, 5] {
        for n in 1..=c.max_n.min(8) {
            let v = unit_integral_monomial(n, prime(pr)).expect("n >= 1");
            let rhs = (q(1) - two_pow(n as i64 - 1)) * b(n) / u(n);
            t.eq(|| format!("p={pr}, n={n}"), &v.plain, &rhs);
        }
    }
}

fn unit_int_fixed(c: &Ctx, t: &mut Tally) {
    for pr in [2u64, 3, 5] {
        for n in 1..=c.max_n.min(8) {
            let v = unit_integral_monomial(n, prime(pr)).expect("n >= 1");
            let rhs = (q(1) - pwi(&u(pr as usize), n as i64 - 1)) * b(n);
            t.eq(|| format!("p={pr}, n={n}"), &v.plain, &rhs);
            t.eq(|| format!("p={pr}, n={n}, over n"), &v.over_m, &(rhs / u(n)));
        }
    }
}

/// `lambda int lambda^x (x+1)^n + int lambda^x x^n = 2 [n = 0]`
fn twist_e(c: &Ctx, t: &mut Tally) {
    for l in &c.lambdas {
        let vals: Vec<Rational> =
            (0..=c.max_n).map(|n| twisted_fermionic_monomial(n, l).expect("lambda != -1")).collect();
        for n in 0..=c.max_n {
            let shifted = sum((0..=n).map(|k| bin(n as i64, k as i64) * &vals[k]));
            let lhs = l * shifted + &vals[n];
            let rhs = if n == 0 { q(2) } else { q(0) };
            t.eq(|| format!("lambda={l}, n={n}"), &lhs, &rhs);
            t.eq(|| format!("lambda={l}, n={n}, family"), &vals[n], &apostol(Apostol::E, n, l).unwrap());
        }
    }
}

/// Volkenborn: `a_0 - a_1/2 + sum a_{2j} B_{2j}`. Fermionic as printed:
/// `1 + sum a_{2j+1} E_{2j+1}`; with `a_0` in place of the 1 when `fixed`.
fn poly_sum_with(c: &Ctx, t: &mut Tally, fixed: bool) {
    for p in samples(c.max_n) {
        let a = p.to_monomial();
        let d = a.coeffs().len();
        let v = a.coeff(0) - a.coeff(1) / q(2) + sum((1..).map(|j| 2 * j).take_while(|&k| k < d).map(|k| a.coeff(k) * b(k)));
        t.eq(|| format!("f={p}, volkenborn"), &iv(&p), &v);
        let head = if fixed { a.coeff(0) } else { q(1) };
        let f = head + sum((0..).map(|j| 2 * j + 1).take_while(|&k| k < d).map(|k| a.coeff(k) * e(k)));
        t.eq(|| format!("f={p}, fermionic"), &ife(&p), &f);
    }
}

fn poly_sum(c: &Ctx, t: &mut Tally) {
    poly_sum_with(c, t, false);
}

fn poly_sum_fixed(c: &Ctx, t: &mut Tally) {
    poly_sum_with(c, t, true);
}

fn distributions(_: &Ctx, t: &mut Tally) {
    let mut measures = vec![Measure::Haar, Measure::Mazur, Measure::MinusOne];
    measures.extend((0..=4).map(Measure::BernoulliK));
    measures.extend([q(0), qf(1, 2), q(7)].into_iter().map(Measure::Dirac));
    for mu in &measures {
        for pr in [3u64, 5] {
            for level in 0..=2u32 {
                for a in 0..pr.pow(level) {
                    let r = additivity_residual(mu, prime(pr), &BigInt::from(a), level).expect("in range");
                    t.eq(|| format!("{mu:?}, p={pr}, N={level}, a={a}"), &r, &q(0));
                }
            }
        }
    }
}
