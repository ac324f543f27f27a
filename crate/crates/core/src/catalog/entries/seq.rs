//! The sequences `Y(n,B)` and `Y(n,E)`: integrals of `x_(n) x^(n)`.

use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use crate::integrate::Functional;
use crate::poly::Polynomial;
use crate::rational::Rational;

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("SEQ.YB_VALUES", yb_values, Some(yb_values_fixed)),
        ck("SEQ.YE_VALUES", ye_values, Some(ye_values_fixed)),
        ck("SEQ.YB_CF", yb_cf, None),
        ck("SEQ.YE_ZERO", ye_zero, None),
        ck("SEQ.B2N_REC", b2n_rec, None),
        ck("SEQ.E2N_REC", e2n_rec, None),
        ck("SEQ.YB_STIRLAH", yb_stirlah, None),
        ck("SEQ.YE_STIRLAH", ye_stirlah, None),
        ck("SEQ.XNXM_V", xnxm_v, Some(xnxm_v_fixed)),
        ck("SEQ.XNXM_F", xnxm_f, None),
    ]
}

/// `Y(n, M) = int x_(n) x^(n)`
pub fn y_seq(f: Functional, n: usize) -> Rational {
    int(f, &ff(n).mul(&rf(n)))
}

/// Printed expansions of `Y(n, .)` in the even moments, leading term first.
const PRINTED: [&[i64]; 7] = [
    &[1],
    &[1],
    &[1, -1],
    &[1, -5, 4],
    &[1, -14, 49, -36],
    &[1, -30, 273, -870, 576],
    &[1, -55, 1023, -7645, 21076, -14400],
];

/// Row 5 with `t(10,4) = -820`, the value `x^[10]` actually has.
const FIXED_5: &[i64] = &[1, -30, 273, -820, 576];

fn values(f: Functional, t: &mut Tally, fixed: bool) {
    for (n, &row) in PRINTED.iter().enumerate() {
        let row = if fixed && n == 5 { FIXED_5 } else { row };
        // Y(0) = M_0; otherwise the coefficients run down from M_{2n} to M_2
        let rhs = if n == 0 {
            moment(f, 0)
        } else {
            sum(row.iter().enumerate().map(|(i, &a)| q(a) * moment(f, 2 * (n - i))))
        };
        t.eq(|| format!("n={n}"), &y_seq(f, n), &rhs);
        let p = ff(n).mul(&rf(n));
        // the product form x^2 (x^2-1)...(x^2-(n-1)^2)
        let prod = (1..n).fold(if n == 0 { Polynomial::one() } else { xp(2) }, |a, k| {
            a.mul(&xp(2).sub(&cst(u(k * k))))
        });
        t.poly_eq(|| format!("n={n}, product"), &p, &prod);
        if n > 0 {
            for (i, &a) in row.iter().enumerate() {
                t.eq(|| format!("n={n}, coefficient {i}"), &t_even(n, n - i), &q(a));
            }
        }
    }
}

fn yb_values(_: &Ctx, t: &mut Tally) {
    values(Functional::Volkenborn, t, false);
}

fn yb_values_fixed(_: &Ctx, t: &mut Tally) {
    values(Functional::Volkenborn, t, true);
}

fn ye_values(_: &Ctx, t: &mut Tally) {
    values(Functional::Fermionic, t, false);
}

fn ye_values_fixed(_: &Ctx, t: &mut Tally) {
    values(Functional::Fermionic, t, true);
}

fn yb_cf(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sum((1..=n).map(|k| t_even(n, k) * b(2 * k)));
        t.eq(|| format!("n={n}"), &y_seq(Functional::Volkenborn, n), &rhs);
    }
}

fn ye_zero(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let y = y_seq(Functional::Fermionic, n);
        let rhs = sum((1..=2 * n).map(|k| tc(2 * n, 2 * k as i64) * e(2 * k)));
        t.eq(|| format!("n={n}"), &y, &rhs);
        t.eq(|| format!("n={n}, zero"), &y, &q(0));
    }
}

fn rec(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = sum((0..=n).map(|k| tb_even(n, k) * y_seq(f, k)));
        t.eq(|| format!("n={n}"), &moment(f, 2 * n), &rhs);
    }
}

fn b2n_rec(c: &Ctx, t: &mut Tally) {
    rec(Functional::Volkenborn, c, t);
}

fn e2n_rec(c: &Ctx, t: &mut Tally) {
    rec(Functional::Fermionic, c, t);
}

fn stirlah(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sum((0..=n).flat_map(|j| (1..=n).map(move |k| (j, k))).map(|(j, k)| {
            let inner = sum((0..=k).map(|m| s1(k, m as i64) * moment(f, j + m)));
            s1(n, j as i64) * lahu(n, k as i64) * inner
        }));
        t.eq(|| format!("n={n}"), &y_seq(f, n), &rhs);
    }
}

fn yb_stirlah(c: &Ctx, t: &mut Tally) {
    stirlah(Functional::Volkenborn, c, t);
}

fn ye_stirlah(c: &Ctx, t: &mut Tally) {
    stirlah(Functional::Fermionic, c, t);
}

/// `int x_(n) x^(m)` through the unsigned Lah expansion of `x^(m)`.
fn xnxm(f: Functional, c: &Ctx, t: &mut Tally, term: impl Fn(usize, usize, usize, usize) -> Rational) {
    for m in 1..=c.max_m {
        for n in 0..=c.max_n {
            let lhs = int(f, &ff(n).mul(&rf(m)));
            let rhs = sum((1..=m).map(|k| lahu(m, k as i64) * sum((0..=n).map(|j| term(m, n, k, j)))));
            t.eq(|| format!("m={m}, n={n}"), &lhs, &rhs);
        }
    }
}

fn xnxm_v(c: &Ctx, t: &mut Tally) {
    xnxm(Functional::Volkenborn, c, t, |m, n, k, j| {
        if j > m {
            return q(0);
        }
        sg((k + n) as i64 - j as i64) * bin(m as i64, j as i64) * bin(k as i64, j as i64) * fact(j)
            * fact(n + k - j)
            / u(m + k - j + 1)
    });
}

fn xnxm_v_fixed(c: &Ctx, t: &mut Tally) {
    xnxm(Functional::Volkenborn, c, t, |_, n, k, j| {
        sg((k + n) as i64 - j as i64) * bin(n as i64, j as i64) * bin(k as i64, j as i64) * fact(j)
            * fact(n + k - j)
            / u(n + k - j + 1)
    });
}

fn xnxm_f(c: &Ctx, t: &mut Tally) {
    xnxm(Functional::Fermionic, c, t, |_, n, k, j| {
        sg((k + n) as i64 - j as i64) * bin(n as i64, j as i64) * bin(k as i64, j as i64) * fact(j)
            * fact(n + k - j)
            * two_pow(j as i64 - (n + k) as i64)
    });
}
