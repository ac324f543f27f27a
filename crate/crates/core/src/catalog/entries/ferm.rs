//! Fermionic integrals.

use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use super::volk::*;
use crate::integrate::Functional;

const F: Functional = Functional::Fermionic;

macro_rules! on {
    ($name:ident, $body:path) => {
        fn $name(c: &Ctx, t: &mut Tally) {
            $body(F, c, t)
        }
    };
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("FERM.EST3", est3, None),
        ck("FERM.AK2", ak2, None),
        ck("FERM.CA1", ca1, None),
        ck("FERM.FI1", fi1, None),
        ck("FERM.AB7", ab7, None),
        ck("FERM.AB7A", ab7a, None),
        ck("FERM.V1B_F", v1b_f, None),
        ck("FERM.XRATIO_F", xratio_f, None),
        ck("FERM.LF1Y", lf1y, Some(lf1y_fixed)),
        ck("FERM.LF1Z", lf1z, None),
        ck("FERM.ID6_F", id6_f, Some(id6_f_fixed)),
        ck("FERM.ID3_ID4", id3_id4, None),
        ck("FERM.ID7_F", id7_f, None),
        ck("FERM.IR1", ir1, None),
        ck("FERM.HARM_F", harm_f, Some(harm_f_fixed)),
        ck("FERM.BIAA_F", biaa_f, None),
        ck("FERM.BERNSTEIN_F", bernstein_f, None),
        ck("FERM.AS11A", as11a, None),
        ck("FERM.CFT_F", cft_f, None),
        ck("FERM.CF2_F", cf2_f, None),
        ck("FERM.CF_EVEN_F", cf_even_f, None),
        ck("FERM.BIAC", biac, None),
        ck("FERM.LAH_F", lah_f, None),
        ck("FERM.XVBINR_F", xvbinr_f, None),
        ck("FERM.BERN_SUM_F", bern_sum_f, None),
        ck("FERM.PETERS_F", peters_f, None),
        ck("FERM.HARMPROD_F", harmprod_f, None),
    ]
}

on!(est3, mahler_basis);
on!(ak2, falling);
on!(ca1, rising_binom);
on!(fi1, rising_ff);
on!(xratio_f, xratio_with);
on!(lf1y, double_product_printed);
on!(lf1y_fixed, double_product_fixed);
on!(lf1z, double_stirling);
on!(id6_f, id6_printed);
on!(id6_f_fixed, id6_fixed);
on!(id3_id4, id_pair);
on!(id7_f, id7_with);
on!(ir1, ir_with);
on!(harm_f_fixed, harm_fixed);
on!(as11a, power_times_falling);
on!(cft_f, central_with);
on!(cf2_f, central_sq);
on!(biac, joined_falling);
on!(lah_f, lah_product);
on!(xvbinr_f, power_binom);
on!(harmprod_f, harmprod);

fn ab7(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sg(n as i64) * (u(n) - q(1)) * fact(n) * two_pow(-(n as i64) - 1);
        t.eq(|| format!("n={n}"), &ife(&x().mul(&ff(n))), &rhs);
    }
}

fn ab7a(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        let rhs = sum_r(1, n, |k| sg(k) * bin(n - 1, k - 1) * q(k - 1) * fact(n as usize) * two_pow(-k - 1));
        t.eq(|| format!("n={n}"), &ife(&x().mul(&rf(n as usize))), &rhs);
    }
}

fn v1b_f(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sg(n as i64 + 1) * fact(n) * two_pow(-(n as i64));
        t.eq(|| format!("n={n}"), &ife(&ffx(q(1), n)), &rhs);
    }
}

fn harm_f(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = ife(&binp(&lin(-1, q(n)), n));
        t.eq(|| format!("n={n}"), &lhs, &(sg(n) * sum_r(1, n, |k| two_pow(-k))));
    }
}

fn biaa_f(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = ife(&binx(q(n) + qf(1, 2), n));
        let rhs = q(2 * n + 1)
            * bin(2 * n, n)
            * sum_r(0, n, |k| sg(k) * bin(n, k) * two_pow(k - 2 * n) / (q(2 * k + 1) * bin(2 * k, k)));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn bernstein_f(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let two_e = q(2) + e(n);
        t.eq(|| format!("n={n}, one minus x"), &ife(&lin(-1, q(1)).pow(n as u32)), &two_e);
        t.eq(|| format!("n={n}, one plus power"), &ife(&lin(-1, q(1)).pow(n as u32)), &(q(2) + ife(&xp(n))));
        t.eq(|| format!("n={n}, k=0"), &ife(&bernstein(n, 0)), &two_e);
        for k in 1..=n {
            let d = (n - k) as i64;
            let rhs = bin(n as i64, k as i64) * sum_r(0, d, |j| sg(d - j) * bin(d, j) * e(n - j as usize));
            t.eq(|| format!("n={n}, k={k}"), &ife(&bernstein(n, k)), &rhs);
        }
    }
}

fn cf_even_f(c: &Ctx, t: &mut Tally) {
    central_even(F, c, t, true);
}

fn bern_sum_f(c: &Ctx, t: &mut Tally) {
    bern_sum(F, c, t, |_, k| sg(k as i64));
}

fn peters_f(c: &Ctx, t: &mut Tally) {
    peters_int(F, c, t, 0);
}
