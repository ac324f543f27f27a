use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::{bi_eq, ck};
use crate::poly::{BiPolynomial, Polynomial};
use crate::rational::Rational;
use crate::series::TruncatedSeries;

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("FAC.RO", ro, None),
        ck("FAC.IDD1", idd1, None),
        ck("FAC.AB6", ab6, None),
        ck("FAC.AB6A", ab6a, None),
        ck("FAC.AN4", an4, None),
        ck("FAC.LF1C", lf1c, None),
        ck("FAC.CV", cv, None),
        ck("FAC.V1A", v1a, None),
        ck("FAC.GG1", gg1, None),
        ck("FAC.GG2", gg2, Some(gg2_fixed)),
        ck("FAC.ID7", id7, None),
        ck("FAC.ID5", id5, None),
        ck("FAC.ID6", id6, Some(id6_fixed)),
        ck("FAC.ID1A", id1a, None),
        ck("FAC.ID2B", id2b, None),
        ck("FAC.BIAA", biaa, None),
        ck("FAC.BI1B3", gg1, None),
        ck("FAC.BI1B4", bi1b4, Some(bi1b4_fixed)),
        ck("FAC.SCHLOMILCH", schlomilch, None),
        ck("FAC.OSGOOD", osgood, Some(osgood_fixed)),
        ck("FAC.LAH_DEF", lah_def, None),
        ck("FAC.CF_RT", cf_rt, None),
        ck("FAC.BUTZER_EVEN", butzer_even, None),
        ck("FAC.BUTZER_ODD", butzer_odd, None),
        ck("FAC.BUTZER_REC", butzer_rec, None),
        ck("FAC.DELTA_T", delta_t, None),
    ]
}

fn ro(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = ff(n + 1).add(&ff(n).scale(&u(n)));
        t.poly_eq(|| format!("n={n}"), &x().mul(&ff(n)), &rhs);
    }
}

fn idd1(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let inner = (0..=n).fold(Polynomial::zero(), |a, k| {
            a.add(&ff(k).scale(&(sg((n - k) as i64) * ffi(n as i64, n - k))))
        });
        t.poly_eq(|| format!("n={n}"), &ff(n + 1), &x().mul(&inner));
    }
}

fn ab6(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let lhs = ffx(q(1), n + 1);
        t.poly_eq(|| format!("n={n}"), &lhs, &x().mul(&ff(n)).add(&ff(n)));
    }
}

fn ab6a(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let lhs = ffx(q(1), n);
        t.poly_eq(|| format!("n={n}"), &lhs, &ff(n).add(&ff(n - 1).scale(&u(n))));
        // the forward difference it comes from
        t.poly_eq(|| format!("n={n}, delta"), &ff(n).forward_diff(), &lhs.sub(&ff(n)));
    }
}

fn an4(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let neg = ff(n).compose(&lin(-1, q(0))).scale(&sg(n as i64));
        let shifted = ffx(u(n) - q(1), n);
        t.poly_eq(|| format!("n={n}, first"), &neg, &shifted);
        t.poly_eq(|| format!("n={n}, second"), &shifted, &rf(n));
    }
}

fn lf1c(c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m {
        for n in 0..=c.max_n {
            let rhs = (0..=m).fold(Polynomial::zero(), |a, k| {
                let w = bin(m as i64, k as i64) * bin(n as i64, k as i64) * fact(k);
                a.add(&ff(m + n - k).scale(&w))
            });
            t.poly_eq(|| format!("m={m}, n={n}"), &ff(m).mul(&ff(n)), &rhs);
        }
    }
}

fn cv(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let mut lhs = BiPolynomial::default();
        for k in 0..=n {
            let term = BiPolynomial::in_x(&Polynomial::binom_x(k))
                .bi_multiply(&BiPolynomial::in_y(&Polynomial::binom_x(n - k)));
            lhs = lhs.add(&term);
        }
        let rhs = BiPolynomial::substitute_sum(&Polynomial::binom_x(n));
        bi_eq(t, &format!("n={n}"), &lhs, &rhs);
        for m in 0..=c.max_m {
            let lhs = (0..=n).fold(Polynomial::zero(), |a, k| {
                a.add(&Polynomial::binom_x(k).scale(&bin(m as i64, (n - k) as i64)))
            });
            t.poly_eq(|| format!("n={n}, m={m}"), &lhs, &binx(u(m), n as i64));
        }
    }
}

fn v1a(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let n = n as i64;
        let rhs = binx(q(0), n).add(&binx(q(0), n - 1));
        t.poly_eq(|| format!("n={n}"), &binx(q(1), n), &rhs);
        t.poly_eq(|| format!("n={n}, delta"), &binx(q(0), n).forward_diff(), &binx(q(0), n - 1));
    }
}

fn gg1(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = x().mul(&binx(q(-2), n - 1));
        let rhs = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&(sg(k - n) * q(k)))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn gg2_with(c: &Ctx, t: &mut Tally, sign: impl Fn(i64, i64) -> Rational) {
    for n in 0..=c.max_n as i64 {
        let lhs = binp(&lin(-1, q(n)), n);
        let rhs = (0..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&sign(k, n))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn gg2(c: &Ctx, t: &mut Tally) {
    gg2_with(c, t, |k, n| sg(k - n));
}

fn gg2_fixed(c: &Ctx, t: &mut Tally) {
    gg2_with(c, t, |k, _| sg(k));
}


fn id7(c: &Ctx, t: &mut Tally) {
    for m in 1..=4i64 {
        for n in 0..=c.max_n as i64 {
            let lhs = binp(&lin(m, q(0)), n);
            let rhs = gould_sum(n, |d| bin(m * d, n));
            t.poly_eq(|| format!("m={m}, n={n}"), &lhs, &rhs);
        }
    }
}

fn id5(c: &Ctx, t: &mut Tally) {
    for r in 0..=c.max_r as u32 {
        for n in 0..=c.max_n.min(8) as i64 {
            let lhs = binx(q(0), n).pow(r);
            let rhs = gould_sum(n * r as i64, |d| pw(&bin(d, n), r as usize));
            t.poly_eq(|| format!("n={n}, r={r}"), &lhs, &rhs);
        }
    }
}

fn id6(c: &Ctx, t: &mut Tally) {
    for n in 2..=c.max_n as i64 {
        let lhs = x()
            .mul(&binx(q(-2), n - 1))
            .add(&x().mul(&lin(1, q(-1))).scale(&bin(n - 3, n - 2)));
        let rhs = (0..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&(sg(k) * q(k * k)))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn id6_fixed(c: &Ctx, t: &mut Tally) {
    for n in 2..=c.max_n as i64 {
        let lhs = x().mul(&binx(q(-2), n - 1)).add(&x().mul(&lin(1, q(-1))).mul(&binx(q(-3), n - 2)));
        let rhs = (0..=n)
            .fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&(sg(k) * q(k * k)))))
            .scale(&sg(n));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn id1a(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let rhs = gould_sum(n, |d| bin(d + n, n));
        t.poly_eq(|| format!("n={n}"), &binx(q(n), n), &rhs);
    }
}

fn id2b(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let coeffs = (0..=n)
            .map(|k| sum((0..=n).map(|j| bin(n as i64, j as i64) * s1(j, k as i64) / fact(j))))
            .collect();
        t.poly_eq(|| format!("n={n}"), &binx(u(n), n as i64), &Polynomial::monomial(coeffs));
    }
}

fn biaa_coeff(n: i64, k: i64) -> Rational {
    q(2 * n + 1) * bin(2 * n, n) * bin(n, k) * two_pow(2 * k - 2 * n) / (q(2 * k + 1) * bin(2 * k, k))
}

fn biaa(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = binx(q(n) + qf(1, 2), n);
        let rhs = (0..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&biaa_coeff(n, k))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn bi1b4(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        let lhs = binp(&lin(-1, q(n)), n).scale(&sg(n));
        let rhs = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&sg(k))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn bi1b4_fixed(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        let lhs = binp(&lin(-1, q(n)), n).sub(&Polynomial::one());
        let rhs = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&binx(q(0), k).scale(&sg(k))));
        t.poly_eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn schlomilch(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        for k in 1..=n {
            let rhs = sum_r(0, n - k, |j| {
                sg(j) * bin(n + j - 1, k - 1) * bin(2 * n - k, n - k - j) * s2((n - k + j) as usize, j)
            });
            t.eq(|| format!("n={n}, k={k}"), &s1(n as usize, k), &rhs);
        }
    }
}

fn osgood_with(c: &Ctx, t: &mut Tally, signed: bool) {
    for k in 1..=c.max_n.min(8) {
        let mut rhs = BiPolynomial::default();
        for l in 1..=k {
            for m in 1..=k {
                let w = osgood_c(k, l as i64, m as i64, signed);
                let term = BiPolynomial::in_x(&ff(l)).bi_multiply(&BiPolynomial::in_y(&ff(m)));
                rhs = rhs.add(&term.scale(&w));
            }
        }
        let lhs = BiPolynomial::substitute_product(&ff(k));
        bi_eq(t, &format!("k={k}"), &lhs, &rhs);
        for l in 1..=k as i64 {
            for m in 1..=k as i64 {
                let (a, b2) = (osgood_c(k, l, m, signed), osgood_c(k, m, l, signed));
                t.eq(|| format!("k={k}, C({l},{m}) symmetric"), &a, &b2);
            }
        }
    }
    let fixed = [(1, 1, 1, 1), (2, 1, 1, 0), (3, 1, 2, 0), (3, 2, 1, 0)];
    for (k, l, m, v) in fixed {
        t.eq(|| format!("C^({k})_({l},{m})"), &osgood_c(k, l, m, signed), &q(v));
    }
    for k in 0..=c.max_n {
        let rhs: Vec<Polynomial> = (0..=k).map(|m| xp(m).scale(&s1(k, m as i64))).collect();
        let rhs = BiPolynomial::new(rhs);
        bi_eq(t, &format!("k={k}, monomial form"), &BiPolynomial::substitute_product(&ff(k)), &rhs);
    }
}

fn osgood(c: &Ctx, t: &mut Tally) {
    osgood_with(c, t, false);
}

fn osgood_fixed(c: &Ctx, t: &mut Tally) {
    osgood_with(c, t, true);
}

fn lah_def(c: &Ctx, t: &mut Tally) {
    let kk = c.max_n + 1;
    for k in 0..=c.max_n {
        // (t/(1-t))^k / k!
        let g = TruncatedSeries::t(kk)
            .div(&TruncatedSeries::one(kk).sub(&TruncatedSeries::t(kk)).unwrap())
            .unwrap()
            .powi(k as u32)
            .scale(&fact(k).recip().unwrap());
        for n in k..=c.max_n {
            let signed = sg(n as i64) * fact(n) / fact(k) * bin(n as i64 - 1, k as i64 - 1);
            // the generating function gives the unsigned numbers
            t.eq(|| format!("n={n}, k={k}, gf"), &g.egf_coeff(n), &lahu(n, k as i64));
            if n > 0 {
                t.eq(|| format!("n={n}, k={k}, closed"), &lah(n, k as i64), &signed);
            }
            let rec: Rational = sum_r(0, n as i64, |j| sg(j) * s1(n, j) * s2(j as usize, k as i64));
            t.eq(|| format!("n={n}, k={k}, stirling"), &lah(n, k as i64), &rec);
            let next = -(u(n) + u(k)) * lah(n, k as i64) - lah(n, k as i64 - 1);
            t.eq(|| format!("n={n}, k={k}, recurrence"), &lah(n + 1, k as i64), &next);
        }
    }
    for n in 1..=c.max_n {
        let neg = ff(n).compose(&lin(-1, q(0)));
        let via = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&ff(k).scale(&lah(n, k as i64))));
        t.poly_eq(|| format!("n={n}, (-x)_(n)"), &neg, &via);
        let back = (1..=n).fold(Polynomial::zero(), |a, k| {
            a.add(&ff(k).compose(&lin(-1, q(0))).scale(&lah(n, k as i64)))
        });
        t.poly_eq(|| format!("n={n}, x_(n)"), &ff(n), &back);
        let up = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&ff(k).scale(&lahu(n, k as i64))));
        t.poly_eq(|| format!("n={n}, x^(n)"), &rf(n), &up);
    }
}

fn cf_product(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let h = qf(n as i64, 2);
    (1..n).fold(x(), |a, j| a.mul(&lin(1, h.clone() - u(j))))
}

fn cf_rt(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let coeffs = (0..=n).map(|k| tc(n, k as i64)).collect();
        t.poly_eq(|| format!("n={n}, t"), &cf_product(n), &Polynomial::monomial(coeffs));
        let back = (0..=n).fold(Polynomial::zero(), |a, k| a.add(&cf_product(k).scale(&tcb(n, k as i64))));
        t.poly_eq(|| format!("n={n}, T"), &xp(n), &back);
        let delta = if n == 0 { q(1) } else { q(0) };
        t.eq(|| format!("n={n}, t(n,0)"), &tc(n, 0), &delta);
        t.eq(|| format!("n={n}, T(n,0)"), &tcb(n, 0), &delta);
        for j in 0..=n {
            let s = sum((0..=n).map(|k| tc(n, k as i64) * tcb(k, j as i64)));
            let d = if j == n { q(1) } else { q(0) };
            t.eq(|| format!("n={n}, j={j}, inverse"), &s, &d);
        }
    }
}

fn butzer_even(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n / 2 + 1 {
        let rhs = (1..n).fold(xp(2), |a, k| a.mul(&xp(2).sub(&cst(u(k * k)))));
        t.poly_eq(|| format!("n={n}"), &cf(2 * n), &rhs);
    }
}

fn butzer_odd(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n / 2 {
        let rhs = (1..=n).fold(x(), |a, k| {
            let h = qf((2 * k as i64 - 1).pow(2), 4);
            a.mul(&xp(2).sub(&cst(h)))
        });
        t.poly_eq(|| format!("n={n}"), &cf(2 * n + 1), &rhs);
    }
}

fn butzer_rec(c: &Ctx, t: &mut Tally) {
    for n in 2..=c.max_n {
        let h = qf(n as i64 - 2, 2);
        let rhs = xp(2).sub(&cst(h.clone() * h)).mul(&cf(n - 2));
        t.poly_eq(|| format!("n={n}"), &cf(n), &rhs);
    }
}

fn delta_t(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let mut d = cf(n);
        let mut dl = xp(n);
        for j in 0..=n {
            let jf = fact(j);
            let dd = (j..=n).fold(Polynomial::zero(), |a, k| {
                a.add(&xp(k - j).scale(&(bin(k as i64, j as i64) * tc(n, k as i64))))
            });
            t.poly_eq(|| format!("n={n}, j={j}, D^j"), &d, &dd.scale(&jf));
            t.eq(|| format!("n={n}, j={j}, D^j at 0"), &d.evaluate(&q(0)), &(jf.clone() * tc(n, j as i64)));
            let dl_rhs = (j..=n).fold(Polynomial::zero(), |a, k| {
                a.add(&cf(k - j).scale(&(bin(k as i64, j as i64) * tcb(n, k as i64))))
            });
            t.poly_eq(|| format!("n={n}, j={j}, delta^j"), &dl, &dl_rhs.scale(&jf));
            t.eq(|| format!("n={n}, j={j}, delta^j at 0"), &dl.evaluate(&q(0)), &(jf * tcb(n, j as i64)));
            d = d.derivative();
            dl = dl.central_diff();
        }
    }
}
