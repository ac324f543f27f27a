use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use crate::families::{
    apostol, apostol_b_poly, apostol_e_poly, apostol_list, apostol_series, generating_function, peters_numbers,
    peters_poly, sequence, y2_num, y2_poly, y2_poly_explicit, y2_series_numbers, Apostol, Sequence,
};
use crate::poly::{BiPolynomial, Polynomial};
use crate::rational::Rational;
use crate::series::{StdSeries, TruncatedSeries};
use crate::Functional;

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("GF.APB_VALUES", apb_values, Some(apb_values_fixed)),
        ck("GF.APB_INITIAL", apb_initial, None),
        ck("GF.APE_VALUES", ape_values, None),
        ck("GF.REL_APBE", rel_apbe, None),
        ck("GF.FROB_EULER", frob_euler, None),
        ck("GF.APB_FROB", apb_frob, None),
        ck("GF.CAUCHY_B2", cauchy_b2, None),
        ck("GF.FUBINI_W", fubini_w, None),
        ck("GF.CHANGHEE_STIRLING", changhee_stirling, None),
        ck("GF.PETERS_SPECIAL", peters_special, Some(peters_special_fixed)),
        ck("GF.PETERS_THETA", peters_theta, None),
        ck("GF.AY1B", ay1b, None),
        ck("GF.AY1C", ay1c, None),
        ck("GF.A1A3", a1a3, None),
    ]
}

fn exp(k: usize) -> TruncatedSeries {
    TruncatedSeries::standard(StdSeries::Exp, k)
}

/// `t/(e^t - 1)`
fn bernoulli_series(k: usize) -> TruncatedSeries {
    let d = TruncatedSeries::expm1(k + 1).div_t();
    TruncatedSeries::from_coeffs(d.coeffs().to_vec(), k).inverse().unwrap()
}

/// `2/(e^t + 1)`
fn euler_series(k: usize) -> TruncatedSeries {
    exp(k).add(&TruncatedSeries::one(k)).unwrap().inverse().unwrap().scale(&q(2))
}

/// Apostol-Bernoulli numbers `0..=n` read off the generating function.
fn apb_gf(n: usize, l: &Rational) -> Vec<Rational> {
    egf(&apostol_series(Apostol::B, n, l).unwrap(), n)
}

fn ape_gf(n: usize, l: &Rational) -> Vec<Rational> {
    egf(&apostol_series(Apostol::E, n, l).unwrap(), n)
}

/// `sign * c * lambda * p(lambda) / (lambda - 1)^d`
fn frac_l(l: &Rational, c: i64, p: &[i64], d: i64) -> Rational {
    q(c) * l * ipoly(p, l) / pwi(&(l - q(1)), d)
}

fn printed_apb_numbers(l: &Rational) -> Vec<Rational> {
    vec![
        q(0),
        pwi(&(l - q(1)), -1),
        frac_l(l, -2, &[1], 2),
        frac_l(l, 3, &[1, 1], 3),
        frac_l(l, -4, &[1, 4, 1], 4),
        frac_l(l, 5, &[1, 11, 11, 1], 5),
        frac_l(l, -6, &[1, 26, 66, 26, 1], 6),
        frac_l(l, 7, &[1, 57, 302, 302, 57, 1], 7),
    ]
}

fn printed_apb_polys(l: &Rational, two: i64) -> Vec<Polynomial> {
    let r = pwi(&(l - q(1)), -1);
    let p = |c: Vec<Rational>| Polynomial::monomial(c);
    vec![
        Polynomial::zero(),
        cst(r.clone()),
        p(vec![frac_l(l, -2, &[1], 2), q(two) * &r]),
        p(vec![frac_l(l, 3, &[1, 1], 3), frac_l(l, -6, &[1], 2), q(3) * &r]),
        p(vec![frac_l(l, -4, &[1, 4, 1], 4), frac_l(l, 12, &[1, 1], 3), frac_l(l, -12, &[1], 2), q(4) * &r]),
        p(vec![
            frac_l(l, 5, &[1, 11, 11, 1], 5),
            frac_l(l, -20, &[1, 4, 1], 4),
            frac_l(l, 30, &[1, 1], 3),
            frac_l(l, -20, &[1], 2),
            q(5) * &r,
        ]),
    ]
}

fn printed_bernoulli_polys() -> Vec<Polynomial> {
    let p = |c: &[(i64, i64)]| Polynomial::monomial(c.iter().map(|&(a, b)| qf(a, b)).collect());
    vec![
        p(&[(1, 1)]),
        p(&[(-1, 2), (1, 1)]),
        p(&[(1, 6), (-1, 1), (1, 1)]),
        p(&[(0, 1), (1, 2), (-3, 2), (1, 1)]),
        p(&[(-1, 30), (0, 1), (1, 1), (-2, 1), (1, 1)]),
        p(&[(0, 1), (-1, 6), (0, 1), (5, 3), (-5, 2), (1, 1)]),
        p(&[(1, 42), (0, 1), (-1, 2), (0, 1), (5, 2), (-3, 1), (1, 1)]),
    ]
}

const PRINTED_B: [(usize, i64, i64); 15] = [
    (0, 1, 1),
    (1, -1, 2),
    (2, 1, 6),
    (3, 0, 1),
    (4, -1, 30),
    (6, 1, 42),
    (8, -1, 30),
    (10, 5, 66),
    (12, -691, 2730),
    (14, 7, 6),
    (16, -3617, 510),
    (18, 43867, 798),
    (20, -174611, 330),
    // odd indices from 3 on vanish
    (5, 0, 1),
    (7, 0, 1),
];

fn apb_values_with(c: &Ctx, t: &mut Tally, two: i64) {
    for l in &c.lambdas {
        let gf = apb_gf(7, l);
        for (n, v) in printed_apb_numbers(l).iter().enumerate() {
            t.eq(|| format!("lambda={l}, n={n}"), v, &gf[n]);
        }
        for (n, p) in printed_apb_polys(l, two).iter().enumerate() {
            t.poly_eq(|| format!("lambda={l}, n={n}, polynomial"), p, &appell(&gf[..=n]));
        }
    }
    let bs = egf(&bernoulli_series(20), 20);
    for (n, p) in printed_bernoulli_polys().iter().enumerate() {
        t.poly_eq(|| format!("B_{n}(x)"), p, &appell(&bs[..=n]));
    }
    for (n, a, d) in PRINTED_B {
        t.eq(|| format!("B_{n}"), &qf(a, d), &bs[n]);
    }
    for n in (3..=c.max_n.max(20)).step_by(2) {
        t.eq(|| format!("B_{n}"), &b(n), &q(0));
    }
}

fn apb_values(c: &Ctx, t: &mut Tally) {
    apb_values_with(c, t, 1);
}

fn apb_values_fixed(c: &Ctx, t: &mut Tally) {
    apb_values_with(c, t, 2);
}

fn apb_initial(c: &Ctx, t: &mut Tally) {
    let n = c.max_n;
    for l in &c.lambdas {
        let gf = apb_gf(n, l);
        let rec = apostol_list(Apostol::B, n, l).unwrap();
        for m in 0..=n {
            t.eq(|| format!("lambda={l}, n={m}, recurrence"), &rec[m], &gf[m]);
            let p = apostol_b_poly(m, l).unwrap();
            t.poly_eq(|| format!("lambda={l}, n={m}, polynomial"), &p, &appell(&gf[..=m]));
            let at1 = l * p.evaluate(&q(1));
            let want = if m == 1 { q(1) + &gf[1] } else { gf[m].clone() };
            if m >= 1 {
                t.eq(|| format!("lambda={l}, n={m}, at 1"), &at1, &want);
            }
        }
    }
}

fn ape_values(c: &Ctx, t: &mut Tally) {
    let n = c.max_n;
    for l in &c.lambdas {
        let gf = ape_gf(n.max(3), l);
        let p1 = l + q(1);
        let printed = [
            q(2) / &p1,
            -(q(2) * l) / pw(&p1, 2),
            q(2) * l * (l - q(1)) / pw(&p1, 3),
            -(q(2) * l * ipoly(&[1, -4, 1], l)) / pw(&p1, 4),
        ];
        for (m, v) in printed.iter().enumerate() {
            t.eq(|| format!("lambda={l}, n={m}"), v, &gf[m]);
        }
        let rec = apostol_list(Apostol::E, n, l).unwrap();
        for m in 0..=n {
            t.eq(|| format!("lambda={l}, n={m}, recurrence"), &rec[m], &gf[m]);
            let p = apostol_e_poly(m, l).unwrap();
            t.poly_eq(|| format!("lambda={l}, n={m}, polynomial"), &p, &appell(&gf[..=m]));
        }
    }
    let es = egf(&euler_series(c.max_n.max(9)), c.max_n.max(9));
    let p = |v: &[(i64, i64)]| Polynomial::monomial(v.iter().map(|&(a, b)| qf(a, b)).collect());
    let polys = [
        p(&[(1, 1)]),
        p(&[(-1, 2), (1, 1)]),
        p(&[(0, 1), (-1, 1), (1, 1)]),
        p(&[(1, 4), (0, 1), (-3, 2), (1, 1)]),
        p(&[(0, 1), (1, 1), (0, 1), (-2, 1), (1, 1)]),
        p(&[(-1, 2), (0, 1), (5, 2), (0, 1), (-5, 2), (1, 1)]),
    ];
    for (m, poly) in polys.iter().enumerate() {
        t.poly_eq(|| format!("E_{m}(x)"), poly, &appell(&es[..=m]));
    }
    for (m, a, d) in [(0, 1, 1), (1, -1, 2), (2, 0, 1), (3, 1, 4), (5, -1, 2), (7, 17, 8), (9, -31, 2)] {
        t.eq(|| format!("E_{m}"), &qf(a, d), &es[m]);
    }
    for m in (2..es.len()).step_by(2) {
        t.eq(|| format!("E_{m}"), &e(m), &q(0));
    }
    // second kind, 2/(e^t + e^-t)
    let k = 16;
    let cosh2 = exp(k).add(&exp(k).dilate(&q(-1))).unwrap();
    let star = egf(&cosh2.inverse().unwrap().scale(&q(2)), k);
    let printed: [i64; 9] = [1, -1, 5, -61, 1385, -50521, 2702765, -199360981, 19391512145];
    for (i, v) in printed.iter().enumerate() {
        t.eq(|| format!("E*_{}", 2 * i), &q(*v), &star[2 * i]);
        t.eq(|| format!("E*_{}, family", 2 * i), &sequence(Sequence::EulerStar, 2 * i), &star[2 * i]);
    }
    for i in (1..k).step_by(2) {
        t.eq(|| format!("E*_{i}"), &star[i], &q(0));
    }
}

fn rel_apbe(c: &Ctx, t: &mut Tally) {
    for l in &c.lambdas {
        for n in 0..=c.max_n {
            let lhs = apostol_e_poly(n, l).unwrap();
            let rhs = apostol_b_poly(n + 1, &-l).unwrap().scale(&(q(-2) / u(n + 1)));
            t.poly_eq(|| format!("lambda={l}, n={n}"), &lhs, &rhs);
        }
    }
}

fn frob(n: usize, u_: &Rational) -> Vec<Rational> {
    egf(&apostol_series(Apostol::Frobenius, n, u_).unwrap(), n)
}

fn frob_euler(c: &Ctx, t: &mut Tally) {
    let h = frob(c.max_n, &q(-1));
    for n in 0..=c.max_n {
        t.eq(|| format!("n={n}"), &e(n), &h[n]);
    }
    for u_ in &c.lambdas {
        let h = frob(c.max_n.max(4), u_);
        let d = u_ - q(1);
        let printed = [
            pwi(&d, -1),
            (u_ + q(1)) / pw(&d, 2),
            ipoly(&[1, 4, 1], u_) / pw(&d, 3),
            ipoly(&[1, 11, 11, 1], u_) / pw(&d, 4),
        ];
        for (i, v) in printed.iter().enumerate() {
            t.eq(|| format!("u={u_}, H_{}", i + 1), v, &h[i + 1]);
        }
        for n in 1..=c.max_n {
            let s = sum((0..=n).map(|j| bin(n as i64, j as i64) * &h[j])) / u_;
            t.eq(|| format!("u={u_}, n={n}, recurrence"), &h[n], &s);
        }
    }
}

fn apb_frob(c: &Ctx, t: &mut Tally) {
    for l in &c.lambdas {
        let h = frob(c.max_n, &l.recip().unwrap());
        for n in 1..=c.max_n {
            let rhs = u(n) * &h[n - 1] / (l - q(1));
            t.eq(|| format!("lambda={l}, n={n}"), &apostol(Apostol::B, n, l).unwrap(), &rhs);
        }
    }
}

fn cauchy_b2(c: &Ctx, t: &mut Tally) {
    let s = TruncatedSeries::standard(StdSeries::TOverLog1p, c.max_n);
    for n in 0..=c.max_n {
        t.eq(|| format!("n={n}"), &s.egf_coeff(n), &ff(n).definite_integral_01());
    }
}

fn fubini_w(c: &Ctx, t: &mut Tally) {
    let k = c.max_n;
    for w in 1..=3usize {
        for y in [q(1), q(2)] {
            let uu = TruncatedSeries::expm1(k).powi(w as u32).scale(&pw(&y, w));
            // coefficients of 2/(1-u) by expanding the geometric series
            let explicit: Vec<Rational> = (0..=k)
                .map(|n| q(2) * sum((0..=n / w).map(|j| pw(&y, w * j) * fact(w * j) * s2(n, (w * j) as i64))))
                .collect();
            let ex = TruncatedSeries::from_coeffs(
                explicit.iter().enumerate().map(|(n, v)| v / fact(n)).collect(),
                k,
            );
            // (1 + a) I = 2 with a = -u, the fermionic shift rule for a^x
            let prod = TruncatedSeries::one(k).sub(&uu).unwrap().mul(&ex).unwrap();
            for n in 0..=k {
                let want = if n == 0 { q(2) } else { q(0) };
                t.eq(|| format!("w={w}, y={y}, n={n}"), prod.coeff(n), &want);
            }
        }
    }
    let f = generating_function(Sequence::Fubini, k).unwrap();
    let two_over = TruncatedSeries::one(k).sub(&TruncatedSeries::expm1(k)).unwrap().inverse().unwrap().scale(&q(2));
    for n in 0..=k {
        t.eq(|| format!("w=y=1, n={n}"), &two_over.egf_coeff(n), &(q(2) * f.egf_coeff(n)));
    }
}

fn changhee_stirling(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let s = sum((0..=n).map(|k| s1(n, k as i64) * e(k)));
        t.eq(|| format!("n={n}"), &changhee(n), &s);
        t.eq(|| format!("n={n}, integral"), &changhee(n), &ife(&ff(n)));
        let closed = sg(n as i64) * fact(n) / two_pow(n as i64);
        t.eq(|| format!("n={n}, closed"), &changhee(n), &closed);
    }
}

/// `Ch_n(x)`, the fermionic integral of `(x+t)_(n)` over `t`.
fn changhee_poly(n: usize) -> Polynomial {
    BiPolynomial::substitute_sum(&ff(n)).integrate_out_y(Functional::Fermionic)
}

fn peters_special_with(c: &Ctx, t: &mut Tally, scale: i64) {
    for n in 0..=c.max_n {
        let s = peters_poly(n, &q(1), 1).scale(&q(scale));
        t.poly_eq(|| format!("n={n}"), &s, &changhee_poly(n));
        for th in &c.thetas {
            let rhs = pw(&(th - q(1)), n + 1) / (q(2) * pw(th, 2 * n)) * y2_num(n, th).unwrap();
            t.eq(|| format!("n={n}, theta={th}"), &peters_numbers(n, &q(1), 1)[n], &rhs);
        }
    }
    // the Sheffer form against the generating function at integer x
    let k = c.max_n;
    for l in &c.lambdas {
        for mu in 1..=c.max_mu {
            let base = TruncatedSeries::binom_pow(l, k).add(&TruncatedSeries::one(k)).unwrap();
            let g = base.inverse().unwrap().powi(mu);
            for xv in 0..=3i64 {
                let full = g.mul(&TruncatedSeries::binom_pow(&q(xv), k)).unwrap();
                for n in 0..=k {
                    let p = peters_poly(n, l, mu).evaluate(&q(xv));
                    t.eq(|| format!("lambda={l}, mu={mu}, x={xv}, n={n}, series"), &p, &full.egf_coeff(n));
                }
            }
        }
    }
}

fn peters_special(c: &Ctx, t: &mut Tally) {
    peters_special_with(c, t, 1);
}

fn peters_special_fixed(c: &Ctx, t: &mut Tally) {
    peters_special_with(c, t, 2);
}

fn peters_theta(c: &Ctx, t: &mut Tally) {
    for th in &c.thetas {
        for l in &c.lambdas {
            for mu in 1..=c.max_mu {
                let s = peters_numbers(c.max_n, l, mu);
                for n in 1..=c.max_n.min(8) {
                    let mut rhs = Polynomial::zero();
                    for j in 0..n {
                        let w = u(n) / q(2) * bin(n as i64 - 1, j as i64) * pwi(th, j as i64 + 2 - n as i64) * &s[j];
                        rhs = rhs.add(&y2_poly(n - 1 - j, th).unwrap().scale(&w));
                    }
                    for j in 0..=n {
                        let w = (th - q(1)) * bin(n as i64, j as i64) * pwi(th, j as i64 - n as i64) * &s[j];
                        rhs = rhs.add(&y2_poly(n - j, th).unwrap().scale(&w));
                    }
                    let lhs = peters_poly(n, l, mu);
                    t.poly_eq(|| format!("theta={th}, lambda={l}, mu={mu}, n={n}"), &lhs, &rhs);
                }
            }
        }
    }
}


fn ay1_with(c: &Ctx, t: &mut Tally, coef: impl Fn(usize, usize, &Rational, u32) -> Rational) {
    for l in &c.lambdas {
        for mu in 1..=c.max_mu {
            for n in 0..=c.max_n.min(8) {
                let rhs = (0..=n).fold(Polynomial::zero(), |a, v| {
                    let w = bin(n as i64, v as i64) * coef(n, v, l, mu);
                    a.add(&peters_poly(n - v, l, mu).scale(&w))
                });
                t.poly_eq(|| format!("lambda={l}, mu={mu}, n={n}"), &ff(n), &rhs);
            }
        }
    }
}

fn ay1b(c: &Ctx, t: &mut Tally) {
    ay1_with(c, t, |_, v, l, mu| {
        sum((0..=mu as usize).map(|j| bin(mu as i64, j as i64) * ffq(&(l * u(j)), v)))
    });
}

fn ay1c(c: &Ctx, t: &mut Tally) {
    ay1_with(c, t, |_, v, l, mu| sum((0..=v).map(|k| pw(l, k) * big_b(k, mu) * s1(v, k as i64))));
}

fn a1a3(c: &Ctx, t: &mut Tally) {
    let n = c.max_n;
    for l in &c.lambdas {
        let nums = y2_series_numbers(n, l).unwrap();
        for m in 0..=n {
            t.eq(|| format!("lambda={l}, n={m}, numbers"), &y2_num(m, l).unwrap(), &nums[m]);
            let (a, b2) = (y2_poly(m, l).unwrap(), y2_poly_explicit(m, l).unwrap());
            t.poly_eq(|| format!("lambda={l}, n={m}"), &a, &b2);
        }
        // 2(1 + lambda t)^x / (lambda^2 t + 2(lambda - 1)) at integer x
        let d = TruncatedSeries::t(n)
            .scale(&(l * l))
            .add(&TruncatedSeries::constant(q(2) * (l - q(1)), n))
            .unwrap()
            .inverse()
            .unwrap()
            .scale(&q(2));
        for xv in [-1i64, 0, 1, 2, 3] {
            let g = d.mul(&TruncatedSeries::binom_pow(&q(xv), n).dilate(l)).unwrap();
            for m in 0..=n {
                let p = y2_poly(m, l).unwrap().evaluate(&q(xv));
                t.eq(|| format!("lambda={l}, x={xv}, n={m}, series"), &p, &g.egf_coeff(m));
            }
        }
    }
}
