//! Volkenborn integrals, plus the bodies shared with the fermionic group.

use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use crate::families::{peters_numbers, peters_poly};
use crate::integrate::Functional;
use crate::poly::{BiPolynomial, Polynomial};
use crate::rational::Rational;
use crate::series::{StdSeries, TruncatedSeries};

const V: Functional = Functional::Volkenborn;

macro_rules! on {
    ($name:ident, $body:path) => {
        fn $name(c: &Ctx, t: &mut Tally) {
            $body(V, c, t)
        }
    };
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("VOLK.C7", c7, None),
        ck("VOLK.AK1", ak1, None),
        ck("VOLK.C0", c0, None),
        ck("VOLK.BI1", bi1, None),
        ck("VOLK.L1", l1, None),
        ck("VOLK.L1A", l1a, None),
        ck("VOLK.LL1A", ll1a, None),
        ck("VOLK.LL1B", ll1b, None),
        ck("VOLK.XRATIO", xratio, None),
        ck("VOLK.COMBSUM", combsum, None),
        ck("VOLK.X1N1", x1n1, None),
        ck("VOLK.AI0A3", ai0a3, None),
        ck("VOLK.LF1A", lf1a, None),
        ck("VOLK.LF1B", lf1b, None),
        ck("VOLK.V1A_INT", v1a_int, None),
        ck("VOLK.X1N", x1n, None),
        ck("VOLK.DELTA_INT", delta_int, None),
        ck("VOLK.NEGX", negx, None),
        ck("VOLK.V1B", v1b, None),
        ck("VOLK.LF1S", lf1s, Some(lf1s_fixed)),
        ck("VOLK.LF1U", lf1u, None),
        ck("VOLK.GG1_INT", gg1_int, None),
        ck("VOLK.HARM_INT", harm_int, Some(harm_int_fixed)),
        ck("VOLK.ID7_INT", id7_int, None),
        ck("VOLK.IR2", ir2, None),
        ck("VOLK.ID6_INT", id6_int, Some(id6_int_fixed)),
        ck("VOLK.ID1_ID2", id1_id2, None),
        ck("VOLK.BIAA_INT", biaa_int, None),
        ck("VOLK.AS1B", as1b, None),
        ck("VOLK.LF1H", lf1h, None),
        ck("VOLK.LAHV", lahv, None),
        ck("VOLK.LF1I", lf1i, None),
        ck("VOLK.BIAB", biab, None),
        ck("VOLK.CFT_INT", cft_int, None),
        ck("VOLK.CF2_INT", cf2_int, None),
        ck("VOLK.CF_EVEN_INT", cf_even_int, Some(cf_even_int_fixed)),
        ck("VOLK.CF_ODD_INT", cf_odd_int, None),
        ck("VOLK.XVBINR_V", xvbinr_v, None),
        ck("VOLK.BERN_SUM_V", bern_sum_v, Some(bern_sum_v_fixed)),
        ck("VOLK.PETERS_V", peters_v, Some(peters_v_fixed)),
        ck("VOLK.HARMPROD_V", harmprod_v, None),
    ]
}

// ---- bodies shared with the fermionic group ----

/// `int binom(x,n)` against the closed weight.
pub(super) fn mahler_basis(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = match f {
            Functional::Volkenborn => sg(n as i64) / u(n + 1),
            Functional::Fermionic => sg(n as i64) * two_pow(-(n as i64)),
        };
        t.eq(|| format!("n={n}"), &int(f, &binx(q(0), n as i64)), &rhs);
    }
}

/// `int x_(n)` as a closed form, as a Stirling sum and against the
/// generating function of the numbers.
pub(super) fn falling(f: Functional, c: &Ctx, t: &mut Tally) {
    let k = c.max_n;
    let gf = match f {
        // log(1+t)/t
        Functional::Volkenborn => TruncatedSeries::standard(StdSeries::Log1p, k + 1).div_t(),
        // 2/(2+t)
        Functional::Fermionic => TruncatedSeries::constant(q(2), k)
            .add(&TruncatedSeries::t(k))
            .unwrap()
            .inverse()
            .unwrap()
            .scale(&q(2)),
    };
    for n in 0..=k {
        let lhs = int(f, &ff(n));
        let closed = match f {
            Functional::Volkenborn => sg(n as i64) * fact(n) / u(n + 1),
            Functional::Fermionic => sg(n as i64) * fact(n) * two_pow(-(n as i64)),
        };
        t.eq(|| format!("n={n}"), &lhs, &closed);
        t.eq(|| format!("n={n}, numbers"), &lhs, &dd(f, n));
        let st = sum((0..=n).map(|l| s1(n, l as i64) * moment(f, l)));
        t.eq(|| format!("n={n}, stirling"), &lhs, &st);
        t.eq(|| format!("n={n}, series"), &lhs, &gf.egf_coeff(n));
    }
}

/// `int binom(x+n-1, n)` in three summation forms.
pub(super) fn rising_binom(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = int(f, &binx(q(n - 1), n));
        let a = sum_r(0, n, |m| bin(n - 1, n - m) * mw(f, m as usize));
        t.eq(|| format!("n={n}, weights"), &lhs, &a);
        if n >= 1 {
            let b = sum_r(1, n, |m| bin(n - 1, m - 1) * mw(f, m as usize));
            t.eq(|| format!("n={n}, from one"), &lhs, &b);
        }
        let c3 = sum_r(0, n, |m| {
            let d = match f {
                Functional::Volkenborn => q(m + 1),
                Functional::Fermionic => two_pow(m),
            };
            sg(m) * bin(n - 1, n - m) / d
        });
        t.eq(|| format!("n={n}, from zero"), &lhs, &c3);
    }
}

/// `int (x+n-1)_(n) = n! sum_m binom(n-1,n-m) w_m`
pub(super) fn rising_ff(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = int(f, &ffx(q(n - 1), n as usize));
        let rhs = fact(n as usize) * sum_r(0, n, |m| bin(n - 1, n - m) * mw(f, m as usize));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

/// `int (x-1)_(n) = (-1)^n sum_k n_(n-k) k! |w_k|`
pub(super) fn xratio_with(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let lhs = int(f, &ffx(q(-1), n));
        let rhs = sg(n as i64) * sum((0..=n).map(|k| ffi(n as i64, n - k) * fact(k) * sg(k as i64) * mw(f, k)));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
        // the quotient form it is stated in
        let quo = ff(n + 1).compose(&lin(1, q(0)));
        t.poly_eq(|| format!("n={n}, quotient"), &quo, &x().mul(&ffx(q(-1), n)));
    }
}

fn double_product(f: Functional, c: &Ctx, t: &mut Tally, signed: bool) {
    for k in 1..=c.max_n.min(8) {
        let lhs = double(f, &BiPolynomial::substitute_product(&ff(k)));
        let rhs = sum((1..=k).flat_map(|l| (1..=k).map(move |m| (l, m))).map(|(l, m)| {
            osgood_c(k, l as i64, m as i64, signed) * dd(f, l) * dd(f, m)
        }));
        t.eq(|| format!("k={k}"), &lhs, &rhs);
    }
}

pub(super) fn double_product_printed(f: Functional, c: &Ctx, t: &mut Tally) {
    double_product(f, c, t, false);
}

pub(super) fn double_product_fixed(f: Functional, c: &Ctx, t: &mut Tally) {
    double_product(f, c, t, true);
}

/// `int int (xy)_(k) = sum_m S1(k,m) M_m^2`
pub(super) fn double_stirling(f: Functional, c: &Ctx, t: &mut Tally) {
    for k in 0..=c.max_n {
        let lhs = double(f, &BiPolynomial::substitute_product(&ff(k)));
        let rhs = sum((0..=k).map(|m| s1(k, m as i64) * pw(&moment(f, m), 2)));
        t.eq(|| format!("k={k}"), &lhs, &rhs);
    }
}

fn id6_lhs(n: i64, printed: bool) -> Polynomial {
    let second = if printed {
        x().mul(&lin(1, q(-1))).scale(&bin(n - 3, n - 2))
    } else {
        x().mul(&lin(1, q(-1))).mul(&binx(q(-3), n - 2))
    };
    x().mul(&binx(q(-2), n - 1)).add(&second)
}

fn id6_with(f: Functional, c: &Ctx, t: &mut Tally, printed: bool) {
    for n in 2..=c.max_n as i64 {
        let rhs = sg(n) * sum_r(0, n, |k| q(k * k) * sg(k) * mw(f, k as usize));
        t.eq(|| format!("n={n}"), &int(f, &id6_lhs(n, printed)), &rhs);
    }
}

pub(super) fn id6_printed(f: Functional, c: &Ctx, t: &mut Tally) {
    id6_with(f, c, t, true);
}

pub(super) fn id6_fixed(f: Functional, c: &Ctx, t: &mut Tally) {
    id6_with(f, c, t, false);
}

/// Integral of a Gould expansion, term by term.
fn gould_int(f: Functional, top: i64, w: impl Fn(i64) -> Rational) -> Rational {
    sum_r(0, top, |k| mw(f, k as usize) * sum_r(0, k, |j| sg(j) * bin(k, j) * w(k - j)))
}

/// `int binom(x+n, n)` as a Gould sum and as a Stirling sum.
pub(super) fn id_pair(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = int(f, &binx(q(n), n));
        t.eq(|| format!("n={n}, gould"), &lhs, &gould_int(f, n, |d| bin(d + n, n)));
        let st = sum_r(0, n, |k| {
            moment(f, k as usize) * sum_r(0, n, |j| bin(n, j) * s1(j as usize, k) / fact(j as usize))
        });
        t.eq(|| format!("n={n}, stirling"), &lhs, &st);
    }
}

pub(super) fn id7_with(f: Functional, c: &Ctx, t: &mut Tally) {
    for m in 1..=4i64 {
        for n in 0..=c.max_n as i64 {
            let lhs = int(f, &binp(&lin(m, q(0)), n));
            t.eq(|| format!("m={m}, n={n}"), &lhs, &gould_int(f, n, |d| bin(m * d, n)));
        }
    }
}

pub(super) fn ir_with(f: Functional, c: &Ctx, t: &mut Tally) {
    for r in 0..=c.max_r as u32 {
        for n in 0..=c.max_n.min(8) as i64 {
            let lhs = int(f, &binx(q(0), n).pow(r));
            let rhs = gould_int(f, n * r as i64, |d| pw(&bin(d, n), r as usize));
            t.eq(|| format!("n={n}, r={r}"), &lhs, &rhs);
        }
    }
}

/// Corrected harmonic form: `int binom(n-x, n) = sum_{k<=n} |w_k|`.
pub(super) fn harm_fixed(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = int(f, &binp(&lin(-1, q(n)), n));
        t.eq(|| format!("n={n}"), &lhs, &sum_r(0, n, |k| sg(k) * mw(f, k as usize)));
    }
}

/// `int x^m x_(n) = sum_k S1(n,k) M_{k+m}`
pub(super) fn power_times_falling(f: Functional, c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m {
        for n in 0..=c.max_n {
            let lhs = int(f, &xp(m).mul(&ff(n)));
            let rhs = sum((0..=n).map(|k| s1(n, k as i64) * moment(f, k + m)));
            t.eq(|| format!("m={m}, n={n}"), &lhs, &rhs);
        }
    }
}

/// `int x_(n) x_(m) = sum_k binom(m,k) binom(n,k) k! N_{m+n-k}`
pub(super) fn lah_product(f: Functional, c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m {
        for n in 0..=c.max_n {
            let lhs = int(f, &ff(n).mul(&ff(m)));
            let rhs = sum((0..=m.min(n)).map(|k| {
                let d = m + n - k;
                let base = match f {
                    Functional::Volkenborn => fact(d) / u(d + 1),
                    Functional::Fermionic => fact(d) * two_pow(-(d as i64)),
                };
                sg(d as i64) * bin(m as i64, k as i64) * bin(n as i64, k as i64) * fact(k) * base
            }));
            t.eq(|| format!("m={m}, n={n}"), &lhs, &rhs);
        }
    }
}

/// `int x_(m) (x-m)_(n)` in three forms.
pub(super) fn joined_falling(f: Functional, c: &Ctx, t: &mut Tally) {
    let lo = match f {
        Functional::Volkenborn => 1,
        Functional::Fermionic => 0,
    };
    for m in lo..=c.max_m {
        for n in lo..=c.max_n {
            let lhs = int(f, &ff(m).mul(&ffx(-u(m), n)));
            let d = m + n;
            let closed = match f {
                Functional::Volkenborn => sg(d as i64) * fact(d) / u(d + 1),
                Functional::Fermionic => sg(d as i64) * fact(d) * two_pow(-(d as i64)),
            };
            t.eq(|| format!("m={m}, n={n}"), &lhs, &closed);
            t.eq(|| format!("m={m}, n={n}, numbers"), &lhs, &dd(f, d));
            let st = sum((0..=d).map(|k| s1(d, k as i64) * moment(f, k)));
            t.eq(|| format!("m={m}, n={n}, stirling"), &lhs, &st);
        }
    }
}

/// `int x^[n] = sum_k t(n,k) M_k`
pub(super) fn central_with(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = sum((0..=n).map(|k| tc(n, k as i64) * moment(f, k)));
        t.eq(|| format!("n={n}"), &int(f, &cf(n)), &rhs);
    }
}

/// `int x^2 x^[n-2]` through the step `x^[n] = (x^2 - (n-2)^2/4) x^[n-2]`.
pub(super) fn central_sq(f: Functional, c: &Ctx, t: &mut Tally) {
    for n in 2..=c.max_n {
        let h = (u(n) - q(2)) / q(2);
        let part = |m: usize| sum((0..=m).map(|k| tc(m, k as i64) * moment(f, k)));
        let rhs = part(n) + pw(&h, 2) * part(n - 2);
        t.eq(|| format!("n={n}"), &int(f, &xp(2).mul(&cf(n - 2))), &rhs);
    }
}

/// `x^2 prod_{k<n} (x^2 - k^2)`, the even central factorial `x^[2n]`.
fn cf_even_poly(n: usize) -> Polynomial {
    (1..n).fold(xp(2), |a, k| a.mul(&xp(2).sub(&cst(u(k * k)))))
}

pub(super) fn central_even(f: Functional, c: &Ctx, t: &mut Tally, printed: bool) {
    for n in 1..=c.max_n / 2 {
        let lhs = int(f, &cf_even_poly(n));
        let rhs = sum((0..=2 * n).map(|k| {
            let idx = if printed { 2 * k } else { k };
            tc(2 * n, k as i64) * moment(f, idx)
        }));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
        t.poly_eq(|| format!("n={n}, product"), &cf_even_poly(n), &cf(2 * n));
    }
}

/// `int x^v binom(x,n)^r`
pub(super) fn power_binom(f: Functional, c: &Ctx, t: &mut Tally) {
    for v in 0..=3usize {
        for r in 1..=c.max_r as u32 {
            for n in 0..=c.max_n.min(6) as i64 {
                let lhs = int(f, &xp(v).mul(&binx(q(0), n).pow(r)));
                let top = n * r as i64;
                let rhs = sum_r(0, top, |k| {
                    let inner = sum_r(0, k, |j| sg(j) * bin(k, j) * pw(&bin(k - j, n), r as usize));
                    let st = sum_r(0, k, |l| s1(k as usize, l) * moment(f, v + l as usize));
                    inner * st / fact(k as usize)
                });
                t.eq(|| format!("v={v}, r={r}, n={n}"), &lhs, &rhs);
            }
        }
    }
}

/// `sum_k (-1)^k B_{k,n}(x) = (1-2x)^n` and the integrals that follow.
/// `theorem_sign` is the sign of the stated left side.
pub(super) fn bern_sum(f: Functional, c: &Ctx, t: &mut Tally, theorem_sign: impl Fn(usize, usize) -> Rational) {
    let one_two = lin(-2, q(1));
    for n in 0..=c.max_n {
        let alt = (0..=n).fold(Polynomial::zero(), |a, k| a.add(&bernstein(n, k).scale(&sg(k as i64))));
        t.poly_eq(|| format!("n={n}, polynomial"), &alt, &one_two.pow(n as u32));
        let stated = sum((0..=n).map(|k| theorem_sign(n, k) * int(f, &bernstein(n, k))));
        let moments = sum((0..=n).map(|j| bin(n as i64, j as i64) * pw(&q(-2), n - j) * moment(f, n - j)));
        t.eq(|| format!("n={n}, theorem"), &stated, &moments);
        let direct = int(f, &one_two.pow(n as u32));
        t.eq(|| format!("n={n}, direct"), &direct, &moments);
        let via_s2 = |g: &dyn Fn(usize) -> Rational| {
            sum((0..=n).flat_map(|j| (0..=n - j).map(move |m| (j, m))).map(|(j, m)| {
                bin(n as i64, j as i64) * pw(&q(-2), n - j) * s2(n - j, m as i64) * g(m)
            }))
        };
        t.eq(|| format!("n={n}, falling"), &direct, &via_s2(&|m| int(f, &ff(m))));
        t.eq(|| format!("n={n}, numbers"), &direct, &via_s2(&|m| dd(f, m)));
        let explicit = sum((0..=n).flat_map(|j| (0..=n - j).map(move |m| (j, m))).map(|(j, m)| {
            let w = match f {
                Functional::Volkenborn => pw(&q(2), n - j) * fact(m) / u(m + 1),
                Functional::Fermionic => two_pow(n as i64 - j as i64 - m as i64) * fact(m),
            };
            bin(n as i64, j as i64) * sg((n + m - j) as i64) * s2(n - j, m as i64) * w
        }));
        t.eq(|| format!("n={n}, explicit"), &direct, &explicit);
    }
}

/// Integrals of the Peters polynomials `s_n(x; lambda, mu)`; `shift` is the
/// offset in the stated factorial `(n-v+shift)!`.
pub(super) fn peters_int(f: Functional, c: &Ctx, t: &mut Tally, shift: usize) {
    for l in &c.lambdas {
        for mu in 1..=c.max_mu {
            let s = peters_numbers(c.max_n, l, mu);
            for n in 0..=c.max_n.min(8) {
                let lhs = int(f, &peters_poly(n, l, mu));
                let nb = |v: usize| bin(n as i64, v as i64) * &s[v];
                let p = || format!("lambda={l}, mu={mu}, n={n}");
                t.eq(|| p() + ", numbers", &lhs, &sum((0..=n).map(|v| nb(v) * dd(f, n - v))));
                let explicit = sum((0..=n).map(|v| {
                    let d = n - v;
                    let tail = match f {
                        Functional::Volkenborn => fact(d + shift) / u(d + 1),
                        Functional::Fermionic => fact(d + shift) * two_pow(-(d as i64)),
                    };
                    sg(d as i64) * nb(v) * tail
                }));
                t.eq(|| p() + ", explicit", &lhs, &explicit);
                let st = sum((0..=n).map(|v| {
                    nb(v) * sum((0..=n - v).map(|k| s1(n - v, k as i64) * moment(f, k)))
                }));
                t.eq(|| p() + ", stirling", &lhs, &st);
                // inversion back to the falling factorial
                let mut back = Rational::zero();
                let mut back_b = Rational::zero();
                for v in 0..=n {
                    let sv = int(f, &peters_poly(n - v, l, mu)) * bin(n as i64, v as i64);
                    let a = sum((0..=mu as usize).map(|j| bin(mu as i64, j as i64) * ffq(&(l * u(j)), v)));
                    let bb = sum((0..=v).map(|k| pw(l, k) * big_b(k, mu) * s1(v, k as i64)));
                    back += a * &sv;
                    back_b += bb * sv;
                }
                let target = int(f, &ff(n));
                t.eq(|| p() + ", inverse", &back, &target);
                t.eq(|| p() + ", inverse closed", &back_b, &dd(f, n));
            }
        }
    }
}

/// `int prod_{j<=k} (1+jx) = sum_n c(k+1, k+1-n) M_n`
pub(super) fn harmprod(f: Functional, c: &Ctx, t: &mut Tally) {
    for k in 1..=c.max_n {
        let p = (1..=k).fold(Polynomial::one(), |a, j| a.mul(&lin(j as i64, q(1))));
        let coeffs: Vec<Rational> = (0..=k).map(|n| cu(k + 1, (k + 1 - n) as i64)).collect();
        t.poly_eq(|| format!("k={k}, coefficients"), &p, &Polynomial::monomial(coeffs.clone()));
        let rhs = sum(coeffs.iter().enumerate().map(|(n, a)| a * moment(f, n)));
        t.eq(|| format!("k={k}"), &int(f, &p), &rhs);
    }
}

// ---- Volkenborn only ----

on!(c7, mahler_basis);
on!(ak1, falling);
on!(c0, rising_binom);
on!(bi1, rising_ff);
on!(xratio, xratio_with);
on!(lf1s, double_product_printed);
on!(lf1s_fixed, double_product_fixed);
on!(lf1u, double_stirling);
on!(id6_int, id6_printed);
on!(id6_int_fixed, id6_fixed);
on!(id1_id2, id_pair);
on!(id7_int, id7_with);
on!(ir2, ir_with);
on!(harm_int_fixed, harm_fixed);
on!(as1b, power_times_falling);
on!(lahv, lah_product);
on!(biab, joined_falling);
on!(cft_int, central_with);
on!(cf2_int, central_sq);
on!(xvbinr_v, power_binom);
on!(harmprod_v, harmprod);

fn l1(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = sg(n as i64 + 1) * fact(n) / u(n * n + 3 * n + 2);
        t.eq(|| format!("n={n}"), &iv(&x().mul(&ff(n))), &rhs);
    }
}

fn l1a(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = sum_r(1, n as i64, |k| s1(n, k - 1) * b(k as usize)) + b(n + 1);
        t.eq(|| format!("n={n}"), &iv(&x().mul(&ff(n))), &rhs);
    }
}

fn ll1a(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        let rhs = sum_r(1, n, |k| sg(k + 1) * bin(n - 1, k - 1) * fact(n as usize) / q(k * k + 3 * k + 2));
        t.eq(|| format!("n={n}"), &iv(&x().mul(&rf(n as usize))), &rhs);
    }
}

fn ll1b(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let poly = (1..=n).fold(Polynomial::zero(), |a, k| a.add(&xp(k + 1).scale(&cu(n, k as i64))));
        let lhs = x().mul(&rf(n));
        t.poly_eq(|| format!("n={n}, polynomial"), &lhs, &poly);
        let rhs = sum((1..=n).map(|k| cu(n, k as i64) * b(k + 1)));
        t.eq(|| format!("n={n}"), &iv(&lhs), &rhs);
    }
}

fn combsum(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let lhs = sum((0..=n).map(|k| ffi(n as i64, n - k) * fact(k) / u(k * k + 3 * k + 2)));
        t.eq(|| format!("n={n}"), &lhs, &(fact(n + 1) / u(n + 2)));
    }
}

fn x1n1(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let rhs = sg(n as i64) * fact(n) / u(n + 2);
        t.eq(|| format!("n={n}"), &iv(&ffx(q(1), n + 1)), &rhs);
    }
}

fn ai0a3(c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m as i64 {
        for n in 0..=c.max_n as i64 {
            let rhs = sum_r(0, n, |k| sg(k) * bin(m, n - k) / q(k + 1));
            t.eq(|| format!("m={m}, n={n}"), &iv(&binx(q(m), n)), &rhs);
        }
    }
}

fn lf1a(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = double(V, &BiPolynomial::substitute_sum(&binx(q(0), n)));
        let rhs = sum_r(0, n, |k| sg(n) / (q(k + 1) * q(n - k + 1)));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn lf1b(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let lhs = double(V, &BiPolynomial::substitute_sum(&binx(q(0), n as i64)));
        let rhs = sum((0..=n).flat_map(|k| (0..=k).map(move |j| (k, j))).map(|(k, j)| {
            bin(k as i64, j as i64) * s1(n, k as i64) * b(j) * b(k - j)
        })) / fact(n);
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn v1a_int(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n as i64 {
        let lhs = iv(&binx(q(1), n));
        t.eq(|| format!("n={n}"), &lhs, &(sg(n + 1) / q(n * n + n)));
        let split = sg(n) / q(n + 1) + sg(n - 1) / q(n);
        t.eq(|| format!("n={n}, split"), &lhs, &split);
    }
}

fn x1n(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sg(n as i64 + 1) * fact(n) / u(n * n + n);
        t.eq(|| format!("n={n}"), &iv(&ffx(q(1), n)), &rhs);
    }
}

fn delta_int(c: &Ctx, t: &mut Tally) {
    for n in 1..=c.max_n {
        let rhs = sg(n as i64 + 1) * fact(n - 1);
        t.eq(|| format!("n={n}"), &iv(&ff(n).forward_diff()), &rhs);
    }
}

fn negx(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n {
        let lhs = iv(&ff(n).compose(&lin(-1, q(0))));
        let a = sum((0..=n).map(|k| lah(n, k as i64) * daehee(k)));
        t.eq(|| format!("n={n}, numbers"), &lhs, &a);
        let b2 = sum((0..=n).map(|k| sg(k as i64) * fact(k) * lah(n, k as i64) / u(k + 1)));
        t.eq(|| format!("n={n}, lah"), &lhs, &b2);
        if n >= 1 {
            let n_ = n as i64;
            let c3 = sum_r(1, n_, |k| sg(k + n_) * bin(n_ - 1, k - 1) * fact(n) / q(k + 1));
            t.eq(|| format!("n={n}, binomial"), &lhs, &c3);
        }
    }
}

fn v1b(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        t.eq(|| format!("n={n}"), &iv(&binx(q(1), n + 1)), &(sg(n) / q(n * n + 3 * n + 2)));
    }
}

fn gg1_int(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = iv(&x().mul(&binx(q(-2), n - 1)));
        let rhs = sg(n) * sum_r(1, n, |k| q(k) / q(k + 1));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn harm_int(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = iv(&binp(&lin(-1, q(n)), n));
        t.eq(|| format!("n={n}"), &lhs, &(sg(n) * harmonic(n as usize)));
        let other = sg(n) * sum_r(1, n, |k| q(1) / q(k + 1));
        t.eq(|| format!("n={n}, shifted"), &lhs, &other);
    }
}

fn biaa_int(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = iv(&binx(q(n) + qf(1, 2), n));
        let rhs = bin(2 * n, n)
            * sum_r(0, n, |k| {
                sg(k) * bin(n, k) * two_pow(2 * k - 2 * n) * q(2 * n + 1) / (q(k + 1) * q(2 * k + 1) * bin(2 * k, k))
            });
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

fn lf1h(c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m {
        for n in 0..=c.max_n {
            let rhs = sum((0..=n).flat_map(|j| (0..=m).map(move |l| (j, l))).map(|(j, l)| {
                s1(n, j as i64) * s1(m, l as i64) * b(j + l)
            }));
            t.eq(|| format!("m={m}, n={n}"), &iv(&ff(n).mul(&ff(m))), &rhs);
        }
    }
}

fn lf1i(c: &Ctx, t: &mut Tally) {
    for m in 0..=c.max_m {
        for n in 0..=c.max_n {
            let rhs = sum((0..=m.min(n)).map(|k| {
                let d = m + n - k;
                bin(m as i64, k as i64)
                    * bin(n as i64, k as i64)
                    * fact(k)
                    * sum((0..=d).map(|l| s1(d, l as i64) * b(l)))
            }));
            t.eq(|| format!("m={m}, n={n}"), &iv(&ff(n).mul(&ff(m))), &rhs);
        }
    }
}

fn cf_even_int(c: &Ctx, t: &mut Tally) {
    central_even(V, c, t, true);
}

fn cf_even_int_fixed(c: &Ctx, t: &mut Tally) {
    central_even(V, c, t, false);
}

fn cf_odd_int(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n / 2 {
        let p = (1..=n).fold(x(), |a, k| a.mul(&xp(2).sub(&cst(pw(&qf(2 * k as i64 - 1, 2), 2)))));
        t.poly_eq(|| format!("n={n}, product"), &p, &cf(2 * n + 1));
        let rhs = -p.derivative().evaluate(&q(0)) / q(2);
        t.eq(|| format!("n={n}"), &iv(&p), &rhs);
    }
}

fn bern_sum_v(c: &Ctx, t: &mut Tally) {
    bern_sum(V, c, t, |n, k| sg(k as i64 - n as i64));
}

fn bern_sum_v_fixed(c: &Ctx, t: &mut Tally) {
    bern_sum(V, c, t, |_, k| sg(k as i64));
}

fn peters_v(c: &Ctx, t: &mut Tally) {
    peters_int(V, c, t, 1);
}

fn peters_v_fixed(c: &Ctx, t: &mut Tally) {
    peters_int(V, c, t, 0);
}
