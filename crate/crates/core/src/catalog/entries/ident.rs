//! Relations obtained by integrating earlier identities both ways.

use super::super::util::*;
use super::super::{Check, Ctx, Tally};
use super::ck;
use crate::families::{bernoulli_poly, euler_poly, peters_numbers, y2_num, y2_poly};
use crate::integrate::Functional;
use crate::rational::Rational;

pub(super) fn checks() -> Vec<Check> {
    vec![
        ck("IDENT.AF6B", af6b, None),
        ck("IDENT.AF8E", af8e, None),
        ck("IDENT.CF_TB", cf_tb, Some(cf_tb_fixed)),
        ck("IDENT.CF_TE", cf_te, Some(cf_te_fixed)),
        ck("IDENT.EULER_BERNSTEIN_REL", euler_bernstein, Some(euler_bernstein_fixed)),
        ck("IDENT.BERNSTEIN_ZERO_SUM", bernstein_zero_sum, None),
        ck("IDENT.STIRLING_BERN_DOUBLE", stirling_bern_double, None),
        ck("IDENT.DAEHEE_PETERS", daehee_peters, None),
        ck("IDENT.PETERS_FACT", peters_fact, Some(peters_fact_fixed)),
        ck("IDENT.CHANGHEE_PETERS", changhee_peters, None),
        ck("IDENT.CHANGHEE_PETERS_J", changhee_peters_j, Some(changhee_peters_j_fixed)),
        ck("IDENT.CHANGHEE_Y2", changhee_y2, None),
        ck("IDENT.DAEHEE_Y2", daehee_y2, None),
    ]
}

/// Shared left side of the l-weighted binomial sums:
/// `sum_j binom(n,j) M_{j+l}/(j+l)` against `M_{n+k}(1)`.
fn weighted(f: Functional, c: &Ctx, t: &mut Tally) {
    for l in 1..=c.max_m as i64 {
        for n in 0..=c.max_n as i64 {
            let lhs = sum_r(0, n, |j| bin(n, j) * moment(f, (j + l) as usize) / q(j + l));
            let at_one = |m: usize| match f {
                Functional::Volkenborn => bernoulli_poly(m).evaluate(&q(1)),
                Functional::Fermionic => euler_poly(m).evaluate(&q(1)),
            };
            let rhs = sum_r(1, l, |k| {
                sg(l - k) * bin(l - 1, l - k) * (at_one((n + k) as usize) - moment(f, 0)) / q(n + k)
            });
            t.eq(|| format!("l={l}, n={n}"), &lhs, &rhs);
            // the polynomial identity underneath, integrated term by term
            if l == 1 {
                let direct = int(f, &lin(1, q(1)).pow(n as u32 + 1).sub(&cst(q(1)))) / q(n + 1);
                t.eq(|| format!("n={n}, corollary"), &lhs, &direct);
            }
        }
    }
}

fn af6b(c: &Ctx, t: &mut Tally) {
    weighted(Functional::Volkenborn, c, t);
}

fn af8e(c: &Ctx, t: &mut Tally) {
    weighted(Functional::Fermionic, c, t);
}

/// `M_n = sum_k sum_{j<=k} T(n,k) t(., .) M_j`; as printed the inner
/// coefficient is `t(j,k)`, which vanishes off the diagonal.
fn central_round_trip(f: Functional, c: &Ctx, t: &mut Tally, printed: bool) {
    for n in 0..=c.max_n {
        let inner = |k: usize| {
            sum((0..=k).map(|j| {
                let tt = if printed { tc(j, k as i64) } else { tc(k, j as i64) };
                tt * moment(f, j)
            }))
        };
        let rhs = sum((0..=n).map(|k| tcb(n, k as i64) * inner(k)));
        t.eq(|| format!("n={n}"), &moment(f, n), &rhs);
    }
}

fn cf_tb(c: &Ctx, t: &mut Tally) {
    central_round_trip(Functional::Volkenborn, c, t, true);
}

fn cf_tb_fixed(c: &Ctx, t: &mut Tally) {
    central_round_trip(Functional::Volkenborn, c, t, false);
}

fn cf_te(c: &Ctx, t: &mut Tally) {
    central_round_trip(Functional::Fermionic, c, t, true);
}

fn cf_te_fixed(c: &Ctx, t: &mut Tally) {
    central_round_trip(Functional::Fermionic, c, t, false);
}

/// `E_n` from the Bernstein integrals; `binomial` restores the `binom(n,j)`
/// weight of the first sum. The `-2` comes from `int B_0^n = 2 + E_n`,
/// which needs `n >= 1`.
fn euler_bernstein_with(c: &Ctx, t: &mut Tally, binomial: bool) {
    for n in 1..=c.max_n as i64 {
        let w = |j: i64| if binomial { bin(n, j) } else { q(1) };
        let first = sum_r(0, n, |j| w(j) * pw(&q(-2), (n - j) as usize) * e((n - j) as usize));
        let second = sum_r(1, n, |k| {
            sg(k) * bin(n, k) * sum_r(0, n - k, |j| sg(n - k - j) * bin(n - k, j) * e((n - j) as usize))
        });
        t.eq(|| format!("n={n}"), &e(n as usize), &(first - second - q(2)));
    }
}

fn euler_bernstein(c: &Ctx, t: &mut Tally) {
    euler_bernstein_with(c, t, false);
}

fn euler_bernstein_fixed(c: &Ctx, t: &mut Tally) {
    euler_bernstein_with(c, t, true);
}

fn bernstein_zero_sum(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let lhs = sum_r(0, n, |j| {
            let d = (n - j) as usize;
            let inner = e(d) - sum((0..=d).map(|m| s2(d, m as i64) * changhee(m)));
            bin(n, j) * pw(&q(-2), d) * inner
        });
        t.eq(|| format!("n={n}"), &lhs, &q(0));
    }
}

fn stirling_bern_double(c: &Ctx, t: &mut Tally) {
    for n in 0..=c.max_n as i64 {
        let pairs = || (0..=n).flat_map(move |j| (0..=n - j).map(move |m| (j, m)));
        let lhs = sum(pairs().map(|(j, m)| {
            bin(n, j) * sg(n + m - j) * pw(&q(2), (n - j) as usize) * s2((n - j) as usize, m) * fact(m as usize)
                / q(m + 1)
        }));
        let rhs = sum(pairs().map(|(j, m)| {
            let inner = sum_r(0, m, |l| s1(m as usize, l) * b(l as usize));
            bin(n, j) * pw(&q(-2), (n - j) as usize) * s2((n - j) as usize, m) * inner
        }));
        t.eq(|| format!("n={n}"), &lhs, &rhs);
    }
}

/// Runs `body` over the sampled `(lambda, mu, n)` with the Peters numbers
/// `s_0..s_n` at hand.
fn over_peters(c: &Ctx, t: &mut Tally, mut body: impl FnMut(&mut Tally, &Rational, u32, usize, &[Rational])) {
    for l in &c.lambdas {
        for mu in 1..=c.max_mu {
            let s = peters_numbers(c.max_n, l, mu);
            for n in 0..=c.max_n.min(8) {
                body(t, l, mu, n, &s);
            }
        }
    }
}

/// `sum_v sum_k binom(n,v) lambda^k B(k,mu) S1(v,k) g(n-v)`
fn stirling_outer(n: usize, l: &Rational, mu: u32, g: impl Fn(usize) -> Rational) -> Rational {
    sum((0..=n).map(|v| {
        let a = sum((0..=v).map(|k| pw(l, k) * big_b(k, mu) * s1(v, k as i64)));
        bin(n as i64, v as i64) * a * g(n - v)
    }))
}

/// `sum_v sum_j binom(mu,j) binom(n,v) (lambda j)_(v) g(n-v)`
fn falling_outer(n: usize, l: &Rational, mu: u32, g: impl Fn(usize) -> Rational) -> Rational {
    sum((0..=n).map(|v| {
        let a = sum((0..=mu as usize).map(|j| bin(mu as i64, j as i64) * ffq(&(l * u(j)), v)));
        bin(n as i64, v as i64) * a * g(n - v)
    }))
}

/// `sum_m binom(d,m) s_m g(d-m)`
fn convolve(s: &[Rational], d: usize, g: impl Fn(usize) -> Rational) -> Rational {
    sum((0..=d).map(|m| bin(d as i64, m as i64) * &s[m] * g(d - m)))
}

fn bstir(d: usize) -> Rational {
    sum((0..=d).map(|l| s1(d, l as i64) * b(l)))
}

fn daehee_peters(c: &Ctx, t: &mut Tally) {
    over_peters(c, t, |t, l, mu, n, s| {
        let p = || format!("lambda={l}, mu={mu}, n={n}");
        let lhs = stirling_outer(n, l, mu, |d| convolve(s, d, bstir));
        t.eq(|| p() + ", numbers", &lhs, &daehee(n));
        let closed = sg(n as i64) * fact(n) / u(n + 1);
        t.eq(|| p() + ", closed", &lhs, &closed);
        // the last form reads B_v for the unbound B_l
        let st = sum((0..=n).map(|v| s1(n, v as i64) * b(v)));
        t.eq(|| p() + ", stirling", &lhs, &st);
    });
}

/// As printed the second form carries an extra Peters convolution and the
/// third has `(n-v)!` where `(n-v-l)!` belongs.
fn peters_fact_with(c: &Ctx, t: &mut Tally, printed: bool) {
    over_peters(c, t, |t, l, mu, n, s| {
        let p = || format!("lambda={l}, mu={mu}, n={n}");
        let closed = sg(n as i64) * fact(n) / u(n + 1);
        let a = falling_outer(n, l, mu, |d| convolve(s, d, daehee));
        t.eq(|| p() + ", numbers", &a, &closed);
        let second = if printed {
            falling_outer(n, l, mu, |d| convolve(s, d, |e_| convolve(s, e_, bstir)))
        } else {
            falling_outer(n, l, mu, |d| convolve(s, d, bstir))
        };
        t.eq(|| p() + ", stirling", &second, &closed);
        let third = falling_outer(n, l, mu, |d| {
            sum((0..=d).map(|m| {
                let top = if printed { fact(d) } else { fact(d - m) };
                sg((d - m) as i64) * bin(d as i64, m as i64) * &s[m] * top / u(d - m + 1)
            }))
        });
        t.eq(|| p() + ", explicit", &third, &closed);
    });
}

fn peters_fact(c: &Ctx, t: &mut Tally) {
    peters_fact_with(c, t, true);
}

fn peters_fact_fixed(c: &Ctx, t: &mut Tally) {
    peters_fact_with(c, t, false);
}

fn changhee_peters(c: &Ctx, t: &mut Tally) {
    over_peters(c, t, |t, l, mu, n, s| {
        let p = || format!("lambda={l}, mu={mu}, n={n}");
        let lhs = stirling_outer(n, l, mu, |d| convolve(s, d, changhee));
        t.eq(p, &changhee(n), &lhs);
        let explicit = stirling_outer(n, l, mu, |d| {
            convolve(s, d, |r| sg(r as i64) * fact(r) * two_pow(-(r as i64)))
        });
        t.eq(|| p() + ", corollary", &explicit, &(sg(n as i64) * fact(n) * two_pow(-(n as i64))));
    });
}

/// The `(lambda j)_(v)` forms; as printed the last two drop `(n-v-l)!`.
fn changhee_peters_j_with(c: &Ctx, t: &mut Tally, printed: bool) {
    over_peters(c, t, |t, l, mu, n, s| {
        let p = || format!("lambda={l}, mu={mu}, n={n}");
        let closed = sg(n as i64) * fact(n) * two_pow(-(n as i64));
        let a = falling_outer(n, l, mu, |d| convolve(s, d, changhee));
        t.eq(|| p() + ", numbers", &a, &closed);
        let b2 = falling_outer(n, l, mu, |d| {
            convolve(s, d, |r| {
                let f = if printed { q(1) } else { fact(r) };
                sg(r as i64) * f * two_pow(-(r as i64))
            })
        });
        t.eq(|| p() + ", explicit", &changhee(n), &b2);
        t.eq(|| p() + ", corollary", &b2, &closed);
    });
}

fn changhee_peters_j(c: &Ctx, t: &mut Tally) {
    changhee_peters_j_with(c, t, true);
}

fn changhee_peters_j_fixed(c: &Ctx, t: &mut Tally) {
    changhee_peters_j_with(c, t, false);
}

/// `sum_j binom(n,j) lambda^{n-j} Y_{j,2}(lambda) N_{n-j}`
fn y2_side(f: Functional, n: usize, l: &Rational) -> Rational {
    sum((0..=n).map(|j| {
        bin(n as i64, j as i64) * pw(l, n - j) * y2_num(j, l).unwrap() * dd(f, n - j)
    }))
}

fn changhee_y2(c: &Ctx, t: &mut Tally) {
    let f = Functional::Fermionic;
    for l in &c.lambdas {
        for n in 0..=c.max_n {
            let lhs = y2_side(f, n, l);
            let rhs = sum((0..=n).map(|j| {
                sg(n as i64) * fact(j) * fact(n - j) * bin(n as i64, j as i64) * pw(l, n + j)
                    / (pw(&q(2), n) * pw(&(l - q(1)), j + 1))
            }));
            t.eq(|| format!("lambda={l}, n={n}"), &lhs, &rhs);
            let direct = int(f, &y2_poly(n, l).unwrap());
            t.eq(|| format!("lambda={l}, n={n}, integral"), &direct, &lhs);
        }
    }
}

fn daehee_y2(c: &Ctx, t: &mut Tally) {
    let f = Functional::Volkenborn;
    for l in &c.lambdas {
        for n in 0..=c.max_n {
            let lhs = y2_side(f, n, l);
            let rhs = q(2)
                * sum((0..=n).flat_map(|j| (0..=n - j).map(move |k| (j, k))).map(|(j, k)| {
                    sg(j as i64) * fact(j) * bin(n as i64, j as i64) * pw(l, n + j) * s1(n - j, k as i64) * b(k)
                        / pw(&(q(2) * l - q(2)), j + 1)
                }));
            t.eq(|| format!("lambda={l}, n={n}"), &lhs, &rhs);
            let direct = int(f, &y2_poly(n, l).unwrap());
            t.eq(|| format!("lambda={l}, n={n}, integral"), &direct, &lhs);
        }
    }
}
