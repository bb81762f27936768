//! Exact identities: the three computations of each 1dsum, and identities
//! among the fermionic forms and their series.

use std::collections::BTreeMap;

use affpaths::combinatorics::{kostka_foulkes, kostka_number, partitions_bounded, partitions_of, Partition};
use affpaths::crystal::Kind;
use affpaths::fermionic::{
    delta_single, delta_tensor, f_l, f_l_prime, f_lr_prime, f_lr_prime_with_stats, ff_kostka,
    ff_kostka_dual, ff_kostka_dual_widened, ff_kostka_widened, ff_unrestricted_antisym,
    ff_unrestricted_sym, general_string_series, general_string_series_by_product,
    rsos_spinon_series, spinon_branching_series, string_series_single, string_series_tensor,
    CartanDatum,
};
use affpaths::paths::{onedsum, PathClass};
use affpaths::qalgebra::{inv_qpochhammer_dense, rat_int, LaurentPoly, QSeries};
use affpaths::Result;

use super::{comp, compositions, fmt_comp};
use crate::harness::{job, job1, Bounds, CheckResult, Job};

pub(super) fn kostka_jobs(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 2..=b.max_n {
        for size in 1..=b.max_mu {
            for mu in partitions_of(size) {
                jobs.push(job(move || kostka_checks(n, &mu)));
            }
        }
    }
    jobs
}

/// `g`, `X` and, when `mu_1 < n`, `g'`, `X'` for every weight of size `|mu|`.
fn kostka_checks(n: usize, mu: &Partition) -> Vec<CheckResult> {
    let size = mu.size();
    let mu_c = comp(mu.parts());
    // K_{eta mu}(q) by charge, for every eta of the right size.
    let charge: BTreeMap<Partition, Result<LaurentPoly>> = partitions_of(size)
        .into_iter()
        .map(|eta| {
            let k = kostka_foulkes(&eta, &mu_c);
            (eta, k)
        })
        .collect();
    let kq = |eta: &Partition| -> Result<LaurentPoly> { charge[eta].clone() };
    let antisym = mu.first() < n;
    let mut out = Vec::new();
    for lam in compositions(size, n) {
        let lc = comp(&lam);
        let params = format!("n={n} mu={mu} lambda={}", fmt_comp(&lam));
        let expansion = |dual: bool| -> Result<LaurentPoly> {
            let mut acc = LaurentPoly::zero();
            for eta in charge.keys() {
                let (rows, k) = if dual {
                    (eta.first(), kostka_number(&eta.conjugate(), &lc))
                } else {
                    (eta.len(), kostka_number(eta, &lc))
                };
                if rows <= n {
                    acc += &kq(eta)?.scale(&k?);
                }
            }
            Ok(acc)
        };
        out.push(CheckResult::new("g", params.clone()).routes(vec![
            ("paths", onedsum(n, mu, Kind::Sym, &PathClass::Unrestricted(lc.clone()))),
            ("kostka", expansion(false)),
            ("fermionic", ff_unrestricted_sym(n, &lc, mu)),
        ]));
        if antisym {
            out.push(CheckResult::new("g'", params).routes(vec![
                ("paths", onedsum(n, mu, Kind::Antisym, &PathClass::Unrestricted(lc.clone()))),
                ("kostka", expansion(true)),
                ("fermionic", ff_unrestricted_antisym(n, &lc, mu)),
            ]));
        }
    }
    for lam in partitions_bounded(size, n, size) {
        let params = format!("n={n} mu={mu} lambda={lam}");
        let k = kq(&lam);
        out.push(CheckResult::new("X", params.clone()).routes(vec![
            ("paths", onedsum(n, mu, Kind::Sym, &PathClass::Classical(lam.clone()))),
            ("charge", k.clone()),
            ("rigged", ff_kostka(n, &lam, mu)),
        ]));
        out.push(CheckResult::new("kostka-at-one", params.clone()).routes(vec![
            ("charge", k.map(|p| p.eval_at_one())),
            ("tableaux", kostka_number(&lam, &mu_c)),
        ]));
        if antisym {
            let lt = lam.conjugate();
            out.push(CheckResult::new("X'", params).routes(vec![
                ("paths", onedsum(n, mu, Kind::Antisym, &PathClass::Classical(lam.clone()))),
                ("charge", kq(&lt)),
                ("rigged", ff_kostka_dual(n, &lt, mu)),
            ]));
        }
    }
    out
}

pub(super) fn fermionic_jobs(b: &Bounds) -> Vec<Job> {
    let b = *b;
    let mut jobs = Vec::new();
    for n in 2..=b.max_n {
        jobs.push(job(move || large_level(n, &b)));
        for size in 1..=b.max_mu {
            jobs.push(job(move || widened(n, size)));
        }
        for l in 1..=b.max_level {
            jobs.push(job(move || level_forms(n, l, &b)));
            for r in 0..n {
                jobs.push(job(move || tensor_single(n, l, r, b.order)));
            }
        }
        jobs.push(job(move || permutation(n, b.order)));
        jobs.push(job(move || general_type_a(n, b.order)));
        jobs.push(job(move || product_type_a(n, b.order)));
        for l in 1..=b.max_level.min(2) {
            jobs.push(job(move || spinon_truncation(n, l, b.order)));
        }
    }
    jobs.push(job1(move || rsos_closed_form(b.order)));
    jobs
}

/// Once `l` exceeds every part the level truncation is void.
fn large_level(n: usize, b: &Bounds) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for size in (n..=b.max_mu).step_by(n) {
        for mu in partitions_of(size) {
            let lam = Partition::rectangle(size / n, n);
            out.push(
                CheckResult::new("F_l-large-level", format!("n={n} l={size} mu={mu}"))
                    .routes(vec![("F_l", f_l(n, size, &mu)), ("kostka", ff_kostka(n, &lam, &mu))]),
            );
        }
        for eta in partitions_bounded(size, size, n - 1) {
            let xi = Partition::rectangle(n, size / n);
            out.push(
                CheckResult::new("F_l'-large-level", format!("n={n} l={} eta={eta}", size + 1)).routes(vec![
                    ("F_l'", f_l_prime(n, size + 1, &eta)),
                    ("kostka", ff_kostka_dual(n, &xi, &eta)),
                ]),
            );
        }
    }
    out
}

/// Checking vacancy numbers further out does not change the rigged sums.
fn widened(n: usize, size: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for mu in partitions_of(size) {
        for lam in partitions_bounded(size, n, size) {
            out.push(
                CheckResult::new("rigged-window", format!("n={n} lambda={lam} mu={mu}"))
                    .routes(vec![("plain", ff_kostka(n, &lam, &mu)), ("widened", ff_kostka_widened(n, &lam, &mu, 5))]),
            );
        }
    }
    for eta in partitions_bounded(size, size, n - 1) {
        for xi in partitions_bounded(size, size, n) {
            out.push(
                CheckResult::new("rigged-dual-window", format!("n={n} xi={xi} eta={eta}")).routes(vec![
                    ("plain", ff_kostka_dual(n, &xi, &eta)),
                    ("widened", ff_kostka_dual_widened(n, &xi, &eta, 5)),
                ]),
            );
        }
    }
    out
}

/// `F_l`, `F_l'` and `F^(l,r)'` at level `l`: nonnegativity, the reduction
/// `F^(l,0)'_{eta,∅} = F_l'`, and the count of non-integral vacancies.
fn level_forms(n: usize, l: usize, b: &Bounds) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let nonneg = |name: &str, params: String, p: Result<LaurentPoly>| {
        let c = CheckResult::new(name, params);
        match p {
            Ok(p) => c.holds(p.has_nonnegative_coeffs(), &p, "nonnegative coefficients"),
            Err(e) => c.error(e),
        }
    };
    for size in (n..=b.max_mu).step_by(n) {
        for mu in partitions_bounded(size, size, l) {
            out.push(nonneg("F_l-nonnegative", format!("n={n} l={l} mu={mu}"), f_l(n, l, &mu)));
        }
        for eta in partitions_bounded(size, size, n - 1) {
            let params = format!("n={n} l={l} eta={eta}");
            out.push(nonneg("F_l'-nonnegative", params.clone(), f_l_prime(n, l, &eta)));
            out.push(CheckResult::new("F_lr'-reduces", params).routes(vec![
                ("F_l'", f_l_prime(n, l, &eta)),
                ("F_l0'", f_lr_prime(n, l, 0, &eta, &Partition::empty())),
            ]));
        }
    }
    let mut nonintegral = 0;
    let mut configurations = 0;
    let mut errors = Vec::new();
    for r in 0..n {
        for msize in 0..l.min(3) {
            for mu in partitions_bounded(msize, msize, l - 1) {
                for esize in 1..=b.max_mu {
                    if (esize + n - (msize + l * r) % n) % n != 0 {
                        continue;
                    }
                    for eta in partitions_bounded(esize, esize, n - 1) {
                        let params = format!("n={n} l={l} r={r} eta={eta} mu={mu}");
                        match f_lr_prime_with_stats(n, l, r, &eta, &mu) {
                            Ok((p, s)) => {
                                nonintegral += s.nonintegral_vacancies;
                                configurations += s.configurations;
                                out.push(nonneg("F_lr'-nonnegative", params, Ok(p)));
                            }
                            Err(e) => errors.push(format!("{params}: {e}")),
                        }
                    }
                }
            }
        }
    }
    let c = CheckResult::new("F_lr'-vacancy-census", format!("n={n} l={l} |eta|<={}", b.max_mu))
        .weight(crate::harness::Weight::Report);
    out.push(if errors.is_empty() {
        c.holds(true, format!("{configurations} configurations"), format!("{nonintegral} with a non-integral vacancy"))
    } else {
        c.error(errors.join("; "))
    });
    out
}

/// A single tensor factor is the single string function.
fn tensor_single(n: usize, l: usize, r: usize, order: i64) -> Vec<CheckResult> {
    let nu = Partition::empty();
    let mut out = Vec::new();
    for size in 0..=n {
        for lam in compositions(size, n) {
            let lc = comp(&lam);
            let params = format!("n={n} l={l} r={r} lambda={}", fmt_comp(&lam));
            out.push(CheckResult::new("tensor-one-factor", params.clone()).routes(vec![
                ("single", string_series_single(n, l, r, &nu, &lc, order)),
                ("tensor", string_series_tensor(n, &[(l, r)], &lc, order)),
            ]));
            out.push(CheckResult::new("tensor-one-factor-shift", params).routes(vec![
                ("single", Ok::<_, String>(delta_single(n, l, r, &nu, &lc))),
                ("tensor", Ok(delta_tensor(n, &[(l, r)], &lc))),
            ]));
        }
    }
    out
}

/// Reordering the factors changes only the normalizing power of `q`.
fn permutation(n: usize, order: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let factors: Vec<(usize, usize)> = (1..=2).flat_map(|l| (0..n).map(move |r| (l, r))).collect();
    for (i, &f1) in factors.iter().enumerate() {
        for &f2 in &factors[i + 1..] {
            for size in 0..=n {
                for lam in compositions(size, n) {
                    let lc = comp(&lam);
                    let params = format!("n={n} factors={f1:?},{f2:?} lambda={}", fmt_comp(&lam));
                    let norm = |parts: [(usize, usize); 2]| -> Result<QSeries> {
                        let s = string_series_tensor(n, &parts, &lc, order + 2)?;
                        Ok(s.shift(&-delta_tensor(n, &parts, &lc)))
                    };
                    let c = CheckResult::new("tensor-permutation", params);
                    out.push(match (norm([f1, f2]), norm([f2, f1])) {
                        (Ok(a), Ok(b)) => {
                            let upto = a.order().min(b.order()).min(order);
                            c.holds(a.agrees_with(&b, upto), a.truncate(upto), b.truncate(upto))
                        }
                        (Err(e), _) | (_, Err(e)) => c.error(e),
                    });
                }
            }
        }
    }
    out
}

/// Simple-root coordinates of `lambda - (|lambda|/n)(1^n)`, if integral.
fn root_coords(lam: &[usize]) -> Option<Vec<i64>> {
    let n = lam.len();
    let size: usize = lam.iter().sum();
    if size % n != 0 {
        return None;
    }
    let avg = (size / n) as i64;
    Some(
        (1..n)
            .map(|a| lam[..a].iter().map(|&x| x as i64 - avg).sum())
            .collect(),
    )
}

fn level_lists() -> Vec<Vec<usize>> {
    vec![vec![1], vec![2], vec![3], vec![1, 1], vec![1, 2], vec![2, 1], vec![1, 1, 1]]
}

/// The general form on type A data reproduces the tensor string functions.
fn general_type_a(n: usize, order: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let datum = match CartanDatum::type_a(n - 1) {
        Ok(d) => d,
        Err(e) => return vec![CheckResult::new("general-type-a", format!("n={n}")).error(e)],
    };
    for levels in level_lists() {
        let parts: Vec<(usize, usize)> = levels.iter().map(|&x| (x, 0)).collect();
        for size in [0, n] {
            for lam in compositions(size, n) {
                let Some(root) = root_coords(&lam) else { continue };
                out.push(
                    CheckResult::new("general-type-a", format!("n={n} levels={levels:?} lambda={}", fmt_comp(&lam)))
                        .routes(vec![
                            ("general", general_string_series(&datum, &levels, &root, order)),
                            ("tensor", string_series_tensor(n, &parts, &comp(&lam), order)),
                        ]),
                );
            }
        }
    }
    out
}

/// Two-factor general form against the product of one-factor forms.
pub(super) fn product_check(
    datum: &CartanDatum,
    label: &str,
    l1: usize,
    l2: usize,
    root: &[i64],
    order: i64,
) -> CheckResult {
    let c = CheckResult::new("product-construction", format!("{label} l1={l1} l2={l2} lambda={root:?}"));
    match (
        general_string_series(datum, &[l1, l2], root, order),
        general_string_series_by_product(datum, l1, l2, root, order),
    ) {
        (Ok(a), Ok(b)) => {
            let upto = a.order().min(b.order());
            c.holds(a.agrees_with(&b, upto), a, b)
        }
        (Err(e), _) | (_, Err(e)) => c.error(e),
    }
}

/// Small root-lattice weights: zero and the simple roots.
pub(super) fn small_roots(rank: usize) -> Vec<Vec<i64>> {
    let mut v = vec![vec![0; rank]];
    for a in 0..rank {
        let mut e = vec![0; rank];
        e[a] = 1;
        v.push(e);
    }
    v
}

fn product_type_a(n: usize, order: i64) -> Vec<CheckResult> {
    let datum = match CartanDatum::type_a(n - 1) {
        Ok(d) => d,
        Err(e) => return vec![CheckResult::new("product-construction", format!("n={n}")).error(e)],
    };
    let mut out = Vec::new();
    for (l1, l2) in [(1, 1), (1, 2), (2, 1)] {
        for root in small_roots(n - 1) {
            out.push(product_check(&datum, &format!("A{}", n - 1), l1, l2, &root, order.min(5)));
        }
    }
    out
}

/// The eta truncation of the spinon sum does not depend on the order asked for.
fn spinon_truncation(n: usize, l: usize, order: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for size in (0..=4).filter(|s| s % n == 0) {
        for lam in partitions_bounded(size, n - 1, size) {
            let c = CheckResult::new("spinon-truncation", format!("n={n} l={l} lambda={lam}"));
            out.push(match (spinon_branching_series(n, l, &lam, order), spinon_branching_series(n, l, &lam, order + 3)) {
                (Ok(a), Ok(b)) => {
                    let b = b.truncate(order);
                    c.holds(a == b, a, b)
                }
                (Err(e), _) | (_, Err(e)) => c.error(e),
            });
        }
    }
    out
}

/// `n = 2`, `l = 2`: the sum over even `zeta` of `q^{zeta^2/2}/(q)_zeta`.
fn rsos_closed_form(order: i64) -> CheckResult {
    let mut want = LaurentPoly::zero();
    let mut z = 0i64;
    while z * z / 2 <= order {
        want += &inv_qpochhammer_dense(z as usize, order).to_laurent().shift(&rat_int(z * z / 2));
        z += 2;
    }
    let want = QSeries::from_poly(&want.truncate(&rat_int(order)), order);
    CheckResult::new("rsos-closed-form", format!("n=2 l=2 t=1 order={order}"))
        .routes(vec![("spinon", rsos_spinon_series(2, 2, 1, order)), ("closed form", want)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_weights() {
        assert_eq!(root_coords(&[2, 1, 0]), Some(vec![1, 1]));
        assert_eq!(root_coords(&[1, 1, 1]), Some(vec![0, 0]));
        assert_eq!(root_coords(&[1, 0]), None);
    }
}
