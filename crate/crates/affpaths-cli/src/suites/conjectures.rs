//! Conjectured identities, reported without affecting the exit status, and
//! observations on the ground state energy.

use affpaths::combinatorics::{partitions_bounded, Composition, Partition};
use affpaths::crystal::Kind;
use affpaths::energy::{energy, ground_state_energy, ground_state_path};
use affpaths::fermionic::{
    f_l, f_l_prime, f_lr_prime, general_string_series, spinon_series_residue, string_series_tensor,
    CartanDatum,
};
use affpaths::limits::{stabilized_limit, LadderConfig, LimitClass};
use affpaths::paths::{hw_restricted_sum, onedsum, PathClass};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::identities::{product_check, small_roots};
use super::{compositions, fmt_comp};
use crate::harness::{job, job1, Bounds, CheckResult, Job, Weight};

pub(super) fn jobs(b: &Bounds) -> Vec<Job> {
    let b = *b;
    let mut jobs = Vec::new();
    for n in 2..=b.max_n {
        for l in 1..=b.max_level {
            jobs.push(job(move || rsos_forms(n, l, b.max_mu)));
        }
    }
    jobs.push(job1(|| {
        let eta = Partition::from_unsorted(vec![2, 2, 1, 1]);
        let mu = Partition::from_unsorted(vec![2, 1]);
        generalized(3, 3, 1, &eta, &mu)
    }));
    for (n, l, r, eta, mu) in generalized_grid(&b) {
        jobs.push(job1(move || generalized(n, l, r, &eta, &mu)));
    }
    for n in 2..=b.max_n {
        jobs.push(job(move || general_vs_tensor(n, b.order)));
    }
    jobs.push(job(move || products(b.order.min(5))));
    let cfg = LadderConfig { max_steps: b.ladder_steps };
    for n in 2..=b.max_n {
        for l in 1..=b.max_level.min(2) {
            for r in 1..n {
                for size in 0..=4 {
                    if (size + n * l * r - l * r) % n != 0 {
                        continue;
                    }
                    for lam in partitions_bounded(size, n, size) {
                        jobs.push(job1(move || spinon_residue(n, l, r, &lam, b.order, cfg)));
                    }
                }
            }
        }
    }
    for n in 2..=b.max_n {
        for l in 1..=b.max_level {
            for r in 0..n {
                jobs.push(job1(move || ground_energy_report(n, l, r)));
            }
        }
    }
    jobs
}

/// Level restricted sums at `l Lambda_0` against `F_l` and `F_l'`.
fn rsos_forms(n: usize, l: usize, max_mu: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for size in (n..=max_mu).step_by(n) {
        let lambda = Partition::rectangle(size / n, n);
        for mu in partitions_bounded(size, size, l) {
            let class = PathClass::Restricted { level: l, lambda: lambda.clone() };
            out.push(
                CheckResult::new("rsos-fermionic", format!("n={n} l={l} mu={mu}"))
                    .weight(Weight::Conjecture)
                    .routes(vec![("paths", onedsum(n, &mu, Kind::Sym, &class)), ("F_l", f_l(n, l, &mu))]),
            );
        }
        for eta in partitions_bounded(size, size, n - 1) {
            let class = PathClass::Restricted { level: l, lambda: lambda.clone() };
            out.push(
                CheckResult::new("rsos-fermionic-dual", format!("n={n} l={l} eta={eta}"))
                    .weight(Weight::Conjecture)
                    .routes(vec![
                        ("paths", onedsum(n, &eta, Kind::Antisym, &class)),
                        ("F_l'", f_l_prime(n, l, &eta)),
                    ]),
            );
        }
    }
    out
}

fn generalized(n: usize, l: usize, r: usize, eta: &Partition, mu: &Partition) -> CheckResult {
    CheckResult::new("generalized-restricted", format!("n={n} l={l} r={r} eta={eta} mu={mu}"))
        .weight(Weight::Conjecture)
        .routes(vec![
            ("paths", hw_restricted_sum(n, l, r, mu, eta)),
            ("F_lr'", f_lr_prime(n, l, r, eta, mu)),
        ])
}

/// A seeded sample of admissible `(n, l, r, eta, mu)` with `eta != ∅`.
fn generalized_grid(b: &Bounds) -> Vec<(usize, usize, usize, Partition, Partition)> {
    let mut all = Vec::new();
    for n in 2..=b.max_n {
        for l in 1..=b.max_level {
            for r in 0..n {
                for msize in 0..=3 {
                    for mu in partitions_bounded(msize, msize, l - 1) {
                        for esize in 1..=b.max_mu {
                            if (esize + n * (msize + l * r) - msize - l * r) % n != 0 {
                                continue;
                            }
                            for eta in partitions_bounded(esize, esize, n - 1) {
                                all.push((n, l, r, eta, mu.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let mut pick: Vec<_> = all.choose_multiple(&mut rng, b.samples).cloned().collect();
    pick.sort();
    pick
}

/// The general string function form on type A data against the tensor form.
fn general_vs_tensor(n: usize, order: i64) -> Vec<CheckResult> {
    let datum = match CartanDatum::type_a(n - 1) {
        Ok(d) => d,
        Err(e) => return vec![CheckResult::new("general-string", format!("n={n}")).error(e)],
    };
    let mut out = Vec::new();
    for levels in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
        let parts: Vec<(usize, usize)> = levels.iter().map(|&x| (x, 0)).collect();
        for size in [0, n] {
            for lam in compositions(size, n) {
                let avg = (size / n) as i64;
                let root: Vec<i64> = (1..n).map(|a| lam[..a].iter().map(|&x| x as i64 - avg).sum()).collect();
                out.push(
                    CheckResult::new("general-string", format!("A{} levels={levels:?} lambda={}", n - 1, fmt_comp(&lam)))
                        .weight(Weight::Conjecture)
                        .routes(vec![
                            ("general", general_string_series(&datum, &levels, &root, order)),
                            ("tensor", string_series_tensor(n, &parts, &Composition::new(lam.clone()), order)),
                        ]),
                );
            }
        }
    }
    out
}

/// Two-factor consistency of the general form outside type A.
fn products(order: i64) -> Vec<CheckResult> {
    let data = [
        ("B2", vec![vec![2, -1], vec![-2, 2]], vec![1, 2]),
        ("C2", vec![vec![2, -2], vec![-1, 2]], vec![2, 1]),
        ("G2", vec![vec![2, -1], vec![-3, 2]], vec![1, 3]),
    ];
    let mut out = Vec::new();
    for (label, cartan, t) in data {
        let datum = match CartanDatum::new(cartan, t) {
            Ok(d) => d,
            Err(e) => {
                out.push(CheckResult::new("product-construction", label).weight(Weight::Conjecture).error(e));
                continue;
            }
        };
        for (l1, l2) in [(1, 1), (1, 2)] {
            for root in small_roots(datum.rank()) {
                out.push(product_check(&datum, label, l1, l2, &root, order).weight(Weight::Conjecture));
            }
        }
    }
    out
}

/// Spinon form at `l Lambda_r` against the stabilized classical 1dsums.
fn spinon_residue(n: usize, l: usize, r: usize, lam: &Partition, order: i64, cfg: LadderConfig) -> CheckResult {
    let c = CheckResult::new("spinon-residue", format!("n={n} l={l} r={r} lambda={lam}")).weight(Weight::Conjecture);
    let lc = match Composition::with_len(lam.parts().to_vec(), n) {
        Ok(x) => x,
        Err(e) => return c.error(e),
    };
    match (
        stabilized_limit(n, l, r, &Partition::empty(), LimitClass::Classical, &lc, order, cfg),
        spinon_series_residue(n, l, r, lam, order),
    ) {
        (Ok(st), Ok(s)) => c.holds(st.series.agrees_with(&s, order), st.series, s),
        (Err(e), _) | (_, Err(e)) => c.error(e),
    }
}

/// `Ebar(l Lambda_r, mu)` next to the energy of the finite ground state path,
/// over all `mu` with `mu_1 <= l` and at most `2n` rows of size up to 6.
fn ground_energy_report(n: usize, l: usize, r: usize) -> CheckResult {
    let mut equal = 0;
    let mut total = 0;
    let mut by_rows: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    let mut first_diff = None;
    for size in 1..=6 {
        for mu in partitions_bounded(size, 2 * n, l) {
            let e = ground_state_path(n, &mu).and_then(|p| energy(&p));
            let gs = ground_state_energy(n, l, r, &mu);
            let (Ok(e), Ok(gs)) = (e, gs) else {
                return CheckResult::new("ground-energy", format!("n={n} l={l} r={r}"))
                    .weight(Weight::Report)
                    .error(format!("failed at mu = {mu}"));
            };
            total += 1;
            let entry = by_rows.entry(mu.len() % n).or_default();
            entry.1 += 1;
            if gs == affpaths::qalgebra::rat_int(e) {
                equal += 1;
                entry.0 += 1;
            } else if first_diff.is_none() {
                first_diff = Some(format!("mu={mu}: Ebar={gs} E(ground path)={e}"));
            }
        }
    }
    let rows: Vec<String> = by_rows
        .iter()
        .map(|(k, (eq, all))| format!("rows={k} mod n: {eq}/{all}"))
        .collect();
    CheckResult::new("ground-energy", format!("n={n} l={l} r={r}"))
        .weight(Weight::Report)
        .holds(true, format!("equal in {equal} of {total} shapes"), rows.join(", "))
        .note(first_diff.unwrap_or_default())
}
