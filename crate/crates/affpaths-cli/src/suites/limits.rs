//! Finite-size stabilization against the closed-form limit series.

use affpaths::combinatorics::{partitions_bounded, Composition, Partition};
use affpaths::fermionic::{
    delta_single, delta_tensor, rsos_spinon_series, spinon_branching_series, string_series_single,
    string_series_tensor,
};
use affpaths::limits::{
    stabilized_limit, stabilized_rsos_limit, stabilized_tensor_limit, LadderConfig, LimitClass, RsosSource,
    Stabilized,
};
use affpaths::qalgebra::{QSeries, Rational};
use affpaths::Result;
use num_traits::{Signed, ToPrimitive};

use super::{comp, compositions, fmt_comp, part};
use crate::harness::{job1, Bounds, CheckResult, Job, Weight};

/// `(n, l, r, nu)` of the string function checks.
const STRING_CASES: [(usize, usize, usize, &[usize]); 4] =
    [(2, 1, 0, &[]), (2, 2, 0, &[]), (3, 2, 0, &[]), (2, 2, 1, &[1])];

const BRANCHING_CASES: [(usize, usize); 3] = [(2, 1), (2, 2), (3, 1)];

pub(super) fn jobs(b: &Bounds) -> Vec<Job> {
    let b = *b;
    let cfg = LadderConfig { max_steps: b.ladder_steps };
    let mut jobs = Vec::new();
    for (n, l, r, nu) in STRING_CASES {
        for size in 0..=n {
            for lam in compositions(size, n) {
                if congruent(n, l, r, nu.iter().sum(), size) {
                    jobs.push(job1(move || string_check(n, l, r, &part(nu), &lam, b.order, cfg, Weight::Theorem)));
                }
            }
        }
    }
    // Every residue, not only the listed ones.
    for n in 2..=b.max_n.min(3) {
        for l in 1..=2 {
            for r in 1..n {
                for nu in [vec![], vec![1]] {
                    if nu.first().is_some_and(|&x| x >= l) || (n, l, r, nu.as_slice()) == (2, 2, 1, &[1][..]) {
                        continue;
                    }
                    for size in 0..=n {
                        for lam in compositions(size, n) {
                            let nu = nu.clone();
                            if congruent(n, l, r, nu.iter().sum(), size) {
                                jobs.push(job1(move || {
                                    string_check(n, l, r, &part(&nu), &lam, b.order.min(4), cfg, Weight::Theorem)
                                }));
                            } else {
                                jobs.push(job1(move || congruence_report(n, l, r, &part(&nu), &lam, b.order.min(4), cfg)));
                            }
                        }
                    }
                }
            }
        }
    }
    for (n, parts) in [
        (2, vec![(1, 0), (1, 0)]),
        (2, vec![(1, 1), (1, 0)]),
        (3, vec![(1, 1), (2, 0)]),
        (3, vec![(1, 0), (1, 2)]),
    ] {
        for size in 0..=n {
            for lam in compositions(size, n) {
                let total: usize = parts.iter().map(|&(l, r)| l * r).sum();
                if (size + n - total % n) % n == 0 {
                    let parts = parts.clone();
                    jobs.push(job1(move || tensor_check(n, &parts, &lam, b.order.min(4), cfg)));
                }
            }
        }
    }
    for (n, l) in BRANCHING_CASES {
        for size in (0..=4).filter(|s| s % n == 0) {
            for lam in partitions_bounded(size, n, size) {
                jobs.push(job1(move || branching_check(n, l, &lam, b.order, cfg)));
            }
        }
    }
    for source in [RsosSource::Fermionic, RsosSource::Paths] {
        jobs.push(job1(move || rsos_check(2, 2, 1, source, b.order, cfg)));
    }
    jobs
}

/// `|lambda| = |nu| + l r mod n`.
fn congruent(n: usize, l: usize, r: usize, nu_size: usize, size: usize) -> bool {
    (size + n * (nu_size + l * r) - nu_size - l * r) % n == 0
}

fn ceil_abs(d: &Rational) -> i64 {
    d.abs().ceil().to_integer().to_i64().unwrap_or(0)
}

/// Compares a stabilized series (known through `order`) with `rhs * q^{-d}`.
fn compare(c: CheckResult, st: Result<Stabilized>, rhs: Result<QSeries>, d: &Rational, order: i64) -> CheckResult {
    match (st, rhs) {
        (Ok(st), Ok(f)) => {
            let f = f.shift(&-d.clone());
            let upto = order.min(f.order());
            let note = format!("stabilized at rung {} of sizes {:?}, compared through q^{upto}", st.accepted_at, st.sizes);
            c.holds(st.series.agrees_with(&f, upto), st.series.truncate(upto), f.truncate(upto))
                .note(note)
        }
        (Err(e), _) | (_, Err(e)) => c.error(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn string_check(
    n: usize,
    l: usize,
    r: usize,
    nu: &Partition,
    lam: &[usize],
    order: i64,
    cfg: LadderConfig,
    weight: Weight,
) -> CheckResult {
    let lc = comp(lam);
    let c = CheckResult::new("string-limit", format!("n={n} l={l} r={r} nu={nu} lambda={}", fmt_comp(lam)))
        .weight(weight);
    let d = delta_single(n, l, r, nu, &lc);
    let st = stabilized_limit(n, l, r, nu, LimitClass::Unrestricted, &lc, order, cfg);
    let f = string_series_single(n, l, r, nu, &lc, order + ceil_abs(&d) + 1);
    compare(c, st, f, &d, order)
}

/// When `(|lambda| - |nu| - l r)/n` is fractional the fermionic side is an
/// empty sum; records whether the finite sums vanish as well.
fn congruence_report(n: usize, l: usize, r: usize, nu: &Partition, lam: &[usize], order: i64, cfg: LadderConfig) -> CheckResult {
    let lc = comp(lam);
    let c = CheckResult::new("string-limit-noncongruent", format!("n={n} l={l} r={r} nu={nu} lambda={}", fmt_comp(lam)))
        .weight(Weight::Report);
    match (
        stabilized_limit(n, l, r, nu, LimitClass::Unrestricted, &lc, order, cfg),
        string_series_single(n, l, r, nu, &lc, order),
    ) {
        (Ok(st), Ok(f)) => {
            let zero = |s: &QSeries| s.to_poly().is_zero();
            c.holds(zero(&st.series) && zero(&f), &st.series, &f)
        }
        (Err(e), _) | (_, Err(e)) => c.error(e),
    }
}

fn tensor_check(n: usize, parts: &[(usize, usize)], lam: &[usize], order: i64, cfg: LadderConfig) -> CheckResult {
    let lc = comp(lam);
    let c = CheckResult::new("tensor-limit", format!("n={n} factors={parts:?} lambda={}", fmt_comp(lam)));
    let d = delta_tensor(n, parts, &lc);
    let st = stabilized_tensor_limit(n, parts, &lc, order, cfg);
    let f = string_series_tensor(n, parts, &lc, order + ceil_abs(&d) + 1);
    compare(c, st, f, &d, order)
}

fn branching_check(n: usize, l: usize, lam: &Partition, order: i64, cfg: LadderConfig) -> CheckResult {
    let c = CheckResult::new("branching-limit", format!("n={n} l={l} lambda={lam}"));
    let lc = match Composition::with_len(lam.parts().to_vec(), n) {
        Ok(x) => x,
        Err(e) => return c.error(e),
    };
    let st = stabilized_limit(n, l, 0, &Partition::empty(), LimitClass::Classical, &lc, order, cfg);
    compare(c, st, spinon_branching_series(n, l, lam, order), &Rational::default(), order)
}

fn rsos_check(n: usize, l: usize, t: usize, source: RsosSource, order: i64, cfg: LadderConfig) -> CheckResult {
    let c = CheckResult::new("rsos-limit", format!("n={n} l={l} t={t} source={source:?}"));
    compare(
        c,
        stabilized_rsos_limit(n, l, t, source, order, cfg),
        rsos_spinon_series(n, l, t, order),
        &Rational::default(),
        order,
    )
}
