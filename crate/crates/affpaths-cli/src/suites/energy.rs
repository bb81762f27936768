//! Energy function axioms, checked exhaustively on small crystals and on a
//! seeded random sample of longer paths.

use affpaths::combinatorics::partitions_bounded;
use affpaths::crystal::{all_elements, path_apply, CrystalElement, Kind, Op, Path};
use affpaths::energy::{energy, energy_elines, ground_state_path, local_h_iso, local_h_iso_ordered};
use affpaths::Result;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::harness::{job, Bounds, CheckResult, Job};

/// Tallies a property over many instances, keeping the first witness.
struct Tally {
    name: &'static str,
    params: String,
    cases: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str, params: String) -> Self {
        Self { name, params, cases: 0, witness: None }
    }

    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        if self.witness.is_some() {
            return;
        }
        match ok {
            Ok(true) => {}
            Ok(false) => self.witness = Some(what()),
            Err(e) => self.witness = Some(format!("{}: {e}", what())),
        }
    }

    fn finish(self) -> CheckResult {
        let c = CheckResult::new(self.name, self.params);
        match self.witness {
            None => c.holds(true, format!("{} cases", self.cases), "property holds"),
            Some(w) => c.holds(false, format!("{} cases", self.cases), "property holds").note(format!("witness {w}")),
        }
    }
}

fn kinds(n: usize, max_degree: usize) -> Vec<(Kind, usize)> {
    vec![(Kind::Sym, max_degree), (Kind::Antisym, max_degree.min(n - 1))]
}

pub(super) fn jobs(b: &Bounds) -> Vec<Job> {
    let b = *b;
    let mut jobs = Vec::new();
    for n in 2..=b.max_n {
        for (kind, top) in kinds(n, b.max_degree) {
            jobs.push(job(move || pair_axioms(n, kind, top)));
            for len in 1..=b.max_factors {
                for size in len..=len * top {
                    for mu in partitions_bounded(size, len, top) {
                        if mu.len() == len {
                            jobs.push(job(move || path_axioms(n, kind, mu.parts())));
                        }
                    }
                }
            }
        }
    }
    jobs.push(job(move || random_sample(b.samples, b.seed)));
    jobs
}

fn pair(a: &CrystalElement, b: &CrystalElement) -> Path {
    Path::new(a.kind(), a.n(), vec![a.clone(), b.clone()]).expect("same kind and rank")
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// H under e_i, iota commuting with every operator, independence of the
/// pairing order, and iota = id on equal degrees.
fn pair_axioms(n: usize, kind: Kind, top: usize) -> Vec<CheckResult> {
    let params = format!("n={n} kind={} degrees<={top}", kind.name());
    let mut rec = Tally::new("h-recursion", params.clone());
    let mut comm = Tally::new("iota-commutes", params.clone());
    let mut order = Tally::new("pairing-order", params.clone());
    let mut ident = Tally::new("iota-equal-degrees", params);
    for k in 1..=top {
        for l in 1..=k {
            let (Ok(b1s), Ok(b2s)) = (all_elements(kind, n, k), all_elements(kind, n, l)) else {
                continue;
            };
            for b1 in &b1s {
                for b2 in &b2s {
                    let w = || format!("{b1}⊗{b2}");
                    let r = match local_h_iso(b1, b2) {
                        Ok(r) => r,
                        Err(e) => {
                            rec.check(Err(e), w);
                            continue;
                        }
                    };
                    if k == l {
                        ident.check(Ok(r.left == *b1 && r.right == *b2), w);
                    }
                    let dots: Vec<usize> = b2
                        .coords()
                        .iter()
                        .enumerate()
                        .flat_map(|(row, &x)| std::iter::repeat(row + 1).take(x))
                        .collect();
                    for o in permutations(&dots) {
                        order.check(local_h_iso_ordered(b1, b2, &o).map(|s| s == r), || format!("{} order {o:?}", w()));
                    }
                    let p = pair(b1, b2);
                    let q = pair(&r.left, &r.right);
                    for i in 0..n {
                        for op in [Op::E, Op::F] {
                            let (pe, qe) = (path_apply(op, i, &p), path_apply(op, i, &q));
                            let ok = match (&pe, &qe) {
                                (None, None) => Ok(true),
                                (Some(pe), Some(qe)) => {
                                    let c = pe.components();
                                    local_h_iso(&c[0], &c[1])
                                        .map(|r2| [r2.left, r2.right].as_slice() == qe.components())
                                }
                                _ => Ok(false),
                            };
                            comm.check(ok, || format!("{} op {op:?}_{i}", w()));
                        }
                        let Some(pe) = path_apply(Op::E, i, &p) else { continue };
                        let expected = if i != 0 {
                            r.h
                        } else {
                            let left_p = b1.phi(0) >= b2.epsilon(0);
                            let left_q = r.left.phi(0) >= r.right.epsilon(0);
                            match (left_p, left_q) {
                                (true, true) => r.h + 1,
                                (false, false) => r.h - 1,
                                _ => r.h,
                            }
                        };
                        let c = pe.components();
                        rec.check(local_h_iso(&c[0], &c[1]).map(|x| x.h == expected), || {
                            format!("{} e_{i}", w())
                        });
                    }
                }
            }
        }
    }
    vec![rec.finish(), comm.finish(), order.finish(), ident.finish()]
}

fn all_paths(kind: Kind, n: usize, shape: &[usize]) -> Result<Vec<Path>> {
    let mut out: Vec<Vec<CrystalElement>> = vec![Vec::new()];
    for &d in shape {
        let elems = all_elements(kind, n, d)?;
        out = out
            .iter()
            .flat_map(|p| {
                elems.iter().map(move |b| {
                    let mut q = p.clone();
                    q.push(b.clone());
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Path::new(kind, n, c)).collect()
}

/// Condition on `b_1`: whenever e_0 acts on the right of `b_1 ⊗ b_j`, it
/// also acts on the right after the isomorphism.
fn first_factor_condition(b1: &CrystalElement, others: &[usize]) -> Result<bool> {
    for &d in others {
        for bj in all_elements(b1.kind(), b1.n(), d)? {
            let p = pair(b1, &bj);
            let Some(q) = path_apply(Op::E, 0, &p) else { continue };
            if q.components()[0] != *b1 {
                continue;
            }
            let r = local_h_iso(b1, &bj)?;
            let rq = path_apply(Op::E, 0, &pair(&r.left, &r.right));
            if rq.map(|x| x.components()[0] == r.left) != Some(true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Line rule against pairwise energies, invariance under e_i (i != 0), the
/// e_0 step, and minimality of the ground state.
fn path_axioms(n: usize, kind: Kind, shape: &[usize]) -> Vec<CheckResult> {
    let params = format!("n={n} kind={} shape={}", kind.name(), super::fmt_comp(shape));
    let mut lines = Tally::new("line-rule", params.clone());
    let mut inv = Tally::new("classical-invariance", params.clone());
    let mut drop = Tally::new("e0-step", params.clone());
    let mut ground = Tally::new("ground-state-minimal", params.clone());
    let paths = match all_paths(kind, n, shape) {
        Ok(p) => p,
        Err(e) => return vec![CheckResult::new("line-rule", params).error(e)],
    };
    let mut cond_cache = std::collections::HashMap::new();
    let e_ground = if kind == Kind::Sym {
        affpaths::combinatorics::Partition::new(shape.to_vec())
            .and_then(|mu| ground_state_path(n, &mu))
            .and_then(|g| energy(&g))
            .ok()
    } else {
        None
    };
    for p in &paths {
        let w = || p.to_string();
        let e = match energy(p) {
            Ok(e) => e,
            Err(err) => {
                lines.check(Err(err), w);
                continue;
            }
        };
        lines.check(energy_elines(p).map(|x| x.0 == e), w);
        if let Some(g) = e_ground {
            ground.check(Ok(e >= g), || format!("{p} E={e} ground={g}"));
        }
        for i in 1..n {
            for op in [Op::E, Op::F] {
                if let Some(q) = path_apply(op, i, p) {
                    inv.check(energy(&q).map(|x| x == e), || format!("{p} {op:?}_{i}"));
                }
            }
        }
        let Some(q) = path_apply(Op::E, 0, p) else { continue };
        let Some(k) = (0..p.len()).find(|&k| p.components()[k] != q.components()[k]) else { continue };
        if k == 0 {
            continue;
        }
        let b1 = &p.components()[0];
        let cond = *cond_cache
            .entry(b1.clone())
            .or_insert_with(|| first_factor_condition(b1, &shape[1..]).unwrap_or(false));
        if cond {
            drop.check(energy(&q).map(|x| x == e - 1), || format!("{p} -> {q}"));
        }
    }
    let mut out = vec![lines.finish(), inv.finish(), drop.finish()];
    if kind == Kind::Sym {
        out.push(ground.finish());
    }
    out
}

/// Random paths beyond the exhaustive range, reproducible from the seed.
fn random_sample(samples: usize, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = format!("samples={samples} seed={seed} n<=5 factors<=8 degrees<=4");
    let mut lines = Tally::new("random-line-rule", params.clone());
    let mut inv = Tally::new("random-classical-invariance", params.clone());
    let mut ground = Tally::new("random-ground-state-minimal", params);
    for _ in 0..samples {
        let n = rng.gen_range(2..=5);
        let kind = if rng.gen_bool(0.5) { Kind::Sym } else { Kind::Antisym };
        let top = if kind == Kind::Sym { 4 } else { n - 1 };
        let m = rng.gen_range(1..=8);
        let mut degrees: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=top)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let comps: Result<Vec<CrystalElement>> = degrees
            .iter()
            .map(|&d| {
                let all = all_elements(kind, n, d)?;
                Ok(all.choose(&mut rng).expect("nonempty crystal").clone())
            })
            .collect();
        let p = match comps.and_then(|c| Path::new(kind, n, c)) {
            Ok(p) => p,
            Err(e) => {
                lines.check(Err(e), String::new);
                continue;
            }
        };
        let e = match energy(&p) {
            Ok(e) => e,
            Err(err) => {
                lines.check(Err(err), || p.to_string());
                continue;
            }
        };
        lines.check(energy_elines(&p).map(|x| x.0 == e), || p.to_string());
        let i = rng.gen_range(1..n);
        let op = if rng.gen_bool(0.5) { Op::E } else { Op::F };
        if let Some(q) = path_apply(op, i, &p) {
            inv.check(energy(&q).map(|x| x == e), || format!("{p} {op:?}_{i}"));
        }
        if kind == Kind::Sym {
            let g = affpaths::combinatorics::Partition::new(degrees.clone())
                .and_then(|mu| ground_state_path(n, &mu))
                .and_then(|g| energy(&g));
            ground.check(g.map(|g| e >= g), || format!("{p} E={e}"));
        }
    }
    vec![lines.finish(), inv.finish(), ground.finish()]
}
