//! The worked examples: one energy computation, the two path tables, the
//! Kostka and chain tables built on them, and the generalized restricted sum.

use std::time::Instant;

use affpaths::combinatorics::{kostka_foulkes, kostka_number, Partition};
use affpaths::crystal::{Kind, Path};
use affpaths::energy::{energy, energy_elines, energy_terms};
use affpaths::fermionic::{
    f_lr_prime_with_stats, ff_kostka, ff_kostka_dual, ff_unrestricted_antisym,
    ff_unrestricted_antisym_terms, ff_unrestricted_sym, ff_unrestricted_sym_terms,
};
use affpaths::paths::{
    enumerate_paths, hw_restricted_sum, hw_set, onedsum, onedsum_by_enumeration, partition_for_weight,
    PathClass,
};
use affpaths::qalgebra::{qbinomial, LaurentPoly};

use super::{comp, part};
use crate::harness::{job, CheckResult, Job};

/// `(path, E, classical, restricted)` for `n = 3`, `mu = (2211)`, `lambda = (321)`.
const SYM_TABLE: [(&str, i64, bool, bool); 24] = [
    ("11⊗12⊗2⊗3", 3, true, false),
    ("11⊗12⊗3⊗2", 2, true, false),
    ("11⊗13⊗2⊗2", 4, false, false),
    ("11⊗22⊗1⊗3", 2, true, false),
    ("11⊗22⊗3⊗1", 1, true, true),
    ("11⊗23⊗1⊗2", 2, false, false),
    ("11⊗23⊗2⊗1", 3, false, false),
    ("12⊗11⊗2⊗3", 4, false, false),
    ("12⊗11⊗3⊗2", 5, false, false),
    ("12⊗12⊗1⊗3", 3, false, false),
    ("12⊗12⊗3⊗1", 2, false, false),
    ("12⊗13⊗1⊗2", 3, false, false),
    ("12⊗13⊗2⊗1", 4, false, false),
    ("12⊗23⊗1⊗1", 3, false, false),
    ("13⊗11⊗2⊗2", 5, false, false),
    ("13⊗12⊗1⊗2", 3, false, false),
    ("13⊗12⊗2⊗1", 4, false, false),
    ("13⊗22⊗1⊗1", 4, false, false),
    ("22⊗11⊗1⊗3", 6, false, false),
    ("22⊗11⊗3⊗1", 5, false, false),
    ("22⊗13⊗1⊗1", 4, false, false),
    ("23⊗11⊗1⊗2", 6, false, false),
    ("23⊗11⊗2⊗1", 5, false, false),
    ("23⊗12⊗1⊗1", 7, false, false),
];

/// Same for `B_(1^k)`, `mu = (2221)`, `lambda = (322)`, level 1.
const ANTISYM_TABLE: [(&str, i64, bool, bool); 12] = [
    ("12⊗12⊗13⊗3", -2, true, false),
    ("12⊗13⊗12⊗3", -3, true, false),
    ("12⊗13⊗13⊗2", -3, false, false),
    ("12⊗13⊗23⊗1", -4, true, true),
    ("12⊗23⊗13⊗1", -2, false, false),
    ("13⊗12⊗12⊗3", -1, false, false),
    ("13⊗12⊗13⊗2", -2, false, false),
    ("13⊗12⊗23⊗1", -1, false, false),
    ("13⊗13⊗12⊗2", 0, false, false),
    ("13⊗23⊗12⊗1", -2, false, false),
    ("23⊗12⊗13⊗1", -1, false, false),
    ("23⊗13⊗12⊗1", 0, false, false),
];

fn poly(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, c)
}

pub(super) fn jobs() -> Vec<Job> {
    vec![
        job(energy_example),
        job(|| path_table(Kind::Sym, &[2, 2, 1, 1], &[3, 2, 1], 2, &SYM_TABLE, "sym-paths")),
        job(|| path_table(Kind::Antisym, &[2, 2, 2, 1], &[3, 2, 2], 1, &ANTISYM_TABLE, "antisym-paths")),
        job(onedsum_examples),
        job(kostka_tables),
        job(chain_tables),
        job(generalized_restricted),
    ]
}

fn energy_example() -> Vec<CheckResult> {
    let params = "n=3 p=(1,0,2)⊗(0,2,0)⊗(0,1,1)⊗(0,1,0)";
    let p = match Path::from_coords(
        Kind::Sym,
        &[vec![1, 0, 2], vec![0, 2, 0], vec![0, 1, 1], vec![0, 1, 0]],
    ) {
        Ok(p) => p,
        Err(e) => return vec![CheckResult::new("energy-example", params).error(e)],
    };
    let start = Instant::now();
    let by_pairs = energy(&p);
    let by_lines = energy_elines(&p).map(|x| x.0);
    let micros = start.elapsed().as_micros();
    let per_j = energy_terms(&p).map(|t| {
        let v: Vec<i64> = t.iter().map(|r| r.iter().sum()).collect();
        format!("{v:?}")
    });
    vec![
        CheckResult::new("energy-example", params)
            .routes(vec![("pairwise", by_pairs), ("lines", by_lines), ("expected", Ok(4))])
            .note(format!("both algorithms took {micros} us")),
        CheckResult::new("energy-example-terms", params).expect(per_j, "[0, 1, 2, 1]".to_string()),
    ]
}

fn listing(kind: Kind, mu: &Partition, class: &PathClass) -> Result<String, affpaths::Error> {
    let mut v: Vec<String> = enumerate_paths(3, mu, kind, class)?
        .into_iter()
        .map(|(p, e)| format!("{p}:{e}"))
        .collect();
    v.sort();
    Ok(v.join(" "))
}

fn path_table(
    kind: Kind,
    mu: &[usize],
    lambda: &[usize],
    level: usize,
    table: &[(&str, i64, bool, bool)],
    name: &str,
) -> Vec<CheckResult> {
    let mu = part(mu);
    let lam = part(lambda);
    let params = format!("n=3 kind={} mu={mu} lambda={lam} level={level}", kind.name());
    let want = |pick: &dyn Fn(&(&str, i64, bool, bool)) -> bool| -> String {
        let mut v: Vec<String> = table
            .iter()
            .filter(|r| pick(r))
            .map(|r| format!("{}:{}", r.0, r.1))
            .collect();
        v.sort();
        v.join(" ")
    };
    let classes = [
        ("unrestricted", PathClass::Unrestricted(comp(lambda)), want(&|_| true)),
        ("classical", PathClass::Classical(lam.clone()), want(&|r| r.2)),
        (
            "restricted",
            PathClass::Restricted { level, lambda: lam.clone() },
            want(&|r| r.3),
        ),
    ];
    let start = Instant::now();
    let mut out: Vec<CheckResult> = classes
        .iter()
        .map(|(label, class, w)| {
            let count = w.split(' ').filter(|s| !s.is_empty()).count();
            CheckResult::new(&format!("{name}-{label}"), params.clone())
                .expect(listing(kind, &mu, class), w.clone())
                .note(format!("{count} paths"))
        })
        .collect();
    let ms = start.elapsed().as_secs_f64() * 1e3;
    out.push(
        CheckResult::new(&format!("{name}-time"), params).holds(
            ms < 1000.0,
            format!("{ms:.2} ms"),
            "< 1000 ms",
        ),
    );
    out
}

fn onedsum_examples() -> Vec<CheckResult> {
    let mu = part(&[2, 2, 1, 1]);
    let lam = comp(&[3, 2, 1]);
    let g = poly(1, &[1, 4, 6, 6, 4, 2, 1]);
    let kk = || -> Result<LaurentPoly, affpaths::Error> {
        let mut acc = LaurentPoly::zero();
        for eta in affpaths::combinatorics::partitions_bounded(6, 3, 6) {
            acc += &kostka_foulkes(&eta, &comp(mu.parts()))?.scale(&kostka_number(&eta, &lam)?);
        }
        Ok(acc)
    };
    let sym = CheckResult::new("g-example", "n=3 mu=(2,2,1,1) lambda=(3,2,1)").routes(vec![
        ("paths", onedsum(3, &mu, Kind::Sym, &PathClass::Unrestricted(lam.clone()))),
        ("enumeration", onedsum_by_enumeration(3, &mu, Kind::Sym, &PathClass::Unrestricted(lam.clone()))),
        ("kostka", kk()),
        ("fermionic", ff_unrestricted_sym(3, &lam, &mu)),
        ("expected", Ok(g)),
    ]);
    let mu = part(&[2, 2, 2, 1]);
    let lam = comp(&[3, 2, 2]);
    let g = poly(0, &[2, 3, 4, 2, 1]);
    let kk = || -> Result<LaurentPoly, affpaths::Error> {
        let mut acc = LaurentPoly::zero();
        for eta in affpaths::combinatorics::partitions_bounded(7, 7, 3) {
            acc += &kostka_foulkes(&eta, &comp(mu.parts()))?
                .scale(&kostka_number(&eta.conjugate(), &lam)?);
        }
        Ok(acc)
    };
    let anti = CheckResult::new("g'-example", "n=3 mu=(2,2,2,1) lambda=(3,2,2)").routes(vec![
        ("paths", onedsum(3, &mu, Kind::Antisym, &PathClass::Unrestricted(lam.clone()))),
        ("enumeration", onedsum_by_enumeration(3, &mu, Kind::Antisym, &PathClass::Unrestricted(lam.clone()))),
        ("kostka", kk()),
        ("fermionic", ff_unrestricted_antisym(3, &lam, &mu)),
        ("expected", Ok(g)),
    ]);
    vec![sym, anti]
}

fn kostka_tables() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sym: [(&[usize], i64, LaurentPoly); 6] = [
        (&[6], 1, poly(7, &[1])),
        (&[5, 1], 2, poly(4, &[1, 1, 1])),
        (&[4, 2], 2, poly(3, &[2, 1, 1])),
        (&[4, 1, 1], 1, poly(2, &[1, 1, 1])),
        (&[3, 3], 1, poly(2, &[1, 0, 1])),
        (&[3, 2, 1], 1, poly(1, &[1, 2, 1])),
    ];
    let mu = part(&[2, 2, 1, 1]);
    for (eta, k, kq) in sym {
        let eta = part(eta);
        let params = format!("eta={eta} lambda=(3,2,1) mu={mu}");
        out.push(
            CheckResult::new("kostka-table-number", params.clone())
                .expect(kostka_number(&eta, &comp(&[3, 2, 1])), k.into()),
        );
        out.push(CheckResult::new("kostka-table-polynomial", params).routes(vec![
            ("charge", kostka_foulkes(&eta, &comp(mu.parts()))),
            ("rigged", ff_kostka(3, &eta, &mu)),
            ("expected", Ok(kq)),
        ]));
    }
    let anti: [(&[usize], i64, LaurentPoly); 4] = [
        (&[3, 3, 1], 1, poly(2, &[1, 1, 1])),
        (&[3, 2, 2], 1, poly(1, &[1, 1, 1])),
        (&[3, 2, 1, 1], 2, poly(1, &[1, 1])),
        (&[2, 2, 2, 1], 2, poly(0, &[1])),
    ];
    let mu = part(&[2, 2, 2, 1]);
    for (eta, k, kq) in anti {
        let eta = part(eta);
        let params = format!("eta={eta} lambda=(3,2,2) mu={mu}");
        out.push(
            CheckResult::new("kostka-dual-table-number", params.clone())
                .expect(kostka_number(&eta.conjugate(), &comp(&[3, 2, 2])), k.into()),
        );
        out.push(CheckResult::new("kostka-dual-table-polynomial", params).routes(vec![
            ("charge", kostka_foulkes(&eta, &comp(mu.parts()))),
            ("rigged", ff_kostka_dual(3, &eta, &mu)),
            ("expected", Ok(kq)),
        ]));
    }
    out
}

fn sorted_terms(
    r: Result<Vec<(Vec<Partition>, LaurentPoly)>, affpaths::Error>,
    top: &Partition,
) -> Result<String, String> {
    let terms = r.map_err(|e| e.to_string())?;
    if let Some((c, _)) = terms.iter().find(|(c, _)| c.last() != Some(top)) {
        return Err(format!("chain ends at {:?}", c.last()));
    }
    let mut v: Vec<LaurentPoly> = terms.into_iter().map(|(_, t)| t).collect();
    v.sort();
    Ok(v.iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" "))
}

fn chain_tables() -> Vec<CheckResult> {
    let b = qbinomial;
    let q = LaurentPoly::q_pow;
    let mut want = vec![
        &q(4) * &b(2, 1),
        &(&q(3) * &b(4, 3)) * &b(2, 1),
        &(&q(2) * &b(3, 1)) * &b(2, 1),
        &(&q(1) * &b(2, 1)) * &(&b(2, 1) * &b(2, 1)),
    ];
    want.sort();
    let text = |v: &[LaurentPoly]| v.iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" ");
    let sym = CheckResult::new("chain-terms-sym", "n=3 lambda=(3,2,1) mu=(2,2,1,1) nu3=(4,2)").expect(
        sorted_terms(ff_unrestricted_sym_terms(3, &comp(&[3, 2, 1]), &part(&[2, 2, 1, 1])), &part(&[4, 2])),
        text(&want),
    );
    let mut want = vec![b(3, 2), &b(3, 2) * &b(3, 1)];
    want.sort();
    let anti = CheckResult::new("chain-terms-antisym", "n=3 lambda=(3,2,2) mu=(2,2,2,1) nu3=(4,3)").expect(
        sorted_terms(
            ff_unrestricted_antisym_terms(3, &comp(&[3, 2, 2]), &part(&[2, 2, 2, 1])),
            &part(&[4, 3]),
        ),
        text(&want),
    );
    vec![sym, anti]
}

fn generalized_restricted() -> Vec<CheckResult> {
    let (n, l, r) = (3, 3, 1);
    let mu = part(&[2, 1]);
    let eta = part(&[2, 2, 1, 1]);
    let params = "n=3 l=3 r=1 eta=(2,2,1,1) mu=(2,1)";
    let mut out = Vec::new();
    let set = hw_set(n, l, r, &mu).map(|h| {
        let v: Vec<String> = h.iter().map(|e| format!("{}:{}:{}", e.path, e.energy, e.weight)).collect();
        v.join(" ")
    });
    out.push(
        CheckResult::new("hw-set", params).expect(set, "22⊗3:0:Λ0+Λ1+Λ2 22⊗2:1:3Λ2".to_string()),
    );
    // Restricted antisymmetric paths for each highest weight.
    let rows = [
        (vec![0, 0, 3], "12⊗12⊗1⊗2:-1"),
        (vec![1, 1, 1], "12⊗12⊗1⊗3:-1 12⊗12⊗3⊗1:-2 12⊗13⊗1⊗2:-2 12⊗13⊗2⊗1:-3"),
    ];
    for (w, want) in rows {
        let w = affpaths::crystal::ClassicalWeight { a: w };
        let got = match partition_for_weight(&w, eta.size()) {
            Some(lambda) => listing(Kind::Antisym, &eta, &PathClass::Restricted { level: l, lambda }),
            None => Ok(String::new()),
        };
        out.push(CheckResult::new("restricted-paths", format!("{params} weight={w}")).expect(got, want.to_string()));
    }
    let want = poly(1, &[1, 3, 1]);
    let stats = f_lr_prime_with_stats(n, l, r, &eta, &mu);
    let configs = stats.as_ref().map(|s| s.1.configurations).unwrap_or(0);
    out.push(
        CheckResult::new("generalized-sum", params)
            .routes(vec![
                ("paths", hw_restricted_sum(n, l, r, &mu, &eta)),
                ("fermionic", stats.clone().map(|s| s.0)),
                ("expected", Ok(want)),
            ])
            .note(format!("{configs} configurations")),
    );
    out.push(
        CheckResult::new("generalized-sum-configurations", params)
            .expect(stats.map(|s| s.1.configurations), 3),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;

    #[test]
    fn all_examples_pass() {
        for j in jobs() {
            for c in j() {
                assert_eq!(c.status, Status::Pass, "{}", c.line());
            }
        }
    }
}
