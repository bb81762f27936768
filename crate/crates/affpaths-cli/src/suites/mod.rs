//! Contents of the verification suites.

use affpaths::combinatorics::{Composition, Partition};
use anyhow::{bail, Result};

use crate::harness::{Bounds, Job, SUITES};

mod conjectures;
mod energy;
mod examples;
mod identities;
mod limits;

pub(crate) fn jobs(name: &str, b: &Bounds) -> Result<Vec<Job>> {
    Ok(match name {
        "paper-examples" => examples::jobs(),
        "kostka-identities" => identities::kostka_jobs(b),
        "fermionic-identities" => identities::fermionic_jobs(b),
        "energy-properties" => energy::jobs(b),
        "conjectures" => conjectures::jobs(b),
        "limits" => limits::jobs(b),
        _ => bail!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")),
    })
}

/// Partition literal; the suites only pass weakly decreasing data.
fn part(v: &[usize]) -> Partition {
    Partition::from_unsorted(v.to_vec())
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec())
}

/// All weak compositions of `size` with `n` entries.
fn compositions(size: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![size]];
    }
    let mut out = Vec::new();
    for a in 0..=size {
        for mut rest in compositions(size - a, n - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn fmt_comp(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_count() {
        // C(size + n - 1, n - 1)
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }
}
