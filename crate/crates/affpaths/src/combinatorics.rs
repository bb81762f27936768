//! Partitions, compositions, semistandard tableaux, the charge statistic and
//! Kostka(-Foulkes) numbers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qalgebra::LaurentPoly;
use crate::{invalid, Result};

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid!("not a partition (must weakly decrease): {parts:?}"));
        }
        if parts.contains(&0) {
            return Err(invalid!("zero part inside partition: {parts:?}"));
        }
        Ok(Self(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(k^m)`: `m` rows of length `k`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Self(vec![k; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// `sum_k min(i, parts_k)`: number of cells in the first `i` columns.
    pub fn cells_in_first_columns(&self, i: usize) -> usize {
        self.0.iter().map(|&p| p.min(i)).sum()
    }

    /// Multiplicity vector `m_1, ..., m_top` of parts.
    pub fn multiplicities(&self, top: usize) -> Vec<usize> {
        let mut m = vec![0; top];
        for &p in &self.0 {
            if p >= 1 && p <= top {
                m[p - 1] += 1;
            }
        }
        m
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Fixed-length vector of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self(parts)
    }

    /// Pads or validates to exactly `n` entries.
    pub fn with_len(mut parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(invalid!("composition {parts:?} longer than n = {n}"));
            }
            parts.truncate(n);
        }
        parts.resize(n, 0);
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

/// Semistandard tableau in English notation: row 0 on top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates row weakness and column strictness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        for r in &rows {
            if r.windows(2).any(|w| w[0] > w[1]) || r.contains(&0) {
                return Err(invalid!("row not weakly increasing in 1..: {r:?}"));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(invalid!("column not strictly increasing: {rows:?}"));
            }
        }
        Ok(Self { shape, rows })
    }

    /// Number of occurrences of each letter `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for r in &self.rows {
            for &x in r {
                if x >= 1 && x <= n {
                    c[x - 1] += 1;
                }
            }
        }
        c
    }

    fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Columns read bottom to top, from the left column rightwards.
    pub fn column_reading_word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.shape.size());
        for c in 0..self.shape.first() {
            for r in (0..self.rows.len()).rev() {
                if let Some(&x) = self.rows[r].get(c) {
                    w.push(x);
                }
            }
        }
        w
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let mut out = Vec::with_capacity(lambda.first());
    for i in 1..=lambda.first() {
        out.push(lambda.0.iter().take_while(|&&p| p >= i).count());
    }
    Partition(out)
}

/// Concatenation; needs the last part of `lambda` to be at least `mu_1`.
pub fn union_op(lambda: &Partition, mu: &Partition) -> Result<Partition> {
    if let Some(&last) = lambda.0.last() {
        if last < mu.first() {
            return Err(invalid!(
                "union needs last part of {lambda} >= first part of {mu}"
            ));
        }
    }
    let mut parts = lambda.0.clone();
    parts.extend_from_slice(&mu.0);
    Ok(Partition(parts))
}

/// Componentwise sum with zero padding.
pub fn plus_op(lambda: &Partition, mu: &Partition) -> Partition {
    let len = lambda.len().max(mu.len());
    Partition((0..len).map(|i| lambda.part(i) + mu.part(i)).collect())
}

/// `n(nu) = sum_i C(nu'_i, 2) = sum_i (i-1) nu_i`.
pub fn n_stat(nu: &Partition) -> usize {
    nu.0.iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// True iff `inner` is inside `outer` and no column gains two cells.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    // outer'_i - inner'_i <= 1 is the same as outer_{i+1} <= inner_i
    (0..outer.len()).all(|i| i == 0 || outer.part(i) <= inner.part(i - 1))
}

/// All partitions of `n` with at most `max_len` parts, each at most
/// `max_part`, in reverse lexicographic order.
pub fn partitions_bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        rest: usize,
        cap: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            if p * slots < rest {
                break;
            }
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Dominance order: `lambda >= mu` (sizes must agree).
pub fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.size() != mu.size() {
        return false;
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return false;
        }
    }
    true
}

/// All partitions `nu` inside `outer` with `|nu| = size`.
pub fn partitions_inside(outer: &Partition, size: usize) -> Vec<Partition> {
    fn rec(
        outer: &Partition,
        row: usize,
        rest: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        suffix_room: &[usize],
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if row >= outer.len() || suffix_room[row] < rest {
            return;
        }
        let hi = cap.min(outer.part(row)).min(rest);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(outer, row + 1, rest - p, p, cur, suffix_room, out);
            cur.pop();
        }
    }
    let mut suffix_room = vec![0; outer.len() + 1];
    for i in (0..outer.len()).rev() {
        suffix_room[i] = suffix_room[i + 1] + outer.part(i);
    }
    let mut out = Vec::new();
    rec(
        outer,
        0,
        size,
        usize::MAX,
        &mut Vec::new(),
        &suffix_room,
        &mut out,
    );
    out
}

/// All `outer` with `outer / inner` a horizontal strip of `size` cells and
/// at most `max_rows` rows.
pub fn horizontal_strips(inner: &Partition, size: usize, max_rows: usize) -> Vec<Partition> {
    let rows = (inner.len() + 1).min(max_rows.max(inner.len()));
    let mut out = Vec::new();
    let mut cur = vec![0usize; rows];
    fn rec(
        inner: &Partition,
        i: usize,
        rows: usize,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rest == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(Partition(v));
            }
            return;
        }
        let lo = inner.part(i);
        let hi = if i == 0 {
            lo + rest
        } else {
            inner.part(i - 1).min(lo + rest)
        };
        for v in lo..=hi {
            cur[i] = v;
            rec(inner, i + 1, rows, rest - (v - lo), cur, out);
        }
    }
    if inner.len() > max_rows {
        return out;
    }
    rec(inner, 0, rows, size, &mut cur, &mut out);
    out
}

/// Number of semistandard tableaux of the given shape and content.
pub fn kostka_number(shape: &Partition, weight: &Composition) -> Result<BigInt> {
    if shape.size() != weight.size() {
        return Err(invalid!(
            "shape {shape} and weight {:?} differ in size",
            weight.parts()
        ));
    }
    fn rec(shape: &Partition, weight: &[usize], k: usize, cur: &Partition) -> BigInt {
        if k == weight.len() {
            return if cur == shape { BigInt::one() } else { BigInt::zero() };
        }
        let mut total = BigInt::zero();
        for next in horizontal_strips(cur, weight[k], shape.len()) {
            if shape.contains(&next) {
                total += rec(shape, weight, k + 1, &next);
            }
        }
        total
    }
    Ok(rec(shape, weight.parts(), 0, &Partition::empty()))
}

/// All semistandard tableaux with given shape and content, ordered
/// lexicographically by column reading word.
pub fn enumerate_ssyt(shape: &Partition, weight: &Composition) -> Result<Vec<Tableau>> {
    if shape.size() != weight.size() {
        return Err(invalid!(
            "shape {shape} and weight {:?} differ in size",
            weight.parts()
        ));
    }
    fn rec(
        shape: &Partition,
        weight: &[usize],
        k: usize,
        chain: &mut Vec<Partition>,
        out: &mut Vec<Tableau>,
    ) {
        let cur = chain.last().cloned().unwrap_or_default();
        if k == weight.len() {
            if &cur == shape {
                out.push(chain_to_tableau(chain));
            }
            return;
        }
        for next in horizontal_strips(&cur, weight[k], shape.len()) {
            if shape.contains(&next) {
                chain.push(next);
                rec(shape, weight, k + 1, chain, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    rec(shape, weight.parts(), 0, &mut chain, &mut out);
    out.sort_by_cached_key(|t| t.column_reading_word());
    Ok(out)
}

/// Tableau whose letter `k` fills `chain[k] / chain[k-1]`.
fn chain_to_tableau(chain: &[Partition]) -> Tableau {
    let shape = chain.last().cloned().unwrap_or_default();
    let mut rows: Vec<Vec<usize>> = (0..shape.len()).map(|_| Vec::new()).collect();
    for k in 1..chain.len() {
        for (r, row) in rows.iter_mut().enumerate() {
            for _ in chain[k - 1].part(r)..chain[k].part(r) {
                row.push(k);
            }
        }
    }
    Tableau { shape, rows }
}

/// Charge of a word whose content is a partition.
pub fn charge_word(word: &[usize]) -> Result<usize> {
    let top = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; top + 1];
    for &x in word {
        if x == 0 {
            return Err(invalid!("letters must be positive"));
        }
        counts[x] += 1;
    }
    if (2..=top).any(|k| counts[k] > counts[k - 1]) {
        return Err(invalid!("charge needs partition content, got {:?}", &counts[1..]));
    }
    let len = word.len();
    let mut used = vec![false; len];
    let mut remaining = len;
    let mut total = 0;
    while remaining > 0 {
        // Standard subword: the first 1 from the right, then each next letter
        // searched leftwards with wrap-around; a wrap raises the index.
        let mut pos = len;
        let mut index = 0;
        let mut letter = 1;
        loop {
            let found = if letter == 1 {
                (0..len).rev().find(|&p| !used[p] && word[p] == 1)
            } else {
                let left = (0..pos).rev().find(|&p| !used[p] && word[p] == letter);
                match left {
                    Some(p) => Some(p),
                    None => {
                        let wrapped = (pos + 1..len)
                            .rev()
                            .find(|&p| !used[p] && word[p] == letter);
                        if wrapped.is_some() {
                            index += 1;
                        }
                        wrapped
                    }
                }
            };
            let Some(p) = found else { break };
            used[p] = true;
            remaining -= 1;
            total += index;
            pos = p;
            letter += 1;
        }
    }
    Ok(total)
}

/// Lascoux-Schutzenberger charge of the reading word of `t`.
pub fn charge(t: &Tableau) -> Result<usize> {
    let content = t.content(t.max_letter());
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid!("charge needs partition content, got {content:?}"));
    }
    charge_word(&t.reading_word())
}

/// Kostka-Foulkes polynomial `K_{lambda mu}(q) = sum_T q^charge(T)`;
/// `mu` is sorted into a partition first.
pub fn kostka_foulkes(lambda: &Partition, mu: &Composition) -> Result<LaurentPoly> {
    let mu = mu.to_partition();
    let weight = Composition::new(mu.parts().to_vec());
    let mut p = LaurentPoly::zero();
    for t in enumerate_ssyt(lambda, &weight)? {
        p += &LaurentPoly::q_pow(charge(&t)? as i64);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    /// Brute-force SSYT count: fill cells in reading order with every letter.
    fn brute_force_count(shape: &Partition, weight: &[usize]) -> usize {
        let cells: Vec<(usize, usize)> = (0..shape.len())
            .flat_map(|r| (0..shape.part(r)).map(move |c| (r, c)))
            .collect();
        let n = weight.len();
        let mut grid = vec![vec![0usize; shape.first()]; shape.len()];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<usize>>,
            left: &mut Vec<usize>,
            n: usize,
        ) -> usize {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for x in 1..=n {
                if left[x - 1] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > x {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= x {
                    continue;
                }
                grid[r][c] = x;
                left[x - 1] -= 1;
                total += rec(idx + 1, cells, grid, left, n);
                left[x - 1] += 1;
            }
            grid[r][c] = 0;
            total
        }
        rec(0, &cells, &mut grid, &mut weight.to_vec(), n)
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&part(&[3, 2, 2])), part(&[3, 3, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part(&[4])), part(&[1, 1, 1, 1]));
        for n in 0..9 {
            for p in partitions_of(n) {
                assert_eq!(conjugate(&conjugate(&p)), p);
            }
        }
    }

    #[test]
    fn union_and_plus() {
        assert_eq!(union_op(&part(&[2, 2]), &part(&[1])).unwrap(), part(&[2, 2, 1]));
        assert_eq!(union_op(&part(&[3]), &Partition::empty()).unwrap(), part(&[3]));
        assert_eq!(
            union_op(&part(&[2, 2]), &part(&[2, 1])).unwrap(),
            part(&[2, 2, 2, 1])
        );
        assert!(union_op(&part(&[2, 1]), &part(&[2])).is_err());
        assert_eq!(plus_op(&part(&[2, 2]), &part(&[1, 1])), part(&[3, 3]));
        assert_eq!(plus_op(&part(&[2, 1]), &Partition::empty()), part(&[2, 1]));
        assert_eq!(plus_op(&part(&[1, 1, 1]), &part(&[2])), part(&[3, 1, 1]));
    }

    #[test]
    fn n_statistic() {
        assert_eq!(n_stat(&Partition::empty()), 0);
        assert_eq!(n_stat(&part(&[1, 1, 1])), 3);
        assert_eq!(n_stat(&part(&[2, 2, 1, 1])), 7);
    }

    #[test]
    fn horizontal_strip_predicate() {
        assert!(is_horizontal_strip(&part(&[2]), &part(&[3, 1])));
        assert!(is_horizontal_strip(&part(&[2, 1]), &part(&[2, 1])));
        assert!(!is_horizontal_strip(&part(&[1]), &part(&[1, 1, 1])));
        assert!(is_horizontal_strip(&part(&[1]), &part(&[1, 1])));
        assert!(!is_horizontal_strip(&Partition::empty(), &part(&[1, 1])));
    }

    #[test]
    fn horizontal_strip_generator_agrees_with_predicate() {
        for n in 0..7 {
            for inner in partitions_of(n) {
                for k in 0..4 {
                    let gen = horizontal_strips(&inner, k, 10);
                    for outer in partitions_of(n + k) {
                        let want = is_horizontal_strip(&inner, &outer);
                        assert_eq!(gen.contains(&outer), want, "{inner} {outer}");
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_inside_counts() {
        let outer = part(&[3, 2]);
        let all: Vec<_> = (0..=5).flat_map(|s| partitions_inside(&outer, s)).collect();
        // Young's lattice below (3,2) has 9 elements.
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|p| outer.contains(p)));
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&part(&[1, 1]), &comp(&[1, 1])).unwrap().len(), 1);
        let lambda = part(&[3, 2, 1]);
        assert_eq!(
            enumerate_ssyt(&lambda, &comp(&[3, 2, 1])).unwrap().len(),
            1
        );
        // q + 2q^2 + q^3 at q = 1
        assert_eq!(
            enumerate_ssyt(&lambda, &comp(&[2, 2, 1, 1])).unwrap().len(),
            4
        );
        assert!(enumerate_ssyt(&lambda, &comp(&[2, 2])).is_err());
    }

    #[test]
    fn ssyt_count_matches_brute_force() {
        for n in 1..7 {
            for shape in partitions_of(n) {
                for w in partitions_of(n) {
                    let mut weight = w.parts().to_vec();
                    weight.reverse();
                    let got = enumerate_ssyt(&shape, &comp(&weight)).unwrap();
                    assert_eq!(got.len(), brute_force_count(&shape, &weight));
                    for t in &got {
                        assert!(Tableau::new(t.rows.clone()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_numbers_from_tables() {
        let w = comp(&[3, 2, 1]);
        assert_eq!(kostka_number(&part(&[5, 1]), &w).unwrap(), BigInt::from(2));
        assert_eq!(kostka_number(&part(&[4, 2]), &w).unwrap(), BigInt::from(2));
        assert_eq!(kostka_number(&part(&[3, 2, 1]), &w).unwrap(), BigInt::one());
    }

    #[test]
    fn kostka_number_symmetric_in_weight() {
        let shape = part(&[3, 2, 1]);
        let base = kostka_number(&shape, &comp(&[2, 2, 1, 1])).unwrap();
        for w in [[1, 2, 1, 2], [1, 1, 2, 2], [2, 1, 2, 1], [1, 2, 2, 1]] {
            assert_eq!(kostka_number(&shape, &comp(&w)).unwrap(), base);
        }
    }

    #[test]
    fn charge_small_cases() {
        let t = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(charge(&t).unwrap(), 0);
        let t = Tableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(charge(&t).unwrap(), 1);
        let t = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(charge(&t).unwrap(), 0);
        let t = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        assert!(charge(&t).is_err());
    }

    #[test]
    fn charge_zero_only_on_superstandard() {
        for n in 1..8 {
            for lambda in partitions_of(n) {
                let w = comp(lambda.parts());
                let ts = enumerate_ssyt(&lambda, &w).unwrap();
                assert_eq!(ts.len(), 1);
                assert_eq!(charge(&ts[0]).unwrap(), 0);
            }
        }
    }

    #[test]
    fn kostka_foulkes_table_values() {
        let mu = comp(&[2, 2, 1, 1]);
        let kf = |l: &[usize]| kostka_foulkes(&part(l), &mu).unwrap();
        assert_eq!(kf(&[3, 2, 1]), LaurentPoly::from_coeffs(1, &[1, 2, 1]));
        assert_eq!(kf(&[3, 3]), LaurentPoly::from_coeffs(2, &[1, 0, 1]));
        assert_eq!(kf(&[4, 2]), LaurentPoly::from_coeffs(3, &[2, 1, 1]));
        assert_eq!(kf(&[6]), LaurentPoly::q_pow(7));
        assert_eq!(kf(&[5, 1]), LaurentPoly::from_coeffs(4, &[1, 1, 1]));
        assert_eq!(kf(&[4, 1, 1]), LaurentPoly::from_coeffs(2, &[1, 1, 1]));
    }

    #[test]
    fn kostka_foulkes_at_one_and_dominance() {
        for n in 1..9 {
            let ps = partitions_of(n);
            for lambda in &ps {
                for mu in &ps {
                    let kf = kostka_foulkes(lambda, &comp(mu.parts())).unwrap();
                    let k = kostka_number(lambda, &comp(mu.parts())).unwrap();
                    assert_eq!(kf.eval_at_one(), k);
                    if !dominates(lambda, mu) {
                        assert!(kf.is_zero());
                    }
                    assert!(kf.has_nonnegative_coeffs());
                }
            }
        }
    }

    #[test]
    fn kostka_foulkes_column_shape() {
        // K_{(1^n),(1^n)} = 1 and K_{(n),(1^n)} = q^{n(n-1)/2}
        for n in 1..7 {
            let ones = comp(&vec![1; n]);
            assert_eq!(
                kostka_foulkes(&part(&vec![1; n]), &ones).unwrap(),
                LaurentPoly::one()
            );
            assert_eq!(
                kostka_foulkes(&part(&[n]), &ones).unwrap(),
                LaurentPoly::q_pow((n * (n - 1) / 2) as i64)
            );
        }
    }
}
