//! Path classes, one-dimensional sums and highest weight sets.
//!
//! A weight `lambda` is identified with the composition of its contents:
//! a path has weight `lambda` iff row `i` carries `lambda_i` units in total.
//!
//! Symmetric sums collect `q^{E(p)}`, antisymmetric ones `q^{-E(p)}`; in both
//! cases every local contribution to the exponent is nonnegative, which makes
//! truncation of the transfer-matrix evaluation exact.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;

use crate::combinatorics::{horizontal_strips, Composition, Partition};
use crate::crystal::{all_elements, epsilon, ClassicalWeight, CrystalElement, Kind, Path};
use crate::energy::{energy, ground_state_energy, pair_rows};
use crate::qalgebra::{DensePoly, LaurentPoly, Rational};
use crate::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathClass {
    /// All paths of the given content.
    Unrestricted(Composition),
    /// Running weight dominant for `i = 1..n-1`.
    Classical(Partition),
    /// Running weight dominant for all `i`, starting from `level * Lambda_0`.
    Restricted { level: usize, lambda: Partition },
}

impl PathClass {
    fn target(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            PathClass::Unrestricted(c) => {
                if c.len() != n {
                    return Err(invalid!(
                        "weight {:?} must have exactly n = {n} entries",
                        c.parts()
                    ));
                }
                Ok(c.parts().to_vec())
            }
            PathClass::Classical(p) => pad(p, n),
            PathClass::Restricted { level, lambda } => {
                let v = pad(lambda, n)?;
                if v[0] > level + v[n - 1] {
                    return Err(invalid!(
                        "{lambda} is not level-{level} restricted (needs l + lambda_n >= lambda_1)"
                    ));
                }
                Ok(v)
            }
        }
    }

    /// Starting weight and the range of `i` that is checked.
    fn restriction(&self, n: usize) -> Option<(Vec<i64>, usize)> {
        match self {
            PathClass::Unrestricted(_) => None,
            PathClass::Classical(_) => Some((vec![0; n], 1)),
            PathClass::Restricted { level, .. } => {
                Some((ClassicalWeight::fundamental(n, *level, 0).a, 0))
            }
        }
    }
}

fn pad(p: &Partition, n: usize) -> Result<Vec<usize>> {
    if p.len() > n {
        return Err(invalid!("{p} has more than n = {n} parts"));
    }
    let mut v = p.parts().to_vec();
    v.resize(n, 0);
    Ok(v)
}

fn check_shape(n: usize, mu: &Partition, kind: Kind, class: &PathClass) -> Result<()> {
    if n < 2 {
        return Err(invalid!("rank n must be at least 2, got {n}"));
    }
    if kind == Kind::Antisym && mu.first() >= n {
        return Err(invalid!(
            "antisymmetric paths need mu_1 <= n-1, got mu = {mu}, n = {n}"
        ));
    }
    if let PathClass::Restricted { level, .. } = class {
        if kind == Kind::Sym && mu.first() > *level {
            return Err(invalid!("restricted paths need mu_1 <= l, got mu = {mu}, l = {level}"));
        }
    }
    Ok(())
}

/// Running weight `base + wt(content)` paired with `h_i`.
fn running_weight(base: &[i64], content: &[i64]) -> Vec<i64> {
    let n = base.len();
    (0..n)
        .map(|i| {
            // wt = sum_k c_k (Lambda_k - Lambda_{k-1}): coefficient of
            // Lambda_i is c_i - c_{i+1}, and of Lambda_0 it is c_n - c_1.
            let (cur, next) = if i == 0 {
                (content[n - 1], content[0])
            } else {
                (content[i - 1], content[i])
            };
            base[i] + cur - next
        })
        .collect()
}

fn admissible(b: &CrystalElement, a: &[i64], from: usize) -> bool {
    (from..a.len()).all(|i| epsilon(i, b) as i64 <= a[i])
}

/// Exponent sign making every local term nonnegative.
fn sign(kind: Kind) -> i64 {
    match kind {
        Kind::Sym => 1,
        Kind::Antisym => -1,
    }
}

/// All paths of the class, with their energies, sorted lexicographically by
/// concatenated coordinates.
pub fn enumerate_paths(
    n: usize,
    mu: &Partition,
    kind: Kind,
    class: &PathClass,
) -> Result<Vec<(Path, i64)>> {
    check_shape(n, mu, kind, class)?;
    let target = class.target(n)?;
    if target.iter().sum::<usize>() != mu.size() {
        return Err(invalid!(
            "weight {target:?} and shape {mu} differ in size"
        ));
    }
    let restriction = class.restriction(n);
    let elems: Vec<Vec<CrystalElement>> = mu
        .parts()
        .iter()
        .map(|&d| all_elements(kind, n, d))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(mu.len());
    let mut content = vec![0usize; n];
    dfs(
        &elems,
        kind,
        &target,
        restriction.as_ref(),
        &mut cur,
        &mut content,
        &mut out,
    );
    let mut res = out
        .into_iter()
        .map(|comps| {
            let p = Path::new_unchecked(kind, n, comps);
            let e = energy(&p)?;
            Ok((p, e))
        })
        .collect::<Result<Vec<_>>>()?;
    res.sort();
    Ok(res)
}

fn dfs(
    elems: &[Vec<CrystalElement>],
    kind: Kind,
    target: &[usize],
    restriction: Option<&(Vec<i64>, usize)>,
    cur: &mut Vec<CrystalElement>,
    content: &mut Vec<usize>,
    out: &mut Vec<Vec<CrystalElement>>,
) {
    let j = cur.len();
    if j == elems.len() {
        if content.as_slice() == target {
            out.push(cur.clone());
        }
        return;
    }
    let remaining = elems.len() - j - 1;
    let a = restriction.map(|(base, from)| {
        let c: Vec<i64> = content.iter().map(|&x| x as i64).collect();
        (running_weight(base, &c), *from)
    });
    for b in &elems[j] {
        let fits = b
            .coords()
            .iter()
            .zip(content.iter())
            .zip(target)
            .all(|((x, c), t)| {
                let after = c + x;
                after <= *t && (kind == Kind::Sym || t - after <= remaining)
            });
        if !fits {
            continue;
        }
        if let Some((a, from)) = &a {
            if !admissible(b, a, *from) {
                continue;
            }
        }
        for (c, x) in content.iter_mut().zip(b.coords()) {
            *c += x;
        }
        cur.push(b.clone());
        dfs(elems, kind, target, restriction, cur, content, out);
        cur.pop();
        for (c, x) in content.iter_mut().zip(b.coords()) {
            *c -= x;
        }
    }
}

/// Precomputed crystal data for the transfer-matrix evaluation.
struct Tables {
    /// Elements of each degree occurring in `mu`, indexed by degree.
    elems: Vec<Vec<CrystalElement>>,
    /// `eps[d][b][i]`.
    eps: Vec<Vec<Vec<i64>>>,
    /// `local[(da, db)][x * |B_db| + y] = (|H|, index of the joined element)`.
    local: HashMap<(usize, usize), Vec<(u32, u32)>>,
}

impl Tables {
    fn new(kind: Kind, n: usize, mu: &Partition) -> Result<Self> {
        let top = mu.first();
        let mut elems = vec![Vec::new(); top + 1];
        let mut eps = vec![Vec::new(); top + 1];
        let mut degrees: Vec<usize> = mu.parts().to_vec();
        degrees.dedup();
        for &d in &degrees {
            elems[d] = all_elements(kind, n, d)?;
            eps[d] = elems[d]
                .iter()
                .map(|b| (0..n).map(|i| epsilon(i, b) as i64).collect())
                .collect();
        }
        let mut index: Vec<HashMap<Vec<usize>, u32>> = vec![HashMap::new(); top + 1];
        for &d in &degrees {
            for (k, b) in elems[d].iter().enumerate() {
                index[d].insert(b.coords().to_vec(), k as u32);
            }
        }
        let mut local = HashMap::new();
        for &da in &degrees {
            for &db in degrees.iter().filter(|&&db| db <= da) {
                let mut t = Vec::with_capacity(elems[da].len() * elems[db].len());
                for x in &elems[da] {
                    for y in &elems[db] {
                        let rows = y
                            .coords()
                            .iter()
                            .enumerate()
                            .flat_map(|(r, &c)| core::iter::repeat(r).take(c));
                        let (w, joined) = pair_rows(kind, x.coords(), rows);
                        t.push((w as u32, index[db][&joined]));
                    }
                }
                local.insert((da, db), t);
            }
        }
        Ok(Self { elems, eps, local })
    }

    #[inline]
    fn pair(&self, da: usize, x: u32, db: usize, y: u32) -> (u32, u32) {
        let nb = self.elems[db].len();
        self.local[&(da, db)][x as usize * nb + y as usize]
    }
}

/// Dense polynomial in `q^{±E}` with nonnegative exponents and `u128`
/// coefficients, truncated at `cap`.
type Coeffs = Vec<u128>;

fn add_shifted(dst: &mut Coeffs, src: &Coeffs, shift: usize, cap: usize) -> Result<()> {
    if shift > cap || src.is_empty() {
        return Ok(());
    }
    let len = (src.len() + shift).min(cap + 1);
    if dst.len() < len {
        dst.resize(len, 0);
    }
    for (k, &c) in src.iter().enumerate() {
        let e = k + shift;
        if e > cap {
            break;
        }
        if c != 0 {
            dst[e] = dst[e]
                .checked_add(c)
                .ok_or_else(|| Error::Overflow(alloc::format!("path count at q^{e} exceeds u128")))?;
        }
    }
    Ok(())
}

/// Transfer-matrix evaluation of the 1dsum of a class, keeping exponents of
/// `q^{±E}` up to `cap`. Returns coefficients of `q^0, q^1, ...`.
///
/// Components are added right to left. Within a block of equal degrees the
/// isomorphism is the identity, so the state only records the current
/// leftmost element, one propagated image per block further right, and the
/// content of the suffix.
pub fn onedsum_coeffs(
    n: usize,
    mu: &Partition,
    kind: Kind,
    class: &PathClass,
    cap: Option<usize>,
) -> Result<Vec<u128>> {
    check_shape(n, mu, kind, class)?;
    let target = class.target(n)?;
    if target.iter().sum::<usize>() != mu.size() {
        return Err(invalid!("weight {target:?} and shape {mu} differ in size"));
    }
    let cap = cap.unwrap_or(usize::MAX - 1);
    let m = mu.len();
    if m == 0 {
        return Ok(vec![1]);
    }
    let parts = mu.parts();
    let tables = Tables::new(kind, n, mu)?;
    let restriction = class.restriction(n);
    // Last index of the block containing each position.
    let mut block_end = vec![0; m];
    for i in (0..m).rev() {
        block_end[i] = if i + 1 < m && parts[i + 1] == parts[i] {
            block_end[i + 1]
        } else {
            i
        };
    }
    // Remaining capacity per row for antisymmetric fillings: each earlier
    // component holds at most one unit per row.
    let target_i: Vec<i64> = target.iter().map(|&x| x as i64).collect();

    // Key layout: [cur, img_1, .., img_k, content_1, .., content_n] where
    // images belong to the blocks to the right of cur's block, nearest first.
    let mut states: HashMap<Vec<u32>, Coeffs> = HashMap::new();
    let last = m - 1;
    let d_last = parts[last];
    for (b, elem) in tables.elems[d_last].iter().enumerate() {
        let content: Vec<u32> = elem.coords().iter().map(|&x| x as u32).collect();
        if !suffix_ok(kind, &target_i, &content, last, &tables.eps[d_last][b], &restriction) {
            continue;
        }
        let mut key = vec![b as u32];
        key.extend_from_slice(&content);
        states.entry(key).or_insert_with(|| vec![0]).get_mut(0).map(|c| *c += 1);
    }
    for i in (0..last).rev() {
        let di = parts[i];
        let d_next = parts[i + 1];
        let new_block = di != d_next;
        let mut next: HashMap<Vec<u32>, Coeffs> = HashMap::with_capacity(states.len());
        for (key, poly) in &states {
            let cur = key[0];
            let mut imgs: Vec<(usize, u32, usize)> = Vec::new();
            // (degree, element, block size) of each image slot
            let k_imgs = key.len() - 1 - n;
            {
                // Recover block degrees/sizes right of position i+1.
                let mut pos = block_end[i + 1] + 1;
                for s in 0..k_imgs {
                    let d = parts[pos];
                    let size = block_end[pos] - pos + 1;
                    imgs.push((d, key[1 + s], size));
                    pos = block_end[pos] + 1;
                }
            }
            if new_block {
                let size = block_end[i + 1] - i;
                imgs.insert(0, (d_next, cur, size));
            }
            let content = &key[1 + k_imgs..];
            for (b, elem) in tables.elems[di].iter().enumerate() {
                let b = b as u32;
                let mut new_content: Vec<u32> = content.to_vec();
                for (c, &x) in new_content.iter_mut().zip(elem.coords()) {
                    *c += x as u32;
                }
                if !suffix_ok(kind, &target_i, &new_content, i, &tables.eps[di][b as usize], &restriction) {
                    continue;
                }
                let mut shift: usize = 0;
                let mut new_key = Vec::with_capacity(key.len() + 1);
                new_key.push(b);
                if !new_block {
                    let (h, _) = tables.pair(di, b, d_next, cur);
                    shift += h as usize * (block_end[i + 1] - i);
                }
                for &(d, img, size) in &imgs {
                    let (h, joined) = tables.pair(di, b, d, img);
                    shift += h as usize * size;
                    new_key.push(joined);
                }
                if shift > cap {
                    continue;
                }
                new_key.extend_from_slice(&new_content);
                let dst = next.entry(new_key).or_default();
                add_shifted(dst, poly, shift, cap)?;
            }
        }
        states = next;
    }
    let mut total: Coeffs = Vec::new();
    for (key, poly) in &states {
        let content = &key[key.len() - n..];
        if content.iter().zip(&target).all(|(&c, &t)| c as usize == t) {
            add_shifted(&mut total, poly, 0, cap)?;
        }
    }
    while total.last() == Some(&0) {
        total.pop();
    }
    Ok(total)
}

/// Checks the suffix content starting at position `j` against the target,
/// and the restriction for component `j` (prefix weight = target - suffix).
fn suffix_ok(
    kind: Kind,
    target: &[i64],
    suffix: &[u32],
    j: usize,
    eps: &[i64],
    restriction: &Option<(Vec<i64>, usize)>,
) -> bool {
    let prefix: Vec<i64> = target
        .iter()
        .zip(suffix)
        .map(|(&t, &s)| t - s as i64)
        .collect();
    if prefix.iter().any(|&p| p < 0) {
        return false;
    }
    if kind == Kind::Antisym && prefix.iter().any(|&p| p > j as i64) {
        return false;
    }
    if let Some((base, from)) = restriction {
        let a = running_weight(base, &prefix);
        if (*from..a.len()).any(|i| eps[i] > a[i]) {
            return false;
        }
    }
    true
}

fn coeffs_to_poly(coeffs: &[u128]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (k, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            p.add_term(
                Rational::from_integer(BigInt::from(k as i64)),
                BigInt::from(c),
            );
        }
    }
    p
}

/// `sum q^{E(p)}` (symmetric) or `sum q^{-E(p)}` (antisymmetric) over the class.
pub fn onedsum(n: usize, mu: &Partition, kind: Kind, class: &PathClass) -> Result<LaurentPoly> {
    let coeffs = onedsum_coeffs(n, mu, kind, class, None)?;
    Ok(coeffs_to_poly(&coeffs))
}

/// As [`onedsum`], dropping terms whose exponent exceeds `max_exp` in
/// absolute value.
pub fn onedsum_truncated(
    n: usize,
    mu: &Partition,
    kind: Kind,
    class: &PathClass,
    max_exp: usize,
) -> Result<LaurentPoly> {
    let coeffs = onedsum_coeffs(n, mu, kind, class, Some(max_exp))?;
    Ok(coeffs_to_poly(&coeffs))
}

/// Same value as [`onedsum`], by explicit enumeration.
pub fn onedsum_by_enumeration(
    n: usize,
    mu: &Partition,
    kind: Kind,
    class: &PathClass,
) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for (_, e) in enumerate_paths(n, mu, kind, class)? {
        p += &LaurentPoly::q_pow(sign(kind) * e);
    }
    Ok(p)
}

/// Element of the highest weight set `H(l Lambda_r, mu)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HwSetEntry {
    pub path: Path,
    /// `l Lambda_r + wt p`.
    pub weight: ClassicalWeight,
    pub energy: i64,
}

fn check_hw(n: usize, l: usize, r: usize, mu: &Partition) -> Result<()> {
    if n < 2 {
        return Err(invalid!("rank n must be at least 2, got {n}"));
    }
    if mu.first() > l {
        return Err(invalid!("mu_1 = {} exceeds level l = {l}", mu.first()));
    }
    if r >= n {
        return Err(invalid!("residue r = {r} must be below n = {n}"));
    }
    Ok(())
}

fn hw_entry(n: usize, l: usize, r: usize, comps: Vec<CrystalElement>) -> Result<HwSetEntry> {
    let path = Path::new_unchecked(Kind::Sym, n, comps);
    let weight = ClassicalWeight::fundamental(n, l, r).add(&path.weight());
    let energy = energy(&path)?;
    Ok(HwSetEntry {
        path,
        weight,
        energy,
    })
}

/// `H(l Lambda_r, mu)`: paths with `eps_i(b_j) <= <h_i, l Lambda_r + wt b_1
/// + ... + wt b_{j-1}>` for all `i` and `j`.
pub fn hw_set(n: usize, l: usize, r: usize, mu: &Partition) -> Result<Vec<HwSetEntry>> {
    check_hw(n, l, r, mu)?;
    let elems: Vec<Vec<CrystalElement>> = mu
        .parts()
        .iter()
        .map(|&d| all_elements(Kind::Sym, n, d))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    fn rec(
        elems: &[Vec<CrystalElement>],
        a: &ClassicalWeight,
        cur: &mut Vec<CrystalElement>,
        out: &mut Vec<Vec<CrystalElement>>,
    ) {
        if cur.len() == elems.len() {
            out.push(cur.clone());
            return;
        }
        for b in &elems[cur.len()] {
            if (0..a.a.len()).all(|i| epsilon(i, b) as i64 <= a.pairing(i)) {
                let next = a.add(&b.weight());
                cur.push(b.clone());
                rec(elems, &next, cur, out);
                cur.pop();
            }
        }
    }
    rec(
        &elems,
        &ClassicalWeight::fundamental(n, l, r),
        &mut Vec::new(),
        &mut out,
    );
    let mut res = out
        .into_iter()
        .map(|c| hw_entry(n, l, r, c))
        .collect::<Result<Vec<_>>>()?;
    res.sort();
    Ok(res)
}

/// `H(l Lambda_r, mu)` from chains of Young diagrams `nu^(0) = (l^r) ⊂ ... `
/// growing by horizontal strips of lengths `mu_a`, of depth at most `n`,
/// with `nu^(a)_1 - nu^(a-1)_n <= l`.
pub fn hw_set_via_chains(n: usize, l: usize, r: usize, mu: &Partition) -> Result<Vec<HwSetEntry>> {
    check_hw(n, l, r, mu)?;
    let mut out = Vec::new();
    fn rec(
        n: usize,
        l: usize,
        mu: &[usize],
        nu: &Partition,
        cur: &mut Vec<CrystalElement>,
        out: &mut Vec<Vec<CrystalElement>>,
    ) {
        let a = cur.len();
        if a == mu.len() {
            out.push(cur.clone());
            return;
        }
        for next in horizontal_strips(nu, mu[a], n) {
            // The strip's first row must fit against the previous last row;
            // checking only the new diagram admits strips through row n.
            if next.first() > l + nu.part(n - 1) {
                continue;
            }
            let x: Vec<usize> = (0..n).map(|i| next.part(i) - nu.part(i)).collect();
            cur.push(CrystalElement::new_unchecked(Kind::Sym, x));
            rec(n, l, mu, &next, cur, out);
            cur.pop();
        }
    }
    rec(
        n,
        l,
        mu.parts(),
        &Partition::rectangle(l, r),
        &mut Vec::new(),
        &mut out,
    );
    let mut res = out
        .into_iter()
        .map(|c| hw_entry(n, l, r, c))
        .collect::<Result<Vec<_>>>()?;
    res.sort();
    Ok(res)
}

/// One summand per element of `H(l Lambda_r, mu)`: the highest weight
/// `l Lambda_r + wt p` and the `delta` coefficient `-(E(p) - Ebar)`.
pub fn decompose(
    n: usize,
    l: usize,
    r: usize,
    mu: &Partition,
) -> Result<Vec<(ClassicalWeight, Rational)>> {
    let gs = ground_state_energy(n, l, r, mu)?;
    Ok(hw_set(n, l, r, mu)?
        .into_iter()
        .map(|e| {
            let d = gs.clone() - Rational::from_integer(BigInt::from(e.energy));
            (e.weight, d)
        })
        .collect())
}

/// The partition `lambda` with `lambda_i - lambda_{i+1} = <h_i, w>` for
/// `1 <= i <= n-1` and `|lambda| = size`, if one exists.
pub fn partition_for_weight(w: &ClassicalWeight, size: usize) -> Option<Partition> {
    let n = w.a.len();
    let mut rest = size as i64;
    for i in 1..n {
        if w.a[i] < 0 {
            return None;
        }
        rest -= i as i64 * w.a[i];
    }
    if rest < 0 || rest % n as i64 != 0 {
        return None;
    }
    let mut parts = vec![rest / n as i64; n];
    for i in (0..n - 1).rev() {
        parts[i] = parts[i + 1] + w.a[i + 1];
    }
    Partition::new(parts.into_iter().map(|x| x as usize).collect()).ok()
}

/// `X^(l)'_eta(Lambda)`: the antisymmetric level-`l` restricted 1dsum ending
/// at the level-`l` weight `Lambda`; zero when no partition of `|eta|`
/// carries that weight.
pub fn restricted_antisym_sum(
    n: usize,
    l: usize,
    eta: &Partition,
    target: &ClassicalWeight,
) -> Result<LaurentPoly> {
    if target.a.len() != n || target.level() != l as i64 || !target.is_dominant() {
        return Err(invalid!("{target} is not a dominant level-{l} weight for n = {n}"));
    }
    let Some(lambda) = partition_for_weight(target, eta.size()) else {
        return Ok(LaurentPoly::zero());
    };
    onedsum(n, eta, Kind::Antisym, &PathClass::Restricted { level: l, lambda })
}

/// `sum_{p in H(l Lambda_r, mu)} q^{E(p)} X^(l)'_eta(l Lambda_r + wt p)`.
pub fn hw_restricted_sum(
    n: usize,
    l: usize,
    r: usize,
    mu: &Partition,
    eta: &Partition,
) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for e in hw_set(n, l, r, mu)? {
        let x = restricted_antisym_sum(n, l, eta, &e.weight)?;
        acc += &x.shift(&Rational::from_integer(BigInt::from(e.energy)));
    }
    Ok(acc)
}

/// Converts [`onedsum_coeffs`] output to a dense polynomial in `q^{±E}`.
pub fn coeffs_to_dense(coeffs: &[u128]) -> DensePoly {
    DensePoly {
        low: 0,
        coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{kostka_foulkes, kostka_number, partitions_bounded, partitions_of};
    use crate::crystal::weight_to_composition;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hw_restricted_sum_example() {
        let lhs = hw_restricted_sum(3, 3, 1, &part(&[2, 1]), &part(&[2, 2, 1, 1])).unwrap();
        assert_eq!(lhs, LaurentPoly::from_coeffs(1, &[1, 3, 1]));
        let w = ClassicalWeight { a: vec![1, 1, 1] };
        assert_eq!(partition_for_weight(&w, 6), Some(part(&[3, 2, 1])));
        assert_eq!(partition_for_weight(&w, 5), None);
        let x = restricted_antisym_sum(3, 3, &part(&[2, 2, 1, 1]), &w).unwrap();
        assert_eq!(x, LaurentPoly::from_coeffs(1, &[1, 2, 1]));
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    /// The table of all 24 paths of weight (321) and shape (2211), n = 3.
    const SYM_TABLE: [(&str, i64); 24] = [
        ("11⊗12⊗2⊗3", 3),
        ("11⊗12⊗3⊗2", 2),
        ("11⊗13⊗2⊗2", 4),
        ("11⊗22⊗1⊗3", 2),
        ("11⊗22⊗3⊗1", 1),
        ("11⊗23⊗1⊗2", 2),
        ("11⊗23⊗2⊗1", 3),
        ("12⊗11⊗2⊗3", 4),
        ("12⊗11⊗3⊗2", 5),
        ("12⊗12⊗1⊗3", 3),
        ("12⊗12⊗3⊗1", 2),
        ("12⊗13⊗1⊗2", 3),
        ("12⊗13⊗2⊗1", 4),
        ("12⊗23⊗1⊗1", 3),
        ("13⊗11⊗2⊗2", 5),
        ("13⊗12⊗1⊗2", 3),
        ("13⊗12⊗2⊗1", 4),
        ("13⊗22⊗1⊗1", 4),
        ("22⊗11⊗1⊗3", 6),
        ("22⊗11⊗3⊗1", 5),
        ("22⊗13⊗1⊗1", 4),
        ("23⊗11⊗1⊗2", 6),
        ("23⊗11⊗2⊗1", 5),
        ("23⊗12⊗1⊗1", 7),
    ];

    const ANTI_TABLE: [(&str, i64); 12] = [
        ("12⊗12⊗13⊗3", -2),
        ("12⊗13⊗12⊗3", -3),
        ("12⊗13⊗13⊗2", -3),
        ("12⊗13⊗23⊗1", -4),
        ("12⊗23⊗13⊗1", -2),
        ("13⊗12⊗12⊗3", -1),
        ("13⊗12⊗13⊗2", -2),
        ("13⊗12⊗23⊗1", -1),
        ("13⊗13⊗12⊗2", 0),
        ("13⊗23⊗12⊗1", -2),
        ("23⊗12⊗13⊗1", -1),
        ("23⊗13⊗12⊗1", 0),
    ];

    fn as_table(v: &[(Path, i64)]) -> Vec<(alloc::string::String, i64)> {
        let mut t: Vec<_> = v.iter().map(|(p, e)| (p.to_string(), *e)).collect();
        t.sort();
        t
    }

    #[test]
    fn symmetric_table() {
        let mu = part(&[2, 2, 1, 1]);
        let all = enumerate_paths(3, &mu, Kind::Sym, &PathClass::Unrestricted(comp(&[3, 2, 1]))).unwrap();
        let want: Vec<_> = SYM_TABLE.iter().map(|(s, e)| (alloc::string::String::from(*s), *e)).collect();
        assert_eq!(as_table(&all), want);
        let c = enumerate_paths(3, &mu, Kind::Sym, &PathClass::Classical(part(&[3, 2, 1]))).unwrap();
        let mut es: Vec<i64> = c.iter().map(|x| x.1).collect();
        es.sort();
        assert_eq!(es, vec![1, 2, 2, 3]);
        let r = enumerate_paths(
            3,
            &mu,
            Kind::Sym,
            &PathClass::Restricted { level: 2, lambda: part(&[3, 2, 1]) },
        )
        .unwrap();
        assert_eq!(as_table(&r), vec![("11⊗22⊗3⊗1".into(), 1)]);
    }

    #[test]
    fn antisymmetric_table() {
        let mu = part(&[2, 2, 2, 1]);
        let all = enumerate_paths(3, &mu, Kind::Antisym, &PathClass::Unrestricted(comp(&[3, 2, 2]))).unwrap();
        let want: Vec<_> = ANTI_TABLE.iter().map(|(s, e)| (alloc::string::String::from(*s), *e)).collect();
        assert_eq!(as_table(&all), want);
        let c = enumerate_paths(3, &mu, Kind::Antisym, &PathClass::Classical(part(&[3, 2, 2]))).unwrap();
        assert_eq!(
            as_table(&c),
            vec![
                ("12⊗12⊗13⊗3".into(), -2),
                ("12⊗13⊗12⊗3".into(), -3),
                ("12⊗13⊗23⊗1".into(), -4)
            ]
        );
        let r = enumerate_paths(
            3,
            &mu,
            Kind::Antisym,
            &PathClass::Restricted { level: 1, lambda: part(&[3, 2, 2]) },
        )
        .unwrap();
        assert_eq!(as_table(&r), vec![("12⊗13⊗23⊗1".into(), -4)]);
    }

    #[test]
    fn one_dim_sums_of_the_tables() {
        let g = onedsum(3, &part(&[2, 2, 1, 1]), Kind::Sym, &PathClass::Unrestricted(comp(&[3, 2, 1]))).unwrap();
        assert_eq!(g, LaurentPoly::from_coeffs(1, &[1, 4, 6, 6, 4, 2, 1]));
        let g = onedsum(3, &part(&[2, 2, 2, 1]), Kind::Antisym, &PathClass::Unrestricted(comp(&[3, 2, 2]))).unwrap();
        assert_eq!(g, LaurentPoly::from_coeffs(0, &[2, 3, 4, 2, 1]));
        let x = onedsum(3, &part(&[2, 2, 1, 1]), Kind::Sym, &PathClass::Classical(part(&[3, 2, 1]))).unwrap();
        assert_eq!(x, LaurentPoly::from_coeffs(1, &[1, 2, 1]));
    }

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

    #[test]
    fn transfer_matrix_matches_enumeration() {
        for n in 2..=3 {
            for size in 1..=6 {
                for mu in partitions_of(size) {
                    for kind in [Kind::Sym, Kind::Antisym] {
                        if kind == Kind::Antisym && mu.first() >= n {
                            continue;
                        }
                        for lam in compositions(size, n) {
                            let mut classes = vec![PathClass::Unrestricted(comp(&lam))];
                            if lam.windows(2).all(|w| w[0] >= w[1]) {
                                let p = Partition::new(lam.clone()).unwrap();
                                classes.push(PathClass::Classical(p.clone()));
                                for level in 1..=3 {
                                    if lam[0] <= level + lam[n - 1]
                                        && (kind == Kind::Antisym || mu.first() <= level)
                                    {
                                        classes.push(PathClass::Restricted { level, lambda: p.clone() });
                                    }
                                }
                            }
                            for class in &classes {
                                let a = onedsum(n, &mu, kind, class).unwrap();
                                let b = onedsum_by_enumeration(n, &mu, kind, class).unwrap();
                                assert_eq!(a, b, "n={n} mu={mu} {kind:?} {class:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_is_exact_below_cap() {
        let mu = part(&[2, 2, 2, 1, 1, 1]);
        let class = PathClass::Unrestricted(comp(&[3, 3, 3]));
        let full = onedsum_coeffs(3, &mu, Kind::Sym, &class, None).unwrap();
        for cap in 0..full.len() {
            let t = onedsum_coeffs(3, &mu, Kind::Sym, &class, Some(cap)).unwrap();
            let mut want = full[..=cap].to_vec();
            while want.last() == Some(&0) {
                want.pop();
            }
            assert_eq!(t, want);
        }
    }

    #[test]
    fn classical_sums_are_kostka_foulkes() {
        for n in 2..=4 {
            for size in 1..=6 {
                for mu in partitions_of(size) {
                    for lam in partitions_bounded(size, n, size) {
                        let x = onedsum(n, &mu, Kind::Sym, &PathClass::Classical(lam.clone())).unwrap();
                        let k = kostka_foulkes(&lam, &comp(mu.parts())).unwrap();
                        assert_eq!(x, k, "n={n} lam={lam} mu={mu}");
                        if mu.first() < n && lam.first() <= n {
                            let conj = lam.conjugate();
                            if conj.len() <= n {
                                let xp = onedsum(n, &mu, Kind::Antisym, &PathClass::Classical(conj)).unwrap();
                                assert_eq!(xp, k, "antisym n={n} lam'={lam} mu={mu}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unrestricted_sum_is_symmetric_and_kostka_expanded() {
        for n in 2..=3 {
            for size in 1..=5 {
                for mu in partitions_of(size) {
                    for lam in compositions(size, n) {
                        let g = onedsum(n, &mu, Kind::Sym, &PathClass::Unrestricted(comp(&lam))).unwrap();
                        let mut sorted = lam.clone();
                        sorted.sort_unstable_by(|a, b| b.cmp(a));
                        let g2 = onedsum(n, &mu, Kind::Sym, &PathClass::Unrestricted(comp(&sorted))).unwrap();
                        assert_eq!(g, g2);
                        let mut rhs = LaurentPoly::zero();
                        for eta in partitions_bounded(size, n, size) {
                            let k = kostka_number(&eta, &comp(&lam)).unwrap();
                            rhs += &kostka_foulkes(&eta, &comp(mu.parts())).unwrap().scale(&k);
                        }
                        assert_eq!(g, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn restricted_union_is_hw_set() {
        for n in 2..=3 {
            for l in 1..=3 {
                for size in 1..=5 {
                    for mu in partitions_of(size).into_iter().filter(|m| m.first() <= l) {
                        let hw = hw_set(n, l, 0, &mu).unwrap();
                        let mut total = 0;
                        for lam in partitions_bounded(size, n, size) {
                            let v = pad(&lam, n).unwrap();
                            if v[0] > l + v[n - 1] {
                                continue;
                            }
                            let ps = enumerate_paths(
                                n,
                                &mu,
                                Kind::Sym,
                                &PathClass::Restricted { level: l, lambda: lam.clone() },
                            )
                            .unwrap();
                            for (p, _) in &ps {
                                assert!(hw.iter().any(|e| &e.path == p));
                                assert_eq!(weight_to_composition(p).parts(), v.as_slice());
                            }
                            total += ps.len();
                        }
                        assert_eq!(total, hw.len(), "n={n} l={l} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn hw_set_examples() {
        let h = hw_set(3, 3, 1, &part(&[2, 1])).unwrap();
        let words: Vec<_> = h.iter().map(|e| (e.path.to_string(), e.energy, e.weight.to_string())).collect();
        assert_eq!(
            words,
            vec![
                ("22⊗3".into(), 0, "Λ0+Λ1+Λ2".into()),
                ("22⊗2".into(), 1, "3Λ2".into())
            ]
        );
        for n in 2..=4 {
            for l in 1..=3 {
                for r in 0..n {
                    for s in 1..=l {
                        let h = hw_set(n, l, r, &part(&[s])).unwrap();
                        assert_eq!(h.len(), 1);
                        let mut want = vec![0; n];
                        want[r] = s;
                        assert_eq!(h[0].path.components()[0].coords(), want.as_slice());
                    }
                }
            }
        }
    }

    #[test]
    fn two_row_hw_set_closed_form() {
        let n = 3;
        for l in 1..=4 {
            for s in 1..=l {
                for t in 1..=s {
                    let h = hw_set(n, l, 0, &part(&[s, t])).unwrap();
                    let mut got: Vec<Vec<i64>> = h.iter().map(|e| e.weight.a.clone()).collect();
                    got.sort();
                    let mut want: Vec<Vec<i64>> = (0..=(l - s).min(t))
                        .map(|i| vec![(l - s - i) as i64, (s - t + 2 * i) as i64, (t - i) as i64])
                        .collect();
                    want.sort();
                    assert_eq!(got, want, "l={l} s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn chains_agree_with_hw_set() {
        for n in 2..=3 {
            for l in 1..=3 {
                for r in 0..n {
                    for size in 1..=6 {
                        for mu in partitions_of(size).into_iter().filter(|m| m.first() <= l) {
                            let a = hw_set(n, l, r, &mu).unwrap();
                            let b = hw_set_via_chains(n, l, r, &mu).unwrap();
                            assert_eq!(a, b, "n={n} l={l} r={r} mu={mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn final_diagram_weight() {
        let (n, l) = (3, 3);
        for r in 0..n {
            for mu in partitions_of(5).into_iter().filter(|m| m.first() <= l) {
                for e in hw_set(n, l, r, &mu).unwrap() {
                    let mut nu = vec![0usize; n];
                    for i in 0..r {
                        nu[i] = l;
                    }
                    for b in e.path.components() {
                        for (v, x) in nu.iter_mut().zip(b.coords()) {
                            *v += x;
                        }
                    }
                    let conj = Partition::new(nu).unwrap().conjugate();
                    let mut w = ClassicalWeight::fundamental(n, l, 0);
                    // One Lambda_h - Lambda_0 per column of height h.
                    for &h in conj.parts() {
                        w.a[h % n] += 1;
                        w.a[0] -= 1;
                    }
                    assert_eq!(w, e.weight);
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(3, 3, 1, &part(&[2, 1])).unwrap();
        assert_eq!(d.len(), 2);
        // Rectangles give a single summand sigma^m(l Lambda_r).
        for n in 2..=4 {
            for l in 1..=3 {
                for r in 0..n {
                    for m in 1..=4 {
                        let d = decompose(n, l, r, &Partition::rectangle(l, m)).unwrap();
                        assert_eq!(d.len(), 1);
                        assert_eq!(d[0].0, ClassicalWeight::fundamental(n, l, r + m));
                    }
                }
            }
        }
    }

    #[test]
    fn bad_inputs() {
        let mu = part(&[2, 1]);
        assert!(enumerate_paths(3, &mu, Kind::Sym, &PathClass::Unrestricted(comp(&[2, 2, 0]))).is_err());
        assert!(enumerate_paths(2, &part(&[2]), Kind::Antisym, &PathClass::Unrestricted(comp(&[1, 1]))).is_err());
        assert!(enumerate_paths(
            3,
            &part(&[3]),
            Kind::Sym,
            &PathClass::Restricted { level: 2, lambda: part(&[1, 1, 1]) }
        )
        .is_err());
        assert!(hw_set(3, 1, 0, &mu).is_err());
    }
}
