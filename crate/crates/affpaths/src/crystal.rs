//! The crystals `B_(l)` (symmetric) and `B_(1^l)` (antisymmetric) of affine
//! `sl_n`, Kashiwara operators, classical weights and the tensor product rule.
//!
//! An element is a coordinate vector `(x_1, ..., x_n)`; `f_i` moves one unit
//! from row `i` to row `i+1`, and `f_0` moves one unit from row `n` to row 1.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Composition, Partition};
use crate::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Sym,
    Antisym,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Sym => "sym",
            Kind::Antisym => "antisym",
        }
    }
}

impl core::str::FromStr for Kind {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" | "symmetric" => Ok(Kind::Sym),
            "antisym" | "antisymmetric" => Ok(Kind::Antisym),
            _ => Err(invalid!("unknown crystal kind {s:?} (expected sym or antisym)")),
        }
    }
}

/// Raising (`E`) or lowering (`F`) operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalElement {
    kind: Kind,
    coords: Vec<usize>,
}

impl CrystalElement {
    pub fn new(kind: Kind, coords: Vec<usize>) -> Result<Self> {
        let n = coords.len();
        if n < 2 {
            return Err(invalid!("rank n must be at least 2, got {n}"));
        }
        if kind == Kind::Antisym {
            if coords.iter().any(|&x| x > 1) {
                return Err(invalid!("antisymmetric coordinates must be 0/1: {coords:?}"));
            }
            let l: usize = coords.iter().sum();
            if l >= n {
                return Err(invalid!("antisymmetric degree {l} must be below n = {n}"));
            }
        }
        Ok(Self { kind, coords })
    }

    pub(crate) fn new_unchecked(kind: Kind, coords: Vec<usize>) -> Self {
        Self { kind, coords }
    }

    /// Parses a tableau word such as `"133"`, i.e. `1^{x_1} 2^{x_2} ...`.
    /// Letters may appear in any order; `"-"` or `""` is the empty word.
    pub fn from_word(kind: Kind, n: usize, word: &str) -> Result<Self> {
        let mut coords = vec![0; n];
        let word = if word == "-" { "" } else { word };
        for ch in word.chars() {
            let d = ch
                .to_digit(36)
                .filter(|&d| d >= 1 && (d as usize) <= n)
                .ok_or_else(|| invalid!("bad letter {ch:?} in word {word:?} for n = {n}"))?;
            coords[d as usize - 1] += 1;
        }
        Self::new(kind, coords)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.coords.iter().sum()
    }

    /// `x_i` with 1-based cyclic row index.
    pub fn x(&self, row: usize) -> usize {
        let n = self.n();
        self.coords[(row + n - 1) % n]
    }

    /// Tableau word, `"-"` for the empty element. Rows above 9 use base 36.
    pub fn word(&self) -> String {
        let mut s = String::new();
        for (i, &x) in self.coords.iter().enumerate() {
            let c = char::from_digit(i as u32 + 1, 36).unwrap_or('?');
            for _ in 0..x {
                s.push(c);
            }
        }
        if s.is_empty() {
            s.push('-');
        }
        s
    }

    pub fn epsilon(&self, i: usize) -> usize {
        epsilon(i, self)
    }

    pub fn phi(&self, i: usize) -> usize {
        phi(i, self)
    }

    pub fn weight(&self) -> ClassicalWeight {
        let mut w = ClassicalWeight::zero(self.n());
        w.add_element(self);
        w
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Source and target rows (0-based) of the unit moved by `f_i`.
fn f_move(i: usize, n: usize) -> (usize, usize) {
    if i == 0 {
        (n - 1, 0)
    } else {
        (i - 1, i)
    }
}

/// `epsilon_i(b)`: the number of times `e_i` applies to `b`.
pub fn epsilon(i: usize, b: &CrystalElement) -> usize {
    let n = b.n();
    let (src, dst) = f_move(i % n, n);
    match b.kind {
        Kind::Sym => b.coords[dst],
        Kind::Antisym => usize::from(b.coords[dst] == 1 && b.coords[src] == 0),
    }
}

/// `phi_i(b)`: the number of times `f_i` applies to `b`.
pub fn phi(i: usize, b: &CrystalElement) -> usize {
    let n = b.n();
    let (src, dst) = f_move(i % n, n);
    match b.kind {
        Kind::Sym => b.coords[src],
        Kind::Antisym => usize::from(b.coords[src] == 1 && b.coords[dst] == 0),
    }
}

pub fn apply_f(i: usize, b: &CrystalElement) -> Option<CrystalElement> {
    if phi(i, b) == 0 {
        return None;
    }
    let (src, dst) = f_move(i % b.n(), b.n());
    let mut c = b.coords.clone();
    c[src] -= 1;
    c[dst] += 1;
    Some(CrystalElement::new_unchecked(b.kind, c))
}

pub fn apply_e(i: usize, b: &CrystalElement) -> Option<CrystalElement> {
    if epsilon(i, b) == 0 {
        return None;
    }
    let (src, dst) = f_move(i % b.n(), b.n());
    let mut c = b.coords.clone();
    c[dst] -= 1;
    c[src] += 1;
    Some(CrystalElement::new_unchecked(b.kind, c))
}

/// All elements of `B_(l)` or `B_(1^l)` in lexicographically decreasing
/// coordinate order (so `(l,0,..,0)` comes first).
pub fn all_elements(kind: Kind, n: usize, l: usize) -> Result<Vec<CrystalElement>> {
    if n < 2 {
        return Err(invalid!("rank n must be at least 2, got {n}"));
    }
    if kind == Kind::Antisym && l >= n {
        return Err(invalid!("antisymmetric degree {l} must be below n = {n}"));
    }
    let cap = match kind {
        Kind::Sym => l,
        Kind::Antisym => 1,
    };
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(
        kind: Kind,
        pos: usize,
        rest: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<CrystalElement>,
    ) {
        let n = cur.len();
        if pos == n - 1 {
            if rest <= cap {
                cur[pos] = rest;
                out.push(CrystalElement::new_unchecked(kind, cur.clone()));
            }
            return;
        }
        for x in (0..=rest.min(cap)).rev() {
            cur[pos] = x;
            rec(kind, pos + 1, rest - x, cap, cur, out);
        }
        cur[pos] = 0;
    }
    rec(kind, 0, l, cap, &mut cur, &mut out);
    Ok(out)
}

/// Coefficients of `Lambda^cl_0, ..., Lambda^cl_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalWeight {
    pub a: Vec<i64>,
}

impl ClassicalWeight {
    pub fn zero(n: usize) -> Self {
        Self { a: vec![0; n] }
    }

    /// `l Lambda_r`.
    pub fn fundamental(n: usize, l: usize, r: usize) -> Self {
        let mut w = Self::zero(n);
        w.a[r % n] = l as i64;
        w
    }

    pub fn level(&self) -> i64 {
        self.a.iter().sum()
    }

    /// `<h_i, self>`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.a[i % self.a.len()]
    }

    pub fn is_dominant(&self) -> bool {
        self.a.iter().all(|&x| x >= 0)
    }

    /// Adds `wt b = sum_i x_i (Lambda_i - Lambda_{i-1})`.
    pub fn add_element(&mut self, b: &CrystalElement) {
        let n = self.a.len();
        for (k, &x) in b.coords.iter().enumerate() {
            let x = x as i64;
            self.a[(k + 1) % n] += x;
            self.a[k] -= x;
        }
    }

    pub fn add(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }
}

impl fmt::Display for ClassicalWeight {
    /// Written as e.g. `Λ0+Λ1+Λ2` or `3Λ2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}Λ{i}")?;
            } else {
                write!(f, "{sign}{mag}Λ{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `b_1 ⊗ ... ⊗ b_m`; all components share `n` and the kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    kind: Kind,
    n: usize,
    components: Vec<CrystalElement>,
}

impl Path {
    pub fn new(kind: Kind, n: usize, components: Vec<CrystalElement>) -> Result<Self> {
        for b in &components {
            if b.kind != kind {
                return Err(invalid!("mixed symmetric and antisymmetric components"));
            }
            if b.n() != n {
                return Err(invalid!("component {b} has rank {} but n = {n}", b.n()));
            }
        }
        Ok(Self {
            kind,
            n,
            components,
        })
    }

    pub(crate) fn new_unchecked(kind: Kind, n: usize, components: Vec<CrystalElement>) -> Self {
        Self {
            kind,
            n,
            components,
        }
    }

    /// Builds a path from coordinate vectors.
    pub fn from_coords(kind: Kind, coords: &[Vec<usize>]) -> Result<Self> {
        let n = coords
            .first()
            .map(|c| c.len())
            .ok_or_else(|| invalid!("a path needs at least one component"))?;
        let comps = coords
            .iter()
            .map(|c| CrystalElement::new(kind, c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, n, comps)
    }

    /// Parses `"133⊗22⊗23⊗2"`; `x`, `*` and whitespace also separate factors.
    pub fn parse(kind: Kind, n: usize, s: &str) -> Result<Self> {
        let comps = s
            .split(['⊗', 'x', '*', ' '])
            .filter(|w| !w.is_empty())
            .map(|w| CrystalElement::from_word(kind, n, w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, n, comps)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[CrystalElement] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Component degrees in order; a partition whenever the path is valid
    /// for energy computations.
    pub fn shape(&self) -> Vec<usize> {
        self.components.iter().map(|b| b.degree()).collect()
    }

    pub fn shape_partition(&self) -> Result<Partition> {
        Partition::new(self.shape())
    }

    pub fn weight(&self) -> ClassicalWeight {
        let mut w = ClassicalWeight::zero(self.n);
        for b in &self.components {
            w.add_element(b);
        }
        w
    }

    /// Tensor product `epsilon_i`.
    pub fn epsilon(&self, i: usize) -> usize {
        self.reduced_signature(i).0.len()
    }

    /// Tensor product `phi_i`.
    pub fn phi(&self, i: usize) -> usize {
        self.reduced_signature(i).1.len()
    }

    /// Unmatched `-` and `+` positions (component indices) after cancelling
    /// every `+` that sits left of a `-`.
    fn reduced_signature(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        let mut minus: Vec<usize> = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (k, b) in self.components.iter().enumerate() {
            for _ in 0..epsilon(i, b) {
                if plus.pop().is_none() {
                    minus.push(k);
                }
            }
            for _ in 0..phi(i, b) {
                plus.push(k);
            }
        }
        (minus, plus)
    }

    pub fn apply(&self, op: Op, i: usize) -> Option<Path> {
        path_apply(op, i, self)
    }

    /// Human-readable form `133⊗22⊗23⊗2`.
    pub fn words(&self) -> String {
        let mut s = String::new();
        for (k, b) in self.components.iter().enumerate() {
            if k > 0 {
                s.push('⊗');
            }
            s.push_str(&b.word());
        }
        s
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.words())
    }
}

/// Kashiwara operator on a tensor product by the signature rule: `f_i` acts on
/// the leftmost unmatched `+`, `e_i` on the rightmost unmatched `-`.
pub fn path_apply(op: Op, i: usize, p: &Path) -> Option<Path> {
    let (minus, plus) = p.reduced_signature(i);
    let (k, new) = match op {
        Op::F => {
            let k = *plus.first()?;
            (k, apply_f(i, &p.components[k])?)
        }
        Op::E => {
            let k = *minus.last()?;
            (k, apply_e(i, &p.components[k])?)
        }
    };
    let mut comps = p.components.clone();
    comps[k] = new;
    Some(Path::new_unchecked(p.kind, p.n, comps))
}

pub fn weight(p: &Path) -> ClassicalWeight {
    p.weight()
}

/// `lambda_i = sum_j x_i(b_j)`.
pub fn weight_to_composition(p: &Path) -> Composition {
    let mut c = vec![0; p.n];
    for b in &p.components {
        for (ci, &x) in c.iter_mut().zip(&b.coords) {
            *ci += x;
        }
    }
    Composition::new(c)
}
