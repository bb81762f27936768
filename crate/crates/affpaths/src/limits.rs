//! Large shape limits of normalized one-dimensional sums, computed at finite
//! size and accepted once the low-order coefficients freeze.
//!
//! A ladder of shapes is evaluated with the energy capped at
//! `Ebar + order`. A window is accepted when two consecutive rungs agree
//! through `order` and one further audit rung agrees as well.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{plus_op, union_op, Composition, Partition};
use crate::crystal::Kind;
use crate::energy::ground_state_energy;
use crate::fermionic::f_l;
use crate::paths::{onedsum_truncated, PathClass};
use crate::qalgebra::{rat, rat_floor, rat_int, LaurentPoly, QSeries, Rational};
use crate::{invalid, Error, Result};

/// Which 1dsum is normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitClass {
    /// `g_mu(lambda)`, all paths of a given content.
    Unrestricted,
    /// `X_mu(lambda)`, classically restricted paths.
    Classical,
    /// `X^(l)_mu(lambda)`, level restricted paths.
    Restricted,
}

/// Ladder length and bookkeeping for the stabilization search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LadderConfig {
    /// Number of rungs after the first one; the largest shape has `L` about
    /// `r + max_steps * n`.
    pub max_steps: usize,
}

impl Default for LadderConfig {
    fn default() -> Self {
        Self { max_steps: 8 }
    }
}

/// A stabilized series and where it froze.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilized {
    pub series: QSeries,
    /// Ladder index of the first rung of the accepting pair.
    pub accepted_at: usize,
    /// Shape sizes `|mu_L|` visited, in order.
    pub sizes: Vec<usize>,
}

/// Runs the ladder: `rung(k)` returns the normalized series at step `k`,
/// or `None` when that rung is not admissible (skipped).
fn ladder(
    cfg: LadderConfig,
    order: i64,
    what: &str,
    mut rung: impl FnMut(usize) -> Result<Option<(QSeries, usize)>>,
) -> Result<Stabilized> {
    let mut prev: Option<QSeries> = None;
    let mut run = 0;
    let mut start = 0;
    let mut sizes = Vec::new();
    for k in 0..=cfg.max_steps {
        let Some((s, size)) = rung(k)? else { continue };
        sizes.push(size);
        match &prev {
            Some(p) if p.agrees_with(&s, order) => {
                run += 1;
                // Two agreeing windows, then the audit rung.
                if run == 2 {
                    return Ok(Stabilized {
                        series: s,
                        accepted_at: start,
                        sizes,
                    });
                }
            }
            _ => {
                run = 0;
                start = sizes.len() - 1;
            }
        }
        prev = Some(s);
    }
    Err(Error::NotStabilized(format!(
        "{what}: coefficients through q^{order} did not freeze for sizes {sizes:?}"
    )))
}

/// `q^{-Ebar(l Lambda_0, mu)} * sum` as a series through `order`, computing
/// the sum with energies capped at `Ebar + order`.
fn normalized(
    n: usize,
    l: usize,
    mu: &Partition,
    class: &PathClass,
    order: i64,
) -> Result<QSeries> {
    let gs = ground_state_energy(n, l, 0, mu)?;
    let cap = rat_floor(&(&gs + rat_int(order)));
    if cap < 0 {
        return Ok(QSeries::zero(-gs, order));
    }
    let p = onedsum_truncated(n, mu, Kind::Sym, class, cap as usize)?;
    let p = p.shift(&-gs).truncate(&rat_int(order));
    QSeries::from_poly(&p, order).map_err(|e| match e {
        Error::NonIntegral(m) => Error::NonIntegral(format!("shape {mu}: {m}")),
        e => e,
    })
}

/// `lambda + c (1^n)` with `|result| = size`; `None` when `c` is not a
/// nonnegative integer.
fn padded_weight(n: usize, lambda: &Composition, size: usize) -> Option<Vec<usize>> {
    let diff = size as i64 - lambda.size() as i64;
    if diff < 0 || diff % n as i64 != 0 {
        return None;
    }
    let c = (diff / n as i64) as usize;
    Some(lambda.parts().iter().map(|&x| x + c).collect())
}

fn class_for(
    n: usize,
    l: usize,
    class: LimitClass,
    lam: Vec<usize>,
) -> Result<PathClass> {
    Ok(match class {
        LimitClass::Unrestricted => PathClass::Unrestricted(Composition::new(lam)),
        LimitClass::Classical | LimitClass::Restricted => {
            if lam.windows(2).any(|w| w[0] < w[1]) {
                return Err(invalid!("classical weight {lam:?} is not dominant"));
            }
            let lambda = Partition::new(lam)?;
            if class == LimitClass::Classical {
                PathClass::Classical(lambda)
            } else {
                if lambda.part(0) > l + lambda.part(n - 1) {
                    return Err(invalid!("{lambda} is not a level-{l} weight"));
                }
                PathClass::Restricted { level: l, lambda }
            }
        }
    })
}

fn check_lambda(n: usize, lambda: &Composition) -> Result<()> {
    if n < 2 {
        return Err(invalid!("rank n must be at least 2, got {n}"));
    }
    if lambda.len() != n {
        return Err(invalid!(
            "weight {:?} must have exactly n = {n} entries",
            lambda.parts()
        ));
    }
    Ok(())
}

/// Limit of `q^{-Ebar(l Lambda_0, mu_L)} Y_{mu_L}(lambda_L)` along
/// `mu_L = (l^L) ∪ nu`, `L = r, r+n, r+2n, ...`, where `Y` is the 1dsum
/// selected by `class` and `lambda_L = lambda + c (1^n)` has size `|mu_L|`.
/// Rungs where `lambda` cannot be padded to that size contribute zero.
pub fn stabilized_limit(
    n: usize,
    l: usize,
    r: usize,
    nu: &Partition,
    class: LimitClass,
    lambda: &Composition,
    order: i64,
    cfg: LadderConfig,
) -> Result<Stabilized> {
    check_lambda(n, lambda)?;
    if l == 0 || nu.first() >= l {
        return Err(invalid!("need nu_1 < l, got nu = {nu}, l = {l}"));
    }
    if r >= n {
        return Err(invalid!("residue r = {r} must be below n = {n}"));
    }
    let what = format!("limit n={n} l={l} r={r} nu={nu} lambda={:?}", lambda.parts());
    ladder(cfg, order, &what, |k| {
        let mu = union_op(&Partition::rectangle(l, r + k * n), nu)?;
        let Some(lam) = padded_weight(n, lambda, mu.size()) else {
            if mu.size() < lambda.size() {
                return Ok(None);
            }
            return Ok(Some((QSeries::zero(rat_int(0), order), mu.size())));
        };
        let pc = class_for(n, l, class, lam)?;
        Ok(Some((normalized(n, l, &mu, &pc, order)?, mu.size())))
    })
}

/// Limit of `q^{-Ebar(l Lambda_0, mu)} g_mu(lambda)` along
/// `mu = (l_1^{L_1}) + ... + (l_s^{L_s})` with `l = sum l_J`,
/// `L_J = r_J mod n` and every gap `L_J - L_{J+1}` growing by `n` per rung.
pub fn stabilized_tensor_limit(
    n: usize,
    parts: &[(usize, usize)],
    lambda: &Composition,
    order: i64,
    cfg: LadderConfig,
) -> Result<Stabilized> {
    check_lambda(n, lambda)?;
    if parts.is_empty() || parts.iter().any(|&(lj, rj)| lj == 0 || rj >= n) {
        return Err(invalid!("factors need l_J >= 1 and r_J < n, got {parts:?}"));
    }
    let l: usize = parts.iter().map(|p| p.0).sum();
    let s = parts.len();
    let what = format!("tensor limit n={n} parts={parts:?} lambda={:?}", lambda.parts());
    ladder(cfg, order, &what, |k| {
        let mut lens = vec![0usize; s];
        lens[s - 1] = parts[s - 1].1 + k * n;
        for j in (0..s - 1).rev() {
            let gap = (parts[j].1 + n - parts[j + 1].1) % n;
            lens[j] = lens[j + 1] + gap + k * n;
        }
        let mut mu = Partition::empty();
        for (j, &(lj, _)) in parts.iter().enumerate() {
            mu = plus_op(&mu, &Partition::rectangle(lj, lens[j]));
        }
        let Some(lam) = padded_weight(n, lambda, mu.size()) else {
            if mu.size() < lambda.size() {
                return Ok(None);
            }
            return Ok(Some((QSeries::zero(rat_int(0), order), mu.size())));
        };
        let pc = PathClass::Unrestricted(Composition::new(lam));
        Ok(Some((normalized(n, l, &mu, &pc, order)?, mu.size())))
    })
}

/// How the finite-size restricted sum in the rsos limit is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RsosSource {
    /// The level-truncated fermionic form `F^(l)_{(t^L)}`.
    Fermionic,
    /// Restricted paths `X^(l)_{(t^L)}(l Lambda_0)`.
    Paths,
}

/// `tL(L-n)/2n`, the ground state energy of `(t^L)` at level `l`, `L = 0 mod n`.
pub fn rsos_ground_energy(n: usize, t: usize, len: usize) -> Rational {
    rat((t * len) as i64 * (len as i64 - n as i64), 2 * n as i64)
}

/// Limit of `q^{-Ebar(l Lambda_0, (t^L))}` times the source, `L = 0 mod n`.
pub fn stabilized_rsos_limit(
    n: usize,
    l: usize,
    t: usize,
    source: RsosSource,
    order: i64,
    cfg: LadderConfig,
) -> Result<Stabilized> {
    if n < 2 {
        return Err(invalid!("rank n must be at least 2, got {n}"));
    }
    if t == 0 || t >= l {
        return Err(invalid!("need 1 <= t <= l-1, got t = {t}, l = {l}"));
    }
    let what = format!("rsos limit n={n} l={l} t={t} {source:?}");
    ladder(cfg, order, &what, |k| {
        let len = k * n;
        let mu = Partition::rectangle(t, len);
        let gs = rsos_ground_energy(n, t, len);
        if gs != ground_state_energy(n, l, 0, &mu)? {
            return Err(invalid!("ground state energy of {mu} disagrees with tL(L-n)/2n"));
        }
        let s = match source {
            RsosSource::Paths => {
                let lambda = Partition::rectangle(t * len / n, n);
                normalized(n, l, &mu, &PathClass::Restricted { level: l, lambda }, order)?
            }
            RsosSource::Fermionic => {
                let p: LaurentPoly = f_l(n, l, &mu)?.shift(&-gs).truncate(&rat_int(order));
                QSeries::from_poly(&p, order)?
            }
        };
        Ok(Some((s, mu.size())))
    })
}
