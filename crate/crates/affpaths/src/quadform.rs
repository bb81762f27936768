//! Lattice points under a positive definite quadratic function.
//!
//! `f(x) = x^T Q x + b^T x + c` with rational data. Candidates are generated
//! coordinate by coordinate from a floating point Cholesky factor with a
//! widened interval; every reported point is re-checked exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::qalgebra::Rational;
use crate::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Domain {
    NonNegative,
    Free,
}

#[derive(Clone, Debug)]
pub(crate) struct QuadFn {
    dim: usize,
    /// Integer data over a common denominator: `f = (x^T a x + b^T x + c) / den`.
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    c: i128,
    den: i128,
    /// Upper Cholesky factor of `Q` and the unconstrained minimizer.
    r: Vec<Vec<f64>>,
    center: Vec<f64>,
    fmin: f64,
    domains: Vec<Domain>,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .ok_or_else(|| Error::Overflow("quadratic form coefficient exceeds i128".into()))
}

fn to_f64(x: &Rational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

impl QuadFn {
    pub(crate) fn new(
        q: &[Vec<Rational>],
        b: &[Rational],
        c: &Rational,
        domains: Vec<Domain>,
    ) -> Result<Self> {
        let dim = q.len();
        if b.len() != dim || domains.len() != dim || q.iter().any(|row| row.len() != dim) {
            return Err(invalid!("quadratic form dimensions disagree"));
        }
        for i in 0..dim {
            for j in 0..i {
                if q[i][j] != q[j][i] {
                    return Err(invalid!("quadratic form matrix is not symmetric"));
                }
            }
        }
        // Exact pivots decide definiteness.
        let mut m: Vec<Vec<Rational>> = q.to_vec();
        for k in 0..dim {
            if !m[k][k].is_positive() {
                return Err(invalid!("quadratic form is not positive definite"));
            }
            for i in k + 1..dim {
                let f = &m[i][k] / &m[k][k];
                for j in k..dim {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }

        let mut den = BigInt::one();
        for x in q.iter().flatten().chain(b.iter()).chain(core::iter::once(c)) {
            den = den.lcm(x.denom());
        }
        let scale = |x: &Rational| -> Result<i128> {
            let v = x * Rational::from_integer(den.clone());
            to_i128(&v.to_integer())
        };
        let a = q
            .iter()
            .map(|row| row.iter().map(scale).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let bi = b.iter().map(scale).collect::<Result<Vec<_>>>()?;
        let ci = scale(c)?;
        let den = to_i128(&den)?;

        let qf: Vec<Vec<f64>> = q.iter().map(|row| row.iter().map(to_f64).collect()).collect();
        let mut r = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let mut s = qf[i][j];
                for k in 0..i {
                    s -= r[k][i] * r[k][j];
                }
                if i == j {
                    r[i][i] = libm::sqrt(s.max(0.0));
                } else {
                    r[i][j] = s / r[i][i];
                }
            }
        }
        // center = -Q^{-1} b / 2 via the factor.
        let rhs: Vec<f64> = b.iter().map(|x| -to_f64(x) / 2.0).collect();
        let mut y = vec![0.0; dim];
        for i in 0..dim {
            let mut s = rhs[i];
            for k in 0..i {
                s -= r[k][i] * y[k];
            }
            y[i] = s / r[i][i];
        }
        let mut center = vec![0.0; dim];
        for i in (0..dim).rev() {
            let mut s = y[i];
            for k in i + 1..dim {
                s -= r[i][k] * center[k];
            }
            center[i] = s / r[i][i];
        }
        let mut fmin = to_f64(c);
        for i in 0..dim {
            fmin += to_f64(&b[i]) * center[i] / 2.0;
        }
        Ok(Self {
            dim,
            a,
            b: bi,
            c: ci,
            den,
            r,
            center,
            fmin,
            domains,
        })
    }

    #[cfg(test)]
    pub(crate) fn dim(&self) -> usize {
        self.dim
    }

    /// Exact value at an integer point.
    pub(crate) fn value(&self, x: &[i64]) -> Rational {
        let mut s: i128 = self.c;
        for i in 0..self.dim {
            let xi = x[i] as i128;
            s += self.b[i] * xi;
            for j in 0..self.dim {
                s += self.a[i][j] * xi * x[j] as i128;
            }
        }
        Rational::new(BigInt::from(s), BigInt::from(self.den))
    }

    /// Calls `visit(x, f(x))` for every admissible integer point with
    /// `f(x) <= bound`.
    pub(crate) fn for_each_below(
        &self,
        bound: &Rational,
        mut visit: impl FnMut(&[i64], Rational) -> Result<()>,
    ) -> Result<()> {
        let budget = to_f64(bound) - self.fmin;
        if budget < -1e-6 {
            return Ok(());
        }
        let mut x = vec![0i64; self.dim];
        if self.dim == 0 {
            let v = self.value(&x);
            if v <= *bound {
                visit(&x, v)?;
            }
            return Ok(());
        }
        self.level(self.dim - 1, 0.0, budget, bound, &mut x, &mut visit)
    }

    fn level(
        &self,
        k: usize,
        used: f64,
        budget: f64,
        bound: &Rational,
        x: &mut Vec<i64>,
        visit: &mut impl FnMut(&[i64], Rational) -> Result<()>,
    ) -> Result<()> {
        let rem = budget - used;
        if rem < -1e-6 {
            return Ok(());
        }
        let mut t = 0.0;
        for j in k + 1..self.dim {
            t += self.r[k][j] * (x[j] as f64 - self.center[j]);
        }
        let mid = self.center[k] - t / self.r[k][k];
        let half = libm::sqrt(rem.max(0.0)) / self.r[k][k];
        let slack = 1e-6 * (1.0 + mid.abs() + half);
        let mut lo = libm::floor(mid - half - slack) as i64;
        let hi = libm::ceil(mid + half + slack) as i64;
        if self.domains[k] == Domain::NonNegative {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            x[k] = v;
            let d = self.r[k][k] * (v as f64 - self.center[k]) + t;
            let u = used + d * d;
            if u > budget + 1e-6 * (1.0 + budget.abs()) {
                continue;
            }
            if k == 0 {
                let val = self.value(x);
                if val <= *bound {
                    visit(x, val)?;
                }
            } else {
                self.level(k - 1, u, budget, bound, x, visit)?;
            }
        }
        x[k] = 0;
        Ok(())
    }
}
