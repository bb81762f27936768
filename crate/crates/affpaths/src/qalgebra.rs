//! Exact arithmetic in `q`: Laurent polynomials with rational exponents,
//! dense integer-exponent polynomials, q-binomials and truncated series.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{invalid, Error, Result};

/// Exact rational number with arbitrary-precision parts.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Returns the integer value of `r`, or an error naming `what`.
pub fn rat_to_i64(r: &Rational, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NonIntegral(alloc::format!("{what} = {r}")));
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(alloc::format!("{what} = {r}")))
}

/// Largest integer not exceeding `r`.
pub fn rat_floor(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("exponent fits in i64")
}

/// Finite sum of `c q^e` with rational `e` and integer `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Rational, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::zero(), BigInt::one())
    }

    pub fn monomial(exp: Rational, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^e` for integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(rat_int(e), BigInt::one())
    }

    /// Builds `sum_k coeffs[k] q^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(rat_int(low + k as i64), BigInt::from(*c));
        }
        p
    }

    pub fn add_term(&mut self, exp: Rational, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Rational) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeff_int(&self, exp: i64) -> BigInt {
        self.coeff(&rat_int(exp))
    }

    pub fn min_exp(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    pub fn max_exp(&self) -> Option<&Rational> {
        self.terms.keys().next_back()
    }

    /// Multiplies by `q^r`.
    pub fn shift(&self, r: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + r, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Terms as `(integer exponent, coefficient)`; fails on a fractional exponent.
    pub fn integer_terms(&self) -> Result<Vec<(i64, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| Ok((rat_to_i64(e, "exponent")?, c.clone())))
            .collect()
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncate(&self, max_exp: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| *e <= max_exp)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<Rational, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *terms.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn fmt_exp(e: &Rational) -> String {
    if e.is_integer() {
        alloc::format!("{}", e.to_integer())
    } else {
        alloc::format!("({}/{})", e.numer(), e.denom())
    }
}

/// Text form such as `q+4q^2+6q^3` or `2+3q-q^(1/2)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "q")?;
            if !e.is_one() {
                write!(f, "^{}", fmt_exp(e))?;
            }
        }
        Ok(())
    }
}

/// Dense polynomial `sum_k coeffs[k] q^(low + k)` with integer exponents.
///
/// Used as the working representation inside enumerations, where every
/// exponent is an integer and sparse maps would be needlessly slow.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DensePoly {
    pub low: i64,
    pub coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self {
            low: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn monomial(e: i64, c: BigInt) -> Self {
        Self {
            low: e,
            coeffs: vec![c],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Highest stored exponent (meaningless for the zero polynomial).
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| self.low + k as i64)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    /// Drops exponents above `max_exp`.
    pub fn truncate(&mut self, max_exp: i64) {
        if self.coeffs.is_empty() {
            return;
        }
        if max_exp < self.low {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        let keep = (max_exp - self.low + 1) as usize;
        self.coeffs.truncate(keep);
        self.normalize();
    }

    /// `self += other * q^shift`, discarding exponents above `cap`.
    pub fn add_shifted(&mut self, other: &DensePoly, shift: i64, cap: Option<i64>) {
        if other.coeffs.is_empty() {
            return;
        }
        let o_low = other.low + shift;
        let mut o_high = other.high() + shift;
        if let Some(c) = cap {
            o_high = o_high.min(c);
        }
        if o_high < o_low {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = o_low;
        }
        let new_low = self.low.min(o_low);
        let new_high = if self.coeffs.is_empty() {
            o_high
        } else {
            self.high().max(o_high)
        };
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = new_low;
        }
        let len = (new_high - self.low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        for e in o_low..=o_high {
            let c = &other.coeffs[(e - o_low) as usize];
            if !c.is_zero() {
                self.coeffs[(e - self.low) as usize] += c;
            }
        }
    }

    /// Product, discarding exponents above `cap`.
    pub fn mul_capped(&self, other: &DensePoly, cap: Option<i64>) -> DensePoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return DensePoly::zero();
        }
        let low = self.low + other.low;
        let mut high = self.high() + other.high();
        if let Some(c) = cap {
            high = high.min(c);
        }
        if high < low {
            return DensePoly::zero();
        }
        let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let room = (high - low) as usize;
            if i > room {
                break;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(room - i + 1) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = DensePoly { low, coeffs: out };
        p.normalize();
        p
    }

    /// Multiplies in place by `1 - q^k` (k >= 1), keeping exponents <= cap.
    fn mul_one_minus(&mut self, k: usize, cap: Option<i64>) {
        if self.coeffs.is_empty() {
            return;
        }
        let mut len = self.coeffs.len() + k;
        if let Some(c) = cap {
            len = len.min((c - self.low + 1).max(0) as usize);
        }
        self.coeffs.resize(len, BigInt::zero());
        for idx in (k..self.coeffs.len()).rev() {
            let sub = self.coeffs[idx - k].clone();
            self.coeffs[idx] -= sub;
        }
    }

    /// Multiplies in place by `1/(1 - q^k)` as a power series, keeping
    /// exponents <= cap. Exact when the quotient is a polynomial of degree
    /// within the current length.
    fn div_one_minus(&mut self, k: usize) {
        for idx in k..self.coeffs.len() {
            let add = self.coeffs[idx - k].clone();
            self.coeffs[idx] += add;
        }
    }

    /// Pads with zeros so that exponents up to `cap` are stored.
    fn extend_to(&mut self, cap: i64) {
        if self.coeffs.is_empty() {
            return;
        }
        let len = (cap - self.low + 1).max(0) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(rat_int(self.low + k as i64), c.clone());
        }
        p
    }

    /// Converts an integer-exponent Laurent polynomial.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        let mut d = DensePoly::zero();
        for (e, c) in p.integer_terms()? {
            d.add_shifted(&DensePoly::monomial(0, c), e, None);
        }
        Ok(d)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Dense Gaussian binomial `[m, k]`, keeping exponents <= cap.
/// Zero unless `0 <= k <= m`.
pub fn qbinomial_dense(m: i64, k: i64, cap: Option<i64>) -> DensePoly {
    if k < 0 || m < 0 || k > m {
        return DensePoly::zero();
    }
    if let Some(c) = cap {
        if c < 0 {
            return DensePoly::zero();
        }
    }
    let k = k.min(m - k);
    let deg = k * (m - k);
    let top = cap.map_or(deg, |c| c.min(deg));
    let mut p = DensePoly::one();
    p.extend_to(top);
    // [m,k] = prod_{i=1..k} (1 - q^{m-k+i}) / (1 - q^i)
    for i in 1..=k {
        p.mul_one_minus((m - k + i) as usize, Some(top));
        p.extend_to(top);
        p.div_one_minus(i as usize);
    }
    p.normalize();
    p
}

/// Gaussian binomial `[m, k] = (q)_m / ((q)_k (q)_{m-k})`; zero unless
/// `0 <= k <= m`.
pub fn qbinomial(m: i64, k: i64) -> LaurentPoly {
    qbinomial_dense(m, k, None).to_laurent()
}

/// `(q)_m = prod_{i=1..m} (1 - q^i)`.
pub fn qpochhammer(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(invalid!("qpochhammer needs m >= 0, got {m}"));
    }
    let mut p = DensePoly::one();
    for i in 1..=m as usize {
        p.mul_one_minus(i, None);
    }
    p.normalize();
    Ok(p.to_laurent())
}

/// `1/(q)_m` as a power series up to exponent `cap`.
pub fn inv_qpochhammer_dense(m: usize, cap: i64) -> DensePoly {
    if cap < 0 {
        return DensePoly::zero();
    }
    let mut p = DensePoly::one();
    p.extend_to(cap);
    for i in 1..=m.min(cap as usize) {
        p.div_one_minus(i);
    }
    p.normalize();
    p
}

/// `1/(q)_inf^power` as a power series up to exponent `cap`.
pub fn inv_qpochhammer_inf_dense(power: usize, cap: i64) -> DensePoly {
    if cap < 0 {
        return DensePoly::zero();
    }
    let mut p = DensePoly::one();
    p.extend_to(cap);
    for _ in 0..power {
        for i in 1..=cap as usize {
            p.div_one_minus(i);
        }
    }
    p.normalize();
    p
}

/// Truncated expansion of `1/(q)_inf^power` through `q^order`.
pub fn inv_pochhammer_series(power: usize, order: i64) -> Result<QSeries> {
    if order < 0 {
        return Err(invalid!("series order must be >= 0, got {order}"));
    }
    Ok(QSeries::from_dense(
        &inv_qpochhammer_inf_dense(power, order),
        &Rational::zero(),
        order,
    ))
}

/// Multiplies by `q^r`.
pub fn shift(p: &LaurentPoly, r: &Rational) -> LaurentPoly {
    p.shift(r)
}

/// Truncated series `sum_k coeffs[k] q^(min_exp + k)`, known for all
/// exponents `<= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: i64,
    min_exp: Rational,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// The zero series known through `order`, in the exponent class of `min_exp`.
    pub fn zero(min_exp: Rational, order: i64) -> Self {
        let len = Self::slots(&min_exp, order);
        Self {
            order,
            min_exp,
            coeffs: vec![BigInt::zero(); len],
        }
    }

    fn slots(min_exp: &Rational, order: i64) -> usize {
        let span = rat_int(order) - min_exp;
        if span.is_negative() {
            0
        } else {
            rat_floor(&span) as usize + 1
        }
    }

    /// `q^base * d`, truncated at `order`.
    pub fn from_dense(d: &DensePoly, base: &Rational, order: i64) -> Self {
        let min_exp = base + rat_int(d.low);
        let mut s = Self::zero(min_exp, order);
        for (k, c) in d.coeffs.iter().enumerate() {
            if k < s.coeffs.len() {
                s.coeffs[k] = c.clone();
            }
        }
        s
    }

    /// Polynomial truncated at `order`; all exponents must share one class mod 1.
    pub fn from_poly(p: &LaurentPoly, order: i64) -> Result<Self> {
        let Some(base) = p.min_exp().cloned() else {
            return Ok(Self::zero(Rational::zero(), order));
        };
        let mut s = Self::zero(base.clone(), order);
        for (e, c) in p.terms() {
            let off = e - &base;
            let k = rat_to_i64(&off, "exponent offset within series")?;
            if (k as usize) < s.coeffs.len() {
                s.coeffs[k as usize] = c.clone();
            }
        }
        Ok(s)
    }

    /// Coefficients of `q^min_exp, q^(min_exp+1), ...` known through `order`;
    /// the length must match that range.
    pub fn from_coeffs(min_exp: Rational, order: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        let len = Self::slots(&min_exp, order);
        if coeffs.len() != len {
            return Err(invalid!(
                "series from q^{min_exp} through q^{order} needs {len} coefficients, got {}",
                coeffs.len()
            ));
        }
        Ok(Self { order, min_exp, coeffs })
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn min_exp(&self) -> &Rational {
        &self.min_exp
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: &Rational) -> BigInt {
        let off = e - &self.min_exp;
        if !off.is_integer() || off.is_negative() {
            return BigInt::zero();
        }
        let k = off.to_integer().to_usize().unwrap_or(usize::MAX);
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Nonzero known terms as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(&self.min_exp + rat_int(k as i64), c.clone());
        }
        p
    }

    /// Reduces the known range to exponents `<= order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let len = Self::slots(&self.min_exp, order);
        Self {
            order,
            min_exp: self.min_exp.clone(),
            coeffs: self.coeffs.iter().take(len).cloned().collect(),
        }
    }

    /// Multiplies by `q^r`; the known range moves with it.
    pub fn shift(&self, r: &Rational) -> Self {
        let new_order = rat_floor(&(rat_int(self.order) + r));
        let mut s = Self {
            order: new_order,
            min_exp: &self.min_exp + r,
            coeffs: self.coeffs.clone(),
        };
        let len = Self::slots(&s.min_exp, new_order);
        s.coeffs.truncate(len);
        s
    }

    /// Sum; fails if the two exponent classes differ mod 1. A series with
    /// no nonzero known coefficient fits any class.
    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        let order = self.order.min(other.order);
        if other.coeffs.iter().all(Zero::is_zero) {
            return Ok(self.truncate(order));
        }
        if self.coeffs.iter().all(Zero::is_zero) {
            return Ok(other.truncate(order));
        }
        let diff = &self.min_exp - &other.min_exp;
        if !diff.is_integer() {
            return Err(Error::NonIntegral(alloc::format!(
                "cannot add series in exponent classes {} and {}",
                self.min_exp,
                other.min_exp
            )));
        }
        let min_exp = if self.min_exp <= other.min_exp {
            self.min_exp.clone()
        } else {
            other.min_exp.clone()
        };
        let mut out = Self::zero(min_exp, order);
        for src in [self, other] {
            let off = rat_to_i64(&(&src.min_exp - &out.min_exp), "offset")? as usize;
            for (k, c) in src.coeffs.iter().enumerate() {
                if off + k < out.coeffs.len() {
                    out.coeffs[off + k] += c;
                }
            }
        }
        Ok(out)
    }

    /// Product of truncated series; the result is known through the
    /// smaller of the two induced precisions.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let min_exp = &self.min_exp + &other.min_exp;
        let p1 = rat_floor(&(rat_int(self.order) + &other.min_exp));
        let p2 = rat_floor(&(rat_int(other.order) + &self.min_exp));
        let order = p1.min(p2);
        let mut out = Self::zero(min_exp, order);
        let len = out.coeffs.len();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// True when both series have identical nonzero coefficients at every
    /// exponent `<= upto`.
    pub fn agrees_with(&self, other: &QSeries, upto: i64) -> bool {
        let a = self.truncate(upto).to_poly();
        let b = other.truncate(upto).to_poly();
        a == b
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_poly(), self.order + 1)
    }
}
