//! Exact truncated formal power series and the generating-function
//! identities for inverse peaks of monotone-pattern avoiders.
//!
//! A [`TruncatedSeries`] stores coefficients `0..=order` over any
//! [`Coefficient`] ring. Rationals give univariate series in `t`; a series
//! whose coefficients are themselves series gives the bivariate series in
//! `x` over `t` used to state both identities. Arithmetic between series of
//! different orders truncates to the smaller order.
//!
//! No floating point appears anywhere in this module.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::composition::binomial;
use crate::error::{Error, Result};
use crate::perm::{permutations_unbounded, Permutation};

pub type Rational = BigRational;

/// Largest `n` for which the enumeration-backed polynomials are computed.
pub const MAX_POLYNOMIAL_N: usize = 9;

/// Commutative ring operations needed by [`TruncatedSeries`]. Zero and one
/// are produced from an existing element so that nested series can carry
/// their truncation order.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, if one exists.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn big(n: num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Power series truncated after degree `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    // Always `order + 1` entries.
    coeffs: Vec<R>,
}

impl<R: Coefficient> TruncatedSeries<R> {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    /// `zero` supplies the ring's zero element.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize, zero: &R) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, zero.zero_like());
        Self { coeffs }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        Self::from_coeffs(vec![c], order, &zero)
    }

    /// `c · var^degree`.
    pub fn monomial(c: R, degree: usize, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero.clone(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs, order, &zero)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `var^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn ring_zero(&self) -> R {
        self.coeffs[0].zero_like()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order, &self.ring_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].plus(&other.coeffs[i]))
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].minus(&other.coeffs[i]))
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(R::negated).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![self.ring_zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero_value() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Self { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.coeffs[0].one_like(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or_else(|| Error::SingularSeries("constant term is not invertible".into()))?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = self.ring_zero();
            for i in 1..=n {
                acc = acc.plus(&self.coeffs[i].times(&out[n - i]));
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Square root with constant term 1, solving `s² = self` one
    /// coefficient at a time.
    pub fn sqrt(&self) -> Result<Self> {
        let one = self.coeffs[0].one_like();
        if self.coeffs[0] != one {
            return Err(Error::SingularSeries(
                "square root needs constant term 1".into(),
            ));
        }
        let half = one
            .plus(&one)
            .try_inverse()
            .ok_or_else(|| Error::SingularSeries("2 is not invertible".into()))?;
        let mut out = vec![one];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = acc.minus(&out[i].times(&out[n - i]));
            }
            out.push(acc.times(&half));
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero_value() {
            return Err(Error::SingularSeries(
                "inner series of a composition needs zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for i in (0..order).rev() {
            acc = acc
                .mul(&inner)
                .add(&Self::constant(self.coeffs[i].clone(), order));
        }
        Ok(acc)
    }

    /// Divides by the variable, requiring a zero constant term. The order
    /// drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_value() {
            return Err(Error::SingularSeries(
                "cannot divide by the variable: constant term is nonzero".into(),
            ));
        }
        if self.order() == 0 {
            return Err(Error::SingularSeries("nothing left after shifting".into()));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplies by `var^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let zero = self.ring_zero();
        let mut coeffs = vec![zero.clone(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs, self.order(), &zero)
    }

    /// Index and values of the first coefficient where the two series differ,
    /// up to the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, R, R)> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&i| self.coeffs[i] != other.coeffs[i])
            .map(|i| (i, self.coeffs[i].clone(), other.coeffs[i].clone()))
    }
}

impl<R: Coefficient> Coefficient for TruncatedSeries<R> {
    fn zero_like(&self) -> Self {
        Self::constant(self.ring_zero(), self.order())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like(), self.order())
    }
    fn is_zero_value(&self) -> bool {
        self.coeffs.iter().all(R::is_zero_value)
    }
    fn plus(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other)
    }
    fn minus(&self, other: &Self) -> Self {
        TruncatedSeries::sub(self, other)
    }
    fn times(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other)
    }
    fn negated(&self) -> Self {
        TruncatedSeries::neg(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

impl<R: Coefficient> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<R: Coefficient> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<R: Coefficient> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<R: Coefficient> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries::neg(self)
    }
}

/// Univariate series over the rationals.
pub type Series = TruncatedSeries<Rational>;

/// Series in `x` whose coefficients are series in `t`.
pub type BiSeries = TruncatedSeries<Series>;

impl Series {
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect(), order, &rat(0))
    }

    pub fn from_rationals(coeffs: Vec<Rational>, order: usize) -> Self {
        Self::from_coeffs(coeffs, order, &rat(0))
    }

    /// `c0 + c1*t + c2*t^2 + ...`, omitting zero terms.
    pub fn display_in(&self, var: &str) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

/// Lifts a series in `x` with rational coefficients to a bivariate series
/// whose `t`-coefficients are constants.
pub fn lift_x(s: &Series, t_order: usize) -> BiSeries {
    let zero_t = Series::constant(rat(0), t_order);
    BiSeries::from_coeffs(
        s.coeffs()
            .iter()
            .map(|c| Series::constant(c.clone(), t_order))
            .collect(),
        s.order(),
        &zero_t,
    )
}

/// The series `v = 2 t^{-1} (1 - sqrt(1 - t)) - 1`, which satisfies
/// `4v / (1+v)^2 = t`.
pub fn v_of_t(order: usize) -> Result<Series> {
    if order < 1 {
        return Err(Error::InvalidInput("v_of_t needs order >= 1".into()));
    }
    let one_minus_t = Series::from_ints(&[1, -1], order + 1);
    let root = one_minus_t.sqrt()?;
    let numerator = &Series::constant(rat(1), order + 1) - &root;
    let shifted = numerator.shift_down()?;
    Ok(&shifted.scale(&rat(2)) - &Series::constant(rat(1), order))
}

/// `4t / (1+t)^2`.
pub fn four_t_over_one_plus_t_sq(order: usize) -> Series {
    let num = Series::from_ints(&[0, 4], order);
    let den = Series::from_ints(&[1, 2, 1], order);
    num.div(&den).expect("1+t is invertible")
}

fn check_indices(m: usize, j: usize, k: usize) -> Result<()> {
    if m < 2 || j < 1 || k < 1 {
        return Err(Error::InvalidInput(format!(
            "coefficient indices need m >= 2, j >= 1, k >= 1; got m={m}, j={j}, k={k}"
        )));
    }
    Ok(())
}

// scale * Σ_{l=1}^{k} C(l + jm + s, l - 1) C(jm + r, k - l)
fn binomial_sum(scale: i64, m: usize, j: usize, k: usize, s: i64, r: i64) -> Rational {
    let jm = (j * m) as i64;
    let k = k as i64;
    let total: num_bigint::BigUint = (1..=k)
        .map(|l| binomial(l + jm + s, l - 1) * binomial(jm + r, k - l))
        .sum();
    big(total) * rat(scale)
}

/// `2 Σ_{l=1}^{k} C(l+jm-1, l-1) C(jm-1, k-l)`
pub fn c_coeff(m: usize, j: usize, k: usize) -> Result<Rational> {
    check_indices(m, j, k)?;
    Ok(binomial_sum(2, m, j, k, -1, -1))
}

/// `2 Σ_{l=1}^{k} C(l+jm, l-1) C(jm, k-l)`
pub fn c_prime(m: usize, j: usize, k: usize) -> Result<Rational> {
    check_indices(m, j, k)?;
    Ok(binomial_sum(2, m, j, k, 0, 0))
}

/// `4 Σ_{l=1}^{k} C(l+jm-1, l-1) C(jm-2, k-l)`
pub fn e_coeff(m: usize, j: usize, k: usize) -> Result<Rational> {
    check_indices(m, j, k)?;
    Ok(binomial_sum(4, m, j, k, -1, -2))
}

/// `4 Σ_{l=1}^{k} C(l+jm, l-1) C(jm-1, k-l)`
pub fn e_prime(m: usize, j: usize, k: usize) -> Result<Rational> {
    check_indices(m, j, k)?;
    Ok(binomial_sum(4, m, j, k, 0, -1))
}

/// Integer polynomial in `t` as a coefficient vector (index = exponent).
pub type Polynomial = Vec<u64>;

fn enumerate_polynomial(
    n: usize,
    keep: impl Fn(&Permutation) -> bool,
    exponent: impl Fn(&Permutation) -> usize,
) -> Result<Polynomial> {
    if n > MAX_POLYNOMIAL_N {
        return Err(Error::ResourceLimit {
            n,
            cap: MAX_POLYNOMIAL_N,
        });
    }
    let mut poly = vec![0u64; n + 2];
    for p in permutations_unbounded(n).filter(|p| keep(p)) {
        poly[exponent(&p)] += 1;
    }
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    Ok(poly)
}

/// `Σ t^{ipk(π)+1}` over `π ∈ S_n` avoiding `12...m` consecutively; `1` for
/// `n = 0`.
pub fn ipk_polynomial(m: usize, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Ok(vec![1]);
    }
    let pattern = Permutation::identity(m);
    enumerate_polynomial(
        n,
        |p| p.avoids_consecutive(&pattern).unwrap_or(true),
        |p| p.ipk() + 1,
    )
}

/// `Σ t^{ilpk(π)}` over `π ∈ S_n` avoiding `m...21` consecutively.
pub fn ilpk_polynomial(m: usize, n: usize) -> Result<Polynomial> {
    let pattern = Permutation::decreasing(m);
    enumerate_polynomial(
        n,
        |p| p.avoids_consecutive(&pattern).unwrap_or(true),
        |p| p.ilpk(),
    )
}

fn polynomial_series(poly: &Polynomial, order: usize) -> Series {
    Series::from_coeffs(
        poly.iter().map(|&c| rat(c as i64)).collect(),
        order.max(poly.len()),
        &rat(0),
    )
}

/// Largest `x` order accepted by the identity checks.
pub const MAX_X_ORDER: usize = 8;

/// A coefficient `[x^n t^k]` at which the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub x_power: usize,
    pub t_power: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[x^{} t^{}]: lhs = {}, rhs = {}",
            self.x_power, self.t_power, self.lhs, self.rhs
        )
    }
}

fn compare(lhs: &BiSeries, rhs: &BiSeries) -> Option<Mismatch> {
    let (x_power, l, r) = lhs.first_difference(rhs)?;
    let (t_power, lhs, rhs) = l.first_difference(&r).expect("coefficients differ");
    Some(Mismatch {
        x_power,
        t_power,
        lhs,
        rhs,
    })
}

fn check_orders(x_order: usize, t_order: usize) -> Result<()> {
    if x_order > MAX_X_ORDER {
        return Err(Error::ResourceLimit {
            n: x_order,
            cap: MAX_X_ORDER,
        });
    }
    if t_order > x_order {
        return Err(Error::InvalidInput(format!(
            "t_order {t_order} must not exceed x_order {x_order}"
        )));
    }
    Ok(())
}

/// `[1 - a x + Σ_j (c_j x^{jm} - c'_j x^{jm+1})]^{-1}` as a series in `x`.
fn cluster_denominator_inverse(
    linear: i64,
    m: usize,
    k: usize,
    x_order: usize,
    c: fn(usize, usize, usize) -> Result<Rational>,
    c_prime: fn(usize, usize, usize) -> Result<Rational>,
) -> Result<Series> {
    let mut den = vec![rat(0); x_order + 1];
    den[0] = rat(1);
    if x_order >= 1 {
        den[1] = rat(-linear);
    }
    let mut j = 1;
    while j * m <= x_order {
        den[j * m] += c(m, j, k)?;
        if j * m < x_order {
            den[j * m + 1] -= c_prime(m, j, k)?;
        }
        j += 1;
    }
    Series::from_rationals(den, x_order).invert()
}

/// Both sides of the generating function for `P^{ipk}_{12...m,n}`:
///
/// `1/(1-t) + ½ Σ_{n≥1} ((1+t)/(1-t))^{n+1} P_n(4t/(1+t)²) x^n`
/// `= 1 + Σ_{k≥1} [1 - 2kx + Σ_j (c_{m,j,k} x^{jm} - c'_{m,j,k} x^{jm+1})]^{-1} t^k`.
pub fn theorem3_sides(m: usize, x_order: usize, t_order: usize) -> Result<(BiSeries, BiSeries)> {
    check_orders(x_order, t_order)?;
    let zero_t = Series::constant(rat(0), t_order);
    let one_minus_t = Series::from_ints(&[1, -1], t_order);
    let geometric = one_minus_t.invert()?;
    let ratio_t = Series::from_ints(&[1, 1], t_order).mul(&geometric);
    let s = four_t_over_one_plus_t_sq(t_order);

    let mut lhs = vec![geometric.clone()];
    for n in 1..=x_order {
        let p = polynomial_series(&ipk_polynomial(m, n)?, t_order).compose(&s)?;
        lhs.push(ratio_t.pow(n + 1).mul(&p).scale(&ratio(1, 2)));
    }
    let lhs = BiSeries::from_coeffs(lhs, x_order, &zero_t);

    let mut rhs = BiSeries::constant(Series::constant(rat(1), t_order), x_order);
    for k in 1..=t_order {
        let inv = cluster_denominator_inverse(2 * k as i64, m, k, x_order, c_coeff, c_prime)?;
        rhs = rhs.add(&lift_x(&inv, t_order).scale(&Series::monomial(rat(1), k, t_order)));
    }
    Ok((lhs, rhs))
}

/// Both sides of the generating function for `P^{ilpk}_{m...21,n}`:
///
/// `Σ_{n≥0} (1+t)^n/(1-t)^{n+1} P_n(4t/(1+t)²) x^n`
/// `= 1/(1-x) + Σ_{k≥1} [1 - (2k+1)x + Σ_j (e_{m,j,k} x^{jm} - e'_{m,j,k} x^{jm+1})]^{-1} t^k`.
pub fn theorem5_sides(m: usize, x_order: usize, t_order: usize) -> Result<(BiSeries, BiSeries)> {
    check_orders(x_order, t_order)?;
    let zero_t = Series::constant(rat(0), t_order);
    let one_minus_t_inv = Series::from_ints(&[1, -1], t_order).invert()?;
    let one_plus_t = Series::from_ints(&[1, 1], t_order);
    let s = four_t_over_one_plus_t_sq(t_order);

    let mut lhs = Vec::new();
    for n in 0..=x_order {
        let p = polynomial_series(&ilpk_polynomial(m, n)?, t_order).compose(&s)?;
        let weight = one_plus_t.pow(n).mul(&one_minus_t_inv.pow(n + 1));
        lhs.push(weight.mul(&p));
    }
    let lhs = BiSeries::from_coeffs(lhs, x_order, &zero_t);

    let geometric_x = Series::from_ints(&[1, -1], x_order).invert()?;
    let mut rhs = lift_x(&geometric_x, t_order);
    for k in 1..=t_order {
        let inv = cluster_denominator_inverse(2 * k as i64 + 1, m, k, x_order, e_coeff, e_prime)?;
        rhs = rhs.add(&lift_x(&inv, t_order).scale(&Series::monomial(rat(1), k, t_order)));
    }
    Ok((lhs, rhs))
}

pub fn check_theorem3(m: usize, x_order: usize, t_order: usize) -> Result<Option<Mismatch>> {
    let (lhs, rhs) = theorem3_sides(m, x_order, t_order)?;
    Ok(compare(&lhs, &rhs))
}

pub fn check_theorem5(m: usize, x_order: usize, t_order: usize) -> Result<Option<Mismatch>> {
    let (lhs, rhs) = theorem5_sides(m, x_order, t_order)?;
    Ok(compare(&lhs, &rhs))
}

/// True iff the `ipk` identity holds as bivariate series to the given
/// orders.
pub fn verify_theorem3(m: usize, x_order: usize, t_order: usize) -> Result<bool> {
    Ok(check_theorem3(m, x_order, t_order)?.is_none())
}

/// True iff the `ilpk` identity holds as bivariate series to the given
/// orders.
pub fn verify_theorem5(m: usize, x_order: usize, t_order: usize) -> Result<bool> {
    Ok(check_theorem5(m, x_order, t_order)?.is_none())
}

/// `[t^1]` of every `x`-coefficient.
pub fn linear_t_coefficients(s: &BiSeries) -> Series {
    Series::from_rationals(s.coeffs().iter().map(|c| c.coeff(1)).collect(), s.order())
}

/// `(1 - x) / (1 - 2x + x^m)`, the generating function of `f^{(m-1)}_n`.
pub fn ogf_fib(m: usize, order: usize) -> Result<Series> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "ogf_fib needs m >= 2, got {m}"
        )));
    }
    let num = Series::from_ints(&[1, -1], order);
    let mut den = vec![rat(0); m + 1];
    den[0] = rat(1);
    den[1] += rat(-2);
    den[m] += rat(1);
    num.div(&Series::from_rationals(den, order))
}

/// `x²(x^{m-2} - 1) / ((1-x)² (x^{m+1} - 3x^m + 3x - 1))`.
pub fn ogf_ilpk_general(m: usize, order: usize) -> Result<Series> {
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "ogf_ilpk_general needs m >= 3, got {m}"
        )));
    }
    let mut num = vec![rat(0); m + 1];
    num[2] = rat(-1);
    num[m] += rat(1);
    let num = Series::from_rationals(num, order);
    let one_minus_x_sq = Series::from_ints(&[1, -2, 1], order);
    let mut tail = vec![rat(0); m + 2];
    tail[0] = rat(-1);
    tail[1] = rat(3);
    tail[m] += rat(-3);
    tail[m + 1] += rat(1);
    let den = one_minus_x_sq.mul(&Series::from_rationals(tail, order));
    num.div(&den)
}

/// Numerators of the coefficients when they are all integers.
pub fn integer_coefficients(s: &Series) -> Option<Vec<BigInt>> {
    s.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}
