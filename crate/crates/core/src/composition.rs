//! Integer compositions and Fibonacci numbers of order `k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// 1-based descent set `{L1, L1+L2, ...}` of any permutation with this
    /// descent composition.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts[..self.parts.len().saturating_sub(1)]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Inverse of [`Composition::descent_set`] for a given `n`.
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            if d <= prev || d >= n {
                return Err(Error::InvalidInput(format!(
                    "descent set {descents:?} invalid for n = {n}"
                )));
            }
            parts.push(d - prev);
            prev = d;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Ok(Self { parts })
    }

    /// Parts joined by `+`, for CSV cells.
    pub fn to_plus_string(&self) -> String {
        self.parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `(1,2,3)`, `1,2,3` or `1 2 3`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c == '+' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// `f_n^(k)` with `f_0 = 1`, `f_n = 0` for `n < 0`, and
/// `f_n = f_{n-1} + ... + f_{n-k}`.
pub fn fib(k: usize, n: i64) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::InvalidInput("Fibonacci order must be >= 1".into()));
    }
    if n < 0 {
        return Ok(BigUint::zero());
    }
    Ok(fib_table(k, n as usize).pop().unwrap())
}

/// `[f_0^(k), ..., f_n^(k)]`.
pub fn fib_table(k: usize, n: usize) -> Vec<BigUint> {
    assert!(k >= 1, "Fibonacci order must be >= 1");
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let lo = i.saturating_sub(k);
        let next = table[lo..i].iter().sum();
        table.push(next);
    }
    table
}

/// Fibonacci numbers of order 2 as `u128`, for small index arithmetic.
#[cfg(test)]
pub(crate) fn fib2(n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// All compositions of `n` (with every part `<= max_part` when given), in
/// lexicographic order.
pub fn compositions(n: usize, max_part: Option<usize>) -> Result<Vec<Composition>> {
    if n < 1 {
        return Err(Error::InvalidInput("compositions need n >= 1".into()));
    }
    let bound = max_part.unwrap_or(n);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, bound, &mut stack, &mut out);
    Ok(out)
}

fn fill(rest: usize, bound: usize, stack: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if rest == 0 {
        out.push(Composition::from_parts_unchecked(stack.clone()));
        return;
    }
    for part in 1..=bound.min(rest) {
        stack.push(part);
        fill(rest - part, bound, stack, out);
        stack.pop();
    }
}

/// The descent composition of the reverse of any permutation whose descent
/// composition is `l`.
///
/// Reversal sends a descent at position `i` to an ascent at `n - i`, so the
/// result is read off the complement of the reflected descent set.
pub fn composition_reverse(l: &Composition) -> Composition {
    let n = l.n();
    let descents = l.descent_set();
    let reflected: Vec<usize> = (1..n).filter(|&i| !descents.contains(&(n - i))).collect();
    Composition::from_descent_set(n, &reflected).expect("reflected descent set is valid")
}

/// Number of compositions of `n` with exactly `k` parts greater than 1.
pub fn count_parts_gt1(n: usize, k: usize) -> Result<u64> {
    Ok(compositions(n, None)?
        .iter()
        .filter(|c| c.parts().iter().filter(|&&p| p > 1).count() == k)
        .count() as u64)
}

/// Binomial coefficient, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}
