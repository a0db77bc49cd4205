//! Permutations in one-line notation, their descent/peak statistics and
//! consecutive-pattern containment.
//!
//! All positions exposed by this module are 1-based. Internally letters are
//! stored in a `Vec<usize>` indexed from 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Largest `n` for which [`permutations`] will enumerate the symmetric group.
pub const MAX_ENUMERATION_N: usize = 12;

/// A permutation of `1..=n` written in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    letters: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its letters, checking that they are a
    /// rearrangement of `1..=n`.
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &v in &letters {
            if v == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "letter {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(format!("letter {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(Self::new(letters.clone()).is_ok());
        Self { letters }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            letters: (1..=n).collect(),
        }
    }

    /// `n (n-1) ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Self {
            letters: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.letters.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { letters: inv }
    }

    pub fn reverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn descent_positions(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    pub fn des(&self) -> usize {
        self.letters.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn peak_positions(&self) -> Vec<usize> {
        self.letters
            .windows(3)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1] && w[1] > w[2])
            .map(|(i, _)| i + 2)
            .collect()
    }

    pub fn pk(&self) -> usize {
        self.letters
            .windows(3)
            .filter(|w| w[0] < w[1] && w[1] > w[2])
            .count()
    }

    fn initial_descent(&self) -> bool {
        self.len() >= 2 && self.letters[0] > self.letters[1]
    }

    fn final_ascent(&self) -> bool {
        let n = self.len();
        n >= 2 && self.letters[n - 2] < self.letters[n - 1]
    }

    pub fn left_peak_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if self.initial_descent() {
            out.push(1);
        }
        out.extend(self.peak_positions());
        out
    }

    pub fn lpk(&self) -> usize {
        self.pk() + usize::from(self.initial_descent())
    }

    pub fn rpk(&self) -> usize {
        self.pk() + usize::from(self.final_ascent())
    }

    pub fn valley_positions(&self) -> Vec<usize> {
        self.letters
            .windows(3)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1] && w[1] < w[2])
            .map(|(i, _)| i + 2)
            .collect()
    }

    pub fn right_valley_positions(&self) -> Vec<usize> {
        let mut out = self.valley_positions();
        let n = self.len();
        if n >= 2 && self.letters[n - 2] > self.letters[n - 1] {
            out.push(n);
        }
        out
    }

    /// Number of peaks of the inverse.
    pub fn ipk(&self) -> usize {
        self.inverse().pk()
    }

    /// Number of left peaks of the inverse.
    pub fn ilpk(&self) -> usize {
        self.inverse().lpk()
    }

    pub fn statistics(&self) -> StatReport {
        let inv = self.inverse();
        let valleys = self.valley_positions();
        let right_valley_positions = self.right_valley_positions();
        StatReport {
            des: self.des(),
            pk: self.pk(),
            lpk: self.lpk(),
            rpk: self.rpk(),
            valleys: valleys.len(),
            right_valleys: right_valley_positions.len(),
            ipk: inv.pk(),
            ilpk: inv.lpk(),
            descent_positions: self.descent_positions(),
            peak_positions: self.peak_positions(),
            left_peak_positions: self.left_peak_positions(),
            right_valley_positions,
        }
    }

    /// True iff some window of `sigma.len()` consecutive letters is
    /// order-isomorphic to `sigma`.
    pub fn contains_consecutive(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.is_empty() {
            return Err(Error::InvalidInput("pattern must be nonempty".into()));
        }
        Ok(self
            .letters
            .windows(sigma.len())
            .any(|w| window_matches(w, &sigma.letters)))
    }

    pub fn avoids_consecutive(&self, sigma: &Permutation) -> Result<bool> {
        self.contains_consecutive(sigma).map(|c| !c)
    }

    /// Lengths of the maximal increasing runs, left to right.
    pub fn descent_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0;
        for (i, &v) in self.letters.iter().enumerate() {
            if i > 0 && self.letters[i - 1] > v {
                parts.push(run);
                run = 0;
            }
            run += 1;
        }
        if run > 0 {
            parts.push(run);
        }
        Composition::from_parts_unchecked(parts)
    }

    /// `p1 < p2 > p3 < ...`
    pub fn is_alternating(&self) -> bool {
        self.letters
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    /// `p1 > p2 < p3 > ...`
    pub fn is_reverse_alternating(&self) -> bool {
        self.letters
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] > w[1]) == (i % 2 == 0))
    }
}

// Compares the standardization of `window` against `pattern` without
// allocating: the rank of each entry is one plus the number of smaller
// entries in the window.
fn window_matches(window: &[usize], pattern: &[usize]) -> bool {
    window.iter().zip(pattern).all(|(&v, &target)| {
        let rank = 1 + window.iter().filter(|&&u| u < v).count();
        rank == target
    })
}

/// Statistics of a single permutation. Position lists are 1-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatReport {
    pub des: usize,
    pub pk: usize,
    pub lpk: usize,
    pub rpk: usize,
    pub valleys: usize,
    pub right_valleys: usize,
    pub ipk: usize,
    pub ilpk: usize,
    pub descent_positions: Vec<usize>,
    pub peak_positions: Vec<usize>,
    pub left_peak_positions: Vec<usize>,
    pub right_valley_positions: Vec<usize>,
}

/// Replaces the smallest entry by 1, the next smallest by 2, and so on.
pub fn standardize(word: &[i64]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::InvalidInput(
            "standardization needs distinct entries".into(),
        ));
    }
    let mut letters = vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        letters[i] = rank + 1;
    }
    Ok(Permutation { letters })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma- or whitespace-separated letters, or a single run of
    /// digits when every letter is below 10.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let letters: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
            let digits = tokens[0];
            if digits.len() > 9 {
                return Err(Error::InvalidInput(format!(
                    "digit form {digits:?} is only accepted for n <= 9"
                )));
            }
            digits
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(letters)
    }
}

/// Lexicographic enumeration of permutations, optionally with a fixed
/// first letter.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
    fixed: usize,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation {
            letters: cur.clone(),
        };
        if !next_permutation(&mut cur[self.fixed..]) {
            self.current = None;
        }
        Some(out)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n!` permutations of length `n` in lexicographic order.
///
/// Fails for `n > MAX_ENUMERATION_N`; use [`permutations_unbounded`] to
/// lift the cap.
pub fn permutations(n: usize) -> Result<Permutations> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::ResourceLimit {
            n,
            cap: MAX_ENUMERATION_N,
        });
    }
    Ok(permutations_unbounded(n))
}

pub fn permutations_unbounded(n: usize) -> Permutations {
    Permutations {
        current: Some((1..=n).collect()),
        fixed: 0,
    }
}

/// The `(n-1)!` permutations of length `n` beginning with `first`, in
/// lexicographic order. Concatenating these blocks for `first = 1..=n`
/// reproduces [`permutations_unbounded`].
pub fn permutations_with_first(n: usize, first: usize) -> Permutations {
    assert!((1..=n).contains(&first), "first letter out of range");
    let mut start = vec![first];
    start.extend((1..=n).filter(|&v| v != first));
    Permutations {
        current: Some(start),
        fixed: 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[8, 3, 6, 1, 4]).unwrap(), p("52413"));
        assert_eq!(standardize(&[]).unwrap(), Permutation::identity(0));
        assert_eq!(standardize(&[5, 2, 4, 1, 3]).unwrap(), p("52413"));
        assert!(matches!(
            standardize(&[3, 1, 3]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("23568714").inverse(), p("71283465"));
        assert_eq!(p("456372891").inverse(), p("964123578"));
        assert_eq!(Permutation::identity(6).inverse(), Permutation::identity(6));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("123").reverse(), p("321"));
        assert_eq!(p("23568714").reverse(), p("41786532"));
        assert!(Permutation::identity(0).reverse().is_empty());
    }

    #[test]
    fn statistics_examples() {
        let s = p("23568714").statistics();
        assert_eq!((s.ipk, s.ilpk), (2, 3));

        for n in 1..6 {
            let s = Permutation::identity(n).statistics();
            assert_eq!((s.des, s.pk, s.lpk, s.ipk, s.ilpk), (0, 0, 0, 0, 0));
        }

        let s = p("1 2 5 10 12 8 6 4 3 7 9 11").statistics();
        assert_eq!(s.lpk, 1);
        assert_eq!(s.right_valley_positions, vec![9]);
        assert_eq!(s.right_valleys, 1);
    }

    #[test]
    fn empty_and_singleton_statistics() {
        for n in 0..=1 {
            let s = Permutation::identity(n).statistics();
            assert_eq!((s.des, s.pk, s.lpk, s.rpk), (0, 0, 0, 0));
            assert!(s.descent_positions.is_empty());
        }
        assert!(Permutation::identity(0).descent_composition().is_empty());
    }

    #[test]
    fn position_lists_are_one_based() {
        let s = p("2143").statistics();
        assert_eq!(s.descent_positions, vec![1, 3]);
        assert_eq!(s.left_peak_positions, vec![1, 3]);
        assert_eq!(s.peak_positions, vec![3]);
        assert_eq!(s.right_valley_positions, vec![2, 4]);
        assert_eq!(s.rpk, 1);
        let s = p("132").statistics();
        assert_eq!(s.peak_positions, vec![2]);
        assert_eq!(s.rpk, 1);
    }

    #[test]
    fn consecutive_containment() {
        let inc3 = Permutation::identity(3);
        assert!(p("85712643").contains_consecutive(&inc3).unwrap());
        assert!(!Permutation::identity(4)
            .contains_consecutive(&p("21"))
            .unwrap());
        assert!(p("12")
            .contains_consecutive(&Permutation::identity(0))
            .is_err());
        // Shorter than the pattern: vacuously avoids.
        assert!(p("12").avoids_consecutive(&inc3).unwrap());
    }

    #[test]
    fn avoiders_of_123_in_s4() {
        // Brute force: standardize every window of every permutation.
        let inc3 = Permutation::identity(3);
        let brute = permutations(4)
            .unwrap()
            .filter(|q| {
                !q.letters().windows(3).any(|w| {
                    let w: Vec<i64> = w.iter().map(|&v| v as i64).collect();
                    standardize(&w).unwrap() == inc3
                })
            })
            .count();
        assert_eq!(brute, 17);
        let fast = permutations(4)
            .unwrap()
            .filter(|q| q.avoids_consecutive(&inc3).unwrap())
            .count();
        assert_eq!(fast, 17);
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(
            p("85712643").descent_composition().parts(),
            &[1, 2, 3, 1, 1]
        );
        assert_eq!(Permutation::identity(5).descent_composition().parts(), &[5]);
        assert_eq!(p("456372891").descent_composition().parts(), &[3, 2, 3, 1]);
    }

    #[test]
    fn alternating() {
        assert!(p("1").is_alternating());
        assert!(p("1").is_reverse_alternating());
        assert!(p("132").is_alternating());
        assert!(!p("132").is_reverse_alternating());
        assert!(p("2143").is_reverse_alternating());
        assert!(!p("2143").is_alternating());
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            permutations(0).unwrap().collect::<Vec<_>>(),
            vec![Permutation::identity(0)]
        );
        let s3: Vec<_> = permutations(3).unwrap().collect();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], p("123"));
        assert_eq!(s3[5], p("321"));
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(permutations(8).unwrap().count(), 40320);
        assert_eq!(
            permutations(13).unwrap_err(),
            Error::ResourceLimit { n: 13, cap: 12 }
        );
    }

    #[test]
    fn prefix_split_matches_sequential() {
        let n = 6;
        let seq: Vec<_> = permutations(n).unwrap().collect();
        let split: Vec<_> = (1..=n)
            .flat_map(|f| permutations_with_first(n, f))
            .collect();
        assert_eq!(seq, split);
    }

    #[test]
    fn parsing() {
        let a: Permutation = "2 3 5 6 8 7 1 4".parse().unwrap();
        let b: Permutation = "2,3,5,6,8,7,1,4".parse().unwrap();
        let c: Permutation = "23568714".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "2 3 5 6 8 7 1 4");
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
        assert!("1234567891".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().unwrap().is_empty());
    }
}
