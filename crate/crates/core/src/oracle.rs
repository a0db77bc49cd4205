//! Brute-force oracles and claim checkers.
//!
//! Counting functions here only use permutation statistics and pattern
//! tests from [`crate::perm`]; they never call the bijections or series
//! code they are used to check. Each claim check returns a
//! [`VerificationReport`] recording what was tested and, on failure, the
//! first counterexample found.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijection::{
    is_in_w, nprime_to_triple, phi, phi_inverse, tiling_to_z, tilings, triple_to_nprime,
    z_to_tiling, zero_ipk_permutation,
};
use crate::composition::{binomial, compositions, fib, Composition};
use crate::error::{Error, Result};
use crate::perm::{permutations_unbounded, permutations_with_first, Permutation};
use crate::regex::{w_regex, z_regex};
use crate::series::{check_theorem3, check_theorem5, ogf_fib, ogf_ilpk_general, rat, Rational};
use crate::word::{all_words, Word};

/// Default bound on `n` for permutation enumeration.
pub const DEFAULT_PERM_CAP: usize = 10;
/// Default bound on word length for checks that scan all of `{a,b,c}^n`.
pub const DEFAULT_WORD_CAP: usize = 12;
/// Largest `n` accepted by [`verify_identity_sums`].
pub const MAX_IDENTITY_N: usize = 60;

/// Outcome of one claim check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<String>,
    pub millis: Option<u64>,
    /// Number of individual cases compared.
    pub cases: u64,
}

impl VerificationReport {
    fn new(claim: &str, params: Value) -> Self {
        Self {
            claim: claim.to_string(),
            params,
            pass: true,
            counterexample: None,
            millis: None,
            cases: 0,
        }
    }

    /// Records one comparison; only the first failure is kept.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(describe());
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} {} cases={}",
            self.claim, self.params, self.cases
        )?;
        if let Some(ms) = self.millis {
            write!(f, " ({ms} ms)")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample: {cx}")?;
        }
        Ok(())
    }
}

/// The checkable claims, in their canonical run order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Avoiders of `12...m` with no inverse peaks are counted by `f^{(m-1)}_n`.
    Theorem1,
    /// Avoiders of `321` with one inverse left peak number `f_{n-1} f_n - ⌊(n+1)/2⌋`.
    Theorem2,
    /// Each descent class has exactly one member with no inverse peaks.
    Theorem4,
    /// Alternating uniqueness and the binomial counts by des, pk and lpk.
    Corollaries,
    /// `φ` maps `N_n` onto `a^i c u a c^j` words and `N'_n` onto `W_n`.
    Prop6,
    /// `W_n` is the language of `w_regex(m)`, unambiguously for `m = 3`.
    Prop7,
    /// `|Z_k| = f_{k-1} f_k` by DFA count and by tilings.
    Prop8,
    /// Four independent counts of `W_n` agree, and all round trips close.
    Eq1,
    /// The bivariate `ipk` generating function identity.
    Gf3,
    /// The bivariate `ilpk` generating function identity.
    Gf5,
    /// The rational generating function for one inverse left peak.
    GfGeneral,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::Theorem4,
        Claim::Corollaries,
        Claim::Prop6,
        Claim::Prop7,
        Claim::Prop8,
        Claim::Eq1,
        Claim::Gf3,
        Claim::Gf5,
        Claim::GfGeneral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Theorem4 => "theorem4",
            Claim::Corollaries => "corollaries",
            Claim::Prop6 => "prop6",
            Claim::Prop7 => "prop7",
            Claim::Prop8 => "prop8",
            Claim::Eq1 => "eq1",
            Claim::Gf3 => "gf3",
            Claim::Gf5 => "gf5",
            Claim::GfGeneral => "gf-general",
        }
    }

    /// Bound used when none is given. For `gf3`/`gf5` this is the `x`
    /// order.
    pub fn default_n_max(self) -> usize {
        match self {
            Claim::Theorem2 | Claim::Eq1 | Claim::GfGeneral => 10,
            Claim::Prop7 | Claim::Prop8 => 12,
            Claim::Gf3 | Claim::Gf5 => 7,
            _ => 9,
        }
    }

    pub fn default_ms(self) -> Vec<usize> {
        match self {
            Claim::Theorem1 | Claim::Prop6 | Claim::Prop7 => vec![3, 4, 5],
            Claim::Gf3 | Claim::Gf5 => vec![2, 3, 4],
            Claim::GfGeneral => vec![3, 4],
            _ => vec![3],
        }
    }

    /// Whether the claim takes a list of pattern lengths.
    pub fn uses_m(self) -> bool {
        matches!(
            self,
            Claim::Theorem1
                | Claim::Prop6
                | Claim::Prop7
                | Claim::Gf3
                | Claim::Gf5
                | Claim::GfGeneral
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Claim::ALL.iter().map(|c| c.name()).collect();
                Error::InvalidInput(format!(
                    "unknown claim {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Counts of `(L, M)` pairs: permutations with descent composition `L`
/// whose inverse has descent composition `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentMatrix {
    compositions: Vec<Composition>,
    index: HashMap<Composition, usize>,
    counts: Vec<Vec<u64>>,
}

impl DescentMatrix {
    /// Row and column labels, in lexicographic order.
    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    pub fn get(&self, l: &Composition, m: &Composition) -> u64 {
        match (self.index.get(l), self.index.get(m)) {
            (Some(&i), Some(&j)) => self.counts[i][j],
            _ => 0,
        }
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.counts.len();
        (0..d).all(|i| (0..d).all(|j| self.counts[i][j] == self.counts[j][i]))
    }

    /// Sum of row `l` over hook compositions `(1^r, n-r)`.
    pub fn hook_sum(&self, l: &Composition) -> u64 {
        self.compositions
            .iter()
            .filter(|m| is_hook(m))
            .map(|m| self.get(l, m))
            .sum()
    }

    /// Entries keyed by `(L, M)`, nonzero only.
    pub fn to_map(&self) -> BTreeMap<(Composition, Composition), u64> {
        let mut out = BTreeMap::new();
        for (i, l) in self.compositions.iter().enumerate() {
            for (j, m) in self.compositions.iter().enumerate() {
                if self.counts[i][j] > 0 {
                    out.insert((l.clone(), m.clone()), self.counts[i][j]);
                }
            }
        }
        out
    }
}

/// `(1, ..., 1, n - r)`.
pub fn is_hook(c: &Composition) -> bool {
    let parts = c.parts();
    parts[..parts.len() - 1].iter().all(|&p| p == 1)
}

/// Enumeration-backed oracle with explicit size bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    perm_cap: usize,
    word_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            perm_cap: DEFAULT_PERM_CAP,
            word_cap: DEFAULT_WORD_CAP,
        }
    }
}

fn count_where<F>(n: usize, pred: F) -> u64
where
    F: Fn(&Permutation) -> bool + Sync,
{
    if n == 0 {
        return u64::from(pred(&Permutation::identity(0)));
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            permutations_with_first(n, first)
                .filter(|p| pred(p))
                .count() as u64
        })
        .sum()
}

fn collect_where<F>(n: usize, pred: F) -> Vec<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    if n == 0 {
        return permutations_unbounded(0).filter(|p| pred(p)).collect();
    }
    (1..=n)
        .into_par_iter()
        .flat_map_iter(|first| {
            permutations_with_first(n, first)
                .filter(|p| pred(p))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn avoids(p: &Permutation, sigma: &Permutation) -> bool {
    p.avoids_consecutive(sigma).expect("pattern is nonempty")
}

fn fib2(n: i64) -> BigUint {
    fib(2, n).expect("order 2 is valid")
}

/// `f_{n-1} f_n - ⌊(n+1)/2⌋` with `f = f^{(2)}`.
pub fn theorem2_closed_form(n: usize) -> BigUint {
    let n = n as i64;
    fib2(n - 1) * fib2(n) - BigUint::from(((n + 1) / 2) as u64)
}

/// `Σ_{k=1}^{n-1} Σ_{j=0}^{n-k-1} f_{k-1} f_k`.
pub fn w_count_formula(n: usize) -> BigUint {
    (1..n as i64)
        .map(|k| fib2(k - 1) * fib2(k) * BigUint::from((n as i64 - k) as u64))
        .sum()
}

fn as_rational(n: u64) -> Rational {
    rat(n as i64)
}

impl Oracle {
    pub fn new(perm_cap: usize, word_cap: usize) -> Self {
        Self { perm_cap, word_cap }
    }

    pub fn perm_cap(&self) -> usize {
        self.perm_cap
    }

    pub fn word_cap(&self) -> usize {
        self.word_cap
    }

    fn check_perm_n(&self, n: usize) -> Result<()> {
        if n > self.perm_cap {
            return Err(Error::ResourceLimit {
                n,
                cap: self.perm_cap,
            });
        }
        Ok(())
    }

    fn check_word_n(&self, n: usize) -> Result<()> {
        if n > self.word_cap {
            return Err(Error::ResourceLimit {
                n,
                cap: self.word_cap,
            });
        }
        Ok(())
    }

    fn check_counting_args(&self, n: usize, m: usize) -> Result<()> {
        if n < 1 || m < 3 {
            return Err(Error::InvalidInput(format!(
                "counting needs n >= 1 and m >= 3; got n={n}, m={m}"
            )));
        }
        self.check_perm_n(n)
    }

    /// `#{π ∈ S_n avoiding 12...m consecutively : ipk(π) = 0}`.
    pub fn count_ipk0_avoiders(&self, n: usize, m: usize) -> Result<u64> {
        self.check_counting_args(n, m)?;
        let pattern = Permutation::identity(m);
        Ok(count_where(n, |p| p.ipk() == 0 && avoids(p, &pattern)))
    }

    /// `#{π ∈ S_n avoiding m...21 consecutively : ilpk(π) = 1}`.
    pub fn count_ilpk1_avoiders(&self, n: usize, m: usize) -> Result<u64> {
        self.check_counting_args(n, m)?;
        let pattern = Permutation::decreasing(m);
        Ok(count_where(n, |p| p.ilpk() == 1 && avoids(p, &pattern)))
    }

    /// Groups `S_n` by descent composition and checks that each class has
    /// exactly one member with no inverse peaks, equal to
    /// [`zero_ipk_permutation`].
    pub fn verify_descent_uniqueness(&self, n: usize) -> Result<VerificationReport> {
        self.check_perm_n(n)?;
        let mut report = VerificationReport::new("theorem4", json!({ "n": n }));
        if n == 0 {
            return Ok(report);
        }
        let mut classes: HashMap<Composition, Vec<Permutation>> = HashMap::new();
        for p in collect_where(n, |p| p.ipk() == 0) {
            classes.entry(p.descent_composition()).or_default().push(p);
        }
        for l in compositions(n, None)? {
            let members = classes.get(&l).map(Vec::as_slice).unwrap_or(&[]);
            let built = zero_ipk_permutation(&l)?;
            report.check(members.len() == 1 && members[0] == built, || {
                let shown: Vec<String> = members.iter().map(|p| p.to_string()).collect();
                format!(
                    "n={n} L={l}: members with ipk=0 are [{}], constructed {built}",
                    shown.join("; ")
                )
            });
        }
        Ok(report)
    }

    /// Unique alternating and reverse-alternating members with no inverse
    /// peaks, and the counts by des, pk and lpk among them.
    pub fn verify_corollaries(&self, n: usize) -> Result<VerificationReport> {
        self.check_perm_n(n)?;
        let mut report = VerificationReport::new("corollaries", json!({ "n": n }));
        if n == 0 {
            return Ok(report);
        }
        let zero = collect_where(n, |p| p.ipk() == 0);
        let alternating = zero.iter().filter(|p| p.is_alternating()).count();
        let reverse_alt = zero.iter().filter(|p| p.is_reverse_alternating()).count();
        report.check(alternating == 1, || {
            format!("n={n}: {alternating} alternating permutations with ipk=0")
        });
        report.check(reverse_alt == 1, || {
            format!("n={n}: {reverse_alt} reverse-alternating permutations with ipk=0")
        });

        let tally = |stat: fn(&Permutation) -> usize| {
            let mut t = vec![0u64; n + 1];
            for p in &zero {
                t[stat(p)] += 1;
            }
            t
        };
        let by_des = tally(Permutation::des);
        let by_pk = tally(Permutation::pk);
        let by_lpk = tally(Permutation::lpk);
        let n_i = n as i64;
        for k in 0..=n {
            let k_i = k as i64;
            let want = binomial(n_i - 1, k_i);
            report.check(BigUint::from(by_des[k]) == want, || {
                format!("n={n} des={k}: {} != C({},{k}) = {want}", by_des[k], n - 1)
            });
            let want = binomial(n_i, 2 * k_i + 1);
            report.check(BigUint::from(by_pk[k]) == want, || {
                format!(
                    "n={n} pk={k}: {} != C({n},{}) = {want}",
                    by_pk[k],
                    2 * k + 1
                )
            });
            let want = binomial(n_i, 2 * k_i);
            report.check(BigUint::from(by_lpk[k]) == want, || {
                format!("n={n} lpk={k}: {} != C({n},{}) = {want}", by_lpk[k], 2 * k)
            });
        }
        Ok(report)
    }

    /// Joint distribution of the descent compositions of `π` and `π^{-1}`.
    pub fn descent_pair_matrix(&self, n: usize) -> Result<DescentMatrix> {
        self.check_perm_n(n)?;
        let labels = compositions(n.max(1), None)?;
        let index: HashMap<Composition, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let d = labels.len();
        let counts = (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut local = vec![vec![0u64; d]; d];
                for p in permutations_with_first(n, first) {
                    let i = index[&p.descent_composition()];
                    let j = index[&p.inverse().descent_composition()];
                    local[i][j] += 1;
                }
                local
            })
            .reduce(
                || vec![vec![0u64; d]; d],
                |mut a, b| {
                    for (ra, rb) in a.iter_mut().zip(b) {
                        for (x, y) in ra.iter_mut().zip(rb) {
                            *x += y;
                        }
                    }
                    a
                },
            );
        Ok(DescentMatrix {
            compositions: labels,
            index,
            counts,
        })
    }

    /// Avoiders of `12...m` with no inverse peaks, end to end: enumeration count, `f^{(m-1)}_n`, and the
    /// coefficient of `(1-x)/(1-2x+x^m)`.
    pub fn verify_theorem1(&self, n_max: usize, ms: &[usize]) -> Result<VerificationReport> {
        self.check_perm_n(n_max)?;
        let mut report = VerificationReport::new("theorem1", json!({ "n_max": n_max, "m": ms }));
        for &m in ms {
            let gf = ogf_fib(m, n_max)?;
            for n in 1..=n_max {
                let count = self.count_ipk0_avoiders(n, m)?;
                let want = fib(m - 1, n as i64)?;
                report.check(BigUint::from(count) == want, || {
                    format!("m={m} n={n}: count {count} != f^({})_{n} = {want}", m - 1)
                });
                report.check(gf.coeff(n) == as_rational(count), || {
                    format!(
                        "m={m} n={n}: count {count} != [x^{n}] ogf = {}",
                        gf.coeff(n)
                    )
                });
            }
        }
        Ok(report)
    }

    pub fn verify_theorem2(&self, n_max: usize) -> Result<VerificationReport> {
        self.check_perm_n(n_max)?;
        let mut report = VerificationReport::new("theorem2", json!({ "n_max": n_max }));
        for n in 1..=n_max {
            let count = self.count_ilpk1_avoiders(n, 3)?;
            let want = theorem2_closed_form(n);
            report.check(BigUint::from(count) == want, || {
                format!("n={n}: count {count} != f_(n-1) f_n - floor((n+1)/2) = {want}")
            });
        }
        Ok(report)
    }

    pub fn verify_theorem4(&self, n_max: usize) -> Result<VerificationReport> {
        self.merge("theorem4", json!({ "n_max": n_max }), 1..=n_max, |n| {
            self.verify_descent_uniqueness(n)
        })
    }

    pub fn verify_all_corollaries(&self, n_max: usize) -> Result<VerificationReport> {
        self.merge("corollaries", json!({ "n_max": n_max }), 1..=n_max, |n| {
            self.verify_corollaries(n)
        })
    }

    fn merge(
        &self,
        claim: &str,
        params: Value,
        ns: impl Iterator<Item = usize>,
        mut each: impl FnMut(usize) -> Result<VerificationReport>,
    ) -> Result<VerificationReport> {
        let mut report = VerificationReport::new(claim, params);
        for n in ns {
            let r = each(n)?;
            report.cases += r.cases;
            if !r.pass && report.pass {
                report.pass = false;
                report.counterexample = r.counterexample;
            }
        }
        Ok(report)
    }

    /// `φ` sends `N_n` onto `a^i c u a c^j` words, and the permutations whose
    /// inverse avoids `m...21` onto `{w : is_in_w(w, m)}`, bijectively.
    pub fn verify_prop6(&self, n_max: usize, ms: &[usize]) -> Result<VerificationReport> {
        self.check_perm_n(n_max)?;
        self.check_word_n(n_max)?;
        let mut report = VerificationReport::new("prop6", json!({ "n_max": n_max, "m": ms }));
        for n in 2..=n_max {
            let n_perms = collect_where(n, |p| p.lpk() == 1);
            let mut images: HashSet<Word> = HashSet::with_capacity(n_perms.len());
            for p in &n_perms {
                let w = phi(p)?;
                report.check(w.has_acuac_form(), || {
                    format!("φ({p}) = {w} is not a^i c u a c^j")
                });
                let back = phi_inverse(&w)?;
                report.check(&back == p, || format!("φ⁻¹(φ({p})) = {back}"));
                images.insert(w);
            }
            report.check(images.len() == n_perms.len(), || {
                format!("n={n}: φ is not injective on N_n")
            });
            let acuac = all_words(n).filter(Word::has_acuac_form).count();
            report.check(acuac == images.len(), || {
                format!(
                    "n={n}: |φ(N_n)| = {} but {acuac} words have the form",
                    images.len()
                )
            });

            for &m in ms {
                if m < 3 {
                    return Err(Error::InvalidInput(format!("prop6 needs m >= 3, got {m}")));
                }
                let pattern = Permutation::decreasing(m);
                let mut count = 0usize;
                for p in &n_perms {
                    let in_domain = avoids(&p.inverse(), &pattern);
                    let w = phi(p)?;
                    let in_w = is_in_w(&w, m);
                    report.check(in_domain == in_w, || {
                        format!(
                            "m={m}: inverse of {p} avoids {pattern}: {in_domain}, but is_in_w({w}) = {in_w}"
                        )
                    });
                    count += usize::from(in_domain);
                }
                let w_count = all_words(n).filter(|w| is_in_w(w, m)).count();
                report.check(count == w_count, || {
                    format!("m={m} n={n}: {count} permutations but {w_count} words in W")
                });
            }
        }
        Ok(report)
    }

    /// The language of `w_regex(m)` equals `{w : is_in_w(w, m)}` at each
    /// length; for `m = 3` every accepted word has exactly one parse.
    pub fn verify_prop7(&self, n_max: usize, ms: &[usize]) -> Result<VerificationReport> {
        self.check_word_n(n_max)?;
        let mut report = VerificationReport::new("prop7", json!({ "n_max": n_max, "m": ms }));
        for &m in ms {
            let re = w_regex(m)?;
            let dfa = re.compile();
            for n in 0..=n_max {
                let words: Vec<Word> = all_words(n).collect();
                let bad = words
                    .par_iter()
                    .find_first(|w| dfa.accepts(w) != is_in_w(w, m))
                    .cloned();
                report.cases += words.len() as u64;
                if let Some(w) = bad {
                    report.check(false, || {
                        format!(
                            "m={m}: {w} regex={} is_in_w={}",
                            dfa.accepts(&w),
                            is_in_w(&w, m)
                        )
                    });
                }
                if m == 3 {
                    let accepted = dfa.accepted_words(n);
                    let ambiguous = accepted
                        .par_iter()
                        .map(|w| (w, re.count_parses(w)))
                        .find_first(|(_, c)| *c != 1);
                    report.cases += accepted.len() as u64;
                    if let Some((w, c)) = ambiguous {
                        report.check(false, || format!("{w} has {c} parses"));
                    }
                }
            }
        }
        Ok(report)
    }

    /// `|Z_k| = f_{k-1} f_k` via the DFA, via [`tilings`], and via the
    /// word-to-tiling bijection in both directions.
    pub fn verify_prop8(&self, k_max: usize) -> Result<VerificationReport> {
        self.check_word_n(k_max)?;
        let mut report = VerificationReport::new("prop8", json!({ "k_max": k_max }));
        let dfa = z_regex().compile();
        let table = dfa.count_table(k_max);
        for (k, &dfa_count) in table.iter().enumerate().skip(1) {
            let want = fib2(k as i64 - 1) * fib2(k as i64);
            report.check(BigUint::from(dfa_count) == want, || {
                format!("k={k}: DFA count {dfa_count} != f_(k-1) f_k = {want}")
            });
            let all_tilings = tilings(k)?;
            report.check(BigUint::from(all_tilings.len()) == want, || {
                format!("k={k}: {} tilings != {want}", all_tilings.len())
            });
            let mut seen = HashSet::new();
            for z in dfa.accepted_words(k) {
                let t = z_to_tiling(&z)?;
                let back = tiling_to_z(&t)?;
                report.check(back == z, || format!("{z} → tiling → {back}"));
                seen.insert(t);
            }
            report.check(seen.len() == all_tilings.len(), || {
                format!(
                    "k={k}: image has {} tilings of {}",
                    seen.len(),
                    all_tilings.len()
                )
            });
            for t in &all_tilings {
                let z = tiling_to_z(t)?;
                report.check(dfa.accepts(&z) && z_to_tiling(&z)? == *t, || {
                    format!(
                        "tiling {} does not round trip",
                        t.to_string().replace('\n', " / ")
                    )
                });
            }
        }
        Ok(report)
    }

    /// For each `n`: `|N'_n|` by enumeration, `|W_n|` by definition, `|W_n|`
    /// by DFA, and the double Fibonacci sum over `|T_k|`, plus the
    /// round trip `N'_n → (j, k, τ) → N'_n`.
    pub fn verify_eq1(&self, n_max: usize) -> Result<VerificationReport> {
        self.check_perm_n(n_max)?;
        self.check_word_n(n_max)?;
        let mut report = VerificationReport::new("eq1", json!({ "n_max": n_max }));
        let dfa = w_regex(3)?.compile();
        let table = dfa.count_table(n_max);
        let pattern = Permutation::decreasing(3);
        let tiling_counts: Vec<usize> = (1..n_max.max(1))
            .map(|k| tilings(k).map(|t| t.len()))
            .collect::<Result<_>>()?;
        for (n, &by_dfa) in table.iter().enumerate().skip(1) {
            let nprime = collect_where(n, |p| p.lpk() == 1 && avoids(&p.inverse(), &pattern));
            let by_definition = all_words(n).filter(|w| is_in_w(w, 3)).count() as u128;
            let by_tilings: u128 = (1..n)
                .map(|k| tiling_counts[k - 1] as u128 * (n - k) as u128)
                .sum();
            let formula = w_count_formula(n);
            let counts = [nprime.len() as u128, by_definition, by_dfa, by_tilings];
            report.check(
                counts.iter().all(|&c| BigUint::from(c) == formula),
                || {
                    format!(
                        "n={n}: |N'_n|={}, |W_n| by definition={}, by DFA={}, by tilings={}, formula={formula}",
                        counts[0], counts[1], counts[2], counts[3]
                    )
                },
            );
            for p in &nprime {
                let triple = nprime_to_triple(p)?;
                let back = triple_to_nprime(n, &triple)?;
                report.check(&back == p, || format!("{p} → (j,k,τ) → {back}"));
            }
        }
        Ok(report)
    }

    pub fn verify_gf3(&self, x_order: usize, ms: &[usize]) -> Result<VerificationReport> {
        let t_order = x_order.min(5);
        let mut report = VerificationReport::new(
            "gf3",
            json!({ "x_order": x_order, "t_order": t_order, "m": ms }),
        );
        for &m in ms {
            let mismatch = check_theorem3(m, x_order, t_order)?;
            report.check(mismatch.is_none(), || {
                format!("m={m}: {}", mismatch.unwrap())
            });
        }
        Ok(report)
    }

    pub fn verify_gf5(&self, x_order: usize, ms: &[usize]) -> Result<VerificationReport> {
        let t_order = x_order.min(5);
        let mut report = VerificationReport::new(
            "gf5",
            json!({ "x_order": x_order, "t_order": t_order, "m": ms }),
        );
        for &m in ms {
            let mismatch = check_theorem5(m, x_order, t_order)?;
            report.check(mismatch.is_none(), || {
                format!("m={m}: {}", mismatch.unwrap())
            });
        }
        Ok(report)
    }

    /// Coefficients of the rational generating function for one inverse
    /// left peak against the DFA count for `w_regex(m)` and the enumeration
    /// count; for `m = 3` also against the closed form.
    pub fn verify_gf_general(&self, n_max: usize, ms: &[usize]) -> Result<VerificationReport> {
        self.check_perm_n(n_max)?;
        let mut report = VerificationReport::new("gf-general", json!({ "n_max": n_max, "m": ms }));
        for &m in ms {
            let gf = ogf_ilpk_general(m, n_max)?;
            let words = w_regex(m)?.compile().count_table(n_max);
            for (n, &accepted) in words.iter().enumerate().skip(1) {
                let coeff = gf.coeff(n);
                let dfa = rat(accepted as i64);
                report.check(coeff == dfa, || {
                    format!("m={m} n={n}: [x^{n}] = {coeff}, DFA count = {dfa}")
                });
                let count = self.count_ilpk1_avoiders(n, m)?;
                report.check(coeff == as_rational(count), || {
                    format!("m={m} n={n}: [x^{n}] = {coeff}, enumeration = {count}")
                });
                if m == 3 {
                    let closed = Rational::from_integer(BigInt::from(theorem2_closed_form(n)));
                    report.check(coeff == closed, || {
                        format!("n={n}: [x^{n}] = {coeff}, closed form = {closed}")
                    });
                }
            }
        }
        Ok(report)
    }

    /// Runs one claim with optional bounds, timing it.
    pub fn run_claim(
        &self,
        claim: Claim,
        n_max: Option<usize>,
        ms: Option<&[usize]>,
    ) -> Result<VerificationReport> {
        let n = n_max.unwrap_or_else(|| claim.default_n_max());
        let default_ms = claim.default_ms();
        let ms = ms.unwrap_or(&default_ms);
        let start = Instant::now();
        let mut report = match claim {
            Claim::Theorem1 => self.verify_theorem1(n, ms),
            Claim::Theorem2 => self.verify_theorem2(n),
            Claim::Theorem4 => self.verify_theorem4(n),
            Claim::Corollaries => self.verify_all_corollaries(n),
            Claim::Prop6 => self.verify_prop6(n, ms),
            Claim::Prop7 => self.verify_prop7(n, ms),
            Claim::Prop8 => self.verify_prop8(n),
            Claim::Eq1 => self.verify_eq1(n),
            Claim::Gf3 => self.verify_gf3(n, ms),
            Claim::Gf5 => self.verify_gf5(n, ms),
            Claim::GfGeneral => self.verify_gf_general(n, ms),
        }?;
        report.millis = Some(start.elapsed().as_millis() as u64);
        Ok(report)
    }
}

/// Exact checks, for `1 <= n <= n_max`, of
/// `Σ_{i=1}^{n-1} Σ_{k=1}^{i} f_{k-1} f_k = f_{n-1} f_n - ⌊(n+1)/2⌋`,
/// the reordering of that double sum as `Σ_k Σ_j f_{k-1} f_k`, and
/// `Σ_{j=0}^{n-1} C(j, 2k) = C(n, 2k+1)`.
pub fn verify_identity_sums(n_max: usize) -> Result<VerificationReport> {
    if n_max > MAX_IDENTITY_N {
        return Err(Error::ResourceLimit {
            n: n_max,
            cap: MAX_IDENTITY_N,
        });
    }
    let mut report = VerificationReport::new("identity-sums", json!({ "n_max": n_max }));
    let f = |k: usize| fib2(k as i64);
    for n in 1..=n_max {
        let lhs: BigUint = (1..n)
            .flat_map(|i| (1..=i).map(move |k| (i, k)))
            .map(|(_, k)| f(k - 1) * f(k))
            .sum();
        let closed = theorem2_closed_form(n);
        report.check(lhs == closed, || {
            format!("n={n}: double sum {lhs} != f_(n-1) f_n - floor((n+1)/2) = {closed}")
        });
        let reordered: BigUint = (1..n)
            .flat_map(|k| (0..n - k).map(move |j| (k, j)))
            .map(|(k, _)| f(k - 1) * f(k))
            .sum();
        report.check(lhs == reordered, || {
            format!("n={n}: double sum {lhs} != reordered sum {reordered}")
        });
        for k in 0..=n / 2 {
            let k = k as i64;
            let sum: BigUint = (0..n as i64).map(|j| binomial(j, 2 * k)).sum();
            let want = binomial(n as i64, 2 * k + 1);
            report.check(sum == want, || {
                format!(
                    "n={n} k={k}: Σ C(j,{}) = {sum} != C({n},{}) = {want}",
                    2 * k,
                    2 * k + 1
                )
            });
        }
    }
    Ok(report)
}

/// [`Oracle::count_ipk0_avoiders`] with default bounds.
pub fn count_ipk0_avoiders(n: usize, m: usize) -> Result<u64> {
    Oracle::default().count_ipk0_avoiders(n, m)
}

/// [`Oracle::count_ilpk1_avoiders`] with default bounds.
pub fn count_ilpk1_avoiders(n: usize, m: usize) -> Result<u64> {
    Oracle::default().count_ilpk1_avoiders(n, m)
}

/// [`Oracle::verify_descent_uniqueness`] with default bounds.
pub fn verify_descent_uniqueness(n: usize) -> Result<VerificationReport> {
    Oracle::default().verify_descent_uniqueness(n)
}

/// [`Oracle::verify_corollaries`] with default bounds.
pub fn verify_corollaries(n: usize) -> Result<VerificationReport> {
    Oracle::default().verify_corollaries(n)
}

/// [`Oracle::descent_pair_matrix`] with default bounds.
pub fn descent_pair_matrix(n: usize) -> Result<DescentMatrix> {
    Oracle::default().descent_pair_matrix(n)
}
