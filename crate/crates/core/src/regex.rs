//! A small regular-expression engine over `{a, b, c}`.
//!
//! Expressions are compiled to a total DFA by Thompson construction followed
//! by subset construction. A direct recursive matcher and a parse counter
//! work on the AST itself and serve as independent checks on the DFA and on
//! unambiguity.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Regular expression syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Epsilon,
    Literal(Letter),
    Concat(Vec<Regex>),
    /// An empty union matches nothing.
    Union(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
    /// `r^{<= t}`: zero to `t` copies of `r`.
    AtMost(Box<Regex>, usize),
}

impl Regex {
    pub fn lit(l: Letter) -> Self {
        Regex::Literal(l)
    }

    /// Concatenation that drops `ε` factors and flattens nested concatenations.
    pub fn concat(items: Vec<Regex>) -> Self {
        let mut flat = Vec::new();
        for item in items {
            match item {
                Regex::Epsilon => {}
                Regex::Concat(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Regex::Epsilon,
            1 => flat.pop().unwrap(),
            _ => Regex::Concat(flat),
        }
    }

    pub fn union(items: Vec<Regex>) -> Self {
        if items.len() == 1 {
            return items.into_iter().next().unwrap();
        }
        Regex::Union(items)
    }

    pub fn star(r: Regex) -> Self {
        Regex::Star(Box::new(r))
    }

    pub fn plus(r: Regex) -> Self {
        Regex::Plus(Box::new(r))
    }

    /// `r^{<= t}`; collapses to `ε` when `t = 0`.
    pub fn at_most(r: Regex, t: usize) -> Self {
        if t == 0 {
            Regex::Epsilon
        } else {
            Regex::AtMost(Box::new(r), t)
        }
    }

    /// Rewrites bounded repetitions as explicit unions `ε ∪ r ∪ rr ∪ ...`.
    pub fn expand(&self) -> Regex {
        match self {
            Regex::Epsilon | Regex::Literal(_) => self.clone(),
            Regex::Concat(v) => Regex::Concat(v.iter().map(Regex::expand).collect()),
            Regex::Union(v) => Regex::Union(v.iter().map(Regex::expand).collect()),
            Regex::Star(r) => Regex::star(r.expand()),
            Regex::Plus(r) => Regex::plus(r.expand()),
            Regex::AtMost(r, t) => {
                let inner = r.expand();
                Regex::Union(
                    (0..=*t)
                        .map(|copies| Regex::concat(vec![inner.clone(); copies]))
                        .collect(),
                )
            }
        }
    }

    /// Whether the whole word matches, by direct recursion on the AST.
    pub fn is_match(&self, word: &Word) -> bool {
        self.end_positions(word.letters(), 0).contains(&word.len())
    }

    fn end_positions(&self, w: &[Letter], start: usize) -> BTreeSet<usize> {
        match self {
            Regex::Epsilon => BTreeSet::from([start]),
            Regex::Literal(l) => {
                if w.get(start) == Some(l) {
                    BTreeSet::from([start + 1])
                } else {
                    BTreeSet::new()
                }
            }
            Regex::Concat(items) => items.iter().fold(BTreeSet::from([start]), |acc, r| {
                acc.iter().flat_map(|&p| r.end_positions(w, p)).collect()
            }),
            Regex::Union(items) => items
                .iter()
                .flat_map(|r| r.end_positions(w, start))
                .collect(),
            Regex::Star(r) => {
                let mut seen = BTreeSet::from([start]);
                let mut frontier = vec![start];
                while let Some(p) = frontier.pop() {
                    for e in r.end_positions(w, p) {
                        if seen.insert(e) {
                            frontier.push(e);
                        }
                    }
                }
                seen
            }
            Regex::Plus(r) => r
                .end_positions(w, start)
                .into_iter()
                .flat_map(|p| Regex::Star(r.clone()).end_positions(w, p))
                .collect(),
            Regex::AtMost(..) => self.expand().end_positions(w, start),
        }
    }

    /// Number of distinct parse trees of `word`. Star iterations must be
    /// nonempty; the alternatives of a union count separately.
    pub fn count_parses(&self, word: &Word) -> u64 {
        self.parses(word.letters(), 0)
            .get(&word.len())
            .copied()
            .unwrap_or(0)
    }

    fn parses(&self, w: &[Letter], start: usize) -> BTreeMap<usize, u64> {
        match self {
            Regex::Epsilon => BTreeMap::from([(start, 1)]),
            Regex::Literal(l) => {
                if w.get(start) == Some(l) {
                    BTreeMap::from([(start + 1, 1)])
                } else {
                    BTreeMap::new()
                }
            }
            Regex::Concat(items) => items.iter().fold(BTreeMap::from([(start, 1)]), |acc, r| {
                let mut next = BTreeMap::new();
                for (&p, &c) in &acc {
                    for (e, d) in r.parses(w, p) {
                        *next.entry(e).or_insert(0) += c * d;
                    }
                }
                next
            }),
            Regex::Union(items) => {
                let mut out = BTreeMap::new();
                for r in items {
                    for (e, d) in r.parses(w, start) {
                        *out.entry(e).or_insert(0) += d;
                    }
                }
                out
            }
            Regex::Star(r) => {
                let mut ways: BTreeMap<usize, u64> = BTreeMap::from([(start, 1)]);
                for p in start..=w.len() {
                    let Some(&here) = ways.get(&p) else { continue };
                    for (e, d) in r.parses(w, p) {
                        if e > p {
                            *ways.entry(e).or_insert(0) += here * d;
                        }
                    }
                }
                ways
            }
            Regex::Plus(r) => {
                Regex::Concat(vec![(**r).clone(), Regex::Star(r.clone())]).parses(w, start)
            }
            Regex::AtMost(..) => self.expand().parses(w, start),
        }
    }

    pub fn compile(&self) -> Dfa {
        let mut nfa = Nfa::default();
        let (start, end) = nfa.build(&self.expand());
        nfa.determinize(start, end)
    }

    fn is_atomic(&self) -> bool {
        match self {
            Regex::Epsilon | Regex::Literal(_) => true,
            Regex::Star(r) | Regex::Plus(r) | Regex::AtMost(r, _) => r.is_atomic(),
            _ => false,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regex::Epsilon | Regex::Literal(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Regex {
    /// Union as `∪`, Kleene star as `*`, plus as `⁺`, bounded repetition as
    /// `^≤t`. Concatenations of atoms are juxtaposed; others are spaced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regex::Epsilon => f.write_str("ε"),
            Regex::Literal(l) => write!(f, "{}", l.as_char()),
            Regex::Concat(items) => {
                let sep = if items.iter().all(Regex::is_atomic) {
                    ""
                } else {
                    " "
                };
                for (i, r) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    match r {
                        Regex::Union(_) | Regex::Concat(_) => write!(f, "({r})")?,
                        _ => write!(f, "{r}")?,
                    }
                }
                Ok(())
            }
            Regex::Union(items) => {
                if items.is_empty() {
                    return f.write_str("∅");
                }
                for (i, r) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ∪ ")?;
                    }
                    match r {
                        Regex::Union(_) => write!(f, "({r})")?,
                        _ => write!(f, "{r}")?,
                    }
                }
                Ok(())
            }
            Regex::Star(r) => {
                r.fmt_operand(f)?;
                f.write_str("*")
            }
            Regex::Plus(r) => {
                r.fmt_operand(f)?;
                f.write_str("⁺")
            }
            Regex::AtMost(r, t) => {
                r.fmt_operand(f)?;
                write!(f, "^≤{t}")
            }
        }
    }
}

#[derive(Debug, Default)]
struct Nfa {
    eps: Vec<Vec<usize>>,
    trans: Vec<Vec<(Letter, usize)>>,
}

impl Nfa {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.trans.push(Vec::new());
        self.eps.len() - 1
    }

    /// Thompson fragment for `r`; returns (entry, exit).
    fn build(&mut self, r: &Regex) -> (usize, usize) {
        let s = self.state();
        let e = self.state();
        match r {
            Regex::Epsilon => self.eps[s].push(e),
            Regex::Literal(l) => self.trans[s].push((*l, e)),
            Regex::Concat(items) => {
                let mut cur = s;
                for item in items {
                    let (is, ie) = self.build(item);
                    self.eps[cur].push(is);
                    cur = ie;
                }
                self.eps[cur].push(e);
            }
            Regex::Union(items) => {
                for item in items {
                    let (is, ie) = self.build(item);
                    self.eps[s].push(is);
                    self.eps[ie].push(e);
                }
            }
            Regex::Star(inner) => {
                let (is, ie) = self.build(inner);
                self.eps[s].extend([is, e]);
                self.eps[ie].extend([is, e]);
            }
            Regex::Plus(inner) => {
                let (is, ie) = self.build(inner);
                self.eps[s].push(is);
                self.eps[ie].extend([is, e]);
            }
            Regex::AtMost(..) => unreachable!("expanded before construction"),
        }
        (s, e)
    }

    fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = seeds.into_iter().collect();
        while let Some(q) = stack.pop() {
            if seen.insert(q) {
                stack.extend(&self.eps[q]);
            }
        }
        seen.into_iter().collect()
    }

    fn determinize(&self, start: usize, accept: usize) -> Dfa {
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut transitions: Vec<[usize; 3]> = Vec::new();
        let first = self.closure([start]);
        index.insert(first.clone(), 0);
        sets.push(first);
        let mut i = 0;
        while i < sets.len() {
            let mut row = [0usize; 3];
            for l in Letter::ALL {
                let targets = sets[i]
                    .iter()
                    .flat_map(|&q| self.trans[q].iter())
                    .filter(|(sym, _)| *sym == l)
                    .map(|&(_, t)| t);
                let next = self.closure(targets);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        index.insert(next.clone(), sets.len());
                        sets.push(next);
                        sets.len() - 1
                    }
                };
                row[l.index()] = id;
            }
            transitions.push(row);
            i += 1;
        }
        let accepting = sets
            .iter()
            .map(|s| s.binary_search(&accept).is_ok())
            .collect();
        Dfa {
            transitions,
            start: 0,
            accepting,
        }
    }
}

/// A complete deterministic automaton over `{a, b, c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    transitions: Vec<[usize; 3]>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn step(&self, state: usize, l: Letter) -> usize {
        self.transitions[state][l.index()]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let end = word
            .letters()
            .iter()
            .fold(self.start, |q, &l| self.step(q, l));
        self.accepting[end]
    }

    /// `[N_0, ..., N_max]` where `N_n` is the number of accepted words of
    /// length `n`, by path counting.
    pub fn count_table(&self, max_len: usize) -> Vec<u128> {
        let mut counts = vec![0u128; self.num_states()];
        counts[self.start] = 1;
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push(
                counts
                    .iter()
                    .zip(&self.accepting)
                    .filter(|(_, &acc)| acc)
                    .map(|(&c, _)| c)
                    .sum(),
            );
            if len == max_len {
                break;
            }
            let mut next = vec![0u128; self.num_states()];
            for (q, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for target in self.transitions[q] {
                    next[target] += c;
                }
            }
            counts = next;
        }
        out
    }

    pub fn count_words(&self, len: usize) -> u128 {
        self.count_table(len)[len]
    }

    /// Accepted words of length `len` in lexicographic order.
    pub fn accepted_words(&self, len: usize) -> Vec<Word> {
        // live[r][q]: some word of length r leads from q to acceptance.
        let mut live = vec![self.accepting.clone()];
        for r in 1..=len {
            let prev = &live[r - 1];
            let row = self
                .transitions
                .iter()
                .map(|t| t.iter().any(|&q| prev[q]))
                .collect();
            live.push(row);
        }
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(len);
        self.walk(self.start, len, &live, &mut stack, &mut out);
        out
    }

    fn walk(
        &self,
        q: usize,
        rest: usize,
        live: &[Vec<bool>],
        stack: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if !live[rest][q] {
            return;
        }
        if rest == 0 {
            out.push(Word::new(stack.clone()));
            return;
        }
        for l in Letter::ALL {
            stack.push(l);
            self.walk(self.step(q, l), rest - 1, live, stack, out);
            stack.pop();
        }
    }
}

fn a() -> Regex {
    Regex::lit(Letter::A)
}
fn b() -> Regex {
    Regex::lit(Letter::B)
}
fn c() -> Regex {
    Regex::lit(Letter::C)
}

/// `c ∪ bc ∪ a⁺b ∪ a⁺c`
fn block_union() -> Regex {
    Regex::union(vec![
        c(),
        Regex::concat(vec![b(), c()]),
        Regex::concat(vec![Regex::plus(a()), b()]),
        Regex::concat(vec![Regex::plus(a()), c()]),
    ])
}

/// `a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)*`, the language `Z`.
pub fn z_regex() -> Regex {
    Regex::concat(vec![Regex::star(a()), c(), Regex::star(block_union())])
}

/// `a* c [b^≤(m-3) (c ∪ bc ∪ a⁺b ∪ a⁺c)]* b^≤(m-3) a⁺ c*`.
///
/// For `m = 3` the bounded repetitions vanish and this is exactly
/// `a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* a⁺ c*`, which is unambiguous. For larger `m`
/// the leading `b`s may be absorbed by a `bc` block or not (`cbca` parses
/// twice at `m = 4`), so only the language, not the parse, is unique.
pub fn w_regex(m: usize) -> Result<Regex> {
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "w_regex needs m >= 3, got {m}"
        )));
    }
    let t = m - 3;
    Ok(Regex::concat(vec![
        Regex::star(a()),
        c(),
        Regex::star(Regex::concat(vec![Regex::at_most(b(), t), block_union()])),
        Regex::at_most(b(), t),
        Regex::plus(a()),
        Regex::star(c()),
    ]))
}

/// One factor in the decomposition of a word of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// `c`
    C,
    /// `bc`
    BC,
    /// `a^i b` with `i >= 1`
    AB(usize),
    /// `a^i c` with `i >= 1`
    AC(usize),
}

impl Block {
    pub fn len(self) -> usize {
        match self {
            Block::C => 1,
            Block::BC => 2,
            Block::AB(i) | Block::AC(i) => i + 1,
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn to_word(self) -> Word {
        let letters = match self {
            Block::C => vec![Letter::C],
            Block::BC => vec![Letter::B, Letter::C],
            Block::AB(i) => {
                let mut v = vec![Letter::A; i];
                v.push(Letter::B);
                v
            }
            Block::AC(i) => {
                let mut v = vec![Letter::A; i];
                v.push(Letter::C);
                v
            }
        };
        Word::new(letters)
    }

    /// Allowed as the leading block (`a* c`).
    pub fn can_lead(self) -> bool {
        matches!(self, Block::C | Block::AC(_))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Formats blocks as `aac|bc|c`.
pub fn format_blocks(blocks: &[Block]) -> String {
    blocks
        .iter()
        .map(Block::to_string)
        .collect::<Vec<_>>()
        .join("|")
}

/// Greedy left-to-right parse of a word of `Z` into blocks `c`, `bc`,
/// `a^i b`, `a^i c`, the first of which is `c` or `a^i c`.
pub fn unique_factor_decomposition(z: &Word) -> Result<Vec<Block>> {
    let w = z.letters();
    let not_in_z = || Error::NotInLanguage(format!("{z} does not match {}", z_regex()));
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let block = match w[i] {
            Letter::C => Block::C,
            Letter::B => match w.get(i + 1) {
                Some(Letter::C) => Block::BC,
                _ => return Err(not_in_z()),
            },
            Letter::A => {
                let run = w[i..].iter().take_while(|&&l| l == Letter::A).count();
                match w.get(i + run) {
                    Some(Letter::B) => Block::AB(run),
                    Some(Letter::C) => Block::AC(run),
                    _ => return Err(not_in_z()),
                }
            }
        };
        if blocks.is_empty() && !block.can_lead() {
            return Err(not_in_z());
        }
        i += block.len();
        blocks.push(block);
    }
    if blocks.is_empty() {
        return Err(not_in_z());
    }
    Ok(blocks)
}

/// Every way of cutting `z` into blocks with a leading `c`/`a^i c` block,
/// found by exhaustive search over all cut points.
pub fn all_block_decompositions(z: &Word) -> Vec<Vec<Block>> {
    fn classify(piece: &[Letter]) -> Option<Block> {
        let (last, body) = piece.split_last()?;
        if !body.iter().all(|&l| l == Letter::A) {
            return match (body, last) {
                ([Letter::B], Letter::C) => Some(Block::BC),
                _ => None,
            };
        }
        match (body.len(), last) {
            (0, Letter::C) => Some(Block::C),
            (0, _) => None,
            (i, Letter::B) => Some(Block::AB(i)),
            (i, Letter::C) => Some(Block::AC(i)),
            _ => None,
        }
    }
    fn go(w: &[Letter], start: usize, acc: &mut Vec<Block>, out: &mut Vec<Vec<Block>>) {
        if start == w.len() {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        for end in start + 1..=w.len() {
            if let Some(block) = classify(&w[start..end]) {
                if acc.is_empty() && !block.can_lead() {
                    continue;
                }
                acc.push(block);
                go(w, end, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(z.letters(), 0, &mut Vec::new(), &mut out);
    out
}

/// The pieces of a word `w = z a^(n-j-k) c^j` with `z ∈ Z_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSplit {
    pub j: usize,
    pub k: usize,
    pub z: Word,
}

impl WSplit {
    /// Reassembles `z a^(n-j-k) c^j`.
    pub fn reassemble(&self, n: usize) -> Word {
        self.z
            .concat(&Word::repeat(Letter::A, n - self.j - self.k))
            .concat(&Word::repeat(Letter::C, self.j))
    }
}

/// Splits a word matching `w_regex(3)` as `z a^(n-j-k) c^j`.
pub fn split_w_word(w: &Word) -> Result<WSplit> {
    let letters = w.letters();
    let n = letters.len();
    let j = letters
        .iter()
        .rev()
        .take_while(|&&l| l == Letter::C)
        .count();
    let a_run = letters[..n - j]
        .iter()
        .rev()
        .take_while(|&&l| l == Letter::A)
        .count();
    let k = n - j - a_run;
    if a_run == 0 || k == 0 {
        return Err(Error::NotInLanguage(format!("{w} does not end in a⁺c*")));
    }
    let z = w.slice(0..k);
    unique_factor_decomposition(&z)
        .map_err(|_| Error::NotInLanguage(format!("{w}: prefix {z} is not in Z")))?;
    Ok(WSplit { j, k, z })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::all_words;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn literal_and_star() {
        let dfa = a().compile();
        assert!(dfa.accepts(&w("a")));
        assert!(!dfa.accepts(&w("")));
        assert!(!dfa.accepts(&w("aa")));
        assert!(!dfa.accepts(&w("b")));

        let ab = Regex::star(Regex::union(vec![a(), b()])).compile();
        for n in 0..=6 {
            for word in all_words(n) {
                let has_c = word.letters().contains(&Letter::C);
                assert_eq!(ab.accepts(&word), !has_c, "{word}");
            }
        }
    }

    #[test]
    fn w_regex_shapes() {
        let w3 = w_regex(3).unwrap();
        let prop7 = Regex::concat(vec![
            Regex::star(a()),
            c(),
            Regex::star(block_union()),
            Regex::plus(a()),
            Regex::star(c()),
        ]);
        assert_eq!(w3, prop7);
        assert_eq!(w3.to_string(), "a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* a⁺ c*");
        assert_eq!(
            w_regex(4).unwrap().to_string(),
            "a* c (b^≤1 (c ∪ bc ∪ a⁺b ∪ a⁺c))* b^≤1 a⁺ c*"
        );
        assert!(w_regex(2).is_err());
        assert!(w3.compile().accepts(&w("ca")));
        assert!(w3.is_match(&w("ca")));
    }

    #[test]
    fn w3_language_within_w4() {
        let d3 = w_regex(3).unwrap().compile();
        let d4 = w_regex(4).unwrap().compile();
        for n in 0..=10 {
            for word in all_words(n) {
                if d3.accepts(&word) {
                    assert!(d4.accepts(&word), "{word}");
                }
            }
        }
    }

    #[test]
    fn z_membership() {
        let z = z_regex().compile();
        assert!(z.accepts(&w("c")));
        assert!(z.accepts(&w("aacbcccaaabbcac")));
        assert!(!z.accepts(&w("b")));
        assert!(!z.accepts(&w("")));
    }

    #[test]
    fn decomposition_examples() {
        let blocks = unique_factor_decomposition(&w("aacbcccaaabbcac")).unwrap();
        assert_eq!(format_blocks(&blocks), "aac|bc|c|c|aaab|bc|ac");
        assert_eq!(
            unique_factor_decomposition(&w("c")).unwrap(),
            vec![Block::C]
        );
        let blocks = unique_factor_decomposition(&w("accbc")).unwrap();
        assert_eq!(format_blocks(&blocks), "ac|c|bc");
        assert_eq!(all_block_decompositions(&w("accbc")), vec![blocks]);
        for bad in ["b", "ab", "ca", "cb", "cba", ""] {
            assert!(
                matches!(
                    unique_factor_decomposition(&w(bad)),
                    Err(Error::NotInLanguage(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn split_examples() {
        let s = split_w_word(&w("aacbcccaaabbcacaaccc")).unwrap();
        assert_eq!(
            (s.j, s.k, s.z.to_string().as_str()),
            (3, 15, "aacbcccaaabbcac")
        );
        assert_eq!(s.reassemble(20), w("aacbcccaaabbcacaaccc"));
        let s = split_w_word(&w("ca")).unwrap();
        assert_eq!((s.j, s.k, s.z.to_string().as_str()), (0, 1, "c"));
        let s = split_w_word(&w("caa")).unwrap();
        assert_eq!((s.j, s.k, s.z.to_string().as_str()), (0, 1, "c"));
        assert!(split_w_word(&w("aac")).is_err());
        assert!(split_w_word(&w("cbaa")).is_err());
        assert!(split_w_word(&w("")).is_err());
    }

    #[test]
    fn parse_counts() {
        let w3 = w_regex(3).unwrap();
        assert_eq!(w3.count_parses(&w("ca")), 1);
        assert_eq!(w3.count_parses(&w("cb")), 0);
        // (a ∪ a)* is ambiguous.
        let amb = Regex::star(Regex::union(vec![a(), a()]));
        assert_eq!(amb.count_parses(&w("aa")), 4);
        let amb = Regex::concat(vec![Regex::star(a()), Regex::star(a())]);
        assert_eq!(amb.count_parses(&w("aa")), 3);
    }

    #[test]
    fn accepted_words_match_counts() {
        let z = z_regex().compile();
        let table = z.count_table(8);
        for (k, &count) in table.iter().enumerate() {
            let words = z.accepted_words(k);
            assert_eq!(words.len() as u128, count);
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
