//! Constructive bijections.
//!
//! * compositions to the unique permutation with that descent composition
//!   and no inverse peaks;
//! * permutations with one left peak (`N_n`) to words over `{a, b, c}`;
//! * words of `Z_k` to `2 × k` monomino/domino tilings with a monomino in
//!   the top-left corner;
//! * the composite from `N'_n` to triples `(j, k, tiling)`.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::regex::{split_w_word, unique_factor_decomposition, Block, WSplit};
use crate::word::{Letter, Word};

/// The permutation with descent composition `l` whose inverse has no peaks.
///
/// The first letters of runs `k, k-1, ..., 1` receive `1, 2, ..., k`; the
/// remaining positions receive `k+1, ..., n` left to right.
pub fn zero_ipk_permutation(l: &Composition) -> Result<Permutation> {
    if l.is_empty() {
        return Err(Error::InvalidInput(
            "zero_ipk_permutation needs a composition of n >= 1".into(),
        ));
    }
    let n = l.n();
    let k = l.num_parts();
    let mut letters = vec![0; n];
    let mut run_start = 0;
    for (r, &part) in l.parts().iter().enumerate() {
        letters[run_start] = k - r;
        run_start += part;
    }
    for (slot, v) in letters.iter_mut().filter(|v| **v == 0).zip(k + 1..) {
        *slot = v;
    }
    Ok(Permutation::from_letters_unchecked(letters))
}

/// `α | β | γ` with `α` increasing, `β` decreasing and `γ` increasing, the
/// left-peak letter in `α` and the right-valley letter in `γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
}

impl fmt::Display for CanonicalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "{} | {} | {}",
            join(&self.alpha),
            join(&self.beta),
            join(&self.gamma)
        )
    }
}

/// Requires `lpk(p) = 1`.
pub fn canonical_decomposition(p: &Permutation) -> Result<CanonicalDecomposition> {
    let peaks = p.left_peak_positions();
    let valleys = p.right_valley_positions();
    if peaks.len() != 1 || valleys.len() != 1 {
        return Err(Error::NotInN { lpk: peaks.len() });
    }
    let (i, j) = (peaks[0], valleys[0]);
    let letters = p.letters();
    Ok(CanonicalDecomposition {
        alpha: letters[..i].to_vec(),
        beta: letters[i..j - 1].to_vec(),
        gamma: letters[j - 1..].to_vec(),
    })
}

/// Records, for each value `1..=n`, which block of the canonical
/// decomposition contains it.
pub fn phi(p: &Permutation) -> Result<Word> {
    let d = canonical_decomposition(p)?;
    let mut letters = vec![Letter::A; p.len()];
    for &v in &d.beta {
        letters[v - 1] = Letter::B;
    }
    for &v in &d.gamma {
        letters[v - 1] = Letter::C;
    }
    Ok(Word::new(letters))
}

pub fn phi_inverse(w: &Word) -> Result<Permutation> {
    if !w.has_acuac_form() {
        return Err(Error::NotInImage(w.to_string()));
    }
    let values = |target: Letter| {
        w.letters()
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == target)
            .map(|(i, _)| i + 1)
    };
    let mut letters: Vec<usize> = values(Letter::A).collect();
    let mut beta: Vec<usize> = values(Letter::B).collect();
    beta.reverse();
    letters.extend(beta);
    letters.extend(values(Letter::C));
    Ok(Permutation::from_letters_unchecked(letters))
}

/// `b^(m-1) a`, `b^m`, `c b^(m-2) a`, `c b^(m-1)`.
pub fn forbidden_factors(m: usize) -> [Word; 4] {
    assert!(m >= 3, "forbidden factors need m >= 3");
    let bs = |count| Word::repeat(Letter::B, count);
    let a = Word::repeat(Letter::A, 1);
    let c = Word::repeat(Letter::C, 1);
    [
        bs(m - 1).concat(&a),
        bs(m),
        c.concat(&bs(m - 2)).concat(&a),
        c.concat(&bs(m - 1)),
    ]
}

/// Membership in `W_n^(m)`: the shape `a^i c u a c^j` and no forbidden factor.
///
/// # Panics
/// If `m < 3`.
pub fn is_in_w(w: &Word, m: usize) -> bool {
    w.has_acuac_form()
        && forbidden_factors(m)
            .iter()
            .all(|f| w.avoids_factor(f).expect("factors are nonempty"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Monomino,
    Domino,
}

impl Tile {
    pub fn width(self) -> usize {
        match self {
            Tile::Monomino => 1,
            Tile::Domino => 2,
        }
    }

    fn code(self) -> char {
        match self {
            Tile::Monomino => '1',
            Tile::Domino => '2',
        }
    }
}

/// A `2 × k` tiling by monominoes and horizontal dominoes whose top row
/// starts with a monomino.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    top: Vec<Tile>,
    bottom: Vec<Tile>,
}

fn row_width(row: &[Tile]) -> usize {
    row.iter().map(|t| t.width()).sum()
}

fn row_boundaries(row: &[Tile]) -> Vec<usize> {
    let mut acc = 0;
    row.iter()
        .map(|t| {
            acc += t.width();
            acc
        })
        .collect()
}

impl Tiling {
    pub fn new(top: Vec<Tile>, bottom: Vec<Tile>) -> Result<Self> {
        if top.first() != Some(&Tile::Monomino) {
            return Err(Error::InvalidInput(
                "tiling must have a monomino in the top-left corner".into(),
            ));
        }
        if row_width(&top) != row_width(&bottom) {
            return Err(Error::InvalidInput(format!(
                "row widths differ: {} vs {}",
                row_width(&top),
                row_width(&bottom)
            )));
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[Tile] {
        &self.top
    }

    pub fn bottom(&self) -> &[Tile] {
        &self.bottom
    }

    pub fn width(&self) -> usize {
        row_width(&self.top)
    }

    /// ASCII drawing, two characters per unit column.
    pub fn render_ascii(&self) -> String {
        let width = self.width();
        let top_b = row_boundaries(&self.top);
        let bot_b = row_boundaries(&self.bottom);
        let is_cut = |row: &[usize], x: usize| x == 0 || row.contains(&x);
        let rule = |cut: &dyn Fn(usize) -> bool| {
            (0..=width)
                .map(|x| {
                    let joint = if cut(x) { "+" } else { "-" };
                    if x < width {
                        format!("{joint}-")
                    } else {
                        joint.to_string()
                    }
                })
                .collect::<String>()
        };
        let body = |row: &[usize]| {
            (0..=width)
                .map(|x| {
                    let wall = if is_cut(row, x) { "|" } else { " " };
                    if x < width {
                        format!("{wall} ")
                    } else {
                        wall.to_string()
                    }
                })
                .collect::<String>()
        };
        let top_rule = rule(&|x| is_cut(&top_b, x));
        let mid_rule = rule(&|x| is_cut(&top_b, x) || is_cut(&bot_b, x));
        let bot_rule = rule(&|x| is_cut(&bot_b, x));
        format!(
            "{top_rule}\n{}\n{mid_rule}\n{}\n{bot_rule}",
            body(&top_b),
            body(&bot_b)
        )
    }
}

impl fmt::Display for Tiling {
    /// Two lines of block codes, `1` for a monomino and `2` for a domino.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |row: &[Tile]| {
            row.iter()
                .map(|t| t.code().to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{}\n{}", line(&self.top), line(&self.bottom))
    }
}

impl FromStr for Tiling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<Tile>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| match tok {
                        "1" => Ok(Tile::Monomino),
                        "2" => Ok(Tile::Domino),
                        other => Err(Error::InvalidInput(format!("bad tile code {other:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        match <[Vec<Tile>; 2]>::try_from(rows) {
            Ok([top, bottom]) => Tiling::new(top, bottom),
            Err(rows) => Err(Error::InvalidInput(format!(
                "tiling needs two rows, got {}",
                rows.len()
            ))),
        }
    }
}

// A row of the given width; monomino first when `lead_mono`, then as many
// dominoes as fit, then a closing monomino if a unit is left over.
fn brick_row(lead_mono: bool, width: usize) -> Vec<Tile> {
    let mut row = Vec::new();
    let mut rest = width;
    if lead_mono {
        row.push(Tile::Monomino);
        rest -= 1;
    }
    row.extend(std::iter::repeat_n(Tile::Domino, rest / 2));
    if rest % 2 == 1 {
        row.push(Tile::Monomino);
    }
    row
}

/// The indecomposable segment for one block, as (top, bottom).
fn block_segment(block: Block) -> (Vec<Tile>, Vec<Tile>) {
    let width = block.len();
    match block {
        Block::C => (vec![Tile::Monomino], vec![Tile::Monomino]),
        Block::BC => (vec![Tile::Domino], vec![Tile::Domino]),
        Block::AB(_) => (brick_row(false, width), brick_row(true, width)),
        Block::AC(_) => (brick_row(true, width), brick_row(false, width)),
    }
}

fn segment_block(top: &[Tile], bottom: &[Tile]) -> Option<Block> {
    let width = row_width(top);
    match (top, bottom) {
        ([Tile::Monomino], [Tile::Monomino]) => return Some(Block::C),
        ([Tile::Domino], [Tile::Domino]) => return Some(Block::BC),
        _ => {}
    }
    if width < 2 {
        return None;
    }
    if top == brick_row(true, width) && bottom == brick_row(false, width) {
        Some(Block::AC(width - 1))
    } else if top == brick_row(false, width) && bottom == brick_row(true, width) {
        Some(Block::AB(width - 1))
    } else {
        None
    }
}

pub fn z_to_tiling(z: &Word) -> Result<Tiling> {
    let blocks = unique_factor_decomposition(z)?;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for block in blocks {
        let (t, b) = block_segment(block);
        top.extend(t);
        bottom.extend(b);
    }
    Tiling::new(top, bottom)
}

/// Cuts the tiling at every full-height seam and reads one block per
/// segment.
pub fn tiling_to_z(t: &Tiling) -> Result<Word> {
    let top_b = row_boundaries(&t.top);
    let bot_b = row_boundaries(&t.bottom);
    let seams: Vec<usize> = top_b
        .iter()
        .copied()
        .filter(|x| bot_b.contains(x))
        .collect();
    let (mut ti, mut bi) = (0, 0);
    let mut word = Word::empty();
    for &seam in &seams {
        let t_start = ti;
        while top_b[ti] < seam {
            ti += 1;
        }
        ti += 1;
        let b_start = bi;
        while bot_b[bi] < seam {
            bi += 1;
        }
        bi += 1;
        let block =
            segment_block(&t.top[t_start..ti], &t.bottom[b_start..bi]).ok_or_else(|| {
                Error::InvalidInput(format!("segment ending at column {seam} is not a block"))
            })?;
        word = word.concat(&block.to_word());
    }
    Ok(word)
}

fn rows(width: usize) -> Vec<Vec<Tile>> {
    fn go(rest: usize, acc: &mut Vec<Tile>, out: &mut Vec<Vec<Tile>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for tile in [Tile::Monomino, Tile::Domino] {
            if tile.width() <= rest {
                acc.push(tile);
                go(rest - tile.width(), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(width, &mut Vec::new(), &mut out);
    out
}

/// All tilings of width `k`, ordered by top row then bottom row, each row
/// lexicographic with monomino before domino.
pub fn tilings(k: usize) -> Result<Vec<Tiling>> {
    if k < 1 {
        return Err(Error::InvalidInput("tilings need width k >= 1".into()));
    }
    let bottoms = rows(k);
    let mut out = Vec::new();
    for tail in rows(k - 1) {
        let mut top = vec![Tile::Monomino];
        top.extend(tail);
        for bottom in &bottoms {
            out.push(Tiling {
                top: top.clone(),
                bottom: bottom.clone(),
            });
        }
    }
    Ok(out)
}

/// `(j, k, τ)` with `τ` a tiling of width `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleJKT {
    pub j: usize,
    pub k: usize,
    pub tiling: Tiling,
}

/// `N'_n → (j, k, τ)` via `φ`, the `z a^(n-j-k) c^j` split and the tiling
/// map.
pub fn nprime_to_triple(p: &Permutation) -> Result<TripleJKT> {
    let lpk = p.lpk();
    if lpk != 1 {
        return Err(Error::NotInN { lpk });
    }
    if p.inverse()
        .contains_consecutive(&Permutation::decreasing(3))
        .expect("pattern is nonempty")
    {
        return Err(Error::NotInNPrime);
    }
    let w = phi(p)?;
    let WSplit { j, k, z } = split_w_word(&w)?;
    Ok(TripleJKT {
        j,
        k,
        tiling: z_to_tiling(&z)?,
    })
}

pub fn triple_to_nprime(n: usize, triple: &TripleJKT) -> Result<Permutation> {
    let TripleJKT { j, k, tiling } = triple;
    let (j, k) = (*j, *k);
    if k < 1 || k + 1 > n || j + k + 1 > n {
        return Err(Error::InvalidInput(format!(
            "need 1 <= k <= n-1 and 0 <= j <= n-k-1; got n={n}, j={j}, k={k}"
        )));
    }
    if tiling.width() != k {
        return Err(Error::InvalidInput(format!(
            "tiling width {} differs from k = {k}",
            tiling.width()
        )));
    }
    let z = tiling_to_z(tiling)?;
    let w = WSplit { j, k, z }.reassemble(n);
    phi_inverse(&w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tiling {
        s.parse().unwrap()
    }

    const PERM12: &str = "1 2 5 10 12 8 6 4 3 7 9 11";
    const PERM20: &str = "1 2 8 9 10 14 16 17 12 11 4 3 5 6 7 13 15 18 19 20";

    #[test]
    fn zero_ipk_examples() {
        let l: Composition = "3,2,3,1".parse().unwrap();
        assert_eq!(zero_ipk_permutation(&l).unwrap(), p("456372891"));
        assert_eq!(p("456372891").ipk(), 0);
        let n: Composition = "(6)".parse().unwrap();
        assert_eq!(zero_ipk_permutation(&n).unwrap(), Permutation::identity(6));
        let ones = Composition::new(vec![1; 5]).unwrap();
        assert_eq!(
            zero_ipk_permutation(&ones).unwrap(),
            Permutation::decreasing(5)
        );
        assert!(zero_ipk_permutation(&Composition::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn zero_ipk_has_requested_runs() {
        for n in 1..=8 {
            for l in compositions(n, None).unwrap() {
                let q = zero_ipk_permutation(&l).unwrap();
                assert_eq!(q.descent_composition(), l);
                assert_eq!(q.ipk(), 0);
            }
        }
    }

    #[test]
    fn canonical_decomposition_examples() {
        let d = canonical_decomposition(&p(PERM12)).unwrap();
        assert_eq!(d.alpha, vec![1, 2, 5, 10, 12]);
        assert_eq!(d.beta, vec![8, 6, 4]);
        assert_eq!(d.gamma, vec![3, 7, 9, 11]);
        assert_eq!(d.to_string(), "1 2 5 10 12 | 8 6 4 | 3 7 9 11");

        let d = canonical_decomposition(&p("21")).unwrap();
        assert_eq!((d.alpha, d.beta, d.gamma), (vec![2], vec![], vec![1]));
        let d = canonical_decomposition(&p("132")).unwrap();
        assert_eq!((d.alpha, d.beta, d.gamma), (vec![1, 3], vec![], vec![2]));

        assert_eq!(
            canonical_decomposition(&Permutation::identity(4)),
            Err(Error::NotInN { lpk: 0 })
        );
        assert_eq!(
            canonical_decomposition(&p("2143")),
            Err(Error::NotInN { lpk: 2 })
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p(PERM12)).unwrap().to_string(), "aacbabcbcaca");
        assert_eq!(phi(&p("21")).unwrap().to_string(), "ca");
        assert_eq!(phi(&p(PERM20)).unwrap().to_string(), "aacbcccaaabbcacaaccc");
        assert_eq!(phi_inverse(&w("aacbabcbcaca")).unwrap(), p(PERM12));
        assert_eq!(phi_inverse(&w("ca")).unwrap(), p("21"));
        assert!(matches!(phi_inverse(&w("aac")), Err(Error::NotInImage(_))));
    }

    #[test]
    fn w_membership() {
        assert!(is_in_w(&w("aacbcccaaabbcacaaccc"), 3));
        assert!(!is_in_w(&w("acba"), 3));
        assert!(!is_in_w(&w("aac"), 3));
        // Contains cba, so its permutation is not in N'_12.
        assert!(!is_in_w(&w("aacbabcbcaca"), 3));
        assert!(!is_in_w(&w("cbba"), 4));
        assert!(is_in_w(&w("cbca"), 4));
        assert!(is_in_w(&w("acbbca"), 4));
        assert!(!is_in_w(&w("acbbba"), 4));
    }

    #[test]
    fn tiling_examples() {
        assert_eq!(z_to_tiling(&w("c")).unwrap(), t("1\n1"));
        assert_eq!(tiling_to_z(&t("1\n1")).unwrap(), w("c"));
        // bc alone is not in Z, but its segment is domino over domino.
        assert_eq!(tiling_to_z(&t("1 2\n1 2")).unwrap(), w("cbc"));
        let tau = z_to_tiling(&w("aacbcccaaabbcac")).unwrap();
        // aac | bc | c | c | aaab | bc | ac
        let expected = t("1 2 2 1 1 2 2 2 1 1\n2 1 2 1 1 1 2 1 2 2");
        assert_eq!(tau, expected);
        assert_eq!(tau.width(), 15);
        assert_eq!(tiling_to_z(&tau).unwrap(), w("aacbcccaaabbcac"));
    }

    #[test]
    fn tiling_validation() {
        assert!("2\n2".parse::<Tiling>().is_err());
        assert!("1 1\n1".parse::<Tiling>().is_err());
        assert!("1 3\n1 1 1 1".parse::<Tiling>().is_err());
        assert!("1".parse::<Tiling>().is_err());
    }

    #[test]
    fn tiling_counts() {
        assert_eq!(tilings(1).unwrap().len(), 1);
        assert_eq!(tilings(2).unwrap().len(), 2);
        assert_eq!(tilings(4).unwrap().len(), 15);
        assert_eq!(tilings(5).unwrap().len(), 40);
        assert!(tilings(0).is_err());
        let t3 = tilings(3).unwrap();
        assert!(t3.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn ascii_render() {
        let tau = t("1 2\n2 1");
        assert_eq!(
            tau.render_ascii(),
            "+-+---+\n| |   |\n+-+-+-+\n|   | |\n+---+-+"
        );
    }

    #[test]
    fn composite_examples() {
        let triple = nprime_to_triple(&p(PERM20)).unwrap();
        assert_eq!((triple.j, triple.k), (3, 15));
        assert_eq!(triple.tiling, z_to_tiling(&w("aacbcccaaabbcac")).unwrap());
        assert_eq!(triple_to_nprime(20, &triple).unwrap(), p(PERM20));

        let triple = nprime_to_triple(&p("21")).unwrap();
        assert_eq!((triple.j, triple.k), (0, 1));
        assert_eq!(triple.tiling, t("1\n1"));

        assert_eq!(nprime_to_triple(&p(PERM12)), Err(Error::NotInNPrime));
        assert_eq!(nprime_to_triple(&p("123")), Err(Error::NotInN { lpk: 0 }));
        assert!(triple_to_nprime(
            2,
            &TripleJKT {
                j: 1,
                k: 1,
                tiling: t("1\n1")
            }
        )
        .is_err());
    }
}
