//! Rectangle sequences, R-LR words and tableaux, the two-rectangle
//! classification, the rectangle-switching bijections `tau_p`, and the
//! twisted rotation `chi_R`.

use std::collections::HashMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::crystal::{apply_permutation, longest_young_element};
use crate::rsk::{inverse_rs, p_tableau, rs_pair};
use crate::shape::{Partition, Weight};
use crate::tableau::{key_tableau, standard_tableaux, Tableau};
use crate::word::Word;
use crate::{Error, Result};

/// A rectangular partition with `rows` rows and `cols` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub cols: u32,
    pub rows: u32,
}

impl Rect {
    pub fn new(cols: u32, rows: u32) -> Result<Self> {
        if cols == 0 || rows == 0 {
            return Err(Error::InvalidInput("rectangle sides must be positive".into()));
        }
        Ok(Rect { cols, rows })
    }

    pub fn cells(&self) -> u64 {
        self.cols as u64 * self.rows as u64
    }
}

impl Serialize for Rect {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.cols, self.rows].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rect {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [cols, rows] = <[u32; 2]>::deserialize(d)?;
        Rect::new(cols, rows).map_err(D::Error::custom)
    }
}

/// A sequence `R = (R_1, ..., R_t)` of rectangles, with derived alphabets
/// `A_i` partitioning `[1, n]` into consecutive intervals of sizes `eta_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectSequence {
    rects: Vec<Rect>,
}

impl RectSequence {
    pub fn new(rects: impl Into<Vec<Rect>>) -> Result<Self> {
        let rects = rects.into();
        let n: u64 = rects.iter().map(|r| r.rows as u64).sum();
        if n > 255 {
            return Err(Error::BoundExceeded(format!("alphabet size {n} > 255")));
        }
        Ok(RectSequence { rects })
    }

    pub fn empty() -> Self {
        RectSequence { rects: Vec::new() }
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// Number of rectangles `t`.
    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    /// Alphabet size `n = sum eta_i`.
    pub fn n(&self) -> usize {
        self.rects.iter().map(|r| r.rows as usize).sum()
    }

    /// Total number of cells `N = sum mu_i eta_i`.
    pub fn total_cells(&self) -> u64 {
        self.rects.iter().map(|r| r.cells()).sum()
    }

    pub fn block_sizes(&self) -> Vec<u32> {
        self.rects.iter().map(|r| r.rows).collect()
    }

    /// The interval `A_i` (1-based block index, inclusive letter bounds).
    pub fn alphabet_interval(&self, i: usize) -> (u8, u8) {
        let lo: usize = self.rects[..i - 1].iter().map(|r| r.rows as usize).sum();
        let hi = lo + self.rects[i - 1].rows as usize;
        (lo as u8 + 1, hi as u8)
    }

    /// Block index (1-based) containing the letter.
    pub fn block_of(&self, letter: u8) -> usize {
        let mut hi = 0usize;
        for (i, r) in self.rects.iter().enumerate() {
            hi += r.rows as usize;
            if (letter as usize) <= hi {
                return i + 1;
            }
        }
        panic!("letter {letter} outside alphabet [1,{}]", self.n());
    }

    /// The weight `gamma(R) = (mu_1^{eta_1}, ..., mu_t^{eta_t})`.
    pub fn gamma(&self) -> Weight {
        let mut entries = Vec::with_capacity(self.n());
        for r in &self.rects {
            entries.extend(std::iter::repeat_n(r.cols as i64, r.rows as usize));
        }
        Weight::new(entries)
    }

    pub fn eta(&self) -> Vec<u32> {
        self.block_sizes()
    }

    /// `R` is dominant when the column counts weakly decrease.
    pub fn is_dominant(&self) -> bool {
        self.rects.windows(2).all(|w| w[0].cols >= w[1].cols)
    }

    /// First adjacent inversion `(p, p+1)` under the order used by the charge
    /// recursion: `mu_p < mu_{p+1}`, or equal columns and `eta_p < eta_{p+1}`.
    pub fn adjacent_inversion(&self) -> Option<usize> {
        self.rects.windows(2).position(|w| {
            w[0].cols < w[1].cols || (w[0].cols == w[1].cols && w[0].rows < w[1].rows)
        }).map(|p| p + 1)
    }

    /// Largest column count `a = max_i mu_i`.
    pub fn max_cols(&self) -> u32 {
        self.rects.iter().map(|r| r.cols).max().unwrap_or(0)
    }

    /// The tableau `Y_i`: shape and content `R_i` in the alphabet `A_i`.
    pub fn yamanouchi(&self, i: usize) -> Tableau {
        let (lo, _) = self.alphabet_interval(i);
        let r = self.rects[i - 1];
        let rows: Vec<Vec<u8>> = (0..r.rows as usize)
            .map(|j| vec![lo + j as u8; r.cols as usize])
            .collect();
        Tableau::from_rows(rows).expect("rectangular key tableau")
    }

    /// Sequence with rectangles `p` and `p+1` exchanged (1-based).
    pub fn swapped(&self, p: usize) -> RectSequence {
        let mut rects = self.rects.clone();
        rects.swap(p - 1, p);
        RectSequence { rects }
    }

    /// Drops the first rectangle.
    pub fn hat(&self) -> RectSequence {
        RectSequence {
            rects: self.rects[1..].to_vec(),
        }
    }

    /// The padded partition beta from the skew realization of `R`: block `i`
    /// carries `mu_{i+1} + ... + mu_t`, repeated `eta_i` times. A word of
    /// content `gamma(R)` is R-LR iff it is beta-lattice.
    pub fn beta(&self) -> Partition {
        let t = self.len();
        let mut parts = Vec::with_capacity(self.n());
        for i in 0..t {
            let tail: u32 = self.rects[i + 1..].iter().map(|r| r.cols).sum();
            parts.extend(std::iter::repeat_n(tail, self.rects[i].rows as usize));
        }
        Partition::new(parts).expect("block sums weakly decrease")
    }

    /// All partition shapes that can carry an LR tableau for `R`.
    pub fn shapes(&self) -> Vec<Partition> {
        Partition::all(self.total_cells(), self.n())
    }
}

impl std::fmt::Display for RectSequence {
    /// Text form `MUxETA` pairs, e.g. `3x2,2x2,1x3`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self
            .rects
            .iter()
            .map(|r| format!("{}x{}", r.cols, r.rows))
            .collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for RectSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectSequence::empty());
        }
        let rects = s
            .split(',')
            .map(|tok| {
                let (c, r) = tok
                    .trim()
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::Parse(format!("expected MUxETA, got {tok:?}")))?;
                let cols = c
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad column count {c:?}: {e}")))?;
                let rows = r
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad row count {r:?}: {e}")))?;
                Rect::new(cols, rows)
            })
            .collect::<Result<Vec<Rect>>>()?;
        RectSequence::new(rects)
    }
}

/// Subword of the letters lying in `[lo, hi]`, order preserved.
pub fn restrict(w: &Word, lo: u8, hi: u8) -> Word {
    let letters: Vec<u8> = w
        .letters()
        .iter()
        .copied()
        .filter(|&x| (lo..=hi).contains(&x))
        .collect();
    Word::new(letters, w.alphabet()).expect("subword of a valid word")
}

/// True iff the restriction of `w` to each alphabet block is Knuth-equivalent
/// to the corresponding rectangle tableau `Y_i`.
pub fn is_r_lr(w: &Word, r: &RectSequence) -> bool {
    // The content gamma(R) is forced, and letters outside [1, n] are not
    // allowed at all; checking this first also keeps the P computations off
    // the hot path for obvious non-members.
    if w.content() != r.gamma().add(&Weight::zeros(w.alphabet() as usize)) {
        return false;
    }
    for i in 1..=r.len() {
        let (lo, hi) = r.alphabet_interval(i);
        if p_tableau(&restrict(w, lo, hi)) != r.yamanouchi(i) {
            return false;
        }
    }
    true
}

/// All column-strict tableaux of shape `lambda` whose reading word is R-LR.
///
/// Enumeration fills cells along the reversed reading order (top row right to
/// left, then the next row), so the beta-lattice condition can be checked one
/// suffix at a time; results are sorted by reading word.
pub fn enumerate_lrt(lambda: &Partition, r: &RectSequence) -> Vec<Tableau> {
    let n = r.n();
    if lambda.size() != r.total_cells() || lambda.len() > n {
        return Vec::new();
    }
    if lambda.is_empty() {
        return vec![Tableau::empty()];
    }
    let gamma: Vec<i64> = r.gamma().entries().to_vec();
    let beta = r.beta();
    let beta: Vec<i64> = (1..=n).map(|i| beta.part(i) as i64).collect();

    let nrows = lambda.len();
    let mut rows: Vec<Vec<u8>> = (1..=nrows)
        .map(|i| vec![0u8; lambda.part(i) as usize])
        .collect();
    let mut counts = vec![0i64; n + 1];
    let mut cells = Vec::with_capacity(lambda.size() as usize);
    for rr in 0..nrows {
        for c in (0..lambda.part(rr + 1) as usize).rev() {
            cells.push((rr, c));
        }
    }

    struct State<'a> {
        cells: &'a [(usize, usize)],
        gamma: &'a [i64],
        beta: &'a [i64],
        n: usize,
        out: Vec<Tableau>,
    }

    fn rec(st: &mut State, idx: usize, rows: &mut Vec<Vec<u8>>, counts: &mut Vec<i64>) {
        if idx == st.cells.len() {
            st.out
                .push(Tableau::from_rows(rows.clone()).expect("column-strict by construction"));
            return;
        }
        let (r, c) = st.cells[idx];
        let above = if r > 0 { rows[r - 1][c] } else { 0 };
        let right = if c + 1 < rows[r].len() {
            rows[r][c + 1]
        } else {
            st.n as u8
        };
        for x in (above + 1).max(1)..=right {
            let xi = x as usize;
            if counts[xi] >= st.gamma[xi - 1] {
                continue;
            }
            // Adding x at the front of the suffix can only violate the
            // beta-lattice comparison at the pair (x-1, x).
            if xi >= 2 && st.beta[xi - 2] + counts[xi - 1] < st.beta[xi - 1] + counts[xi] + 1 {
                continue;
            }
            counts[xi] += 1;
            rows[r][c] = x;
            rec(st, idx + 1, rows, counts);
            rows[r][c] = 0;
            counts[xi] -= 1;
        }
    }

    let mut st = State {
        cells: &cells,
        gamma: &gamma,
        beta: &beta,
        n,
        out: Vec::new(),
    };
    rec(&mut st, 0, &mut rows, &mut counts);
    let mut out = st.out;
    out.sort_by_key(|a| a.row_reading_word(n as u8));
    out
}

/// The three regions cut out by a pair of rectangles: their union, the
/// northeast region (rows `<= l'`, columns `> a`), and the southwest region
/// (rows `> l`, columns `<= a'`).
#[derive(Clone, Copy, Debug)]
pub struct TwoRectRegions {
    /// `max(mu_1, mu_2)`
    pub a: u32,
    /// `min(mu_1, mu_2)`
    pub a_min: u32,
    /// `max(eta_1, eta_2)`
    pub l: u32,
    /// `min(eta_1, eta_2)`
    pub l_min: u32,
}

impl TwoRectRegions {
    pub fn new(r1: Rect, r2: Rect) -> Self {
        TwoRectRegions {
            a: r1.cols.max(r2.cols),
            a_min: r1.cols.min(r2.cols),
            l: r1.rows.max(r2.rows),
            l_min: r1.rows.min(r2.rows),
        }
    }

    pub fn in_ne(&self, row: usize, col: usize) -> bool {
        row as u32 <= self.l_min && col as u32 > self.a
    }

    pub fn in_sw(&self, row: usize, col: usize) -> bool {
        row as u32 > self.l && col as u32 <= self.a_min
    }

    /// `lambda_ne = lambda ∩ NE` as a partition.
    pub fn lambda_ne(&self, lambda: &Partition) -> Partition {
        let parts: Vec<u32> = (1..=self.l_min as usize)
            .map(|r| lambda.part(r).saturating_sub(self.a))
            .collect();
        Partition::new(parts).expect("weakly decreasing")
    }

    /// `lambda_sw = lambda ∩ SW` as a partition.
    pub fn lambda_sw(&self, lambda: &Partition) -> Partition {
        let parts: Vec<u32> = (self.l as usize + 1..=lambda.len())
            .map(|r| lambda.part(r).min(self.a_min))
            .collect();
        Partition::new(parts).expect("weakly decreasing")
    }

    /// Nonemptiness conditions for `LRT(lambda; (R_1, R_2))`: the shape lies
    /// between the union and the union plus the two outer regions, and the
    /// NE/SW intersections are complementary inside `R_1 ∩ R_2`.
    pub fn admits(&self, lambda: &Partition, r1: Rect, r2: Rect) -> bool {
        if lambda.size() != r1.cells() + r2.cells() {
            return false;
        }
        let union_rows = self.l as usize;
        for r in 1..=union_rows {
            let cover = (if r as u32 <= r1.rows { r1.cols } else { 0 })
                .max(if r as u32 <= r2.rows { r2.cols } else { 0 });
            if lambda.part(r) < cover {
                return false;
            }
            // Rows reached by only the taller rectangle cannot poke east of it.
            if r as u32 > self.l_min && lambda.part(r) > cover {
                return false;
            }
        }
        for r in union_rows + 1..=lambda.len() {
            if lambda.part(r) > self.a_min {
                return false;
            }
        }
        let ne = self.lambda_ne(lambda);
        let sw = self.lambda_sw(lambda);
        if ne.part(1) > self.a_min || ne.len() as u32 > self.l_min {
            return false;
        }
        if sw.part(1) > self.a_min || sw.len() as u32 > self.l_min {
            return false;
        }
        (1..=self.l_min as usize).all(|i| {
            sw.part(i) == self.a_min - ne.part(self.l_min as usize + 1 - i)
        })
    }
}

/// The unique element of `LRT(lambda; (R_1, R_2))`, or `None` when the set is
/// empty. Built explicitly: `Y_1`, then the key tableau of the part of
/// `lambda - R_1` east of column `mu_1`, then the key tableau of the
/// complementary content in the first `mu_1` columns, both in the alphabet of
/// the second rectangle.
pub fn two_rect_tableau(lambda: &Partition, r1: Rect, r2: Rect) -> Option<Tableau> {
    let regions = TwoRectRegions::new(r1, r2);
    if !regions.admits(lambda, r1, r2) {
        return None;
    }
    let (mu1, eta1) = (r1.cols, r1.rows as usize);
    let (mu2, eta2) = (r2.cols as i64, r2.rows as usize);
    let alpha: Vec<i64> = (1..=lambda.len())
        .map(|r| lambda.part(r).saturating_sub(mu1) as i64)
        .take_while(|&x| x > 0)
        .collect();
    if alpha.len() > eta2 || alpha.first().copied().unwrap_or(0) > mu2 {
        debug_assert!(false, "admissibility should preclude this");
        return None;
    }
    let mut alpha_padded = alpha.clone();
    alpha_padded.resize(eta2, 0);
    let beta: Vec<i64> = alpha_padded.iter().map(|&x| mu2 - x).collect();
    let key_a = key_tableau(&Weight::new(alpha_padded)).expect("nonnegative");
    let key_b = key_tableau(&Weight::new(beta)).expect("nonnegative");
    let mut rows = Vec::with_capacity(lambda.len());
    for r in 1..=lambda.len() {
        let mut row = Vec::with_capacity(lambda.part(r) as usize);
        for c in 1..=lambda.part(r) as usize {
            let entry = if r <= eta1 && c as u32 <= mu1 {
                r as u8
            } else if c as u32 > mu1 {
                key_a.get(r, c - mu1 as usize)? + eta1 as u8
            } else {
                key_b.get(r - eta1, c)? + eta1 as u8
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Tableau::from_rows(rows).ok()
}

/// The rectangle-switching bijection `tau_p` on R-LR words: restrict to the
/// letters of `A_p ∪ A_{p+1}`, replace the insertion tableau by the unique
/// two-rectangle LR tableau for the swapped pair, rebuild the subword from
/// the unchanged recording tableau, and splice it back into place.
pub fn tau(p: usize, w: &Word, r: &RectSequence) -> Result<Word> {
    if p == 0 || p >= r.len() {
        return Err(Error::InvalidInput(format!(
            "p = {p} outside [1, {}]",
            r.len().saturating_sub(1)
        )));
    }
    if !is_r_lr(w, r) {
        return Err(Error::NotRLr);
    }
    Ok(tau_unchecked(p, w, r))
}

pub(crate) fn tau_unchecked(p: usize, w: &Word, r: &RectSequence) -> Word {
    let (lo, _) = r.alphabet_interval(p);
    let (_, hi) = r.alphabet_interval(p + 1);
    let positions: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, &x)| (lo..=hi).contains(&x))
        .map(|(i, _)| i)
        .collect();
    let n_b = hi - lo + 1;
    let sub: Vec<u8> = positions.iter().map(|&i| w.letters()[i] - (lo - 1)).collect();
    let sub = Word::new(sub, n_b).expect("shifted letters in range");
    let pair = rs_pair(&sub);
    let lam = pair.p.outer_shape();
    let swapped = two_rect_tableau(&lam, r.rects[p], r.rects[p - 1])
        .expect("swapped two-rectangle LR tableau exists whenever the original does");
    let new_sub = inverse_rs(&swapped, &pair.q, n_b).expect("shapes match");
    let mut letters = w.letters().to_vec();
    for (&pos, &x) in positions.iter().zip(new_sub.letters()) {
        letters[pos] = x + (lo - 1);
    }
    Word::new(letters, w.alphabet()).expect("letters in range")
}

/// `tau_p` on a (possibly skew) tableau: the unique tableau of the same shape
/// whose reading word is `tau_p` of the original reading word.
pub fn tau_tableau(p: usize, t: &Tableau, r: &RectSequence) -> Result<Tableau> {
    let n = r.n() as u8;
    let w = t.row_reading_word(n);
    let moved = tau(p, &w, r)?;
    Tableau::from_shape_and_word(&t.shape(), &moved)
}

/// The twisted right rotation `chi_R(ux) = (w_0^R x)(w_0^R u)` where `x` is
/// the last letter and `w_0^R` acts by the automorphism of conjugation.
pub fn chi(w: &Word, r: &RectSequence) -> Result<Word> {
    let (u, x) = w
        .split_last()
        .ok_or_else(|| Error::InvalidInput("chi of the empty word".into()))?;
    let w0 = longest_young_element(&r.block_sizes());
    let head = apply_permutation(&Word::new(vec![x], w.alphabet())?, &w0);
    Ok(head.concat(&apply_permutation(&u, &w0)))
}

/// Inverse rotation: `chi_R^{-1}(yv) = (w_0^R v)(w_0^R y)` with `y` the first letter.
pub fn chi_inverse(w: &Word, r: &RectSequence) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::InvalidInput("chi inverse of the empty word".into()));
    }
    let y = Word::new(vec![w.letters()[0]], w.alphabet())?;
    let v = Word::new(w.letters()[1..].to_vec(), w.alphabet())?;
    let w0 = longest_young_element(&r.block_sizes());
    Ok(apply_permutation(&v, &w0).concat(&apply_permutation(&y, &w0)))
}

/// Enumerates the full set of R-LR words `W(R)` through the RS bijection with
/// pairs (LR tableau, standard tableau). Deterministic order.
pub fn enumerate_r_lr_words(r: &RectSequence) -> Vec<Word> {
    let n = r.n() as u8;
    let mut out = Vec::new();
    for lambda in r.shapes() {
        let tabs = enumerate_lrt(&lambda, r);
        if tabs.is_empty() {
            continue;
        }
        let recordings = standard_tableaux(&lambda);
        for t in &tabs {
            for q in &recordings {
                out.push(inverse_rs(t, q, n).expect("valid RS pair"));
            }
        }
    }
    out
}

/// All LR tableaux of every shape, keyed for poset construction.
pub fn enumerate_all_lrt(r: &RectSequence) -> Vec<Tableau> {
    let mut out = Vec::new();
    for lambda in r.shapes() {
        out.extend(enumerate_lrt(&lambda, r));
    }
    out
}

pub(crate) fn tableau_index(tabs: &[Tableau]) -> HashMap<Tableau, usize> {
    tabs.iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect()
}
