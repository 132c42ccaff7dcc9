//! Column-strict tableaux of (possibly skew) shape, key tableaux, and Kostka
//! numbers by direct enumeration.

use serde::{Deserialize, Serialize};

use crate::shape::{Partition, SkewShape, Weight};
use crate::word::Word;
use crate::{Error, Result};

/// A column-strict filling: rows weakly increase left to right, columns
/// strictly increase top to bottom. Stored as row lists of letters plus an
/// inner-shape offset per row; immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    /// Validates column-strictness and the skew-shape invariants.
    pub fn new(inner: Vec<usize>, rows: Vec<Vec<u8>>) -> Result<Self> {
        if inner.len() != rows.len() {
            return Err(Error::InvalidInput(
                "inner offsets and rows differ in length".into(),
            ));
        }
        let t = Tableau { inner, rows };
        t.validate()?;
        Ok(t)
    }

    /// Tableau of normal (partition) shape from rows alone.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let inner = vec![0; rows.len()];
        Tableau::new(inner, rows)
    }

    pub fn empty() -> Self {
        Tableau {
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        // Shape sanity: outer and inner must both be partitions.
        let outer: Vec<u32> = self
            .inner
            .iter()
            .zip(&self.rows)
            .map(|(&off, row)| (off + row.len()) as u32)
            .collect();
        let inner: Vec<u32> = self.inner.iter().map(|&off| off as u32).collect();
        let outer = Partition::new(outer)
            .map_err(|_| Error::NotColumnStrict("outer shape is not a partition".into()))?;
        let inner = Partition::new(inner)
            .map_err(|_| Error::NotColumnStrict("inner shape is not a partition".into()))?;
        SkewShape::new(outer, inner)?;
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidInput("letters are 1-based".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotColumnStrict(format!(
                    "row {} not weakly increasing",
                    r + 1
                )));
            }
        }
        for r in 1..self.rows.len() {
            for c in self.inner[r] + 1..=self.inner[r] + self.rows[r].len() {
                if let Some(above) = self.get(r, c) {
                    if above >= self.get(r + 1, c).unwrap() {
                        return Err(Error::NotColumnStrict(format!(
                            "column {c} not strict at rows {r},{}",
                            r + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Entry at 1-based (row, col), if the cell is in the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<u8> {
        if row == 0 || row > self.rows.len() || col == 0 {
            return None;
        }
        let off = self.inner[row - 1];
        if col <= off || col > off + self.rows[row - 1].len() {
            return None;
        }
        Some(self.rows[row - 1][col - 1 - off])
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn inner_offsets(&self) -> &[usize] {
        &self.inner
    }

    pub fn shape(&self) -> SkewShape {
        let outer: Vec<u32> = self
            .inner
            .iter()
            .zip(&self.rows)
            .map(|(&off, row)| (off + row.len()) as u32)
            .collect();
        let inner: Vec<u32> = self.inner.iter().map(|&off| off as u32).collect();
        SkewShape::new(
            Partition::new(outer).expect("validated"),
            Partition::new(inner).expect("validated"),
        )
        .expect("validated")
    }

    /// Outer shape; for normal tableaux this is the shape proper.
    pub fn outer_shape(&self) -> Partition {
        self.shape().outer().clone()
    }

    pub fn is_normal(&self) -> bool {
        self.inner.iter().all(|&off| off == 0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_letter(&self) -> u8 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicity vector of the entries, in the alphabet `[1, n]`.
    pub fn content(&self, n: u8) -> Weight {
        let mut counts = vec![0i64; n as usize];
        for row in &self.rows {
            for &x in row {
                counts[x as usize - 1] += 1;
            }
        }
        Weight::new(counts)
    }

    /// Row-reading word: rows bottom to top, each left to right.
    pub fn row_reading_word(&self, n: u8) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            letters.extend_from_slice(row);
        }
        Word::new(letters, n).expect("entries within alphabet")
    }

    /// Column-reading word: columns left to right, each bottom to top.
    pub fn column_reading_word(&self, n: u8) -> Word {
        let outer = self.outer_shape();
        let width = outer.part(1) as usize;
        let mut letters = Vec::with_capacity(self.size());
        for c in 1..=width {
            for r in (1..=self.rows.len()).rev() {
                if let Some(x) = self.get(r, c) {
                    letters.push(x);
                }
            }
        }
        Word::new(letters, n).expect("entries within alphabet")
    }

    /// Restriction to a letter interval `[lo, hi]`: keeps only those entries.
    /// Entries below `lo` become inner cells; entries above `hi` are removed.
    pub fn restrict(&self, lo: u8, hi: u8) -> Tableau {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let skip = row.iter().take_while(|&&x| x < lo).count();
            let keep: Vec<u8> = row
                .iter()
                .copied()
                .filter(|&x| (lo..=hi).contains(&x))
                .collect();
            if keep.is_empty() && self.inner[r] + skip == 0 {
                continue;
            }
            inner.push(self.inner[r] + skip);
            rows.push(keep);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
            inner.pop();
        }
        Tableau { inner, rows }
    }

    /// Refits `word` into the given skew shape, taking row lengths from the
    /// bottom of the word. Fails if the filling is not column-strict.
    pub fn from_shape_and_word(shape: &SkewShape, w: &Word) -> Result<Tableau> {
        let nrows = shape.outer().len();
        let mut lens = Vec::with_capacity(nrows);
        let mut inner = Vec::with_capacity(nrows);
        for r in 1..=nrows {
            inner.push(shape.inner().part(r) as usize);
            lens.push((shape.outer().part(r) - shape.inner().part(r)) as usize);
        }
        if lens.iter().sum::<usize>() != w.len() {
            return Err(Error::InvalidInput(format!(
                "word length {} does not match shape size {}",
                w.len(),
                shape.size()
            )));
        }
        // word = ... u2 u1, so row 1 is the final segment.
        let mut rows = vec![Vec::new(); nrows];
        let mut pos = w.len();
        for r in 1..=nrows {
            rows[r - 1] = w.letters()[pos - lens[r - 1]..pos].to_vec();
            pos -= lens[r - 1];
        }
        Tableau::new(inner, rows)
    }

    /// Shifts all entries by `delta` (used to move between subalphabets).
    pub fn shift_letters(&self, delta: i16) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| (x as i16 + delta) as u8)
                    .collect::<Vec<u8>>()
            })
            .collect();
        Tableau {
            inner: self.inner.clone(),
            rows,
        }
    }

    /// Text form: one row per line, space-separated entries, `.` for inner cells.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = vec![".".to_string(); self.inner[r]];
            cells.extend(row.iter().map(|x| x.to_string()));
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form produced by [`Tableau::to_text`].
    pub fn parse_text(s: &str) -> Result<Tableau> {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut off = 0usize;
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse("inner cell after an entry".into()));
                    }
                    off += 1;
                } else {
                    let x: u8 = tok
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
                    row.push(x);
                }
            }
            inner.push(off);
            rows.push(row);
        }
        Tableau::new(inner, rows)
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The unique column-strict tableau of shape `alpha^+` and content `alpha`:
/// column `j` holds exactly the letters `i` with `alpha_i >= j`.
pub fn key_tableau(alpha: &Weight) -> Result<Tableau> {
    if alpha.entries().iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!(
            "key tableau needs nonnegative content, got {alpha}"
        )));
    }
    let max = alpha.entries().iter().copied().max().unwrap_or(0) as usize;
    let mut cols: Vec<Vec<u8>> = Vec::with_capacity(max);
    for j in 1..=max {
        let col: Vec<u8> = alpha
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a >= j as i64)
            .map(|(i, _)| (i + 1) as u8)
            .collect();
        cols.push(col);
    }
    let nrows = cols.first().map_or(0, |c| c.len());
    let mut rows = Vec::with_capacity(nrows);
    for r in 0..nrows {
        let row: Vec<u8> = cols
            .iter()
            .take_while(|col| col.len() > r)
            .map(|col| col[r])
            .collect();
        rows.push(row);
    }
    Tableau::from_rows(rows)
}

/// Enumerates all column-strict tableaux of shape `lambda` and content
/// `alpha`, filling cells in column-reading order (columns left to right,
/// bottom to top) with prefix-content pruning.
pub fn enumerate_ssyt(lambda: &Partition, alpha: &Weight) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(lambda, alpha, |t| out.push(t.clone()));
    out
}

/// Number of column-strict tableaux of shape `lambda` and content `alpha`.
/// Zero when the sizes disagree or `alpha` has a negative entry.
pub fn kostka_number(lambda: &Partition, alpha: &Weight) -> u64 {
    let mut count = 0u64;
    for_each_ssyt(lambda, alpha, |_| count += 1);
    count
}

fn for_each_ssyt(lambda: &Partition, alpha: &Weight, mut visit: impl FnMut(&Tableau)) {
    if alpha.entries().iter().any(|&x| x < 0) {
        return;
    }
    if lambda.size() as i64 != alpha.sum() {
        return;
    }
    let n = alpha.len();
    if lambda.len() > n {
        return;
    }
    if lambda.is_empty() {
        visit(&Tableau::empty());
        return;
    }
    // Column heights of lambda.
    let width = lambda.part(1) as usize;
    let heights: Vec<usize> = (1..=width)
        .map(|c| (1..=lambda.len()).filter(|&r| lambda.part(r) as usize >= c).count())
        .collect();
    let mut remaining: Vec<i64> = alpha.entries().to_vec();
    let mut rows: Vec<Vec<u8>> = (1..=lambda.len())
        .map(|r| vec![0u8; lambda.part(r) as usize])
        .collect();

    // Cells in column-reading order: (col, row) with rows bottom to top.
    let mut cells = Vec::with_capacity(lambda.size() as usize);
    for (c, &h) in heights.iter().enumerate() {
        for r in (0..h).rev() {
            cells.push((r, c));
        }
    }

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        remaining: &mut Vec<i64>,
        n: usize,
        visit: &mut impl FnMut(&Tableau),
    ) {
        if idx == cells.len() {
            let t = Tableau::from_rows(rows.clone()).expect("construction is column-strict");
            visit(&t);
            return;
        }
        let (r, c) = cells[idx];
        // Below in the same column was filled earlier; left neighbor belongs
        // to the previous (taller or equal) column.
        let below = if r + 1 < rows.len() && rows[r + 1].len() > c && rows[r + 1][c] != 0 {
            rows[r + 1][c]
        } else {
            n as u8 + 1
        };
        let left = if c > 0 { rows[r][c - 1] } else { 0 };
        let lo = left.max(r as u8 + 1).max(1);
        for x in lo..below {
            if remaining[x as usize - 1] == 0 {
                continue;
            }
            rows[r][c] = x;
            remaining[x as usize - 1] -= 1;
            rec(idx + 1, cells, rows, remaining, n, visit);
            remaining[x as usize - 1] += 1;
            rows[r][c] = 0;
        }
    }
    rec(0, &cells, &mut rows, &mut remaining, n, &mut visit);
}

/// All standard tableaux of shape `lambda` (entries `1..=N`, each once).
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let size = lambda.size() as usize;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = (1..=lambda.len())
        .map(|r| vec![0u8; lambda.part(r) as usize])
        .collect();
    // Place N, N-1, ... at corners of the shrinking shape.
    fn rec(k: usize, cur: &mut Partition, rows: &mut Vec<Vec<u8>>, out: &mut Vec<Tableau>) {
        if k == 0 {
            let trimmed: Vec<Vec<u8>> = rows
                .iter()
                .filter(|r| !r.is_empty())
                .cloned()
                .collect();
            out.push(Tableau::from_rows(trimmed).expect("standard filling"));
            return;
        }
        for (r, c) in cur.corners() {
            rows[r - 1][c - 1] = k as u8;
            let smaller = cur.remove_corner(r).expect("corner");
            let saved = std::mem::replace(cur, smaller);
            rec(k - 1, cur, rows, out);
            *cur = saved;
            rows[r - 1][c - 1] = 0;
        }
    }
    if size == 0 {
        return vec![Tableau::empty()];
    }
    let mut cur = lambda.clone();
    rec(size, &mut cur, &mut rows, &mut out);
    out.sort_by_key(|t| t.rows().to_vec());
    out
}
