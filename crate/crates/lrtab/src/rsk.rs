//! Schensted insertion, recording tableaux, Knuth moves, evacuation,
//! promotion, column RSK, and the two-row jeux-de-taquin.

use std::collections::{HashSet, VecDeque};

use crate::shape::Partition;
use crate::tableau::Tableau;
use crate::word::Word;
use crate::{Error, Result};

/// Insertion tableau and recording tableau of the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Schensted row insertion of `x` into a normal column-strict tableau.
/// Returns the new tableau and the 1-based cell where the shape grew.
pub fn row_insert(t: &Tableau, x: u8) -> Result<(Tableau, (usize, usize))> {
    if !t.is_normal() {
        return Err(Error::InvalidInput("row insertion needs a normal shape".into()));
    }
    let mut rows: Vec<Vec<u8>> = t.rows().to_vec();
    let cell = row_insert_raw(&mut rows, x);
    Ok((Tableau::from_rows(rows)?, cell))
}

fn row_insert_raw(rows: &mut Vec<Vec<u8>>, x: u8) -> (usize, usize) {
    let mut x = x;
    for (r, row) in rows.iter_mut().enumerate() {
        // leftmost entry strictly greater than x gets bumped
        match row.iter().position(|&y| y > x) {
            Some(c) => std::mem::swap(&mut row[c], &mut x),
            None => {
                row.push(x);
                return (r + 1, row.len());
            }
        }
    }
    rows.push(vec![x]);
    (rows.len(), 1)
}

/// Inverse of [`row_insert`], starting from a corner cell of the shape.
/// Returns the smaller tableau and the ejected letter.
pub fn reverse_row_insert(t: &Tableau, cell: (usize, usize)) -> Result<(Tableau, u8)> {
    if !t.is_normal() {
        return Err(Error::InvalidInput("reverse insertion needs a normal shape".into()));
    }
    let shape = t.outer_shape();
    if !shape.corners().contains(&cell) {
        return Err(Error::NotACorner(cell));
    }
    let (r0, _) = cell;
    let mut rows: Vec<Vec<u8>> = t.rows().to_vec();
    let mut y = rows[r0 - 1].pop().expect("corner row nonempty");
    if rows[r0 - 1].is_empty() {
        rows.pop();
    }
    for r in (0..r0 - 1).rev() {
        // rightmost entry strictly less than y is displaced upward
        let c = rows[r]
            .iter()
            .rposition(|&v| v < y)
            .expect("reverse bump always finds a smaller entry");
        std::mem::swap(&mut rows[r][c], &mut y);
    }
    Ok((Tableau::from_rows(rows)?, y))
}

/// The Schensted P tableau of a word.
pub fn p_tableau(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for &x in w.letters() {
        row_insert_raw(&mut rows, x);
    }
    Tableau::from_rows(rows).expect("insertion keeps column-strictness")
}

/// The Robinson-Schensted pair `(P(w), Q(w))` with `Q` standard.
pub fn rs_pair(w: &Word) -> TableauPair {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut q_rows: Vec<Vec<u8>> = Vec::new();
    for (k, &x) in w.letters().iter().enumerate() {
        let (r, _) = row_insert_raw(&mut rows, x);
        if q_rows.len() < r {
            q_rows.push(Vec::new());
        }
        q_rows[r - 1].push((k + 1) as u8);
    }
    TableauPair {
        p: Tableau::from_rows(rows).expect("column-strict"),
        q: Tableau::from_rows(q_rows).expect("standard"),
    }
}

/// Recovers the word from an RS pair: `Q` standard records insertion order.
pub fn inverse_rs(p: &Tableau, q: &Tableau, n: u8) -> Result<Word> {
    if p.outer_shape() != q.outer_shape() {
        return Err(Error::InvalidInput("P and Q shapes differ".into()));
    }
    let size = q.size();
    let mut pos = vec![(0usize, 0usize); size + 1];
    for (r, row) in q.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            pos[v as usize] = (r + 1, c + 1);
        }
    }
    let mut cur = p.clone();
    let mut letters = vec![0u8; size];
    for k in (1..=size).rev() {
        let (t, x) = reverse_row_insert(&cur, pos[k])?;
        letters[k - 1] = x;
        cur = t;
    }
    Word::new(letters, n)
}

/// Words one elementary Knuth move away:
/// `yxz <-> yzx` with `x < y <= z` and `xzy <-> zxy` with `x <= y < z`
/// (the boundary equalities are forced by compatibility with Schensted
/// insertion, e.g. `121 ~ 211` but not `121 ~ 112`).
pub fn knuth_neighbors(w: &Word) -> Vec<Word> {
    let v = w.letters();
    let mut out = Vec::new();
    for i in 0..v.len().saturating_sub(2) {
        let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
        // swap the last two letters of the window
        if (b < a && a <= c) || (c < a && a <= b) {
            let mut u = v.to_vec();
            u.swap(i + 1, i + 2);
            out.push(Word::new(u, w.alphabet()).expect("same letters"));
        }
        // swap the first two letters of the window
        if (a <= c && c < b) || (b <= c && c < a) {
            let mut u = v.to_vec();
            u.swap(i, i + 1);
            out.push(Word::new(u, w.alphabet()).expect("same letters"));
        }
    }
    out
}

/// Full Knuth equivalence class, by breadth-first closure of elementary moves.
pub fn knuth_class(w: &Word) -> Vec<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for u in knuth_neighbors(&v) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    out
}

/// Reverse-complement of a word in the alphabet `[n]`: the i-th letter of the
/// result is `n+1 - w_{N+1-i}`.
pub fn word_sharp(w: &Word, n: u8) -> Word {
    let letters: Vec<u8> = w.letters().iter().rev().map(|&x| n + 1 - x).collect();
    Word::new(letters, n).expect("complement stays in alphabet")
}

/// Evacuation of a normal tableau in the alphabet `[n]`: the unique tableau
/// whose restriction to `[i]` has the shape of `P(T|_{[n+1-i, n]})`.
pub fn evacuation(t: &Tableau, n: u8) -> Result<Tableau> {
    if !t.is_normal() {
        return Err(Error::InvalidInput("evacuation needs a normal shape".into()));
    }
    if t.max_letter() > n {
        return Err(Error::InvalidInput("letters exceed alphabet".into()));
    }
    let full = t.outer_shape();
    let mut rows: Vec<Vec<u8>> = (1..=full.len())
        .map(|r| vec![0u8; full.part(r) as usize])
        .collect();
    let mut prev = Partition::empty();
    for i in 1..=n {
        let restr = t.restrict(n + 1 - i, n);
        let shape = p_tableau(&restr.row_reading_word(n)).outer_shape();
        for r in 1..=shape.len() {
            for c in prev.part(r) + 1..=shape.part(r) {
                rows[r - 1][c as usize - 1] = i;
            }
        }
        prev = shape;
    }
    Tableau::from_rows(rows)
}

/// Promotion `pr_k` of a standard tableau with `N` cells: exchanges the
/// subtableaux on `[1,k]` and `[k+1,N]` by tableau switching, then relabels
/// so that the result is standard on `[1,N]`.
pub fn promotion(q: &Tableau, k: usize) -> Result<Tableau> {
    let size = q.size();
    if k > size {
        return Err(Error::InvalidInput(format!("k = {k} exceeds size {size}")));
    }
    if !q.is_normal() || !is_standard(q) {
        return Err(Error::InvalidInput("promotion needs a standard tableau".into()));
    }
    if size == 0 {
        return Ok(Tableau::empty());
    }
    let shape = q.outer_shape();
    // Grid encoding: letters <= k are the sliding holes-to-be (stored
    // negated), letters > k slide, placed letters get an offset marker.
    const PLACED: i32 = 1 << 20;
    let mut grid: Vec<Vec<i32>> = (1..=shape.len())
        .map(|r| {
            (1..=shape.part(r) as usize)
                .map(|c| {
                    let v = q.get(r, c).unwrap() as i32;
                    if v as usize <= k {
                        -v
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    let mut pos = vec![(0usize, 0usize); k + 1];
    for (r, row) in q.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if (v as usize) <= k {
                pos[v as usize] = (r, c);
            }
        }
    }
    let get = |grid: &Vec<Vec<i32>>, r: usize, c: usize| -> Option<i32> {
        grid.get(r).and_then(|row| row.get(c)).copied()
    };
    for j in (1..=k).rev() {
        let (mut r, mut c) = pos[j];
        debug_assert_eq!(grid[r][c], -(j as i32));
        loop {
            let east = get(&grid, r, c + 1).filter(|&v| v > 0 && v < PLACED);
            let south = get(&grid, r + 1, c).filter(|&v| v > 0 && v < PLACED);
            match (east, south) {
                (None, None) => {
                    grid[r][c] = PLACED + j as i32;
                    break;
                }
                (Some(_), None) => {
                    grid[r][c] = grid[r][c + 1];
                    c += 1;
                }
                (None, Some(_)) => {
                    grid[r][c] = grid[r + 1][c];
                    r += 1;
                }
                (Some(e), Some(s)) => {
                    if e < s {
                        grid[r][c] = grid[r][c + 1];
                        c += 1;
                    } else {
                        grid[r][c] = grid[r + 1][c];
                        r += 1;
                    }
                }
            }
        }
    }
    let rows: Vec<Vec<u8>> = grid
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    if v >= PLACED {
                        (v - PLACED) as u8 + (size - k) as u8
                    } else {
                        debug_assert!(v > 0);
                        v as u8 - k as u8
                    }
                })
                .collect()
        })
        .collect();
    Tableau::from_rows(rows)
}

pub fn is_standard(t: &Tableau) -> bool {
    let size = t.size();
    if size > 255 {
        return false;
    }
    let mut seen = vec![false; size + 1];
    for row in t.rows() {
        for &x in row {
            let x = x as usize;
            if x == 0 || x > size || seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    true
}

fn column_insert_raw(rows: &mut Vec<Vec<u8>>, x: u8) -> (usize, usize) {
    let mut x = x;
    let mut c = 0usize;
    loop {
        let height = rows.iter().take_while(|row| row.len() > c).count();
        let hit = (0..height).find(|&r| rows[r][c] >= x);
        match hit {
            Some(r) => {
                std::mem::swap(&mut rows[r][c], &mut x);
                c += 1;
            }
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[height].len(), c);
                rows[height].push(x);
                return (height + 1, c + 1);
            }
        }
    }
}

fn inverse_column_insert(rows: &mut Vec<Vec<u8>>, cell: (usize, usize)) -> Result<u8> {
    let (r, c) = cell;
    let is_corner = r >= 1
        && r <= rows.len()
        && rows[r - 1].len() == c
        && (r == rows.len() || rows[r].len() < c);
    if !is_corner {
        return Err(Error::NotACorner(cell));
    }
    let mut y = rows[r - 1].pop().expect("nonempty");
    if rows[r - 1].is_empty() {
        rows.pop();
    }
    for j in (1..c).rev() {
        // bottommost entry weakly below y returns toward the first column
        let rr = (0..rows.len())
            .rev()
            .find(|&rr| rows[rr].len() >= j && rows[rr][j - 1] <= y)
            .expect("inverse column bump always finds an entry");
        std::mem::swap(&mut rows[rr][j - 1], &mut y);
    }
    Ok(y)
}

/// Column-insertion RSK of a sequence of weakly increasing words indexed by
/// recording letters `1..=t`: `P = P(u^t ... u^1)` and `Q` is column-strict
/// with `shape(Q|_{[i]}) = shape(P(u^i ... u^1))`.
pub fn column_rsk(words: &[Word]) -> Result<TableauPair> {
    if words.len() > 255 {
        return Err(Error::BoundExceeded("more than 255 words".into()));
    }
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut q_grid: Vec<Vec<u8>> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        if !w.is_weakly_increasing() {
            return Err(Error::InvalidInput(format!(
                "word {} is not weakly increasing",
                i + 1
            )));
        }
        // Insert each word largest letter first, so that after stage i the
        // insertion tableau is P(u^i ... u^1).
        for &x in w.letters().iter().rev() {
            let (r, c) = column_insert_raw(&mut rows, x);
            if q_grid.len() < r {
                q_grid.push(Vec::new());
            }
            debug_assert_eq!(q_grid[r - 1].len(), c - 1);
            q_grid[r - 1].push((i + 1) as u8);
        }
    }
    Ok(TableauPair {
        p: Tableau::from_rows(rows)?,
        q: Tableau::from_rows(q_grid)?,
    })
}

/// Inverse of [`column_rsk`]: recovers the `t` weakly increasing words.
pub fn inverse_column_rsk(pair: &TableauPair, t: u8, n: u8) -> Result<Vec<Word>> {
    if pair.p.outer_shape() != pair.q.outer_shape() {
        return Err(Error::InvalidInput("P and Q shapes differ".into()));
    }
    let mut rows = pair.p.rows().to_vec();
    let mut out = vec![Vec::new(); t as usize];
    for i in (1..=t).rev() {
        // Cells recorded with letter i, undone east to west; the ejected
        // letters then come out weakly increasing.
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for (r, row) in pair.q.rows().iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == i {
                    cells.push((r + 1, c + 1));
                }
            }
        }
        cells.sort_by_key(|c| std::cmp::Reverse(c.1));
        let mut letters = Vec::with_capacity(cells.len());
        for cell in cells {
            letters.push(inverse_column_insert(&mut rows, cell)?);
        }
        if !letters.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::InvariantViolation(
                "ejected letters not weakly increasing".into(),
            ));
        }
        out[i as usize - 1] = letters;
    }
    if !rows.is_empty() {
        return Err(Error::InvariantViolation("cells left over".into()));
    }
    out.into_iter().map(|l| Word::new(l, n)).collect()
}

/// Overlap of a pair of weakly increasing words: the length of the second row
/// of `P(v u)`, equivalently the maximum number of size-two columns among the
/// skew tableaux with first row `u` and second row `v`.
pub fn two_row_overlap(v: &Word, u: &Word) -> Result<usize> {
    if !u.is_weakly_increasing() || !v.is_weakly_increasing() {
        return Err(Error::InvalidInput("rows must be weakly increasing".into()));
    }
    let p = p_tableau(&v.concat(u));
    Ok(p.outer_shape().part(2) as usize)
}

// Two-row grids for the jeu-de-taquin: columns indexed from 0.
struct TwoRow {
    top: Vec<Option<u8>>,
    bot: Vec<Option<u8>>,
}

impl TwoRow {
    fn get(&self, r: usize, c: usize) -> Option<u8> {
        let row = if r == 0 { &self.top } else { &self.bot };
        row.get(c).copied().flatten()
    }

    fn set(&mut self, r: usize, c: usize, v: Option<u8>) {
        let row = if r == 0 { &mut self.top } else { &mut self.bot };
        if c >= row.len() {
            row.resize(c + 1, None);
        }
        row[c] = v;
    }

    /// Extracts (top word, top offset, bottom word); fails if either row is
    /// not contiguous or the layout is not a skew shape.
    fn extract(&self) -> Result<(Vec<u8>, usize, Vec<u8>)> {
        let contiguous = |row: &[Option<u8>]| -> Result<(usize, Vec<u8>)> {
            let start = row.iter().position(|c| c.is_some()).unwrap_or(0);
            let vals: Vec<u8> = row[start..]
                .iter()
                .take_while(|c| c.is_some())
                .map(|c| c.unwrap())
                .collect();
            if row[start..].iter().skip(vals.len()).any(|c| c.is_some()) {
                return Err(Error::InvariantViolation("row not contiguous".into()));
            }
            Ok((start, vals))
        };
        let (top_start, top) = contiguous(&self.top)?;
        let (bot_start, bot) = contiguous(&self.bot)?;
        if bot_start != 0 || (!top.is_empty() && top_start + top.len() < bot.len()) {
            return Err(Error::InfeasibleTarget(top.len()));
        }
        // An empty top row sits conceptually at the east end of the bottom.
        let top_start = if top.is_empty() { bot.len() } else { top_start };
        Ok((top, top_start, bot))
    }
}

/// Slides between the two-row skew column-strict tableaux of maximal overlap
/// with rows Knuth-equivalent to `v u`, moving cells between the rows until
/// the first (top) row has the requested length. Returns the new (u, v).
pub fn two_row_slide(u: &Word, v: &Word, target: usize) -> Result<(Word, Word)> {
    if !u.is_weakly_increasing() || !v.is_weakly_increasing() {
        return Err(Error::InvalidInput("rows must be weakly increasing".into()));
    }
    let n = u.alphabet().max(v.alphabet());
    let total = u.len() + v.len();
    if target > total {
        return Err(Error::InfeasibleTarget(target));
    }
    let ov = two_row_overlap(v, u)?;
    if v.len() < ov || u.len() < ov {
        return Err(Error::InvariantViolation("overlap exceeds a row".into()));
    }
    let mut grid = TwoRow {
        top: Vec::new(),
        bot: Vec::new(),
    };
    let off = v.len() - ov;
    for (i, &x) in u.letters().iter().enumerate() {
        grid.set(0, off + i, Some(x));
    }
    for (i, &x) in v.letters().iter().enumerate() {
        grid.set(1, i, Some(x));
    }
    // Maximal-overlap placement is column-strict.
    for c in 0..v.len() {
        if let (Some(a), Some(b)) = (grid.get(0, c), grid.get(1, c)) {
            if a >= b {
                return Err(Error::InvariantViolation(
                    "maximal overlap placement not column-strict".into(),
                ));
            }
        }
    }
    let mut top_len = u.len();
    let mut top_start = off;
    while top_len != target {
        if top_len < target {
            // Grow the top row at its west end; the hole exits the bottom row.
            if top_start == 0 {
                return Err(Error::InfeasibleTarget(target));
            }
            let (mut r, mut c) = (0usize, top_start - 1);
            loop {
                let east = grid.get(r, c + 1);
                let south = if r == 0 { grid.get(1, c) } else { None };
                match (east, south) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid.set(r, c, east);
                        grid.set(r, c + 1, None);
                        c += 1;
                    }
                    (None, Some(_)) | (Some(_), Some(_))
                        if south.is_some() && (east.is_none() || south <= east) =>
                    {
                        grid.set(r, c, south);
                        grid.set(1, c, None);
                        r = 1;
                    }
                    _ => {
                        grid.set(r, c, east);
                        grid.set(r, c + 1, None);
                        c += 1;
                    }
                }
            }
        } else {
            // Shrink the top row: reverse slide entering past the bottom row.
            let bot_len = grid.bot.iter().filter(|c| c.is_some()).count();
            if top_start + top_len <= bot_len {
                return Err(Error::InfeasibleTarget(target));
            }
            let (mut r, mut c) = (1usize, bot_len);
            loop {
                let west = if c > 0 { grid.get(r, c - 1) } else { None };
                let north = if r == 1 { grid.get(0, c) } else { None };
                match (west, north) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid.set(r, c, west);
                        grid.set(r, c - 1, None);
                        c -= 1;
                    }
                    (None, Some(_)) | (Some(_), Some(_))
                        if north.is_some() && (west.is_none() || north >= west) =>
                    {
                        grid.set(r, c, north);
                        grid.set(0, c, None);
                        r = 0;
                    }
                    _ => {
                        grid.set(r, c, west);
                        grid.set(r, c - 1, None);
                        c -= 1;
                    }
                }
            }
        }
        let (top, start, _bot) = grid.extract()?;
        if top.len() == top_len {
            return Err(Error::InfeasibleTarget(target));
        }
        top_len = top.len();
        top_start = start;
    }
    let (top, _, bot) = grid.extract()?;
    let u2 = Word::new(top, n)?;
    let v2 = Word::new(bot, n)?;
    debug_assert_eq!(p_tableau(&v2.concat(&u2)), p_tableau(&v.concat(u)));
    Ok((u2, v2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    fn running_example_s() -> Tableau {
        Tableau::from_rows(vec![
            vec![1, 1, 1, 3, 3, 5],
            vec![2, 2, 2, 4],
            vec![4, 6],
            vec![7],
        ])
        .unwrap()
    }

    #[test]
    fn row_insert_examples() {
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        let (t2, cell) = row_insert(&t, 3).unwrap();
        assert_eq!(t2.rows(), &[vec![1, 3, 3], vec![2]]);
        assert_eq!(cell, (1, 3));

        let (t3, cell) = row_insert(&Tableau::empty(), 5).unwrap();
        assert_eq!(t3.rows(), &[vec![5]]);
        assert_eq!(cell, (1, 1));
    }

    #[test]
    fn reverse_insert_cocyclage_example() {
        // Reverse row insertion on S at corner (2,4) gives U and ejects 3.
        let s = running_example_s();
        let (u, x) = reverse_row_insert(&s, (2, 4)).unwrap();
        assert_eq!(x, 3);
        assert_eq!(
            u.rows(),
            &[vec![1, 1, 1, 3, 4, 5], vec![2, 2, 2], vec![4, 6], vec![7]]
        );
        // Re-inserting is the identity.
        let (s2, cell) = row_insert(&u, 3).unwrap();
        assert_eq!(s2, s);
        assert_eq!(cell, (2, 4));
    }

    #[test]
    fn reverse_insert_single_cell() {
        let t = Tableau::from_rows(vec![vec![4]]).unwrap();
        let (u, x) = reverse_row_insert(&t, (1, 1)).unwrap();
        assert!(u.rows().is_empty());
        assert_eq!(x, 4);
        assert!(reverse_row_insert(&running_example_s(), (1, 3)).is_err());
    }

    #[test]
    fn p_tableau_fixes_row_words() {
        let s = running_example_s();
        assert_eq!(p_tableau(&s.row_reading_word(7)), s);
    }

    #[test]
    fn rs_pair_column_word() {
        let pair = rs_pair(&word("21", 2));
        assert_eq!(pair.p.rows(), &[vec![1], vec![2]]);
        assert_eq!(pair.q.rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn rs_bijection_exhaustive() {
        // All words over [2] and [3] of length <= 6 round-trip through (P, Q).
        for n in 2u8..=3 {
            for len in 0..=6usize {
                let mut stack = vec![Vec::new()];
                while let Some(cur) = stack.pop() {
                    if cur.len() == len {
                        let w = Word::new(cur.clone(), n).unwrap();
                        let pair = rs_pair(&w);
                        let back = inverse_rs(&pair.p, &pair.q, n).unwrap();
                        assert_eq!(back, w);
                        continue;
                    }
                    for x in 1..=n {
                        let mut next = cur.clone();
                        next.push(x);
                        stack.push(next);
                    }
                }
            }
        }
    }

    #[test]
    fn knuth_neighbors_examples() {
        assert_eq!(knuth_neighbors(&word("213", 3)), vec![word("231", 3)]);
        assert!(knuth_neighbors(&word("111", 3)).is_empty());
    }

    #[test]
    fn knuth_class_shares_p() {
        let w = word("2314212", 4);
        let p = p_tableau(&w);
        for v in knuth_class(&w) {
            assert_eq!(p_tableau(&v), p);
        }
        // The class of w is the full RS fiber of P(w): one word per standard
        // tableau of the shape.
        let fiber = crate::tableau::standard_tableaux(&p.outer_shape()).len();
        assert_eq!(knuth_class(&w).len(), fiber);
    }

    #[test]
    fn knuth_boundary_moves() {
        assert_eq!(knuth_neighbors(&word("121", 2)), vec![word("211", 2)]);
        assert_eq!(knuth_neighbors(&word("212", 2)), vec![word("221", 2)]);
        assert!(knuth_neighbors(&word("112", 2)).is_empty());
        // All words of length <= 6 over [3]: the Knuth class is exactly the
        // fiber of the insertion tableau.
        for len in 1..=6usize {
            let mut stack: Vec<Vec<u8>> = vec![vec![]];
            let mut words = Vec::new();
            while let Some(cur) = stack.pop() {
                if cur.len() == len {
                    words.push(Word::new(cur.clone(), 3).unwrap());
                    continue;
                }
                for x in 1..=3u8 {
                    let mut next = cur.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
            use std::collections::HashMap;
            let mut fibers: HashMap<Tableau, usize> = HashMap::new();
            for v in &words {
                *fibers.entry(p_tableau(v)).or_default() += 1;
            }
            for v in &words {
                let class = knuth_class(v);
                assert_eq!(class.len(), fibers[&p_tableau(v)], "at {v}");
            }
        }
    }

    #[test]
    fn sharp_and_evacuation() {
        let w = word("213312", 3);
        let n = 3;
        assert_eq!(word_sharp(&word("2", 3), n), word("2", 3));
        assert_eq!(word_sharp(&w, n), word("231132", 3));
        // P(w#) = evacuation(P(w))
        let lhs = p_tableau(&word_sharp(&w, n));
        let rhs = evacuation(&p_tableau(&w), n).unwrap();
        assert_eq!(lhs, rhs);
        // involution
        assert_eq!(evacuation(&rhs, n).unwrap(), p_tableau(&w));
    }

    #[test]
    fn promotion_basics() {
        let q = rs_pair(&word("2314212", 4)).q;
        assert_eq!(promotion(&q, 0).unwrap(), q);
        let size = q.size();
        // pr_N on any standard tableau exchanges everything with nothing.
        let full = promotion(&q, size).unwrap();
        assert_eq!(full.outer_shape(), q.outer_shape());
    }

    #[test]
    fn promotion_rectangle_power_rule() {
        // On rectangles pr_k = pr_1^k.
        let shapes = [vec![3u32, 3], vec![2, 2, 2], vec![4, 4]];
        for shape in shapes {
            let lam = Partition::new(shape).unwrap();
            for q in crate::tableau::standard_tableaux(&lam) {
                let size = q.size();
                for k in 0..=size {
                    let direct = promotion(&q, k).unwrap();
                    let mut iter = q.clone();
                    for _ in 0..k {
                        iter = promotion(&iter, 1).unwrap();
                    }
                    assert_eq!(direct, iter, "shape {lam}, k={k}");
                }
                // pr_N = identity on rectangles.
                assert_eq!(promotion(&q, size).unwrap(), q);
            }
        }
    }

    #[test]
    fn promotion_defining_conditions() {
        let q = rs_pair(&word("23142125", 5)).q;
        let size = q.size();
        for k in 0..=size {
            let pr = promotion(&q, k).unwrap();
            // pr_k(Q)|_[N-k] = P(Q|_[k+1,N]) - k
            let low = pr.restrict(1, (size - k) as u8);
            let skew = q.restrict(k as u8 + 1, size as u8);
            let rect = p_tableau(&skew.row_reading_word(size as u8)).shift_letters(-(k as i16));
            assert_eq!(low, rect);
            // P(pr_k(Q)|_[N-k+1,N]) = Q|_[k] + (N-k)
            let hi = pr.restrict((size - k) as u8 + 1, size as u8);
            let lhs = p_tableau(&hi.row_reading_word(size as u8));
            let rhs = q.restrict(1, k as u8).shift_letters((size - k) as i16);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn column_rsk_single_word() {
        let u = word("1123", 3);
        let pair = column_rsk(std::slice::from_ref(&u)).unwrap();
        assert_eq!(pair.p, p_tableau(&u));
        assert_eq!(pair.q.rows(), &[vec![1, 1, 1, 1]]);
    }

    #[test]
    fn column_rsk_worked_instance() {
        let words = [
            word("111", 8),
            word("22255", 8),
            word("33356777", 8),
            word("4", 8),
            word("446688", 8),
            word("8", 8),
            Word::empty(8),
            Word::empty(8),
        ];
        let pair = column_rsk(&words).unwrap();
        let expect_p = Tableau::from_rows(vec![
            vec![1, 1, 1, 5, 5, 5, 7, 7],
            vec![2, 2, 2, 6, 6, 7],
            vec![3, 3, 3, 8, 8],
            vec![4, 4, 4],
            vec![6],
            vec![8],
        ])
        .unwrap();
        let expect_q = Tableau::from_rows(vec![
            vec![1, 1, 1, 2, 2, 3, 3, 3],
            vec![2, 2, 2, 3, 3, 5],
            vec![3, 3, 3, 5, 5],
            vec![4, 5, 5],
            vec![5],
            vec![6],
        ])
        .unwrap();
        assert_eq!(pair.p, expect_p);
        assert_eq!(pair.q, expect_q);
        // P equals the row-insertion tableau of u^t ... u^1.
        let mut concat = Word::empty(8);
        for w in words.iter().rev() {
            concat = concat.concat(w);
        }
        assert_eq!(pair.p, p_tableau(&concat));
        // Round trip.
        let back = inverse_column_rsk(&pair, 8, 8).unwrap();
        assert_eq!(back.as_slice(), &words);
    }

    #[test]
    fn column_rsk_rejects_decreasing() {
        assert!(column_rsk(&[word("21", 2)]).is_err());
    }

    #[test]
    fn overlap_examples() {
        // Disjoint alphabets, all of v above u: overlap = min length.
        let u = word("112", 4);
        let v = word("344", 4);
        assert_eq!(two_row_overlap(&v, &u).unwrap(), 3);
        let v2 = word("34", 4);
        assert_eq!(two_row_overlap(&v2, &u).unwrap(), 2);
        assert_eq!(two_row_overlap(&Word::empty(4), &u).unwrap(), 0);
    }

    #[test]
    fn two_row_slide_worked_instance() {
        // Pinned slide family: top 22256 over 33356777 at lengths 5, 6, 7.
        let u = word("22256", 8);
        let v = word("33356777", 8);
        let (u1, v1) = two_row_slide(&u, &v, 6).unwrap();
        assert_eq!(u1, word("222567", 8));
        assert_eq!(v1, word("3335677", 8));
        let (u2, v2) = two_row_slide(&u, &v, 7).unwrap();
        assert_eq!(u2, word("2225677", 8));
        assert_eq!(v2, word("333567", 8));
        // Shrinking below the overlap is infeasible here.
        assert!(two_row_slide(&u, &v, 4).is_err());
        // The slide preserves the insertion tableau.
        assert_eq!(p_tableau(&v2.concat(&u2)), p_tableau(&v.concat(&u)));
    }

    #[test]
    fn two_row_slide_empty_rows() {
        let v = word("112", 3);
        let e = Word::empty(3);
        // Identity slide with an empty top row.
        let (u2, v2) = two_row_slide(&e, &v, 0).unwrap();
        assert!(u2.is_empty());
        assert_eq!(v2, v);
        // Growing out of an empty top row pulls up the east end.
        let (u2, v2) = two_row_slide(&e, &v, 1).unwrap();
        assert_eq!(u2, word("2", 3));
        assert_eq!(v2, word("11", 3));
        // Empty bottom row: shrink moves cells down.
        let u = word("12", 3);
        let (u2, v2) = two_row_slide(&u, &e, 1).unwrap();
        assert_eq!((u2.clone(), v2.clone()), (word("2", 3), word("1", 3)));
        assert_eq!(p_tableau(&v2.concat(&u2)), p_tableau(&u));
        // Even length-zero targets of a one-row class work.
        let (u2, v2) = two_row_slide(&u, &e, 0).unwrap();
        assert!(u2.is_empty());
        assert_eq!(v2, word("12", 3));
    }
}
