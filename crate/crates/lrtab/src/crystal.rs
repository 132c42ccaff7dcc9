//! Type A crystal raising/lowering/reflection operators on words and the
//! induced symmetric-group action (the automorphisms of conjugation).

use crate::word::Word;
use crate::{Error, Result};

/// A permutation of `[1, m]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    // one_line[i] = image of i+1, values 1-based
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn new(one_line: impl Into<Vec<u8>>) -> Result<Self> {
        let one_line = one_line.into();
        let m = one_line.len();
        let mut seen = vec![false; m + 1];
        for &v in &one_line {
            if v == 0 || v as usize > m || seen[v as usize] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of [1,{m}]: {one_line:?}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            one_line: (1..=m as u8).collect(),
        }
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.one_line[x as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Writes the permutation as a product of adjacent transpositions and
    /// returns the generator indices in the order they must be applied to a
    /// word (rightmost factor first). Obtained by bubble-sorting the one-line
    /// form; the word is reduced.
    pub fn adjacent_decomposition(&self) -> Vec<u8> {
        let mut a = self.one_line.clone();
        let mut seq = Vec::new();
        loop {
            let mut swapped = false;
            for j in 0..a.len().saturating_sub(1) {
                if a[j] > a[j + 1] {
                    a.swap(j, j + 1);
                    seq.push((j + 1) as u8);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        seq
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", strs.join(" "))
    }
}

/// Result of the parenthesis matching for an index `r`: letters `r` are right
/// parentheses, letters `r+1` left parentheses, everything else ignored. The
/// unpaired subword reads `r^a (r+1)^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParenMatching {
    /// Matched pairs as positions `(pos of r+1, pos of r)`, 0-based.
    pub pairs: Vec<(usize, usize)>,
    /// Positions of unpaired letters `r`, left to right.
    pub unpaired_lo: Vec<usize>,
    /// Positions of unpaired letters `r+1`, left to right.
    pub unpaired_hi: Vec<usize>,
}

impl ParenMatching {
    pub fn a(&self) -> usize {
        self.unpaired_lo.len()
    }

    pub fn b(&self) -> usize {
        self.unpaired_hi.len()
    }
}

/// Single left-to-right scan with a stack.
pub fn match_parens(w: &Word, r: u8) -> ParenMatching {
    let mut stack: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    let mut unpaired_lo = Vec::new();
    for (i, &x) in w.letters().iter().enumerate() {
        if x == r + 1 {
            stack.push(i);
        } else if x == r {
            match stack.pop() {
                Some(j) => pairs.push((j, i)),
                None => unpaired_lo.push(i),
            }
        }
    }
    let m = ParenMatching {
        pairs,
        unpaired_lo,
        unpaired_hi: stack,
    };
    debug_assert!(m
        .unpaired_lo
        .last()
        .is_none_or(|&lo| m.unpaired_hi.first().is_none_or(|&hi| lo < hi)));
    m
}

/// Crystal raising operator: turns the first unpaired `r+1` into `r`.
/// Undefined (None) when there is none.
pub fn e_op(w: &Word, r: u8) -> Option<Word> {
    let m = match_parens(w, r);
    let &pos = m.unpaired_hi.first()?;
    let mut letters = w.letters().to_vec();
    letters[pos] = r;
    Some(Word::new(letters, w.alphabet()).expect("letter in range"))
}

/// Crystal lowering operator: turns the last unpaired `r` into `r+1`.
pub fn f_op(w: &Word, r: u8) -> Option<Word> {
    let m = match_parens(w, r);
    let &pos = m.unpaired_lo.last()?;
    let mut letters = w.letters().to_vec();
    letters[pos] = r + 1;
    Some(Word::new(letters, w.alphabet()).expect("letter in range"))
}

/// Crystal reflection: replaces the unpaired subword `r^a (r+1)^b` by
/// `r^b (r+1)^a` in the same positions.
pub fn s_op(w: &Word, r: u8) -> Word {
    let m = match_parens(w, r);
    let mut letters = w.letters().to_vec();
    let positions: Vec<usize> = m
        .unpaired_lo
        .iter()
        .chain(m.unpaired_hi.iter())
        .copied()
        .collect();
    let b = m.b();
    for (k, &pos) in positions.iter().enumerate() {
        letters[pos] = if k < b { r } else { r + 1 };
    }
    Word::new(letters, w.alphabet()).expect("letters in range")
}

/// Applies a permutation to a word through the reflection operators along an
/// adjacent-transposition decomposition. The action is independent of the
/// chosen decomposition.
pub fn apply_permutation(w: &Word, sigma: &Permutation) -> Word {
    let mut out = w.clone();
    for r in sigma.adjacent_decomposition() {
        out = s_op(&out, r);
    }
    out
}

/// Longest permutation in the Young subgroup of `S_n` stabilizing the given
/// consecutive intervals (each interval is reversed).
pub fn longest_young_element(block_sizes: &[u32]) -> Permutation {
    let n: u32 = block_sizes.iter().sum();
    let mut one_line = Vec::with_capacity(n as usize);
    let mut lo = 1u32;
    for &b in block_sizes {
        let hi = lo + b - 1;
        for x in lo..=hi {
            one_line.push((lo + hi - x) as u8);
        }
        lo = hi + 1;
    }
    Permutation::new(one_line).expect("block reversal is a permutation")
}
