//! Words over the alphabet `[1, n]`.

use serde::{Deserialize, Serialize};

use crate::shape::{Partition, Weight};
use crate::{Error, Result};

/// A finite sequence of letters in `[1, n]`, together with the alphabet bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u8>,
    n: u8,
}

impl Word {
    pub fn new(letters: impl Into<Vec<u8>>, n: u8) -> Result<Self> {
        let letters = letters.into();
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::InvalidInput(format!(
                "letter {bad} outside alphabet [1,{n}]"
            )));
        }
        Ok(Word { letters, n })
    }

    pub fn empty(n: u8) -> Self {
        Word {
            letters: Vec::new(),
            n,
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Multiplicity vector: entry `i` is the number of letters `i`.
    pub fn content(&self) -> Weight {
        let mut counts = vec![0i64; self.n as usize];
        for &x in &self.letters {
            counts[x as usize - 1] += 1;
        }
        Weight::new(counts)
    }

    /// Concatenation; alphabets must agree.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, n: self.n }
    }

    /// Splits off the last letter: `w = u x`.
    pub fn split_last(&self) -> Option<(Word, u8)> {
        let (&x, rest) = self.letters.split_last()?;
        Some((
            Word {
                letters: rest.to_vec(),
                n: self.n,
            },
            x,
        ))
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    /// True iff every final subword has partition content.
    pub fn is_lattice(&self) -> bool {
        self.is_mu_lattice(&Partition::empty())
    }

    /// True iff for every final subword, `mu` plus its content is a partition.
    ///
    /// Scans right to left; adding a letter `x` to the front of the suffix can
    /// only break the comparison at the pair `(x-1, x)`.
    pub fn is_mu_lattice(&self, mu: &Partition) -> bool {
        let n = self.n as usize;
        let mut counts = vec![0i64; n + 1];
        for &x in self.letters.iter().rev() {
            let x = x as usize;
            counts[x] += 1;
            if x >= 2 && mu.part(x - 1) as i64 + counts[x - 1] < mu.part(x) as i64 + counts[x] {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for Word {
    /// Digits run together when the alphabet fits in one digit, else comma-separated.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 9 {
            for &x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// Convenience constructor from a digit string, e.g. `word("7442632512131", 7)`.
#[cfg(test)]
pub fn word(digits: &str, n: u8) -> Word {
    let letters: Vec<u8> = digits
        .chars()
        .map(|c| c.to_digit(10).expect("digit") as u8)
        .collect();
    Word::new(letters, n).expect("valid word")
}
