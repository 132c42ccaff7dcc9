//! Partitions, integral weights, and skew shapes.
//!
//! Partitions are normalized (trailing zeros dropped) so that two partitions
//! are equal iff their part vectors are equal. Weights are arbitrary integer
//! vectors and are never reordered; the distinction between compositions and
//! partitions matters throughout.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, normalizing trailing zeros away.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "not weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Part at 1-based row index, zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 || row > self.parts.len() {
            0
        } else {
            self.parts[row - 1]
        }
    }

    /// Cellwise containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Cellwise union (row-wise max).
    pub fn union(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        let parts: Vec<u32> = (1..=rows)
            .map(|r| self.part(r).max(other.part(r)))
            .collect();
        Partition { parts }
    }

    /// Corner cells `(row, col)`, 1-based: cells whose removal leaves a partition.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.len() {
            if self.part(r) > self.part(r + 1) {
                out.push((r, self.part(r) as usize));
            }
        }
        out
    }

    /// Removes the corner cell in the given row.
    pub fn remove_corner(&self, row: usize) -> Result<Partition> {
        if self.part(row) == 0 || self.part(row) == self.part(row + 1) {
            return Err(Error::NotACorner((row, self.part(row) as usize)));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// Partition as a weight padded to length `n`.
    pub fn to_weight(&self, n: usize) -> Weight {
        let mut entries: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        entries.resize(n.max(entries.len()), 0);
        Weight::new(entries)
    }

    /// All partitions of `n` with at most `max_rows` rows, in lexicographically
    /// decreasing order of part vectors.
    pub fn all(n: u64, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u64, max_part: u64, rows_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows_left == 0 || max_part == 0 {
                return;
            }
            let hi = max_part.min(remaining);
            for p in (1..=hi).rev() {
                // Remaining cells must fit in the box below.
                if remaining - p > p * (rows_left as u64 - 1) {
                    continue;
                }
                cur.push(p as u32);
                rec(remaining - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        rec(n, n, max_rows, &mut stack, &mut out);
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `6,4,2,1`. Empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// A finite integer vector; may have negative entries, never reordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        Weight {
            entries: entries.into(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Weight {
            entries: vec![0; n],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Entry at 1-based index, zero beyond the end.
    pub fn entry(&self, i: usize) -> i64 {
        if i == 0 || i > self.entries.len() {
            0
        } else {
            self.entries[i - 1]
        }
    }

    pub fn is_partition(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
            && self.entries.last().is_none_or(|&x| x >= 0)
    }

    /// Sorts entries decreasingly into a partition. Fails on negative entries.
    pub fn sort_decreasing(&self) -> Result<Partition> {
        if self.entries.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput(format!(
                "negative entry in {:?}",
                self.entries
            )));
        }
        let mut parts: Vec<u32> = self.entries.iter().map(|&x| x as u32).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// Converts to a partition without reordering. Fails if not weakly decreasing.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::InvalidInput(format!(
                "not a partition: {:?}",
                self.entries
            )));
        }
        Partition::new(
            self.entries
                .iter()
                .map(|&x| x as u32)
                .collect::<Vec<u32>>(),
        )
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let n = self.len().max(other.len());
        Weight::new(
            (1..=n)
                .map(|i| self.entry(i) + other.entry(i))
                .collect::<Vec<i64>>(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let n = self.len().max(other.len());
        Weight::new(
            (1..=n)
                .map(|i| self.entry(i) - other.entry(i))
                .collect::<Vec<i64>>(),
        )
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidInput(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let a = Partition::new(vec![3, 2, 0, 0]).unwrap();
        let b = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![2, 3]).is_err());
    }

    #[test]
    fn corners() {
        let p = Partition::new(vec![6, 4, 2, 1]).unwrap();
        assert_eq!(p.corners(), vec![(1, 6), (2, 4), (3, 2), (4, 1)]);
        let q = Partition::new(vec![3, 3, 1]).unwrap();
        assert_eq!(q.corners(), vec![(2, 3), (3, 1)]);
    }

    #[test]
    fn all_partitions_count() {
        // p(6) = 11, p(10) = 42
        assert_eq!(Partition::all(6, 6).len(), 11);
        assert_eq!(Partition::all(10, 10).len(), 42);
        // bounded rows
        assert_eq!(Partition::all(4, 2).len(), 3); // 4, 31, 22
    }

    #[test]
    fn weight_partition_checks() {
        assert!(Weight::new(vec![3, 3, 1]).is_partition());
        assert!(!Weight::new(vec![1, 2]).is_partition());
        assert!(!Weight::new(vec![1, -1]).is_partition());
        let w = Weight::new(vec![1, 3, 2]);
        assert_eq!(w.sort_decreasing().unwrap(), Partition::new(vec![3, 2, 1]).unwrap());
    }

    #[test]
    fn skew_shape_containment() {
        let outer = Partition::new(vec![4, 2]).unwrap();
        let inner = Partition::new(vec![2]).unwrap();
        assert!(SkewShape::new(outer.clone(), inner).is_ok());
        let too_big = Partition::new(vec![5]).unwrap();
        assert!(SkewShape::new(outer, too_big).is_err());
    }

    #[test]
    fn parse_partition() {
        let p: Partition = "6,4,2,1".parse().unwrap();
        assert_eq!(p.parts(), &[6, 4, 2, 1]);
        let e: Partition = "".parse().unwrap();
        assert!(e.is_empty());
    }
}
