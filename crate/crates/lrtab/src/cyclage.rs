//! The R-cocyclage relation, the graded poset on LR tableaux, the charge
//! statistic in both its explicit-average and axiomatic forms, and the
//! classical charge used as the Kostka-case oracle.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::lr::{
    chi, enumerate_lrt, is_r_lr, restrict, tableau_index, tau_unchecked,
    RectSequence,
};
use crate::rsk::{p_tableau, reverse_row_insert};
use crate::shape::Partition;
use crate::tableau::Tableau;
use crate::word::Word;
use crate::{Error, Result};

/// Where a charge value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChargeProvenance {
    ExplicitFormula,
    Axiomatic,
}

/// A computed charge with its provenance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChargeValue {
    pub value: u64,
    pub provenance: ChargeProvenance,
}

/// Downward covers of `T` in the R-cocyclage order: for each corner strictly
/// east of column `a = max_i mu_i`, reverse row insertion ejects a letter `x`
/// from `T = P(ux)` and the cover is `P(chi_R(ux))`. Covers are listed by
/// corner cell, (row, column) ascending.
pub fn cocyclage_covers_down(
    t: &Tableau,
    r: &RectSequence,
) -> Result<Vec<((usize, usize), Tableau)>> {
    let n = r.n() as u8;
    if !is_r_lr(&t.row_reading_word(n), r) {
        return Err(Error::NotRLr);
    }
    let a = r.max_cols();
    let mut out = Vec::new();
    for corner in t.outer_shape().corners() {
        if corner.1 as u32 <= a {
            continue;
        }
        let (u, x) = reverse_row_insert(t, corner)?;
        let w = u.row_reading_word(n).concat(&Word::new(vec![x], n)?);
        let rotated = chi(&w, r)?;
        out.push((corner, p_tableau(&rotated)));
    }
    Ok(out)
}

/// One node of the cocyclage poset.
#[derive(Clone, Debug, Serialize)]
pub struct PosetNode {
    #[serde(skip)]
    pub tableau: Tableau,
    pub word: String,
    pub shape: Vec<u32>,
    pub rank: u64,
}

/// A cover edge `from -> to` (downward) labelled by the ejecting corner cell.
#[derive(Clone, Debug, Serialize)]
pub struct PosetEdge {
    pub from: usize,
    pub to: usize,
    pub corner: (usize, usize),
}

/// The R-cocyclage poset on a downward-closed set of shapes, with ranks.
#[derive(Clone, Debug)]
pub struct CocyclagePoset {
    pub rects: RectSequence,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<PosetEdge>,
    adjacency: Vec<Vec<usize>>,
}

impl CocyclagePoset {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Indices of downward covers of a node.
    pub fn covers(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn is_minimal(&self, node: usize) -> bool {
        self.adjacency[node].is_empty()
    }

    pub fn find(&self, t: &Tableau) -> Option<usize> {
        self.nodes.iter().position(|n| &n.tableau == t)
    }

    /// DOT export; node labels are reading words, edge labels the ejecting corner.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cocyclage {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  n{} [label=\"{} (rank {})\"];\n",
                i, node.word, node.rank
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -> n{} [label=\"({},{})\"];\n",
                e.from, e.to, e.corner.0, e.corner.1
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes,
            "edges": self.edges.iter().map(|e| [e.from, e.to]).collect::<Vec<_>>(),
        })
    }
}

/// Builds the poset on the union of `LRT(lambda; R)` over the given shapes.
/// The shape set must be closed under covers; the full list of partitions of
/// `N` always is. Ranks are computed twice (longest and shortest descending
/// path) and must agree, which is exactly gradedness.
pub fn build_poset(r: &RectSequence, shapes: &[Partition]) -> Result<CocyclagePoset> {
    let n = r.n() as u8;
    let mut tabs = Vec::new();
    let mut sorted_shapes = shapes.to_vec();
    sorted_shapes.sort();
    sorted_shapes.dedup();
    for lambda in &sorted_shapes {
        tabs.extend(enumerate_lrt(lambda, r));
    }
    let index = tableau_index(&tabs);
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); tabs.len()];
    for (i, t) in tabs.iter().enumerate() {
        for (corner, target) in cocyclage_covers_down(t, r)? {
            let j = *index.get(&target).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "cover leaves the shape set at {}",
                    target.outer_shape()
                ))
            })?;
            edges.push(PosetEdge {
                from: i,
                to: j,
                corner,
            });
            adjacency[i].push(j);
        }
    }
    // Longest and shortest path to a minimal node, which must coincide.
    // The walk is iterative and flags cycles instead of recursing into them.
    const UNSET: u64 = u64::MAX;
    const IN_PROGRESS: u64 = u64::MAX - 1;
    let mut longest = vec![UNSET; tabs.len()];
    let mut shortest = vec![UNSET; tabs.len()];
    for start in 0..tabs.len() {
        if longest[start] != UNSET {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        longest[start] = IN_PROGRESS;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adjacency[v].len() {
                let w = adjacency[v][*next];
                *next += 1;
                if longest[w] == IN_PROGRESS {
                    return Err(Error::InvariantViolation(
                        "cycle in the cover relation".into(),
                    ));
                }
                if longest[w] == UNSET {
                    longest[w] = IN_PROGRESS;
                    stack.push((w, 0));
                }
                continue;
            }
            let mut lo = u64::MAX;
            let mut hi = 0u64;
            if adjacency[v].is_empty() {
                lo = 0;
            }
            for &w in &adjacency[v] {
                hi = hi.max(longest[w] + 1);
                lo = lo.min(shortest[w] + 1);
            }
            if hi != lo {
                return Err(Error::InvariantViolation(format!(
                    "rank mismatch at node {v}: longest {hi}, shortest {lo}"
                )));
            }
            longest[v] = hi;
            shortest[v] = lo;
            stack.pop();
        }
    }
    let nodes = tabs
        .into_iter()
        .enumerate()
        .map(|(i, t)| PosetNode {
            word: t.row_reading_word(n).to_string(),
            shape: t.outer_shape().parts().to_vec(),
            rank: longest[i],
            tableau: t,
        })
        .collect();
    Ok(CocyclagePoset {
        rects: r.clone(),
        nodes,
        edges,
        adjacency,
    })
}

/// Poset over all partitions of `N` (always closed under covers).
pub fn build_full_poset(r: &RectSequence) -> Result<CocyclagePoset> {
    build_poset(r, &r.shapes())
}

/// `d_{i,R}(w)`: cells of the shape of `P(w|_{A_i ∪ A_{i+1}})` in columns
/// strictly right of column `max(mu_i, mu_{i+1})`.
pub fn d_statistic(i: usize, w: &Word, r: &RectSequence) -> Result<u64> {
    if i == 0 || i >= r.len() {
        return Err(Error::InvalidInput(format!(
            "i = {i} outside [1, {}]",
            r.len().saturating_sub(1)
        )));
    }
    let (lo, _) = r.alphabet_interval(i);
    let (_, hi) = r.alphabet_interval(i + 1);
    let shape = p_tableau(&restrict(w, lo, hi)).outer_shape();
    let a = r.rects()[i - 1].cols.max(r.rects()[i].cols);
    Ok((1..=shape.len())
        .map(|row| shape.part(row).saturating_sub(a) as u64)
        .sum())
}

/// The full `S_t` orbit of an R-LR word under the rectangle-switching action:
/// one entry per permutation, reached by breadth-first application of the
/// adjacent switches. Entry order is deterministic.
pub(crate) fn switch_orbit(w: &Word, r: &RectSequence) -> Vec<(Word, RectSequence)> {
    let t = r.len();
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let id: Vec<u8> = (0..t as u8).collect();
    seen.insert(id.clone(), 0);
    out.push((w.clone(), r.clone()));
    queue.push_back((id, 0usize));
    while let Some((arr, idx)) = queue.pop_front() {
        for p in 1..t {
            let mut next = arr.clone();
            next.swap(p - 1, p);
            if seen.contains_key(&next) {
                continue;
            }
            let (word, rects) = {
                let (word, rects) = &out[idx];
                (tau_unchecked(p, word, rects), rects.swapped(p))
            };
            let new_idx = out.len();
            out.push((word, rects));
            seen.insert(next.clone(), new_idx);
            queue.push_back((next, new_idx));
        }
    }
    out
}

/// The explicit charge: the average over the `S_t` orbit of the weighted
/// d-statistics, `c_R(w) = (1/t!) sum_tau sum_i (t-i) d_{i,tau R}(tau w)`.
/// Exact divisibility by `t!` is checked.
pub fn charge_explicit(w: &Word, r: &RectSequence) -> Result<ChargeValue> {
    if !is_r_lr(w, r) {
        return Err(Error::NotRLr);
    }
    let value = charge_explicit_unchecked(w, r)?;
    Ok(ChargeValue {
        value,
        provenance: ChargeProvenance::ExplicitFormula,
    })
}

pub(crate) fn charge_explicit_unchecked(w: &Word, r: &RectSequence) -> Result<u64> {
    let t = r.len();
    if t < 2 {
        return Ok(0);
    }
    // The orbit has t! members.
    if t > 10 {
        return Err(Error::BoundExceeded(format!(
            "charge averages over {t}! switch-orbit members"
        )));
    }
    let mut total = 0u64;
    let mut factorial = 1u64;
    for k in 2..=t as u64 {
        factorial *= k;
    }
    for (word, rects) in switch_orbit(w, r) {
        for i in 1..t {
            total += (t - i) as u64 * d_statistic(i, &word, &rects)?;
        }
    }
    if !total.is_multiple_of(factorial) {
        return Err(Error::InvariantViolation(format!(
            "orbit sum {total} not divisible by {factorial}"
        )));
    }
    Ok(total / factorial)
}

/// Charge on tableaux.
pub fn charge_of_tableau(t: &Tableau, r: &RectSequence) -> Result<ChargeValue> {
    charge_explicit(&t.row_reading_word(r.n() as u8), r)
}

/// The axiomatic charge, computed by the defining recursion: descend a
/// cocyclage cover when one exists, otherwise remove an adjacent inversion of
/// `R` with a rectangle switch, otherwise strip the top rectangle.
pub fn charge_axiomatic(t: &Tableau, r: &RectSequence) -> Result<ChargeValue> {
    let n = r.n() as u8;
    if !is_r_lr(&t.row_reading_word(n), r) {
        return Err(Error::NotRLr);
    }
    let value = charge_axiomatic_rec(t.clone(), r.clone())?;
    Ok(ChargeValue {
        value,
        provenance: ChargeProvenance::Axiomatic,
    })
}

fn charge_axiomatic_rec(t: Tableau, r: RectSequence) -> Result<u64> {
    if r.is_empty() {
        return Ok(0);
    }
    let covers = cocyclage_covers_down(&t, &r)?;
    if let Some((_, below)) = covers.into_iter().next() {
        return Ok(charge_axiomatic_rec(below, r)? + 1);
    }
    if let Some(p) = r.adjacent_inversion() {
        let switched = crate::lr::tau_tableau(p, &t, &r)?;
        return charge_axiomatic_rec(switched, r.swapped(p));
    }
    // Minimal and R sorted: mu_1 = max, so T is Y_1 atop a tableau for R-hat.
    let eta1 = r.rects()[0].rows as usize;
    let y1 = r.yamanouchi(1);
    let top = Tableau::from_rows(t.rows()[..eta1.min(t.rows().len())].to_vec())
        .map_err(|_| Error::InvariantViolation("minimal tableau top is not a tableau".into()))?;
    if top != y1 {
        return Err(Error::InvariantViolation(
            "minimal dominant tableau does not start with Y_1".into(),
        ));
    }
    let rest: Vec<Vec<u8>> = t.rows()[eta1..].to_vec();
    let stripped = Tableau::from_rows(rest)
        .map_err(|_| Error::InvariantViolation("stripped tableau is not column-strict".into()))?
        .shift_letters(-(eta1 as i16));
    charge_axiomatic_rec(stripped, r.hat())
}

/// Classical Lascoux-Schutzenberger charge of a word with partition content,
/// by repeated extraction of standard subwords (scanning right to left,
/// cyclically) and summing the index of each.
pub fn classical_charge_word(w: &Word) -> Result<u64> {
    let content = w.content();
    if !content.is_partition() {
        return Err(Error::InvalidInput(format!(
            "content {content} is not a partition"
        )));
    }
    let mut letters: Vec<u8> = w.letters().to_vec();
    let mut total = 0u64;
    while !letters.is_empty() {
        let len = letters.len();
        let mut used = vec![false; len];
        let mut marked: Vec<usize> = Vec::new();
        let mut target = 1u16;
        let mut anchor = len;
        loop {
            let mut found = None;
            for off in 1..=len {
                let idx = (anchor + len - off) % len;
                if !used[idx] && letters[idx] as u16 == target {
                    found = Some(idx);
                    break;
                }
            }
            match found {
                Some(idx) => {
                    used[idx] = true;
                    marked.push(idx);
                    anchor = idx;
                    target += 1;
                }
                None => break,
            }
        }
        // Index: letter 1 gets 0; r+1 adds one exactly when it sits to the
        // right of r in the word.
        let mut ind = 0u64;
        for pair in marked.windows(2) {
            if pair[1] > pair[0] {
                ind += 1;
            }
            total += ind;
        }
        let mut next = Vec::with_capacity(len - marked.len());
        for (i, &x) in letters.iter().enumerate() {
            if !used[i] {
                next.push(x);
            }
        }
        letters = next;
    }
    Ok(total)
}

/// Classical charge of a column-strict tableau with partition content.
pub fn classical_charge(t: &Tableau) -> Result<u64> {
    let n = t.max_letter().max(1);
    classical_charge_word(&t.row_reading_word(n))
}

/// The correction term of the rotation identity
/// `c_R(w) = c_R(chi_R(w)) + 1 - |N|`, where `|N|` counts the coset
/// representatives `tau_1 ... tau_{i-1}` that leave the last letter of the
/// switched word in the first alphabet block. The identity itself is checked
/// before the delta `1 - |N|` is returned.
pub fn chi_charge_delta(w: &Word, r: &RectSequence) -> Result<i64> {
    if w.is_empty() {
        return Err(Error::InvalidInput("empty word".into()));
    }
    if !is_r_lr(w, r) {
        return Err(Error::NotRLr);
    }
    let t = r.len();
    let mut count = 0i64;
    for i in 1..=t {
        let mut v = w.clone();
        let mut rr = r.clone();
        for j in (1..i).rev() {
            v = tau_unchecked(j, &v, &rr);
            rr = rr.swapped(j);
        }
        let last = *v.letters().last().expect("nonempty");
        if rr.block_of(last) == 1 {
            count += 1;
        }
    }
    let delta = 1 - count;
    let lhs = charge_explicit_unchecked(w, r)? as i64;
    let rhs = charge_explicit_unchecked(&chi(w, r)?, r)? as i64;
    if lhs - rhs != delta {
        return Err(Error::InvariantViolation(format!(
            "charge delta {} does not match 1 - |N| = {delta}",
            lhs - rhs
        )));
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::Rect;
    use crate::tableau::enumerate_ssyt;
    use crate::word::word;

    fn running_example() -> RectSequence {
        "3x2,2x2,1x3".parse().unwrap()
    }

    fn running_example_s() -> Tableau {
        Tableau::from_rows(vec![
            vec![1, 1, 1, 3, 3, 5],
            vec![2, 2, 2, 4],
            vec![4, 6],
            vec![7],
        ])
        .unwrap()
    }

    fn kostka_rects(mu: &Partition) -> RectSequence {
        RectSequence::new(
            mu.parts()
                .iter()
                .map(|&m| Rect::new(m, 1).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn covers_of_running_example() {
        let r = running_example();
        let s = running_example_s();
        let covers = cocyclage_covers_down(&s, &r).unwrap();
        // Corners of (6,4,2,1) east of column 3: (1,6) and (2,4).
        assert_eq!(covers.len(), 2);
        assert_eq!(covers[0].0, (1, 6));
        assert_eq!(covers[1].0, (2, 4));
        let expect = Tableau::from_rows(vec![
            vec![1, 1, 1, 3, 3, 5],
            vec![2, 2, 2],
            vec![4, 4, 6],
            vec![7],
        ])
        .unwrap();
        assert_eq!(covers[1].1, expect);
        for (_, below) in &covers {
            assert_eq!(below.size(), s.size());
            assert!(is_r_lr(&below.row_reading_word(7), &r));
        }
    }

    #[test]
    fn minimal_tableaux_have_no_covers() {
        let r: RectSequence = "2x2,2x1".parse().unwrap();
        for lam in r.shapes() {
            for t in enumerate_lrt(&lam, &r) {
                let covers = cocyclage_covers_down(&t, &r).unwrap();
                let minimal = lam.part(1) == r.max_cols();
                assert_eq!(covers.is_empty(), minimal, "shape {lam}");
            }
        }
    }

    #[test]
    fn single_rectangle_poset() {
        let r: RectSequence = "3x2".parse().unwrap();
        let poset = build_full_poset(&r).unwrap();
        assert_eq!(poset.node_count(), 1);
        assert!(poset.edges.is_empty());
        assert_eq!(poset.nodes[0].rank, 0);
    }

    #[test]
    fn kostka_poset_ranks_equal_classical_charge() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        let r = kostka_rects(&mu);
        let poset = build_full_poset(&r).unwrap();
        // Nodes are the column-strict tableaux of content (2,1): shapes (3), (2,1).
        assert_eq!(poset.node_count(), 2);
        for node in &poset.nodes {
            assert_eq!(
                node.rank,
                classical_charge(&node.tableau).unwrap(),
                "at {}",
                node.word
            );
        }
    }

    #[test]
    fn d_statistic_running_example() {
        let r = running_example();
        let s = running_example_s();
        let w = s.row_reading_word(7);
        assert_eq!(d_statistic(1, &w, &r).unwrap(), 3);
        assert_eq!(d_statistic(2, &w, &r).unwrap(), 1);
    }

    #[test]
    fn d_statistic_orbit_values() {
        let r = running_example();
        let s = running_example_s();
        let orbit = switch_orbit(&s.row_reading_word(7), &r);
        assert_eq!(orbit.len(), 6);
        let mut values: Vec<(u64, u64)> = orbit
            .iter()
            .map(|(w, rr)| {
                (
                    d_statistic(1, w, rr).unwrap(),
                    d_statistic(2, w, rr).unwrap(),
                )
            })
            .collect();
        values.sort_unstable();
        assert_eq!(
            values,
            vec![(2, 1), (2, 1), (2, 2), (2, 2), (3, 1), (3, 1)]
        );
    }

    #[test]
    fn charge_of_running_example_is_six() {
        let r = running_example();
        let s = running_example_s();
        assert_eq!(charge_of_tableau(&s, &r).unwrap().value, 6);
        assert_eq!(charge_axiomatic(&s, &r).unwrap().value, 6);
    }

    #[test]
    fn charge_zero_for_single_rectangle() {
        let r: RectSequence = "3x2".parse().unwrap();
        let y = r.yamanouchi(1);
        assert_eq!(charge_of_tableau(&y, &r).unwrap().value, 0);
    }

    #[test]
    fn charge_matches_classical_on_kostka_case() {
        for total in 1..=5u64 {
            for mu in Partition::all(total, total as usize) {
                let r = kostka_rects(&mu);
                let gamma = mu.to_weight(mu.len());
                for lam in Partition::all(total, mu.len()) {
                    for t in enumerate_ssyt(&lam, &gamma) {
                        assert_eq!(
                            charge_of_tableau(&t, &r).unwrap().value,
                            classical_charge(&t).unwrap(),
                            "mu = {mu}, tableau with word {}",
                            t.row_reading_word(mu.len() as u8)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn axiomatic_matches_explicit_small() {
        for s in ["2x1,1x2", "2x2,1x1", "2x1,2x1,1x1"] {
            let r: RectSequence = s.parse().unwrap();
            for lam in r.shapes() {
                for t in enumerate_lrt(&lam, &r) {
                    assert_eq!(
                        charge_axiomatic(&t, &r).unwrap().value,
                        charge_of_tableau(&t, &r).unwrap().value,
                        "R = {s}, shape {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn chi_charge_delta_examples() {
        let r: RectSequence = "3x2".parse().unwrap();
        let w = r.yamanouchi(1).row_reading_word(2);
        assert_eq!(chi_charge_delta(&w, &r).unwrap(), 0);
    }

    #[test]
    fn chi_charge_delta_on_covers_is_one() {
        // Cover words eject strictly east of column a, so the correction
        // count is empty and the charge drops by exactly one.
        let r: RectSequence = "2x1,1x1,1x2".parse().unwrap();
        let n = r.n() as u8;
        for lam in r.shapes() {
            for t in enumerate_lrt(&lam, &r) {
                for corner in t.outer_shape().corners() {
                    if corner.1 as u32 <= r.max_cols() {
                        continue;
                    }
                    let (u, x) = reverse_row_insert(&t, corner).unwrap();
                    let w = u
                        .row_reading_word(n)
                        .concat(&Word::new(vec![x], n).unwrap());
                    assert_eq!(chi_charge_delta(&w, &r).unwrap(), 1, "at {w}");
                }
            }
        }
    }

    #[test]
    fn charge_constant_on_knuth_classes() {
        use crate::rsk::knuth_neighbors;
        for spec in ["2x1,1x2", "2x2,1x1"] {
            let r: RectSequence = spec.parse().unwrap();
            for w in crate::lr::enumerate_r_lr_words(&r) {
                let c = charge_explicit_unchecked(&w, &r).unwrap();
                for v in knuth_neighbors(&w) {
                    assert_eq!(charge_explicit_unchecked(&v, &r).unwrap(), c, "{w} ~ {v}");
                }
            }
        }
    }

    #[test]
    fn d_statistic_invariant_under_adjacent_switch() {
        for spec in ["2x1,1x2", "2x1,1x1,1x1", "2x2,2x1,1x1"] {
            let r: RectSequence = spec.parse().unwrap();
            for w in crate::lr::enumerate_r_lr_words(&r).into_iter().take(80) {
                for i in 1..r.len() {
                    let moved = tau_unchecked(i, &w, &r);
                    assert_eq!(
                        d_statistic(i, &w, &r).unwrap(),
                        d_statistic(i, &moved, &r.swapped(i)).unwrap(),
                        "R = {spec}, w = {w}, i = {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn charge_of_empty_sequence() {
        let r = RectSequence::empty();
        let empty = Tableau::empty();
        assert_eq!(charge_axiomatic(&empty, &r).unwrap().value, 0);
        assert_eq!(charge_of_tableau(&empty, &r).unwrap().value, 0);
    }

    #[test]
    fn classical_charge_examples() {
        // Yamanouchi tableaux have charge zero.
        for lam in Partition::all(5, 5) {
            let key = crate::tableau::key_tableau(&lam.to_weight(lam.len())).unwrap();
            assert_eq!(classical_charge(&key).unwrap(), 0);
        }
        assert_eq!(classical_charge_word(&word("321", 3)).unwrap(), 0);
        assert_eq!(classical_charge_word(&word("213", 3)).unwrap(), 1);
        assert_eq!(classical_charge_word(&word("312", 3)).unwrap(), 2);
        assert_eq!(classical_charge_word(&word("112", 2)).unwrap(), 1);
        assert!(classical_charge_word(&word("22", 2)).is_err());
    }
}
