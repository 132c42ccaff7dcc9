//! Exact computation of the Poincare polynomials `K_{lambda,eta,gamma}(q)`
//! via the q-analogue Kostant partition function, and the generalized Morris
//! recurrence checker.
//!
//! The alternant definition unwinds to
//! `K_{lambda,eta,gamma}(q) = sum_{w in S_n} sign(w) P_q(w(lambda+rho) - rho - gamma)`
//! where `P_q` counts expressions of a weight as a nonnegative combination of
//! the roots `e_i - e_j` above the eta-block diagonal, graded by the total
//! number of roots used.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::lr::RectSequence;
use crate::shape::{Partition, Weight};
use crate::tableau::kostka_number;
use crate::{Error, Result};

/// Hard cap on the alternant rank: `S_n` iteration beyond this is refused.
pub const DEFAULT_N_CAP: usize = 8;

/// A polynomial in `q` with integer coefficients, trailing zeros normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_assign(&mut self, other: &QPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Adds `sign * q^shift * other`.
    pub fn add_scaled(&mut self, other: &QPolynomial, shift: usize, sign: i64) {
        if other.is_zero() || sign == 0 {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, 0);
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += sign * c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Multiplies by `q`.
    pub fn shift_up(&self) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(|&c| c < 0)
    }
}

impl std::fmt::Display for QPolynomial {
    /// Text form like `1 + 2q^2 + q^3`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match (a, k) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{k}")?,
                (_, 1) => write!(f, "{a}q")?,
                (_, _) => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// The positions above the block diagonal of `eta`: pairs `(i, j)`, 1-based,
/// whose blocks satisfy `block(i) < block(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pairs: Vec<(usize, usize)>,
    n: usize,
}

impl RootSet {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn roots_of(eta: &[u32]) -> RootSet {
    let n: usize = eta.iter().map(|&e| e as usize).sum();
    let mut block = vec![0usize; n + 1];
    let mut hi = 0usize;
    for (b, &e) in eta.iter().enumerate() {
        for _ in 0..e {
            hi += 1;
            block[hi] = b;
        }
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if block[i] < block[j] {
                pairs.push((i, j));
            }
        }
    }
    RootSet { pairs, n }
}

/// Memoized evaluator for the q-Kostant partition function over a fixed root
/// set. The memo is shared across all alternant terms of one computation.
pub struct QKostant {
    roots: RootSet,
    memo: HashMap<(usize, Vec<i32>), QPolynomial>,
}

impl QKostant {
    pub fn new(roots: RootSet) -> Self {
        QKostant {
            roots,
            memo: HashMap::new(),
        }
    }

    /// `P_q(v)`: sum of `q^{sum m_ij}` over nonnegative integer solutions of
    /// `sum m_ij (e_i - e_j) = v`.
    pub fn eval(&mut self, v: &[i32]) -> QPolynomial {
        debug_assert_eq!(v.len(), self.roots.n);
        if !feasible(v) {
            return QPolynomial::zero();
        }
        self.eval_rec(self.roots.pairs.len(), v.to_vec())
    }

    fn eval_rec(&mut self, k: usize, v: Vec<i32>) -> QPolynomial {
        if v.iter().all(|&x| x == 0) {
            return QPolynomial::one();
        }
        if k == 0 {
            return QPolynomial::zero();
        }
        if !feasible(&v) {
            return QPolynomial::zero();
        }
        let key = (k, v);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (_, v) = (&key.0, &key.1);
        // Use root k either zero times, or at least once.
        let skip = self.eval_rec(k - 1, v.clone());
        let (i, j) = self.roots.pairs[k - 1];
        let mut reduced = v.clone();
        reduced[i - 1] -= 1;
        reduced[j - 1] += 1;
        let take = self.eval_rec(k, reduced);
        let mut result = skip;
        result.add_scaled(&take, 1, 1);
        self.memo.insert(key, result.clone());
        result
    }
}

/// Roots only move weight toward earlier coordinates, so every prefix sum of
/// a representable vector is nonnegative and the total is zero.
fn feasible(v: &[i32]) -> bool {
    let mut acc = 0i64;
    for &x in v {
        acc += x as i64;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

/// One-shot q-Kostant partition evaluation.
pub fn q_kostant_partition(v: &Weight, roots: &RootSet) -> QPolynomial {
    let mut ctx = QKostant::new(roots.clone());
    let vv: Vec<i32> = (1..=roots.n).map(|i| v.entry(i) as i32).collect();
    ctx.eval(&vv)
}

/// Iterates over all permutations of `0..n` in lexicographic order together
/// with their signs.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        f(&perm, if inv.is_multiple_of(2) { 1 } else { -1 });
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Alternant evaluator for a fixed pair `(eta, gamma)`: the q-Kostant memo is
/// shared across every shape evaluated through it.
pub struct KPolyEvaluator {
    gamma: Weight,
    n: usize,
    ctx: QKostant,
}

impl KPolyEvaluator {
    pub fn new(eta: &[u32], gamma: &Weight) -> Result<Self> {
        Self::with_cap(eta, gamma, DEFAULT_N_CAP)
    }

    pub fn with_cap(eta: &[u32], gamma: &Weight, cap: usize) -> Result<Self> {
        let n: usize = eta.iter().map(|&e| e as usize).sum();
        if n > cap {
            return Err(Error::BoundExceeded(format!(
                "alternant rank n = {n} exceeds cap {cap}"
            )));
        }
        if gamma.len() != n {
            return Err(Error::InvalidInput(format!(
                "gamma has length {}, expected n = {n}",
                gamma.len()
            )));
        }
        Ok(KPolyEvaluator {
            gamma: gamma.clone(),
            n,
            ctx: QKostant::new(roots_of(eta)),
        })
    }

    pub fn eval(&mut self, lambda: &Partition) -> QPolynomial {
        let n = self.n;
        if lambda.len() > n || lambda.size() as i64 != self.gamma.sum() {
            return QPolynomial::zero();
        }
        let lam_rho: Vec<i64> = (0..n)
            .map(|i| lambda.part(i + 1) as i64 + (n - 1 - i) as i64)
            .collect();
        let mut acc = QPolynomial::zero();
        let mut v = vec![0i32; n];
        let gamma = self.gamma.clone();
        let ctx = &mut self.ctx;
        for_each_permutation(n, |perm, sign| {
            for (i, &p) in perm.iter().enumerate() {
                v[i] = (lam_rho[p] - (n - 1 - i) as i64 - gamma.entry(i + 1)) as i32;
            }
            if !feasible(&v) {
                return;
            }
            let term = ctx.eval(&v);
            acc.add_scaled(&term, 0, sign);
        });
        acc
    }
}

/// `K_{lambda,eta,gamma}(q)` by the alternant over the q-Kostant partition
/// function, with the default cap on `n`.
pub fn k_poly(lambda: &Partition, eta: &[u32], gamma: &Weight) -> Result<QPolynomial> {
    k_poly_with_cap(lambda, eta, gamma, DEFAULT_N_CAP)
}

pub fn k_poly_with_cap(
    lambda: &Partition,
    eta: &[u32],
    gamma: &Weight,
    cap: usize,
) -> Result<QPolynomial> {
    Ok(KPolyEvaluator::with_cap(eta, gamma, cap)?.eval(lambda))
}

/// `K_{lambda;R}(q) = K_{lambda, eta(R), gamma(R)}(q)`.
pub fn k_poly_of_rects(lambda: &Partition, r: &RectSequence) -> Result<QPolynomial> {
    if r.is_empty() {
        return Ok(if lambda.is_empty() {
            QPolynomial::one()
        } else {
            QPolynomial::zero()
        });
    }
    k_poly(lambda, &r.eta(), &r.gamma())
}

/// Right-hand side of the generalized Morris recurrence:
///
/// `sum_{w} sign(w) q^{|alpha(w)|-|R_1|} sum_nu K_{nu,(alpha(w)-R_1,beta(w))} K_{nu;R^}(q)`
///
/// with `xi(w) = w^{-1}(lambda+rho) - rho`, `alpha(w)` its first `eta_1`
/// parts and `beta(w)` the rest. Terms whose content acquires a negative
/// entry are dropped: their inner Kostka numbers vanish, which in particular
/// covers every term with a negative q-exponent.
pub fn morris_rhs(lambda: &Partition, r: &RectSequence) -> Result<QPolynomial> {
    if r.is_empty() {
        return Err(Error::InvalidInput("morris recurrence needs t >= 1".into()));
    }
    if !r.is_dominant() {
        return Err(Error::InvalidInput("morris recurrence needs dominant R".into()));
    }
    let n = r.n();
    if n > DEFAULT_N_CAP {
        return Err(Error::BoundExceeded(format!(
            "alternant rank n = {n} exceeds cap {DEFAULT_N_CAP}"
        )));
    }
    if lambda.len() > n {
        return Ok(QPolynomial::zero());
    }
    let m = r.rects()[0].rows as usize;
    let mu1 = r.rects()[0].cols as i64;
    let hat = r.hat();
    let hat_eta = hat.eta();
    let hat_gamma = hat.gamma();
    let size_hat = lambda.size() as i64 - mu1 * m as i64;
    if size_hat < 0 {
        return Ok(QPolynomial::zero());
    }
    let mut k_hat: BTreeMap<Partition, QPolynomial> = BTreeMap::new();
    let nus = Partition::all(size_hat as u64, n - m);
    for nu in &nus {
        let val = if hat.is_empty() {
            if nu.is_empty() {
                QPolynomial::one()
            } else {
                QPolynomial::zero()
            }
        } else {
            k_poly(nu, &hat_eta, &hat_gamma)?
        };
        k_hat.insert(nu.clone(), val);
    }
    let lam_rho: Vec<i64> = (0..n)
        .map(|i| lambda.part(i + 1) as i64 + (n - 1 - i) as i64)
        .collect();
    let mut kostka_memo: HashMap<(Partition, Vec<i64>), u64> = HashMap::new();
    let mut acc = QPolynomial::zero();
    for_each_permutation(n, |perm, sign| {
        let xi: Vec<i64> = (0..n)
            .map(|i| lam_rho[perm[i]] - (n - 1 - i) as i64)
            .collect();
        let mut content: Vec<i64> = Vec::with_capacity(n);
        content.extend(xi[..m].iter().map(|&a| a - mu1));
        content.extend_from_slice(&xi[m..]);
        if content.iter().any(|&c| c < 0) {
            return;
        }
        let exponent: i64 = content[..m].iter().sum();
        debug_assert!(exponent >= 0);
        // Kostka numbers are symmetric in the content, so memoize on the
        // sorted content.
        let mut sorted = content.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut inner = QPolynomial::zero();
        for nu in &nus {
            let k = *kostka_memo
                .entry((nu.clone(), sorted.clone()))
                .or_insert_with(|| kostka_number(nu, &Weight::new(sorted.clone())));
            if k == 0 {
                continue;
            }
            inner.add_scaled(&k_hat[nu], 0, k as i64);
        }
        acc.add_scaled(&inner, exponent as usize, sign);
    });
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::Rect;

    #[test]
    fn roots_examples() {
        assert_eq!(roots_of(&[1, 1, 1]).pairs(), &[(1, 2), (1, 3), (2, 3)]);
        assert!(roots_of(&[4]).is_empty());
        let r = roots_of(&[2, 2, 3]);
        assert_eq!(r.len(), 16);
        assert!(r.pairs().contains(&(1, 3)));
        assert!(r.pairs().contains(&(4, 7)));
        assert!(!r.pairs().contains(&(3, 4)));
        assert!(!r.pairs().contains(&(5, 6)));
    }

    #[test]
    fn q_kostant_base_cases() {
        let roots = roots_of(&[1, 1, 1]);
        assert_eq!(
            q_kostant_partition(&Weight::new(vec![0, 0, 0]), &roots),
            QPolynomial::one()
        );
        assert_eq!(
            q_kostant_partition(&Weight::new(vec![1, -1, 0]), &roots),
            QPolynomial::monomial(1)
        );
        assert_eq!(
            q_kostant_partition(&Weight::new(vec![-1, 1, 0]), &roots),
            QPolynomial::zero()
        );
        assert_eq!(
            q_kostant_partition(&Weight::new(vec![1, 0, 0]), &roots),
            QPolynomial::zero()
        );
        // (1,0,-1) = (e1-e3) or (e1-e2)+(e2-e3): q + q^2
        assert_eq!(
            q_kostant_partition(&Weight::new(vec![1, 0, -1]), &roots),
            QPolynomial::from_coeffs(vec![0, 1, 1])
        );
    }

    #[test]
    fn k_poly_single_rectangle() {
        // t = 1: no roots, only the identity contributes and only at lambda = gamma.
        let lam = Partition::new(vec![2, 2, 2]).unwrap();
        let gamma = Weight::new(vec![2, 2, 2]);
        assert_eq!(k_poly(&lam, &[3], &gamma).unwrap(), QPolynomial::one());
        let other = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(k_poly(&other, &[3], &gamma).unwrap(), QPolynomial::zero());
    }

    #[test]
    fn kostka_foulkes_small() {
        // K_{(2,1),(1,1,1)}(q) = q + q^2
        let lam = Partition::new(vec![2, 1]).unwrap();
        let mu = Weight::new(vec![1, 1, 1]);
        assert_eq!(
            k_poly(&lam, &[1, 1, 1], &mu).unwrap(),
            QPolynomial::from_coeffs(vec![0, 1, 1])
        );
        // K_{(2,1),(2,1)}(q) = 1, K_{(3),(2,1)}(q) = q
        let mu21 = Weight::new(vec![2, 1]);
        let lam21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            k_poly(&lam21, &[1, 1], &mu21).unwrap(),
            QPolynomial::one()
        );
        // gamma must already have length n.
        assert!(matches!(
            k_poly(&lam21, &[1, 1, 1], &mu21),
            Err(Error::InvalidInput(_))
        ));
        let lam3 = Partition::new(vec![3]).unwrap();
        assert_eq!(
            k_poly(&lam3, &[1, 1], &mu21).unwrap(),
            QPolynomial::monomial(1)
        );
    }

    #[test]
    fn k_poly_at_one_is_kostka() {
        // Kostka specialization at q = 1, all |mu| <= 5.
        for total in 1..=5u64 {
            for mu in Partition::all(total, total as usize) {
                let n = mu.len();
                let eta = vec![1u32; n];
                let gamma = mu.to_weight(n);
                for lam in Partition::all(total, n) {
                    let poly = k_poly(&lam, &eta, &gamma).unwrap();
                    assert_eq!(
                        poly.eval_at_one(),
                        kostka_number(&lam, &gamma) as i64,
                        "lambda = {lam}, mu = {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_foulkes_table_n4() {
        // Textbook values for content (1,1,1,1).
        let mu = Weight::new(vec![1, 1, 1, 1]);
        let eta = [1u32, 1, 1, 1];
        let cases: [(&[u32], &[i64]); 5] = [
            (&[4], &[0, 0, 0, 0, 0, 0, 1]),
            (&[3, 1], &[0, 0, 0, 1, 1, 1]),
            (&[2, 2], &[0, 0, 1, 0, 1]),
            (&[2, 1, 1], &[0, 1, 1, 1]),
            (&[1, 1, 1, 1], &[1]),
        ];
        for (shape, coeffs) in cases {
            let lam = Partition::new(shape.to_vec()).unwrap();
            assert_eq!(
                k_poly(&lam, &eta, &mu).unwrap(),
                QPolynomial::from_coeffs(coeffs.to_vec()),
                "lambda = {lam}"
            );
        }
    }

    #[test]
    fn k_poly_cap() {
        let lam = Partition::new(vec![1]).unwrap();
        let eta = vec![1u32; 9];
        let gamma = Weight::zeros(9);
        assert!(matches!(
            k_poly(&lam, &eta, &gamma),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn morris_t1_degenerate() {
        let r = RectSequence::new(vec![Rect::new(2, 3).unwrap()]).unwrap();
        let lam = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(morris_rhs(&lam, &r).unwrap(), QPolynomial::one());
        let other = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(morris_rhs(&other, &r).unwrap(), QPolynomial::zero());
    }

    #[test]
    fn morris_matches_k_poly_small() {
        let cases = ["2x1,1x1", "2x1,2x1", "2x2,1x1", "1x2,1x1", "3x1,2x1,1x1"];
        for s in cases {
            let r: RectSequence = s.parse().unwrap();
            for lam in r.shapes() {
                let lhs = k_poly_of_rects(&lam, &r).unwrap();
                let rhs = morris_rhs(&lam, &r).unwrap();
                assert_eq!(lhs, rhs, "R = {s}, lambda = {lam}");
            }
        }
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(
            QPolynomial::from_coeffs(vec![1, 0, 2, 1]).to_string(),
            "1 + 2q^2 + q^3"
        );
        assert_eq!(QPolynomial::from_coeffs(vec![0, 1]).to_string(), "q");
        assert_eq!(
            QPolynomial::from_coeffs(vec![-1, 3]).to_string(),
            "-1 + 3q"
        );
        let js = serde_json::to_string(&QPolynomial::from_coeffs(vec![1, 0, 2, 1])).unwrap();
        assert_eq!(js, "[1,0,2,1]");
    }
}
