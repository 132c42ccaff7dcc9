//! Runnable verification suites: structural invariants of the switching
//! action, the rotation, the cocyclage poset, the charge statistics, the
//! charge/Poincare identity, and the Morris recurrence, each over a bounded
//! family of rectangle sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclage::{
    build_full_poset, charge_explicit_unchecked, chi_charge_delta, classical_charge,
};
use crate::lr::{
    chi, enumerate_all_lrt, enumerate_lrt, enumerate_r_lr_words, is_r_lr, tau_unchecked, Rect,
    RectSequence,
};
use crate::poincare::{k_poly, KPolyEvaluator, QPolynomial};
use crate::rsk::{inverse_rs, rs_pair};
use crate::shape::Partition;
use crate::tableau::{enumerate_ssyt, kostka_number, Tableau};

/// Size bounds for a verification suite.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_t: usize,
    pub max_n: usize,
    pub max_cells: u64,
}

impl Default for Bounds {
    /// The desk-scale suite: every dominant `R` with `t <= 3`, `n <= 6`,
    /// `N <= 10`.
    fn default() -> Self {
        Bounds {
            max_t: 3,
            max_n: 6,
            max_cells: 10,
        }
    }
}

/// Outcome of one suite: number of elementary checks performed and the first
/// counterexample, if any.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn merge(suite: &'static str, parts: Vec<(u64, Option<String>)>) -> SuiteResult {
        let mut checks = 0;
        let mut failure = None;
        for (c, f) in parts {
            checks += c;
            if failure.is_none() {
                failure = f;
            }
        }
        SuiteResult {
            suite,
            checks,
            failure,
        }
    }
}

impl std::fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.suite, self.checks),
            Some(msg) => write!(f, "FAIL {}: {msg}", self.suite),
        }
    }
}

/// All rectangle sequences with `min_t <= t <= max_t`, `n <= max_n`, and
/// `N <= max_cells`, optionally restricted to dominant ones. Deterministic
/// order.
pub fn rect_sequences(
    min_t: usize,
    max_t: usize,
    max_n: usize,
    max_cells: u64,
    dominant_only: bool,
) -> Vec<RectSequence> {
    let mut out = Vec::new();
    let mut cur: Vec<Rect> = Vec::new();
    fn rec(
        cur: &mut Vec<Rect>,
        min_t: usize,
        max_t: usize,
        n_left: usize,
        cells_left: u64,
        dominant_only: bool,
        out: &mut Vec<RectSequence>,
    ) {
        if cur.len() >= min_t {
            out.push(RectSequence::new(cur.clone()).expect("bounded"));
        }
        if cur.len() == max_t {
            return;
        }
        let max_cols = if dominant_only {
            cur.last().map_or(u64::MAX, |r| r.cols as u64)
        } else {
            u64::MAX
        };
        for rows in 1..=n_left {
            let max_c = (cells_left / rows as u64).min(max_cols);
            for cols in 1..=max_c {
                cur.push(Rect::new(cols as u32, rows as u32).expect("positive"));
                rec(
                    cur,
                    min_t,
                    max_t,
                    n_left - rows,
                    cells_left - cols * rows as u64,
                    dominant_only,
                    out,
                );
                cur.pop();
            }
        }
    }
    rec(
        &mut cur,
        min_t.max(1),
        max_t,
        max_n,
        max_cells,
        dominant_only,
        &mut out,
    );
    out
}

/// The default dominant suite for the given bounds.
pub fn dominant_suite(bounds: &Bounds) -> Vec<RectSequence> {
    rect_sequences(1, bounds.max_t, bounds.max_n, bounds.max_cells, true)
}

/// Splits the per-sequence work across `jobs` threads, preserving order.
fn run_over_rects<T: Send>(
    rects: &[RectSequence],
    jobs: usize,
    f: impl Fn(usize, &RectSequence) -> T + Sync,
) -> Vec<T> {
    let jobs = jobs.max(1);
    if jobs == 1 || rects.len() <= 1 {
        return rects.iter().enumerate().map(|(i, r)| f(i, r)).collect();
    }
    let mut results: Vec<Option<T>> = (0..rects.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<&mut Option<T>>> =
        results.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(rects.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= rects.len() {
                    break;
                }
                let value = f(i, &rects[i]);
                **slots[i].lock().unwrap() = Some(value);
            });
        }
    });
    drop(slots);
    results.into_iter().map(|v| v.expect("filled")).collect()
}

fn random_standard_tableau(shape: &Partition, rng: &mut ChaCha8Rng) -> Tableau {
    let size = shape.size() as usize;
    let mut rows: Vec<Vec<u8>> = (1..=shape.len())
        .map(|r| vec![0u8; shape.part(r) as usize])
        .collect();
    let mut cur = shape.clone();
    for k in (1..=size).rev() {
        let corners = cur.corners();
        let (r, c) = corners[rng.gen_range(0..corners.len())];
        rows[r - 1][c - 1] = k as u8;
        cur = cur.remove_corner(r).expect("corner");
    }
    Tableau::from_rows(rows.into_iter().filter(|r| !r.is_empty()).collect::<Vec<_>>())
        .expect("standard filling")
}

/// Switching-action invariants, exhaustive over `W(R)` for every `R` with the
/// exact rectangle count `t` and at most `max_cells` cells: involutivity, far
/// commutation, the braid relation, recording-tableau and shape preservation,
/// and the identity on equal adjacent rectangles.
pub fn verify_action(t: usize, max_cells: u64, jobs: usize) -> SuiteResult {
    let list = rect_sequences(t, t, max_cells as usize, max_cells, false);
    let parts = run_over_rects(&list, jobs, |_, r| action_checks_for(r));
    SuiteResult::merge("action", parts)
}

fn action_checks_for(r: &RectSequence) -> (u64, Option<String>) {
    let t = r.len();
    let mut checks = 0u64;
    for w in enumerate_r_lr_words(r) {
        let pair = rs_pair(&w);
        for p in 1..t {
            let rp = r.swapped(p);
            let wp = tau_unchecked(p, &w, r);
            let moved = rs_pair(&wp);
            checks += 5;
            if !is_r_lr(&wp, &rp) {
                return (checks, Some(format!("tau_{p} leaves W(R') at {w} for R = {r}")));
            }
            // Letters outside A_p and A_{p+1} keep their positions and values.
            let (lo, _) = r.alphabet_interval(p);
            let (_, hi) = r.alphabet_interval(p + 1);
            let outside_fixed = w
                .letters()
                .iter()
                .zip(wp.letters())
                .all(|(&a, &b)| ((lo..=hi).contains(&a) && (lo..=hi).contains(&b)) || a == b);
            if !outside_fixed {
                return (checks, Some(format!("A6 fails at {w}, p = {p}, R = {r}")));
            }
            if moved.q != pair.q {
                return (checks, Some(format!("A4 fails at {w}, p = {p}, R = {r}")));
            }
            if moved.p.outer_shape() != pair.p.outer_shape() {
                return (checks, Some(format!("A1 fails at {w}, p = {p}, R = {r}")));
            }
            if tau_unchecked(p, &wp, &rp) != w {
                return (checks, Some(format!("involutivity fails at {w}, p = {p}, R = {r}")));
            }
            if r.rects()[p - 1] == r.rects()[p] && wp != w {
                return (checks, Some(format!("A7 fails at {w}, p = {p}, R = {r}")));
            }
        }
        // Braid relation on adjacent generator pairs.
        for p in 1..t.saturating_sub(1) {
            let lhs = {
                let w1 = tau_unchecked(p, &w, r);
                let r1 = r.swapped(p);
                let w2 = tau_unchecked(p + 1, &w1, &r1);
                let r2 = r1.swapped(p + 1);
                tau_unchecked(p, &w2, &r2)
            };
            let rhs = {
                let w1 = tau_unchecked(p + 1, &w, r);
                let r1 = r.swapped(p + 1);
                let w2 = tau_unchecked(p, &w1, &r1);
                let r2 = r1.swapped(p);
                tau_unchecked(p + 1, &w2, &r2)
            };
            checks += 1;
            if lhs != rhs {
                return (checks, Some(format!("braid fails at {w}, p = {p}, R = {r}")));
            }
        }
        // Far commutation needs t >= 4.
        for p in 1..t {
            for q in p + 2..t {
                let lhs = {
                    let w1 = tau_unchecked(p, &w, r);
                    tau_unchecked(q, &w1, &r.swapped(p))
                };
                let rhs = {
                    let w1 = tau_unchecked(q, &w, r);
                    tau_unchecked(p, &w1, &r.swapped(q))
                };
                checks += 1;
                if lhs != rhs {
                    return (
                        checks,
                        Some(format!("far commutation fails at {w}, ({p},{q}), R = {r}")),
                    );
                }
            }
        }
    }
    (checks, None)
}

/// Rotation invariants on sampled words: `chi_R` preserves `W(R)`, has order
/// dividing the length, commutes with every `tau_p`, and satisfies the charge
/// delta identity.
pub fn verify_chi(bounds: &Bounds, seed: u64, samples: usize, jobs: usize) -> SuiteResult {
    let list = dominant_suite(bounds);
    let parts = run_over_rects(&list, jobs, |idx, r| {
        chi_checks_for(r, seed.wrapping_add(idx as u64), samples)
    });
    SuiteResult::merge("chi", parts)
}

fn chi_checks_for(r: &RectSequence, seed: u64, samples: usize) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tabs = enumerate_all_lrt(r);
    let n = r.n() as u8;
    let size = r.total_cells() as usize;
    let mut checks = 0u64;
    for _ in 0..samples {
        let t = &tabs[rng.gen_range(0..tabs.len())];
        let q = random_standard_tableau(&t.outer_shape(), &mut rng);
        let w = inverse_rs(t, &q, n).expect("valid pair");
        // chi^N = identity, staying inside W(R) the whole way.
        let mut v = w.clone();
        for step in 0..size {
            v = match chi(&v, r) {
                Ok(v) => v,
                Err(e) => return (checks, Some(format!("chi failed at {w}, R = {r}: {e}"))),
            };
            checks += 1;
            if !is_r_lr(&v, r) {
                return (
                    checks,
                    Some(format!("chi^{} leaves W(R) at {w}, R = {r}", step + 1)),
                );
            }
        }
        if v != w {
            return (checks, Some(format!("chi^N != id at {w}, R = {r}")));
        }
        // chi commutes with every switch.
        let cw = chi(&w, r).expect("nonempty");
        for p in 1..r.len() {
            let lhs = tau_unchecked(p, &cw, r);
            let rhs = chi(&tau_unchecked(p, &w, r), &r.swapped(p)).expect("nonempty");
            checks += 1;
            if lhs != rhs {
                return (
                    checks,
                    Some(format!("chi does not commute with tau_{p} at {w}, R = {r}")),
                );
            }
        }
        // Charge delta identity (self-checking).
        checks += 1;
        if let Err(e) = chi_charge_delta(&w, r) {
            return (checks, Some(format!("charge delta fails at {w}, R = {r}: {e}")));
        }
    }
    (checks, None)
}

/// Poset invariants: gradedness (longest equals shortest descending path,
/// checked during construction), minimality iff exactly `a` columns, a unique
/// minimum when all rectangles share the column count, and the charge step
/// across covers.
pub fn verify_poset(bounds: &Bounds, jobs: usize) -> SuiteResult {
    let list = dominant_suite(bounds);
    let parts = run_over_rects(&list, jobs, |_, r| poset_checks_for(r));
    SuiteResult::merge("poset", parts)
}

fn poset_checks_for(r: &RectSequence) -> (u64, Option<String>) {
    let mut checks = 0u64;
    let poset = match build_full_poset(r) {
        Ok(p) => p,
        Err(e) => return (0, Some(format!("poset build fails for R = {r}: {e}"))),
    };
    let a = r.max_cols();
    let n = r.n() as u8;
    for i in 0..poset.node_count() {
        checks += 1;
        let cols = poset.nodes[i].shape.first().copied().unwrap_or(0);
        if poset.is_minimal(i) != (cols == a) {
            return (
                checks,
                Some(format!(
                    "minimality mismatch at {} for R = {r}",
                    poset.nodes[i].word
                )),
            );
        }
        // Minimal tableaux with mu_1 maximal split as Y_1 atop an LR tableau
        // for the truncated sequence.
        if poset.is_minimal(i) && !r.is_empty() && r.rects()[0].cols == a {
            checks += 1;
            let t = &poset.nodes[i].tableau;
            let eta1 = r.rects()[0].rows as usize;
            let top = Tableau::from_rows(t.rows()[..eta1.min(t.rows().len())].to_vec());
            if top.as_ref() != Ok(&r.yamanouchi(1)) {
                return (
                    checks,
                    Some(format!("minimal node top is not Y_1 for R = {r}")),
                );
            }
            let rest = Tableau::from_rows(t.rows()[eta1..].to_vec())
                .map(|t| t.shift_letters(-(eta1 as i16)));
            let hat = r.hat();
            let ok = match rest {
                Ok(rest) => is_r_lr(&rest.row_reading_word(hat.n() as u8), &hat),
                Err(_) => false,
            };
            if !ok {
                return (
                    checks,
                    Some(format!("minimal node remainder not LR for R-hat, R = {r}")),
                );
            }
        }
    }
    // tau_p is an isomorphism of graded posets onto the poset of the swapped
    // sequence: node ranks and cover edges transport exactly.
    for p in 1..r.len() {
        let swapped = r.swapped(p);
        let other = match build_full_poset(&swapped) {
            Ok(p) => p,
            Err(e) => return (checks, Some(format!("poset build fails for {swapped}: {e}"))),
        };
        let mut image = Vec::with_capacity(poset.node_count());
        for node in &poset.nodes {
            checks += 1;
            let moved = match crate::lr::tau_tableau(p, &node.tableau, r) {
                Ok(t) => t,
                Err(e) => return (checks, Some(format!("tau_{p} fails on a node of {r}: {e}"))),
            };
            let Some(j) = other.find(&moved) else {
                return (
                    checks,
                    Some(format!("tau_{p} image missing from poset of {swapped}")),
                );
            };
            if other.nodes[j].rank != node.rank {
                return (
                    checks,
                    Some(format!("tau_{p} changes rank at {} for R = {r}", node.word)),
                );
            }
            image.push(j);
        }
        let mut lhs: Vec<(usize, usize)> = poset
            .edges
            .iter()
            .map(|e| (image[e.from], image[e.to]))
            .collect();
        let mut rhs: Vec<(usize, usize)> = other.edges.iter().map(|e| (e.from, e.to)).collect();
        lhs.sort_unstable();
        lhs.dedup();
        rhs.sort_unstable();
        rhs.dedup();
        checks += 1;
        if lhs != rhs {
            return (
                checks,
                Some(format!("tau_{p} does not transport the cover edges of {r}")),
            );
        }
    }
    if r.rects().iter().all(|x| x.cols == a) {
        checks += 1;
        let minima = (0..poset.node_count())
            .filter(|&i| poset.is_minimal(i))
            .count();
        if minima != 1 {
            return (checks, Some(format!("{minima} minima for R = {r}")));
        }
    }
    let charges: Vec<u64> = poset
        .nodes
        .iter()
        .map(|node| {
            charge_explicit_unchecked(&node.tableau.row_reading_word(n), r).expect("LR word")
        })
        .collect();
    for e in &poset.edges {
        checks += 2;
        if poset.nodes[e.from].rank != poset.nodes[e.to].rank + 1 {
            return (
                checks,
                Some(format!("rank step is not 1 across a cover for R = {r}")),
            );
        }
        if charges[e.from] != charges[e.to] + 1 {
            return (
                checks,
                Some(format!(
                    "charge step across cover {} -> {} is not 1 for R = {r}",
                    poset.nodes[e.from].word, poset.nodes[e.to].word
                )),
            );
        }
    }
    (checks, None)
}

/// Charge regressions: the explicit statistic equals the classical charge in
/// the Kostka case, the Kostka-Foulkes polynomial counts tableaux at `q = 1`,
/// and the axiomatic recursion equals the explicit average on every poset
/// node of the suite.
pub fn verify_charge(bounds: &Bounds, jobs: usize) -> SuiteResult {
    let mut parts = Vec::new();
    let kostka_cap = bounds.max_cells.min(6);
    parts.push(kostka_regression(kostka_cap));
    let list = dominant_suite(bounds);
    parts.extend(run_over_rects(&list, jobs, |_, r| axiomatic_checks_for(r)));
    SuiteResult::merge("charge", parts)
}

/// Just the Kostka-case regression: on every column-strict tableau of
/// partition content with at most `max_size` cells, the generalized charge
/// equals the classical charge, and `K_{lambda,mu}(q)` both counts the
/// tableaux at `q = 1` and enumerates them by charge.
pub fn verify_kostka_case(max_size: u64) -> SuiteResult {
    let part = kostka_regression(max_size);
    SuiteResult::merge("kostka", vec![part])
}

fn kostka_regression(max_size: u64) -> (u64, Option<String>) {
    let mut checks = 0u64;
    for total in 1..=max_size {
        for mu in Partition::all(total, total as usize) {
            let n = mu.len();
            let rects = RectSequence::new(
                mu.parts()
                    .iter()
                    .map(|&m| Rect::new(m, 1).expect("positive"))
                    .collect::<Vec<_>>(),
            )
            .expect("small");
            let gamma = mu.to_weight(n);
            let eta = vec![1u32; n];
            for lam in Partition::all(total, n) {
                let kp = match k_poly(&lam, &eta, &gamma) {
                    Ok(p) => p,
                    Err(e) => return (checks, Some(format!("k_poly fails: {e}"))),
                };
                checks += 1;
                if kp.eval_at_one() != kostka_number(&lam, &gamma) as i64 {
                    return (
                        checks,
                        Some(format!("K({lam},{mu})(1) != Kostka number")),
                    );
                }
                let mut by_charge = QPolynomial::zero();
                for t in enumerate_ssyt(&lam, &gamma) {
                    let word = t.row_reading_word(n as u8);
                    let classical = match classical_charge(&t) {
                        Ok(c) => c,
                        Err(e) => return (checks, Some(format!("classical charge fails: {e}"))),
                    };
                    let general = match charge_explicit_unchecked(&word, &rects) {
                        Ok(c) => c,
                        Err(e) => return (checks, Some(format!("charge fails: {e}"))),
                    };
                    checks += 1;
                    if classical != general {
                        return (
                            checks,
                            Some(format!(
                                "charge mismatch on {word} of content {mu}: classical {classical}, general {general}"
                            )),
                        );
                    }
                    by_charge.add_scaled(&QPolynomial::monomial(general as usize), 0, 1);
                }
                checks += 1;
                if by_charge != kp {
                    return (
                        checks,
                        Some(format!(
                            "charge enumeration differs from K({lam},{mu}): {by_charge} vs {kp}"
                        )),
                    );
                }
            }
        }
    }
    (checks, None)
}

fn axiomatic_checks_for(r: &RectSequence) -> (u64, Option<String>) {
    let mut checks = 0u64;
    for lam in r.shapes() {
        for t in enumerate_lrt(&lam, r) {
            let explicit = match crate::cyclage::charge_of_tableau(&t, r) {
                Ok(c) => c.value,
                Err(e) => return (checks, Some(format!("explicit charge fails: {e}"))),
            };
            let axiomatic = match crate::cyclage::charge_axiomatic(&t, r) {
                Ok(c) => c.value,
                Err(e) => return (checks, Some(format!("axiomatic charge fails: {e}"))),
            };
            checks += 1;
            if explicit != axiomatic {
                return (
                    checks,
                    Some(format!(
                        "axiomatic {axiomatic} != explicit {explicit} at shape {lam}, R = {r}"
                    )),
                );
            }
        }
    }
    (checks, None)
}

/// The central identity: for every dominant `R` in the suite and every shape,
/// the charge enumeration of `LRT(lambda; R)` equals `K_{lambda;R}(q)`
/// exactly. Also flags negative coefficients, which the identity forbids.
pub fn verify_main(bounds: &Bounds, jobs: usize) -> SuiteResult {
    let list = dominant_suite(bounds);
    let parts = run_over_rects(&list, jobs, |_, r| main_checks_for(r));
    SuiteResult::merge("main", parts)
}

pub(crate) fn main_checks_for(r: &RectSequence) -> (u64, Option<String>) {
    let mut checks = 0u64;
    let mut eval = match KPolyEvaluator::new(&r.eta(), &r.gamma()) {
        Ok(e) => e,
        Err(e) => return (0, Some(format!("evaluator fails for R = {r}: {e}"))),
    };
    let n = r.n() as u8;
    for lam in r.shapes() {
        let mut by_charge = QPolynomial::zero();
        for t in enumerate_lrt(&lam, r) {
            let c = match charge_explicit_unchecked(&t.row_reading_word(n), r) {
                Ok(c) => c,
                Err(e) => return (checks, Some(format!("charge fails: {e}"))),
            };
            by_charge.add_scaled(&QPolynomial::monomial(c as usize), 0, 1);
        }
        let kp = eval.eval(&lam);
        checks += 1;
        if kp.has_negative_coeff() {
            return (
                checks,
                Some(format!("negative coefficient in K({lam}; {r}) = {kp}")),
            );
        }
        if by_charge != kp {
            return (
                checks,
                Some(format!(
                    "main identity fails for R = {r}, lambda = {lam}: charges {by_charge}, K = {kp}"
                )),
            );
        }
    }
    (checks, None)
}

/// The generalized Morris recurrence against the direct alternant, for every
/// dominant `R` with `n` within bounds and every shape.
pub fn verify_morris(bounds: &Bounds, jobs: usize) -> SuiteResult {
    let capped = Bounds {
        max_n: bounds.max_n.min(5),
        ..*bounds
    };
    let list = dominant_suite(&capped);
    let parts = run_over_rects(&list, jobs, |_, r| morris_checks_for(r));
    SuiteResult::merge("morris", parts)
}

fn morris_checks_for(r: &RectSequence) -> (u64, Option<String>) {
    let mut checks = 0u64;
    let mut eval = match KPolyEvaluator::new(&r.eta(), &r.gamma()) {
        Ok(e) => e,
        Err(e) => return (0, Some(format!("evaluator fails for R = {r}: {e}"))),
    };
    for lam in r.shapes() {
        let direct = eval.eval(&lam);
        let rec = match crate::poincare::morris_rhs(&lam, r) {
            Ok(p) => p,
            Err(e) => return (checks, Some(format!("morris_rhs fails for R = {r}: {e}"))),
        };
        checks += 1;
        if direct != rec {
            return (
                checks,
                Some(format!(
                    "Morris recurrence fails for R = {r}, lambda = {lam}: {rec} vs {direct}"
                )),
            );
        }
    }
    (checks, None)
}
