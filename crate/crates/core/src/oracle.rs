//! Exhaustive enumeration of small parabolic data and `lambda` grids, and the
//! sweeps that cross-check each closed formula against an independent
//! computation.
//!
//! Sweeps partition their work by datum and run the data in parallel; the
//! merged report does not depend on scheduling.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    is_antitableau, overlap_by_definition, overlap_by_formula, r_table, r_table_from_nu,
};
use crate::criteria::{
    self, construct_checked, ktype_weight, sing_within_overlap, solve_reduced_bruteforce,
};
use crate::params::{LambdaParam, ParabolicDatum};
use crate::ranges::{self, classify};
use crate::tableau::{build_quasitableau, build_signed_tableau, PartitionedTableau};

/// Every ordered sequence of pairs `(p_i, q_i) != (0, 0)` with
/// `sum (p_i + q_i) <= n_max`, ordered by total size and then
/// lexicographically by pairs.
pub fn enumerate_parabolics(n_max: usize) -> Vec<ParabolicDatum> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut current = Vec::new();
        extend_datums(n, &mut current, &mut out);
    }
    out
}

fn extend_datums(
    remaining: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<ParabolicDatum>,
) {
    if remaining == 0 {
        out.push(ParabolicDatum::new(current.clone()).expect("parts are nonzero"));
        return;
    }
    for size in 1..=remaining {
        for p in (0..=size).rev() {
            current.push((p, size - p));
            extend_datums(remaining - size, current, out);
            current.pop();
        }
    }
}

/// Odometer over `lambda` with `lambda_1 = 0` and gap `i` in `lo[i]..=hi[i]`,
/// updating one buffer in place.
struct GapGrid {
    lo: Vec<i64>,
    hi: Vec<i64>,
    gaps: Vec<i64>,
    values: Vec<i64>,
    started: bool,
    done: bool,
}

impl GapGrid {
    fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        let done = lo.iter().zip(&hi).any(|(l, h)| l > h);
        let gaps = lo.clone();
        let mut values = vec![0; gaps.len() + 1];
        for k in 0..gaps.len() {
            values[k + 1] = values[k] + gaps[k];
        }
        GapGrid {
            lo,
            hi,
            gaps,
            values,
            started: false,
            done,
        }
    }

    fn next_point(&mut self) -> Option<&[i64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.values);
        }
        let mut k = self.gaps.len();
        loop {
            if k == 0 {
                self.done = true;
                return None;
            }
            k -= 1;
            if self.gaps[k] < self.hi[k] {
                self.gaps[k] += 1;
                self.gaps[k + 1..].copy_from_slice(&self.lo[k + 1..]);
                for t in k..self.gaps.len() {
                    self.values[t + 1] = self.values[t] + self.gaps[t];
                }
                return Some(&self.values);
            }
        }
    }
}

fn lambda_box(lo: Vec<i64>, hi: Vec<i64>) -> impl Iterator<Item = LambdaParam> {
    let mut grid = GapGrid::new(lo, hi);
    std::iter::from_fn(move || grid.next_point().map(|v| LambdaParam::new(v.to_vec())))
}

fn full_bounds(datum: &ParabolicDatum, span: usize) -> (Vec<i64>, Vec<i64>) {
    let m = datum.r() - 1;
    let s = span as i64;
    (vec![-s; m], vec![s; m])
}

fn nice_bounds(datum: &ParabolicDatum, span: usize) -> (Vec<i64>, Vec<i64>) {
    let s = span as i64;
    let hi = (1..datum.r())
        .map(|i| s.min(datum.n_at(i).min(datum.n_at(i + 1)) as i64))
        .collect();
    (vec![-s; datum.r() - 1], hi)
}

/// `lambda` with `lambda_1 = 0` and every gap in `[-span, span]`:
/// `(2 span + 1)^(r-1)` points.
pub fn enumerate_lambdas(datum: &ParabolicDatum, span: usize) -> impl Iterator<Item = LambdaParam> {
    let (lo, hi) = full_bounds(datum, span);
    lambda_box(lo, hi)
}

/// The nice points of [`enumerate_lambdas`], produced directly from the
/// adjacent-gap form `lambda_{i+1} - lambda_i <= min{n_i, n_{i+1}}`.
pub fn enumerate_nice_lambdas(
    datum: &ParabolicDatum,
    span: usize,
) -> impl Iterator<Item = LambdaParam> {
    let (lo, hi) = nice_bounds(datum, span);
    lambda_box(lo, hi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub pairs: Vec<(usize, usize)>,
    pub lambda: Option<Vec<i64>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub n_max: usize,
    pub lambda_span: Option<usize>,
    pub datums_tested: u64,
    pub lambda_points: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl SweepReport {
    fn empty(name: &str, n_max: usize, lambda_span: Option<usize>) -> Self {
        SweepReport {
            name: name.to_string(),
            n_max,
            lambda_span,
            datums_tested: 0,
            lambda_points: 0,
            agreements: 0,
            disagreements: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.datums_tested += other.datums_tested;
        self.lambda_points += other.lambda_points;
        self.agreements += other.agreements;
        self.disagreements += other.disagreements;
        self.first_counterexample = match (self.first_counterexample, other.first_counterexample) {
            (Some(a), Some(b)) => Some(if b.pairs < a.pairs { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Per-datum tally used inside a sweep.
struct Tally {
    points: u64,
    agreements: u64,
    disagreements: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            points: 0,
            agreements: 0,
            disagreements: 0,
            first: None,
        }
    }

    fn record(
        &mut self,
        datum: &ParabolicDatum,
        lambda: Option<&LambdaParam>,
        failure: Option<String>,
    ) {
        match failure {
            None => self.agreements += 1,
            Some(detail) => {
                self.disagreements += 1;
                if self.first.is_none() {
                    self.first = Some(Counterexample {
                        pairs: datum.pairs().to_vec(),
                        lambda: lambda.map(|l| l.values().to_vec()),
                        detail,
                    });
                }
            }
        }
    }
}

fn run_sweep<F>(
    name: &str,
    n_max: usize,
    span: Option<usize>,
    min_blocks: usize,
    per_datum: F,
) -> SweepReport
where
    F: Fn(&ParabolicDatum, &mut Tally) + Sync,
{
    let datums: Vec<ParabolicDatum> = enumerate_parabolics(n_max)
        .into_iter()
        .filter(|d| d.r() >= min_blocks)
        .collect();
    datums
        .par_iter()
        .map(|datum| {
            let mut tally = Tally::new();
            per_datum(datum, &mut tally);
            let mut report = SweepReport::empty(name, n_max, span);
            report.datums_tested = 1;
            report.lambda_points = tally.points;
            report.agreements = tally.agreements;
            report.disagreements = tally.disagreements;
            report.first_counterexample = tally.first;
            report
        })
        .reduce(|| SweepReport::empty(name, n_max, span), SweepReport::merge)
}

/// Definitional overlap on the built signed tableau against the closed form,
/// for every adjacent pair of every datum with `n <= n_max`.
pub fn sweep_overlap(n_max: usize) -> SweepReport {
    run_sweep("overlap", n_max, None, 2, |datum, tally| {
        let t = build_signed_tableau(datum);
        for i in 1..datum.r() {
            let by_def = overlap_by_definition(&t, i).expect("pair in range");
            let by_formula = overlap_by_formula(datum, i).expect("pair in range");
            let failure = (by_def != by_formula).then(|| {
                format!("pair {i}: definition gives {by_def}, formula gives {by_formula}")
            });
            tally.record(datum, None, failure);
        }
    })
}

/// For each adjacent pair with `m_i = min{p_i,q_{i+1}} + min{p_{i+1},q_i}`,
/// cell `n_i - m_i + j` of block `i` sits in a row weakly below cell `j` of
/// block `i+1`, for `j = 1..=m_i`.
pub fn sweep_positional_lemma(n_max: usize) -> SweepReport {
    run_sweep("positional", n_max, None, 2, |datum, tally| {
        let t = build_signed_tableau(datum);
        for i in 1..datum.r() {
            tally.record(datum, None, positional_violation(&t, datum, i));
        }
    })
}

fn positional_violation(
    t: &PartitionedTableau,
    datum: &ParabolicDatum,
    i: usize,
) -> Option<String> {
    let (p_i, q_i) = datum.pairs()[i - 1];
    let (p_j, q_j) = datum.pairs()[i];
    let m = p_i.min(q_j) + p_j.min(q_i);
    let upper: Vec<usize> = t.block_cells(i).map(|c| c.row).collect();
    let lower: Vec<usize> = t.block_cells(i + 1).map(|c| c.row).collect();
    let n_i = upper.len();
    if m > n_i.min(lower.len()) {
        return Some(format!("pair {i}: m = {m} exceeds a block length"));
    }
    (1..=m)
        .find(|&j| upper[n_i - m + j - 1] < lower[j - 1])
        .map(|j| {
            format!(
                "pair {i}: cell {} of block {i} in row {}, cell {j} of block {} in row {}",
                n_i - m + j,
                upper[n_i - m + j - 1],
                i + 1,
                lower[j - 1]
            )
        })
}

/// Per-datum scratch space for the grid sweeps: `nu` in doubled units for the
/// current point, block boundaries, and the quasitableau cells as indices
/// into `nu`.
struct Frame<'a> {
    datum: &'a ParabolicDatum,
    starts: Vec<usize>,
    block_of: Vec<usize>,
    rho: Vec<i64>,
    overlap: Vec<i64>,
    rows: Vec<Vec<usize>>,
    nu: Vec<i64>,
    sorted: Vec<i64>,
}

impl<'a> Frame<'a> {
    fn new(datum: &'a ParabolicDatum) -> Self {
        let n = datum.n();
        let mut starts = vec![0];
        let mut block_of = Vec::with_capacity(n);
        for (b, size) in datum.block_sizes().enumerate() {
            starts.push(starts[b] + size);
            block_of.extend(std::iter::repeat_n(b, size));
        }
        let signed = build_signed_tableau(datum);
        let mut next = starts.clone();
        let rows = (1..=signed.num_rows())
            .map(|row| {
                signed
                    .row_blocks(row)
                    .into_iter()
                    .map(|j| {
                        next[j - 1] += 1;
                        next[j - 1] - 1
                    })
                    .collect()
            })
            .collect();
        Frame {
            datum,
            starts,
            block_of,
            rho: (0..n as i64).map(|k| n as i64 - 1 - 2 * k).collect(),
            overlap: (1..datum.r())
                .map(|i| overlap_by_formula(datum, i).expect("pair in range") as i64)
                .collect(),
            rows,
            nu: vec![0; n],
            sorted: vec![0; n],
        }
    }

    fn load(&mut self, lambda: &[i64]) {
        for (k, v) in self.nu.iter_mut().enumerate() {
            *v = 2 * lambda[self.block_of[k]] + self.rho[k];
        }
    }

    fn block(&self, b: usize) -> &[i64] {
        &self.nu[self.starts[b]..self.starts[b + 1]]
    }

    /// Shared values of 0-based blocks `a` and `b`.
    fn common(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.block(a), self.block(b));
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => i += 1,
                std::cmp::Ordering::Less => j += 1,
            }
        }
        n
    }

    fn hp1(&mut self) -> bool {
        self.sorted.copy_from_slice(&self.nu);
        self.sorted.sort_unstable();
        self.sorted.windows(3).all(|w| w[0] != w[2])
    }

    fn nonzero(&self, lambda: &[i64]) -> bool {
        (1..lambda.len()).all(|i| lambda[i] - lambda[i - 1] <= self.overlap[i - 1])
    }

    fn antitableau(&self) -> bool {
        let at = |k: usize| self.nu[k];
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| at(w[0]) >= at(w[1])));
        let cols_ok = self.rows.windows(2).all(|w| {
            w[1].iter()
                .zip(&w[0])
                .all(|(&below, &above)| at(above) > at(below))
        });
        rows_ok && cols_ok
    }

    /// `gap <= p_j + p_{j+1}` and `gap <= q_j + q_{j+1}` for every `j`.
    fn k_dominant(&self, lambda: &[i64]) -> bool {
        let pairs = self.datum.pairs();
        (1..lambda.len()).all(|j| {
            let gap = lambda[j] - lambda[j - 1];
            let (a, b) = (pairs[j - 1], pairs[j]);
            gap <= (a.0 + b.0) as i64 && gap <= (a.1 + b.1) as i64
        })
    }
}

/// Points at which the fast path is replayed through the public functions.
fn sampled(index: u64) -> bool {
    index.is_multiple_of(211)
}

/// On every nonzero nice point: the strengthened H.P.-condition agrees with
/// exhaustive search of the reduced system, and whenever it holds the
/// inductive construction returns a valid solution. A point where some value
/// of `nu` occurs three times has `H_D = 0`, so the search side reads
/// infeasible there.
///
/// Both sides depend on the point only through `hp1` and the adjacent
/// `R_{i,i+1}`, so each datum evaluates them once per distinct pair; the
/// first point with a given pair goes through the public functions.
pub fn sweep_dirac_equivalence(n_max: usize, span: usize) -> SweepReport {
    run_sweep("dirac", n_max, Some(span), 1, |datum, tally| {
        let mut frame = Frame::new(datum);
        let r = datum.r();
        let mut seen: HashMap<(bool, Vec<usize>), Option<String>> = HashMap::new();
        let mut key_r = vec![0usize; r - 1];
        let (lo, hi) = nice_bounds(datum, span);
        let mut grid = GapGrid::new(lo, hi);
        while let Some(values) = grid.next_point() {
            if !frame.nonzero(values) {
                continue;
            }
            tally.points += 1;
            frame.load(values);
            for (i, slot) in key_r.iter_mut().enumerate() {
                *slot = frame.common(i, i + 1);
            }
            let hp1 = frame.hp1();
            let key = (hp1, key_r.clone());
            let outcome = match seen.get(&key) {
                Some(known) if !sampled(tally.points) => known.clone(),
                _ => {
                    let lambda = LambdaParam::new(values.to_vec());
                    let fresh = dirac_point(datum, &lambda, hp1, &key_r);
                    seen.entry(key).or_insert_with(|| fresh.clone());
                    fresh
                }
            };
            let lambda = outcome.as_ref().map(|_| LambdaParam::new(values.to_vec()));
            tally.record(datum, lambda.as_ref(), outcome);
        }
    })
}

fn dirac_point(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
    fast_hp1: bool,
    fast_r: &[usize],
) -> Option<String> {
    let shp = match criteria::strengthened_hp(datum, lambda) {
        Ok(s) => s,
        Err(e) => return Some(format!("strengthened_hp failed: {e}")),
    };
    let hp1 = criteria::hp_condition(datum, lambda).hp1;
    let r_adj = r_table_from_nu(datum, &ranges::nu(datum, lambda)).adjacent();
    if hp1 != fast_hp1 || r_adj != fast_r {
        return Some(format!(
            "grid evaluation gave hp1 {fast_hp1}, R {fast_r:?}; library gives {hp1}, {r_adj:?}"
        ));
    }
    let feasible = hp1 && solve_reduced_bruteforce(datum, &r_adj).is_some();
    if feasible != shp.holds {
        return Some(format!(
            "strengthened H.P. {} but search {}",
            shp.holds, feasible
        ));
    }
    if shp.holds {
        if let Err(e) = construct_checked(datum, &r_adj) {
            return Some(e.to_string());
        }
    }
    None
}

/// Counters from the nice-grid sweep of the non-vanishing consequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceGridReport {
    pub n_max: usize,
    pub lambda_span: usize,
    pub nice_points: u64,
    pub nonzero_points: u64,
    /// Nonzero points whose quasitableau is not an antitableau.
    pub antitableau_failures: u64,
    /// Points where `sing <= overlap` and `gap <= overlap` disagree.
    pub mediocre_disagreements: u64,
    /// Points with `hp1` where some `R_ij`, `j > i+1`, is nonzero or
    /// `R_{i-1,i} + R_{i,i+1} > n_i`.
    pub r_structure_failures: u64,
    /// Nonzero points whose K-type weight is not dominant.
    pub ktype_failures: u64,
    /// Sampled points where the grid evaluation and the library functions
    /// differ.
    pub replay_mismatches: u64,
    /// Vanishing points whose quasitableau is nevertheless an antitableau.
    /// Observed only, never asserted.
    pub vanishing_antitableaux: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl NiceGridReport {
    pub fn passed(&self) -> bool {
        self.antitableau_failures == 0
            && self.mediocre_disagreements == 0
            && self.r_structure_failures == 0
            && self.ktype_failures == 0
            && self.replay_mismatches == 0
    }

    fn empty(n_max: usize, lambda_span: usize) -> Self {
        NiceGridReport {
            n_max,
            lambda_span,
            nice_points: 0,
            nonzero_points: 0,
            antitableau_failures: 0,
            mediocre_disagreements: 0,
            r_structure_failures: 0,
            ktype_failures: 0,
            replay_mismatches: 0,
            vanishing_antitableaux: 0,
            first_counterexample: None,
        }
    }

    fn merge(mut self, o: NiceGridReport) -> Self {
        self.nice_points += o.nice_points;
        self.nonzero_points += o.nonzero_points;
        self.antitableau_failures += o.antitableau_failures;
        self.mediocre_disagreements += o.mediocre_disagreements;
        self.r_structure_failures += o.r_structure_failures;
        self.ktype_failures += o.ktype_failures;
        self.replay_mismatches += o.replay_mismatches;
        self.vanishing_antitableaux += o.vanishing_antitableaux;
        self.first_counterexample = match (self.first_counterexample, o.first_counterexample) {
            (Some(a), Some(b)) => Some(if b.pairs < a.pairs { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Walks every nice point of the grid and checks that a nonzero module has an
/// antitableau quasitableau and a dominant K-type weight, that the
/// singularity test matches the gap test, and the shape of `R` under `hp1`.
pub fn sweep_nice_grid(n_max: usize, span: usize) -> NiceGridReport {
    enumerate_parabolics(n_max)
        .par_iter()
        .map(|datum| nice_grid_datum(datum, n_max, span))
        .reduce(|| NiceGridReport::empty(n_max, span), NiceGridReport::merge)
}

fn nice_grid_datum(datum: &ParabolicDatum, n_max: usize, span: usize) -> NiceGridReport {
    let mut rep = NiceGridReport::empty(n_max, span);
    let mut frame = Frame::new(datum);
    let r = datum.r();
    let note = |rep: &mut NiceGridReport, values: &[i64], detail: String| {
        if rep.first_counterexample.is_none() {
            rep.first_counterexample = Some(Counterexample {
                pairs: datum.pairs().to_vec(),
                lambda: Some(values.to_vec()),
                detail,
            });
        }
    };
    let mut r_full = vec![vec![0usize; r]; r];
    let (lo, hi) = nice_bounds(datum, span);
    let mut grid = GapGrid::new(lo, hi);
    while let Some(values) = grid.next_point() {
        rep.nice_points += 1;
        frame.load(values);
        let nonzero = frame.nonzero(values);
        let anti = frame.antitableau();
        let k_dom = frame.k_dominant(values);
        let hp1 = frame.hp1();
        for (i, row) in r_full.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
                *slot = frame.common(i, j);
            }
        }
        // sing of adjacent blocks in the quasitableau: equal entries between
        // difference-one columns are exactly the shared values
        let sing_ok = (0..r - 1).all(|i| r_full[i][i + 1] as i64 <= frame.overlap[i]);

        if sampled(rep.nice_points) || rep.nice_points == 1 {
            let lambda = LambdaParam::new(values.to_vec());
            if let Some(why) =
                replay_nice_point(datum, &lambda, nonzero, anti, k_dom, hp1, sing_ok, &r_full)
            {
                rep.replay_mismatches += 1;
                note(&mut rep, values, why);
            }
        }

        if nonzero {
            rep.nonzero_points += 1;
            if !anti {
                rep.antitableau_failures += 1;
                note(&mut rep, values, "nonzero but not an antitableau".into());
            }
            if !k_dom {
                rep.ktype_failures += 1;
                note(
                    &mut rep,
                    values,
                    "nonzero but K-type weight not dominant".into(),
                );
            }
        } else if anti {
            rep.vanishing_antitableaux += 1;
        }

        if sing_ok != nonzero {
            rep.mediocre_disagreements += 1;
            note(
                &mut rep,
                values,
                "singularity and gap tests disagree".into(),
            );
        }

        if hp1 {
            let far = (0..r)
                .flat_map(|i| (i + 2..r).map(move |j| (i, j)))
                .find(|&(i, j)| r_full[i][j] > 0);
            let crowded = (0..r).find(|&i| {
                let left = if i > 0 { r_full[i - 1][i] } else { 0 };
                let right = if i + 1 < r { r_full[i][i + 1] } else { 0 };
                left + right > datum.n_at(i + 1)
            });
            if let Some((i, j)) = far {
                rep.r_structure_failures += 1;
                note(
                    &mut rep,
                    values,
                    format!("R_{{{},{}}} = {} under hp1", i + 1, j + 1, r_full[i][j]),
                );
            } else if let Some(i) = crowded {
                rep.r_structure_failures += 1;
                note(
                    &mut rep,
                    values,
                    format!("R around block {} exceeds n_{}", i + 1, i + 1),
                );
            }
        }
    }
    rep
}

/// Re-evaluates one point through the public functions and reports any
/// difference from the grid evaluation.
#[allow(clippy::too_many_arguments)]
fn replay_nice_point(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
    nonzero: bool,
    anti: bool,
    k_dom: bool,
    hp1: bool,
    sing_ok: bool,
    r_full: &[Vec<usize>],
) -> Option<String> {
    let quasi = build_quasitableau(datum, lambda);
    let table = r_table(datum, lambda);
    let library = (
        criteria::nonvanishing_nice(datum, lambda).map(|c| c.holds),
        is_antitableau(&quasi),
        ktype_weight(datum, lambda).k_dominant,
        criteria::hp_condition(datum, lambda).hp1,
        sing_within_overlap(&quasi, datum).holds,
    );
    let grid = (Ok(nonzero), Ok(anti), k_dom, hp1, sing_ok);
    if library != grid {
        return Some(format!(
            "grid evaluation {grid:?} differs from library {library:?}"
        ));
    }
    let mismatch = table
        .entries()
        .find(|&(i, j, v)| r_full[i - 1][j - 1] != v)
        .map(|(i, j, v)| format!("R_{{{i},{j}}}: grid {}, library {v}", r_full[i - 1][j - 1]));
    mismatch
}

/// Range ladder and translation invariance of `classify` on the full grid.
pub fn sweep_range_ladder(n_max: usize, span: usize) -> SweepReport {
    run_sweep("range_ladder", n_max, Some(span), 1, |datum, tally| {
        for lambda in enumerate_lambdas(datum, span) {
            tally.points += 1;
            let class = classify(datum, &lambda);
            let failure = if !class.ladder_holds() {
                Some(format!("ladder broken: {class:?}"))
            } else if classify(datum, &lambda.translated(7)) != class
                || classify(datum, &lambda.translated(-3)) != class
            {
                Some("classification changes under translation".into())
            } else {
                None
            };
            tally.record(datum, Some(&lambda), failure);
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Datums of total size exactly `n` satisfy `a_n = 4 a_{n-1} - 2 a_{n-2}`
    /// from `n = 3` on.
    fn closed_counts(n_max: usize) -> Vec<usize> {
        let mut a = vec![1usize, 2, 7];
        while a.len() <= n_max {
            let k = a.len();
            a.push(4 * a[k - 1] - 2 * a[k - 2]);
        }
        a
    }

    #[test]
    fn parabolic_counts() {
        let small = enumerate_parabolics(1);
        assert_eq!(small.len(), 2);
        let all = enumerate_parabolics(8);
        let a = closed_counts(8);
        for (n, &expected) in a.iter().enumerate().skip(1) {
            assert_eq!(
                all.iter().filter(|d| d.n() == n).count(),
                expected,
                "n = {n}"
            );
        }
        assert_eq!(a[2], 7);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn composition_product_formula() {
        // sum over compositions of n of prod (n_i + 1)
        fn by_compositions(n: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=n).map(|k| (k + 1) * by_compositions(n - k)).sum()
        }
        let all = enumerate_parabolics(6);
        for n in 1..=6 {
            assert_eq!(
                all.iter().filter(|d| d.n() == n).count(),
                by_compositions(n)
            );
        }
    }

    #[test]
    fn lambda_grids() {
        let one = ParabolicDatum::new(vec![(1, 1)]).unwrap();
        assert_eq!(
            enumerate_lambdas(&one, 4).collect::<Vec<_>>(),
            vec![LambdaParam::new(vec![0])]
        );
        let two = ParabolicDatum::new(vec![(1, 0), (0, 1)]).unwrap();
        let got: Vec<Vec<i64>> = enumerate_lambdas(&two, 1)
            .map(|l| l.values().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, -1], vec![0, 0], vec![0, 1]]);
        let three = ParabolicDatum::new(vec![(1, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(enumerate_lambdas(&three, 2).count(), 25);
    }

    #[test]
    fn nice_grid_is_the_nice_part_of_the_full_grid() {
        for datum in enumerate_parabolics(5) {
            let filtered: Vec<LambdaParam> = enumerate_lambdas(&datum, 3)
                .filter(|l| classify(&datum, l).nice)
                .collect();
            let direct: Vec<LambdaParam> = enumerate_nice_lambdas(&datum, 3).collect();
            assert_eq!(filtered, direct, "{:?}", datum.pairs());
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for report in [
            sweep_overlap(5),
            sweep_positional_lemma(5),
            sweep_dirac_equivalence(4, 4),
            sweep_range_ladder(4, 3),
        ] {
            assert!(report.passed(), "{report:?}");
            assert!(report.agreements > 0);
        }
        assert!(sweep_nice_grid(4, 4).passed());
    }

    #[test]
    fn stuck_case_is_swept() {
        let d = ParabolicDatum::new(vec![(0, 2), (1, 1), (0, 2)]).unwrap();
        let l = LambdaParam::new(vec![0, 1, 2]);
        assert!(enumerate_nice_lambdas(&d, 7).any(|x| x == l));
        assert!(dirac_point(&d, &l, true, &[1, 1]).is_none());
        assert!(!criteria::strengthened_hp(&d, &l).unwrap().holds);
    }

    #[test]
    fn merge_prefers_smallest_datum() {
        let mk = |pairs: Vec<(usize, usize)>| {
            let mut r = SweepReport::empty("x", 3, None);
            r.disagreements = 1;
            r.first_counterexample = Some(Counterexample {
                pairs,
                lambda: None,
                detail: String::new(),
            });
            r
        };
        let merged = mk(vec![(1, 1)]).merge(mk(vec![(0, 1)]));
        assert_eq!(merged.disagreements, 2);
        assert_eq!(merged.first_counterexample.unwrap().pairs, vec![(0, 1)]);
    }
}
