//! Non-vanishing of `A_q(lambda)` and of its Dirac index.
//!
//! In the nice range `A_q(lambda)` is nonzero iff every adjacent gap
//! `lambda_{i+1} - lambda_i` is at most the overlap of the adjacent skew
//! columns. For nonzero nice modules the Dirac index is nonzero iff the
//! strengthened H.P.-condition holds, iff the reduced integer system
//!
//! ```text
//! a_{i,i+1} + b_{i,i+1}   = R_{i,i+1}     1 <= i <= r-1
//! a_{i,i+1} + b_{i-1,i}  <= p_i           1 <= i <= r
//! a_{i-1,i} + b_{i,i+1}  <= q_i           1 <= i <= r
//! ```
//!
//! has a non-negative solution (terms with index `0` or `r` read as zero).

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{self, overlap_by_formula, r_table_from_nu, RTable};
use crate::halfint::HalfInt;
use crate::params::{assert_lambda_matches, LambdaParam, ParabolicDatum, Weight};
use crate::ranges::{self, classify};
use crate::tableau::{build_quasitableau, PartitionedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("lambda is not in the nice range for q")]
    NotInNiceRange,
    #[error("lambda is not in the mediocre range for q")]
    NotInMediocreRange,
    #[error("module vanishes: gap at pair ({pair},{}) exceeds the overlap", pair + 1)]
    ModuleVanishes { pair: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

/// Outcome of a pairwise `gap <= overlap` or `sing <= overlap` test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub holds: bool,
    /// First adjacent pair `(i, i+1)` that fails, as `i`.
    pub failing_pair: Option<usize>,
}

impl PairCheck {
    fn first_failure(r: usize, mut ok: impl FnMut(usize) -> bool) -> Self {
        let failing_pair = (1..r).find(|&i| !ok(i));
        PairCheck {
            holds: failing_pair.is_none(),
            failing_pair,
        }
    }
}

fn gaps_within_overlap(datum: &ParabolicDatum, lambda: &LambdaParam) -> PairCheck {
    PairCheck::first_failure(datum.r(), |i| {
        lambda.gap(i) <= overlap_by_formula(datum, i).expect("pair in range") as i64
    })
}

/// `A_q(lambda)` for nice `lambda` is nonzero iff
/// `lambda_{i+1} - lambda_i <= min{p_i, q_{i+1}} + min{q_i, p_{i+1}}` for all `i`.
pub fn nonvanishing_nice(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<PairCheck, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    if !classify(datum, lambda).nice {
        return Err(CriteriaError::NotInNiceRange);
    }
    Ok(gaps_within_overlap(datum, lambda))
}

/// Necessary condition for `A_q(lambda) != 0` in the mediocre range: on the
/// initial q-consistent partition, `sing(S_i, S_{i+1}) <= overlap(S_i, S_{i+1})`.
/// A failure means the module vanishes; a pass is inconclusive outside the
/// nice range.
pub fn mediocre_necessary_check(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<PairCheck, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    if !classify(datum, lambda).mediocre {
        return Err(CriteriaError::NotInMediocreRange);
    }
    Ok(sing_within_overlap(
        &build_quasitableau(datum, lambda),
        datum,
    ))
}

/// The pairwise `sing <= overlap` test on an already built quasitableau.
pub fn sing_within_overlap(t: &PartitionedTableau, datum: &ParabolicDatum) -> PairCheck {
    PairCheck::first_failure(datum.r(), |i| {
        combinatorics::singularity(t, i).expect("quasitableau has entries")
            <= overlap_by_formula(datum, i).expect("pair in range")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HpCondition {
    /// No value of `nu` occurs more than twice.
    pub hp1: bool,
    /// At most `min{p, q}` distinct values occur twice.
    pub hp2_original: bool,
}

/// Multiplicities of the values of `nu`, as `(value, count)` in decreasing
/// value order.
fn multiplicities(nu: &Weight) -> Vec<(HalfInt, usize)> {
    let mut values: Vec<HalfInt> = nu.coords().to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<(HalfInt, usize)> = Vec::new();
    for v in values {
        match out.last_mut() {
            Some((last, count)) if *last == v => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

fn hp_from_nu(datum: &ParabolicDatum, nu: &Weight) -> HpCondition {
    let mult = multiplicities(nu);
    let doubles = mult.iter().filter(|&&(_, c)| c == 2).count();
    HpCondition {
        hp1: mult.iter().all(|&(_, c)| c <= 2),
        hp2_original: doubles <= datum.p().min(datum.q()),
    }
}

pub fn hp_condition(datum: &ParabolicDatum, lambda: &LambdaParam) -> HpCondition {
    assert_lambda_matches(datum, lambda);
    hp_from_nu(datum, &ranges::nu(datum, lambda))
}

/// Where the strengthened H.P.-condition first fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HpFailure {
    /// `value` occurs `count > 2` times in `nu`.
    Multiplicity { value: HalfInt, count: usize },
    /// `sum_{i=k}^{l-1} R_{i,i+1} > min{sum p_i, sum q_i}` over `k..=l`.
    Window {
        window: (usize, usize),
        r_sum: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrengthenedHp {
    pub holds: bool,
    pub failure: Option<HpFailure>,
}

fn window_failure(datum: &ParabolicDatum, r_adj: &[usize]) -> Option<HpFailure> {
    let r = datum.r();
    let pairs = datum.pairs();
    for k in 1..=r {
        let (mut r_sum, mut p_sum, mut q_sum) = (0, pairs[k - 1].0, pairs[k - 1].1);
        for l in k + 1..=r {
            r_sum += r_adj[l - 2];
            p_sum += pairs[l - 1].0;
            q_sum += pairs[l - 1].1;
            let bound = p_sum.min(q_sum);
            if r_sum > bound {
                return Some(HpFailure::Window {
                    window: (k, l),
                    r_sum,
                    bound,
                });
            }
        }
    }
    None
}

fn strengthened_from_parts(datum: &ParabolicDatum, nu: &Weight, r_adj: &[usize]) -> StrengthenedHp {
    let failure = multiplicities(nu)
        .into_iter()
        .find(|&(_, c)| c > 2)
        .map(|(value, count)| HpFailure::Multiplicity { value, count })
        .or_else(|| window_failure(datum, r_adj));
    StrengthenedHp {
        holds: failure.is_none(),
        failure,
    }
}

/// The strengthened H.P.-condition: no value of `nu` occurs more than twice,
/// and for every window `k < l`,
/// `sum_{i=k}^{l-1} R_{i,i+1} <= min{sum_{i=k}^{l} p_i, sum_{i=k}^{l} q_i}`.
pub fn strengthened_hp(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<StrengthenedHp, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    if !classify(datum, lambda).nice {
        return Err(CriteriaError::NotInNiceRange);
    }
    let nu = ranges::nu(datum, lambda);
    let table = r_table_from_nu(datum, &nu);
    Ok(strengthened_from_parts(datum, &nu, &table.adjacent()))
}

/// Non-negative `a_{i,i+1}`, `b_{i,i+1}` for `i = 1..r-1`, stored 0-based:
/// `a[0]` is `a_{1,2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FeasibilitySolution {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl FeasibilitySolution {
    /// First violated line of the reduced system, if any.
    pub fn violation(&self, datum: &ParabolicDatum, r_adj: &[usize]) -> Option<String> {
        let r = datum.r();
        if self.a.len() != r - 1 || self.b.len() != r - 1 || r_adj.len() != r - 1 {
            return Some("wrong number of unknowns".into());
        }
        if let Some(i) = (0..r - 1).find(|&i| self.a[i] + self.b[i] != r_adj[i]) {
            return Some(format!("a+b != R at pair ({},{})", i + 1, i + 2));
        }
        let at = |v: &[usize], k: isize| -> usize {
            if k < 0 || k as usize >= r - 1 {
                0
            } else {
                v[k as usize]
            }
        };
        for (i, &(p_i, q_i)) in datum.pairs().iter().enumerate() {
            let i = i as isize;
            // 0-based: a_{i,i+1} is a[i], b_{i-1,i} is b[i-1]
            if at(&self.a, i) + at(&self.b, i - 1) > p_i {
                return Some(format!("p-constraint fails at block {}", i + 1));
            }
            if at(&self.a, i - 1) + at(&self.b, i) > q_i {
                return Some(format!("q-constraint fails at block {}", i + 1));
            }
        }
        None
    }

    pub fn is_valid(&self, datum: &ParabolicDatum, r_adj: &[usize]) -> bool {
        self.violation(datum, r_adj).is_none()
    }
}

/// Brute force over the reduced system: every `a_{i,i+1}` in `0..=R_{i,i+1}`
/// with `b` determined; returns the lexicographically smallest feasible `a`.
pub fn solve_reduced_bruteforce(
    datum: &ParabolicDatum,
    r_adj: &[usize],
) -> Option<FeasibilitySolution> {
    let m = r_adj.len();
    let mut a = vec![0usize; m];
    loop {
        let candidate = FeasibilitySolution {
            b: r_adj.iter().zip(&a).map(|(&r, &x)| r - x).collect(),
            a: a.clone(),
        };
        if candidate.is_valid(datum, r_adj) {
            return Some(candidate);
        }
        // odometer with a[0] most significant
        let mut pos = m;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            if a[pos] < r_adj[pos] {
                a[pos] += 1;
                a[pos + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

struct NiceNonzero {
    nu: Weight,
    table: RTable,
}

fn require_nice_nonzero(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<NiceNonzero, CriteriaError> {
    let check = nonvanishing_nice(datum, lambda)?;
    if let Some(pair) = check.failing_pair {
        return Err(CriteriaError::ModuleVanishes { pair });
    }
    let nu = ranges::nu(datum, lambda);
    let table = r_table_from_nu(datum, &nu);
    Ok(NiceNonzero { nu, table })
}

fn as_precondition(e: CriteriaError) -> CriteriaError {
    match e {
        CriteriaError::NotInNiceRange => {
            CriteriaError::PreconditionViolated("lambda is not in the nice range".into())
        }
        CriteriaError::ModuleVanishes { pair } => CriteriaError::PreconditionViolated(format!(
            "module vanishes at pair ({pair},{})",
            pair + 1
        )),
        other => other,
    }
}

/// Searches the reduced Dirac-index system exhaustively. Requires a nonzero
/// module in the nice range with no value of `nu` occurring three times, so
/// that only adjacent `R_{i,i+1}` can be nonzero.
pub fn dirac_feasibility_bruteforce(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<Option<FeasibilitySolution>, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    let ctx = require_nice_nonzero(datum, lambda).map_err(as_precondition)?;
    if !hp_from_nu(datum, &ctx.nu).hp1 {
        return Err(CriteriaError::PreconditionViolated(
            "a value of nu occurs more than twice".into(),
        ));
    }
    Ok(solve_reduced_bruteforce(datum, &ctx.table.adjacent()))
}

/// Inductive construction on the number of blocks. `pairs` may contain
/// `(0,0)` after the deficit reduction; values are signed so that a broken
/// invariant shows up as `None` instead of an underflow.
fn construct(pairs: &[(i64, i64)], r_adj: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let r = pairs.len();
    match r {
        0 => return None,
        1 => return Some((Vec::new(), Vec::new())),
        2 => {
            let a = pairs[0].0.min(pairs[1].1).min(r_adj[0]);
            return Some((vec![a], vec![r_adj[0] - a]));
        }
        _ => {}
    }
    let (p_prev, q_prev) = pairs[r - 2];
    let (p_last, q_last) = pairs[r - 1];
    let big_r = r_adj[r - 2];
    let floor = p_prev.min(q_prev).min(p_last).min(q_last);

    if big_r <= floor {
        let (mut a, mut b) = construct(&pairs[..r - 1], &r_adj[..r - 2])?;
        let a_last = (p_prev - b[r - 3]).min(big_r);
        a.push(a_last);
        b.push(big_r - a_last);
        return Some((a, b));
    }

    let d = big_r - floor;
    let mut reduced = pairs.to_vec();
    let mut reduced_r = r_adj.to_vec();
    reduced_r[r - 2] = big_r - d;
    // Lower p_{r-1}, q_r and raise a_{r-1,r}, or mirror onto q_{r-1}, p_r and b.
    let raise_a = p_last.min(q_prev) <= p_prev.min(q_last);
    if raise_a {
        reduced[r - 2] = (p_prev - d, q_prev);
        reduced[r - 1] = (p_last, q_last - d);
    } else {
        reduced[r - 2] = (p_prev, q_prev - d);
        reduced[r - 1] = (p_last - d, q_last);
    }
    if reduced[r - 2].0 < 0 || reduced[r - 2].1 < 0 || reduced[r - 1].0 < 0 || reduced[r - 1].1 < 0
    {
        return None;
    }
    let (mut a, mut b) = construct(&reduced, &reduced_r)?;
    if raise_a {
        a[r - 2] += d;
    } else {
        b[r - 2] += d;
    }
    Some((a, b))
}

/// Builds a solution of the reduced system from the strengthened
/// H.P.-condition, following the induction on `r`: base
/// `a_{12} = min{p_1, q_2, R_{12}}`; when `R_{r-1,r}` is below every one of
/// `p_{r-1}, q_{r-1}, p_r, q_r`, extend a solution for the first `r-1` blocks
/// with `a_{r-1,r} = min{p_{r-1} - b_{r-2,r-1}, R_{r-1,r}}`; otherwise remove
/// the deficit `d` from the last two blocks, solve, and add `d` back.
pub fn dirac_constructive(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<FeasibilitySolution, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    let ctx = require_nice_nonzero(datum, lambda).map_err(as_precondition)?;
    let r_adj = ctx.table.adjacent();
    let shp = strengthened_from_parts(datum, &ctx.nu, &r_adj);
    if !shp.holds {
        return Err(CriteriaError::PreconditionViolated(
            "the strengthened H.P.-condition fails".into(),
        ));
    }
    construct_checked(datum, &r_adj)
}

pub(crate) fn construct_checked(
    datum: &ParabolicDatum,
    r_adj: &[usize],
) -> Result<FeasibilitySolution, CriteriaError> {
    let pairs: Vec<(i64, i64)> = datum
        .pairs()
        .iter()
        .map(|&(p, q)| (p as i64, q as i64))
        .collect();
    let r_signed: Vec<i64> = r_adj.iter().map(|&x| x as i64).collect();
    let context = || format!("pairs {:?}, R {:?}", datum.pairs(), r_adj);
    let (a, b) = construct(&pairs, &r_signed).ok_or_else(|| {
        CriteriaError::InternalContradiction(format!("construction stalled for {}", context()))
    })?;
    if a.iter().chain(&b).any(|&x| x < 0) {
        return Err(CriteriaError::InternalContradiction(format!(
            "negative unknown for {}",
            context()
        )));
    }
    let solution = FeasibilitySolution {
        a: a.into_iter().map(|x| x as usize).collect(),
        b: b.into_iter().map(|x| x as usize).collect(),
    };
    match solution.violation(datum, r_adj) {
        None => Ok(solution),
        Some(why) => Err(CriteriaError::InternalContradiction(format!(
            "constructed {solution:?} violates the system ({why}) for {}",
            context()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub nonzero_module: bool,
    pub hp1: bool,
    pub hp2_original: bool,
    pub strengthened_hp: bool,
    pub dirac_index_nonzero: Option<bool>,
    pub witness: Option<FeasibilitySolution>,
    pub failure_site: Option<HpFailure>,
}

/// Decides `DI(A_q(lambda)) != 0` for a nonzero module in the nice range via
/// the strengthened H.P.-condition, attaches a constructed witness, and
/// cross-checks against the brute-force search.
pub fn dirac_index_nonzero(
    datum: &ParabolicDatum,
    lambda: &LambdaParam,
) -> Result<Verdict, CriteriaError> {
    assert_lambda_matches(datum, lambda);
    let ctx = require_nice_nonzero(datum, lambda)?;
    let r_adj = ctx.table.adjacent();
    let hp = hp_from_nu(datum, &ctx.nu);
    let shp = strengthened_from_parts(datum, &ctx.nu, &r_adj);

    let brute = if hp.hp1 {
        Some(solve_reduced_bruteforce(datum, &r_adj))
    } else {
        None
    };
    let witness = if shp.holds {
        Some(construct_checked(datum, &r_adj)?)
    } else {
        None
    };
    if let Some(found) = &brute {
        if found.is_some() != shp.holds {
            return Err(CriteriaError::InternalContradiction(format!(
                "strengthened H.P. says {} but brute force says {} for pairs {:?}, lambda {:?}",
                shp.holds,
                found.is_some(),
                datum.pairs(),
                lambda.values()
            )));
        }
    }

    Ok(Verdict {
        nonzero_module: true,
        hp1: hp.hp1,
        hp2_original: hp.hp2_original,
        strengthened_hp: shp.holds,
        dirac_index_nonzero: Some(shp.holds),
        witness,
        failure_site: shp.failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KTypeWeight {
    pub weight: Weight,
    pub k_dominant: bool,
}

/// `lambda + 2rho(u ∩ s)`: block `j` carries `lambda_j + eta_{j,+}` on its
/// `p_j` slots then `lambda_j + eta_{j,-}` on its `q_j` slots, where
/// `eta_{j,+} = -sum_{l<j} q_l + sum_{t>j} q_t` and
/// `eta_{j,-} = -sum_{l<j} p_l + sum_{t>j} p_t`.
pub fn ktype_weight(datum: &ParabolicDatum, lambda: &LambdaParam) -> KTypeWeight {
    assert_lambda_matches(datum, lambda);
    let (p_total, q_total) = (datum.p() as i64, datum.q() as i64);
    let (mut p_before, mut q_before) = (0i64, 0i64);
    let mut coords = Vec::with_capacity(datum.n());
    for (&(p_j, q_j), &lam) in datum.pairs().iter().zip(lambda.values()) {
        let (p_j, q_j) = (p_j as i64, q_j as i64);
        let eta_plus = -q_before + (q_total - q_before - q_j);
        let eta_minus = -p_before + (p_total - p_before - p_j);
        coords.extend(std::iter::repeat_n(
            HalfInt::from_int(lam + eta_plus),
            p_j as usize,
        ));
        coords.extend(std::iter::repeat_n(
            HalfInt::from_int(lam + eta_minus),
            q_j as usize,
        ));
        p_before += p_j;
        q_before += q_j;
    }
    let k_dominant = (1..datum.r()).all(|j| {
        let gap = lambda.gap(j);
        gap <= (datum.p_at(j) + datum.p_at(j + 1)) as i64
            && gap <= (datum.q_at(j) + datum.q_at(j + 1)) as i64
    });
    KTypeWeight {
        weight: Weight::new(coords),
        k_dominant,
    }
}
