//! `rho`, the infinitesimal character `nu = lambda + rho`, and the positivity
//! ranges of `lambda` for a parabolic.

use serde::Serialize;

use crate::halfint::HalfInt;
use crate::params::{assert_lambda_matches, LambdaParam, ParabolicDatum, Weight};

/// Half-sum of positive roots of `gl(n)`: `((n-1)/2, (n-3)/2, ..., -(n-1)/2)`.
pub fn rho(n: usize) -> Weight {
    assert!(n >= 1, "rho needs n >= 1");
    let top = n as i64 - 1;
    Weight::new(
        (0..n as i64)
            .map(|k| HalfInt::from_doubled(top - 2 * k))
            .collect(),
    )
}

/// `nu = lambda + rho`, with `lambda` expanded blockwise.
pub fn nu(datum: &ParabolicDatum, lambda: &LambdaParam) -> Weight {
    &lambda.expand(datum) + &rho(datum.n())
}

/// Strongest satisfied range label. `Nice` and `Fair` are incomparable; a
/// point that is both is labelled `Nice`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RangeLabel {
    Good,
    WeaklyGood,
    Nice,
    Fair,
    WeaklyFair,
    Mediocre,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RangeClass {
    pub label: RangeLabel,
    pub good: bool,
    pub weakly_good: bool,
    pub nice: bool,
    pub fair: bool,
    pub weakly_fair: bool,
    pub mediocre: bool,
}

impl RangeClass {
    fn from_flags(
        good: bool,
        weakly_good: bool,
        nice: bool,
        fair: bool,
        weakly_fair: bool,
        mediocre: bool,
    ) -> Self {
        let label = if good {
            RangeLabel::Good
        } else if weakly_good {
            RangeLabel::WeaklyGood
        } else if nice {
            RangeLabel::Nice
        } else if fair {
            RangeLabel::Fair
        } else if weakly_fair {
            RangeLabel::WeaklyFair
        } else if mediocre {
            RangeLabel::Mediocre
        } else {
            RangeLabel::None
        };
        RangeClass {
            label,
            good,
            weakly_good,
            nice,
            fair,
            weakly_fair,
            mediocre,
        }
    }

    /// The ladder good => weakly good => nice => weakly fair => mediocre,
    /// together with good => fair => weakly fair.
    pub fn ladder_holds(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        implies(self.good, self.weakly_good)
            && implies(self.good, self.fair)
            && implies(self.weakly_good, self.nice)
            && implies(self.nice, self.weakly_fair)
            && implies(self.fair, self.weakly_fair)
            && implies(self.weakly_fair, self.mediocre)
    }
}

/// Endpoints of one block of `nu`, in doubled units.
#[derive(Debug, Clone, Copy)]
struct BlockEnds {
    first: i64,
    last: i64,
}

fn block_ends(datum: &ParabolicDatum, nu: &Weight) -> Vec<BlockEnds> {
    nu.blocks(datum)
        .map(|b| BlockEnds {
            first: b[0].doubled(),
            last: b[b.len() - 1].doubled(),
        })
        .collect()
}

/// Pairwise evaluation of every positivity condition over all `i < j`.
pub fn classify(datum: &ParabolicDatum, lambda: &LambdaParam) -> RangeClass {
    assert_lambda_matches(datum, lambda);
    let ends = block_ends(datum, &nu(datum, lambda));
    let (mut good, mut weakly_good, mut nice) = (true, true, true);
    let (mut fair, mut weakly_fair, mut mediocre) = (true, true, true);
    for (i, a) in ends.iter().enumerate() {
        for b in &ends[i + 1..] {
            good &= a.last > b.first;
            weakly_good &= a.last >= b.first;
            nice &= a.first >= b.first && a.last >= b.last;
            let (sum_a, sum_b) = (a.first + a.last, b.first + b.last);
            fair &= sum_a > sum_b;
            weakly_fair &= sum_a >= sum_b;
            mediocre &= a.first >= b.first || a.last >= b.last;
        }
    }
    RangeClass::from_flags(good, weakly_good, nice, fair, weakly_fair, mediocre)
}

/// Adjacent-gap form of the nice range: `lambda_{i+1} - lambda_i <= min{n_i, n_{i+1}}`.
pub fn nice_gap_check(datum: &ParabolicDatum, lambda: &LambdaParam) -> bool {
    assert_lambda_matches(datum, lambda);
    (1..datum.r()).all(|i| lambda.gap(i) <= datum.n_at(i).min(datum.n_at(i + 1)) as i64)
}
