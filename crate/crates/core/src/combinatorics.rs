//! Overlap and singularity of adjacent skew columns, the table of shared
//! `nu`-values between blocks, and the antitableau predicate.

use serde::Serialize;
use thiserror::Error;

use crate::halfint::HalfInt;
use crate::params::{assert_lambda_matches, LambdaParam, ParabolicDatum, Weight};
use crate::ranges;
use crate::tableau::{Cell, PartitionedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("block pair ({i},{}) is outside 1..={r}", i + 1)]
    BlockOutOfRange { i: usize, r: usize },
    #[error("the tableau carries no entries")]
    MissingEntries,
}

fn check_pair(i: usize, r: usize) -> Result<(), CombinatoricsError> {
    if i == 0 || i + 1 > r {
        Err(CombinatoricsError::BlockOutOfRange { i, r })
    } else {
        Ok(())
    }
}

/// Largest `m` such that, for `u = 1..=m`, cell `k-m+u` of block `i` lies
/// strictly left of cell `u` of block `i+1` (`k = |S_i|`). Zero if no `m` works.
pub fn overlap_by_definition(
    t: &PartitionedTableau,
    i: usize,
) -> Result<usize, CombinatoricsError> {
    check_pair(i, t.blocks())?;
    let c: Vec<Cell> = t.block_cells(i).collect();
    let d: Vec<Cell> = t.block_cells(i + 1).collect();
    let k = c.len();
    let condition = |m: usize| (1..=m).all(|u| c[k - m + u - 1].col < d[u - 1].col);
    Ok((1..=k.min(d.len()))
        .rev()
        .find(|&m| condition(m))
        .unwrap_or(0))
}

/// Closed form `min{p_i, q_{i+1}} + min{p_{i+1}, q_i}`, valid for the
/// q-consistent partition.
pub fn overlap_by_formula(datum: &ParabolicDatum, i: usize) -> Result<usize, CombinatoricsError> {
    check_pair(i, datum.r())?;
    let (p_i, q_i) = datum.pairs()[i - 1];
    let (p_j, q_j) = datum.pairs()[i];
    Ok(p_i.min(q_j) + p_j.min(q_i))
}

/// Number of pairs of equal entries between blocks `i` and `i+1`.
pub fn singularity(t: &PartitionedTableau, i: usize) -> Result<usize, CombinatoricsError> {
    check_pair(i, t.blocks())?;
    if !t.kind().has_entries() {
        return Err(CombinatoricsError::MissingEntries);
    }
    let c: Vec<HalfInt> = t.block_cells(i).filter_map(|c| c.entry).collect();
    let d: Vec<HalfInt> = t.block_cells(i + 1).filter_map(|c| c.entry).collect();
    Ok(c.iter().map(|x| d.iter().filter(|&y| y == x).count()).sum())
}

/// Sizes `R_ij` of the intersections of the value sets of blocks `i` and `j`
/// of `nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RTable {
    r: usize,
    /// Row-major strict upper triangle: `(1,2), (1,3), ..., (2,3), ...`.
    upper: Vec<usize>,
}

impl RTable {
    pub fn blocks(&self) -> usize {
        self.r
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i < j && j <= self.r, "R_{{{i},{j}}} out of range");
        let (i0, j0) = (i - 1, j - 1);
        i0 * (2 * self.r - i0 - 1) / 2 + (j0 - i0 - 1)
    }

    /// `R_ij` for `1 <= i < j <= r`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.upper[self.index(i, j)]
    }

    /// `R_{i,i+1}` for `i = 1..r-1`.
    pub fn adjacent(&self) -> Vec<usize> {
        (1..self.r).map(|i| self.get(i, i + 1)).collect()
    }

    /// All `(i, j, R_ij)` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (1..=self.r).flat_map(move |i| (i + 1..=self.r).map(move |j| (i, j, self.get(i, j))))
    }
}

/// Counts common values of two strictly decreasing sequences.
fn common_values(a: &[HalfInt], b: &[HalfInt]) -> usize {
    let (mut x, mut y, mut n) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Equal => {
                n += 1;
                x += 1;
                y += 1;
            }
            std::cmp::Ordering::Greater => x += 1,
            std::cmp::Ordering::Less => y += 1,
        }
    }
    n
}

pub(crate) fn r_table_from_nu(datum: &ParabolicDatum, nu: &Weight) -> RTable {
    let r = datum.r();
    let blocks: Vec<&[HalfInt]> = nu.blocks(datum).collect();
    let mut upper = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        for j in i + 1..r {
            upper.push(common_values(blocks[i], blocks[j]));
        }
    }
    RTable { r, upper }
}

/// `R_ij` by direct intersection of the block value sets of `nu = lambda + rho`.
pub fn r_table(datum: &ParabolicDatum, lambda: &LambdaParam) -> RTable {
    assert_lambda_matches(datum, lambda);
    r_table_from_nu(datum, &ranges::nu(datum, lambda))
}

/// Entries weakly decrease along rows and strictly decrease down columns.
pub fn is_antitableau(t: &PartitionedTableau) -> Result<bool, CombinatoricsError> {
    if !t.kind().has_entries() {
        return Err(CombinatoricsError::MissingEntries);
    }
    let rows: Vec<Vec<HalfInt>> = (1..=t.num_rows())
        .map(|r| t.row_entries(r).expect("entries present"))
        .collect();
    let rows_ok = rows.iter().all(|row| row.windows(2).all(|w| w[0] >= w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above > below));
    Ok(rows_ok && cols_ok)
}
