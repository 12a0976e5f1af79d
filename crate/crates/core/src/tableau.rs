//! Signed tableaux, `nu`-quasitableaux, and their partition into skew columns.
//!
//! A [`PartitionedTableau`] is a Young diagram whose cells carry an optional
//! sign, an optional entry, and the index of the skew column (block) the cell
//! belongs to. The same type represents the signed tableau `S_±`, the
//! quasitableau `S`, and the q-consistent partition `S = ⊔ S_i`.
//!
//! Row and column indices are 1-based throughout.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::halfint::HalfInt;
use crate::params::{LambdaParam, ParabolicDatum, Weight};
use crate::ranges;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub sign: Option<Sign>,
    pub entry: Option<HalfInt>,
    pub block: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableauKind {
    SignedOnly,
    EntriesOnly,
    Both,
}

impl TableauKind {
    pub fn has_signs(self) -> bool {
        matches!(self, TableauKind::SignedOnly | TableauKind::Both)
    }

    pub fn has_entries(self) -> bool {
        matches!(self, TableauKind::EntriesOnly | TableauKind::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("cell ({row},{col}) appears twice")]
    DuplicateCell { row: usize, col: usize },
    #[error("cells do not form a left-justified diagram with weakly decreasing rows")]
    NotYoungDiagram,
    #[error("signs do not alternate in row {row}")]
    SignsDoNotAlternate { row: usize },
    #[error("cell ({row},{col}) does not match the tableau kind")]
    KindMismatch { row: usize, col: usize },
    #[error("cell ({row},{col}) has block index {block} outside 1..={r}")]
    BlockOutOfRange {
        row: usize,
        col: usize,
        block: usize,
        r: usize,
    },
    #[error("block {block} has two cells in row {row}")]
    NotSkewColumn { block: usize, row: usize },
    #[error("the union of blocks 1..={block} is not a Young diagram")]
    PrefixNotYoung { block: usize },
    #[error("entries of block {block} do not decrease by exactly one")]
    NotDifferenceOne { block: usize },
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Slot {
    sign: Option<Sign>,
    entry: Option<HalfInt>,
    block: usize,
}

/// Young diagram with signs and/or entries and a skew-column labelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedTableau {
    rows: Vec<Vec<Slot>>,
    blocks: usize,
    kind: TableauKind,
}

impl PartitionedTableau {
    /// Assembles a tableau from explicit cells and checks every structural
    /// invariant: Young shape, alternating signs, one cell per row and block,
    /// Young prefix unions, and difference-one entries.
    pub fn from_cells(
        cells: &[Cell],
        blocks: usize,
        kind: TableauKind,
    ) -> Result<Self, TableauError> {
        let height = cells.iter().map(|c| c.row).max().unwrap_or(0);
        let mut grid: Vec<Vec<Option<Slot>>> = vec![Vec::new(); height];
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(TableauError::NotYoungDiagram);
            }
            if c.block == 0 || c.block > blocks {
                return Err(TableauError::BlockOutOfRange {
                    row: c.row,
                    col: c.col,
                    block: c.block,
                    r: blocks,
                });
            }
            if c.sign.is_some() != kind.has_signs() || c.entry.is_some() != kind.has_entries() {
                return Err(TableauError::KindMismatch {
                    row: c.row,
                    col: c.col,
                });
            }
            let row = &mut grid[c.row - 1];
            if row.len() < c.col {
                row.resize(c.col, None);
            }
            if row[c.col - 1].is_some() {
                return Err(TableauError::DuplicateCell {
                    row: c.row,
                    col: c.col,
                });
            }
            row[c.col - 1] = Some(Slot {
                sign: c.sign,
                entry: c.entry,
                block: c.block,
            });
        }
        let rows = grid
            .into_iter()
            .map(|row| row.into_iter().collect::<Option<Vec<Slot>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or(TableauError::NotYoungDiagram)?;
        let t = PartitionedTableau { rows, blocks, kind };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), TableauError> {
        if self.rows.iter().any(|r| r.is_empty())
            || self.rows.windows(2).any(|w| w[0].len() < w[1].len())
        {
            return Err(TableauError::NotYoungDiagram);
        }
        for (ri, row) in self.rows.iter().enumerate() {
            if self.kind.has_signs() && row.windows(2).any(|w| w[0].sign == w[1].sign) {
                return Err(TableauError::SignsDoNotAlternate { row: ri + 1 });
            }
        }
        for j in 1..=self.blocks {
            let mut rows_seen = Vec::new();
            for (ri, row) in self.rows.iter().enumerate() {
                let count = row.iter().filter(|s| s.block == j).count();
                if count > 1 {
                    return Err(TableauError::NotSkewColumn {
                        block: j,
                        row: ri + 1,
                    });
                }
                if count == 1 {
                    rows_seen.push(ri);
                }
            }
            if rows_seen.is_empty() {
                return Err(TableauError::EmptyBlock { block: j });
            }
            // Prefix union S^j: in each row the cells with block <= j must be
            // a left segment, and those segment lengths must weakly decrease.
            let mut prev = usize::MAX;
            for row in &self.rows {
                let len = row.iter().take_while(|s| s.block <= j).count();
                if row[len..].iter().any(|s| s.block <= j) || len > prev {
                    return Err(TableauError::PrefixNotYoung { block: j });
                }
                prev = len;
            }
            if self.kind.has_entries() {
                let entries: Vec<HalfInt> = self.block_cells(j).filter_map(|c| c.entry).collect();
                if entries.windows(2).any(|w| w[0] - w[1] != HalfInt::ONE) {
                    return Err(TableauError::NotDifferenceOne { block: j });
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    /// Number of skew columns `r`.
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows[row - 1].len()
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<Cell> {
        let slot = self
            .rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)?;
        Some(Self::make_cell(row, col, slot))
    }

    fn make_cell(row: usize, col: usize, slot: &Slot) -> Cell {
        Cell {
            row,
            col,
            sign: slot.sign,
            entry: slot.entry,
            block: slot.block,
        }
    }

    /// All cells, row by row, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().enumerate().flat_map(|(ri, row)| {
            row.iter()
                .enumerate()
                .map(move |(ci, slot)| Self::make_cell(ri + 1, ci + 1, slot))
        })
    }

    /// Cells of block `j`, top to bottom. `[t]^(j)` is the `t`-th item.
    pub fn block_cells(&self, j: usize) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(move |c| c.block == j)
    }

    /// Sign sequence of row `row`, if the tableau carries signs.
    pub fn row_signs(&self, row: usize) -> Option<Vec<Sign>> {
        self.rows[row - 1].iter().map(|s| s.sign).collect()
    }

    pub fn row_entries(&self, row: usize) -> Option<Vec<HalfInt>> {
        self.rows[row - 1].iter().map(|s| s.entry).collect()
    }

    pub fn row_blocks(&self, row: usize) -> Vec<usize> {
        self.rows[row - 1].iter().map(|s| s.block).collect()
    }

    /// Rows as sign strings such as `"-+-"`.
    pub fn sign_strings(&self) -> Option<Vec<String>> {
        (1..=self.num_rows())
            .map(|r| {
                self.row_signs(r)
                    .map(|signs| signs.into_iter().map(Sign::symbol).collect())
            })
            .collect()
    }

    pub fn count_signs(&self, block: Option<usize>) -> (usize, usize) {
        let mut counts = (0, 0);
        for c in self.cells().filter(|c| block.is_none_or(|b| c.block == b)) {
            match c.sign {
                Some(Sign::Plus) => counts.0 += 1,
                Some(Sign::Minus) => counts.1 += 1,
                None => {}
            }
        }
        counts
    }

    /// Drops the entries, keeping signs and blocks.
    pub fn signed_skeleton(&self) -> Option<PartitionedTableau> {
        if !self.kind.has_signs() {
            return None;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|s| Slot { entry: None, ..*s }).collect())
            .collect();
        Some(PartitionedTableau {
            rows,
            blocks: self.blocks,
            kind: TableauKind::SignedOnly,
        })
    }
}

/// Order of the first column of the construction. Any order yields the same
/// signed tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FirstColumnOrder {
    #[default]
    PlusFirst,
    MinusFirst,
}

/// Output of the stepwise construction, with the rows skipped at each step.
#[derive(Debug, Clone)]
pub struct SignedConstruction {
    pub tableau: PartitionedTableau,
    /// `skipped[j-1]` lists the rows (1-based, in the representative before the
    /// step's reordering) skipped while placing block `j`.
    pub skipped: Vec<Vec<usize>>,
}

/// The signed tableau attached to the parabolic, built with pluses on top of
/// the first column.
pub fn build_signed_tableau(datum: &ParabolicDatum) -> PartitionedTableau {
    build_signed_tableau_with(datum, FirstColumnOrder::PlusFirst).tableau
}

/// Stepwise construction: each step adds at most one sign per row end, top to
/// bottom, alternating with the row end; a row whose demanded sign has run out
/// is skipped; leftover signs start new rows (pluses first); then rows are
/// stably sorted by length so that the result is again a Young diagram.
pub fn build_signed_tableau_with(
    datum: &ParabolicDatum,
    order: FirstColumnOrder,
) -> SignedConstruction {
    let mut rows: Vec<Vec<Slot>> = Vec::with_capacity(datum.n());
    let mut skipped = Vec::with_capacity(datum.r());
    let slot = |sign, block| Slot {
        sign: Some(sign),
        entry: None,
        block,
    };

    let (p1, q1) = datum.pairs()[0];
    let first: Vec<Sign> = match order {
        FirstColumnOrder::PlusFirst => [(Sign::Plus, p1), (Sign::Minus, q1)],
        FirstColumnOrder::MinusFirst => [(Sign::Minus, q1), (Sign::Plus, p1)],
    }
    .into_iter()
    .flat_map(|(s, k)| std::iter::repeat_n(s, k))
    .collect();
    rows.extend(first.into_iter().map(|s| vec![slot(s, 1)]));
    skipped.push(Vec::new());

    for (j, &(p_j, q_j)) in datum.pairs().iter().enumerate().skip(1) {
        let block = j + 1;
        let (mut plus_left, mut minus_left) = (p_j, q_j);
        let mut skips = Vec::new();
        for (ri, row) in rows.iter_mut().enumerate() {
            if plus_left + minus_left == 0 {
                break;
            }
            let demanded = row.last().and_then(|s| s.sign).expect("signed row").flip();
            let left = match demanded {
                Sign::Plus => &mut plus_left,
                Sign::Minus => &mut minus_left,
            };
            if *left == 0 {
                skips.push(ri + 1);
            } else {
                *left -= 1;
                row.push(slot(demanded, block));
            }
        }
        rows.extend((0..plus_left).map(|_| vec![slot(Sign::Plus, block)]));
        rows.extend((0..minus_left).map(|_| vec![slot(Sign::Minus, block)]));
        rows.sort_by_key(|row| std::cmp::Reverse(row.len()));
        skipped.push(skips);
    }

    SignedConstruction {
        tableau: PartitionedTableau {
            rows,
            blocks: datum.r(),
            kind: TableauKind::SignedOnly,
        },
        skipped,
    }
}

/// Writes `nu^(j)_1, ..., nu^(j)_{n_j}` top to bottom into the cells of each
/// block `j` of a signed tableau built for the same datum.
pub fn fill_entries(
    signed: &PartitionedTableau,
    datum: &ParabolicDatum,
    nu: &Weight,
) -> PartitionedTableau {
    assert_eq!(signed.blocks, datum.r());
    let mut next: Vec<usize> = vec![0; datum.r()];
    let rows = signed
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| {
                    let t = next[s.block - 1];
                    next[s.block - 1] += 1;
                    Slot {
                        entry: Some(nu.block(datum, s.block)[t]),
                        ..*s
                    }
                })
                .collect()
        })
        .collect();
    let kind = if signed.kind.has_signs() {
        TableauKind::Both
    } else {
        TableauKind::EntriesOnly
    };
    PartitionedTableau {
        rows,
        blocks: signed.blocks,
        kind,
    }
}

/// The `nu`-quasitableau attached to `A_q(lambda)` together with its signs and
/// q-consistent partition.
pub fn build_quasitableau(datum: &ParabolicDatum, lambda: &LambdaParam) -> PartitionedTableau {
    fill_entries(
        &build_signed_tableau(datum),
        datum,
        &ranges::nu(datum, lambda),
    )
}

/// Reorders rows of equal length into a fixed order: length descending, then
/// sign string (plus before minus), then entries. Two representatives of the
/// same signed tableau have equal canonical sign strings.
///
/// The block labels travel with their rows, so the labelling of the result is
/// only a valid partition when the reordering respects it.
pub fn canonicalize(t: &PartitionedTableau) -> PartitionedTableau {
    let mut rows = t.rows.clone();
    rows.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| cmp_by(a, b, |s| s.sign))
            .then_with(|| cmp_by(a, b, |s| s.entry))
    });
    PartitionedTableau {
        rows,
        blocks: t.blocks,
        kind: t.kind,
    }
}

fn cmp_by<K: Ord>(a: &[Slot], b: &[Slot], key: impl Fn(&Slot) -> K) -> Ordering {
    a.iter().map(&key).cmp(b.iter().map(&key))
}

/// Reason a labelled signed tableau is not the q-consistent partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QViolation {
    /// The labelling is not a partition into skew columns.
    NotAPartition { reason: String },
    /// The tableau has a different number of blocks than the datum.
    BlockCount { expected: usize, got: usize },
    /// Block `block` does not carry exactly `p_j` pluses and `q_j` minuses.
    SignCount {
        block: usize,
        pluses: usize,
        minuses: usize,
    },
    /// After the first skipped row of block `block`, row `row` of `S^block`
    /// ends with a different sign.
    MixedRowEnds { block: usize, row: usize },
    /// The tableau carries no signs.
    Unsigned,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QConsistency {
    pub consistent: bool,
    pub violation: Option<QViolation>,
}

/// Checks the two characterizing properties of a q-consistent partition on
/// this representative: sign counts per block, and equal row-end signs from
/// the first skipped row of each block down to its last row.
pub fn check_q_consistent(t: &PartitionedTableau, datum: &ParabolicDatum) -> QConsistency {
    match find_q_violation(t, datum) {
        None => QConsistency {
            consistent: true,
            violation: None,
        },
        Some(v) => QConsistency {
            consistent: false,
            violation: Some(v),
        },
    }
}

fn find_q_violation(t: &PartitionedTableau, datum: &ParabolicDatum) -> Option<QViolation> {
    if !t.kind.has_signs() {
        return Some(QViolation::Unsigned);
    }
    if t.blocks != datum.r() {
        return Some(QViolation::BlockCount {
            expected: datum.r(),
            got: t.blocks,
        });
    }
    if let Err(e) = t.validate() {
        return Some(QViolation::NotAPartition {
            reason: e.to_string(),
        });
    }
    for (j, &(p_j, q_j)) in (1..).zip(datum.pairs()) {
        let (pluses, minuses) = t.count_signs(Some(j));
        if (pluses, minuses) != (p_j, q_j) {
            return Some(QViolation::SignCount {
                block: j,
                pluses,
                minuses,
            });
        }
    }
    for j in 2..=t.blocks {
        let touched: Vec<bool> = t
            .rows
            .iter()
            .map(|r| r.iter().any(|s| s.block == j))
            .collect();
        let in_prev: Vec<bool> = t.rows.iter().map(|r| r[0].block < j).collect();
        let Some(last) = touched.iter().rposition(|&x| x) else {
            continue;
        };
        let Some(first_skip) = (0..last).find(|&ri| in_prev[ri] && !touched[ri]) else {
            continue;
        };
        let row_end = |ri: usize| {
            t.rows[ri]
                .iter()
                .take_while(|s| s.block <= j)
                .last()
                .and_then(|s| s.sign)
        };
        let expected = row_end(first_skip);
        if let Some(ri) = (first_skip..=last).find(|&ri| row_end(ri) != expected) {
            return Some(QViolation::MixedRowEnds {
                block: j,
                row: ri + 1,
            });
        }
    }
    None
}
