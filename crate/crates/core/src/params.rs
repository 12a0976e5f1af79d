//! Parabolic data, the character `lambda`, and weights on the diagonal torus.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::halfint::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("the parabolic datum has no blocks")]
    EmptyDatum,
    #[error("block {block} is the forbidden pair (0,0)")]
    ZeroPair { block: usize },
    #[error("lambda has {got} entries but the datum has {expected} blocks")]
    LengthMismatch { expected: usize, got: usize },
}

/// Ordered sequence of pairs `(p_i, q_i)` fixing a theta-stable parabolic of
/// `U(p,q)` up to `K`-conjugacy.
///
/// Block indices in the public API are 1-based, matching `[t]^(j)` notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct ParabolicDatum {
    pairs: Vec<(usize, usize)>,
}

impl ParabolicDatum {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, InputError> {
        if pairs.is_empty() {
            return Err(InputError::EmptyDatum);
        }
        if let Some(pos) = pairs.iter().position(|&pair| pair == (0, 0)) {
            return Err(InputError::ZeroPair { block: pos + 1 });
        }
        Ok(ParabolicDatum { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.pairs.len()
    }

    /// `p_i`, 1-based.
    pub fn p_at(&self, i: usize) -> usize {
        self.pairs[i - 1].0
    }

    /// `q_i`, 1-based.
    pub fn q_at(&self, i: usize) -> usize {
        self.pairs[i - 1].1
    }

    /// `n_i = p_i + q_i`, 1-based.
    pub fn n_at(&self, i: usize) -> usize {
        let (p, q) = self.pairs[i - 1];
        p + q
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(p, q)| p + q)
    }

    pub fn p(&self) -> usize {
        self.pairs.iter().map(|pair| pair.0).sum()
    }

    pub fn q(&self) -> usize {
        self.pairs.iter().map(|pair| pair.1).sum()
    }

    pub fn n(&self) -> usize {
        self.p() + self.q()
    }

    /// 0-based offset of the first coordinate of block `i` (1-based).
    pub fn block_offset(&self, i: usize) -> usize {
        self.block_sizes().take(i - 1).sum()
    }
}

impl TryFrom<Vec<(usize, usize)>> for ParabolicDatum {
    type Error = InputError;
    fn try_from(pairs: Vec<(usize, usize)>) -> Result<Self, InputError> {
        ParabolicDatum::new(pairs)
    }
}

impl From<ParabolicDatum> for Vec<(usize, usize)> {
    fn from(datum: ParabolicDatum) -> Self {
        datum.pairs
    }
}

/// One integer per block: the differential of the character `C_lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaParam {
    values: Vec<i64>,
}

impl LambdaParam {
    pub fn new(values: Vec<i64>) -> Self {
        LambdaParam { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `lambda_i`, 1-based.
    pub fn at(&self, i: usize) -> i64 {
        self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `lambda_{i+1} - lambda_i`, 1-based `i`.
    pub fn gap(&self, i: usize) -> i64 {
        self.values[i] - self.values[i - 1]
    }

    /// Adds `c` to every block value.
    pub fn translated(&self, c: i64) -> Self {
        LambdaParam::new(self.values.iter().map(|v| v + c).collect())
    }

    /// The full length-`n` coordinate vector with `lambda_i` repeated `n_i` times.
    pub fn expand(&self, datum: &ParabolicDatum) -> Weight {
        assert_lambda_matches(datum, self);
        let coords = datum
            .block_sizes()
            .zip(&self.values)
            .flat_map(|(n_i, &v)| std::iter::repeat_n(HalfInt::from_int(v), n_i))
            .collect();
        Weight::new(coords)
    }
}

pub(crate) fn assert_lambda_matches(datum: &ParabolicDatum, lambda: &LambdaParam) {
    assert_eq!(
        datum.r(),
        lambda.len(),
        "lambda length must equal the number of blocks"
    );
}

/// A vector of `n` half-integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<HalfInt>,
}

impl Weight {
    pub fn new(coords: Vec<HalfInt>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinates of block `i` (1-based) under the datum's block sizes.
    pub fn block(&self, datum: &ParabolicDatum, i: usize) -> &[HalfInt] {
        let start = datum.block_offset(i);
        &self.coords[start..start + datum.n_at(i)]
    }

    /// `nu^(i)_j` with both indices 1-based.
    pub fn entry(&self, datum: &ParabolicDatum, i: usize, j: usize) -> HalfInt {
        self.block(datum, i)[j - 1]
    }

    pub fn blocks<'a>(&'a self, datum: &'a ParabolicDatum) -> impl Iterator<Item = &'a [HalfInt]> {
        (1..=datum.r()).map(move |i| self.block(datum, i))
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

/// Checks the datum and `lambda` together and hands them back typed.
pub fn validate_input(
    pairs: &[(usize, usize)],
    lambda: &[i64],
) -> Result<(ParabolicDatum, LambdaParam), InputError> {
    let datum = ParabolicDatum::new(pairs.to_vec())?;
    if lambda.len() != datum.r() {
        return Err(InputError::LengthMismatch {
            expected: datum.r(),
            got: lambda.len(),
        });
    }
    Ok((datum, LambdaParam::new(lambda.to_vec())))
}
