//! Exact half-integer arithmetic.
//!
//! Coordinates of `rho` are half-integers whenever `n` is even, so every
//! weight in this crate is stored as a doubled integer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A number of the form `k/2` with `k` an integer, stored as `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { doubled: 2 * value }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integral(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this half-integer is integral.
    pub const fn to_int(self) -> Option<i64> {
        if self.is_integral() {
            Some(self.doubled / 2)
        } else {
            None
        }
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled.cmp(&other.doubled)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.doubled -= rhs.doubled;
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

/// Integers print plainly; odd halves print as `k/2`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.doubled),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        assert_eq!(HalfInt::from_doubled(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_doubled(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(-4).to_string(), "-4");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn integrality() {
        assert!(HalfInt::from_doubled(4).is_integral());
        assert!(!HalfInt::from_doubled(-3).is_integral());
        assert_eq!(HalfInt::from_doubled(-3).to_int(), None);
        assert_eq!(HalfInt::from_doubled(-6).to_int(), Some(-3));
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(a in -200i64..200, b in -200i64..200) {
            let (x, y) = (HalfInt::from_doubled(a), HalfInt::from_doubled(b));
            prop_assert_eq!((x + y) - y, x);
            prop_assert_eq!(x - y, -(y - x));
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        }
    }
}
