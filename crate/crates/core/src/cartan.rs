//! Cartan data of type G2 in the fundamental-weight basis.
//!
//! Weights are integer pairs `c1 Λ1 + c2 Λ2`. The simple roots are the
//! columns of the Cartan matrix
//!
//! ```text
//!     [ 2  -3 ]
//!     [-1   2 ]
//! ```
//!
//! so `α1 = 2Λ1 - Λ2` and `α2 = -3Λ1 + 2Λ2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A color of the Dynkin diagram: `1` (short root) or `2` (long root).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Index {
    One,
    Two,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::One, Index::Two];

    pub fn as_u8(self) -> u8 {
        match self {
            Index::One => 1,
            Index::Two => 2,
        }
    }

    pub fn other(self) -> Index {
        match self {
            Index::One => Index::Two,
            Index::Two => Index::One,
        }
    }
}

impl TryFrom<u8> for Index {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self, Error> {
        match v {
            1 => Ok(Index::One),
            2 => Ok(Index::Two),
            _ => Err(Error::InvalidIndex(v as i64)),
        }
    }
}

impl TryFrom<i64> for Index {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self, Error> {
        match v {
            1 => Ok(Index::One),
            2 => Ok(Index::Two),
            _ => Err(Error::InvalidIndex(v)),
        }
    }
}

impl From<Index> for u8 {
    fn from(i: Index) -> u8 {
        i.as_u8()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// An element of the weight lattice `P = ZΛ1 ⊕ ZΛ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Weight {
    pub c1: i32,
    pub c2: i32,
}

impl Weight {
    pub const ZERO: Weight = Weight { c1: 0, c2: 0 };

    pub const fn new(c1: i32, c2: i32) -> Self {
        Weight { c1, c2 }
    }

    /// The fundamental weight `Λ_i`.
    pub fn fundamental(i: Index) -> Self {
        match i {
            Index::One => Weight::new(1, 0),
            Index::Two => Weight::new(0, 1),
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }

    pub fn coeff(&self, i: Index) -> i32 {
        match i {
            Index::One => self.c1,
            Index::Two => self.c2,
        }
    }

    /// Returns `self` unchanged if dominant, otherwise an error.
    pub fn dominant(self) -> Result<Self, Error> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NonDominant(self))
        }
    }

    /// The simple reflection `μ ↦ μ - ⟨h_i, μ⟩ α_i`.
    pub fn reflect(self, i: Index) -> Self {
        self - simple_root(i) * pairing(i, self)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.c1 - o.c1, self.c2 - o.c2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c1, -self.c2)
    }
}

impl Mul<i32> for Weight {
    type Output = Weight;
    fn mul(self, k: i32) -> Weight {
        Weight::new(self.c1 * k, self.c2 * k)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.c1, self.c2)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"m,n"`: two decimal integers, one comma, no spaces.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("weight must look like `m,n`, got `{s}`"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let int = |t: &str| {
            if t.is_empty() || t.trim() != t {
                return Err(bad());
            }
            t.parse::<i32>().map_err(|_| bad())
        };
        Ok(Weight::new(int(a)?, int(b)?))
    }
}

/// `⟨h_i, w⟩`: the i-th coefficient of `w` in the fundamental basis.
pub fn pairing(i: Index, w: Weight) -> i32 {
    w.coeff(i)
}

/// The Cartan matrix entry `a_{ij} = ⟨h_i, α_j⟩`.
pub fn cartan_entry(i: Index, j: Index) -> i32 {
    match (i, j) {
        (Index::One, Index::One) | (Index::Two, Index::Two) => 2,
        (Index::One, Index::Two) => -3,
        (Index::Two, Index::One) => -1,
    }
}

/// The simple root `α_i`, the i-th column of the Cartan matrix.
pub fn simple_root(i: Index) -> Weight {
    Weight::new(cartan_entry(Index::One, i), cartan_entry(Index::Two, i))
}

/// Weyl dimension of `V(mΛ1 + nΛ2)`.
///
/// Verification oracle only; nothing in the generation path calls it.
/// With `M = m+1`, `N = n+1` the pairings of `λ+ρ` with the six positive
/// coroots are `M, N, M+N, M+2N, M+3N, 2M+3N` and their values at `ρ`
/// multiply to 120.
pub fn weyl_dim(w: Weight) -> Result<u64, Error> {
    let w = w.dominant()?;
    let m = w.c1 as u64 + 1;
    let n = w.c2 as u64 + 1;
    Ok(m * n * (m + n) * (m + 2 * n) * (m + 3 * n) * (2 * m + 3 * n) / 120)
}
