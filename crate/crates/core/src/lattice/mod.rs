//! Exact integer lattices and rational polyhedral cones.
//!
//! Everything here works over arbitrary-precision integers. Cones are kept in
//! both representations at once: a minimal set of primitive generating rays
//! and the primitive facet normals (plus equations when the cone is not
//! full-dimensional).

mod cone;
mod faces;
mod hilbert;
mod hnf;
pub(crate) mod linalg;

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use cone::{dual_cone, is_pointed, RationalCone};
pub use faces::{face_lattice, FaceDescriptor};
pub use hilbert::hilbert_basis;
pub use hnf::{group_generated, integer_kernel, LatticeSubgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected ambient rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no generators given")]
    EmptyGenerators,
    #[error("non-pointed: Hilbert basis undefined here")]
    NonPointed,
    #[error("not a face of the cone")]
    NotAFace,
}

/// A point of the ambient lattice ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, axis: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[axis] = BigInt::from(1);
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    /// Coordinates as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|c| c.to_i64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| c * k).collect())
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content. The zero vector is returned unchanged.
    pub fn primitive(&self) -> LatticeVector {
        let g = self.content();
        if g.is_zero() || g == BigInt::from(1) {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == BigInt::from(1)
    }

    /// `a·self − b·other`, the elimination step used throughout.
    pub(crate) fn combine(&self, a: &BigInt, other: &LatticeVector, b: &BigInt) -> LatticeVector {
        LatticeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| a * x - b * y)
                .collect(),
        )
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).sum()
    }
}

impl Index<usize> for LatticeVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_rank(expected: usize, vectors: &[LatticeVector]) -> Result<(), LatticeError> {
    match vectors.iter().find(|v| v.rank() != expected) {
        Some(v) => Err(LatticeError::DimensionMismatch {
            expected,
            found: v.rank(),
        }),
        None => Ok(()),
    }
}
