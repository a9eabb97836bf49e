//! Hermite normal form, sublattices of ℤⁿ and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{check_rank, LatticeError, LatticeVector};

/// Row-style Hermite normal form `U·A = H` with `U` unimodular.
struct Hermite {
    /// Nonzero rows of `H`, in echelon form with positive pivots and the
    /// entries above each pivot reduced into `[0, pivot)`.
    rows: Vec<LatticeVector>,
    pivots: Vec<usize>,
    /// Rows of `U` whose image under `A` is zero; a basis of the left kernel.
    kernel: Vec<LatticeVector>,
}

fn hermite(a: &[LatticeVector], ncols: usize) -> Hermite {
    let m = a.len();
    let mut rows: Vec<LatticeVector> = a.to_vec();
    let mut transform: Vec<LatticeVector> = (0..m).map(|i| LatticeVector::unit(m, i)).collect();
    let mut pivots = Vec::new();
    let mut top = 0;

    for col in 0..ncols {
        if top == m {
            break;
        }
        loop {
            // Smallest nonzero entry in this column moves to the top.
            let best = (top..m)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            transform.swap(top, best);
            let mut done = true;
            for i in top + 1..m {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                rows[i] = rows[i].combine(&BigInt::one(), &rows[top], &q);
                transform[i] = transform[i].combine(&BigInt::one(), &transform[top], &q);
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top == m || rows[top][col].is_zero() {
            continue;
        }
        if rows[top][col].is_negative() {
            rows[top] = -&rows[top];
            transform[top] = -&transform[top];
        }
        for i in 0..top {
            let q = rows[i][col].div_floor(&rows[top][col]);
            if !q.is_zero() {
                rows[i] = rows[i].combine(&BigInt::one(), &rows[top], &q);
                transform[i] = transform[i].combine(&BigInt::one(), &transform[top], &q);
            }
        }
        pivots.push(col);
        top += 1;
    }

    let kernel = transform.split_off(top);
    rows.truncate(top);
    Hermite {
        rows,
        pivots,
        kernel,
    }
}

/// Echelon rows and pivot columns of the Hermite normal form.
pub(crate) fn hermite_rows(a: &[LatticeVector], ncols: usize) -> (Vec<LatticeVector>, Vec<usize>) {
    let h = hermite(a, ncols);
    (h.rows, h.pivots)
}

/// The subgroup of ℤⁿ generated by a finite set of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSubgroup {
    ambient_rank: usize,
    basis: Vec<LatticeVector>,
    pivots: Vec<usize>,
}

impl LatticeSubgroup {
    pub fn full(ambient_rank: usize) -> Self {
        LatticeSubgroup {
            ambient_rank,
            basis: (0..ambient_rank)
                .map(|i| LatticeVector::unit(ambient_rank, i))
                .collect(),
            pivots: (0..ambient_rank).collect(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis rows in Hermite normal form.
    pub fn basis(&self) -> &[LatticeVector] {
        &self.basis
    }

    /// Index in ℤⁿ when the subgroup has full rank.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_rank).then(|| {
            self.basis
                .iter()
                .zip(&self.pivots)
                .map(|(row, &p)| row[p].clone())
                .product()
        })
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        if x.rank() != self.ambient_rank {
            return false;
        }
        let mut rest = x.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                rest = rest.combine(&BigInt::one(), row, &q);
            }
        }
        rest.is_zero()
    }
}

/// The subgroup `ℤ·gens` of the ambient lattice.
pub fn group_generated(gens: &[LatticeVector]) -> Result<LatticeSubgroup, LatticeError> {
    let first = gens.first().ok_or(LatticeError::EmptyGenerators)?;
    let n = first.rank();
    check_rank(n, gens)?;
    let h = hermite(gens, n);
    Ok(LatticeSubgroup {
        ambient_rank: n,
        basis: h.rows,
        pivots: h.pivots,
    })
}

/// A lattice basis of `{ y ∈ ℤʳ : ⟨y, c⟩ = 0 for every constraint c }`.
pub fn integer_kernel(rank: usize, constraints: &[LatticeVector]) -> Result<Vec<LatticeVector>, LatticeError> {
    check_rank(rank, constraints)?;
    // Row i of the matrix collects coordinate i of every constraint.
    let rows: Vec<LatticeVector> = (0..rank)
        .map(|i| LatticeVector::new(constraints.iter().map(|c| c[i].clone()).collect()))
        .collect();
    Ok(hermite(&rows, constraints.len()).kernel)
}
