//! Small dense linear algebra over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::LatticeVector;

fn to_rational_rows(rows: &[LatticeVector]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.coords().iter().map(|c| BigRational::from_integer(c.clone())).collect())
        .collect()
}

/// Reduces `m` to row echelon form in place and returns the pivot columns.
fn echelon(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..ncols {
                    let delta = &f * &m[row][c];
                    m[i][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[LatticeVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_rational_rows(rows);
    echelon(&mut m).len()
}

pub(crate) fn rank_of<'a>(rows: impl IntoIterator<Item = &'a LatticeVector>) -> usize {
    let rows: Vec<LatticeVector> = rows.into_iter().cloned().collect();
    rank(&rows)
}

/// Solves `λ · basis = target` for a square invertible `basis` (rows).
pub(crate) fn solve_row_combination(
    basis: &[LatticeVector],
    target: &LatticeVector,
) -> Option<Vec<BigRational>> {
    let d = basis.len();
    // Augmented system: columns of basis are the equations.
    let mut m: Vec<Vec<BigRational>> = (0..target.rank())
        .map(|j| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(b[j].clone()))
                .collect();
            row.push(BigRational::from_integer(target[j].clone()));
            row
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.len() != d || pivots.contains(&d) {
        return None;
    }
    // Inconsistent rows would have produced a pivot in the last column.
    Some((0..d).map(|i| m[i][d].clone()).collect())
}

pub(crate) fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}
