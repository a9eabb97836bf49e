//! Hilbert bases of `c ∩ L` by enumerating fundamental parallelepipeds.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    cone::is_pointed, hnf::hermite_rows, integer_kernel, linalg, LatticeError, LatticeSubgroup, LatticeVector,
    RationalCone,
};

/// The minimal generating set of the monoid `c ∩ L`, sorted lexicographically.
///
/// Every irreducible element lies in the half-open parallelepiped spanned by
/// some linearly independent set of extreme rays (or is one of those rays),
/// so those lattice points are the only candidates. Candidates are then
/// filtered by degree with respect to a strictly positive functional.
pub fn hilbert_basis(c: &RationalCone, lattice: &LatticeSubgroup) -> Result<Vec<LatticeVector>, LatticeError> {
    if lattice.ambient_rank() != c.ambient_rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: c.ambient_rank(),
            found: lattice.ambient_rank(),
        });
    }
    if !is_pointed(c) {
        return Err(LatticeError::NonPointed);
    }

    // Restrict L to the linear span of c and work in coordinates of that basis.
    let basis = lattice.basis();
    let r = basis.len();
    let span_eqs: Vec<LatticeVector> = c
        .equations()
        .iter()
        .map(|e| LatticeVector::new(basis.iter().map(|b| b.dot(e)).collect()))
        .collect();
    let kernel = integer_kernel(r, &span_eqs)?;
    let sub_basis: Vec<LatticeVector> = kernel.iter().map(|k| combination(k, basis, c.ambient_rank())).collect();
    let d = sub_basis.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let local_ineqs: Vec<LatticeVector> = c
        .facet_normals()
        .iter()
        .map(|f| LatticeVector::new(sub_basis.iter().map(|b| b.dot(f)).collect()))
        .collect();
    let local = RationalCone::from_inequalities(d, &local_ineqs, &[])?;

    let local_basis = local_hilbert_basis(&local);
    let mut out: Vec<LatticeVector> = local_basis
        .iter()
        .map(|y| combination(y, &sub_basis, c.ambient_rank()))
        .collect();
    out.sort();
    Ok(out)
}

fn combination(coeffs: &LatticeVector, basis: &[LatticeVector], n: usize) -> LatticeVector {
    basis
        .iter()
        .zip(coeffs.coords())
        .fold(LatticeVector::zero(n), |acc, (b, k)| &acc + &b.scale(k))
}

/// Hilbert basis of a pointed full-dimensional cone against ℤᵈ.
fn local_hilbert_basis(c: &RationalCone) -> Vec<LatticeVector> {
    let d = c.ambient_rank();
    let rays = c.rays();
    let grading = c.interior_functional();

    let mut candidates: BTreeSet<(BigInt, LatticeVector)> = rays
        .iter()
        .map(|ray| (grading.dot(ray), ray.clone()))
        .collect();
    for subset in index_subsets(rays.len(), d) {
        let simplex: Vec<LatticeVector> = subset.iter().map(|&i| rays[i].clone()).collect();
        if linalg::rank(&simplex) < d {
            continue;
        }
        for p in parallelepiped_points(&simplex) {
            if !p.is_zero() {
                candidates.insert((grading.dot(&p), p));
            }
        }
    }

    let mut basis: Vec<(BigInt, LatticeVector)> = Vec::new();
    for (deg, x) in candidates {
        let reducible = basis
            .iter()
            .any(|(hdeg, h)| *hdeg < deg && c.contains(&(&x - h)));
        if !reducible {
            basis.push((deg, x));
        }
    }
    basis.into_iter().map(|(_, x)| x).collect()
}

/// Lattice points `Σ λᵢ rᵢ` with `0 ≤ λᵢ < 1`, for a basis `r` of ℚᵈ.
fn parallelepiped_points(simplex: &[LatticeVector]) -> Vec<LatticeVector> {
    let d = simplex.len();
    // Coset representatives of ℤᵈ / ⟨simplex⟩ are read off the HNF diagonal.
    let (hnf, pivots) = hermite_rows(simplex, d);
    let bounds: Vec<BigInt> = hnf.iter().zip(&pivots).map(|(row, &p)| row[p].clone()).collect();

    let mut out = Vec::new();
    let mut rep = vec![BigInt::zero(); d];
    loop {
        let v = LatticeVector::new(rep.clone());
        let lambda = linalg::solve_row_combination(simplex, &v).expect("simplex is a basis");
        let shift = simplex
            .iter()
            .zip(&lambda)
            .fold(LatticeVector::zero(d), |acc, (r, l)| &acc + &r.scale(&linalg::floor(l)));
        out.push(&v - &shift);

        // odometer over 0 ≤ rep[j] < bounds[j]
        let mut j = 0;
        loop {
            if j == d {
                return out;
            }
            rep[j] += BigInt::one();
            if rep[j] < bounds[j] {
                break;
            }
            rep[j] = BigInt::zero();
            j += 1;
        }
    }
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::group_generated;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn cone(gens: &[&[i64]]) -> RationalCone {
        let gens: Vec<_> = gens.iter().map(|g| v(g)).collect();
        RationalCone::from_generators(gens[0].rank(), &gens).unwrap()
    }

    #[test]
    fn half_line() {
        let hb = hilbert_basis(&cone(&[&[1]]), &LatticeSubgroup::full(1)).unwrap();
        assert_eq!(hb, vec![v(&[1])]);
    }

    #[test]
    fn skew_cone_needs_the_middle_point() {
        // brute force over points with first coordinate ≤ 3: the irreducible ones
        // are (1,0), (1,1), (1,2)
        let hb = hilbert_basis(&cone(&[&[1, 0], &[1, 2]]), &LatticeSubgroup::full(2)).unwrap();
        assert_eq!(hb, vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
    }

    #[test]
    fn orthant() {
        let hb = hilbert_basis(&cone(&[&[1, 0], &[0, 1]]), &LatticeSubgroup::full(2)).unwrap();
        assert_eq!(hb, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn sublattice_is_respected() {
        let lat = group_generated(&[v(&[2, 0]), v(&[0, 2])]).unwrap();
        let hb = hilbert_basis(&cone(&[&[1, 0], &[0, 1]]), &lat).unwrap();
        assert_eq!(hb, vec![v(&[0, 2]), v(&[2, 0])]);

        let lat = group_generated(&[v(&[2]), v(&[3])]).unwrap();
        assert_eq!(hilbert_basis(&cone(&[&[2]]), &lat).unwrap(), vec![v(&[1])]);
    }

    #[test]
    fn lower_dimensional_cone_in_full_lattice() {
        let c = cone(&[&[1, 0, 1], &[1, 2, 1]]);
        let hb = hilbert_basis(&c, &LatticeSubgroup::full(3)).unwrap();
        assert_eq!(hb, vec![v(&[1, 0, 1]), v(&[1, 1, 1]), v(&[1, 2, 1])]);
    }

    #[test]
    fn classic_cone_with_large_determinant() {
        // cone{(1,0),(1,5)} ∩ ℤ²: every (1,k), 0 ≤ k ≤ 5, is irreducible
        let hb = hilbert_basis(&cone(&[&[1, 0], &[1, 5]]), &LatticeSubgroup::full(2)).unwrap();
        assert_eq!(hb.len(), 6);
        // cone{(0,1),(5,-3)}: the continued-fraction chain (0,1),(2,-1),(3,-2)... down to (5,-3)
        let hb = hilbert_basis(&cone(&[&[0, 1], &[5, -3]]), &LatticeSubgroup::full(2)).unwrap();
        assert_eq!(hb, vec![v(&[0, 1]), v(&[1, 0]), v(&[2, -1]), v(&[5, -3])]);
    }

    #[test]
    fn non_pointed_is_an_error() {
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(
            hilbert_basis(&c, &LatticeSubgroup::full(2)).unwrap_err(),
            LatticeError::NonPointed
        );
    }
}
