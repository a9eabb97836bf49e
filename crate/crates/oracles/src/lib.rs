//! Slow reference implementations for cross-checking `horoflex-core`.
//!
//! Everything works on plain `i64` vectors of small size and shares no code
//! with the library under test. Cone membership goes through Carathéodory
//! (some linearly independent subset of the generators carries the point),
//! group membership through an integer echelon form built by Euclid steps,
//! and semigroup membership through memoized subtraction search.

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rand::Rng;

pub type Vector = Vec<i64>;

type Q = Ratio<i128>;

fn sub(x: &[i64], y: &[i64]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn l1(x: &[i64]) -> i64 {
    x.iter().map(|c| c.abs()).sum()
}

/// Coefficients `c` with `Σ cᵢ colsᵢ = x`, provided the columns are linearly
/// independent and `x` lies in their span.
fn solve_independent(cols: &[&Vector], x: &[i64]) -> Option<Vec<Q>> {
    let n = x.len();
    let k = cols.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|r| {
            let mut row: Vec<Q> = cols.iter().map(|c| Q::from_integer(c[r] as i128)).collect();
            row.push(Q::from_integer(x[r] as i128));
            row
        })
        .collect();
    let mut row = 0;
    for col in 0..k {
        let piv = (row..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, piv);
        let lead = m[row][col];
        for c in col..=k {
            m[row][c] /= lead;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=k {
                    let delta = f * m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k]).collect())
}

/// `x ∈ cone(gens)`, by trying every subset of generators.
pub fn cone_contains(gens: &[Vector], x: &[i64]) -> bool {
    if x.iter().all(|&c| c == 0) {
        return true;
    }
    let k = gens.len();
    assert!(k < 20, "oracle is exponential in the generator count");
    (1u32..1 << k).any(|mask| {
        let cols: Vec<&Vector> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &gens[i]).collect();
        cols.len() <= x.len()
            && solve_independent(&cols, x).is_some_and(|c| c.iter().all(|q| !q.is_negative()))
    })
}

/// The cone contains no line.
pub fn is_pointed(gens: &[Vector]) -> bool {
    gens.iter().all(|g| {
        let neg: Vector = g.iter().map(|c| -c).collect();
        g.iter().all(|&c| c == 0) || !cone_contains(gens, &neg)
    })
}

/// `x ∈ ℤ·gens`.
pub fn group_contains(gens: &[Vector], x: &[i64]) -> bool {
    let n = x.len();
    let mut rows: Vec<Vec<i128>> = gens.iter().map(|g| g.iter().map(|&c| c as i128).collect()).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut top = 0;
    for col in 0..n {
        loop {
            let nonzero: Vec<usize> = (top..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&r) = nonzero.first() {
                    rows.swap(top, r);
                    pivots.push((top, col));
                    top += 1;
                }
                break;
            }
            let small = *nonzero.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            for &r in &nonzero {
                if r != small {
                    let q = rows[r][col] / rows[small][col];
                    let pivot_row = rows[small].clone();
                    for (a, b) in rows[r].iter_mut().zip(&pivot_row) {
                        *a -= q * b;
                    }
                }
            }
        }
    }
    let mut rest: Vec<i128> = x.iter().map(|&c| c as i128).collect();
    for (r, col) in pivots {
        let p = rows[r][col];
        if rest[col] % p != 0 {
            return false;
        }
        let q = rest[col] / p;
        for (a, b) in rest.iter_mut().zip(&rows[r]) {
            *a -= q * b;
        }
    }
    rest.iter().all(|&c| c == 0)
}

/// Membership in `ℕ·gens` inside a pointed cone spanned by `cone_gens`,
/// which must contain every element of `gens`. Subtracting generators while
/// staying in the cone has finitely many outcomes, so the search terminates.
/// Answers are cached across queries.
pub struct SemigroupOracle {
    gens: Vec<Vector>,
    cone_gens: Vec<Vector>,
    in_cone: HashMap<Vector, bool>,
    member: HashMap<Vector, bool>,
}

impl SemigroupOracle {
    pub fn new(gens: &[Vector], cone_gens: &[Vector]) -> Self {
        SemigroupOracle {
            gens: gens.to_vec(),
            cone_gens: cone_gens.to_vec(),
            in_cone: HashMap::new(),
            member: HashMap::new(),
        }
    }

    pub fn cone_contains(&mut self, x: &[i64]) -> bool {
        if let Some(&b) = self.in_cone.get(x) {
            return b;
        }
        let b = cone_contains(&self.cone_gens, x);
        self.in_cone.insert(x.to_vec(), b);
        b
    }

    pub fn contains(&mut self, x: &[i64]) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&b) = self.member.get(x) {
            return b;
        }
        if !self.cone_contains(x) {
            return false;
        }
        let mut found = false;
        for i in 0..self.gens.len() {
            let y = sub(x, &self.gens[i]);
            if self.contains(&y) {
                found = true;
                break;
            }
        }
        self.member.insert(x.to_vec(), found);
        found
    }
}

pub fn semigroup_member(gens: &[Vector], cone_gens: &[Vector], x: &[i64]) -> bool {
    SemigroupOracle::new(gens, cone_gens).contains(x)
}

/// Every point of `ℤⁿ` with `Σ|xᵢ| ≤ bound`, ordered by that sum and then
/// lexicographically.
pub fn lattice_points(n: usize, bound: i64) -> Vec<Vector> {
    fn fill(n: usize, budget: i64, prefix: &mut Vector, out: &mut Vec<Vector>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in -budget..=budget {
            prefix.push(c);
            fill(n, budget - c.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, bound, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| l1(a).cmp(&l1(b)).then_with(|| a.cmp(b)));
    out
}

/// The first point of `ℤP ∩ σ` outside `P` with coordinate sum at most
/// `bound`, if any.
pub fn saturation_gap(gens: &[Vector], bound: i64) -> Option<Vector> {
    let n = gens[0].len();
    let mut sg = SemigroupOracle::new(gens, gens);
    lattice_points(n, bound)
        .into_iter()
        .find(|x| sg.cone_contains(x) && group_contains(gens, x) && !sg.contains(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomDatum {
    pub torus_rank: usize,
    pub dominant_rank: usize,
    pub generators: Vec<Vector>,
}

/// A random generating set of a pointed cone: rank `1..=max_rank`, a random
/// split into torus and dominant coordinates, torus coordinates in `[-4, 4]`
/// and dominant coordinates in `[0, 4]`, two to five distinct nonzero
/// generators.
pub fn random_datum(rng: &mut impl Rng, max_rank: usize) -> RandomDatum {
    loop {
        let n = rng.gen_range(1..=max_rank);
        let r = rng.gen_range(0..=n);
        let count = rng.gen_range(2..=5);
        let mut generators: Vec<Vector> = Vec::new();
        for _ in 0..count {
            let g: Vector = (0..n)
                .map(|i| if i < r { rng.gen_range(-4..=4) } else { rng.gen_range(0..=4) })
                .collect();
            if l1(&g) > 0 && !generators.contains(&g) {
                generators.push(g);
            }
        }
        if !generators.is_empty() && is_pointed(&generators) {
            return RandomDatum {
                torus_rank: r,
                dominant_rank: n - r,
                generators,
            };
        }
    }
}

/// Up to `rank + 2` random nonzero vectors in `[-coord, coord]^rank`, with
/// rank drawn from `1..=max_rank`. The cone they span may contain lines.
pub fn random_generators(rng: &mut impl Rng, max_rank: usize, coord: i64) -> Vec<Vector> {
    loop {
        let n = rng.gen_range(1..=max_rank);
        let count = rng.gen_range(1..=n + 2);
        let gens: Vec<Vector> = (0..count)
            .map(|_| (0..n).map(|_| rng.gen_range(-coord..=coord)).collect::<Vector>())
            .filter(|g| l1(g) > 0)
            .collect();
        if !gens.is_empty() {
            return gens;
        }
    }
}

/// As [`random_generators`], conditioned on the cone being pointed.
pub fn random_pointed_cone(rng: &mut impl Rng, max_rank: usize, coord: i64) -> Vec<Vector> {
    loop {
        let gens = random_generators(rng, max_rank, coord);
        if is_pointed(&gens) {
            return gens;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_membership() {
        let quadrant = vec![vec![1, 0], vec![0, 1]];
        assert!(cone_contains(&quadrant, &[3, 5]));
        assert!(!cone_contains(&quadrant, &[-1, 5]));
        let skew = vec![vec![1, 0], vec![1, 2]];
        assert!(cone_contains(&skew, &[1, 1]));
        assert!(!cone_contains(&skew, &[0, 1]));
        assert!(cone_contains(&[vec![2]], &[1]));
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&[vec![1, 0], vec![1, 2]]));
        assert!(!is_pointed(&[vec![1, 0], vec![-1, 0], vec![0, 1]]));
        assert!(!is_pointed(&[vec![1, 1], vec![-1, 0], vec![0, -1]]));
    }

    #[test]
    fn group_membership() {
        let gens = vec![vec![1, 0], vec![1, 2]];
        assert!(group_contains(&gens, &[0, 2]));
        assert!(!group_contains(&gens, &[1, 1]));
        assert!(group_contains(&[vec![4], vec![6]], &[2]));
        assert!(!group_contains(&[vec![4], vec![6]], &[3]));
        assert!(!group_contains(&[vec![1, 1]], &[1, 0]));
    }

    #[test]
    fn semigroups() {
        let cusp = vec![vec![2], vec![3]];
        assert!(!semigroup_member(&cusp, &cusp, &[1]));
        assert!(semigroup_member(&cusp, &cusp, &[5]));
        assert_eq!(saturation_gap(&cusp, 10), Some(vec![1]));
        assert_eq!(saturation_gap(&[vec![1, 0], vec![1, 2]], 10), None);
        assert_eq!(saturation_gap(&[vec![1, 0], vec![1, 2], vec![3, 3]], 10), Some(vec![1, 1]));
    }

    #[test]
    fn points_are_ordered() {
        let pts = lattice_points(2, 2);
        assert_eq!(pts.len(), 13);
        assert_eq!(pts[0], vec![0, 0]);
    }
}
