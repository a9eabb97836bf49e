//! Rational polyhedral cones in both representations, via double description.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{check_rank, linalg, LatticeError, LatticeVector};

/// Generators of `{ x : ⟨a, x⟩ ≥ 0 for all a }`: a lineality basis plus the
/// extreme rays of the pointed part.
struct Generators {
    lineality: Vec<LatticeVector>,
    rays: Vec<LatticeVector>,
}

/// Double description: intersect ℚⁿ with one halfspace at a time.
fn double_description(n: usize, inequalities: &[LatticeVector]) -> Generators {
    let mut lineality: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    let mut rays: Vec<LatticeVector> = Vec::new();
    let mut seen: Vec<LatticeVector> = Vec::new();

    for a in inequalities {
        if a.is_zero() {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|v| !a.dot(v).is_zero()) {
            let mut v = lineality.remove(idx);
            let mut av = a.dot(&v);
            if av.is_negative() {
                v = -&v;
                av = -av;
            }
            // Project the remaining lineality and the rays into the hyperplane a = 0;
            // `v` itself becomes a new ray.
            lineality = lineality
                .iter()
                .map(|w| w.combine(&av, &v, &a.dot(w)).primitive())
                .collect();
            rays = rays
                .iter()
                .map(|r| r.combine(&av, &v, &a.dot(r)).primitive())
                .filter(|r| !r.is_zero())
                .collect();
            rays.push(v);
            seen.push(a.clone());
            dedup_sorted(&mut rays);
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| a.dot(r)).collect();
        let mut next: Vec<LatticeVector> = Vec::new();
        for (r, val) in rays.iter().zip(&values) {
            if !val.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in rays.iter().zip(&values) {
            if !vp.is_positive() {
                continue;
            }
            for (q, vq) in rays.iter().zip(&values) {
                if vq.is_negative() {
                    // vp·q − vq·p lies on the hyperplane
                    next.push(q.combine(vp, p, vq).primitive());
                }
            }
        }
        seen.push(a.clone());
        let target = n - lineality.len();
        next.retain(|r| !r.is_zero() && is_extreme(r, &seen, target));
        dedup_sorted(&mut next);
        rays = next;
    }
    Generators { lineality, rays }
}

/// A ray of the pointed part is extreme iff the constraints tight at it have
/// rank one less than the dimension of the pointed part.
fn is_extreme(r: &LatticeVector, constraints: &[LatticeVector], pointed_dim: usize) -> bool {
    if pointed_dim == 0 {
        return false;
    }
    let tight = constraints.iter().filter(|c| c.dot(r).is_zero());
    linalg::rank_of(tight) == pointed_dim - 1
}

fn dedup_sorted(v: &mut Vec<LatticeVector>) {
    v.sort();
    v.dedup();
}

/// A rational polyhedral cone `cone(rays) = { x : ⟨f, x⟩ ≥ 0, ⟨e, x⟩ = 0 }`.
///
/// When the cone is pointed, `rays` are its extreme rays. Otherwise `rays`
/// also contains `±` a basis of the lineality space. Facet normals are
/// primitive and sorted; when the cone is not full-dimensional they are only
/// determined modulo `equations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    ambient_rank: usize,
    rays: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    facet_normals: Vec<LatticeVector>,
    equations: Vec<LatticeVector>,
}

impl RationalCone {
    /// The cone spanned by `gens` inside ℚⁿ. An empty list gives `{0}`.
    pub fn from_generators(ambient_rank: usize, gens: &[LatticeVector]) -> Result<Self, LatticeError> {
        check_rank(ambient_rank, gens)?;
        // The dual cone is cut out by the generators; its lineality is the
        // annihilator of the span and its rays are the facet normals.
        let dual = double_description(ambient_rank, gens);
        Ok(Self::from_h_rep(ambient_rank, dual.rays, dual.lineality))
    }

    /// The cone `{ x : ⟨f, x⟩ ≥ 0 ∀ f ∈ inequalities, ⟨e, x⟩ = 0 ∀ e ∈ equations }`.
    pub fn from_inequalities(
        ambient_rank: usize,
        inequalities: &[LatticeVector],
        equations: &[LatticeVector],
    ) -> Result<Self, LatticeError> {
        check_rank(ambient_rank, inequalities)?;
        check_rank(ambient_rank, equations)?;
        let mut all: Vec<LatticeVector> = equations.to_vec();
        all.extend(equations.iter().map(|e| -e));
        all.extend(inequalities.iter().cloned());
        let primal = double_description(ambient_rank, &all);
        let mut gens = primal.rays;
        gens.extend(primal.lineality.iter().cloned());
        gens.extend(primal.lineality.iter().map(|l| -l));
        Self::from_generators(ambient_rank, &gens)
    }

    fn from_h_rep(ambient_rank: usize, mut normals: Vec<LatticeVector>, mut equations: Vec<LatticeVector>) -> Self {
        normals.iter_mut().for_each(|f| *f = f.primitive());
        dedup_sorted(&mut normals);
        equations.iter_mut().for_each(|e| *e = e.primitive());
        equations.sort();

        let mut constraints: Vec<LatticeVector> = equations.clone();
        constraints.extend(equations.iter().map(|e| -e));
        constraints.extend(normals.iter().cloned());
        let primal = double_description(ambient_rank, &constraints);

        let mut lineality: Vec<LatticeVector> = primal.lineality.iter().map(|l| l.primitive()).collect();
        lineality.sort();
        let mut rays = primal.rays;
        rays.extend(lineality.iter().cloned());
        rays.extend(lineality.iter().map(|l| -l));
        dedup_sorted(&mut rays);

        RationalCone {
            ambient_rank,
            rays,
            lineality,
            facet_normals: normals,
            equations,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facet_normals
    }

    pub fn equations(&self) -> &[LatticeVector] {
        &self.equations
    }

    /// Basis of `c ∩ (−c)`.
    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        x.rank() == self.ambient_rank
            && self.equations.iter().all(|e| e.dot(x).is_zero())
            && self.facet_normals.iter().all(|f| !f.dot(x).is_negative())
    }

    /// Sum of the facet normals. On a pointed cone it is strictly positive on
    /// every nonzero element.
    pub fn interior_functional(&self) -> LatticeVector {
        self.facet_normals
            .iter()
            .fold(LatticeVector::zero(self.ambient_rank), |acc, f| &acc + f)
    }
}

pub fn is_pointed(c: &RationalCone) -> bool {
    c.lineality.is_empty()
}

/// `{ l : ⟨l, x⟩ ≥ 0 for all x ∈ c }`.
pub fn dual_cone(c: &RationalCone) -> RationalCone {
    let mut gens: Vec<LatticeVector> = c.facet_normals.clone();
    gens.extend(c.equations.iter().cloned());
    gens.extend(c.equations.iter().map(|e| -e));
    RationalCone::from_generators(c.ambient_rank, &gens).expect("normals share the ambient rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn cone(gens: &[&[i64]]) -> RationalCone {
        let gens: Vec<_> = gens.iter().map(|g| v(g)).collect();
        RationalCone::from_generators(gens[0].rank(), &gens).unwrap()
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.facet_normals(), &[v(&[0, 1]), v(&[1, 0])]);
        let d = dual_cone(&c);
        assert_eq!(d.rays(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn dual_of_skew_cone() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        let d = dual_cone(&c);
        assert_eq!(d.rays(), &[v(&[0, 1]), v(&[2, -1])]);
        // sampling oracle: l ∈ dual iff l is nonnegative on both generators
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let l = v(&[a, b]);
                let in_dual = a >= 0 && a + 2 * b >= 0;
                assert_eq!(d.contains(&l), in_dual, "{l}");
            }
        }
    }

    #[test]
    fn half_line() {
        let c = cone(&[&[3]]);
        assert_eq!(c.rays(), &[v(&[1])]);
        assert_eq!(dual_cone(&c).rays(), &[v(&[1])]);
    }

    #[test]
    fn interior_generator_is_not_a_ray() {
        let c = cone(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.rays(), &[v(&[1, 0]), v(&[1, 2])]);
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&cone(&[&[1, 0], &[0, 1]])));
        assert!(!is_pointed(&cone(&[&[1, 0], &[-1, 0], &[0, 1]])));
        assert!(is_pointed(&cone(&[&[2, 3]])));
    }

    #[test]
    fn half_plane_has_lineality() {
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(c.lineality(), &[v(&[1, 0])]);
        assert_eq!(c.facet_normals(), &[v(&[0, 1])]);
        assert!(c.contains(&v(&[-5, 0])));
        assert!(!c.contains(&v(&[0, -1])));
    }

    #[test]
    fn lower_dimensional_cone_has_equations() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.equations(), &[v(&[0, 0, 1])]);
        assert!(c.contains(&v(&[2, 3, 0])));
        assert!(!c.contains(&v(&[2, 3, 1])));
        assert!(!c.contains(&v(&[-1, 3, 0])));
    }

    #[test]
    fn zero_cone_and_whole_space() {
        let zero = RationalCone::from_generators(2, &[]).unwrap();
        assert!(zero.rays().is_empty());
        assert_eq!(zero.dim(), 0);
        let whole = dual_cone(&zero);
        assert_eq!(whole.dim(), 2);
        assert_eq!(whole.lineality().len(), 2);
    }
}
