//! Weight semigroups of affine complexity-zero horospherical varieties.
//!
//! A variety is modelled by the generators of its weight semigroup `P` inside
//! the character lattice `𝔛(T) ⊕ ℤ^s` (torus characters followed by
//! fundamental-weight coefficients). Normality is saturation of `P`, orbits
//! are faces of the cone `σ = cone(P)`, and each face gets an integer
//! functional inducing a non-hyperbolic grading whose fixed locus is the
//! closure of the corresponding orbit.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{
    face_lattice, group_generated, hilbert_basis, is_pointed, FaceDescriptor, LatticeError, LatticeVector, RationalCone,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    RankMismatch { index: usize, expected: usize, found: usize },
    #[error("generator {index} violates dominance: coordinate {coord} is negative")]
    NotDominant { index: usize, coord: usize },
    #[error("the semigroup needs at least one nonzero generator")]
    NoGenerators,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Generators of the weight semigroup `P ⊆ 𝔛⁺(B)` together with the split of
/// the ambient lattice into `torus_rank` torus characters and `dominant_rank`
/// fundamental-weight coefficients.
///
/// Construction drops duplicates and the zero vector, keeping the first
/// occurrence order of everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorosphericalDatum {
    torus_rank: usize,
    dominant_rank: usize,
    generators: Vec<LatticeVector>,
}

impl HorosphericalDatum {
    pub fn new(torus_rank: usize, dominant_rank: usize, generators: Vec<LatticeVector>) -> Result<Self, DatumError> {
        let n = torus_rank + dominant_rank;
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            if g.rank() != n {
                return Err(DatumError::RankMismatch {
                    index,
                    expected: n,
                    found: g.rank(),
                });
            }
            if let Some(coord) = (torus_rank..n).find(|&j| g[j].is_negative()) {
                return Err(DatumError::NotDominant { index, coord });
            }
            if !g.is_zero() && seen.insert(g.clone()) {
                kept.push(g);
            }
        }
        if kept.is_empty() {
            return Err(DatumError::NoGenerators);
        }
        Ok(HorosphericalDatum {
            torus_rank,
            dominant_rank,
            generators: kept,
        })
    }

    /// A datum over a pure torus (a toric variety).
    pub fn toric(generators: &[&[i64]]) -> Result<Self, DatumError> {
        let n = generators.first().map_or(0, |g| g.len());
        Self::new(n, 0, generators.iter().map(|g| LatticeVector::from_i64s(g)).collect())
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn dominant_rank(&self) -> usize {
        self.dominant_rank
    }

    pub fn ambient_rank(&self) -> usize {
        self.torus_rank + self.dominant_rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// The weight cone `σ`.
    pub fn cone(&self) -> RationalCone {
        RationalCone::from_generators(self.ambient_rank(), &self.generators).expect("ranks validated on construction")
    }
}

impl fmt::Display for HorosphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Decides whether `t` is a nonnegative integer combination of `gens`.
///
/// The search is bounded by a functional strictly positive on `cone(gens)`;
/// every partial remainder must stay inside the cone.
pub fn semigroup_member(gens: &[LatticeVector], t: &LatticeVector) -> Result<bool, LatticeError> {
    let n = t.rank();
    let cone = RationalCone::from_generators(n, gens)?;
    if !is_pointed(&cone) {
        return Err(LatticeError::NonPointed);
    }
    Ok(member_in(&cone, gens, t))
}

fn member_in(cone: &RationalCone, gens: &[LatticeVector], t: &LatticeVector) -> bool {
    if !cone.contains(t) {
        return false;
    }
    let grading = cone.interior_functional();
    let weighted: Vec<(BigInt, &LatticeVector)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (grading.dot(g), g))
        .collect();
    let mut dead: HashSet<(usize, LatticeVector)> = HashSet::new();
    search(cone, &grading, &weighted, 0, t.clone(), &mut dead)
}

fn search(
    cone: &RationalCone,
    grading: &LatticeVector,
    gens: &[(BigInt, &LatticeVector)],
    i: usize,
    rest: LatticeVector,
    dead: &mut HashSet<(usize, LatticeVector)>,
) -> bool {
    if rest.is_zero() {
        return true;
    }
    if i == gens.len() || dead.contains(&(i, rest.clone())) {
        return false;
    }
    let (w, g) = &gens[i];
    let max = grading.dot(&rest).div_floor(w);
    let mut k = max;
    while !k.is_negative() {
        let next = &rest - &g.scale(&k);
        if cone.contains(&next) && search(cone, grading, gens, i + 1, next, dead) {
            return true;
        }
        k -= BigInt::one();
    }
    dead.insert((i, rest));
    false
}

/// Outcome of the saturation test: `gap` is an element of `ℤP ∩ σ` outside `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub saturated: bool,
    pub gap: Option<LatticeVector>,
}

/// `P` is saturated iff every Hilbert basis element of `ℤP ∩ σ` lies in `P`.
pub fn is_saturated(d: &HorosphericalDatum) -> Result<Saturation, DatumError> {
    let cone = d.cone();
    let lattice = group_generated(d.generators())?;
    let hb = hilbert_basis(&cone, &lattice)?;
    let gap = hb.into_iter().find(|h| !member_in(&cone, d.generators(), h));
    Ok(Saturation {
        saturated: gap.is_none(),
        gap,
    })
}

/// The normalization: generators replaced by the Hilbert basis of `ℤP ∩ σ`.
pub fn saturate(d: &HorosphericalDatum) -> Result<HorosphericalDatum, DatumError> {
    let lattice = group_generated(d.generators())?;
    let hb = hilbert_basis(&d.cone(), &lattice)?;
    HorosphericalDatum::new(d.torus_rank, d.dominant_rank, hb)
}

/// Nonconstant invertible functions exist iff `P ∩ (−P) ≠ {0}`, which for a
/// finitely generated `P` happens exactly when `σ` contains a line: the
/// generators lying in the lineality space of `σ` positively span it, so some
/// generator's negative is again in `P`.
pub fn units_exist(d: &HorosphericalDatum) -> bool {
    !is_pointed(&d.cone())
}

/// A generator `g` of `P` with `−g ∈ P`, when units exist.
pub fn unit_witness(d: &HorosphericalDatum) -> Option<LatticeVector> {
    let cone = d.cone();
    let lineality = cone.lineality();
    if lineality.is_empty() {
        return None;
    }
    // Generators in the lineality space satisfy a relation with all
    // coefficients positive, so any one of them has its negative in P.
    d.generators().iter().find(|g| cone.contains(&-*g)).cloned()
}

/// A `G`-orbit seen through its face `τ` of `σ`: the generators off `τ` are
/// the weights spanning the ideal of the orbit closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitFace {
    pub face: FaceDescriptor,
    pub off_face_generators: Vec<usize>,
}

impl OrbitFace {
    pub fn on_face_generators(&self, generator_count: usize) -> Vec<usize> {
        (0..generator_count)
            .filter(|i| !self.off_face_generators.contains(i))
            .collect()
    }
}

/// One orbit face per face of `σ`, in the order of [`face_lattice`].
pub fn orbit_faces(d: &HorosphericalDatum) -> Vec<OrbitFace> {
    let cone = d.cone();
    face_lattice(&cone)
        .into_iter()
        .map(|face| {
            let off = off_face(&cone, &face, d.generators());
            OrbitFace {
                face,
                off_face_generators: off,
            }
        })
        .collect()
}

fn off_face(cone: &RationalCone, face: &FaceDescriptor, gens: &[LatticeVector]) -> Vec<usize> {
    gens.iter()
        .enumerate()
        .filter(|(_, g)| {
            face.zero_normals
                .iter()
                .any(|&i| cone.facet_normals()[i].dot(g).is_positive())
        })
        .map(|(i, _)| i)
        .collect()
}

/// Type of the `𝔾ₘ`-action induced by a grading of `K[X]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingKind {
    /// `l = 0`: the open orbit, every point fixed.
    Trivial,
    /// Nonnegative grading with `K[X]₀ = K`.
    Elliptic,
    /// Nonnegative grading with `K[X]₀ ≠ K`.
    Parabolic,
    /// Both positive and negative components occur.
    Hyperbolic,
}

impl GradingKind {
    /// Classifies the grading of `⊕_{p ∈ P} S_p` with `deg S_p = l(p)` from
    /// the degrees of the generators of `P`. Components of both signs occur
    /// iff the generators have degrees of both signs.
    pub fn classify(generator_degrees: &[BigInt]) -> GradingKind {
        let pos = generator_degrees.iter().any(|d| d.is_positive());
        let neg = generator_degrees.iter().any(|d| d.is_negative());
        let zero = generator_degrees.iter().any(|d| d.is_zero());
        match (pos, neg, zero) {
            (true, true, _) => GradingKind::Hyperbolic,
            (false, false, _) => GradingKind::Trivial,
            (_, _, true) => GradingKind::Parabolic,
            _ => GradingKind::Elliptic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GradingKind::Trivial => "trivial",
            GradingKind::Elliptic => "elliptic",
            GradingKind::Parabolic => "parabolic",
            GradingKind::Hyperbolic => "hyperbolic",
        }
    }
}

/// An integer functional `l` with `l = 0` on the face and `l ≥ 1` on every
/// generator off it. The induced grading `K[X]_i = ⊕_{l(p)=i} S_p` is
/// non-hyperbolic and its positive part is the ideal of the orbit closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingWitness {
    pub face: FaceDescriptor,
    pub functional: LatticeVector,
    pub generator_weights: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessViolation {
    #[error("functional has rank {found}, expected {expected}")]
    Rank { expected: usize, found: usize },
    #[error("recorded degree of generator {0} does not match the functional")]
    DegreeMismatch(usize),
    #[error("generator {0} lies on the face but has nonzero degree")]
    NonzeroOnFace(usize),
    #[error("generator {0} lies off the face but has degree < 1")]
    NotPositiveOffFace(usize),
    #[error("face does not belong to the datum's cone")]
    UnknownFace,
}

impl GradingWitness {
    pub fn kind(&self) -> GradingKind {
        GradingKind::classify(&self.generator_weights)
    }

    /// Re-checks the witness against the datum from scratch.
    pub fn verify(&self, d: &HorosphericalDatum) -> Result<(), WitnessViolation> {
        if self.functional.rank() != d.ambient_rank() {
            return Err(WitnessViolation::Rank {
                expected: d.ambient_rank(),
                found: self.functional.rank(),
            });
        }
        let cone = d.cone();
        if !face_lattice(&cone).contains(&self.face) {
            return Err(WitnessViolation::UnknownFace);
        }
        if self.generator_weights.len() != d.generators().len() {
            return Err(WitnessViolation::DegreeMismatch(self.generator_weights.len()));
        }
        let off = off_face(&cone, &self.face, d.generators());
        for (i, g) in d.generators().iter().enumerate() {
            let deg = self.functional.dot(g);
            if deg != self.generator_weights[i] {
                return Err(WitnessViolation::DegreeMismatch(i));
            }
            if off.contains(&i) {
                if deg < BigInt::one() {
                    return Err(WitnessViolation::NotPositiveOffFace(i));
                }
            } else if !deg.is_zero() {
                return Err(WitnessViolation::NonzeroOnFace(i));
            }
        }
        Ok(())
    }
}

/// The grading functional for the orbit of face `f`.
///
/// `l` is the sum of the facet normals vanishing on `f`, divided by its
/// content. Those normals generate the dual face, so `l` lies in its
/// relative interior. For the full cone this gives `l = 0`.
pub fn grading_for_face(d: &HorosphericalDatum, f: &FaceDescriptor) -> Result<GradingWitness, DatumError> {
    let cone = d.cone();
    if !is_pointed(&cone) {
        return Err(LatticeError::NonPointed.into());
    }
    if !face_lattice(&cone).contains(f) {
        return Err(LatticeError::NotAFace.into());
    }
    Ok(witness_in(&cone, d, f))
}

fn witness_in(cone: &RationalCone, d: &HorosphericalDatum, f: &FaceDescriptor) -> GradingWitness {
    let functional = f
        .zero_normals
        .iter()
        .fold(LatticeVector::zero(d.ambient_rank()), |acc, &i| &acc + &cone.facet_normals()[i])
        .primitive();
    let generator_weights = d.generators().iter().map(|g| functional.dot(g)).collect();
    GradingWitness {
        face: f.clone(),
        functional,
        generator_weights,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    CertifiedFlexible,
    NotCoveredNotNormal,
    NotCoveredUnitsExist,
}

impl VerdictStatus {
    pub fn name(self) -> &'static str {
        match self {
            VerdictStatus::CertifiedFlexible => "CertifiedFlexible",
            VerdictStatus::NotCoveredNotNormal => "NotCovered_NotNormal",
            VerdictStatus::NotCoveredUnitsExist => "NotCovered_UnitsExist",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexibilityVerdict {
    pub status: VerdictStatus,
    /// One witness per face of `σ` when certified, in face-lattice order.
    pub witnesses: Vec<GradingWitness>,
    pub saturation_gap: Option<LatticeVector>,
}

/// Checks the hypotheses of the flexibility theorem and, when they hold,
/// produces a grading witness for every orbit.
pub fn flexibility_verdict(d: &HorosphericalDatum) -> FlexibilityVerdict {
    let cone = d.cone();
    if !is_pointed(&cone) {
        return FlexibilityVerdict {
            status: VerdictStatus::NotCoveredUnitsExist,
            witnesses: Vec::new(),
            saturation_gap: None,
        };
    }
    let sat = is_saturated(d).expect("pointed cone has a Hilbert basis");
    if let Some(gap) = sat.gap {
        return FlexibilityVerdict {
            status: VerdictStatus::NotCoveredNotNormal,
            witnesses: Vec::new(),
            saturation_gap: Some(gap),
        };
    }
    let witnesses = face_lattice(&cone).iter().map(|f| witness_in(&cone, d, f)).collect();
    FlexibilityVerdict {
        status: VerdictStatus::CertifiedFlexible,
        witnesses,
        saturation_gap: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn membership_in_numerical_semigroup() {
        let gens = [v(&[2]), v(&[3])];
        // exhaustive: 7 = 2+2+3
        assert!(semigroup_member(&gens, &v(&[7])).unwrap());
        assert!(!semigroup_member(&gens, &v(&[1])).unwrap());
        assert!(semigroup_member(&gens, &v(&[0])).unwrap());
        assert!(!semigroup_member(&gens, &v(&[-2])).unwrap());
        let orthant = [v(&[1, 0]), v(&[0, 1])];
        assert!(semigroup_member(&orthant, &v(&[0, 0])).unwrap());
    }

    #[test]
    fn membership_needs_pointed_cone() {
        let gens = [v(&[1]), v(&[-1])];
        assert_eq!(semigroup_member(&gens, &v(&[3])).unwrap_err(), LatticeError::NonPointed);
    }

    #[test]
    fn cusp_is_not_saturated() {
        let d = HorosphericalDatum::toric(&[&[2], &[3]]).unwrap();
        let s = is_saturated(&d).unwrap();
        assert!(!s.saturated);
        assert_eq!(s.gap, Some(v(&[1])));
        assert_eq!(saturate(&d).unwrap().generators(), &[v(&[1])]);
    }

    #[test]
    fn veronese_is_saturated() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 1], &[1, 2]]).unwrap();
        assert!(is_saturated(&d).unwrap().saturated);
    }

    #[test]
    fn skew_cone_is_saturated_in_its_own_group() {
        // ℤP = {(a, b) : b even}, so (1,1) is not in ℤP and P = ⟨(1,0),(1,2)⟩
        // is already saturated; K[x, xy²] is a polynomial ring
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 2]]).unwrap();
        assert_eq!(is_saturated(&d).unwrap(), Saturation { saturated: true, gap: None });
        assert_eq!(saturate(&d).unwrap().generators(), &[v(&[1, 0]), v(&[1, 2])]);
    }

    #[test]
    fn skew_cone_with_odd_generator_has_gap() {
        // adding (3,3) makes ℤP = ℤ², and (1,1) ∈ σ is not a combination
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 2], &[3, 3]]).unwrap();
        let s = is_saturated(&d).unwrap();
        assert_eq!(s.gap, Some(v(&[1, 1])));
        let sat = saturate(&d).unwrap();
        assert_eq!(sat.generators(), &[v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        assert!(is_saturated(&sat).unwrap().saturated);
    }

    #[test]
    fn saturating_twice_changes_nothing() {
        let d = HorosphericalDatum::toric(&[&[1, 2], &[1, 1], &[1, 0]]).unwrap();
        let s = saturate(&d).unwrap();
        let mut a = d.generators().to_vec();
        a.sort();
        assert_eq!(s.generators(), a.as_slice());
    }

    #[test]
    fn sublattice_saturation() {
        // ℤP = 2ℤ, σ = ℚ≥0: P = ⟨4, 6⟩ misses 2
        let d = HorosphericalDatum::toric(&[&[4], &[6]]).unwrap();
        assert_eq!(is_saturated(&d).unwrap().gap, Some(v(&[2])));
        let d = HorosphericalDatum::toric(&[&[2, 0], &[0, 2]]).unwrap();
        assert!(is_saturated(&d).unwrap().saturated);
    }

    #[test]
    fn units() {
        let d = HorosphericalDatum::toric(&[&[1], &[-1]]).unwrap();
        assert!(units_exist(&d));
        assert!(unit_witness(&d).is_some());
        assert!(!units_exist(&HorosphericalDatum::toric(&[&[2], &[3]]).unwrap()));
        assert!(!units_exist(&HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap()));
        assert!(unit_witness(&HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap()).is_none());
    }

    #[test]
    fn validation() {
        let err = HorosphericalDatum::new(1, 1, vec![v(&[1, -1])]).unwrap_err();
        assert_eq!(err, DatumError::NotDominant { index: 0, coord: 1 });
        assert_eq!(HorosphericalDatum::new(1, 0, vec![]).unwrap_err(), DatumError::NoGenerators);
        let err = HorosphericalDatum::new(2, 0, vec![v(&[1])]).unwrap_err();
        assert!(matches!(err, DatumError::RankMismatch { index: 0, .. }));
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 0], &[0, 0], &[0, 1]]).unwrap();
        assert_eq!(d.generators().len(), 2);
        // torus coordinates may be negative
        assert!(HorosphericalDatum::new(1, 1, vec![v(&[-3, 1])]).is_ok());
    }

    #[test]
    fn orbit_faces_of_plane() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap();
        let faces = orbit_faces(&d);
        assert_eq!(faces.len(), 4);
        let cone = d.cone();
        let ray_10 = faces
            .iter()
            .find(|f| f.face.dim == 1 && cone.rays()[f.face.span_rays[0]] == v(&[1, 0]))
            .unwrap();
        assert_eq!(ray_10.off_face_generators, vec![1]);
    }

    #[test]
    fn orbit_faces_of_line() {
        let d = HorosphericalDatum::toric(&[&[1]]).unwrap();
        let faces = orbit_faces(&d);
        assert_eq!(faces.len(), 2);
        assert_eq!(faces[0].off_face_generators, vec![0]);
        assert!(faces[1].off_face_generators.is_empty());
    }

    #[test]
    fn veronese_middle_generator_is_off_every_proper_face() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 1], &[1, 2]]).unwrap();
        let faces = orbit_faces(&d);
        assert_eq!(faces.len(), 4);
        for f in &faces[..3] {
            assert!(f.off_face_generators.contains(&1));
        }
    }

    fn face_with_ray(d: &HorosphericalDatum, ray: &[i64]) -> FaceDescriptor {
        let cone = d.cone();
        face_lattice(&cone)
            .into_iter()
            .find(|f| f.dim == 1 && cone.rays()[f.span_rays[0]] == v(ray))
            .unwrap()
    }

    #[test]
    fn grading_on_orthant_ray() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap();
        let w = grading_for_face(&d, &face_with_ray(&d, &[1, 0])).unwrap();
        assert_eq!(w.functional, v(&[0, 1]));
        assert_eq!(w.generator_weights, ints(&[0, 1]));
        assert_eq!(w.kind(), GradingKind::Parabolic);
        w.verify(&d).unwrap();
    }

    #[test]
    fn grading_on_skew_cone_ray() {
        // dual generators (0,1),(2,-1); only (0,1) vanishes on (1,0)
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 2]]).unwrap();
        let w = grading_for_face(&d, &face_with_ray(&d, &[1, 0])).unwrap();
        assert_eq!(w.functional, v(&[0, 1]));
        assert_eq!(w.generator_weights, ints(&[0, 2]));
    }

    #[test]
    fn grading_on_zero_face_is_elliptic() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[1, 2]]).unwrap();
        let zero = face_lattice(&d.cone()).into_iter().next().unwrap();
        let w = grading_for_face(&d, &zero).unwrap();
        // (0,1)+(2,-1) = (2,0), content 2
        assert_eq!(w.functional, v(&[1, 0]));
        assert!(w.generator_weights.iter().all(|x| *x >= BigInt::one()));
        assert_eq!(w.kind(), GradingKind::Elliptic);
    }

    #[test]
    fn full_face_gets_trivial_grading() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap();
        let full = face_lattice(&d.cone()).pop().unwrap();
        let w = grading_for_face(&d, &full).unwrap();
        assert!(w.functional.is_zero());
        assert_eq!(w.kind(), GradingKind::Trivial);
    }

    #[test]
    fn foreign_face_is_rejected() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap();
        let bogus = FaceDescriptor {
            zero_normals: vec![0],
            span_rays: vec![0, 1],
            dim: 2,
        };
        assert_eq!(
            grading_for_face(&d, &bogus).unwrap_err(),
            DatumError::Lattice(LatticeError::NotAFace)
        );
    }

    #[test]
    fn corrupted_witness_fails_verification() {
        let d = HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap();
        let mut w = grading_for_face(&d, &face_with_ray(&d, &[1, 0])).unwrap();
        w.functional = v(&[1, 1]);
        w.generator_weights = ints(&[1, 1]);
        assert_eq!(w.verify(&d), Err(WitnessViolation::NonzeroOnFace(0)));
    }

    #[test]
    fn hyperbolic_classification() {
        assert_eq!(GradingKind::classify(&ints(&[1, -1])), GradingKind::Hyperbolic);
        assert_eq!(GradingKind::classify(&ints(&[0, 0])), GradingKind::Trivial);
    }

    #[test]
    fn verdicts() {
        let cusp = flexibility_verdict(&HorosphericalDatum::toric(&[&[2], &[3]]).unwrap());
        assert_eq!(cusp.status, VerdictStatus::NotCoveredNotNormal);
        assert_eq!(cusp.saturation_gap, Some(v(&[1])));

        let plane = flexibility_verdict(&HorosphericalDatum::toric(&[&[1, 0], &[0, 1]]).unwrap());
        assert_eq!(plane.status, VerdictStatus::CertifiedFlexible);
        assert_eq!(plane.witnesses.len(), 4);

        let veronese = flexibility_verdict(&HorosphericalDatum::toric(&[&[1, 0], &[1, 1], &[1, 2]]).unwrap());
        assert_eq!(veronese.status, VerdictStatus::CertifiedFlexible);
        assert_eq!(veronese.witnesses.len(), 4);

        let torus = flexibility_verdict(&HorosphericalDatum::toric(&[&[1], &[-1]]).unwrap());
        assert_eq!(torus.status, VerdictStatus::NotCoveredUnitsExist);
    }

    #[test]
    fn dominant_coordinates_only() {
        // SL₂-like: one fundamental weight, P = ⟨ω⟩, σ a half-line, two orbits
        let d = HorosphericalDatum::new(0, 1, vec![v(&[1])]).unwrap();
        let verdict = flexibility_verdict(&d);
        assert_eq!(verdict.status, VerdictStatus::CertifiedFlexible);
        assert_eq!(verdict.witnesses.len(), 2);
    }
}
