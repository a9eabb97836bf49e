use std::collections::BTreeSet;

use horoflex_core::lattice::{dual_cone, face_lattice, hilbert_basis, LatticeSubgroup, LatticeVector, RationalCone};
use horoflex_oracles as oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lv(x: &[i64]) -> LatticeVector {
    LatticeVector::from_i64s(x)
}

fn plain(v: &LatticeVector) -> Vec<i64> {
    v.to_i64s().expect("small coordinates")
}

fn cone_of(gens: &[Vec<i64>]) -> RationalCone {
    let lvs: Vec<LatticeVector> = gens.iter().map(|g| lv(g)).collect();
    RationalCone::from_generators(gens[0].len(), &lvs).unwrap()
}

fn span_set(vs: &[LatticeVector]) -> BTreeSet<LatticeVector> {
    vs.iter().cloned().collect()
}

#[test]
fn dual_of_dual_is_the_cone() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let gens = oracle::random_generators(&mut rng, 4, 4);
        let c = cone_of(&gens);
        let dd = dual_cone(&dual_cone(&c));
        assert_eq!(span_set(dd.rays()), span_set(c.rays()), "{gens:?}");
        assert_eq!(dd.dim(), c.dim());
        assert_eq!(dd.lineality().len(), c.lineality().len());
        for l in c.lineality() {
            assert!(dd.contains(l) && dd.contains(&-l));
        }
    }
}

#[test]
fn facets_and_rays_describe_the_same_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let gens = oracle::random_generators(&mut rng, 4, 5);
        let n = gens[0].len();
        let c = cone_of(&gens);
        for _ in 0..20 {
            let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            assert_eq!(c.contains(&lv(&x)), oracle::cone_contains(&gens, &x), "{gens:?} ∋ {x:?}");
        }
        // rays lie in the cone
        for r in c.rays() {
            assert!(oracle::cone_contains(&gens, &plain(r)));
        }
        // the V-description regenerates the cone
        let mut v: Vec<Vec<i64>> = c.rays().iter().map(plain).collect();
        for l in c.lineality() {
            v.push(plain(l));
            v.push(plain(&-l));
        }
        if !v.is_empty() {
            for g in &gens {
                assert!(oracle::cone_contains(&v, g));
            }
        }
    }
}

#[test]
fn rebuilt_from_inequalities() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let gens = oracle::random_pointed_cone(&mut rng, 3, 4);
        let n = gens[0].len();
        let c = cone_of(&gens);
        let h = RationalCone::from_inequalities(n, c.facet_normals(), c.equations()).unwrap();
        assert_eq!(span_set(h.rays()), span_set(c.rays()));
    }
}

#[test]
fn hilbert_basis_complete_and_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..25 {
        let gens = oracle::random_pointed_cone(&mut rng, 3, 4);
        let n = gens[0].len();
        let c = cone_of(&gens);
        let hb: Vec<Vec<i64>> = hilbert_basis(&c, &LatticeSubgroup::full(n)).unwrap().iter().map(plain).collect();
        let mut sg = oracle::SemigroupOracle::new(&hb, &gens);
        for x in oracle::lattice_points(n, 12) {
            if sg.cone_contains(&x) {
                assert!(sg.contains(&x), "{x:?} not generated by {hb:?} in cone {gens:?}");
            }
        }
        for (i, h) in hb.iter().enumerate() {
            let others: Vec<Vec<i64>> = hb.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            assert!(!oracle::semigroup_member(&others, &gens, h), "{h:?} redundant in {hb:?}");
        }
    }
}

#[test]
fn hilbert_basis_in_a_sublattice() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..25 {
        let gens = oracle::random_pointed_cone(&mut rng, 3, 3);
        let n = gens[0].len();
        let c = cone_of(&gens);
        let sub: Vec<LatticeVector> = gens.iter().map(|g| lv(g)).collect();
        let lattice = horoflex_core::lattice::group_generated(&sub).unwrap();
        let hb: Vec<Vec<i64>> = hilbert_basis(&c, &lattice).unwrap().iter().map(plain).collect();
        for h in &hb {
            assert!(oracle::group_contains(&gens, h));
        }
        let mut sg = oracle::SemigroupOracle::new(&hb, &gens);
        for x in oracle::lattice_points(n, 10) {
            if sg.cone_contains(&x) && oracle::group_contains(&gens, &x) {
                assert!(sg.contains(&x), "{x:?} vs {hb:?}");
            }
        }
    }
}

#[test]
fn faces_are_closed_under_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..40 {
        let gens = oracle::random_pointed_cone(&mut rng, 4, 3);
        let c = cone_of(&gens);
        let faces = face_lattice(&c);
        let sets: BTreeSet<Vec<usize>> = faces.iter().map(|f| f.span_rays.clone()).collect();
        assert_eq!(sets.len(), faces.len());
        for a in &faces {
            for b in &faces {
                let meet: Vec<usize> = a.span_rays.iter().copied().filter(|r| b.contains_ray(*r)).collect();
                assert!(sets.contains(&meet));
            }
        }
        // the apex and the cone itself
        assert_eq!(faces.first().unwrap().dim, 0);
        assert_eq!(faces.last().unwrap().dim, c.dim());
        // every ray is a face of dimension one
        for r in 0..c.rays().len() {
            assert!(faces.iter().any(|f| f.dim == 1 && f.span_rays == vec![r]));
        }
    }
}
