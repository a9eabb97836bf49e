use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use super::{linalg, RationalCone};

/// A face of a cone, described by the facet normals vanishing on it and the
/// cone rays it contains (indices into `facet_normals()` and `rays()`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceDescriptor {
    pub zero_normals: Vec<usize>,
    pub span_rays: Vec<usize>,
    pub dim: usize,
}

impl FaceDescriptor {
    pub fn contains_ray(&self, ray: usize) -> bool {
        self.span_rays.binary_search(&ray).is_ok()
    }

    /// Inclusion of faces.
    pub fn is_subface_of(&self, other: &FaceDescriptor) -> bool {
        self.span_rays.iter().all(|r| other.contains_ray(*r))
    }
}

fn zero_normals_of(c: &RationalCone, rays: &BTreeSet<usize>) -> Vec<usize> {
    c.facet_normals()
        .iter()
        .enumerate()
        .filter(|(_, f)| rays.iter().all(|&r| f.dot(&c.rays()[r]).is_zero()))
        .map(|(i, _)| i)
        .collect()
}

fn descriptor(c: &RationalCone, rays: &BTreeSet<usize>) -> FaceDescriptor {
    FaceDescriptor {
        zero_normals: zero_normals_of(c, rays),
        span_rays: rays.iter().copied().collect(),
        dim: linalg::rank_of(rays.iter().map(|&r| &c.rays()[r])),
    }
}

/// Every face of `c` exactly once, ordered by dimension and then by ray set.
///
/// Faces are reached from the full cone by repeatedly intersecting with the
/// supporting hyperplane of one more facet normal.
pub fn face_lattice(c: &RationalCone) -> Vec<FaceDescriptor> {
    let full: BTreeSet<usize> = (0..c.rays().len()).collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([full.clone()]);
    seen.insert(full);

    while let Some(face) = queue.pop_front() {
        let zero = zero_normals_of(c, &face);
        for (i, f) in c.facet_normals().iter().enumerate() {
            if zero.contains(&i) {
                continue;
            }
            let sub: BTreeSet<usize> = face
                .iter()
                .copied()
                .filter(|&r| f.dot(&c.rays()[r]).is_zero())
                .collect();
            if seen.insert(sub.clone()) {
                queue.push_back(sub);
            }
        }
    }

    let mut faces: Vec<FaceDescriptor> = seen.iter().map(|rays| descriptor(c, rays)).collect();
    faces.sort_by(|a, b| (a.dim, &a.span_rays).cmp(&(b.dim, &b.span_rays)));
    faces
}
