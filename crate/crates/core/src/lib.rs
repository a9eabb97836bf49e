//! Flexibility certificates for normal affine complexity-zero horospherical
//! varieties, described by their weight semigroups, together with an exact
//! polynomial engine for checking explicit group actions on hypersurfaces.

pub mod lattice;
pub mod semigroup;
pub mod poly;
pub mod actions;
pub mod ehm;
