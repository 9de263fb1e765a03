//! Exact combinatorics of affine Weyl groups: alcoves, positively folded
//! galleries, the unfold/refold construction, dual convex hulls, and a
//! Freudenthal weight-multiplicity oracle.

pub mod affine_coxeter;
pub mod characters;
pub mod convexity;
pub mod error;
pub mod galleries;
pub mod root_system;
pub mod vector;
pub mod weyl;

pub use affine_coxeter::{
    AffineComplex, AffineHyperplane, AffineWeylElement, Alcove, Panel, VertexType,
};
pub use characters::{freudenthal, support_check, weyl_dim, MultiplicityTable, SupportCheck};
pub use convexity::{
    a_type_set, compare_hull_with_a_type, dconv_hull, dominance_leq, dominant_lattice_grid,
    in_a_type_set, in_positive_cone, mu_coords, wconv_membership, DualHyperplane, HullComparison,
    HullDescription,
};
pub use error::{Error, Result};
pub use galleries::{FoldScript, Gallery, GalleryRecord, GalleryType, Move, Step};
pub use root_system::{Family, RootSystem, RootSystemKind};
pub use vector::{LatticePoint, Vector, MAX_RANK};
pub use weyl::{IntMatrix, WeylElement, WeylGroup};
