//! Exact-arithmetic detection of dihedral-type and octahedral-type subrack
//! configurations inside conjugacy classes of finite groups.
//!
//! The library verifies and constructs families of type `D_p`, `D_p^(2)`,
//! `O` and `O^(2)` (dihedral and octahedral shapes realized inside a
//! conjugacy class under conjugation), evaluates the associated braided
//! vector spaces with exact root-of-unity scalars, and emits certificates
//! that a third party can re-verify without trusting any cached state.
//!
//! Everything is exact: permutations are image arrays, matrices live over
//! prime fields, and all braiding scalars are roots of unity represented by
//! integer exponents. No floating point is used anywhere.

pub mod braided;
pub mod certificate;
pub mod criteria;
pub mod dtype;
pub mod group;
pub mod matgrp;
pub mod otype;
pub mod perm;
pub mod rack;
pub mod replay;
pub mod report;
pub mod sweep;

pub use group::GroupElement;
pub use perm::{ClassData, CycleType, Permutation};
pub use rack::RackTable;
