//! Finite Coxeter groups by explicit enumeration, reflection length, and the
//! non-crossing interval `[1, c]_T` with its Möbius function.

mod group;
mod lattice;

pub use group::{
    build_group, build_group_with, coxeter_element, group_order, GroupElement, GroupLimits, ReflectionGroup,
    DEFAULT_DIHEDRAL_LIMIT, DEFAULT_ORDER_LIMIT,
};
pub use lattice::{
    characteristic_poly, nc_interval, nc_interval_for, position_map, skew_growth_by_subsets, verify_mobius_identity,
    BitSet, NcLattice, DEFAULT_SUBSET_LIMIT,
};
