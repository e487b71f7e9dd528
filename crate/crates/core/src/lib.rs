//! Exact, oracle-based toolkit for nearly uniform partitions of a matroid
//! ground set into independent sets, and into common independent sets of
//! two matroids.
//!
//! The library works at desk scale with exhaustive exact computation: all
//! polyhedral membership questions are decided over every subset constraint
//! in exact rational arithmetic, and a built-in brute-force oracle certifies
//! the answers of every other module on small instances.

pub mod error;
pub mod fixtures;
pub mod ground;
pub mod instance;
pub mod matroid;
pub mod oracle;
pub mod partition;
pub mod partition_common;
pub mod partition_single;
pub mod polyhedra;
pub mod union;

pub use error::Error;
pub use ground::{ElementSet, GroundSet};
pub use instance::Instance;
pub use matroid::{parse_matroid, Matroid, MatroidKindTag};
pub use partition::Partition;
pub use partition_common::{
    four_polyhedra_integral_point, partition_common_nearly_uniform, partition_common_with_window,
    probe, subpartition_common, CommonInstance, FourPolyhedra, ProbeStep, Strategy,
    SubpartitionResult,
};
pub use partition_single::{
    find_removable, in_removal_family, partition_nearly_uniform, removal_polyhedron,
};
pub use polyhedra::{
    bound_function, is_gpolymatroid_pair, lift_gpolymatroid, matroid_set_function,
    MatroidSetFunctionKind, Membership, Modularity, PolyhedronDescription, Rational,
    RationalPoint, SetFunction,
};
pub use union::{color_into_independent, covering_index, is_in_union, union_rank, UnionMatroid};

#[cfg(test)]
mod concurrency_contract {
    // values are immutable after construction and safe to share
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Matroid>();
        assert_send_sync::<crate::SetFunction>();
        assert_send_sync::<crate::RationalPoint>();
        assert_send_sync::<crate::PolyhedronDescription>();
        assert_send_sync::<crate::CommonInstance>();
        assert_send_sync::<crate::Partition>();
    }
}
