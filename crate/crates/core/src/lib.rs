//! Exact computation in the finitary symmetric group on the positive
//! integers.
//!
//! The crate provides sparse finitary permutations, the group ring with
//! Gaussian-rational coefficients, class functions parameterized by two
//! nonincreasing rational sequences together with exact
//! positive-semidefiniteness certificates, the conditional expectations
//! onto the group algebras of the three normal subgroups, finite
//! symmetric group character tables through the border-strip recursion,
//! and a replay engine that re-derives the classification of invariant
//! subalgebras at the group-ring level as checked exact identities.

pub mod characters;
pub mod group_ring;
pub mod perm;
pub mod replay;
pub mod sampling;
pub mod scalar;
pub mod sn_repr;
pub mod subalgebra;

pub use characters::psd::{certify_psd, GramCertificate, LdltFactorization, ScalarMatrix};
pub use characters::{
    check_regular_from_3cycle, gram_matrix, ClassFunction, Mixture, RegularCheckOutcome,
    ThomaParameters,
};
pub use group_ring::{conj_action, inner_product, linear_combine, multiply, GroupRingElement};
pub use perm::{CycleType, FinitaryPermutation};
pub use replay::{ReplayReport, ReplaySuite};
pub use sampling::Sampler;
pub use scalar::Scalar;
pub use sn_repr::{CycleTypeVector, Partition};
pub use subalgebra::NormalSubgroupId;
