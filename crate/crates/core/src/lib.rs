//! Finite computer algebra for group rings carrying an oriented involution.
//!
//! The crate builds group rings RG over finite commutative coefficient rings,
//! equips them with the involution `sigma*` induced by a group involution and
//! a unit-valued orientation homomorphism, and answers one question two
//! independent ways: does the symmetric span anticommute under the Jordan
//! product?
//!
//! * [`checker`] answers directly, by multiplying out every generator pair.
//! * [`classifier`] answers structurally, from group/ring predicates alone.
//!
//! The sweep harness in the companion CLI crate cross-verifies the two
//! answers over exhaustive small-instance sweeps.

pub mod catalog;
pub mod checker;
pub mod classifier;
pub mod group;
pub mod group_ring;
pub mod involution;
pub mod orientation;
pub mod ring;

pub use catalog::{builtin_catalog, catalog_group, catalog_names};
pub use checker::{
    check_anticommutative, check_lemma_suite, pairwise_anticommute, CheckerError, LemmaEntry,
    LemmaReport, Verdict, Witness,
};
pub use classifier::{
    check_ring_conditions, classify_structure, classify_structure_with, gp14_predicate,
    ib3_first_failure, theorem_predicate, ClassificationResult, ClassifierError, Gp14Tag,
    RingConditions, SPlacement, StructureCase, StructureTag, IB3_CONDITIONS,
};
pub use group::{ElementSet, Group, GroupError};
pub use group_ring::{
    admissible_coefficients, symmetric_generators, GroupRingElement, GroupRingError,
    SymmetricGenerators,
};
pub use involution::{enumerate_involutions, is_involution, GroupInvolution, InvolutionError};
pub use orientation::{enumerate_orientations, is_compatible, Orientation, OrientationError};
pub use ring::{parse_ring_token, Annihilator, FiniteRing, RingError};
