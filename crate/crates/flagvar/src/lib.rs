//! Exact computation of rational cohomology rings of flag varieties and of
//! Chern-class relations of their tangent bundles.
//!
//! Everything starts from Dynkin data: a simple family letter, a rank, and
//! a set of crossed nodes. From there the crate builds, with
//! arbitrary-precision rational arithmetic throughout,
//!
//! * the root system and its Weyl group ([`rootsys`]),
//! * the root partition and grading data of the parabolic ([`parabolic`]),
//! * fundamental Weyl invariants ([`invariants`]),
//! * a truncated Gröbner basis of the invariant ideal ([`groebner`]),
//! * the cohomology ring with canonical graded bases ([`cohomology`]), and
//! * tangent-bundle Chern classes and their relations ([`chern`]).
//!
//! Results that admit an independent check are checked at construction
//! time: graded dimensions are compared against Weyl-group length counts,
//! and a mismatch is an error rather than an answer.
//!
//! Polynomial degrees are halved throughout: the degree-`d` graded piece of
//! a ring here is the cohomology in *topological* degree `2d` (odd
//! cohomology of a flag variety vanishes).

pub mod chern;
pub mod cohomology;
pub mod error;
pub mod groebner;
pub mod invariants;
mod linalg;
pub mod parabolic;
pub mod poly;
pub mod rootsys;

pub use chern::{
    chern_json, chern_total, epsilon_weight, find_relations, full_report,
    total_chern_product, weighted_monomials, CPolynomial, ChernJson, ChernReport,
    RelationSet, RelationSetJson,
};
pub use cohomology::{
    betti_oracle, borel_ring, parabolic_ring, CohomologyRing, RingJson,
};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, buchberger_with_hilbert, monomials_of_degree, normal_form,
    standard_monomials, GroebnerBasis,
};
pub use invariants::{fundamental_invariants, fundamental_invariants_seeded, reynolds};
pub use parabolic::{
    classify_roots, delta, delta_pairing_table, filtration_ranks, DeltaPairing,
    ParabolicSpec, RootClassification,
};
pub use poly::{rat, ratio, weyl_act, Monomial, Polynomial, MAX_RANK, VAR_NAMES};
pub use rootsys::{
    build_root_system, enumerate_weyl, enumerate_weyl_subgroup, exponents, form,
    form_roots, inversion_count, is_root, poincare_polynomial, positive_root_sum,
    reflect, reflect_root, simple_reflection_matrix, weyl_order, Family, RootSystem,
    WeylElement, DEFAULT_WEYL_CAP,
};
