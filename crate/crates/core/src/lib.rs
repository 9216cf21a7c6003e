//! Exact computer algebra for semiorthogonal decompositions of blow-ups
//! of projective spaces.
//!
//! The crate is organized around five engines:
//!
//! * [`graded`] — graded dimensions, the value type of every `RHom`/`RΓ`
//!   computation;
//! * [`coh`] — Bott's formula on projective space and the closed-form
//!   `RHom` computations that blow-up decompositions need;
//! * [`quiver`] — Dynkin classification, Tits forms, positive roots, and
//!   a brute-force indecomposability census over the two-element field;
//! * [`sod`] — exceptional-collection calculus: graded Gram matrices,
//!   K-theoretic mutations, dual collections, and the blow-up collection
//!   builder;
//! * [`rdim`] — the certificate engine turning a tower description into a
//!   verified `rdim = dim` bound (Orlov's conjecture for the covered
//!   configurations).
//!
//! All values are immutable after construction and all operations are
//! pure, so everything can be shared freely across threads.

pub mod coh;
pub mod graded;
mod intmat;
pub mod quiver;
pub mod rdim;
pub mod sod;

pub use coh::{
    bott_cohomology, ext_skyscraper, pullback_skyscraper_cohomology, rgamma_line,
    rhom_divisor_to_skyscraper_pullback, rhom_exc_divisor, rhom_pullback_to_truncation, CohError,
    TwistedForm,
};
pub use graded::GradedDimension;
pub use quiver::{
    brute_force_indecomposables, classify_dynkin, is_positive_definite, positive_roots,
    positive_roots_of_quiver, quiver_category_rdim, star_quiver, tits_form, DimensionVector,
    DynkinType, Quiver, QuiverError,
};
pub use rdim::{
    certify_tower, certify_tower_detailed, glueing_bound, lower_bound, orlov_component_count,
    Certificate, CertifyError, Component, ComponentKind, LevelTrace, Step, TowerSpec,
};
pub use sod::{
    beilinson_euler_gram, beilinson_gram, build_blowup_collection, dual_collection_pm,
    dual_decomposition_k, group_into_quivers, k_mutation_left, k_mutation_right, Center,
    DualCollection, EulerGram, GradedGram, GramEntry, ObjectLabel, QuiverBlock, SodError,
};
