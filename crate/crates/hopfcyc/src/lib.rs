//! Exact computer algebra for Hopf-cyclic cohomology of bicrossed-product Hopf
//! algebras: Lie algebras and matched pairs, enveloping algebras in PBW form,
//! Lie-Hopf algebras and their bicrossed products, SAYD coefficients, the
//! associated cyclic complexes and their cohomology.

pub mod cohomology;
pub mod complexes;
pub mod exact;
pub mod hopf;
pub mod lie;
pub mod par;
pub mod pbw;
pub mod sayd;
pub mod text;
