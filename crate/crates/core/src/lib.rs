//! Automorphism groups of cyclic covers `y^n = Π (x - e_i)^{k_i}` of the
//! Riemann sphere.
//!
//! The crate classifies the full automorphism group of cyclic belyi covers
//! (three branch points), Lefschetz curves and Fermat curves, and ships the
//! machinery used to check those answers independently:
//!
//! - [`curve`]: cover model, curve parser, genus and signature, monodromy genus oracle
//! - [`fuchsian`]: the table of non-finitely-maximal genus-0 signatures, Harvey's
//!   condition and the extension criteria for cyclic actions
//! - [`classifier`]: the decision procedures producing [`classifier::ClassificationReport`]s
//! - [`grouptheory`]: coset enumeration, Smith normal form, permutation closure
//! - [`verify`]: numerical checks of explicit automorphisms and exhaustive sweeps

pub mod classifier;
pub mod curve;
pub mod error;
pub mod fuchsian;
pub mod grouptheory;
pub mod numtheory;
pub mod verify;

pub use error::{Error, Result};
