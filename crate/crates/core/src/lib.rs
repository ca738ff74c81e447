//! Exact spacetime-algebra engine: multivector fields over Cl(1,3), exterior
//! calculus, Dirac–Hestenes spinors, generalized Maxwell systems, Hertz
//! potentials and the complex matrix picture, with seeded verification suites.

pub mod clifford;
pub mod document;
pub mod error;
pub mod field;
pub mod fourier;
pub mod generate;
pub mod hertz;
pub mod linalg;
pub mod matrix;
pub mod maxwell;
pub mod scalar;
pub mod spinor;
pub mod suite;
pub mod transcribe;

pub use clifford::{gamma5, BladeIndex, ComplexMultivector, Multivector, RealMultivector};
pub use document::{AnyField, BundleDocument, FieldDocument, TranscriptionDocument};
pub use error::{Error, Result};
pub use field::{ComplexField, MultivectorField, RealField};
pub use fourier::{ComplexPoly, FourierPoly, RealPoly, Trig, WaveVector};
pub use hertz::HertzData;
pub use matrix::{ColumnBasis, ComplexMatrix4, GammaRep};
pub use maxwell::{GmeSystem, SuperPotential};
pub use scalar::{ComplexRational, Rational, RingTag, Scalar};
pub use spinor::{DHRepresentative, IdealElement, IdempotentSpec, SpinElement};
pub use suite::{run_checks, run_suite, run_suite_with, CheckRecord, Counts, Status, Suite, SuiteOptions, VerificationReport};
