//! Exact arithmetic in the spacetime algebra Cl(1,3) and its complexification.

mod blade;
mod multivector;
pub mod oracle;

pub use blade::{BladeIndex, METRIC};
pub use multivector::{
    double_hodge_sign, gamma5, ComplexMultivector, Multivector, RealMultivector,
};
