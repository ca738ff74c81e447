//! Hertz potential construction of Dirac–Hestenes solutions.
//!
//! A 2-form `Π` and scalars `𝔊`, `𝔓` obey
//! `∂Π = (∂𝔊 + m𝔓γ₃ + m⟨Πγ₀₁₂⟩₁) + γ₅(∂𝔓 + m𝔊γ₃ − γ₅⟨mΠγ₀₁₂⟩₃)`,
//! and then `ψ = −𝔊 + Π + γ₅𝔓` solves `∂ψγ₂₁ − mψγ₀ = 0`.
//!
//! All lower-index blades are expanded through the metric, so
//! `γ₅ = γ₀γ₁γ₂γ₃ = −γ⁵` and `γ₃ = −γ³`.

use crate::clifford::{BladeIndex, Multivector, RealMultivector};
use crate::error::{Error, Result};
use crate::field::RealField;
use crate::fourier::RealPoly;
use crate::scalar::Rational;
use crate::spinor::{dh_residual, DHRepresentative};

fn low(indices: &[usize]) -> RealMultivector {
    Multivector::lowered(indices)
}

/// `γ₅ = γ₀γ₁γ₂γ₃`.
pub fn gamma5_lower() -> RealMultivector {
    low(&[0, 1, 2, 3])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HertzData {
    pi: RealField,
    g: RealPoly,
    p: RealPoly,
    m: Rational,
}

impl HertzData {
    pub fn new(pi: RealField, g: RealPoly, p: RealPoly, m: Rational) -> Result<Self> {
        if !pi.is_homogeneous(2) {
            return Err(Error::GradeViolation { what: "Π", expected: "2" });
        }
        Ok(HertzData { pi, g, p, m })
    }

    /// Reads `(𝔊, Π, 𝔓)` off an even field so that [`assemble_psi`] returns it.
    pub fn from_psi(psi: &DHRepresentative, m: Rational) -> Self {
        let f = psi.psi();
        // γ₅𝔓 = −γ⁵𝔓 must equal the grade-4 part
        HertzData {
            pi: f.grade(2).expect("grade 2 is in range"),
            g: -f.component(BladeIndex::SCALAR),
            p: -f.component(BladeIndex::PSEUDOSCALAR),
            m,
        }
    }

    pub fn pi(&self) -> &RealField {
        &self.pi
    }

    pub fn g(&self) -> &RealPoly {
        &self.g
    }

    pub fn p(&self) -> &RealPoly {
        &self.p
    }

    pub fn mass(&self) -> &Rational {
        &self.m
    }

    pub fn scale(&self, s: &Rational) -> Self {
        HertzData {
            pi: self.pi.scale_rational(s),
            g: self.g.scale_rational(s),
            p: self.p.scale_rational(s),
            m: self.m.clone(),
        }
    }

    /// Componentwise sum; the masses must agree.
    pub fn add(&self, other: &HertzData) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::InvalidParam("Hertz data with different masses".into()));
        }
        Ok(HertzData {
            pi: &self.pi + &other.pi,
            g: &self.g + &other.g,
            p: &self.p + &other.p,
            m: self.m.clone(),
        })
    }

    fn pi_012(&self) -> RealField {
        self.pi.right_mul(&low(&[0, 1, 2]))
    }
}

/// `A = ∂𝔊 + m𝔓γ₃ + m⟨Πγ₀₁₂⟩₁`.
pub fn em_potential(h: &HertzData) -> RealField {
    let dg = RealField::scalar(h.g.clone()).dirac();
    let pg3 = RealField::poly_times(&h.p, &low(&[3]));
    let proj = h.pi_012().grade(1).expect("grade 1 is in range");
    &dg + &(&pg3 + &proj).scale_rational(&h.m)
}

/// `γ₅S = γ₅(∂𝔓 + m𝔊γ₃ − γ₅⟨mΠγ₀₁₂⟩₃)`.
pub fn stratton_potential(h: &HertzData) -> RealField {
    let g5 = gamma5_lower();
    let dp = RealField::scalar(h.p.clone()).dirac();
    let gg3 = RealField::poly_times(&h.g, &low(&[3])).scale_rational(&h.m);
    let proj = h.pi_012().grade(3).expect("grade 3 is in range").scale_rational(&h.m);
    let s = &(&dp + &gg3) - &proj.left_mul(&g5);
    s.left_mul(&g5)
}

/// `∂Π − A − γ₅S`.
pub fn hertz_residual(h: &HertzData) -> RealField {
    &(&h.pi.dirac() - &em_potential(h)) - &stratton_potential(h)
}

/// The subsidiary wave conditions, as residuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsidiary {
    /// `◇A − J_e`.
    pub r4: RealField,
    /// `◇(γ₅S)`.
    pub r5: RealField,
    /// `◇𝔊 + m ∂⌟⟨Πγ₀₁₂⟩₁`.
    pub r6: RealField,
    /// `◇𝔓 − m ∂⌟(γ₅⟨Πγ₀₁₂⟩₃)`.
    pub r7: RealField,
}

pub fn subsidiary_residuals(h: &HertzData, je: &RealField) -> Result<Subsidiary> {
    if !je.is_zero() && !je.is_homogeneous(1) {
        return Err(Error::GradeViolation { what: "Je", expected: "1" });
    }
    let pi012 = h.pi_012();
    let v1 = pi012.grade(1)?;
    let v3 = pi012.grade(3)?.left_mul(&gamma5_lower());
    // ∂⌟ on a 1-form is −δ
    let div = |v: &RealField| -&v.codiff();
    Ok(Subsidiary {
        r4: &em_potential(h).diamond() - je,
        r5: stratton_potential(h).diamond(),
        r6: &RealField::scalar(h.g.clone()).diamond() + &div(&v1).scale_rational(&h.m),
        r7: &RealField::scalar(h.p.clone()).diamond() - &div(&v3).scale_rational(&h.m),
    })
}

/// `ψ = −𝔊 + Π + γ₅𝔓`.
pub fn assemble_psi(h: &HertzData) -> DHRepresentative {
    let psi = &(&RealField::scalar(-&h.g) + &h.pi) + &RealField::poly_times(&h.p, &gamma5_lower());
    DHRepresentative::new(psi).expect("grades 0, 2, 4 are even")
}

/// Outcome of checking "Hertz constraint ⟹ Dirac–Hestenes equation" on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub premise: bool,
    pub conclusion: bool,
    pub hertz_residual: RealField,
    pub dh_residual: RealField,
}

impl VerificationOutcome {
    pub fn implication_holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

pub fn electron_theorem_check(h: &HertzData) -> VerificationOutcome {
    let hr = hertz_residual(h);
    let dr = dh_residual(&assemble_psi(h), &h.m);
    VerificationOutcome {
        premise: hr.is_zero(),
        conclusion: dr.is_zero(),
        hertz_residual: hr,
        dh_residual: dr,
    }
}
