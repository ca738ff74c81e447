//! Generalized Maxwell equation `∂F = J_e + γ⁵J_m` with electric and magnetic
//! currents, its split into `δF = −J_e`, `dF = −⋆J_m`, and the Cabibbo–Ferrari
//! superpotential `𝒜 = A + γ⁵B`.

use crate::clifford::gamma5;
use crate::error::{Error, Result};
use crate::field::RealField;

/// A field strength with its two sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmeSystem {
    f: RealField,
    je: RealField,
    jm: RealField,
}

impl GmeSystem {
    pub fn new(f: RealField, je: RealField, jm: RealField) -> Result<Self> {
        if !f.is_homogeneous(2) {
            return Err(Error::GradeViolation { what: "F", expected: "2" });
        }
        if !je.is_homogeneous(1) {
            return Err(Error::GradeViolation { what: "Je", expected: "1" });
        }
        if !jm.is_homogeneous(1) {
            return Err(Error::GradeViolation { what: "Jm", expected: "1" });
        }
        Ok(GmeSystem { f, je, jm })
    }

    /// Source-free system for a 2-form field.
    pub fn vacuum(f: RealField) -> Result<Self> {
        Self::new(f, RealField::zero(), RealField::zero())
    }

    pub fn field(&self) -> &RealField {
        &self.f
    }

    pub fn electric_current(&self) -> &RealField {
        &self.je
    }

    pub fn magnetic_current(&self) -> &RealField {
        &self.jm
    }

    pub fn into_parts(self) -> (RealField, RealField, RealField) {
        (self.f, self.je, self.jm)
    }
}

/// `∂F − J_e − γ⁵J_m`; zero exactly when the GME holds.
pub fn gme_residual(sys: &GmeSystem) -> RealField {
    &(&sys.f.dirac() - &sys.je) - &sys.jm.left_mul(&gamma5())
}

/// Grade-separated residuals of the GME.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResiduals {
    /// `δF + J_e` (grade 1).
    pub electric: RealField,
    /// `dF + ⋆J_m` (grade 3).
    pub magnetic: RealField,
    /// `δ⋆F − J_m`, the dual form of the magnetic equation; equals `−⋆(magnetic)`.
    pub dual: RealField,
}

impl SplitResiduals {
    pub fn is_zero(&self) -> bool {
        self.electric.is_zero() && self.magnetic.is_zero()
    }
}

pub fn gme_split_residuals(sys: &GmeSystem) -> SplitResiduals {
    SplitResiduals {
        electric: &sys.f.codiff() + &sys.je,
        magnetic: &sys.f.d() + &sys.jm.hodge(),
        dual: &sys.f.hodge().codiff() - &sys.jm,
    }
}

/// Pair of 1-form potentials forming `𝒜 = A + γ⁵B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPotential {
    a: RealField,
    b: RealField,
}

impl SuperPotential {
    pub fn new(a: RealField, b: RealField) -> Result<Self> {
        if !a.is_homogeneous(1) {
            return Err(Error::GradeViolation { what: "A", expected: "1" });
        }
        if !b.is_homogeneous(1) {
            return Err(Error::GradeViolation { what: "B", expected: "1" });
        }
        Ok(SuperPotential { a, b })
    }

    pub fn a(&self) -> &RealField {
        &self.a
    }

    pub fn b(&self) -> &RealField {
        &self.b
    }

    /// The combined multivector field `A + γ⁵B`.
    pub fn combined(&self) -> RealField {
        &self.a + &self.b.left_mul(&gamma5())
    }

    /// Inverse of [`combined`](Self::combined): `A = ⟨𝒜⟩₁`, `B = γ⁵⟨𝒜⟩₃`.
    pub fn from_combined(sp: &RealField) -> Result<Self> {
        let a = sp.grade(1)?;
        let three = sp.grade(3)?;
        if &a + &three != *sp {
            return Err(Error::GradeViolation { what: "superpotential", expected: "1 and 3" });
        }
        // γ⁵(γ⁵B) = −B
        let b = -&three.left_mul(&gamma5());
        Self::new(a, b)
    }
}

/// `δA`; the Lorenz gauge asks for it to vanish.
pub fn lorenz_residual(a: &RealField) -> RealField {
    a.codiff()
}

fn check_gauge(sp: &SuperPotential) -> Result<()> {
    for (name, pot) in [("A", &sp.a), ("B", &sp.b)] {
        let r = lorenz_residual(pot);
        if !r.is_zero() {
            return Err(Error::Gauge {
                potential: name,
                residual: format!("{r:?}"),
            });
        }
    }
    Ok(())
}

/// `F = dA + ⋆dB`, equal to `∂(A + γ⁵B)` in the Lorenz gauge.
pub fn superpotential_field(sp: &SuperPotential) -> Result<RealField> {
    check_gauge(sp)?;
    Ok(&sp.a.d() + &sp.b.d().hodge())
}

/// `J_e = −δdA` and `J_m = −δdB`.
///
/// `J_m` is read off `d⋆dB = dF = γ⁵J_m = −⋆J_m`.
pub fn currents_from_potentials(sp: &SuperPotential) -> Result<(RealField, RealField)> {
    check_gauge(sp)?;
    let je = -&sp.a.d().codiff();
    let jm = -&sp.b.d().hodge().d().hodge_inverse();
    Ok((je, jm))
}

/// Residuals of `∂∧(γ⁵B) = ⋆δB` and `∂⌟(γ⁵B) = ⋆dB`; both vanish for any 1-form.
pub fn gamma5_commutation_identities(b: &RealField) -> Result<(RealField, RealField)> {
    if !b.is_homogeneous(1) {
        return Err(Error::GradeViolation { what: "B", expected: "1" });
    }
    let g5b = b.left_mul(&gamma5());
    let wedge_part = g5b.d();
    let contraction_part = -&g5b.codiff();
    Ok((
        &wedge_part - &b.codiff().hodge(),
        &contraction_part - &b.d().hodge(),
    ))
}

/// `◇A − J_e` and `◇B − J_m`.
pub fn wave_residuals(
    sp: &SuperPotential,
    je: &RealField,
    jm: &RealField,
) -> Result<(RealField, RealField)> {
    check_gauge(sp)?;
    Ok((&sp.a.diamond() - je, &sp.b.diamond() - jm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Multivector;
    use crate::fourier::{FourierPoly, WaveVector};
    use crate::scalar::Rational;

    type F = RealField;
    type M = Multivector<Rational>;
    type P = FourierPoly<Rational>;

    fn g(mu: usize) -> M {
        M::gamma(mu)
    }

    fn x(mu: usize) -> P {
        P::coordinate(mu)
    }

    fn cos_x(mu: usize) -> P {
        let mut k = [0; 4];
        k[mu] = 1;
        P::cos(WaveVector::from_ints(k))
    }

    #[test]
    fn gme_residual_examples() {
        let vac = GmeSystem::vacuum(F::constant(&(&g(2) * &g(3)))).unwrap();
        assert!(gme_residual(&vac).is_zero());
        let f = F::poly_times(&x(1), &(&g(0) * &g(1)));
        let sys = GmeSystem::new(f.clone(), F::constant(&g(0)), F::zero()).unwrap();
        assert!(gme_residual(&sys).is_zero());
        let bare = GmeSystem::vacuum(f).unwrap();
        assert_eq!(gme_residual(&bare), F::constant(&g(0)));
    }

    #[test]
    fn grade_checks() {
        assert!(matches!(
            GmeSystem::vacuum(F::constant(&g(0))),
            Err(Error::GradeViolation { what: "F", .. })
        ));
        assert!(SuperPotential::new(F::constant(&M::one()), F::zero()).is_err());
    }

    #[test]
    fn split_residual_examples() {
        let vac = GmeSystem::vacuum(F::constant(&(&g(0) * &g(3)))).unwrap();
        assert!(gme_split_residuals(&vac).is_zero());

        let f = F::poly_times(&x(1), &(&g(0) * &g(1)));
        let sys = GmeSystem::new(f.clone(), F::constant(&g(0)), F::zero()).unwrap();
        let split = gme_split_residuals(&sys);
        assert!(split.electric.is_zero() && split.magnetic.is_zero() && split.dual.is_zero());

        let jm = F::constant(&g(2));
        let sys = GmeSystem::new(F::constant(&(&g(0) * &g(1))), F::zero(), jm.clone()).unwrap();
        let split = gme_split_residuals(&sys);
        assert_eq!(split.magnetic, jm.hodge());
        assert!(!split.magnetic.is_zero());
        assert_eq!(split.dual, -&split.magnetic.hodge());
    }

    #[test]
    fn superpotential_examples() {
        let a = F::poly_times(&x(1), &g(0));
        let sp = SuperPotential::new(a.clone(), F::zero()).unwrap();
        assert_eq!(superpotential_field(&sp).unwrap(), F::constant(&g(1).wedge(&g(0))));
        let (je, jm) = currents_from_potentials(&sp).unwrap();
        assert!(je.is_zero() && jm.is_zero());
        let (ra, rb) = wave_residuals(&sp, &je, &jm).unwrap();
        assert!(ra.is_zero() && rb.is_zero());

        let sp = SuperPotential::new(F::zero(), a).unwrap();
        assert_eq!(superpotential_field(&sp).unwrap(), F::constant(&(&g(2) * &g(3))));

        let sp = SuperPotential::new(F::constant(&g(1)), F::constant(&g(3))).unwrap();
        assert!(superpotential_field(&sp).unwrap().is_zero());

        let zero = SuperPotential::new(F::zero(), F::zero()).unwrap();
        assert_eq!(currents_from_potentials(&zero).unwrap(), (F::zero(), F::zero()));
    }

    #[test]
    fn cosine_potential_current() {
        // dA = γ¹∧(−sin x¹ γ⁰) = sin x¹ γ⁰γ¹
        // δdA = −γ¹⌟(cos x¹ γ⁰γ¹) = −cos x¹ γ⁰
        let a = F::poly_times(&cos_x(1), &g(0));
        let sp = SuperPotential::new(a, F::zero()).unwrap();
        let (je, _) = currents_from_potentials(&sp).unwrap();
        assert_eq!(je, F::poly_times(&cos_x(1), &g(0)));
        let (ra, _) = wave_residuals(&sp, &je, &F::zero()).unwrap();
        assert!(ra.is_zero());
        let f = superpotential_field(&sp).unwrap();
        let (je, jm) = currents_from_potentials(&sp).unwrap();
        assert!(gme_residual(&GmeSystem::new(f, je, jm).unwrap()).is_zero());
    }

    #[test]
    fn gauge_violation_is_reported() {
        let a = F::poly_times(&x(0), &g(0));
        let sp = SuperPotential::new(a, F::zero()).unwrap();
        match superpotential_field(&sp) {
            Err(Error::Gauge { potential, residual }) => {
                assert_eq!(potential, "A");
                assert!(residual.contains("1"));
            }
            other => panic!("expected gauge error, got {other:?}"),
        }
        assert!(currents_from_potentials(&sp).is_err());
    }

    #[test]
    fn gamma5_identity_examples() {
        for b in [
            F::poly_times(&x(1), &g(0)),
            F::poly_times(&P::cos(WaveVector::from_ints([0, 0, 1, 0])), &g(3)),
            F::zero(),
        ] {
            let (r1, r2) = gamma5_commutation_identities(&b).unwrap();
            assert!(r1.is_zero() && r2.is_zero());
        }
        assert!(gamma5_commutation_identities(&F::constant(&M::one())).is_err());
    }

    #[test]
    fn combined_roundtrip() {
        let sp = SuperPotential::new(F::poly_times(&x(2), &g(1)), F::poly_times(&x(3), &g(0))).unwrap();
        assert_eq!(SuperPotential::from_combined(&sp.combined()).unwrap(), sp);
    }

    #[test]
    fn magnetic_wave_equation_uses_magnetic_current() {
        // B = cos(x²)γ³ is Lorenz (∂₂ meets γ³); ◇B must equal J_m, not J_e
        let b = F::poly_times(&cos_x(2), &g(3));
        let sp = SuperPotential::new(F::zero(), b).unwrap();
        let (je, jm) = currents_from_potentials(&sp).unwrap();
        assert!(je.is_zero());
        assert!(!jm.is_zero());
        let (_, rb) = wave_residuals(&sp, &je, &jm).unwrap();
        assert!(rb.is_zero());
        let f = superpotential_field(&sp).unwrap();
        assert!(gme_residual(&GmeSystem::new(f, je, jm.clone()).unwrap()).is_zero());
        assert_eq!(jm, -&sp.b().d().codiff());
    }
}
