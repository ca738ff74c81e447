use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::Zero;

use super::blade::{BladeIndex, METRIC};
use crate::error::{Error, Result};
use crate::scalar::{ComplexRational, Rational, Scalar};

/// An element of Cl(1,3) over the exact ring `S`: one coefficient per basis blade.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector<S: Scalar> {
    coeffs: [S; 16],
}

pub type RealMultivector = Multivector<Rational>;
pub type ComplexMultivector = Multivector<ComplexRational>;

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Multivector {
            coeffs: std::array::from_fn(|_| S::zero()),
        }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(s: S) -> Self {
        Self::blade_with(BladeIndex::SCALAR, s)
    }

    pub fn blade(b: BladeIndex) -> Self {
        Self::blade_with(b, S::one())
    }

    pub fn blade_with(b: BladeIndex, s: S) -> Self {
        let mut m = Self::zero();
        m.coeffs[b.index()] = s;
        m
    }

    pub fn from_coeffs(coeffs: [S; 16]) -> Self {
        Multivector { coeffs }
    }

    /// The generator `γ^μ`. Panics if `mu > 3`.
    pub fn gamma(mu: usize) -> Self {
        let b = BladeIndex::generator(mu).expect("generator index must be 0..=3");
        Self::blade(b)
    }

    /// Product `γ_{i₁}γ_{i₂}…` of lowered generators, `γ_μ = η_{μμ} γ^μ`,
    /// multiplied out in the order given.
    pub fn lowered(indices: &[usize]) -> Self {
        indices.iter().fold(Self::one(), |acc, &mu| {
            let g = Self::gamma(mu).scale_rational(&Rational::from_integer(METRIC[mu].into()));
            &acc * &g
        })
    }

    /// Product `γ^{i₁}γ^{i₂}…` of upper generators in the order given.
    pub fn upper(indices: &[usize]) -> Self {
        indices
            .iter()
            .fold(Self::one(), |acc, &mu| &acc * &Self::gamma(mu))
    }

    pub fn coeff(&self, b: BladeIndex) -> &S {
        &self.coeffs[b.index()]
    }

    pub fn coeffs(&self) -> &[S; 16] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, b: BladeIndex, s: S) {
        self.coeffs[b.index()] = s;
    }

    /// Nonzero `(blade, coefficient)` pairs in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, &S)> {
        BladeIndex::all()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Multivector {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }

    fn filter_blades(&self, keep: impl Fn(BladeIndex) -> bool) -> Self {
        Multivector {
            coeffs: std::array::from_fn(|i| {
                let b = BladeIndex::new(i as u8).unwrap();
                if keep(b) {
                    self.coeffs[i].clone()
                } else {
                    S::zero()
                }
            }),
        }
    }

    fn bilinear(&self, other: &Self, rule: impl Fn(BladeIndex, BladeIndex) -> bool) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if !rule(a, b) {
                    continue;
                }
                let (sign, c) = a.product(b);
                let term = ca.clone() * cb.clone();
                let slot = &mut out.coeffs[c.index()];
                if sign > 0 {
                    *slot = slot.clone() + term;
                } else {
                    *slot = slot.clone() - term;
                }
            }
        }
        out
    }

    /// Clifford product; satisfies `γ^μγ^ν + γ^νγ^μ = 2η^{μν}`.
    pub fn geometric_product(&self, other: &Self) -> Self {
        self.bilinear(other, |_, _| true)
    }

    /// Exterior product. For orthogonal basis blades this is the product
    /// when the factors share no generator, and zero otherwise.
    pub fn wedge(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| a.mask() & b.mask() == 0)
    }

    /// Left contraction `a ⌟ b`: grade-(s−r) part of the product of a
    /// grade-r blade into a grade-s blade, zero when `r > s`.
    pub fn left_contract(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| a.mask() & b.mask() == a.mask())
    }

    /// Grade-`r` part.
    pub fn grade(&self, r: u8) -> Result<Self> {
        if r > 4 {
            return Err(Error::GradeOutOfRange(r));
        }
        Ok(self.filter_blades(|b| b.grade() == r))
    }

    /// Grades carrying at least one nonzero coefficient.
    pub fn grades(&self) -> Vec<u8> {
        let mut gs: Vec<u8> = self.terms().map(|(b, _)| b.grade()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    pub fn is_homogeneous(&self, r: u8) -> bool {
        self.terms().all(|(b, _)| b.grade() == r)
    }

    pub fn reverse(&self) -> Self {
        Multivector {
            coeffs: std::array::from_fn(|i| {
                let b = BladeIndex::new(i as u8).unwrap();
                if b.reverse_sign() > 0 {
                    self.coeffs[i].clone()
                } else {
                    -self.coeffs[i].clone()
                }
            }),
        }
    }

    /// Hodge dual `⋆C = C̃ γ⁵`.
    pub fn hodge(&self) -> Self {
        self.reverse().geometric_product(&gamma5())
    }

    /// Inverse of [`hodge`](Self::hodge), applying on each grade the sign of `⋆⋆`.
    pub fn hodge_inverse(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..=4u8 {
            let part = self.filter_blades(|b| b.grade() == r);
            if part.is_zero() {
                continue;
            }
            let h = part.hodge();
            out = if double_hodge_sign(r) > 0 { out + h } else { out - h };
        }
        out
    }

    pub fn even_part(&self) -> Self {
        self.filter_blades(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter_blades(|b| b.grade() % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        self.odd_part().is_zero()
    }
}

/// The volume element `γ⁵ = γ⁰γ¹γ²γ³`.
pub fn gamma5<S: Scalar>() -> Multivector<S> {
    Multivector::blade(BladeIndex::PSEUDOSCALAR)
}

/// Sign `s` with `⋆⋆C = s·C` on grade `r`, read off `⋆⋆` of a representative blade.
pub fn double_hodge_sign(r: u8) -> i8 {
    let b = BladeIndex::new((1u8 << r) - 1).expect("grade must be 0..=4");
    let e = Multivector::<Rational>::blade(b);
    let hh = e.hodge().hodge();
    if hh == e {
        1
    } else {
        debug_assert_eq!(hh, -e);
        -1
    }
}

impl RealMultivector {
    /// Embeds into the complexified algebra with zero imaginary parts.
    pub fn complexify(&self) -> ComplexMultivector {
        Multivector {
            coeffs: std::array::from_fn(|i| ComplexRational::from_rational(self.coeffs[i].clone())),
        }
    }
}

impl ComplexMultivector {
    /// Real part if every imaginary coefficient vanishes.
    pub fn to_real(&self) -> Option<RealMultivector> {
        if self.coeffs.iter().any(|c| !c.im.is_zero()) {
            return None;
        }
        Some(Multivector {
            coeffs: std::array::from_fn(|i| self.coeffs[i].re.clone()),
        })
    }
}

impl<S: Scalar> Default for Multivector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms().map(|(b, c)| (b.to_string(), c)))
            .finish()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if b == BladeIndex::SCALAR {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){b}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Multivector<S>) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> AddAssign<&Multivector<S>> for Multivector<S> {
    fn add_assign(&mut self, rhs: &Multivector<S>) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a = a.clone() + b.clone();
        }
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Multivector<S>) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> SubAssign<&Multivector<S>> for Multivector<S> {
    fn sub_assign(&mut self, rhs: &Multivector<S>) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a = a.clone() - b.clone();
        }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.geometric_product(rhs)
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Multivector<S>) -> Multivector<S> {
        self.geometric_product(&rhs)
    }
}
