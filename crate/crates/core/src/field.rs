//! Multivector-valued fields on Minkowski spacetime and the first-order
//! operators acting on them, in the global orthonormal coframe `γ^μ = dx^μ`
//! where all connection terms vanish.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::clifford::{double_hodge_sign, gamma5, BladeIndex, Multivector};
use crate::error::{Error, Result};
use crate::fourier::FourierPoly;
use crate::scalar::{ComplexRational, Rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Product {
    Geometric,
    Wedge,
    LeftContract,
}

impl Product {
    fn admits(self, a: BladeIndex, b: BladeIndex) -> bool {
        match self {
            Product::Geometric => true,
            Product::Wedge => a.mask() & b.mask() == 0,
            Product::LeftContract => a.mask() & b.mask() == a.mask(),
        }
    }
}

/// Blade-indexed map to [`FourierPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultivectorField<S: Scalar> {
    comps: [FourierPoly<S>; 16],
}

pub type RealField = MultivectorField<Rational>;
pub type ComplexField = MultivectorField<ComplexRational>;

impl<S: Scalar> MultivectorField<S> {
    pub fn zero() -> Self {
        MultivectorField {
            comps: std::array::from_fn(|_| FourierPoly::zero()),
        }
    }

    /// Constant field with value `m` everywhere.
    pub fn constant(m: &Multivector<S>) -> Self {
        let mut f = Self::zero();
        for (b, c) in m.terms() {
            f.comps[b.index()] = FourierPoly::constant(c.clone());
        }
        f
    }

    /// Scalar (grade-0) field.
    pub fn scalar(p: FourierPoly<S>) -> Self {
        Self::from_blade(BladeIndex::SCALAR, p)
    }

    pub fn from_blade(b: BladeIndex, p: FourierPoly<S>) -> Self {
        let mut f = Self::zero();
        f.comps[b.index()] = p;
        f
    }

    /// The field `p(x)·m`.
    pub fn poly_times(p: &FourierPoly<S>, m: &Multivector<S>) -> Self {
        let mut f = Self::zero();
        for (b, c) in m.terms() {
            f.comps[b.index()] = p.scale(c);
        }
        f
    }

    pub fn component(&self, b: BladeIndex) -> &FourierPoly<S> {
        &self.comps[b.index()]
    }

    pub fn set_component(&mut self, b: BladeIndex, p: FourierPoly<S>) {
        self.comps[b.index()] = p;
    }

    /// Nonzero components in ascending blade order.
    pub fn components(&self) -> impl Iterator<Item = (BladeIndex, &FourierPoly<S>)> {
        BladeIndex::all()
            .zip(self.comps.iter())
            .filter(|(_, p)| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(FourierPoly::is_zero)
    }

    /// Value if the field is constant.
    pub fn as_constant(&self) -> Option<Multivector<S>> {
        let mut m = Multivector::zero();
        for (b, p) in self.components() {
            let mut terms = p.terms();
            let (key, amp) = terms.next()?;
            if terms.next().is_some() || key.phase.is_some() || key.monomial.degree() > 0 {
                return None;
            }
            m.set_coeff(b, amp.clone());
        }
        Some(m)
    }

    fn map(&self, f: impl Fn(BladeIndex, &FourierPoly<S>) -> FourierPoly<S>) -> Self {
        MultivectorField {
            comps: std::array::from_fn(|i| f(BladeIndex::new(i as u8).unwrap(), &self.comps[i])),
        }
    }

    fn filter_blades(&self, keep: impl Fn(BladeIndex) -> bool) -> Self {
        self.map(|b, p| if keep(b) { p.clone() } else { FourierPoly::zero() })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|_, p| p.scale(s))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|_, p| p.scale_rational(q))
    }

    /// Every component multiplied by the scalar function `p`.
    pub fn scale_poly(&self, p: &FourierPoly<S>) -> Self {
        self.map(|_, c| c * p)
    }

    fn accumulate(out: &mut [FourierPoly<S>; 16], target: BladeIndex, sign: i8, term: FourierPoly<S>) {
        let slot = &mut out[target.index()];
        *slot = if sign > 0 { &*slot + &term } else { &*slot - &term };
    }

    fn product(&self, other: &Self, kind: Product) -> Self {
        let mut out: [FourierPoly<S>; 16] = std::array::from_fn(|_| FourierPoly::zero());
        for (a, pa) in self.components() {
            for (b, pb) in other.components() {
                if !kind.admits(a, b) {
                    continue;
                }
                let (sign, c) = a.product(b);
                Self::accumulate(&mut out, c, sign, pa * pb);
            }
        }
        MultivectorField { comps: out }
    }

    fn product_const(&self, m: &Multivector<S>, const_on_left: bool, kind: Product) -> Self {
        let mut out: [FourierPoly<S>; 16] = std::array::from_fn(|_| FourierPoly::zero());
        for (a, p) in self.components() {
            for (b, c) in m.terms() {
                let (l, r) = if const_on_left { (b, a) } else { (a, b) };
                if !kind.admits(l, r) {
                    continue;
                }
                let (sign, target) = l.product(r);
                Self::accumulate(&mut out, target, sign, p.scale(c));
            }
        }
        MultivectorField { comps: out }
    }

    /// Pointwise Clifford product.
    pub fn geometric_product(&self, other: &Self) -> Self {
        self.product(other, Product::Geometric)
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.product(other, Product::Wedge)
    }

    pub fn left_contract(&self, other: &Self) -> Self {
        self.product(other, Product::LeftContract)
    }

    /// `m · self` for a constant `m`.
    pub fn left_mul(&self, m: &Multivector<S>) -> Self {
        self.product_const(m, true, Product::Geometric)
    }

    /// `self · m` for a constant `m`.
    pub fn right_mul(&self, m: &Multivector<S>) -> Self {
        self.product_const(m, false, Product::Geometric)
    }

    pub fn grade(&self, r: u8) -> Result<Self> {
        if r > 4 {
            return Err(Error::GradeOutOfRange(r));
        }
        Ok(self.filter_blades(|b| b.grade() == r))
    }

    pub fn grades(&self) -> Vec<u8> {
        let mut gs: Vec<u8> = self.components().map(|(b, _)| b.grade()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// True when every nonzero component has grade `r` (the zero field is homogeneous).
    pub fn is_homogeneous(&self, r: u8) -> bool {
        self.components().all(|(b, _)| b.grade() == r)
    }

    pub fn reverse(&self) -> Self {
        self.map(|b, p| if b.reverse_sign() > 0 { p.clone() } else { -p })
    }

    /// Pointwise `⋆C = C̃ γ⁵`.
    pub fn hodge(&self) -> Self {
        self.reverse().right_mul(&gamma5())
    }

    pub fn hodge_inverse(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..=4u8 {
            let part = self.filter_blades(|b| b.grade() == r);
            if part.is_zero() {
                continue;
            }
            let h = part.hodge();
            out = if double_hodge_sign(r) > 0 { &out + &h } else { &out - &h };
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

    /// Componentwise `∂/∂x^μ`.
    pub fn partial(&self, mu: usize) -> Self {
        self.map(|_, p| p.partial(mu))
    }

    fn first_order(&self, kind: Product) -> Self {
        (0..4).fold(Self::zero(), |acc, mu| {
            let dmu = self.partial(mu);
            &acc + &dmu.product_const(&Multivector::gamma(mu), true, kind)
        })
    }

    /// Dirac operator `∂ = γ^μ ∂_μ`.
    pub fn dirac(&self) -> Self {
        self.first_order(Product::Geometric)
    }

    /// Exterior derivative `d = γ^μ ∧ ∂_μ`.
    pub fn d(&self) -> Self {
        self.first_order(Product::Wedge)
    }

    /// Codifferential `δ = −γ^μ ⌟ ∂_μ`.
    pub fn codiff(&self) -> Self {
        -&self.first_order(Product::LeftContract)
    }

    /// Wave operator `◇ = ∂²`.
    pub fn diamond(&self) -> Self {
        self.dirac().dirac()
    }

    /// Exact value at a point; fails if some phase is not exactly evaluable there.
    pub fn eval_at(&self, x: &[Rational; 4]) -> Result<Multivector<S>> {
        let mut m = Multivector::zero();
        for (b, p) in self.components() {
            m.set_coeff(b, p.eval(x)?);
        }
        Ok(m)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultivectorField<T> {
        MultivectorField {
            comps: std::array::from_fn(|i| self.comps[i].map_scalars(&f)),
        }
    }

    /// Number of stored terms over all components.
    pub fn term_count(&self) -> usize {
        self.comps.iter().map(FourierPoly::len).sum()
    }
}

impl RealField {
    pub fn complexify(&self) -> ComplexField {
        self.map_scalars(|a| ComplexRational::from_rational(a.clone()))
    }
}

impl ComplexField {
    /// Real part, if every imaginary amplitude vanishes.
    pub fn to_real(&self) -> Option<RealField> {
        let all_real = self
            .comps
            .iter()
            .all(|p| p.terms().all(|(_, a)| num::Zero::is_zero(&a.im)));
        all_real.then(|| self.map_scalars(|a| a.re.clone()))
    }
}

impl<S: Scalar> Default for MultivectorField<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Debug for MultivectorField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.components().map(|(b, p)| (b.to_string(), p)))
            .finish()
    }
}

impl<S: Scalar> Add for &MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn add(self, rhs: &MultivectorField<S>) -> MultivectorField<S> {
        MultivectorField {
            comps: std::array::from_fn(|i| &self.comps[i] + &rhs.comps[i]),
        }
    }
}

impl<S: Scalar> Sub for &MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn sub(self, rhs: &MultivectorField<S>) -> MultivectorField<S> {
        MultivectorField {
            comps: std::array::from_fn(|i| &self.comps[i] - &rhs.comps[i]),
        }
    }
}

impl<S: Scalar> Neg for &MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn neg(self) -> MultivectorField<S> {
        self.map(|_, p| -p)
    }
}

impl<S: Scalar> Mul for &MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn mul(self, rhs: &MultivectorField<S>) -> MultivectorField<S> {
        self.geometric_product(rhs)
    }
}

impl<S: Scalar> Add for MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn add(self, rhs: MultivectorField<S>) -> MultivectorField<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn sub(self, rhs: MultivectorField<S>) -> MultivectorField<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn neg(self) -> MultivectorField<S> {
        -&self
    }
}

impl<S: Scalar> Mul for MultivectorField<S> {
    type Output = MultivectorField<S>;
    fn mul(self, rhs: MultivectorField<S>) -> MultivectorField<S> {
        &self * &rhs
    }
}
