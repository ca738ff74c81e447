//! Exact scalar functions on spacetime: finite sums of
//! `amp · x⁰^e₀ x¹^e₁ x²^e₂ x³^e₃ · {cos, sin}(k_μ x^μ)`.
//!
//! The ring is closed under `∂_μ` and under multiplication, and its canonical
//! form makes zero-testing exact:
//! - identical `(monomial, phase)` keys are merged and zero amplitudes dropped;
//! - a phase with `k = 0` collapses (`cos 0 = 1`, `sin 0 = 0`);
//! - the first nonzero component of `k` is made positive, using that cos is
//!   even and sin is odd.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::clifford::{Multivector, METRIC};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, rat, ComplexRational, Rational, Scalar};

/// Covector components `k_μ` of a plane-wave phase `k_μ x^μ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WaveVector(pub [Rational; 4]);

impl WaveVector {
    pub fn new(k: [Rational; 4]) -> Self {
        WaveVector(k)
    }

    pub fn from_ints(k: [i64; 4]) -> Self {
        WaveVector(k.map(|c| rat(c, 1)))
    }

    pub fn zero() -> Self {
        WaveVector(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn component(&self, mu: usize) -> &Rational {
        &self.0[mu]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Minkowski square `η^{μν} k_μ k_ν`.
    pub fn norm(&self) -> Rational {
        self.0
            .iter()
            .zip(METRIC)
            .map(|(c, s)| c * c * Rational::from_integer(s.into()))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn is_null(&self) -> bool {
        self.norm().is_zero()
    }

    /// The phase `k_μ x^μ` at a point.
    pub fn phase_at(&self, x: &[Rational; 4]) -> Rational {
        self.0
            .iter()
            .zip(x.iter())
            .map(|(k, x)| k * x)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The vector `k_μ γ^μ`, so that `∂(k_μ x^μ) = k_μ γ^μ`.
    pub fn to_multivector<S: Scalar>(&self) -> Multivector<S> {
        (0..4).fold(Multivector::zero(), |acc, mu| {
            acc + Multivector::gamma(mu).scale_rational(&self.0[mu])
        })
    }

    fn leading_negative(&self) -> bool {
        self.0
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative())
    }
}

impl Neg for &WaveVector {
    type Output = WaveVector;
    fn neg(self) -> WaveVector {
        WaveVector(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Add for &WaveVector {
    type Output = WaveVector;
    fn add(self, rhs: &WaveVector) -> WaveVector {
        WaveVector(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &WaveVector {
    type Output = WaveVector;
    fn sub(self, rhs: &WaveVector) -> WaveVector {
        WaveVector(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl fmt::Debug for WaveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trig {
    Cos,
    Sin,
}

impl Trig {
    pub fn as_str(self) -> &'static str {
        match self {
            Trig::Cos => "cos",
            Trig::Sin => "sin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    pub k: WaveVector,
    pub trig: Trig,
}

/// Exponents `(e₀, e₁, e₂, e₃)` of `x⁰^e₀ x¹^e₁ x²^e₂ x³^e₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 4])
    }

    pub fn coordinate(mu: usize) -> Self {
        let mut e = [0; 4];
        e[mu] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub monomial: Monomial,
    pub phase: Option<Phase>,
}

/// A finite Fourier–polynomial sum in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FourierPoly<S: Scalar> {
    terms: BTreeMap<TermKey, S>,
}

pub type RealPoly = FourierPoly<Rational>;
pub type ComplexPoly = FourierPoly<ComplexRational>;

impl<S: Scalar> FourierPoly<S> {
    pub fn zero() -> Self {
        FourierPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::term(Monomial::one(), None, c)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    /// The coordinate function `x^μ`.
    pub fn coordinate(mu: usize) -> Self {
        Self::term(Monomial::coordinate(mu), None, S::one())
    }

    pub fn monomial(exponents: [u32; 4], amp: S) -> Self {
        Self::term(Monomial(exponents), None, amp)
    }

    pub fn cos(k: WaveVector) -> Self {
        Self::term(Monomial::one(), Some((k, Trig::Cos)), S::one())
    }

    pub fn sin(k: WaveVector) -> Self {
        Self::term(Monomial::one(), Some((k, Trig::Sin)), S::one())
    }

    pub fn term(monomial: Monomial, phase: Option<(WaveVector, Trig)>, amp: S) -> Self {
        let mut p = Self::zero();
        p.add_term(monomial, phase, amp);
        p
    }

    /// Adds one term, canonicalizing its phase and merging with existing keys.
    pub fn add_term(&mut self, monomial: Monomial, phase: Option<(WaveVector, Trig)>, amp: S) {
        let (phase, amp) = match phase {
            None => (None, amp),
            Some((k, trig)) if k.is_zero() => match trig {
                Trig::Cos => (None, amp),
                Trig::Sin => return,
            },
            Some((k, trig)) if k.leading_negative() => {
                let amp = match trig {
                    Trig::Cos => amp,
                    Trig::Sin => -amp,
                };
                (Some(Phase { k: -&k, trig }), amp)
            }
            Some((k, trig)) => (Some(Phase { k, trig }), amp),
        };
        if amp.is_zero() {
            return;
        }
        let key = TermKey { monomial, phase };
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.clone() + amp;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, amp);
            }
        }
    }

    /// Terms in canonical (sorted key) order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        FourierPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&S::from_rational(q.clone()))
    }

    /// Exact partial derivative `∂/∂x^μ`.
    pub fn partial(&self, mu: usize) -> Self {
        assert!(mu < 4, "coordinate index must be 0..=3");
        let mut out = Self::zero();
        for (key, amp) in &self.terms {
            // polynomial factor
            let e = key.monomial.0[mu];
            if e > 0 {
                let mut m = key.monomial;
                m.0[mu] -= 1;
                let phase = key.phase.as_ref().map(|p| (p.k.clone(), p.trig));
                out.add_term(m, phase, amp.scale(&Rational::from_integer(e.into())));
            }
            // trigonometric factor
            if let Some(p) = &key.phase {
                let km = p.k.component(mu);
                if !km.is_zero() {
                    let (trig, coeff) = match p.trig {
                        Trig::Cos => (Trig::Sin, -km.clone()),
                        Trig::Sin => (Trig::Cos, km.clone()),
                    };
                    out.add_term(key.monomial, Some((p.k.clone(), trig)), amp.scale(&coeff));
                }
            }
        }
        out
    }

    /// Exact value at `x`. Only phases vanishing at `x` are exactly evaluable:
    /// `cos θ` and `sin θ` are transcendental for rational `θ ≠ 0`.
    pub fn eval(&self, x: &[Rational; 4]) -> Result<S> {
        let mut total = S::zero();
        for (key, amp) in &self.terms {
            let mut value = Rational::one();
            for (xi, e) in x.iter().zip(key.monomial.0) {
                value *= num::pow(xi.clone(), e as usize);
            }
            if let Some(p) = &key.phase {
                let theta = p.k.phase_at(x);
                if !theta.is_zero() {
                    return Err(Error::Inexact {
                        phase: format_rational(&theta),
                    });
                }
                if p.trig == Trig::Sin {
                    value = Rational::zero();
                }
            }
            total = total + amp.scale(&value);
        }
        Ok(total)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FourierPoly<T> {
        let mut out = FourierPoly::zero();
        for (key, amp) in &self.terms {
            let v = f(amp);
            if !v.is_zero() {
                out.terms.insert(key.clone(), v);
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.monomial.degree()).max().unwrap_or(0)
    }
}

impl RealPoly {
    pub fn complexify(&self) -> ComplexPoly {
        self.map_scalars(|a| ComplexRational::from_rational(a.clone()))
    }
}

/// Product-to-sum expansion of `t₁(a)·t₂(b)` as `(k, trig, ±½)` terms.
fn phase_product(a: &Phase, b: &Phase) -> [(WaveVector, Trig, Rational); 2] {
    let half = rat(1, 2);
    let diff = &a.k - &b.k;
    let sum = &a.k + &b.k;
    match (a.trig, b.trig) {
        (Trig::Cos, Trig::Cos) => [(diff, Trig::Cos, half.clone()), (sum, Trig::Cos, half)],
        (Trig::Sin, Trig::Sin) => [(diff, Trig::Cos, half.clone()), (sum, Trig::Cos, -half)],
        (Trig::Sin, Trig::Cos) => [(sum, Trig::Sin, half.clone()), (diff, Trig::Sin, half)],
        (Trig::Cos, Trig::Sin) => [(sum, Trig::Sin, half.clone()), (diff, Trig::Sin, -half)],
    }
}

impl<S: Scalar> Mul for &FourierPoly<S> {
    type Output = FourierPoly<S>;
    fn mul(self, rhs: &FourierPoly<S>) -> FourierPoly<S> {
        let mut out = FourierPoly::zero();
        for (ka, a) in &self.terms {
            for (kb, b) in &rhs.terms {
                let m = ka.monomial.times(&kb.monomial);
                let amp = a.clone() * b.clone();
                match (&ka.phase, &kb.phase) {
                    (None, None) => out.add_term(m, None, amp),
                    (Some(p), None) | (None, Some(p)) => {
                        out.add_term(m, Some((p.k.clone(), p.trig)), amp)
                    }
                    (Some(p), Some(q)) => {
                        for (k, trig, c) in phase_product(p, q) {
                            out.add_term(m, Some((k, trig)), amp.scale(&c));
                        }
                    }
                }
            }
        }
        out
    }
}

impl<S: Scalar> Add for &FourierPoly<S> {
    type Output = FourierPoly<S>;
    fn add(self, rhs: &FourierPoly<S>) -> FourierPoly<S> {
        let mut out = self.clone();
        for (k, a) in &rhs.terms {
            out.add_term(k.monomial, k.phase.as_ref().map(|p| (p.k.clone(), p.trig)), a.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &FourierPoly<S> {
    type Output = FourierPoly<S>;
    fn sub(self, rhs: &FourierPoly<S>) -> FourierPoly<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &FourierPoly<S> {
    type Output = FourierPoly<S>;
    fn neg(self) -> FourierPoly<S> {
        FourierPoly {
            terms: self.terms.iter().map(|(k, a)| (k.clone(), -a.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for FourierPoly<S> {
            type Output = FourierPoly<S>;
            fn $m(self, rhs: FourierPoly<S>) -> FourierPoly<S> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for FourierPoly<S> {
    type Output = FourierPoly<S>;
    fn neg(self) -> FourierPoly<S> {
        -&self
    }
}

impl<S: Scalar> Default for FourierPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Debug for FourierPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{a:?}")?;
            for (mu, e) in k.monomial.0.iter().enumerate() {
                if *e > 0 {
                    write!(f, "·x{mu}^{e}")?;
                }
            }
            if let Some(p) = &k.phase {
                write!(f, "·{}{:?}", p.trig.as_str(), p.k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    type P = RealPoly;

    fn kx0(m: i64) -> WaveVector {
        WaveVector::from_ints([m, 0, 0, 0])
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(P::coordinate(0).partial(0), P::one());
        // ∂₀ cos(3x⁰) = −3 sin(3x⁰)
        assert_eq!(P::cos(kx0(3)).partial(0), P::sin(kx0(3)).scale(&int(-3)));
        assert!(P::coordinate(1).partial(0).is_zero());
    }

    #[test]
    fn phase_canonicalization() {
        // cos(−x) = cos(x), sin(−x) = −sin(x)
        assert_eq!(P::cos(WaveVector::from_ints([-1, 2, 0, 0])), P::cos(WaveVector::from_ints([1, -2, 0, 0])));
        assert_eq!(P::sin(WaveVector::from_ints([0, -1, 0, 0])), -P::sin(WaveVector::from_ints([0, 1, 0, 0])));
        assert_eq!(P::cos(WaveVector::zero()), P::one());
        assert!(P::sin(WaveVector::zero()).is_zero());
    }

    #[test]
    fn product_to_sum() {
        let k = kx0(1);
        // cos² + sin² = 1
        let c = P::cos(k.clone());
        let s = P::sin(k.clone());
        assert_eq!(&(&c * &c) + &(&s * &s), P::one());
        // 2 sin cos = sin(2x)
        assert_eq!((&s * &c).scale(&int(2)), P::sin(kx0(2)));
    }

    #[test]
    fn eval_examples() {
        let x = [int(0), int(3), int(0), int(0)];
        assert_eq!(P::coordinate(1).eval(&x).unwrap(), int(3));
        assert_eq!(P::cos(kx0(2)).eval(&[int(0), int(5), int(0), int(0)]).unwrap(), int(1));
        assert!(matches!(P::sin(kx0(2)).eval(&[int(1), int(0), int(0), int(0)]), Err(Error::Inexact { .. })));
    }

    #[test]
    fn null_norm() {
        assert!(WaveVector::from_ints([1, 0, 0, 1]).is_null());
        assert_eq!(WaveVector::from_ints([1, 0, 0, 0]).norm(), int(1));
        assert_eq!(WaveVector::from_ints([5, 3, 4, 0]).norm(), int(0));
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        let term = (
            proptest::array::uniform4(0u32..=2),
            proptest::option::of((proptest::array::uniform4(-2i64..=2), prop_oneof![Just(Trig::Cos), Just(Trig::Sin)])),
            -5i64..=5,
        );
        proptest::collection::vec(term, 0..4).prop_map(|ts| {
            let mut p = P::zero();
            for (m, ph, a) in ts {
                p.add_term(Monomial(m), ph.map(|(k, t)| (WaveVector::from_ints(k), t)), int(a));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn leibniz(f in arb_poly(), g in arb_poly(), mu in 0usize..4) {
            let lhs = (&f * &g).partial(mu);
            let rhs = &(&f.partial(mu) * &g) + &(&f * &g.partial(mu));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn partials_commute(f in arb_poly(), mu in 0usize..4, nu in 0usize..4) {
            prop_assert_eq!(f.partial(mu).partial(nu), f.partial(nu).partial(mu));
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f - &f).is_zero());
        }
    }
}
