//! Basis blades of Cl(1,3) encoded as 4-bit generator masks.

use std::fmt;

use crate::error::{Error, Result};

/// Diagonal of the metric, signature (+,−,−,−).
pub const METRIC: [i8; 4] = [1, -1, -1, -1];

/// A basis blade `γ^{i₁}γ^{i₂}…` with `i₁ < i₂ < …`, stored as a bit set.
///
/// Bit `μ` set means the generator `γ^μ` is a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BladeIndex(u8);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);
    pub const PSEUDOSCALAR: BladeIndex = BladeIndex(0b1111);

    pub fn new(mask: u8) -> Option<Self> {
        (mask < 16).then_some(BladeIndex(mask))
    }

    pub fn generator(mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(Error::GeneratorOutOfRange(mu));
        }
        Ok(BladeIndex(1 << mu))
    }

    /// Blade with the given (distinct) generators; order is canonicalized away.
    pub fn from_generators(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u8;
        for &mu in indices {
            if mu > 3 {
                return Err(Error::GeneratorOutOfRange(mu));
            }
            mask |= 1 << mu;
        }
        Ok(BladeIndex(mask))
    }

    pub fn all() -> impl Iterator<Item = BladeIndex> {
        (0u8..16).map(BladeIndex)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> u8 {
        self.0.count_ones() as u8
    }

    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |mu| self.0 & (1 << mu) != 0)
    }

    pub fn contains(self, mu: usize) -> bool {
        self.0 & (1 << mu) != 0
    }

    /// Geometric product of two basis blades: `self · other = sign · blade`.
    ///
    /// The sign collects one factor −1 per transposition needed to bring the
    /// concatenated factors into ascending order, and one metric diagonal
    /// entry per generator that squares out.
    pub fn product(self, other: BladeIndex) -> (i8, BladeIndex) {
        let mut swaps = 0u32;
        for j in other.generators() {
            // generators of self that sit to the left of γ^j and exceed j
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        let mut sign: i8 = if swaps % 2 == 0 { 1 } else { -1 };
        for mu in BladeIndex(self.0 & other.0).generators() {
            sign *= METRIC[mu];
        }
        (sign, BladeIndex(self.0 ^ other.0))
    }

    /// Sign `(−1)^{r(r−1)/2}` picked up under reversion.
    pub fn reverse_sign(self) -> i8 {
        let r = self.grade() as u32;
        if (r * r.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Document form `b0011`: binary mask, most significant generator first.
    pub fn to_text(self) -> String {
        format!("b{:04b}", self.0)
    }

    pub fn from_text(s: &str) -> Option<Self> {
        let bits = s.strip_prefix('b')?;
        if bits.len() != 4 || !bits.chars().all(|c| c == '0' || c == '1') {
            return None;
        }
        u8::from_str_radix(bits, 2).ok().and_then(BladeIndex::new)
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("γ")?;
        for mu in self.generators() {
            write!(f, "{mu}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(mu: usize) -> BladeIndex {
        BladeIndex::generator(mu).unwrap()
    }

    #[test]
    fn generator_squares_follow_metric() {
        assert_eq!(g(0).product(g(0)), (1, BladeIndex::SCALAR));
        for mu in 1..4 {
            assert_eq!(g(mu).product(g(mu)), (-1, BladeIndex::SCALAR));
        }
    }

    #[test]
    fn distinct_generators_anticommute() {
        for mu in 0..4 {
            for nu in 0..4 {
                if mu == nu {
                    continue;
                }
                let (s1, b1) = g(mu).product(g(nu));
                let (s2, b2) = g(nu).product(g(mu));
                assert_eq!(b1, b2);
                assert_eq!(s1, -s2);
            }
        }
    }

    #[test]
    fn bivector_square() {
        // (γ0γ1)(γ0γ1) = −γ0γ0γ1γ1 = −(1)(−1) = 1
        let e01 = BladeIndex::from_generators(&[0, 1]).unwrap();
        assert_eq!(e01.product(e01), (1, BladeIndex::SCALAR));
        let e12 = BladeIndex::from_generators(&[1, 2]).unwrap();
        assert_eq!(e12.product(e12), (-1, BladeIndex::SCALAR));
    }

    #[test]
    fn text_form() {
        let b = BladeIndex::from_generators(&[0, 1]).unwrap();
        assert_eq!(b.to_text(), "b0011");
        assert_eq!(BladeIndex::from_text("b0011"), Some(b));
        assert_eq!(BladeIndex::from_text("b11"), None);
        assert_eq!(BladeIndex::from_text("0011"), None);
        assert_eq!(BladeIndex::generator(4).unwrap_err().to_string(), "generator index 4 is outside 0..=3");
    }

    #[test]
    fn sixteen_blades_with_popcount_grades() {
        let grades: Vec<u8> = BladeIndex::all().map(BladeIndex::grade).collect();
        assert_eq!(grades.len(), 16);
        for r in 0..=4u8 {
            let expected = [1, 4, 6, 4, 1][r as usize];
            assert_eq!(grades.iter().filter(|&&x| x == r).count(), expected);
        }
    }
}
