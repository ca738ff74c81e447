//! Exact scalar rings: arbitrary-precision rationals and their complexification.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Complex, One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Complex number with exact rational parts.
pub type ComplexRational = Complex<BigRational>;

/// Tag identifying which scalar ring a value lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Rational,
    ComplexRational,
}

impl RingTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::Rational => "rational",
            RingTag::ComplexRational => "complex-rational",
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact field of scalars. Both implementations are fields, so division
/// is available for the linear algebra in the matrix bridge.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const RING: RingTag;

    fn from_rational(q: Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self;
}

impl Scalar for Rational {
    const RING: RingTag = RingTag::Rational;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Scalar for ComplexRational {
    const RING: RingTag = RingTag::ComplexRational;

    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn scale(&self, q: &Rational) -> Self {
        Complex::new(&self.re * q, &self.im * q)
    }
}

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The complex unit `i`.
pub fn imag_unit() -> ComplexRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// Complex rational `re + im·i`.
pub fn complex(re: Rational, im: Rational) -> ComplexRational {
    Complex::new(re, im)
}

/// Formats a rational as `p/q` with `q >= 1`; integers keep the `/1`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`. Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

/// Formats a complex rational as `re+imi` or `re-imi`, both parts always present.
pub fn format_complex(c: &ComplexRational) -> String {
    let im = &c.im;
    if im.is_negative() {
        format!("{}-{}i", format_rational(&c.re), format_rational(&-im))
    } else {
        format!("{}+{}i", format_rational(&c.re), format_rational(im))
    }
}

/// Parses the output of [`format_complex`]; a bare rational is accepted as real.
pub fn parse_complex(s: &str) -> Result<ComplexRational, String> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(s)?, Rational::zero()));
    };
    // split at the last sign that is not leading
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, ch)| *ch == '+' || *ch == '-')
        .map(|(i, _)| i)
        .last()
        .ok_or_else(|| format!("invalid complex rational {s:?}"))?;
    let re = parse_rational(&body[..split])?;
    let im_str = &body[split..];
    let im = parse_rational(im_str.strip_prefix('+').unwrap_or(im_str))?;
    Ok(Complex::new(re, im))
}

/// Text form used in documents for values of ring `S`.
pub trait ScalarText: Scalar {
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Result<Self, String>;
}

impl ScalarText for Rational {
    fn to_text(&self) -> String {
        format_rational(self)
    }

    fn from_text(s: &str) -> Result<Self, String> {
        parse_rational(s)
    }
}

impl ScalarText for ComplexRational {
    fn to_text(&self) -> String {
        format_complex(self)
    }

    fn from_text(s: &str) -> Result<Self, String> {
        parse_complex(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn complex_text() {
        let c = complex(rat(-1, 2), rat(-3, 4));
        assert_eq!(format_complex(&c), "-1/2-3/4i");
        assert_eq!(parse_complex("-1/2-3/4i").unwrap(), c);
        assert_eq!(parse_complex("2/1+0/1i").unwrap(), complex(int(2), int(0)));
        assert_eq!(parse_complex("5/3").unwrap(), complex(rat(5, 3), int(0)));
        assert!(parse_complex("i").is_err());
    }
}
