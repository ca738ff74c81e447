//! JSON documents for fields, field bundles and transcription results.
//!
//! Rationals are always strings `p/q`; complex values are `re+imi`. Blades are
//! sorted by mask and terms by their canonical key, so emitting the same field
//! twice yields identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::clifford::BladeIndex;
use crate::error::{Error, Result};
use crate::field::{ComplexField, MultivectorField, RealField};
use crate::fourier::{FourierPoly, Monomial, Trig, WaveVector};
use crate::scalar::{format_rational, parse_rational, RingTag, ScalarText};

pub const SIGNATURE: &str = "1,3";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub monomial: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trig: Option<String>,
    pub amp: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BladeDoc {
    pub blade: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDocument {
    pub signature: String,
    pub ring: String,
    pub blades: Vec<BladeDoc>,
}

/// A parsed field of either ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyField {
    Real(RealField),
    Complex(ComplexField),
}

impl AnyField {
    pub fn ring(&self) -> RingTag {
        match self {
            AnyField::Real(_) => RingTag::Rational,
            AnyField::Complex(_) => RingTag::ComplexRational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AnyField::Real(f) => f.is_zero(),
            AnyField::Complex(f) => f.is_zero(),
        }
    }

    pub fn to_document(&self) -> FieldDocument {
        match self {
            AnyField::Real(f) => FieldDocument::from_field(f),
            AnyField::Complex(f) => FieldDocument::from_field(f),
        }
    }

    /// The real field, if the document was rational or had no imaginary parts.
    pub fn into_real(self) -> Option<RealField> {
        match self {
            AnyField::Real(f) => Some(f),
            AnyField::Complex(f) => f.to_real(),
        }
    }
}

fn doc_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Document {
        path: path.into(),
        message: message.into(),
    }
}

impl FieldDocument {
    pub fn from_field<S: ScalarText>(f: &MultivectorField<S>) -> Self {
        let blades = f
            .components()
            .filter(|(_, p)| !p.is_zero())
            .map(|(b, p)| BladeDoc {
                blade: b.to_text(),
                terms: p
                    .terms()
                    .map(|(key, amp)| TermDoc {
                        monomial: key.monomial.0.to_vec(),
                        k: key.phase.as_ref().map(|ph| ph.k.0.iter().map(format_rational).collect()),
                        trig: key.phase.as_ref().map(|ph| ph.trig.as_str().to_string()),
                        amp: amp.to_text(),
                    })
                    .collect(),
            })
            .collect();
        FieldDocument {
            signature: SIGNATURE.to_string(),
            ring: S::RING.as_str().to_string(),
            blades,
        }
    }

    fn ring_tag(&self, path: &str) -> Result<RingTag> {
        if self.signature != SIGNATURE {
            return Err(doc_err(format!("{path}signature"), format!("unsupported signature {:?}, expected \"1,3\"", self.signature)));
        }
        match self.ring.as_str() {
            "rational" => Ok(RingTag::Rational),
            "complex-rational" => Ok(RingTag::ComplexRational),
            other => Err(doc_err(format!("{path}ring"), format!("unknown ring {other:?}"))),
        }
    }

    /// Builds the field in ring `S`; the document's ring tag must match.
    pub fn to_field<S: ScalarText>(&self) -> Result<MultivectorField<S>> {
        self.to_field_at("")
    }

    fn to_field_at<S: ScalarText>(&self, path: &str) -> Result<MultivectorField<S>> {
        let tag = self.ring_tag(path)?;
        if tag != S::RING {
            return Err(doc_err(format!("{path}ring"), format!("expected ring {}, found {}", S::RING, tag)));
        }
        let mut out = MultivectorField::<S>::zero();
        for (bi, bd) in self.blades.iter().enumerate() {
            let bpath = format!("{path}blades[{bi}]");
            let blade = BladeIndex::from_text(&bd.blade)
                .ok_or_else(|| doc_err(format!("{bpath}.blade"), format!("invalid blade {:?}, expected b followed by 4 binary digits", bd.blade)))?;
            let mut poly = out.component(blade).clone();
            for (ti, td) in bd.terms.iter().enumerate() {
                let tpath = format!("{bpath}.terms[{ti}]");
                let (mono, phase, amp) = parse_term::<S>(td, &tpath)?;
                poly.add_term(mono, phase, amp);
            }
            out.set_component(blade, poly);
        }
        Ok(out)
    }

    /// Builds the field in whichever ring the document declares.
    pub fn to_any(&self) -> Result<AnyField> {
        self.to_any_at("")
    }

    fn to_any_at(&self, path: &str) -> Result<AnyField> {
        Ok(match self.ring_tag(path)? {
            RingTag::Rational => AnyField::Real(self.to_field_at(path)?),
            RingTag::ComplexRational => AnyField::Complex(self.to_field_at(path)?),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn parse_term<S: ScalarText>(td: &TermDoc, path: &str) -> Result<(Monomial, Option<(WaveVector, Trig)>, S)> {
    if td.monomial.len() != 4 {
        return Err(doc_err(format!("{path}.monomial"), format!("expected 4 exponents, found {}", td.monomial.len())));
    }
    let mono = Monomial(std::array::from_fn(|i| td.monomial[i]));
    let phase = match (&td.k, &td.trig) {
        (None, None) => None,
        (Some(k), Some(trig)) => {
            if k.len() != 4 {
                return Err(doc_err(format!("{path}.k"), format!("expected 4 components, found {}", k.len())));
            }
            let mut comps = Vec::with_capacity(4);
            for (i, c) in k.iter().enumerate() {
                comps.push(parse_rational(c).map_err(|m| doc_err(format!("{path}.k[{i}]"), m))?);
            }
            let trig = match trig.as_str() {
                "cos" => Trig::Cos,
                "sin" => Trig::Sin,
                other => return Err(doc_err(format!("{path}.trig"), format!("expected \"cos\" or \"sin\", found {other:?}"))),
            };
            let k: [_; 4] = comps.try_into().expect("length checked");
            Some((WaveVector::new(k), trig))
        }
        (Some(_), None) => return Err(doc_err(format!("{path}.trig"), "k is present but trig is missing")),
        (None, Some(_)) => return Err(doc_err(format!("{path}.k"), "trig is present but k is missing")),
    };
    let amp = S::from_text(&td.amp).map_err(|m| doc_err(format!("{path}.amp"), m))?;
    Ok((mono, phase, amp))
}

/// Emits a field as canonical JSON text.
pub fn emit_field<S: ScalarText>(f: &MultivectorField<S>) -> String {
    FieldDocument::from_field(f).to_json()
}

/// Parses JSON text into a field of the declared ring.
pub fn parse_field(text: &str) -> Result<AnyField> {
    FieldDocument::from_json(text)?.to_any()
}

/// Several named fields, e.g. `F`, `Je`, `Jm`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDocument {
    pub fields: BTreeMap<String, FieldDocument>,
}

impl BundleDocument {
    pub fn new() -> Self {
        BundleDocument { fields: BTreeMap::new() }
    }

    pub fn insert<S: ScalarText>(&mut self, name: &str, f: &MultivectorField<S>) {
        self.fields.insert(name.to_string(), FieldDocument::from_field(f));
    }

    /// The named real field; a missing entry reads as zero when `optional`.
    pub fn real(&self, name: &str, optional: bool) -> Result<RealField> {
        match self.fields.get(name) {
            None if optional => Ok(RealField::zero()),
            None => Err(doc_err(format!("fields.{name}"), "missing field")),
            Some(doc) => {
                let path = format!("fields.{name}.");
                doc.to_any_at(&path)?
                    .into_real()
                    .ok_or_else(|| doc_err(format!("{path}ring"), "expected a real field"))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl Default for BundleDocument {
    fn default() -> Self {
        Self::new()
    }
}

/// Output of a transcription: the produced fields and the residual of the
/// target equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranscriptionDocument {
    pub direction: String,
    pub outputs: BTreeMap<String, FieldDocument>,
    pub residual: FieldDocument,
    pub residual_zero: bool,
}

impl TranscriptionDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Structural equality helper used by round-trip checks.
pub fn roundtrip_exact<S: ScalarText>(f: &MultivectorField<S>) -> bool {
    let text = emit_field(f);
    let Ok(doc) = FieldDocument::from_json(&text) else {
        return false;
    };
    match doc.to_field::<S>() {
        Ok(back) => back == *f && emit_field(&back) == text,
        Err(_) => false,
    }
}

/// `FourierPoly` in ring `S` built from one document term list; handy in tests.
pub fn poly_from_terms<S: ScalarText>(terms: &[TermDoc]) -> Result<FourierPoly<S>> {
    let mut p = FourierPoly::zero();
    for (i, t) in terms.iter().enumerate() {
        let (m, ph, a) = parse_term::<S>(t, &format!("terms[{i}]"))?;
        p.add_term(m, ph, a);
    }
    Ok(p)
}
