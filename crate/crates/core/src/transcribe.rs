//! Bosonization and fermionization on documents.

use std::collections::BTreeMap;

use crate::document::{BundleDocument, FieldDocument, TranscriptionDocument};
use crate::error::{Error, Result};
use crate::field::RealField;
use crate::maxwell::{gme_residual, GmeSystem};
use crate::spinor::{bosonize, fermionize, DHRepresentative, IdempotentSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Bosonize,
    Fermionize,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Bosonize => "bosonize",
            Direction::Fermionize => "fermionize",
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bosonize" => Ok(Direction::Bosonize),
            "fermionize" => Ok(Direction::Fermionize),
            other => Err(format!("unknown direction {other:?}; expected bosonize or fermionize")),
        }
    }
}

fn real_input(doc: &FieldDocument, path: &str) -> Result<RealField> {
    doc.to_any()?.into_real().ok_or_else(|| Error::Document {
        path: format!("{path}ring"),
        message: "expected a real field".into(),
    })
}

/// Even field in, `(F, Je, Jm)` and the GME residual out.
pub fn bosonize_document(input: &FieldDocument) -> Result<TranscriptionDocument> {
    let psi = DHRepresentative::new(real_input(input, "")?)?;
    let sys = bosonize(&psi);
    let residual = gme_residual(&sys);
    let (f, je, jm) = sys.into_parts();
    let mut outputs = BTreeMap::new();
    outputs.insert("F".to_string(), FieldDocument::from_field(&f));
    outputs.insert("Je".to_string(), FieldDocument::from_field(&je));
    outputs.insert("Jm".to_string(), FieldDocument::from_field(&jm));
    Ok(TranscriptionDocument {
        direction: Direction::Bosonize.as_str().into(),
        outputs,
        residual_zero: residual.is_zero(),
        residual: FieldDocument::from_field(&residual),
    })
}

/// `F`, `Je`, `Jm` in, `Ψ = Ff` and `∂Ψ − J_e f − γ⁵J_m f` out.
pub fn fermionize_bundle(input: &BundleDocument, spec: &IdempotentSpec) -> Result<TranscriptionDocument> {
    if let Some(extra) = input.fields.keys().find(|k| !["F", "Je", "Jm"].contains(&k.as_str())) {
        return Err(Error::Document {
            path: format!("fields.{extra}"),
            message: "unexpected field; expected F, Je, Jm".into(),
        });
    }
    let sys = GmeSystem::new(input.real("F", false)?, input.real("Je", true)?, input.real("Jm", true)?)?;
    let out = fermionize(&sys, spec);
    let mut outputs = BTreeMap::new();
    outputs.insert("Psi".to_string(), FieldDocument::from_field(out.psi.value()));
    Ok(TranscriptionDocument {
        direction: Direction::Fermionize.as_str().into(),
        outputs,
        residual_zero: out.residual.is_zero(),
        residual: FieldDocument::from_field(&out.residual),
    })
}

/// Parses the input text for `direction` and transcribes it. A fermionize input
/// may be a bundle or a bare field document (taken as `F` with no currents).
pub fn transcribe_text(direction: Direction, text: &str, spec: &IdempotentSpec) -> Result<TranscriptionDocument> {
    match direction {
        Direction::Bosonize => bosonize_document(&FieldDocument::from_json(text)?),
        Direction::Fermionize => {
            let value: serde_json::Value = serde_json::from_str(text)?;
            let bundle = if value.get("fields").is_some() {
                BundleDocument::from_json(text)?
            } else {
                let mut b = BundleDocument::new();
                b.fields.insert("F".into(), FieldDocument::from_json(text)?);
                b
            };
            fermionize_bundle(&bundle, spec)
        }
    }
}
