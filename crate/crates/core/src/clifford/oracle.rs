//! Combinatorial Hodge star, written without the geometric product.
//!
//! For a basis r-form `e_I` the dual is fixed by `e_I ∧ ⋆e_I = ⟨e_I, e_I⟩ τ`
//! with `τ = γ⁰∧γ¹∧γ²∧γ³` and `⟨e_I, e_I⟩ = Π_{i∈I} η^{ii}`. Writing
//! `e_I ∧ e_{I^c} = ε(I, I^c) τ` gives `⋆e_I = ⟨e_I, e_I⟩ ε(I, I^c) e_{I^c}`.

use super::blade::{BladeIndex, METRIC};
use super::multivector::Multivector;
use crate::scalar::Scalar;

/// Parity of the permutation given as a sequence of distinct indices.
fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(sign, complement)` with `⋆e_I = sign · e_{I^c}`.
pub fn hodge_blade(b: BladeIndex) -> (i8, BladeIndex) {
    let inside: Vec<usize> = (0..4).filter(|&mu| b.mask() & (1 << mu) != 0).collect();
    let outside: Vec<usize> = (0..4).filter(|&mu| b.mask() & (1 << mu) == 0).collect();
    let norm: i8 = inside.iter().map(|&mu| METRIC[mu]).product();
    let concat: Vec<usize> = inside.iter().chain(outside.iter()).copied().collect();
    let complement = BladeIndex::new(!b.mask() & 0b1111).unwrap();
    (norm * permutation_sign(&concat), complement)
}

/// Linear extension of [`hodge_blade`].
pub fn hodge<S: Scalar>(a: &Multivector<S>) -> Multivector<S> {
    let mut out: Multivector<S> = Multivector::zero();
    for (b, c) in a.terms() {
        let (sign, target) = hodge_blade(b);
        let v = if sign > 0 { c.clone() } else { -c.clone() };
        out.set_coeff(target, out.coeff(target).clone() + v);
    }
    out
}
