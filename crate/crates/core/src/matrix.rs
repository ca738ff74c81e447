//! The complex 4×4 matrix face of the complexified algebra, and column spinors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::clifford::{BladeIndex, ComplexMultivector};
use crate::error::{Error, Result};
use crate::fourier::ComplexPoly;
use crate::linalg;
use crate::scalar::{complex, int, ComplexRational, Rational};
use crate::spinor::{ideal_unit, IdealElement, IdempotentSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexMatrix4 {
    e: [[ComplexRational; 4]; 4],
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        ComplexMatrix4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| ComplexRational::zero())),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { ComplexRational::one() } else { ComplexRational::zero() })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> ComplexRational) -> Self {
        ComplexMatrix4 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn from_ints(rows: [[(i64, i64); 4]; 4]) -> Self {
        Self::from_fn(|i, j| complex(int(rows[i][j].0), int(rows[i][j].1)))
    }

    /// `E_ij` with a single unit entry.
    pub fn unit(i: usize, j: usize) -> Self {
        Self::from_fn(|r, c| if (r, c) == (i, j) { ComplexRational::one() } else { ComplexRational::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexRational {
        &self.e[i][j]
    }

    pub fn column(&self, j: usize) -> [ComplexRational; 4] {
        std::array::from_fn(|i| self.e[i][j].clone())
    }

    pub fn scale(&self, s: &ComplexRational) -> Self {
        Self::from_fn(|i, j| &self.e[i][j] * s)
    }

    pub fn trace(&self) -> ComplexRational {
        (0..4).fold(ComplexRational::zero(), |acc, i| acc + &self.e[i][i])
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Zero::is_zero)
    }

    fn rows(&self) -> Vec<Vec<ComplexRational>> {
        self.e.iter().map(|r| r.to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows())
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = linalg::inverse(&self.rows())?;
        Some(Self::from_fn(|i, j| inv[i][j].clone()))
    }

    pub fn apply(&self, v: &[ComplexRational; 4]) -> [ComplexRational; 4] {
        std::array::from_fn(|i| {
            (0..4).fold(ComplexRational::zero(), |acc, j| acc + &self.e[i][j] * &v[j])
        })
    }
}

impl fmt::Debug for ComplexMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.e {
            let cells: Vec<String> = row.iter().map(crate::scalar::format_complex).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn mul(self, rhs: Self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| {
            (0..4).fold(ComplexRational::zero(), |acc, k| acc + &self.e[i][k] * &rhs.e[k][j])
        })
    }
}

impl Add for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn add(self, rhs: Self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| &self.e[i][j] + &rhs.e[i][j])
    }
}

impl Sub for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn sub(self, rhs: Self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| &self.e[i][j] - &rhs.e[i][j])
    }
}

impl Neg for &ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn neg(self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| -&self.e[i][j])
    }
}

/// Four matrices `g^μ` with `g^μg^ν + g^νg^μ = 2η^{μν}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRep {
    g: [ComplexMatrix4; 4],
    images: Vec<ComplexMatrix4>,
}

impl GammaRep {
    fn build(g: [ComplexMatrix4; 4]) -> Self {
        let images = BladeIndex::all()
            .map(|b| b.generators().fold(ComplexMatrix4::identity(), |acc, mu| &acc * &g[mu]))
            .collect();
        GammaRep { g, images }
    }

    pub fn new(g: [ComplexMatrix4; 4]) -> Result<Self> {
        let rep = Self::build(g);
        if !rep.anticommutation_holds() {
            return Err(Error::InvalidParam("matrices violate the anticommutation relation".into()));
        }
        Ok(rep)
    }

    /// Dirac basis: `g⁰ = diag(1,1,−1,−1)`, `g^k = [[0, σ_k], [−σ_k, 0]]`.
    pub fn standard() -> Self {
        let z = (0, 0);
        let o = (1, 0);
        let m = (-1, 0);
        let i = (0, 1);
        let mi = (0, -1);
        let g0 = ComplexMatrix4::from_ints([[o, z, z, z], [z, o, z, z], [z, z, m, z], [z, z, z, m]]);
        let g1 = ComplexMatrix4::from_ints([[z, z, z, o], [z, z, o, z], [z, m, z, z], [m, z, z, z]]);
        let g2 = ComplexMatrix4::from_ints([[z, z, z, mi], [z, z, i, z], [z, i, z, z], [mi, z, z, z]]);
        let g3 = ComplexMatrix4::from_ints([[z, z, o, z], [z, z, z, m], [m, z, z, z], [z, o, z, z]]);
        Self::build([g0, g1, g2, g3])
    }

    pub fn gamma(&self, mu: usize) -> &ComplexMatrix4 {
        &self.g[mu]
    }

    pub fn anticommutator(&self, mu: usize, nu: usize) -> ComplexMatrix4 {
        &(&self.g[mu] * &self.g[nu]) + &(&self.g[nu] * &self.g[mu])
    }

    pub fn anticommutation_holds(&self) -> bool {
        (0..4).all(|mu| {
            (0..4).all(|nu| {
                let eta = if mu != nu { 0 } else if mu == 0 { 2 } else { -2 };
                self.anticommutator(mu, nu) == ComplexMatrix4::identity().scale(&complex(int(eta), int(0)))
            })
        })
    }

    /// Image of a basis blade: the ordered product of its generators.
    pub fn blade(&self, b: BladeIndex) -> &ComplexMatrix4 {
        &self.images[b.index()]
    }

    pub fn rep(&self, a: &ComplexMultivector) -> ComplexMatrix4 {
        a.terms()
            .fold(ComplexMatrix4::zero(), |acc, (b, c)| &acc + &self.blade(b).scale(c))
    }

    /// Rank of the 16 blade images as vectors in `ℂ¹⁶`; 16 means `rep` is injective.
    pub fn blade_image_rank(&self) -> usize {
        let rows: Vec<Vec<ComplexRational>> = BladeIndex::all()
            .map(|b| {
                let m = self.blade(b);
                (0..16).map(|k| m.get(k / 4, k % 4).clone()).collect()
            })
            .collect();
        linalg::rank(&rows)
    }
}

/// The column-spinor picture of the ideal of the standard idempotent.
///
/// `T` has the image of `rep(f)` as first column and a kernel basis after it,
/// so that `T⁻¹ rep(f) T = E₁₁` and every ideal element lands in column 0.
#[derive(Debug, Clone)]
pub struct ColumnBasis {
    rep: GammaRep,
    spec: IdempotentSpec,
    t: ComplexMatrix4,
    t_inv: ComplexMatrix4,
    blades: Vec<ComplexMatrix4>,
}

impl ColumnBasis {
    pub fn standard() -> Self {
        Self::new(GammaRep::standard(), IdempotentSpec::standard()).expect("standard idempotent is primitive")
    }

    pub fn new(rep: GammaRep, spec: IdempotentSpec) -> Result<Self> {
        let p = rep.rep(spec.value());
        if p.rank() != 1 {
            return Err(Error::InvalidParam(format!("idempotent has rank {} in this representation", p.rank())));
        }
        let lead = (0..4)
            .map(|j| p.column(j))
            .find(|c| c.iter().any(|x| !x.is_zero()))
            .expect("rank one");
        let kernel = linalg::kernel(&p.rows());
        let mut cols: Vec<Vec<ComplexRational>> = vec![lead.to_vec()];
        cols.extend(kernel);
        let t = ComplexMatrix4::from_fn(|i, j| cols[j][i].clone());
        let t_inv = t.inverse().ok_or_else(|| Error::InvalidParam("singular basis change".into()))?;
        let blades = BladeIndex::all()
            .map(|b| &(&t_inv * rep.blade(b)) * &t)
            .collect();
        Ok(ColumnBasis { rep, spec, t, t_inv, blades })
    }

    pub fn gamma_rep(&self) -> &GammaRep {
        &self.rep
    }

    pub fn change_of_basis(&self) -> &ComplexMatrix4 {
        &self.t
    }

    /// `T⁻¹ rep(a) T`.
    pub fn normalized(&self, a: &ComplexMultivector) -> ComplexMatrix4 {
        &(&self.t_inv * &self.rep.rep(a)) * &self.t
    }

    fn check(&self, psi: &IdealElement) -> Result<()> {
        if psi.spec() != &self.spec {
            return Err(Error::IdempotentMismatch);
        }
        Ok(())
    }

    /// The column of `Ψ(x)`.
    pub fn column_extract(&self, psi: &IdealElement, x: &[Rational; 4]) -> Result<[ComplexRational; 4]> {
        self.check(psi)?;
        let v = psi.value().eval_at(x)?;
        Ok(self.normalized(&v).column(0))
    }

    /// The column of `Ψ` as four polynomial fields.
    pub fn column_field(&self, psi: &IdealElement) -> Result<[ComplexPoly; 4]> {
        self.check(psi)?;
        let mut col: [ComplexPoly; 4] = Default::default();
        for (k, b) in BladeIndex::all().enumerate() {
            let comp = psi.value().component(b);
            if comp.is_zero() {
                continue;
            }
            for (i, entry) in col.iter_mut().enumerate() {
                let c = self.blades[k].get(i, 0);
                if !c.is_zero() {
                    *entry = &*entry + &comp.scale(c);
                }
            }
        }
        Ok(col)
    }

    /// `i g^μ∂_μΨ − mΨ` on columns, with the same complex unit as the ideal equation.
    pub fn matrix_dirac_residual(&self, psi: &IdealElement, m: &Rational) -> Result<[ComplexPoly; 4]> {
        let col = self.column_field(psi)?;
        let unit = ideal_unit();
        let mc = complex(m.clone(), int(0));
        let mut out: [ComplexPoly; 4] = std::array::from_fn(|i| col[i].scale(&-mc.clone()));
        for mu in 0..4 {
            let g = &self.blades[1 << mu];
            let dcol: Vec<ComplexPoly> = col.iter().map(|c| c.partial(mu)).collect();
            for (i, o) in out.iter_mut().enumerate() {
                for (j, d) in dcol.iter().enumerate() {
                    let c = g.get(i, j);
                    if !c.is_zero() && !d.is_zero() {
                        *o = &*o + &d.scale(&(c * &unit));
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn column_is_zero(col: &[ComplexPoly; 4]) -> bool {
    col.iter().all(ComplexPoly::is_zero)
}
