//! JSON wire formats for forms, morphisms and embedded points.
//!
//! Coefficients are strings: `"p/q"` (or an integer) over `Q`, a residue
//! over `F_p`. The field is recorded once per object as `prime`, with
//! `null` meaning the rationals.

use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddedPoint, EmbeddingKind};
use crate::exact::{Fp, PrimeField, Rational, Scalar};
use crate::forms::{FormMatrix, HomForm};
use crate::morphism::{Morphism, MorphismType};
use crate::{Error, Result};

/// Scalars that can be written to and read from the wire format.
pub trait WireScalar: Scalar {
    fn prime_of(ctx: Self::Ctx) -> Option<u32>;
    fn ctx_for(prime: Option<u32>) -> Result<Self::Ctx>;
    fn parse(s: &str, ctx: Self::Ctx) -> Result<Self>;
}

impl WireScalar for Rational {
    fn prime_of(_: ()) -> Option<u32> {
        None
    }

    fn ctx_for(prime: Option<u32>) -> Result<()> {
        match prime {
            None => Ok(()),
            Some(p) => Err(Error::InvalidInput(format!("expected rational coefficients, found prime {p}"))),
        }
    }

    fn parse(s: &str, _: ()) -> Result<Self> {
        s.parse().map_err(|_| Error::InvalidInput(format!("bad rational {s:?}")))
    }
}

impl WireScalar for Fp {
    fn prime_of(ctx: PrimeField) -> Option<u32> {
        Some(ctx.modulus())
    }

    fn ctx_for(prime: Option<u32>) -> Result<PrimeField> {
        match prime {
            Some(p) => PrimeField::new(p),
            None => Err(Error::InvalidInput("expected coefficients in a prime field".into())),
        }
    }

    fn parse(s: &str, ctx: PrimeField) -> Result<Self> {
        let v: i64 = s.trim().parse().map_err(|_| Error::InvalidInput(format!("bad residue {s:?}")))?;
        Ok(ctx.elem(v))
    }
}

/// One term `coeff * X^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

/// Matrix of forms of one degree; `entries[i][j]` lists the nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormMatrixJson {
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<TermJson>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    #[serde(rename = "type")]
    pub ty: MorphismType,
    pub prime: Option<u32>,
    pub blocks: Vec<FormMatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedJson {
    pub kind: EmbeddingKind,
    #[serde(rename = "type")]
    pub ty: MorphismType,
    pub prime: Option<u32>,
    pub xis: Vec<FormMatrixJson>,
    pub gamma: FormMatrixJson,
}

pub fn form_to_json<S: Scalar>(f: &HomForm<S>) -> Vec<TermJson> {
    f.terms().into_iter().map(|(e, c)| TermJson { exp: e.to_vec(), coeff: c.to_string() }).collect()
}

pub fn form_from_json<S: WireScalar>(terms: &[TermJson], num_vars: usize, degree: u32, ctx: S::Ctx) -> Result<HomForm<S>> {
    let parsed = terms
        .iter()
        .map(|t| {
            if t.exp.len() != num_vars {
                return Err(Error::InvalidInput(format!("exponent {:?} needs {num_vars} entries", t.exp)));
            }
            Ok((t.exp.clone(), S::parse(&t.coeff, ctx)?))
        })
        .collect::<Result<Vec<_>>>()?;
    HomForm::from_terms(num_vars, degree, ctx, &parsed)
}

pub fn matrix_to_json<S: Scalar>(m: &FormMatrix<S>) -> FormMatrixJson {
    FormMatrixJson {
        degree: m.degree(),
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows()).map(|i| (0..m.cols()).map(|j| form_to_json(m.get(i, j))).collect()).collect(),
    }
}

pub fn matrix_from_json<S: WireScalar>(j: &FormMatrixJson, num_vars: usize, ctx: S::Ctx) -> Result<FormMatrix<S>> {
    if j.entries.len() != j.rows || j.entries.iter().any(|row| row.len() != j.cols) {
        return Err(Error::InvalidInput(format!("entries do not form a {}x{} matrix", j.rows, j.cols)));
    }
    let rows = j
        .entries
        .iter()
        .map(|row| row.iter().map(|t| form_from_json(t, num_vars, j.degree, ctx)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if j.rows == 0 || j.cols == 0 {
        return Ok(FormMatrix::zeros(j.rows, j.cols, num_vars, j.degree, ctx));
    }
    Ok(FormMatrix::from_rows(rows, num_vars, j.degree, ctx))
}

pub fn morphism_to_json<S: WireScalar>(phi: &Morphism<S>) -> MorphismJson {
    MorphismJson {
        ty: phi.ty().clone(),
        prime: S::prime_of(phi.block(0).ctx()),
        blocks: phi.blocks().iter().map(matrix_to_json).collect(),
    }
}

pub fn morphism_from_json<S: WireScalar>(j: &MorphismJson) -> Result<Morphism<S>> {
    let ctx = S::ctx_for(j.prime)?;
    let nv = j.ty.num_vars();
    let blocks = j.blocks.iter().map(|b| matrix_from_json(b, nv, ctx)).collect::<Result<Vec<_>>>()?;
    Morphism::new(j.ty.clone(), blocks)
}

pub fn embedded_to_json<S: WireScalar>(e: &EmbeddedPoint<S>) -> EmbeddedJson {
    EmbeddedJson {
        kind: e.kind,
        ty: e.ty.clone(),
        prime: S::prime_of(e.gamma.ctx()),
        xis: e.xis.iter().map(matrix_to_json).collect(),
        gamma: matrix_to_json(&e.gamma),
    }
}

pub fn embedded_from_json<S: WireScalar>(j: &EmbeddedJson) -> Result<EmbeddedPoint<S>> {
    let ctx = S::ctx_for(j.prime)?;
    let nv = j.ty.num_vars();
    let want = match j.kind {
        EmbeddingKind::Embedded21 => 1,
        EmbeddingKind::Embedded31 => 2,
    };
    if j.xis.len() != want {
        return Err(Error::InvalidInput(format!("{:?} needs {want} ξ matrices", j.kind)));
    }
    Ok(EmbeddedPoint {
        kind: j.kind,
        ty: j.ty.clone(),
        xis: j.xis.iter().map(|x| matrix_from_json(x, nv, ctx)).collect::<Result<Vec<_>>>()?,
        gamma: matrix_from_json(&j.gamma, nv, ctx)?,
    })
}

/// A morphism read from disk, over whichever field it names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMorphism {
    Rational(Morphism<Rational>),
    Prime(Morphism<Fp>),
}

impl AnyMorphism {
    pub fn from_json(j: &MorphismJson) -> Result<Self> {
        match j.prime {
            None => Ok(AnyMorphism::Rational(morphism_from_json(j)?)),
            Some(_) => Ok(AnyMorphism::Prime(morphism_from_json(j)?)),
        }
    }

    pub fn ty(&self) -> &MorphismType {
        match self {
            AnyMorphism::Rational(m) => m.ty(),
            AnyMorphism::Prime(m) => m.ty(),
        }
    }

    /// The morphism over `F_p`: rationals are reduced, prime-field input
    /// must already live in `field`.
    pub fn over(&self, field: PrimeField) -> Result<Morphism<Fp>> {
        match self {
            AnyMorphism::Rational(m) => m.reduce(field),
            AnyMorphism::Prime(m) => {
                let have = m.block(0).ctx();
                if have != field {
                    return Err(Error::InvalidInput(format!(
                        "morphism is over F_{}, requested F_{}",
                        have.modulus(),
                        field.modulus()
                    )));
                }
                Ok(m.clone())
            }
        }
    }
}
