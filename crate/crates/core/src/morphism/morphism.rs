use rand::Rng;

use super::types::MorphismType;
use crate::exact::{Fp, PrimeField, Rational, Scalar};
use crate::forms::{basis_in_vars, FormMatrix, HomForm};
use crate::{Error, Result};

/// A morphism `⊕ m_i O(-d_i) -> n O`, one `n × m_i` form matrix per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<S: Scalar> {
    ty: MorphismType,
    blocks: Vec<FormMatrix<S>>,
}

impl<S: Scalar> Morphism<S> {
    pub fn new(ty: MorphismType, blocks: Vec<FormMatrix<S>>) -> Result<Self> {
        if blocks.len() != ty.num_blocks() {
            return Err(Error::InvalidInput(format!("expected {} blocks, got {}", ty.num_blocks(), blocks.len())));
        }
        for (i, b) in blocks.iter().enumerate() {
            let want = (ty.n(), ty.mult(i), ty.num_vars(), ty.degree(i));
            let got = (b.rows(), b.cols(), b.num_vars(), b.degree());
            if want != got {
                return Err(Error::InvalidInput(format!(
                    "block {i}: expected (rows, cols, vars, degree) = {want:?}, got {got:?}"
                )));
            }
        }
        Ok(Morphism { ty, blocks })
    }

    pub fn zero(ty: MorphismType, ctx: S::Ctx) -> Self {
        let blocks = (0..ty.num_blocks())
            .map(|i| FormMatrix::zeros(ty.n(), ty.mult(i), ty.num_vars(), ty.degree(i), ctx))
            .collect();
        Morphism { ty, blocks }
    }

    pub fn ty(&self) -> &MorphismType {
        &self.ty
    }

    pub fn blocks(&self) -> &[FormMatrix<S>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &FormMatrix<S> {
        &self.blocks[i]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
}

impl Morphism<Rational> {
    pub fn reduce(&self, field: PrimeField) -> Result<Morphism<Fp>> {
        let blocks = self.blocks.iter().map(|b| b.reduce(field)).collect::<Result<Vec<_>>>()?;
        Ok(Morphism { ty: self.ty.clone(), blocks })
    }
}

impl Morphism<Fp> {
    /// Random morphism over `F_p`; each coefficient is nonzero with
    /// probability `density.0 / density.1`, and then uniform in `F_p^*`.
    pub fn random(ty: &MorphismType, field: PrimeField, rng: &mut impl Rng, density: (u32, u32)) -> Self {
        let p = field.modulus();
        let blocks = (0..ty.num_blocks())
            .map(|i| {
                let len = basis_in_vars(ty.num_vars(), ty.degree(i)).len();
                let entries = (0..ty.n() * ty.mult(i))
                    .map(|_| {
                        let coeffs = (0..len)
                            .map(|_| {
                                if rng.gen_ratio(density.0, density.1) {
                                    field.elem(rng.gen_range(1..p) as i64)
                                } else {
                                    field.zero()
                                }
                            })
                            .collect();
                        HomForm::from_coeffs(ty.num_vars(), ty.degree(i), field, coeffs)
                    })
                    .collect();
                FormMatrix::from_entries(ty.n(), ty.mult(i), ty.num_vars(), ty.degree(i), field, entries)
            })
            .collect();
        Morphism { ty: ty.clone(), blocks }
    }
}
