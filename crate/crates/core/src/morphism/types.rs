use serde::{Deserialize, Serialize};

use crate::exact::{q, Rational};
use crate::forms::sym_dim;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub degree: u32,
    pub mult: usize,
}

#[derive(Deserialize)]
struct RawType {
    r: usize,
    blocks: Vec<Block>,
    n: usize,
}

/// Shape of a morphism `⊕ m_i O(-d_i) -> n O` on `P^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct MorphismType {
    r: usize,
    blocks: Vec<Block>,
    n: usize,
}

impl TryFrom<RawType> for MorphismType {
    type Error = Error;
    fn try_from(raw: RawType) -> Result<Self> {
        MorphismType::new(raw.r, raw.blocks, raw.n)
    }
}

impl MorphismType {
    pub fn new(r: usize, blocks: Vec<Block>, n: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be at least 1".into()));
        }
        if n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if blocks.is_empty() {
            return Err(Error::InvalidInput("at least one source block is required".into()));
        }
        for b in &blocks {
            if b.degree == 0 || b.mult == 0 {
                return Err(Error::InvalidInput("degrees and multiplicities must be positive".into()));
            }
        }
        if blocks.windows(2).any(|w| w[0].degree <= w[1].degree) {
            return Err(Error::InvalidInput("degrees must be strictly decreasing".into()));
        }
        Ok(MorphismType { r, blocks, n })
    }

    /// `m1 O(-d1) ⊕ m2 O(-d2) -> n O`.
    pub fn two_block(r: usize, d1: u32, m1: usize, d2: u32, m2: usize, n: usize) -> Result<Self> {
        Self::new(r, vec![Block { degree: d1, mult: m1 }, Block { degree: d2, mult: m2 }], n)
    }

    /// `m O(-d1) ⊕ O(-d2) ⊕ O(-d3) -> n O`.
    pub fn three_one(r: usize, m: usize, d1: u32, d2: u32, d3: u32, n: usize) -> Result<Self> {
        Self::new(
            r,
            vec![Block { degree: d1, mult: m }, Block { degree: d2, mult: 1 }, Block { degree: d3, mult: 1 }],
            n,
        )
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn num_vars(&self) -> usize {
        self.r + 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.blocks[i].degree
    }

    pub fn mult(&self, i: usize) -> usize {
        self.blocks[i].mult
    }

    pub fn mults(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.mult).collect()
    }

    /// `dim S^{d_i - d_j} V*` (0-based block indices, `i < j`).
    pub fn a(&self, i: usize, j: usize) -> usize {
        assert!(i < j && j < self.blocks.len());
        sym_dim(self.num_vars(), self.blocks[i].degree - self.blocks[j].degree)
    }

    pub fn a21(&self) -> usize {
        self.a(0, 1)
    }

    pub fn a31(&self) -> usize {
        self.a(0, 2)
    }

    pub fn a32(&self) -> usize {
        self.a(1, 2)
    }

    /// Two source blocks.
    pub fn is_two_block(&self) -> bool {
        self.blocks.len() == 2
    }

    /// `m O(-d1) ⊕ O(-d2) ⊕ O(-d3)`.
    pub fn is_three_one(&self) -> bool {
        self.blocks.len() == 3 && self.blocks[1].mult == 1 && self.blocks[2].mult == 1
    }

    /// Dimension of the first source space after embedding.
    pub fn p1(&self) -> usize {
        match self.blocks.len() {
            1 => self.mult(0),
            2 => self.mult(0) + self.mult(1) * self.a21(),
            _ => self.mult(0) + self.a21() + self.a31(),
        }
    }

    pub fn p2(&self) -> usize {
        match self.blocks.len() {
            2 => self.mult(1),
            3 => 1 + self.a32(),
            _ => 0,
        }
    }

    /// Constraint-free weight ranges require at least this.
    pub fn require_two_block(&self) -> Result<()> {
        if self.is_two_block() {
            Ok(())
        } else {
            Err(Error::UnsupportedShape(format!("expected two source blocks, got {}", self.blocks.len())))
        }
    }

    pub fn require_three_one(&self) -> Result<()> {
        if self.is_three_one() {
            Ok(())
        } else {
            Err(Error::UnsupportedShape("expected m O(-d1) + O(-d2) + O(-d3)".into()))
        }
    }
}

/// Weights `(λ_i, μ)` with `μ = 1/n` and `Σ m_i λ_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarization {
    pub lambdas: Vec<Rational>,
    pub mu: Rational,
}

impl Polarization {
    /// Validates positivity and normalization against `ty`.
    pub fn new(ty: &MorphismType, lambdas: Vec<Rational>) -> Result<Self> {
        let p = Polarization { lambdas, mu: q(1, ty.n() as i64) };
        p.validate(ty)?;
        Ok(p)
    }

    pub fn validate(&self, ty: &MorphismType) -> Result<()> {
        if self.lambdas.len() != ty.num_blocks() {
            return Err(Error::InvalidInput(format!(
                "expected {} weights, got {}",
                ty.num_blocks(),
                self.lambdas.len()
            )));
        }
        if self.mu != q(1, ty.n() as i64) {
            return Err(Error::InvalidInput(format!("mu must be 1/{}", ty.n())));
        }
        if self.lambdas.iter().any(|l| !l.is_positive()) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        let total: Rational = self.lambdas.iter().zip(ty.mults()).map(|(l, m)| l * Rational::from(m)).sum();
        if total != Rational::one() {
            return Err(Error::InvalidInput(format!("weights sum to {total}, expected 1")));
        }
        Ok(())
    }

    /// Two-block polarization from `λ1`; `λ2 = (1 - m1 λ1) / m2`.
    pub fn from_lambda1(ty: &MorphismType, lambda1: Rational) -> Result<Self> {
        ty.require_two_block()?;
        let l2 = (Rational::one() - &lambda1 * Rational::from(ty.mult(0))) / Rational::from(ty.mult(1));
        Self::new(ty, vec![lambda1, l2])
    }

    /// Two-block polarization from `λ2`.
    pub fn from_lambda2(ty: &MorphismType, lambda2: Rational) -> Result<Self> {
        ty.require_two_block()?;
        let l1 = (Rational::one() - &lambda2 * Rational::from(ty.mult(1))) / Rational::from(ty.mult(0));
        Self::new(ty, vec![l1, lambda2])
    }

    /// Three-block polarization from `(λ1, λ2)`; `λ3 = 1 - m λ1 - λ2`.
    pub fn from_pair(ty: &MorphismType, lambda1: Rational, lambda2: Rational) -> Result<Self> {
        ty.require_three_one()?;
        let l3 = Rational::one() - &lambda1 * Rational::from(ty.mult(0)) - &lambda2;
        Self::new(ty, vec![lambda1, lambda2, l3])
    }

    pub fn lambda(&self, i: usize) -> &Rational {
        &self.lambdas[i]
    }

    /// Integer weight vector proportional to `(λ_1, …, λ_k, μ)`.
    pub fn integer_weights(&self) -> Vec<num_bigint::BigInt> {
        use num_integer::Integer;
        let all: Vec<&Rational> = self.lambdas.iter().chain(std::iter::once(&self.mu)).collect();
        let l = all.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        all.iter().map(|x| x.numer() * (&l / x.denom())).collect()
    }
}

/// Weights on the embedded side: `α_1 = λ_1`, `α_2 = λ_2 - a21 λ_1`,
/// `α_3 = λ_3 - a31 λ_1 - a32 λ_2 + a32 a21 λ_1`, `β_1 = μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildePolarization {
    pub alphas: Vec<Rational>,
    pub beta1: Rational,
}

impl TildePolarization {
    pub fn from_polarization(ty: &MorphismType, p: &Polarization) -> Result<Self> {
        p.validate(ty)?;
        let l = &p.lambdas;
        let a21 = || Rational::from(ty.a21());
        let alphas = match ty.num_blocks() {
            2 => vec![l[0].clone(), &l[1] - &a21() * &l[0]],
            3 if ty.is_three_one() => {
                let a31 = Rational::from(ty.a31());
                let a32 = Rational::from(ty.a32());
                let a3 = &l[2] - &a31 * &l[0] - &a32 * &l[1] + &a32 * &a21() * &l[0];
                vec![l[0].clone(), &l[1] - &a21() * &l[0], a3]
            }
            _ => return Err(Error::UnsupportedShape("tilde weights need a (2,1) or (3,1) type".into())),
        };
        Ok(TildePolarization { alphas, beta1: p.mu.clone() })
    }

    /// Dimensions of the embedded source spaces paired with `alphas`.
    pub fn dims(ty: &MorphismType) -> Vec<usize> {
        match ty.num_blocks() {
            2 => vec![ty.p1(), ty.p2()],
            _ => vec![ty.p1(), ty.p2(), 1],
        }
    }

    pub fn gates(&self) -> Result<()> {
        if self.alphas.iter().skip(1).any(|a| !a.is_positive()) {
            return Err(Error::Inapplicable("embedded weights must be positive".into()));
        }
        Ok(())
    }
}
