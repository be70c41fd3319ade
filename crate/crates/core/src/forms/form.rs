use std::fmt;

use super::monomial::{basis_in_vars, format_monomial, mul_exponents, Exponents};
use crate::exact::{PrimeField, Rational, Scalar};
use crate::{Error, Result};

/// A homogeneous form of fixed degree, stored as its coefficient vector in
/// the lex monomial basis. The zero form is an all-zero vector.
#[derive(Clone, PartialEq, Eq)]
pub struct HomForm<S: Scalar> {
    num_vars: usize,
    degree: u32,
    ctx: S::Ctx,
    coeffs: Vec<S>,
}

impl<S: Scalar> HomForm<S> {
    pub fn zero(num_vars: usize, degree: u32, ctx: S::Ctx) -> Self {
        let n = basis_in_vars(num_vars, degree).len();
        HomForm { num_vars, degree, ctx, coeffs: vec![S::zero(ctx); n] }
    }

    pub fn from_coeffs(num_vars: usize, degree: u32, ctx: S::Ctx, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), basis_in_vars(num_vars, degree).len(), "coefficient count");
        HomForm { num_vars, degree, ctx, coeffs }
    }

    /// `c * X^e`.
    pub fn monomial(e: &[u32], c: S, ctx: S::Ctx) -> Self {
        let degree = e.iter().sum();
        let mut f = Self::zero(e.len(), degree, ctx);
        let i = basis_in_vars(e.len(), degree).index_of(e).expect("monomial in basis");
        f.coeffs[i] = c;
        f
    }

    /// The variable `X_i`.
    pub fn var(num_vars: usize, i: usize, ctx: S::Ctx) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(&e, S::one(ctx), ctx)
    }

    /// Sum of terms; repeated monomials accumulate.
    pub fn from_terms(num_vars: usize, degree: u32, ctx: S::Ctx, terms: &[(Exponents, S)]) -> Result<Self> {
        let basis = basis_in_vars(num_vars, degree);
        let mut f = Self::zero(num_vars, degree, ctx);
        for (e, c) in terms {
            let i = basis.index_of(e).ok_or_else(|| {
                Error::InvalidInput(format!("monomial {e:?} is not of degree {degree} in {num_vars} variables"))
            })?;
            f.coeffs[i] = f.coeffs[i].add(c);
        }
        Ok(f)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ctx(&self) -> S::Ctx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, e: &[u32]) -> S {
        match basis_in_vars(self.num_vars, self.degree).index_of(e) {
            Some(i) => self.coeffs[i].clone(),
            None => S::zero(self.ctx),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> Vec<(Exponents, S)> {
        let basis = basis_in_vars(self.num_vars, self.degree);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (basis.get(i).clone(), c.clone()))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_compatible(o);
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect();
        HomForm { coeffs, ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_compatible(o);
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect();
        HomForm { coeffs, ..self.clone() }
    }

    pub fn scale(&self, c: &S) -> Self {
        HomForm { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        HomForm { coeffs: self.coeffs.iter().map(|a| a.neg()).collect(), ..self.clone() }
    }

    fn check_compatible(&self, o: &Self) {
        assert_eq!(self.num_vars, o.num_vars, "variable count mismatch");
        assert_eq!(self.degree, o.degree, "degree mismatch");
    }

    /// Exact product, expanded in the basis of degree `deg f + deg g`.
    pub fn multiply(&self, g: &Self) -> Self {
        assert_eq!(self.num_vars, g.num_vars, "variable count mismatch");
        let degree = self.degree + g.degree;
        let out_basis = basis_in_vars(self.num_vars, degree);
        let fb = basis_in_vars(self.num_vars, self.degree);
        let gb = basis_in_vars(self.num_vars, g.degree);
        let mut coeffs = vec![S::zero(self.ctx); out_basis.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = out_basis.index_of(&mul_exponents(fb.get(i), gb.get(j))).expect("product monomial");
                coeffs[k] = coeffs[k].add(&a.mul(b));
            }
        }
        HomForm { num_vars: self.num_vars, degree, ctx: self.ctx, coeffs }
    }
}

impl HomForm<Rational> {
    /// Coefficientwise reduction into `F_p`.
    pub fn reduce(&self, field: PrimeField) -> Result<HomForm<crate::exact::Fp>> {
        let coeffs = self.coeffs.iter().map(|c| field.reduce(c)).collect::<Result<Vec<_>>>()?;
        Ok(HomForm::from_coeffs(self.num_vars, self.degree, field, coeffs))
    }
}

impl<S: Scalar> fmt::Display for HomForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms.iter().map(|(e, c)| format!("{c}*{}", format_monomial(e))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for HomForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Free-function form of [`HomForm::multiply`].
pub fn multiply<S: Scalar>(f: &HomForm<S>, g: &HomForm<S>) -> HomForm<S> {
    f.multiply(g)
}
