use serde::{Deserialize, Serialize};

use super::morphism::Morphism;
use super::types::MorphismType;
use crate::exact::{binom, Rational};
use crate::forms::{basis_in_vars, mul_exponents, FormMatrix, HomForm};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Construction {
    Generic,
    /// Only the first `kappa` entries of the first column are nonzero.
    ProperlySemistable { kappa: usize },
}

/// Explicit morphism `O(-d1) ⊕ O(-d2) -> n O` with `ψ = X0`: the first column
/// holds distinct monomials in `X1..Xr` of degree `d1`, the second column
/// holds `X0` times distinct monomials of degree `d2 - 1`, both in lex order.
pub fn construct_semistable(ty: &MorphismType, variant: Construction) -> Result<Morphism<Rational>> {
    if !(ty.is_two_block() && ty.mult(0) == 1 && ty.mult(1) == 1) {
        return Err(Error::UnsupportedShape("construction needs m1 = m2 = 1".into()));
    }
    let (r, n) = (ty.r() as u64, ty.n());
    let (d1, d2) = (ty.degree(0), ty.degree(1));
    let cap1 = binom(r - 1 + d1 as u64, r - 1) as usize;
    let cap2 = binom(r + d2 as u64 - 1, r) as usize;
    if n > cap1 || n > cap2 {
        return Err(Error::Inapplicable(format!("n = {n} exceeds the available monomials ({cap1}, {cap2})")));
    }
    let kappa = match variant {
        Construction::Generic => n,
        Construction::ProperlySemistable { kappa } => {
            if kappa == 0 || kappa >= n {
                return Err(Error::InvalidInput(format!("kappa must lie in 1..{n}")));
            }
            kappa
        }
    };
    let nv = ty.num_vars();
    let first: Vec<_> = basis_in_vars(nv, d1).monomials().iter().filter(|e| e[0] == 0).take(n).cloned().collect();
    let second: Vec<_> = basis_in_vars(nv, d2 - 1).monomials().iter().take(n).cloned().collect();
    let mut x0 = vec![0; nv];
    x0[0] = 1;
    let mut c1 = FormMatrix::zeros(n, 1, nv, d1, ());
    let mut c2 = FormMatrix::zeros(n, 1, nv, d2, ());
    for i in 0..n {
        if i < kappa {
            c1.set(i, 0, HomForm::monomial(&first[i], Rational::one(), ()));
        }
        c2.set(i, 0, HomForm::monomial(&mul_exponents(&second[i], &x0), Rational::one(), ()));
    }
    Morphism::new(ty.clone(), vec![c1, c2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_bounds() {
        let t = MorphismType::two_block(2, 3, 1, 2, 1, 3).unwrap();
        let m = construct_semistable(&t, Construction::Generic).unwrap();
        assert_eq!(m.block(0).get(0, 0).to_string(), "1*X1^3");
        assert_eq!(m.block(1).get(2, 0).to_string(), "1*X0*X2");
        let ps = construct_semistable(&t, Construction::ProperlySemistable { kappa: 1 }).unwrap();
        assert!(ps.block(0).get(1, 0).is_zero());
        let big = MorphismType::two_block(2, 3, 1, 2, 1, 4).unwrap();
        assert!(matches!(construct_semistable(&big, Construction::Generic), Err(Error::Inapplicable(_))));
        let other = MorphismType::two_block(2, 3, 1, 2, 2, 3).unwrap();
        assert!(matches!(construct_semistable(&other, Construction::Generic), Err(Error::UnsupportedShape(_))));
    }
}
