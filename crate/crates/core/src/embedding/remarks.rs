//! The division matrix `W` of a (3,1) type: the constant `ω` and the bounds
//! on zero blocks reachable by scalar row and column operations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::build::division_matrix;
use crate::exact::{binom, enumerate_subspaces, Budget, Fp, Matrix, PrimeField};
use crate::morphism::MorphismType;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Omega {
    /// `2 C(e+r, r) - C(e+r-1, r)` with `e = d1 - d2`.
    pub closed_form: usize,
    /// Least number of rows of `W` meeting two distinct columns.
    pub recount: usize,
}

pub fn omega(ty: &MorphismType) -> Result<Omega> {
    ty.require_three_one()?;
    if ty.a32() < 2 {
        return Err(Error::Inapplicable("ω needs at least two columns in W".into()));
    }
    let r = ty.r() as u64;
    let e = (ty.degree(0) - ty.degree(1)) as u64;
    let closed_form = (2 * binom(e + r, r) - binom(e + r - 1, r)) as usize;
    let w = division_matrix::<crate::exact::Rational>(ty, ())?;
    let mut recount = usize::MAX;
    for j in 0..w.cols() {
        for l in j + 1..w.cols() {
            let c = (0..w.rows()).filter(|&k| !w.get(k, j).is_zero() || !w.get(k, l).is_zero()).count();
            recount = recount.min(c);
        }
    }
    Ok(Omega { closed_form, recount })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroBlockCheck {
    pub label: String,
    pub columns: usize,
    pub bound: usize,
    /// Largest zero block with this many columns over all row and column
    /// operations, by enumeration of column subspaces.
    pub exact_max: usize,
    /// Largest found by the randomized search.
    pub random_max: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroBlockReport {
    pub prime: u32,
    pub seed: u64,
    pub trials: usize,
    pub omega: Omega,
    pub checks: Vec<ZeroBlockCheck>,
    pub holds: bool,
}

/// `W` as `coeffs[k][j]`, the coefficient vector of entry `(k, j)`.
fn w_coeffs(ty: &MorphismType, field: PrimeField) -> Result<Vec<Vec<Vec<Fp>>>> {
    let w = division_matrix::<Fp>(ty, field)?;
    Ok((0..w.rows()).map(|k| (0..w.cols()).map(|j| w.get(k, j).coeffs().to_vec()).collect()).collect())
}

/// Rows `k` of `W·C` as concatenated coefficient vectors.
fn combined_rows(w: &[Vec<Vec<Fp>>], cols: &[Vec<Fp>], field: PrimeField) -> Vec<Vec<Fp>> {
    let a = w[0][0].len();
    w.iter()
        .map(|row| {
            let mut out = Vec::with_capacity(cols.len() * a);
            for u in cols {
                let mut acc = vec![field.zero(); a];
                for (j, uj) in u.iter().enumerate() {
                    if uj.is_zero() {
                        continue;
                    }
                    for (x, c) in acc.iter_mut().zip(&row[j]) {
                        *x = x.add(uj.mul(*c));
                    }
                }
                out.extend(acc);
            }
            out
        })
        .collect()
}

/// Exact largest zero block with `c` columns: `a31 - min rank(W C)` over
/// `c`-dimensional column subspaces `C`.
fn exact_zero_rows(w: &[Vec<Vec<Fp>>], c: usize, field: PrimeField, budget: Budget) -> Result<usize> {
    let a31 = w.len();
    let a32 = w[0].len();
    let width = c * w[0][0].len();
    let mut min_rank = usize::MAX;
    for sub in enumerate_subspaces(a32, c, field, budget)? {
        let rows = combined_rows(w, &sub.basis_vectors(), field);
        min_rank = min_rank.min(Matrix::from_rows(rows, width, field).rank());
    }
    Ok(a31 - min_rank)
}

fn random_invertible(n: usize, field: PrimeField, rng: &mut ChaCha8Rng) -> Matrix<Fp> {
    let p = field.modulus() as i64;
    loop {
        let m = Matrix::from_fn(n, n, field, |_, _| field.elem(rng.gen_range(0..p)));
        if m.rank() == n {
            return m;
        }
    }
}

/// Largest zero block with `c` columns in `P W Q` for random invertible `P`, `Q`.
fn random_zero_rows(
    w: &[Vec<Vec<Fp>>],
    field: PrimeField,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let (a31, a32, a) = (w.len(), w[0].len(), w[0][0].len());
    let subsets: Vec<u32> = (1u32..1 << a32).collect();
    let mut best = vec![0; a32 + 1];
    for _ in 0..trials {
        let p = random_invertible(a31, field, rng);
        let q = random_invertible(a32, field, rng);
        let cols: Vec<Vec<Fp>> = (0..a32).map(|j| q.column(j)).collect();
        let wq = combined_rows(w, &cols, field);
        // row k of P W Q, column j occupies wq[..][j*a .. (j+1)*a]
        let pwq: Vec<Vec<Fp>> = (0..a31)
            .map(|i| {
                let mut acc = vec![field.zero(); a32 * a];
                for (k, row) in wq.iter().enumerate() {
                    let f = *p.get(i, k);
                    if f.is_zero() {
                        continue;
                    }
                    for (x, c) in acc.iter_mut().zip(row) {
                        *x = x.add(f.mul(*c));
                    }
                }
                acc
            })
            .collect();
        let zero_mask: Vec<u32> = pwq
            .iter()
            .map(|row| (0..a32).filter(|&j| row[j * a..(j + 1) * a].iter().all(|x| x.is_zero())).fold(0, |m, j| m | 1 << j))
            .collect();
        for &s in &subsets {
            let z = zero_mask.iter().filter(|&&m| m & s == s).count();
            let c = s.count_ones() as usize;
            best[c] = best[c].max(z);
        }
    }
    best
}

/// Checks the zero-block bounds for `W`: a single column has at most
/// `a31 - a21` zero rows, two or more columns at most `a31 - ω`, and
/// `a32 - 1` columns at most `a21`.
pub fn verify_zero_block_remarks(
    ty: &MorphismType,
    field: PrimeField,
    trials: usize,
    seed: u64,
    budget: Budget,
) -> Result<ZeroBlockReport> {
    let om = omega(ty)?;
    let (a21, a31, a32) = (ty.a21(), ty.a31(), ty.a32());
    let w = w_coeffs(ty, field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = random_zero_rows(&w, field, trials, &mut rng);

    let mut specs = vec![("single column".to_string(), 1, a31 - a21)];
    for c in 2..=a32 {
        specs.push((format!("{c} columns"), c, a31 - om.closed_form));
    }
    specs.push((format!("{} columns against a21", a32 - 1), a32 - 1, a21));

    let mut checks = Vec::new();
    for (label, c, bound) in specs {
        let exact_max = exact_zero_rows(&w, c, field, budget)?;
        let random_max = random[c];
        checks.push(ZeroBlockCheck { label, columns: c, bound, exact_max, random_max, holds: exact_max.max(random_max) <= bound });
    }
    let holds = checks.iter().all(|c| c.holds) && om.closed_form == om.recount;
    Ok(ZeroBlockReport { prime: field.modulus(), seed, trials, omega: om, checks, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_values() {
        let t = MorphismType::three_one(2, 1, 3, 2, 1, 2).unwrap();
        assert_eq!(omega(&t).unwrap(), Omega { closed_form: 5, recount: 5 });
        let t = MorphismType::three_one(1, 1, 4, 2, 1, 2).unwrap();
        assert_eq!(omega(&t).unwrap(), Omega { closed_form: 4, recount: 4 });
    }

    #[test]
    fn omega_identity() {
        // ω - a21 = C(e+r-1, r-1)
        for r in 1..=3usize {
            for (d1, d2, d3) in [(3, 2, 1), (4, 2, 1), (4, 3, 1), (5, 3, 1)] {
                let t = MorphismType::three_one(r, 1, d1, d2, d3, 2).unwrap();
                let om = omega(&t).unwrap();
                assert_eq!(om.closed_form, om.recount, "r={r} d={d1},{d2},{d3}");
                let e = (d1 - d2) as u64;
                assert_eq!(om.closed_form - t.a21(), binom(e + r as u64 - 1, r as u64 - 1) as usize);
            }
        }
    }

    #[test]
    fn zero_blocks_small() {
        let f = PrimeField::new(2).unwrap();
        let t = MorphismType::three_one(2, 1, 3, 2, 1, 2).unwrap();
        let rep = verify_zero_block_remarks(&t, f, 500, 7, Budget::default()).unwrap();
        assert!(rep.holds, "{rep:?}");
        for c in &rep.checks {
            assert!(c.random_max <= c.exact_max);
        }
        // one column of W: a31 - a21 = 3 zero rows are reachable
        assert_eq!(rep.checks[0].exact_max, 3);
    }
}
