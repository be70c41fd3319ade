//! The canonical linear matrices `η_1 … η_4` on the plane and kernel
//! dimension measurements for them and for `l × 3` matrices of forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{binom, Matrix, Rational};
use crate::forms::{basis_in_vars, form_matrix_kernel, forms_to_vector, FormMatrix, HomForm};

fn lin(c: [i64; 3]) -> HomForm<Rational> {
    let terms: Vec<(Vec<u32>, Rational)> = (0..3)
        .filter(|&i| c[i] != 0)
        .map(|i| {
            let mut e = vec![0; 3];
            e[i] = 1;
            (e, Rational::from(c[i]))
        })
        .collect();
    HomForm::from_terms(3, 1, (), &terms).expect("linear form")
}

fn linear_matrix(rows: Vec<Vec<[i64; 3]>>) -> FormMatrix<Rational> {
    FormMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(lin).collect()).collect(), 3, 1, ())
}

const X: [i64; 3] = [1, 0, 0];
const Y: [i64; 3] = [0, 1, 0];
const Z: [i64; 3] = [0, 0, 1];
const O: [i64; 3] = [0, 0, 0];

pub fn eta1() -> FormMatrix<Rational> {
    linear_matrix(vec![vec![X, Y, O], vec![Z, O, Y], vec![O, [0, 0, -1], X]])
}

/// `a[0..10]` are the constants `a_1 … a_10`.
pub fn eta2(a: [i64; 10]) -> FormMatrix<Rational> {
    linear_matrix(vec![
        vec![X, Y, Z],
        vec![Y, [a[0], a[1], 0], [a[2], a[3], a[4]]],
        vec![Z, [a[5], a[6], a[7]], [a[8], 0, a[9]]],
    ])
}

/// Constants `(b1, b2, b3, c2, c3)`.
pub fn eta3(b1: i64, b2: i64, b3: i64, c2: i64, c3: i64) -> FormMatrix<Rational> {
    linear_matrix(vec![vec![X, Y, Z], vec![Y, [b1, b2, b3], [0, c2, c3]]])
}

/// Constants `(b2, b3, c1, c2, c3)`.
pub fn eta4(b2: i64, b3: i64, c1: i64, c2: i64, c3: i64) -> FormMatrix<Rational> {
    linear_matrix(vec![vec![X, Y, Z], vec![Y, [0, b2, b3], [c1, c2, c3]]])
}

/// `{ ρ ∈ (S^d)^3 : ρ η = 0 }` for square `η`; `{ ρ : η ρ = 0 }` otherwise.
pub fn eta_kernel_dim(eta: &FormMatrix<Rational>, d: u32) -> usize {
    if eta.rows() == eta.cols() {
        form_matrix_kernel(&eta.transpose(), d).dim()
    } else {
        form_matrix_kernel(eta, d).dim()
    }
}

/// `ker ψ`: linear columns `η ∈ (V*)^3` with `ψ η = 0`.
pub fn psi_kernel_dim(psi: &FormMatrix<Rational>) -> usize {
    form_matrix_kernel(psi, 1).dim()
}

/// Dimension of the span of the columns of `ψ` as vectors in `(S^d)^l`.
pub fn column_span_dim(psi: &FormMatrix<Rational>) -> usize {
    let width = psi.rows() * basis_in_vars(psi.num_vars(), psi.degree()).len();
    let cols: Vec<Vec<Rational>> = (0..psi.cols()).map(|j| forms_to_vector(&psi.column(j))).collect();
    Matrix::from_rows(cols, width, ()).rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelMeasurement {
    pub family: String,
    pub d: u32,
    pub params: String,
    pub kernel_dim: usize,
    pub bound: Option<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub d: u32,
    pub trials: usize,
    pub seed: u64,
    pub measurements: Vec<KernelMeasurement>,
    pub holds: bool,
}

fn nonzero(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

fn any(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-3..=3)
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> HomForm<Rational> {
    let b = basis_in_vars(3, d);
    let coeffs = (0..b.len()).map(|_| Rational::from(if rng.gen_bool(0.4) { any(rng) } else { 0 })).collect();
    HomForm::from_coeffs(3, d, (), coeffs)
}

fn random_linear(rng: &mut ChaCha8Rng) -> HomForm<Rational> {
    loop {
        let f = lin([any(rng), any(rng), any(rng)]);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_gl3(rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(3, 3, (), |_, _| Rational::from(any(rng)));
        if m.rank() == 3 {
            return m;
        }
    }
}

/// `l × 3` matrix `[0, u f_i, v f_i]` with independent linear `u`, `v`.
fn shape_53(rng: &mut ChaCha8Rng, l: usize, d: u32) -> FormMatrix<Rational> {
    let (u, v) = loop {
        let u = random_linear(rng);
        let v = random_linear(rng);
        let m = Matrix::from_rows(vec![u.coeffs().to_vec(), v.coeffs().to_vec()], 3, ());
        if m.rank() == 2 {
            break (u, v);
        }
    };
    let rows = (0..l)
        .map(|_| {
            let f = loop {
                let f = random_form(rng, d - 1);
                if !f.is_zero() {
                    break f;
                }
            };
            vec![HomForm::zero(3, d, ()), u.multiply(&f), v.multiply(&f)]
        })
        .collect();
    FormMatrix::from_rows(rows, 3, d, ())
}

/// Kernel-dimension checks on the plane at degree `d`:
///
/// * `η_2` and `η_3`, `η_4`: kernel at degree `d` at most `(d²+3d)/2`;
/// * `η_3`, `η_4` at degree 2: at most 4;
/// * `η_1`: kernel at degree `d` at most `dim S^{d-1}`;
/// * `l × 3` matrices over `S^d` whose columns span at least a plane have
///   `ker ψ ≤ 4`; the shape `[0, u f_i, v f_i]` is recorded.
pub fn kernel_bound_suite(d: u32, trials: usize, seed: u64) -> KernelReport {
    assert!(d >= 1, "degree must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut push = |family: &str, d: u32, params: String, kernel_dim: usize, bound: Option<usize>| {
        let holds = bound.is_none_or(|b| kernel_dim <= b);
        out.push(KernelMeasurement { family: family.into(), d, params, kernel_dim, bound, holds });
    };
    let quad = ((d * d + 3 * d) / 2) as usize;
    let sdm1 = binom(d as u64 + 1, 2) as usize;

    push("eta1", d, String::new(), eta_kernel_dim(&eta1(), d), Some(sdm1));

    let mut patterns = vec![[2, 1, 1, 1, 1, 1, 1, 1, 1, 1]];
    for _ in 0..trials {
        let mut a = [0i64; 10];
        for x in a.iter_mut() {
            *x = nonzero(&mut rng);
        }
        patterns.push(a);
    }
    for a in patterns {
        push("eta2", d, format!("a={a:?}"), eta_kernel_dim(&eta2(a), d), Some(quad));
    }

    let mut p3 = vec![(1, 1, 1, 1, 1)];
    let mut p4 = vec![(0, 1, 1, 0, 0)];
    for _ in 0..trials {
        p3.push((nonzero(&mut rng), any(&mut rng), any(&mut rng), nonzero(&mut rng), nonzero(&mut rng)));
        p4.push((any(&mut rng), nonzero(&mut rng), nonzero(&mut rng), any(&mut rng), any(&mut rng)));
    }
    for &(b1, b2, b3, c2, c3) in &p3 {
        let e = eta3(b1, b2, b3, c2, c3);
        let params = format!("b=({b1},{b2},{b3}) c=({c2},{c3})");
        push("eta3", d, params.clone(), eta_kernel_dim(&e, d), Some(quad));
        push("eta3", 2, params, eta_kernel_dim(&e, 2), Some(4));
    }
    for &(b2, b3, c1, c2, c3) in &p4 {
        let e = eta4(b2, b3, c1, c2, c3);
        let params = format!("b=({b2},{b3}) c=({c1},{c2},{c3})");
        push("eta4", d, params.clone(), eta_kernel_dim(&e, d), Some(quad));
        push("eta4", 2, params, eta_kernel_dim(&e, 2), Some(4));
    }

    for t in 0..trials {
        let l = rng.gen_range(1..=4);
        let base = shape_53(&mut rng, l, d);
        let psi = match t % 3 {
            0 => base.right_scalar(&random_gl3(&mut rng)),
            1 => {
                let mut p = base.clone();
                for i in 0..l {
                    p.set(i, 0, random_form(&mut rng, d));
                }
                p.right_scalar(&random_gl3(&mut rng))
            }
            _ => {
                let rows = (0..l).map(|_| (0..3).map(|_| random_form(&mut rng, d)).collect()).collect();
                FormMatrix::from_rows(rows, 3, d, ())
            }
        };
        let span = column_span_dim(&psi);
        let k = psi_kernel_dim(&psi);
        push("psi", d, format!("l={l} column span {span}"), k, (span >= 2).then_some(4));
        if t % 3 == 0 {
            push("shape53", d, format!("l={l}"), psi_kernel_dim(&base), None);
        }
    }

    let holds = out.iter().all(|m| m.holds);
    KernelReport { d, trials, seed, measurements: out, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta1_kernel_is_one_syzygy() {
        for d in 1..=3 {
            assert_eq!(eta_kernel_dim(&eta1(), d), binom(d as u64 + 1, 2) as usize);
        }
    }

    #[test]
    fn eta2_default_pattern() {
        let e = eta2([2, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(eta_kernel_dim(&e, 2) <= 5);
    }

    #[test]
    fn eta4_sparse_pattern() {
        assert!(eta_kernel_dim(&eta4(0, 1, 1, 0, 0), 2) <= 4);
    }

    #[test]
    fn shape_53_has_kernel_four() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=3 {
            let psi = shape_53(&mut rng, 3, d);
            assert_eq!(psi_kernel_dim(&psi), 4);
        }
    }

    #[test]
    fn two_zero_columns_give_large_kernel() {
        let w = HomForm::var(3, 0, ());
        let z = HomForm::zero(3, 1, ());
        let psi = FormMatrix::from_rows(vec![vec![z.clone(), z, w]], 3, 1, ());
        assert_eq!(column_span_dim(&psi), 1);
        assert_eq!(psi_kernel_dim(&psi), 6);
    }

    #[test]
    fn suite_holds() {
        let r = kernel_bound_suite(2, 8, 1);
        let bad: Vec<_> = r.measurements.iter().filter(|m| !m.holds).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
