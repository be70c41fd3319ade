use gitquot::exact::{binom, q, Matrix, PrimeField, Rational};
use gitquot::forms::*;
use proptest::prelude::*;

fn eval(f: &HomForm<Rational>, x: &[i64]) -> Rational {
    f.terms()
        .into_iter()
        .map(|(e, c)| {
            let m: i64 = e.iter().zip(x).map(|(&k, &v)| v.pow(k)).product();
            c * Rational::from(m)
        })
        .sum()
}

fn form(nv: usize, d: u32, coeffs: &[i64]) -> HomForm<Rational> {
    let len = sym_dim(nv, d);
    HomForm::from_coeffs(nv, d, (), (0..len).map(|i| Rational::from(coeffs[i % coeffs.len()])).collect())
}

#[test]
fn basis_sizes_and_order() {
    for nv in 1..5 {
        for d in 0..6 {
            let b = basis_in_vars(nv, d);
            assert_eq!(b.len() as u64, binom(nv as u64 - 1 + d as u64, d as u64));
            for w in b.monomials().windows(2) {
                assert!(w[0] > w[1], "lex order");
            }
            for (i, e) in b.monomials().iter().enumerate() {
                assert_eq!(e.iter().sum::<u32>(), d);
                assert_eq!(b.index_of(e), Some(i));
            }
        }
    }
    assert_eq!(monomial_basis(2, 2).len(), 6);
    assert_eq!(format_monomial(&[2, 0, 1]), "X0^2*X2");
}

proptest! {
    #[test]
    fn product_is_pointwise(c1 in prop::collection::vec(-4i64..5, 1..8), c2 in prop::collection::vec(-4i64..5, 1..8),
                            d1 in 0u32..3, d2 in 0u32..3, x in prop::collection::vec(-3i64..4, 3)) {
        let f = form(3, d1, &c1);
        let g = form(3, d2, &c2);
        let h = multiply(&f, &g);
        prop_assert_eq!(h.degree(), d1 + d2);
        prop_assert_eq!(eval(&h, &x), eval(&f, &x) * eval(&g, &x));
        prop_assert_eq!(multiply(&g, &f), h.clone());
        let s = f.add(&form(3, d1, &c2));
        prop_assert_eq!(eval(&s, &x), eval(&f, &x) + eval(&form(3, d1, &c2), &x));
    }

    #[test]
    fn expansion_is_multiplication(c in prop::collection::vec(-2i64..3, 4..12), v in prop::collection::vec(-3i64..4, 6)) {
        // 2x2 matrix of linear forms in 3 variables applied to a pair of linear forms
        let psi = FormMatrix::from_rows(
            vec![vec![form(3, 1, &c[0..]), form(3, 1, &c[1..])], vec![form(3, 1, &c[2..]), form(3, 1, &c[3..])]],
            3, 1, (),
        );
        let vec: Vec<Rational> = v.iter().map(|&x| Rational::from(x)).collect();
        let out = psi.expansion(1).mul_vec(&vec);
        let g = vector_to_forms(&vec, 2, 3, 1, ());
        let rows = vector_to_forms(&out, 2, 3, 2, ());
        for i in 0..2 {
            let direct = multiply(psi.get(i, 0), &g[0]).add(&multiply(psi.get(i, 1), &g[1]));
            prop_assert_eq!(&rows[i], &direct);
        }
        prop_assert_eq!(forms_to_vector(&g), vec);
    }
}

#[test]
fn koszul_kernel_dimensions() {
    let row: Vec<HomForm<Rational>> = (0..3).map(|i| HomForm::var(3, i, ())).collect();
    let psi = FormMatrix::from_rows(vec![row], 3, 1, ());
    for d in 0..5u32 {
        let k = form_matrix_kernel(&psi, d);
        // the map (S^d)^3 -> S^{d+1} is onto
        let want = 3 * sym_dim(3, d) - sym_dim(3, d + 1);
        assert_eq!(k.dim(), want, "d = {d}");
        for v in k.basis_vectors() {
            let g = vector_to_forms(&v, 3, 3, d, ());
            let total = (0..3).fold(HomForm::zero(3, d + 1, ()), |acc, j| acc.add(&multiply(psi.get(0, j), &g[j])));
            assert!(total.is_zero());
        }
    }
}

#[test]
fn kernel_invariant_under_row_operations() {
    let x = |i| HomForm::<Rational>::var(3, i, ());
    let psi = FormMatrix::from_rows(vec![vec![x(0), x(1), x(2)], vec![x(1), x(2), x(0)]], 3, 1, ());
    let a = Matrix::from_rows(vec![vec![q(2, 1), q(1, 1)], vec![q(-1, 3), q(1, 1)]], 2, ());
    let moved = psi.left_scalar(&a);
    for d in 0..4 {
        assert_eq!(form_matrix_kernel(&psi, d), form_matrix_kernel(&moved, d));
    }
}

#[test]
fn reduction_and_prime_kernels() {
    let f = PrimeField::new(2).unwrap();
    let x = |i| HomForm::<Rational>::var(3, i, ());
    // X + Y and X - Y agree mod 2, so the 2x2 system drops rank there
    let psi = FormMatrix::from_rows(vec![vec![x(0).add(&x(1)), x(2)], vec![x(0).sub(&x(1)), x(2)]], 3, 1, ());
    let over_q = form_matrix_kernel(&psi, 1).dim();
    let over_f2 = form_matrix_kernel(&psi.reduce(f).unwrap(), 1).dim();
    assert_eq!(over_q, 0);
    // the rows coincide and the kernel is spanned by (Z, X + Y)
    assert_eq!(over_f2, 1);
    let half = HomForm::monomial(&[1, 0, 0], q(1, 2), ());
    assert!(half.reduce(f).is_err());
}

#[test]
fn pairing_orthogonal_is_orthogonal() {
    let f = PrimeField::new(3).unwrap();
    let nv = 2;
    // (X, -Y) inside M (x) S^1 with M of dimension 2
    let b = |c: Vec<i64>| c.into_iter().map(|v| f.elem(v)).collect::<Vec<_>>();
    let space = gitquot::exact::Subspace::span(vec![b(vec![1, 0, 0, -1])], 4, f);
    let orth = pairing_orthogonal(&space, 2, nv, 1, 1);
    for v in space.basis_vectors() {
        let fv = vector_to_forms(&v, 2, nv, 1, f);
        for w in orth.basis_vectors() {
            let gw = vector_to_forms(&w, 2, nv, 1, f);
            let s = multiply(&fv[0], &gw[0]).add(&multiply(&fv[1], &gw[1]));
            assert!(s.is_zero());
        }
    }
    // X g0 = Y g1 forces (g0, g1) = c (Y, X)
    assert_eq!(orth.dim(), 1);
    assert!(orth.contains_vector(&b(vec![0, 1, 1, 0])));
}
