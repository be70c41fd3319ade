use gitquot::exact::{q, Rational};
use gitquot::morphism::*;
use proptest::prelude::*;

fn two(r: usize, d1: u32, m1: usize, d2: u32, m2: usize, n: usize) -> MorphismType {
    MorphismType::two_block(r, d1, m1, d2, m2, n).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Irregular by definition: some nontrivial `(a1, a2)` makes `n (a1 λ1 + a2 λ2)` an integer.
fn irregular_oracle(m1: usize, m2: usize, n: usize, l1: &Rational) -> bool {
    let l2 = (Rational::one() - l1 * Rational::from(m1)) / Rational::from(m2);
    (0..=m1).any(|a1| {
        (0..=m2).any(|a2| {
            let trivial = (a1, a2) == (0, 0) || (a1, a2) == (m1, m2);
            !trivial && ((l1 * Rational::from(a1) + &l2 * Rational::from(a2)) * Rational::from(n)).is_integer()
        })
    })
}

#[test]
fn irregular_values_match_definition() {
    for (m1, m2) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 3), (3, 2), (2, 5)] {
        for n in 2..=9 {
            if gcd(gcd(m1, m2), n) > 1 {
                continue;
            }
            let ty = two(2, 5, m1, 2, m2, n);
            let exact = irregular_values_exact(&ty).unwrap();
            let hi = q(1, m1 as i64);
            assert_eq!(exact.first(), Some(&Rational::zero()));
            assert_eq!(exact.last(), Some(&hi));
            // every irregular value has denominator dividing n m1 m2 (m1 + m2)
            let den = (n * m1 * m2 * (m1 + m2)) as i64;
            for k in 1..den {
                let l1 = q(k, den);
                if l1 >= hi {
                    break;
                }
                assert_eq!(exact.contains(&l1), irregular_oracle(m1, m2, n, &l1), "{m1} {m2} {n} {l1}");
            }
            let IrregularSet::Values(cands) = irregular_values(&ty).unwrap() else { panic!() };
            assert!(exact.iter().all(|x| cands.contains(x)), "closed form misses a value");
            let chambers = chambers(&ty).unwrap();
            assert_eq!(chambers.len(), cands.len() - 1);
            for c in &chambers {
                assert!(c.contains(&c.midpoint));
                assert!(!irregular_oracle(m1, m2, n, &c.midpoint));
            }
        }
    }
}

#[test]
fn small_chamber_counts() {
    let IrregularSet::Values(v) = irregular_values(&two(2, 3, 1, 2, 1, 3)).unwrap() else { panic!() };
    assert_eq!(v, [q(0, 1), q(1, 3), q(2, 3), q(1, 1)]);
    // κ/6 for 0 <= κ <= 6 gives six open intervals
    assert_eq!(chambers(&two(2, 2, 1, 1, 3, 3)).unwrap().len(), 6);
    assert!(matches!(irregular_values(&two(2, 4, 2, 3, 2, 4)), Err(gitquot::Error::AllIrregular(_))));
}

#[test]
fn degeneracy_is_gcd() {
    for m1 in 1..4 {
        for m2 in 1..4 {
            for n in 1..9 {
                let ty = two(1, 3, m1, 1, m2, n);
                let g = gcd(gcd(m1, m2), n);
                assert_eq!(is_degenerate(&ty).degenerate, g > 1);
                if g > 1 {
                    // balanced dimension vector (m1/g, m2/g, n/g) at any weight
                    for k in 1..7 {
                        let l1 = q(k, 7 * m1 as i64);
                        let p = Polarization::from_lambda1(&ty, l1.clone()).unwrap();
                        assert!(is_irregular(&ty, &p));
                        assert!(irregular_oracle(m1, m2, n, &l1));
                    }
                }
            }
        }
    }
}

#[test]
fn thresholds_closed_forms() {
    for n in 2..=30 {
        let ty = two(2, 3, 1, 2, 2, n);
        if is_degenerate(&ty).degenerate {
            continue;
        }
        for kappa in 0..n {
            let l1 = Rational::midpoint(&q(kappa as i64, n as i64), &q(kappa as i64 + 1, n as i64));
            let p = Polarization::from_lambda1(&ty, l1).unwrap();
            assert_eq!(threshold_l(&p, &[1, 0]), kappa + 1);
            assert_eq!(threshold_l(&p, &[0, 1]), (n - kappa + 1) / 2);
            assert_eq!(threshold_l(&p, &[1, 1]), (n + kappa) / 2 + 1);
            assert_eq!(threshold_l(&p, &[0, 2]), n - kappa);
        }
    }
}

proptest! {
    #[test]
    fn polarizations_normalize(m1 in 1usize..4, m2 in 1usize..4, n in 1usize..12, k in 1i64..50) {
        let ty = two(2, 4, m1, 2, m2, n);
        let l1 = q(k, 50 * m1 as i64);
        let p = Polarization::from_lambda1(&ty, l1.clone()).unwrap();
        let total = &p.lambdas[0] * Rational::from(m1) + &p.lambdas[1] * Rational::from(m2);
        prop_assert_eq!(total, Rational::one());
        prop_assert_eq!(&p.mu, &q(1, n as i64));
        prop_assert_eq!(Polarization::from_lambda2(&ty, p.lambdas[1].clone()).unwrap(), p.clone());
        let w = p.integer_weights();
        // proportional to (λ1, λ2, μ)
        let ratio = Rational::from_int(w[2].clone()) / &p.mu;
        prop_assert_eq!(Rational::from_int(w[0].clone()), &p.lambdas[0] * &ratio);
        prop_assert_eq!(Rational::from_int(w[1].clone()), &p.lambdas[1] * &ratio);
    }

    #[test]
    fn tilde_weights_three_one(m in 1usize..3, e1 in 1u32..3, e2 in 1u32..3, n in 2usize..8, a in 1i64..20, b in 1i64..20) {
        let ty = MorphismType::three_one(2, m, 1 + e1 + e2, 1 + e2, 1, n).unwrap();
        let l1 = q(a, 100 * m as i64);
        let l2 = q(b, 100);
        let p = Polarization::from_pair(&ty, l1.clone(), l2.clone()).unwrap();
        let l3 = &p.lambdas[2];
        prop_assert_eq!(&(&l1 * Rational::from(m) + &l2 + l3), &Rational::one());
        let t = TildePolarization::from_polarization(&ty, &p).unwrap();
        let (a21, a31, a32) = (Rational::from(ty.a21()), Rational::from(ty.a31()), Rational::from(ty.a32()));
        prop_assert_eq!(&t.alphas[0], &l1);
        prop_assert_eq!(&t.alphas[1], &(&l2 - &a21 * &l1));
        prop_assert_eq!(&t.alphas[2], &(l3 - &a31 * &l1 - &a32 * &l2 + &a32 * &a21 * &l1));
        prop_assert_eq!(&t.beta1, &p.mu);
    }
}

#[test]
fn derived_dimensions() {
    let ty = MorphismType::three_one(2, 1, 3, 2, 1, 7).unwrap();
    assert_eq!((ty.a21(), ty.a31(), ty.a32()), (3, 6, 3));
    assert_eq!(ty.p1(), 1 + 3 + 6);
    assert_eq!(ty.p2(), 4);
    let ty = two(2, 2, 1, 1, 3, 4);
    assert_eq!(ty.p1(), 10);
    assert!(MorphismType::two_block(2, 2, 1, 2, 1, 3).is_err());
    assert!(MorphismType::two_block(2, 2, 0, 1, 1, 3).is_err());
}

#[test]
fn polarization_rejects_bad_weights() {
    let ty = two(2, 3, 1, 2, 1, 3);
    assert!(Polarization::from_lambda1(&ty, q(0, 1)).is_err());
    assert!(Polarization::from_lambda1(&ty, q(1, 1)).is_err());
    assert!(Polarization::new(&ty, vec![q(1, 2), q(1, 3)]).is_err());
    let p = Polarization::from_lambda1(&ty, q(1, 3)).unwrap();
    assert!(validate_nonsingular(&ty, &p).is_err());
    let p = Polarization::from_lambda1(&ty, q(1, 4)).unwrap();
    assert!(validate_nonsingular(&ty, &p).is_ok());
}

#[test]
fn single_copy_nonemptiness() {
    // n <= C(r+d2-1, r) and n <= C(r-1+d1, r-1)
    for n in 1..=7 {
        let ty = two(2, 3, 1, 2, 1, n);
        if is_degenerate(&ty).degenerate {
            continue;
        }
        let p = Polarization::from_lambda1(&ty, q(1, 2 * n as i64)).unwrap();
        let c = nonempty_conditions(&ty, &p).unwrap();
        assert_eq!(c.holds, n <= 3, "n = {n}");
        let built = construct_semistable(&ty, Construction::Generic);
        assert_eq!(built.is_ok(), n <= 3);
    }
}
