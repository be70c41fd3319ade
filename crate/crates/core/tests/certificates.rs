use gitquot::certificates::*;
use gitquot::exact::{binom, q, Budget, PrimeField, Rational};
use gitquot::morphism::*;

fn two(r: usize, d1: u32, m1: usize, d2: u32, m2: usize, n: usize) -> MorphismType {
    MorphismType::two_block(r, d1, m1, d2, m2, n).unwrap()
}

fn c(n: usize, k: usize) -> i64 {
    binom(n as u64, k as u64) as i64
}

/// Three points strictly inside each chamber, in increasing order.
fn samples(lo: &Rational, hi: &Rational) -> [Rational; 3] {
    let w = hi - lo;
    [lo + &w * q(1, 4), lo + &w * q(1, 2), lo + &w * q(3, 4)]
}

fn lambda_chambers(ty: &MorphismType) -> Vec<Chamber> {
    chambers(ty).unwrap()
}

fn nondegenerate(ty: &MorphismType) -> bool {
    !is_degenerate(ty).degenerate
}

#[test]
fn two_copies_monotone_in_lambda1() {
    for (r, d1, m, d2) in [(2, 4, 1, 3), (2, 3, 1, 2), (3, 3, 1, 2), (2, 4, 3, 2), (1, 5, 1, 2)] {
        for n in 3..=30 {
            let ty = two(r, d1, m, d2, 2, n);
            if !nondegenerate(&ty) {
                continue;
            }
            for ch in lambda_chambers(&ty) {
                let reps: Vec<CertificateReport> = samples(&ch.lo, &ch.hi)
                    .into_iter()
                    .map(|l| certify_42_43(&ty, &Polarization::from_lambda1(&ty, l).unwrap()).unwrap())
                    .collect();
                for w in reps.windows(2) {
                    if w[1].overall.is_positive() {
                        assert!(w[0].overall.is_positive(), "{:?} {:?}", ty, w[0].polarization);
                    }
                    for (a, b) in w[0].alternatives.iter().zip(&w[1].alternatives) {
                        assert!(!b.holds || a.holds);
                    }
                }
            }
        }
    }
}

#[test]
fn plane_linear_monotone_in_lambda1() {
    for d in 1..=4 {
        let a = c(d + 2, 2) as usize;
        for m in [1, a / 2, a - 1] {
            for n in 4..=20 {
                let ty = two(2, d as u32 + 1, m, 1, 3, n);
                if !nondegenerate(&ty) {
                    continue;
                }
                for ch in lambda_chambers(&ty) {
                    let reps: Vec<_> = samples(&ch.lo, &ch.hi)
                        .into_iter()
                        .map(|l| certify_61(&ty, &Polarization::from_lambda1(&ty, l).unwrap()).unwrap())
                        .collect();
                    for w in reps.windows(2) {
                        assert!(!w[1].overall.is_positive() || w[0].overall.is_positive());
                    }
                }
            }
        }
    }
}

#[test]
fn three_block_last_condition_monotone() {
    for (r, m, d1, d2, d3) in [(2, 1, 3, 2, 1), (2, 2, 4, 2, 1), (3, 1, 3, 2, 1)] {
        for n in 4..=20 {
            let ty = MorphismType::three_one(r, m, d1, d2, d3, n).unwrap();
            if !nondegenerate(&ty) {
                continue;
            }
            let l2 = q(1, 4);
            // vertical walls λ1 = κ/(p n) bound the λ1-chambers at fixed λ2
            let mut walls: Vec<Rational> = (1..=m)
                .flat_map(|p| (0..=n).map(move |k| q(k as i64, (p * n) as i64)))
                .filter(|v| *v <= (Rational::one() - &l2) / Rational::from(m))
                .collect();
            walls.sort();
            walls.dedup();
            for w in walls.windows(2) {
                let held: Vec<bool> = samples(&w[0], &w[1])
                    .into_iter()
                    .filter_map(|l1| Polarization::from_pair(&ty, l1, l2.clone()).ok())
                    .filter_map(|p| certify_87(&ty, &p).ok())
                    .filter(|rep| rep.overall != Overall::Inapplicable)
                    .map(|rep| rep.conditions.last().unwrap().holds)
                    .collect();
                for h in held.windows(2) {
                    assert!(!h[1] || h[0]);
                }
            }
        }
    }
}

/// The linear-plane conditions cross-multiplied over the integers, with
/// λ1 = u/v.
fn plane_linear_oracle(d: usize, m: usize, n: usize, u: i64, v: i64) -> bool {
    let (a, b) = (c(d + 2, 2), c(d + 1, 2));
    let (m, n) = (m as i64, n as i64);
    u > 0 && u * (3 * a + m) < v && u * (4 * m + 3 * b - 3 * a) * n <= (n - 3) * v && u * m * n <= (n - 6) * v
}

#[test]
fn plane_linear_matches_integer_oracle() {
    let mut seen = [0usize; 2];
    for d in 1..=4 {
        let a = c(d + 2, 2) as usize;
        for m in 1..a {
            for n in 4..=30 {
                let ty = two(2, d as u32 + 1, m, 1, 3, n);
                if !nondegenerate(&ty) {
                    continue;
                }
                let v = 1000 * (m as i64);
                for u in [1, 3, 7, 11, 17, 29, 41, 97, 143] {
                    let p = Polarization::from_lambda1(&ty, q(u, v)).unwrap();
                    let rep = certify_61(&ty, &p).unwrap();
                    let want = plane_linear_oracle(d, m, n, u, v);
                    let conds = rep.conditions.iter().all(|c| c.holds);
                    assert_eq!(conds, want, "d={d} m={m} n={n} λ1={u}/{v}");
                    assert_eq!(rep.overall == Overall::Certified, want && rep.nonsingular);
                    seen[want as usize] += 1;
                }
            }
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn gap_window_matches_integer_oracle() {
    for d in 1..=8 {
        let (b1, b2) = (c(d + 1, 2), c(d + 2, 2));
        let want: Vec<usize> = (1..200).filter(|&n| 13 * n as i64 > 19 * (b1 + b2) && 6 * (n as i64) < 19 * b2).collect();
        let w = window_75(d, 40);
        assert_eq!(w.admissible, want, "d = {d}");
        assert_eq!(w.lo, q(19 * (b1 + b2), 13));
        assert_eq!(w.hi, q(19 * b2, 6));
    }
    let w = window_75(4, 40);
    assert_eq!((w.lo.clone(), w.hi.clone()), (q(475, 13), q(95, 2)));
    assert_eq!(w.admissible, (37..=47).collect::<Vec<_>>());
    assert!(w.contains_n);
}

#[test]
fn gap_conditions_match_integer_oracle() {
    for d in 1..=4usize {
        let (b1, b2) = (c(d + 1, 2), c(d + 2, 2));
        for n in window_75(d, 1).admissible {
            let ty = two(2, d as u32 + 2, 1, d as u32, 3, n);
            if !nondegenerate(&ty) {
                continue;
            }
            let n = n as i64;
            for u in 300..340 {
                // λ2 = u / 1000
                let v = 1000;
                let Ok(p) = Polarization::from_lambda2(&ty, q(u, v)) else { continue };
                let rep = certify_75(&ty, &p).unwrap();
                let want = 19 * u > 6 * v
                    && 3 * u < v
                    && 2 * n * u <= v * n - v * b1
                    && n * u <= v * (n - b2 - b1)
                    && n * u <= v * b2;
                assert_eq!(rep.conditions.iter().all(|c| c.holds), want, "d={d} n={n} λ2={u}/{v}");
            }
        }
    }
}

#[test]
fn two_block_agrees_with_plane_gap() {
    let f = PrimeField::new(2).unwrap();
    let mut compared = 0;
    for d in 1..=4u32 {
        let table = plane_table(d, f, Budget::default()).unwrap();
        for n in window_75(d as usize, 1).admissible {
            let ty = two(2, d + 2, 1, d, 3, n);
            if !nondegenerate(&ty) {
                continue;
            }
            for ch in lambda_chambers(&ty) {
                let p = Polarization::from_lambda1(&ty, ch.midpoint.clone()).unwrap();
                let general = certify_33(&ty, &p, &table).unwrap();
                let special = certify_75(&ty, &p).unwrap();
                // the gap criterion adds the nonemptiness bound λ2 <= C(d+2,2)/n as its last line
                let core = special.conditions[..4].iter().all(|c| c.holds) && special.nonsingular;
                assert_eq!(general.overall.is_positive(), core, "d={d} n={n} λ1={}", ch.midpoint);
                compared += 1;
            }
        }
    }
    assert!(compared > 100, "{compared}");
}

#[test]
fn degree_one_table_is_exhaustive() {
    let t = plane_table(1, PrimeField::new(2).unwrap(), Budget::default()).unwrap();
    for label in ["k(1,11)", "k(2,5)", "k(2)", "k(3)", "k(1,7)", "k(2,1)"] {
        assert_eq!(t.get(label).unwrap().provenance, Provenance::Exhaustive, "{label}");
    }
    assert_eq!(t.get("k(2,5)").unwrap().value, 1);
    assert_eq!(t.get("k(1,11)").unwrap().value, 0);
    let ty = two(2, 3, 1, 1, 3, 10);
    let p = Polarization::from_lambda1(&ty, q(1, 25)).unwrap();
    let rep = certify(Claim::TwoBlock, &ty, &p, Some(&t)).unwrap();
    assert!(rep.constants.iter().all(|u| u.provenance == Provenance::Exhaustive));
    assert_ne!(rep.overall, Overall::ConditionallyCertified);
}

#[test]
fn higher_degree_tables_are_conditional() {
    let t = plane_table(3, PrimeField::new(2).unwrap(), Budget::default()).unwrap();
    assert_eq!(t.get("k(2,5)").unwrap().provenance, Provenance::Witness);
    for n in window_75(3, 1).admissible {
        let ty = two(2, 5, 1, 3, 3, n);
        if !nondegenerate(&ty) {
            continue;
        }
        for ch in lambda_chambers(&ty) {
            let p = Polarization::from_lambda1(&ty, ch.midpoint).unwrap();
            let rep = certify_33(&ty, &p, &t).unwrap();
            assert_ne!(rep.overall, Overall::Certified);
        }
    }
}

#[test]
fn reports_round_trip_and_explain_failures() {
    let ty = two(2, 6, 1, 4, 3, 40);
    let p = Polarization::from_lambda2(&ty, q(13, 40)).unwrap();
    let rep = certify_75(&ty, &p).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    let back: CertificateReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
    assert_eq!(rep.failures(), ["nonsingular polarization"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["claim"], "7.5");
    assert_eq!(v["polarization"]["lambdas"][1], "13/40");

    let between = Rational::midpoint(&q(26, 80), &q(27, 80));
    let rep = certify_75(&ty, &Polarization::from_lambda2(&ty, between).unwrap()).unwrap();
    assert_eq!(rep.overall, Overall::Certified);
    assert!(rep.failures().is_empty());
    for cond in &rep.conditions {
        assert_eq!(cond.holds, if cond.strict { cond.margin.is_positive() } else { !cond.margin.is_negative() });
    }
}

#[test]
fn degenerate_and_inapplicable() {
    let ty = two(2, 3, 3, 1, 3, 9);
    let p = Polarization::from_lambda1(&ty, q(1, 100)).unwrap();
    assert!(matches!(certify(Claim::PlaneLinear, &ty, &p, None), Err(gitquot::Error::Degenerate(_))));
    let ty = two(2, 3, 1, 2, 1, 3);
    let p = Polarization::from_lambda1(&ty, q(1, 6)).unwrap();
    assert!(matches!(certify(Claim::TwoBlock, &ty, &p, None), Err(gitquot::Error::MissingConstant(_))));
    assert!(certify(Claim::PlaneGap, &ty, &p, None).is_err());
    let ty = MorphismType::three_one(2, 3, 3, 2, 1, 7).unwrap();
    let p = Polarization::from_pair(&ty, q(1, 50), q(1, 5)).unwrap();
    assert_eq!(certify_87(&ty, &p).unwrap().overall, Overall::Inapplicable);
}
