use num_traits::ToPrimitive;

use super::table::ConstantTable;
use super::{reject_degenerate, Alternative, CertificateReport, Claim, NWindow, UsedConstant};
use crate::exact::{binom, q, Rational};
use crate::forms::sym_dim;
use crate::inequality::{Checklist, Inequality, Relation};
use crate::morphism::{nonempty_conditions, plane_d2_shape, threshold_l, MorphismType, Polarization, TildePolarization};
use crate::{Error, Result};

use Relation::{Ge, Gt, Le, Lt};

fn r(x: usize) -> Rational {
    Rational::from(x)
}

fn c(n: usize, k: usize) -> usize {
    binom(n as u64, k as u64) as usize
}

/// Dispatches on the claim; the two-block criterion needs a constant table.
pub fn certify(
    claim: Claim,
    ty: &MorphismType,
    p: &Polarization,
    table: Option<&ConstantTable>,
) -> Result<CertificateReport> {
    match claim {
        Claim::TwoBlock => certify_33(ty, p, table.ok_or_else(|| Error::MissingConstant("constant table".into()))?),
        Claim::TwoCopies => certify_42_43(ty, p),
        Claim::TwoCopiesSingle => {
            if ty.is_two_block() && (ty.mult(0) != 1 || ty.r() < 2) {
                return Err(Error::UnsupportedShape("claim 4.3 needs m = 1 and r >= 2".into()));
            }
            certify_42_43(ty, p)
        }
        Claim::PlaneAdjacent => certify_51(ty, p),
        Claim::PlaneLinear => certify_61(ty, p),
        Claim::PlaneGap => certify_75(ty, p),
        Claim::ThreeBlock => certify_87(ty, p),
    }
}

/// General two-block criterion. Needs `m1 < a`; the constants are looked up
/// in `table` and their provenance is carried into the report.
pub fn certify_33(ty: &MorphismType, p: &Polarization, table: &ConstantTable) -> Result<CertificateReport> {
    ty.require_two_block()?;
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let mut rep = CertificateReport::new(Claim::TwoBlock, ty, p);
    let (m1, m2, n) = (ty.mult(0), ty.mult(1), ty.n());
    let a = ty.a21();
    if m1 >= a {
        return Ok(rep.inapplicable(format!("m1 = {m1} is not below a = {a}")));
    }
    let (l1, l2) = (&p.lambdas[0], &p.lambdas[1]);
    let nn = r(n);
    let used = |label: String, rep: &mut CertificateReport| -> Result<Rational> {
        let e = table.get(&label)?;
        if !rep.constants.iter().any(|u| u.label == label) {
            rep.constants.push(UsedConstant { label, value: e.value, provenance: e.provenance });
        }
        Ok(r(e.value))
    };
    rep.conditions.push(Inequality::new("λ2 > a λ1", format!("a = {a}"), l2.clone(), Gt, r(a) * l1));
    let base = &nn * r(m1) * l1;
    for i in 1..m2 {
        let label = format!("k({i},{})", m2 * a - i * a - m1);
        let k = used(label.clone(), &mut rep)?;
        rep.conditions.push(Inequality::new(
            format!("{i} n λ2 >= n m1 λ1 + {label}"),
            format!("{label} = {k}"),
            r(i) * &nn * l2,
            Ge,
            &base + &k,
        ));
    }
    for i in 2..=m2 {
        let label = format!("k({i})");
        let k = used(label.clone(), &mut rep)?;
        rep.conditions.push(Inequality::new(
            format!("{i} n λ2 >= n m1 λ1 + {label}"),
            format!("{label} = {k}"),
            r(i) * &nn * l2,
            Ge,
            &base + &k,
        ));
    }
    for i in 1..m2 {
        let label = format!("k({i},{})", m2 * a - i * a - a + 1);
        let k = used(label.clone(), &mut rep)?;
        rep.conditions.push(Inequality::new(
            format!("n λ1 + {i} n λ2 >= {label}"),
            format!("{label} = {k}"),
            &nn * l1 + r(i) * &nn * l2,
            Ge,
            k,
        ));
    }
    Ok(rep.finish())
}

/// `m O(-d1) ⊕ 2 O(-d2) -> n O`; reported under 4.3 when `m = 1, r >= 2`.
pub fn certify_42_43(ty: &MorphismType, p: &Polarization) -> Result<CertificateReport> {
    ty.require_two_block()?;
    if ty.mult(1) != 2 {
        return Err(Error::UnsupportedShape("expected m O(-d1) + 2 O(-d2)".into()));
    }
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let (m, n, rr) = (ty.mult(0), ty.n(), ty.r());
    let (d1, d2) = (ty.degree(0) as usize, ty.degree(1) as usize);
    let claim = if m == 1 && rr >= 2 { Claim::TwoCopiesSingle } else { Claim::TwoCopies };
    let mut rep = CertificateReport::new(claim, ty, p);
    let a = ty.a21();
    let e = d1 - d2;
    let s = sym_dim(rr + 1, d2 as u32 - 1);
    let (l1, l2) = (&p.lambdas[0], &p.lambdas[1]);
    let nn = r(n);
    rep.conditions.push(Inequality::new("λ1 > 0", "", l1.clone(), Gt, Rational::zero()));
    rep.conditions.push(Inequality::new(
        "λ1 < 1/(2a+m)",
        format!("a = {a}"),
        l1.clone(),
        Lt,
        q(1, (2 * a + m) as i64),
    ));
    rep.alternatives.push(Alternative::new(
        "(i)",
        vec![
            Inequality::new("m < C(r-1+d1-d2, r-1)", "", r(m), Lt, r(c(rr - 1 + e, rr - 1))),
            Inequality::new(
                "λ1 <= (n - dim S^{d2-1})/((a+m-1) n)",
                format!("dim S^(d2-1) = {s}"),
                l1.clone(),
                Le,
                (&nn - r(s)) / (r(a + m - 1) * &nn),
            ),
        ],
    ));
    rep.alternatives.push(Alternative::new(
        "(ii)",
        vec![
            Inequality::new("m < C(r+d1-d2, r)", "", r(m), Lt, r(c(rr + e, rr))),
            Inequality::new(
                "λ1 <= (n - 2 dim S^{d2-1})/(3 m n)",
                format!("dim S^(d2-1) = {s}"),
                l1.clone(),
                Le,
                (&nn - r(2 * s)) / (r(3 * m) * &nn),
            ),
        ],
    ));
    rep.comparison = Some(Inequality::new(
        "λ2 >= C(r+d2, r)/n",
        "sufficient bound from the general theory",
        l2.clone(),
        Ge,
        r(c(rr + d2, rr)) / &nn,
    ));
    if m == 1 {
        rep.nonemptiness = nonempty_conditions(ty, p).ok();
    }
    Ok(rep.finish())
}

/// `O(-d-1) ⊕ 3 O(-d) -> n O` on the plane.
pub fn certify_51(ty: &MorphismType, p: &Polarization) -> Result<CertificateReport> {
    let shape = ty.r() == 2
        && ty.is_two_block()
        && ty.mult(0) == 1
        && ty.mult(1) == 3
        && ty.degree(0) == ty.degree(1) + 1;
    if !shape {
        return Err(Error::UnsupportedShape("expected O(-d-1) + 3 O(-d) on P^2".into()));
    }
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let mut rep = CertificateReport::new(Claim::PlaneAdjacent, ty, p);
    let d = ty.degree(1) as usize;
    let nn = r(ty.n());
    let l1 = &p.lambdas[0];
    let cond = &mut rep.conditions;
    cond.push(Inequality::new("λ1 > 0", "", l1.clone(), Gt, Rational::zero()));
    cond.push(Inequality::new("λ1 < 1/10", "", l1.clone(), Lt, q(1, 10)));
    cond.push(Inequality::new(
        "λ1 <= 2/5 - 3(d^2+d)/(10n)",
        "",
        l1.clone(),
        Le,
        q(2, 5) - r(3 * (d * d + d)) / (r(10) * &nn),
    ));
    cond.push(Inequality::new(
        "λ1 <= 1 - 3(d^2+3d)/(4n)",
        "",
        l1.clone(),
        Le,
        Rational::one() - r(3 * (d * d + 3 * d)) / (r(4) * &nn),
    ));
    cond.push(Inequality::new(
        "λ1 >= -1/2 + 3(d^2+d)/(4n)",
        "",
        l1.clone(),
        Ge,
        q(-1, 2) + r(3 * (d * d + d)) / (r(4) * &nn),
    ));
    cond.push(Inequality::new(
        "λ1 >= -2 + 3(d^2+2d)/n",
        "",
        l1.clone(),
        Ge,
        r(3 * (d * d + 2 * d)) / &nn - r(2),
    ));
    Ok(rep.finish())
}

fn plane_linear_shape(ty: &MorphismType) -> Result<usize> {
    let ok = ty.r() == 2 && ty.is_two_block() && ty.mult(1) == 3 && ty.degree(1) == 1;
    if !ok {
        return Err(Error::UnsupportedShape("expected m O(-d-1) + 3 O(-1) on P^2".into()));
    }
    Ok(ty.degree(0) as usize - 1)
}

/// `m O(-d-1) ⊕ 3 O(-1) -> n O` on the plane. Also reports the necessary
/// nonemptiness checks `n < l_{m,q} + 3(3-q)`.
pub fn certify_61(ty: &MorphismType, p: &Polarization) -> Result<CertificateReport> {
    let d = plane_linear_shape(ty)?;
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let mut rep = CertificateReport::new(Claim::PlaneLinear, ty, p);
    let (m, n) = (ty.mult(0), ty.n());
    let a = c(d + 2, 2);
    let b = c(d + 1, 2);
    if m >= a {
        return Ok(rep.inapplicable(format!("m = {m} is not below a = {a}")));
    }
    let nn = r(n);
    let l1 = &p.lambdas[0];
    let coef = Rational::from((4 * m + 3 * b) as i64 - 3 * a as i64);
    rep.conditions.push(Inequality::new("λ1 > 0", "", l1.clone(), Gt, Rational::zero()));
    rep.conditions.push(Inequality::new(
        "λ1 < 1/(3a+m)",
        format!("a = {a}"),
        l1.clone(),
        Lt,
        q(1, (3 * a + m) as i64),
    ));
    rep.conditions.push(Inequality::new(
        "λ1 (4m-3a+3b) <= (n-3)/n",
        format!("a = {a}, b = {b}"),
        l1 * &coef,
        Le,
        (&nn - r(3)) / &nn,
    ));
    rep.conditions.push(Inequality::new("λ1 <= (n-6)/(m n)", "", l1.clone(), Le, (&nn - r(6)) / (r(m) * &nn)));
    let items = (0..3)
        .map(|k| {
            let l = threshold_l(p, &[m, k]);
            Inequality::new(
                format!("n < l_(m,{k}) + {}", 3 * (3 - k)),
                format!("l_(m,{k}) = {l}"),
                nn.clone(),
                Lt,
                r(l + 3 * (3 - k)),
            )
        })
        .collect();
    rep.nonemptiness = Some(Checklist::new(items));
    Ok(rep.finish())
}

/// The hypotheses of the linear-plane criterion rewritten for the lowest
/// chamber `1/(2mn) < λ1 < 1/((2m-1)n)`.
pub fn lowest_chamber_61(d: usize, m: usize, n: usize) -> Checklist {
    let a = c(d + 2, 2);
    let b = c(d + 1, 2);
    let nn = r(n);
    Checklist::new(vec![
        Inequality::new("3a/2m + 1/2 < n", "", r(3 * a) / r(2 * m) + q(1, 2), Lt, nn.clone()),
        Inequality::new("5 <= n + 3(a-b)/2m", "", r(5), Le, &nn + r(3 * (a - b)) / r(2 * m)),
        Inequality::new("7 <= n", "", r(7), Le, nn),
    ])
}

/// Target ranks `n <= n_max` for which the lowest-chamber hypotheses and the
/// nonemptiness checks all hold. Divisibility by 3 is not filtered here.
pub fn nonempty_window_61(d: usize, m: usize, n_max: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let ty = MorphismType::two_block(2, d as u32 + 1, m, 1, 3, n)?;
        let lo = q(1, (2 * m * n) as i64);
        let hi = q(1, ((2 * m - 1) * n) as i64);
        let p = Polarization::from_lambda1(&ty, Rational::midpoint(&lo, &hi))?;
        let checks_ok = (0..3).all(|k| n < threshold_l(&p, &[m, k]) + 3 * (3 - k));
        if checks_ok && lowest_chamber_61(d, m, n).holds {
            out.push(n);
        }
    }
    Ok(out)
}

/// `(19/13)(C(d+1,2) + C(d+2,2)) < n < (19/6) C(d+2,2)`.
pub fn window_75(d: usize, n: usize) -> NWindow {
    let b1 = c(d + 1, 2);
    let b2 = c(d + 2, 2);
    let lo = q(19, 13) * r(b1 + b2);
    let hi = q(19, 6) * r(b2);
    let first = (lo.floor() + num_bigint::BigInt::from(1)).to_usize().unwrap_or(0);
    let admissible: Vec<usize> = (first..).take_while(|&k| r(k) < hi).collect();
    let contains_n = lo < r(n) && r(n) < hi;
    NWindow { lo, hi, admissible, contains_n }
}

/// `O(-d-2) ⊕ 3 O(-d) -> n O` on the plane.
pub fn certify_75(ty: &MorphismType, p: &Polarization) -> Result<CertificateReport> {
    let d = plane_d2_shape(ty).ok_or_else(|| Error::UnsupportedShape("expected O(-d-2) + 3 O(-d) on P^2".into()))?
        as usize;
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let mut rep = CertificateReport::new(Claim::PlaneGap, ty, p);
    let nn = r(ty.n());
    let b1 = r(c(d + 1, 2));
    let b2 = r(c(d + 2, 2));
    let l2 = &p.lambdas[1];
    let cond = &mut rep.conditions;
    cond.push(Inequality::new("λ2 > 6/19", "", l2.clone(), Gt, q(6, 19)));
    cond.push(Inequality::new("λ2 < 1/3", "", l2.clone(), Lt, q(1, 3)));
    cond.push(Inequality::new(
        "λ2 <= 1/2 - C(d+1,2)/(2n)",
        "",
        l2.clone(),
        Le,
        q(1, 2) - &b1 / (r(2) * &nn),
    ));
    cond.push(Inequality::new(
        "λ2 <= 1 - C(d+2,2)/n - C(d+1,2)/n",
        "",
        l2.clone(),
        Le,
        Rational::one() - &b2 / &nn - &b1 / &nn,
    ));
    cond.push(Inequality::new("λ2 <= C(d+2,2)/n", "nonemptiness", l2.clone(), Le, &b2 / &nn));
    rep.n_window = Some(window_75(d, ty.n()));
    rep.nonemptiness = nonempty_conditions(ty, p).ok();
    Ok(rep.finish())
}

/// `m O(-d1) ⊕ O(-d2) ⊕ O(-d3) -> n O`. Needs `m < ω - a21 = C(d1-d2+r-1, r-1)`.
pub fn certify_87(ty: &MorphismType, p: &Polarization) -> Result<CertificateReport> {
    ty.require_three_one()?;
    reject_degenerate(ty)?;
    p.validate(ty)?;
    let mut rep = CertificateReport::new(Claim::ThreeBlock, ty, p);
    let (m, n, rr) = (ty.mult(0), ty.n(), ty.r());
    let e = (ty.degree(0) - ty.degree(1)) as usize;
    let d3 = ty.degree(2) as usize;
    let gap = c(e + rr - 1, rr - 1);
    if m >= gap {
        return Ok(rep.inapplicable(format!("m = {m} is not below ω - a21 = {gap}")));
    }
    let (a21, a31, a32) = (r(ty.a21()), r(ty.a31()), r(ty.a32()));
    let nn = r(n);
    let (l1, l2) = (&p.lambdas[0], &p.lambdas[1]);
    let mm = r(m);
    let cond = &mut rep.conditions;
    cond.push(Inequality::new("a21 λ1 < λ2", "", &a21 * l1, Lt, l2.clone()));
    cond.push(Inequality::new(
        "λ2 < (1 - m λ1 - a31 λ1 + a32 a21 λ1)/(1 + a32)",
        "",
        l2.clone(),
        Lt,
        (Rational::one() - &mm * l1 - &a31 * l1 + &a32 * &a21 * l1) / (Rational::one() + &a32),
    ));
    cond.push(Inequality::new("λ2 < 1 - m λ1", "", l2.clone(), Lt, Rational::one() - &mm * l1));
    cond.push(Inequality::new(
        "λ1 <= 1/(m+a21) - C(d3+r, r)/((m+a21) n)",
        "",
        l1.clone(),
        Le,
        (Rational::one() - r(c(d3 + rr, rr)) / &nn) / (&mm + &a21),
    ));
    let tp = TildePolarization::from_polarization(ty, p)?;
    rep.gates.push(Inequality::new("α3 > 0", "", tp.alphas[2].clone(), Gt, Rational::zero()));
    rep.gates.push(Inequality::new("λ1 p1 < 1", format!("p1 = {}", ty.p1()), l1 * r(ty.p1()), Lt, Rational::one()));
    rep.comparison = Some(Inequality::new(
        "λ2 >= a21 C(r+d3, r)/(n a31)",
        "sufficient bound from the general theory",
        l2.clone(),
        Ge,
        &a21 * r(c(rr + d3, rr)) / (&nn * &a31),
    ));
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::Overall;

    fn two(r: usize, d1: u32, m1: usize, d2: u32, m2: usize, n: usize) -> MorphismType {
        MorphismType::two_block(r, d1, m1, d2, m2, n).unwrap()
    }

    #[test]
    fn two_copies_instance_is_certified() {
        // n = 2 C(r+d2-1, r) + 1 and d1 <= 2 d2 - 2
        let ty = two(2, 4, 1, 3, 2, 13);
        assert_eq!(13, 2 * c(2 + 3 - 1, 2) + 1);
        let l1 = Rational::midpoint(&q(1, 13), &q(2, 13));
        assert_eq!(l1, q(3, 26));
        let rep = certify_42_43(&ty, &Polarization::from_lambda1(&ty, l1).unwrap()).unwrap();
        assert_eq!(rep.claim, Claim::TwoCopiesSingle);
        assert!(rep.nonsingular);
        assert_eq!(rep.overall, Overall::Certified, "{}", rep.verdict);
        // the first two nonemptiness bounds hold; n <= C(r+d1-1, r-1) = 5 does not at r = 2
        let ne: Vec<bool> = rep.nonemptiness.as_ref().unwrap().items.iter().map(|i| i.holds).collect();
        assert_eq!(ne, [true, true, false]);
    }

    #[test]
    fn two_copies_strict_upper_bound() {
        let ty = two(2, 4, 1, 3, 2, 13);
        let rep = certify_42_43(&ty, &Polarization::from_lambda1(&ty, q(1, 7)).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::NotCertified);
        assert_eq!(rep.failures()[0], "λ1 < 1/(2a+m)");
    }

    #[test]
    fn two_copies_even_even_is_degenerate() {
        let ty = two(2, 4, 2, 3, 2, 4);
        let p = Polarization::from_lambda1(&ty, q(1, 20)).unwrap();
        assert!(matches!(certify_42_43(&ty, &p), Err(Error::Degenerate(_))));
        assert!(matches!(certify_33(&ty, &p, &ConstantTable::new()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn plane_adjacent_margins() {
        let ty = two(2, 7, 1, 6, 3, 54);
        let rep = certify_51(&ty, &Polarization::from_lambda1(&ty, q(1, 20)).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::NotCertified);
        let failed: Vec<_> = rep.conditions.iter().filter(|c| !c.holds).map(|c| c.margin.clone()).collect();
        // -1/2 + 126/216 = 1/12 and -2 + 144/54 = 2/3
        assert_eq!(failed, vec![q(1, 20) - q(1, 12), q(1, 20) - q(2, 3)]);

        let ty = two(2, 7, 1, 6, 3, 231);
        let rep = certify_51(&ty, &Polarization::from_lambda1(&ty, q(1, 20)).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::Certified, "{}", rep.verdict);
        let rep = certify_51(&ty, &Polarization::from_lambda1(&ty, q(1, 10)).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::NotCertified);
        assert!(rep.failures().contains(&"λ1 < 1/10".to_string()));
    }

    #[test]
    fn plane_adjacent_small_degree() {
        let ty = two(2, 2, 1, 1, 3, 2);
        let rep = certify_51(&ty, &Polarization::from_lambda1(&ty, q(1, 20)).unwrap()).unwrap();
        let failed: Vec<_> = rep.conditions.iter().filter(|c| !c.holds).map(|c| c.label.as_str()).collect();
        assert_eq!(failed, ["λ1 <= 1 - 3(d^2+3d)/(4n)", "λ1 >= -1/2 + 3(d^2+d)/(4n)", "λ1 >= -2 + 3(d^2+2d)/n"]);
    }

    #[test]
    fn plane_linear_window() {
        for d in 1..=6 {
            let a = c(d + 2, 2);
            assert_eq!(nonempty_window_61(d, a / 2, 60).unwrap(), vec![7, 8, 9], "d = {d}");
        }
    }

    #[test]
    fn plane_linear_lowest_chamber() {
        let ty = two(2, 3, 3, 1, 3, 7);
        let l1 = Rational::midpoint(&q(1, 42), &q(1, 35));
        let rep = certify_61(&ty, &Polarization::from_lambda1(&ty, l1).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::Certified, "{}", rep.verdict);
        assert!(rep.nonemptiness.unwrap().holds);

        let ty = two(2, 2, 3, 1, 3, 7);
        let rep = certify_61(&ty, &Polarization::from_lambda1(&ty, q(1, 100)).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::Inapplicable);

        let ty = two(2, 3, 3, 1, 3, 9);
        let p = Polarization::from_lambda1(&ty, q(1, 100)).unwrap();
        assert!(matches!(certify_61(&ty, &p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn plane_gap_window_at_d4() {
        let w = window_75(4, 40);
        assert_eq!(w.lo, q(475, 13));
        assert_eq!(w.hi, q(95, 2));
        assert_eq!(w.admissible, (37..=47).collect::<Vec<_>>());
        assert!(w.contains_n);
        // oracle: some λ2 above 6/19 meets every upper bound
        for n in 1..80usize {
            let nn = r(n);
            let ub = [q(1, 3), q(1, 2) - r(10) / (r(2) * &nn), Rational::one() - r(25) / &nn, r(15) / &nn];
            let top = ub.iter().min().unwrap();
            assert_eq!(top > &q(6, 19), w.admissible.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn plane_gap_example() {
        let ty = two(2, 6, 1, 4, 3, 40);
        let rep = certify_75(&ty, &Polarization::from_lambda2(&ty, q(13, 40)).unwrap()).unwrap();
        assert!(rep.conditions.iter().all(|c| c.holds));
        // λ1 = 1/40 lies on the candidate grid k/(2n)
        assert!(!rep.nonsingular);
        assert_eq!(rep.overall, Overall::NotCertified);

        let rep = certify_75(&ty, &Polarization::from_lambda2(&ty, q(6, 19)).unwrap()).unwrap();
        assert!(!rep.conditions[0].holds);
        assert_eq!(rep.overall, Overall::NotCertified);

        let l2 = Rational::midpoint(&q(26, 80), &q(27, 80));
        let rep = certify_75(&ty, &Polarization::from_lambda2(&ty, l2).unwrap()).unwrap();
        assert_eq!(rep.overall, Overall::Certified, "{}", rep.verdict);
    }

    #[test]
    fn three_block_gate_and_strictness() {
        let ty = MorphismType::three_one(2, 1, 3, 2, 1, 7).unwrap();
        let om = crate::embedding::omega(&ty).unwrap();
        assert_eq!((om.closed_form, om.recount, ty.a21()), (5, 5, 3));
        let p = Polarization::from_pair(&ty, q(1, 19), q(2, 9)).unwrap();
        let rep = certify_87(&ty, &p).unwrap();
        assert_eq!(rep.overall, Overall::Certified, "{}", rep.verdict);
        assert!(rep.gates.iter().all(|g| g.holds));

        let p = Polarization::from_pair(&ty, q(1, 19), q(3, 19)).unwrap();
        let rep = certify_87(&ty, &p).unwrap();
        assert!(!rep.conditions[0].holds);
        assert_eq!(rep.overall, Overall::NotCertified);

        let ty = MorphismType::three_one(2, 2, 3, 2, 1, 7).unwrap();
        let p = Polarization::from_pair(&ty, q(1, 19), q(2, 9)).unwrap();
        assert_eq!(certify_87(&ty, &p).unwrap().overall, Overall::Inapplicable);
    }

    #[test]
    fn two_block_needs_constants() {
        let ty = two(2, 4, 1, 2, 3, 20);
        let p = Polarization::from_lambda2(&ty, q(13, 40)).unwrap();
        assert!(matches!(certify_33(&ty, &p, &ConstantTable::new()), Err(Error::MissingConstant(_))));
        assert!(matches!(certify(Claim::TwoBlock, &ty, &p, None), Err(Error::MissingConstant(_))));
        let ty = two(1, 2, 3, 1, 2, 5);
        let p = Polarization::from_lambda1(&ty, q(1, 7)).unwrap();
        assert_eq!(certify_33(&ty, &p, &ConstantTable::new()).unwrap().overall, Overall::Inapplicable);
    }
}
