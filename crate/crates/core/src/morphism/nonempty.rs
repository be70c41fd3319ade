use super::chambers::threshold_l;
use super::types::{MorphismType, Polarization};
use crate::exact::{binom, Rational};
use crate::forms::sym_dim;
use crate::inequality::{Checklist, Inequality, Relation};
use crate::{Error, Result};

fn r(x: usize) -> Rational {
    Rational::from(x)
}

/// Is the type `O(-d-2) ⊕ 3 O(-d) -> n O` on `P^2`? Returns `d`.
pub(crate) fn plane_d2_shape(ty: &MorphismType) -> Option<u32> {
    (ty.r() == 2 && ty.is_two_block() && ty.mult(0) == 1 && ty.mult(1) == 3 && ty.degree(0) == ty.degree(1) + 2)
        .then(|| ty.degree(1))
}

/// Sufficient (and for the last shape, necessary) conditions for a nonempty
/// semistable locus, evaluated at the polarization `p`.
///
/// Supported shapes: `m1 = m2 = 1`; `m1 = 1, m2 = 2`; `O(-d-2) ⊕ 3 O(-d)` on `P^2`.
pub fn nonempty_conditions(ty: &MorphismType, p: &Polarization) -> Result<Checklist> {
    p.validate(ty)?;
    if !ty.is_two_block() {
        return Err(Error::UnsupportedShape("nonemptiness tests exist only for two source blocks".into()));
    }
    let (rr, n) = (ty.r() as u64, ty.n());
    let (d1, d2) = (ty.degree(0) as u64, ty.degree(1) as u64);
    let items = match (ty.mult(0), ty.mult(1)) {
        (1, 1) => vec![
            Inequality::new(
                "n <= C(r+d2-1, r)",
                "target rank bounded by dim S^{d2-1} V*",
                r(n),
                Relation::Le,
                r(binom(rr + d2 - 1, rr) as usize),
            ),
            Inequality::new(
                "n <= C(r-1+d1, r-1)",
                "target rank bounded by dim S^{d1} U",
                r(n),
                Relation::Le,
                r(binom(rr - 1 + d1, rr - 1) as usize),
            ),
        ],
        (1, 2) => {
            let dm = sym_dim(ty.num_vars(), ty.degree(1) - 1);
            let l1 = threshold_l(p, &[1, 0]);
            let l3 = threshold_l(p, &[1, 1]);
            vec![
                Inequality::new(
                    "n <= dim S^{d2-1} + l3 - 1",
                    format!("l3 = {l3}"),
                    r(n),
                    Relation::Le,
                    r(dm + l3 - 1),
                ),
                Inequality::new(
                    "n <= 2 dim S^{d2-1} + l1 - 1",
                    format!("l1 = {l1}"),
                    r(n),
                    Relation::Le,
                    r(2 * dm + l1 - 1),
                ),
                Inequality::new(
                    "n <= dim S^{d1} U",
                    "U a complement of a linear form in V*",
                    r(n),
                    Relation::Le,
                    r(binom(rr - 1 + d1, rr - 1) as usize),
                ),
            ]
        }
        _ => match plane_d2_shape(ty) {
            Some(d) => {
                let d = d as u64;
                let b2 = r(binom(d + 2, 2) as usize);
                let b4 = r(binom(d + 4, 2) as usize);
                let nn = r(n);
                let nl1 = &nn * &p.lambdas[0];
                let nl2 = &nn * &p.lambdas[1];
                let two = r(2);
                let three = r(3);
                vec![
                    Inequality::new("n <= n l1 + 3 B2", "B2 = C(d+2,2)", nn.clone(), Relation::Le, &nl1 + &three * &b2),
                    Inequality::new(
                        "n <= n l1 + n l2 + 2 B2",
                        "B2 = C(d+2,2)",
                        nn.clone(),
                        Relation::Le,
                        &nl1 + &nl2 + &two * &b2,
                    ),
                    Inequality::new(
                        "n <= n l1 + 2 n l2 + B2",
                        "B2 = C(d+2,2)",
                        nn.clone(),
                        Relation::Le,
                        &nl1 + &two * &nl2 + &b2,
                    ),
                    Inequality::new(
                        "n <= n l2 + B4 + 2 B2",
                        "B4 = C(d+4,2)",
                        nn.clone(),
                        Relation::Le,
                        &nl2 + &b4 + &two * &b2,
                    ),
                    Inequality::new(
                        "n <= 2 n l2 + B4 + B2",
                        "B4 = C(d+4,2)",
                        nn.clone(),
                        Relation::Le,
                        &two * &nl2 + &b4 + &b2,
                    ),
                    Inequality::new("n <= 3 n l2 + B4", "B4 = C(d+4,2)", nn, Relation::Le, &three * &nl2 + &b4),
                ]
            }
            None => {
                return Err(Error::UnsupportedShape(format!(
                    "no nonemptiness test for multiplicities ({}, {})",
                    ty.mult(0),
                    ty.mult(1)
                )))
            }
        },
    };
    Ok(Checklist::new(items))
}
