use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use gitquot::certificates::{self, plane_table, computed_table, Claim, ConstantTable, Overall};
use gitquot::constants::verify_74_witness;
use gitquot::embedding::{self, check_reduced, tilde_decide, MAX_TILDE_P1};
use gitquot::exact::{Budget, PrimeField, Rational};
use gitquot::io::{embedded_to_json, morphism_to_json, AnyMorphism, MorphismJson};
use gitquot::king::{decide_semistable, semistable_by_block_forms, Status};
use gitquot::morphism::{
    chambers as chamber_list, construct_semistable, irregular_values, nonempty_conditions, Block, Construction,
    IrregularSet, MorphismType, Polarization, TildePolarization,
};

use crate::args::{CertifyArgs, CheckArgs, Cli, ConstantsArgs, ConstructArgs, PolarizationArgs, ShapeArgs};

pub struct Outcome {
    pub result: Value,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<gitquot::Error> for Failure {
    fn from(e: gitquot::Error) -> Self {
        Failure { message: e.to_string(), code: 2 }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { message: msg.into(), code: 2 }
}

type Run = (Value, Result<Outcome, Failure>);

fn field(cli: &Cli) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(cli.prime)?)
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    Ok(Budget::new(cli.budget)?)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| usage(format!("bad {what}: {e}")))
}

fn rational(s: &str) -> Result<Rational, Failure> {
    s.parse().map_err(|_| usage(format!("bad rational {s:?}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

impl ShapeArgs {
    fn need_n(&self) -> Result<usize, Failure> {
        self.n.ok_or_else(|| usage("--n is required"))
    }

    /// Type from `--type`, `--degrees/--mults`, or `--d1 --d2 [--d3]`.
    pub fn generic(&self) -> Result<MorphismType, Failure> {
        if let Some(path) = &self.type_file {
            return from_value(read_json(path)?, "type");
        }
        let r = self.r.unwrap_or(2);
        if let (Some(ds), Some(ms)) = (&self.degrees, &self.mults) {
            if ds.len() != ms.len() {
                return Err(usage("--degrees and --mults differ in length"));
            }
            let blocks = ds.iter().zip(ms).map(|(&degree, &mult)| Block { degree, mult }).collect();
            return Ok(MorphismType::new(r, blocks, self.need_n()?)?);
        }
        let m = self.m.unwrap_or(1);
        match (self.d1, self.d2, self.d3) {
            (Some(d1), Some(d2), Some(d3)) => Ok(MorphismType::three_one(r, m, d1, d2, d3, self.need_n()?)?),
            (Some(d1), Some(d2), None) => {
                Ok(MorphismType::two_block(r, d1, m, d2, self.m2.unwrap_or(1), self.need_n()?)?)
            }
            _ => Err(usage("give --type, --degrees with --mults, or --d1 --d2 [--d3]")),
        }
    }

    /// Type implied by a claim's shape when not given explicitly.
    fn for_claim(&self, claim: Claim) -> Result<MorphismType, Failure> {
        if self.type_file.is_some() || self.degrees.is_some() {
            return self.generic();
        }
        let need_d = || self.d.ok_or_else(|| usage("--d is required for this claim"));
        let ty = match claim {
            Claim::PlaneAdjacent => {
                let d = need_d()?;
                MorphismType::two_block(2, d + 1, 1, d, 3, self.need_n()?)?
            }
            Claim::PlaneLinear => {
                let d = need_d()?;
                let m = self.m.ok_or_else(|| usage("--m is required for claim 6.1"))?;
                MorphismType::two_block(2, d + 1, m, 1, 3, self.need_n()?)?
            }
            Claim::PlaneGap => {
                let d = need_d()?;
                MorphismType::two_block(2, d + 2, 1, d, 3, self.need_n()?)?
            }
            Claim::TwoBlock if self.d.is_some() && self.d1.is_none() => {
                let d = need_d()?;
                MorphismType::two_block(2, d + 2, 1, d, 3, self.need_n()?)?
            }
            Claim::TwoCopies | Claim::TwoCopiesSingle => {
                let (d1, d2) = self.d1.zip(self.d2).ok_or_else(|| usage("--d1 and --d2 are required"))?;
                MorphismType::two_block(self.r.unwrap_or(2), d1, self.m.unwrap_or(1), d2, 2, self.need_n()?)?
            }
            _ => return self.generic(),
        };
        Ok(ty)
    }
}

impl PolarizationArgs {
    fn given(&self) -> bool {
        self.lambda1.is_some() || self.lambda2.is_some() || self.lambdas.is_some()
    }

    pub fn build(&self, ty: &MorphismType) -> Result<Polarization, Failure> {
        if let Some(ls) = &self.lambdas {
            let ls = ls.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Polarization::new(ty, ls)?);
        }
        let l1 = self.lambda1.as_deref().map(rational).transpose()?;
        let l2 = self.lambda2.as_deref().map(rational).transpose()?;
        if ty.is_three_one() {
            let (a, b) = l1.zip(l2).ok_or_else(|| usage("three-block types need --lambda1 and --lambda2"))?;
            return Ok(Polarization::from_pair(ty, a, b)?);
        }
        match (l1, l2) {
            (Some(a), None) => Ok(Polarization::from_lambda1(ty, a)?),
            (None, Some(b)) => Ok(Polarization::from_lambda2(ty, b)?),
            _ => Err(usage("give exactly one of --lambda1, --lambda2, or --lambdas")),
        }
    }
}

/// Reads a morphism file, accepting the envelope written by `construct`.
fn load_morphism(path: &Path) -> Result<AnyMorphism, Failure> {
    let mut v = read_json(path)?;
    if let Some(m) = v.get_mut("result").and_then(|r| r.get_mut("morphism")) {
        v = m.take();
    }
    let j: MorphismJson = from_value(v, "morphism")?;
    Ok(AnyMorphism::from_json(&j)?)
}

pub fn chambers(_cli: &Cli, a: &ShapeArgs) -> Run {
    let ty = match a.generic() {
        Ok(t) => t,
        Err(e) => return (Value::Null, Err(e)),
    };
    let input = json!({ "type": ty });
    (input, run_chambers(&ty))
}

fn run_chambers(ty: &MorphismType) -> Result<Outcome, Failure> {
    match irregular_values(ty).map_err(|e| Failure { message: e.to_string(), code: 2 })? {
        IrregularSet::Values(vals) => {
            let list = chamber_list(ty)?;
            let items: Vec<Value> = list
                .iter()
                .map(|c| {
                    let nonempty = Polarization::from_lambda1(ty, c.midpoint.clone())
                        .ok()
                        .and_then(|p| nonempty_conditions(ty, &p).ok());
                    json!({ "lo": c.lo, "hi": c.hi, "midpoint": c.midpoint, "nonempty": nonempty })
                })
                .collect();
            Ok(Outcome { result: json!({ "candidates": vals, "chambers": items }), code: 0 })
        }
        IrregularSet::Lines(lines) => Ok(Outcome { result: json!({ "lines": lines }), code: 0 }),
    }
}

fn check_input(a: &CheckArgs) -> Result<(AnyMorphism, Polarization, Value), Failure> {
    let phi = load_morphism(&a.morphism)?;
    let p = a.polarization.build(phi.ty())?;
    let input = json!({ "morphism": a.morphism.display().to_string(), "type": phi.ty(), "polarization": p });
    Ok((phi, p, input))
}

pub fn check(cli: &Cli, a: &CheckArgs) -> Run {
    let (phi, p, input) = match check_input(a) {
        Ok(x) => x,
        Err(e) => return (Value::Null, Err(e)),
    };
    (input, run_check(cli, &phi, &p))
}

fn run_check(cli: &Cli, phi: &AnyMorphism, p: &Polarization) -> Result<Outcome, Failure> {
    let phi = phi.over(field(cli)?)?;
    let b = budget(cli)?;
    let verdict = decide_semistable(&phi, p, b)?;
    let (bf_semistable, first) = semistable_by_block_forms(&phi, p, b)?;
    let agree = verdict.status.is_semistable() == bf_semistable;
    let result = json!({
        "verdict": verdict,
        "block_forms": { "semistable": bf_semistable, "first_reachable": first },
        "agree": agree,
    });
    let code = if !agree {
        3
    } else if verdict.status.is_semistable() {
        0
    } else {
        1
    };
    Ok(Outcome { result, code })
}

pub fn embed(cli: &Cli, a: &CheckArgs) -> Run {
    let (phi, p, input) = match check_input(a) {
        Ok(x) => x,
        Err(e) => return (Value::Null, Err(e)),
    };
    (input, run_embed(cli, &phi, &p))
}

fn run_embed(cli: &Cli, phi: &AnyMorphism, p: &Polarization) -> Result<Outcome, Failure> {
    let phi = phi.over(field(cli)?)?;
    let b = budget(cli)?;
    let ty = phi.ty().clone();
    let e = embedding::embed(&phi)?;
    let tp = TildePolarization::from_polarization(&ty, p)?;
    tp.gates()?;
    let reduced = check_reduced(&e, &tp, b)?;
    let full = if ty.p1() <= MAX_TILDE_P1 { Some(tilde_decide(&e, &tp, b)?) } else { None };
    let stable = match &full {
        Some(v) => v.status == Status::Stable,
        None => reduced.conclusive && reduced.status == Status::Stable,
    };
    let semistable = match &full {
        Some(v) => v.status.is_semistable(),
        None => stable,
    };
    let implication = stable.then_some(
        "the embedded point is stable, hence φ is stable and lies in the open set admitting a geometric quotient",
    );
    let result = json!({
        "embedded": embedded_to_json(&e),
        "tilde_polarization": tp,
        "reduced": reduced,
        "full": full,
        "implication": implication,
    });
    Ok(Outcome { result, code: if semistable { 0 } else { 1 } })
}

pub fn constants(cli: &Cli, a: &ConstantsArgs) -> Run {
    let input = json!({ "shape": a.shape, "d": a.ty.d });
    (input, run_constants(cli, a))
}

fn run_constants(cli: &Cli, a: &ConstantsArgs) -> Result<Outcome, Failure> {
    let f = field(cli)?;
    let b = budget(cli)?;
    match a.shape.as_deref() {
        Some("s7") => {
            let d = a.ty.d.ok_or_else(|| usage("--d is required with --shape s7"))?;
            if d == 0 {
                return Err(usage("--d must be positive"));
            }
            let table = plane_table(d, f, b)?;
            let witness = verify_74_witness(d);
            Ok(Outcome { result: json!({ "d": d, "table": table, "witness": witness }), code: 0 })
        }
        Some(other) => Err(usage(format!("unknown shape {other:?}"))),
        None => {
            let ty = a.ty.generic()?;
            let table = computed_table(&ty, f, b)?;
            Ok(Outcome { result: json!({ "type": ty, "table": table }), code: 0 })
        }
    }
}

#[derive(Deserialize)]
struct CertifyFile {
    #[serde(rename = "type")]
    ty: MorphismType,
    polarization: Polarization,
    claim: Claim,
    #[serde(default)]
    constants: Option<ConstantTable>,
}

pub fn certify(cli: &Cli, a: &CertifyArgs) -> Run {
    let prepared = (|| -> Result<_, Failure> {
        if let Some(path) = &a.input {
            let f: CertifyFile = from_value(read_json(path)?, "certify input")?;
            return Ok((f.claim, f.ty, f.polarization, f.constants));
        }
        let claim: Claim = a.claim.as_deref().ok_or_else(|| usage("--claim is required"))?.parse()?;
        let ty = a.ty.for_claim(claim)?;
        if !a.polarization.given() {
            return Err(usage("a polarization is required"));
        }
        let p = a.polarization.build(&ty)?;
        let table = match &a.constants {
            Some(path) => Some(from_value(read_json(path)?, "constant table")?),
            None => None,
        };
        Ok((claim, ty, p, table))
    })();
    let (claim, ty, p, table) = match prepared {
        Ok(x) => x,
        Err(e) => return (Value::Null, Err(e)),
    };
    let input = json!({ "claim": claim, "type": ty, "polarization": p, "constants": table });
    (input, run_certify(cli, claim, &ty, &p, table))
}

fn run_certify(
    cli: &Cli,
    claim: Claim,
    ty: &MorphismType,
    p: &Polarization,
    table: Option<ConstantTable>,
) -> Result<Outcome, Failure> {
    let table = match (claim, table) {
        (Claim::TwoBlock, None) => Some(default_table(cli, ty)?),
        (_, t) => t,
    };
    let rep = certificates::certify(claim, ty, p, table.as_ref())?;
    let code = match rep.overall {
        Overall::Certified | Overall::ConditionallyCertified => 0,
        Overall::NotCertified => 1,
        Overall::Inapplicable => 2,
    };
    Ok(Outcome { result: to_value(&rep), code })
}

/// Plane shapes use the plane table; anything else is searched.
fn default_table(cli: &Cli, ty: &MorphismType) -> Result<ConstantTable, Failure> {
    let f = field(cli)?;
    let b = budget(cli)?;
    let plane = ty.r() == 2 && ty.is_two_block() && ty.mult(0) == 1 && ty.mult(1) == 3 && ty.degree(0) == ty.degree(1) + 2;
    if plane {
        Ok(plane_table(ty.degree(1), f, b)?)
    } else {
        Ok(computed_table(ty, f, b)?)
    }
}

pub fn construct(_cli: &Cli, a: &ConstructArgs) -> Run {
    let input = json!({ "r": a.r, "d1": a.d1, "d2": a.d2, "n": a.n, "kappa": a.kappa });
    let run = (|| -> Result<Outcome, Failure> {
        let ty = MorphismType::two_block(a.r, a.d1, 1, a.d2, 1, a.n)?;
        let variant = match a.kappa {
            Some(kappa) => Construction::ProperlySemistable { kappa },
            None => Construction::Generic,
        };
        let phi = construct_semistable(&ty, variant)?;
        Ok(Outcome { result: json!({ "morphism": morphism_to_json(&phi) }), code: 0 })
    })();
    (input, run)
}
