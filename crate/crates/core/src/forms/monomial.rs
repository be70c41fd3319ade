use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exact::binom;

/// Exponent vector of a monomial `X_0^{e_0} ... X_r^{e_r}`.
pub type Exponents = Vec<u32>;

/// Monomials of a fixed degree in `num_vars` variables, in descending
/// lexicographic order of exponent vectors (`X_0^d` first, `X_r^d` last).
#[derive(Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl MonomialBasis {
    fn build(num_vars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; num_vars];
        fill(&mut monomials, &mut cur, 0, degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { num_vars, degree, monomials, index }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Exponents {
        &self.monomials[i]
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn fill(out: &mut Vec<Exponents>, cur: &mut Exponents, pos: usize, left: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, left - e);
    }
    cur[pos] = 0;
}

type Cache = Mutex<HashMap<(usize, u32), Arc<MonomialBasis>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Basis of `S^d V*` for `V` of dimension `r + 1`.
pub fn monomial_basis(r: usize, d: u32) -> Arc<MonomialBasis> {
    basis_in_vars(r + 1, d)
}

/// Same as [`monomial_basis`], indexed by the number of variables.
pub fn basis_in_vars(num_vars: usize, d: u32) -> Arc<MonomialBasis> {
    assert!(num_vars >= 1, "need at least one variable");
    let mut c = cache().lock().expect("basis cache poisoned");
    c.entry((num_vars, d)).or_insert_with(|| Arc::new(MonomialBasis::build(num_vars, d))).clone()
}

/// `dim S^d` in `num_vars` variables.
pub fn sym_dim(num_vars: usize, d: u32) -> usize {
    binom(num_vars as u64 - 1 + d as u64, d as u64) as usize
}

/// `a / b` on exponent vectors, if `b` divides `a`.
pub fn divide(a: &[u32], b: &[u32]) -> Option<Exponents> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

pub fn mul_exponents(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Human-readable monomial, e.g. `X0^2*X2`.
pub fn format_monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("X{i}") } else { format!("X{i}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
