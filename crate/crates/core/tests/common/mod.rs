//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the elimination or enumeration code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn all_vectors(m: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out.into_iter().flat_map(|v| (0..p).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

fn scale(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    a.iter().map(|x| x * c % p).collect()
}

/// All elements of the span, by closing under addition and scaling.
pub fn span_set(gens: &[Vec<u32>], m: usize, p: u32) -> BTreeSet<Vec<u32>> {
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; m]]);
    for g in gens {
        let mut next = set.clone();
        for v in &set {
            for c in 1..p {
                next.insert(add(v, &scale(g, c, p), p));
            }
        }
        set = next;
    }
    set
}

/// Dimension from the number of elements.
pub fn log_p(size: usize, p: u32) -> usize {
    let (mut k, mut s) = (0, 1usize);
    while s < size {
        s *= p as usize;
        k += 1;
    }
    assert_eq!(s, size, "not a power of p");
    k
}

/// Every subspace of `F_p^m` as its full element set.
pub fn all_subspaces(m: usize, p: u32) -> Vec<BTreeSet<Vec<u32>>> {
    let vs = all_vectors(m, p);
    let mut found: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
    let mut frontier = vec![span_set(&[], m, p)];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vs {
            if !s.contains(v) {
                let gens: Vec<Vec<u32>> = s.iter().cloned().chain([v.clone()]).collect();
                let t = span_set(&gens, m, p);
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Rank of the row span, counted by elements.
pub fn rank_by_count(rows: &[Vec<u32>], m: usize, p: u32) -> usize {
    log_p(span_set(rows, m, p).len(), p)
}
