#![allow(dead_code)]

use std::collections::BTreeSet;

use arank_core::monomial::{MonomialIdeal, VarSet};
use arank_core::simplicial::SimplicialComplex;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every complex with vertex set exactly `{x1..xn}`, as facet lists.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let subsets: Vec<VarSet> = (1u64..(1 << n)).map(VarSet::from_mask).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&subsets, 0, &mut chosen, &mut |facets| {
        let cover = facets.iter().fold(VarSet::EMPTY, |a, f| a.union(*f));
        if cover == VarSet::full(n) {
            out.push(SimplicialComplex::from_faces(n, facets).unwrap());
        }
    });
    out
}

/// Every nonzero squarefree ideal on `n` variables whose generators have
/// degree at least `min_degree`.
pub fn all_ideals(n: usize, min_degree: usize) -> Vec<MonomialIdeal> {
    let subsets: Vec<VarSet> = (1u64..(1 << n))
        .map(VarSet::from_mask)
        .filter(|s| s.len() >= min_degree)
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&subsets, 0, &mut chosen, &mut |gens| {
        if !gens.is_empty() {
            out.push(MonomialIdeal::from_supports(n, gens.iter().map(|g| g.to_vec())).unwrap());
        }
    });
    out
}

fn antichains(pool: &[VarSet], start: usize, chosen: &mut Vec<VarSet>, visit: &mut dyn FnMut(&[VarSet])) {
    visit(chosen);
    for k in start..pool.len() {
        let s = pool[k];
        if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
            chosen.push(s);
            antichains(pool, k + 1, chosen, visit);
            chosen.pop();
        }
    }
}

fn canonical_form(n: usize, facets: &[VarSet]) -> Vec<u64> {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut image: Vec<u64> = facets
            .iter()
            .map(|f| VarSet::from_indices(f.iter().map(|v| perm[v - 1])).mask())
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Generalized trees with vertex set `{x1..xk}`, `k ≤ max_n`, one per
/// isomorphism class.
pub fn generalized_trees(max_n: usize) -> Vec<SimplicialComplex> {
    let mut all = Vec::new();
    let mut level: Vec<SimplicialComplex> = Vec::new();
    for k in 1..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        let mut candidates = vec![SimplicialComplex::simplex(k, VarSet::full(k)).unwrap()];
        for c in &level {
            let lifted = c.with_ambient(k).unwrap();
            for f in lifted.faces() {
                candidates.push(lifted.cone_extension(f, k).unwrap());
            }
        }
        for c in candidates {
            if seen.insert(canonical_form(k, c.facets())) {
                next.push(c);
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// A random complex on `{x1..xn}` with `dim < n - 2`.
pub fn random_low_dim_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    assert!(n >= 3);
    loop {
        let mut faces: Vec<VarSet> = (1..=n).map(VarSet::singleton).collect();
        for _ in 0..rng.gen_range(0..=n) {
            let size = rng.gen_range(1..=n - 2);
            let mut vs: Vec<usize> = (1..=n).collect();
            vs.shuffle(rng);
            faces.push(VarSet::from_indices(vs[..size].iter().copied()));
        }
        let c = SimplicialComplex::from_faces(n, &faces).unwrap();
        if c.dimension() < n as isize - 2 {
            return c;
        }
    }
}

pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let mut faces: Vec<VarSet> = (1..=n).map(VarSet::singleton).collect();
    for _ in 0..rng.gen_range(0..=n) {
        faces.push(VarSet::from_mask(rng.gen_range(1..(1u64 << n))));
    }
    SimplicialComplex::from_faces(n, &faces).unwrap()
}

pub fn random_face<R: Rng>(rng: &mut R, c: &SimplicialComplex) -> VarSet {
    let faces = c.faces();
    *faces.choose(rng).unwrap()
}

/// `(∏(X ∖ H) : H facet)` with `X = {x1..xn}`.
pub fn dual_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    let x = c.vertex_set();
    MonomialIdeal::from_supports(c.ambient_n(), c.facets().iter().map(|f| x.difference(*f).to_vec())).unwrap()
}
