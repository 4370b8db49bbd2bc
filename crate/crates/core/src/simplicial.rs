//! Simplicial complexes, the Stanley–Reisner correspondence, Alexander
//! duality and generalized-tree peeling.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{check_ambient, minimal_transversals, sort_canonical, MonomialIdeal, SquarefreeMonomial, VarSet};

/// A simplicial complex given by its facets.
///
/// Every vertex of `vertex_set` lies in some facet, facets are pairwise
/// incomparable and kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ambient_n: usize,
    vertex_set: VarSet,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal faces are dropped.
    ///
    /// The vertex set is the union of the faces.
    pub fn from_faces(ambient_n: usize, faces: &[VarSet]) -> Result<Self> {
        let vertex_set = faces.iter().fold(VarSet::EMPTY, |a, f| a.union(*f));
        Self::with_vertex_set(ambient_n, vertex_set, faces)
    }

    /// Builds a complex on an explicit vertex set, rejecting vertices that
    /// no face covers.
    pub fn with_vertex_set(ambient_n: usize, vertex_set: VarSet, faces: &[VarSet]) -> Result<Self> {
        check_ambient(ambient_n)?;
        if !vertex_set.is_subset(VarSet::full(ambient_n)) {
            return Err(Error::VariableOutOfRange {
                index: vertex_set.max_index(),
                ambient: ambient_n,
            });
        }
        if faces.is_empty() {
            return Err(Error::precondition("a complex needs at least one face"));
        }
        let mut covered = VarSet::EMPTY;
        for f in faces {
            if !f.is_subset(vertex_set) {
                return Err(Error::precondition(format!("face {{{f}}} is not inside the vertex set")));
            }
            covered = covered.union(*f);
        }
        if covered != vertex_set {
            return Err(Error::precondition(format!(
                "vertices {{{}}} lie in no facet",
                vertex_set.difference(covered)
            )));
        }
        Ok(SimplicialComplex {
            ambient_n,
            vertex_set,
            facets: maximal_faces(faces),
        })
    }

    pub fn simplex(ambient_n: usize, vertex_set: VarSet) -> Result<Self> {
        Self::with_vertex_set(ambient_n, vertex_set, &[vertex_set])
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn vertex_set(&self) -> VarSet {
        self.vertex_set
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// `max |F| - 1` over facets.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// Same complex considered inside a larger ambient index range.
    pub fn with_ambient(&self, ambient_n: usize) -> Result<Self> {
        Self::with_vertex_set(ambient_n, self.vertex_set, &self.facets)
    }

    /// `self ∪ cone_{apex} face` on the vertex set extended by `apex`.
    pub fn cone_extension(&self, face: VarSet, apex: usize) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::precondition(format!("{{{face}}} is not a face")));
        }
        if self.vertex_set.contains(apex) {
            return Err(Error::precondition(format!("x{apex} is already a vertex")));
        }
        let ambient = self.ambient_n.max(apex);
        let mut faces = self.facets.clone();
        faces.push(face.with(apex));
        Self::with_vertex_set(ambient, self.vertex_set.with(apex), &faces)
    }

    /// Every face, including the empty face.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s.mask());
            }
        }
        let mut out: Vec<VarSet> = seen.into_iter().map(VarSet::from_mask).collect();
        sort_canonical(&mut out);
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|s| format!("{{{s}}}")).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

fn maximal_faces(faces: &[VarSet]) -> Vec<VarSet> {
    let mut sorted = faces.to_vec();
    sort_canonical(&mut sorted);
    sorted.dedup();
    let mut out: Vec<VarSet> = Vec::new();
    // Largest first, so each face is tested against everything that could contain it.
    for f in sorted.into_iter().rev() {
        if !out.iter().any(|g| f.is_subset(*g)) {
            out.push(f);
        }
    }
    sort_canonical(&mut out);
    out
}

/// The ideal of minimal nonfaces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    if complex.is_simplex() {
        return MonomialIdeal::zero(complex.ambient_n);
    }
    let complements: Vec<VarSet> = complex
        .facets
        .iter()
        .map(|f| complex.vertex_set.difference(*f))
        .collect();
    let nonfaces = minimal_transversals(&complements).expect("complements of facets of a non-simplex are nonempty");
    let gens: Vec<SquarefreeMonomial> = nonfaces.into_iter().map(SquarefreeMonomial::new).collect();
    MonomialIdeal::new(complex.ambient_n, &gens).expect("nonfaces lie inside the ambient range")
}

/// The complex `Δ` on `{x1..xn}` with `I_Δ = ideal`.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    complex_of_ideal_on(ideal, VarSet::full(ideal.ambient_n()))
}

/// The complex `Δ` on `vertex_set` with `I_Δ = ideal`; facets are the
/// complements of the minimal primes.
pub fn complex_of_ideal_on(ideal: &MonomialIdeal, vertex_set: VarSet) -> Result<SimplicialComplex> {
    if !ideal.used_variables().is_subset(vertex_set) {
        return Err(Error::precondition("ideal uses variables outside the vertex set"));
    }
    if ideal.is_zero() {
        return SimplicialComplex::simplex(ideal.ambient_n(), vertex_set);
    }
    if ideal.indeg()? < 2 {
        return Err(Error::precondition(
            "an ideal containing a variable is not the Stanley-Reisner ideal of a complex on all variables",
        ));
    }
    let facets: Vec<VarSet> = ideal
        .prime_decomposition()?
        .into_iter()
        .map(|p| vertex_set.difference(p.variables))
        .collect();
    SimplicialComplex::with_vertex_set(ideal.ambient_n(), vertex_set, &facets)
}

/// The Alexander dual `Δ* = {F : X∖F ∉ Δ}`, whose facets are the
/// complements of the supports of the minimal nonfaces of `Δ`.
pub fn alexander_dual(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = complex.vertex_set.len() as isize;
    if complex.dimension() >= n - 2 {
        return Err(Error::precondition(format!(
            "Alexander dual needs dim < n - 2 (dim = {}, n = {n})",
            complex.dimension()
        )));
    }
    let ideal = stanley_reisner_ideal(complex);
    let facets: Vec<VarSet> = ideal
        .generators()
        .iter()
        .map(|m| complex.vertex_set.difference(m.support()))
        .collect();
    SimplicialComplex::with_vertex_set(complex.ambient_n, complex.vertex_set, &facets)
}

/// One cone attachment: `attached_facet = face ∪ {vertex}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    pub vertex: usize,
    pub face: VarSet,
    pub attached_facet: VarSet,
}

/// A simplex plus the cone attachments that rebuild a generalized tree, in
/// build order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelSequence {
    pub base: SimplicialComplex,
    pub steps: Vec<PeelStep>,
}

impl PeelSequence {
    /// Rebuilds the complex by attaching each cone in order.
    pub fn replay(&self) -> Result<SimplicialComplex> {
        let mut current = self.base.clone();
        for step in &self.steps {
            let ambient = current.ambient_n.max(step.vertex);
            current = current.with_ambient(ambient)?.cone_extension(step.face, step.vertex)?;
        }
        Ok(current)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotGeneralizedTree {
    /// The non-simplex complex reached when no leaf vertex was left.
    pub stuck_at: SimplicialComplex,
}

/// A vertex lying in exactly one facet, together with that facet.
pub fn leaf_vertices(complex: &SimplicialComplex) -> Vec<(usize, VarSet)> {
    complex
        .vertex_set
        .iter()
        .filter_map(|v| {
            let mut containing = complex.facets.iter().filter(|f| f.contains(v));
            let first = *containing.next()?;
            containing.next().is_none().then_some((v, first))
        })
        .collect()
}

/// Removes leaf vertex `v` with facet `h`: the facet becomes `h ∖ {v}`,
/// which survives only if no other facet contains it.
pub fn remove_leaf(complex: &SimplicialComplex, v: usize, h: VarSet) -> SimplicialComplex {
    let face = h.without(v);
    let mut facets: Vec<VarSet> = complex.facets.iter().copied().filter(|f| *f != h).collect();
    facets.push(face);
    SimplicialComplex::with_vertex_set(complex.ambient_n, complex.vertex_set.without(v), &facets)
        .expect("removing a leaf keeps every other vertex covered")
}

/// Peels leaf vertices, smallest index first, until a simplex remains.
pub fn peel(complex: &SimplicialComplex) -> Result<PeelSequence, NotGeneralizedTree> {
    let mut current = complex.clone();
    let mut removed = Vec::new();
    while !current.is_simplex() {
        let Some(&(v, h)) = leaf_vertices(&current).first() else {
            return Err(NotGeneralizedTree { stuck_at: current });
        };
        let face = h.without(v);
        removed.push(PeelStep {
            vertex: v,
            face,
            attached_facet: h,
        });
        current = remove_leaf(&current, v, h);
    }
    removed.reverse();
    Ok(PeelSequence {
        base: current,
        steps: removed,
    })
}

pub fn is_generalized_tree(complex: &SimplicialComplex) -> bool {
    peel(complex).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<VarSet> = facets.iter().map(|s| vs(s)).collect();
        SimplicialComplex::with_vertex_set(n, VarSet::full(n), &f).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, gens.iter().map(|g| g.iter().copied())).unwrap()
    }

    #[test]
    fn rejects_uncovered_vertices() {
        assert!(SimplicialComplex::with_vertex_set(4, VarSet::full(4), &[vs(&[1, 2]), vs(&[2, 3])]).is_err());
    }

    #[test]
    fn stanley_reisner_examples() {
        let delta = complex(4, &[&[1, 3], &[2, 3], &[2, 4]]);
        assert_eq!(stanley_reisner_ideal(&delta), ideal(4, &[&[1, 2], &[1, 4], &[3, 4]]));

        let simplex = complex(4, &[&[1, 2, 3, 4]]);
        assert!(stanley_reisner_ideal(&simplex).is_zero());

        let hollow = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(stanley_reisner_ideal(&hollow), ideal(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn complex_of_ideal_examples() {
        let delta = complex_of_ideal(&ideal(4, &[&[1, 2], &[1, 4], &[3, 4]])).unwrap();
        assert_eq!(delta.facets(), &[vs(&[1, 3]), vs(&[2, 3]), vs(&[2, 4])]);

        let simplex = complex_of_ideal(&MonomialIdeal::zero(3)).unwrap();
        assert_eq!(simplex.facets(), &[VarSet::full(3)]);

        let ci = complex_of_ideal(&ideal(4, &[&[1, 3], &[2, 4]])).unwrap();
        assert_eq!(ci.facets(), &[vs(&[1, 2]), vs(&[1, 4]), vs(&[2, 3]), vs(&[3, 4])]);

        assert!(complex_of_ideal(&ideal(3, &[&[1], &[2, 3]])).is_err());
    }

    #[test]
    fn dual_of_line_example() {
        let delta = complex(4, &[&[1, 3], &[2, 3], &[2, 4]]);
        let gamma = alexander_dual(&delta).unwrap();
        assert_eq!(gamma.facets(), &[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]);
        assert_eq!(alexander_dual(&gamma).unwrap(), delta);
    }

    #[test]
    fn dual_of_extended_line() {
        // Line on 5 vertices; its dual ideal has the four cubic generators.
        let gamma = complex(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        let delta = alexander_dual(&gamma).unwrap();
        assert_eq!(
            stanley_reisner_ideal(&delta),
            ideal(5, &[&[1, 2, 3], &[1, 2, 5], &[1, 4, 5], &[3, 4, 5]])
        );
    }

    #[test]
    fn dual_rejects_large_dimension() {
        let big = complex(4, &[&[1, 2, 3], &[4]]);
        assert!(alexander_dual(&big).is_err());
    }

    #[test]
    fn peel_line_segment() {
        let line = complex(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let seq = peel(&line).unwrap();
        assert_eq!(seq.steps.len(), 2);
        assert!(seq.base.is_simplex());
        assert_eq!(seq.base.facets()[0].len(), 2);
        assert_eq!(seq.replay().unwrap(), line);
    }

    #[test]
    fn hollow_triangle_is_not_a_tree() {
        let hollow = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let err = peel(&hollow).unwrap_err();
        assert_eq!(err.stuck_at, hollow);
    }

    #[test]
    fn simplex_peels_trivially() {
        let s = complex(3, &[&[1, 2, 3]]);
        let seq = peel(&s).unwrap();
        assert!(seq.steps.is_empty());
        assert_eq!(seq.replay().unwrap(), s);
    }

    #[test]
    fn isolated_points_peel_over_empty_face() {
        let points = complex(3, &[&[1], &[2], &[3]]);
        let seq = peel(&points).unwrap();
        assert_eq!(seq.steps.len(), 2);
        assert!(seq.steps.iter().all(|s| s.face.is_empty()));
        assert_eq!(seq.replay().unwrap(), points);
    }

    #[test]
    fn cone_extension_adds_vertex() {
        let line = complex(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let ext = line.cone_extension(vs(&[4]), 5).unwrap();
        assert_eq!(ext.ambient_n(), 5);
        assert_eq!(ext.facets().len(), 4);
        assert!(line.cone_extension(vs(&[1, 3]), 5).is_err());
    }
}
