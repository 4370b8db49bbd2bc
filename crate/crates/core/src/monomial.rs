//! Squarefree monomials and monomial ideals.
//!
//! Variables are 1-based (`x1..xn`) and a set of variables is stored as a
//! 64-bit mask, so every ideal here lives in at most 64 variables.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 64;

/// A set of variable indices drawn from `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VarSet(mask)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&index), "variable index {index} out of range");
        VarSet(1u64 << (index - 1))
    }

    /// Panics on an index outside `1..=64`; use [`VarSet::try_from_indices`]
    /// for untrusted input.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(VarSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn try_from_indices<I: IntoIterator<Item = usize>>(indices: I, ambient: usize) -> Result<Self> {
        let mut set = VarSet::EMPTY;
        for i in indices {
            if i == 0 || i > ambient || i > MAX_VARS {
                return Err(Error::VariableOutOfRange { index: i, ambient });
            }
            set = set.with(i);
        }
        Ok(set)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_VARS).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    #[must_use]
    pub fn with(self, index: usize) -> Self {
        VarSet(self.0 | VarSet::singleton(index).0)
    }

    #[must_use]
    pub fn without(self, index: usize) -> Self {
        VarSet(self.0 & !VarSet::singleton(index).0)
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest index present, or 0 for the empty set.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VarSet(cur))
        })
    }
}

/// Canonical order: by cardinality, then lexicographically on the sorted
/// index lists.
pub fn canonical_cmp(a: VarSet, b: VarSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let diff = a.0 ^ b.0;
        if diff == 0 {
            Ordering::Equal
        } else if a.0 & (diff & diff.wrapping_neg()) != 0 {
            // `a` holds the smallest index on which they differ.
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

pub fn sort_canonical(sets: &mut [VarSet]) {
    sets.sort_by(|a, b| canonical_cmp(*a, *b));
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// A product of distinct variables; the empty support is the unit monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SquarefreeMonomial(VarSet);

impl SquarefreeMonomial {
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial(VarSet::EMPTY);

    pub fn new(support: VarSet) -> Self {
        SquarefreeMonomial(support)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SquarefreeMonomial(VarSet::from_indices(indices))
    }

    pub fn support(self) -> VarSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn lcm(self, other: SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial(self.0.union(other.0))
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.0.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// A minimal prime `(x_i : i in variables)` of a squarefree monomial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeComponent {
    pub variables: VarSet,
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.variables.iter().map(|i| format!("x{i}")).collect();
        write!(f, "({})", names.join(","))
    }
}

/// A squarefree monomial ideal, always stored by its minimal generators in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient_n: usize,
    generators: Vec<SquarefreeMonomial>,
}

pub fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::TooManyVariables(n))
    } else {
        Ok(())
    }
}

/// Reduce a list of monomials to the minimal generating set of the ideal
/// they generate.
pub fn minimalize(ambient_n: usize, monomials: &[SquarefreeMonomial]) -> Result<MonomialIdeal> {
    check_ambient(ambient_n)?;
    let range = VarSet::full(ambient_n);
    for m in monomials {
        if !m.support().is_subset(range) {
            return Err(Error::AmbientMismatch {
                left: m.support().max_index(),
                right: ambient_n,
            });
        }
    }
    let mut sets: Vec<VarSet> = monomials.iter().map(|m| m.support()).collect();
    sort_canonical(&mut sets);
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    // Canonical order puts every divisor before its multiples.
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    Ok(MonomialIdeal {
        ambient_n,
        generators: kept.into_iter().map(SquarefreeMonomial).collect(),
    })
}

impl MonomialIdeal {
    pub fn new(ambient_n: usize, monomials: &[SquarefreeMonomial]) -> Result<Self> {
        minimalize(ambient_n, monomials)
    }

    pub fn from_supports<I>(ambient_n: usize, supports: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = usize>,
    {
        let mut gens = Vec::new();
        for s in supports {
            gens.push(SquarefreeMonomial(VarSet::try_from_indices(s, ambient_n)?));
        }
        minimalize(ambient_n, &gens)
    }

    pub fn zero(ambient_n: usize) -> Self {
        MonomialIdeal {
            ambient_n,
            generators: Vec::new(),
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn supports(&self) -> Vec<VarSet> {
        self.generators.iter().map(|m| m.support()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Variables dividing at least one generator.
    pub fn used_variables(&self) -> VarSet {
        self.generators
            .iter()
            .fold(VarSet::EMPTY, |acc, m| acc.union(m.support()))
    }

    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Same generators over a larger polynomial ring.
    pub fn with_ambient(&self, ambient_n: usize) -> Result<Self> {
        minimalize(ambient_n, &self.generators)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        let n = self.ambient_n.max(other.ambient_n);
        let mut all = self.generators.clone();
        all.extend_from_slice(&other.generators);
        minimalize(n, &all)
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        let n = self.ambient_n.max(other.ambient_n);
        let mut lcms = Vec::with_capacity(self.mu() * other.mu());
        for a in &self.generators {
            for b in &other.generators {
                lcms.push(a.lcm(*b));
            }
        }
        minimalize(n, &lcms)
    }

    pub fn prime_decomposition(&self) -> Result<Vec<PrimeComponent>> {
        prime_decomposition(self)
    }

    pub fn height(&self) -> Result<usize> {
        height(self)
    }

    pub fn indeg(&self) -> Result<usize> {
        indeg(self)
    }

    /// The Alexander dual ideal: one generator `prod_{i in P} x_i` per
    /// minimal prime `P`.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.prime_decomposition()?;
        let gens: Vec<SquarefreeMonomial> = primes
            .into_iter()
            .map(|p| SquarefreeMonomial(p.variables))
            .collect();
        minimalize(self.ambient_n, &gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// All inclusion-minimal vertex sets meeting every edge, in canonical order.
///
/// Branches on the unhit edge with the fewest vertices and prunes any
/// partial set containing a vertex without a private edge, since adding
/// vertices can only take private edges away.
pub fn minimal_transversals(edges: &[VarSet]) -> Result<Vec<VarSet>> {
    if edges.iter().any(|e| e.is_empty()) {
        return Err(Error::EmptyEdge);
    }
    let mut edges: Vec<VarSet> = edges.to_vec();
    sort_canonical(&mut edges);
    edges.dedup();
    // Supersets of other edges never constrain a minimal transversal.
    let mut minimal_edges: Vec<VarSet> = Vec::new();
    for e in edges {
        if !minimal_edges.iter().any(|k| k.is_subset(e)) {
            minimal_edges.push(e);
        }
    }

    let mut found: HashSet<u64> = HashSet::new();
    let mut seen: HashSet<u64> = HashSet::new();
    search_transversals(&minimal_edges, VarSet::EMPTY, &mut found, &mut seen);

    let mut out: Vec<VarSet> = found.into_iter().map(VarSet).collect();
    sort_canonical(&mut out);
    Ok(out)
}

fn has_private_edges(edges: &[VarSet], set: VarSet) -> bool {
    set.iter().all(|v| {
        edges
            .iter()
            .any(|e| e.contains(v) && e.intersection(set).len() == 1)
    })
}

fn search_transversals(edges: &[VarSet], current: VarSet, found: &mut HashSet<u64>, seen: &mut HashSet<u64>) {
    if !seen.insert(current.mask()) {
        return;
    }
    if !has_private_edges(edges, current) {
        return;
    }
    let branch = edges
        .iter()
        .filter(|e| e.is_disjoint(current))
        .min_by_key(|e| e.len());
    match branch {
        None => {
            found.insert(current.mask());
        }
        Some(edge) => {
            for v in edge.iter() {
                search_transversals(edges, current.with(v), found, seen);
            }
        }
    }
}

pub fn prime_decomposition(ideal: &MonomialIdeal) -> Result<Vec<PrimeComponent>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let covers = minimal_transversals(&ideal.supports())?;
    Ok(covers
        .into_iter()
        .map(|variables| PrimeComponent { variables })
        .collect())
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(prime_decomposition(ideal)?
        .iter()
        .map(|p| p.variables.len())
        .min()
        .expect("nonzero ideal has a minimal prime"))
}

pub fn indeg(ideal: &MonomialIdeal) -> Result<usize> {
    ideal
        .generators
        .first()
        .map(|m| m.degree())
        .ok_or(Error::ZeroIdeal)
}
