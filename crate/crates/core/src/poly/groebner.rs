//! Buchberger's algorithm with lazy cofactor tracking, division, and
//! (radical) membership.
//!
//! Every basis element records how it was produced as a combination of
//! earlier elements and the input generators. Cofactors with respect to
//! the inputs are only expanded when a certificate is requested.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Coeff, MonomialOrder, Polynomial, Term};
use crate::error::{Error, Result};
use crate::monomial::SquarefreeMonomial;

/// Terms sorted ascending under the working order; the leading term is last.
type Terms = Vec<(Term, Coeff)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ref {
    Gen(usize),
    Elem(usize),
}

type History = Vec<(Ref, Term, Coeff)>;

#[derive(Debug, Clone)]
struct Elem {
    terms: Terms,
    mask: u64,
    hist: History,
}

impl Elem {
    fn lt(&self) -> &Term {
        &self.terms.last().expect("basis elements are nonzero").0
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

fn mask_of(t: &Term) -> u64 {
    t.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |m, (k, _)| m | 1u64 << (k & 63))
}

fn sorted_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut v: Terms = p.terms().map(|(t, c)| (t.clone(), c.clone())).collect();
    v.sort_by(|a, b| order.compare(&a.0, &b.0));
    v
}

fn to_poly(nvars: usize, v: &Terms) -> Polynomial {
    Polynomial::from_terms(nvars, v.iter().cloned())
}

/// `a + c·t·b` for ascending term lists.
fn add_scaled(a: &Terms, c: &Coeff, t: &Term, b: &[(Term, Coeff)], order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(s, d)| (s.mul(t), c * d)).peekable();
    while i < a.len() {
        let Some(next) = bi.peek() else { break };
        match order.compare(&a[i].0, &next.0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(bi.next().unwrap());
            }
            std::cmp::Ordering::Equal => {
                let (s, d) = bi.next().unwrap();
                let sum = &a[i].1 + d;
                if !sum.is_zero() {
                    out.push((s, sum));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(bi);
    out
}

fn make_monic(terms: &mut Terms, hist: &mut History) {
    let lc = terms.last().expect("nonzero").1.clone();
    if lc.is_one() {
        return;
    }
    let inv = lc.recip();
    for (_, c) in terms.iter_mut() {
        *c *= &inv;
    }
    for (_, _, c) in hist.iter_mut() {
        *c *= &inv;
    }
}

fn check_ring(nvars: usize, polys: &[Polynomial]) -> Result<()> {
    for p in polys {
        if p.nvars() != nvars {
            return Err(Error::AmbientMismatch {
                left: nvars,
                right: p.nvars(),
            });
        }
    }
    Ok(())
}

/// A reduced Gröbner basis together with the data needed to extend it and
/// to express its elements in terms of the input generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    arena: Vec<Elem>,
    basis: Vec<usize>,
    tracked: bool,
}

impl GroebnerBasis {
    /// Basis without cofactor bookkeeping.
    pub fn compute(nvars: usize, gens: &[Polynomial], order: &MonomialOrder) -> Result<Self> {
        Self::build(nvars, gens, order, false)
    }

    /// Basis whose elements can be expressed in the input generators.
    pub fn compute_tracked(nvars: usize, gens: &[Polynomial], order: &MonomialOrder) -> Result<Self> {
        Self::build(nvars, gens, order, true)
    }

    fn build(nvars: usize, gens: &[Polynomial], order: &MonomialOrder, tracked: bool) -> Result<Self> {
        check_ring(nvars, gens)?;
        let mut gb = GroebnerBasis {
            nvars,
            order: order.clone(),
            generators: Vec::new(),
            arena: Vec::new(),
            basis: Vec::new(),
            tracked,
        };
        gb.add_generators(gens);
        Ok(gb)
    }

    /// Basis of the ideal generated by this basis and `new_gens`, reusing
    /// the pairs already processed.
    pub fn extend(&self, new_gens: &[Polynomial]) -> Result<Self> {
        check_ring(self.nvars, new_gens)?;
        let mut gb = self.clone();
        gb.add_generators(new_gens);
        Ok(gb)
    }

    /// Like [`extend`](Self::extend), but first embeds the basis in a ring
    /// with `nvars` variables under `order`. When `order` restricted to the
    /// old variables agrees with the current one no work is repeated;
    /// otherwise the basis is recomputed from its generators.
    pub fn extend_in(&self, nvars: usize, order: &MonomialOrder, new_gens: &[Polynomial]) -> Result<Self> {
        if nvars < self.nvars {
            return Err(Error::precondition("cannot embed a basis into fewer variables"));
        }
        check_ring(nvars, new_gens)?;
        let mut gb = self.clone();
        gb.nvars = nvars;
        gb.order = order.clone();
        gb.generators = gb.generators.iter().map(|g| g.extend_vars(nvars)).collect();
        let mut consistent = true;
        for e in &mut gb.arena {
            let old_lt = e.lt().clone();
            for (t, _) in &mut e.terms {
                *t = t.resized(nvars);
            }
            e.terms.sort_by(|a, b| order.compare(&a.0, &b.0));
            if e.lt().exponents()[..old_lt.nvars()] != *old_lt.exponents() {
                consistent = false;
            }
            for (_, t, _) in &mut e.hist {
                *t = t.resized(nvars);
            }
        }
        if !consistent {
            let mut all = gb.generators.clone();
            all.extend_from_slice(new_gens);
            return Self::build(nvars, &all, order, self.tracked);
        }
        gb.add_generators(new_gens);
        Ok(gb)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_tracked(&self) -> bool {
        self.tracked
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.arena[self.basis[0]].lt().is_one()
    }

    /// Basis elements, monic, in increasing order of leading term.
    pub fn elements(&self) -> Vec<Polynomial> {
        let mut idx = self.basis.clone();
        idx.sort_by(|&a, &b| self.order.compare(self.arena[a].lt(), self.arena[b].lt()));
        idx.iter().map(|&k| to_poly(self.nvars, &self.arena[k].terms)).collect()
    }

    /// For each basis element (same order as [`elements`](Self::elements)),
    /// its cofactors with respect to the generators.
    pub fn element_cofactors(&self) -> Result<Vec<Vec<Polynomial>>> {
        self.require_tracked()?;
        let mut idx = self.basis.clone();
        idx.sort_by(|&a, &b| self.order.compare(self.arena[a].lt(), self.arena[b].lt()));
        Ok(idx
            .iter()
            .map(|&k| self.expand(&[(Ref::Elem(k), Term::one(self.nvars), Coeff::one())]))
            .collect())
    }

    fn require_tracked(&self) -> Result<()> {
        if self.tracked {
            Ok(())
        } else {
            Err(Error::precondition("cofactors requested from an untracked basis"))
        }
    }

    fn add_generators(&mut self, gens: &[Polynomial]) {
        let mut pairs = Vec::new();
        for g in gens {
            let j = self.generators.len();
            self.generators.push(g.clone());
            if self.is_unit() || g.is_zero() {
                continue;
            }
            let terms = sorted_terms(g, &self.order);
            let hist = if self.tracked {
                vec![(Ref::Gen(j), Term::one(self.nvars), Coeff::one())]
            } else {
                Vec::new()
            };
            if let Some(h) = self.reduce_and_push(terms, hist) {
                if self.insert(h, &mut pairs) {
                    return;
                }
            }
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    self.order
                        .compare(&pairs[a].lcm, &pairs[b].lcm)
                        .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
                })
                .unwrap();
            let Pair { i, j, lcm } = pairs.swap_remove(best);
            let (s, hist) = self.s_polynomial(i, j, &lcm);
            if let Some(h) = self.reduce_and_push(s, hist) {
                if self.insert(h, &mut pairs) {
                    return;
                }
            }
        }
        self.interreduce();
    }

    fn s_polynomial(&self, i: usize, j: usize, lcm: &Term) -> (Terms, History) {
        let (a, b) = (&self.arena[i], &self.arena[j]);
        let ta = a.lt().quotient_of(lcm);
        let tb = b.lt().quotient_of(lcm);
        let a_tail = &a.terms[..a.terms.len() - 1];
        let b_tail = &b.terms[..b.terms.len() - 1];
        let first = add_scaled(&Vec::new(), &Coeff::one(), &ta, a_tail, &self.order);
        let s = add_scaled(&first, &-Coeff::one(), &tb, b_tail, &self.order);
        let hist = if self.tracked {
            vec![(Ref::Elem(i), ta, Coeff::one()), (Ref::Elem(j), tb, -Coeff::one())]
        } else {
            Vec::new()
        };
        (s, hist)
    }

    /// Fully reduces `terms` (whose history is `hist`) and stores it as a
    /// new monic element when nonzero.
    fn reduce_and_push(&mut self, terms: Terms, mut hist: History) -> Option<usize> {
        let (mut rem, steps) = self.normal_form(terms, None);
        if rem.is_empty() {
            return None;
        }
        if self.tracked {
            hist.extend(steps.into_iter().map(|(k, t, c)| (Ref::Elem(k), t, -c)));
        }
        make_monic(&mut rem, &mut hist);
        let mask = mask_of(&rem.last().unwrap().0);
        self.arena.push(Elem { terms: rem, mask, hist });
        Some(self.arena.len() - 1)
    }

    fn find_divisor(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        let mask = mask_of(t);
        self.basis.iter().copied().find(|&k| {
            Some(k) != skip && {
                let e = &self.arena[k];
                e.mask & !mask == 0 && e.lt().divides(t)
            }
        })
    }

    /// Remainder of full reduction and the steps `(element, term, coeff)`
    /// with `input = Σ coeff·term·element + remainder`.
    fn normal_form(&self, p: Terms, skip: Option<usize>) -> (Terms, Vec<(usize, Term, Coeff)>) {
        let (rem, steps, _) = self.normal_form_flagged(p, skip);
        (rem, steps)
    }

    /// As [`normal_form`](Self::normal_form); the flag reports whether any
    /// reduction step happened, which untracked bases cannot read off the
    /// (empty) step list.
    fn normal_form_flagged(&self, mut p: Terms, skip: Option<usize>) -> (Terms, Vec<(usize, Term, Coeff)>, bool) {
        let mut rem_desc: Terms = Vec::new();
        let mut steps = Vec::new();
        let mut reduced = false;
        while let Some((t, c)) = p.pop() {
            match self.find_divisor(&t, skip) {
                Some(k) => {
                    let e = &self.arena[k];
                    let q = e.lt().quotient_of(&t);
                    p = add_scaled(&p, &-c.clone(), &q, &e.terms[..e.terms.len() - 1], &self.order);
                    reduced = true;
                    if self.tracked {
                        steps.push((k, q, c));
                    }
                }
                None => rem_desc.push((t, c)),
            }
        }
        rem_desc.reverse();
        (rem_desc, steps, reduced)
    }

    /// Gebauer–Möller update; returns true when the ideal became the unit
    /// ideal.
    fn insert(&mut self, h: usize, pairs: &mut Vec<Pair>) -> bool {
        let lth = self.arena[h].lt().clone();
        if lth.is_one() {
            self.basis = vec![h];
            pairs.clear();
            return true;
        }
        let mut c: Vec<(usize, Term)> = self.basis.iter().map(|&g| (g, lth.lcm(self.arena[g].lt()))).collect();
        let mut d: Vec<(usize, Term)> = Vec::new();
        while let Some((g, l)) = c.pop() {
            let coprime = lth.is_coprime(self.arena[g].lt());
            if coprime || !c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l)) {
                d.push((g, l));
            }
        }
        d.retain(|(g, _)| !lth.is_coprime(self.arena[*g].lt()));
        pairs.retain(|p| {
            !(lth.divides(&p.lcm)
                && self.arena[p.i].lt().lcm(&lth) != p.lcm
                && self.arena[p.j].lt().lcm(&lth) != p.lcm)
        });
        pairs.extend(d.into_iter().map(|(g, l)| Pair { i: g, j: h, lcm: l }));
        let arena = &self.arena;
        self.basis.retain(|&g| !lth.divides(arena[g].lt()));
        self.basis.push(h);
        false
    }

    fn interreduce(&mut self) {
        for pos in 0..self.basis.len() {
            let k = self.basis[pos];
            let e = &self.arena[k];
            let (lt, lc) = e.terms.last().cloned().unwrap();
            let tail = e.terms[..e.terms.len() - 1].to_vec();
            let (rem, steps, reduced) = self.normal_form_flagged(tail, Some(k));
            if !reduced {
                continue;
            }
            let mut terms = rem;
            terms.push((lt.clone(), lc));
            let hist = if self.tracked {
                let mut h = vec![(Ref::Elem(k), Term::one(self.nvars), Coeff::one())];
                h.extend(steps.into_iter().map(|(j, t, c)| (Ref::Elem(j), t, -c)));
                h
            } else {
                Vec::new()
            };
            self.arena.push(Elem {
                terms,
                mask: mask_of(&lt),
                hist,
            });
            self.basis[pos] = self.arena.len() - 1;
        }
    }

    /// Cofactors with respect to the generators of `Σ coeff·term·ref`.
    fn expand(&self, combo: &[(Ref, Term, Coeff)]) -> Vec<Polynomial> {
        let mut needed = vec![false; self.arena.len()];
        let mut stack: Vec<usize> = combo
            .iter()
            .filter_map(|(r, _, _)| match r {
                Ref::Elem(k) => Some(*k),
                Ref::Gen(_) => None,
            })
            .collect();
        while let Some(k) = stack.pop() {
            if needed[k] {
                continue;
            }
            needed[k] = true;
            for (r, _, _) in &self.arena[k].hist {
                if let Ref::Elem(j) = r {
                    stack.push(*j);
                }
            }
        }
        let m = self.generators.len();
        let mut memo: HashMap<usize, Vec<Polynomial>> = HashMap::new();
        let accumulate = |out: &mut Vec<Polynomial>, memo: &HashMap<usize, Vec<Polynomial>>, entries: &[(Ref, Term, Coeff)]| {
            for (r, t, c) in entries {
                match r {
                    Ref::Gen(j) => out[*j].add_term(t.clone(), c.clone()),
                    Ref::Elem(k) => {
                        for (o, part) in out.iter_mut().zip(&memo[k]) {
                            for (pt, pc) in part.terms() {
                                o.add_term(pt.mul(t), pc * c);
                            }
                        }
                    }
                }
            }
        };
        for k in 0..self.arena.len() {
            if !needed[k] {
                continue;
            }
            let mut out = vec![Polynomial::zero(self.nvars); m];
            accumulate(&mut out, &memo, &self.arena[k].hist);
            memo.insert(k, out);
        }
        let mut out = vec![Polynomial::zero(self.nvars); m];
        accumulate(&mut out, &memo, combo);
        out
    }

    /// Normal form of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        check_ring(self.nvars, std::slice::from_ref(f))?;
        let (rem, _) = self.normal_form(sorted_terms(f, &self.order), None);
        Ok(to_poly(self.nvars, &rem))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Membership test with a certificate over the generators.
    pub fn membership(&self, f: &Polynomial) -> Result<Membership> {
        self.require_tracked()?;
        check_ring(self.nvars, std::slice::from_ref(f))?;
        let (rem, steps) = self.normal_form(sorted_terms(f, &self.order), None);
        if !rem.is_empty() {
            return Ok(Membership::NotMember {
                remainder: to_poly(self.nvars, &rem),
            });
        }
        let combo: Vec<(Ref, Term, Coeff)> = steps.into_iter().map(|(k, t, c)| (Ref::Elem(k), t, c)).collect();
        Ok(Membership::Member(MembershipCertificate {
            target: f.clone(),
            generators: self.generators.clone(),
            cofactors: self.expand(&combo),
        }))
    }

    /// Smallest `ℓ ≤ lmax` with `f^ℓ` in the ideal, or `None`.
    pub fn power_exponent(&self, f: &Polynomial, lmax: u32) -> Result<Option<u32>> {
        check_ring(self.nvars, std::slice::from_ref(f))?;
        let base = sorted_terms(f, &self.order);
        let mut acc = vec![(Term::one(self.nvars), Coeff::one())];
        for ell in 1..=lmax {
            acc = multiply_sorted(&acc, &base, &self.order);
            let (rem, _) = self.normal_form(acc, None);
            if rem.is_empty() {
                return Ok(Some(ell));
            }
            acc = rem;
        }
        Ok(None)
    }

    /// Smallest power of `f` in the ideal, with a certificate.
    pub fn power_certificate(&self, f: &Polynomial, lmax: u32) -> Result<PowerCertificate> {
        self.require_tracked()?;
        check_ring(self.nvars, std::slice::from_ref(f))?;
        let base = sorted_terms(f, &self.order);
        // f^ℓ = Σ steps + rem, carried forward by multiplying both by f
        let mut combo: Vec<(Ref, Term, Coeff)> = Vec::new();
        let mut rem = vec![(Term::one(self.nvars), Coeff::one())];
        let fpoly = f.clone();
        for ell in 1..=lmax {
            if !combo.is_empty() {
                combo = combo
                    .into_iter()
                    .flat_map(|(r, t, c)| fpoly.terms().map(move |(s, d)| (r, t.mul(s), &c * d)).collect::<Vec<_>>())
                    .collect();
            }
            let product = multiply_sorted(&rem, &base, &self.order);
            let (next, steps) = self.normal_form(product, None);
            combo.extend(steps.into_iter().map(|(k, t, c)| (Ref::Elem(k), t, c)));
            rem = next;
            if rem.is_empty() {
                let target = f.pow(ell);
                return Ok(PowerCertificate {
                    exponent: ell,
                    certificate: MembershipCertificate {
                        target,
                        generators: self.generators.clone(),
                        cofactors: self.expand(&combo),
                    },
                });
            }
        }
        Err(Error::PowerLimitExceeded { lmax })
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        for (a, &i) in self.basis.iter().enumerate() {
            for &j in &self.basis[a + 1..] {
                let lcm = self.arena[i].lt().lcm(self.arena[j].lt());
                let (s, _) = self.s_polynomial(i, j, &lcm);
                if !self.normal_form(s, None).0.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Each basis element equals the recombination of its cofactors, and
    /// each generator reduces to zero.
    pub fn check_consistency(&self) -> Result<bool> {
        for g in &self.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        if self.tracked {
            for (e, cof) in self.elements().iter().zip(self.element_cofactors()?) {
                let mut sum = Polynomial::zero(self.nvars);
                for (c, g) in cof.iter().zip(&self.generators) {
                    sum = &sum + &(c * g);
                }
                if &sum != e {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn multiply_sorted(a: &Terms, b: &Terms, order: &MonomialOrder) -> Terms {
    let mut acc: Terms = Vec::new();
    for (t, c) in a {
        acc = add_scaled(&acc, c, t, b, order);
    }
    acc
}

/// Evidence that `target = Σ cofactors[k]·generators[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
}

impl MembershipCertificate {
    pub fn recombine(&self) -> Polynomial {
        let n = self.target.nvars();
        self.cofactors
            .iter()
            .zip(&self.generators)
            .fold(Polynomial::zero(n), |acc, (c, g)| &acc + &(c * g))
    }

    pub fn verify(&self) -> bool {
        self.cofactors.len() == self.generators.len() && self.recombine() == self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(MembershipCertificate),
    NotMember { remainder: Polynomial },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Membership::Member(c) => Some(c),
            Membership::NotMember { .. } => None,
        }
    }
}

/// `target = f^exponent` lies in the ideal of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCertificate {
    pub exponent: u32,
    pub certificate: MembershipCertificate,
}

impl PowerCertificate {
    /// Builds a certificate from explicitly given cofactors.
    pub fn new(base: &Polynomial, exponent: u32, generators: Vec<Polynomial>, cofactors: Vec<Polynomial>) -> Result<Self> {
        let cert = PowerCertificate {
            exponent,
            certificate: MembershipCertificate {
                target: base.pow(exponent),
                generators,
                cofactors,
            },
        };
        if exponent == 0 || !cert.certificate.verify() {
            return Err(Error::CertificateMismatch);
        }
        Ok(cert)
    }

    pub fn verify(&self) -> bool {
        self.exponent >= 1 && self.certificate.verify()
    }
}

pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    GroebnerBasis::compute_tracked(n, gens, order)
}

pub fn membership(f: &Polynomial, gens: &[Polynomial], order: &MonomialOrder) -> Result<Membership> {
    GroebnerBasis::compute_tracked(f.nvars(), gens, order)?.membership(f)
}

/// Result of the multivariate division algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

pub fn divide_with_cofactors(f: &Polynomial, gens: &[Polynomial], order: &MonomialOrder) -> Result<Division> {
    let n = f.nvars();
    check_ring(n, gens)?;
    let sorted: Vec<Terms> = gens.iter().map(|g| sorted_terms(g, order)).collect();
    let mut cofactors = vec![Polynomial::zero(n); gens.len()];
    let mut rem_desc: Terms = Vec::new();
    let mut p = sorted_terms(f, order);
    while let Some((t, c)) = p.pop() {
        let hit = sorted
            .iter()
            .position(|g| g.last().is_some_and(|(lt, _)| lt.divides(&t)));
        match hit {
            Some(k) => {
                let g = &sorted[k];
                let (lt, lc) = g.last().unwrap();
                let q = lt.quotient_of(&t);
                let a = &c / lc;
                p = add_scaled(&p, &-a.clone(), &q, &g[..g.len() - 1], order);
                cofactors[k].add_term(q, a);
            }
            None => rem_desc.push((t, c)),
        }
    }
    rem_desc.reverse();
    Ok(Division {
        cofactors,
        remainder: to_poly(n, &rem_desc),
    })
}

fn rabinowitsch_order(base: &MonomialOrder, y: usize) -> MonomialOrder {
    base.clone().with_leading_block(y)
}

/// `f ∈ √(gens)` via `1 ∈ (gens, 1 − y·f)` with a new variable `y`.
pub fn radical_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let n = f.nvars();
    check_ring(n, gens)?;
    let y = n + 1;
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars(y)).collect();
    ext.push(&Polynomial::one(y) - &(&Polynomial::var(y, y) * &f.extend_vars(y)));
    let order = rabinowitsch_order(&MonomialOrder::degrevlex(), y);
    Ok(GroebnerBasis::compute(y, &ext, &order)?.is_unit())
}

/// Smallest `ℓ ≤ lmax` (default `2n`) with `m^ℓ ∈ (gens)`, with cofactors.
pub fn power_membership(m: SquarefreeMonomial, gens: &[Polynomial], lmax: Option<u32>) -> Result<PowerCertificate> {
    let n = gens.first().map(|g| g.nvars()).unwrap_or(m.support().max_index());
    let lmax = lmax.unwrap_or(2 * n as u32);
    let gb = GroebnerBasis::compute_tracked(n, gens, &MonomialOrder::degrevlex())?;
    gb.power_certificate(&Polynomial::from_monomial(n, m), lmax)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case", tag = "method")]
pub enum RadicalEvidence {
    /// `f^exponent` reduces to zero modulo the basis.
    Power { exponent: u32 },
    /// The Rabinowitsch extension is the unit ideal.
    Rabinowitsch,
    /// The Rabinowitsch extension is proper.
    NotInRadical,
}

impl RadicalEvidence {
    pub fn holds(self) -> bool {
        !matches!(self, RadicalEvidence::NotInRadical)
    }
}

/// Answers repeated radical-membership queries against one ideal, sharing
/// its Gröbner basis across queries.
#[derive(Debug, Clone)]
pub struct RadicalOracle {
    basis: GroebnerBasis,
    power_limit: u32,
}

impl RadicalOracle {
    pub fn new(gens: &[Polynomial], nvars: usize, order: &MonomialOrder, power_limit: u32) -> Result<Self> {
        Ok(RadicalOracle {
            basis: GroebnerBasis::compute(nvars, gens, order)?,
            power_limit,
        })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// Tries small powers first; the Rabinowitsch extension decides the
    /// rest.
    pub fn query(&self, f: &Polynomial) -> Result<RadicalEvidence> {
        if let Some(exponent) = self.basis.power_exponent(f, self.power_limit)? {
            return Ok(RadicalEvidence::Power { exponent });
        }
        let y = self.basis.nvars() + 1;
        let order = rabinowitsch_order(self.basis.order(), y);
        let slack = &Polynomial::one(y) - &(&Polynomial::var(y, y) * &f.extend_vars(y));
        let ext = self.basis.extend_in(y, &order, &[slack])?;
        Ok(if ext.is_unit() {
            RadicalEvidence::Rabinowitsch
        } else {
            RadicalEvidence::NotInRadical
        })
    }
}
