//! Constructions of polynomials generating squarefree monomial ideals up to
//! radical: Schmitt–Vogel block sums, cone lifts, the height-2
//! Cohen–Macaulay pipeline, the `h + 1` cone bound, the cofactor-matrix
//! cone elements, and the line-segment family.

use std::fmt;

use log::{debug, warn};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, VarSet};
use crate::poly::{integer, GroebnerBasis, MonomialOrder, Polynomial, PowerCertificate};
use crate::simplicial::{leaf_vertices, peel, remove_leaf, stanley_reisner_ideal, SimplicialComplex};
use crate::verifier::{polynomial_in_monomial_ideal, verify_up_to_radical, RadicalReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BaseCase,
    ConeLift,
    Prop31,
    BtCase1,
    BtCase2,
    Injected,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::BaseCase => "base-case",
            Provenance::ConeLift => "cone-lift",
            Provenance::Prop31 => "prop31",
            Provenance::BtCase1 => "bt-case1",
            Provenance::BtCase2 => "bt-case2",
            Provenance::Injected => "injected",
        })
    }
}

/// Polynomials claimed to generate `target` up to radical.
#[derive(Debug, Clone)]
pub struct GeneratorWitness {
    pub elements: Vec<Polynomial>,
    pub target: MonomialIdeal,
    pub provenance: Provenance,
    pub verified: bool,
    /// Unusual code paths taken while building the witness.
    pub flags: Vec<String>,
    pub report: Option<RadicalReport>,
}

impl GeneratorWitness {
    /// Runs the verifier and records its verdict.
    pub fn certified(elements: Vec<Polynomial>, target: MonomialIdeal, provenance: Provenance) -> Result<Self> {
        let report = verify_up_to_radical(&elements, &target)?;
        Ok(GeneratorWitness {
            elements,
            target,
            provenance,
            verified: report.verdict,
            flags: Vec::new(),
            report: Some(report),
        })
    }

    /// As [`certified`](Self::certified) but a failed verdict is an error.
    fn checked(elements: Vec<Polynomial>, target: MonomialIdeal, provenance: Provenance) -> Result<Self> {
        let w = Self::certified(elements, target, provenance)?;
        if !w.verified {
            return Err(Error::Verification(format!(
                "{provenance} elements do not generate {} up to radical",
                w.target
            )));
        }
        Ok(w)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "target": self.target.generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "elements": self.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "provenance": self.provenance.to_string(),
            "verified": self.verified,
        });
        if !self.flags.is_empty() {
            v["flags"] = serde_json::json!(self.flags);
        }
        if let Some(r) = &self.report {
            v["report"] = r.to_json();
        }
        v
    }
}

/// Blocks `P₀, …, P_r` of minimal generators with `|P₀| = 1` such that for
/// any two distinct `a, a″` in a block some generator of an earlier block
/// divides `a·a″`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SVPartition {
    blocks: Vec<Vec<SquarefreeMonomial>>,
}

impl SVPartition {
    pub fn new(blocks: Vec<Vec<SquarefreeMonomial>>) -> Result<Self> {
        if blocks.first().map(|b| b.len()) != Some(1) {
            return Err(Error::InvalidPartition("the first block must hold exactly one monomial".into()));
        }
        let all: Vec<SquarefreeMonomial> = blocks.iter().flatten().copied().collect();
        for (k, a) in all.iter().enumerate() {
            if all[k + 1..].contains(a) {
                return Err(Error::InvalidPartition(format!("{a} appears twice")));
            }
        }
        for (l, block) in blocks.iter().enumerate().skip(1) {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {l} is empty")));
            }
            for (x, a) in block.iter().enumerate() {
                for b in &block[x + 1..] {
                    let product = a.lcm(*b);
                    let ok = blocks[..l].iter().flatten().any(|c| c.divides(product));
                    if !ok {
                        return Err(Error::InvalidPartition(format!(
                            "no earlier generator divides {a}·{b} in block {l}"
                        )));
                    }
                }
            }
        }
        Ok(SVPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<SquarefreeMonomial>] {
        &self.blocks
    }

    /// True when the blocks are exactly the minimal generators of `ideal`.
    pub fn partitions(&self, ideal: &MonomialIdeal) -> bool {
        let mut mine: Vec<SquarefreeMonomial> = self.blocks.iter().flatten().copied().collect();
        let mut theirs = ideal.generators().to_vec();
        mine.sort_by_key(|m| m.support().mask());
        theirs.sort_by_key(|m| m.support().mask());
        mine == theirs
    }
}

/// Block sums `q_l = Σ_{a ∈ P_l} a`.
pub fn sv_elements(partition: &SVPartition, nvars: usize) -> Vec<Polynomial> {
    partition
        .blocks
        .iter()
        .map(|b| {
            b.iter()
                .fold(Polynomial::zero(nvars), |acc, &m| &acc + &Polynomial::from_monomial(nvars, m))
        })
        .collect()
}

/// Candidate two-block partitions, first block taken in canonical order.
fn two_block_partitions(ideal: &MonomialIdeal) -> impl Iterator<Item = Result<SVPartition>> + '_ {
    let gens = ideal.generators();
    (0..gens.len()).map(move |k| {
        let rest: Vec<SquarefreeMonomial> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, m)| *m).collect();
        let mut blocks = vec![vec![gens[k]]];
        if !rest.is_empty() {
            blocks.push(rest);
        }
        SVPartition::new(blocks)
    })
}

/// The dual complex `{X ∖ supp m}` on `X` = the variables of `ideal`.
fn dual_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let x = ideal.used_variables();
    let facets: Vec<VarSet> = ideal.supports().into_iter().map(|s| x.difference(s)).collect();
    SimplicialComplex::with_vertex_set(ideal.ambient_n(), x, &facets)
}

/// The ideal `(∏(X ∖ H) : H facet)`.
fn dual_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let x = complex.vertex_set();
    MonomialIdeal::from_supports(
        complex.ambient_n(),
        complex.facets().iter().map(|f| x.difference(*f).iter().collect::<Vec<_>>()),
    )
}

fn check_h2cm(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let h = ideal.height()?;
    if h != 2 {
        return Err(Error::precondition(format!("ideal has height {h}, expected 2")));
    }
    // With height 2, R/I is Cohen–Macaulay exactly when the dual complex
    // is a generalized tree.
    if peel(&dual_complex(ideal)?).is_err() {
        return Err(Error::precondition("R/I is not Cohen-Macaulay: the dual complex is not a generalized tree"));
    }
    Ok(())
}

/// Two elements for a height-2 Cohen–Macaulay ideal that has a variable
/// among its generators or at most three generators.
pub fn base_case_generators(ideal: &MonomialIdeal) -> Result<GeneratorWitness> {
    check_h2cm(ideal)?;
    let n = ideal.ambient_n();
    if ideal.mu() > 3 && ideal.indeg()? > 1 {
        return Err(Error::precondition(format!(
            "base case needs at most 3 generators or a variable generator, got {}",
            ideal.mu()
        )));
    }
    if ideal.mu() == 2 {
        let elements = ideal.generators().iter().map(|&m| Polynomial::from_monomial(n, m)).collect();
        return GeneratorWitness::checked(elements, ideal.clone(), Provenance::BaseCase);
    }
    for partition in two_block_partitions(ideal) {
        let Ok(partition) = partition else { continue };
        let elements = sv_elements(&partition, n);
        return GeneratorWitness::checked(elements, ideal.clone(), Provenance::BaseCase);
    }
    sv_fallback(ideal)
}

/// Searches small-coefficient combinations when no two-block partition
/// satisfies the divisibility condition.
fn sv_fallback(ideal: &MonomialIdeal) -> Result<GeneratorWitness> {
    warn!("no Schmitt-Vogel partition for {ideal}; searching coefficient combinations");
    let n = ideal.ambient_n();
    let g: Vec<Polynomial> = ideal.generators().iter().map(|&m| Polynomial::from_monomial(n, m)).collect();
    for k in 0..g.len() {
        let rest: Vec<&Polynomial> = (0..g.len()).filter(|&j| j != k).map(|j| &g[j]).collect();
        for lambda in [-1, 2, -2, 3] {
            let q2 = rest[1..]
                .iter()
                .fold(rest[0].clone(), |acc, r| &acc + &r.scale(&integer(lambda)));
            let w = GeneratorWitness::certified(vec![g[k].clone(), q2], ideal.clone(), Provenance::BaseCase)?;
            if w.verified {
                let mut w = w;
                w.flags.push("sv-fallback".into());
                return Ok(w);
            }
        }
    }
    Err(Error::Verification(format!("no two-element base case found for {ideal}")))
}

/// Data of one cone attachment `Γ′ = Γ ∪ cone_{x₀} F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeData {
    pub apex: usize,
    pub face: VarSet,
    /// The smallest facet of `Γ` (canonical order) containing `face`.
    pub facet: VarSet,
    /// `∏(X ∖ F)`, the new generator of the lifted ideal.
    pub m0: SquarefreeMonomial,
    /// `∏(X ∖ G)`, the generator of the old ideal for the chosen facet.
    pub m1: SquarefreeMonomial,
}

impl ConeData {
    pub fn new(gamma: &SimplicialComplex, face: VarSet, apex: usize) -> Result<Self> {
        let facet = *gamma
            .facets()
            .iter()
            .find(|g| face.is_subset(**g))
            .ok_or_else(|| Error::precondition(format!("{{{face}}} is not a face")))?;
        if gamma.vertex_set().contains(apex) {
            return Err(Error::precondition(format!("apex x{apex} is already a vertex")));
        }
        let x = gamma.vertex_set();
        Ok(ConeData {
            apex,
            face,
            facet,
            m0: SquarefreeMonomial::new(x.difference(face)),
            m1: SquarefreeMonomial::new(x.difference(facet)),
        })
    }
}

/// `q₁′ = x₀q₁ − a₁₂m₀`, `q₂′ = x₀q₂ + a₁₁m₀` from a certificate
/// `m₁^ℓ = a₁₁q₁ + a₁₂q₂`.
pub fn cone_lift(
    q1: &Polynomial,
    q2: &Polynomial,
    cone: &ConeData,
    cert: &PowerCertificate,
) -> Result<(Polynomial, Polynomial)> {
    let c = &cert.certificate;
    if c.cofactors.len() != 2 || c.generators.len() != 2 {
        return Err(Error::CertificateMismatch);
    }
    let n = [q1.nvars(), q2.nvars(), cone.apex, c.target.nvars()]
        .into_iter()
        .max()
        .unwrap();
    let up = |p: &Polynomial| p.extend_vars(n);
    let (q1, q2) = (up(q1), up(q2));
    if !cert.verify()
        || up(&c.generators[0]) != q1
        || up(&c.generators[1]) != q2
        || up(&c.target) != Polynomial::from_monomial(n, cone.m1).pow(cert.exponent)
    {
        return Err(Error::CertificateMismatch);
    }
    let (a11, a12) = (up(&c.cofactors[0]), up(&c.cofactors[1]));
    let x0 = Polynomial::var(n, cone.apex);
    let m0 = Polynomial::from_monomial(n, cone.m0);
    Ok((&(&x0 * &q1) - &(&a12 * &m0), &(&x0 * &q2) + &(&a11 * &m0)))
}

#[derive(Debug, Clone)]
pub struct H2cmOptions {
    /// Largest power searched for each lift certificate; `None` is `2n`.
    pub lmax: Option<u32>,
    /// Verify every intermediate pair, not only the final one.
    pub verify_steps: bool,
}

impl Default for H2cmOptions {
    fn default() -> Self {
        H2cmOptions {
            lmax: None,
            verify_steps: true,
        }
    }
}

/// Two polynomials generating a height-2 ideal with Cohen–Macaulay
/// quotient up to radical.
pub fn construct_h2cm(ideal: &MonomialIdeal) -> Result<GeneratorWitness> {
    construct_h2cm_with(ideal, &H2cmOptions::default())
}

pub fn construct_h2cm_with(ideal: &MonomialIdeal, opts: &H2cmOptions) -> Result<GeneratorWitness> {
    check_h2cm(ideal)?;
    let (q1, q2, provenance, flags) = h2cm_step(ideal, opts)?;
    let mut w = GeneratorWitness::checked(vec![q1, q2], ideal.clone(), provenance)?;
    w.flags = flags;
    Ok(w)
}

type Pair = (Polynomial, Polynomial, Provenance, Vec<String>);

fn h2cm_step(ideal: &MonomialIdeal, opts: &H2cmOptions) -> Result<Pair> {
    let n = ideal.ambient_n();
    if ideal.mu() <= 3 || ideal.indeg()? == 1 {
        let w = base_case_generators(ideal)?;
        let mut it = w.elements.into_iter();
        return Ok((it.next().unwrap(), it.next().unwrap(), Provenance::BaseCase, w.flags));
    }
    let gamma = dual_complex(ideal)?;
    let Some(&(x, h)) = leaf_vertices(&gamma).first() else {
        return Err(Error::precondition("dual complex has no leaf vertex"));
    };
    let face = h.without(x);
    let gamma_bar = remove_leaf(&gamma, x, h);
    let ideal_bar = dual_ideal(&gamma_bar)?;
    debug!("peel x{x} from {{{h}}}: {ideal} -> {ideal_bar}");
    let (q1, q2, _, flags) = h2cm_step(&ideal_bar, opts)?;
    let cone = ConeData::new(&gamma_bar, face, x)?;
    let gens = [q1.clone(), q2.clone()];
    let lmax = opts.lmax.unwrap_or(2 * n as u32);
    let basis = GroebnerBasis::compute_tracked(n, &gens, &MonomialOrder::degrevlex())?;
    let cert = basis.power_certificate(&Polynomial::from_monomial(n, cone.m1), lmax)?;
    let (p1, p2) = cone_lift(&q1, &q2, &cone, &cert)?;
    if opts.verify_steps {
        let report = verify_up_to_radical(&[p1.clone(), p2.clone()], ideal)?;
        if !report.verdict {
            return Err(Error::Verification(format!("cone lift at x{x} fails for {ideal}")));
        }
    }
    Ok((p1, p2, Provenance::ConeLift, flags))
}

/// The dual complex of `ideal` on `{x1..xn}`.
fn dual_complex_full(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let x = VarSet::full(ideal.ambient_n());
    let facets: Vec<VarSet> = ideal.supports().into_iter().map(|s| x.difference(s)).collect();
    SimplicialComplex::with_vertex_set(ideal.ambient_n(), x, &facets)
}

/// `h + 1` elements `m₀, x₀q₁, …, x₀q_h` for the ideal of the cone
/// extension of the dual complex of `ideal` over `face`, with
/// `x₀ = x_{n+1}`.
pub fn ara_plus_one(ideal: &MonomialIdeal, face: VarSet, qs: &[Polynomial]) -> Result<GeneratorWitness> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient_n();
    let gamma = dual_complex_full(ideal)?;
    if !gamma.contains_face(face) {
        return Err(Error::precondition(format!("{{{face}}} is not a face of the dual complex")));
    }
    if qs.iter().any(|q| q.nvars() > n || !polynomial_in_monomial_ideal(q, ideal)) {
        return Err(Error::precondition("input elements must lie in the ideal"));
    }
    let x0 = n + 1;
    let big = n + 1;
    let m0 = SquarefreeMonomial::new(VarSet::full(n).difference(face));
    let target = dual_ideal(&gamma.cone_extension(face, x0)?)?;
    let x0p = Polynomial::var(big, x0);
    let mut elements = vec![Polynomial::from_monomial(big, m0)];
    elements.extend(qs.iter().map(|q| &x0p * &q.extend_vars(big)));
    finish(elements, target, Provenance::Prop31, qs, ideal)
}

/// Verifies the output; when it fails, distinguishes bad input from a
/// construction bug.
fn finish(
    elements: Vec<Polynomial>,
    target: MonomialIdeal,
    provenance: Provenance,
    qs: &[Polynomial],
    input: &MonomialIdeal,
) -> Result<GeneratorWitness> {
    let w = GeneratorWitness::certified(elements, target, provenance)?;
    if w.verified {
        return Ok(w);
    }
    if !verify_up_to_radical(qs, input)?.verdict {
        return Err(Error::precondition(format!(
            "input elements do not generate {input} up to radical"
        )));
    }
    Err(Error::Verification(format!("{provenance} elements failed verification")))
}

/// Squared elements `q̄_i = q_i² = Σ_j ā_ij x_j` with `ā_ij = a_ij q_i`,
/// where `a_ij x_j` collects the terms of `q_i` whose smallest variable
/// outside `G` is `x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BtStep1 {
    pub qbar: Vec<Polynomial>,
    /// Row `i`, column `j` is `ā_ij` for the `j`-th variable of `pg_vars`.
    pub abar: Vec<Vec<Polynomial>>,
    /// The variables of `X ∖ G`, ascending.
    pub pg_vars: Vec<usize>,
}

pub fn bt_step1_normalize(qs: &[Polynomial], facet: VarSet, vertex_set: VarSet) -> Result<BtStep1> {
    let pg = vertex_set.difference(facet);
    let pg_vars = pg.to_vec();
    let mut qbar = Vec::with_capacity(qs.len());
    let mut abar = Vec::with_capacity(qs.len());
    for q in qs {
        let n = q.nvars();
        let mut row = vec![Polynomial::zero(n); pg_vars.len()];
        for (t, c) in q.terms() {
            let j = pg_vars
                .iter()
                .position(|&v| t.exponent(v) > 0)
                .ok_or_else(|| Error::precondition(format!("{q} is not in the prime of the facet {{{facet}}}")))?;
            let v = pg_vars[j];
            let mut e = t.exponents().to_vec();
            e[v - 1] -= 1;
            row[j].add_term(crate::poly::Term::from_exponents(e), c.clone());
        }
        let row: Vec<Polynomial> = row.iter().map(|a| a * q).collect();
        qbar.push(q * q);
        abar.push(row);
    }
    Ok(BtStep1 { qbar, abar, pg_vars })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BtCase {
    /// `h + 1 > t`
    One,
    /// `h + 1 ≤ t`
    Two,
}

/// Working data of the cofactor-matrix construction, in relabeled
/// coordinates where `X ∖ G = {x1..xs}` and `X ∖ F = {x1..xt}`.
#[derive(Debug, Clone)]
pub struct BtData {
    pub h: usize,
    pub s: usize,
    pub t: usize,
    pub facet: VarSet,
    pub case: BtCase,
    /// `relabel[p - 1]` is the original index of relabeled variable `x_p`.
    pub relabel: Vec<usize>,
    /// `A₁` or `A₂`, relabeled.
    pub matrix: Vec<Vec<Polynomial>>,
    /// Output elements, relabeled.
    pub relabeled_elements: Vec<Polynomial>,
    /// Output elements in the original variables.
    pub elements: Vec<Polynomial>,
}

/// Determinant by expansion over column subsets.
pub fn determinant(matrix: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let k = matrix.len();
    let mut dp: Vec<Polynomial> = vec![Polynomial::zero(nvars); 1 << k];
    dp[0] = Polynomial::one(nvars);
    for mask in 0usize..(1 << k) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for col in 0..k {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            let above = (mask >> (col + 1)).count_ones();
            let term = &dp[mask] * &matrix[row][col];
            let next = mask | (1 << col);
            dp[next] = if above % 2 == 0 { &dp[next] + &term } else { &dp[next] - &term };
        }
    }
    dp.pop().unwrap()
}

/// `[X ∖ G] ++ [G ∖ F] ++ [F]`, each ascending.
fn bt_relabeling(x: VarSet, facet: VarSet, face: VarSet) -> Vec<usize> {
    let mut order = x.difference(facet).to_vec();
    order.extend(facet.difference(face).iter());
    order.extend(face.iter());
    order
}

/// The facet `G ⊇ F`: one needing no relabeling if there is one, else the
/// smallest in canonical order.
fn bt_facet(delta: &SimplicialComplex, face: VarSet) -> VarSet {
    let x = delta.vertex_set();
    let candidates: Vec<VarSet> = delta.facets().iter().copied().filter(|g| face.is_subset(*g)).collect();
    candidates
        .iter()
        .copied()
        .find(|&g| bt_relabeling(x, g, face).iter().enumerate().all(|(p, &v)| v == p + 1))
        .unwrap_or(candidates[0])
}

/// Plans and builds the cone elements for `Δ′ = Δ ∪ cone_{x₀} F` with
/// `x₀ = x_{n+1}`.
pub fn bt_plan(delta: &SimplicialComplex, face: VarSet, qs: &[Polynomial]) -> Result<BtData> {
    let n = delta.ambient_n();
    let x = delta.vertex_set();
    if x != VarSet::full(n) {
        return Err(Error::precondition("the complex must have vertex set {x1..xn}"));
    }
    if face == x {
        return Err(Error::precondition("F = X: the ideal of the cone extension is zero"));
    }
    if !delta.contains_face(face) {
        return Err(Error::precondition(format!("{{{face}}} is not a face")));
    }
    let i_delta = stanley_reisner_ideal(delta);
    if qs.iter().any(|q| q.nvars() > n || !polynomial_in_monomial_ideal(q, &i_delta)) {
        return Err(Error::precondition("input elements must lie in the Stanley-Reisner ideal"));
    }
    let facet = bt_facet(delta, face);
    let h = qs.len();
    let big = n + 1;
    let x0 = big;

    let relabel = bt_relabeling(x, facet, face);
    let s = x.difference(facet).len();
    let t = x.difference(face).len();
    let mut forward = vec![0; big];
    for (p, &v) in relabel.iter().enumerate() {
        forward[v - 1] = p + 1;
    }
    forward[big - 1] = big;
    let mut backward = relabel.clone();
    backward.push(big);

    let qs: Vec<Polynomial> = qs.iter().map(|q| q.extend_vars(big)).collect();
    let step1 = bt_step1_normalize(&qs, facet, x)?;
    let ren = |p: &Polynomial| p.rename(&forward, big);
    let qbar: Vec<Polynomial> = step1.qbar.iter().map(ren).collect::<Result<_>>()?;
    // step-1 columns follow X ∖ G ascending, which is relabeled x1..xs
    let abar: Vec<Vec<Polynomial>> = step1
        .abar
        .iter()
        .map(|row| row.iter().map(ren).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let x0p = Polynomial::var(big, x0);
    let var = |p: usize| Polynomial::var(big, p);
    let entry = |i: usize, j: usize, rows: usize| -> Polynomial {
        let base = if i < rows && j < s { abar[i][j].clone() } else { Polynomial::zero(big) };
        if i == j {
            &base + &x0p
        } else {
            base
        }
    };
    let (case, matrix, relabeled_elements) = if h + 1 > t {
        let matrix: Vec<Vec<Polynomial>> = (0..t).map(|i| (0..t).map(|j| entry(i, j, h)).collect()).collect();
        let mut els = vec![&determinant(&matrix, big) - &x0p.pow(t as u32)];
        for (i, qb) in qbar.iter().enumerate() {
            if i < t {
                els.push(qb + &(&x0p * &var(i + 1)));
            } else {
                els.push(qb.clone());
            }
        }
        (BtCase::One, matrix, els)
    } else {
        if s > t - 1 {
            return Err(Error::precondition(format!(
                "{h} elements cannot generate the ideal up to radical: its prime for the facet has height {s}"
            )));
        }
        let size = t - 1;
        let matrix: Vec<Vec<Polynomial>> = (0..size).map(|i| (0..size).map(|j| entry(i, j, h)).collect()).collect();
        let first = if t == 1 {
            // the general element degenerates to x_t when t = 1
            &x0p * &var(t)
        } else {
            &(&determinant(&matrix, big) * &(&x0p + &var(t))) - &x0p.pow(t as u32)
        };
        let mut els = vec![first];
        for (i, qb) in qbar.iter().enumerate() {
            els.push(qb + &(&x0p * &var(i + 1)));
        }
        for i in h..t - 1 {
            els.push(&x0p * &var(i + 1));
        }
        (BtCase::Two, matrix, els)
    };
    let elements = relabeled_elements
        .iter()
        .map(|e| e.rename(&backward, big))
        .collect::<Result<Vec<_>>>()?;
    Ok(BtData {
        h,
        s,
        t,
        facet,
        case,
        relabel,
        matrix,
        relabeled_elements,
        elements,
    })
}

/// `max{h + 1, t}` elements generating the ideal of `Δ ∪ cone_{x₀} F` up to
/// radical, with `x₀ = x_{n+1}` and `t = n − |F|`.
pub fn bt_cone_elements(delta: &SimplicialComplex, face: VarSet, qs: &[Polynomial]) -> Result<GeneratorWitness> {
    let data = bt_plan(delta, face, qs)?;
    let target = stanley_reisner_ideal(&delta.cone_extension(face, delta.ambient_n() + 1)?);
    let provenance = match data.case {
        BtCase::One => Provenance::BtCase1,
        BtCase::Two => Provenance::BtCase2,
    };
    let input = stanley_reisner_ideal(delta);
    if input.is_zero() {
        // nothing to check on the input side
        return GeneratorWitness::checked(data.elements, target, provenance);
    }
    finish(data.elements, target, provenance, qs, &input)
}

/// `m_i⁽ⁿ⁾ = x1⋯xn / (x_{n−i} x_{n−i+1})`.
pub fn line_monomial(n: usize, i: usize) -> SquarefreeMonomial {
    assert!((1..n).contains(&i), "m_{i} is defined for 1 <= i < n");
    SquarefreeMonomial::new(VarSet::full(n).without(n - i).without(n - i + 1))
}

/// The ideal `I_n` dual to the path `x1 – x2 – ⋯ – xn` with its two
/// generators up to radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFamily {
    pub n: usize,
    pub ideal: MonomialIdeal,
    pub q1: Polynomial,
    pub q2: Polynomial,
}

impl LineFamily {
    pub fn m(&self, i: usize) -> SquarefreeMonomial {
        line_monomial(self.n, i)
    }
}

pub const FAMILY_MAX_N: usize = 12;

pub fn adual_line_family(n: usize) -> Result<LineFamily> {
    if !(4..=FAMILY_MAX_N).contains(&n) {
        return Err(Error::precondition(format!("family is defined for 4 <= n <= {FAMILY_MAX_N}, got {n}")));
    }
    let ideal = MonomialIdeal::new(n, &(1..n).map(|i| line_monomial(n, i)).collect::<Vec<_>>())?;
    let mono = |k: usize, i: usize| Polynomial::from_monomial(n, line_monomial(k, i));
    let x = |i: usize| Polynomial::var(n, i);
    let q4 = (mono(4, 2), &mono(4, 1) + &mono(4, 3));
    if n == 4 {
        return Ok(LineFamily { n, ideal, q1: q4.0, q2: q4.1 });
    }
    let m15 = mono(5, 1);
    let q5 = (
        &(&x(5) * &q4.0) - &(&(&x(1) * &x(2)) * &m15),
        &(&x(5) * &q4.1) - &(&(&x(2) * &x(3)) * &m15),
    );
    let (mut prev, mut cur) = (q4, q5);
    for k in 5..n {
        // q^(k+1) = x_{k+1} q^(k) − x_{k−2}^{k−3} q^(k−1) m₁^(k+1)
        let c = &x(k - 2).pow(k as u32 - 3) * &mono(k + 1, 1);
        let next = (
            &(&x(k + 1) * &cur.0) - &(&c * &prev.0),
            &(&x(k + 1) * &cur.1) - &(&c * &prev.1),
        );
        prev = cur;
        cur = next;
    }
    Ok(LineFamily {
        n,
        ideal,
        q1: cur.0,
        q2: cur.1,
    })
}

/// `(m₁⁽ⁿ⁾)^{n−2} = a₁₁ q₁⁽ⁿ⁾ + a₁₂ q₂⁽ⁿ⁾` with the family's closed-form
/// cofactors, over `n` variables.
pub fn family_certificate(n: usize) -> Result<PowerCertificate> {
    let fam = adual_line_family(n)?;
    let (a11, a12) = if n == 4 {
        let p = |a: usize, b: usize| &Polynomial::var(4, a) * &Polynomial::var(4, b);
        (-&p(2, 3), p(1, 2))
    } else {
        let prev = adual_line_family(n - 1)?;
        let c = Polynomial::var(n, n - 2).pow(n as u32 - 3);
        (-&(&c * &prev.q2.extend_vars(n)), &c * &prev.q1.extend_vars(n))
    };
    let m1 = Polynomial::from_monomial(n, fam.m(1));
    PowerCertificate::new(&m1, n as u32 - 2, vec![fam.q1, fam.q2], vec![a11, a12])
}

/// Cone data for the step `I_n → I_{n+1}`: apex `x_{n+1}` over `{x_n}`.
pub fn family_cone(n: usize) -> Result<ConeData> {
    let path: Vec<VarSet> = (1..n).map(|i| VarSet::from_indices([i, i + 1])).collect();
    let gamma = SimplicialComplex::with_vertex_set(n, VarSet::full(n), &path)?;
    ConeData::new(&gamma, VarSet::singleton(n), n + 1)
}

/// Checks that every element is a nonzero polynomial; used by callers that
/// accept user-supplied elements.
pub fn nonzero_elements(qs: &[Polynomial]) -> bool {
    qs.iter().all(|q| !q.is_zero())
}
