//! Independent certification that polynomials generate a squarefree
//! monomial ideal up to radical.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::adual_line_family;
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, VarSet};
use crate::poly::{Coeff, MonomialOrder, Polynomial, RadicalEvidence, RadicalOracle};

/// Every term of `f` is divisible by a generator of `ideal`.
pub fn polynomial_in_monomial_ideal(f: &Polynomial, ideal: &MonomialIdeal) -> bool {
    f.terms().all(|(t, _)| {
        let support = VarSet::from_indices(
            t.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, _)| k + 1),
        );
        ideal.generators().iter().any(|m| m.support().is_subset(support))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "method")]
pub enum CoverageEvidence {
    Power { exponent: u32 },
    Rabinowitsch,
    NotInRadical,
    /// A rational point where every element vanishes but the generator
    /// does not.
    Counterexample,
}

impl CoverageEvidence {
    pub fn holds(self) -> bool {
        matches!(self, CoverageEvidence::Power { .. } | CoverageEvidence::Rabinowitsch)
    }
}

impl From<RadicalEvidence> for CoverageEvidence {
    fn from(e: RadicalEvidence) -> Self {
        match e {
            RadicalEvidence::Power { exponent } => CoverageEvidence::Power { exponent },
            RadicalEvidence::Rabinowitsch => CoverageEvidence::Rabinowitsch,
            RadicalEvidence::NotInRadical => CoverageEvidence::NotInRadical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorCoverage {
    pub generator: String,
    pub in_radical: bool,
    pub evidence: CoverageEvidence,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub containment_ms: f64,
    pub prefilter_ms: f64,
    pub groebner_ms: f64,
    pub total_ms: f64,
}

/// Outcome of [`verify_up_to_radical`]. `verdict` holds exactly when every
/// element lies in the ideal and every generator lies in the radical of
/// the elements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadicalReport {
    pub containment_ok: bool,
    pub coverage: Vec<GeneratorCoverage>,
    pub verdict: bool,
    pub timings: Timings,
}

impl RadicalReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub order: MonomialOrder,
    /// Largest power tried before falling back to the Rabinowitsch test;
    /// `None` means twice the number of variables.
    pub power_limit: Option<u32>,
    /// Run [`fast_negative_check`] before any Gröbner work.
    pub prefilter: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: MonomialOrder::degrevlex(),
            power_limit: None,
            prefilter: true,
            seed: 0,
        }
    }
}

fn common_ring(elements: &[Polynomial], ideal: &MonomialIdeal) -> Result<(usize, Vec<Polynomial>)> {
    let n = elements.iter().map(|e| e.nvars()).max().unwrap_or(0).max(ideal.ambient_n());
    Ok((n, elements.iter().map(|e| e.extend_vars(n)).collect()))
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn verify_up_to_radical(elements: &[Polynomial], ideal: &MonomialIdeal) -> Result<RadicalReport> {
    verify_up_to_radical_with(elements, ideal, &VerifyOptions::default())
}

pub fn verify_up_to_radical_with(
    elements: &[Polynomial],
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
) -> Result<RadicalReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let start = Instant::now();
    let (n, elements) = common_ring(elements, ideal)?;

    let t = Instant::now();
    let containment_ok = elements.iter().all(|e| polynomial_in_monomial_ideal(e, ideal));
    let containment_ms = ms(t);

    let t = Instant::now();
    let refuted = if opts.prefilter {
        fast_negative_check(&elements, ideal, opts.seed)
    } else {
        None
    };
    let prefilter_ms = ms(t);

    let t = Instant::now();
    // a refuted generator is settled; the rest are still decided exactly
    let coverage = exact_coverage(&elements, ideal, n, opts, refuted.map(|cx| cx.generator))?;
    let groebner_ms = ms(t);

    let verdict = containment_ok && coverage.iter().all(|c| c.in_radical);
    Ok(RadicalReport {
        containment_ok,
        coverage,
        verdict,
        timings: Timings {
            containment_ms,
            prefilter_ms,
            groebner_ms,
            total_ms: ms(start),
        },
    })
}

fn exact_coverage(
    elements: &[Polynomial],
    ideal: &MonomialIdeal,
    n: usize,
    opts: &VerifyOptions,
    skip: Option<SquarefreeMonomial>,
) -> Result<Vec<GeneratorCoverage>> {
    let limit = opts.power_limit.unwrap_or(2 * n as u32);
    let oracle = RadicalOracle::new(elements, n, &opts.order, limit)?;
    ideal
        .generators()
        .par_iter()
        .map(|&m| {
            let t = Instant::now();
            let evidence = if Some(m) == skip {
                CoverageEvidence::Counterexample
            } else {
                oracle.query(&Polynomial::from_monomial(n, m))?.into()
            };
            Ok(GeneratorCoverage {
                generator: m.to_string(),
                in_radical: evidence.holds(),
                evidence,
                millis: ms(t),
            })
        })
        .collect()
}

/// A point where every element vanishes but `generator` does not, which
/// proves `generator ∉ √(elements)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub generator: SquarefreeMonomial,
    pub point: Vec<Coeff>,
}

const SAMPLE_TRIALS: usize = 50;
const SAMPLE_BOUND: i64 = 97;

/// Cheap refutation of coverage: for each generator `m`, samples random
/// rational points with the coordinates outside `supp m` set to zero and
/// the others nonzero. If all elements vanish there, `m` is not in the
/// radical. `None` is inconclusive.
pub fn fast_negative_check(elements: &[Polynomial], ideal: &MonomialIdeal, seed: u64) -> Option<Counterexample> {
    let n = elements.iter().map(|e| e.nvars()).max().unwrap_or(0).max(ideal.ambient_n());
    let first = *ideal.generators().first()?;
    if elements.is_empty() {
        let point = vec![Coeff::from_integer(1.into()); n];
        return Some(Counterexample { generator: first, point });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ideal.generators() {
        for _ in 0..SAMPLE_TRIALS {
            let point: Vec<Coeff> = (1..=n)
                .map(|i| {
                    if m.support().contains(i) {
                        let mut num = 0;
                        while num == 0 {
                            num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
                        }
                        let den = rng.gen_range(1..=SAMPLE_BOUND);
                        Coeff::new(num.into(), den.into())
                    } else {
                        Coeff::zero()
                    }
                })
                .collect();
            if elements.iter().all(|e| e.evaluate(&point).is_zero()) {
                return Some(Counterexample { generator: m, point });
            }
        }
    }
    None
}

/// Checks `(m₁⁽ⁿ⁾)^{n−2} = −x_{n−2}^{n−3} q₂⁽ⁿ⁻¹⁾ q₁⁽ⁿ⁾ + x_{n−2}^{n−3} q₁⁽ⁿ⁻¹⁾ q₂⁽ⁿ⁾`
/// for the line family.
pub fn check_family_identity(n: usize) -> Result<bool> {
    if !(5..=9).contains(&n) {
        return Err(Error::precondition(format!("family identity is checked for 5 <= n <= 9, got {n}")));
    }
    let prev = adual_line_family(n - 1)?;
    let cur = adual_line_family(n)?;
    let lift = |p: &Polynomial| p.extend_vars(n);
    let (p1, p2) = (lift(&prev.q1), lift(&prev.q2));
    let m1 = Polynomial::from_monomial(n, cur.m(1));
    let coeff = Polynomial::var(n, n - 2).pow(n as u32 - 3);
    let lhs = m1.pow(n as u32 - 2);
    let rhs = &(&(-&coeff) * &(&p2 * &cur.q1)) + &(&coeff * &(&p1 * &cur.q2));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Some(n)).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn i4() -> MonomialIdeal {
        ideal(4, &[&[1, 2], &[1, 4], &[3, 4]])
    }

    #[test]
    fn monomial_containment() {
        assert!(polynomial_in_monomial_ideal(&p("x1*x2 + x3*x4", 4), &i4()));
        assert!(!polynomial_in_monomial_ideal(&p("x1*x2 + x1", 2), &ideal(2, &[&[1, 2]])));
        assert!(polynomial_in_monomial_ideal(&Polynomial::zero(3), &ideal(3, &[&[1]])));
    }

    #[test]
    fn pair_generates_line_ideal() {
        let r = verify_up_to_radical(&[p("x1*x4", 4), p("x1*x2 + x3*x4", 4)], &i4()).unwrap();
        assert!(r.verdict && r.containment_ok);
        assert_eq!(r.coverage.len(), 3);
        let json = r.to_json();
        assert_eq!(json["verdict"], true);
        assert!(json["coverage"][0]["evidence"]["method"].is_string());
    }

    #[test]
    fn single_element_is_not_enough() {
        for prefilter in [true, false] {
            let opts = VerifyOptions {
                prefilter,
                ..VerifyOptions::default()
            };
            let r = verify_up_to_radical_with(&[p("x1*x4", 4)], &i4(), &opts).unwrap();
            assert!(!r.verdict);
            assert!(r.containment_ok);
            assert!(r.coverage.iter().any(|c| c.generator == "x1*x2" && !c.in_radical));
        }
    }

    #[test]
    fn variables_generate_themselves() {
        let r = verify_up_to_radical(&[p("x1", 2), p("x2", 2)], &ideal(2, &[&[1], &[2]])).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn sampling_refutes_single_element() {
        let q1 = p("x1*x4", 4);
        let cx = fast_negative_check(std::slice::from_ref(&q1), &i4(), 7).expect("counterexample");
        assert!(q1.evaluate(&cx.point).is_zero());
        assert!(!Polynomial::from_monomial(4, cx.generator).evaluate(&cx.point).is_zero());
        assert!(fast_negative_check(&[p("x1*x4", 4), p("x1*x2 + x3*x4", 4)], &i4(), 7).is_none());
        assert!(fast_negative_check(&[], &i4(), 7).is_some());
    }

    #[test]
    fn family_identity_small_cases() {
        assert!(check_family_identity(5).unwrap());
        assert!(check_family_identity(6).unwrap());
        assert!(check_family_identity(4).is_err());
    }
}
