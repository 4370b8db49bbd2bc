//! Exact multivariate polynomials over the rationals.

mod groebner;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::SquarefreeMonomial;

pub use groebner::{
    buchberger, divide_with_cofactors, membership, power_membership, radical_membership, Division, GroebnerBasis,
    Membership, MembershipCertificate, PowerCertificate, RadicalEvidence, RadicalOracle,
};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;

pub type Coeff = BigRational;

pub fn rational(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// An exponent vector; slot `k` holds the exponent of `x_{k+1}`.
///
/// The derived `Ord` is lexicographic with `x1 > x2 > ...`; it is only used
/// as a storage key, never as the monomial order of a computation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Term(exps)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index - 1] = 1;
        Term(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Term) -> Term {
        Term(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Term {
        Term(self.0.iter().map(|e| e * k).collect())
    }

    fn resized(&self, nvars: usize) -> Term {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        Term(e)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `x1..x_nvars` with exact rational coefficients.
///
/// Arithmetic operators panic when the operands have different `nvars`;
/// the `try_*` methods report [`Error::AmbientMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Term, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(nvars, Term::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!((1..=nvars).contains(&index), "x{index} outside x1..x{nvars}");
        Self::term(nvars, Term::var(nvars, index), Coeff::one())
    }

    pub fn term(nvars: usize, term: Term, c: Coeff) -> Self {
        assert_eq!(term.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(term, c);
        }
        Polynomial { nvars, terms }
    }

    /// The squarefree monomial as a polynomial in `nvars` variables.
    pub fn from_monomial(nvars: usize, m: SquarefreeMonomial) -> Self {
        assert!(m.support().max_index() <= nvars);
        let mut e = vec![0; nvars];
        for i in m.support().iter() {
            e[i - 1] = 1;
        }
        Self::term(nvars, Term(e), Coeff::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Term, Coeff)>>(nvars: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (t, c) in terms {
            assert_eq!(t.nvars(), nvars);
            p.add_term(t, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|t| t.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Term) -> Coeff {
        self.terms.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|t| t.degree()).max()
    }

    /// Largest exponent of `x_index` across terms.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|t| t.exponent(index)).max().unwrap_or(0)
    }

    /// Variables occurring with nonzero exponent.
    pub fn used_variables(&self) -> Vec<usize> {
        (1..=self.nvars).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn add_term(&mut self, t: Term, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading term and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Term, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Same polynomial in a ring with at least as many variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars, "cannot shrink the variable range");
        if nvars == self.nvars {
            return self.clone();
        }
        Polynomial {
            nvars,
            terms: self.terms.iter().map(|(t, c)| (t.resized(nvars), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, t: &Term, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(s, a)| (s.mul(t), a * c)).collect(),
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.mul(t), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `x_index` by `value`.
    pub fn substitute(&self, index: usize, value: &Polynomial) -> Result<Polynomial> {
        self.check_same(value)?;
        if !(1..=self.nvars).contains(&index) {
            return Err(Error::VariableOutOfRange {
                index,
                ambient: self.nvars,
            });
        }
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.nvars)];
        let mut out = Polynomial::zero(self.nvars);
        for (t, c) in &self.terms {
            let e = t.exponent(index) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = t.clone();
            rest.0[index - 1] = 0;
            out = &out + &powers[e].mul_term(&rest, c);
        }
        Ok(out)
    }

    /// Renames `x_i` to `x_{map[i-1]}` in a ring with `nvars` variables.
    pub fn rename(&self, map: &[usize], nvars: usize) -> Result<Polynomial> {
        if map.len() < self.nvars {
            return Err(Error::precondition("renaming map shorter than the variable range"));
        }
        let mut out = Polynomial::zero(nvars);
        for (t, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (k, &x) in t.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let target = map[k];
                if target == 0 || target > nvars {
                    return Err(Error::VariableOutOfRange {
                        index: target,
                        ambient: nvars,
                    });
                }
                e[target - 1] += x;
            }
            out.add_term(Term(e), c.clone());
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert!(point.len() >= self.nvars, "point has too few coordinates");
        let mut total = Coeff::zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (k, &e) in t.0.iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[k].clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Terms in descending degree-reverse-lexicographic order, the order
    /// used for printing.
    pub fn sorted_terms(&self) -> Vec<(&Term, &Coeff)> {
        let order = MonomialOrder::degrevlex();
        let mut v: Vec<(&Term, &Coeff)> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if t.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{abs}*{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s, None)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials over different variable ranges")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials over different variable ranges")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials over different variable ranges")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Some(n)).unwrap()
    }

    #[test]
    fn product_distributes() {
        let f = p("x1*x2 + x3*x4", 5);
        let g = p("x5", 5);
        assert_eq!(&f * &g, p("x1*x2*x5 + x3*x4*x5", 5));
    }

    #[test]
    fn lifted_pair_expands_as_displayed() {
        // x5*q2 - x2*x3*m0 with q2 = x1x2 + x3x4, m0 = x1x2x3
        let q2 = p("x1*x2 + x3*x4", 5);
        let m0 = p("x1*x2*x3", 5);
        let lifted = &(&p("x5", 5) * &q2) - &(&p("x2*x3", 5) * &m0);
        assert_eq!(lifted, p("x1*x2*x5 + x3*x4*x5 - x1*x2^2*x3^2", 5));
    }

    #[test]
    fn ambient_mismatch_reported() {
        let a = p("x1", 2);
        let b = p("x1", 3);
        assert_eq!(a.try_add(&b), Err(Error::AmbientMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn substitute_and_power() {
        let f = p("x1^2 + x2", 2);
        let g = f.substitute(1, &p("x2 + 1", 2)).unwrap();
        assert_eq!(g, p("x2^2 + 3*x2 + 1", 2));
        assert_eq!(p("x1 + x2", 2).pow(3), p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2));
        assert_eq!(p("x1 - 7/2", 1).pow(0), Polynomial::one(1));
    }

    #[test]
    fn rename_permutes_variables() {
        let f = p("x1*x2^2 + 3*x3", 3);
        let g = f.rename(&[2, 3, 1], 3).unwrap();
        assert_eq!(g, p("x2*x3^2 + 3*x1", 3));
        assert_eq!(g.rename(&[3, 1, 2], 3).unwrap(), f);
    }

    #[test]
    fn evaluate_at_point() {
        let f = p("x1*x2 - 1/2*x3^2", 3);
        assert_eq!(f.evaluate(&[integer(2), integer(3), integer(2)]), integer(4));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-x1", "3/2*x1^2*x3 - x2 + 7", "x1*x4*x5 - x1^2*x2^2*x3", "-5/3"] {
            let f = p(s, 5);
            assert_eq!(p(&f.to_string(), 5), f);
        }
    }

    #[test]
    fn leading_term_respects_order() {
        let f = p("x1*x3 + x2^2", 3);
        let (t, _) = f.leading_term(&MonomialOrder::degrevlex()).unwrap();
        assert_eq!(t.to_string(), "x2^2");
        let (t, _) = f.leading_term(&MonomialOrder::lex()).unwrap();
        assert_eq!(t.to_string(), "x1*x3");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..6, 1i64..4), 0..5).prop_map(
                move |ts| Polynomial::from_terms(n, ts.into_iter().map(|(e, a, b)| (Term::from_exponents(e), rational(a, b)))),
            )
        }

        proptest! {
            #[test]
            fn add_then_subtract(f in arb_poly(3), g in arb_poly(3)) {
                prop_assert_eq!(&(&f + &g) - &g, f);
            }

            #[test]
            fn multiplication_commutes_and_distributes(f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            }

            #[test]
            fn print_parse_round_trip(f in arb_poly(4)) {
                prop_assert_eq!(parse_polynomial(&f.to_string(), Some(4)).unwrap(), f);
            }
        }
    }
}
