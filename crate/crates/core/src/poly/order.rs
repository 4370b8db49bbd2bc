use std::cmp::Ordering;

use super::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

/// A monomial order on exponent vectors.
///
/// `precedence` lists variable indices (1-based) from greatest to least;
/// when absent the natural order `x1 > x2 > ...` is used. `leading_block`
/// compares one variable's exponent before anything else, giving a block
/// order that eliminates that variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Option<Vec<usize>>,
    leading_block: Option<usize>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::degrevlex()
    }
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            precedence: None,
            leading_block: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: None,
            leading_block: None,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Panics unless `precedence` is a permutation of `1..=precedence.len()`.
    #[must_use]
    pub fn with_precedence(mut self, precedence: Vec<usize>) -> Self {
        let mut sorted = precedence.clone();
        sorted.sort_unstable();
        assert!(
            sorted.iter().enumerate().all(|(k, &v)| v == k + 1),
            "precedence must be a permutation of 1..=n"
        );
        self.precedence = Some(precedence);
        self
    }

    /// Block order in which `var` outranks every other variable.
    #[must_use]
    pub fn with_leading_block(mut self, var: usize) -> Self {
        self.leading_block = Some(var);
        self
    }

    pub fn leading_block(&self) -> Option<usize> {
        self.leading_block
    }

    /// Variable slots (0-based) from greatest to least, skipping the block
    /// variable.
    fn slots(&self, len: usize) -> Vec<usize> {
        let skip = self.leading_block.map(|v| v - 1);
        let mut slots: Vec<usize> = match &self.precedence {
            Some(p) => p.iter().map(|v| v - 1).filter(|&s| s < len).collect(),
            None => (0..len).collect(),
        };
        // variables beyond the precedence list follow in natural order
        let covered = slots.len();
        if covered < len {
            let present: std::collections::HashSet<usize> = slots.iter().copied().collect();
            slots.extend((0..len).filter(|s| !present.contains(s)));
        }
        slots.retain(|&s| Some(s) != skip);
        slots
    }

    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), eb.len());
        if let Some(v) = self.leading_block {
            let s = v - 1;
            let (x, y) = (ea.get(s).copied().unwrap_or(0), eb.get(s).copied().unwrap_or(0));
            if x != y {
                return x.cmp(&y);
            }
        }
        if self.precedence.is_none() {
            let skip = self.leading_block.map(|v| v - 1).unwrap_or(usize::MAX);
            return match self.kind {
                OrderKind::Lex => {
                    for s in (0..ea.len()).filter(|&s| s != skip) {
                        if ea[s] != eb[s] {
                            return ea[s].cmp(&eb[s]);
                        }
                    }
                    Ordering::Equal
                }
                OrderKind::DegRevLex => {
                    let strip = |e: &[u32]| -> u64 {
                        let total: u64 = e.iter().map(|&x| x as u64).sum();
                        total - e.get(skip).copied().unwrap_or(0) as u64
                    };
                    let (da, db) = (strip(ea), strip(eb));
                    if da != db {
                        return da.cmp(&db);
                    }
                    for s in (0..ea.len()).rev().filter(|&s| s != skip) {
                        if ea[s] != eb[s] {
                            return eb[s].cmp(&ea[s]);
                        }
                    }
                    Ordering::Equal
                }
            };
        }
        let slots = self.slots(ea.len());
        match self.kind {
            OrderKind::Lex => {
                for &s in &slots {
                    if ea[s] != eb[s] {
                        return ea[s].cmp(&eb[s]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let da: u64 = slots.iter().map(|&s| ea[s] as u64).sum();
                let db: u64 = slots.iter().map(|&s| eb[s] as u64).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &s in slots.iter().rev() {
                    if ea[s] != eb[s] {
                        return eb[s].cmp(&ea[s]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
