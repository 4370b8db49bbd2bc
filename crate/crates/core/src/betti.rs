//! Graded Betti numbers of Stanley–Reisner rings via Hochster's formula,
//!
//! `β_{i,j}(R/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W; K)`,
//!
//! with reduced homology from exact ranks of boundary matrices.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, VarSet};
use crate::simplicial::SimplicialComplex;

/// Hochster's formula enumerates all `2^n` vertex subsets.
pub const MAX_BETTI_VARS: usize = 16;

/// Coefficient field for homology: the rationals or `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals; anything else must be prime.
    pub fn from_char(ch: u64) -> Result<Self> {
        match ch {
            0 => Ok(Field::Rationals),
            p if is_prime(p) && p < (1 << 31) => Ok(Field::Prime(p)),
            p => Err(Error::precondition(format!("characteristic {p} is not 0 or a prime below 2^31"))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `entries[(i, j)] = β_{i,j}(R/I)`; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    #[serde(rename = "char")]
    characteristic: u64,
    entries: Vec<(usize, usize, u64)>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Projective dimension of `R/I`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `min { j : β_{1,j} ≠ 0 }`; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<usize> {
        self.entries.keys().filter(|&&(i, _)| i == 1).map(|&(_, j)| j).min()
    }

    /// Regularity of the ideal, `max { j - i + 1 : β_{i,j}(R/I) ≠ 0, i ≥ 1 }`.
    pub fn reg(&self) -> Option<usize> {
        self.entries
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .map(|&(i, j)| j + 1 - i)
            .max()
    }

    pub fn has_linear_resolution(&self) -> bool {
        matches!((self.reg(), self.indeg()), (Some(r), Some(d)) if r == d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = BettiJson {
            characteristic: self.field.characteristic(),
            entries: self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

/// Betti table of `R/I_Δ` over `K[vertex_set]`.
pub fn hochster_betti(complex: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    betti_from_facets(complex.vertex_set(), complex.facets(), field)
}

/// Betti table of `R/I` over `K[x1..xn]`.
///
/// Works for any squarefree ideal: variables lying in `I` are simply not
/// faces of the associated complex.
pub fn ideal_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let ground = VarSet::full(ideal.ambient_n());
    let facets: Vec<VarSet> = if ideal.is_zero() {
        vec![ground]
    } else {
        ideal
            .prime_decomposition()?
            .into_iter()
            .map(|p| ground.difference(p.variables))
            .collect()
    };
    betti_from_facets(ground, &facets, field)
}

fn betti_from_facets(ground: VarSet, facets: &[VarSet], field: Field) -> Result<BettiTable> {
    if ground.len() > MAX_BETTI_VARS {
        return Err(Error::precondition(format!(
            "Betti computation limited to {MAX_BETTI_VARS} variables, got {}",
            ground.len()
        )));
    }
    let subsets: Vec<VarSet> = ground.subsets().collect();
    let partial: Vec<Vec<((usize, usize), u64)>> = subsets
        .par_iter()
        .map(|&w| {
            let j = w.len();
            reduced_homology(w, facets, field)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                // homology index d = j - i - 1, stored at position d + 1
                .filter_map(|(pos, h)| {
                    let d = pos as isize - 1;
                    let i = j as isize - d - 1;
                    (i >= 0).then_some(((i as usize, j), h))
                })
                .collect()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for ((i, j), h) in partial.into_iter().flatten() {
        *entries.entry((i, j)).or_insert(0) += h;
    }
    Ok(BettiTable { field, entries })
}

/// Reduced Betti numbers of `Δ|_W`; position `d + 1` holds `dim H̃_d`.
fn reduced_homology(w: VarSet, facets: &[VarSet], field: Field) -> Vec<u64> {
    let mut faces: HashSet<u64> = HashSet::new();
    for f in facets {
        let r = f.intersection(w);
        for s in r.subsets() {
            faces.insert(s.mask());
        }
    }
    let top = faces.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    // by_size[k] = faces with k vertices (dimension k - 1), sorted for indexing
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for m in faces {
        by_size[m.count_ones() as usize].push(m);
    }
    for v in &mut by_size {
        v.sort_unstable();
    }
    // ranks[k] = rank of ∂ from size-k faces to size-(k-1) faces, k ≥ 1
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = boundary_rank(&by_size[k], &by_size[k - 1], field);
    }
    (0..=top)
        .map(|k| (by_size[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

fn boundary_rank(faces: &[u64], lower: &[u64], field: Field) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<u64, usize> =
        lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    // rows: faces, columns: codimension-one faces
    let rows: Vec<Vec<(usize, i64)>> = faces
        .iter()
        .map(|&f| {
            let mut entries = Vec::new();
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries.push((index[&(f & !bit)], sign));
                pos += 1;
            }
            entries
        })
        .collect();
    match field {
        Field::Rationals => rank_rational(&rows, lower.len()),
        Field::Prime(p) => rank_mod_p(&rows, lower.len(), p),
    }
}

/// Fraction-free (Bareiss) elimination over the integers.
fn rank_rational(rows: &[Vec<(usize, i64)>], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); ncols];
            for &(c, v) in r {
                dense[c] = BigInt::from(v);
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn rank_mod_p(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![0u64; ncols];
            for &(c, v) in r {
                dense[c] = v.rem_euclid(p as i64) as u64;
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for r in rank + 1..nrows {
            let factor = m[r][col] * inv % p;
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                m[r][c] = (m[r][c] + p - factor * m[rank][c] % p) % p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Projective dimension of `R/I`.
pub fn pd(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(ideal_betti(ideal, field)?.pd())
}

/// Regularity of the ideal `I` (not of `R/I`).
pub fn reg(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    ideal_betti(ideal, field)?.reg().ok_or(Error::ZeroIdeal)
}

pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(ideal_betti(ideal, field)?.has_linear_resolution())
}

/// `R/I` is Cohen–Macaulay iff `pd R/I = height I` (Auslander–Buchsbaum).
pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    let height = ideal.height()?;
    Ok(ideal_betti(ideal, field)?.pd() == height)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::complex_of_ideal;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, gens.iter().map(|g| g.iter().copied())).unwrap()
    }

    #[test]
    fn principal_ideal_table() {
        let t = ideal_betti(&ideal(2, &[&[1, 2]]), Field::Rationals).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.pd(), 1);
    }

    #[test]
    fn hollow_triangle_table() {
        let hollow = complex_of_ideal(&ideal(3, &[&[1, 2, 3]])).unwrap();
        let t = hochster_betti(&hollow, Field::Rationals).unwrap();
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.pd(), 1);
        assert!(t.has_linear_resolution());
        assert_eq!(t.reg(), Some(3));
    }

    #[test]
    fn line_ideal_is_cohen_macaulay() {
        let line = ideal(4, &[&[1, 2], &[1, 4], &[3, 4]]);
        assert_eq!(pd(&line, Field::Rationals).unwrap(), 2);
        assert!(is_cohen_macaulay(&line, Field::Rationals).unwrap());
        let dual = line.alexander_dual().unwrap();
        assert!(has_linear_resolution(&dual, Field::Rationals).unwrap());
        assert_eq!(reg(&dual, Field::Rationals).unwrap(), 2);
        // Hilbert–Burch shape: 1, 3, 2
        let t = ideal_betti(&line, Field::Rationals).unwrap();
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 2);
    }

    #[test]
    fn koszul_complete_intersection() {
        let ci = ideal(4, &[&[1, 3], &[2, 4]]);
        let t = ideal_betti(&ci, Field::Rationals).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert!(is_cohen_macaulay(&ci, Field::Rationals).unwrap());
        assert!(!t.has_linear_resolution());
    }

    #[test]
    fn non_cm_ideal() {
        // (x1, x2) ∩ (x3, x4): two disjoint segments, disconnected in dimension 1
        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert!(!is_cohen_macaulay(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn principal_cubic_is_linear() {
        let i = ideal(3, &[&[1, 2, 3]]);
        assert!(has_linear_resolution(&i, Field::Rationals).unwrap());
        assert_eq!(reg(&i, Field::Rationals).unwrap(), 3);
    }

    #[test]
    fn field_parsing() {
        assert_eq!(Field::from_char(0).unwrap(), Field::Rationals);
        assert_eq!(Field::from_char(3).unwrap(), Field::Prime(3));
        assert!(Field::from_char(4).is_err());
    }

    #[test]
    fn json_shape() {
        let t = ideal_betti(&ideal(2, &[&[1, 2]]), Field::Rationals).unwrap();
        assert_eq!(t.to_json().to_string(), r#"{"char":0,"entries":[[0,0,1],[1,2,1]]}"#);
    }

    #[test]
    fn rank_agrees_across_fields_on_small_matrix() {
        let rows = vec![vec![(0, 1), (1, -1)], vec![(1, 1), (2, -1)], vec![(0, 1), (2, -1)]];
        assert_eq!(rank_rational(&rows, 3), 2);
        assert_eq!(rank_mod_p(&rows, 3, 2), 2);
        assert_eq!(rank_mod_p(&rows, 3, 3), 2);
    }

    #[test]
    fn oversized_ground_set_rejected() {
        let i = MonomialIdeal::from_supports(17, [[1, 17]]).unwrap();
        assert!(ideal_betti(&i, Field::Rationals).is_err());
    }
}
