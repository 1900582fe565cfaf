//! Splitting of the boundary by change in complementary first-homology rank.
//!
//! Removing one arc from a family either keeps the rank of `H1` of the
//! complement or raises it by one. The first kind of incidence goes into
//! `d1`, the second into `d2`. With `v = -rank` and `u = p - v`, `d1` has
//! bidegree `(-1, 0)` and `d2` has bidegree `(0, -1)`.

use std::collections::BTreeMap;

use super::complex::CellComplex;
use super::matrix::SparseMatrix;
use super::ChainError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSplit {
    /// `d1[p]` and `d2[p]` map `C_p -> C_{p-1}`; index 0 is the zero map.
    pub d1: Vec<SparseMatrix>,
    pub d2: Vec<SparseMatrix>,
    /// Cell id to `(u, v)`.
    pub bigrading: BTreeMap<String, (i64, i64)>,
}

/// Outcome of the three matrix identities on a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitIdentities {
    pub sums_to_boundary: bool,
    pub d1_squared_zero: bool,
    pub d2_squared_zero: bool,
    pub anticommute: bool,
}

impl SplitIdentities {
    pub fn all_hold(&self) -> bool {
        self.sums_to_boundary && self.d1_squared_zero && self.d2_squared_zero && self.anticommute
    }
}

impl BigradedSplit {
    pub fn d2_vanishes(&self) -> bool {
        self.d2.iter().all(SparseMatrix::is_zero)
    }

    /// Checks `d1 + d2 = ∂`, `d1 d1 = 0`, `d2 d2 = 0` and `d1 d2 + d2 d1 = 0`
    /// in every degree.
    pub fn identities(&self, k: &CellComplex) -> SplitIdentities {
        let top = self.d1.len();
        let mut out = SplitIdentities { sums_to_boundary: true, d1_squared_zero: true, d2_squared_zero: true, anticommute: true };
        for p in 0..top {
            if self.d1[p].add(&self.d2[p]) != k.boundary_matrix(p) {
                out.sums_to_boundary = false;
            }
        }
        for p in 2..top {
            out.d1_squared_zero &= self.d1[p - 1].mul(&self.d1[p]).is_zero();
            out.d2_squared_zero &= self.d2[p - 1].mul(&self.d2[p]).is_zero();
            let anti = self.d1[p - 1].mul(&self.d2[p]).add(&self.d2[p - 1].mul(&self.d1[p]));
            out.anticommute &= anti.is_zero();
        }
        out
    }
}

pub fn split_boundary(k: &CellComplex) -> Result<BigradedSplit, ChainError> {
    k.ensure_valid()?;
    let mut bigrading = BTreeMap::new();
    for cell in k.cells() {
        let rank = cell.h1_rank().ok_or_else(|| ChainError::MissingRank { cell: cell.id.clone() })?;
        let v = -i64::from(rank);
        bigrading.insert(cell.id.clone(), (cell.dim as i64 - v, v));
    }
    let positions = k.positions();
    let top = k.dimension().map_or(0, |d| d + 1);
    let mut d1 = Vec::with_capacity(top);
    let mut d2 = Vec::with_capacity(top);
    for p in 0..top {
        let rows = if p == 0 { 0 } else { k.cells_of_dim(p - 1).count() };
        let cols = k.cells_of_dim(p).count();
        let mut first = Vec::new();
        let mut second = Vec::new();
        for cell in k.cells_of_dim(p) {
            let cell_rank = cell.h1_rank().expect("checked above");
            let j = positions[cell.id.as_str()];
            for (face, coeff) in &cell.boundary {
                let face_rank = k.cell(face).and_then(|f| f.h1_rank()).expect("checked above");
                let entry = (positions[face.as_str()], j, *coeff);
                match i64::from(face_rank) - i64::from(cell_rank) {
                    0 => first.push(entry),
                    1 => second.push(entry),
                    jump => {
                        return Err(ChainError::RankJump { cell: cell.id.clone(), face: face.clone(), jump });
                    }
                }
            }
        }
        d1.push(SparseMatrix::from_triplets(rows, cols, first));
        d2.push(SparseMatrix::from_triplets(rows, cols, second));
    }
    Ok(BigradedSplit { d1, d2, bigrading })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::complex::{face, Cell, CellMeta};

    #[test]
    fn uniform_rank_puts_everything_in_d1() {
        let k = CellComplex::new(
            "seg",
            vec![
                Cell::new("a", 0, vec![]).with_meta(CellMeta::rank(0)),
                Cell::new("b", 0, vec![]).with_meta(CellMeta::rank(0)),
                Cell::new("e", 1, vec![face("a", -1), face("b", 1)]).with_meta(CellMeta::rank(0)),
            ],
        );
        let split = split_boundary(&k).unwrap();
        assert!(split.d2_vanishes());
        assert!(split.identities(&k).all_hold());
        assert_eq!(split.bigrading["e"], (1, 0));
    }

    #[test]
    fn rank_jump_of_two_is_rejected() {
        let k = CellComplex::new(
            "jump",
            vec![
                Cell::new("a", 0, vec![]).with_meta(CellMeta::rank(2)),
                Cell::new("b", 0, vec![]).with_meta(CellMeta::rank(0)),
                Cell::new("e", 1, vec![face("a", -1), face("b", 1)]).with_meta(CellMeta::rank(0)),
            ],
        );
        assert!(matches!(split_boundary(&k), Err(ChainError::RankJump { jump: 2, .. })));
    }

    #[test]
    fn missing_rank_is_rejected() {
        let k = CellComplex::new("bare", vec![Cell::new("a", 0, vec![])]);
        assert!(matches!(split_boundary(&k), Err(ChainError::MissingRank { .. })));
    }
}
