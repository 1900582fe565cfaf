use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::complex::CellComplex;
use super::snf::invariant_factors;
use super::ChainError;

/// Integral homology: Betti numbers and torsion coefficients per dimension.
///
/// The empty complex has empty homology (its reduced homology in degree -1
/// is not represented here).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub betti: Vec<u64>,
    pub torsion: Vec<Vec<u64>>,
}

impl HomologyResult {
    pub fn sphere(n: usize) -> Self {
        let mut betti = vec![0; n + 1];
        if n == 0 {
            betti[0] = 2;
        } else {
            betti[0] = 1;
            betti[n] = 1;
        }
        HomologyResult { betti, torsion: vec![Vec::new(); n + 1] }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyResult {
    /// `H0=Z H3=Z`, torsion as `Z/2`, direct sums as `Z^2+Z/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (p, &b) in self.betti.iter().enumerate() {
            let mut summands = Vec::new();
            match b {
                0 => {}
                1 => summands.push("Z".to_string()),
                b => summands.push(format!("Z^{b}")),
            }
            summands.extend(self.torsion[p].iter().map(|t| format!("Z/{t}")));
            if !summands.is_empty() {
                parts.push(format!("H{p}={}", summands.join("+")));
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Cellular homology with integer coefficients.
pub fn homology(k: &CellComplex) -> Result<HomologyResult, ChainError> {
    k.ensure_valid()?;
    let Some(top) = k.dimension() else {
        return Ok(HomologyResult::default());
    };
    let positions = k.positions();
    let counts = k.f_vector();
    // factors[p] = invariant factors of ∂_p, p = 1..=top
    let mut factors = vec![Vec::new(); top + 2];
    for (p, slot) in factors.iter_mut().enumerate().take(top + 1).skip(1) {
        *slot = invariant_factors(&k.boundary_matrix_with(p, &positions));
    }
    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let kernel = counts[p] - factors[p].len();
        betti.push((kernel - factors[p + 1].len()) as u64);
        let tors = factors[p + 1]
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().ok_or(ChainError::TorsionOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        torsion.push(tors);
    }
    Ok(HomologyResult { betti, torsion })
}

/// Betti numbers `(1,0,...,0,1)` in degrees `0..=n` (or `(2)` for `n = 0`)
/// and no torsion.
pub fn is_homology_sphere(h: &HomologyResult, n: usize) -> bool {
    *h == HomologyResult::sphere(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::complex::{face, Cell};

    fn circle() -> CellComplex {
        CellComplex::new("circle", vec![Cell::new("v", 0, vec![]), Cell::new("e", 1, vec![])])
    }

    #[test]
    fn circle_homology() {
        let h = homology(&circle()).unwrap();
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.is_torsion_free());
        assert!(is_homology_sphere(&h, 1));
        assert_eq!(h.to_string(), "H0=Z H1=Z");
    }

    #[test]
    fn two_points() {
        let k = CellComplex::new("s0", vec![Cell::new("a", 0, vec![]), Cell::new("b", 0, vec![])]);
        let h = homology(&k).unwrap();
        assert_eq!(h.betti, vec![2]);
        assert!(is_homology_sphere(&h, 0));
    }

    #[test]
    fn sphere_predicate() {
        let circle = HomologyResult { betti: vec![1, 1], torsion: vec![vec![], vec![]] };
        assert!(is_homology_sphere(&circle, 1));
        let wrong = HomologyResult { betti: vec![1, 0, 1], torsion: vec![vec![]; 3] };
        assert!(!is_homology_sphere(&wrong, 1));
        assert!(is_homology_sphere(&HomologyResult { betti: vec![2], torsion: vec![vec![]] }, 0));
    }

    #[test]
    fn projective_plane_has_torsion() {
        // one cell per dimension, ∂e2 = 2 e1
        let k = CellComplex::new(
            "rp2",
            vec![Cell::new("v", 0, vec![]), Cell::new("e", 1, vec![]), Cell::new("f", 2, vec![face("e", 2)])],
        );
        let h = homology(&k).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], vec![2], vec![]]);
        assert_eq!(h.to_string(), "H0=Z H1=Z/2");
    }

    #[test]
    fn invalid_complex_is_rejected() {
        let k = CellComplex::new("bad", vec![Cell::new("e", 1, vec![face("x", 1)])]);
        assert!(matches!(homology(&k), Err(ChainError::Invalid { .. })));
    }

    #[test]
    fn empty_complex() {
        assert_eq!(homology(&CellComplex::empty("void")).unwrap(), HomologyResult::default());
    }
}
