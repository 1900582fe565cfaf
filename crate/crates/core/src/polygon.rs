//! Chord families of a convex polygon and the polygon arc complex.
//!
//! The arc complex of an `n`-gon has one `p`-simplex for each set of `p + 1`
//! pairwise non-crossing diagonals. Chords may share endpoints.

use std::fmt;

use thiserror::Error;

use crate::chain::{CellComplex, CellMeta, SimplicialComplex};

pub const DEFAULT_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(usize),
    #[error("polygon size {n} exceeds the cap {cap}; raise it explicitly")]
    AboveCap { n: usize, cap: usize },
    #[error("{chord} is not an essential chord of the {n}-gon")]
    NotEssential { chord: Chord, n: usize },
    #[error("chords {0} and {1} cross")]
    Crossing(Chord, Chord),
    #[error("chord {0} appears twice")]
    Duplicate(Chord),
}

/// A diagonal `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    lo: usize,
    hi: usize,
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        Chord { lo: a.min(b), hi: a.max(b) }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn is_essential(self, n: usize) -> bool {
        self.hi < n && self.hi - self.lo >= 2 && !(self.lo == 0 && self.hi == n - 1)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A set of pairwise compatible chords of an `n`-gon, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordFamily {
    n: usize,
    chords: Vec<Chord>,
}

impl ChordFamily {
    pub fn new(n: usize, mut chords: Vec<Chord>) -> Result<Self, PolygonError> {
        chords.sort();
        for (i, &c) in chords.iter().enumerate() {
            if !c.is_essential(n) {
                return Err(PolygonError::NotEssential { chord: c, n });
            }
            if i > 0 && chords[i - 1] == c {
                return Err(PolygonError::Duplicate(c));
            }
            for &d in &chords[..i] {
                if d != c && !chords_compatible(d, c, n) {
                    return Err(PolygonError::Crossing(d, c));
                }
            }
        }
        Ok(ChordFamily { n, chords })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell id such as `c(0-2|1-4)`.
    pub fn cell_id(&self) -> String {
        cell_id(&self.chords)
    }
}

fn cell_id(chords: &[Chord]) -> String {
    let parts: Vec<String> = chords.iter().map(Chord::to_string).collect();
    format!("c({})", parts.join("|"))
}

/// All `n(n-3)/2` diagonals in lexicographic order. Empty for the triangle.
pub fn enumerate_chords(n: usize) -> Result<Vec<Chord>, PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooFewSides(n));
    }
    Ok((0..n)
        .flat_map(|a| (a + 2..n).map(move |b| Chord::new(a, b)))
        .filter(|c| c.is_essential(n))
        .collect())
}

/// True iff the two chords have disjoint interiors. A chord is not
/// compatible with itself.
pub fn chords_compatible(c1: Chord, c2: Chord, _n: usize) -> bool {
    if c1 == c2 {
        return false;
    }
    let (a, b) = c1.endpoints();
    let strictly_inside = |x: usize| a < x && x < b;
    let (c, d) = c2.endpoints();
    let shared = c == a || c == b || d == a || d == b;
    shared || strictly_inside(c) == strictly_inside(d)
}

/// Every non-empty chord family, each listed with chords ascending; families
/// are grown only by lexicographically larger chords.
pub fn enumerate_families(n: usize) -> Result<Vec<Vec<Chord>>, PolygonError> {
    let chords = enumerate_chords(n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(&chords, 0, n, &mut current, &mut out);
    Ok(out)
}

fn grow(chords: &[Chord], start: usize, n: usize, current: &mut Vec<Chord>, out: &mut Vec<Vec<Chord>>) {
    for i in start..chords.len() {
        let c = chords[i];
        if current.iter().all(|&d| chords_compatible(d, c, n)) {
            current.push(c);
            out.push(current.clone());
            grow(chords, i + 1, n, current, out);
            current.pop();
        }
    }
}

/// The arc complex as an abstract simplicial complex on the chords.
pub fn polygon_simplicial_complex(n: usize, cap: usize) -> Result<SimplicialComplex, PolygonError> {
    check_size(n, cap)?;
    let chords = enumerate_chords(n)?;
    let labels = chords.iter().map(Chord::to_string).collect();
    let position = |c: &Chord| chords.binary_search(c).expect("enumerated chord");
    let families = enumerate_families(n)?;
    Ok(SimplicialComplex::from_facets(labels, families.iter().map(|f| f.iter().map(position).collect())))
}

fn check_size(n: usize, cap: usize) -> Result<(), PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooFewSides(n));
    }
    if n > cap {
        return Err(PolygonError::AboveCap { n, cap });
    }
    Ok(())
}

/// Arc complex of the `n`-gon with alternating boundary signs on the
/// lexicographic chord order. Every cell records complementary rank 0 and
/// the sizes of its complementary polygons.
pub fn build_polygon_complex(n: usize, cap: usize) -> Result<CellComplex, PolygonError> {
    let complex = polygon_simplicial_complex(n, cap)?;
    let chords = enumerate_chords(n)?;
    let name_of = |s: &[usize]| cell_id(&s.iter().map(|&v| chords[v]).collect::<Vec<_>>());
    let cells = complex
        .to_cell_complex_with(&format!("polygon{n}"), name_of)
        .cells()
        .iter()
        .map(|cell| {
            let family: Vec<Chord> = parse_cell_id(&cell.id).expect("generated id");
            let family = ChordFamily::new(n, family).expect("generated family");
            let pieces = complementary_regions(n, &family)
                .expect("generated family")
                .into_iter()
                .map(|k| format!("F g=0 s=0 d={k}"))
                .collect();
            cell.clone().with_meta(CellMeta { h1_rank: Some(0), pieces })
        })
        .collect();
    Ok(CellComplex::new(format!("polygon{n}"), cells))
}

fn parse_cell_id(id: &str) -> Option<Vec<Chord>> {
    let inner = id.strip_prefix("c(")?.strip_suffix(')')?;
    inner
        .split('|')
        .map(|part| {
            let (a, b) = part.split_once('-')?;
            Some(Chord::new(a.parse().ok()?, b.parse().ok()?))
        })
        .collect()
}

/// Side counts of the sub-polygons cut out by the family, ascending.
pub fn complementary_regions(n: usize, family: &ChordFamily) -> Result<Vec<usize>, PolygonError> {
    let family = ChordFamily::new(n, family.chords.clone())?;
    let mut sizes = Vec::new();
    split_region((0..n).collect(), family.chords, &mut sizes);
    sizes.sort_unstable();
    Ok(sizes)
}

fn split_region(cycle: Vec<usize>, mut chords: Vec<Chord>, sizes: &mut Vec<usize>) {
    let Some(chord) = chords.pop() else {
        sizes.push(cycle.len());
        return;
    };
    let (a, b) = chord.endpoints();
    let ia = cycle.iter().position(|&v| v == a).expect("chord inside region");
    let ib = cycle.iter().position(|&v| v == b).expect("chord inside region");
    let (lo, hi) = (ia.min(ib), ia.max(ib));
    let first: Vec<usize> = cycle[lo..=hi].to_vec();
    let second: Vec<usize> = cycle[hi..].iter().chain(&cycle[..=lo]).copied().collect();
    let (mut in_first, mut in_second) = (Vec::new(), Vec::new());
    for c in chords {
        let (x, y) = c.endpoints();
        if first.contains(&x) && first.contains(&y) {
            in_first.push(c);
        } else {
            in_second.push(c);
        }
    }
    split_region(first, in_first, sizes);
    split_region(second, in_second, sizes);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chord_counts() {
        assert_eq!(enumerate_chords(4).unwrap(), vec![Chord::new(0, 2), Chord::new(1, 3)]);
        assert_eq!(enumerate_chords(5).unwrap().len(), 5);
        assert_eq!(enumerate_chords(6).unwrap().len(), 9);
        assert!(enumerate_chords(3).unwrap().is_empty());
        assert!(enumerate_chords(2).is_err());
    }

    #[test]
    fn compatibility() {
        assert!(!chords_compatible(Chord::new(0, 2), Chord::new(1, 3), 4));
        assert!(chords_compatible(Chord::new(0, 2), Chord::new(0, 3), 5));
        assert!(chords_compatible(Chord::new(0, 2), Chord::new(2, 4), 6));
        assert!(chords_compatible(Chord::new(0, 2), Chord::new(3, 5), 6));
        assert!(!chords_compatible(Chord::new(1, 4), Chord::new(0, 2), 6));
    }

    #[test]
    fn small_f_vectors() {
        assert_eq!(build_polygon_complex(4, DEFAULT_CAP).unwrap().f_vector(), vec![2]);
        assert_eq!(build_polygon_complex(5, DEFAULT_CAP).unwrap().f_vector(), vec![5, 5]);
        assert_eq!(build_polygon_complex(6, DEFAULT_CAP).unwrap().f_vector(), vec![9, 21, 14]);
        assert!(build_polygon_complex(3, DEFAULT_CAP).unwrap().is_empty());
        assert!(matches!(build_polygon_complex(10, DEFAULT_CAP), Err(PolygonError::AboveCap { .. })));
    }

    #[test]
    fn cell_ids_and_meta() {
        let k = build_polygon_complex(5, DEFAULT_CAP).unwrap();
        let edge = k.cell("c(0-2|0-3)").expect("edge present");
        assert_eq!(edge.boundary, vec![("c(0-3)".to_string(), 1), ("c(0-2)".to_string(), -1)]);
        assert_eq!(edge.h1_rank(), Some(0));
        assert_eq!(edge.meta.as_ref().unwrap().pieces, vec!["F g=0 s=0 d=3", "F g=0 s=0 d=3", "F g=0 s=0 d=3"]);
    }

    #[test]
    fn regions() {
        let fam = |n, cs: &[(usize, usize)]| ChordFamily::new(n, cs.iter().map(|&(a, b)| Chord::new(a, b)).collect()).unwrap();
        assert_eq!(complementary_regions(6, &fam(6, &[(0, 3)])).unwrap(), vec![4, 4]);
        assert_eq!(complementary_regions(6, &fam(6, &[(0, 2), (0, 3), (0, 4)])).unwrap(), vec![3, 3, 3, 3]);
        assert_eq!(complementary_regions(5, &fam(5, &[])).unwrap(), vec![5]);
        assert_eq!(complementary_regions(8, &fam(8, &[(1, 3), (5, 7), (1, 5)])).unwrap(), vec![3, 3, 4, 4]);
    }

    #[test]
    fn invalid_families() {
        assert!(matches!(ChordFamily::new(4, vec![Chord::new(0, 2), Chord::new(1, 3)]), Err(PolygonError::Crossing(..))));
        assert!(matches!(ChordFamily::new(5, vec![Chord::new(0, 1)]), Err(PolygonError::NotEssential { .. })));
        assert!(matches!(ChordFamily::new(5, vec![Chord::new(0, 4)]), Err(PolygonError::NotEssential { .. })));
        assert!(matches!(ChordFamily::new(5, vec![Chord::new(0, 2), Chord::new(0, 2)]), Err(PolygonError::Duplicate(_))));
    }
}
