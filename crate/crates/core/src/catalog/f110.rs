//! The arc complex of the torus minus a disk, derived as a quotient of a
//! 3-simplex.
//!
//! Two face pairings of the simplex identify `v0 ~ v3` and `v1 ~ v2`. The
//! quotient has cell counts (2, 3, 2, 1); collapsing its unique 1-cell with
//! distinct endpoints gives a complex with counts (1, 2, 2, 1).

use std::collections::BTreeMap;

use super::CatalogError;
use crate::chain::{Cell, CellComplex, CellMeta};

/// An affine identification of two facets of a simplex: `source[t]` is sent
/// to `target[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePairing {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

/// A cell of a simplex quotient: a class of oriented faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCell {
    pub dim: usize,
    /// Representative face in sorted vertex order.
    pub rep: Vec<usize>,
    /// Every face in the class with its orientation relative to `rep`.
    pub members: Vec<(Vec<usize>, i64)>,
}

/// A simplex modulo face pairings.
#[derive(Debug, Clone)]
pub struct SimplexQuotient {
    pub cells: Vec<QuotientCell>,
    /// Face in sorted order to `(cell index, orientation)`.
    class_of: BTreeMap<Vec<usize>, (usize, i64)>,
}

struct SignedUnionFind {
    parent: Vec<usize>,
    sign: Vec<i64>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind { parent: (0..n).collect(), sign: vec![1; n] }
    }

    fn find(&mut self, x: usize) -> (usize, i64) {
        if self.parent[x] == x {
            return (x, 1);
        }
        let (root, s) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.sign[x] *= s;
        (root, self.sign[x])
    }

    /// Records `[a] = s [b]`. Fails if this identifies a face with its own
    /// reverse.
    fn union(&mut self, a: usize, b: usize, s: i64) -> bool {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        if ra == rb {
            return sa == s * sb;
        }
        // [ra] = sa [a] = sa s [b] = sa s sb [rb]
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.sign[hi] = sa * s * sb;
        true
    }
}

fn subsets(v: &[usize]) -> Vec<Vec<usize>> {
    (1u32..(1 << v.len())).map(|mask| v.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect()).collect()
}

/// Sorts `v` and returns the parity of the sorting permutation.
fn sort_with_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

fn face_signs(simplex: &[usize]) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
    (0..simplex.len()).map(move |i| {
        let mut f = simplex.to_vec();
        f.remove(i);
        (f, if i % 2 == 0 { 1 } else { -1 })
    })
}

impl SimplexQuotient {
    /// Quotient of the standard simplex on `0..=top` by the given pairings
    /// and every pairing they induce on subfaces.
    pub fn new(top: usize, pairings: &[FacePairing]) -> Result<Self, CatalogError> {
        let vertices: Vec<usize> = (0..=top).collect();
        let faces = subsets(&vertices);
        let index: BTreeMap<Vec<usize>, usize> = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let mut uf = SignedUnionFind::new(faces.len());
        for pairing in pairings {
            if pairing.source.len() != pairing.target.len() {
                return Err(CatalogError::Derivation("pairing arity mismatch".into()));
            }
            let map: BTreeMap<usize, usize> = pairing.source.iter().copied().zip(pairing.target.iter().copied()).collect();
            let mut sorted_source = pairing.source.clone();
            sorted_source.sort_unstable();
            for sub in subsets(&sorted_source) {
                let mut image: Vec<usize> = sub.iter().map(|v| map[v]).collect();
                let s = sort_with_sign(&mut image);
                let (Some(&a), Some(&b)) = (index.get(&sub), index.get(&image)) else {
                    return Err(CatalogError::Derivation(format!("pairing leaves the simplex at {image:?}")));
                };
                if !uf.union(a, b, s) {
                    return Err(CatalogError::Derivation(format!("face {sub:?} is identified with its reverse")));
                }
            }
        }
        let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
        let mut cells: Vec<QuotientCell> = Vec::new();
        let mut class_of = BTreeMap::new();
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by_key(|&i| (faces[i].len(), faces[i].clone()));
        for i in order {
            let (root, s) = uf.find(i);
            let c = *roots.entry(root).or_insert_with(|| {
                cells.push(QuotientCell { dim: faces[root].len() - 1, rep: faces[root].clone(), members: Vec::new() });
                cells.len() - 1
            });
            cells[c].members.push((faces[i].clone(), s));
            class_of.insert(faces[i].clone(), (c, s));
        }
        let q = SimplexQuotient { cells, class_of };
        q.check_boundaries()?;
        Ok(q)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for c in &self.cells {
            if f.len() <= c.dim {
                f.resize(c.dim + 1, 0);
            }
            f[c.dim] += 1;
        }
        f
    }

    /// Net cellular boundary of a face, as `(cell, coefficient)`.
    fn face_boundary(&self, face: &[usize]) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        if face.len() > 1 {
            for (f, s) in face_signs(face) {
                let (c, t) = self.class_of[&f];
                *out.entry(c).or_insert(0) += s * t;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn boundary(&self, cell: usize) -> BTreeMap<usize, i64> {
        self.face_boundary(&self.cells[cell].rep)
    }

    /// Cell and signed incidence of each codimension-one face of the
    /// representative, before cancellation.
    pub fn geometric_faces(&self, cell: usize) -> Vec<(usize, i64)> {
        let rep = &self.cells[cell].rep;
        if rep.len() == 1 {
            return Vec::new();
        }
        face_signs(rep)
            .map(|(f, s)| {
                let (c, t) = self.class_of[&f];
                (c, s * t)
            })
            .collect()
    }

    /// Every member of a class must have the same boundary up to its
    /// orientation sign, or the identifications are not cellular.
    fn check_boundaries(&self) -> Result<(), CatalogError> {
        for (c, cell) in self.cells.iter().enumerate() {
            let reference = self.boundary(c);
            for (face, s) in &cell.members {
                let mut scaled = self.face_boundary(face);
                scaled.values_mut().for_each(|v| *v *= s);
                if scaled != reference {
                    return Err(CatalogError::Derivation(format!("boundary of {face:?} disagrees with its class")));
                }
            }
        }
        Ok(())
    }
}

pub fn f110_pairings() -> Vec<FacePairing> {
    vec![
        FacePairing { source: vec![0, 1, 3], target: vec![0, 2, 3] },
        FacePairing { source: vec![1, 2, 3], target: vec![1, 2, 0] },
    ]
}

/// Everything the derivation produces.
#[derive(Debug, Clone)]
pub struct F110Derivation {
    pub quotient: SimplexQuotient,
    /// The final complex with cells `a`, `alpha1`, `alpha2`, `beta1`,
    /// `beta2`, `gamma`.
    pub complex: CellComplex,
    /// Unreduced signed incidences of each positive-dimensional cell, one
    /// entry per codimension-one face, in the arc-family picture where the
    /// collapsed edge is read as the loop it folds onto. Summing the signs
    /// gives the boundary in `complex`.
    pub incidences: BTreeMap<String, Vec<(String, i64)>>,
    /// Sum of absolute incidence coefficients per `(cell, face)`.
    pub face_counts: BTreeMap<(String, String), usize>,
}

fn spec(cusps: &str) -> String {
    format!("F g=0 s=0 d={cusps}")
}

fn meta(rank: u32, pieces: &[&str]) -> CellMeta {
    CellMeta { h1_rank: Some(rank), pieces: pieces.iter().map(|p| spec(p)).collect() }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), CatalogError> {
    if got == want {
        Ok(())
    } else {
        Err(CatalogError::Derivation(format!("{what}: expected {want:?}, got {got:?}")))
    }
}

pub fn derive_f110_boundaries() -> Result<F110Derivation, CatalogError> {
    let q = SimplexQuotient::new(3, &f110_pairings())?;
    expect_eq("quotient cell counts", q.f_vector(), vec![2, 3, 2, 1])?;

    let edges: Vec<usize> = (0..q.cells.len()).filter(|&c| q.cells[c].dim == 1).collect();
    let (spanning, loops): (Vec<usize>, Vec<usize>) = edges.iter().partition(|&&e| !q.boundary(e).is_empty());
    expect_eq("edges with distinct endpoints", spanning.len(), 1)?;
    let collapsed = spanning[0];
    // fold target: the loop with the last representative
    let fold = *loops.iter().max_by_key(|&&l| q.cells[l].rep.clone()).expect("two loops");

    let triangles: Vec<usize> = (0..q.cells.len()).filter(|&c| q.cells[c].dim == 2).collect();
    let top = (0..q.cells.len()).find(|&c| q.cells[c].dim == 3).expect("one 3-cell");

    let folded_signed = |c: usize| {
        q.geometric_faces(c).into_iter().map(|(f, s)| (if f == collapsed { fold } else { f }, s)).collect::<Vec<_>>()
    };
    let folded = |c: usize| folded_signed(c).into_iter().map(|(f, _)| f).collect::<Vec<_>>();

    // the 2-cell all of whose faces land on one loop
    let (full, other): (Vec<usize>, Vec<usize>) = triangles.iter().partition(|&&t| folded(t).iter().all(|&f| f == folded(t)[0]));
    expect_eq("2-cells with a single face cell", full.len(), 1)?;
    let (beta2, beta1) = (full[0], other[0]);
    let alpha2 = folded(beta2)[0];
    let alpha1 = *loops.iter().find(|&&l| l != alpha2).expect("two loops");

    let vertex = (0..q.cells.len()).filter(|&c| q.cells[c].dim == 0).min().expect("vertices");
    let names: BTreeMap<usize, &str> =
        [(vertex, "a"), (alpha1, "alpha1"), (alpha2, "alpha2"), (beta1, "beta1"), (beta2, "beta2"), (top, "gamma")].into_iter().collect();
    let metas: BTreeMap<&str, CellMeta> = [
        ("a", meta(1, &["2,1"])),
        ("alpha1", meta(1, &["3", "1,1"])),
        ("alpha2", meta(0, &["5"])),
        ("beta1", meta(0, &["4", "3"])),
        ("beta2", meta(0, &["3", "4"])),
        ("gamma", meta(0, &["3", "3", "3"])),
    ]
    .into_iter()
    .collect();

    let mut cells = Vec::new();
    for (&c, &name) in &names {
        let boundary: Vec<(String, i64)> = if q.cells[c].dim <= 1 {
            Vec::new()
        } else {
            q.boundary(c)
                .into_iter()
                .filter(|(f, _)| *f != collapsed)
                .map(|(f, v)| (names.get(&f).map(|s| s.to_string()).ok_or_else(|| CatalogError::Derivation(format!("unnamed face {f}"))), v))
                .map(|(f, v)| f.map(|f| (f, v)))
                .collect::<Result<_, _>>()?
        };
        cells.push(Cell::new(name, q.cells[c].dim, boundary).with_meta(metas[name].clone()));
    }
    let complex = CellComplex::new("F110", cells);

    let mut incidences = BTreeMap::new();
    let mut face_counts = BTreeMap::new();
    for &c in &[alpha1, alpha2, beta1, beta2, top] {
        let list: Vec<(String, i64)> = if q.cells[c].dim == 1 {
            // both ends of a loop sit on the single vertex
            vec![(names[&vertex].to_string(), 1), (names[&vertex].to_string(), -1)]
        } else {
            folded_signed(c).into_iter().map(|(f, s)| (names[&f].to_string(), s)).collect()
        };
        let mut net: BTreeMap<String, i64> = BTreeMap::new();
        for (f, s) in &list {
            *net.entry(f.clone()).or_insert(0) += s;
            *face_counts.entry((names[&c].to_string(), f.clone())).or_insert(0) += s.unsigned_abs() as usize;
        }
        net.retain(|_, v| *v != 0);
        let stored: BTreeMap<String, i64> = complex.cell(names[&c]).expect("named cell").boundary.iter().cloned().collect();
        expect_eq(&format!("reduced incidences of {}", names[&c]), net, stored)?;
        incidences.insert(names[&c].to_string(), list);
    }
    expect_eq("faces of beta1 on alpha1", face_counts.get(&("beta1".into(), "alpha1".into())).copied(), Some(1))?;
    expect_eq("faces of beta2 on alpha2", face_counts.get(&("beta2".into(), "alpha2".into())).copied(), Some(3))?;
    expect_eq("faces of gamma on beta1", face_counts.get(&("gamma".into(), "beta1".into())).copied(), Some(2))?;

    Ok(F110Derivation { quotient: q, complex, incidences, face_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{homology, split_boundary, HomologyResult};

    #[test]
    fn quotient_counts() {
        let d = derive_f110_boundaries().unwrap();
        assert_eq!(d.quotient.f_vector(), vec![2, 3, 2, 1]);
        assert_eq!(d.complex.f_vector(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn collapsed_complex_is_a_sphere() {
        let d = derive_f110_boundaries().unwrap();
        assert!(d.complex.validate().is_valid());
        assert_eq!(homology(&d.complex).unwrap(), HomologyResult::sphere(3));
        assert_eq!(d.complex.cell("gamma").unwrap().boundary, vec![]);
    }

    #[test]
    fn full_quotient_is_a_sphere_too() {
        let q = SimplexQuotient::new(3, &f110_pairings()).unwrap();
        let cells = (0..q.cells.len())
            .map(|c| {
                let boundary = q.boundary(c).into_iter().map(|(f, v)| (format!("q{f}"), v)).collect();
                Cell::new(format!("q{c}"), q.cells[c].dim, boundary)
            })
            .collect();
        let k = CellComplex::new("quotient", cells);
        assert_eq!(homology(&k).unwrap(), HomologyResult::sphere(3));
    }

    #[test]
    fn face_counts_in_the_folded_picture() {
        let d = derive_f110_boundaries().unwrap();
        let count = |c: &str, f: &str| d.face_counts.get(&(c.to_string(), f.to_string())).copied().unwrap_or(0);
        assert_eq!(count("beta1", "alpha1"), 1);
        assert_eq!(count("beta1", "alpha2"), 2);
        assert_eq!(count("beta2", "alpha2"), 3);
        assert_eq!(count("gamma", "beta1"), 2);
        assert_eq!(count("gamma", "beta2"), 2);
    }

    #[test]
    fn split_puts_the_rank_jump_in_d2() {
        let d = derive_f110_boundaries().unwrap();
        let split = split_boundary(&d.complex).unwrap();
        assert!(split.identities(&d.complex).all_hold());
        assert!(!split.d2_vanishes());
        assert_eq!(split.bigrading["alpha1"], (2, -1));
    }

    #[test]
    fn reversing_identification_is_rejected() {
        let bad = [FacePairing { source: vec![0, 1], target: vec![1, 0] }];
        assert!(SimplexQuotient::new(1, &bad).is_err());
    }
}
