use std::collections::{BTreeMap, BTreeSet};

use super::complex::{Cell, CellComplex};

/// A finite abstract simplicial complex. Simplices are sorted vectors of
/// vertex indices; the family is closed under taking non-empty subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` over vertices `labels`.
    pub fn from_facets(labels: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut simplices = BTreeSet::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            assert!(facet.iter().all(|&v| v < labels.len()), "facet vertex out of range");
            add_closure(&facet, &mut simplices);
        }
        SimplicialComplex { labels, simplices }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.simplices {
            let d = s.len() - 1;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    pub fn simplex_label(&self, simplex: &[usize]) -> String {
        let names: Vec<&str> = simplex.iter().map(|&v| self.labels[v].as_str()).collect();
        format!("[{}]", names.join(","))
    }

    /// First barycentric subdivision: one vertex per simplex, one simplex per
    /// chain of faces under proper inclusion.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let order: Vec<&Vec<usize>> = self.simplices.iter().collect();
        let index: BTreeMap<&Vec<usize>, usize> = order.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let labels = order.iter().map(|s| self.simplex_label(s)).collect();
        // every chain is a maximal flag of some simplex truncated; enumerate
        // chains as flags ending at each simplex
        let mut facets = Vec::new();
        for top in &order {
            let mut flag = vec![index[top]];
            collect_flags(top, &index, &mut flag, &mut facets);
        }
        SimplicialComplex::from_facets(labels, facets)
    }

    /// Cell complex with the alternating boundary on sorted vertex order.
    /// Cell ids come from `name_of`.
    pub fn to_cell_complex_with(&self, name: &str, name_of: impl Fn(&[usize]) -> String) -> CellComplex {
        let cells = self
            .simplices
            .iter()
            .map(|s| {
                let boundary = if s.len() == 1 {
                    Vec::new()
                } else {
                    (0..s.len())
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            (name_of(&f), if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                };
                Cell::new(name_of(s), s.len() - 1, boundary)
            })
            .collect();
        CellComplex::new(name, cells)
    }

    pub fn to_cell_complex(&self, name: &str) -> CellComplex {
        self.to_cell_complex_with(name, |s| self.simplex_label(s))
    }

    /// Recovers a simplicial complex from a cell complex whose cells are
    /// simplices: every `p`-cell has `p + 1` faces and `p + 1` vertices, and
    /// no two cells share a vertex set. Returns `None` otherwise.
    pub fn from_cell_complex(k: &CellComplex) -> Option<Self> {
        let vertices: Vec<&str> = k.cells_of_dim(0).map(|c| c.id.as_str()).collect();
        let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut vertex_sets: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for cell in k.cells() {
            let set: Vec<usize> = if cell.dim == 0 {
                vec![index[cell.id.as_str()]]
            } else {
                if cell.boundary.len() != cell.dim + 1 {
                    return None;
                }
                let mut union = BTreeSet::new();
                for (f, _) in &cell.boundary {
                    union.extend(vertex_sets.get(f.as_str())?.iter().copied());
                }
                union.into_iter().collect()
            };
            if set.len() != cell.dim + 1 || !seen.insert(set.clone()) {
                return None;
            }
            vertex_sets.insert(cell.id.as_str(), set);
        }
        let labels = vertices.iter().map(|v| v.to_string()).collect();
        Some(SimplicialComplex::from_facets(labels, seen))
    }
}

fn add_closure(simplex: &[usize], out: &mut BTreeSet<Vec<usize>>) {
    if simplex.is_empty() || out.contains(simplex) {
        return;
    }
    out.insert(simplex.to_vec());
    for i in 0..simplex.len() {
        let mut face = simplex.to_vec();
        face.remove(i);
        add_closure(&face, out);
    }
}

/// Extends a descending flag `flag` (whose last element is `current`) by all
/// maximal descending chains of faces, pushing each finished flag.
fn collect_flags(current: &[usize], index: &BTreeMap<&Vec<usize>, usize>, flag: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == 1 {
        out.push(flag.clone());
        return;
    }
    for i in 0..current.len() {
        let mut face = current.to_vec();
        face.remove(i);
        flag.push(index[&face]);
        collect_flags(&face, index, flag, out);
        flag.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::homology::{homology, is_homology_sphere};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn subdivided_edge() {
        let k = SimplicialComplex::from_facets(labels(2), [vec![0, 1]]);
        assert_eq!(k.barycentric_subdivision().f_vector(), vec![3, 2]);
    }

    #[test]
    fn subdivided_triangle_boundary() {
        let k = SimplicialComplex::from_facets(labels(3), [vec![0, 1], vec![1, 2], vec![0, 2]]);
        let sd = k.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![6, 6]);
        assert!(is_homology_sphere(&homology(&sd.to_cell_complex("sd")).unwrap(), 1));
    }

    #[test]
    fn solid_triangle_subdivision_counts() {
        // 7 barycenters, 12 edges, 6 triangles
        let k = SimplicialComplex::from_facets(labels(3), [vec![0, 1, 2]]);
        let sd = k.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
        let h = homology(&sd.to_cell_complex("disk")).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
    }

    #[test]
    fn recovered_from_cells() {
        let k = SimplicialComplex::from_facets(labels(4), [vec![0, 1, 2], vec![2, 3]]);
        let back = SimplicialComplex::from_cell_complex(&k.to_cell_complex("k")).unwrap();
        assert_eq!(back.f_vector(), k.f_vector());
        let circle = CellComplex::new("c", vec![Cell::new("v", 0, vec![]), Cell::new("e", 1, vec![])]);
        assert!(SimplicialComplex::from_cell_complex(&circle).is_none());
    }

    #[test]
    fn closure_is_downward() {
        let k = SimplicialComplex::from_facets(labels(4), [vec![3, 1, 2]]);
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        assert!(k.to_cell_complex("t").validate().is_valid());
    }
}
