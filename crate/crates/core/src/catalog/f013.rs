//! The arc complex of the once-bordered, one-cusped sphere with three
//! punctures, as an explicit 3-dimensional cell complex with f-vector
//! (6, 18, 24, 12).
//!
//! Cell names carry one or two puncture indices; `k` always denotes the
//! third index `{1,2,3} - {i,j}`.

use std::collections::BTreeSet;

use super::tableau::{Node, Tableau};
use crate::chain::{Cell, CellComplex, CellMeta};

const PAIRS: [(u8, u8); 6] = [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)];

fn third(i: u8, j: u8) -> u8 {
    6 - i - j
}

fn id(letter: char, idx: &[u8]) -> String {
    let digits: String = idx.iter().map(|d| char::from(b'0' + d)).collect();
    format!("{letter}{digits}")
}

/// Cell id, dimension, signed faces.
pub type TableRow = (String, usize, Vec<(String, i64)>);

/// The signed boundary table.
pub fn boundary_table() -> Vec<TableRow> {
    let mut rows = Vec::new();
    for k in 1..=3 {
        rows.push((id('A', &[k]), 0, vec![]));
        rows.push((id('B', &[k]), 0, vec![]));
    }
    for k in 1..=3u8 {
        rows.push((id('E', &[k]), 1, vec![(id('A', &[k]), 1), (id('B', &[k]), -1)]));
        rows.push((id('F', &[k]), 1, vec![(id('B', &[k]), 1), (id('A', &[k]), -1)]));
    }
    for (i, j) in PAIRS {
        let k = third(i, j);
        rows.push((id('C', &[i, j]), 1, vec![(id('A', &[i]), 1), (id('A', &[j]), -1)]));
        rows.push((id('D', &[i, j]), 1, vec![(id('A', &[j]), 1), (id('B', &[k]), -1)]));
        rows.push((id('G', &[i, j]), 2, vec![(id('C', &[i, j]), 1), (id('D', &[j, i]), -1), (id('D', &[i, j]), 1)]));
        rows.push((id('H', &[i, j]), 2, vec![(id('D', &[i, j]), 1), (id('C', &[j, k]), -1), (id('F', &[k]), 1)]));
        rows.push((id('I', &[i, j]), 2, vec![(id('D', &[i, j]), 1), (id('E', &[k]), -1), (id('C', &[k, j]), 1)]));
        rows.push((id('J', &[i, j]), 2, vec![(id('C', &[i, j]), 1), (id('C', &[i, k]), -1), (id('C', &[j, k]), 1)]));
        rows.push((
            id('K', &[i, j]),
            3,
            vec![(id('G', &[i, j]), 1), (id('H', &[i, j]), -1), (id('H', &[j, i]), 1), (id('J', &[i, j]), -1)],
        ));
        rows.push((
            id('L', &[i, j]),
            3,
            vec![(id('I', &[i, j]), 1), (id('G', &[i, j]), -1), (id('J', &[k, i]), 1), (id('I', &[j, i]), -1)],
        ));
    }
    rows
}

/// Every cell is a family of disjoint arcs cutting off punctured disks, so
/// the complement always has first Betti number 3.
const COMPLEMENT_RANK: u32 = 3;

pub fn build_f013() -> CellComplex {
    let cells = boundary_table()
        .into_iter()
        .map(|(name, dim, boundary)| Cell::new(name, dim, boundary).with_meta(CellMeta::rank(COMPLEMENT_RANK)))
        .collect();
    CellComplex::new("F013", cells)
}

fn single(node: &Node) -> Option<u8> {
    (node.children.is_empty() && node.label.len() == 1).then(|| node.label.elements()[0])
}

/// A doubleton node with singleton children, as `(i, j, children)`, where
/// `{i, j}` is the label ordered so that a lone child is `j` and two
/// children read `i, j`.
fn doubleton(node: &Node) -> Option<(u8, u8, usize)> {
    if node.label.len() != 2 {
        return None;
    }
    let kids: Option<Vec<u8>> = node.children.iter().map(single).collect();
    let kids = kids?;
    let both = node.label.elements();
    match kids.as_slice() {
        [] => Some((both[0], both[1], 0)),
        [j] => Some((if *j == both[0] { both[1] } else { both[0] }, *j, 1)),
        [i, j] => Some((*i, *j, 2)),
        _ => None,
    }
}

/// Name of the cell indexed by a tableau.
pub fn tableau_cell_id(t: &Tableau) -> Option<String> {
    let r = &t.roots;
    let name = match r.as_slice() {
        [a] => {
            if let Some(k) = single(a) {
                id('A', &[k])
            } else {
                let (i, j, kids) = doubleton(a)?;
                match kids {
                    0 => id('B', &[third(i, j)]),
                    1 => id('D', &[i, j]),
                    _ => id('G', &[i, j]),
                }
            }
        }
        [a, b] => match (single(a), single(b)) {
            (Some(i), Some(j)) => id('C', &[i, j]),
            (Some(k), None) => {
                let (i, j, kids) = doubleton(b)?;
                if kids == 0 {
                    id('E', &[k])
                } else {
                    id(['E', 'I', 'L'][kids], &[i, j])
                }
            }
            (None, Some(k)) => {
                let (i, j, kids) = doubleton(a)?;
                if kids == 0 {
                    id('F', &[k])
                } else {
                    id(['F', 'H', 'K'][kids], &[i, j])
                }
            }
            (None, None) => return None,
        },
        [a, b, _] => id('J', &[single(a)?, single(b)?]),
        _ => return None,
    };
    Some(name)
}

/// The tableau of a named cell.
pub fn cell_tableau(name: &str) -> Option<Tableau> {
    super::tableau::enumerate_tableaux(4).into_iter().find(|t| tableau_cell_id(t).as_deref() == Some(name))
}

/// Unsigned face incidences computed from the tableaux, keyed by cell name.
pub fn tableau_incidences() -> Vec<(String, BTreeSet<String>)> {
    super::tableau::enumerate_tableaux(4)
        .iter()
        .map(|t| {
            let faces = t.faces().iter().map(|f| tableau_cell_id(f).expect("face of a tableau is named")).collect();
            (tableau_cell_id(t).expect("every tableau is named"), faces)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::tableau::Label;
    use crate::chain::{homology, HomologyResult};

    fn label_of(digits: &[u8]) -> Label {
        Label::new(digits.iter().fold(0, |m, d| m | Label::singleton(*d).mask())).unwrap()
    }

    #[test]
    fn f_vector_and_homology() {
        let k = build_f013();
        assert!(k.validate().is_valid());
        assert_eq!(k.f_vector(), vec![6, 18, 24, 12]);
        assert_eq!(homology(&k).unwrap(), HomologyResult::sphere(3));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = build_f013();
        for p in 2..=3 {
            assert!(k.boundary_matrix(p - 1).mul(&k.boundary_matrix(p)).is_zero());
        }
    }

    #[test]
    fn tableau_naming_is_a_bijection() {
        let names: BTreeSet<String> = tableau_incidences().into_iter().map(|(n, _)| n).collect();
        let table: BTreeSet<String> = boundary_table().into_iter().map(|(n, _, _)| n).collect();
        assert_eq!(names.len(), 60);
        assert_eq!(names, table);
    }

    #[test]
    fn table_agrees_with_tableau_faces() {
        let table = build_f013();
        for (name, faces) in tableau_incidences() {
            let cell = table.cell(&name).unwrap();
            let listed: BTreeSet<String> = cell.boundary.iter().map(|(f, _)| f.clone()).collect();
            assert_eq!(listed, faces, "faces of {name}");
            assert_eq!(cell.dim, cell_tableau(&name).unwrap().dimension());
        }
    }

    #[test]
    fn sample_names() {
        let t = Tableau::new(vec![
            Node { label: label_of(&[1, 2]), children: vec![Node::leaf(label_of(&[1])), Node::leaf(label_of(&[2]))] },
            Node::leaf(label_of(&[3])),
        ]);
        assert_eq!(tableau_cell_id(&t).unwrap(), "K12");
        assert_eq!(cell_tableau("B3").unwrap().to_string(), "({12})");
        assert_eq!(cell_tableau("D21").unwrap().to_string(), "({12}[{1}])");
    }
}
