use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::SparseMatrix;
use super::ChainError;

/// Optional per-cell data about the surface complementary to the arc family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_rank: Option<u32>,
    /// Signatures of the complementary pieces, in the surface text form.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<String>,
}

impl CellMeta {
    pub fn rank(h1_rank: u32) -> Self {
        CellMeta { h1_rank: Some(h1_rank), pieces: Vec::new() }
    }

    fn is_empty(&self) -> bool {
        self.h1_rank.is_none() && self.pieces.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub boundary: Vec<(String, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "meta_field")]
    pub meta: Option<CellMeta>,
}

mod meta_field {
    use super::CellMeta;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(meta: &Option<CellMeta>, s: S) -> Result<S::Ok, S::Error> {
        meta.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<CellMeta>, D::Error> {
        let meta = Option::<CellMeta>::deserialize(d)?;
        Ok(meta.filter(|m| !m.is_empty()))
    }
}

impl Cell {
    pub fn new(id: impl Into<String>, dim: usize, boundary: Vec<(String, i64)>) -> Self {
        Cell { id: id.into(), dim, boundary, meta: None }
    }

    pub fn with_meta(mut self, meta: CellMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    pub fn h1_rank(&self) -> Option<u32> {
        self.meta.as_ref().and_then(|m| m.h1_rank)
    }
}

/// A finite cell complex given by integer boundary coefficients.
///
/// Cells are kept in canonical `(dim, id)` order. Construction does not
/// validate; see [`CellComplex::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawComplex", into = "RawComplex")]
pub struct CellComplex {
    name: String,
    cells: Vec<Cell>,
    index: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    name: String,
    cells: Vec<Cell>,
}

impl From<RawComplex> for CellComplex {
    fn from(raw: RawComplex) -> Self {
        CellComplex::new(raw.name, raw.cells)
    }
}

impl From<CellComplex> for RawComplex {
    fn from(k: CellComplex) -> Self {
        RawComplex { name: k.name, cells: k.cells }
    }
}

impl CellComplex {
    pub fn new(name: impl Into<String>, mut cells: Vec<Cell>) -> Self {
        cells.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let mut index = HashMap::with_capacity(cells.len());
        for (i, cell) in cells.iter().enumerate() {
            index.entry(cell.id.clone()).or_insert(i);
        }
        CellComplex { name: name.into(), cells, index }
    }

    pub fn empty(name: impl Into<String>) -> Self {
        CellComplex::new(name, Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: &str) -> Option<&Cell> {
        self.index.get(id).map(|&i| &self.cells[i])
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Top cell dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim == dim)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(p, &n)| if p % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Position of every cell among the cells of its own dimension.
    pub(crate) fn positions(&self) -> HashMap<&str, usize> {
        let mut counters: BTreeMap<usize, usize> = BTreeMap::new();
        self.cells
            .iter()
            .map(|c| {
                let slot = counters.entry(c.dim).or_insert(0);
                *slot += 1;
                (c.id.as_str(), *slot - 1)
            })
            .collect()
    }

    /// The matrix of `∂_p : C_p -> C_{p-1}`; columns are `p`-cells in canonical
    /// order, rows are `(p-1)`-cells. Zero-width for `p = 0`.
    pub fn boundary_matrix(&self, p: usize) -> SparseMatrix {
        let positions = self.positions();
        self.boundary_matrix_with(p, &positions)
    }

    pub(crate) fn boundary_matrix_with(&self, p: usize, positions: &HashMap<&str, usize>) -> SparseMatrix {
        let cols = self.cells_of_dim(p).count();
        if p == 0 {
            return SparseMatrix::zero(0, cols);
        }
        let rows = self.cells_of_dim(p - 1).count();
        let triplets = self.cells_of_dim(p).enumerate().flat_map(|(j, cell)| {
            cell.boundary
                .iter()
                .filter_map(move |(face, coeff)| positions.get(face.as_str()).map(|&i| (i, j, *coeff)))
        });
        SparseMatrix::from_triplets(rows, cols, triplets)
    }

    /// Every invariant violation; an empty report means the complex is valid.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen = HashSet::new();
        for cell in &self.cells {
            if !seen.insert(cell.id.as_str()) {
                violations.push(Violation::DuplicateId { id: cell.id.clone() });
            }
        }
        for cell in &self.cells {
            let mut faces = HashSet::new();
            for (face, _) in &cell.boundary {
                if !faces.insert(face.as_str()) {
                    violations.push(Violation::RepeatedFace { cell: cell.id.clone(), face: face.clone() });
                }
                match self.cell(face) {
                    None => violations.push(Violation::DanglingFace { cell: cell.id.clone(), face: face.clone() }),
                    Some(f) if f.dim + 1 != cell.dim => violations.push(Violation::FaceDimension {
                        cell: cell.id.clone(),
                        face: face.clone(),
                        cell_dim: cell.dim,
                        face_dim: f.dim,
                    }),
                    Some(_) => {}
                }
            }
            if cell.dim == 1 {
                let total: i64 = cell.boundary.iter().map(|(_, c)| c).sum();
                if total != 0 {
                    violations.push(Violation::Augmentation { cell: cell.id.clone(), total });
                }
            }
            if cell.dim >= 2 && !self.boundary_squares_to_zero(cell) {
                violations.push(Violation::BoundaryNotClosed { cell: cell.id.clone() });
            }
        }
        ValidationReport { violations }
    }

    fn boundary_squares_to_zero(&self, cell: &Cell) -> bool {
        let mut acc: HashMap<&str, i64> = HashMap::new();
        for (face, coeff) in &cell.boundary {
            let Some(f) = self.cell(face) else { continue };
            for (sub, c) in &f.boundary {
                *acc.entry(sub.as_str()).or_insert(0) += coeff * c;
            }
        }
        acc.values().all(|&v| v == 0)
    }

    pub fn ensure_valid(&self) -> Result<(), ChainError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(ChainError::Invalid { name: self.name.clone(), report })
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ChainError> {
        serde_json::from_str(text).map_err(|e| ChainError::Json(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateId { id: String },
    DanglingFace { cell: String, face: String },
    FaceDimension { cell: String, face: String, cell_dim: usize, face_dim: usize },
    RepeatedFace { cell: String, face: String },
    /// A 1-cell whose endpoint coefficients do not sum to zero.
    Augmentation { cell: String, total: i64 },
    BoundaryNotClosed { cell: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId { id } => write!(f, "duplicate cell id {id}"),
            Violation::DanglingFace { cell, face } => write!(f, "cell {cell}: face {face} does not exist"),
            Violation::FaceDimension { cell, face, cell_dim, face_dim } => {
                write!(f, "cell {cell} (dim {cell_dim}): face {face} has dim {face_dim}")
            }
            Violation::RepeatedFace { cell, face } => write!(f, "cell {cell}: face {face} listed twice"),
            Violation::Augmentation { cell, total } => {
                write!(f, "edge {cell}: endpoint coefficients sum to {total}")
            }
            Violation::BoundaryNotClosed { cell } => write!(f, "cell {cell}: boundary of boundary is non-zero"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn face(id: &str, coeff: i64) -> (String, i64) {
    (id.to_string(), coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn circle() -> CellComplex {
        CellComplex::new("circle", vec![Cell::new("v", 0, vec![]), Cell::new("e", 1, vec![])])
    }

    #[test]
    fn circle_is_valid() {
        assert!(circle().validate().is_valid());
        assert_eq!(circle().euler_characteristic(), 0);
    }

    #[test]
    fn dangling_face_is_reported() {
        let k = CellComplex::new("bad", vec![Cell::new("a", 0, vec![]), Cell::new("e", 1, vec![face("a", -1), face("b", 1)])]);
        let report = k.validate();
        assert!(report.violations.contains(&Violation::DanglingFace { cell: "e".into(), face: "b".into() }));
    }

    #[test]
    fn duplicate_and_closure_violations() {
        let k = CellComplex::new(
            "bad",
            vec![
                Cell::new("a", 0, vec![]),
                Cell::new("a", 0, vec![]),
                Cell::new("b", 0, vec![]),
                Cell::new("e", 1, vec![face("a", -1), face("b", 1)]),
                Cell::new("t", 2, vec![face("e", 1)]),
            ],
        );
        let report = k.validate();
        assert!(report.violations.contains(&Violation::DuplicateId { id: "a".into() }));
        assert!(report.violations.contains(&Violation::BoundaryNotClosed { cell: "t".into() }));
        let bad_edge = CellComplex::new("x", vec![Cell::new("a", 0, vec![]), Cell::new("e", 1, vec![face("a", 2)])]);
        assert!(matches!(bad_edge.validate().violations[..], [Violation::Augmentation { .. }]));
    }

    #[test]
    fn json_is_canonical() {
        let k = CellComplex::new(
            "seg",
            vec![
                Cell::new("e", 1, vec![face("a", -1), face("b", 1)]).with_meta(CellMeta::rank(0)),
                Cell::new("b", 0, vec![]),
                Cell::new("a", 0, vec![]),
            ],
        );
        let text = k.to_json();
        let back = CellComplex::from_json(&text).unwrap();
        assert_eq!(back, k);
        assert_eq!(back.to_json(), text);
        assert_eq!(k.cells()[0].id, "a");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["cells"][2]["boundary"][0], serde_json::json!(["a", -1]));
        assert_eq!(v["cells"][2]["meta"]["h1_rank"], 0);
    }
}
