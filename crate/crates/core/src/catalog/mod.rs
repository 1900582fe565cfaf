//! Explicit arc complexes of small surfaces.

pub mod f013;
pub mod f110;
pub mod tableau;

use thiserror::Error;

use crate::chain::complex::face;
use crate::chain::{homology, is_homology_sphere, join, minimal_circle, split_boundary, Cell, CellComplex, CellMeta, ChainError};
use crate::pants::pants_complex;
use crate::polygon::{build_polygon_complex, PolygonError, DEFAULT_CAP};
use crate::surface::{classify, dimension, SphericityVerdict, SurfaceSpec};

pub use f013::build_f013;
pub use f110::{derive_f110_boundaries, F110Derivation};
pub use tableau::{enumerate_tableaux, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("derivation failed: {0}")]
    Derivation(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

pub const NAMES: [&str; 10] =
    ["quadrilateral", "pentagon", "punctured_bigon", "annulus", "F012", "F021_join", "F013", "F110", "F110_blowup", "pants"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub surface: SurfaceSpec,
    pub complex: CellComplex,
    pub expected_dimension: i64,
    pub provenance: &'static str,
}

fn spec(text: &str) -> SurfaceSpec {
    text.parse().expect("catalog surface")
}

fn meta(rank: u32, pieces: &[&str]) -> CellMeta {
    CellMeta { h1_rank: Some(rank), pieces: pieces.iter().map(|p| p.to_string()).collect() }
}

fn punctured_bigon() -> CellComplex {
    let m = || meta(1, &["F g=0 s=1 d=1", "F g=0 s=0 d=3"]);
    CellComplex::new("punctured_bigon", vec![Cell::new("p", 0, vec![]).with_meta(m()), Cell::new("q", 0, vec![]).with_meta(m())])
}

fn annulus() -> CellComplex {
    CellComplex::new(
        "annulus",
        vec![
            Cell::new("a", 0, vec![]).with_meta(meta(0, &["F g=0 s=0 d=4"])),
            Cell::new("b", 1, vec![]).with_meta(meta(0, &["F g=0 s=0 d=3", "F g=0 s=0 d=3"])),
        ],
    )
}

/// Vertices `v0`, `v1` after the parity of `2j+i`; `e0` joins 0 to 1 and
/// `e1` joins 1 to 2, which is again a `v0`.
fn f012() -> CellComplex {
    let vertex = || meta(2, &["F g=0 s=1 d=1", "F g=0 s=1 d=2"]);
    let edge = || meta(2, &["F g=0 s=1 d=1", "F g=0 s=1 d=1", "F g=0 s=0 d=3"]);
    CellComplex::new(
        "F012",
        vec![
            Cell::new("v0", 0, vec![]).with_meta(vertex()),
            Cell::new("v1", 0, vec![]).with_meta(vertex()),
            Cell::new("e0", 1, vec![face("v1", 1), face("v0", -1)]).with_meta(edge()),
            Cell::new("e1", 1, vec![face("v0", 1), face("v1", -1)]).with_meta(edge()),
        ],
    )
}

fn circle_join(name: &str) -> Result<CellComplex, ChainError> {
    let c1 = minimal_circle("C1", "v1", "e1");
    let c2 = minimal_circle("C2", "v2", "e2");
    Ok(join(&c1, &c2)?.with_name(name))
}

pub fn build_catalog(name: &str) -> Result<CatalogEntry, CatalogError> {
    let (name, surface, complex, provenance) = match name {
        "quadrilateral" => ("quadrilateral", spec("F g=0 s=0 d=4"), build_polygon_complex(4, DEFAULT_CAP)?, "two diagonals of a square"),
        "pentagon" => ("pentagon", spec("F g=0 s=0 d=5"), build_polygon_complex(5, DEFAULT_CAP)?, "pentagon of chords"),
        "punctured_bigon" => ("punctured_bigon", spec("F g=0 s=1 d=2"), punctured_bigon(), "two loops around the puncture"),
        "annulus" => ("annulus", spec("F g=0 s=0 d=1,1"), annulus(), "crossing arcs modulo the twist"),
        "F012" => ("F012", spec("F g=0 s=2 d=1"), f012(), "integers modulo translation by two"),
        "F021_join" => ("F021_join", spec("F g=0 s=1 d=1,1"), circle_join("F021_join")?, "join of two circles"),
        "F013" => ("F013", spec("F g=0 s=3 d=1"), build_f013(), "tableaux boundary table"),
        "F110" => ("F110", spec("F g=1 s=0 d=1"), derive_f110_boundaries()?.complex, "quotient of a 3-simplex"),
        "F110_blowup" => ("F110_blowup", spec("F g=1 s=0 d=1"), circle_join("F110_blowup")?, "vertex blown up to an edge"),
        "pants" => ("pants", spec("F g=0 s=0 d=1,1,1"), pants_complex().with_name("pants"), "join of three boundary circles"),
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    let expected_dimension = dimension(&surface);
    Ok(CatalogEntry { name, surface, complex, expected_dimension, provenance })
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { label: label.into(), passed, detail: detail.into() }
    }
}

/// Invariants every entry must satisfy, plus the entry-specific ones.
pub fn verify_entry(entry: &CatalogEntry) -> Vec<Check> {
    let mut checks = Vec::new();
    let k = &entry.complex;
    let report = k.validate();
    checks.push(Check::new(format!("{} valid", entry.name), report.is_valid(), format!("{} violations", report.violations.len())));
    let dim = k.dimension().map_or(-1, |d| d as i64);
    checks.push(Check::new(
        format!("{} dimension", entry.name),
        dim == entry.expected_dimension,
        format!("expected {}, got {dim}", entry.expected_dimension),
    ));
    let verdict = classify(&entry.surface);
    match homology(k) {
        Ok(h) => {
            if let SphericityVerdict::Spherical(n) = verdict {
                let ok = n >= 0 && is_homology_sphere(&h, n as usize);
                checks.push(Check::new(format!("{} homology sphere", entry.name), ok, format!("{h}")));
            }
        }
        Err(e) => checks.push(Check::new(format!("{} homology", entry.name), false, e.to_string())),
    }
    match entry.name {
        "F013" => {
            let counts = tableau::counts_by_dimension(&enumerate_tableaux(4));
            let f = k.f_vector();
            checks.push(Check::new("F013 tableaux per dimension", counts == f, format!("{counts:?} vs {f:?}")));
        }
        "F110" => match derive_f110_boundaries() {
            Ok(d) => {
                let fv = d.quotient.f_vector();
                checks.push(Check::new("F110 quotient counts", fv == [2, 3, 2, 1], format!("{fv:?}")));
                let count = |c: &str, f: &str| d.face_counts.get(&(c.to_string(), f.to_string())).copied().unwrap_or(0);
                let degrees = [count("beta1", "alpha1"), count("beta2", "alpha2"), count("gamma", "beta1")];
                checks.push(Check::new("F110 face incidences", degrees == [1, 3, 2], format!("{degrees:?}")));
                match split_boundary(k) {
                    Ok(s) => {
                        let ok = s.identities(k).all_hold() && !s.d2_vanishes();
                        checks.push(Check::new("F110 split", ok, if ok { "nontrivial" } else { "degenerate" }));
                    }
                    Err(e) => checks.push(Check::new("F110 split", false, e.to_string())),
                }
            }
            Err(e) => checks.push(Check::new("F110 derivation", false, e.to_string())),
        },
        _ => {}
    }
    checks
}
