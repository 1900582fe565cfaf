//! Chain-level join and suspension.
//!
//! The join is computed on augmented chains: a joined cell `a*b` has
//! dimension `dim a + dim b + 1` and
//!
//! ```text
//! ∂(a*b) = ∂̃a * b + (-1)^(dim a + 1) a * ∂̃b
//! ```
//!
//! where `∂̃` of a vertex is the empty cell and `x * ∅ = ∅ * x = x`.

use std::collections::HashSet;

use super::complex::{Cell, CellComplex};
use super::ChainError;

/// Join `k1 * k2`. Cell ids are kept when the two id sets are disjoint and
/// prefixed with `1:` / `2:` otherwise; joined cells are named `a*b`.
pub fn join(k1: &CellComplex, k2: &CellComplex) -> Result<CellComplex, ChainError> {
    k1.ensure_valid()?;
    k2.ensure_valid()?;
    let left_ids: HashSet<&str> = k1.cells().iter().map(|c| c.id.as_str()).collect();
    let clash = k2.cells().iter().any(|c| left_ids.contains(c.id.as_str()));
    let rename = |side: u8, id: &str| if clash { format!("{side}:{id}") } else { id.to_string() };
    let joined = |a: &str, b: &str| format!("{}*{}", rename(1, a), rename(2, b));

    let mut cells = Vec::with_capacity(k1.cells().len() * (k2.cells().len() + 1) + k2.cells().len());
    for (side, k) in [(1u8, k1), (2u8, k2)] {
        for c in k.cells() {
            let boundary = c.boundary.iter().map(|(f, v)| (rename(side, f), *v)).collect();
            let mut cell = Cell::new(rename(side, &c.id), c.dim, boundary);
            cell.meta = c.meta.clone();
            cells.push(cell);
        }
    }
    for a in k1.cells() {
        let sign = if a.dim % 2 == 0 { -1 } else { 1 };
        for b in k2.cells() {
            let mut boundary = Vec::with_capacity(a.boundary.len() + b.boundary.len() + 2);
            if a.dim == 0 {
                boundary.push((rename(2, &b.id), 1));
            }
            boundary.extend(a.boundary.iter().map(|(f, v)| (joined(f, &b.id), *v)));
            if b.dim == 0 {
                boundary.push((rename(1, &a.id), sign));
            }
            boundary.extend(b.boundary.iter().map(|(g, v)| (joined(&a.id, g), sign * v)));
            cells.push(Cell::new(joined(&a.id, &b.id), a.dim + b.dim + 1, boundary));
        }
    }
    let name = match (k1.is_empty(), k2.is_empty()) {
        (_, true) => k1.name().to_string(),
        (true, false) => k2.name().to_string(),
        _ => format!("{}*{}", k1.name(), k2.name()),
    };
    Ok(CellComplex::new(name, cells))
}

/// Two points `n`, `s`.
pub fn zero_sphere() -> CellComplex {
    CellComplex::new("S0", vec![Cell::new("n", 0, vec![]), Cell::new("s", 0, vec![])])
}

/// One vertex and one loop.
pub fn minimal_circle(name: &str, vertex: &str, edge: &str) -> CellComplex {
    CellComplex::new(name, vec![Cell::new(vertex, 0, vec![]), Cell::new(edge, 1, vec![])])
}

/// `S0 * k`.
pub fn suspension(k: &CellComplex) -> Result<CellComplex, ChainError> {
    let s = join(&zero_sphere(), k)?;
    Ok(s.with_name(format!("susp({})", k.name())))
}
