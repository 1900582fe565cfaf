//! Seeded generators for small test inputs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::chain::{Cell, CellComplex, SimplicialComplex};
use crate::pants::{DtCoords, Rational};

/// A random simplicial complex on at most `max_vertices` vertices with at
/// most `max_cells` simplices.
pub fn simplicial_complex<R: Rng>(rng: &mut R, max_vertices: usize, max_cells: usize) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(1..=max_vertices.max(1));
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let facets: Vec<Vec<usize>> = (0..rng.gen_range(1..=5))
            .map(|_| {
                let size = rng.gen_range(1..=n.min(4));
                let mut f: Vec<usize> = (0..n).collect();
                for i in 0..size {
                    let j = rng.gen_range(i..n);
                    f.swap(i, j);
                }
                f.truncate(size);
                f
            })
            .collect();
        let k = SimplicialComplex::from_facets(labels, facets);
        if k.len() <= max_cells {
            return k;
        }
    }
}

/// One vertex, a few loops and 2-cells attached with coefficients in
/// `-2..=2`, so torsion is common.
pub fn cw_complex<R: Rng>(rng: &mut R, name: &str) -> CellComplex {
    let loops = rng.gen_range(0..=4);
    let discs = rng.gen_range(0..=4);
    let mut cells = vec![Cell::new("v", 0, vec![])];
    cells.extend((0..loops).map(|i| Cell::new(format!("l{i}"), 1, vec![])));
    for d in 0..discs {
        let boundary = (0..loops)
            .filter_map(|i| {
                let c = rng.gen_range(-2i64..=2);
                (c != 0).then(|| (format!("l{i}"), c))
            })
            .collect();
        cells.push(Cell::new(format!("D{d}"), 2, boundary));
    }
    CellComplex::new(name, cells)
}

fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(BigInt::from(rng.gen_range(lo * den..=hi * den)), BigInt::from(den))
}

/// Valid coordinates: integral with even total intersection, or weighted
/// with rational entries.
pub fn dt_coords<R: Rng>(rng: &mut R, integral: bool) -> DtCoords {
    loop {
        let mut m: [Rational; 3] = std::array::from_fn(|_| {
            if rng.gen_bool(0.2) {
                Rational::zero()
            } else if integral {
                Rational::from_integer(BigInt::from(rng.gen_range(1..=12)))
            } else {
                let r = rational(rng, 0, 8, 6);
                if r.is_zero() {
                    Rational::new(BigInt::from(1), BigInt::from(7))
                } else {
                    r
                }
            }
        });
        if m.iter().all(|x| x.is_zero()) {
            continue;
        }
        if integral {
            let total: Rational = m.iter().cloned().sum();
            if (total.to_integer() % 2u32) != BigInt::zero() {
                let i = (0..3).find(|&i| !m[i].is_zero()).expect("non-zero entry");
                m[i] += Rational::one();
            }
        }
        let t = std::array::from_fn(|i| {
            if m[i].is_zero() {
                Rational::zero()
            } else if integral {
                Rational::from_integer(BigInt::from(rng.gen_range(-30..=30)))
            } else {
                rational(rng, -20, 20, 6)
            }
        });
        return DtCoords::new(m, t, integral);
    }
}
