//! Bordered surface signatures, the arc-complex dimension formula and the
//! sphericity classifier.
//!
//! A signature `F g=<genus> s=<punctures> d=<δ1>,...,<δr>` describes an
//! oriented genus-`g` surface with `s` punctures and `r` boundary circles, the
//! `i`-th of which carries `δi` distinguished points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("surface needs at least one boundary component")]
    NoBoundary,
    #[error("boundary component {index} has no distinguished point")]
    ZeroCusps { index: usize },
    #[error("cannot parse surface signature {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("surface {0} has no essential arc")]
    Degenerate(SurfaceSpec),
}

/// Signature `(g, s, δ)` of a bordered surface.
///
/// The cusp vector is kept sorted in descending order; classification only
/// depends on it as a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct SurfaceSpec {
    genus: u32,
    punctures: u32,
    cusps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    genus: u32,
    punctures: u32,
    cusps: Vec<u32>,
}

impl TryFrom<RawSpec> for SurfaceSpec {
    type Error = SurfaceError;
    fn try_from(raw: RawSpec) -> Result<Self, Self::Error> {
        SurfaceSpec::new(raw.genus, raw.punctures, raw.cusps)
    }
}

impl From<SurfaceSpec> for RawSpec {
    fn from(spec: SurfaceSpec) -> Self {
        RawSpec { genus: spec.genus, punctures: spec.punctures, cusps: spec.cusps }
    }
}

impl SurfaceSpec {
    pub fn new(genus: u32, punctures: u32, mut cusps: Vec<u32>) -> Result<Self, SurfaceError> {
        if cusps.is_empty() {
            return Err(SurfaceError::NoBoundary);
        }
        if let Some(index) = cusps.iter().position(|&d| d == 0) {
            return Err(SurfaceError::ZeroCusps { index });
        }
        cusps.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SurfaceSpec { genus, punctures, cusps })
    }

    /// The `n`-gon, `F g=0 s=0 d=n`.
    pub fn polygon(n: u32) -> Result<Self, SurfaceError> {
        Self::new(0, 0, vec![n])
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn cusps(&self) -> &[u32] {
        &self.cusps
    }

    /// Number of boundary components `r`.
    pub fn boundary_count(&self) -> u32 {
        self.cusps.len() as u32
    }

    /// Total number of distinguished points `Δ`.
    pub fn total_cusps(&self) -> u32 {
        self.cusps.iter().sum()
    }

    fn all_single_cusps(&self) -> bool {
        self.cusps.iter().all(|&d| d == 1)
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F g={} s={} d=", self.genus, self.punctures)?;
        for (i, d) in self.cusps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SurfaceSpec {
    type Err = SurfaceError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| SurfaceError::Parse { input: input.to_string(), reason: reason.to_string() };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact.strip_prefix('F').ok_or_else(|| fail("expected leading 'F'"))?;
        let rest = rest.strip_prefix("g=").ok_or_else(|| fail("expected 'g='"))?;
        let (genus, rest) = rest.split_once("s=").ok_or_else(|| fail("expected 's='"))?;
        let (punctures, cusps) = rest.split_once("d=").ok_or_else(|| fail("expected 'd='"))?;
        let number = |text: &str, what: &str| {
            if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(fail(&format!("{what} must be a non-negative integer")));
            }
            text.parse::<u32>().map_err(|_| fail(&format!("{what} out of range")))
        };
        let genus = number(genus, "genus")?;
        let punctures = number(punctures, "puncture count")?;
        let cusps = cusps
            .split(',')
            .map(|d| number(d, "cusp count"))
            .collect::<Result<Vec<_>, _>>()?;
        SurfaceSpec::new(genus, punctures, cusps)
    }
}

/// Coarse verdict on the arc complex of a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "dimension")]
pub enum SphericityVerdict {
    EmptyComplex,
    Spherical(i64),
    NonSphereManifold(i64),
    NonManifold(i64),
}

impl SphericityVerdict {
    pub fn dimension(&self) -> Option<i64> {
        match *self {
            SphericityVerdict::EmptyComplex => None,
            SphericityVerdict::Spherical(n)
            | SphericityVerdict::NonSphereManifold(n)
            | SphericityVerdict::NonManifold(n) => Some(n),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SphericityVerdict::EmptyComplex => "EmptyComplex",
            SphericityVerdict::Spherical(_) => "Spherical",
            SphericityVerdict::NonSphereManifold(_) => "NonSphereManifold",
            SphericityVerdict::NonManifold(_) => "NonManifold",
        }
    }
}

impl fmt::Display for SphericityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dimension() {
            Some(n) => write!(f, "{} dim={n}", self.kind_name()),
            None => f.write_str(self.kind_name()),
        }
    }
}

/// The four minimal surfaces whose arc complexes are manifolds but not spheres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Type1Id {
    F040,
    F031,
    F022,
    F120,
}

impl Type1Id {
    pub const ALL: [Type1Id; 4] = [Type1Id::F040, Type1Id::F031, Type1Id::F022, Type1Id::F120];

    /// `(g, r, s)` of the surface; all cusp counts are one.
    pub fn signature(self) -> (u32, u32, u32) {
        match self {
            Type1Id::F040 => (0, 4, 0),
            Type1Id::F031 => (0, 3, 1),
            Type1Id::F022 => (0, 2, 2),
            Type1Id::F120 => (1, 2, 0),
        }
    }

    pub fn surface(self) -> SurfaceSpec {
        let (g, r, s) = self.signature();
        SurfaceSpec::new(g, s, vec![1; r as usize]).expect("type 1 signatures are valid")
    }
}

impl fmt::Display for Type1Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `N = 6g - 7 + 3r + 2s + Δ`.
pub fn dimension(spec: &SurfaceSpec) -> i64 {
    6 * i64::from(spec.genus) - 7
        + 3 * i64::from(spec.boundary_count())
        + 2 * i64::from(spec.punctures)
        + i64::from(spec.total_cusps())
}

/// False exactly for the monogon, bigon, triangle and once-punctured monogon.
pub fn has_essential_arc(spec: &SurfaceSpec) -> bool {
    let single_boundary = spec.genus == 0 && spec.boundary_count() == 1;
    let d = spec.cusps[0];
    !(single_boundary && ((spec.punctures == 0 && d <= 3) || (spec.punctures == 1 && d == 1)))
}

fn is_type1_signature(spec: &SurfaceSpec) -> Option<Type1Id> {
    let key = (spec.genus, spec.boundary_count(), spec.punctures);
    Type1Id::ALL.into_iter().find(|t| t.signature() == key)
}

/// The exact type-1 surface this spec is, if any (signature and all δ = 1).
pub fn as_type1(spec: &SurfaceSpec) -> Option<Type1Id> {
    is_type1_signature(spec).filter(|_| spec.all_single_cusps())
}

fn spherical_signature(spec: &SurfaceSpec) -> bool {
    let (g, r, s) = (spec.genus, spec.boundary_count(), spec.punctures);
    (g == 0 && (r == 1 || r + s <= 3)) || (g == 1 && r == 1 && s <= 1)
}

pub fn classify(spec: &SurfaceSpec) -> SphericityVerdict {
    if !has_essential_arc(spec) {
        return SphericityVerdict::EmptyComplex;
    }
    let n = dimension(spec);
    if spherical_signature(spec) {
        SphericityVerdict::Spherical(n)
    } else if as_type1(spec).is_some() {
        SphericityVerdict::NonSphereManifold(n)
    } else {
        SphericityVerdict::NonManifold(n)
    }
}

/// A type-1 surface embedded in `spec` as a complementary component of some
/// arc family, for every spec whose arc complex fails to be a manifold.
pub fn contains_type1(spec: &SurfaceSpec) -> Option<Type1Id> {
    if !matches!(classify(spec), SphericityVerdict::NonManifold(_)) {
        return None;
    }
    let (g, r, s) = (spec.genus, spec.boundary_count(), spec.punctures);
    let witness = match g {
        g if g >= 3 => Type1Id::F040,
        2 if r > 1 => Type1Id::F040,
        2 if s > 1 => Type1Id::F031,
        2 => Type1Id::F120,
        1 if r > 2 => Type1Id::F040,
        1 if s > 1 => Type1Id::F022,
        1 => Type1Id::F120,
        _ => match r {
            r if r >= 4 => Type1Id::F040,
            3 => Type1Id::F031,
            _ => Type1Id::F022,
        },
    };
    Some(witness)
}

/// Arcs in a maximal arc family: `N + 1`.
pub fn quasi_triangulation_arc_count(spec: &SurfaceSpec) -> Result<u64, SurfaceError> {
    if !has_essential_arc(spec) {
        return Err(SurfaceError::Degenerate(spec.clone()));
    }
    Ok((dimension(spec) + 1) as u64)
}

/// Rank of first homology of a genus-`g` surface with `boundary_count`
/// boundary circles and `s` punctures.
pub fn h1_rank(g: u32, boundary_count: u32, s: u32) -> u32 {
    2 * g + boundary_count + s - 1
}

/// Every signature with `dimension <= max_dim`, one per δ-multiset, in
/// ascending `(g, s, r, δ)` order.
pub fn enumerate_specs(max_dim: i64) -> Vec<SurfaceSpec> {
    let mut out = Vec::new();
    // N >= 6g - 7 + 4r + 2s, so every coordinate is bounded
    let mut g = 0u32;
    while 6 * i64::from(g) - 7 + 4 <= max_dim {
        let mut s = 0u32;
        while 6 * i64::from(g) - 7 + 4 + 2 * i64::from(s) <= max_dim {
            let mut r = 1u32;
            loop {
                let base = 6 * i64::from(g) - 7 + 3 * i64::from(r) + 2 * i64::from(s);
                if base + i64::from(r) > max_dim {
                    break;
                }
                let budget = (max_dim - base) as u32;
                for cusps in partitions_with_parts(r, budget) {
                    out.push(SurfaceSpec::new(g, s, cusps).expect("partitions are positive"));
                }
                r += 1;
            }
            s += 1;
        }
        g += 1;
    }
    out
}

/// Non-increasing sequences of `parts` positive integers with sum at most `max_sum`.
fn partitions_with_parts(parts: u32, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(parts: u32, max_sum: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            out.push(prefix.clone());
            return;
        }
        // remaining parts each need at least one
        let top = cap.min(max_sum.saturating_sub(parts - 1));
        for d in (1..=top).rev() {
            prefix.push(d);
            go(parts - 1, max_sum - d, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts <= max_sum {
        go(parts, max_sum, max_sum, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> SurfaceSpec {
        text.parse().unwrap()
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(dimension(&spec("F g=0 s=0 d=4")), 0);
        assert_eq!(dimension(&spec("F g=0 s=3 d=1")), 3);
        assert_eq!(dimension(&spec("F g=0 s=0 d=1,1,1")), 5);
        assert_eq!(dimension(&spec("F g=0 s=0 d=1")), -3);
    }

    #[test]
    fn essential_arcs() {
        assert!(!has_essential_arc(&spec("F g=0 s=0 d=3")));
        assert!(!has_essential_arc(&spec("F g=0 s=1 d=1")));
        assert!(has_essential_arc(&spec("F g=0 s=1 d=2")));
        assert!(!has_essential_arc(&spec("F g=0 s=0 d=1")));
        assert!(!has_essential_arc(&spec("F g=0 s=0 d=2")));
        assert!(has_essential_arc(&spec("F g=0 s=0 d=1,1")));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&spec("F g=0 s=2 d=1,1")), SphericityVerdict::NonSphereManifold(5));
        assert_eq!(classify(&spec("F g=0 s=0 d=7")), SphericityVerdict::Spherical(3));
        assert_eq!(classify(&spec("F g=2 s=0 d=1")), SphericityVerdict::NonManifold(9));
        assert_eq!(classify(&spec("F g=0 s=0 d=3")), SphericityVerdict::EmptyComplex);
        assert_eq!(classify(&spec("F g=1 s=1 d=1")), SphericityVerdict::Spherical(5));
        assert_eq!(classify(&spec("F g=0 s=0 d=1,1")), SphericityVerdict::Spherical(1));
        assert_eq!(classify(&spec("F g=0 s=0 d=3,2")), SphericityVerdict::Spherical(4));
        assert_eq!(classify(&spec("F g=0 s=2 d=2,1")), SphericityVerdict::NonManifold(6));
    }

    #[test]
    fn type1_witnesses() {
        assert_eq!(contains_type1(&spec("F g=3 s=0 d=1")), Some(Type1Id::F040));
        assert_eq!(contains_type1(&spec("F g=1 s=2 d=1")), Some(Type1Id::F022));
        assert_eq!(contains_type1(&spec("F g=0 s=0 d=5")), None);
        assert_eq!(contains_type1(&spec("F g=2 s=0 d=1")), Some(Type1Id::F120));
        assert_eq!(contains_type1(&spec("F g=0 s=2 d=1,1")), None);
        assert_eq!(contains_type1(&spec("F g=0 s=1 d=2,1,1")), Some(Type1Id::F031));
    }

    #[test]
    fn quasi_triangulations() {
        assert_eq!(quasi_triangulation_arc_count(&spec("F g=0 s=0 d=6")), Ok(3));
        assert_eq!(quasi_triangulation_arc_count(&spec("F g=1 s=0 d=1")), Ok(4));
        assert_eq!(quasi_triangulation_arc_count(&spec("F g=0 s=0 d=1,1,1")), Ok(6));
        assert!(quasi_triangulation_arc_count(&spec("F g=0 s=0 d=3")).is_err());
    }

    #[test]
    fn first_homology_rank() {
        assert_eq!(h1_rank(0, 1, 0), 0);
        assert_eq!(h1_rank(1, 1, 0), 2);
        assert_eq!(h1_rank(0, 2, 0), 1);
    }

    #[test]
    fn parsing_is_strict_but_whitespace_insensitive() {
        assert_eq!(spec("  F g = 1  s=0 d= 1 , 2 "), SurfaceSpec::new(1, 0, vec![2, 1]).unwrap());
        assert_eq!(spec("F g=1 s=0 d=1,2").to_string(), "F g=1 s=0 d=2,1");
        for bad in ["g=1 s=0 d=1", "F g=1 d=1", "F g=-1 s=0 d=1", "F g=0 s=0 d=", "F g=0 s=0 d=0", "F g=0 s=0 d=1,,2", "F g=0 s=0 d=1 x"] {
            assert!(bad.parse::<SurfaceSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn enumeration_covers_all_small_specs() {
        let specs = enumerate_specs(6);
        assert!(specs.iter().all(|s| dimension(s) <= 6));
        assert!(specs.contains(&spec("F g=0 s=2 d=1,1")));
        assert!(specs.contains(&spec("F g=0 s=0 d=10")));
        assert!(!specs.contains(&spec("F g=0 s=0 d=11")));
        let mut sorted = specs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), specs.len());
    }
}
