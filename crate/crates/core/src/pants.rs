//! Dehn–Thurston coordinates on the pair of pants.
//!
//! A windowed weighted arc family in the pair of pants `P` is recorded by an
//! intersection number `m_i >= 0` and a twisting number `t_i` for each of the
//! three boundary circles. Coordinates are exact rationals.
//!
//! The boundary Dehn twist about circle `i` acts by `t_i -> t_i ± m_i`. The
//! canonical representative of an orbit has `t_i` in the half-open window
//! `(-m_i/2, m_i/2]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chain::{join, minimal_circle, CellComplex, ChainError};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DtError {
    #[error("intersection numbers sum to zero")]
    ZeroTotalWeight,
    #[error("boundary {index} has m = 0 but twist {twist}")]
    TwistWithoutIntersection { index: usize, twist: String },
    #[error("integral coordinates need an even total intersection number")]
    ParityViolation,
    #[error("intersection number on boundary {index} is negative")]
    NegativeWeight { index: usize },
    #[error("integral mode requires integer entries (boundary {index})")]
    NotIntegral { index: usize },
    #[error("join point circle {index}: {reason}")]
    BadJoinPoint { index: usize, reason: &'static str },
    #[error("cannot parse coordinates {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("zero set must be a proper subset of {{1,2,3}}")]
    FullZeroSet,
    #[error(transparent)]
    Chain(#[from] ChainError),
}

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Three `(m_i, t_i)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DtCoords {
    pub pairs: [(Rational, Rational); 3],
    pub integral: bool,
}

impl DtCoords {
    pub fn new(m: [Rational; 3], t: [Rational; 3], integral: bool) -> Self {
        let [m1, m2, m3] = m;
        let [t1, t2, t3] = t;
        DtCoords { pairs: [(m1, t1), (m2, t2), (m3, t3)], integral }
    }

    pub fn from_integers(m: [i64; 3], t: [i64; 3]) -> Self {
        DtCoords::new(m.map(q), t.map(q), true)
    }

    pub fn weighted(m: [Rational; 3], t: [Rational; 3]) -> Self {
        DtCoords::new(m, t, false)
    }

    pub fn m(&self, i: usize) -> &Rational {
        &self.pairs[i].0
    }

    pub fn t(&self, i: usize) -> &Rational {
        &self.pairs[i].1
    }

    pub fn intersections(&self) -> [Rational; 3] {
        [self.m(0).clone(), self.m(1).clone(), self.m(2).clone()]
    }
}

impl fmt::Display for DtCoords {
    /// `m1,m2,m3;t1,t2,t3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.pairs.iter().map(|(m, _)| m.to_string()).collect();
        let ts: Vec<String> = self.pairs.iter().map(|(_, t)| t.to_string()).collect();
        write!(f, "{};{}", ms.join(","), ts.join(","))
    }
}

impl FromStr for DtCoords {
    type Err = DtError;

    /// Parses `m1,m2,m3;t1,t2,t3` with entries `p` or `p/q`. Integral mode
    /// is chosen when every entry is an integer.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| DtError::Parse { input: input.to_string(), reason: reason.to_string() };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let (ms, ts) = compact.split_once(';').ok_or_else(|| fail("expected ';' between m and t"))?;
        let triple = |text: &str| -> Result<[Rational; 3], DtError> {
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != 3 {
                return Err(fail("expected three comma-separated entries"));
            }
            let mut out = [q(0), q(0), q(0)];
            for (slot, part) in out.iter_mut().zip(parts) {
                *slot = parse_rational(part).ok_or_else(|| fail(&format!("bad rational {part:?}")))?;
            }
            Ok(out)
        };
        let m = triple(ms)?;
        let t = triple(ts)?;
        let integral = m.iter().chain(&t).all(Rational::is_integer);
        Ok(DtCoords::new(m, t, integral))
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    match text.split_once('/') {
        Some((p, d)) => {
            let d = int(d)?;
            if d.is_zero() || d.is_negative() {
                return None;
            }
            Some(Rational::new(int(p)?, d))
        }
        None => Some(Rational::from_integer(int(text)?)),
    }
}

pub fn validate_dt(c: &DtCoords) -> Result<(), DtError> {
    for (index, (m, t)) in c.pairs.iter().enumerate() {
        if m.is_negative() {
            return Err(DtError::NegativeWeight { index: index + 1 });
        }
        if c.integral && !(m.is_integer() && t.is_integer()) {
            return Err(DtError::NotIntegral { index: index + 1 });
        }
    }
    let total: Rational = c.pairs.iter().map(|(m, _)| m.clone()).sum();
    if total.is_zero() {
        return Err(DtError::ZeroTotalWeight);
    }
    for (index, (m, t)) in c.pairs.iter().enumerate() {
        if m.is_zero() && !t.is_zero() {
            return Err(DtError::TwistWithoutIntersection { index: index + 1, twist: t.to_string() });
        }
    }
    if c.integral && total.to_integer().is_odd() {
        return Err(DtError::ParityViolation);
    }
    Ok(())
}

/// Canonical coordinates together with the twist counts `k_i` removed:
/// `t_i = t_canonical_i + k_i m_i`.
pub fn normalize_dt(c: &DtCoords) -> Result<(DtCoords, [BigInt; 3]), DtError> {
    validate_dt(c)?;
    let mut out = c.clone();
    let mut counts = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (i, (m, t)) in out.pairs.iter_mut().enumerate() {
        if m.is_zero() {
            continue;
        }
        // smallest k with t - k m <= m/2, i.e. k = ceil(t/m - 1/2)
        let k = (&*t / &*m - half()).ceil().to_integer();
        *t -= Rational::from_integer(k.clone()) * &*m;
        counts[i] = k;
    }
    Ok((out, counts))
}

pub fn is_canonical(c: &DtCoords) -> bool {
    c.pairs.iter().all(|(m, t)| {
        let h = m * half();
        if m.is_zero() {
            t.is_zero()
        } else {
            -&h < *t && *t <= h
        }
    })
}

/// Arc weights realizing given intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PantsArcTypes {
    /// `x12, x13, x23`: arcs joining distinct boundary circles.
    pub connectors: [Rational; 3],
    /// `l1, l2, l3`: loops based at circle `i`.
    pub loops: [Rational; 3],
}

impl PantsArcTypes {
    /// Weight of the connector between circles `i != j` (0-based).
    pub fn connector(&self, i: usize, j: usize) -> &Rational {
        let slot = match (i.min(j), i.max(j)) {
            (0, 1) => 0,
            (0, 2) => 1,
            (1, 2) => 2,
            _ => panic!("connector needs two distinct circles"),
        };
        &self.connectors[slot]
    }

    /// `m_i = Σ_{j≠i} x_ij + 2 l_i`.
    pub fn endpoint_counts(&self) -> [Rational; 3] {
        std::array::from_fn(|i| {
            let others: Rational = (0..3).filter(|&j| j != i).map(|j| self.connector(i, j).clone()).sum();
            others + q(2) * &self.loops[i]
        })
    }
}

/// Unique non-negative solution of the endpoint equations. A loop appears
/// at circle `i` only when `m_i` strictly exceeds the other two combined.
pub fn arc_types_from_m(m: &[Rational; 3], integral: bool) -> Result<PantsArcTypes, DtError> {
    let zero = [q(0), q(0), q(0)];
    validate_dt(&DtCoords::new(m.clone(), zero.clone(), integral))?;
    let mut connectors = zero.clone();
    let mut loops = zero;
    let pairs = [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)];
    match (0..3).find(|&i| m[i] > &m[(i + 1) % 3] + &m[(i + 2) % 3]) {
        None => {
            for (slot, &(i, j, k)) in pairs.iter().enumerate() {
                connectors[slot] = (&m[i] + &m[j] - &m[k]) * half();
            }
        }
        Some(big) => {
            for (slot, &(i, j, _)) in pairs.iter().enumerate() {
                if i == big {
                    connectors[slot] = m[j].clone();
                } else if j == big {
                    connectors[slot] = m[i].clone();
                }
            }
            let rest = &m[(big + 1) % 3] + &m[(big + 2) % 3];
            loops[big] = (&m[big] - rest) * half();
        }
    }
    Ok(PantsArcTypes { connectors, loops })
}

/// Rotation `t_i -> t_i + θ_i m_i`.
pub fn torus_act(c: &DtCoords, theta: &[Rational; 3]) -> Result<DtCoords, DtError> {
    validate_dt(c)?;
    let mut out = c.clone();
    for ((m, t), th) in out.pairs.iter_mut().zip(theta) {
        *t += th * &*m;
    }
    if out.integral && !out.pairs.iter().all(|(_, t)| t.is_integer()) {
        out.integral = false;
    }
    Ok(out)
}

/// A point of `S¹ * S¹ * S¹`: per-circle magnitude `L_i >= 0` and circle
/// coordinate `s_i` in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinPoint {
    pub magnitudes: [Rational; 3],
    pub circle: [Rational; 3],
}

impl JoinPoint {
    pub fn validate(&self) -> Result<(), DtError> {
        for i in 0..3 {
            let (l, s) = (&self.magnitudes[i], &self.circle[i]);
            if l.is_negative() {
                return Err(DtError::BadJoinPoint { index: i + 1, reason: "negative magnitude" });
            }
            if s.is_negative() || *s >= q(1) {
                return Err(DtError::BadJoinPoint { index: i + 1, reason: "circle coordinate outside [0,1)" });
            }
            if l.is_zero() && !s.is_zero() {
                return Err(DtError::BadJoinPoint { index: i + 1, reason: "collapsed circle with non-zero coordinate" });
            }
        }
        if self.magnitudes.iter().all(Zero::is_zero) {
            return Err(DtError::ZeroTotalWeight);
        }
        Ok(())
    }

    /// Representative with magnitudes summing to one.
    pub fn projectivized(&self) -> JoinPoint {
        let total: Rational = self.magnitudes.iter().cloned().sum();
        JoinPoint { magnitudes: self.magnitudes.clone().map(|l| l / &total), circle: self.circle.clone() }
    }

    pub fn projectively_equal(&self, other: &JoinPoint) -> bool {
        self.projectivized() == other.projectivized()
    }
}

/// `L_i = m_i`, `s_i = (t_i/m_i + 1/2) mod 1`; the glued rays land on `s = 0`.
pub fn to_join_point(c: &DtCoords) -> Result<JoinPoint, DtError> {
    validate_dt(c)?;
    let circle = std::array::from_fn(|i| {
        let (m, t) = &c.pairs[i];
        if m.is_zero() {
            q(0)
        } else {
            let s = t / m + half();
            &s - s.floor()
        }
    });
    Ok(JoinPoint { magnitudes: c.intersections(), circle })
}

/// Inverse chart; returns canonical coordinates. Integral mode is set when
/// the result has integer entries with even total.
pub fn from_join_point(j: &JoinPoint) -> Result<DtCoords, DtError> {
    j.validate()?;
    let t = std::array::from_fn(|i| {
        let (l, s) = (&j.magnitudes[i], &j.circle[i]);
        if l.is_zero() {
            q(0)
        } else if s.is_zero() {
            l * half()
        } else {
            (s - half()) * l
        }
    });
    let m = j.magnitudes.clone();
    let integral = m.iter().chain(&t).all(Rational::is_integer)
        && m.iter().cloned().sum::<Rational>().to_integer().is_even();
    Ok(DtCoords::new(m, t, integral))
}

/// `S¹ * S¹ * S¹` from three one-vertex circles `v_i`, `e_i`.
pub fn pants_complex() -> CellComplex {
    pants_subcomplex(&[]).expect("empty zero set")
}

/// Drops the circles indexed (1-based) by `zero_set`: families that miss
/// those boundary components.
pub fn pants_subcomplex(zero_set: &[usize]) -> Result<CellComplex, DtError> {
    if (1..=3).all(|i| zero_set.contains(&i)) {
        return Err(DtError::FullZeroSet);
    }
    let mut acc = CellComplex::empty("void");
    for i in (1..=3).filter(|i| !zero_set.contains(i)) {
        let circle = minimal_circle(&format!("S1_{i}"), &format!("v{i}"), &format!("e{i}"));
        acc = join(&acc, &circle)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{homology, is_homology_sphere};

    fn r(text: &str) -> Rational {
        parse_rational(text).unwrap()
    }

    #[test]
    fn validation() {
        assert!(validate_dt(&DtCoords::from_integers([2, 3, 1], [0, 1, -2])).is_ok());
        assert!(matches!(
            validate_dt(&DtCoords::from_integers([0, 1, 1], [1, 0, 0])),
            Err(DtError::TwistWithoutIntersection { index: 1, .. })
        ));
        assert_eq!(validate_dt(&DtCoords::from_integers([1, 1, 1], [0, 0, 0])), Err(DtError::ParityViolation));
        assert_eq!(validate_dt(&DtCoords::from_integers([0, 0, 0], [0, 0, 0])), Err(DtError::ZeroTotalWeight));
        let weighted = DtCoords::weighted([r("1"), r("1"), r("1")], [r("0"), r("1/3"), r("0")]);
        assert!(validate_dt(&weighted).is_ok());
    }

    #[test]
    fn normalization_window() {
        let (c, k) = normalize_dt(&DtCoords::from_integers([2, 2, 0], [3, -1, 0])).unwrap();
        assert_eq!(c, DtCoords::from_integers([2, 2, 0], [1, 1, 0]));
        assert_eq!(k, [BigInt::from(1), BigInt::from(-1), BigInt::from(0)]);
        let (again, k2) = normalize_dt(&c).unwrap();
        assert_eq!(again, c);
        assert!(k2.iter().all(Zero::is_zero));
    }

    #[test]
    fn normalize_cli_example() {
        let c: DtCoords = "2,3,1;5,-4,0".parse().unwrap();
        let (n, k) = normalize_dt(&c).unwrap();
        assert_eq!(n.to_string(), "2,3,1;1,-1,0");
        assert_eq!(k, [BigInt::from(2), BigInt::from(-1), BigInt::from(0)]);
    }

    #[test]
    fn arc_types() {
        let t = arc_types_from_m(&[r("1"), r("1"), r("2")], true).unwrap();
        assert_eq!(t.connectors, [r("0"), r("1"), r("1")]);
        assert_eq!(t.loops, [r("0"), r("0"), r("0")]);
        let t = arc_types_from_m(&[r("4"), r("1"), r("1")], true).unwrap();
        assert_eq!(t.connectors, [r("1"), r("1"), r("0")]);
        assert_eq!(t.loops, [r("1"), r("0"), r("0")]);
        let t = arc_types_from_m(&[r("2"), r("2"), r("2")], true).unwrap();
        assert_eq!(t.connectors, [r("1"), r("1"), r("1")]);
        assert_eq!(arc_types_from_m(&[r("1"), r("1"), r("1")], true), Err(DtError::ParityViolation));
        let t = arc_types_from_m(&[r("3"), r("1"), r("2")], true).unwrap();
        assert!(t.loops.iter().all(Zero::is_zero));
        assert_eq!(t.endpoint_counts(), [r("3"), r("1"), r("2")]);
    }

    #[test]
    fn torus_action() {
        let c = DtCoords::from_integers([2, 0, 2], [0, 0, 0]);
        let id = torus_act(&c, &[r("0"), r("0"), r("0")]).unwrap();
        assert_eq!(id, c);
        let moved = torus_act(&c, &[r("1/2"), r("1/2"), r("1/2")]).unwrap();
        assert_eq!(moved, DtCoords::from_integers([2, 0, 2], [1, 0, 1]));
        // just below a full turn: t = 2 * 99/100, normalized back by one twist
        let c = DtCoords::from_integers([2, 0, 0], [0, 0, 0]);
        let near = torus_act(&c, &[r("99/100"), r("0"), r("0")]).unwrap();
        let (n, k) = normalize_dt(&near).unwrap();
        assert_eq!(k[0], BigInt::from(1));
        assert_eq!(n.t(0), &r("-1/50"));
    }

    #[test]
    fn join_chart() {
        let c = DtCoords::from_integers([2, 2, 0], [0, 1, 0]);
        let j = to_join_point(&c).unwrap();
        assert_eq!(j.magnitudes, [r("2"), r("2"), r("0")]);
        assert_eq!(j.circle, [r("1/2"), r("0"), r("0")]);
        assert_eq!(from_join_point(&j).unwrap(), c);
        // the other glued ray maps to the same point
        let other = DtCoords::from_integers([2, 2, 0], [0, -1, 0]);
        assert_eq!(to_join_point(&other).unwrap(), j);
        assert!(to_join_point(&DtCoords::from_integers([0, 0, 0], [0, 0, 0])).is_err());
    }

    #[test]
    fn pants_complexes() {
        assert!(is_homology_sphere(&homology(&pants_complex()).unwrap(), 5));
        assert!(is_homology_sphere(&homology(&pants_subcomplex(&[1]).unwrap()).unwrap(), 3));
        assert!(is_homology_sphere(&homology(&pants_subcomplex(&[1, 2]).unwrap()).unwrap(), 1));
        assert_eq!(pants_subcomplex(&[1, 2, 3]), Err(DtError::FullZeroSet));
    }

    #[test]
    fn parsing() {
        let c: DtCoords = "1/2, 1/2, 1; 0, -1/4, 0".parse().unwrap();
        assert!(!c.integral);
        assert_eq!(c.m(0), &r("1/2"));
        for bad in ["1,2;0,0,0", "1,2,3", "1,a,3;0,0,0", "1/0,1,1;0,0,0", "1,1,1;0,0,0/-2"] {
            assert!(bad.parse::<DtCoords>().is_err(), "{bad}");
        }
    }
}
