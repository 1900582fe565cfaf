//! The full acceptance report: each row states a claim, the expected and
//! observed values, and whether they agree.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{build_catalog, build_f013, derive_f110_boundaries, enumerate_tableaux, tableau};
use crate::chain::{homology, is_homology_sphere, split_boundary, suspension, CellComplex, HomologyResult};
use crate::pants::{
    arc_types_from_m, from_join_point, is_canonical, normalize_dt, pants_complex, pants_subcomplex, to_join_point, torus_act, validate_dt,
    DtCoords, Rational,
};
use crate::polygon::{build_polygon_complex, polygon_simplicial_complex, DEFAULT_CAP};
use crate::random;
use crate::surface::{classify, enumerate_specs, SphericityVerdict, SurfaceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0x5eed, cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: u8,
    pub claim: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
}

impl Claim {
    fn new(id: u8, claim: &str, expected: impl Into<String>, got: impl Into<String>) -> Self {
        let (expected, got) = (expected.into(), got.into());
        let passed = expected == got;
        Claim { id, claim: claim.to_string(), expected, got, passed }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Dissections of an `n`-gon by `k` non-crossing diagonals.
pub fn dissections(n: u64, k: u64) -> u64 {
    binomial(n - 3, k) * binomial(n + k - 1, k) / (k + 1)
}

pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

fn join_list<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn sphere_text(k: &CellComplex) -> String {
    homology(k).map_or_else(|e| format!("error: {e}"), |h| h.to_string())
}

/// Reduced Betti numbers and torsion, shifted so index 0 is degree -1.
fn reduced(h: &HomologyResult) -> (Vec<u64>, Vec<Vec<u64>>) {
    let mut betti = vec![0];
    betti.extend(h.betti.iter().copied());
    let mut torsion = vec![Vec::new()];
    torsion.extend(h.torsion.iter().cloned());
    if betti.len() > 1 && betti[1] > 0 {
        betti[1] -= 1;
    } else {
        betti[0] = 1;
    }
    trim(betti, torsion)
}

fn trim(mut betti: Vec<u64>, mut torsion: Vec<Vec<u64>>) -> (Vec<u64>, Vec<Vec<u64>>) {
    while betti.last() == Some(&0) && torsion.last().is_some_and(Vec::is_empty) {
        betti.pop();
        torsion.pop();
    }
    (betti, torsion)
}

fn suspension_shift_holds(k: &CellComplex) -> bool {
    let (Ok(h), Ok(hs)) = (homology(k), suspension(k).and_then(|s| homology(&s))) else {
        return false;
    };
    let (b, t) = reduced(&h);
    let shifted = trim([vec![0], b].concat(), [vec![Vec::new()], t].concat());
    reduced(&hs) == shifted
}

fn polygons(cap: usize) -> Vec<(usize, CellComplex)> {
    (4..=9.min(cap)).filter_map(|n| build_polygon_complex(n, cap).ok().map(|k| (n, k))).collect()
}

fn criterion_polygons(polys: &[(usize, CellComplex)]) -> Claim {
    let mut bad = Vec::new();
    for (n, k) in polys {
        let n = *n;
        let h = homology(k);
        if !h.as_ref().is_ok_and(|h| is_homology_sphere(h, n - 4)) {
            bad.push(format!("n={n} homology"));
        }
        let chi = if n % 2 == 0 { 2 } else { 0 };
        if k.euler_characteristic() != chi {
            bad.push(format!("n={n} euler"));
        }
        let oracle: Vec<usize> = (1..=(n as u64 - 3)).map(|k| dissections(n as u64, k) as usize).collect();
        if k.f_vector() != oracle {
            bad.push(format!("n={n} f-vector"));
        }
        if k.f_vector().last().copied() != Some(catalan(n - 2) as usize) {
            bad.push(format!("n={n} top cells"));
        }
    }
    let ns: Vec<usize> = polys.iter().map(|(n, _)| *n).collect();
    Claim::new(1, "polygon complexes are homology spheres with dissection counts", format!("n={} ok", join_list(&ns)), got_or(&bad, &ns))
}

fn got_or(bad: &[String], ns: &[usize]) -> String {
    if bad.is_empty() {
        format!("n={} ok", join_list(ns))
    } else {
        bad.join("; ")
    }
}

fn criterion_suspension(polys: &[(usize, CellComplex)], rng: &mut ChaCha8Rng) -> Claim {
    let mut bad = Vec::new();
    for pair in polys.windows(2) {
        let (n, k) = &pair[0];
        let lhs = suspension(k).and_then(|s| homology(&s));
        let rhs = homology(&pair[1].1);
        if lhs.is_err() || lhs != rhs {
            bad.push(format!("n={n}"));
        }
    }
    let mut random_ok = 0;
    for i in 0..100 {
        let k = if i % 2 == 0 {
            random::simplicial_complex(rng, 6, 30).to_cell_complex("r")
        } else {
            random::cw_complex(rng, "r")
        };
        if suspension_shift_holds(&k) {
            random_ok += 1;
        }
    }
    let got = format!("{}; random {random_ok}/100", if bad.is_empty() { "polygons ok".to_string() } else { bad.join(",") });
    Claim::new(2, "suspension raises reduced homology by one degree", "polygons ok; random 100/100", got)
}

fn criterion_f013() -> Claim {
    let counts = tableau::counts_by_dimension(&enumerate_tableaux(4));
    let k = build_f013();
    let dd = (2..=3).all(|p| k.boundary_matrix(p - 1).mul(&k.boundary_matrix(p)).is_zero());
    let got = format!("tableaux ({}), dd={}, {}, chi={}", join_list(&counts), if dd { 0 } else { 1 }, sphere_text(&k), k.euler_characteristic());
    Claim::new(3, "thrice-punctured monogon: tableaux and boundary table", format!("tableaux (6,18,24,12), dd=0, {}, chi=0", HomologyResult::sphere(3)), got)
}

fn criterion_f110() -> Claim {
    let got = match derive_f110_boundaries() {
        Ok(d) => {
            let count = |c: &str, f: &str| d.face_counts.get(&(c.to_string(), f.to_string())).copied().unwrap_or(0);
            let blowup = build_catalog("F110_blowup").map_or_else(|e| e.to_string(), |e| sphere_text(&e.complex));
            format!(
                "quotient ({}), final ({}) {}, blowup {}, degrees {},{},{}",
                join_list(&d.quotient.f_vector()),
                join_list(&d.complex.f_vector()),
                sphere_text(&d.complex),
                blowup,
                count("beta1", "alpha1"),
                count("beta2", "alpha2"),
                count("gamma", "beta1")
            )
        }
        Err(e) => e.to_string(),
    };
    let s3 = HomologyResult::sphere(3);
    Claim::new(4, "torus minus a disk from a quotient of a 3-simplex", format!("quotient (2,3,2,1), final (1,2,2,1) {s3}, blowup {s3}, degrees 1,3,2"), got)
}

fn criterion_pants() -> Claim {
    let sub = |z: &[usize]| pants_subcomplex(z).map_or_else(|e| e.to_string(), |k| sphere_text(&k));
    let cat = |n: &str| build_catalog(n).map_or_else(|e| e.to_string(), |e| sphere_text(&e.complex));
    let got = format!(
        "pants {}; zero {{1}} {}; zero {{1,2}} {}; annulus {}; punctured_bigon {}; F012 {}",
        sphere_text(&pants_complex()),
        sub(&[1]),
        sub(&[1, 2]),
        cat("annulus"),
        cat("punctured_bigon"),
        cat("F012")
    );
    let s = HomologyResult::sphere;
    let expected = format!("pants {}; zero {{1}} {}; zero {{1,2}} {}; annulus {}; punctured_bigon {}; F012 {}", s(5), s(3), s(1), s(1), s(0), s(1));
    Claim::new(5, "pants complex and its zero-set subcomplexes", expected, got)
}

fn criterion_classifier() -> Claim {
    let specs = enumerate_specs(6);
    let low_ok = specs.iter().filter(|s| crate::surface::dimension(s) <= 4).all(|s| {
        matches!(classify(s), SphericityVerdict::Spherical(_) | SphericityVerdict::EmptyComplex)
    });
    let non_spherical: Vec<(&SurfaceSpec, SphericityVerdict)> =
        specs.iter().map(|s| (s, classify(s))).filter(|(_, v)| matches!(v, SphericityVerdict::NonSphereManifold(_) | SphericityVerdict::NonManifold(_))).collect();
    let min_non = non_spherical.iter().filter_map(|(_, v)| v.dimension()).min();
    let witness: SurfaceSpec = "F g=0 s=2 d=1,1".parse().expect("literal");
    let achieved = non_spherical.iter().any(|(s, v)| **s == witness && v.dimension() == min_non);
    let min_nm = non_spherical.iter().filter(|(_, v)| matches!(v, SphericityVerdict::NonManifold(_))).filter_map(|(_, v)| v.dimension()).min();
    let show = |v: Option<i64>| v.map_or("none".to_string(), |d| d.to_string());
    let got = format!(
        "N<=4 spherical {}, min non-spherical {} at F022 {}, min non-manifold {}",
        low_ok,
        show(min_non),
        achieved,
        show(min_nm)
    );
    Claim::new(6, "classifier over all signatures with N <= 6", "N<=4 spherical true, min non-spherical 5 at F022 true, min non-manifold 6", got)
}

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Failures of the coordinate suite on one sample, by name.
fn dt_sample_failures(c: &DtCoords, rng: &mut ChaCha8Rng) -> Vec<&'static str> {
    let mut bad = Vec::new();
    if validate_dt(c).is_err() {
        bad.push("valid sample rejected");
        return bad;
    }
    // constraint violations
    let j = rng.gen_range(0..3);
    let mut broken = c.clone();
    broken.pairs[j] = (q(0), q(1));
    if validate_dt(&broken).is_ok() {
        bad.push("twist without intersection accepted");
    }
    let mut negative = c.clone();
    negative.pairs[j].0 = -(&negative.pairs[j].0) - q(1);
    if validate_dt(&negative).is_ok() {
        bad.push("negative weight accepted");
    }
    if c.integral {
        let mut odd = c.clone();
        odd.pairs[j].0 += q(1);
        if validate_dt(&odd).is_ok() {
            bad.push("odd total accepted");
        }
    }
    let Ok((canon, _)) = normalize_dt(c) else {
        bad.push("normalize failed");
        return bad;
    };
    match normalize_dt(&canon) {
        Ok((again, k)) if again == canon && k.iter().all(Zero::is_zero) && is_canonical(&canon) => {}
        _ => bad.push("normalize not idempotent"),
    }
    let theta: [Rational; 3] = std::array::from_fn(|_| q(rng.gen_range(-5..=5)));
    match torus_act(c, &theta).and_then(|moved| normalize_dt(&moved)) {
        Ok((n, _)) if n.pairs == canon.pairs => {}
        _ => bad.push("twist changes canonical form"),
    }
    let den = rng.gen_range(2..=12i64);
    let lambda = Rational::new(BigInt::from(rng.gen_range(1..den)), BigInt::from(den));
    let diag = [lambda.clone(), lambda.clone(), lambda];
    match torus_act(c, &diag).and_then(|moved| normalize_dt(&moved)) {
        Ok((n, _)) if n.pairs != canon.pairs => {}
        _ => bad.push("diagonal action fixes a point"),
    }
    match to_join_point(c).and_then(|j| from_join_point(&j).map(|back| (j, back))) {
        Ok((j, back)) if back.pairs == canon.pairs && to_join_point(&back).as_ref() == Ok(&j) => {}
        _ => bad.push("join chart round trip"),
    }
    if c.integral {
        match arc_types_from_m(&c.intersections(), true) {
            Ok(t) => {
                let entries = t.connectors.iter().chain(&t.loops);
                let nonneg_int = entries.clone().all(|x| x.is_integer() && !x.is_negative());
                if !nonneg_int || t.endpoint_counts() != c.intersections() {
                    bad.push("arc types");
                }
            }
            Err(_) => bad.push("arc types failed"),
        }
    }
    bad
}

fn criterion_dt(rng: &mut ChaCha8Rng) -> Claim {
    let mut failures: Vec<&'static str> = Vec::new();
    let mut passed = 0;
    for i in 0..1000 {
        let c = random::dt_coords(rng, i % 2 == 0);
        let bad = dt_sample_failures(&c, rng);
        if bad.is_empty() {
            passed += 1;
        }
        for b in bad {
            if !failures.contains(&b) {
                failures.push(b);
            }
        }
    }
    let mut got = format!("{passed}/1000 samples");
    if !failures.is_empty() {
        let _ = write!(got, " ({})", failures.join(", "));
    }
    Claim::new(7, "coordinate suite on seeded random samples", "1000/1000 samples", got)
}

fn criterion_split(polys: &[(usize, CellComplex)]) -> Claim {
    let mut bad = Vec::new();
    for (n, k) in polys {
        match split_boundary(k) {
            Ok(s) if s.identities(k).all_hold() && s.d2_vanishes() => {}
            _ => bad.push(format!("n={n}")),
        }
    }
    let f110 = derive_f110_boundaries().map(|d| d.complex);
    let f110_ok = f110.as_ref().is_ok_and(|k| split_boundary(k).is_ok_and(|s| s.identities(k).all_hold()));
    let ns: Vec<usize> = polys.iter().map(|(n, _)| *n).collect();
    let got = format!("{}; F110 {}", got_or(&bad, &ns), if f110_ok { "ok" } else { "failed" });
    Claim::new(8, "boundary splits into anticommuting differentials", format!("n={} ok; F110 ok", join_list(&ns)), got)
}

fn criterion_subdivision(cap: usize, rng: &mut ChaCha8Rng) -> Claim {
    let mut bad = Vec::new();
    let ns: Vec<usize> = (4..=7.min(cap)).collect();
    for &n in &ns {
        let Ok(k) = polygon_simplicial_complex(n, cap) else {
            bad.push(format!("n={n}"));
            continue;
        };
        if homology(&k.to_cell_complex("k")) != homology(&k.barycentric_subdivision().to_cell_complex("sd")) {
            bad.push(format!("n={n}"));
        }
    }
    let mut random_ok = 0;
    for _ in 0..50 {
        let k = random::simplicial_complex(rng, 6, 30);
        let before = homology(&k.to_cell_complex("k"));
        if before.is_ok() && before == homology(&k.barycentric_subdivision().to_cell_complex("sd")) {
            random_ok += 1;
        }
    }
    let got = format!("{}; random {random_ok}/50", got_or(&bad, &ns));
    Claim::new(9, "barycentric subdivision preserves homology", format!("n={} ok; random 50/50", join_list(&ns)), got)
}

pub fn run_all(opts: &VerifyOptions) -> Vec<Claim> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let polys = polygons(opts.cap);
    vec![
        criterion_polygons(&polys),
        criterion_suspension(&polys, &mut rng),
        criterion_f013(),
        criterion_f110(),
        criterion_pants(),
        criterion_classifier(),
        criterion_dt(&mut rng),
        criterion_split(&polys),
        criterion_subdivision(opts.cap, &mut rng),
    ]
}

pub fn render_table(claims: &[Claim]) -> String {
    let mut out = String::new();
    for c in claims {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{}] {status} {}", c.id, c.claim);
        let _ = writeln!(out, "    expected: {}", c.expected);
        let _ = writeln!(out, "    got:      {}", c.got);
    }
    let passed = claims.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{passed}/{} claims hold", claims.len());
    out
}
