use arcsphere::catalog::{build_catalog, NAMES};
use arcsphere::chain::{homology, CellComplex};
use arcsphere::pants::{normalize_dt, parse_rational, DtCoords};
use arcsphere::polygon::{build_polygon_complex, chords_compatible, complementary_regions, enumerate_families, ChordFamily};
use arcsphere::surface::{classify, contains_type1, dimension, quasi_triangulation_arc_count, SphericityVerdict, SurfaceSpec};
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = SurfaceSpec> {
    (0u32..4, 0u32..5, prop::collection::vec(1u32..6, 1..4)).prop_map(|(g, s, d)| SurfaceSpec::new(g, s, d).unwrap())
}

proptest! {
    #[test]
    fn spec_text_round_trip(spec in spec_strategy()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<SurfaceSpec>().unwrap(), spec.clone());
        let json = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(serde_json::from_str::<SurfaceSpec>(&json).unwrap(), spec);
    }

    #[test]
    fn verdict_dimension_matches_formula(spec in spec_strategy()) {
        let v = classify(&spec);
        if v != SphericityVerdict::EmptyComplex {
            prop_assert_eq!(v.dimension(), Some(dimension(&spec)));
            prop_assert_eq!(quasi_triangulation_arc_count(&spec).unwrap() as i64, dimension(&spec) + 1);
        }
        let witness = contains_type1(&spec);
        prop_assert_eq!(witness.is_some(), matches!(v, SphericityVerdict::NonManifold(_)));
        if let Some(w) = witness {
            // a type-1 subsurface has smaller complexity
            prop_assert!(dimension(&w.surface()) < dimension(&spec));
        }
    }

    #[test]
    fn normalize_is_stable_under_text(m in prop::array::uniform3(0i64..9), t in prop::array::uniform3(-20i64..20)) {
        let t: Vec<i64> = (0..3).map(|i| if m[i] == 0 { 0 } else { t[i] }).collect();
        let c = DtCoords::from_integers(m, [t[0], t[1], t[2]]);
        if let Ok((n, _)) = normalize_dt(&c) {
            let reparsed: DtCoords = n.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, n);
        }
    }

    #[test]
    fn rationals_parse_in_lowest_terms(p in -50i64..50, q in 1i64..20) {
        let r = parse_rational(&format!("{p}/{q}")).unwrap();
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
}

#[test]
fn catalog_json_round_trips() {
    for name in NAMES {
        let k = build_catalog(name).unwrap().complex;
        let text = k.to_json();
        let back = CellComplex::from_json(&text).unwrap();
        assert_eq!(back, k, "{name}");
        assert_eq!(back.to_json(), text, "{name}");
        assert_eq!(homology(&back).unwrap(), homology(&k).unwrap(), "{name}");
    }
}

#[test]
fn polygon_regions_and_compatibility() {
    for n in 4..=8 {
        for family in enumerate_families(n).unwrap() {
            for (i, a) in family.iter().enumerate() {
                for b in &family[i + 1..] {
                    assert!(chords_compatible(*a, *b, n));
                }
            }
            let k = family.len();
            let regions = complementary_regions(n, &ChordFamily::new(n, family).unwrap()).unwrap();
            assert_eq!(regions.len(), k + 1);
            // every chord contributes two sides
            assert_eq!(regions.iter().sum::<usize>(), n + 2 * k);
            assert!(regions.iter().all(|&r| r >= 3));
        }
    }
}

#[test]
fn polygon_json_round_trip_keeps_metadata() {
    let k = build_polygon_complex(6, 9).unwrap();
    let back = CellComplex::from_json(&k.to_json()).unwrap();
    assert_eq!(back, k);
    assert!(back.cells().iter().all(|c| c.h1_rank() == Some(0)));
}
