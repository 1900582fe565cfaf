//! Browser bindings. Every export returns display text; failures come back
//! as a line starting with `error:` so the page can show them as-is.

use arcsphere::chain::homology;
use arcsphere::pants::{normalize_dt, to_join_point, validate_dt, DtCoords};
use arcsphere::polygon::{build_polygon_complex, DEFAULT_CAP};
use arcsphere::{classify, surface, SurfaceSpec};
use wasm_bindgen::prelude::*;

fn or_error(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

/// Verdict for a signature such as `F g=1 s=0 d=1`.
#[wasm_bindgen]
pub fn classify_surface(spec: &str) -> String {
    or_error((|| {
        let spec: SurfaceSpec = spec.trim().parse().map_err(|e: surface::SurfaceError| e.to_string())?;
        let mut out = format!("{spec}\n{}", classify(&spec));
        if let Some(w) = surface::contains_type1(&spec) {
            out.push_str(&format!("\ncontains {w:?}"));
        }
        Ok(out)
    })())
}

/// f-vector and homology of the n-gon arc complex.
#[wasm_bindgen]
pub fn polygon_summary(n: usize) -> String {
    or_error((|| {
        let k = build_polygon_complex(n, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let h = homology(&k).map_err(|e| e.to_string())?;
        let f: Vec<String> = k.f_vector().iter().map(ToString::to_string).collect();
        Ok(format!("f-vector ({})\n{h}", f.join(",")))
    })())
}

/// Validity, canonical form and circle-join point of `m1,m2,m3;t1,t2,t3`.
#[wasm_bindgen]
pub fn dt_summary(coords: &str) -> String {
    or_error((|| {
        let c: DtCoords = coords.trim().parse().map_err(|e: arcsphere::pants::DtError| e.to_string())?;
        if let Err(e) = validate_dt(&c) {
            return Ok(format!("invalid: {e}"));
        }
        let (canon, twists) = normalize_dt(&c).map_err(|e| e.to_string())?;
        let j = to_join_point(&c).map_err(|e| e.to_string())?;
        let show = |v: &[arcsphere::pants::Rational; 3]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let k: Vec<String> = twists.iter().map(ToString::to_string).collect();
        Ok(format!("canonical {canon}\ntwists {}\nL={} s={}", k.join(","), show(&j.magnitudes), show(&j.circle)))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_text() {
        assert_eq!(classify_surface("F g=1 s=0 d=1"), "F g=1 s=0 d=1\nSpherical dim=3");
        assert!(classify_surface("F g=2 s=0 d=1").contains("NonManifold dim=9\ncontains"));
        assert!(classify_surface("nonsense").starts_with("error: "));
    }

    #[test]
    fn polygon_text() {
        assert_eq!(polygon_summary(6), "f-vector (9,21,14)\nH0=Z H2=Z");
        assert!(polygon_summary(2).starts_with("error: "));
        assert!(polygon_summary(30).starts_with("error: "));
    }

    #[test]
    fn dt_text() {
        assert_eq!(dt_summary("2,3,1;5,-1,0"), "canonical 2,3,1;1,-1,0\ntwists 2,0,0\nL=2,3,1 s=0,1/6,1/2");
        assert!(dt_summary("1,1,1;0,0,0").starts_with("invalid: "));
        assert!(dt_summary("1,2").starts_with("error: "));
    }
}
