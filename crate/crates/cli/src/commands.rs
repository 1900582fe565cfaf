use std::io::Read;

use arcsphere::catalog::{self, build_catalog, verify_entry, Check};
use arcsphere::chain::{homology, join, split_boundary, suspension, SimplicialComplex};
use arcsphere::pants::{arc_types_from_m, normalize_dt, to_join_point, validate_dt, DtCoords};
use arcsphere::polygon::build_polygon_complex;
use arcsphere::verify::{render_table, run_all, VerifyOptions};
use arcsphere::{classify, surface, CellComplex, SurfaceSpec};
use serde_json::{json, Value};

use crate::{CatalogAction, Cli, Command, DtAction};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn verdict(text: String, passed: bool) -> Self {
        Output { text, code: if passed { 0 } else { 1 } }
    }
}

fn lines(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn read_complex(path: &str) -> Result<CellComplex, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    CellComplex::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn complex_out(k: &CellComplex) -> String {
    let mut s = k.to_json();
    s.push('\n');
    s
}

fn parse_dt(text: &str) -> Result<DtCoords, String> {
    text.parse::<DtCoords>().map_err(|e| e.to_string())
}

fn join_list<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(cli: &Cli) -> Result<Output, String> {
    let json = cli.json;
    match &cli.command {
        Command::Classify { spec } => {
            let spec: SurfaceSpec = spec.parse().map_err(|e: surface::SurfaceError| e.to_string())?;
            let verdict = classify(&spec);
            let witness = surface::contains_type1(&spec);
            if json {
                Ok(Output::ok(lines(&json!({
                    "surface": spec.to_string(),
                    "verdict": verdict.kind_name(),
                    "dimension": verdict.dimension(),
                    "type1_witness": witness.map(|w| format!("{w:?}")),
                }))))
            } else {
                Ok(Output::ok(format!("{verdict}\n")))
            }
        }
        Command::Polygon { n, homology: with_homology, cap } => {
            let k = build_polygon_complex(*n, *cap).map_err(|e| e.to_string())?;
            let h = if *with_homology { Some(homology(&k).map_err(|e| e.to_string())?) } else { None };
            if json {
                return Ok(Output::ok(match h {
                    Some(h) => lines(&serde_json::to_value(&h).expect("homology json")),
                    None => complex_out(&k),
                }));
            }
            let mut text = format!("f-vector ({})\n", join_list(&k.f_vector()));
            if let Some(h) = h {
                text.push_str(&format!("{h}\n"));
            }
            Ok(Output::ok(text))
        }
        Command::Catalog { action } => run_catalog(action, json),
        Command::Dt { action } => run_dt(action, json),
        Command::Homology { file } => {
            let k = read_complex(file)?;
            let h = homology(&k).map_err(|e| e.to_string())?;
            Ok(Output::ok(if json { lines(&serde_json::to_value(&h).expect("homology json")) } else { format!("{h}\n") }))
        }
        Command::Join { first, second } => {
            let k = join(&read_complex(first)?, &read_complex(second)?).map_err(|e| e.to_string())?;
            Ok(Output::ok(complex_out(&k)))
        }
        Command::Suspend { file } => {
            let k = suspension(&read_complex(file)?).map_err(|e| e.to_string())?;
            Ok(Output::ok(complex_out(&k)))
        }
        Command::Subdivide { file } => {
            let k = read_complex(file)?;
            let s = SimplicialComplex::from_cell_complex(&k).ok_or_else(|| format!("{file}: not a simplicial complex"))?;
            Ok(Output::ok(complex_out(&s.barycentric_subdivision().to_cell_complex(&format!("sd({})", k.name())))))
        }
        Command::Split { file } => {
            let k = read_complex(file)?;
            let split = split_boundary(&k).map_err(|e| e.to_string())?;
            let ids = split.identities(&k);
            if json {
                let grading: serde_json::Map<String, Value> = split.bigrading.iter().map(|(c, (u, v))| (c.clone(), json!([u, v]))).collect();
                let text = lines(&json!({
                    "bigrading": grading,
                    "d2_vanishes": split.d2_vanishes(),
                    "sums_to_boundary": ids.sums_to_boundary,
                    "d1_squared_zero": ids.d1_squared_zero,
                    "d2_squared_zero": ids.d2_squared_zero,
                    "anticommute": ids.anticommute,
                }));
                return Ok(Output::verdict(text, ids.all_hold()));
            }
            let mut text = String::new();
            for (c, (u, v)) in &split.bigrading {
                text.push_str(&format!("{c} ({u},{v})\n"));
            }
            text.push_str(&format!("d2 vanishes: {}\n", split.d2_vanishes()));
            text.push_str(&format!("identities: {}\n", if ids.all_hold() { "hold" } else { "FAIL" }));
            Ok(Output::verdict(text, ids.all_hold()))
        }
        Command::VerifyAll(args) => {
            let claims = run_all(&VerifyOptions { seed: args.seed, cap: args.cap });
            let passed = claims.iter().all(|c| c.passed);
            let text = if json {
                let rows: Vec<Value> = claims
                    .iter()
                    .map(|c| json!({"id": c.id, "claim": c.claim, "expected": c.expected, "got": c.got, "passed": c.passed}))
                    .collect();
                lines(&Value::Array(rows))
            } else {
                render_table(&claims)
            };
            Ok(Output::verdict(text, passed))
        }
    }
}

fn check_report(checks: &[Check], json: bool) -> String {
    if json {
        let rows: Vec<Value> = checks.iter().map(|c| json!({"check": c.label, "passed": c.passed, "detail": c.detail})).collect();
        return lines(&Value::Array(rows));
    }
    checks.iter().map(|c| format!("{} {} ({})\n", if c.passed { "PASS" } else { "FAIL" }, c.label, c.detail)).collect()
}

fn run_catalog(action: &CatalogAction, json: bool) -> Result<Output, String> {
    match action {
        CatalogAction::List => {
            let mut rows = Vec::new();
            let mut text = String::new();
            for name in catalog::NAMES {
                let e = build_catalog(name).map_err(|e| e.to_string())?;
                let verdict = classify(&e.surface);
                text.push_str(&format!("{name:<16} {:<20} N={:<2} {verdict}\n", e.surface.to_string(), e.expected_dimension));
                rows.push(json!({"name": name, "surface": e.surface.to_string(), "dimension": e.expected_dimension, "verdict": verdict.kind_name()}));
            }
            Ok(Output::ok(if json { lines(&Value::Array(rows)) } else { text }))
        }
        CatalogAction::Build { name } => {
            let e = build_catalog(name).map_err(|e| e.to_string())?;
            Ok(Output::ok(complex_out(&e.complex)))
        }
        CatalogAction::Verify { name } => {
            let names: Vec<&str> = if name == "all" { catalog::NAMES.to_vec() } else { vec![name.as_str()] };
            let mut checks = Vec::new();
            for n in names {
                checks.extend(verify_entry(&build_catalog(n).map_err(|e| e.to_string())?));
            }
            let passed = checks.iter().all(|c| c.passed);
            Ok(Output::verdict(check_report(&checks, json), passed))
        }
    }
}

fn run_dt(action: &DtAction, json: bool) -> Result<Output, String> {
    match action {
        DtAction::Normalize { coords } => {
            let (c, k) = normalize_dt(&parse_dt(coords)?).map_err(|e| e.to_string())?;
            let twists: Vec<String> = k.iter().map(ToString::to_string).collect();
            Ok(Output::ok(if json {
                lines(&json!({"canonical": c.to_string(), "twists": twists}))
            } else {
                format!("{c} twists={}\n", twists.join(","))
            }))
        }
        DtAction::Validate { coords } => {
            let c = parse_dt(coords)?;
            let result = validate_dt(&c);
            let text = match (&result, json) {
                (Ok(()), false) => "valid\n".to_string(),
                (Err(e), false) => format!("invalid: {e}\n"),
                (r, true) => lines(&json!({"valid": r.is_ok(), "reason": r.as_ref().err().map(ToString::to_string)})),
            };
            Ok(Output::verdict(text, result.is_ok()))
        }
        DtAction::ArcTypes { coords } => {
            let c = parse_dt(coords)?;
            let t = arc_types_from_m(&c.intersections(), c.integral).map_err(|e| e.to_string())?;
            let show = |v: &[arcsphere::pants::Rational; 3]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            let (x, l) = (show(&t.connectors), show(&t.loops));
            Ok(Output::ok(if json {
                lines(&json!({"x12": x[0], "x13": x[1], "x23": x[2], "loops": l}))
            } else {
                format!("x12={} x13={} x23={} l1={} l2={} l3={}\n", x[0], x[1], x[2], l[0], l[1], l[2])
            }))
        }
        DtAction::JoinPoint { coords } => {
            let j = to_join_point(&parse_dt(coords)?).map_err(|e| e.to_string())?;
            let show = |v: &[arcsphere::pants::Rational; 3]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            let (l, s) = (show(&j.magnitudes), show(&j.circle));
            Ok(Output::ok(if json {
                lines(&json!({"magnitudes": l, "circle": s}))
            } else {
                format!("L={} s={}\n", l.join(","), s.join(","))
            }))
        }
    }
}
