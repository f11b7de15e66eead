//! Implementations of the subcommands.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use yangbax::families::{baxter, eight_vertex, five_vertex, six_vertex};
use yangbax::invariants::{
    eight_vertex_invariants_from_matrix, is_free_fermion, p_polys, six_vertex_invariants,
};
use yangbax::sampling::Sampler;
use yangbax::symmetry::{apply_aut_word, apply_gauge, AutWord, DiagonalGauge};
use yangbax::ybe::{residual_magnitude, ybe_residual};
use yangbax::{Complex, Rational, Scalar, Triplet, VertexMatrix};

use crate::document::{DocTriplet, Provenance, TripletDocument};
use crate::{resolve_tol, CliError};

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    fn parse(tokens: &[String]) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected key=value, got {tok:?}")))?;
            if map.insert(key.trim().to_string(), value.trim().to_string()).is_some() {
                return Err(CliError::usage(format!("duplicate parameter {key:?}")));
            }
        }
        Ok(Params { map })
    }

    fn rational(&self, key: &str) -> Result<Rational, CliError> {
        let s = self
            .map
            .get(key)
            .ok_or_else(|| CliError::usage(format!("missing parameter {key}")))?;
        Rational::from_str(s).map_err(|e| CliError::usage(format!("bad rational {key}={s}: {e}")))
    }

    fn rational_or(&self, key: &str, default: Rational) -> Result<Rational, CliError> {
        match self.map.get(key) {
            Some(_) => self.rational(key),
            None => Ok(default),
        }
    }

    fn real(&self, key: &str) -> Result<f64, CliError> {
        let s = self
            .map
            .get(key)
            .ok_or_else(|| CliError::usage(format!("missing parameter {key}")))?;
        s.parse::<f64>()
            .map_err(|e| CliError::usage(format!("bad number {key}={s}: {e}")))
    }

    fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    fn check_known(&self, known: &[&str]) -> Result<(), CliError> {
        for key in self.map.keys() {
            if !known.contains(&key.as_str()) {
                return Err(CliError::usage(format!("unknown parameter {key:?}")));
            }
        }
        Ok(())
    }

    fn provenance(&self, family: &str) -> Provenance {
        Provenance { family: family.to_string(), params: self.map.clone() }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

pub fn build(family: &str, tokens: &[String], out: Option<&Path>) -> Result<(), CliError> {
    let p = Params::parse(tokens)?;
    let doc = match family {
        "5v1" => {
            p.check_known(&["d", "q1", "q2", "q3", "g1", "g2", "g3"])?;
            let one = Rational::from_int(1);
            let fp = five_vertex::FirstParams {
                d: p.rational("d")?,
                q: [p.rational("q1")?, p.rational("q2")?, p.rational("q3")?],
                g: [
                    p.rational_or("g1", one.clone())?,
                    p.rational_or("g2", one.clone())?,
                    p.rational_or("g3", one)?,
                ],
            };
            if (Rational::from_int(1) - fp.d.clone() * fp.d.clone()).is_zero_tol(0.0) {
                warn("d^2 = 1: the off-diagonal entries vanish and the triplet degenerates to diagonal");
            }
            let t = five_vertex::build_first(&fp)?;
            TripletDocument::from_rational(&t, Some(p.provenance(family)))
        }
        "5vff" => {
            p.check_known(&["p1", "p2", "q2", "q3", "g12", "g13", "g23", "alpha", "q1", "p3"])?;
            let explicit = p.has("g12") || p.has("g13") || p.has("g23");
            let uniform = p.has("alpha");
            let gauge = match (explicit, uniform) {
                (true, false) => five_vertex::FreeFermionGauge::Explicit {
                    g12: p.rational("g12")?,
                    g13: p.rational("g13")?,
                    g23: p.rational("g23")?,
                },
                (false, true) => five_vertex::FreeFermionGauge::Uniform {
                    alpha: p.rational("alpha")?,
                    q1: p.rational_or("q1", p.rational("q2")?)?,
                    p3: p.rational_or("p3", p.rational("p2")?)?,
                },
                _ => {
                    return Err(CliError::usage(
                        "5vff needs either g12,g13,g23 (explicit gauge) or alpha (uniform gauge)"
                            .into(),
                    ))
                }
            };
            let fp = five_vertex::FreeFermionParams {
                p1: p.rational("p1")?,
                p2: p.rational("p2")?,
                q2: p.rational("q2")?,
                q3: p.rational("q3")?,
                gauge,
            };
            let t = five_vertex::build_free_fermion(&fp)?;
            TripletDocument::from_rational(&t, Some(p.provenance(family)))
        }
        "6v-asym-rational" => {
            p.check_known(&["a", "b", "c", "d", "e", "f"])?;
            let ap = six_vertex::AsymParams {
                a: p.rational("a")?,
                b: p.rational("b")?,
                c: p.rational("c")?,
                d: p.rational("d")?,
                e: p.rational("e")?,
                f: p.rational("f")?,
            };
            let t = six_vertex::build_asym(&ap)?;
            TripletDocument::from_rational(&t, Some(p.provenance(family)))
        }
        "6v-asym-trig" => {
            p.check_known(&["gamma", "q1", "q2", "q3", "lambdaA", "lambdaC"])?;
            let c = |x: f64| Complex::new(x, 0.0);
            let tp = six_vertex::TrigParams {
                gamma: c(p.real("gamma")?),
                q1: c(p.real("q1")?),
                q2: c(p.real("q2")?),
                q3: c(p.real("q3")?),
                lambda_a: c(p.real("lambdaA")?),
                lambda_c: c(p.real("lambdaC")?),
            };
            let t = six_vertex::build_trig(&tp)?;
            TripletDocument::from_complex(&t, Some(p.provenance(family)))
        }
        "6vff" => {
            p.check_known(&["b11", "b12", "b21", "b22", "c11", "c12", "c21", "c22"])?;
            let m = |k1, k2, k3, k4| -> Result<_, CliError> {
                Ok(yangbax::Mat2::new([
                    [p.rational(k1)?, p.rational(k2)?],
                    [p.rational(k3)?, p.rational(k4)?],
                ]))
            };
            let pair = six_vertex::Sl2Pair::new(
                m("b11", "b12", "b21", "b22")?,
                m("c11", "c12", "c21", "c22")?,
            )?;
            let t = six_vertex::build_free_fermion(&pair)?;
            TripletDocument::from_rational(&t, Some(p.provenance(family)))
        }
        "8v" => {
            p.check_known(&["a", "b", "c", "x", "y", "z", "v"])?;
            let ep = eight_vertex::Params::new(
                p.rational("a")?,
                p.rational("b")?,
                p.rational("c")?,
                p.rational("x")?,
                p.rational("y")?,
                p.rational("z")?,
                p.rational("v")?,
            )?;
            for d in ep.degeneracies() {
                warn(&format!("{d}: an anti-diagonal entry vanishes, leaving the strict eight-vertex stratum"));
            }
            let t = eight_vertex::build(&ep)?;
            TripletDocument::from_rational(&t, Some(p.provenance(family)))
        }
        "8v-baxter" => {
            p.check_known(&["sigma", "chi", "gamma", "k"])?;
            let bp = baxter::Params {
                sigma: p.real("sigma")?,
                chi: p.real("chi")?,
                gamma: p.real("gamma")?,
                k: p.real("k")?,
            };
            let t = baxter::build(&bp)?;
            TripletDocument::from_complex(&t, Some(p.provenance(family)))
        }
        other => return Err(CliError::usage(format!("unknown family {other:?}"))),
    };
    write_out(out, &doc.to_json())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

pub fn verify(input: &Path, tol: Option<f64>) -> Result<(), CliError> {
    let tol = resolve_tol(tol)?;
    let doc = TripletDocument::load(input)?;
    let pass = match doc.parse_triplet()? {
        DocTriplet::Rational(t) => {
            let residual = ybe_residual(&t);
            let pass = residual.is_zero_tol(0.0);
            println!(
                "residual: {}{}",
                residual.max_magnitude(),
                if pass { " (exact)" } else { "" }
            );
            pass
        }
        DocTriplet::Complex(t) => {
            let r = residual_magnitude(&t);
            println!("residual: {r:e} (tol {tol:e})");
            r <= tol
        }
    };
    if pass {
        println!("PASS");
        Ok(())
    } else {
        println!("FAIL");
        Err(CliError::verify_failed())
    }
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

fn scalar_json<T: Scalar>(v: &T) -> Value {
    if T::EXACT {
        Value::String(v.to_string())
    } else {
        let z = v.to_complex();
        json!([z.re, z.im])
    }
}

fn invariant_report<T: Scalar>(m: &VertexMatrix<T>) -> Value {
    let p = p_polys(m);
    let mut obj = Map::new();
    obj.insert("p1".into(), scalar_json(&p.p1));
    obj.insert("p2".into(), scalar_json(&p.p2));
    obj.insert("p5".into(), scalar_json(&p.p5));
    obj.insert("p6".into(), scalar_json(&p.p6));
    obj.insert("p9".into(), scalar_json(&p.p9));
    let six = six_vertex_invariants(m);
    if let Some(v) = six.delta_global {
        obj.insert("Delta".into(), scalar_json(&v));
    }
    if let Some(v) = six.delta {
        obj.insert("delta".into(), scalar_json(&v));
    }
    if let Some(v) = six.delta_prime {
        obj.insert("delta_prime".into(), scalar_json(&v));
    }
    if let Ok(eight) = eight_vertex_invariants_from_matrix(m) {
        obj.insert("Delta1".into(), scalar_json(&eight.delta1));
        obj.insert("Delta2".into(), scalar_json(&eight.delta2));
    }
    obj.insert("free_fermion".into(), Value::Bool(is_free_fermion(m, 1e-9)));
    Value::Object(obj)
}

pub fn invariants(input: &Path) -> Result<(), CliError> {
    let doc = TripletDocument::load(input)?;
    let report = match doc.parse_triplet()? {
        DocTriplet::Rational(t) => json!({
            "A": invariant_report(&t.a),
            "B": invariant_report(&t.b),
            "C": invariant_report(&t.c),
        }),
        DocTriplet::Complex(t) => json!({
            "A": invariant_report(&t.a),
            "B": invariant_report(&t.b),
            "C": invariant_report(&t.c),
        }),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report"));
    Ok(())
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

fn parse_gauge_spec(spec: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for tok in spec.split(',').filter(|t| !t.is_empty()) {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("bad gauge component {tok:?}")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    for key in ["t1", "t2", "t3"] {
        if !map.contains_key(key) {
            return Err(CliError::usage(format!("gauge spec missing {key}")));
        }
    }
    Ok(map)
}

pub fn transform(
    input: &Path,
    word: Option<&str>,
    gauge: Option<&str>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let doc = TripletDocument::load(input)?;
    let triplet = doc.parse_triplet()?;
    let result = match (word, gauge) {
        (Some(w), None) => {
            let word: AutWord = w.parse()?;
            match triplet {
                DocTriplet::Rational(t) => DocTriplet::Rational(apply_aut_word(&word, &t)?),
                DocTriplet::Complex(t) => DocTriplet::Complex(apply_aut_word(&word, &t)?),
            }
        }
        (None, Some(spec)) => {
            let map = parse_gauge_spec(spec)?;
            match triplet {
                DocTriplet::Rational(t) => {
                    let get = |k: &str| -> Result<Rational, CliError> {
                        Rational::from_str(&map[k])
                            .map_err(|e| CliError::usage(format!("bad gauge {k}: {e}")))
                    };
                    let g = DiagonalGauge::new(get("t1")?, get("t2")?, get("t3")?)?.to_gauge()?;
                    DocTriplet::Rational(apply_gauge(&g, &t)?)
                }
                DocTriplet::Complex(t) => {
                    let get = |k: &str| -> Result<Complex, CliError> {
                        map[k].parse::<f64>().map(|x| Complex::new(x, 0.0)).map_err(|e| {
                            CliError::usage(format!("bad gauge {k}: {e}"))
                        })
                    };
                    let g = DiagonalGauge::new(get("t1")?, get("t2")?, get("t3")?)?.to_gauge()?;
                    DocTriplet::Complex(apply_gauge(&g, &t)?)
                }
            }
        }
        _ => {
            return Err(CliError::usage(
                "transform needs exactly one of --word or --gauge".into(),
            ))
        }
    };
    write_out(out, &TripletDocument::from_triplet(&result, None).to_json())
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

fn csv_scalar<T: Scalar>(v: &T) -> String {
    if T::EXACT {
        v.to_string()
    } else {
        let z = v.to_complex();
        if z.im.abs() <= 1e-12 * z.re.abs().max(1.0) {
            format!("{}", z.re)
        } else {
            format!("{}{}{}i", z.re, if z.im < 0.0 { "" } else { "+" }, z.im)
        }
    }
}

fn orbit_csv<T: Scalar>(o: &yangbax::symmetry::Orbit<T>) -> String {
    let mut out = String::from("step,slot,p1,p2,p5,p6,p9,Delta1,Delta2,period_flag\n");
    let last = o.points.len() - 1;
    for (step, point) in o.points.iter().enumerate() {
        for (slot, m) in ["A", "B", "C"].iter().zip(point.slots()) {
            let p = p_polys(m);
            let eight = eight_vertex_invariants_from_matrix(m);
            let (d1, d2) = match &eight {
                Ok(inv) => (csv_scalar(&inv.delta1), csv_scalar(&inv.delta2)),
                Err(_) => (String::new(), String::new()),
            };
            let flag = match o.period {
                Some(period) if step == last => period.to_string(),
                _ => String::new(),
            };
            out.push_str(&format!(
                "{step},{slot},{},{},{},{},{},{d1},{d2},{flag}\n",
                csv_scalar(&p.p1),
                csv_scalar(&p.p2),
                csv_scalar(&p.p5),
                csv_scalar(&p.p6),
                csv_scalar(&p.p9),
            ));
        }
    }
    out
}

pub fn orbit(
    input: &Path,
    word: &str,
    max_iter: usize,
    tol: Option<f64>,
    csv: Option<&Path>,
) -> Result<(), CliError> {
    let tol = resolve_tol(tol)?;
    let step: AutWord = word.parse()?;
    let doc = TripletDocument::load(input)?;
    let text = match doc.parse_triplet()? {
        DocTriplet::Rational(t) => {
            let o = yangbax::symmetry::orbit(&t, &step, max_iter, 0.0)?;
            report_orbit(&o);
            orbit_csv(&o)
        }
        DocTriplet::Complex(t) => {
            let o = yangbax::symmetry::orbit(&t, &step, max_iter, tol)?;
            report_orbit(&o);
            orbit_csv(&o)
        }
    };
    write_out(csv, &text)
}

fn report_orbit<T: Scalar>(o: &yangbax::symmetry::Orbit<T>) {
    match (o.period, o.matched_index) {
        (Some(p), Some(m)) => eprintln!(
            "period {p} (returned to point {m} after {} steps)",
            m + p
        ),
        _ => eprintln!("no period within {} steps", o.points.len() - 1),
    }
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

fn load_params_json(path: &Path) -> Result<Map<String, Value>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    match serde_json::from_str::<Value>(&text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(CliError::usage("parameter file must be a JSON object".into())),
        Err(e) => Err(CliError::usage(format!("cannot parse {}: {e}", path.display()))),
    }
}

fn need_f64(map: &Map<String, Value>, key: &str) -> Result<f64, CliError> {
    map.get(key)
        .and_then(Value::as_f64)
        .ok_or_else(|| CliError::usage(format!("missing numeric parameter {key:?}")))
}

fn num_or_pair(z: Complex) -> Value {
    if z.im.abs() <= 1e-12 * z.re.abs().max(1.0) {
        json!(z.re)
    } else {
        json!([z.re, z.im])
    }
}

pub fn convert(input: &Path, from: &str, to: &str, out: Option<&Path>) -> Result<(), CliError> {
    let map = load_params_json(input)?;
    let result = match (from, to) {
        ("xyzv", "q") => {
            let p = eight_vertex::Params::new(
                Complex::new(1.0, 0.0),
                Complex::new(1.0, 0.0),
                Complex::new(1.0, 0.0),
                Complex::new(need_f64(&map, "x")?, 0.0),
                Complex::new(need_f64(&map, "y")?, 0.0),
                Complex::new(need_f64(&map, "z")?, 0.0),
                Complex::new(need_f64(&map, "v")?, 0.0),
            )?;
            let d = eight_vertex::derived(&p)?;
            json!({
                "q1": num_or_pair(d.q[0]), "q2": num_or_pair(d.q[1]),
                "q3": num_or_pair(d.q[2]), "q4": num_or_pair(d.q[3]),
                "lambda": num_or_pair(d.lambda),
                "Delta1": num_or_pair(d.delta1), "Delta2": num_or_pair(d.delta2),
            })
        }
        ("q", "xyzv") => {
            let q = [
                Complex::new(need_f64(&map, "q1")?, 0.0),
                Complex::new(need_f64(&map, "q2")?, 0.0),
                Complex::new(need_f64(&map, "q3")?, 0.0),
                Complex::new(need_f64(&map, "q4")?, 0.0),
            ];
            let lambda = match map.get("lambda").and_then(Value::as_f64) {
                Some(l) => Complex::new(l, 0.0),
                None => match map.get("x").and_then(Value::as_f64) {
                    // pick the quartic root reproducing the x hint
                    Some(x) => eight_vertex::select_lambda(&q, Complex::new(x, 0.0))?,
                    // otherwise the most real root, deterministically
                    None => {
                        let mut roots = eight_vertex::lambda_roots(&q).to_vec();
                        roots.sort_by(|a, b| {
                            (a.im.abs(), -a.re)
                                .partial_cmp(&(b.im.abs(), -b.re))
                                .unwrap_or(std::cmp::Ordering::Equal)
                        });
                        roots[0]
                    }
                },
            };
            let (x, y, z, v) = eight_vertex::xyzv_from_q(&lambda, &q);
            let w = x * y * z;
            let d1 = v * (2.0 * v - w - x - y - z) / w;
            let d2 = (v - x) * (v - y) * (v - z) * (v - w) / (w * w);
            json!({
                "x": num_or_pair(x), "y": num_or_pair(y),
                "z": num_or_pair(z), "v": num_or_pair(v),
                "lambda": num_or_pair(lambda),
                "Delta1": num_or_pair(d1), "Delta2": num_or_pair(d2),
            })
        }
        ("baxter", "xyzv") => {
            let p = baxter::Params {
                sigma: need_f64(&map, "sigma")?,
                chi: need_f64(&map, "chi")?,
                gamma: need_f64(&map, "gamma")?,
                k: need_f64(&map, "k")?,
            };
            let [x, y, z, v] = baxter::xyzv(&p)?;
            let (d1, d2) = baxter::modulus_invariants(p.gamma, p.k)?;
            let q = baxter::q_values(&p)?;
            json!({
                "x": x, "y": y, "z": z, "v": v,
                "Delta1": d1, "Delta2": d2,
                "q1": q[0], "q2": q[1], "q3": q[2], "q4": q[3],
            })
        }
        _ => {
            return Err(CliError::usage(format!(
                "unsupported conversion {from:?} -> {to:?} (supported: xyzv->q, q->xyzv, baxter->xyzv)"
            )))
        }
    };
    let mut text = serde_json::to_string_pretty(&result).expect("conversion output");
    text.push('\n');
    write_out(out, &text)
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

pub fn selftest(seed: u64, samples: usize, tol: Option<f64>) -> Result<(), CliError> {
    let tol = resolve_tol(tol)?;
    let mut s = Sampler::new(seed);
    let mut all_pass = true;
    let mut check_exact = |name: &str, mk: &mut dyn FnMut(&mut Sampler) -> Triplet<Rational>| {
        let ok = (0..samples).all(|_| ybe_residual(&mk(&mut s)).is_zero_tol(0.0));
        println!(
            "selftest {name}: {samples} samples, exact residual: {}",
            if ok { "PASS" } else { "FAIL" }
        );
        all_pass &= ok;
    };
    check_exact("5v1", &mut |s| {
        five_vertex::build_first(&s.five_vertex_first()).expect("sampled params build")
    });
    check_exact("5vff-explicit", &mut |s| {
        five_vertex::build_free_fermion(&s.five_vertex_ff_explicit()).expect("build")
    });
    check_exact("5vff-uniform", &mut |s| {
        five_vertex::build_free_fermion(&s.five_vertex_ff_uniform(0)).expect("build")
    });
    check_exact("6v-asym-rational", &mut |s| {
        six_vertex::build_asym(&s.six_vertex_asym()).expect("build")
    });
    check_exact("6vff", &mut |s| {
        six_vertex::build_free_fermion(&s.six_vertex_ff()).expect("build")
    });
    check_exact("8v", &mut |s| eight_vertex::build(&s.eight_vertex()).expect("build"));

    let mut s = Sampler::new(seed.wrapping_add(1));
    for (name, mk) in [
        (
            "6v-asym-trig",
            Box::new(|s: &mut Sampler| six_vertex::build_trig(&s.trig_params()).expect("build"))
                as Box<dyn Fn(&mut Sampler) -> Triplet<Complex>>,
        ),
        (
            "8v-baxter",
            Box::new(|s: &mut Sampler| baxter::build(&s.baxter_params()).expect("build")),
        ),
    ] {
        let mut worst: f64 = 0.0;
        for _ in 0..samples {
            worst = worst.max(residual_magnitude(&mk(&mut s)));
        }
        let ok = worst <= tol.max(1e-9);
        println!(
            "selftest {name}: {samples} samples, max residual {worst:.2e}: {}",
            if ok { "PASS" } else { "FAIL" }
        );
        all_pass &= ok;
    }
    eprintln!("rejected draws: {}", s.rejections);
    if all_pass {
        Ok(())
    } else {
        Err(CliError::verify_failed())
    }
}
