//! Batch job front end: JSON schemas for every input type, dispatch from a
//! job file to the library, and deterministic reports with full provenance
//! (seeds, bounds, shears, orders).
//!
//! Exit codes: 0 success/consistent, 1 input error, 2 inconclusive,
//! 3 internal invariant violation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bernstein::{self, SparseSystem};
use crate::bezout::{self, Count};
use crate::degfun::{
    check_degree_like, nonredundancy_witness, DegreeFunction, PullbackSemidegree, Quasidegree,
    SampleSpec, StaircaseDegree, TriangularSubstitution, WeightedDegree,
    WitnessOutcome,
};
use crate::iterate::{rees_presentation, IteratedSemidegree};
use crate::poly::{Polynomial, Ring};
use crate::polytope::{hull, polytope_quasidegree, Point};
use crate::rational::{format_rational, parse_rational};
use crate::rees::{
    self, build_from_intersection_certificate, build_from_quasifinite_certificate, ClosureRule,
    FiltrationSpec, IntersectionCertificate, IntersectionEntry, PreservationBounds,
    PreservationOutcome, QuasifiniteCertificate, QuasifiniteEntry,
};

#[derive(Debug, Error)]
pub enum JobError {
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("input error: {0}")]
    Input(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl JobError {
    fn schema(pointer: &str, message: impl Into<String>) -> JobError {
        JobError::Schema {
            pointer: pointer.to_string(),
            message: message.into(),
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Options shared by every job; flags and the environment override the
/// file, which overrides the defaults.
#[derive(Debug, Clone)]
pub struct JobOptions {
    pub degree_bound: i64,
    pub power_bound: i64,
    pub seed: u64,
    pub sample_count: usize,
    pub shear_retries: u32,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            degree_bound: 8,
            power_bound: 8,
            seed: 1,
            sample_count: 1000,
            shear_retries: 3,
        }
    }
}

impl JobOptions {
    /// Merge options given in the job file over these.
    pub fn merged_with(&self, value: Option<&Value>) -> Result<JobOptions, JobError> {
        let mut out = self.clone();
        let Some(value) = value else {
            return Ok(out);
        };
        let obj = value
            .as_object()
            .ok_or_else(|| JobError::schema("/options", "expected an object"))?;
        for (key, v) in obj {
            let as_i64 = || {
                v.as_i64()
                    .ok_or_else(|| JobError::schema(&format!("/options/{key}"), "expected an integer"))
            };
            match key.as_str() {
                "degree_bound" => out.degree_bound = as_i64()?,
                "power_bound" => out.power_bound = as_i64()?,
                "seed" => out.seed = as_i64()? as u64,
                "sample_count" => out.sample_count = as_i64()? as usize,
                "shear_retries" => out.shear_retries = as_i64()? as u32,
                other => {
                    return Err(JobError::schema(
                        &format!("/options/{other}"),
                        "unknown option",
                    ))
                }
            }
        }
        Ok(out)
    }

    fn provenance(&self) -> Value {
        json!({
            "degree_bound": self.degree_bound,
            "power_bound": self.power_bound,
            "seed": self.seed,
            "sample_count": self.sample_count,
            "shear_retries": self.shear_retries,
        })
    }
}

// ---------------------------------------------------------------------------
// Polynomial and ring JSON.

pub fn poly_to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "c": format_rational(c), "e": e }))
        .collect();
    json!({
        "vars": p.ring().var_names(),
        "laurent": p.ring().is_laurent(),
        "terms": terms,
    })
}

pub fn poly_from_json(value: &Value, pointer: &str) -> Result<Polynomial, JobError> {
    let obj = value
        .as_object()
        .ok_or_else(|| JobError::schema(pointer, "expected a polynomial object"))?;
    let vars = obj
        .get("vars")
        .and_then(|v| v.as_array())
        .ok_or_else(|| JobError::schema(&format!("{pointer}/vars"), "expected an array"))?;
    let names: Vec<String> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| JobError::schema(&format!("{pointer}/vars/{i}"), "expected a string"))
        })
        .collect::<Result<_, _>>()?;
    let laurent = obj.get("laurent").and_then(|v| v.as_bool()).unwrap_or(false);
    let ring = Ring::from_names(names, laurent);
    let terms_value = obj
        .get("terms")
        .and_then(|v| v.as_array())
        .ok_or_else(|| JobError::schema(&format!("{pointer}/terms"), "expected an array"))?;
    let mut terms = Vec::new();
    for (i, t) in terms_value.iter().enumerate() {
        let tp = format!("{pointer}/terms/{i}");
        let tobj = t
            .as_object()
            .ok_or_else(|| JobError::schema(&tp, "expected a term object"))?;
        let c = tobj
            .get("c")
            .and_then(|v| v.as_str())
            .ok_or_else(|| JobError::schema(&format!("{tp}/c"), "expected a rational string"))?;
        let coeff = parse_rational(c).map_err(|e| JobError::schema(&format!("{tp}/c"), e))?;
        let e = tobj
            .get("e")
            .and_then(|v| v.as_array())
            .ok_or_else(|| JobError::schema(&format!("{tp}/e"), "expected an exponent array"))?;
        if e.len() != ring.n_vars() {
            return Err(JobError::schema(
                &format!("{tp}/e"),
                format!("expected {} exponents", ring.n_vars()),
            ));
        }
        let exps: Vec<i64> = e
            .iter()
            .enumerate()
            .map(|(j, v)| {
                v.as_i64().ok_or_else(|| {
                    JobError::schema(&format!("{tp}/e/{j}"), "expected an integer")
                })
            })
            .collect::<Result<_, _>>()?;
        terms.push((exps, coeff));
    }
    Polynomial::from_terms(&ring, terms).map_err(|e| JobError::schema(pointer, e.to_string()))
}

fn polys_from_json(value: &Value, pointer: &str) -> Result<Vec<Polynomial>, JobError> {
    let arr = value
        .as_array()
        .ok_or_else(|| JobError::schema(pointer, "expected an array of polynomials"))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| poly_from_json(v, &format!("{pointer}/{i}")))
        .collect()
}

fn field<'a>(value: &'a Value, key: &str, pointer: &str) -> Result<&'a Value, JobError> {
    value
        .get(key)
        .ok_or_else(|| JobError::schema(&format!("{pointer}/{key}"), "missing field"))
}

fn i64_field(value: &Value, key: &str, pointer: &str) -> Result<i64, JobError> {
    field(value, key, pointer)?
        .as_i64()
        .ok_or_else(|| JobError::schema(&format!("{pointer}/{key}"), "expected an integer"))
}

fn i64_array(value: &Value, pointer: &str) -> Result<Vec<i64>, JobError> {
    value
        .as_array()
        .ok_or_else(|| JobError::schema(pointer, "expected an integer array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_i64()
                .ok_or_else(|| JobError::schema(&format!("{pointer}/{i}"), "expected an integer"))
        })
        .collect()
}

fn rational_field(value: &Value, pointer: &str) -> Result<BigRational, JobError> {
    let s = value
        .as_str()
        .ok_or_else(|| JobError::schema(pointer, "expected a rational string"))?;
    parse_rational(s).map_err(|e| JobError::schema(pointer, e))
}

// ---------------------------------------------------------------------------
// Degree function JSON.

fn ring_for_weights(weights: &[i64], laurent: bool) -> Arc<Ring> {
    let names: Vec<String> = (1..=weights.len()).map(|i| format!("x{i}")).collect();
    Ring::from_names(names, laurent)
}

/// Parse `{"kind": ...}` degree functions. Returns the function plus the
/// ring it acts on.
pub fn degree_function_from_json(
    value: &Value,
    pointer: &str,
) -> Result<(DegreeFunction, Arc<Ring>), JobError> {
    let kind = field(value, "kind", pointer)?
        .as_str()
        .ok_or_else(|| JobError::schema(&format!("{pointer}/kind"), "expected a string"))?;
    match kind {
        "weighted" => {
            let weights = i64_array(field(value, "weights", pointer)?, &format!("{pointer}/weights"))?;
            let laurent = value.get("laurent").and_then(|v| v.as_bool()).unwrap_or(false);
            let ring = match value.get("vars") {
                Some(v) => {
                    let names: Vec<String> = v
                        .as_array()
                        .ok_or_else(|| JobError::schema(&format!("{pointer}/vars"), "expected an array"))?
                        .iter()
                        .map(|s| s.as_str().unwrap_or_default().to_string())
                        .collect();
                    Ring::from_names(names, laurent)
                }
                None => ring_for_weights(&weights, laurent),
            };
            let d = if laurent {
                WeightedDegree::laurent(&weights)
            } else {
                WeightedDegree::new(&weights)
            };
            Ok((DegreeFunction::Weighted(d), ring))
        }
        "pullback" => {
            let (semi, ring) = pullback_from_json(value, pointer)?;
            Ok((DegreeFunction::Pullback(semi), ring))
        }
        "iterated" => {
            let (it, ring) = iterated_from_json(value, pointer)?;
            Ok((DegreeFunction::Iterated(it), ring))
        }
        "quasidegree" => {
            let parts_value = field(value, "parts", pointer)?
                .as_array()
                .ok_or_else(|| JobError::schema(&format!("{pointer}/parts"), "expected an array"))?;
            let mut parts = Vec::new();
            let mut ring: Option<Arc<Ring>> = None;
            for (i, pv) in parts_value.iter().enumerate() {
                let pp = format!("{pointer}/parts/{i}");
                let (part, part_ring) = degree_function_from_json(pv, &pp)?;
                let semi = part.as_semidegree().ok_or_else(|| {
                    JobError::schema(&pp, "quasidegree parts must be semidegrees")
                })?;
                if let Some(r) = &ring {
                    if *r != part_ring {
                        return Err(JobError::schema(&pp, "parts live in different rings"));
                    }
                } else {
                    ring = Some(part_ring);
                }
                parts.push(semi);
            }
            let ring = ring.ok_or_else(|| JobError::schema(pointer, "empty quasidegree"))?;
            let q = Quasidegree::new(parts)
                .map_err(|e| JobError::schema(pointer, e.to_string()))?;
            Ok((DegreeFunction::Quasidegree(q), ring))
        }
        "univariate_ceil" => {
            let num = i64_field(value, "num", pointer)?;
            let den = i64_field(value, "den", pointer)?;
            let ring = Ring::from_names(vec!["x".to_string()], false);
            Ok((DegreeFunction::Staircase(StaircaseDegree::new(num, den)), ring))
        }
        other => Err(JobError::schema(
            &format!("{pointer}/kind"),
            format!("unknown degree function kind {other:?}"),
        )),
    }
}

fn pullback_from_json(
    value: &Value,
    pointer: &str,
) -> Result<(PullbackSemidegree, Arc<Ring>), JobError> {
    let base = field(value, "base_weights", pointer)?;
    let weights = i64_array(base, &format!("{pointer}/base_weights"))?;
    let shifts_value = field(value, "shifts", pointer)?
        .as_array()
        .ok_or_else(|| JobError::schema(&format!("{pointer}/shifts"), "expected an array"))?;
    let mut parsed: Vec<(String, Polynomial)> = Vec::new();
    for (i, sv) in shifts_value.iter().enumerate() {
        let sp = format!("{pointer}/shifts/{i}");
        let var = field(sv, "var", &sp)?
            .as_str()
            .ok_or_else(|| JobError::schema(&format!("{sp}/var"), "expected a string"))?;
        let add = poly_from_json(field(sv, "add", &sp)?, &format!("{sp}/add"))?;
        parsed.push((var.to_string(), add));
    }
    let ring = parsed
        .first()
        .map(|(_, p)| p.ring().clone())
        .ok_or_else(|| JobError::schema(&format!("{pointer}/shifts"), "need at least one shift"))?;
    let mut shifts: Vec<Polynomial> = (0..ring.n_vars()).map(|_| Polynomial::zero(&ring)).collect();
    for (var, add) in parsed {
        let idx = ring
            .var_index(&var)
            .ok_or_else(|| JobError::schema(&format!("{pointer}/shifts"), format!("unknown variable {var}")))?;
        shifts[idx] = add;
    }
    let subst = TriangularSubstitution::new(&ring, shifts)
        .map_err(|e| JobError::schema(pointer, e.to_string()))?;
    let semi = PullbackSemidegree::new(subst, WeightedDegree::new(&weights))
        .map_err(|e| JobError::schema(pointer, e.to_string()))?;
    Ok((semi, ring))
}

fn iterated_from_json(
    value: &Value,
    pointer: &str,
) -> Result<(IteratedSemidegree, Arc<Ring>), JobError> {
    let weights = i64_array(
        field(value, "base_weights", pointer)?,
        &format!("{pointer}/base_weights"),
    )?;
    let steps = field(value, "steps", pointer)?
        .as_array()
        .ok_or_else(|| JobError::schema(&format!("{pointer}/steps"), "expected an array"))?;
    let mut ring: Option<Arc<Ring>> = None;
    let mut parsed_steps = Vec::new();
    for (i, sv) in steps.iter().enumerate() {
        let sp = format!("{pointer}/steps/{i}");
        let h = poly_from_json(field(sv, "h", &sp)?, &format!("{sp}/h"))?;
        let w = i64_field(sv, "w", &sp)?;
        if let Some(r) = &ring {
            if h.ring() != r {
                return Err(JobError::schema(&sp, "step rings differ"));
            }
        } else {
            ring = Some(h.ring().clone());
        }
        parsed_steps.push((h, w));
    }
    let ring = ring.unwrap_or_else(|| ring_for_weights(&weights, false));
    let mut it = IteratedSemidegree::weighted(&ring, &weights)
        .map_err(|e| JobError::schema(pointer, e.to_string()))?;
    let asserted = value
        .get("assert_prime")
        .and_then(|v| v.as_bool())
        .unwrap_or(false);
    for (h, w) in parsed_steps {
        it = if asserted {
            it.adjoin_asserted(h, w)
        } else {
            it.adjoin(h, w)
        }
        .map_err(|e| JobError::Input(e.to_string()))?;
    }
    Ok((it, ring))
}

fn filtration_from_json(value: &Value, pointer: &str) -> Result<FiltrationSpec, JobError> {
    let closure = match field(value, "closure", pointer)?.as_str() {
        Some("powers_of_f1") => ClosureRule::PowersOfF1,
        Some("convolution") => ClosureRule::Convolution,
        _ => {
            return Err(JobError::schema(
                &format!("{pointer}/closure"),
                "expected \"powers_of_f1\" or \"convolution\"",
            ))
        }
    };
    let levels = field(value, "levels", pointer)?
        .as_array()
        .ok_or_else(|| JobError::schema(&format!("{pointer}/levels"), "expected an array"))?;
    let mut map: BTreeMap<i64, Vec<Polynomial>> = BTreeMap::new();
    let mut ring: Option<Arc<Ring>> = None;
    for (i, lv) in levels.iter().enumerate() {
        let lp = format!("{pointer}/levels/{i}");
        let level = i64_field(lv, "level", &lp)?;
        let gens = polys_from_json(field(lv, "gens", &lp)?, &format!("{lp}/gens"))?;
        for g in &gens {
            if let Some(r) = &ring {
                if g.ring() != r {
                    return Err(JobError::schema(&lp, "generator rings differ"));
                }
            } else {
                ring = Some(g.ring().clone());
            }
        }
        map.entry(level).or_default().extend(gens);
    }
    let ring = ring.ok_or_else(|| JobError::schema(pointer, "filtration has no generators"))?;
    FiltrationSpec::new(&ring, map, closure).map_err(|e| JobError::schema(pointer, e.to_string()))
}

pub fn filtration_to_json(spec: &FiltrationSpec) -> Value {
    let levels: Vec<Value> = spec
        .level_generators()
        .iter()
        .map(|(level, gens)| {
            json!({
                "level": level,
                "gens": gens.iter().map(poly_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "closure": match spec.closure() {
            ClosureRule::PowersOfF1 => "powers_of_f1",
            ClosureRule::Convolution => "convolution",
        },
        "levels": levels,
    })
}

// ---------------------------------------------------------------------------
// Job dispatch.

pub struct RunOutput {
    pub report: Value,
    pub text: String,
    pub exit_code: i32,
}

pub fn run_job(command: &str, job: &Value, defaults: &JobOptions) -> Result<RunOutput, JobError> {
    let opts = defaults.merged_with(job.get("options"))?;
    let inputs = job.get("inputs").unwrap_or(job);
    let (result, text, exit_code) = match command {
        "eval" => run_eval(inputs, &opts)?,
        "axioms" => run_axioms(inputs, &opts)?,
        "iterate" => run_iterate(inputs, &opts)?,
        "polytope" => run_polytope(inputs, &opts)?,
        "bezout" => run_bezout(inputs, &opts)?,
        "count" => run_count(inputs, &opts)?,
        "bernstein" => run_bernstein(inputs, &opts)?,
        "rees-build" => run_rees_build(inputs, &opts)?,
        "rees-check" => run_rees_check(inputs, &opts)?,
        "probe" => run_probe(inputs, &opts)?,
        other => return Err(JobError::Input(format!("unknown command {other:?}"))),
    };
    let report = json!({
        "command": command,
        "provenance": opts.provenance(),
        "result": result,
    });
    Ok(RunOutput {
        report,
        text,
        exit_code,
    })
}

fn run_eval(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let (d, _ring) = degree_function_from_json(field(inputs, "degree_function", "")?, "/degree_function")?;
    let polys = polys_from_json(field(inputs, "polys", "")?, "/polys")?;
    let mut values = Vec::new();
    let mut lines = Vec::new();
    for p in &polys {
        let v = d.evaluate(p).map_err(|e| JobError::Input(e.to_string()))?;
        lines.push(format!("delta({p}) = {v}"));
        values.push(json!({ "poly": p.to_string(), "value": v }));
    }
    Ok((json!({ "values": values }), lines.join("\n"), EXIT_OK))
}

fn run_axioms(inputs: &Value, opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let (d, ring) = degree_function_from_json(field(inputs, "degree_function", "")?, "/degree_function")?;
    let mode = inputs
        .get("mode")
        .and_then(|v| v.as_str())
        .unwrap_or("degree_like");
    let spec = SampleSpec {
        degree_bound: opts.degree_bound.min(6),
        random_pairs: opts.sample_count,
        seed: opts.seed,
        ..SampleSpec::default()
    };
    let report = check_degree_like(&d, &ring, &spec).map_err(|e| JobError::Input(e.to_string()))?;
    let ok = match mode {
        "semidegree" => report.semidegree_ok(),
        _ => report.degree_like_ok(),
    };
    let text = format!(
        "{} axiom sweep: {} monomial pairs, {} random pairs, {} violations, {} strict product pairs -> {}",
        mode,
        report.checked_monomial_pairs,
        report.checked_random_pairs,
        report.violations.len(),
        report.product_equality_failures.len(),
        if ok { "pass" } else { "fail" }
    );
    let mut value = serde_json::to_value(&report).map_err(|e| JobError::Internal(e.to_string()))?;
    // for quasidegrees, include the per-part nonredundancy witnesses
    if let DegreeFunction::Quasidegree(q) = &d {
        value["witnesses"] = witness_report(q, &ring)?;
    }
    Ok((value, text, if ok { EXIT_OK } else { EXIT_INCONCLUSIVE }))
}

fn run_iterate(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let (it, _ring) = iterated_from_json(field(inputs, "degree_function", "")?, "/degree_function")?;
    let polys = match inputs.get("polys") {
        Some(v) => polys_from_json(v, "/polys")?,
        None => Vec::new(),
    };
    let mut values = Vec::new();
    let mut lines = Vec::new();
    for p in &polys {
        let v = it.evaluate(p).map_err(|e| JobError::Input(e.to_string()))?;
        lines.push(format!("delta({p}) = {v}"));
        values.push(json!({ "poly": p.to_string(), "value": v }));
    }
    let presentation = rees_presentation(&it).map_err(|e| JobError::Input(e.to_string()))?;
    for w in &presentation.warnings {
        lines.push(format!("warning: {w}"));
    }
    let pres = json!({
        "ambient": presentation.ambient,
        "relations": presentation.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "warnings": presentation.warnings,
    });
    lines.push(format!(
        "presentation: {} ambient variables, {} relations",
        presentation.ambient.len(),
        presentation.relations.len()
    ));
    let steps: Vec<Value> = it
        .steps()
        .iter()
        .map(|s| json!({ "h": s.h.to_string(), "w": s.w, "e": s.e, "check": s.check }))
        .collect();
    Ok((
        json!({ "values": values, "steps": steps, "presentation": pres, "order": it.order().describe() }),
        lines.join("\n"),
        EXIT_OK,
    ))
}

fn point_from_json(value: &Value, pointer: &str) -> Result<Point, JobError> {
    value
        .as_array()
        .ok_or_else(|| JobError::schema(pointer, "expected a coordinate array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| rational_field(v, &format!("{pointer}/{i}")))
        .collect()
}

fn run_polytope(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let vertices_value = field(inputs, "vertices", "")?
        .as_array()
        .ok_or_else(|| JobError::schema("/vertices", "expected an array"))?;
    let points: Vec<Point> = vertices_value
        .iter()
        .enumerate()
        .map(|(i, v)| point_from_json(v, &format!("/vertices/{i}")))
        .collect::<Result<_, _>>()?;
    let p = hull(&points).map_err(|e| JobError::Input(e.to_string()))?;
    let qd = polytope_quasidegree(&p).map_err(|e| JobError::Input(e.to_string()))?;
    let mut lines = vec![format!(
        "hull: {} vertices, {} facets, volume {}; quasidegree scale k = {}",
        p.vertices().len(),
        p.facets().len(),
        format_rational(&p.volume()),
        qd.k
    )];
    let mut values = Vec::new();
    if let Some(pv) = inputs.get("polys") {
        for poly in polys_from_json(pv, "/polys")? {
            let v = qd.evaluate(&poly).map_err(|e| JobError::Input(e.to_string()))?;
            lines.push(format!("delta({poly}) = {v}"));
            values.push(json!({ "poly": poly.to_string(), "value": v }));
        }
    }
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .map(|f| {
            json!({
                "normal": f.normal.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "offset": format_rational(&f.offset),
            })
        })
        .collect();
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(v.iter().map(|c| Value::String(format_rational(c))).collect()))
        .collect();
    Ok((
        json!({
            "vertices": vertices,
            "facets": facets,
            "volume": format_rational(&p.volume()),
            "k": qd.k,
            "values": values,
        }),
        lines.join("\n"),
        EXIT_OK,
    ))
}

fn run_bezout(inputs: &Value, opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let (d, _ring) = degree_function_from_json(field(inputs, "degree_function", "")?, "/degree_function")?;
    let components = polys_from_json(field(inputs, "components", "")?, "/components")?;
    let data = match &d {
        DegreeFunction::Weighted(w) => {
            bezout::weighted_ratio(&w.weights).map_err(|e| JobError::Input(e.to_string()))?
        }
        DegreeFunction::Iterated(it) => {
            bezout::iterated_ratio(it).map_err(|e| JobError::Input(e.to_string()))?
        }
        _ => {
            return Err(JobError::Input(
                "the ratio formulas need a weighted or iterated semidegree".to_string(),
            ))
        }
    };
    let bound =
        bezout::bezout_bound(&data, &d, &components).map_err(|e| JobError::Input(e.to_string()))?;
    let mut lines = vec![format!(
        "ratio = {}, bound = {}",
        format_rational(&data.degree_ratio),
        format_rational(&bound)
    )];
    // an optional filtration turns on the preservation check per fiber
    let filtration = match inputs.get("filtration") {
        Some(v) => Some(filtration_from_json(v, "/filtration")?),
        None => None,
    };
    let mut preservation: Option<bool> = filtration.as_ref().map(|_| true);
    let mut counts = Vec::new();
    let mut all_equal = true;
    if let Some(points) = inputs.get("points") {
        if components.len() != 2 {
            return Err(JobError::Input(
                "fiber counting needs exactly two components".to_string(),
            ));
        }
        for (i, pv) in points
            .as_array()
            .ok_or_else(|| JobError::schema("/points", "expected an array"))?
            .iter()
            .enumerate()
        {
            let pt = point_from_json(pv, &format!("/points/{i}"))?;
            if pt.len() != 2 {
                return Err(JobError::schema(
                    &format!("/points/{i}"),
                    "expected two coordinates",
                ));
            }
            let res = bezout::count_fiber_2d(
                &components[0],
                &components[1],
                (&pt[0], &pt[1]),
                opts.seed,
                opts.shear_retries,
            )
            .map_err(|e| JobError::Input(e.to_string()))?;
            let equality = match &res.count {
                Count::Finite(c) => {
                    BigRational::from_integer((*c).into()) == bound
                }
                Count::Infinite => false,
            };
            all_equal &= equality;
            let fiber_preserved = match &filtration {
                Some(spec) => {
                    let hypersurfaces: Vec<Polynomial> = components
                        .iter()
                        .zip(&pt)
                        .map(|(f, a)| {
                            f.sub(&Polynomial::constant(f.ring(), a.clone()))
                                .map_err(|e| JobError::Input(e.to_string()))
                        })
                        .collect::<Result<_, _>>()?;
                    let bounds = PreservationBounds {
                        d_max: opts.degree_bound,
                        n_max: opts.power_bound,
                    };
                    let report = rees::preserves_at_infinity(spec, &hypersurfaces, bounds)
                        .map_err(|e| JobError::Input(e.to_string()))?;
                    let certified = report.outcome == PreservationOutcome::Certified;
                    preservation = Some(preservation.unwrap_or(true) && certified);
                    Some(certified)
                }
                None => None,
            };
            lines.push(format!(
                "fiber at ({}, {}): count = {:?}, equality = {}",
                format_rational(&pt[0]),
                format_rational(&pt[1]),
                res.count,
                equality
            ));
            counts.push(json!({
                "point": [format_rational(&pt[0]), format_rational(&pt[1])],
                "count": res.count,
                "shear": res.shear,
                "equality": equality,
                "preserved": fiber_preserved,
            }));
        }
    }
    let preservation_text = match preservation {
        Some(true) => "certified",
        Some(false) => "not_certified_within_bounds",
        None => "not_checked",
    };
    Ok((
        json!({
            "ratio": format_rational(&data.degree_ratio),
            "provenance": data.provenance,
            "bound": format_rational(&bound),
            "fibers": counts,
            "equality": all_equal,
            "preservation": preservation_text,
        }),
        lines.join("\n"),
        EXIT_OK,
    ))
}

fn run_count(inputs: &Value, opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let polys = polys_from_json(field(inputs, "system", "")?, "/system")?;
    if polys.len() != 2 {
        return Err(JobError::Input("count needs exactly two polynomials".to_string()));
    }
    let pt = match inputs.get("point") {
        Some(v) => point_from_json(v, "/point")?,
        None => vec![BigRational::from_integer(0.into()), BigRational::from_integer(0.into())],
    };
    let res = bezout::count_fiber_2d(&polys[0], &polys[1], (&pt[0], &pt[1]), opts.seed, opts.shear_retries)
        .map_err(|e| JobError::Input(e.to_string()))?;
    let text = format!("count = {:?} (shear {}, cross-check {})", res.count, res.shear, res.cross_check_shear);
    let value = serde_json::to_value(&res).map_err(|e| JobError::Internal(e.to_string()))?;
    Ok((value, text, EXIT_OK))
}

fn run_bernstein(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let polys = polys_from_json(field(inputs, "system", "")?, "/system")?;
    let system = SparseSystem::new(polys).map_err(|e| JobError::Input(e.to_string()))?;
    let verdict = bernstein::equality_verdict(&system).map_err(|e| JobError::Input(e.to_string()))?;
    let text = format!(
        "bound = {}, count = {:?}, degenerate = {}, consistent = {}",
        verdict.bound,
        verdict.count,
        !matches!(verdict.degeneracy, bernstein::DegeneracyOutcome::NondegenerateEverywhere),
        verdict.consistent
    );
    let code = if verdict.consistent { EXIT_OK } else { EXIT_INTERNAL };
    let value = serde_json::to_value(&verdict).map_err(|e| JobError::Internal(e.to_string()))?;
    Ok((value, text, code))
}

fn run_rees_build(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let kind = field(inputs, "kind", "")?
        .as_str()
        .ok_or_else(|| JobError::schema("/kind", "expected a string"))?;
    match kind {
        "intersection" => {
            let cert = intersection_certificate_from_json(inputs)?;
            let spec = build_from_intersection_certificate(&cert)
                .map_err(|e| JobError::Input(e.to_string()))?;
            let text = format!(
                "certificate verified; filtration with {} level-1 generators",
                spec.level_generators().get(&1).map_or(0, |v| v.len())
            );
            Ok((json!({ "filtration": filtration_to_json(&spec) }), text, EXIT_OK))
        }
        "quasifinite" => {
            let cert = quasifinite_certificate_from_json(inputs)?;
            let (spec, genericity) = build_from_quasifinite_certificate(&cert)
                .map_err(|e| JobError::Input(e.to_string()))?;
            let text = format!(
                "certificate verified; genericity polynomial {genericity}; {} explicit levels",
                spec.level_generators().len()
            );
            Ok((
                json!({
                    "filtration": filtration_to_json(&spec),
                    "genericity_poly": poly_to_json(&genericity),
                }),
                text,
                EXIT_OK,
            ))
        }
        other => Err(JobError::schema("/kind", format!("unknown certificate kind {other:?}"))),
    }
}

fn intersection_certificate_from_json(inputs: &Value) -> Result<IntersectionCertificate, JobError> {
    let ideals_value = field(inputs, "ideals", "")?
        .as_array()
        .ok_or_else(|| JobError::schema("/ideals", "expected an array"))?;
    let mut ideal_generators = Vec::new();
    for (i, iv) in ideals_value.iter().enumerate() {
        // each ideal must be principal: exactly one generator
        if let Some(arr) = iv.as_array() {
            if arr.len() != 1 {
                return Err(JobError::Input(
                    rees::ReesError::NotPrincipal(arr.len()).to_string(),
                ));
            }
            ideal_generators.push(poly_from_json(&arr[0], &format!("/ideals/{i}/0"))?);
        } else {
            ideal_generators.push(poly_from_json(iv, &format!("/ideals/{i}"))?);
        }
    }
    let entries_value = field(inputs, "entries", "")?
        .as_array()
        .ok_or_else(|| JobError::schema("/entries", "expected an array"))?;
    let mut entries = Vec::new();
    for (i, ev) in entries_value.iter().enumerate() {
        let ep = format!("/entries/{i}");
        entries.push(IntersectionEntry {
            var: i64_field(ev, "var", &ep)? as usize,
            exponent: i64_field(ev, "exponent", &ep)?,
            members: polys_from_json(field(ev, "members", &ep)?, &format!("{ep}/members"))?,
            remainder: poly_from_json(field(ev, "remainder", &ep)?, &format!("{ep}/remainder"))?,
        });
    }
    Ok(IntersectionCertificate {
        ideal_generators,
        entries,
    })
}

fn quasifinite_certificate_from_json(inputs: &Value) -> Result<QuasifiniteCertificate, JobError> {
    let components = polys_from_json(field(inputs, "components", "")?, "/components")?;
    let entries_value = field(inputs, "entries", "")?
        .as_array()
        .ok_or_else(|| JobError::schema("/entries", "expected an array"))?;
    let mut entries = Vec::new();
    let mut target_ring: Option<Arc<Ring>> = None;
    for (i, ev) in entries_value.iter().enumerate() {
        let ep = format!("/entries/{i}");
        let coefficients =
            polys_from_json(field(ev, "coefficients", &ep)?, &format!("{ep}/coefficients"))?;
        if let Some(g) = coefficients.first() {
            target_ring.get_or_insert_with(|| g.ring().clone());
        }
        entries.push(QuasifiniteEntry {
            var: i64_field(ev, "var", &ep)? as usize,
            degree: i64_field(ev, "degree", &ep)?,
            coefficients,
        });
    }
    let target_ring =
        target_ring.ok_or_else(|| JobError::schema("/entries", "no coefficients given"))?;
    Ok(QuasifiniteCertificate {
        components,
        target_ring,
        entries,
    })
}

fn run_rees_check(inputs: &Value, opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let spec = filtration_from_json(field(inputs, "filtration", "")?, "/filtration")?;
    let hypersurfaces = polys_from_json(field(inputs, "hypersurfaces", "")?, "/hypersurfaces")?;
    let bounds = PreservationBounds {
        d_max: opts.degree_bound,
        n_max: opts.power_bound,
    };
    let report = rees::preserves_at_infinity(&spec, &hypersurfaces, bounds)
        .map_err(|e| JobError::Input(e.to_string()))?;
    let certified = report.outcome == PreservationOutcome::Certified;
    let mut lines = vec![format!(
        "preservation: {:?} (d_max = {}, n_max = {})",
        report.outcome, report.d_max, report.n_max
    )];
    for g in &report.generators {
        lines.push(format!(
            "  generator {} at level {}: power = {:?}, verified = {}",
            g.generator, g.level, g.power, g.verified
        ));
    }
    let value = serde_json::to_value(&report).map_err(|e| JobError::Internal(e.to_string()))?;
    Ok((
        value,
        lines.join("\n"),
        if certified { EXIT_OK } else { EXIT_INCONCLUSIVE },
    ))
}

fn run_probe(inputs: &Value, _opts: &JobOptions) -> Result<(Value, String, i32), JobError> {
    let h = poly_from_json(field(inputs, "h", "")?, "/h")?;
    let schedule: Vec<i64> = match inputs.get("schedule") {
        Some(v) => i64_array(v, "/schedule")?,
        None => rees::DEFAULT_PROBE_SCHEDULE.to_vec(),
    };
    let report = if let Some(df) = inputs.get("degree_function") {
        let (d, _ring) = degree_function_from_json(df, "/degree_function")?;
        rees::normalized_degree_probe(&d, &h, &schedule)
    } else {
        let spec = filtration_from_json(field(inputs, "filtration", "")?, "/filtration")?;
        rees::normalized_degree_probe_filtration(&spec, &h, &schedule)
    }
    .map_err(|e| JobError::Input(e.to_string()))?;
    let text = format!(
        "probe: [{}], stabilized = {}, implied denominator = {:?}",
        report
            .values
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect::<Vec<_>>()
            .join(", "),
        report.stabilized,
        report.implied_denominator
    );
    let code = if report.stabilized { EXIT_OK } else { EXIT_INCONCLUSIVE };
    let value = serde_json::to_value(&report).map_err(|e| JobError::Internal(e.to_string()))?;
    Ok((value, text, code))
}

// Witness reporting shares the eval surface; exposed for the CLI and tests.
pub fn witness_report(q: &Quasidegree, ring: &Arc<Ring>) -> Result<Value, JobError> {
    let mut out = Vec::new();
    for i in 0..q.parts().len() {
        let entry = match nonredundancy_witness(q, ring, i)
            .map_err(|e| JobError::Input(e.to_string()))?
        {
            WitnessOutcome::Found(w) => json!({
                "part": i,
                "witness": w.witness.to_string(),
                "frame": w.frame,
                "exponents": w.exponents,
            }),
            WitnessOutcome::NotFound { conclusive } => json!({
                "part": i,
                "witness": Value::Null,
                "conclusive": conclusive,
            }),
        };
        out.push(entry);
    }
    Ok(Value::Array(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_i64 as ri;

    #[test]
    fn poly_json_round_trip_is_bit_exact() {
        let ring = Ring::new(&["x1", "x2"]);
        let p = Polynomial::from_terms(
            &ring,
            [
                (vec![2, 0], crate::rational::rational(-3, 2)),
                (vec![0, 1], ri(7)),
            ],
        )
        .unwrap();
        let v = poly_to_json(&p);
        assert_eq!(
            v,
            json!({
                "vars": ["x1", "x2"],
                "laurent": false,
                "terms": [ {"c": "7", "e": [0, 1]}, {"c": "-3/2", "e": [2, 0]} ],
            })
        );
        let q = poly_from_json(&v, "").unwrap();
        assert_eq!(p, q);
        assert_eq!(poly_to_json(&q), v);
    }

    #[test]
    fn schema_errors_carry_pointers() {
        let bad = json!({
            "vars": ["x1"],
            "terms": [ {"c": "1.5", "e": [1]} ],
        });
        match poly_from_json(&bad, "/polys/0").unwrap_err() {
            JobError::Schema { pointer, .. } => assert_eq!(pointer, "/polys/0/terms/0/c"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn eval_job_runs() {
        let job = json!({
            "inputs": {
                "degree_function": {"kind": "weighted", "weights": [3, 2]},
                "polys": [ {"vars": ["x1","x2"], "laurent": false,
                            "terms": [ {"c":"1","e":[2,0]}, {"c":"-1","e":[0,3]} ]} ],
            }
        });
        let out = run_job("eval", &job, &JobOptions::default()).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        assert_eq!(out.report["result"]["values"][0]["value"], json!(6));
    }

    #[test]
    fn degree_function_json_kinds() {
        let weighted = json!({"kind": "weighted", "weights": [1, 1]});
        assert!(degree_function_from_json(&weighted, "").is_ok());
        let staircase = json!({"kind": "univariate_ceil", "num": 3, "den": 2});
        assert!(degree_function_from_json(&staircase, "").is_ok());
        let unknown = json!({"kind": "mystery"});
        assert!(degree_function_from_json(&unknown, "").is_err());
    }

    #[test]
    fn filtration_json_round_trip() {
        let ring = Ring::new(&["x", "y"]);
        let spec = FiltrationSpec::powers_of_level_one(
            &ring,
            vec![
                Polynomial::var(&ring, 0),
                Polynomial::var(&ring, 1),
                Polynomial::from_terms(&ring, [(vec![3, 0], ri(1))]).unwrap(),
            ],
        )
        .unwrap();
        let v = filtration_to_json(&spec);
        let back = filtration_from_json(&v, "").unwrap();
        assert_eq!(filtration_to_json(&back), v);
    }
}
