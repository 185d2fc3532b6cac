use std::collections::BTreeSet;

use serde_json::{json, Value};

use parabolica::acceptance;
use parabolica::building::{delta_parabolic, lie_apartment, verify_building};
use parabolica::catalog::{Classical, Family};
use parabolica::config::{cross_configuration, project_configuration, simplex_configuration, Configuration};
use parabolica::parabolic::{is_parabolic, lowest_weight_line, wedge_budget, ParabolicData};
use parabolica::ratmat::{vector, Vector};
use parabolica::rootdata::Frame;
use parabolica::{Error, Matrix, Subspace};

use crate::doc::{
    algebra_json, basis_json, labels_json, load_algebra, load_subspace, parse_family, parse_vectors, read_source,
    subspace_json, vector_json, CliResult, Failure, Loaded,
};

/// What a verb prints.
pub enum Output {
    Json(Value),
    Text(String),
}

pub struct Run {
    pub output: Output,
    /// Exit code on success; `selftest` reports failures through it.
    pub code: i32,
}

impl From<Output> for Run {
    fn from(output: Output) -> Self {
        Run { output, code: 0 }
    }
}

fn parse_labels(s: &str, rank: usize) -> CliResult<BTreeSet<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| match x.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(Failure::Input(format!("type labels run from 1 to {rank}, got {x}"))),
        })
        .collect()
}

pub struct MakeArgs<'a> {
    pub family: &'a str,
    pub dims: &'a [usize],
    pub parabolic: Option<&'a str>,
    pub borel: bool,
    pub stabilizer: Option<&'a str>,
}

pub fn make(args: MakeArgs) -> CliResult<Output> {
    let name = format!("{}({})", args.family, args.dims.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    let c = Classical::new(parse_family(&name)?)?;
    let loaded = Loaded { algebra: c.algebra().clone(), classical: Some(c.clone()) };
    let p = if let Some(labels) = args.parabolic {
        let frame = c.standard_frame()?;
        Some(frame.parabolic_from_subset(&parse_labels(labels, frame.rank())?)?)
    } else if args.borel {
        Some(c.standard_borel()?)
    } else if let Some(w) = args.stabilizer {
        let d = c.defining_dim();
        let w = Subspace::span(d, parse_vectors(&read_source(w)?, d, "stabilized subspace")?);
        Some(c.subspace_stabilizer(&w)?)
    } else {
        None
    };
    Ok(Output::Json(match p {
        None => algebra_json(c.algebra(), Some(c.family())),
        Some(p) => {
            let mut doc = subspace_json(&loaded, p.space());
            doc["type"] = labels_json(&c.standard_frame()?.type_of_any(&p)?);
            doc
        }
    }))
}

fn parabolic_of(source: &str) -> CliResult<(Loaded, ParabolicData)> {
    let (loaded, s) = load_subspace(&read_source(source)?)?;
    let p = ParabolicData::new(&loaded.algebra, s)?;
    Ok((loaded, p))
}

fn same_algebra(a: &Loaded, b: &Loaded) -> CliResult<()> {
    if *a.algebra != *b.algebra {
        return Err(Failure::Domain(Error::DimensionMismatch("the documents live in different algebras".into())));
    }
    Ok(())
}

fn type_json(loaded: &Loaded, p: &ParabolicData) -> CliResult<Value> {
    Ok(match &loaded.classical {
        Some(c) => labels_json(&c.standard_frame()?.type_of_any(p)?),
        None => Value::Null,
    })
}

pub fn check(source: &str, wedge: bool, budget: Option<u128>) -> CliResult<Output> {
    let (loaded, s) = load_subspace(&read_source(source)?)?;
    let g = &loaded.algebra;
    let cert = is_parabolic(g, &s)?;
    let [c4, c5, c6, c7] = cert.conditions();
    let mut out = json!({
        "dim": s.dim(),
        "parabolic": cert.is_parabolic(),
        "conditions": {
            "perp_in_nilradical_and_self_normalizing": c4,
            "normalizes_nilradical": c5,
            "perp_is_nilradical": c6,
            "dimension_identity": c7,
        },
        "nilradical": basis_json(&cert.nil),
    });
    if cert.is_parabolic() {
        let p = ParabolicData::new(g, s)?;
        out["type"] = type_json(&loaded, &p)?;
        let f = p.filtration();
        out["filtration"] = f.indices().map(|j| json!({ "index": j, "dim": f.level(j).dim() })).collect();
        if wedge {
            let line = lowest_weight_line(&p, budget.unwrap_or_else(wedge_budget))?;
            out["lowest_weight_line"] = json!({
                "degree": line.degree,
                "wedge_dim": line.wedge_dim,
                "module_dim": line.module_dim,
                "stabilizer_dim": line.stabilizer.dim(),
                "stabilizer_matches": line.stabilizer_matches,
            });
        }
    }
    Ok(Output::Json(out))
}

pub fn project(along: &str, source: &str) -> CliResult<Output> {
    let (lq, q) = parabolic_of(along)?;
    let (lp, p) = parabolic_of(source)?;
    same_algebra(&lq, &lp)?;
    let relation = if p.is_costandard(&q)? {
        "costandard"
    } else if p.is_weakly_opposite(&q)? {
        "weakly_opposite"
    } else {
        "neither"
    };
    let r = q.project(&p)?;
    let mut out = json!({
        "relation": relation,
        "r_in_g": { "dim": r.in_g.dim(), "basis": basis_json(r.in_g.space()) },
        "r_in_q0": { "dim": r.in_levi.dim(), "basis": basis_json(r.in_levi.space()) },
    });
    if let Some(c) = &lq.classical {
        let frame = c.standard_frame()?;
        let frame0 = frame.levi_frame(&q)?;
        out["r_in_g"]["type"] = labels_json(&frame.type_of_any(&r.in_g)?);
        out["r_in_q0"]["type"] = labels_json(&frame0.type_of_any(&r.in_levi)?);
        out["q0_labels"] = json!(frame0.names());
    }
    Ok(Output::Json(out))
}

/// Grading lift inside the given subspace, or inside `p` itself.
fn lift(loaded: &Loaded, p: &ParabolicData, within: Option<&str>) -> CliResult<Vector> {
    let constraint = match within {
        Some(src) => {
            let (l, s) = load_subspace(&read_source(src)?)?;
            same_algebra(loaded, &l)?;
            s
        }
        None => p.space().clone(),
    };
    Ok(p.grading_lift(&constraint)?.xi)
}

pub fn opposite(source: &str, within: Option<&str>) -> CliResult<Output> {
    let (loaded, p) = parabolic_of(source)?;
    let xi = lift(&loaded, &p, within)?;
    let op = p.opposite(&xi)?;
    let mut out = subspace_json(&loaded, op.space());
    out["grading_element"] = vector_json(&xi);
    out["type"] = type_json(&loaded, &op)?;
    Ok(Output::Json(out))
}

pub fn levi(source: &str, within: Option<&str>) -> CliResult<Output> {
    let (loaded, p) = parabolic_of(source)?;
    let xi = lift(&loaded, &p, within)?;
    let levi = p.levi_subalgebra(&xi)?;
    let q0 = p.levi_algebra()?;
    Ok(Output::Json(json!({
        "grading_element": vector_json(&xi),
        "levi_subalgebra": { "dim": levi.dim(), "basis": basis_json(&levi) },
        "nilradical": { "dim": p.nilradical().dim(), "basis": basis_json(p.nilradical()) },
        "quotient": algebra_json(&q0, None),
    })))
}

pub fn rootdata(source: &str) -> CliResult<Output> {
    let loaded = load_algebra(&read_source(source)?)?;
    let frame = loaded.classical()?.standard_frame()?;
    let rd = frame.root_datum();
    let simples = &frame.simple_system().simples;
    // coweights ω_i in the span of the simple coroots with α_j(ω_i) = δ_ij
    let r = simples.len();
    let m = Matrix::from_fn(r, r, |k, j| rd.pairing(simples[j], simples[k]));
    let inv = m.inverse().ok_or_else(|| Failure::Domain(Error::Internal("simple coroots are dependent".into())))?;
    let coroots: Vec<Vector> = simples.iter().map(|&a| rd.coroot(a).clone()).collect();
    let coweights: Vec<Value> =
        (0..r).map(|i| vector_json(&vector::combine(rd.ambient().dim(), inv.row(i), &coroots))).collect();
    Ok(Output::Json(json!({
        "cartan": basis_json(rd.cartan()),
        "roots": rd.roots().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "root_space_dims": (0..rd.len()).map(|a| rd.root_space(a).dim()).collect::<Vec<_>>(),
        "simple_roots": simples,
        "cartan_matrix": frame.cartan_matrix(),
        "fundamental_coweights": coweights,
    })))
}

fn frame_of(loaded: &Loaded) -> CliResult<&Frame> {
    Ok(loaded.classical()?.standard_frame()?)
}

fn word_json(word: &[usize]) -> Value {
    json!(word.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn weyl(source: &str) -> CliResult<Output> {
    let (loaded, pc) = parabolic_of(source)?;
    let word = frame_of(&loaded)?.weyl_word(&pc)?;
    Ok(Output::Json(json!({ "word": word_json(&word), "length": word.len() })))
}

pub fn delta(first: &str, second: &str) -> CliResult<Output> {
    let (lb, pb) = parabolic_of(first)?;
    let (lc, pc) = parabolic_of(second)?;
    same_algebra(&lb, &lc)?;
    let word = delta_parabolic(frame_of(&lb)?, &pb, &pc)?;
    Ok(Output::Json(json!({ "word": word_json(&word), "length": word.len() })))
}

pub fn building(source: &str, dot: bool, verify: bool) -> CliResult<Output> {
    let loaded = load_algebra(&read_source(source)?)?;
    let frame = frame_of(&loaded)?;
    let apt = lie_apartment(frame)?;
    if dot {
        return Ok(Output::Text(apt.thin.system().to_dot("apartment")));
    }
    let mut out = json!({
        "chambers": apt.thin.len(),
        "coxeter_matrix": apt.thin.coxeter_matrix(),
        "words": apt.words.iter().map(|w| word_json(w)).collect::<Vec<_>>(),
        "w_distance": apt.thin.w_distance()?.to_json(&apt.thin),
    });
    if verify {
        let n = frame.chamber().nilradical();
        let x = n.basis().iter().fold(vector::zero(n.ambient()), |acc, b| vector::add(&acc, b));
        let report = verify_building(frame, &x)?;
        out["verification"] = json!({
            "passed": report.passed(),
            "chambers": report.chambers,
            "pairs": report.pairs,
            "overlap": report.overlap,
            "violations": report.violations,
        });
    }
    Ok(Output::Json(out))
}

/// Reads a witness document: `{"catalog": "gl(4)", "points": [...]}` or
/// `{"catalog": "so(4,3)", "pairs": [[e, f], ...]}`, with an optional
/// `"center"` spanning the subspace whose stabilizer is projected along.
pub fn config(source: &str, dot: bool) -> CliResult<Output> {
    let doc = read_source(source)?;
    let tag = doc.get("catalog").and_then(Value::as_str).ok_or_else(|| Failure::Input("witness needs a \"catalog\" name".into()))?;
    let c = Classical::new(parse_family(tag)?)?;
    let d = c.defining_dim();
    let standard = match (c.family(), doc.get("points"), doc.get("pairs")) {
        (Family::Gl(_) | Family::Sl(_), Some(points), None) => {
            simplex_configuration(&c, &parse_vectors(points, d, "points")?)?
        }
        (Family::So(..), None, Some(pairs)) => {
            let pairs = pairs
                .as_array()
                .ok_or_else(|| Failure::Input("\"pairs\" must be an array".into()))?
                .iter()
                .map(|pair| match parse_vectors(pair, d, "isotropic pair")?.as_slice() {
                    [e, f] => Ok((e.clone(), f.clone())),
                    _ => Err(Failure::Input("each isotropic pair has two vectors".into())),
                })
                .collect::<CliResult<Vec<_>>>()?;
            cross_configuration(&c, &pairs)?
        }
        _ => return Err(Failure::Input("gl and sl take \"points\"; so takes \"pairs\"".into())),
    };
    let configuration: Configuration = match doc.get("center") {
        None => standard.configuration,
        Some(center) => {
            let w = Subspace::span(d, parse_vectors(center, d, "center")?);
            project_configuration(&c.subspace_stabilizer(&w)?, &standard.configuration)?
        }
    };
    let report = configuration.report();
    Ok(if dot { Output::Text(report.to_dot().to_string()) } else { Output::Json(report.to_json()) })
}

pub fn selftest(only: Option<usize>) -> CliResult<Run> {
    let outcomes = match only {
        Some(id) if (1..=9).contains(&id) => vec![acceptance::run(id)],
        Some(id) => return Err(Failure::Input(format!("criteria are numbered 1 to 9, got {id}"))),
        None => acceptance::run_all(),
    };
    let text: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
    let code = if outcomes.iter().all(|o| o.passed()) { 0 } else { 2 };
    Ok(Run { output: Output::Text(text), code })
}
