//! JSON documents read and written by the CLI.
//!
//! Rationals are strings such as `"-3/2"`; vectors are arrays of them.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use parabolica::catalog::{Classical, Family};
use parabolica::ratmat::{format_rational, parse_rational, Vector};
use parabolica::{Error, LieAlgebra, Matrix, Subspace};

/// A failed command: a rejected input, or an error from the library.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(e) if e.is_internal() => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Input(msg) => json!({ "error": "input", "message": msg }),
            Failure::Domain(e) => {
                let mut v = json!({ "error": e.kind(), "message": e.to_string() });
                match e {
                    Error::Jacobi { i, j, k } => v["triple"] = json!([i, j, k]),
                    Error::Antisymmetry { i, j } => v["pair"] = json!([i, j]),
                    _ => {}
                }
                v
            }
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

fn bad(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

/// Reads a document from a path, from stdin for `-`, or inline when the
/// argument itself starts with `{` or `[`.
pub fn read_source(arg: &str) -> CliResult<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| bad(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| bad(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| bad(format!("{arg}: {e}")))
}

pub fn rational_json(q: &parabolica::Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector_json(v: &[parabolica::Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn basis_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector_json(v)).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

/// 1-based labels.
pub fn labels_json(set: &BTreeSet<usize>) -> Value {
    json!(set.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn parse_rat(v: &Value) -> CliResult<parabolica::Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(bad),
        Value::Number(n) => n
            .as_i64()
            .map(parabolica::ratmat::rat)
            .ok_or_else(|| bad(format!("{n} is not an integer; write fractions as strings"))),
        _ => Err(bad(format!("expected a rational, found {v}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

pub fn parse_vector(v: &Value, len: usize, what: &str) -> CliResult<Vector> {
    let items = array(v, what)?;
    if items.len() != len {
        return Err(bad(format!("{what} must have {len} entries, found {}", items.len())));
    }
    items.iter().map(parse_rat).collect()
}

pub fn parse_vectors(v: &Value, len: usize, what: &str) -> CliResult<Vec<Vector>> {
    array(v, what)?.iter().map(|x| parse_vector(x, len, what)).collect()
}

fn parse_matrix(v: &Value, size: usize, what: &str) -> CliResult<Matrix> {
    Ok(Matrix::from_rows(parse_vectors(v, size, what)?))
}

/// Parses `gl(n)`, `sl(n)` or `so(p,q)`.
pub fn parse_family(s: &str) -> CliResult<Family> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    let nums = |r: &str| -> CliResult<Vec<usize>> {
        r.split(',').map(|x| x.parse().map_err(|_| bad(format!("bad catalog name {s}")))).collect()
    };
    let family = if let Some(r) = inner("gl(") {
        nums(r)?.as_slice().try_into().map(|[n]: [usize; 1]| Family::Gl(n)).ok()
    } else if let Some(r) = inner("sl(") {
        nums(r)?.as_slice().try_into().map(|[n]: [usize; 1]| Family::Sl(n)).ok()
    } else if let Some(r) = inner("so(") {
        nums(r)?.as_slice().try_into().map(|[p, q]: [usize; 2]| Family::So(p, q)).ok()
    } else {
        None
    };
    family.ok_or_else(|| bad(format!("bad catalog name {s}")))
}

/// An algebra read from a document, with its catalog entry when tagged.
pub struct Loaded {
    pub algebra: Arc<LieAlgebra>,
    pub classical: Option<Classical>,
}

impl Loaded {
    pub fn classical(&self) -> CliResult<&Classical> {
        self.classical.as_ref().ok_or_else(|| {
            Failure::Domain(Error::Precondition("this verb needs a catalog algebra (a \"catalog\" tag)".into()))
        })
    }
}

pub fn algebra_json(g: &LieAlgebra, family: Option<Family>) -> Value {
    let mut m = Map::new();
    if let Some(f) = family {
        m.insert("catalog".into(), json!(f.to_string()));
    }
    m.insert("dim".into(), json!(g.dim()));
    m.insert("basis".into(), json!(g.labels()));
    let structure: Vec<Value> =
        g.structure().iter().map(|row| Value::Array(row.iter().map(|v| vector_json(v)).collect())).collect();
    m.insert("structure".into(), Value::Array(structure));
    if let Some(r) = g.realization() {
        m.insert("realization".into(), Value::Array(r.iter().map(matrix_json).collect()));
    }
    Value::Object(m)
}

/// Loads the algebra of a document: the document itself, or its
/// `algebra` field. Structure constants are validated on load.
pub fn load_algebra(doc: &Value) -> CliResult<Loaded> {
    let a = doc.get("algebra").unwrap_or(doc);
    let basis: Vec<String> = serde_json::from_value(a.get("basis").cloned().unwrap_or(Value::Null))
        .map_err(|_| bad("\"basis\" must be an array of names"))?;
    let n = basis.len();
    if let Some(d) = a.get("dim") {
        if d.as_u64() != Some(n as u64) {
            return Err(bad(format!("\"dim\" is {d} but there are {n} basis names")));
        }
    }
    let rows = array(a.get("structure").unwrap_or(&Value::Null), "structure")?;
    let structure: Vec<Vec<Vector>> =
        rows.iter().map(|r| parse_vectors(r, n, "structure constants")).collect::<CliResult<_>>()?;
    let mut g = LieAlgebra::new(basis, structure)?;
    if let Some(r) = a.get("realization") {
        let mats = array(r, "realization")?;
        let size = mats.first().and_then(Value::as_array).map_or(0, Vec::len);
        let mats = mats.iter().map(|m| parse_matrix(m, size, "realization")).collect::<CliResult<_>>()?;
        g = g.with_realization(mats)?;
    }
    let classical = match a.get("catalog") {
        None => None,
        Some(tag) => {
            let family = parse_family(tag.as_str().ok_or_else(|| bad("\"catalog\" must be a string"))?)?;
            let c = Classical::new(family)?;
            if **c.algebra() != g {
                return Err(Failure::Domain(Error::Invalid(format!("algebra does not match the catalog entry {family}"))));
            }
            Some(c)
        }
    };
    let algebra = match &classical {
        Some(c) => Arc::clone(c.algebra()),
        None => Arc::new(g),
    };
    Ok(Loaded { algebra, classical })
}

/// A subspace document: `{"algebra": ..., "basis": [[...], ...]}`.
pub fn load_subspace(doc: &Value) -> CliResult<(Loaded, Subspace)> {
    let loaded = load_algebra(doc)?;
    let n = loaded.algebra.dim();
    let basis = doc.get("basis").filter(|_| doc.get("algebra").is_some()).ok_or_else(|| {
        bad("expected a subspace document with \"algebra\" and \"basis\" fields")
    })?;
    let s = Subspace::span(n, parse_vectors(basis, n, "subspace basis")?);
    Ok((loaded, s))
}

pub fn subspace_json(loaded: &Loaded, s: &Subspace) -> Value {
    json!({
        "algebra": algebra_json(&loaded.algebra, loaded.classical.as_ref().map(Classical::family)),
        "dim": s.dim(),
        "basis": basis_json(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in [Family::Gl(3), Family::Sl(2), Family::So(4, 3)] {
            assert_eq!(parse_family(&f.to_string()).unwrap(), f);
        }
        assert!(parse_family("so(3)").is_err());
        assert!(parse_family("sp(4)").is_err());
    }

    #[test]
    fn algebra_documents_round_trip() {
        let c = Classical::so(2, 1).unwrap();
        let doc = algebra_json(c.algebra(), Some(c.family()));
        let loaded = load_algebra(&doc).unwrap();
        assert_eq!(*loaded.algebra, **c.algebra());
        assert_eq!(loaded.classical.unwrap().family(), Family::So(2, 1));
    }
}
