//! The JSON input document and its serialization.
//!
//! ```json
//! {
//!   "kind": "lie",
//!   "dim": 2,
//!   "constants": [{"in": [1, 2], "out": {"1": "1"}}],
//!   "representation": {"dimV": 2, "rho": [[["0", "1"], ["0", "0"]], ...]},
//!   "cochain": {"degree": 1, "entries": [{"in": [1], "out": {"2": "1/2"}}]}
//! }
//! ```
//!
//! Indices are 1-based. For Lie and 3-Lie constants, and for wedge slots of
//! cochains, only increasing input tuples are accepted. 3-Lie matrices are
//! listed over the increasing basis `e_a ∧ e_b` of `∧²g`.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::cochains::{Cochain, CochainSpace};
use crate::linalg::{Matrix, Scalar};
use crate::representations::{map_names, Representation};
use crate::structures::{all_tuples, wedge2_basis, Algebra, AlgebraKind};

/// A malformed document, located by a JSON path such as
/// `$.constants[2].out["3"]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for ParseError {}

type Parsed<T> = std::result::Result<T, ParseError>;

fn fail<T>(path: &str, message: impl Into<String>) -> Parsed<T> {
    Err(ParseError {
        path: path.to_string(),
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub algebra: Algebra,
    pub representation: Option<Representation>,
    pub cochain: Option<Cochain>,
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Parsed<&'a Map<String, Value>> {
    let Some(obj) = v.as_object() else {
        return fail(path, "expected an object");
    };
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return fail(&format!("{path}.{k}"), "unknown field");
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Parsed<&'a Value> {
    obj.get(key)
        .map_or_else(|| fail(path, format!("missing field \"{key}\"")), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().map_or_else(|| fail(path, "expected an array"), Ok)
}

fn count(v: &Value, path: &str) -> Parsed<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .map_or_else(|| fail(path, "expected a non-negative integer"), Ok)
}

fn rational(v: &Value, path: &str) -> Parsed<Scalar> {
    let Some(s) = v.as_str() else {
        return fail(path, "expected a rational string such as \"-3/4\"");
    };
    s.parse().or_else(|_| fail(path, format!("invalid rational \"{s}\"")))
}

fn index(v: &Value, path: &str, dim: usize) -> Parsed<usize> {
    match v.as_u64() {
        Some(i) if i >= 1 && (i as usize) <= dim => Ok(i as usize - 1),
        _ => fail(path, format!("expected an index in 1..={dim}")),
    }
}

/// `{"k": "q", ..}` into a dense vector of length `dim`.
fn out_vector(v: &Value, path: &str, dim: usize) -> Parsed<Vec<Scalar>> {
    let Some(obj) = v.as_object() else {
        return fail(path, "expected an object mapping output indices to rationals");
    };
    let mut out = vec![Scalar::zero(); dim];
    for (k, x) in obj {
        let p = format!("{path}[\"{k}\"]");
        let i = match k.parse::<usize>() {
            Ok(i) if (1..=dim).contains(&i) => i - 1,
            _ => return fail(&p, format!("output index must be in 1..={dim}")),
        };
        out[i] = rational(x, &p)?;
    }
    Ok(out)
}

fn inputs(v: &Value, path: &str, len: usize, dim: usize) -> Parsed<Vec<usize>> {
    let items = array(v, path)?;
    if items.len() != len {
        return fail(path, format!("expected {len} inputs, got {}", items.len()));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| index(x, &format!("{path}[{i}]"), dim))
        .collect()
}

fn increasing(t: &[usize]) -> bool {
    t.windows(2).all(|w| w[0] < w[1])
}

fn parse_kind(v: &Value, path: &str) -> Parsed<AlgebraKind> {
    let Some(s) = v.as_str() else {
        return fail(path, "expected a string");
    };
    s.parse().or_else(|_| {
        fail(
            path,
            format!("unknown kind \"{s}\" (associative, lie, prelie, leibniz, 3lie)"),
        )
    })
}

fn parse_constants(v: &Value, kind: AlgebraKind, dim: usize) -> Parsed<Algebra> {
    let skew = matches!(kind, AlgebraKind::Lie | AlgebraKind::ThreeLie);
    let mut a = Algebra::zero(kind, dim);
    let mut seen = std::collections::BTreeSet::new();
    for (e, entry) in array(v, "$.constants")?.iter().enumerate() {
        let path = format!("$.constants[{e}]");
        let obj = object(entry, &path, &["in", "out"])?;
        let t = inputs(field(obj, &path, "in")?, &format!("{path}.in"), kind.arity(), dim)?;
        if skew && !increasing(&t) {
            return fail(
                &format!("{path}.in"),
                "inputs must be strictly increasing for a skew operation",
            );
        }
        if !seen.insert(t.clone()) {
            return fail(&format!("{path}.in"), "duplicate input tuple");
        }
        let out = out_vector(field(obj, &path, "out")?, &format!("{path}.out"), dim)?;
        let single = Algebra::from_products(kind, dim, [(t, out)]).or_else(|e| fail(&path, e.to_string()))?;
        a = a.add(&single).expect("same shape");
    }
    Ok(a)
}

fn parse_matrix(v: &Value, path: &str, m: usize) -> Parsed<Matrix> {
    let rows = array(v, path)?;
    if rows.len() != m {
        return fail(path, format!("expected {m} rows, got {}", rows.len()));
    }
    let mut out = Matrix::zeros(m, m);
    for (i, row) in rows.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let row = array(row, &p)?;
        if row.len() != m {
            return fail(&p, format!("expected {m} columns, got {}", row.len()));
        }
        for (j, x) in row.iter().enumerate() {
            out[(i, j)] = rational(x, &format!("{p}[{j}]"))?;
        }
    }
    Ok(out)
}

fn parse_representation(v: &Value, a: &Algebra) -> Parsed<Representation> {
    let names = map_names(a.kind());
    let mut allowed = vec!["dimV"];
    allowed.extend_from_slice(names);
    let obj = object(v, "$.representation", &allowed)?;
    let m = count(field(obj, "$.representation", "dimV")?, "$.representation.dimV")?;
    let expected = match a.kind() {
        AlgebraKind::ThreeLie => wedge2_basis(a.dim()).len(),
        _ => a.dim(),
    };
    let mut maps = Vec::new();
    for name in names {
        let path = format!("$.representation.{name}");
        let list = array(field(obj, "$.representation", name)?, &path)?;
        if list.len() != expected {
            return fail(&path, format!("expected {expected} matrices, got {}", list.len()));
        }
        maps.push(
            list.iter()
                .enumerate()
                .map(|(i, x)| parse_matrix(x, &format!("{path}[{i}]"), m))
                .collect::<Parsed<Vec<_>>>()?,
        );
    }
    Representation::new(a.clone(), m, maps).or_else(|e| fail("$.representation", e.to_string()))
}

fn parse_cochain(v: &Value, kind: AlgebraKind, dim: usize, dim_v: usize) -> Parsed<Cochain> {
    let obj = object(v, "$.cochain", &["degree", "entries"])?;
    let degree = count(field(obj, "$.cochain", "degree")?, "$.cochain.degree")?;
    let space = CochainSpace::new(kind, degree, dim, dim_v).or_else(|e| fail("$.cochain.degree", e.to_string()))?;
    let slots = space.slots();
    let mut coords = vec![Scalar::zero(); space.dim()];
    let mut seen = std::collections::BTreeSet::new();
    for (e, entry) in array(field(obj, "$.cochain", "entries")?, "$.cochain.entries")?
        .iter()
        .enumerate()
    {
        let path = format!("$.cochain.entries[{e}]");
        let eo = object(entry, &path, &["in", "out"])?;
        let t = inputs(field(eo, &path, "in")?, &format!("{path}.in"), space.arity(), dim)?;
        let mut pos = 0;
        for s in &slots {
            if !increasing(&t[pos..pos + s.arity]) {
                return fail(&format!("{path}.in"), "wedge arguments must be strictly increasing");
            }
            pos += s.arity;
        }
        if !seen.insert(t.clone()) {
            return fail(&format!("{path}.in"), "duplicate input tuple");
        }
        let out = out_vector(field(eo, &path, "out")?, &format!("{path}.out"), dim_v)?;
        let (idx, _) = space.locate(&t).expect("canonical tuple");
        coords[idx * dim_v..(idx + 1) * dim_v].clone_from_slice(&out);
    }
    Ok(Cochain::from_vector(space, coords).expect("length matches"))
}

pub fn parse_value(v: &Value) -> Parsed<Document> {
    let obj = object(v, "$", &["kind", "dim", "constants", "representation", "cochain"])?;
    let kind = parse_kind(field(obj, "$", "kind")?, "$.kind")?;
    let dim = count(field(obj, "$", "dim")?, "$.dim")?;
    if dim == 0 {
        return fail("$.dim", "dimension must be positive");
    }
    let algebra = match obj.get("constants") {
        Some(c) => parse_constants(c, kind, dim)?,
        None => Algebra::zero(kind, dim),
    };
    let representation = obj
        .get("representation")
        .map(|r| parse_representation(r, &algebra))
        .transpose()?;
    let dim_v = representation.as_ref().map_or(dim, Representation::dim_v);
    let cochain = obj
        .get("cochain")
        .map(|c| parse_cochain(c, kind, dim, dim_v))
        .transpose()?;
    Ok(Document {
        algebra,
        representation,
        cochain,
    })
}

pub fn parse_document(text: &str) -> Parsed<Document> {
    let v: Value = serde_json::from_str(text).or_else(|e| fail("$", format!("invalid JSON: {e}")))?;
    parse_value(&v)
}

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn out_value(v: &[Scalar]) -> Option<Value> {
    let out: Map<String, Value> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| ((k + 1).to_string(), scalar(x)))
        .collect();
    (!out.is_empty()).then_some(Value::Object(out))
}

fn one_based(t: &[usize]) -> Value {
    json!(t.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn algebra_to_value(a: &Algebra) -> Value {
    let skew = matches!(a.kind(), AlgebraKind::Lie | AlgebraKind::ThreeLie);
    let constants: Vec<Value> = all_tuples(a.dim(), a.kind().arity())
        .filter(|t| !skew || increasing(t))
        .filter_map(|t| out_value(a.product(&t)).map(|out| json!({"in": one_based(&t), "out": out})))
        .collect();
    json!({"kind": a.kind().name(), "dim": a.dim(), "constants": constants})
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar).collect()))
            .collect(),
    )
}

pub fn representation_to_value(r: &Representation) -> Value {
    let mut obj = Map::new();
    obj.insert("dimV".into(), json!(r.dim_v()));
    for (name, ms) in map_names(r.kind()).iter().zip(r.maps()) {
        obj.insert((*name).into(), Value::Array(ms.iter().map(matrix_to_value).collect()));
    }
    Value::Object(obj)
}

pub fn cochain_to_value(c: &Cochain) -> Value {
    let m = c.space().dim_v;
    let entries: Vec<Value> = c
        .space()
        .tuples()
        .iter()
        .enumerate()
        .filter_map(|(i, t)| {
            out_value(&c.coords()[i * m..(i + 1) * m]).map(|out| json!({"in": one_based(t), "out": out}))
        })
        .collect();
    json!({"degree": c.space().degree, "entries": entries})
}

pub fn document_to_value(d: &Document) -> Value {
    let mut v = algebra_to_value(&d.algebra);
    let obj = v.as_object_mut().expect("object");
    if let Some(r) = &d.representation {
        obj.insert("representation".into(), representation_to_value(r));
    }
    if let Some(c) = &d.cochain {
        obj.insert("cochain".into(), cochain_to_value(c));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::{dual_representation, regular_or_adjoint};
    use crate::samples;

    fn err_path(text: &str) -> String {
        parse_document(text).unwrap_err().path
    }

    #[test]
    fn parses_aff1() {
        let d =
            parse_document(r#"{"kind": "lie", "dim": 2, "constants": [{"in": [1, 2], "out": {"1": "1"}}]}"#).unwrap();
        assert_eq!(d.algebra, samples::aff1());
        assert!(d.representation.is_none() && d.cochain.is_none());
    }

    #[test]
    fn round_trip_named_fixtures() {
        for (name, a) in samples::all_named() {
            let mut rng = samples::rng(5);
            let r = samples::random_representation(&mut rng, &a);
            let c = Cochain::from_fn(CochainSpace::new(a.kind(), 2, a.dim(), r.dim_v()).unwrap(), |t| {
                (0..r.dim_v())
                    .map(|o| Scalar::ratio((t.iter().sum::<usize>() + o) as i64 - 2, 3))
                    .collect()
            });
            let doc = Document {
                algebra: a,
                representation: Some(r),
                cochain: Some(c),
            };
            let text = serde_json::to_string(&document_to_value(&doc)).unwrap();
            assert_eq!(parse_document(&text).unwrap(), doc, "{name}");
        }
        let dual = dual_representation(&regular_or_adjoint(&samples::threelie_e1()).unwrap()).unwrap();
        let doc = Document {
            algebra: samples::threelie_e1(),
            representation: Some(dual),
            cochain: None,
        };
        assert_eq!(parse_document(&document_to_value(&doc).to_string()).unwrap(), doc);
    }

    #[test]
    fn diagnostics_name_the_path() {
        assert_eq!(err_path("{"), "$");
        assert_eq!(err_path(r#"{"kind": "lie"}"#), "$");
        assert_eq!(err_path(r#"{"kind": "jordan", "dim": 2}"#), "$.kind");
        assert_eq!(err_path(r#"{"kind": "lie", "dim": 2, "extra": 1}"#), "$.extra");
        assert_eq!(
            err_path(r#"{"kind": "lie", "dim": 2, "constants": [{"in": [2, 1], "out": {}}]}"#),
            "$.constants[0].in"
        );
        assert_eq!(
            err_path(r#"{"kind": "lie", "dim": 2, "constants": [{"in": [1, 3], "out": {}}]}"#),
            "$.constants[0].in[1]"
        );
        assert_eq!(
            err_path(r#"{"kind": "associative", "dim": 2, "constants": [{"in": [1, 1], "out": {"1": 1}}]}"#),
            "$.constants[0].out[\"1\"]"
        );
        assert_eq!(
            err_path(r#"{"kind": "associative", "dim": 1, "constants": [{"in": [1, 1], "out": {"1": "1/0"}}]}"#),
            "$.constants[0].out[\"1\"]"
        );
        assert_eq!(
            err_path(r#"{"kind": "lie", "dim": 1, "representation": {"dimV": 1, "rho": [[["1"]], [["1"]]]}}"#),
            "$.representation.rho"
        );
        assert_eq!(
            err_path(r#"{"kind": "lie", "dim": 3, "cochain": {"degree": 2, "entries": [{"in": [2, 2], "out": {}}]}}"#),
            "$.cochain.entries[0].in"
        );
    }

    #[test]
    fn fractions_are_normalized_on_output() {
        let d =
            parse_document(r#"{"kind": "associative", "dim": 1, "constants": [{"in": [1, 1], "out": {"1": "4/-6"}}]}"#)
                .unwrap();
        let v = algebra_to_value(&d.algebra);
        assert_eq!(v["constants"][0]["out"]["1"], "-2/3");
    }
}
