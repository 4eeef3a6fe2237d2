//! Command-line front end. Every command prints one JSON report with sorted
//! keys; the exit code is 0 for a positive verdict, 1 for a negative one and
//! 2 for unusable input.

pub mod document;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::brackets::{graded_bracket, mc_check, Differential};
use crate::cochains::{Cochain, CochainSpace};
use crate::cohomology::{cohomology_dims, default_max_degree};
use crate::comparisons::compare;
use crate::deformations::deformation_check;
use crate::representations::{
    check_representation, dual_representation, regular_or_adjoint, rep_as_maurer_cartan, Representation,
};
use crate::structures::{validate_structure, AlgebraKind, ValidationReport, Witness};

use document::{cochain_to_value, document_to_value, parse_document, scalar, Document};

#[derive(Debug, Parser)]
#[command(
    name = "algdeform",
    version,
    about = "Deformation cohomology and Maurer-Cartan checks for algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the defining identities (and the representation, if given)
    Validate { file: PathBuf },
    /// Table of dim C, Z, B, H; uses the regular/adjoint representation
    /// unless the document has one
    Cohomology {
        #[arg(long)]
        max_degree: Option<usize>,
        file: PathBuf,
    },
    /// Graded bracket of two elements (the cochain, or else the constants)
    Bracket { left: PathBuf, right: PathBuf },
    /// Maurer-Cartan equation for the cochain (or the constants), with
    /// differential [base, ·] when --base is given
    McCheck {
        #[arg(long)]
        base: Option<PathBuf>,
        /// check the document's representation as an element on g ⊕ V
        #[arg(long)]
        representation: bool,
        file: PathBuf,
    },
    /// Whether base + direction is again a structure, by both routes
    Deform {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        direction: PathBuf,
    },
    /// The dual of the document's (or the regular/adjoint) representation
    DualRep { file: PathBuf },
    /// Cochain maps to Hom(g, V)-coefficients for prelie and 3lie documents
    Compare {
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(verdict: bool, mut v: Value) -> Outcome {
        v.as_object_mut()
            .expect("object report")
            .insert("verdict".into(), json!(verdict));
        Outcome {
            code: if verdict { 0 } else { 1 },
            stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")),
            stderr: String::new(),
        }
    }

    fn input_error(msg: String) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn load(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn witnesses(ws: &[Witness]) -> Value {
    let mut ws: Vec<&Witness> = ws.iter().collect();
    ws.sort_by(|a, b| (&a.args, a.identity).cmp(&(&b.args, b.identity)));
    Value::Array(
        ws.into_iter()
            .map(|w| {
                json!({
                    "identity": w.identity,
                    "args": w.args.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "defect": w.defect.iter().map(scalar).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn validation(r: &ValidationReport) -> Value {
    json!({"valid": r.valid, "failures": r.failures, "witnesses": witnesses(&r.witnesses)})
}

/// The document's representation, or the regular/adjoint one, with its name.
fn module(doc: &Document) -> crate::Result<(Representation, &'static str)> {
    match &doc.representation {
        Some(r) => Ok((r.clone(), "given")),
        None => {
            let name = match doc.algebra.kind() {
                AlgebraKind::Lie | AlgebraKind::ThreeLie => "adjoint",
                _ => "regular",
            };
            Ok((regular_or_adjoint(&doc.algebra)?, name))
        }
    }
}

/// Structure and representation checks; `None` when both hold.
fn precondition(doc: &Document) -> Option<Outcome> {
    let s = validate_structure(&doc.algebra);
    if !s.valid {
        return Some(Outcome::report(false, json!({"structure": validation(&s)})));
    }
    let r = doc.representation.as_ref().map(check_representation)?;
    (!r.valid).then(|| Outcome::report(false, json!({"representation": validation(&r)})))
}

fn element(doc: &Document) -> Cochain {
    doc.cochain.clone().unwrap_or_else(|| doc.algebra.to_cochain())
}

fn graded_element(doc: &Document, path: &Path) -> Result<Cochain, String> {
    let c = element(doc);
    let sp = c.space();
    if sp.graded_degree().is_none() || sp.dim_v != sp.dim_g {
        return Err(format!(
            "{}: $.cochain: a graded element needs degree >= 1 and values in the algebra itself",
            path.display()
        ));
    }
    Ok(c)
}

fn execute(cmd: Command) -> Result<Outcome, String> {
    let lib = |e: crate::Error| e.to_string();
    Ok(match cmd {
        Command::Validate { file } => {
            let doc = load(&file)?;
            let s = validate_structure(&doc.algebra);
            let mut v = json!({"kind": doc.algebra.kind().name(), "failures": s.failures, "witnesses": witnesses(&s.witnesses)});
            let mut verdict = s.valid;
            if let Some(r) = &doc.representation {
                let rr = check_representation(r);
                verdict &= rr.valid;
                v["representation"] = validation(&rr);
            }
            Outcome::report(verdict, v)
        }
        Command::Cohomology { max_degree, file } => {
            let doc = load(&file)?;
            if let Some(o) = precondition(&doc) {
                return Ok(o);
            }
            let kind = doc.algebra.kind();
            let top = max_degree.unwrap_or_else(|| default_max_degree(kind, doc.algebra.dim()));
            let (r, name) = module(&doc).map_err(lib)?;
            let rep = cohomology_dims(&r, top).map_err(lib)?;
            let table: Vec<Value> = rep
                .degrees
                .iter()
                .map(
                    |d| json!({"degree": d.degree, "dimC": d.dim_c, "dimZ": d.dim_z, "dimB": d.dim_b, "dimH": d.dim_h}),
                )
                .collect();
            Outcome::report(
                true,
                json!({"kind": kind.name(), "representation": name, "dimV": r.dim_v(), "maxDegree": top, "table": table}),
            )
        }
        Command::Bracket { left, right } => {
            let (l, r) = (load(&left)?, load(&right)?);
            let p = graded_element(&l, &left)?;
            let q = graded_element(&r, &right)?;
            let b = graded_bracket(&p, &q).map_err(lib)?;
            let mut v = json!({"kind": b.space().kind.name(), "bracket": cochain_to_value(&b)});
            v["gradedDegree"] = json!(b.space().graded_degree());
            Outcome::report(true, v)
        }
        Command::McCheck {
            base,
            representation,
            file,
        } => {
            let doc = load(&file)?;
            if representation {
                let Some(r) = &doc.representation else {
                    return Err(format!(
                        "{}: $: --representation needs a \"representation\" field",
                        file.display()
                    ));
                };
                if let Some(o) = precondition(&doc) {
                    return Ok(o);
                }
                let mc = rep_as_maurer_cartan(r).map_err(lib)?;
                return Ok(Outcome::report(
                    mc.is_mc,
                    json!({"mc": mc.is_mc, "defect": cochain_to_value(&mc.defect)}),
                ));
            }
            let x = graded_element(&doc, &file)?;
            let base_c = match &base {
                Some(p) => {
                    let b = load(p)?;
                    if let Some(o) = precondition(&b) {
                        return Ok(o);
                    }
                    Some(b.algebra.to_cochain())
                }
                None => None,
            };
            let d = base_c.as_ref().map_or(Differential::Zero, Differential::Bracket);
            let mc = mc_check(d, &x).map_err(lib)?;
            Outcome::report(
                mc.is_mc,
                json!({"mc": mc.is_mc, "defect": cochain_to_value(&mc.defect)}),
            )
        }
        Command::Deform { base, direction } => {
            let b = load(&base)?;
            if let Some(o) = precondition(&b) {
                return Ok(o);
            }
            let dir = graded_element(&load(&direction)?, &direction)?;
            let want = CochainSpace::graded(b.algebra.kind(), 1, b.algebra.dim());
            if *dir.space() != want {
                return Err(format!(
                    "{}: $: direction must be a degree-1 {} element on a {}-dimensional algebra",
                    direction.display(),
                    want.kind,
                    want.dim_g
                ));
            }
            let r = deformation_check(&b.algebra, &dir).map_err(lib)?;
            Outcome::report(
                r.mc && r.direct,
                json!({"mc": r.mc, "direct": r.direct, "defect": cochain_to_value(&r.mc_defect), "witnesses": witnesses(&r.witnesses)}),
            )
        }
        Command::DualRep { file } => {
            let doc = load(&file)?;
            if let Some(o) = precondition(&doc) {
                return Ok(o);
            }
            let (r, _) = module(&doc).map_err(lib)?;
            let dual = dual_representation(&r).map_err(lib)?;
            let check = check_representation(&dual);
            let out = Document {
                algebra: doc.algebra.clone(),
                representation: Some(dual),
                cochain: None,
            };
            Outcome::report(
                check.valid,
                json!({"document": document_to_value(&out), "check": validation(&check)}),
            )
        }
        Command::Compare { max_degree, file } => {
            let doc = load(&file)?;
            let kind = doc.algebra.kind();
            let target = match kind {
                AlgebraKind::PreLie => "lie",
                AlgebraKind::ThreeLie => "leibniz",
                _ => {
                    return Err(format!(
                        "{}: $.kind: compare needs a prelie or 3lie document",
                        file.display()
                    ))
                }
            };
            if max_degree < 1 {
                return Err("--max-degree must be at least 1".into());
            }
            if let Some(o) = precondition(&doc) {
                return Ok(o);
            }
            let (r, _) = module(&doc).map_err(lib)?;
            let rep = compare(&r, max_degree).map_err(lib)?;
            let rows: Vec<Value> = rep
                .degrees
                .iter()
                .map(|d| {
                    json!({"degree": d.degree, "squareCommutes": d.square_commutes, "bijective": d.bijective,
                           "dimHSource": d.iso_dims.0, "dimHTarget": d.iso_dims.1})
                })
                .collect();
            Outcome::report(
                rep.holds(),
                json!({"kind": kind.name(), "target": target, "degrees": rows}),
            )
        }
    })
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(cli.command).unwrap_or_else(Outcome::input_error)
}
