//! JSON documents and the `hopflab` command-line driver.
//!
//! A document is a JSON object with a `kind` and a kind-specific payload.
//! Scalars are strings in the exactmath grammar (`"1/2"`, `"-z^2 + 3"`).
//! Structure tensors are sparse lists of index tuples ending in a scalar:
//!
//! | key        | entry              | meaning                          |
//! |------------|--------------------|----------------------------------|
//! | `mult`     | `[a, b, c, s]`     | e_a·e_b has coefficient s on e_c |
//! | `unit`     | `[a, s]`           | 1 has coefficient s on e_a       |
//! | `comult`   | `[c, a, b, s]`     | Δ(e_c) ∋ s·e_a⊗e_b               |
//! | `counit`   | `[a, s]`           | ε(e_a) = s                       |
//! | `antipode` | `[a, b, s]`        | S(e_a) ∋ s·e_b                   |
//! | `images`   | `[k, h, s]`        | φ(e_k) ∋ s·e_h                   |
//! | `action`   | `[h, i, j, s]`     | ρ(e_h) has entry s at (i, j)     |
//! | `coaction` | `[h, i, j, s]`     | δ(v_j) ∋ s·e_h⊗v_i               |
//!
//! Nested objects (`hopf`, `source`, `target`, `yd`) are inline documents or
//! paths relative to the referring file. Saving always inlines, sorts keys
//! and lists entries in index order, so save∘load∘save is byte-identical.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::adjoint::{
    module_families, verify_adjunction_axioms, verify_catalog, verify_extras,
    verify_naturality, CoInduction, Families, Cotensor, Induction, MonoidalAdjunction, OpInduction,
    DEFAULT_BUDGET, DEFAULT_SEED,
};
use crate::builders::{
    a_hk, biproduct, cyclic_group_algebra, cyclic_yd_simple, function_algebra, ground_inclusion,
    group_algebra, nichols_taft, taft, taft_character, taft_pair, GroupTable,
};
use crate::center::{
    crosscheck_coind, crosscheck_cotensor, crosscheck_ind, halfbraiding_from_yd,
    induced_yd_coind, induced_yd_cotensor, induced_yd_ind, verify_center_catalog,
    yd_from_halfbraiding, CenterCandidate,
};
use crate::exactmath::{inverse, parse_scalar, FieldSpec, Matrix, Scalar};
use crate::hopf::{verify_hopf, verify_morphism, BialgebraData, HopfAlgebra, HopfMorphism};
use crate::monoid::{
    crude_monadicity_check, free_in_center, local_check, monad_from_monoid, r_unit_monoid,
    verify_central_monoid, verify_comparison, verify_monad_morphism, verify_monoidal_monad,
    CentralMonoid,
};
use crate::rep::{
    verify_comodule, verify_module, verify_yd, ComoduleRep, ModuleRep, YDModule,
};
use crate::report::Report;

/// Environment variable naming the field of documents without a `field` key.
pub const FIELD_ENV: &str = "HOPFLAB_FIELD";

#[derive(Debug)]
pub enum CliError {
    /// Malformed input, with a JSON-pointer-style location.
    Schema { path: String, msg: String },
    Io(String),
    Math(crate::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema { path, msg } => write!(f, "{path}: {msg}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Math(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn schema(path: &str, msg: impl Into<String>) -> CliError {
    CliError::Schema {
        path: if path.is_empty() { "/".into() } else { path.into() },
        msg: msg.into(),
    }
}

#[derive(Clone, Debug)]
pub enum Document {
    Hopf(Arc<HopfAlgebra>),
    Morphism(HopfMorphism),
    Module(ModuleRep),
    Comodule(ComoduleRep),
    Yd(YDModule),
    /// A monoid in YD^H_H.
    Monoid(CentralMonoid<ModuleRep>),
    Report(Value),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf(_) => "hopf",
            Document::Morphism(_) => "morphism",
            Document::Module(_) => "module",
            Document::Comodule(_) => "comodule",
            Document::Yd(_) => "yd",
            Document::Monoid(_) => "monoid",
            Document::Report(_) => "report",
        }
    }
}

// ---------------------------------------------------------------- loading

pub fn parse_field(text: &str) -> Option<FieldSpec> {
    let t = text.trim();
    if t == "Q" {
        return Some(FieldSpec::rational());
    }
    let n = t.strip_prefix("Q(z")?.strip_suffix(')')?.parse::<u32>().ok()?;
    (n >= 1).then(|| FieldSpec::cyclotomic(n))
}

fn default_field() -> CliResult<FieldSpec> {
    match std::env::var(FIELD_ENV) {
        Ok(s) => parse_field(&s)
            .ok_or_else(|| CliError::Usage(format!("{FIELD_ENV}={s:?} is not a field"))),
        Err(_) => Ok(FieldSpec::rational()),
    }
}

struct Loader {
    base: PathBuf,
}

fn obj<'a>(v: &'a Value, path: &str) -> CliResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn field_of<'a>(m: &'a Map<String, Value>, path: &str, key: &str) -> CliResult<&'a Value> {
    m.get(key)
        .ok_or_else(|| schema(path, format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, path: &str) -> CliResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> CliResult<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn scalar(v: &Value, path: &str, field: FieldSpec) -> CliResult<Scalar> {
    let s = as_str(v, path)?;
    parse_scalar(s, field).map_err(|e| schema(path, format!("{e} (field {field})")))
}

/// Sparse entries with `arity` indices, each checked against `bounds`.
fn entries(
    m: &Map<String, Value>,
    path: &str,
    key: &str,
    bounds: &[usize],
    field: FieldSpec,
) -> CliResult<Vec<(Vec<usize>, Scalar)>> {
    let p = format!("{path}/{key}");
    let list = field_of(m, path, key)?
        .as_array()
        .ok_or_else(|| schema(&p, "expected an array"))?;
    let mut out = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let ep = format!("{p}/{n}");
        let items = e.as_array().ok_or_else(|| schema(&ep, "expected an array"))?;
        if items.len() != bounds.len() + 1 {
            return Err(schema(&ep, format!("expected {} entries", bounds.len() + 1)));
        }
        let mut idx = Vec::with_capacity(bounds.len());
        for (t, b) in bounds.iter().enumerate() {
            let ip = format!("{ep}/{t}");
            let i = as_usize(&items[t], &ip)?;
            if i >= *b {
                return Err(schema(&ip, format!("index {i} out of range 0..{b}")));
            }
            idx.push(i);
        }
        let s = scalar(&items[bounds.len()], &format!("{ep}/{}", bounds.len()), field)?;
        out.push((idx, s));
    }
    Ok(out)
}

fn dense(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    es: Vec<(Vec<usize>, Scalar)>,
    at: impl Fn(&[usize]) -> (usize, usize),
) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for (idx, s) in es {
        let (r, c) = at(&idx);
        m.add_at(r, c, &s);
    }
    m
}

fn blocks(field: FieldSpec, n: usize, d: usize, es: Vec<(Vec<usize>, Scalar)>) -> Vec<Matrix> {
    let mut out = vec![Matrix::zeros(field, d, d); n];
    for (idx, s) in es {
        out[idx[0]].add_at(idx[1], idx[2], &s);
    }
    out
}

impl Loader {
    fn resolve(&self, v: &Value, path: &str) -> CliResult<(Value, Loader)> {
        match v {
            Value::String(rel) => {
                let p = self.base.join(rel);
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| schema(path, format!("{}: {e}", p.display())))?;
                let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
                Ok((value, Loader { base }))
            }
            _ => Ok((
                v.clone(),
                Loader {
                    base: self.base.clone(),
                },
            )),
        }
    }

    fn document(&self, v: &Value, path: &str) -> CliResult<Document> {
        let m = obj(v, path)?;
        let kind = as_str(field_of(m, path, "kind")?, &format!("{path}/kind"))?;
        Ok(match kind {
            "hopf" => Document::Hopf(self.hopf_payload(m, path)?),
            "morphism" => Document::Morphism(self.morphism_payload(m, path)?),
            "module" => Document::Module(self.module_payload(m, path)?),
            "comodule" => Document::Comodule(self.comodule_payload(m, path)?),
            "yd" => Document::Yd(self.yd_payload(m, path)?),
            "monoid" => Document::Monoid(self.monoid_payload(m, path)?),
            "report" => Document::Report(v.clone()),
            other => return Err(schema(&format!("{path}/kind"), format!("unknown kind {other:?}"))),
        })
    }

    fn nested(&self, m: &Map<String, Value>, path: &str, key: &str, want: &str) -> CliResult<Document> {
        let p = format!("{path}/{key}");
        let (v, sub) = self.resolve(field_of(m, path, key)?, &p)?;
        let d = sub.document(&v, &p)?;
        if d.kind() != want {
            return Err(schema(&p, format!("expected a {want} document, got {}", d.kind())));
        }
        Ok(d)
    }

    fn nested_hopf(&self, m: &Map<String, Value>, path: &str, key: &str) -> CliResult<Arc<HopfAlgebra>> {
        match self.nested(m, path, key, "hopf")? {
            Document::Hopf(h) => Ok(h),
            _ => unreachable!(),
        }
    }

    fn field_key(&self, m: &Map<String, Value>, path: &str) -> CliResult<FieldSpec> {
        match m.get("field") {
            Some(v) => {
                let p = format!("{path}/field");
                parse_field(as_str(v, &p)?).ok_or_else(|| schema(&p, "expected \"Q\" or \"Q(zN)\""))
            }
            None => default_field(),
        }
    }

    fn hopf_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<Arc<HopfAlgebra>> {
        let field = self.field_key(m, path)?;
        let name = match m.get("name") {
            Some(v) => as_str(v, &format!("{path}/name"))?.to_string(),
            None => "H".into(),
        };
        let lp = format!("{path}/labels");
        let labels: Vec<String> = field_of(m, path, "labels")?
            .as_array()
            .ok_or_else(|| schema(&lp, "expected an array"))?
            .iter()
            .enumerate()
            .map(|(i, l)| as_str(l, &format!("{lp}/{i}")).map(str::to_string))
            .collect::<CliResult<_>>()?;
        let n = labels.len();
        let mult = dense(field, n, n * n, entries(m, path, "mult", &[n, n, n], field)?, |i| {
            (i[2], i[0] * n + i[1])
        });
        let unit = dense(field, n, 1, entries(m, path, "unit", &[n], field)?, |i| (i[0], 0));
        let comult = dense(field, n * n, n, entries(m, path, "comult", &[n, n, n], field)?, |i| {
            (i[1] * n + i[2], i[0])
        });
        let counit = dense(field, 1, n, entries(m, path, "counit", &[n], field)?, |i| (0, i[0]));
        let data = BialgebraData::new(field, labels, mult, unit, comult, counit)?;
        let h = if m.contains_key("antipode") {
            let s = dense(field, n, n, entries(m, path, "antipode", &[n, n], field)?, |i| {
                (i[1], i[0])
            });
            let sinv = inverse(&s)
                .map_err(|_| schema(&format!("{path}/antipode"), "antipode is not invertible"))?;
            HopfAlgebra::from_parts_unchecked(name, data, s, sinv)
        } else {
            HopfAlgebra::new(name, data)?
        };
        Ok(Arc::new(h))
    }

    fn morphism_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<HopfMorphism> {
        let source = self.nested_hopf(m, path, "source")?;
        let target = self.nested_hopf(m, path, "target")?;
        if source.field() != target.field() {
            return Err(CliError::Math(crate::Error::FieldMismatch(format!(
                "{path}: source over {}, target over {}",
                source.field(),
                target.field()
            ))));
        }
        let (nk, nh) = (source.dim(), target.dim());
        let field = source.field();
        let mat = dense(field, nh, nk, entries(m, path, "images", &[nk, nh], field)?, |i| {
            (i[1], i[0])
        });
        Ok(HopfMorphism::new(source, target, mat)?)
    }

    fn dim_key(&self, m: &Map<String, Value>, path: &str) -> CliResult<usize> {
        as_usize(field_of(m, path, "dim")?, &format!("{path}/dim"))
    }

    fn module_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<ModuleRep> {
        let h = self.nested_hopf(m, path, "hopf")?;
        let d = self.dim_key(m, path)?;
        let field = h.field();
        let es = entries(m, path, "action", &[h.dim(), d, d], field)?;
        Ok(ModuleRep::from_ops(h.clone(), d, blocks(field, h.dim(), d, es)))
    }

    fn comodule_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<ComoduleRep> {
        let h = self.nested_hopf(m, path, "hopf")?;
        let d = self.dim_key(m, path)?;
        let field = h.field();
        let es = entries(m, path, "coaction", &[h.dim(), d, d], field)?;
        Ok(ComoduleRep::from_blocks(h.clone(), d, blocks(field, h.dim(), d, es)))
    }

    fn yd_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<YDModule> {
        let h = self.nested_hopf(m, path, "hopf")?;
        let d = self.dim_key(m, path)?;
        let field = h.field();
        let a = entries(m, path, "action", &[h.dim(), d, d], field)?;
        let c = entries(m, path, "coaction", &[h.dim(), d, d], field)?;
        Ok(YDModule {
            module: ModuleRep::from_ops(h.clone(), d, blocks(field, h.dim(), d, a)),
            comodule: ComoduleRep::from_blocks(h.clone(), d, blocks(field, h.dim(), d, c)),
        })
    }

    fn monoid_payload(&self, m: &Map<String, Value>, path: &str) -> CliResult<CentralMonoid<ModuleRep>> {
        let yd = match self.nested(m, path, "yd", "yd")? {
            Document::Yd(y) => y,
            _ => unreachable!(),
        };
        let d = yd.dim();
        let field = yd.field();
        let mul = dense(field, d, d * d, entries(m, path, "mul", &[d, d, d], field)?, |i| {
            (i[2], i[0] * d + i[1])
        });
        let unit = dense(field, d, 1, entries(m, path, "unit", &[d], field)?, |i| (i[0], 0));
        Ok(CentralMonoid::from_yd(yd, mul, unit))
    }
}

/// Parses a document from JSON text; nested paths resolve against `base`.
pub fn parse_document(text: &str, base: &Path) -> CliResult<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    Loader {
        base: base.to_path_buf(),
    }
    .document(&v, "")
}

pub fn load_document(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_document(&text, path.parent().unwrap_or(Path::new(".")))
}

// ----------------------------------------------------------------- saving

fn sparse(m: &Matrix, key: impl Fn(usize, usize) -> Vec<usize>) -> Value {
    let mut es: Vec<(Vec<usize>, String)> = m
        .nonzeros()
        .map(|(r, c, s)| (key(r, c), s.to_string()))
        .collect();
    es.sort();
    Value::Array(
        es.into_iter()
            .map(|(idx, s)| {
                let mut v: Vec<Value> = idx.into_iter().map(Value::from).collect();
                v.push(Value::from(s));
                Value::Array(v)
            })
            .collect(),
    )
}

fn ops_sparse(ops: &[Matrix]) -> Value {
    let mut es: Vec<Value> = Vec::new();
    for (h, op) in ops.iter().enumerate() {
        let mut local: Vec<(usize, usize, String)> =
            op.nonzeros().map(|(i, j, s)| (i, j, s.to_string())).collect();
        local.sort();
        for (i, j, s) in local {
            es.push(json!([h, i, j, s]));
        }
    }
    Value::Array(es)
}

pub fn hopf_value(h: &HopfAlgebra) -> Value {
    let n = h.dim();
    json!({
        "kind": "hopf",
        "name": h.name,
        "field": h.field().to_string(),
        "labels": h.labels(),
        "mult": sparse(h.mult(), |r, c| vec![c / n, c % n, r]),
        "unit": sparse(h.unit(), |r, _| vec![r]),
        "comult": sparse(h.comult(), |r, c| vec![c, r / n, r % n]),
        "counit": sparse(h.counit(), |_, c| vec![c]),
        "antipode": sparse(h.antipode(), |r, c| vec![c, r]),
    })
}

fn yd_value(y: &YDModule) -> Value {
    json!({
        "kind": "yd",
        "hopf": hopf_value(y.hopf()),
        "dim": y.dim(),
        "action": ops_sparse(y.module.ops()),
        "coaction": ops_sparse(y.comodule.blocks()),
    })
}

pub fn document_value(doc: &Document) -> Value {
    match doc {
        Document::Hopf(h) => hopf_value(h),
        Document::Morphism(phi) => json!({
            "kind": "morphism",
            "source": hopf_value(&phi.source),
            "target": hopf_value(&phi.target),
            "images": sparse(&phi.matrix, |r, c| vec![c, r]),
        }),
        Document::Module(v) => json!({
            "kind": "module",
            "hopf": hopf_value(&v.hopf),
            "dim": v.dim(),
            "action": ops_sparse(v.ops()),
        }),
        Document::Comodule(v) => json!({
            "kind": "comodule",
            "hopf": hopf_value(&v.hopf),
            "dim": v.dim(),
            "coaction": ops_sparse(v.blocks()),
        }),
        Document::Yd(y) => yd_value(y),
        Document::Monoid(m) => {
            let d = m.carrier.dim();
            let yd = m.yd.clone().unwrap_or_else(|| {
                yd_from_halfbraiding(&m.swap).expect("monoid swap is a YD braiding")
            });
            json!({
                "kind": "monoid",
                "yd": yd_value(&yd),
                "mul": sparse(&m.mul, |r, c| vec![c / d, c % d, r]),
                "unit": sparse(&m.unit, |r, _| vec![r]),
            })
        }
        Document::Report(v) => v.clone(),
    }
}

/// Pretty JSON with sorted keys, arrays of scalars on one line, and a
/// trailing newline.
pub fn json_text(v: &Value) -> String {
    fn flat(v: &Value) -> bool {
        !matches!(v, Value::Array(_) | Value::Object(_))
    }
    fn write(v: &Value, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth + 1);
        match v {
            Value::Array(items) if items.is_empty() => out.push_str("[]"),
            Value::Array(items) if items.iter().all(flat) => {
                let parts: Vec<String> = items
                    .iter()
                    .map(|x| serde_json::to_string(x).expect("serializable"))
                    .collect();
                out.push('[');
                out.push_str(&parts.join(", "));
                out.push(']');
            }
            Value::Array(items) => {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&pad);
                    write(item, depth + 1, out);
                    out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(depth));
                out.push(']');
            }
            Value::Object(map) if map.is_empty() => out.push_str("{}"),
            Value::Object(map) => {
                out.push_str("{\n");
                for (i, (k, item)) in map.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&serde_json::to_string(k).expect("serializable"));
                    out.push_str(": ");
                    write(item, depth + 1, out);
                    out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(depth));
                out.push('}');
            }
            _ => out.push_str(&serde_json::to_string(v).expect("serializable")),
        }
    }
    let mut out = String::new();
    write(v, 0, &mut out);
    out.push('\n');
    out
}

pub fn document_text(doc: &Document) -> String {
    json_text(&document_value(doc))
}

pub fn save_document(doc: &Document, path: &Path) -> CliResult<()> {
    std::fs::write(path, document_text(doc))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

// --------------------------------------------------------------- commands

#[derive(Parser, Debug)]
#[command(name = "hopflab", version, about = "Exact checks for Hopf algebra (co)induction, centers and central monoids")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Ind,
    Coind,
    Cotensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    Taft,
    Sweedler,
    Cyclic,
    S3,
    FunctionS3,
    TaftInclusion,
    TaftProjection,
    GroundInclusion,
    TaftCharacter,
    YdSimple,
    Biproduct,
    AHk,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a document.
    Verify { doc: PathBuf },
    /// Write a built-in example document.
    Example {
        #[arg(value_enum)]
        name: Example,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        j: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Ind along φ of a module or YD module over the source.
    Induce(Transport),
    /// CoInd along φ of a module or YD module over the source.
    Coinduce(Transport),
    /// K□_H(−) of a comodule or YD module over the target.
    Cotensor(Transport),
    /// Induced half-braidings on YD modules.
    #[command(subcommand)]
    Center(CenterCmd),
    /// The central monoid R(𝟙) and its module category.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Catalog, center and monoid checks for the adjunctions along φ.
    Suite {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of seeded random objects added to each family.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Also run the cotensor adjunction on comodules.
        #[arg(long)]
        cotensor: bool,
    },
}

#[derive(clap::Args, Debug)]
pub struct Transport {
    #[arg(long)]
    pub phi: PathBuf,
    #[arg(long)]
    pub object: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CenterCmd {
    /// Compare the generic induced half-braiding with the closed-form YD structure.
    Check {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        object: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Coind)]
        via: Via,
    },
    /// Write the induced YD module.
    Induced {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        object: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Coind)]
        via: Via,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MonoidCmd {
    /// Write R(𝟙) for Res ⊣ CoInd along φ.
    RUnit {
        #[arg(long)]
        phi: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Central monoid, monad, monad-morphism and comparison checks along φ.
    Check {
        #[arg(long)]
        phi: PathBuf,
    },
    /// Whether Free(V) is a local module over the monoid.
    Local {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long)]
        object: PathBuf,
    },
    /// Family-level full faithfulness and essential surjectivity of R̃.
    Monadicity {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// What a command produced.
pub enum Outcome {
    Report(Report),
    Document(Document, Option<PathBuf>),
}

fn load_phi(p: &Path) -> CliResult<HopfMorphism> {
    match load_document(p)? {
        Document::Morphism(m) => Ok(m),
        d => Err(schema("/kind", format!("{}: expected a morphism, got {}", p.display(), d.kind()))),
    }
}

fn same_hopf(want: &Arc<HopfAlgebra>, got: &Arc<HopfAlgebra>, what: &str) -> CliResult<()> {
    if want.field() != got.field() {
        return Err(CliError::Math(crate::Error::FieldMismatch(format!(
            "{what} is over {}, expected {}",
            got.field(),
            want.field()
        ))));
    }
    if **want != **got {
        return Err(CliError::Usage(format!(
            "{what} lives over {}, expected {}",
            got.name, want.name
        )));
    }
    Ok(())
}

fn rebase_module(v: &ModuleRep, h: &Arc<HopfAlgebra>) -> ModuleRep {
    ModuleRep::from_ops(h.clone(), v.dim(), v.ops().to_vec())
}

fn rebase_comodule(v: &ComoduleRep, h: &Arc<HopfAlgebra>) -> ComoduleRep {
    ComoduleRep::from_blocks(h.clone(), v.dim(), v.blocks().to_vec())
}

fn rebase_yd(v: &YDModule, h: &Arc<HopfAlgebra>) -> YDModule {
    YDModule {
        module: rebase_module(&v.module, h),
        comodule: rebase_comodule(&v.comodule, h),
    }
}

/// The object document, checked to live over `h` and re-pointed at it.
fn load_object(p: &Path, h: &Arc<HopfAlgebra>) -> CliResult<Document> {
    let d = load_document(p)?;
    let what = p.display().to_string();
    Ok(match d {
        Document::Module(v) => {
            same_hopf(h, &v.hopf, &what)?;
            Document::Module(rebase_module(&v, h))
        }
        Document::Comodule(v) => {
            same_hopf(h, &v.hopf, &what)?;
            Document::Comodule(rebase_comodule(&v, h))
        }
        Document::Yd(v) => {
            same_hopf(h, v.hopf(), &what)?;
            Document::Yd(rebase_yd(&v, h))
        }
        d => return Err(schema("/kind", format!("{what}: unexpected {} document", d.kind()))),
    })
}

fn verify_doc(doc: &Document) -> CliResult<Report> {
    Ok(match doc {
        Document::Hopf(h) => verify_hopf(h),
        Document::Morphism(phi) => verify_morphism(phi),
        Document::Module(v) => verify_module(v),
        Document::Comodule(v) => verify_comodule(v),
        Document::Yd(v) => verify_yd(v),
        Document::Monoid(m) => {
            let h = m.carrier.hopf.clone();
            let cat = crate::adjoint::ModCat { hopf: h.clone() };
            let test = vec![
                ("𝟙".to_string(), ModuleRep::trivial(h.clone())),
                ("M".to_string(), m.carrier.clone()),
                ("H".to_string(), ModuleRep::regular(h)),
            ];
            let mut r = Report::new("monoid");
            if let Some(y) = &m.yd {
                r.merge_prefixed("yd", verify_yd(y));
            }
            r.merge(verify_central_monoid(&cat, m, &test));
            r
        }
        Document::Report(_) => {
            return Err(CliError::Usage("reports are not verifiable documents".into()))
        }
    })
}

fn example(name: Example, n: usize, i: i64, j: i64) -> CliResult<Document> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    Ok(match name {
        Example::Taft => Document::Hopf(Arc::new(taft(n)?)),
        Example::Sweedler => Document::Hopf(Arc::new(taft(2)?)),
        Example::Cyclic => Document::Hopf(Arc::new(cyclic_group_algebra(n)?)),
        Example::S3 => Document::Hopf(Arc::new(group_algebra(
            &GroupTable::symmetric3(),
            FieldSpec::rational(),
        )?)),
        Example::FunctionS3 => Document::Hopf(Arc::new(function_algebra(
            &GroupTable::symmetric3(),
            FieldSpec::rational(),
        )?)),
        Example::TaftInclusion => Document::Morphism(taft_pair(n)?.iota),
        Example::TaftProjection => Document::Morphism(taft_pair(n)?.pi),
        Example::GroundInclusion => Document::Morphism(ground_inclusion(&Arc::new(taft(n)?))?),
        Example::TaftCharacter => {
            let h = Arc::new(taft(n)?);
            Document::Module(taft_character(&h, n, j))
        }
        Example::YdSimple => {
            let k = Arc::new(cyclic_group_algebra(n)?);
            Document::Yd(cyclic_yd_simple(&k, i, j))
        }
        Example::Biproduct => {
            let k = Arc::new(cyclic_group_algebra(n)?);
            Document::Hopf(biproduct(&nichols_taft(&k)?)?.h)
        }
        Example::AHk => {
            let k = Arc::new(cyclic_group_algebra(n)?);
            Document::Monoid(a_hk(&biproduct(&nichols_taft(&k)?)?)?.monoid)
        }
    })
}

fn small<O: Clone>(fam: &[(String, O)], dim: impl Fn(&O) -> usize, max: usize) -> Vec<(String, O)> {
    fam.iter().filter(|(_, o)| dim(o) <= max).cloned().collect()
}

fn center_check(phi: &HopfMorphism, v: &YDModule, via: Via, label: &str) -> CliResult<Report> {
    Ok(match via {
        Via::Coind | Via::Ind => {
            same_hopf(&phi.source, v.hopf(), label)?;
            let v = rebase_yd(v, &phi.source);
            let fam = module_families(phi, vec![], vec![], DEFAULT_SEED, 0);
            let c_test = small(&fam.c, ModuleRep::dim, 3);
            if via == Via::Coind {
                crosscheck_coind(&Arc::new(CoInduction::new(phi.clone())), &v, label, &c_test)
            } else {
                crosscheck_ind(&Arc::new(Induction::new(phi.clone())), &v, label, &c_test)
            }
        }
        Via::Cotensor => {
            same_hopf(&phi.target, v.hopf(), label)?;
            let v = rebase_yd(v, &phi.target);
            let k = phi.source.clone();
            let c_test = vec![
                ("𝟙".to_string(), ComoduleRep::trivial(k.clone())),
                ("K".to_string(), ComoduleRep::regular(k)),
            ];
            crosscheck_cotensor(&Arc::new(Cotensor::new(phi.clone())), &v, label, &c_test)
        }
    })
}

fn induced(phi: &HopfMorphism, doc: Document, via: Via) -> CliResult<Document> {
    Ok(match (via, doc) {
        (Via::Ind, Document::Module(v)) => {
            Document::Module(Induction::new(phi.clone()).ind_module(&v))
        }
        (Via::Ind, Document::Yd(v)) => Document::Yd(induced_yd_ind(&Induction::new(phi.clone()), &v)),
        (Via::Coind, Document::Module(v)) => {
            Document::Module(CoInduction::new(phi.clone()).coind_module(&v))
        }
        (Via::Coind, Document::Yd(v)) => {
            Document::Yd(induced_yd_coind(&CoInduction::new(phi.clone()), &v)?)
        }
        (Via::Cotensor, Document::Comodule(v)) => {
            Document::Comodule(Cotensor::new(phi.clone()).cotensor_comodule(&v))
        }
        (Via::Cotensor, Document::Yd(v)) => {
            Document::Yd(induced_yd_cotensor(&Cotensor::new(phi.clone()), &v)?)
        }
        (via, d) => {
            return Err(CliError::Usage(format!(
                "{via:?} does not apply to a {} document",
                d.kind()
            )))
        }
    })
}

fn transport(t: &Transport, via: Via) -> CliResult<Outcome> {
    let phi = load_phi(&t.phi)?;
    let over = if via == Via::Cotensor { &phi.target } else { &phi.source };
    let obj = load_object(&t.object, over)?;
    Ok(Outcome::Document(induced(&phi, obj, via)?, t.output.clone()))
}

/// Central monoid, monad and monad-morphism checks for Res ⊣ CoInd.
fn monoid_checks(co: &Arc<CoInduction>, c_test: &[(String, ModuleRep)]) -> Report {
    let m = r_unit_monoid(co);
    let cat = co.c().clone();
    let mut r = Report::new(format!("R(𝟙) for {}", co.name()));
    r.merge(verify_central_monoid(&cat, &m, c_test));
    r.merge(verify_monoidal_monad(&monad_from_monoid(&cat, &m), c_test));
    r.merge(verify_monad_morphism(co.as_ref(), &m, c_test));
    r
}

/// Largest dim of R(GA) for a C-family member A.
const C_DIM_CAP: usize = 27;
/// Largest dim of R(X) for a D-family member X.
const R_DIM_CAP: usize = 9;

/// Drops family members whose images under RG or R exceed the caps, so
/// tensor products stay tractable at large index.
fn capped(phi: &HopfMorphism, fam: Families<ModuleRep, ModuleRep>) -> Families<ModuleRep, ModuleRep> {
    let co = CoInduction::new(phi.clone());
    Families {
        c: fam
            .c
            .into_iter()
            .filter(|(_, a)| a.dim() <= C_DIM_CAP && co.r_obj(&co.g_obj(a)).dim() <= C_DIM_CAP)
            .collect(),
        d: fam
            .d
            .into_iter()
            .filter(|(_, x)| co.r_obj(x).dim() <= R_DIM_CAP)
            .collect(),
    }
}

fn monadicity(co: &Arc<CoInduction>, seed: u64) -> Report {
    let m = r_unit_monoid(co);
    let fam = capped(&co.phi, module_families(&co.phi, vec![], vec![], seed, 0));
    let d_objs = fam.d.clone();
    let c_objs = small(&fam.c, ModuleRep::dim, 2);
    let mut r = verify_comparison(co.as_ref(), &m, &small(&d_objs, ModuleRep::dim, 2), &c_objs);
    r.merge(crude_monadicity_check(co.as_ref(), &m, &d_objs, &c_objs));
    r
}

fn suite(phi: &HopfMorphism, seed: u64, samples: usize, cotensor: bool) -> CliResult<Report> {
    let mut r = Report::new(format!("suite for φ: {} → {}", phi.source.name, phi.target.name));
    r.merge_prefixed("morphism", verify_morphism(phi));
    let fam = capped(phi, module_families(phi, vec![], vec![], seed, samples));
    let co = Arc::new(CoInduction::new(phi.clone()));
    r.merge_prefixed("coind", verify_catalog(co.as_ref(), &fam, DEFAULT_BUDGET));
    r.merge_prefixed("coind", verify_extras(co.as_ref(), &fam, DEFAULT_BUDGET));
    r.merge_prefixed("coind", verify_naturality(co.as_ref(), &fam.deterministic(), DEFAULT_BUDGET, 2));
    let ind = Arc::new(Induction::new(phi.clone()));
    let op = OpInduction::new(ind.clone());
    r.merge_prefixed("ind", verify_catalog(&op, &fam, DEFAULT_BUDGET));
    r.merge_prefixed("ind", verify_adjunction_axioms(&op, &fam, DEFAULT_BUDGET));
    let c_test = small(&fam.c, ModuleRep::dim, 3);
    let d_test = small(&fam.d, ModuleRep::dim, 3);
    let k = phi.source.clone();
    let yds = [
        ("𝟙".to_string(), YDModule::trivial(k.clone())),
        ("K_ad".to_string(), YDModule::regular_adjoint(k)),
    ];
    for (l, v) in &yds {
        r.merge_prefixed("center/coind", crosscheck_coind(&co, v, l, &c_test));
        r.merge_prefixed("center/ind", crosscheck_ind(&ind, v, l, &c_test));
    }
    let objects = yds
        .iter()
        .map(|(l, v)| {
            let mut c = halfbraiding_from_yd(v);
            c.name = l.clone();
            c
        })
        .collect();
    let cand = CenterCandidate {
        adj: co.clone(),
        objects,
        c_test: c_test.clone(),
        d_test,
        braiding: None,
    };
    r.merge_prefixed("center/coind", verify_center_catalog(&cand));
    r.merge_prefixed("monoid", monoid_checks(&co, &small(&fam.c, ModuleRep::dim, 2)));
    r.merge_prefixed("monoid", monadicity(&co, seed));
    if cotensor {
        let ct = Cotensor::new(phi.clone());
        let cfam = crate::adjoint::comodule_families(&ct, vec![], vec![], seed, samples);
        r.merge_prefixed("cotensor", verify_catalog(&ct, &cfam, DEFAULT_BUDGET));
    }
    Ok(r)
}

pub fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Verify { doc } => Ok(Outcome::Report(verify_doc(&load_document(&doc)?)?)),
        Command::Example { name, n, i, j, output } => {
            Ok(Outcome::Document(example(name, n, i, j)?, output))
        }
        Command::Induce(t) => transport(&t, Via::Ind),
        Command::Coinduce(t) => transport(&t, Via::Coind),
        Command::Cotensor(t) => transport(&t, Via::Cotensor),
        Command::Center(CenterCmd::Check { phi, object, via }) => {
            let phi = load_phi(&phi)?;
            let v = match load_document(&object)? {
                Document::Yd(v) => v,
                d => return Err(CliError::Usage(format!("expected a yd document, got {}", d.kind()))),
            };
            Ok(Outcome::Report(center_check(&phi, &v, via, &object.display().to_string())?))
        }
        Command::Center(CenterCmd::Induced { phi, object, via, output }) => {
            let phi = load_phi(&phi)?;
            let over = if via == Via::Cotensor { &phi.target } else { &phi.source };
            let obj = load_object(&object, over)?;
            if !matches!(obj, Document::Yd(_)) {
                return Err(CliError::Usage("center induced needs a yd document".into()));
            }
            Ok(Outcome::Document(induced(&phi, obj, via)?, output))
        }
        Command::Monoid(MonoidCmd::RUnit { phi, output }) => {
            let co = Arc::new(CoInduction::new(load_phi(&phi)?));
            let m = r_unit_monoid(&co);
            let yd = yd_from_halfbraiding(&m.swap)?;
            Ok(Outcome::Document(
                Document::Monoid(CentralMonoid::from_yd(yd, m.mul, m.unit)),
                output,
            ))
        }
        Command::Monoid(MonoidCmd::Check { phi }) => {
            let phi = load_phi(&phi)?;
            let co = Arc::new(CoInduction::new(phi.clone()));
            let fam = capped(&phi, module_families(&phi, vec![], vec![], DEFAULT_SEED, 0));
            Ok(Outcome::Report(monoid_checks(&co, &small(&fam.c, ModuleRep::dim, 2))))
        }
        Command::Monoid(MonoidCmd::Local { monoid, object }) => {
            let m = match load_document(&monoid)? {
                Document::Monoid(m) => m,
                d => return Err(CliError::Usage(format!("expected a monoid document, got {}", d.kind()))),
            };
            let h = m.carrier.hopf.clone();
            let v = match load_object(&object, &h)? {
                Document::Yd(v) => v,
                d => return Err(CliError::Usage(format!("expected a yd document, got {}", d.kind()))),
            };
            let (fx, c) = free_in_center(&m, &halfbraiding_from_yd(&v));
            let mut r = Report::new("local module check");
            let ok = local_check(&m, &fx, &c)?;
            r.record("local", ok, || format!("Free({}) is not local", object.display()));
            Ok(Outcome::Report(r))
        }
        Command::Monoid(MonoidCmd::Monadicity { phi, seed }) => {
            let co = Arc::new(CoInduction::new(load_phi(&phi)?));
            Ok(Outcome::Report(monadicity(&co, seed)))
        }
        Command::Suite { phi, seed, samples, cotensor } => {
            Ok(Outcome::Report(suite(&load_phi(&phi)?, seed, samples, cotensor)?))
        }
    }
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_text(),
        Format::Json => json_text(&r.to_json()),
    }
}

/// Runs the CLI on `args` and returns the exit code: 0 when every check
/// passes, 1 when a check fails, 2 on input or usage errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(Outcome::Report(r)) => {
            print!("{}", render_report(&r, format));
            if r.all_passed() {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Document(d, out)) => match out {
            Some(p) => match save_document(&d, &p) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            },
            None => {
                print!("{}", document_text(&d));
                0
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
