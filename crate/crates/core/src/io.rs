//! JSON definition files.
//!
//! Matrices are sparse triple lists `[row, col, "scalar"]` over the
//! row-major tensor basis, sorted by row and then column on output. Any
//! place that names another structure accepts either an inline object or a
//! string: `builtin:NAME` for a shipped algebra, otherwise a path resolved
//! against the directory of the referencing file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::crossprod::{AdmissibleObject, BialgebraProjection, InnerQT, QTBialgebra};
use crate::diffcalc::{universal_first_order, FirstOrderCalculus};
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, LinMap};
use crate::gradedcalc::BraidedObject;
use crate::hopf::{builtin, FiniteHopfAlgebra};
use crate::hopfbimod::HopfBimodule;
use crate::yd::YDModule;

pub type Triples = Vec<(usize, usize, String)>;

/// Serialize the nonzero entries of `m`, sorted row-major.
pub fn to_triples(m: &LinMap, field: &Field) -> Triples {
    m.triples().map(|(r, c, v)| (r, c, v.to_repr(field))).collect()
}

/// Parse triples into a `cod x dom` matrix; repeated positions are summed.
pub fn from_triples(t: &Triples, cod: usize, dom: usize, field: &Field, what: &str) -> Result<LinMap> {
    let entries = t
        .iter()
        .map(|(r, c, s)| {
            let v = field.parse_scalar(s).map_err(|e| context(what, e))?;
            Ok((*r, *c, v))
        })
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_triples(cod, dom, entries).map_err(|e| context(what, e))
}

fn context(what: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) | Error::ShapeMismatch(m) | Error::BadParams(m) => Error::Parse(format!("{what}: {m}")),
        e => Error::Parse(format!("{what}: {e}")),
    }
}

/// An inline structure or a reference to one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Name(String),
    Inline(Box<T>),
}

impl<T> Ref<T> {
    pub fn inline(t: T) -> Self {
        Ref::Inline(Box::new(t))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub dim: usize,
    pub m: Triples,
    pub eta: Triples,
    pub delta: Triples,
    pub eps: Triples,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Triples>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl AlgebraFile {
    pub fn from_algebra(h: &FiniteHopfAlgebra) -> Self {
        let f = h.field();
        AlgebraFile {
            field: Some(f.spec()),
            dim: h.dim(),
            m: to_triples(h.m(), f),
            eta: to_triples(h.eta(), f),
            delta: to_triples(h.delta(), f),
            eps: to_triples(h.eps(), f),
            s: h.s().ok().map(|s| to_triples(s, f)),
            name: Some(h.name().to_string()),
        }
    }

    /// Assemble without requiring the axioms to hold; failures end up in the
    /// algebra's report. An invertible antipode is inverted on the way.
    pub fn build(&self, default_field: &Field) -> Result<FiniteHopfAlgebra> {
        let field = match &self.field {
            Some(spec) => spec.build().map_err(|e| context("field", e))?,
            None => default_field.clone(),
        };
        let n = self.dim;
        let m = from_triples(&self.m, n, n * n, &field, "m")?;
        let eta = from_triples(&self.eta, n, 1, &field, "eta")?;
        let delta = from_triples(&self.delta, n * n, n, &field, "delta")?;
        let eps = from_triples(&self.eps, 1, n, &field, "eps")?;
        let s = self.s.as_ref().map(|s| from_triples(s, n, n, &field, "s")).transpose()?;
        let name = self.name.clone().unwrap_or_else(|| "algebra".into());
        let mut h = FiniteHopfAlgebra::new(name, field, n, m, eta, delta, eps, s)?;
        if h.has_antipode() {
            // a non-invertible antipode is reported by the caller's checks
            let _ = h.invert_antipode();
        }
        Ok(h)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdFile {
    pub over: Ref<AlgebraFile>,
    pub dim: usize,
    pub mur: Triples,
    pub nur: Triples,
}

impl YdFile {
    pub fn from_module(h: &FiniteHopfAlgebra, x: &YDModule) -> Self {
        let f = h.field();
        YdFile {
            over: Ref::inline(AlgebraFile::from_algebra(h)),
            dim: x.dim,
            mur: to_triples(&x.mur, f),
            nur: to_triples(&x.nur, f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub over: Ref<AlgebraFile>,
    pub dim: usize,
    pub mur: Triples,
    pub mul: Triples,
    pub nur: Triples,
    pub nul: Triples,
}

impl BimoduleFile {
    pub fn from_bimodule(h: &FiniteHopfAlgebra, x: &HopfBimodule) -> Self {
        let f = h.field();
        BimoduleFile {
            over: Ref::inline(AlgebraFile::from_algebra(h)),
            dim: x.dim,
            mur: to_triples(&x.mur, f),
            mul: to_triples(&x.mul, f),
            nur: to_triples(&x.nur, f),
            nul: to_triples(&x.nul, f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum BraidedFile {
    Explicit { dim: usize, braiding: Triples },
    FromYd { from_yd: Ref<YdFile> },
}

impl BraidedFile {
    pub fn from_object(x: &BraidedObject, field: &Field) -> Self {
        BraidedFile::Explicit { dim: x.dim, braiding: to_triples(&x.psi, field) }
    }
}

/// An admissible object: algebra, coalgebra, right action and right
/// coaction on one space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectFile {
    pub over: Ref<AlgebraFile>,
    pub dim: usize,
    pub m: Triples,
    pub eta: Triples,
    pub delta: Triples,
    pub eps: Triples,
    pub mur: Triples,
    pub nur: Triples,
}

impl ObjectFile {
    pub fn from_object(h: &FiniteHopfAlgebra, x: &AdmissibleObject) -> Self {
        let f = h.field();
        ObjectFile {
            over: Ref::inline(AlgebraFile::from_algebra(h)),
            dim: x.dim,
            m: to_triples(&x.m, f),
            eta: to_triples(&x.eta, f),
            delta: to_triples(&x.delta, f),
            eps: to_triples(&x.eps, f),
            mur: to_triples(&x.mur, f),
            nur: to_triples(&x.nur, f),
        }
    }
}

/// A quasitriangular bialgebra `(A, Δ̄, R)`; `delta_bar` defaults to `Δ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QtFile {
    pub algebra: Ref<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_bar: Option<Triples>,
    pub r: Triples,
}

impl QtFile {
    pub fn from_qt(q: &QTBialgebra) -> Self {
        let f = q.a.field();
        QtFile {
            algebra: Ref::inline(AlgebraFile::from_algebra(&q.a)),
            delta_bar: Some(to_triples(&q.delta_bar, f)),
            r: to_triples(&q.r, f),
        }
    }
}

/// Inner quasitriangular data on an admissible object; `delta_bar`
/// defaults to the object's comultiplication.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InnerQtFile {
    pub object: Ref<ObjectFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_bar: Option<Triples>,
    pub r: Triples,
}

/// A projection `base -eta_bar-> total -eps_bar-> base`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectionFile {
    pub base: Ref<AlgebraFile>,
    pub total: Ref<AlgebraFile>,
    pub eta_bar: Triples,
    pub eps_bar: Triples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum CalculusFile {
    Explicit { algebra: Ref<AlgebraFile>, bimodule: Ref<BimoduleFile>, d: Triples },
    Universal { universal_over: Ref<AlgebraFile> },
}

impl CalculusFile {
    pub fn from_calculus(c: &FirstOrderCalculus) -> Self {
        let f = c.h.field();
        CalculusFile::Explicit {
            algebra: Ref::inline(AlgebraFile::from_algebra(&c.h)),
            bimodule: Ref::inline(BimoduleFile::from_bimodule(&c.h, &c.x)),
            d: to_triples(&c.d, f),
        }
    }
}

/// Resolves references relative to a base directory, with a default field
/// for files that do not name one.
#[derive(Clone, Debug)]
pub struct Loader {
    base: PathBuf,
    field: Field,
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>, field: Field) -> Self {
        Loader { base: base.into(), field }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Read and deserialize a file; the returned loader resolves references
    /// made from inside it.
    pub fn read<T: DeserializeOwned>(&self, path: &str) -> Result<(T, Loader)> {
        let full = self.base.join(path);
        let text = fs::read_to_string(&full)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", full.display())))?;
        let value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", full.display())))?;
        let base = full.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((value, Loader { base, field: self.field.clone() }))
    }

    fn resolve<T: DeserializeOwned + Clone>(&self, r: &Ref<T>) -> Result<(T, Loader)> {
        match r {
            Ref::Name(path) => self.read(path),
            Ref::Inline(t) => Ok(((**t).clone(), self.clone())),
        }
    }

    pub fn algebra(&self, r: &Ref<AlgebraFile>) -> Result<FiniteHopfAlgebra> {
        if let Ref::Name(name) = r {
            if let Some(b) = name.strip_prefix("builtin:") {
                return builtin(b).map_err(|e| context("builtin", e));
            }
        }
        let (file, sub) = self.resolve(r)?;
        file.build(&sub.field)
    }

    pub fn yd(&self, r: &Ref<YdFile>) -> Result<(FiniteHopfAlgebra, YDModule)> {
        let (file, sub) = self.resolve(r)?;
        let h = sub.algebra(&file.over)?;
        let f = h.field().clone();
        let n = file.dim;
        let mur = from_triples(&file.mur, n, n * h.dim(), &f, "mur")?;
        let nur = from_triples(&file.nur, n * h.dim(), n, &f, "nur")?;
        let x = YDModule::new(&h, n, mur, nur).map_err(|e| context("module", e))?;
        Ok((h, x))
    }

    pub fn bimodule(&self, r: &Ref<BimoduleFile>) -> Result<(FiniteHopfAlgebra, HopfBimodule)> {
        let (file, sub) = self.resolve(r)?;
        let h = sub.algebra(&file.over)?;
        let f = h.field().clone();
        let (n, d) = (file.dim, h.dim());
        let mur = from_triples(&file.mur, n, n * d, &f, "mur")?;
        let mul = from_triples(&file.mul, n, d * n, &f, "mul")?;
        let nur = from_triples(&file.nur, n * d, n, &f, "nur")?;
        let nul = from_triples(&file.nul, d * n, n, &f, "nul")?;
        let x = HopfBimodule::new(&h, n, mul, mur, nul, nur).map_err(|e| context("bimodule", e))?;
        Ok((h, x))
    }

    /// The braided object and the field its entries live in.
    pub fn braided(&self, r: &Ref<BraidedFile>) -> Result<(BraidedObject, Field)> {
        let (file, sub) = self.resolve(r)?;
        match file {
            BraidedFile::Explicit { dim, braiding } => {
                let psi = from_triples(&braiding, dim * dim, dim * dim, &sub.field, "braiding")?;
                let x = BraidedObject::new(dim, psi).map_err(|e| match e {
                    Error::ShapeMismatch(m) => Error::Parse(m),
                    e => e,
                })?;
                Ok((x, sub.field.clone()))
            }
            BraidedFile::FromYd { from_yd } => {
                let (h, y) = sub.yd(&from_yd)?;
                let x = BraidedObject::from_yd(&h, &y)?;
                Ok((x, h.field().clone()))
            }
        }
    }

    pub fn object(&self, r: &Ref<ObjectFile>) -> Result<(FiniteHopfAlgebra, AdmissibleObject)> {
        let (file, sub) = self.resolve(r)?;
        let h = sub.algebra(&file.over)?;
        let f = h.field().clone();
        let (n, d) = (file.dim, h.dim());
        let x = AdmissibleObject {
            dim: n,
            m: from_triples(&file.m, n, n * n, &f, "m")?,
            eta: from_triples(&file.eta, n, 1, &f, "eta")?,
            delta: from_triples(&file.delta, n * n, n, &f, "delta")?,
            eps: from_triples(&file.eps, 1, n, &f, "eps")?,
            mur: from_triples(&file.mur, n, n * d, &f, "mur")?,
            nur: from_triples(&file.nur, n * d, n, &f, "nur")?,
        };
        Ok((h, x))
    }

    pub fn qt(&self, r: &Ref<QtFile>) -> Result<QTBialgebra> {
        let (file, sub) = self.resolve(r)?;
        let a = sub.algebra(&file.algebra)?;
        let f = a.field().clone();
        let d = a.dim();
        let delta_bar = match &file.delta_bar {
            Some(t) => from_triples(t, d * d, d, &f, "delta_bar")?,
            None => a.delta().clone(),
        };
        let r = from_triples(&file.r, d * d, 1, &f, "r")?;
        QTBialgebra::new(a, delta_bar, r)
    }

    pub fn inner_qt(&self, r: &Ref<InnerQtFile>) -> Result<(FiniteHopfAlgebra, InnerQT)> {
        let (file, sub) = self.resolve(r)?;
        let (h, obj) = sub.object(&file.object)?;
        let f = h.field().clone();
        let n = obj.dim;
        let delta_bar = match &file.delta_bar {
            Some(t) => from_triples(t, n * n, n, &f, "delta_bar")?,
            None => obj.delta.clone(),
        };
        let r = from_triples(&file.r, n * n, 1, &f, "r")?;
        Ok((h, InnerQT { obj, delta_bar, r }))
    }

    /// The four maps of a projection, without checking the projection laws.
    pub fn projection(&self, r: &Ref<ProjectionFile>) -> Result<BialgebraProjection> {
        let (file, sub) = self.resolve(r)?;
        let b1 = sub.algebra(&file.base)?;
        let b2 = sub.algebra(&file.total)?;
        if b1.field() != b2.field() {
            return Err(Error::Parse("base and total algebras live over different fields".into()));
        }
        let f = b1.field().clone();
        let eta_bar = from_triples(&file.eta_bar, b2.dim(), b1.dim(), &f, "eta_bar")?;
        let eps_bar = from_triples(&file.eps_bar, b1.dim(), b2.dim(), &f, "eps_bar")?;
        Ok(BialgebraProjection { b1, b2, eta_bar, eps_bar })
    }

    pub fn calculus(&self, r: &Ref<CalculusFile>) -> Result<FirstOrderCalculus> {
        let (file, sub) = self.resolve(r)?;
        match file {
            CalculusFile::Universal { universal_over } => {
                let h = sub.algebra(&universal_over)?;
                universal_first_order(&h)
            }
            CalculusFile::Explicit { algebra, bimodule, d } => {
                let h = sub.algebra(&algebra)?;
                let (over, x) = sub.bimodule(&bimodule)?;
                if over != h {
                    return Err(Error::Parse("bimodule is defined over a different algebra".into()));
                }
                let d = from_triples(&d, x.dim, h.dim(), h.field(), "d")?;
                Ok(FirstOrderCalculus { h, x, d })
            }
        }
    }
}

/// Indented JSON with a trailing newline; arrays of plain values such as
/// triples stay on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("definition files serialize");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}
