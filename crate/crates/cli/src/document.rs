//! The JSON input format. Scalars are strings ("3/2", or residues for 𝔽_p);
//! matrices are arrays of rows. Objects are referenced by name, and a list
//! of names stands for their tensor product (the empty list is 𝟙).
//!
//! ```json
//! {
//!   "field": {"spec": "rational"},
//!   "backend": {"name": "vect"},
//!   "objects": [{"name": "A", "dim": 2}],
//!   "morphisms": [{"name": "rho", "src": ["A"], "dst": ["A", "A"], "matrix": [["1","0"], ...]}],
//!   "omega": {"structures": [{"name": "k[e]", "kind": "monoid", "carrier": "A",
//!                             "ops": {"mul": [...], "unit": [...]}}]}
//! }
//! ```

use std::collections::BTreeMap;

use cat_backends::{tensor_all, Cat, Category, HopfData, Kind, Mor, Obj, Report};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::backends::backend;
use hopf_structures::{BimonoidStr, ComonoidStr, HopfStr, MonoidStr};
use omega_structures::{OmegaMagma, Signature};
use serde::Deserialize;

use crate::CliError;

type RawMat = Vec<Vec<String>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    field: Option<RawField>,
    backend: RawBackend,
    hopf_data: Option<RawHopf>,
    #[serde(default)]
    objects: Vec<RawObj>,
    #[serde(default)]
    morphisms: Vec<RawMor>,
    #[serde(default)]
    omega: RawOmega,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    spec: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBackend {
    name: String,
    hopf: Option<String>,
    /// R-matrix (mod_qt) or r-form (comod_coqt) for custom Hopf data.
    r: Option<RawMat>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    name: String,
    labels: Option<Vec<String>>,
    mul: RawMat,
    unit: RawMat,
    comul: RawMat,
    counit: RawMat,
    antipode: RawMat,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObj {
    name: String,
    dim: Option<usize>,
    degrees: Option<Vec<i64>>,
    differential: Option<RawMat>,
    action: Option<Vec<RawMat>>,
    coaction: Option<Vec<RawMat>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMor {
    name: String,
    src: Vec<String>,
    dst: Vec<String>,
    matrix: RawMat,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOmega {
    signature: Option<Vec<(String, usize, usize)>>,
    #[serde(default)]
    structures: Vec<RawStructure>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    name: String,
    kind: String,
    carrier: String,
    ops: BTreeMap<String, RawMat>,
}

#[derive(Clone, Debug)]
pub enum Structure {
    Monoid(MonoidStr),
    Comonoid(ComonoidStr),
    Bimonoid(BimonoidStr),
    Hopf(HopfStr),
    Magma(OmegaMagma),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Monoid(_) => "monoid",
            Structure::Comonoid(_) => "comonoid",
            Structure::Bimonoid(_) => "bimonoid",
            Structure::Hopf(_) => "hopf",
            Structure::Magma(_) => "magma",
        }
    }

    pub fn validate(&self) -> Report {
        match self {
            Structure::Monoid(m) => m.validate(),
            Structure::Comonoid(c) => c.validate(),
            Structure::Bimonoid(b) => b.validate(),
            Structure::Hopf(h) => h.validate(),
            Structure::Magma(m) => m.validate(),
        }
    }

    /// The Ω-magma view: monoids and magmas only.
    pub fn magma(&self) -> Option<OmegaMagma> {
        match self {
            Structure::Monoid(m) => Some(OmegaMagma::from_monoid(m)),
            Structure::Bimonoid(b) => Some(OmegaMagma::from_monoid(&b.monoid)),
            Structure::Hopf(h) => Some(OmegaMagma::from_monoid(&h.bimonoid.monoid)),
            Structure::Magma(m) => Some(m.clone()),
            Structure::Comonoid(_) => None,
        }
    }
}

/// A morphism with the object names of its source and target factors.
#[derive(Clone, Debug)]
pub struct NamedMor {
    pub name: String,
    pub mor: Mor,
    pub src: Vec<String>,
    pub dst: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Document {
    pub field: FieldSpec,
    pub cat: Cat,
    pub objects: Vec<(String, Obj)>,
    pub morphisms: Vec<NamedMor>,
    pub structures: Vec<(String, Structure)>,
}

impl Document {
    pub fn morphism(&self, name: &str) -> Result<&NamedMor, CliError> {
        self.morphisms
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| CliError::Input(format!("no morphism named `{name}`")))
    }

    /// Tensor product of the named objects.
    pub fn tensor_of(&self, names: &[String]) -> Result<Obj, CliError> {
        resolve(&self.cat, &self.objects, names)
    }

    pub fn structure(&self, name: &str) -> Result<&Structure, CliError> {
        self.structures
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| CliError::Input(format!("no structure named `{name}`")))
    }
}

fn input<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{ctx}: {e}"))
}

fn matrix(f: FieldSpec, raw: &RawMat, shape: Option<(usize, usize)>, ctx: &str) -> Result<Matrix, CliError> {
    let rows: Vec<Vec<Scalar>> = raw
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse(f, s)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(input(ctx))?;
    let m = if rows.is_empty() {
        let (r, c) = shape.unwrap_or((0, 0));
        if r != 0 {
            return Err(CliError::Input(format!("{ctx}: empty matrix, expected {r} rows")));
        }
        Matrix::zeros(f, 0, c)
    } else {
        Matrix::from_rows(f, &rows).map_err(input(ctx))?
    };
    if let Some((r, c)) = shape {
        if m.rows() != r || m.cols() != c {
            return Err(CliError::Input(format!(
                "{ctx}: matrix is {}x{}, expected {r}x{c}",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(m)
}

/// Failure of the Hopf data axioms is a failed check, not malformed input.
pub enum LoadError {
    Malformed(CliError),
    HopfAxioms(String),
}

impl From<CliError> for LoadError {
    fn from(e: CliError) -> LoadError {
        LoadError::Malformed(e)
    }
}

fn build_backend(f: FieldSpec, raw: &RawDoc) -> Result<Cat, LoadError> {
    let b = &raw.backend;
    let Some(h) = &raw.hopf_data else {
        if b.r.is_some() {
            return Err(CliError::Input("backend.r needs hopf_data".into()).into());
        }
        return backend(&b.name, b.hopf.as_deref(), f)
            .map_err(|e| CliError::Input(format!("backend: {e}")).into());
    };
    let n = h.antipode.len();
    let m = |x: &RawMat, r: usize, c: usize, what: &str| {
        matrix(f, x, Some((r, c)), &format!("hopf_data.{what}"))
    };
    let labels = h
        .labels
        .clone()
        .unwrap_or_else(|| (0..n).map(|i| format!("h{i}")).collect());
    let hd = HopfData::new(
        &h.name,
        labels,
        m(&h.mul, n, n * n, "mul")?,
        m(&h.unit, n, 1, "unit")?,
        m(&h.comul, n * n, n, "comul")?,
        m(&h.counit, 1, n, "counit")?,
        m(&h.antipode, n, n, "antipode")?,
    )
    .map_err(|e| LoadError::HopfAxioms(e.to_string()))?;
    let r = || -> Result<Matrix, CliError> {
        let r = b
            .r
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("backend {} needs r", b.name)))?;
        matrix(f, r, Some((n, n)), "backend.r")
    };
    let cat = match b.name.as_str() {
        "left_yd" => Category::left_yd(hd),
        "right_yd" => Category::right_yd(hd),
        "mod_qt" => Category::mod_qt(hd, r()?).map_err(|e| LoadError::HopfAxioms(e.to_string()))?,
        "comod_coqt" => {
            Category::comod_coqt(hd, r()?).map_err(|e| LoadError::HopfAxioms(e.to_string()))?
        }
        other => {
            return Err(CliError::Input(format!("backend {other} takes no hopf_data")).into())
        }
    };
    Ok(cat)
}

fn build_object(cat: &Cat, o: &RawObj) -> Result<Obj, CliError> {
    let f = cat.field;
    let ctx = format!("object {}", o.name);
    let err = input(&ctx);
    let square = |ms: &Vec<RawMat>, what: &str| -> Result<Vec<Matrix>, CliError> {
        ms.iter()
            .map(|m| matrix(f, m, None, &format!("{ctx}.{what}")))
            .collect()
    };
    let plain_only = |o: &RawObj| {
        o.degrees.is_none() && o.differential.is_none() && o.action.is_none() && o.coaction.is_none()
    };
    let obj = match &cat.kind {
        Kind::Vect => {
            if !plain_only(o) {
                return Err(CliError::Input(format!("{ctx}: vect objects take only dim")));
            }
            Obj::vect(cat, o.dim.ok_or_else(|| CliError::Input(format!("{ctx}: dim missing")))?)
        }
        Kind::Graded { .. } => {
            let d = o
                .degrees
                .as_ref()
                .ok_or_else(|| CliError::Input(format!("{ctx}: degrees missing")))?;
            let d = d
                .iter()
                .map(|&x| usize::try_from(x).map_err(|_| CliError::Input(format!("{ctx}: negative degree"))))
                .collect::<Result<Vec<_>, _>>()?;
            Obj::graded(cat, d).map_err(err)?
        }
        Kind::DgVect => {
            let d = o
                .degrees
                .clone()
                .ok_or_else(|| CliError::Input(format!("{ctx}: degrees missing")))?;
            let n = d.len();
            let diff = match &o.differential {
                Some(m) => matrix(f, m, Some((n, n)), &format!("{ctx}.differential"))?,
                None => Matrix::zeros(f, n, n),
            };
            Obj::dg(cat, d, diff).map_err(err)?
        }
        Kind::LeftYD(_) | Kind::RightYD(_) => {
            let (Some(a), Some(c)) = (&o.action, &o.coaction) else {
                return Err(CliError::Input(format!("{ctx}: action and coaction required")));
            };
            Obj::yd(cat, square(a, "action")?, square(c, "coaction")?).map_err(err)?
        }
        Kind::ModQT { .. } => {
            let a = o
                .action
                .as_ref()
                .ok_or_else(|| CliError::Input(format!("{ctx}: action required")))?;
            Obj::module(cat, square(a, "action")?).map_err(err)?
        }
        Kind::ComodCoQT { .. } => {
            let c = o
                .coaction
                .as_ref()
                .ok_or_else(|| CliError::Input(format!("{ctx}: coaction required")))?;
            Obj::comodule(cat, square(c, "coaction")?).map_err(err)?
        }
    };
    if let Some(d) = o.dim {
        if d != obj.dim {
            return Err(CliError::Input(format!("{ctx}: dim {d} disagrees with structure ({})", obj.dim)));
        }
    }
    Ok(obj)
}

fn take_ops(
    f: FieldSpec,
    s: &RawStructure,
    carrier: &Obj,
    names: &[(&str, usize, usize)],
) -> Result<Vec<Matrix>, CliError> {
    let expected: Vec<&str> = names.iter().map(|n| n.0).collect();
    if let Some(extra) = s.ops.keys().find(|k| !expected.contains(&k.as_str())) {
        return Err(CliError::Input(format!("structure {}: unknown op `{extra}`", s.name)));
    }
    names
        .iter()
        .map(|(n, src, dst)| {
            let raw = s
                .ops
                .get(*n)
                .ok_or_else(|| CliError::Input(format!("structure {}: op `{n}` missing", s.name)))?;
            let shape = (carrier.dim.pow(*dst as u32), carrier.dim.pow(*src as u32));
            matrix(f, raw, Some(shape), &format!("structure {}.{n}", s.name))
        })
        .collect()
}

fn build_structure(
    cat: &Cat,
    s: &RawStructure,
    objects: &[(String, Obj)],
    sig: &Option<Signature>,
) -> Result<Structure, CliError> {
    let f = cat.field;
    let carrier = objects
        .iter()
        .find(|(n, _)| *n == s.carrier)
        .map(|(_, o)| o.clone())
        .ok_or_else(|| CliError::Input(format!("structure {}: unknown carrier `{}`", s.name, s.carrier)))?;
    let err = input("structure");
    let monoid_ops = [("mul", 2, 1), ("unit", 0, 1)];
    let comonoid_ops = [("comul", 1, 2), ("counit", 1, 0)];
    Ok(match s.kind.as_str() {
        "monoid" => {
            let m = take_ops(f, s, &carrier, &monoid_ops)?;
            Structure::Monoid(MonoidStr::new(&carrier, m[0].clone(), m[1].clone()).map_err(err)?)
        }
        "comonoid" => {
            let m = take_ops(f, s, &carrier, &comonoid_ops)?;
            Structure::Comonoid(ComonoidStr::new(&carrier, m[0].clone(), m[1].clone()).map_err(err)?)
        }
        "bimonoid" | "hopf" => {
            let mut ops: Vec<(&str, usize, usize)> =
                monoid_ops.iter().chain(comonoid_ops.iter()).copied().collect();
            if s.kind == "hopf" {
                ops.push(("antipode", 1, 1));
            }
            let m = take_ops(f, s, &carrier, &ops)?;
            let bimonoid = BimonoidStr {
                monoid: MonoidStr::new(&carrier, m[0].clone(), m[1].clone()).map_err(&err)?,
                comonoid: ComonoidStr::new(&carrier, m[2].clone(), m[3].clone()).map_err(&err)?,
            };
            if s.kind == "bimonoid" {
                Structure::Bimonoid(bimonoid)
            } else {
                let antipode = Mor::new(&carrier, &carrier, m[4].clone()).map_err(&err)?;
                let inv = m[4]
                    .inverse()
                    .unwrap_or_else(|| Matrix::zeros(f, carrier.dim, carrier.dim));
                Structure::Hopf(HopfStr {
                    bimonoid,
                    antipode,
                    antipode_inv: Mor::new(&carrier, &carrier, inv).map_err(&err)?,
                })
            }
        }
        "magma" => {
            let sig = sig
                .clone()
                .ok_or_else(|| CliError::Input("magma structures need omega.signature".into()))?;
            let names: Vec<(&str, usize, usize)> =
                sig.ops().iter().map(|o| (o.name.as_str(), o.s, o.t)).collect();
            let m = take_ops(f, s, &carrier, &names)?;
            Structure::Magma(OmegaMagma::new(sig.clone(), &carrier, m).map_err(input(&format!("structure {}", s.name)))?)
        }
        other => return Err(CliError::Input(format!("structure {}: unknown kind `{other}`", s.name))),
    })
}

fn resolve(cat: &Cat, objects: &[(String, Obj)], names: &[String]) -> Result<Obj, CliError> {
    let parts = names
        .iter()
        .map(|n| {
            objects
                .iter()
                .find(|(m, _)| m == n)
                .map(|(_, o)| o.clone())
                .ok_or_else(|| CliError::Input(format!("unknown object `{n}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(tensor_all(cat, &parts))
}

/// Parses a document; `default_field` applies when the document has none.
pub fn load_str(text: &str, default_field: FieldSpec) -> Result<Document, LoadError> {
    let raw: RawDoc = serde_json::from_str(text).map_err(input("json"))?;
    let field = match &raw.field {
        Some(r) => FieldSpec::parse(&r.spec).map_err(input("field"))?,
        None => default_field,
    };
    let cat = build_backend(field, &raw)?;
    let mut objects: Vec<(String, Obj)> = Vec::new();
    for o in &raw.objects {
        if objects.iter().any(|(n, _)| *n == o.name) {
            return Err(CliError::Input(format!("duplicate object `{}`", o.name)).into());
        }
        objects.push((o.name.clone(), build_object(&cat, o)?));
    }
    let mut morphisms = Vec::new();
    for m in &raw.morphisms {
        let src = resolve(&cat, &objects, &m.src)?;
        let dst = resolve(&cat, &objects, &m.dst)?;
        let ctx = format!("morphism {}", m.name);
        let mat = matrix(field, &m.matrix, Some((dst.dim, src.dim)), &ctx)?;
        morphisms.push(NamedMor {
            name: m.name.clone(),
            mor: Mor::new(&src, &dst, mat).map_err(input(&ctx))?,
            src: m.src.clone(),
            dst: m.dst.clone(),
        });
    }
    let sig = match &raw.omega.signature {
        Some(ops) => Some(
            Signature::new(ops.iter().map(|(n, s, t)| (n.as_str(), *s, *t))).map_err(input("signature"))?,
        ),
        None => None,
    };
    let mut structures = Vec::new();
    for s in &raw.omega.structures {
        structures.push((s.name.clone(), build_structure(&cat, s, &objects, &sig)?));
    }
    Ok(Document {
        field,
        cat,
        objects,
        morphisms,
        structures,
    })
}

pub fn load(path: &std::path::Path, default_field: FieldSpec) -> Result<Document, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    load_str(&text, default_field)
}
