use cat_backends::{Cat, Mor, Obj};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::backends::backend;
use hopf_structures::catalog::{group_coalgebra, matrix_coalgebra, trivial_comonoid};
use hopf_structures::{catalog, CatalogItem, ComonoidStr, Params};
use ncalg::{render_word, NCPoly};
use omega_structures::{OmegaMagma, Signature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use supports::{cosupport, is_tensor_epi, is_tensor_mono, support};
use universal::{
    bimonoid_structure, duality_roundtrip, hopf_envelope_presentation, normalize_tensor2,
    render_tensor2, sample_comeasuring, universal_presentation, UniversalComeasuring,
};

use crate::document::{load, Document, LoadError};
use crate::output::{matrix_value, report_value};
use crate::{lemmas, CliError, Command, Job, Output, Source};

pub fn run(job: &Job) -> Result<Output, CliError> {
    let f = job.common.field;
    match &job.command {
        Command::Validate { file } => validate(file, f),
        Command::Catalog {
            name,
            backend,
            hopf,
            group,
            n,
            q,
            lambda,
        } => catalog_cmd(name.as_deref(), backend, hopf.as_deref(), group, *n, q, lambda, f),
        Command::Universal {
            source,
            degree,
            level,
        } => universal_cmd(source, *degree, *level, f),
        Command::Truncate { source, degree } => truncate(source, *degree, f),
        Command::DualityCheck {
            source,
            degree,
            coalgebras,
            seed,
            trials,
        } => duality(source, *degree, coalgebras, seed.unwrap_or(0), *trials, f),
        Command::Support { file, map } => support_cmd(file, map, f),
        Command::Cosupport { file, map } => cosupport_cmd(file, map, f),
        Command::VerifyLemmas {
            backend,
            hopf,
            seed,
            trials,
        } => verify(backend, hopf.as_deref(), seed.unwrap_or(0), *trials, f),
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn load_doc(file: &std::path::Path, f: FieldSpec) -> Result<Document, CliError> {
    match load(file, f) {
        Ok(d) => Ok(d),
        Err(LoadError::Malformed(e)) => Err(e),
        Err(LoadError::HopfAxioms(msg)) => Err(CliError::Input(format!("hopf_data: {msg}"))),
    }
}

fn report_check(out: &mut Output, key: &str, r: &cat_backends::Report) {
    let detail = if r.is_ok() { Value::Null } else { report_value(r) };
    out.check(key, r.is_ok(), detail);
}

fn validate(file: &std::path::Path, f: FieldSpec) -> Result<Output, CliError> {
    let mut out = Output::new("validate");
    let doc = match load(file, f) {
        Ok(d) => d,
        Err(LoadError::Malformed(e)) => return Err(e),
        Err(LoadError::HopfAxioms(msg)) => {
            out.check("hopf_data", false, msg);
            return Ok(out);
        }
    };
    out.put("field", doc.field.to_string());
    out.put("backend", doc.cat.name());
    for (name, o) in &doc.objects {
        report_check(&mut out, &format!("object {name}"), &o.validate());
    }
    for m in &doc.morphisms {
        out.check(&format!("morphism {}", m.name), m.mor.is_valid(), Value::Null);
    }
    for (name, s) in &doc.structures {
        report_check(&mut out, &format!("{} {name}", s.kind()), &s.validate());
    }
    Ok(out)
}

const CATALOG_NAMES: [(&str, &str); 12] = [
    ("group_algebra", "Hopf data kG (--group)"),
    ("function_algebra", "Hopf data k^G (--group)"),
    ("sweedler", "Sweedler's 4-dimensional Hopf algebra"),
    ("taft", "Taft algebra (--n, --q)"),
    ("kc2_r_matrix", "triangular R-matrix on kC2"),
    ("dual_numbers", "k[e]/(e^2)"),
    ("truncated_poly", "k[x]/(x^n) (--n)"),
    ("matrix_algebra", "M_n(k) (--n)"),
    ("product_algebra", "k x k"),
    ("matrix_coalgebra", "matrix coalgebra of size n (--n)"),
    ("group_coalgebra", "kG with group-like basis (--group)"),
    ("yd_module_algebra", "YD module algebra over Sweedler (--lambda)"),
];

#[allow(clippy::too_many_arguments)]
fn catalog_cmd(
    name: Option<&str>,
    backend_name: &str,
    hopf: Option<&str>,
    group: &Option<String>,
    n: Option<usize>,
    q: &Option<String>,
    lambda: &Option<String>,
    f: FieldSpec,
) -> Result<Output, CliError> {
    let mut out = Output::new("catalog");
    let Some(name) = name else {
        let list: serde_json::Map<String, Value> = CATALOG_NAMES
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        out.put("entries", Value::Object(list));
        return Ok(out);
    };
    let cat = backend(backend_name, hopf, f).map_err(input)?;
    let scalar = |s: &Option<String>| -> Result<Option<Scalar>, CliError> {
        s.as_ref().map(|x| Scalar::parse(f, x).map_err(input)).transpose()
    };
    let params = Params {
        group: group.clone(),
        n,
        q: scalar(q)?,
        lambda: scalar(lambda)?,
    };
    let item = catalog(name, &cat, &params).map_err(input)?;
    out.put("name", name);
    out.put("backend", cat.name());
    match item {
        CatalogItem::Hopf(h) => {
            out.put("kind", "hopf data");
            out.put("dim", h.dim());
            out.put("labels", h.labels.clone());
            out.put("mul", matrix_value(&h.mul));
            out.put("comul", matrix_value(&h.comul));
            out.put("antipode", matrix_value(&h.antipode));
            let order = h.antipode_order(16).map(Value::from).unwrap_or(Value::Null);
            out.put("antipode order", order);
            out.check("hopf axioms", true, Value::Null);
        }
        CatalogItem::Monoid(m) => {
            out.put("kind", "monoid");
            out.put("dim", m.dim());
            out.put("mul", matrix_value(&m.mul.matrix));
            out.put("unit", matrix_value(&m.unit.matrix));
            report_check(&mut out, "monoid axioms", &m.validate());
        }
        CatalogItem::Comonoid(c) => {
            out.put("kind", "comonoid");
            out.put("dim", c.dim());
            out.put("comul", matrix_value(&c.comul.matrix));
            out.put("counit", matrix_value(&c.counit.matrix));
            report_check(&mut out, "comonoid axioms", &c.validate());
        }
        CatalogItem::RMatrix(r) => {
            out.put("kind", "R-matrix");
            out.put("coefficients", matrix_value(&r));
        }
    }
    Ok(out)
}

/// A and B, and a short description of where they came from.
fn magmas(src: &Source, f: FieldSpec) -> Result<(Cat, OmegaMagma, OmegaMagma, String), CliError> {
    match (&src.file, &src.magma) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "error: give either a document or --magma, not both\n".into(),
        )),
        (None, None) => Err(CliError::Usage("error: give a document or --magma\n".into())),
        (None, Some(name)) => {
            if src.structure.is_some() || src.target.is_some() {
                return Err(CliError::Usage(
                    "error: --structure and --target need a document\n".into(),
                ));
            }
            let cat = backend(&src.backend, src.hopf.as_deref(), f).map_err(input)?;
            let params = Params {
                n: src.n,
                ..Params::default()
            };
            match catalog(name, &cat, &params).map_err(input)? {
                CatalogItem::Monoid(m) => {
                    let a = OmegaMagma::from_monoid(&m);
                    Ok((cat, a.clone(), a, name.clone()))
                }
                _ => Err(CliError::Input(format!("{name} is not a monoid"))),
            }
        }
        (Some(file), None) => {
            let doc = load_doc(file, f)?;
            let pick = |name: &Option<String>| -> Result<OmegaMagma, CliError> {
                let s = match name {
                    Some(n) => doc.structure(n)?,
                    None => {
                        let mut it = doc.structures.iter().filter(|(_, s)| s.magma().is_some());
                        match (it.next(), it.next()) {
                            (Some((_, s)), None) => s,
                            _ => {
                                return Err(CliError::Input(
                                    "several or no candidate structures; use --structure".into(),
                                ))
                            }
                        }
                    }
                };
                s.magma()
                    .ok_or_else(|| CliError::Input("a comonoid is not an Ω-magma here".into()))
            };
            let a = pick(&src.structure)?;
            let b = match &src.target {
                Some(_) => pick(&src.target)?,
                None => a.clone(),
            };
            Ok((doc.cat.clone(), a, b, file.display().to_string()))
        }
    }
}

fn generator_labels(u: &UniversalComeasuring) -> Vec<String> {
    let g = u.gens();
    let degrees: Option<Vec<String>> = if let Some(d) = g.graded_degrees() {
        Some(d.iter().map(|x| x.to_string()).collect())
    } else {
        g.dg_parts().map(|(d, _)| d.iter().map(|x| x.to_string()).collect())
    };
    let names = &u.presentation.names;
    match degrees {
        Some(d) => names.iter().zip(d).map(|(n, d)| format!("{n} (degree {d})")).collect(),
        None => names.clone(),
    }
}

fn universal_for(src: &Source, f: FieldSpec) -> Result<(UniversalComeasuring, String), CliError> {
    let (_, a, b, what) = magmas(src, f)?;
    let u = universal_presentation(&a, &b, universal::Source::Absolute).map_err(input)?;
    Ok((u, what))
}

fn universal_cmd(
    src: &Source,
    d: usize,
    level: Option<usize>,
    f: FieldSpec,
) -> Result<Output, CliError> {
    let (u, what) = universal_for(src, f)?;
    let mut out = Output::new("universal");
    out.put("source", what);
    out.put("backend", u.a.carrier.cat.name());
    out.put("field", f.to_string());
    out.put("degree", d);
    out.put("generators", generator_labels(&u));
    out.put("defining relations", u.presentation.relations.len());
    out.put("relations", u.presentation.rendered_basis(d));
    out.put("dims", u.presentation.truncated_basis(d).dims);
    let cat = &u.a.carrier.cat;
    if !cat.symmetric || u.a != u.b {
        let why = if u.a != u.b { "A differs from B" } else { "backend is not symmetric" };
        out.put("bimonoid", format!("not computed: {why}"));
        return Ok(out);
    }
    let bi = bimonoid_structure(&u, d).map_err(input)?;
    let names = &u.presentation.names;
    let mut comul = Vec::new();
    let mut counit = Vec::new();
    for (k, name) in names.iter().enumerate() {
        let g = NCPoly::generator(u.gens(), k);
        let t = normalize_tensor2(&u.presentation, &bi.delta(&g), d.max(1)).map_err(input)?;
        comul.push(format!("Δ({name}) = {}", render_tensor2(&t, names)));
        counit.push(format!("ε({name}) = {}", bi.epsilon(&g)));
    }
    out.put("comultiplication", comul);
    out.put("counit", counit);
    report_check(&mut out, "bimonoid axioms on generators", &bi.axioms);
    report_check(&mut out, "relations are coideal elements", &bi.certificate);
    if let Some(level) = level {
        let h = hopf_envelope_presentation(&u, &bi, level, d).map_err(input)?;
        out.put("hopf envelope level", level);
        out.put("hopf envelope dims", h.presentation.truncated_basis(d).dims);
        report_check(&mut out, "antipode axioms", &h.report);
    }
    Ok(out)
}

fn truncate(src: &Source, d: usize, f: FieldSpec) -> Result<Output, CliError> {
    let (u, what) = universal_for(src, f)?;
    let mut out = Output::new("truncate");
    out.put("source", what);
    out.put("degree", d);
    let tb = u.presentation.truncated_basis(d);
    out.put("dims", tb.dims.clone());
    let mut words = serde_json::Map::new();
    for (k, ws) in tb.words.iter().enumerate() {
        let rendered: Vec<String> = ws.iter().map(|w| render_word(w, &u.presentation.names)).collect();
        words.insert(format!("degree {k}"), Value::String(rendered.join(" ")));
    }
    out.put("normal words", Value::Object(words));
    Ok(out)
}

fn coalgebra(cat: &Cat, name: &str) -> Result<ComonoidStr, CliError> {
    if name == "one" {
        return Ok(trivial_comonoid(cat));
    }
    if let Some(n) = name.strip_prefix('M').and_then(|s| s.parse::<usize>().ok()) {
        return matrix_coalgebra(cat, n).map_err(input);
    }
    group_coalgebra(cat, name).map_err(input)
}

/// Monoid maps A → B with entries in {−1, 0, 1, 2}, for carriers of dimension ≤ 2;
/// only the identity beyond that.
fn small_monoid_maps(a: &OmegaMagma, b: &OmegaMagma) -> Vec<Matrix> {
    let f = a.carrier.field();
    let (da, db) = (a.dim(), b.dim());
    if a.signature != Signature::monoid() {
        return vec![];
    }
    if da > 2 || db > 2 {
        return if a == b { vec![Matrix::identity(f, da)] } else { vec![] };
    }
    let (ma, ua) = (&a.ops[0].matrix, &a.ops[1].matrix);
    let (mb, ub) = (&b.ops[0].matrix, &b.ops[1].matrix);
    let vals = [-1i64, 0, 1, 2];
    let cells = da * db;
    let mut out = Vec::new();
    for code in 0..vals.len().pow(cells as u32) {
        let mut c = code;
        let m = Matrix::from_fn(f, db, da, |_, _| {
            let v = vals[c % vals.len()];
            c /= vals.len();
            Scalar::from_i64(f, v)
        });
        if m.mul(ma) != mb.mul(&m.kron(&m)) || m.mul(ua) != *ub {
            continue;
        }
        if Mor::new(&a.carrier, &b.carrier, m.clone()).is_ok_and(|x| x.is_valid()) {
            out.push(m);
        }
    }
    out
}

fn duality(
    src: &Source,
    d: usize,
    coalgebras: &[String],
    seed: u64,
    trials: usize,
    f: FieldSpec,
) -> Result<Output, CliError> {
    let (cat, a, b, what) = magmas(src, f)?;
    if a.signature != Signature::monoid() {
        return Err(CliError::Input("duality-check needs monoids".into()));
    }
    let u = universal_presentation(&a, &b, universal::Source::Absolute).map_err(input)?;
    let endos = small_monoid_maps(&a, &b);
    if endos.is_empty() {
        return Err(CliError::Input("no monoid maps A → B to sample from".into()));
    }
    let names: Vec<String> = if coalgebras.is_empty() {
        ["one", "C2", "C3", "M2"].iter().map(|s| s.to_string()).collect()
    } else {
        coalgebras.to_vec()
    };
    let mut out = Output::new("duality-check");
    out.put("source", what);
    out.put("backend", cat.name());
    out.put("degree", d);
    out.put("seed", seed);
    out.put("samples per coalgebra", trials);
    out.put("monoid maps sampled", endos.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for name in &names {
        let p = coalgebra(&cat, name)?;
        let samples = (0..trials)
            .map(|_| sample_comeasuring(&a, &b, &p, &endos, &mut rng))
            .collect::<Result<Vec<_>, _>>()
            .map_err(input)?;
        let rep = duality_roundtrip(&u, &p, &samples, d).map_err(input)?;
        report_check(&mut out, &format!("P = {name}"), &rep);
    }
    Ok(out)
}

fn split_names<'a>(names: &'a [String], what: &str) -> Result<(&'a String, &'a [String]), CliError> {
    match names.split_first() {
        Some((x, rest)) if !rest.is_empty() => Ok((x, rest)),
        _ => Err(CliError::Input(format!("{what} must list at least two objects"))),
    }
}

fn support_cmd(file: &std::path::Path, map: &str, f: FieldSpec) -> Result<Output, CliError> {
    let doc = load_doc(file, f)?;
    let m = doc.morphism(map)?;
    let (b, q) = split_names(&m.dst, "target of ρ")?;
    let b: Obj = doc.tensor_of(std::slice::from_ref(b))?;
    let q = doc.tensor_of(q)?;
    let s = support(&m.mor, &b, &q).map_err(input)?;
    let mut out = Output::new("support");
    out.check("ρ is a morphism", m.mor.is_valid(), Value::Null);
    out.put("dim", s.sub.dim());
    out.put("basis", matrix_value(s.sub.basis()));
    out.put("factored map", matrix_value(&s.abs.matrix));
    out.put("tensor epimorphism", is_tensor_epi(&m.mor, &b, &q).map_err(input)?);
    Ok(out)
}

fn cosupport_cmd(file: &std::path::Path, map: &str, f: FieldSpec) -> Result<Output, CliError> {
    let doc = load_doc(file, f)?;
    let m = doc.morphism(map)?;
    let (p, a) = split_names(&m.src, "source of ψ")?;
    let p: Obj = doc.tensor_of(std::slice::from_ref(p))?;
    let a = doc.tensor_of(a)?;
    let c = cosupport(&m.mor, &p, &a).map_err(input)?;
    let mut out = Output::new("cosupport");
    out.check("ψ is a morphism", m.mor.is_valid(), Value::Null);
    out.put("dim", c.sub.dim());
    out.put("basis", matrix_value(c.sub.basis()));
    out.put("corestriction", matrix_value(&c.corestriction.matrix));
    out.put("factored map", matrix_value(&c.abs.matrix));
    out.put("tensor monomorphism", is_tensor_mono(&m.mor, &p, &a).map_err(input)?);
    Ok(out)
}

fn verify(
    name: &str,
    hopf: Option<&str>,
    seed: u64,
    trials: usize,
    f: FieldSpec,
) -> Result<Output, CliError> {
    let cat = backend(name, hopf, f).map_err(input)?;
    let mut out = Output::new("verify-lemmas");
    out.put("backend", cat.name());
    out.put("seed", seed);
    out.put("trials", trials);
    for r in lemmas::run_all(&cat, seed, trials) {
        let detail = match &r.first_failure {
            None => json!(format!("{}/{}", r.passed, r.trials)),
            Some((i, msg)) => json!(format!("{}/{}, first failure at trial {i}: {msg}", r.passed, r.trials)),
        };
        out.check(r.name, r.passed == r.trials, detail);
    }
    Ok(out)
}
