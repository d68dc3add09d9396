//! Seeded single-trial checks of the pre-rigid and transfer identities. Each
//! trial returns `Err` with a short description of the first mismatch.

use cat_backends::random::{random_obj_any, seed_objects};
use cat_backends::{
    braid, dual, dual_mor, ev, flat, random_mor, sharp, tensor, tensor_mor, tensor_power, Cat, Mor,
    Obj,
};
use exactla::Matrix;
use hopf_structures::backends::sample_comonoids;
use hopf_structures::{dual_comonoid, ComonoidStr};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::random::{mixed_signature, random_copy, random_magma};
use crate::{
    check_comeasuring, check_left_module, check_measuring, check_right_comodule,
    comeasuring_residues, comodule_to_module, measuring_residues, nabla, nabla_inverse,
    twisted_power_comeas, twisted_power_meas, vee, Comeasuring, Measuring, OmegaError,
};

pub type Trial = Result<(), String>;

/// Random objects of one backend with dimension at most `max_dim`.
pub struct Sampler {
    pub cat: Cat,
    seeds: Vec<Obj>,
    max_dim: usize,
}

impl Sampler {
    pub fn new(cat: &Cat, max_dim: usize) -> Sampler {
        Sampler {
            cat: cat.clone(),
            seeds: seed_objects(cat, max_dim),
            max_dim,
        }
    }

    pub fn obj<R: Rng + ?Sized>(&self, rng: &mut R) -> Obj {
        random_obj_any(&self.cat, &self.seeds, self.max_dim, rng)
    }
}

fn same(name: &str, lhs: &Matrix, rhs: &Matrix) -> Trial {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{name}: sides differ"))
    }
}

fn err(e: OmegaError) -> String {
    e.to_string()
}

fn id(x: &Obj) -> Mor {
    Mor::identity(x)
}

/// ev_U∘(f⊗id_U) = ev_P∘c_{P,P*}∘(id_P⊗f♭), and ♯, ♭ mutually inverse.
pub fn flat_ev<R: Rng + ?Sized>(s: &Sampler, rng: &mut R) -> Trial {
    let (p, u) = (s.obj(rng), s.obj(rng));
    let f = random_mor(&p, &dual(&u), rng);
    let fl = flat(&f, &u);
    if !fl.is_valid() {
        return Err("f♭ is not a morphism".into());
    }
    let lhs = ev(&u).after(&tensor_mor(&f, &id(&u)));
    let rhs = ev(&p)
        .after(&braid(&p, &dual(&p)))
        .after(&tensor_mor(&id(&p), &fl));
    same("ev diagram", &lhs.matrix, &rhs.matrix)?;
    same("♯♭", &sharp(&fl, &p).matrix, &f.matrix)
}

/// ((id_B⊗f♭)ρ)^∇ = ρ^∨(f⊗id_A) for ρ: A → B⊗Q and f: P → Q*.
pub fn nabla_flat<R: Rng + ?Sized>(s: &Sampler, rng: &mut R) -> Trial {
    let (a, b, q, p) = (s.obj(rng), s.obj(rng), s.obj(rng), s.obj(rng));
    let rho = random_mor(&a, &tensor(&b, &q), rng);
    let f = random_mor(&p, &dual(&q), rng);
    let lhs_rho = tensor_mor(&id(&b), &flat(&f, &q)).after(&rho);
    let lhs = nabla(&lhs_rho, &b, &p).map_err(err)?;
    let rhs = vee(&rho, &b, &q)
        .map_err(err)?
        .after(&tensor_mor(&f, &id(&a)));
    same("∇♭", &lhs.matrix, &rhs.matrix)
}

/// ((id_B⊗g)ρ)^∨ = ρ^∨(g*⊗id_A) for g: Q → Q'.
pub fn vee_naturality<R: Rng + ?Sized>(s: &Sampler, rng: &mut R) -> Trial {
    let (a, b, q, q2) = (s.obj(rng), s.obj(rng), s.obj(rng), s.obj(rng));
    let rho = random_mor(&a, &tensor(&b, &q), rng);
    let g = random_mor(&q, &q2, rng);
    let lhs = vee(&tensor_mor(&id(&b), &g).after(&rho), &b, &q2).map_err(err)?;
    let rhs = vee(&rho, &b, &q)
        .map_err(err)?
        .after(&tensor_mor(&dual_mor(&g), &id(&a)));
    same("∨ naturality", &lhs.matrix, &rhs.matrix)
}

/// ρ ↦ ρ^∇ is injective, and `nabla_inverse` recovers ρ as a morphism.
pub fn cancellation<R: Rng + ?Sized>(s: &Sampler, rng: &mut R) -> Trial {
    let (a, b, p) = (s.obj(rng), s.obj(rng), s.obj(rng));
    let target = tensor(&b, &dual(&p));
    let r1 = random_mor(&a, &target, rng);
    let r2 = random_mor(&a, &target, rng);
    let n1 = nabla(&r1, &b, &p).map_err(err)?;
    let n2 = nabla(&r2, &b, &p).map_err(err)?;
    if (n1 == n2) != (r1 == r2) {
        return Err("∇ identifies distinct maps".into());
    }
    let back = nabla_inverse(&n1, &a, &b, &p).map_err(err)?;
    if !back.is_valid() {
        return Err("∇⁻¹ is not a morphism".into());
    }
    same("∇⁻¹∇", &back.matrix, &r1.matrix)
}

/// (ρ^{⊗̃m})^∇ = (ρ^∇)^{⊗̃m} for m ≤ 3.
pub fn nabla_monoidal<R: Rng + ?Sized>(cat: &Cat, rng: &mut R) -> Trial {
    let comonoids = sample_comonoids(cat);
    let s = Sampler::new(cat, 2);
    let p = comonoids.choose(rng).expect("𝟙 at least");
    let (a, b) = (random_magma(&s.obj(rng), &mixed_signature(), rng), s.obj(rng));
    let b = random_magma(&b, &mixed_signature(), rng);
    let pd = dual_comonoid(p);
    let rho = random_mor(&a.carrier, &tensor(&b.carrier, &pd.carrier), rng).matrix;
    let c = Comeasuring::new(&pd, rho, &a, &b).map_err(err)?;
    let psi = nabla(&c.rho, &b.carrier, &p.carrier).map_err(err)?;
    let m = Measuring::new(p, psi.matrix, &a, &b).map_err(err)?;
    for k in 0..=3 {
        let bk = tensor_power(&b.carrier, k);
        let lhs = nabla(&twisted_power_comeas(&c, k), &bk, &p.carrier).map_err(err)?;
        same(
            &format!("∇ on power {k}"),
            &lhs.matrix,
            &twisted_power_meas(&m, k).matrix,
        )?;
    }
    Ok(())
}

/// A comeasuring into P* that is known to be one: a ↦ p(a)⊗1 for an
/// isomorphism p, or a random map otherwise.
fn candidate<R: Rng + ?Sized>(
    s: &Sampler,
    p: &ComonoidStr,
    rng: &mut R,
) -> Result<(Comeasuring, bool), String> {
    let sig = mixed_signature();
    let a = random_magma(&s.obj(rng), &sig, rng);
    let pd = dual_comonoid(p);
    if rng.gen_bool(0.5) {
        let (b, iso) = random_copy(&a, rng);
        let rho = iso.kron(&pd.unit.matrix);
        Ok((Comeasuring::new(&pd, rho, &a, &b).map_err(err)?, true))
    } else {
        let b = random_magma(&s.obj(rng), &sig, rng);
        let rho = random_mor(&a.carrier, &tensor(&b.carrier, &pd.carrier), rng).matrix;
        Ok((Comeasuring::new(&pd, rho, &a, &b).map_err(err)?, false))
    }
}

fn residues_correspond(c: &Comeasuring, m: &Measuring) -> Trial {
    let p = &m.p.carrier;
    let sig = c.a.signature.ops();
    for ((o, (_, rc)), (_, rm)) in sig
        .iter()
        .zip(comeasuring_residues(c))
        .zip(measuring_residues(m))
    {
        let src = tensor_power(&c.a.carrier, o.s);
        let bt = tensor_power(&c.b.carrier, o.t);
        let r = Mor::new(&src, &tensor(&bt, &c.q.carrier), rc).map_err(|e| e.to_string())?;
        let n = nabla(&r, &bt, p).map_err(err)?;
        same(&format!("residue of {}", o.name), &n.matrix, &rm)?;
    }
    Ok(())
}

/// ρ is a comeasuring into P* iff ρ^∇ is a measuring, checked from both sides on
/// a random Ω-magma with a binary, a unary and a nullary operation.
pub fn measuring_transfer<R: Rng + ?Sized>(cat: &Cat, rng: &mut R) -> Trial {
    let s = Sampler::new(cat, 3);
    let comonoids = sample_comonoids(cat);
    let p = comonoids.choose(rng).expect("𝟙 at least");
    // comeasuring side
    let (c, known) = candidate(&s, p, rng)?;
    let psi = nabla(&c.rho, &c.b.carrier, &p.carrier).map_err(err)?;
    let m = Measuring::new(p, psi.matrix, &c.a, &c.b).map_err(err)?;
    let (rc, rm) = (check_comeasuring(&c), check_measuring(&m));
    if known && !rc.is_ok() {
        return Err(format!("constructed comeasuring fails: {rc}"));
    }
    if rc.is_ok() != rm.is_ok() {
        return Err("comeasuring and measuring verdicts differ".into());
    }
    residues_correspond(&c, &m)?;
    // measuring side: ψ = ε⊗q for an isomorphism q, or a random ψ
    let (c2, known) = candidate(&s, p, rng)?;
    let (a, b) = (&c2.a, &c2.b);
    let psi = if known {
        nabla(&c2.rho, &b.carrier, &p.carrier).map_err(err)?
    } else {
        random_mor(&tensor(&p.carrier, &a.carrier), &b.carrier, rng)
    };
    let m = Measuring::new(p, psi.matrix.clone(), a, b).map_err(err)?;
    let rho = nabla_inverse(&psi, &a.carrier, &b.carrier, &p.carrier).map_err(err)?;
    let c = Comeasuring::new(&dual_comonoid(p), rho.matrix, a, b).map_err(err)?;
    let (rc, rm) = (check_comeasuring(&c), check_measuring(&m));
    if known && !rm.is_ok() {
        return Err(format!("constructed measuring fails: {rm}"));
    }
    if rc.is_ok() != rm.is_ok() {
        return Err("measuring and comeasuring verdicts differ".into());
    }
    residues_correspond(&c, &m)
}

/// For a right comodule ρ: A → A⊗P, ρ^∨ is a left P*-action (symmetric backends).
pub fn module_transfer<R: Rng + ?Sized>(cat: &Cat, rng: &mut R) -> Trial {
    let comonoids = sample_comonoids(cat);
    let p = comonoids.choose(rng).expect("𝟙 at least");
    let rho = p.comul.clone();
    let r = check_right_comodule(&rho, p);
    if !r.is_ok() {
        return Err(format!("Δ is not a coaction: {r}"));
    }
    let (m, act) = comodule_to_module(&rho, p).map_err(err)?;
    if !act.is_valid() {
        return Err("ρ^∨ is not a morphism".into());
    }
    let r = check_left_module(&m, &act);
    if r.is_ok() {
        Ok(())
    } else {
        Err(format!("ρ^∨ is not an action: {r}"))
    }
}
