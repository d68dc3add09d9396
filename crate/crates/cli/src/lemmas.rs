//! The `verify-lemmas` battery: each lemma runs a number of seeded trials;
//! trial i of lemma k draws from its own generator, so results do not depend
//! on scheduling.

use cat_backends::closed_forms::{
    flat_closed, sharp_left, theta_inv_left, theta_inv_right, theta_left, xi, zeta,
};
use cat_backends::{dual, flat, random_mor, sharp, tensor, theta, theta_inv, Cat, Kind};
use exactla::Matrix;
use omega_structures::battery::{self, Sampler, Trial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use supports::{check_preorder_transfer, check_supp_cosupp_duality};

pub type LemmaFn = fn(&Cat, &Sampler, &mut ChaCha8Rng) -> Trial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaResult {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
    /// Index and message of the first failing trial.
    pub first_failure: Option<(usize, String)>,
}

fn supports_apply(cat: &Cat) -> bool {
    cat.symmetric || matches!(cat.kind, Kind::LeftYD(_))
}

fn supp_cosupp(_: &Cat, s: &Sampler, rng: &mut ChaCha8Rng) -> Trial {
    let (a, b, q) = (s.obj(rng), s.obj(rng), s.obj(rng));
    let rho = random_mor(&a, &tensor(&b, &q), rng);
    let r = check_supp_cosupp_duality(&rho, &b, &q).map_err(|e| e.to_string())?;
    if r.is_ok() {
        Ok(())
    } else {
        Err(r.to_string())
    }
}

/// ρ1 and ρ2 = (id⊗g)ρ1: ρ1 is finer, and the verdicts transfer through ∨.
fn preorder(_: &Cat, s: &Sampler, rng: &mut ChaCha8Rng) -> Trial {
    let (a, b, q, q2) = (s.obj(rng), s.obj(rng), s.obj(rng), s.obj(rng));
    let rho = random_mor(&a, &tensor(&b, &q), rng);
    let g = random_mor(&q, &q2, rng);
    let rho2 = cat_backends::tensor_mor(&cat_backends::Mor::identity(&b), &g).after(&rho);
    let c = supports::preorder_cmp(&rho, &q, &rho2, &q2, &b).map_err(|e| e.to_string())?;
    if !c.first_dominates() {
        return Err("ρ is not finer than (id⊗g)ρ".into());
    }
    let r = check_preorder_transfer(&rho, &q, &rho2, &q2, &b).map_err(|e| e.to_string())?;
    if r.is_ok() {
        Ok(())
    } else {
        Err(r.to_string())
    }
}

fn closed_forms(cat: &Cat, s: &Sampler, rng: &mut ChaCha8Rng) -> Trial {
    let (m, n) = (s.obj(rng), s.obj(rng));
    let phi = random_mor(&m, &dual(&n), rng);
    let same = |name: &str, x: &Matrix, y: &Matrix| {
        if x == y {
            Ok(())
        } else {
            Err(format!("{name} differs from its closed form"))
        }
    };
    same("♭", &flat(&phi, &n).matrix, &flat_closed(&phi.matrix, &m, &n))?;
    if matches!(cat.kind, Kind::LeftYD(_)) {
        same("θ", &theta(&m, &n).matrix, &theta_left(&m, &n))?;
        same("θ⁻¹", &theta_inv(&m, &n).matrix, &theta_inv_left(&m, &n))?;
        same("♯", &sharp(&phi, &n).matrix, &sharp_left(&phi.matrix, &m, &n))
    } else {
        same("θ⁻¹", &theta_inv(&m, &n).matrix, &theta_inv_right(&m, &n))
    }
}

fn xi_zeta(_: &Cat, s: &Sampler, rng: &mut ChaCha8Rng) -> Trial {
    let m = s.obj(rng);
    let id = Matrix::identity(m.field(), m.dim);
    if xi(&m).mul(&zeta(&m)) == id && zeta(&m).mul(&xi(&m)) == id {
        Ok(())
    } else {
        Err("ξζ or ζξ is not the identity".into())
    }
}

/// Lemmas that apply to `cat`, in report order.
pub fn lemmas_for(cat: &Cat) -> Vec<(&'static str, LemmaFn)> {
    let mut out: Vec<(&'static str, LemmaFn)> = vec![
        ("flat/ev diagram", |_, s, r| battery::flat_ev(s, r)),
        ("∇ of (id⊗f♭)ρ is ρ^∨(f⊗id)", |_, s, r| battery::nabla_flat(s, r)),
        ("∨ is natural in the coefficients", |_, s, r| battery::vee_naturality(s, r)),
        ("∇ cancellation", |_, s, r| battery::cancellation(s, r)),
        ("∇ on twisted powers", |c, _, r| battery::nabla_monoidal(c, r)),
        ("measuring/comeasuring transfer", |c, _, r| battery::measuring_transfer(c, r)),
    ];
    if cat.symmetric {
        out.push(("comodule to module", |c, _, r| battery::module_transfer(c, r)));
    }
    if supports_apply(cat) {
        out.push(("cosupp(ρ^∨) = (supp ρ)*", supp_cosupp));
        out.push(("preorder transfer", preorder));
    }
    match cat.kind {
        Kind::LeftYD(_) => {
            out.push(("YD closed forms", closed_forms));
            out.push(("ξζ = ζξ = id", xi_zeta));
        }
        Kind::RightYD(_) => out.push(("YD closed forms", closed_forms)),
        _ => {}
    }
    out
}

fn trial_seed(seed: u64, lemma: usize, trial: usize) -> u64 {
    seed ^ ((lemma as u64 + 1) << 40) ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn run_lemma(cat: &Cat, index: usize, name: &'static str, f: LemmaFn, seed: u64, trials: usize) -> LemmaResult {
    let sampler = Sampler::new(cat, 3);
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, index, i));
            f(cat, &sampler, &mut rng)
        })
        .collect();
    let first_failure = results
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.as_ref().err().map(|e| (i, e.clone())));
    LemmaResult {
        name,
        trials,
        passed: results.iter().filter(|r| r.is_ok()).count(),
        first_failure,
    }
}

pub fn run_all(cat: &Cat, seed: u64, trials: usize) -> Vec<LemmaResult> {
    lemmas_for(cat)
        .into_iter()
        .enumerate()
        .map(|(i, (name, f))| run_lemma(cat, i, name, f, seed, trials))
        .collect()
}
