#![allow(dead_code)]

use cat_backends::random::{random_obj_any, seed_objects};
use cat_backends::{Cat, Obj};
use exactla::FieldSpec;
use rand_chacha::ChaCha8Rng;

pub const Q: FieldSpec = FieldSpec::Rational;

pub fn sampler(cat: &Cat, max_dim: usize) -> impl FnMut(&mut ChaCha8Rng) -> Obj + '_ {
    let seeds = seed_objects(cat, max_dim);
    move |rng| random_obj_any(cat, &seeds, max_dim, rng)
}
