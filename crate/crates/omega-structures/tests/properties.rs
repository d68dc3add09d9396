use hopf_structures::backends::standard_backends;
use omega_structures::battery::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: exactla::FieldSpec = exactla::FieldSpec::Rational;

fn run(trials: usize, seed: u64, f: impl Fn(&Sampler, &mut ChaCha8Rng) -> Trial) {
    for cat in standard_backends(Q) {
        let s = Sampler::new(&cat, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..trials {
            if let Err(e) = f(&s, &mut rng) {
                panic!("{} trial {i}: {e}", cat.name());
            }
        }
    }
}

#[test]
fn flat_and_evaluation() {
    run(30, 1, flat_ev);
}

#[test]
fn nabla_of_flat_is_vee() {
    run(30, 2, nabla_flat);
}

#[test]
fn vee_is_natural_in_the_coefficients() {
    run(30, 3, vee_naturality);
}

#[test]
fn nabla_cancels() {
    run(30, 4, cancellation);
}

#[test]
fn nabla_is_strict_monoidal_on_twisted_powers() {
    run(5, 5, |s, r| nabla_monoidal(&s.cat, r));
}

#[test]
fn comodules_give_modules_in_symmetric_backends() {
    for cat in standard_backends(Q).into_iter().filter(|c| c.symmetric) {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for i in 0..10 {
            if let Err(e) = module_transfer(&cat, &mut rng) {
                panic!("{} trial {i}: {e}", cat.name());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn measuring_comeasuring_transfer(seed in any::<u64>(), which in 0usize..7) {
        let cat = standard_backends(Q)[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = measuring_transfer(&cat, &mut rng);
        prop_assert!(r.is_ok(), "{}: {:?}", cat.name(), r);
    }
}
