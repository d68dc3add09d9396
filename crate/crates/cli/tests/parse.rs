use cli::{parse_job, Command};
use proptest::prelude::*;

proptest! {
    #[test]
    fn degrees_round_trip(d in 0usize..10_000) {
        let job = parse_job(&["cli", "truncate", "--magma", "dual_numbers", "--degree", &d.to_string()])
            .unwrap();
        match job.command {
            Command::Truncate { degree, .. } => prop_assert_eq!(degree, d),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn negative_degrees_are_usage_errors(d in 1i64..10_000) {
        let e = parse_job(&["cli", "universal", "--magma", "dual_numbers", "--degree", &(-d).to_string()])
            .unwrap_err();
        prop_assert_eq!(e.code(), 2);
    }

    #[test]
    fn seeds_are_kept(seed in any::<u64>(), trials in 1usize..500) {
        let job = parse_job(&[
            "cli", "verify-lemmas", "--seed", &seed.to_string(), "--trials", &trials.to_string(),
        ])
        .unwrap();
        prop_assert_eq!(
            job.command,
            Command::VerifyLemmas { backend: "vect".into(), hopf: None, seed: Some(seed), trials }
        );
    }

    #[test]
    fn prime_fields_parse(i in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 101][i];
        let job = parse_job(&["cli", "catalog", "--field", &format!("fp:{p}")]).unwrap();
        prop_assert_eq!(job.common.field, exactla::FieldSpec::Prime(p));
    }
}
