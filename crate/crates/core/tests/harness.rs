use std::sync::Arc;

use semimod::harness::{
    self, builtin_catalog, Config, HarnessError, Input, Status, TheoremId, Witness,
};
use semimod::{Semimodule, Semiring, Subset};

#[test]
fn every_counterexample_replays() {
    let cat = builtin_catalog();
    let cfg = Config::default();
    let verdicts = harness::run_catalog(&TheoremId::ALL, &cat, &cfg);
    let inputs = cat.inputs();
    let mut replayed = 0;
    for v in verdicts.iter().filter(|v| v.status == Status::Counterexample) {
        let input = inputs.iter().find(|i| i.name() == v.structure).unwrap();
        let w = v.witness.as_ref().unwrap();
        assert!(harness::replay(v.theorem, v.variant.as_deref(), input, w, &cfg).unwrap(), "{}", v.label());
        replayed += 1;
    }
    assert!(replayed > 0);
    for v in verdicts.iter().filter(|v| v.status != Status::Counterexample) {
        assert!(v.witness.is_none(), "{}", v.label());
    }
}

#[test]
fn only_the_literal_socle_reading_fails_on_the_catalog() {
    let verdicts = harness::run_catalog(&TheoremId::ALL, &builtin_catalog(), &Config::default());
    let refuted: Vec<TheoremId> = verdicts
        .iter()
        .filter(|v| v.status == Status::Counterexample)
        .map(|v| v.theorem)
        .collect();
    assert!(refuted.iter().all(|&t| t == TheoremId::SocleInsideSecond), "{refuted:?}");
}

#[test]
fn catalog_run_order_matches_sequential_checks() {
    let cat = builtin_catalog();
    let cfg = Config::default();
    let ids = [TheoremId::SecondInsideSum, TheoremId::SecondAnnihilatorPrime];
    let parallel = harness::run_catalog(&ids, &cat, &cfg);
    let mut sequential = Vec::new();
    for id in ids {
        for input in cat.inputs().iter().filter(|i| i.arity() == harness::arity(id)) {
            sequential.extend(harness::check(id, input, &cfg).unwrap());
        }
    }
    let key = |v: &harness::Verdict| (v.label(), v.structure.clone(), v.status, v.instances);
    assert_eq!(parallel.iter().map(key).collect::<Vec<_>>(), sequential.iter().map(key).collect::<Vec<_>>());
}

#[test]
fn non_failing_and_malformed_witnesses() {
    let z6 = Arc::new(Semimodule::regular(Arc::new(Semiring::integers_mod(6))));
    let input = Input::module(Arc::clone(&z6));
    let cfg = Config::default();
    let holds = Witness::new().family("socles", &[Subset::from_indices(6, [0, 3])]);
    assert_eq!(harness::replay(TheoremId::SocleInsideSecond, None, &input, &holds, &cfg), Ok(false));
    let out_of_range = Witness::new().set("N", &Subset::from_indices(9, [7]));
    assert!(matches!(
        harness::replay(TheoremId::SecondCharacterization, None, &input, &out_of_range, &cfg),
        Err(HarnessError::BadWitness(_))
    ));
    let missing = Witness::new();
    assert!(matches!(
        harness::replay(TheoremId::MinimalIsSecond, None, &input, &missing, &cfg),
        Err(HarnessError::BadWitness(_))
    ));
    assert!(matches!(
        harness::replay(TheoremId::SecondInProduct, Some("nope"), &input, &missing, &cfg),
        Err(HarnessError::UnknownVariant(..))
    ));
    assert!(matches!(
        harness::check(TheoremId::PrimeProductIdeals, &input, &cfg),
        Err(HarnessError::ArityMismatch { .. })
    ));
}

#[test]
fn non_homomorphism_witness_is_rejected() {
    let z4 = Arc::new(Semimodule::regular(Arc::new(Semiring::integers_mod(4))));
    let input = Input::ModulePair { source: Arc::clone(&z4), target: Arc::clone(&z4) };
    let w = Witness::new().map("f", &[0, 2, 1, 3]).set("S", &z4.full());
    let r = harness::replay(TheoremId::ImageOfSecond, Some("S-subtractive"), &input, &w, &Config::default());
    assert!(matches!(r, Err(HarnessError::BadWitness(_))), "{r:?}");
}

#[test]
fn strong_prime_hypotheses_are_unmet_on_the_tropical_semiring() {
    let t2 = Arc::new(Semimodule::regular(Arc::new(Semiring::truncated_tropical(2))));
    let v = harness::check(TheoremId::StrongPrimeColonSecond, &Input::module(t2), &Config::default()).unwrap();
    assert_eq!(v[0].status, Status::HypothesesUnmet);
}

#[test]
fn theorem_ids_parse_and_print() {
    for &id in TheoremId::ALL {
        assert_eq!(id.as_str().parse::<TheoremId>(), Ok(id));
        assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
    }
    assert!(matches!("P99".parse::<TheoremId>(), Err(HarnessError::UnknownTheorem(_))));
}
