use unionshare::axioms::{
    characterization_expectations, check_axiom, check_instance, excluded_axiom, independence_suite, AxiomId,
    CheckConfig, Expectation, Instance, Outcome, TrialOutcome, Verdict, Witness, WitnessRecord,
};
use unionshare::game::scaled_dirac;
use unionshare::io::{GameFile, GameForm};
use unionshare::values::Theorem;
use unionshare::{Coalition, Partition, Rational64, ValueKind, ValueSpec, VariantId};

fn verify_quick() -> CheckConfig {
    CheckConfig {
        exhaustive: false,
        ..CheckConfig::verify()
    }
}

#[test]
fn union_values_match_their_profiles() {
    for kind in ValueKind::UNION_VALUES {
        for (axiom, expected) in characterization_expectations(kind) {
            let cfg = match expected {
                Expectation::Holds => verify_quick(),
                Expectation::Violated => CheckConfig::search(),
            };
            let r = check_axiom::<f64>(kind.into(), axiom, 300, 11, &cfg).unwrap();
            let want = match expected {
                Expectation::Holds => Outcome::HoldsOnSample,
                Expectation::Violated => Outcome::Violated,
            };
            assert_eq!(r.outcome, want, "{} {axiom}", kind.name());
        }
    }
}

#[test]
fn witnesses_survive_json_and_replay_exactly() {
    let cases = [
        (ValueKind::Esd3u, AxiomId::Sau),
        (ValueKind::Esd3u, AxiomId::Qgp),
        (ValueKind::Esd1u, AxiomId::Npp),
        (ValueKind::Esd1u, AxiomId::Dpp),
        (ValueKind::Esd2u, AxiomId::Dpp),
        (ValueKind::Esd2u, AxiomId::Dunpp),
    ];
    for (kind, axiom) in cases {
        let r = check_axiom::<Rational64>(kind.into(), axiom, 100, 5, &CheckConfig::search()).unwrap();
        let w = r.witness.expect("search finds a witness");
        assert!(w.instance.game.n() <= 4);
        let json = serde_json::to_string(&w.record()).unwrap();
        let record: WitnessRecord = serde_json::from_str(&json).unwrap();
        let back = Witness::<Rational64>::from_record(&record).unwrap();
        assert!(back.reproduces(), "{} {axiom}", kind.name());
        let TrialOutcome::Violated(v) = back.replay().unwrap() else {
            panic!("replay lost the violation")
        };
        assert_eq!(v, w.violation);
    }
}

#[test]
fn witness_games_export_as_game_files() {
    let r = check_axiom::<Rational64>(ValueKind::Esd3u.into(), AxiomId::Qgp, 100, 5, &CheckConfig::search()).unwrap();
    let w = r.witness.unwrap();
    let text = GameFile::explicit_json(&w.instance.game, &w.instance.partition);
    let file = GameFile::<Rational64>::from_json(&text).unwrap();
    let GameForm::Explicit { game, partition } = file.form else {
        panic!("explicit form expected")
    };
    let replay = check_instance(ValueKind::Esd3u.into(), AxiomId::Qgp, &Instance::new(game, partition)).unwrap();
    assert!(matches!(replay, TrialOutcome::Violated(_)));
}

#[test]
fn identical_seeds_give_identical_reports() {
    let value = ValueSpec::from(VariantId::new(Theorem::T2, 3).unwrap());
    let a = check_axiom::<f64>(value, AxiomId::Sau, 150, 99, &CheckConfig::verify()).unwrap();
    let b = check_axiom::<f64>(value, AxiomId::Sau, 150, 99, &CheckConfig::verify()).unwrap();
    assert_eq!(a.to_json_line(), b.to_json_line());
    let c = check_axiom::<f64>(value, AxiomId::Sau, 150, 100, &CheckConfig::verify()).unwrap();
    assert_eq!(c.seed, 100);
}

#[test]
fn exact_and_float_checks_agree_on_integer_tiers() {
    for axiom in [AxiomId::Swu, AxiomId::Sau, AxiomId::Npp] {
        let f = check_axiom::<f64>(ValueKind::Edu.into(), axiom, 50, 3, &CheckConfig::verify()).unwrap();
        let q = check_axiom::<Rational64>(ValueKind::Edu.into(), axiom, 50, 3, &CheckConfig::verify()).unwrap();
        assert_eq!(f.exhaustive_checked, q.exhaustive_checked, "{axiom}");
        assert_eq!(f.outcome, q.outcome);
    }
}

#[test]
fn basis_game_outsiders_get_nothing_under_edu() {
    let g = scaled_dirac(4, Coalition::from_members([0, 1]), 5.0).unwrap();
    let p = Partition::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
    let out = check_instance(ValueKind::Edu.into(), AxiomId::Npp, &Instance::new(g, p)).unwrap();
    // v(N) = 0, so every share is 0 and players 2 and 3 are nullifying
    assert_eq!(out, TrialOutcome::Holds);
}

#[test]
fn independence_of_the_third_equal_surplus_extension() {
    let entries = independence_suite::<f64>(Theorem::T4, 200, 1).unwrap();
    assert_eq!(entries.len(), 25);
    for e in &entries {
        let id = match e.report.value {
            ValueSpec::Variant(id) => id,
            other => panic!("unexpected value {other}"),
        };
        if e.report.axiom == excluded_axiom(id) {
            assert_eq!(e.verdict, Verdict::Confirmed, "{id} {}", e.report.axiom);
            assert!(e.report.witness.as_ref().unwrap().reproduces());
        } else {
            assert_ne!(e.verdict, Verdict::Contradicted, "{id} {}", e.report.axiom);
        }
    }
}
