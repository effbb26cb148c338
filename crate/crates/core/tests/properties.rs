mod common;

use common::*;
use proptest::prelude::*;
use unionshare::game::{dirac_compose, dirac_decompose, summary_from_explicit};
use unionshare::{ExactGame, ExplicitGame, Partition, Rational64, ValueKind};

fn exact_game(n: usize) -> impl Strategy<Value = ExactGame> {
    prop::collection::vec(-20i64..=20, 1 << n).prop_map(move |mut w| {
        w[0] = 0;
        ExplicitGame::new(n, w.into_iter().map(Rational64::from_integer).collect()).unwrap()
    })
}

fn float_game(n: usize) -> impl Strategy<Value = ExplicitGame<f64>> {
    prop::collection::vec(-1e3f64..1e3, 1 << n).prop_map(move |mut w| {
        w[0] = 0.0;
        ExplicitGame::new(n, w).unwrap()
    })
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels))
}

fn exact_instance() -> impl Strategy<Value = (ExactGame, Partition)> {
    (1usize..=5).prop_flat_map(|n| (exact_game(n), partition(n)))
}

fn float_instance() -> impl Strategy<Value = (ExplicitGame<f64>, Partition)> {
    (1usize..=5).prop_flat_map(|n| (float_game(n), partition(n)))
}

fn check(r: Check) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #[test]
    fn values_are_efficient((g, p) in float_instance()) {
        let s = summary_from_explicit(&g, &p).unwrap();
        for kind in ValueKind::ALL {
            prop_assert!(kind.compute(&s).is_efficient(g.total()), "{}", kind.name());
        }
    }

    #[test]
    fn explicit_and_summary_agree((g, p) in exact_instance()) {
        check(explicit_vs_summary(&g, &p))?;
    }

    #[test]
    fn coalitional_reduction_holds((g, _) in exact_instance()) {
        check(coalitional_reduction(&g))?;
    }

    #[test]
    fn one_union_collapse_holds((g, _) in exact_instance()) {
        check(one_union_collapse(&g))?;
    }

    #[test]
    fn decompositions_hold((g, p) in float_instance()) {
        check(esd1u_decomposition(&g, &p))?;
        check(esd2u_decomposition(&g, &p))?;
        check(esd3u_decomposition(&g, &p))?;
    }

    #[test]
    fn decompositions_hold_exactly((g, p) in exact_instance()) {
        check(esd1u_decomposition(&g, &p))?;
        check(esd2u_decomposition(&g, &p))?;
        check(esd3u_decomposition(&g, &p))?;
    }

    #[test]
    fn values_are_linear(
        (v, w, p) in (1usize..=5).prop_flat_map(|n| (exact_game(n), exact_game(n), partition(n))),
        c in -5i64..=5,
    ) {
        check(linearity(&v, &w, &Rational64::from_integer(c), &p))?;
    }

    #[test]
    fn esd1u_equals_esd2u_with_equal_singletons_per_union((g, p) in exact_instance()) {
        let mut s = summary_from_explicit(&g, &p).unwrap();
        let singleton: Vec<Rational64> = (0..g.n()).map(|i| *g.singleton(p.min_member(p.union_of(i)))).collect();
        s = unionshare::GameSummary::new(singleton, p.clone(), s.union_worths().to_vec(), *s.total()).unwrap();
        prop_assert_eq!(ValueKind::Esd1u.compute(&s), ValueKind::Esd2u.compute(&s));
    }

    #[test]
    fn dirac_round_trip((g, _) in exact_instance()) {
        let parts = dirac_decompose(&g);
        prop_assert_eq!(dirac_compose(g.n(), &parts).unwrap(), g);
    }

    #[test]
    fn union_totals_of_quotient_values_match((g, p) in exact_instance()) {
        // ESD1U and ESD2U give every union its ESD share in the quotient game
        let q = unionshare::game::quotient_game(&g, &p).unwrap();
        let esd_q = value(ValueKind::Esd, &q, &Partition::singletons(p.m()));
        for kind in [ValueKind::Esd1u, ValueKind::Esd2u] {
            prop_assert_eq!(value(kind, &g, &p).union_totals(&p), esd_q.shares().to_vec());
        }
    }
}
