use unionshare::io::{GameFile, GameForm, OutputTable, RenderMode};
use unionshare::{Rational64, ValueKind, ValueSpec};

const GAMES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/games");

fn load<T: unionshare::Scalar>(name: &str) -> GameFile<T> {
    let text = std::fs::read_to_string(format!("{GAMES}/{name}")).unwrap();
    GameFile::from_json(&text).unwrap()
}

#[test]
fn three_player_example() {
    let f = load::<Rational64>("three_players.json");
    let a = f.solve(ValueKind::Esd2u.into()).unwrap();
    let ints: Vec<Rational64> = [3, 5, 4].into_iter().map(Rational64::from_integer).collect();
    assert_eq!(a.shares(), ints.as_slice());
}

#[test]
fn elevator_summary_file_gives_two_step_dutch_rule() {
    let f = load::<f64>("elevator_dutch.json");
    assert!(matches!(f.form, GameForm::Summary(_)));
    let a = f.solve(ValueKind::Edu.into()).unwrap();
    let want = [40.0 / 3.0, 40.0 / 3.0, 40.0 / 3.0, 20.0, 20.0, 40.0];
    for (g, w) in a.shares().iter().zip(want) {
        assert!((g - w).abs() < 1e-12);
    }
}

#[test]
fn zero_game_gives_zero_everywhere() {
    let f = load::<f64>("zero.json");
    for kind in ValueKind::ALL {
        assert!(f.solve(kind.into()).unwrap().shares().iter().all(|x| *x == 0.0));
    }
}

#[test]
fn variants_run_on_explicit_files() {
    let f = load::<Rational64>("three_players.json");
    let t25: ValueSpec = "T2.5".parse().unwrap();
    let a = f.solve(t25).unwrap();
    assert_eq!(a.total(), Rational64::from_integer(12));
}

#[test]
fn json_tables_parse_back() {
    let mut t = OutputTable::new("player", vec![]);
    t.title = Some("empty".into());
    let back = OutputTable::from_json(&t.render(RenderMode::Json)).unwrap();
    assert_eq!(back, t);
}
