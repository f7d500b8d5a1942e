use tfnorm_harness::report::{Format, Report};
use tfnorm_harness::{run_verification, VerifyConfig};

fn coarse() -> VerifyConfig {
    VerifyConfig { n: 256, ..Default::default() }
}

#[test]
fn reruns_are_byte_identical() {
    for id in ["cor6.1a", "cor6.1b", "lemma3.3"] {
        let a = run_verification(id, &coarse()).unwrap();
        let b = run_verification(id, &coarse()).unwrap();
        assert_eq!(a.emit(Format::Json), b.emit(Format::Json), "{id}");
        assert_eq!(a.emit(Format::Csv), b.emit(Format::Csv), "{id}");
    }
}

#[test]
fn json_schema_round_trip() {
    let r = run_verification("cor6.1b", &coarse()).unwrap();
    let text = r.to_json();
    let back = Report::from_json(&text).unwrap();
    assert_eq!(back.to_json(), text);
    let pos: Vec<usize> = ["\"suite\"", "\"location\"", "\"config\"", "\"groups\"", "\"rows\"", "\"pass\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    assert!(!text.contains("runtime"));
}

#[test]
fn csv_row_count_per_group() {
    let r = run_verification("rem6.2", &VerifyConfig { p2: Some(2.0), ..coarse() }).unwrap();
    assert_eq!(r.groups.len(), 1);
    assert_eq!(r.to_csv().lines().count() - 1, 24 + 1);
}

#[test]
fn spreads_at_least_one() {
    let r = run_verification("lemma3.3", &coarse()).unwrap();
    assert!(r.groups.iter().all(|g| g.spread >= 1.0));
    assert!(r.pass);
}

#[test]
fn seed_changes_random_members_only() {
    let a = run_verification("cor6.1a", &coarse()).unwrap();
    let b = run_verification("cor6.1a", &VerifyConfig { seed: 99, ..coarse() }).unwrap();
    for (x, y) in a.rows.iter().zip(&b.rows) {
        if x.function.starts_with("random") {
            assert_ne!(x.lhs, y.lhs);
        } else {
            assert_eq!(x.lhs, y.lhs);
        }
    }
}
