use duskin_cli::{
    cmd_bijection, cmd_enumerate, cmd_freecell_list, cmd_reconstruct, cmd_theta2, cmd_verify, Budget, CategorySpec,
    EnumerateFlags, Status, VerifyArgs,
};

const COUNT: EnumerateFlags = EnumerateFlags { nondegenerate: false, count_only: true };

fn counted(spec: &str, dim: usize, flags: EnumerateFlags) -> String {
    let mut out = Vec::new();
    let r = cmd_enumerate(spec, dim, flags, Budget::default(), &mut out);
    assert_eq!(r.status, Status::Ok, "{:?}", r.diagnostics);
    String::from_utf8(out).unwrap()
}

#[test]
fn specs_parse() {
    assert_eq!(CategorySpec::parse("ordinal:-1").unwrap(), CategorySpec::Ordinal(-1));
    assert_eq!(CategorySpec::parse("square").unwrap(), CategorySpec::Square);
    assert_eq!(CategorySpec::parse("theta:[3|2,0,1]").unwrap(), CategorySpec::Theta(vec![2, 0, 1]));
    assert!(CategorySpec::parse("ordinal:-2").is_err());
    assert!(CategorySpec::parse("theta:[2|1]").is_err());
    assert!(CategorySpec::parse("cube").is_err());
}

#[test]
fn counts() {
    assert_eq!(counted("ordinal:0", 3, COUNT), "5\n");
    assert_eq!(counted("ordinal:1", 4, COUNT), "32\n");
    assert_eq!(counted("theta:[2|1,1]", 2, COUNT), "42\n");
    let nondegenerate = EnumerateFlags { nondegenerate: true, count_only: true };
    assert_eq!(counted("ordinal:1", 5, nondegenerate), "2\n");
    assert_eq!(counted("theta:[1|0]", 1, nondegenerate), "1\n");
}

#[test]
fn streamed_lines_match_the_count() {
    let lines = counted("square", 2, EnumerateFlags::default());
    let count = counted("square", 2, COUNT);
    assert_eq!(lines.lines().count().to_string() + "\n", count);
    assert!(lines.lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
}

#[test]
fn theta2_widths_agree_with_spec() {
    let mut a = Vec::new();
    let mut b = Vec::new();
    cmd_theta2(&[2, 0, 1], 2, COUNT, Budget::default(), &mut a);
    cmd_enumerate("theta:[3|2,0,1]", 2, COUNT, Budget::default(), &mut b);
    assert_eq!(a, b);
}

#[test]
fn budget_is_explicit() {
    let mut out = Vec::new();
    let r = cmd_enumerate("ordinal:0", 11, COUNT, Budget::default(), &mut out);
    assert_eq!(r.status, Status::Error);
    assert!(out.is_empty());
    let r = cmd_enumerate("ordinal:0", 11, COUNT, Budget::with_max_dim(11), &mut out);
    assert!(r.is_ok());
    let args = VerifyArgs { cat: Some("ordinal:1".into()), dim: Some(5), ..Default::default() };
    assert_eq!(cmd_verify("phi-oracle", &args, Budget::default()).status, Status::Error);
}

#[test]
fn unknown_suite_is_an_error() {
    let r = cmd_verify("everything", &VerifyArgs::default(), Budget::default());
    assert_eq!(r.status, Status::Error);
    assert_eq!(r.exit_code(), 2);
}

#[test]
fn bijection_counts() {
    let r = cmd_bijection(6, None, true);
    assert!(r.is_ok());
    assert_eq!(r.payload["per_k"], serde_json::json!([1, 5, 10, 10, 5, 1]));
    assert_eq!(cmd_bijection(4, Some(4), false).status, Status::Error);
}

#[test]
fn reconstruct_reports_inconsistent_paths() {
    let good = include_str!("../../../docs/examples/paths.json");
    let r = cmd_reconstruct(good);
    assert!(r.is_ok(), "{:?}", r.diagnostics);
    assert_eq!(r.payload["display"], "0 1 / 1 1");
    let bad = good.replacen("[0, 1, 1]", "[1, 1, 1]", 1);
    let r = cmd_reconstruct(&bad);
    assert_eq!(r.status, Status::Violation);
    assert!(!r.diagnostics.is_empty());
}

#[test]
fn free_cell_listing_names_both_simplices() {
    let r = cmd_freecell_list(6, Budget::default());
    assert!(r.is_ok());
    let names: Vec<_> = r.payload["simplices"].as_array().unwrap().iter().map(|s| s["name"].clone()).collect();
    assert_eq!(names.len(), 2);
    assert!(names.contains(&serde_json::json!("σ6")) && names.contains(&serde_json::json!("σ'6")));
}
