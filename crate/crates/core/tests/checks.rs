use matchgame::verify::{run_check_spec, CHECKS, VerifyOptions};

#[test]
fn every_check_passes_on_its_default_corpus() {
    let opts = VerifyOptions { jobs: 4, ..Default::default() };
    for c in CHECKS {
        let r = run_check_spec(c.id, None, &opts).unwrap();
        assert!(r.applicable > 0, "{} applied to nothing", c.id);
        let first = r.violations().next().cloned();
        if let Some(v) = first {
            panic!("{}: {} ({} on {})", c.id, v.actual, v.expected, v.graph6);
        }
    }
}

#[test]
fn named_examples() {
    let opts = VerifyOptions::default();
    let r = run_check_spec("diff_le_one", Some("exhaustive:6"), &opts).unwrap();
    assert_eq!(r.summary(), "pass (156 classes)");
    assert!(run_check_spec("path_values", Some("family:path:1..28"), &opts).unwrap().passed());
    let paw = run_check_spec("realizable_pairs", Some("family:clique_pendant:2"), &opts).unwrap();
    assert_eq!(paw.records[0].actual, "(2, 1)");
}
