//! Command-level tests: exit codes, schemas and byte-determinism.

use serde_json::Value;
use symquot_cli::{run_command, EXIT_BOUND, EXIT_MALFORMED, EXIT_NO_CASE, EXIT_OK, EXIT_PRECONDITION};

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn classify_arc_pair_k5_is_case_a() {
    let (code, out, _) = run(&["classify", "--catalog", "arc-pair-k5", "--p", "3"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["case"], "a");
    assert_eq!(report["parameters"]["v"], 4);
    assert_eq!(report["fingerprints"]["quotient_two_arc_transitive"], true);
}

#[test]
fn analyze_leaves_case_null() {
    let (code, out, _) = run(&["analyze", "--catalog", "gamma2-k5"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["case"], Value::Null);
    assert_eq!(report["lambda"]["lambda"], 1);
}

#[test]
fn missing_input_file_is_malformed() {
    let (code, _, err) = run(&["classify", "--in", "/nonexistent/missing.json"]);
    assert_eq!(code, EXIT_MALFORMED);
    assert!(err.contains("missing.json"), "{err}");
}

#[test]
fn schema_violation_names_the_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triple.json");
    std::fs::write(
        &path,
        r#"{"graph": {"vertices": 4, "edges": [[0,1],[2,3]]},
           "group": {"degree": 4, "generators": []},
           "partition": [[0,1],[1,2,3]]}"#,
    )
    .unwrap();
    let (code, _, err) = run(&["classify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_MALFORMED);
    assert!(err.contains("vertex 1"), "{err}");
}

#[test]
fn orbits_of_k4_lists_two_self_paired_orbits() {
    let (code, out, _) = run(&["orbits", "--catalog", "k4"]);
    assert_eq!(code, EXIT_OK);
    let value: Value = serde_json::from_str(&out).unwrap();
    let orbits = value["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 2);
    for orbit in orbits {
        assert_eq!(orbit["size"], 24);
        assert_eq!(orbit["self_paired"], true);
    }
}

#[test]
fn orbits_accepts_a_graph_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.json");
    // C4 under its rotation: 4 three-arcs in each direction.
    std::fs::write(
        &path,
        r#"{"graph": {"vertices": 4, "edges": [[0,1],[1,2],[2,3],[0,3]]},
           "group": {"degree": 4, "generators": [[1,2,3,0]]}}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["orbits", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["orbits"].as_array().unwrap().len(), 2);
}

#[test]
fn wrong_mode_gives_no_case() {
    let (code, out, _) = run(&["classify", "--catalog", "gamma2-k5", "--mode", "p5"]);
    assert_eq!(code, EXIT_NO_CASE);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["case"], Value::Null);
}

#[test]
fn disconnected_quotient_violates_preconditions_but_reports() {
    use symquot::constructions;
    use symquot::graphs::Graph;
    use symquot::permgroup::{GeneratedGroup, Permutation};
    use symquot::quotient::SymmetricTriple;

    // Two disjoint copies of the arc-pair graph of K5, with the diagonal
    // induced S5 action plus the copy swap: a valid symmetric triple whose
    // quotient is two disjoint K5's.
    let k5 = Graph::complete(5);
    let s5 = GeneratedGroup::symmetric(5);
    let (unit, unit_partition) = constructions::arc_pair_graph(&k5).unwrap();
    let arc_action = constructions::induced_on_arcs(&k5, &s5).unwrap();
    let n = unit.vertex_count();
    let graph = Graph::disjoint_copies(&unit, 2);
    let mut partition: Vec<Vec<usize>> = unit_partition.clone();
    partition.extend(
        unit_partition
            .iter()
            .map(|b| b.iter().map(|&x| x + n).collect::<Vec<usize>>()),
    );
    let mut gens: Vec<Permutation> = arc_action
        .generators()
        .iter()
        .map(|g| {
            let images: Vec<usize> = (0..2 * n)
                .map(|x| if x < n { g.apply(x) } else { n + g.apply(x - n) })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    gens.push(Permutation::from_images((0..2 * n).map(|x| (x + n) % (2 * n)).collect()).unwrap());
    let group = GeneratedGroup::new(2 * n, gens).unwrap();
    let triple = SymmetricTriple::new(graph, group, partition).unwrap();
    assert!(triple.validate().is_valid());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("double.json");
    std::fs::write(
        &path,
        symquot::json::to_canonical_string(&symquot::json::encode_triple(&triple)),
    )
    .unwrap();
    let (code, out, _) = run(&["classify", "--in", path.to_str().unwrap(), "--p", "3"]);
    assert_eq!(code, EXIT_PRECONDITION);
    let report: Value = serde_json::from_str(&out).unwrap();
    let evidence = report["evidence"].as_array().unwrap();
    assert!(evidence.iter().any(|e| {
        e["name"] == "quotient connected" && e["passed"] == false
    }));
}

#[test]
fn non_prime_difference_is_a_precondition_violation() {
    let (code, _, err) = run(&["classify", "--catalog", "c6-antipodal"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(err.contains("odd prime"), "{err}");
}

#[test]
fn tiny_bound_exceeds() {
    let (code, _, err) = run(&["classify", "--catalog", "arc-pair-k7", "--bound", "10"]);
    assert_eq!(code, EXIT_BOUND);
    assert!(err.contains("bound"), "{err}");
}

#[test]
fn construct_writes_canonical_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triple.json");
    let (code, _, _) = run(&["construct", "--catalog", "chain-4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["graph"]["vertices"], 24);
    assert_eq!(value["partition"].as_array().unwrap().len(), 4);

    // Classifying the emitted file reproduces the catalog run.
    let (code2, out_file, _) = run(&["classify", "--in", path.to_str().unwrap()]);
    let (code3, out_key, _) = run(&["classify", "--catalog", "chain-4"]);
    assert_eq!((code2, code3), (EXIT_OK, EXIT_OK));
    assert_eq!(out_file, out_key);
}

#[test]
fn construct_affine_design_record() {
    let (code, out, _) = run(&["construct", "--catalog", "affine-3-1"]);
    assert_eq!(code, EXIT_OK);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["design"]["points"], 8);
    assert_eq!(value["design"]["blocks"].as_array().unwrap().len(), 14);
    assert_eq!(value["group"]["degree"], 8);
}

#[test]
fn unknown_key_is_malformed() {
    let (code, _, _) = run(&["construct", "--catalog", "nope"]);
    assert_eq!(code, EXIT_MALFORMED);
    let (code, _, _) = run(&["construct", "--catalog", "affine-9-1"]);
    assert_eq!(code, EXIT_MALFORMED);
}

#[test]
fn catalog_lists_keys() {
    let (code, out, _) = run(&["catalog"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("arc-pair-k5"));
    assert!(out.contains("fano"));
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        vec!["classify", "--catalog", "arc-pair-k5"],
        vec!["analyze", "--catalog", "gamma2-k5"],
        vec!["orbits", "--catalog", "k5"],
        vec!["construct", "--catalog", "affine-3-1"],
    ] {
        let (c1, o1, _) = run(&args);
        let (c2, o2, _) = run(&args);
        assert_eq!(c1, c2);
        assert_eq!(o1, o2, "{args:?}");
    }
}

#[test]
fn summary_goes_to_stderr() {
    let (code, out, err) = run(&["classify", "--catalog", "arc-pair-k5", "--summary"]);
    assert_eq!(code, EXIT_OK);
    assert!(serde_json::from_str::<Value>(&out).is_ok());
    assert!(err.contains("matched case: (a)"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Catalog keys"));
}
