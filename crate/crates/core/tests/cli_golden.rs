//! Golden tests for the command-line surface: byte-exact documents,
//! deterministic output and the exit-code contract.

use std::io::Write as _;
use std::process::Command;

use tempfile::NamedTempFile;

const DIAG_SEG_DOC: &str = "4 4\n1110\n1100\n1100\n1000\n";
const BLOCK_DOC: &str = "4 4\n0110\n0110\n0000\n0000\n";
const BLOCK_PLUS_CORNER_DOC: &str = "4 4\n0110\n0110\n0000\n0010\n";
const EDGE_SINGLETON_DOC: &str = "3 3\n000\n100\n000\n";
const DIAG_DOC: &str = "2 2\n01\n10\n";

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gridthresh").chain(args.iter().copied());
    let code = gridthresh::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn grid_file(contents: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file.flush().unwrap();
    file
}

#[test]
fn eval_single_segment_is_bit_exact() {
    let (code, out, err) = run_cli(&["eval", "--grid", "4", "4", "--seg", "1", "1", "2", "2"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, DIAG_SEG_DOC, ""));
}

#[test]
fn eval_conjunction_is_bit_exact() {
    let (code, out, _) = run_cli(&[
        "eval", "--grid", "4", "4", "--seg", "2", "2", "3", "3", "--seg", "1", "2", "2", "0",
    ]);
    assert_eq!((code, out.as_str()), (0, BLOCK_DOC));
}

#[test]
fn eval_rejects_bad_segments() {
    // Non-prime segment: precondition violation.
    let (code, _, err) = run_cli(&["eval", "--grid", "4", "4", "--seg", "0", "0", "2", "2"]);
    assert_eq!(code, 3, "{err}");
    // Endpoint outside the grid: precondition violation.
    let (code, _, _) = run_cli(&["eval", "--grid", "2", "2", "--seg", "0", "0", "0", "3"]);
    assert_eq!(code, 3);
    // Bad dimension values: usage.
    let (code, _, _) = run_cli(&["eval", "--grid", "0", "4", "--seg", "0", "0", "1", "0"]);
    assert_eq!(code, 2);
    // Three segments: usage.
    let (code, _, _) = run_cli(&[
        "eval", "--grid", "4", "4", "--seg", "0", "0", "1", "0", "--seg", "0", "1", "1", "1",
        "--seg", "1", "1", "2", "2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn classify_names_every_class() {
    for (doc, expected) in [
        (BLOCK_DOC, "Proper2Threshold\n"),
        (BLOCK_PLUS_CORNER_DOC, "NotTwoThreshold\n"),
        (DIAG_SEG_DOC, "Threshold\n"),
        ("2 2\n00\n00\n", "ConstantZero\n"),
        ("2 2\n11\n11\n", "ConstantOne\n"),
    ] {
        let file = grid_file(doc);
        let (code, out, _) = run_cli(&["classify", "--in", file.path().to_str().unwrap()]);
        assert_eq!((code, out.as_str()), (0, expected), "doc {doc:?}");
    }
}

#[test]
fn segment_recovers_the_carrier() {
    let file = grid_file(DIAG_SEG_DOC);
    let (code, out, _) = run_cli(&["segment", "--in", file.path().to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "A=(1,1) B=(2,2)\n"));

    let diag = grid_file(DIAG_DOC);
    let (code, _, err) = run_cli(&["segment", "--in", diag.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("not threshold"), "{err}");
}

#[test]
fn pairs_document_is_bit_exact() {
    let file = grid_file(EDGE_SINGLETON_DOC);
    let (code, out, _) = run_cli(&["pairs", "--in", file.path().to_str().unwrap(), "--all"]);
    assert_eq!(code, 0);
    let expected = concat!(
        "{\n",
        "  \"m\": 3,\n",
        "  \"n\": 3,\n",
        "  \"pairs\": [\n",
        "    {\n",
        "      \"A\": [\n        0,\n        1\n      ],\n",
        "      \"B\": [\n        0,\n        0\n      ],\n",
        "      \"C\": [\n        0,\n        1\n      ],\n",
        "      \"D\": [\n        0,\n        2\n      ]\n",
        "    }\n",
        "  ]\n",
        "}\n",
    );
    assert_eq!(out, expected);

    // Without --all only the first pair is listed; for this function the
    // pair is unique, so the documents agree.
    let (_, first_only, _) = run_cli(&["pairs", "--in", file.path().to_str().unwrap()]);
    assert_eq!(first_only, out);
}

#[test]
fn canonical_matches_the_exhaustive_first_pair() {
    let file = grid_file(DIAG_DOC);
    let (code, canonical, _) = run_cli(&["canonical", "--in", file.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, all, _) = run_cli(&["pairs", "--in", file.path().to_str().unwrap(), "--all"]);
    assert_eq!(canonical, all);
    let doc: gridthresh::format::PairDocument = serde_json::from_str(&canonical).unwrap();
    assert_eq!(doc.pairs.len(), 1);
    assert_eq!(
        (
            doc.pairs[0].a,
            doc.pairs[0].b,
            doc.pairs[0].c,
            doc.pairs[0].d
        ),
        ([0, 0], [1, 0], [1, 1], [0, 1])
    );
}

#[test]
fn essential_lists_sorted_points() {
    let file = grid_file(BLOCK_DOC);
    let (code, out, _) = run_cli(&[
        "essential",
        "--in",
        file.path().to_str().unwrap(),
        "--class",
        "2threshold",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "(0,3)\n(1,1)\n(1,2)\n(2,1)\n(2,2)\n(3,3)\n");

    let (code, out, _) = run_cli(&[
        "essential",
        "--in",
        file.path().to_str().unwrap(),
        "--class",
        "threshold",
    ]);
    // The conjunction is not threshold, so the threshold-class query is a
    // precondition violation.
    assert_eq!((code, out.as_str()), (3, ""));
}

#[test]
fn enumerate_counts_and_listings() {
    let (code, out, _) = run_cli(&[
        "enumerate",
        "--grid",
        "2",
        "2",
        "--class",
        "threshold",
        "--count-only",
    ]);
    assert_eq!((code, out.as_str()), (0, "12\n"));

    let (code, out, _) = run_cli(&[
        "enumerate",
        "--grid",
        "2",
        "2",
        "--class",
        "2threshold",
        "--count-only",
    ]);
    assert_eq!((code, out.as_str()), (0, "16\n"));

    let (code, out, _) = run_cli(&["enumerate", "--grid", "1", "2", "--class", "threshold"]);
    assert_eq!(
        (code, out.as_str()),
        (0, "A=(0,0) B=(0,1)\nA=(0,1) B=(0,0)\n")
    );

    // Sorted by truth table, lowest bit (the point (0,0)) most significant.
    let (code, out, _) = run_cli(&["enumerate", "--grid", "1", "2", "--class", "2threshold"]);
    assert_eq!(
        (code, out.as_str()),
        (0, "1 2\n0\n0\n1 2\n1\n0\n1 2\n0\n1\n1 2\n1\n1\n")
    );

    // Guard violations surface as precondition errors.
    let (code, _, _) = run_cli(&[
        "enumerate",
        "--grid",
        "80",
        "80",
        "--class",
        "threshold",
        "--count-only",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn count_singleton_golden() {
    let (code, out, _) = run_cli(&["count-singleton", "--grid", "9", "7", "--point", "4", "3"]);
    assert_eq!((code, out.as_str()), (0, "20\n"));

    let (code, _, err) = run_cli(&["count-singleton", "--grid", "3", "3", "--point", "0", "1"]);
    assert_eq!(code, 3);
    assert!(err.contains("boundary"), "{err}");

    let (code, _, _) = run_cli(&["count-singleton", "--grid", "3", "3", "--point", "-1", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = run_cli(&["verify", "--property", "thm4_iff", "--grid", "3", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("property: thm4_iff\ngrid: 3 3\ncases checked: "));
    assert!(out.ends_with("failures: 0\n"), "{out}");

    let (code, _, err) = run_cli(&["verify", "--property", "no_such", "--grid", "3", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("known properties"), "{err}");

    // A sweep whose guard rejects the domain is a precondition violation.
    let (code, _, _) = run_cli(&[
        "verify",
        "--property",
        "hull_idempotence",
        "--grid",
        "10",
        "10",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn malformed_documents_are_usage_errors() {
    for doc in [
        "2 2\n01\n1x\n",
        "2\n01\n10\n",
        "2 2\n011\n10\n",
        "2 2\n01\n",
    ] {
        let file = grid_file(doc);
        let (code, _, err) = run_cli(&["classify", "--in", file.path().to_str().unwrap()]);
        assert_eq!(code, 2, "doc {doc:?}: {err}");
    }
    let (code, _, _) = run_cli(&["classify", "--in", "/nonexistent/grid.txt"]);
    assert_eq!(code, 2);
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let file = grid_file(BLOCK_DOC);
    let args = ["pairs", "--in", file.path().to_str().unwrap(), "--all"];
    let first = run_cli(&args);
    let second = run_cli(&args);
    assert_eq!(first, second);
}

#[test]
fn spawned_binary_honors_the_contract() {
    let exe = env!("CARGO_BIN_EXE_gridthresh");
    let output = Command::new(exe)
        .args(["eval", "--grid", "4", "4", "--seg", "1", "1", "2", "2"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), DIAG_SEG_DOC);

    let output = Command::new(exe).args(["eval"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
    assert!(!output.stderr.is_empty());

    let output = Command::new(exe).args(["--help"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
}
