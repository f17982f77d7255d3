//! End-to-end tests of the installed binary: exit codes, file outputs, and
//! the witness report.

use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sigmastar"))
}

#[test]
fn verify_writes_identical_reports_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args([
                "verify",
                "--max-order",
                "4",
                "--rings",
                "z4,z8",
                "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    let a = fs::read(&out1).unwrap();
    let b = fs::read(&out2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "byte-identical reports");
}

#[test]
fn parallel_and_serial_reports_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let serial = dir.path().join("serial.json");
    let parallel = dir.path().join("parallel.json");
    for (out, jobs) in [(&serial, "1"), (&parallel, "4")] {
        let status = bin()
            .args([
                "classify",
                "--max-order",
                "8",
                "--rings",
                "z4",
                "--jobs",
                jobs,
                "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(fs::read(&serial).unwrap(), fs::read(&parallel).unwrap());
}

#[test]
fn csv_output_has_dotted_headers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let status = bin()
        .args([
            "classify",
            "--max-order",
            "4",
            "--rings",
            "z4",
            "--format",
            "csv",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let header = text.lines().next().unwrap();
    assert!(header.contains("ring_conditions.ii"));
    assert!(header.contains("witness.product"));
    assert!(text.lines().count() > 1);
}

#[test]
fn usage_errors_exit_one() {
    let status = bin()
        .args(["verify", "--rings", "z4", "--format", "yaml", "--max-order", "4"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));

    // no group source
    let status = bin().args(["verify", "--rings", "z4"]).status().unwrap();
    assert_eq!(status.code(), Some(1));

    // unknown ring token
    let status = bin()
        .args(["verify", "--max-order", "4", "--rings", "q7"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn witness_reports_the_worked_examples() {
    // C2 over z4 with the identity involution and sigma(g) = -1
    let output = bin()
        .args([
            "witness", "--group", "C2", "--ring", "z4", "--involution", "0,1",
            "--orientation", "1,3",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("generators 2*S1: 2*1"), "{text}");
    assert!(text.contains("generators S2:   2*a"), "{text}");
    assert!(text.contains("direct verdict: anticommutes"), "{text}");
    assert!(text.contains("structure: IA"), "{text}");

    // C4 over z4 with inversion: IB1 with s = a2
    let output = bin()
        .args([
            "witness", "--group", "C4", "--ring", "z4", "--involution", "0,3,2,1",
            "--orientation", "1,3,1,3",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("structure: IB1 (s = a2)"), "{text}");
    assert!(text.contains("direct verdict: anticommutes"), "{text}");

    // C4 over z8 with inversion: fails, witness printed
    let output = bin()
        .args([
            "witness", "--group", "C4", "--ring", "z8", "--involution", "0,3,2,1",
            "--orientation", "1,3,1,3",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("direct verdict: FAILS"), "{text}");
    assert!(text.contains("agreement: true"), "{text}");
}

#[test]
fn witness_rejects_unknown_names_and_incompatible_pairs() {
    let output = bin()
        .args([
            "witness", "--group", "S3", "--ring", "z4", "--involution", "0",
            "--orientation", "0",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("unknown catalog name"), "{err}");

    // C4 over dual-z4: identity involution with an order-4 unit is
    // incompatible (the one of dual-z4 sits at index 4 in pair encoding)
    let output = bin()
        .args([
            "witness", "--group", "C4", "--ring", "dual-z4", "--involution",
            "0,1,2,3", "--orientation", "4,5,6,7",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("not compatible"), "{err}");
}

#[test]
fn group_files_are_swept() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.json");
    fs::write(
        &path,
        r#"{"order": 4,
            "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
            "names": ["1", "x", "y", "xy"]}"#,
    )
    .unwrap();
    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--group-file",
            path.to_str().unwrap(),
            "--rings",
            "z4",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"group\": \"klein\""), "{text}");

    // malformed table: not a latin square
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,2,2]]}"#,
    )
    .unwrap();
    let status = bin()
        .args(["verify", "--group-file", bad.to_str().unwrap(), "--rings", "z4"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn trivial_sigma_flag_records_without_classifying() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--max-order",
            "2",
            "--rings",
            "z4",
            "--include-trivial-sigma",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("trivial-sigma"), "{text}");
    // a trivial-sigma record carries the direct verdict but no predicate
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    let trivial: Vec<&serde_json::Value> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "trivial-sigma")
        .collect();
    assert!(!trivial.is_empty());
    for r in trivial {
        assert!(r["verdict"].is_boolean());
        assert!(r.get("predicate").is_none());
        assert!(r.get("agreement").is_none());
    }
}

#[test]
fn ring_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.json");
    fs::write(
        &path,
        r#"{"size": 3,
            "add": [[0,1,2],[1,2,0],[2,0,1]],
            "mul": [[0,0,0],[0,1,2],[0,2,1]]}"#,
    )
    .unwrap();
    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--max-order",
            "4",
            "--rings",
            path.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    // characteristic 3: instances exist (units {1, 2}) and none hold
    assert!(report["summary"]["instances"].as_u64().unwrap() > 0);
    assert_eq!(report["summary"]["holds"].as_u64().unwrap(), 0);
    assert_eq!(report["summary"]["mismatches"].as_u64().unwrap(), 0);
}

#[test]
fn witness_accepts_enumeration_indices() {
    // for C4 the sorted enumeration puts the identity first, inversion second
    let output = bin()
        .args([
            "witness", "--group", "C4", "--ring", "z4", "--involution", "1",
            "--orientation", "0",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("involution images: [0, 3, 2, 1]"), "{text}");
    assert!(text.contains("structure: IB1"), "{text}");

    let output = bin()
        .args([
            "witness", "--group", "C4", "--ring", "z4", "--involution", "7",
            "--orientation", "0",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1), "index out of range");
}

#[test]
fn table_file_order_cap_is_enforced_and_liftable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c17.json");
    let n = 17;
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| ((i + j) % n).to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    fs::write(
        &path,
        format!("{{\"order\": {n}, \"table\": [{}]}}", rows.join(",")),
    )
    .unwrap();

    let status = bin()
        .args(["verify", "--group-file", path.to_str().unwrap(), "--rings", "z4"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1), "order 17 exceeds the default cap");

    let status = bin()
        .args([
            "verify",
            "--group-file",
            path.to_str().unwrap(),
            "--rings",
            "z4",
            "--allow-order-32",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}

#[test]
fn dihedral_three_file_and_wide_ring_cross_verify() {
    // D3 has a derived subgroup of odd order, a regime where the shift
    // structure can never hold; the sweep must still agree everywhere
    // (exit 2 would signal a mismatch). z8xz4 exercises a 32-element ring.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d3.json");
    let n = 3usize;
    let mut table = vec![vec![0usize; 2 * n]; 2 * n];
    for a in 0..n {
        for b in 0..2 {
            for c in 0..n {
                for d in 0..2 {
                    let (ea, eb) = if b == 0 {
                        ((a + c) % n, d)
                    } else {
                        ((a + n - c) % n, (1 + d) % 2)
                    };
                    table[a + n * b][c + n * d] = ea + n * eb;
                }
            }
        }
    }
    let rows: Vec<String> = table
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    fs::write(
        &path,
        format!("{{\"order\": 6, \"table\": [{}]}}", rows.join(",")),
    )
    .unwrap();

    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--group-file",
            path.to_str().unwrap(),
            "--max-order",
            "6",
            "--rings",
            "z4,z8xz4",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["summary"]["mismatches"].as_u64().unwrap(), 0);
    let d3_records: Vec<&serde_json::Value> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["group"] == "d3")
        .collect();
    assert!(!d3_records.is_empty());
    assert!(d3_records.iter().all(|r| r["verdict"] == false));
}

#[test]
fn char_two_rings_are_recorded_not_evaluated() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--max-order",
            "4",
            "--rings",
            "dual-z2",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0), "rejection is not a mismatch");
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("rejected-char-2"), "{text}");
    assert!(!text.contains("\"verdict\""), "{text}");
}
