use std::path::Path;
use std::process::Command;

use sodkit::algebra::{quaternions, AlgebraJson};
use sodkit::collection::CollectionReport;
use sodkit::verify::Verdict;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["sodkit"];
    argv.extend_from_slice(args);
    let code = sodkit::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn collection_json_has_complex_rank_five() {
    let (code, out, err) = run(&[
        "collection",
        "--degree",
        "2",
        "--class",
        "quaternion",
        "--n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(err.is_empty());
    let rep: CollectionReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.rank_complex, 5);
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", out);
}

#[test]
fn collection_split_n1_table() {
    let (code, out, _) = run(&["collection", "--degree", "3", "--class", "split", "--n", "1"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).take_while(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.split_whitespace().nth(5) == Some("R")), "{out}");
}

#[test]
fn collection_invalid_inputs_exit_2() {
    assert_eq!(
        run(&["collection", "--degree", "3", "--class", "quaternion", "--n", "1"]).0,
        2
    );
    assert_eq!(
        run(&["collection", "--degree", "2", "--class", "split", "--n", "4"]).0,
        2
    );
    assert_eq!(
        run(&["collection", "--degree", "2", "--class", "octonion", "--n", "1"]).0,
        2
    );
}

#[test]
fn json_output_is_deterministic_and_job_independent() {
    let args = [
        "collection",
        "--degree",
        "4",
        "--class",
        "quaternion",
        "--n",
        "2",
        "--format",
        "json",
    ];
    let a = run(&args).1;
    let b = run(&args).1;
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "2"]);
    let c = run(&with_jobs).1;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rdim.json");
    let (code, out, _) = run(&[
        "rdim",
        "--degree",
        "2",
        "--class",
        "quaternion",
        "--n",
        "2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["rdim"], 1);
}

#[test]
fn motive_compare_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.json", r#"{"modulus":2,"classes":[1]}"#);
    let z = write(dir.path(), "z.json", r#"{"modulus":2,"classes":[0]}"#);
    let hz = write(dir.path(), "hz.json", r#"{"modulus":2,"classes":[1,0]}"#);
    let zh = write(dir.path(), "zh.json", r#"{"modulus":2,"classes":[0,1]}"#);
    let bad = write(dir.path(), "bad.json", "{");
    let out_of_range = write(dir.path(), "oor.json", r#"{"modulus":2,"classes":[2]}"#);

    let (code, _, err) = run(&["motive", "compare", &h, &z]);
    assert_eq!(code, 1);
    assert!(err.contains("power p=1 multisets differ"), "{err}");
    assert_eq!(run(&["motive", "compare", &hz, &zh]).0, 0);
    assert_eq!(run(&["motive", "compare", &bad, &z]).0, 2);
    assert_eq!(run(&["motive", "compare", &out_of_range, &z]).0, 2);
}

#[test]
fn rational_point_chain() {
    let (code, out, _) = run(&[
        "rational-point",
        "--degree",
        "4",
        "--class",
        "quaternion",
        "--sym-power",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("does not divide"), "{out}");
    assert_eq!(
        run(&[
            "rational-point",
            "--degree",
            "4",
            "--class",
            "quaternion",
            "--sym-power",
            "2"
        ])
        .0,
        0
    );
    assert_eq!(
        run(&[
            "rational-point",
            "--degree",
            "4",
            "--class",
            "split",
            "--sym-power",
            "3"
        ])
        .0,
        0
    );
    assert_eq!(
        run(&[
            "rational-point",
            "--degree",
            "4",
            "--class",
            "split",
            "--sym-power",
            "4"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&[
            "rational-point",
            "--degree",
            "4",
            "--class",
            "split",
            "--sym-power",
            "0"
        ])
        .0,
        2
    );
}

#[test]
fn verify_default_sweep() {
    let (code, out, err) = run(&["verify", "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let verdicts: Vec<Verdict> = serde_json::from_str(&out).unwrap();
    assert!(verdicts.len() >= 20);
    assert!(verdicts.iter().all(|v| v.is_self_consistent()));
    assert!(err.contains("theorem-level"), "summary goes to stderr in json mode");
}

#[test]
fn verify_subset_and_forced_failure() {
    assert_eq!(run(&["verify", "--max-n", "1"]).0, 0);
    let (code, out, _) = run(&["verify", "--max-n", "1", "--corrupt-axiom", "bs-point-split"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    assert_eq!(run(&["verify", "--corrupt-axiom", "no-such-axiom"]).0, 2);
}

#[test]
fn classify_algebra_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(
        dir.path(),
        "h.json",
        &serde_json::to_string(&AlgebraJson::from(&quaternions())).unwrap(),
    );
    let (code, out, _) = run(&["classify-algebra", &h]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "dim 4: H(1)");
    let (code, out, _) = run(&["classify-algebra", &h, "--method", "oracle", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["method"], "IdempotentOracle");
    assert_eq!(v["factors"][0]["kind"], "H");

    // Dual numbers: not semisimple, an engine error.
    let dual = write(
        dir.path(),
        "dual.json",
        r#"{"dim":2,"unit":["1","0"],"constants":["1","0","0","1","0","1","0","0"]}"#,
    );
    assert_eq!(run(&["classify-algebra", &dual]).0, 3);
    let broken = write(dir.path(), "broken.json", r#"{"dim":2}"#);
    assert_eq!(run(&["classify-algebra", &broken]).0, 2);
}

#[test]
fn seed_env_overrides_flag() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(
        dir.path(),
        "h.json",
        &serde_json::to_string(&AlgebraJson::from(&quaternions())).unwrap(),
    );
    let bin = env!("CARGO_BIN_EXE_sodkit");
    let out = Command::new(bin)
        .args(["classify-algebra", &h, "--format", "json", "--seed", "5"])
        .env("SODKIT_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 11);

    let out = Command::new(bin)
        .args(["classify-algebra", &h, "--format", "json", "--seed", "5"])
        .env_remove("SODKIT_SEED")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 5);

    let out = Command::new(bin)
        .args(["rdim", "--degree", "2", "--class", "split", "--n", "1"])
        .env("SODKIT_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in [
        "collection",
        "classify-algebra",
        "motive",
        "verify",
        "rational-point",
        "rdim",
    ] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
    assert!(!out.contains("corrupt"));
}
