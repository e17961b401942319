use std::path::Path;
use std::process::{Command, Output};

fn semiinv(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiinv"))
        .args(args)
        .env("SEMIINV_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gauss_and_dim() {
    let dir = tempfile::tempdir().unwrap();
    let o = semiinv(dir.path(), &["gauss", "4", "2"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "1 + q + 2q^2 + q^3 + q^4\n")
    );
    assert_eq!(stdout(&semiinv(dir.path(), &["gauss", "5", "0"])), "1\n");
    assert_eq!(
        semiinv(dir.path(), &["gauss", "3", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        stdout(&semiinv(dir.path(), &["dim", "4", "4", "6"])),
        "delta=2 kernel=2 MATCH\n"
    );
    assert_eq!(
        stdout(&semiinv(dir.path(), &["dim", "2", "3", "2"])),
        "delta=1 kernel=1 MATCH\n"
    );
    assert_eq!(
        stdout(&semiinv(dir.path(), &["dim", "4", "4", "0"])),
        "delta=1 kernel=1 MATCH\n"
    );
}

#[test]
fn basis_is_cached_and_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("b446.json");
    let o = semiinv(
        &cache,
        &["basis", "4", "4", "6", "--out", out.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("computed"));
    let first = std::fs::read(&out).unwrap();
    assert_eq!(
        first,
        std::fs::read(cache.join("kernel_n4_k4_m6.json")).unwrap()
    );
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["vectors"][0][0]["nu"], serde_json::json!([0, 2, 2, 0, 0]));
    assert_eq!(v["vectors"][1][0]["nu"], serde_json::json!([1, 0, 3, 0, 0]));

    let o = semiinv(
        &cache,
        &["basis", "4", "4", "6", "--out", out.to_str().unwrap()],
    );
    assert!(String::from_utf8_lossy(&o.stderr).contains("cache hit"));
    assert_eq!(std::fs::read(&out).unwrap(), first);

    // the flag wins over the environment
    let other = dir.path().join("other");
    let o = semiinv(
        &cache,
        &[
            "basis",
            "2",
            "3",
            "2",
            "--cache-dir",
            other.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(other.join("kernel_n2_k3_m2.json").exists());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vectors"][0].as_array().unwrap().len(), 2);
}

#[test]
fn basis_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        semiinv(dir.path(), &["basis", "2", "2", "9"]).status.code(),
        Some(2)
    );
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"").unwrap();
    let bad = blocker.join("x.json");
    let o = semiinv(
        dir.path(),
        &["basis", "2", "3", "2", "--out", bad.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "sylvester", "--nmax", "6", "--kmax", "6"][..],
        &["verify", "nr8"],
        &[
            "verify", "G", "--nmax", "10", "--kmax", "16", "--rmax", "10",
        ],
        &["verify", "F", "--nmax", "8", "--kmax", "8", "--jobs", "2"],
    ] {
        let o = semiinv(dir.path(), args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let prefix = dir.path().join("reports/f");
    let o = semiinv(
        dir.path(),
        &[
            "verify",
            "F",
            "--nmax",
            "4",
            "--kmax",
            "3",
            "--out",
            prefix.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let jsonl = std::fs::read_to_string(dir.path().join("reports/f.jsonl")).unwrap();
    assert_eq!(jsonl.lines().count(), 4);
}

#[test]
fn scans() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("fs");
    let o = semiinv(
        dir.path(),
        &[
            "scan",
            "F-strict",
            "--nmax",
            "10",
            "--kmax",
            "20",
            "--include-below-range",
            "--out",
            prefix.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("fs.csv")).unwrap();
    assert!(csv.starts_with("family,n,k,check,pass,witness_index\n"));
    assert!(csv.contains("\nF,5,9,strict_unimodal_except_ends,false,"));

    let o = semiinv(
        dir.path(),
        &["scan", "bergeron", "--bound", "8", "--jobs", "3"],
    );
    assert_eq!(o.status.code(), Some(0));
    let mut valid = 0;
    for a in 1..=8u32 {
        for b in a..=8 {
            for c in a..=8 {
                for d in a..=8 {
                    if a * d == b * c {
                        valid += 1;
                    }
                }
            }
        }
    }
    assert_eq!(stdout(&o).lines().count(), valid);

    let prefix = dir.path().join("empty");
    let o = semiinv(
        dir.path(),
        &[
            "scan",
            "strange",
            "--nmax",
            "0",
            "--out",
            prefix.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(dir.path().join("empty.jsonl")).unwrap(),
        ""
    );

    let o = semiinv(
        dir.path(),
        &["scan", "stanley-zanello", "--kmax", "4", "--mmax", "8"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .all(|l| l.contains("\"family\":\"stanley_zanello\"")));

    let o = semiinv(
        dir.path(),
        &["scan", "bergeron", "--out", "/proc/definitely/not/here"],
    );
    assert_eq!(o.status.code(), Some(4));
}
