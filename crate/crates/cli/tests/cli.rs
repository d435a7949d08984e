use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lcdbch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdbch")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = lcdbch(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the envelope and the top-level keys the schema requires for `command`.
fn assert_matches_schema(v: &Value, command: &str) {
    let s = schema();
    assert_eq!(v["schema"], s["properties"]["schema"]["const"]);
    assert_eq!(v["command"], command);
    for key in s["required"].as_array().unwrap() {
        assert!(v.get(key.as_str().unwrap()).is_some(), "missing {key}");
    }
    let def = match command {
        "dual-bound" => "boundRow",
        "table1" => "tableRow",
        "leaders" if v["data"].get("leaders").is_some() => "top",
        "leaders" => "catalog",
        c => c,
    };
    let data = &v["data"];
    let objects: Vec<&Value> = match data.as_array() {
        Some(rows) => rows.iter().collect(),
        None => vec![data],
    };
    assert!(!objects.is_empty());
    for obj in objects {
        for key in s["$defs"][def]["required"].as_array().unwrap() {
            assert!(obj.get(key.as_str().unwrap()).is_some(), "{command}: missing {key} in {obj}");
        }
    }
}

#[test]
fn table1_matches_golden() {
    let o = lcdbch(&["table1", "--format", "md"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/table1.md"));
}

#[test]
fn exit_codes() {
    assert_eq!(lcdbch(&["cosets", "-q", "2", "-n", "43"]).status.code(), Some(0));
    // domain errors
    assert_eq!(lcdbch(&["cosets", "-q", "4", "-n", "6"]).status.code(), Some(1));
    assert_eq!(lcdbch(&["code", "-q", "2", "-n", "43", "-d", "50"]).status.code(), Some(1));
    // usage errors
    assert_eq!(lcdbch(&["cosets", "-q", "2"]).status.code(), Some(2));
    assert_eq!(lcdbch(&["verify", "--only", "no-such-family"]).status.code(), Some(2));
    assert_eq!(lcdbch(&["verify", "--only", "dim-m3", "-q", "5..x"]).status.code(), Some(2));
    assert_eq!(lcdbch(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn json_reports_follow_schema() {
    let cases: [(&str, &[&str]); 7] = [
        ("cosets", &["cosets", "-q", "2", "-n", "171", "--top", "2"]),
        ("leaders", &["leaders", "-q", "2", "-m", "9", "--top", "2"]),
        ("leaders", &["leaders", "-q", "3", "-m", "5"]),
        ("code", &["code", "-q", "5", "-n", "21", "-d", "7", "--lcd", "--gen"]),
        ("dual-bound", &["dual-bound", "-m", "3"]),
        ("table1", &["table1"]),
        ("verify", &["verify", "--only", "dim-m3,leaders-m3"]),
    ];
    for (command, args) in cases {
        let v = json(args);
        assert_matches_schema(&v, command);
        // round trip through text preserves the value
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

#[test]
fn json_values() {
    let v = json(&["cosets", "-q", "2", "-n", "171", "--top", "2"]);
    let leaders: Vec<(u64, u64)> = v["data"]["leaders"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["leader"].as_u64().unwrap(), l["size"].as_u64().unwrap()))
        .collect();
    assert_eq!(leaders, [(57, 2), (25, 18)]);

    let v = json(&["code", "-q", "2", "-n", "43", "-d", "7"]);
    let row = &v["data"]["row"];
    assert_eq!((row["n"].as_u64(), row["k"].as_u64()), (Some(43), Some(15)));
    assert_eq!(row["distance"]["kind"], "exact");
    assert_eq!(row["distance"]["d"], 13);
    assert_eq!(row["verdict"], "match");

    let v = json(&["table1"]);
    let actual: Vec<u64> = v["data"].as_array().unwrap().iter().map(|r| r["actual"]["d"].as_u64().unwrap()).collect();
    assert_eq!(actual, [12, 8, 4, 2]);
}

#[test]
fn runs_are_deterministic() {
    for args in [
        &["verify", "--only", "sampled", "-m", "21", "--samples", "200", "--format", "json"][..],
        &["verify", "--only", "coset-sizes,pair-parity", "--format", "csv"][..],
        &["table1", "--format", "json"][..],
        &["code", "-q", "2", "-n", "43", "-d", "3", "--lcd"][..],
    ] {
        let a = lcdbch(args);
        let b = lcdbch(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("lcdbch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.conf");
    std::fs::write(&path, "# dimensions only\nonly = dim-m3\nq = 3,4\nformat = json\n").unwrap();
    let p = path.to_str().unwrap();

    let families = |v: &Value| -> Vec<(String, u64)> {
        v["data"]["families"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| (f["family"].as_str().unwrap().to_string(), f["points"].as_u64().unwrap()))
            .collect()
    };

    // file settings apply, including the output format
    let o = lcdbch(&["verify", "--config", p]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(families(&v), [("dim-m3".to_string(), 2)]);

    // flags win over the file
    let o = lcdbch(&["verify", "--config", p, "--only", "leaders-m3", "-q", "5"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(families(&v), [("leaders-m3".to_string(), 1)]);
    let o = lcdbch(&["verify", "--config", p, "--format", "csv"]);
    assert!(serde_json::from_slice::<Value>(&o.stdout).is_err());

    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(lcdbch(&["verify", "--config", p]).status.code(), Some(2));
    std::fs::write(&path, "q = 3\nq = 4\n").unwrap();
    assert_eq!(lcdbch(&["verify", "--config", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn formats_render_the_same_rows() {
    let text = stdout(&lcdbch(&["cosets", "-q", "3", "-n", "28"]));
    let csv = stdout(&lcdbch(&["cosets", "-q", "3", "-n", "28", "--format", "csv"]));
    let md = stdout(&lcdbch(&["cosets", "-q", "3", "-n", "28", "--format", "md"]));
    let csv_rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(csv_rows, ["0,1", "1,6", "2,6", "4,6", "5,6", "7,2", "14,1"]);
    assert_eq!(md.lines().count(), csv.lines().count() + 1);
    assert!(text.lines().count() >= csv_rows.len());
}
