use std::path::PathBuf;
use std::process::Command;

use bicross_cli::{cmd_census, cmd_decide, cmd_exact, render_svg, InputFormat, Options};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bicross(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bicross"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let (code, out, err) = bicross(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn is_permutation(v: &Value) -> bool {
    let ranks: Vec<usize> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_u64().unwrap() as usize)
        .collect();
    bicross_core::validate_layout(&ranks)
}

#[test]
fn decide_c4() {
    let yes = json(&["decide", "--k", "1", &data("c4.bg")]);
    assert_eq!(yes["decision"], "yes");
    assert_eq!(yes["optimum"], 1);
    assert_eq!(yes["method"], "fpt-enum");
    let no = json(&["decide", "--k", "0", &data("c4.bg")]);
    assert_eq!(no["decision"], "no");
    assert_eq!(no["optimum"], "exceeds_budget");
    assert!(no["witness"].is_null());
}

#[test]
fn decide_with_oracle_matches() {
    let v = json(&["decide", "--k", "9", "--oracle", &data("k33.bg")]);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["optimum"], 9);
    assert_eq!(v["method"], "oracle");
}

#[test]
fn exact_star_and_k33() {
    let star = json(&["exact", &data("k15.bg")]);
    assert_eq!(star["optimum"], 0);
    assert_eq!(star["method"], "fastpath");
    assert_eq!(star["k"], 32);
    assert!(star["decision"].is_null());
    let k33 = json(&["exact", "--kmax", "20", "--threads", "2", &data("k33.bg")]);
    assert_eq!(k33["optimum"], 9);
    let capped = json(&["exact", "--kmax", "5", &data("k33.bg")]);
    assert_eq!(capped["optimum"], "exceeds_budget");
}

#[test]
fn census_star() {
    let v = json(&["census", "--k", "0", &data("k16.bg")]);
    assert_eq!(v["census"]["count"], 720);
    assert_eq!(v["census"]["total_drawings"], 720);
    assert_eq!(v["method"], "census");
    let c4 = json(&["census", "--k", "1", &data("c4.bg")]);
    assert_eq!(c4["census"]["count"], 4);
}

#[test]
fn report_schema_is_stable() {
    for args in [
        vec!["decide", "--k", "1"],
        vec!["decide", "--k", "0"],
        vec!["exact"],
        vec!["census", "--k", "2"],
    ] {
        let mut full = args.clone();
        let file = data("c4.bg");
        full.push(&file);
        let v = json(&full);
        for key in [
            "input",
            "n_x",
            "n_y",
            "m",
            "k",
            "decision",
            "optimum",
            "witness",
            "stats",
            "method",
            "census",
            "wall_time_ms",
        ] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
        for key in [
            "components",
            "candidates_x",
            "candidates_y",
            "pairs_evaluated",
            "pruned",
        ] {
            assert!(v["stats"].get(key).is_some(), "{args:?} lacks stats.{key}");
        }
        if !v["witness"].is_null() {
            assert!(is_permutation(&v["witness"]["fx"]));
            assert!(is_permutation(&v["witness"]["fy"]));
        }
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = bicross(&["decide", "--k", "1", &data("bad.bg")]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    let (code, _, _) = bicross(&["decide", "--k", "0", &data("c4.bg")]);
    assert_eq!(code, 0, "a no-answer is not a failure");

    let (code, _, err) = bicross(&[
        "decide",
        "--k",
        "9",
        "--limit-candidates",
        "1",
        &data("k33.bg"),
    ]);
    assert_eq!(code, 3, "{err}");

    let (code, _, _) = bicross(&["decide", "--k", "1", &data("missing.bg")]);
    assert_eq!(code, 1);
}

#[test]
fn table_output_by_default() {
    let (code, out, _) = bicross(&["decide", "--k", "1", &data("c4.bg")]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .any(|l| l.starts_with("decision") && l.ends_with("yes")));
}

#[test]
fn edge_list_input() {
    let opts = Options {
        format: InputFormat::Edgelist,
        ..Options::default()
    };
    let o = cmd_exact(&data("c4.edges"), 8, &opts).unwrap();
    assert_eq!(o.report.n_x, 2);
    assert_eq!(o.report.m, 4);
    assert!(o.drawing.is_some());
    let v: Value = serde_json::from_str(&o.report.to_json()).unwrap();
    assert_eq!(v["optimum"], 1);
}

fn without_time(out: &str) -> Value {
    let mut v: Value = serde_json::from_str(out).unwrap();
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for i in 0..2 {
        let j = dir.path().join(format!("r{i}.json"));
        let s = dir.path().join(format!("r{i}.svg"));
        let (code, _, err) = bicross(&[
            "exact",
            "--json",
            j.to_str().unwrap(),
            "--svg",
            s.to_str().unwrap(),
            &data("k33.bg"),
        ]);
        assert_eq!(code, 0, "{err}");
        let json = std::fs::read_to_string(j).unwrap();
        let without: Vec<&str> = json
            .lines()
            .filter(|l| !l.trim_start().starts_with("\"wall_time_ms\""))
            .collect();
        runs.push((without.join("\n"), std::fs::read(s).unwrap()));
    }
    assert_eq!(runs[0].0, runs[1].0);
    assert_eq!(runs[0].1, runs[1].1);
    assert_eq!(
        without_time(&std::fs::read_to_string(dir.path().join("r0.json")).unwrap()),
        without_time(&std::fs::read_to_string(dir.path().join("r1.json")).unwrap())
    );
}

#[test]
fn svg_written_only_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("no.svg");
    let (code, _, err) = bicross(&[
        "decide",
        "--k",
        "0",
        "--svg",
        s.to_str().unwrap(),
        &data("c4.bg"),
    ]);
    assert_eq!(code, 0);
    assert!(!s.exists());
    assert!(err.contains("no witness"));
}

#[test]
fn library_commands_match_binary() {
    let o = cmd_decide(&data("c4.bg"), 1, &Options::default()).unwrap();
    let d = o.drawing.unwrap();
    assert_eq!(d.crossing_number_naive(), 1);
    assert!(render_svg(&d).contains("crossings: 1"));
    let c = cmd_census(&data("edge.bg"), 0, &Options::default()).unwrap();
    assert_eq!(c.report.census.unwrap().count, 1);
}
