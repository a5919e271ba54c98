use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ulf_core::actions::{BoxSpace, BoxSpaceJson};
use ulf_core::coarse::Dist;

fn ulf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulf"))
        .args(args)
        .output()
        .expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn generate_cyclic_schreier_graph() {
    let o = ulf(&["generate", "schreier", "--cyclic", "5"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "{\"n\":5,\"edges\":[[0,1],[0,4],[1,2],[2,3],[3,4]]}\n"
    );
}

#[test]
fn generate_box_cycles_cross_distance() {
    let o = ulf(&["generate", "box-cycles", "--sizes", "3,4"]);
    assert!(o.status.success());
    let j: BoxSpaceJson = serde_json::from_str(&stdout(&o)).unwrap();
    let b = BoxSpace::from_json(&j).unwrap();
    assert_eq!(b.metric().get(0, 3), Dist::Finite(6));
}

#[test]
fn generate_empty_entourage() {
    let o = ulf(&["generate", "entourage", "--empty", "4"]);
    assert_eq!(stdout(&o), "{\"n\":4,\"pairs\":[]}\n");
}

#[test]
fn generate_writes_into_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = ulf(&[
        "--out",
        out,
        "--seed",
        "4",
        "generate",
        "random-regular",
        "--sizes",
        "10,12",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("wrote "));
    let j: BoxSpaceJson =
        serde_json::from_str(&fs::read_to_string(dir.path().join("random_regular.json")).unwrap())
            .unwrap();
    let b = BoxSpace::from_json(&j).unwrap();
    assert!(b
        .components()
        .iter()
        .all(|c| (0..c.len()).all(|v| c.degree(v) == 3)));
}

#[test]
fn amenable_box_decay() {
    let o = ulf(&[
        "--format",
        "csv",
        "experiment",
        "amenable-box",
        "--radius",
        "1,5,10",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let eps: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let expected = [2.0 / 3.0, 2.0 / 11.0, 2.0 / 21.0];
    assert_eq!(eps.len(), 3);
    for (e, x) in eps.iter().zip(expected) {
        assert!((e - x).abs() < 1e-12);
    }
}

#[test]
fn expander_box_single_k8() {
    let o = ulf(&[
        "experiment",
        "expander-box",
        "--family",
        "complete",
        "--sizes",
        "8",
        "--degree",
        "1",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let bound = v["components"][0]["ghost_bound"].as_f64().unwrap();
    assert!((bound - 6.0 / 14.0).abs() < 1e-12);
    assert_eq!(v["ghost_profile"].as_array().unwrap().len(), 8);
    assert_eq!(v["pass"], true);
}

#[test]
fn expander_box_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = ulf(&[
            "--seed",
            "9",
            "--format",
            "csv",
            "--out",
            d.path().to_str().unwrap(),
            "experiment",
            "expander-box",
        ]);
        assert!(o.status.success());
    }
    for f in ["expander_box.csv", "ghost_profile.csv"] {
        assert_eq!(
            fs::read(a.path().join(f)).unwrap(),
            fs::read(b.path().join(f)).unwrap()
        );
    }
}

#[test]
fn lemma_suite_seed_7_passes() {
    let o = ulf(&["--seed", "7", "experiment", "lemma-suite"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 10);
    for r in &v {
        assert_eq!(r["pass"], true, "{r}");
        assert_eq!(r["seed"], 7);
        for key in ["check", "residual", "slack"] {
            assert!(r.get(key).is_some());
        }
    }
}

#[test]
fn verify_coloring_of_complete_relation() {
    let dir = tempfile::tempdir().unwrap();
    let pairs: Vec<String> = (0..3)
        .flat_map(|x| (0..3).map(move |y| format!("[{x},{y}]")))
        .collect();
    let f = write(
        dir.path(),
        "k3.json",
        &format!("{{\"n\":3,\"pairs\":[{}]}}", pairs.join(",")),
    );
    let o = ulf(&["verify", "coloring", "--entourage", &f]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn verify_involution_rejects_three_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "a.json",
        r#"{"n":3,"generators":[{"name":"c","map":[1,2,0]}]}"#,
    );
    let o = ulf(&["verify", "involution", "--action", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generator c is not an involution"));
}

#[test]
fn smooth_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5]]}"#,
    );
    let m = write(dir.path(), "m.json", r#"{"weights":[0.5,0,0,0.5,0,0]}"#);
    let out = dir.path().join("out");
    let o = ulf(&[
        "--out",
        out.to_str().unwrap(),
        "smooth",
        "--graph",
        &g,
        "--measure",
        &m,
        "--eps",
        "0.2",
    ]);
    assert!(o.status.success());
    let smoothed = out.join("smoothed.json");
    let o = ulf(&[
        "verify",
        "smoothing",
        "--graph",
        &g,
        "--measure",
        &m,
        "--smoothed",
        smoothed.to_str().unwrap(),
        "--eps",
        "0.2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.iter().all(|r| r["pass"] == true));

    // a measure moved far away fails the l1 and tail conditions
    let far = write(dir.path(), "far.json", r#"{"weights":[0,0,0,0,0,1]}"#);
    let o = ulf(&[
        "verify",
        "smoothing",
        "--graph",
        &g,
        "--measure",
        &m,
        "--smoothed",
        &far,
        "--eps",
        "0.2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_compression_identity() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#,
    );
    let eta = write(
        dir.path(),
        "eta.json",
        r#"{"n":4,"triplets":[[0,0,0.5,0],[1,0,0.5,0.5],[2,2,-0.5,0]]}"#,
    );
    let a = write(
        dir.path(),
        "a.json",
        r#"{"n":4,"triplets":[[0,1,1,0],[1,0,1,0],[2,3,0,1]]}"#,
    );
    let o = ulf(&[
        "verify",
        "compression-identity",
        "--eta",
        &eta,
        "--operator",
        &a,
        "--graph",
        &g,
        "--radius",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // η reaches distance 2 but only radius 0 is allowed
    let wide = write(dir.path(), "wide.json", r#"{"n":4,"triplets":[[0,2,1,0]]}"#);
    let o = ulf(&[
        "verify",
        "compression-identity",
        "--eta",
        &wide,
        "--operator",
        &a,
        "--graph",
        &g,
        "--radius",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ulf(&["generate"]).status.code(), Some(2));
    assert_eq!(
        ulf(&["generate", "schreier", "--cyclic", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ulf(&["generate", "schreier", "--cyclic", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ulf(&[
            "generate",
            "random-regular",
            "--sizes",
            "5",
            "--valency",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn csv_reports_have_headers() {
    let o = ulf(&[
        "--format",
        "csv",
        "--seed",
        "1",
        "experiment",
        "lemma-suite",
        "--trials",
        "5",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("check,residual,slack,pass,seed\n"));
}
