use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tarlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tarlab")).args(args).output().expect("run tarlab")
}

fn tarlab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tarlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tarlab");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn param_full_house() {
    let o = tarlab(&["param", "--kind", "skew", "--family", "fullhouse"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("value: 1\n"));
    assert!(s.contains("upper: 3\n"));
    assert!(s.contains("minimal sets: {3},{4},{0,1,2}\n"));
}

#[test]
fn connect_complete_bipartite() {
    let o = tarlab(&["connect", "--kind", "dom", "--family", "complete_bipartite:4,5", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["underline_x0"], 3);
    assert_eq!(v["x0"], 6);
}

#[test]
fn census_csv_row() {
    let o = tarlab(&["census", "--kind", "psd", "--order", "5", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "kind,n,universe,unique,ratio\npsd,5,23,10,0.4348\n");
}

#[test]
fn census_from_generated_stream() {
    let generated = tarlab(&["gen", "--order", "5"]);
    assert!(generated.status.success());
    assert_eq!(stdout(&generated).lines().count(), 34);
    let o = tarlab_stdin(&["census", "--kind", "zf", "--order", "5", "--input", "-", "--format", "csv"], &stdout(&generated));
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().nth(1), Some("zf,5,23,7,0.3043"));
}

#[test]
fn census_json_classes() {
    let o = tarlab(&["census", "--kind", "dom", "--order", "4", "--format", "json"]);
    let v = json(&o);
    let classes = v["classes"].as_array().unwrap();
    let members: usize = classes.iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(members, 7);
    assert_eq!(v["unique"], 5);
}

#[test]
fn json_sets_round_trip() {
    let o = tarlab(&["param", "--kind", "dom", "--family", "complete_bipartite:2,3", "--format", "json"]);
    let v = json(&o);
    let sets = v["minimal_sets"].as_array().unwrap();
    assert_eq!(sets.len(), 8);
    for s in sets {
        let text = s.as_str().unwrap();
        let parsed: tarlab::VertexSet = text.parse().unwrap();
        assert_eq!(parsed.to_string(), text);
    }
}

#[test]
fn tar_exports() {
    let dot = stdout(&tarlab(&["tar", "--kind", "zf", "--family", "complete:4", "--format", "dot"]));
    assert!(dot.starts_with("graph "));
    assert!(dot.contains("label=\"{0,1,2,3}\""));
    assert_eq!(dot.matches(" -- ").count(), 4);
    let g6 = stdout(&tarlab(&["tar", "--kind", "skew", "--family", "path:4", "--format", "graph6"]));
    let q4 = tarlab::graph6::parse_graph6(g6.trim()).unwrap();
    assert_eq!((q4.order(), q4.size()), (16, 32));
}

#[test]
fn tj_and_hamilton() {
    let tj = json(&tarlab(&["tj", "--kind", "dom", "-k", "1", "--family", "complete:4", "--format", "json"]));
    assert_eq!(tj["order"], 4);
    assert_eq!(tj["edge_count"], 6);
    let h = json(&tarlab(&["hamilton", "--kind", "dom", "--family", "cycle:4", "--format", "json"]));
    assert_eq!(h["verdict"], "no");
    let h = json(&tarlab(&["hamilton", "--kind", "vc", "--family", "empty:3", "--mode", "cycle", "--format", "json"]));
    assert_eq!(h["verdict"], "yes");
    assert_eq!(h["witness"].as_array().unwrap().len(), 8);
}

#[test]
fn iso_methods() {
    let args = ["iso", "--kind", "dom", "--family", "complete_bipartite:3,3", "--other-family", "cartesian(complete:3;complete:2)"];
    let v = json(&tarlab(&[&args[..], &["--format", "json"]].concat()));
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["method"], "setsystem");
    let v = json(&tarlab(&[&args[..], &["--method", "direct", "--format", "json"]].concat()));
    assert_eq!(v["isomorphic"], true);
    let bad = tarlab(&["iso", "--kind", "cdom", "--family", "star:3", "--other-family", "path:4", "--method", "setsystem"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn graph_sources() {
    let o = tarlab(&["param", "--kind", "ind", "--graph6", "Bw", "--format", "json"]);
    assert_eq!(json(&o)["value"], 1);
    let o = tarlab_stdin(&["param", "--kind", "ind", "--file", "-", "--format", "json"], "Bw\n");
    assert_eq!(json(&o)["value"], 1);
    let o = tarlab_stdin(&["param", "--kind", "vc", "--edges", "-", "--format", "json"], "0 1\n1 2\n");
    assert_eq!(json(&o)["value"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(tarlab(&["param", "--kind", "dom"]).status.code(), Some(2));
    assert_eq!(tarlab(&["param", "--kind", "nope", "--family", "path:3"]).status.code(), Some(2));
    assert_eq!(tarlab(&["param", "--kind", "dom", "--family", "path:3", "--graph6", "Bw"]).status.code(), Some(2));
    assert_eq!(tarlab(&["param", "--kind", "cdom", "--family", "empty:2"]).status.code(), Some(2));
    assert_eq!(tarlab(&["census", "--kind", "dom", "--order", "9"]).status.code(), Some(2));
    let o = tarlab(&["verify", "--claim", "no-such-claim"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stderr.len() > 0);
    let o = tarlab(&["verify", "--claim", "fullhouse-minsets", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["passed"], 1);
}

#[test]
fn identical_runs_identical_output() {
    let args = ["census", "--kind", "skew", "--order", "5", "--format", "json"];
    assert_eq!(tarlab(&args).stdout, tarlab(&args).stdout);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("tarlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ids.txt");
    let o = tarlab(&["verify", "--list", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let ids = std::fs::read_to_string(&path).unwrap();
    assert!(ids.lines().any(|l| l == "d0-K3P3"));
    std::fs::remove_dir_all(&dir).unwrap();
}
