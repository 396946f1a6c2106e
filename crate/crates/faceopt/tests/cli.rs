//! The `faceopt` command line, driven in-process.

use std::path::PathBuf;

use faceopt::cli::run;
use faceopt::io::{graph_value, read_embedding, read_graph};
use faceopt::samples::{cube, k4, paths};
use faceopt::{faces, Multigraph};
use serde_json::Value;

fn write_graph(name: &str, g: &Multigraph) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("faceopt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, graph_value(g).to_string()).unwrap();
    path
}

fn faceopt(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("faceopt").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn decide_on_k4() {
    let path = write_graph("k4", &k4());
    let (code, out, _) = faceopt(&["decide", "--k", "3", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], "faceopt/1");
    assert_eq!(v["max_face"], 3);
}

#[test]
fn uniform_on_cube() {
    let path = write_graph("cube", &cube());
    let (code, out, _) = faceopt(&["uniform", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["k"], 4);
}

#[test]
fn decide_negative_on_double_path() {
    let g = paths(&[1, 2, 2]);
    assert_eq!(g.m(), 5);
    let path = write_graph("double-path", &g);
    let (code, out, _) = faceopt(&["decide", "--k", "3", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["decision"], false);
    let (code, out, _) = faceopt(&["minimize", "--exact", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["max_face"], 4);
}

#[test]
fn emitted_embeddings_read_back() {
    let g = cube();
    let path = write_graph("cube-rt", &g);
    for args in [vec!["minimize"], vec!["minimize", "--exact"], vec!["decide", "--k", "4"], vec!["uniform", "--k", "4"]] {
        let mut argv = args.clone();
        argv.push(path.to_str().unwrap());
        let (code, out, _) = faceopt(&argv);
        assert_eq!(code, 0, "{args:?}");
        let rot = read_embedding(&g, &out).unwrap();
        assert_eq!(faces(&g, &rot).unwrap().max_face(), json(&out)["max_face"].as_u64().unwrap() as usize);
    }
}

#[test]
fn same_seed_same_output() {
    let a = faceopt(&["gen", "random", "--n", "7", "--m", "11", "--seed", "5"]);
    let b = faceopt(&["gen", "random", "--n", "7", "--m", "11", "--seed", "5"]);
    let c = faceopt(&["gen", "random", "--n", "7", "--m", "11", "--seed", "6"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert_ne!(a.1, c.1);
    let g = read_graph(&a.1).unwrap();
    assert_eq!((g.n(), g.m()), (7, 11));
}

#[test]
fn generators() {
    let (code, out, _) = faceopt(&["gen", "wheel", "--d", "4", "--k", "7"]);
    assert_eq!(code, 0);
    assert!(json(&out)["poles"].is_array());
    let (code, out, _) = faceopt(&["gen", "minmax5", "--formula", "1 2; -1 2"]);
    assert_eq!(code, 0);
    assert!(json(&out)["roles"].is_object());
    let (code, _, err) = faceopt(&["gen", "minmax5", "--formula", "1 2 3 4"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn errors_and_guards() {
    let (code, _, _) = faceopt(&["decide", "--k", "3", "/nonexistent/graph.json"]);
    assert_eq!(code, 2);
    let (code, _, _) = faceopt(&["enumerate", "--limit", "0", "x.json"]);
    assert_eq!(code, 2);
    let path = write_graph("bundle", &paths(&[1, 1, 1, 1, 1, 1]));
    let (code, _, err) = faceopt(&["enumerate", "--limit", "10", path.to_str().unwrap()]);
    assert_eq!(code, 3, "{err}");
    let (code, out, _) = faceopt(&["enumerate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["count"], 60);
}

#[test]
fn spqr_output() {
    let path = write_graph("spqr-k4", &k4());
    let (code, out, _) = faceopt(&["spqr", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let kinds: Vec<String> = json(&out)["nodes"].as_array().unwrap().iter().map(|n| n["kind"].as_str().unwrap().to_string()).collect();
    assert_eq!(kinds.iter().filter(|k| *k == "R").count(), 1);
    assert_eq!(kinds.iter().filter(|k| *k == "Q").count(), 6);
}
