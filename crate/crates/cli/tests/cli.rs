use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ordered_paths::io::{parse_certificate, parse_coloring, parse_graph, parse_host, validate_against_host};
use ordered_paths::{Color, OrderedColoring};

fn ordpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordpath"))
        .args(args)
        .env_remove("ORDPATH_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds() {
    let o = ordpath(&["bound", "ramsey", "--family", "ap", "--n", "8"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "17");
    assert_eq!(first_line(&ordpath(&["bound", "turan", "--family", "ap", "--N", "8", "--n", "6"])), "22");
    assert_eq!(first_line(&ordpath(&["bound", "ramsey", "--family", "pgg", "--n", "8"])), "20");
    assert_eq!(first_line(&ordpath(&["bound", "bipartite", "--N", "8", "--n", "6"])), "12");
    assert_eq!(first_line(&ordpath(&["bound", "log", "--N", "16", "--n", "8"])), "384");
    let o = ordpath(&["bound", "ramsey", "--family", "pll", "--n", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ordpath(&["bound", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn find_on_all_red_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("red.txt");
    fs::write(&host, ordered_paths::io::write_coloring(&OrderedColoring::monochromatic(17, Color::Red))).unwrap();
    let cert = dir.path().join("cert.txt");
    let trace = dir.path().join("trace.txt");
    let o = ordpath(&[
        "find", "--host", path_str(&host), "--family", "ap", "--n", "8", "--out", path_str(&cert), "--trace",
        path_str(&trace),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let (c, nv) = parse_certificate(&fs::read_to_string(&cert).unwrap()).unwrap();
    let h = parse_host(&fs::read_to_string(&host).unwrap()).unwrap();
    validate_against_host(&c, nv, &h).unwrap();
    assert_eq!(c.color, Some(Color::Red));
    // every cell between the classes appears once in the trace dump
    let dump = fs::read_to_string(&trace).unwrap();
    assert_eq!(dump.lines().count(), 1 + 94);
    let o = ordpath(&["verify", "--host", path_str(&host), "--cert", path_str(&cert)]);
    assert!(o.status.success());
}

#[test]
fn find_pgl_and_halves_on_colorings() {
    let dir = tempfile::tempdir().unwrap();
    for (family, nv) in [("pgl", "17"), ("pll", "20"), ("pgg", "20")] {
        let host = dir.path().join(format!("{family}.txt"));
        let o = ordpath(&["random", "coloring", "--N", nv, "--seed", "9", "--out", path_str(&host)]);
        assert!(o.status.success());
        let cert = dir.path().join(format!("{family}.cert"));
        let o = ordpath(&["find", "--host", path_str(&host), "--family", family, "--n", "8", "--out", path_str(&cert)]);
        assert_eq!(o.status.code(), Some(0), "{family}: {}", String::from_utf8_lossy(&o.stderr));
        let o = ordpath(&["verify", "--host", path_str(&host), "--cert", path_str(&cert)]);
        assert!(o.status.success(), "{family}");
    }
}

#[test]
fn star_construction_is_not_found_best_effort() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("star.txt");
    let o = ordpath(&["construct", "extremal-star", "--N", "17", "--n", "7", "--out", path_str(&g)]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "70 edges");
    assert_eq!(parse_graph(&fs::read_to_string(&g).unwrap()).unwrap().edge_count(), 70);
    let o = ordpath(&["find", "--host", path_str(&g), "--n", "7", "--best-effort"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ordpath(&["find", "--host", path_str(&g), "--n", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constructions_in_both_formats() {
    let o = ordpath(&["construct", "extremal-band", "--N", "17", "--n", "7", "--format", "edges"]);
    assert!(o.status.success());
    assert_eq!(parse_graph(&stdout(&o)).unwrap().edge_count(), 70);
    let o = ordpath(&["construct", "extremal-bipartite", "--family", "pgg", "--N", "8", "--n", "6"]);
    assert_eq!(parse_graph(&stdout(&o)).unwrap().edge_count(), 12);
    let o = ordpath(&["construct", "extremal-bipartite", "--family", "pgg", "--N", "7", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bipartite_graph_find() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bip.txt");
    let o = ordpath(&["construct", "extremal-bipartite", "--family", "pll", "--N", "8", "--n", "6", "--format", "edges"]);
    let mut text = stdout(&o);
    // (4, 8) is missing from the construction; adding it crosses the threshold
    text = text.replacen("8 12\n", "8 13\n", 1) + "4 8\n";
    fs::write(&g, text).unwrap();
    let cert = dir.path().join("c.txt");
    let o = ordpath(&["find", "--host", path_str(&g), "--family", "pll", "--n", "6", "--out", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(ordpath(&["verify", "--host", path_str(&g), "--cert", path_str(&cert)]).status.success());
}

#[test]
fn searches() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordpath(&["search", "ramsey", "--family", "ap", "--n", "4", "--out-dir", path_str(dir.path())]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "7");
    let w = parse_coloring(&fs::read_to_string(dir.path().join("witness_ap_4_N6.txt")).unwrap()).unwrap();
    assert_eq!(w.n_vertices(), 6);
    assert_eq!(first_line(&ordpath(&["search", "turan", "--family", "pgg", "--N", "6", "--n", "4"])), "11");
    assert_eq!(first_line(&ordpath(&["search", "turan", "--family", "pll", "--N", "6", "--n", "4"])), "9");
    let o = ordpath(&["search", "ramsey", "--n", "5", "--N", "9", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_ordpath"))
        .args(["search", "ramsey", "--n", "5", "--N", "9"])
        .env("ORDPATH_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = ordpath(&["search", "ramsey", "--n", "6", "--order", "constrained", "--budget", "100000"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "12");
}

#[test]
fn encode_and_decode() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordpath(&["encode", "--family", "ap", "--n", "4", "--N", "6"]);
    assert!(stdout(&o).lines().any(|l| l == "p cnf 15 30"));
    let o = ordpath(&["encode", "--n", "2", "--N", "2"]);
    assert!(stdout(&o).lines().any(|l| l == "p cnf 1 2"));

    let model = dir.path().join("model.txt");
    fs::write(&model, "s SATISFIABLE\nv 1 2 3 4 5 6 0\n").unwrap();
    let o = ordpath(&["decode", "--n", "4", "--N", "4", "--model", path_str(&model), "--raw"]);
    assert!(o.status.success());
    assert_eq!(parse_coloring(&stdout(&o)).unwrap(), OrderedColoring::monochromatic(4, Color::Red));
    let o = ordpath(&["decode", "--n", "4", "--N", "4", "--model", path_str(&model)]);
    assert_eq!(o.status.code(), Some(4));
    fs::write(&model, "v 1 2 0\n").unwrap();
    let o = ordpath(&["decode", "--n", "4", "--N", "4", "--model", path_str(&model)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn truncated_and_tampered_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("h.txt");
    fs::write(&host, "5\nRRRR\nBBB\n").unwrap();
    let o = ordpath(&["find", "--host", path_str(&host), "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));

    fs::write(&host, ordered_paths::io::write_coloring(&OrderedColoring::monochromatic(4, Color::Red))).unwrap();
    let cert = dir.path().join("c.txt");
    fs::write(&cert, "ap 3 4 B\n1 4 2\n").unwrap();
    let o = ordpath(&["verify", "--host", path_str(&host), "--cert", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(1));
    fs::write(&cert, "ap 3 4 R\n1 4 2\n").unwrap();
    assert!(ordpath(&["verify", "--host", path_str(&host), "--cert", path_str(&cert)]).status.success());
}

#[test]
fn render_and_random_are_deterministic() {
    let a = ordpath(&["random", "graph", "--N", "12", "--seed", "4", "--edges", "30"]);
    let b = ordpath(&["random", "graph", "--N", "12", "--seed", "4", "--edges", "30"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(parse_graph(&stdout(&a)).unwrap().edge_count(), 30);
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    fs::write(&g, "3\n00\n0\n").unwrap();
    let o = ordpath(&["render", "--host", path_str(&g)]);
    assert_eq!(stdout(&o), "  . .\n    .\n\n");
    let o = ordpath(&["construct", "extremal-star", "--N", "6", "--n", "4", "--out", path_str(&g)]);
    assert!(o.status.success());
    let o = ordpath(&["render", "--host", path_str(&g)]);
    assert_eq!(stdout(&o).matches('#').count(), 9);
}
