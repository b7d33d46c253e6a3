use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codesign")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn build(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let p = path(dir, name);
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &p]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn lexicode_golay_analysis() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "g24.code", &["golay", "b24_lexicode"]);
    let o = run(&["analyze", &g, "--format", "report"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["d"], 8);
    assert_eq!(r["self_dual"], true);
    assert_eq!(r["weight_distribution"]["8"], 759);
    assert_eq!(r["am"]["t"], 5);
    let keys = ["q", "n", "k", "d", "self_dual", "self_orthogonal", "cyclic", "perfect", "weight_distribution", "am"];
    let at: Vec<usize> = keys.iter().map(|k| text.find(&format!("\n  \"{k}\":")).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{at:?}");
}

#[test]
fn witt_design_verifies() {
    let dir = TempDir::new().unwrap();
    let w = build(&dir, "witt24.design", &["design", "witt24"]);
    let o = run(&["verify-design", &w, "--t", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5-(24,8,1)\n");
    let o = run(&["verify-design", &w, "--t", "5", "--format", "report"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["lambda"], 1);
}

#[test]
fn design_params_for_the_octads() {
    let o = run(&["design-params", "--t", "5", "--v", "24", "--k", "8", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "params 5-(24,8,1)\nb 759\nr 253\nadmissible true\n");
}

#[test]
fn inadmissible_parameters_exit_one() {
    let o = run(&["design-params", "--t", "2", "--v", "8", "--k", "3", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("admissible false"));
}

#[test]
fn non_design_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = build(&dir, "fano.design", &["design", "fano"]);
    let o = run(&["verify-design", &f, "--t", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a 3-design"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["--budget", "100", "scheme", "hamming", "--n", "2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--threads", "0", "scheme", "hamming", "--n", "2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file.code"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "golay", "b25"]).status.code(), Some(2));
}

#[test]
fn output_is_not_overwritten_without_force() {
    let dir = TempDir::new().unwrap();
    let h = build(&dir, "h.code", &["hamming", "--q", "2", "--m", "3"]);
    let o = run(&["construct", "hexacode", "-o", &h]);
    assert_eq!(o.status.code(), Some(2));
    assert!(std::fs::read_to_string(&h).unwrap().starts_with("2 7 4"));
    let o = run(&["construct", "hexacode", "-o", &h, "--force"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&h).unwrap().starts_with("4 6 3"));
}

#[test]
fn code_operations_round_trip() {
    let dir = TempDir::new().unwrap();
    let h = build(&dir, "h.code", &["hamming", "--q", "3", "--m", "2"]);
    let ext = path(&dir, "ext.code");
    assert!(run(&["extend", &h, "-o", &ext]).status.success());
    let back = run(&["puncture", &ext, "--pos", "4"]);
    assert_eq!(stdout(&back), std::fs::read_to_string(&h).unwrap());
    let d = path(&dir, "d.code");
    assert!(run(&["dual", &h, "-o", &d]).status.success());
    let dd = run(&["dual", &d]);
    assert_eq!(stdout(&dd), std::fs::read_to_string(&h).unwrap());
}

#[test]
fn weights_and_transform_agree() {
    let dir = TempDir::new().unwrap();
    let h = build(&dir, "h.code", &["hamming", "--q", "2", "--m", "3"]);
    assert_eq!(stdout(&run(&["weights", &h])), "0:1 3:7 4:7 7:1\n");
    assert_eq!(stdout(&run(&["macwilliams", &h])), "0:1 4:7\n");
    let o = run(&["macwilliams", "--dist", "0:1 4:7", "--n", "7", "--k", "3", "--q", "2"]);
    assert_eq!(stdout(&o), "0:1 3:7 4:7 7:1\n");
}

#[test]
fn perfect_verdicts() {
    let dir = TempDir::new().unwrap();
    let t = build(&dir, "t11.code", &["golay", "t11_qr"]);
    let o = run(&["perfect", &t]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("design expected 3-(11,5,4) found 3-(11,5,4) holds true"));
    let e = build(&dir, "e8.code", &["ext-hamming8"]);
    assert_eq!(run(&["perfect", &e]).status.code(), Some(1));
}

#[test]
fn design_operations() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "g.code", &["golay", "b24_hexacode"]);
    let oct = path(&dir, "oct.design");
    assert!(run(&["extract-design", &g, "--w", "8", "-o", &oct]).status.success());
    let der = path(&dir, "der.design");
    assert!(run(&["derive", &oct, "--point", "0", "-o", &der]).status.success());
    assert_eq!(stdout(&run(&["verify-design", &der, "--t", "4"])), "4-(23,7,1)\n");
    let comp = path(&dir, "comp.design");
    assert!(run(&["complement", &oct, "-o", &comp]).status.success());
    assert_eq!(stdout(&run(&["verify-design", &comp, "--t", "5"])), "5-(24,16,78)\n");
}

#[test]
fn assmus_mattson_on_the_ternary_golay_code() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "t12.code", &["golay", "t12_extend"]);
    let o = run(&["assmus-mattson", &g]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("t 5\n"));
    assert!(text.contains("code 6 verified 5-(12,6,1) blocks 132"));
}

#[test]
fn fano_plane_analysis() {
    let dir = TempDir::new().unwrap();
    let f = build(&dir, "fano.design", &["design", "fano"]);
    let o = run(&["plane-analysis", &f, "--format", "report"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["dim"], 4);
    assert_eq!(r["hyperoval_count"], 7);
}

#[test]
fn scheme_lines() {
    let o = run(&["scheme", "hamming", "--n", "1", "--q", "2"]);
    assert_eq!(stdout(&o), "0 0 0 1\n0 0 1 0\n0 1 0 0\n0 1 1 1\n1 0 0 0\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
    let o = run(&["scheme", "johnson", "--v", "5", "--k", "2"]);
    assert!(stdout(&o).lines().any(|l| l == "1 1 1 3"));
}

#[test]
fn output_independent_of_thread_count() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "qr.code", &["qr", "--n", "23", "--q", "3"]);
    let one = run(&["--threads", "1", "analyze", &g]);
    let many = run(&["--threads", "4", "analyze", &g]);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    let w1 = run(&["--threads", "1", "assmus-mattson", &g]);
    let w4 = run(&["--threads", "3", "assmus-mattson", &g]);
    assert_eq!(w1.stdout, w4.stdout);
}

#[test]
fn selftest_single_criterion() {
    let o = run(&["selftest", "--only", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS [4]"));
    assert_eq!(run(&["selftest", "--only", "99"]).status.code(), Some(2));
}

#[test]
fn catalog_designs_construct() {
    let dir = TempDir::new().unwrap();
    for name in ["fano", "sts9", "sqs8", "paley_biplane_11", "design_11_6_3"] {
        build(&dir, &format!("{name}.design"), &["design", name]);
    }
    let pg = build(&dir, "pg.design", &["pg", "--d", "3", "--q", "3", "--i", "1"]);
    assert_eq!(stdout(&run(&["verify-design", &pg, "--t", "2"])), "2-(13,4,1)\n");
    let ag = build(&dir, "ag.design", &["ag", "--d", "3", "--q", "2", "--i", "2"]);
    assert_eq!(stdout(&run(&["verify-design", &ag, "--t", "3"])), "3-(8,4,1)\n");
    assert!(Path::new(&pg).exists());
}
