use std::path::PathBuf;
use std::process::{Command, Output};

fn k3poly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3poly")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn shipped_data() -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/rows.toml");
    std::fs::read_to_string(p).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_table_all_rows() {
    let o = k3poly(&["verify-table"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS row ")).count(), 16);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS swaps ")).count(), 4);
    assert!(out.contains("20 reports, 20 passed, 0 failed"));
}

#[test]
fn verify_single_row() {
    let o = k3poly(&["verify-table", "--row", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS row 14/28/45/51  rho(delta)=10"));
    assert!(out.contains("1 reports, 1 passed"));
}

#[test]
fn unknown_row_lists_ids() {
    let o = k3poly(&["verify-table", "--row", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("available ids: 9 13 14 16"));
}

#[test]
fn kv_output_is_deterministic() {
    let a = k3poly(&["verify-table", "--format", "kv"]);
    let b = k3poly(&["verify-table", "--format", "kv", "--parallel"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("row.16/54.rank_delta=pass\n"));
    assert!(out.contains("swaps.56/73.result=pass\n"));
    assert!(out.ends_with("summary.reports=20\nsummary.passed=20\n"));
}

#[test]
fn corrupted_exponent_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let bad = shipped_data().replacen("\"W^6X\"", "\"W^7X\"", 1);
    let path = write_temp(&dir, "rows.toml", &bad);
    let o = k3poly(&["verify-table", "--data", &path, "--row", "16"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL row 16/54"));
    assert!(out.contains("W^7X has degree 27, expected 24"), "{out}");
}

#[test]
fn malformed_dataset_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "rows.toml", "[[row]]\ntable = 1\n");
    let o = k3poly(&["verify-table", "--data", &path]);
    assert_eq!(o.status.code(), Some(2));
    let o = k3poly(&["verify-table", "--data", "/nonexistent/rows.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn picard_of_weights() {
    let o = k3poly(&["picard", "1,1,1,1"]);
    assert_eq!(stdout(&o), "rho=1 toric=1 correction=0\n");
    let o = k3poly(&["picard", "1,6,14,21"]);
    assert!(stdout(&o).starts_with("rho=10 "));
    assert_eq!(k3poly(&["picard", "1,2,2,2"]).status.code(), Some(2));
}

#[test]
fn dual_of_cube_is_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let mut cube = String::from("# unit cube\n");
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                cube.push_str(&format!("{x} {y} {z}\n"));
            }
        }
    }
    let path = write_temp(&dir, "cube.txt", &cube);
    let o = k3poly(&["dual", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1 0 0\n0 -1 0\n0 0 -1\n0 0 1\n0 1 0\n1 0 0\n");
    let oct = write_temp(&dir, "oct.txt", &stdout(&o));
    let back = k3poly(&["dual", &oct]);
    let mut lines: Vec<String> = stdout(&back).lines().map(String::from).collect();
    let mut want: Vec<String> = cube.lines().skip(1).map(String::from).collect();
    lines.sort();
    want.sort();
    assert_eq!(lines, want);
    assert_eq!(stdout(&k3poly(&["picard", &oct])), "rho=17 toric=17 correction=0\n");
}

#[test]
fn newton_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = k3poly(&["newton", "3,6,7,8"]);
    assert_eq!(o.status.code(), Some(0));
    let path = write_temp(&dir, "n.txt", &stdout(&o));
    assert_eq!(stdout(&k3poly(&["reflexive", &path])), "reflexive=true\n");
    assert_eq!(stdout(&k3poly(&["points", &path])).lines().count(), 9);
    assert!(stdout(&k3poly(&["picard", &path])).starts_with("rho=16 "));
    let d = write_temp(&dir, "d.txt", &stdout(&k3poly(&["dual", &path])));
    let dd = stdout(&k3poly(&["dual", &d]));
    assert_eq!(dd, stdout(&o));
}

#[test]
fn non_reflexive_and_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "big.txt", "2 0 0\n-2 0 0\n0 2 0\n0 -2 0\n0 0 2\n0 0 -2\n");
    assert_eq!(stdout(&k3poly(&["reflexive", &p])), "reflexive=false\n");
    let q = write_temp(&dir, "off.txt", "0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
    assert!(stdout(&k3poly(&["reflexive", &q])).starts_with("reflexive=false"));
    let r = write_temp(&dir, "bad.txt", "1 2\n");
    let o = k3poly(&["points", &r]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
    let flat = write_temp(&dir, "flat.txt", "0 0 0\n1 0 0\n0 1 0\n");
    assert_eq!(k3poly(&["points", &flat]).status.code(), Some(2));
}

#[test]
fn search_sub_finds_lower_polytope() {
    let o = k3poly(&["search-sub", "2,4,5,9", "--max-depth", "1", "--max-results", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# result 1 depth=1 rho=14 l0=3"));
    assert!(out.contains("# results=1 explored=1"));
}

#[test]
fn amoeba_maps() {
    let o = k3poly(&["amoeba", "--row", "14", "--from", "14", "--to", "28"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<i64>> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 3);
    let det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    assert_eq!(det.abs(), 1);
    assert_eq!(k3poly(&["amoeba", "--row", "26", "--from", "34", "--to", "76"]).status.code(), Some(0));
    assert_eq!(k3poly(&["amoeba", "--row", "14", "--from", "14", "--to", "72"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(k3poly(&[]).status.code(), Some(2));
    assert_eq!(k3poly(&["verify-table", "--format", "xml"]).status.code(), Some(2));
}
