//! Golden-file cases for the `spantree` binary, shared by the CLI tests and
//! the acceptance harness.

#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> GoldenCase {
    GoldenCase {
        name,
        args,
        stdin: None,
        exit,
    }
}

pub const CASES: &[GoldenCase] = &[
    case(
        "transform_middle_path",
        &["transform", "path.txt", "--op", "middle"],
        0,
    ),
    case(
        "transform_middle_k2bi",
        &["transform", "k2bi.txt", "--op", "middle"],
        0,
    ),
    case(
        "transform_line_c3",
        &["transform", "c3.txt", "--op", "line"],
        0,
    ),
    case(
        "transform_line_weighted",
        &["transform", "weighted.txt", "--op", "line"],
        0,
    ),
    case(
        "transform_missing_file",
        &["transform", "missing.txt", "--op", "line"],
        2,
    ),
    case(
        "transform_reserved_label",
        &["transform", "gt.txt", "--op", "middle"],
        2,
    ),
    case("count_arc_edge", &["count", "arc.txt", "--kind", "edge"], 0),
    case(
        "count_k3_root",
        &["count", "k3.txt", "--kind", "edge", "--root", "v1"],
        0,
    ),
    case("count_k3_total", &["count", "k3.txt", "--kind", "edge"], 0),
    case(
        "count_c3_unweighted",
        &["count", "c3.txt", "--unweighted", "--kind", "edge"],
        0,
    ),
    case(
        "count_weighted_vertex",
        &["count", "weighted.txt", "--kind", "vertex"],
        0,
    ),
    case(
        "count_weighted_vertex_root",
        &["count", "weighted.txt", "--kind", "vertex", "--root", "q"],
        0,
    ),
    case(
        "count_unknown_root",
        &["count", "arc.txt", "--root", "zz"],
        2,
    ),
    case("count_parse_error", &["count", "bad.txt"], 2),
    GoldenCase {
        name: "count_stdin",
        args: &["count", "-", "--kind", "edge"],
        stdin: Some("arc a b 2/3\narc b a 5\n"),
        exit: 0,
    },
    case(
        "charpoly_path_edge",
        &["charpoly", "path.txt", "--matrix", "edge"],
        0,
    ),
    case("charpoly_isolated", &["charpoly", "iso.txt"], 0),
    case(
        "charpoly_mpath_vertex",
        &["charpoly", "mpath.txt", "--matrix", "vertex"],
        0,
    ),
    case(
        "charpoly_weighted_vertex",
        &["charpoly", "weighted.txt", "--matrix", "vertex"],
        0,
    ),
    case(
        "verify_k2bi_eq3",
        &["verify", "k2bi.txt", "--identity", "eq3"],
        0,
    ),
    case(
        "verify_arc_eq3",
        &["verify", "arc.txt", "--identity", "eq3"],
        0,
    ),
    case(
        "verify_k3_eq5",
        &["verify", "k3.txt", "--identity", "eq5"],
        0,
    ),
    case(
        "verify_c3_eq6_arc",
        &["verify", "c3.txt", "--identity", "eq6", "--arc", "a", "b"],
        0,
    ),
    case(
        "verify_k2bi_levine2",
        &["verify", "k2bi.txt", "--identity", "levine2"],
        0,
    ),
    case(
        "verify_src_levine2",
        &["verify", "src.txt", "--identity", "levine2"],
        2,
    ),
    case(
        "verify_src_all",
        &["verify", "src.txt", "--identity", "all"],
        0,
    ),
    case(
        "verify_src_all_strict",
        &["verify", "src.txt", "--identity", "all", "--strict"],
        1,
    ),
    case(
        "verify_k2bi_all_json",
        &["verify", "k2bi.txt", "--identity", "all", "--json"],
        0,
    ),
    case("verify_weighted_all", &["verify", "weighted.txt"], 0),
    case(
        "verify_path_block",
        &["verify", "path.txt", "--identity", "block"],
        0,
    ),
    case(
        "verify_huge_mtt",
        &["verify", "huge.txt", "--identity", "mtt"],
        3,
    ),
    case(
        "verify_unknown_identity",
        &["verify", "k2bi.txt", "--identity", "eq9"],
        2,
    ),
    case(
        "verify_unknown_arc",
        &["verify", "k2bi.txt", "--identity", "eq6", "--arc", "u", "w"],
        2,
    ),
    case(
        "enumerate_path",
        &["enumerate", "path.txt", "--root", "v"],
        0,
    ),
    case("enumerate_k3", &["enumerate", "k3.txt", "--root", "v1"], 0),
    case(
        "enumerate_huge",
        &["enumerate", "huge.txt", "--root", "x1"],
        3,
    ),
    case(
        "enumerate_unknown_root",
        &["enumerate", "k3.txt", "--root", "v9"],
        2,
    ),
    case(
        "fuzz_seed42",
        &["fuzz", "--seed", "42", "--count", "200"],
        0,
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures() -> PathBuf {
    crate_dir().join("tests").join("fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir()
        .join("tests")
        .join("golden")
        .join(format!("{name}.out"))
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the binary from the fixtures directory with the oracle limit
/// environment variable cleared.
pub fn run_in(dir: &Path, args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spantree"))
        .args(args)
        .current_dir(dir)
        .env_remove("SPANTREE_ORACLE_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn spantree");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().expect("wait for spantree");
    Output {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn run(args: &[&str]) -> Output {
    run_in(&fixtures(), args, None)
}

/// Compares one case against its golden file; `Err` describes the mismatch.
/// With `UPDATE_GOLDEN=1` the golden file is rewritten instead.
pub fn check_case(c: &GoldenCase) -> Result<(), String> {
    let out = run_in(&fixtures(), c.args, c.stdin);
    let path = golden_path(c.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    if out.code != c.exit {
        return Err(format!(
            "{}: exit {} (expected {}), stderr: {}",
            c.name, out.code, c.exit, out.stderr
        ));
    }
    if c.exit >= 2 && out.stderr.trim().is_empty() {
        return Err(format!("{}: failing run printed no error", c.name));
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: cannot read {}: {e}", c.name, path.display()))?;
    if out.stdout != expected {
        return Err(format!(
            "{}: stdout differs from {}\n--- got ---\n{}",
            c.name,
            path.display(),
            out.stdout
        ));
    }
    Ok(())
}
