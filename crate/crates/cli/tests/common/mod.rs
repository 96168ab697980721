#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn clambda(args: &[&str]) -> Output {
    clambda_env(args, &[])
}

pub fn clambda_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_clambda"));
    cmd.args(args).env_remove("CLAMBDA_OUTPUT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("clambda runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

pub fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// One golden file per entry; every subcommand and output format appears.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("spectrum_0_1.json", &["spectrum", "--lambda", "3", "--alpha", "0", "--alpha", "1", "--levels", "12"]),
    ("spectrum_lambda2.csv", &["spectrum", "--lambda", "2", "--alpha", "0", "--levels", "4", "--format", "csv"]),
    ("spectrum_4_-3.txt", &["spectrum", "--alpha", "4", "--alpha", "-3", "--levels", "12", "--format", "ascii"]),
    ("classify_6_-7.json", &["classify", "--lambda", "3", "--alpha", "6", "--alpha", "-7"]),
    ("classify_1_11.csv", &["classify", "--alpha", "1", "--alpha", "11", "--format", "csv"]),
    ("verify_algebra_lambda4.csv", &["verify-algebra", "--alpha", "1/2", "--alpha", "-1/3", "--alpha", "2", "--format", "csv"]),
    ("cyclic_extract_4_-3.json", &["cyclic", "extract", "--alpha", "4", "--alpha", "-3"]),
    ("cyclic_match.txt", &["cyclic", "match", "--omega", "3/2", "--omega", "1", "--omega", "1/2", "--format", "ascii"]),
    ("pssqm_0_1.json", &["pssqm", "--alpha", "0", "--alpha", "1", "--mu", "0", "--eta", "sqrt2", "--phi", "0", "--check", "rs,bd,general"]),
    ("pssqm_3_-2_mu1.csv", &["pssqm", "--alpha", "3", "--alpha", "-2", "--mu", "1", "--eta", "1/2", "--phi", "0.7", "--format", "csv"]),
    ("figure_1a.json", &["figure", "--which", "1a"]),
    ("figure_1b.csv", &["figure", "--which", "1b", "--format", "csv"]),
    ("figure_1c.txt", &["figure", "--which", "1c", "--format", "ascii"]),
    ("figure_2.txt", &["figure", "--which", "2", "--format", "ascii"]),
    ("figure_2_mu1.json", &["figure", "--which", "2", "--mu", "1", "--levels", "6"]),
];
