//! Fixed command corpus shared by the CLI tests.

use std::process::Command;

pub const CORPUS: &[&[&str]] = &[
    &["wigner", "3j", "--two-j", "2", "2", "2", "--two-m", "2", "-2", "0"],
    &["wigner", "cg", "--two-j", "1", "1", "2", "--two-m", "1", "-1", "0"],
    &["wigner", "6j", "--two-j", "2", "2", "2", "2", "2", "2"],
    &["wigner", "6j", "--two-j", "3", "3", "2", "1", "1", "2", "--method", "oracle"],
    &["wigner", "9j", "--two-j", "2", "2", "2", "2", "2", "2", "2", "2", "2"],
    &["wigner", "regge", "--two-j", "4", "2", "2", "--two-m", "2", "0", "-2"],
    &["wigner", "gaunt", "--l", "1", "1", "2", "--m", "1", "-1", "0"],
    &["su3", "decompose", "--l1", "2", "--l2", "1"],
    &["su3", "wigner", "--l1", "1", "--l2", "1", "--lambda3", "2", "--mu3", "0", "--a1", "1", "0", "1", "--a2", "1", "0", "-1", "--a3", "2", "0", "0"],
    &["su3", "euler", "--a", "1", "0", "0", "0", "--nu3", "0.3", "--beta3", "0.7", "--b", "0.6", "0.8", "0", "0"],
    &["gelfand", "dim", "--h", "2", "1", "0"],
    &["gelfand", "enumerate", "--h", "2", "1", "0"],
    &["gelfand", "weight", "--pattern", "2 1 0 / 2 1 / 1"],
    &["gelfand", "poly", "--pattern", "2 1 0 / 2 0 / 1"],
    &["hurwitz", "matrix", "--n", "4"],
    &["hurwitz", "matrix", "--n", "8", "--u", "1", "2", "3", "4", "5", "6", "7", "8"],
    &["hurwitz", "ks", "--u", "1/2", "1/3", "-2", "3/4"],
    &["hurwitz", "cayley", "--n", "3", "--u", "1", "0.5", "-0.25", "2"],
    &["hurwitz", "cross", "--n", "7", "--a", "1", "0", "0", "0", "0", "0", "0", "--b", "0", "1", "0", "0", "0", "0", "0"],
    &["hurwitz", "check", "--seed", "3", "--trials", "20"],
    &["hydrogen", "position", "--n", "2", "--l", "1", "--r", "0.5", "1", "2"],
    &["hydrogen", "momentum", "--dim", "4", "--n", "3", "--l", "1", "--p", "0.1", "0.5", "1.0"],
    &["oscillator", "wf", "--n", "3", "--x", "-1", "0", "0.5"],
    &["oscillator", "genfunc", "--z", "0.3", "0.1", "--q", "0.4"],
    &["oscillator", "propagator", "--x", "0.2", "--xp", "-0.1", "--t", "0", "-1"],
    &["oscillator", "magnetic", "--omega-c", "0.5", "--r1", "0.1", "0.2", "--r2", "-0.3", "0.1", "--t", "0", "-1"],
    &["manybody", "cramer", "--n", "4", "--s", "2", "--seed", "7"],
    &["manybody", "overlap", "--m", "5", "--n-occ", "2", "--seed", "1"],
    &["manybody", "lowdin", "--m", "4", "--n-occ", "2", "--seed", "2"],
    &["manybody", "thouless", "--m", "5", "--n-occ", "2", "--seed", "3"],
    &["--format", "csv", "manybody", "lipkin", "--n", "4", "--v", "0.3"],
    &["--format", "csv", "manybody", "lipkin", "--n", "8", "--v", "0.1", "--truncation", "3"],
    &["manybody", "boson-coeffs", "--k-max", "4"],
    &["--format", "text", "gelfand", "dim", "--h", "3", "1", "0", "0"],
];

pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub fn run_bin(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gfkit")).args(args).output().expect("spawn gfkit");
    Run { stdout: out.stdout, stderr: out.stderr, code: out.status.code().unwrap_or(-1) }
}

/// Runs the whole corpus twice through the binary; returns the commands whose
/// bytes or exit codes differ, plus any that did not exit 0.
pub fn corpus_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for cmd in CORPUS {
        let a = run_bin(cmd);
        let b = run_bin(cmd);
        if a.code != 0 || a.code != b.code || a.stdout != b.stdout || a.stderr != b.stderr {
            bad.push(format!("{} (exit {})", cmd.join(" "), a.code));
        }
    }
    bad
}
