#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ultrafilter::axioms::has_fip;
use ultrafilter::cofinite::CofiniteSet;
use ultrafilter::setcore::{powerset_iter, Subset, SubsetFamily, Universe};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_subset(rng: &mut StdRng, width: usize) -> Subset {
    let bits = rng.gen::<u64>() & ((1u64 << width) - 1);
    Subset::from_bits(bits, width).unwrap()
}

/// A random family of `1..=max_len` members; about half are built around a
/// shared nonempty core so that both FIP outcomes are common.
pub fn random_family(rng: &mut StdRng, width: usize, max_len: usize) -> SubsetFamily {
    let len = rng.gen_range(1..=max_len);
    let core = if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..width);
        Some(Subset::from_indices(width, [i]).unwrap())
    } else {
        None
    };
    let members = (0..len).map(|_| {
        let s = random_subset(rng, width);
        match core {
            Some(c) => s.union(&c),
            None => s,
        }
    });
    SubsetFamily::new(width, members.collect::<Vec<_>>()).unwrap()
}

/// A random nonempty family with the finite intersection property.
pub fn random_fip_family(rng: &mut StdRng, width: usize, max_len: usize) -> SubsetFamily {
    loop {
        let f = random_family(rng, width, max_len);
        if has_fip(&f) {
            return f;
        }
    }
}

/// Every family of subsets of `universe`, i.e. every subset of `pow(A)`.
pub fn all_families(universe: &Universe) -> impl Iterator<Item = SubsetFamily> {
    let subsets: Vec<Subset> = powerset_iter(universe).unwrap().collect();
    let width = universe.size();
    assert!(subsets.len() <= 16);
    (0u64..1 << subsets.len()).map(move |sel| {
        SubsetFamily::new(
            width,
            subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| sel & (1 << i) != 0)
                .map(|(_, s)| *s)
                .collect::<Vec<_>>(),
        )
        .unwrap()
    })
}

pub fn random_cofinite(rng: &mut StdRng) -> CofiniteSet {
    let len = rng.gen_range(0..8);
    let support: Vec<u64> = (0..len).map(|_| rng.gen_range(0..40)).collect();
    if rng.gen_bool(0.5) {
        CofiniteSet::finite(support)
    } else {
        CofiniteSet::cofinite(support)
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub const FIXTURES: [&str; 5] = [
    "trivial_filter",
    "principal_family",
    "fip_pair",
    "fip_violating_pair",
    "cofinite_sample",
];

const FAMILY_COMMANDS: &[&[&str]] = &[
    &["check", "--kind", "filter"],
    &["check", "--kind", "base"],
    &["check", "--kind", "ultrafilter"],
    &["check", "--kind", "maxfilter"],
    &["check", "--kind", "free"],
    &["check", "--kind", "fip"],
    &["extend", "--to", "base"],
    &["extend", "--to", "filter"],
    &["extend", "--to", "ultrafilter", "--trace"],
];

const COFINITE_COMMANDS: &[&[&str]] = &[
    &["check", "--kind", "frechet"],
    &["check", "--kind", "filter"],
    &["extend", "--to", "ultrafilter"],
];

pub struct Run {
    pub args: Vec<String>,
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ultrafilter"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        args: args.iter().map(|s| s.to_string()).collect(),
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs every command for a fixture and returns the runs plus a transcript
/// of them. The input path is elided from the transcript.
pub fn transcript(fixture: &str) -> (Vec<Run>, String) {
    let input = golden_dir().join(format!("{fixture}.json"));
    let input = input.to_str().unwrap();
    let commands = if fixture.starts_with("cofinite") {
        COFINITE_COMMANDS
    } else {
        FAMILY_COMMANDS
    };
    let mut text = String::new();
    let mut runs = Vec::new();
    for cmd in commands {
        let mut args: Vec<&str> = cmd.to_vec();
        args.extend(["--input", input]);
        let run = run_binary(&args);
        text.push_str(&format!("$ ultrafilter {}\n", cmd.join(" ")));
        text.push_str(&format!("exit {}\n", run.code));
        text.push_str("--- stdout\n");
        text.push_str(&run.stdout);
        text.push_str("--- stderr\n");
        text.push_str(&run.stderr);
        text.push('\n');
        runs.push(run);
    }
    (runs, text)
}

pub fn golden_path(fixture: &str) -> PathBuf {
    golden_dir().join(format!("{fixture}.golden"))
}
