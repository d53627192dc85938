#![allow(dead_code)]

use std::io::Cursor;

use clap::Parser;
use dspm::cli::{execute, Cli, Outcome};
use dspm_core::perm::{all_perms, Perm};
use num_bigint::BigUint;

/// Runs the CLI in-process with `stdin` as the confirmation input.
pub fn run(args: &[&str], stdin: &str) -> (Outcome, String) {
    let cli = Cli::try_parse_from(std::iter::once("dspm").chain(args.iter().copied())).unwrap();
    let mut log = Vec::new();
    let outcome = execute(&cli, &mut Cursor::new(stdin.as_bytes().to_vec()), &mut log);
    (outcome, String::from_utf8(log).unwrap())
}

pub fn run_json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (out, _) = run(&all, "");
    let v: serde_json::Value = serde_json::from_str(&out.stdout).expect("stdout is pure JSON");
    (v, out.status as i32)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cycles(p: &Perm) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for s in 1..=n {
        let (mut len, mut x) = (0, s);
        while !seen[x] {
            seen[x] = true;
            x = p.apply(x);
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

/// `S_n × S_n` orbits on `n × n` 0/1 matrices by Burnside's lemma.
pub fn burnside_orbits(n: usize) -> BigUint {
    let perms = all_perms(n);
    let mut fixed = BigUint::from(0u8);
    for a in &perms {
        for b in &perms {
            let c: usize = cycles(a)
                .iter()
                .flat_map(|&x| cycles(b).into_iter().map(move |y| gcd(x, y)))
                .sum();
            fixed += BigUint::from(1u8) << c;
        }
    }
    fixed / BigUint::from(perms.len() * perms.len())
}
