//! Helpers shared by the CLI integration tests.
#![allow(dead_code)] // each test binary uses a different subset

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

pub fn caprng(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_caprng"))
        .args(args)
        .output()
        .expect("spawn caprng binary")
}

pub fn caprng_ok(args: &[&str]) -> Output {
    let out = caprng(args);
    assert!(
        out.status.success(),
        "caprng {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

/// Parses a binary PBM (P4) file into rows of booleans (true = black = 1).
pub fn parse_p4(path: &Path) -> (usize, usize, Vec<Vec<bool>>) {
    let data = std::fs::read(path).expect("read pbm");
    let header_end = data
        .windows(1)
        .enumerate()
        .scan(0, |newlines, (i, w)| {
            if w[0] == b'\n' {
                *newlines += 1;
            }
            Some((i, *newlines))
        })
        .find(|&(_, n)| n == 2)
        .map(|(i, _)| i + 1)
        .expect("two header lines");
    let header = std::str::from_utf8(&data[..header_end]).unwrap();
    let mut lines = header.lines();
    assert_eq!(lines.next(), Some("P4"));
    let mut dims = lines.next().unwrap().split_whitespace();
    let width: usize = dims.next().unwrap().parse().unwrap();
    let height: usize = dims.next().unwrap().parse().unwrap();
    let stride = width.div_ceil(8);
    let body = &data[header_end..];
    assert_eq!(body.len(), stride * height, "pixel payload size");
    let rows = (0..height)
        .map(|r| {
            (0..width)
                .map(|c| body[r * stride + c / 8] & (0x80 >> (c % 8)) != 0)
                .collect()
        })
        .collect();
    (width, height, rows)
}

/// One row of `report --format machine`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MachineRow {
    pub t: usize,
    pub l_star: usize,
    pub rank: usize,
    pub equi: bool,
}

pub fn parse_machine_report(stdout: &str) -> (BTreeMap<String, String>, Vec<MachineRow>) {
    let mut header = BTreeMap::new();
    let mut rows = Vec::new();
    for line in stdout.lines() {
        if let Some(rest) = line.strip_prefix("generator ") {
            for field in rest.split_whitespace() {
                if let Some((k, v)) = field.split_once('=') {
                    header.insert(k.to_string(), v.to_string());
                }
            }
        } else if line.starts_with("t=") {
            let mut fields = BTreeMap::new();
            for field in line.split_whitespace() {
                if let Some((k, v)) = field.split_once('=') {
                    fields.insert(k.to_string(), v.to_string());
                }
            }
            rows.push(MachineRow {
                t: fields["t"].parse().unwrap(),
                l_star: fields["lstar"].parse().unwrap(),
                rank: fields["rank"].parse().unwrap(),
                equi: fields["equi"] == "1",
            });
        }
    }
    (header, rows)
}
