//! Table rendering in Markdown, CSV and JSON lines.

use std::fmt::Write as _;

use serde::Serialize;
use smooth_core::{BigCount, Family, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Jsonl,
}

/// One computed row: a family at fixed `k`, counts for `n = 0..`.
#[derive(Clone, Debug)]
pub struct Row {
    pub family: Family,
    pub k: usize,
    pub method: Method,
    pub counts: Vec<BigCount>,
}

#[derive(Serialize)]
pub struct Record<'a> {
    pub family: &'a str,
    pub n: usize,
    pub k: usize,
    pub method: &'a str,
    pub count: String,
}

impl<'a> Record<'a> {
    pub fn new(family: Family, n: usize, k: usize, method: Method, count: &BigCount) -> Self {
        Self {
            family: family.as_str(),
            n,
            k,
            method: method.as_str(),
            count: count.to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

pub fn render(rows: &[Row], n_max: usize, format: Format, with_family_column: bool) -> String {
    match format {
        Format::Md => markdown(rows, n_max),
        Format::Csv => csv(rows, n_max, with_family_column),
        Format::Jsonl => jsonl(rows),
    }
}

fn markdown(rows: &[Row], n_max: usize) -> String {
    let mut out = String::from("| n |");
    for n in 0..=n_max {
        let _ = write!(out, " {n} |");
    }
    out.push_str("\n|---|");
    for _ in 0..=n_max {
        out.push_str("---|");
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "| {}(n,{}) |", row.family, row.k);
        for c in &row.counts {
            let _ = write!(out, " {c} |");
        }
        out.push('\n');
    }
    out
}

fn csv(rows: &[Row], n_max: usize, with_family_column: bool) -> String {
    let mut out = String::new();
    if with_family_column {
        out.push_str("family,");
    }
    out.push('k');
    for n in 0..=n_max {
        let _ = write!(out, ",{n}");
    }
    out.push('\n');
    for row in rows {
        if with_family_column {
            let _ = write!(out, "{},", row.family);
        }
        let _ = write!(out, "{}", row.k);
        for c in &row.counts {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
    }
    out
}

fn jsonl(rows: &[Row]) -> String {
    let mut out = String::new();
    for row in rows {
        for (n, c) in row.counts.iter().enumerate() {
            out.push_str(&Record::new(row.family, n, row.k, row.method, c).to_line());
            out.push('\n');
        }
    }
    out
}
