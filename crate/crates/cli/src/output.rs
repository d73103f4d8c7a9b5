use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::ValueEnum;
use num_complex::Complex64;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Scientific notation with `digits` significant digits.
pub fn sci(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

/// Machine formats: 12 significant digits.
pub fn num(x: f64) -> String {
    sci(x, 12)
}

/// Human layout: 10 significant digits, plain notation in a readable range.
pub fn human(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e6).contains(&a) {
        let int_digits = if a >= 1.0 { a.log10().floor() as i32 + 1 } else { 0 };
        let lead_zeros = if a < 1.0 && a > 0.0 { (-a.log10()).ceil() as i32 - 1 } else { 0 };
        let decimals = (10 - int_digits + lead_zeros).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci(x, 10)
    }
}

pub fn human_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return human(z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{} {sign} {}i", human(z.re), human(z.im.abs()))
}

pub fn csv<R: AsRef<[String]>>(header: &[&str], rows: &[R]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        s.push_str(&row.as_ref().join(","));
        s.push('\n');
    }
    s
}

/// Left-aligned first column, right-aligned rest.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    let mut line = |cells: Vec<&str>| {
        for (i, cell) in cells.iter().enumerate() {
            let pad = width[i] - cell.chars().count();
            if i == 0 {
                s.push_str(cell);
                s.push_str(&" ".repeat(pad));
            } else {
                s.push_str("  ");
                s.push_str(&" ".repeat(pad));
                s.push_str(cell);
            }
        }
        s.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().take(cols).map(String::as_str).collect());
    }
    s
}

/// `key = value` lines with the keys padded to a common width.
pub fn key_values(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in pairs {
        let _ = writeln!(s, "{k}{} = {v}", " ".repeat(w - k.chars().count()));
    }
    s
}

pub fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub struct Sink {
    pub path: Option<PathBuf>,
}

impl Sink {
    pub fn emit(&self, text: &str) -> std::io::Result<()> {
        match &self.path {
            Some(p) => std::fs::write(p, text),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()
            }
        }
    }
}
