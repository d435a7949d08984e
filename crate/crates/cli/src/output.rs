//! Rendering of tabular results as aligned text, CSV, Markdown or JSON.

use clap::ValueEnum;
use serde::Serialize;

/// Version tag of the JSON envelope; bump on incompatible changes.
pub const SCHEMA: &str = "lcdbch.report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Md,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Table {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(c);
                s.extend(std::iter::repeat(' ').take(w - c.chars().count()));
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn markdown(&self) -> String {
        let row = |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| c.replace('|', "\\|")).collect::<Vec<_>>().join(" | "));
        let mut out = row(&self.headers);
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for r in &self.rows {
            out.push_str(&row(r));
        }
        out
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    data: &'a T,
}

pub fn json<T: Serialize>(command: &str, data: &T) -> String {
    let env = Envelope {
        schema: SCHEMA,
        command,
        data,
    };
    serde_json::to_string_pretty(&env).expect("report types serialize") + "\n"
}

/// Renders `table` in a tabular format, or `data` as JSON. Text output may
/// carry a preamble line.
pub fn render<T: Serialize>(format: Format, command: &str, preamble: Option<&str>, table: &Table, data: &T) -> String {
    match format {
        Format::Json => json(command, data),
        Format::Csv => table.csv(),
        Format::Md => table.markdown(),
        Format::Text => match preamble {
            Some(p) => format!("{p}\n{}", table.text()),
            None => table.text(),
        },
    }
}
