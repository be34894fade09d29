//! Report model and its text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Field {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Section {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Field>,
    pub results: Vec<Section>,
    pub checks: Vec<CheckRow>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            results: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl ToString) {
        self.inputs.push(Field {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, name: &str, status: &str, detail: impl Into<String>) {
        self.checks.push(CheckRow {
            name: name.to_string(),
            status: status.to_string(),
            detail: detail.into(),
        });
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for f in &self.inputs {
            let _ = writeln!(out, "  {} = {}", f.name, f.value);
        }
        for s in &self.results {
            let _ = writeln!(out, "\n[{}]", s.title);
            out.push_str(&table(&s.columns, &s.rows));
        }
        if !self.checks.is_empty() {
            out.push_str("\n[checks]\n");
            let rows: Vec<Vec<String>> = self
                .checks
                .iter()
                .map(|c| vec![c.name.clone(), c.status.clone(), c.detail.clone()])
                .collect();
            out.push_str(&table(&["name".into(), "status".into(), "detail".into()], &rows));
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        for s in &self.results {
            let header: Vec<&str> = std::iter::once("section").chain(s.columns.iter().map(String::as_str)).collect();
            w.write_record(&header).expect("in-memory write");
            for r in &s.rows {
                let rec: Vec<&str> = std::iter::once(s.title.as_str()).chain(r.iter().map(String::as_str)).collect();
                w.write_record(&rec).expect("in-memory write");
            }
        }
        if !self.checks.is_empty() {
            w.write_record(["section", "name", "status", "detail"]).expect("in-memory write");
            for c in &self.checks {
                w.write_record(["checks", &c.name, &c.status, &c.detail]).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn table(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(columns);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(&rule));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}
