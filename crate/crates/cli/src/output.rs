use std::fmt::Write as _;

use braidcalc::io::{self, Triples};
use braidcalc::{Error, Field, LinMap, Report};
use serde::Serialize;
use serde_json::Value;

/// Fixed description of bases and sign conventions, emitted with every report.
#[derive(Serialize)]
pub struct Conventions {
    pub basis: &'static str,
    pub matrices: &'static str,
    pub scalars: &'static str,
    pub modules: &'static str,
    pub braiding: &'static str,
    pub graded: &'static str,
    pub exterior: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    basis: "tensor products use the row-major basis: e_i ⊗ f_j has index i·dim(F) + j",
    matrices: "a map V -> W is a dim(W) x dim(V) matrix, listed as [row, col, scalar] triples sorted by row then column",
    scalars: "rationals as a or a/b; extension elements as [c0, c1, ...] in powers of the field generator",
    modules: "right actions X ⊗ H -> X and right coactions X -> X ⊗ H; left structures act on H ⊗ X and coact into H ⊗ X",
    braiding: "crossed-module braiding x ⊗ y ↦ y₀ ⊗ x·y₁",
    graded: "graded braidings carry the sign (-1)^(ab) on degrees (a, b); antisymmetrizers sum (-1)^l(w) times the unsigned braid lift of w",
    exterior: "exterior degree j is the coimage of the antisymmetrizer A_j",
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize)]
pub struct ErrorInfo {
    pub name: &'static str,
    pub message: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Item {
    Fact { title: String, value: String },
    Table { title: String, columns: Vec<String>, rows: Vec<Vec<usize>> },
    Matrix { title: String, rows: usize, cols: usize, entries: Triples },
    Definition { title: String, value: Value },
}

impl Item {
    pub fn fact(title: &str, value: impl ToString) -> Self {
        Item::Fact { title: title.into(), value: value.to_string() }
    }

    pub fn matrix(title: impl Into<String>, m: &LinMap, field: &Field) -> Self {
        Item::Matrix { title: title.into(), rows: m.cod(), cols: m.dom(), entries: io::to_triples(m, field) }
    }

    pub fn definition<T: Serialize>(title: &str, value: &T) -> Self {
        Item::Definition { title: title.into(), value: serde_json::to_value(value).expect("serializable") }
    }
}

#[derive(Serialize)]
pub struct Output {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub conventions: Conventions,
    pub reports: Vec<Report>,
    pub results: Vec<Item>,
    /// Definition file written by `--out` for constructive verbs.
    #[serde(skip)]
    pub artifact: Option<String>,
}

impl Output {
    pub fn new(command: &str) -> Self {
        Output {
            command: command.into(),
            status: Status::Pass,
            error: None,
            conventions: CONVENTIONS,
            reports: Vec::new(),
            results: Vec::new(),
            artifact: None,
        }
    }

    /// Record a report; returns whether it passed.
    pub fn report(&mut self, r: Report) -> bool {
        let ok = r.passed();
        self.reports.push(r);
        ok
    }

    pub fn item(&mut self, item: Item) {
        self.results.push(item);
    }

    /// Attach a module error, keeping its failing report as the witness.
    pub fn fail(&mut self, e: Error) {
        if let Some(r) = e.report() {
            self.reports.push(r.clone());
        }
        self.error = Some(ErrorInfo { name: e.name(), message: e.to_string() });
    }

    pub fn finish(mut self) -> Self {
        let ok = self.error.is_none() && self.reports.iter().all(Report::passed);
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    pub fn to_json(&self) -> String {
        io::to_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(s, "braidcalc {}: {status}", self.command);
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {}: {}", e.name, e.message);
        }
        s.push_str("\nconventions\n");
        let c = &self.conventions;
        for (k, v) in [
            ("basis", c.basis),
            ("matrices", c.matrices),
            ("scalars", c.scalars),
            ("modules", c.modules),
            ("braiding", c.braiding),
            ("graded", c.graded),
            ("exterior", c.exterior),
        ] {
            let _ = writeln!(s, "  {k:<9} {v}");
        }
        for r in &self.reports {
            s.push('\n');
            let _ = write!(s, "{r}");
        }
        let mut prev_fact = false;
        for item in &self.results {
            let fact = matches!(item, Item::Fact { .. });
            if !(fact && prev_fact) {
                s.push('\n');
            }
            prev_fact = fact;
            render_item(&mut s, item);
        }
        s
    }
}

fn render_item(s: &mut String, item: &Item) {
    match item {
        Item::Fact { title, value } => {
            let _ = writeln!(s, "{title}: {value}");
        }
        Item::Table { title, columns, rows } => {
            let _ = writeln!(s, "{title}");
            let mut header = vec!["degree".to_string()];
            header.extend(columns.iter().cloned());
            let body: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(j, row)| std::iter::once(j.to_string()).chain(row.iter().map(usize::to_string)).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|c| body.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
                .collect();
            for line in std::iter::once(&header).chain(body.iter()) {
                let cells: Vec<String> = line.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
                let _ = writeln!(s, "  {}", cells.join("  "));
            }
        }
        Item::Matrix { title, rows, cols, entries } => {
            let _ = writeln!(s, "{title} ({rows} x {cols}, {} nonzero)", entries.len());
            for (r, c, v) in entries {
                let _ = writeln!(s, "  {r} {c} {v}");
            }
        }
        Item::Definition { title, value } => {
            let _ = writeln!(s, "{title}");
            for line in io::to_json(value).lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
    }
}
