use std::fmt::Write;

use crate::axiom::AxiomId;
use crate::check::{Cell, MatrixReport};
use crate::matrix::ALL_REGIMES;

/// Cell symbols of the text matrix.
pub const LEGEND: &str = "• marked, no counterexample   ✗ marked, counterexample   ? marked, inconclusive\n\
· unmarked, no witness   x unmarked, witness found   (blank) not judged";

fn symbol(cells: &[&Cell]) -> &'static str {
    if cells.is_empty() {
        return "";
    }
    let marked = cells[0].marked;
    let witness = cells.iter().any(|c| c.verdict.is_counterexample());
    let clean = cells.iter().all(|c| c.verdict.is_clean());
    match (marked, witness, clean) {
        (true, true, _) => "✗",
        (true, false, true) => "•",
        (true, false, false) => "?",
        (false, true, _) => "x",
        (false, false, _) => "·",
    }
}

impl MatrixReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// Axioms as rows and table columns as columns. A column with several
    /// configured measures shows the worst verdict among them.
    pub fn to_text(&self) -> String {
        let columns: Vec<&str> = ALL_REGIMES
            .iter()
            .map(|r| r.name)
            .filter(|n| self.cells.iter().any(|c| c.regime == Some(*n)))
            .collect();
        let extra: Vec<String> = {
            let mut v: Vec<String> = self.cells.iter().filter(|c| c.regime.is_none()).map(|c| c.measure.clone()).collect();
            v.dedup();
            v
        };
        let rows = AxiomId::ALL;
        let row_width = rows.iter().map(|a| a.short().chars().count()).max().unwrap_or(0);
        let mut headers: Vec<String> = columns.iter().map(|s| s.to_string()).collect();
        headers.extend(extra.iter().cloned());
        let widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(1)).collect();

        let mut out = String::new();
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
        let _ = write!(out, "{}", pad("", row_width));
        for (h, w) in headers.iter().zip(&widths) {
            let _ = write!(out, "  {}", pad(h, *w));
        }
        out = out.trim_end().to_string();
        out.push('\n');
        for axiom in rows {
            let mut line = pad(axiom.short(), row_width);
            for (i, w) in widths.iter().enumerate() {
                let in_col: Vec<&Cell> = self
                    .cells
                    .iter()
                    .filter(|c| c.verdict.axiom == *axiom)
                    .filter(|c| match columns.get(i) {
                        Some(col) => c.regime == Some(*col),
                        None => c.regime.is_none() && c.measure == extra[i - columns.len()],
                    })
                    .collect();
                let _ = write!(line, "  {}", pad(symbol(&in_col), *w));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out.push('\n');
        out.push_str(LEGEND);
        out.push('\n');

        let low = self.cells.iter().map(|c| c.verdict.exercised).min().unwrap_or(0);
        let _ = writeln!(
            out,
            "\n{} samples requested per axiom, seed {}; fewest exercised in any cell: {low}",
            self.config.samples, self.config.seed
        );
        let failures: Vec<&Cell> = self.marked_failures().collect();
        if !failures.is_empty() {
            let _ = writeln!(out, "\nCounterexamples on marked cells:");
            for c in failures {
                let w = c.verdict.witness().expect("counterexample cells carry a witness");
                let _ = writeln!(
                    out,
                    "  {} / {}: seed {} values [{}] in {} of {} samples",
                    c.measure,
                    c.verdict.axiom,
                    w.seed,
                    w.values.join(", "),
                    match &c.verdict.outcome {
                        crate::check::Outcome::Counterexample { violations, .. } => *violations,
                        _ => 0,
                    },
                    c.verdict.exercised
                );
                let _ = writeln!(out, "    {}", serde_json::to_string(&w.instance).expect("instances serialize"));
            }
        }
        let inconclusive: Vec<&Cell> = self.marked().filter(|c| !c.verdict.is_clean() && !c.verdict.is_counterexample()).collect();
        if !inconclusive.is_empty() {
            let _ = writeln!(out, "\nInconclusive marked cells:");
            for c in inconclusive {
                let _ = writeln!(
                    out,
                    "  {} / {}: {} exercised in {} draws",
                    c.measure, c.verdict.axiom, c.verdict.exercised, c.verdict.attempted
                );
            }
        }
        if !self.meta.is_empty() {
            let _ = writeln!(out, "\nImplication checks between verdicts:");
            for m in &self.meta {
                let _ = writeln!(out, "  {}: {} passed but {} failed ({})", m.measure, m.passed, m.failed, m.relation);
            }
        }
        for e in &self.errors {
            let _ = writeln!(out, "error: {e}");
        }
        out
    }
}
