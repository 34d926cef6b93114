//! Score reports in JSON and as an aligned text table.

use serde::Serialize;

use crate::number::{rational_decimal, rational_string, Rational};
use crate::problem::{ConfigFile, RunConfig};
use crate::quality::Ranking;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Score {
    pub exact: String,
    pub decimal: String,
}

impl Score {
    pub fn of(r: &Rational) -> Score {
        Score {
            exact: rational_string(r),
            decimal: rational_decimal(r, 3),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankEntry {
    pub id: String,
    pub aggregate: Score,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureValue {
    pub measure: String,
    pub label: String,
    #[serde(flatten)]
    pub score: Score,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixRow {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<MeasureValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aggregate: Option<Score>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub ranking: Vec<RankEntry>,
    pub selected: Vec<String>,
    pub matrix: Vec<MatrixRow>,
    pub config_echo: ConfigFile,
}

impl Report {
    pub fn new(ranking: &Ranking, config: &RunConfig) -> Report {
        let entry = |i: usize| RankEntry {
            id: ranking.candidates[i].id.clone(),
            aggregate: Score::of(ranking.aggregate(i).expect("ranked candidates have scores")),
        };
        let matrix = ranking
            .candidates
            .iter()
            .map(|c| match &c.outcome {
                Ok((class, ev)) => MatrixRow {
                    id: c.id.clone(),
                    classification: Some(class.to_string()),
                    values: config
                        .quality
                        .sequence
                        .iter()
                        .zip(&ev.values)
                        .map(|(m, v)| MeasureValue {
                            measure: m.kind().id().to_string(),
                            label: m.label(),
                            score: Score::of(v),
                        })
                        .collect(),
                    aggregate: Some(Score::of(&ev.aggregate)),
                    error: None,
                },
                Err(e) => MatrixRow {
                    id: c.id.clone(),
                    classification: None,
                    values: Vec::new(),
                    aggregate: None,
                    error: Some(e.to_string()),
                },
            })
            .collect();
        Report {
            ranking: ranking.order.iter().map(|&i| entry(i)).collect(),
            selected: ranking.selected.iter().map(|&i| ranking.candidates[i].id.clone()).collect(),
            matrix,
            config_echo: config.to_file(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// One row per candidate in ranking order, failed candidates last.
    pub fn to_table(&self) -> String {
        let labels: Vec<String> = self
            .matrix
            .iter()
            .find(|r| !r.values.is_empty())
            .map(|r| r.values.iter().map(|v| v.label.clone()).collect())
            .unwrap_or_default();
        let mut header = vec!["rank".to_string(), "id".to_string(), "class".to_string()];
        header.extend(labels);
        header.push("Q".to_string());
        header.push("selected".to_string());

        let mut rows: Vec<Vec<String>> = Vec::new();
        let find = |id: &str| self.matrix.iter().find(|r| r.id == id).expect("ranked ids appear in the matrix");
        for (pos, entry) in self.ranking.iter().enumerate() {
            let row = find(&entry.id);
            let mut cells = vec![
                (pos + 1).to_string(),
                row.id.clone(),
                row.classification.clone().unwrap_or_default(),
            ];
            cells.extend(row.values.iter().map(|v| v.score.decimal.clone()));
            cells.push(entry.aggregate.decimal.clone());
            cells.push(if self.selected.contains(&entry.id) { "yes" } else { "no" }.to_string());
            rows.push(cells);
        }
        let mut failures = String::new();
        for row in self.matrix.iter().filter(|r| r.error.is_some()) {
            failures.push_str(&format!("{}: error: {}\n", row.id, row.error.as_deref().unwrap_or("")));
        }

        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&header);
        for r in &rows {
            out.push_str(&line(r));
        }
        out.push_str(&failures);
        out
    }
}
