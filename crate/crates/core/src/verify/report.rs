use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Family, Prediction};
use crate::game::Outcome;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub family: Family,
    pub params: Vec<usize>,
    pub vertices: usize,
    pub predicted: Prediction,
    /// `None` when the budget ran out.
    pub solved: Option<Outcome>,
    /// `None` for open predictions and skipped rows.
    pub agree: Option<bool>,
    pub nodes: u64,
    pub millis: u64,
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub cap: usize,
    pub budget: u64,
    pub rows: Vec<Row>,
    /// Rows for open problems; never counted as agreement or disagreement.
    pub exploratory: Vec<Row>,
}

impl Report {
    pub fn disagreements(&self) -> Vec<&Row> {
        self.rows.iter().filter(|r| r.agree == Some(false)).collect()
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().chain(&self.exploratory).filter(|r| r.skipped).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text table, predicted rows first, then the exploratory
    /// section and a one-line summary. Timings are left to the JSON form so
    /// the text is identical between runs.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let header = format!(
            "{:<22} {:<10} {:>4} {:>9} {:>6} {:>5} {:>10}",
            "family", "params", "n", "predicted", "solved", "agree", "nodes"
        );
        let line = |r: &Row| {
            let params: Vec<String> = r.params.iter().map(usize::to_string).collect();
            let solved = r.solved.map_or("-".to_string(), |o| o.to_string());
            let agree = match (r.skipped, r.agree) {
                (true, _) => "skip",
                (_, Some(true)) => "yes",
                (_, Some(false)) => "NO",
                (_, None) => "n/a",
            };
            format!(
                "{:<22} {:<10} {:>4} {:>9} {:>6} {:>5} {:>10}",
                r.family.name(),
                params.join(","),
                r.vertices,
                r.predicted.to_string(),
                solved,
                agree,
                r.nodes
            )
        };
        writeln!(out, "{header}").unwrap();
        for r in &self.rows {
            writeln!(out, "{}", line(r)).unwrap();
        }
        if !self.exploratory.is_empty() {
            writeln!(out, "\nexploratory (open problems, no pass/fail)").unwrap();
            writeln!(out, "{header}").unwrap();
            for r in &self.exploratory {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        let agreed = self.rows.iter().filter(|r| r.agree == Some(true)).count();
        writeln!(
            out,
            "\n{} rows: {} agree, {} disagree, {} skipped (cap {}, budget {})",
            self.rows.len() + self.exploratory.len(),
            agreed,
            self.disagreements().len(),
            self.skipped(),
            self.cap,
            self.budget
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_suite;

    #[test]
    fn small_suite_agrees_and_is_deterministic() {
        let a = run_suite(10, 1_000_000).unwrap();
        assert!(a.disagreements().is_empty());
        assert!(a.rows.iter().all(|r| r.vertices <= 10 && !r.skipped));
        assert!(a.exploratory.iter().all(|r| r.predicted == Prediction::Open));
        let b = run_suite(10, 1_000_000).unwrap();
        let strip = |r: &Report| r.rows.iter().map(|x| (x.family, x.params.clone(), x.solved, x.nodes)).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn json_schema() {
        let r = run_suite(6, 1_000_000).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["cap"], 6);
        let row = &v["rows"][0];
        for key in ["family", "params", "predicted", "solved", "agree", "nodes", "millis", "skipped"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        assert_eq!(row["family"], "path");
        assert_eq!(v["exploratory"][0]["predicted"], "open");
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn table_mentions_every_row() {
        let r = run_suite(8, 1_000_000).unwrap();
        let t = r.table();
        assert_eq!(t.lines().filter(|l| l.starts_with("path ")).count(), 7);
        assert!(t.contains("exploratory"));
        assert!(t.contains("0 disagree"));
    }
}
