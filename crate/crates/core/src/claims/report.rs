//! Aggregated verdicts: table and JSON rendering, and comparison between two runs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ClaimVerdict, Status};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub n_max: usize,
    pub map_n_max: usize,
    pub strict_hstarg: bool,
    pub elapsed_ms: f64,
    pub verdicts: Vec<ClaimVerdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub confirmed: usize,
    pub refuted: usize,
    pub inapplicable: usize,
    pub error: usize,
    /// Verdicts that differ from what the source states.
    pub divergent: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    AllAsExpected,
    Divergent,
    Errors,
}

/// A claim whose status differs between two reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictChange {
    pub id: String,
    pub before: Status,
    pub after: Status,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.verdicts.len(),
            ..Summary::default()
        };
        for v in &self.verdicts {
            match v.status {
                Status::Confirmed => s.confirmed += 1,
                Status::Refuted => s.refuted += 1,
                Status::Inapplicable => s.inapplicable += 1,
                Status::Error => s.error += 1,
            }
            s.divergent += v.diverges() as usize;
        }
        s
    }

    pub fn outcome(&self) -> Outcome {
        let s = self.summary();
        if s.error > 0 {
            Outcome::Errors
        } else if s.divergent > 0 {
            Outcome::Divergent
        } else {
            Outcome::AllAsExpected
        }
    }

    pub fn get(&self, id: &str) -> Option<&ClaimVerdict> {
        self.verdicts.iter().find(|v| v.id.eq_ignore_ascii_case(id))
    }

    pub fn divergences(&self) -> impl Iterator<Item = &ClaimVerdict> {
        self.verdicts.iter().filter(|v| v.diverges())
    }

    /// Claims present in both reports whose status changed.
    pub fn diff(&self, other: &Report) -> Vec<VerdictChange> {
        self.verdicts
            .iter()
            .filter_map(|v| {
                let w = other.get(&v.id)?;
                (v.status != w.status).then(|| VerdictChange {
                    id: v.id.clone(),
                    before: v.status,
                    after: w.status,
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            report: &'a Report,
            summary: Summary,
        }
        serde_json::to_string_pretty(&Out {
            report: self,
            summary: self.summary(),
        })
        .expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Fixed-width table, one row per claim, witnesses listed below.
    pub fn to_table(&self) -> String {
        let id_w = self
            .verdicts
            .iter()
            .map(|v| v.id.len())
            .max()
            .unwrap_or(2)
            .max(2);
        let loc_w = self
            .verdicts
            .iter()
            .map(|v| v.location.chars().count())
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:id_w$}  {:loc_w$}  {:17}  {:12}  {:>5}  {:>9}  {:>9}  {:>9}",
            "id", "location", "kind", "status", "n≤", "checked", "support", "ms"
        );
        for v in &self.verdicts {
            let pad = loc_w - v.location.chars().count();
            let status = if v.diverges() {
                format!("{}*", v.status)
            } else {
                v.status.to_string()
            };
            let _ = writeln!(
                out,
                "{:id_w$}  {}{}  {:17}  {:12}  {:>5}  {:>9}  {:>9}  {:>9.1}",
                v.id,
                v.location,
                " ".repeat(pad),
                v.kind.name(),
                status,
                v.bound.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
                v.checked,
                v.support,
                v.time_ms
            );
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "\n{} claims: {} confirmed, {} refuted, {} inapplicable, {} error ({} diverge from the source, marked *); {:.0} ms",
            s.total, s.confirmed, s.refuted, s.inapplicable, s.error, s.divergent, self.elapsed_ms
        );
        for v in self
            .verdicts
            .iter()
            .filter(|v| v.status != Status::Confirmed || !v.detail.is_empty())
        {
            let _ = writeln!(out, "\n{} [{}]: {}", v.id, v.status, v.statement);
            if !v.detail.is_empty() {
                let _ = writeln!(out, "  {}", v.detail);
            }
            if let Some(w) = &v.witness {
                let _ = writeln!(out, "  witness: {}", w.space.to_inline());
                if let Some(t) = &w.target {
                    let _ = writeln!(out, "  target:  {}", t.to_inline());
                }
                if let Some(m) = &w.map {
                    let _ = writeln!(out, "  map:     {m:?}");
                }
                for line in &w.failing {
                    let _ = writeln!(out, "  fails:   {line}");
                }
                for fam in &w.families {
                    let _ = writeln!(out, "  {} = {{{}}}", fam.family, fam.members.join(", "));
                }
            }
        }
        out
    }
}
