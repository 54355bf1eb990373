//! Machine-readable and human-readable reports.

use std::fmt::Write as _;

use bicross_core::fpt::CountBound;
use bicross_core::{BipartiteGraph, Census, Drawing, SolveReport, SolveStats};
use serde::{Serialize, Serializer};

/// Solved optimum, or the marker that it exceeds the queried budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimum {
    Crossings(u64),
    ExceedsBudget,
}

impl Serialize for Optimum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Optimum::Crossings(c) => s.serialize_u64(*c),
            Optimum::ExceedsBudget => s.serialize_str("exceeds_budget"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub fx: Vec<usize>,
    pub fy: Vec<usize>,
}

impl From<&Drawing> for Witness {
    fn from(d: &Drawing) -> Self {
        Witness {
            fx: d.fx().ranks().to_vec(),
            fy: d.fy().ranks().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct StatsDoc {
    pub components: usize,
    pub candidates_x: u64,
    pub candidates_y: u64,
    pub pairs_evaluated: u64,
    pub pruned: u64,
}

impl From<&SolveStats> for StatsDoc {
    fn from(s: &SolveStats) -> Self {
        StatsDoc {
            components: s.components,
            candidates_x: s.candidates_x,
            candidates_y: s.candidates_y,
            pairs_evaluated: s.pairs_evaluated,
            pruned: s.pruned,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundDoc {
    pub value: u64,
    pub saturated: bool,
}

impl From<CountBound> for BoundDoc {
    fn from(b: CountBound) -> Self {
        BoundDoc {
            value: b.value,
            saturated: b.saturated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusDoc {
    pub count: u64,
    pub total_drawings: u64,
    pub bound_x: BoundDoc,
    pub bound_y: BoundDoc,
    pub bound: BoundDoc,
    pub sibling_free: bool,
    pub connected: bool,
}

impl From<&Census> for CensusDoc {
    fn from(c: &Census) -> Self {
        CensusDoc {
            count: c.count,
            total_drawings: c.total_drawings,
            bound_x: c.bound_x.into(),
            bound_y: c.bound_y.into(),
            bound: c.bound.into(),
            sibling_free: c.sibling_free,
            connected: c.connected,
        }
    }
}

/// One command's result. Every key is always serialized; absent values
/// become `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub input: String,
    pub n_x: usize,
    pub n_y: usize,
    pub m: usize,
    pub k: Option<u64>,
    pub decision: Option<String>,
    pub optimum: Option<Optimum>,
    pub witness: Option<Witness>,
    pub stats: StatsDoc,
    pub method: String,
    pub census: Option<CensusDoc>,
    pub wall_time_ms: u64,
}

impl ReportDocument {
    fn base(input: &str, g: &BipartiteGraph, k: u64, method: &str) -> Self {
        ReportDocument {
            input: input.to_string(),
            n_x: g.x_count(),
            n_y: g.y_count(),
            m: g.edge_count(),
            k: Some(k),
            decision: None,
            optimum: None,
            witness: None,
            stats: StatsDoc::default(),
            method: method.to_string(),
            census: None,
            wall_time_ms: 0,
        }
    }

    pub fn from_decide(input: &str, g: &BipartiteGraph, r: &SolveReport) -> Self {
        let mut doc = Self::from_exact(input, g, r.budget, r);
        doc.decision = Some(r.decision.as_str().to_string());
        doc
    }

    /// `k_max` is the largest budget the exact search was allowed to try.
    pub fn from_exact(input: &str, g: &BipartiteGraph, k_max: u64, r: &SolveReport) -> Self {
        let mut doc = Self::base(input, g, k_max, r.method.as_str());
        doc.optimum = Some(match r.optimum {
            Some(c) => Optimum::Crossings(c),
            None => Optimum::ExceedsBudget,
        });
        doc.witness = r.witness.as_ref().map(Witness::from);
        doc.stats = (&r.stats).into();
        doc
    }

    pub fn from_census(input: &str, g: &BipartiteGraph, c: &Census) -> Self {
        let mut doc = Self::base(input, g, c.k, "census");
        doc.stats.components = g.component_count();
        doc.census = Some(c.into());
        doc
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Two-column `key  value` table.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut rows: Vec<(&str, String)> = vec![
            ("input", self.input.clone()),
            ("vertices", format!("{} + {}", self.n_x, self.n_y)),
            ("edges", self.m.to_string()),
            ("k", opt(self.k.map(|k| k.to_string()))),
            ("decision", opt(self.decision.clone())),
            (
                "optimum",
                opt(self.optimum.map(|o| match o {
                    Optimum::Crossings(c) => c.to_string(),
                    Optimum::ExceedsBudget => "exceeds budget".into(),
                })),
            ),
        ];
        if let Some(w) = &self.witness {
            rows.push(("fx", format!("{:?}", w.fx)));
            rows.push(("fy", format!("{:?}", w.fy)));
        }
        rows.push(("method", self.method.clone()));
        rows.push(("components", self.stats.components.to_string()));
        if self.census.is_none() {
            rows.push((
                "candidates",
                format!("{} x {}", self.stats.candidates_x, self.stats.candidates_y),
            ));
            rows.push(("pairs evaluated", self.stats.pairs_evaluated.to_string()));
            rows.push(("pruned", self.stats.pruned.to_string()));
        }
        if let Some(c) = &self.census {
            let bound = |b: BoundDoc| {
                format!(
                    "{}{}",
                    b.value,
                    if b.saturated { " (saturated)" } else { "" }
                )
            };
            rows.push(("drawings <= k", c.count.to_string()));
            rows.push(("drawings total", c.total_drawings.to_string()));
            rows.push(("bound", bound(c.bound)));
            rows.push(("sibling-free", c.sibling_free.to_string()));
        }
        rows.push(("time", format!("{} ms", self.wall_time_ms)));

        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}
