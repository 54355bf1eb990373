//! Exact decision and optimisation of the bipartite crossing number.
//!
//! Each connected component is reduced by merging sibling leaves, settled
//! directly when it is a caterpillar or provably over budget, and otherwise
//! solved by evaluating every pair of candidate layouts.
//!
//! Components are independent: drawing them side by side adds no crossings,
//! and restricting any drawing to a component keeps only crossings inside
//! it, so the crossing number of a graph is the sum over its components.

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::drawing::{naive_crossings, CrossingCounter, Drawing, Layout};
use crate::error::{Error, Result};
use crate::fpt::{count_bound, enumerate_candidates, CountBound, EnumerationLimits};
use crate::graph::{BipartiteGraph, Side};

pub const DEFAULT_K_MAX: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_candidates_per_side: usize,
    pub max_pair_evaluations: u64,
    pub max_gap_budget: usize,
    /// Largest side the exhaustive oracle will scan.
    pub oracle_max_side: usize,
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_candidates_per_side: 1 << 24,
            max_pair_evaluations: 1 << 30,
            max_gap_budget: 1 << 16,
            oracle_max_side: 8,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    FptEnum,
    Fastpath,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::FptEnum => "fpt-enum",
            Method::Fastpath => "fastpath",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::No => "no",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub components: usize,
    pub candidates_x: u64,
    pub candidates_y: u64,
    pub pairs_evaluated: u64,
    pub pruned: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: &SolveStats) {
        self.components += other.components;
        self.candidates_x += other.candidates_x;
        self.candidates_y += other.candidates_y;
        self.pairs_evaluated += other.pairs_evaluated;
        self.pruned += other.pruned;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// The queried `k` (for exact solves, the largest `k` tried).
    pub budget: u64,
    pub decision: Decision,
    /// `None` when the crossing number exceeds `budget`.
    pub optimum: Option<u64>,
    pub witness: Option<Drawing>,
    pub stats: SolveStats,
    pub method: Method,
}

impl SolveReport {
    /// Decision, optimum and witness agree with each other.
    pub fn is_consistent(&self) -> bool {
        let within = matches!(self.optimum, Some(c) if c <= self.budget);
        let decided = (self.decision == Decision::Yes) == within;
        let witnessed = self.witness.is_some() == within;
        let sound = match (&self.witness, self.optimum) {
            (Some(w), Some(c)) => w.crossing_number_fast() == c,
            _ => true,
        };
        decided && witnessed && sound
    }
}

/// Outcome for one connected component. Layouts refer to the component's
/// own (unmerged) vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    pub optimum: Option<u64>,
    pub witness: Option<(Layout, Layout)>,
    pub method: Method,
    pub stats: SolveStats,
}

/// Exhaustive count of drawings within a crossing budget, alongside the
/// per-side layout-count bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub k: u64,
    /// Drawings (layout pairs) with at most `k` crossings.
    pub count: u64,
    /// All layout pairs, `|X|! * |Y|!`.
    pub total_drawings: u64,
    pub bound_x: CountBound,
    pub bound_y: CountBound,
    /// `bound_x * bound_y`.
    pub bound: CountBound,
    /// The bounds are only claimed for connected graphs without sibling pairs.
    pub sibling_free: bool,
    pub connected: bool,
}

#[derive(Default)]
pub struct Solver {
    config: SolverConfig,
    pool: Option<ThreadPool>,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Result<Self> {
        let pool = if config.threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(config.threads)
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?,
            )
        } else {
            None
        };
        Ok(Solver { config, pool })
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    fn check_oracle_size(&self, g: &BipartiteGraph) -> Result<()> {
        let limit = self.config.oracle_max_side;
        for side in [Side::X, Side::Y] {
            let n = g.side_len(side);
            if n > limit {
                return Err(Error::ResourceLimit {
                    stage: "oracle",
                    limit: limit as u64,
                    detail: format!("side {side} has {n} vertices"),
                });
            }
        }
        Ok(())
    }

    /// Exact minimum by scanning every layout pair with the quadratic
    /// counter. Layouts are visited in
    /// lexicographic order of their rank arrays and only strict improvements
    /// are kept, so the witness is the lexicographically smallest optimum.
    pub fn bruteforce(&self, g: &BipartiteGraph) -> Result<(u64, Drawing)> {
        self.check_oracle_size(g)?;
        let xs = permutations(g.x_count());
        let ys = permutations(g.y_count());
        let mut best = (u64::MAX, 0, 0);
        'scan: for (i, fx) in xs.iter().enumerate() {
            for (j, fy) in ys.iter().enumerate() {
                let c = naive_crossings(g, fx, fy);
                if c < best.0 {
                    best = (c, i, j);
                    if c == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let (c, i, j) = best;
        let d = Drawing::from_ranks(g.clone(), xs[i].clone(), ys[j].clone())?;
        Ok((c, d))
    }

    /// Counts all drawings of `g` with at most `k` crossings.
    pub fn census(&self, g: &BipartiteGraph, k: u64) -> Result<Census> {
        self.check_oracle_size(g)?;
        let xs = permutations(g.x_count());
        let ys = permutations(g.y_count());
        let mut count = 0u64;
        for fx in &xs {
            for fy in &ys {
                if naive_crossings(g, fx, fy) <= k {
                    count += 1;
                }
            }
        }
        let bound_x = count_bound(g.x_count(), k);
        let bound_y = count_bound(g.y_count(), k);
        Ok(Census {
            k,
            count,
            total_drawings: (xs.len() as u64) * (ys.len() as u64),
            bound_x,
            bound_y,
            bound: bound_x.times(bound_y),
            sibling_free: !g.has_sibling_pairs(),
            connected: g.is_connected(),
        })
    }

    /// Crossing number of a connected graph if it is at most `budget`.
    pub fn solve_component(&self, g: &BipartiteGraph, budget: u64) -> Result<ComponentSolution> {
        let merge = g.merge_sibling_leaves_mapped();
        let h = &merge.graph;
        let lift = |fx: &[usize], fy: &[usize]| {
            (
                Layout::new_unchecked(Side::X, merge.lift_ranks(Side::X, fx)),
                Layout::new_unchecked(Side::Y, merge.lift_ranks(Side::Y, fy)),
            )
        };
        let mut stats = SolveStats {
            components: 1,
            ..Default::default()
        };

        if let Some((fx, fy)) = h.caterpillar_ranks() {
            return Ok(ComponentSolution {
                optimum: Some(0),
                witness: Some(lift(&fx, &fy)),
                method: Method::Fastpath,
                stats,
            });
        }
        let lower = h.crossing_lower_bound();
        if lower > budget {
            return Ok(ComponentSolution {
                optimum: None,
                witness: None,
                method: Method::Fastpath,
                stats,
            });
        }
        if h.x_count() <= 1 || h.y_count() <= 1 {
            // a star: every drawing is crossing-free
            let fx: Vec<usize> = (0..h.x_count()).collect();
            let fy: Vec<usize> = (0..h.y_count()).collect();
            return Ok(ComponentSolution {
                optimum: Some(0),
                witness: Some(lift(&fx, &fy)),
                method: Method::Fastpath,
                stats,
            });
        }

        let limits = EnumerationLimits {
            max_candidates: self.config.max_candidates_per_side,
            max_gap_budget: self.config.max_gap_budget,
        };
        let mut xs = enumerate_candidates(h, Side::X, budget, &limits)?;
        let mut ys = enumerate_candidates(h, Side::Y, budget, &limits)?;
        xs.layouts.sort_unstable();
        ys.layouts.sort_unstable();
        stats.candidates_x = xs.layouts.len() as u64;
        stats.candidates_y = ys.layouts.len() as u64;
        stats.pruned = xs.pruned + ys.pruned;

        let pairs = stats.candidates_x.saturating_mul(stats.candidates_y);
        if pairs > self.config.max_pair_evaluations {
            return Err(Error::ResourceLimit {
                stage: "pair search",
                limit: self.config.max_pair_evaluations,
                detail: format!(
                    "{} x {} candidate pairs",
                    stats.candidates_x, stats.candidates_y
                ),
            });
        }

        let (best, evaluated) = self.search_pairs(h, &xs.layouts, &ys.layouts, lower);
        stats.pairs_evaluated = evaluated;
        let (optimum, witness) = match best {
            Some((c, i, j)) if c <= budget => (
                Some(c),
                Some(lift(xs.layouts[i].ranks(), ys.layouts[j].ranks())),
            ),
            _ => (None, None),
        };
        Ok(ComponentSolution {
            optimum,
            witness,
            method: Method::FptEnum,
            stats,
        })
    }

    /// Minimum over the cross product of candidate layouts, as
    /// `(crossings, x index, y index)` with the lexicographically smallest
    /// indices among minima. Scanning stops once a pair meets `lower`.
    /// Returns the number of evaluated pairs, which does not depend on the
    /// thread count.
    fn search_pairs(
        &self,
        h: &BipartiteGraph,
        xs: &[Layout],
        ys: &[Layout],
        lower: u64,
    ) -> (Option<(u64, usize, usize)>, u64) {
        let best_for = |counter: &mut CrossingCounter, i: usize| {
            let order = xs[i].order();
            let mut best = (u64::MAX, 0);
            let mut evaluated = 0;
            for (j, fy) in ys.iter().enumerate() {
                evaluated += 1;
                let c = counter.count_in_order(&order, fy.ranks());
                if c < best.0 {
                    best = (c, j);
                    if c <= lower {
                        break;
                    }
                }
            }
            (best.0, best.1, evaluated)
        };

        let rows: Vec<Option<(u64, usize, u64)>> = match &self.pool {
            None => {
                let mut counter = CrossingCounter::new(h);
                let mut rows = Vec::with_capacity(xs.len());
                for i in 0..xs.len() {
                    let row = best_for(&mut counter, i);
                    rows.push(Some(row));
                    if row.0 <= lower {
                        break;
                    }
                }
                rows
            }
            Some(pool) => {
                let stop = AtomicUsize::new(usize::MAX);
                pool.install(|| {
                    (0..xs.len())
                        .into_par_iter()
                        .map_init(
                            || CrossingCounter::new(h),
                            |counter, i| {
                                if i > stop.load(Ordering::Relaxed) {
                                    return None;
                                }
                                let row = best_for(counter, i);
                                if row.0 <= lower {
                                    stop.fetch_min(i, Ordering::Relaxed);
                                }
                                Some(row)
                            },
                        )
                        .collect()
                })
            }
        };

        let mut best: Option<(u64, usize, usize)> = None;
        let mut evaluated = 0;
        for (i, row) in rows.into_iter().enumerate() {
            // rows past the first one meeting `lower` may be missing
            let Some((c, j, n)) = row else { break };
            evaluated += n;
            if best.is_none_or(|(b, _, _)| c < b) {
                best = Some((c, i, j));
            }
            if c <= lower {
                break;
            }
        }
        (best, evaluated)
    }

    /// Decides whether `g` has a drawing with at most `k` crossings.
    ///
    /// Components are solved in order, each against the budget left over by
    /// the previous ones. The witness places components side by side.
    pub fn decide(&self, g: &BipartiteGraph, k: u64) -> Result<SolveReport> {
        let components = g.connected_components();
        let mut stats = SolveStats::default();
        let mut method = Method::Fastpath;
        let mut remaining = k;
        let mut fx = vec![0; g.x_count()];
        let mut fy = vec![0; g.y_count()];
        let (mut x_offset, mut y_offset) = (0, 0);

        for comp in &components {
            let sol = self.solve_component(&comp.graph, remaining)?;
            stats.absorb(&sol.stats);
            if sol.method == Method::FptEnum {
                method = Method::FptEnum;
            }
            let (Some(c), Some((cx, cy))) = (sol.optimum, sol.witness) else {
                return Ok(SolveReport {
                    budget: k,
                    decision: Decision::No,
                    optimum: None,
                    witness: None,
                    stats,
                    method,
                });
            };
            remaining -= c;
            for (local, &orig) in comp.x_vertices.iter().enumerate() {
                fx[orig] = x_offset + cx.rank(local);
            }
            for (local, &orig) in comp.y_vertices.iter().enumerate() {
                fy[orig] = y_offset + cy.rank(local);
            }
            x_offset += comp.x_vertices.len();
            y_offset += comp.y_vertices.len();
        }

        let witness = Drawing::from_ranks(g.clone(), fx, fy)?;
        Ok(SolveReport {
            budget: k,
            decision: Decision::Yes,
            optimum: Some(k - remaining),
            witness: Some(witness),
            stats,
            method,
        })
    }

    /// Smallest `k <= k_max` with a yes-decision.
    pub fn exact(&self, g: &BipartiteGraph, k_max: u64) -> Result<SolveReport> {
        let mut k = 0;
        loop {
            let report = self.decide(g, k)?;
            if report.decision == Decision::Yes || k >= k_max {
                return Ok(report);
            }
            k += 1;
        }
    }

    /// [`Self::decide`] answered by the exhaustive oracle.
    pub fn decide_with_oracle(&self, g: &BipartiteGraph, k: u64) -> Result<SolveReport> {
        let (c, d) = self.bruteforce(g)?;
        Ok(oracle_report(g, c, d, k))
    }

    /// [`Self::exact`] answered by the exhaustive oracle.
    pub fn exact_with_oracle(&self, g: &BipartiteGraph, k_max: u64) -> Result<SolveReport> {
        let (c, d) = self.bruteforce(g)?;
        Ok(oracle_report(g, c, d, c.min(k_max)))
    }
}

fn oracle_report(g: &BipartiteGraph, optimum: u64, witness: Drawing, k: u64) -> SolveReport {
    let yes = optimum <= k;
    SolveReport {
        budget: k,
        decision: if yes { Decision::Yes } else { Decision::No },
        optimum: yes.then_some(optimum),
        witness: yes.then_some(witness),
        stats: SolveStats {
            components: g.component_count(),
            ..Default::default()
        },
        method: Method::Oracle,
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

pub fn bcr_bruteforce(g: &BipartiteGraph) -> Result<(u64, Drawing)> {
    Solver::default().bruteforce(g)
}

pub fn bcr_component(g: &BipartiteGraph, budget: u64) -> Result<ComponentSolution> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Solver::default().solve_component(g, budget)
}

pub fn bcr_decide(g: &BipartiteGraph, k: u64) -> Result<SolveReport> {
    Solver::default().decide(g, k)
}

pub fn bcr_exact(g: &BipartiteGraph, k_max: u64) -> Result<SolveReport> {
    Solver::default().exact(g, k_max)
}

pub fn census(g: &BipartiteGraph, k: u64) -> Result<Census> {
    Solver::default().census(g, k)
}
