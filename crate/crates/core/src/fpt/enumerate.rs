use crate::drawing::Layout;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};

use super::spine::{build_spine, SpineMap};

/// Direction from `T(x)` to `x` on the layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A layout described relative to a spine: the root's rank plus, for every
/// other vertex, the number of vertices strictly between it and its
/// successor (`gap`) and on which side of the successor it lies.
///
/// Vectors are indexed by vertex; the root's entries are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateEncoding {
    pub root_rank: usize,
    pub gaps: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl CandidateEncoding {
    /// Sum of the gaps over non-root vertices.
    pub fn gap_sum(&self, root: usize) -> usize {
        self.gaps
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != root)
            .map(|(_, &g)| g)
            .sum()
    }
}

/// Upper bound on the gap sum of any layout taking part in a drawing with at
/// most `k` crossings, for a side with `a` vertices: `4k + a - 1`.
///
/// Every vertex strictly between `x` and `T(x)`, except possibly one leaf
/// hanging off `mid(x)`, has an edge crossing the witness path of `x`. A
/// crossing is charged at most four times because each edge lies on at most
/// two witness paths, so `sum(gap - 1) <= 4k`.
pub fn gap_budget(a: usize, k: u64) -> Option<usize> {
    let k = usize::try_from(k).ok()?;
    k.checked_mul(4)?.checked_add(a.checked_sub(1)?)
}

/// Reads the encoding of `layout` off the spine.
pub fn encode_layout(spine: &SpineMap, layout: &Layout) -> CandidateEncoding {
    let a = spine.len();
    let mut gaps = vec![0; a];
    let mut signs = vec![Sign::Plus; a];
    for x in (0..a).filter(|&x| x != spine.root()) {
        let t = spine.successor(x).expect("non-root vertex has a successor");
        let (rx, rt) = (layout.rank(x), layout.rank(t));
        gaps[x] = rx.abs_diff(rt) - 1;
        signs[x] = if rx > rt { Sign::Plus } else { Sign::Minus };
    }
    CandidateEncoding {
        root_rank: layout.rank(spine.root()),
        gaps,
        signs,
    }
}

/// Places the root at `root_rank`, then every other vertex at
/// `rank(T(x)) ± (gap(x) + 1)` working outward from the root. Returns `None`
/// if a rank falls outside `0..a` or two vertices collide.
pub fn decode_layout(spine: &SpineMap, enc: &CandidateEncoding) -> Option<Layout> {
    let a = spine.len();
    if enc.root_rank >= a || enc.gaps.len() != a || enc.signs.len() != a {
        return None;
    }
    let order = spine.tree_order();
    if order.len() != a {
        return None;
    }
    let mut rank = vec![usize::MAX; a];
    let mut used = vec![false; a];
    rank[spine.root()] = enc.root_rank;
    used[enc.root_rank] = true;
    for &x in &order[1..] {
        let base = rank[spine.successor(x)?];
        let step = enc.gaps[x].checked_add(1)?;
        let r = match enc.signs[x] {
            Sign::Plus => base.checked_add(step)?,
            Sign::Minus => base.checked_sub(step)?,
        };
        if r >= a || used[r] {
            return None;
        }
        used[r] = true;
        rank[x] = r;
    }
    Some(Layout::new_unchecked(spine.side(), rank))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Maximum number of layouts emitted for one side.
    pub max_candidates: usize,
    /// Maximum admissible gap budget `4k + a - 1`.
    pub max_gap_budget: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_candidates: 1 << 24,
            max_gap_budget: 1 << 16,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Candidates {
    pub spine: SpineMap,
    /// Distinct layouts, in generation order.
    pub layouts: Vec<Layout>,
    /// Partial placements cut because a rank was out of range or taken.
    pub pruned: u64,
}

/// Every layout of `side` whose spine encoding has gap sum at most
/// `4k + a - 1`. This includes the layout of that side in every drawing of
/// `g` with at most `k` crossings, provided `g` is connected and has no
/// sibling pairs. Edge weights are at least one, so the bound holds for
/// weighted crossing counts as well.
///
/// Encodings are generated depth-first along the spine tree, so a partial
/// placement is abandoned as soon as a rank collides or leaves the layer.
/// Decoding is injective (see [`encode_layout`]), so the output has no
/// duplicates.
pub fn enumerate_candidates(
    g: &BipartiteGraph,
    side: Side,
    k: u64,
    limits: &EnumerationLimits,
) -> Result<Candidates> {
    let a = g.side_len(side);
    let budget = gap_budget(a, k)
        .filter(|&b| b <= limits.max_gap_budget)
        .ok_or_else(|| Error::ResourceLimit {
            stage: "candidate enumeration",
            limit: limits.max_gap_budget as u64,
            detail: format!("gap budget 4*{k} + {a} - 1 exceeds max_gap_budget"),
        })?;
    let spine = build_spine(g, side, 0)?;
    let order = spine.tree_order();
    let parent: Vec<usize> = order
        .iter()
        .map(|&x| spine.successor(x).unwrap_or(usize::MAX))
        .collect();

    let mut search = Search {
        order: &order,
        parent: &parent,
        rank: vec![usize::MAX; a],
        used: vec![false; a],
        out: Vec::new(),
        pruned: 0,
        limit: limits.max_candidates,
        side,
    };
    for root_rank in 0..a {
        search.place(order[0], root_rank);
        search.extend(1, budget)?;
        search.unplace(order[0], root_rank);
    }
    Ok(Candidates {
        layouts: search.out,
        pruned: search.pruned,
        spine,
    })
}

struct Search<'a> {
    order: &'a [usize],
    parent: &'a [usize],
    rank: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Layout>,
    pruned: u64,
    limit: usize,
    side: Side,
}

impl Search<'_> {
    fn place(&mut self, x: usize, r: usize) {
        self.rank[x] = r;
        self.used[r] = true;
    }

    fn unplace(&mut self, x: usize, r: usize) {
        self.rank[x] = usize::MAX;
        self.used[r] = false;
    }

    fn extend(&mut self, pos: usize, remaining: usize) -> Result<()> {
        if pos == self.order.len() {
            if self.out.len() == self.limit {
                return Err(Error::ResourceLimit {
                    stage: "candidate enumeration",
                    limit: self.limit as u64,
                    detail: format!("more than {} candidate {}-layouts", self.limit, self.side),
                });
            }
            self.out
                .push(Layout::new_unchecked(self.side, self.rank.clone()));
            return Ok(());
        }
        let x = self.order[pos];
        let base = self.rank[self.parent[pos]];
        let a = self.rank.len();
        for gap in 0..=remaining {
            let step = gap + 1;
            let below = base.checked_sub(step);
            let above = Some(base + step).filter(|&r| r < a);
            if below.is_none() && above.is_none() {
                // every larger gap leaves the layer too
                self.pruned += 1;
                break;
            }
            for r in [below, above].into_iter().flatten() {
                if self.used[r] {
                    self.pruned += 1;
                    continue;
                }
                self.place(x, r);
                self.extend(pos + 1, remaining - gap)?;
                self.unplace(x, r);
            }
        }
        Ok(())
    }
}

/// `2^(4k + 2a - 3) * 2^(a - 1) * a`, saturating at `u64::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountBound {
    pub value: u64,
    pub saturated: bool,
}

impl CountBound {
    pub fn exact(value: u64) -> Self {
        CountBound {
            value,
            saturated: false,
        }
    }

    pub fn saturated() -> Self {
        CountBound {
            value: u64::MAX,
            saturated: true,
        }
    }

    pub fn times(self, other: CountBound) -> CountBound {
        if self.saturated || other.saturated {
            return CountBound::saturated();
        }
        self.value
            .checked_mul(other.value)
            .map_or_else(CountBound::saturated, CountBound::exact)
    }

    /// True iff `count` provably does not exceed the bound.
    pub fn admits(&self, count: u64) -> bool {
        self.saturated || count <= self.value
    }
}

/// Upper bound on the number of layouts of an `a`-vertex side that occur in
/// drawings with at most `k` crossings: `2^(4k+2a-3)` gap vectors, `2^(a-1)`
/// sign vectors and `a` root ranks. A side with fewer than two vertices has
/// exactly one layout.
pub fn count_bound(a: usize, k: u64) -> CountBound {
    if a < 2 {
        return CountBound::exact(1);
    }
    let exponent = (a as u64 - 1)
        .checked_mul(3)
        .and_then(|e| e.checked_add(k.checked_mul(4)?))
        .and_then(|e| e.checked_sub(1));
    match exponent {
        Some(e) if e < 64 => (1u64 << e)
            .checked_mul(a as u64)
            .map_or_else(CountBound::saturated, CountBound::exact),
        _ => CountBound::saturated(),
    }
}
