//! Candidate layouts for crossing-bounded drawings.
//!
//! For a connected graph without sibling pairs, each side gets a spanning
//! tree (the spine) read off an Eulerian tour of the doubled graph. A layout
//! is then encoded by the root's rank and, per vertex, its distance to its
//! spine successor. Few crossings force small distances, so enumerating all
//! encodings with a bounded distance sum covers every layout that can occur
//! in a drawing with at most `k` crossings.

mod enumerate;
mod spine;

pub use enumerate::{
    count_bound, decode_layout, encode_layout, enumerate_candidates, gap_budget, CandidateEncoding,
    Candidates, CountBound, EnumerationLimits, Sign,
};
pub use spine::{build_spine, doubled_euler_tour, verify_spine, SpineMap};
