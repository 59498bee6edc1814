//! Exact backtracking search for complete mappings and orthomorphisms.
//!
//! The search assigns `f(x)` for `x = 0, 1, ..., n-1` in index order and tries
//! values in ascending order. Two occupancy sets track used values of `f` and
//! used values of the product map; a per-row mask of still-admissible values
//! is narrowed after every assignment, and a branch dies as soon as some
//! unassigned row has no admissible value left or some unused value is no
//! longer admissible for any unassigned row.
//!
//! Right-multiplying a solution by a constant gives another solution, so a
//! solution exists iff one with `f(1) = 1` exists. The search only explores
//! that subtree. Since values are tried in ascending order, the first solution
//! found is the same one the unrestricted search would return.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::GroupTable;

/// Default node budget for one search.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;
/// Masks are 128 bits wide.
pub const MAX_SEARCH_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MappingError {
    #[error("group of order {0} is too large for the mapping search (max {MAX_SEARCH_ORDER})")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MappingKind {
    /// `x ↦ x·f(x)` bijective.
    Complete,
    /// `x ↦ x⁻¹·f(x)` bijective.
    Orthomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MappingOutcome {
    Found {
        mapping: Vec<usize>,
        nodes: u64,
    },
    /// The search tree was exhausted.
    Nonexistent {
        nodes: u64,
    },
    /// The node budget ran out first.
    Indeterminate {
        nodes: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct MappingCertificate {
    pub kind: MappingKind,
    pub group: String,
    pub outcome: MappingOutcome,
}

impl MappingCertificate {
    pub fn exists(&self) -> Option<bool> {
        match self.outcome {
            MappingOutcome::Found { .. } => Some(true),
            MappingOutcome::Nonexistent { .. } => Some(false),
            MappingOutcome::Indeterminate { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self.outcome {
            MappingOutcome::Found { nodes, .. }
            | MappingOutcome::Nonexistent { nodes }
            | MappingOutcome::Indeterminate { nodes } => nodes,
        }
    }
}

/// Whether `f` is a bijection and `x ↦ x^{±1}·f(x)` is a bijection.
pub fn verify_mapping(g: &GroupTable, kind: MappingKind, f: &[usize]) -> bool {
    let n = g.order();
    if f.len() != n {
        return false;
    }
    let mut used_f = vec![false; n];
    let mut used_p = vec![false; n];
    for (x, &v) in f.iter().enumerate() {
        if v >= n || used_f[v] {
            return false;
        }
        used_f[v] = true;
        let s = product(g, kind, x, v);
        if used_p[s] {
            return false;
        }
        used_p[s] = true;
    }
    true
}

#[inline]
fn product(g: &GroupTable, kind: MappingKind, x: usize, v: usize) -> usize {
    match kind {
        MappingKind::Complete => g.mul(x, v),
        MappingKind::Orthomorphism => g.mul(g.inv(x), v),
    }
}

pub fn find_complete_mapping(
    g: &Arc<GroupTable>,
    budget: u64,
) -> Result<MappingCertificate, MappingError> {
    search(g, MappingKind::Complete, budget)
}

pub fn find_orthomorphism(
    g: &Arc<GroupTable>,
    budget: u64,
) -> Result<MappingCertificate, MappingError> {
    search(g, MappingKind::Orthomorphism, budget)
}

/// The Hall–Paige characterization: complete mappings exist iff the Sylow
/// 2-subgroup is trivial or noncyclic.
pub fn hall_paige_predict(g: &GroupTable) -> bool {
    let (two_part, cyclic) = g.sylow2_profile();
    two_part == 1 || !cyclic
}

fn search(
    g: &Arc<GroupTable>,
    kind: MappingKind,
    budget: u64,
) -> Result<MappingCertificate, MappingError> {
    let n = g.order();
    if n > MAX_SEARCH_ORDER {
        return Err(MappingError::TooLarge(n));
    }
    // sym[x][v] = product symbol; col[x][s] = the v with sym[x][v] = s
    let mut sym = vec![0u8; n * n];
    let mut col = vec![0u8; n * n];
    for x in 0..n {
        for v in 0..n {
            let s = product(g, kind, x, v);
            sym[x * n + v] = s as u8;
            col[x * n + s] = v as u8;
        }
    }
    let full: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut searcher = Searcher {
        n,
        sym,
        col,
        avail: vec![0; (n + 1) * n],
        choice: vec![0; n],
        used: vec![0; n + 1],
        full,
        nodes: 0,
        budget,
    };
    // depth 0: row 0 restricted to f(1) = 1
    for x in 0..n {
        searcher.avail[x] = full;
    }
    searcher.avail[0] = 1;
    let outcome = match searcher.run() {
        Some(true) => {
            let mapping: Vec<usize> = searcher.choice.iter().map(|&v| v as usize).collect();
            assert!(
                verify_mapping(g, kind, &mapping),
                "search returned an invalid mapping"
            );
            MappingOutcome::Found {
                mapping,
                nodes: searcher.nodes,
            }
        }
        Some(false) => MappingOutcome::Nonexistent {
            nodes: searcher.nodes,
        },
        None => MappingOutcome::Indeterminate {
            nodes: searcher.nodes,
        },
    };
    Ok(MappingCertificate {
        kind,
        group: g.name().to_string(),
        outcome,
    })
}

struct Searcher {
    n: usize,
    sym: Vec<u8>,
    col: Vec<u8>,
    /// `avail[depth * n + x]`: admissible values of row `x` at that depth.
    avail: Vec<u128>,
    choice: Vec<u8>,
    /// `used[depth]`: values taken by rows `0..depth`.
    used: Vec<u128>,
    full: u128,
    nodes: u64,
    budget: u64,
}

impl Searcher {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn run(&mut self) -> Option<bool> {
        let n = self.n;
        if n == 0 {
            return Some(true);
        }
        // explicit stack of remaining candidate masks per depth
        let mut pending = vec![0u128; n];
        pending[0] = self.avail[0];
        let mut depth = 0usize;
        loop {
            let cand = pending[depth];
            if cand == 0 {
                if depth == 0 {
                    return Some(false);
                }
                depth -= 1;
                continue;
            }
            let v = cand.trailing_zeros() as usize;
            pending[depth] &= pending[depth] - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.choice[depth] = v as u8;
            if depth + 1 == n {
                return Some(true);
            }
            let s = self.sym[depth * n + v] as usize;
            let (cur, next) = self.avail.split_at_mut((depth + 1) * n);
            let cur = &cur[depth * n..];
            let next = &mut next[..n];
            let vbit = !(1u128 << v);
            let mut dead = false;
            let mut union = 0u128;
            for x in depth + 1..n {
                let c = self.col[x * n + s] as usize;
                let m = cur[x] & vbit & !(1u128 << c);
                next[x] = m;
                union |= m;
                if m == 0 {
                    dead = true;
                    break;
                }
            }
            // every unused value must still be reachable by some row
            self.used[depth + 1] = self.used[depth] | (1u128 << v);
            if dead || (union | self.used[depth + 1]) != self.full {
                continue;
            }
            depth += 1;
            pending[depth] = self.avail[depth * n + depth];
        }
    }
}
