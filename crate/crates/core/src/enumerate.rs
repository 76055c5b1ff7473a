//! Exhaustive enumeration of locally flat-foldable MV-assignments.
//!
//! Creases are assigned in ascending id order, valley before mountain, so
//! results come out in lexicographic order. An assignment is accepted when
//! every interior vertex sees one of its valid label tuples; boundary
//! vertices impose nothing.

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::local::{vertex_valid_assignments, LocalError};
use crate::model::{vertex_star, CreaseId, CreasePattern, Mv, MvAssignment, VertexId};

/// Largest crease count accepted by the exhaustive search.
pub const MAX_CREASES: usize = 30;

/// Creases fixed before the search fans out across threads.
const SPLIT_DEPTH: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EnumError {
    #[error("interior vertex {vertex} has degree {degree}; only degree 4 is supported")]
    UnsupportedDegree { vertex: VertexId, degree: usize },
    #[error("interior vertex {vertex}: {source}")]
    Vertex { vertex: VertexId, source: LocalError },
    #[error("pattern has {0} creases; exhaustive enumeration is limited to {MAX_CREASES}")]
    TooLarge(usize),
}

/// How early partial assignments are rejected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pruning {
    /// Reject as soon as a vertex has no valid tuple matching the creases
    /// assigned so far.
    #[default]
    Partial,
    /// Only test complete assignments.
    None,
}

#[derive(Clone, Debug)]
struct VertexRule {
    /// Positions (in crease order) of the star's creases.
    slots: [usize; 4],
    /// Bit `t` set iff tuple `t` is valid, where bit `3 - k` of `t` is the
    /// label of `slots[k]` (1 = mountain).
    valid: u16,
}

impl VertexRule {
    fn admits(&self, depth: usize, values: &[bool]) -> bool {
        let mut mask = 0usize;
        let mut want = 0usize;
        for (k, &slot) in self.slots.iter().enumerate() {
            if slot <= depth {
                mask |= 1 << (3 - k);
                if values[slot] {
                    want |= 1 << (3 - k);
                }
            }
        }
        (0..16).any(|t| self.valid >> t & 1 == 1 && t & mask == want)
    }
}

/// Per-pattern search tables.
#[derive(Clone, Debug)]
pub struct Search {
    creases: Vec<CreaseId>,
    rules: Vec<VertexRule>,
    touching: Vec<Vec<usize>>,
    pruning: Pruning,
}

impl Search {
    pub fn new(pattern: &CreasePattern, pruning: Pruning) -> Result<Search, EnumError> {
        let creases: Vec<CreaseId> = pattern.creases().iter().map(|c| c.id).collect();
        if creases.len() > MAX_CREASES {
            return Err(EnumError::TooLarge(creases.len()));
        }
        let slot_of = |c: CreaseId| creases.binary_search(&c).expect("star creases belong to the pattern");
        let mut rules = Vec::new();
        let mut touching = vec![Vec::new(); creases.len()];
        for v in pattern.interior_vertices() {
            let degree = pattern.incident(v.id).len();
            if degree != 4 {
                return Err(EnumError::UnsupportedDegree { vertex: v.id, degree });
            }
            let star = vertex_star(pattern, v.id).expect("interior vertex has a star");
            let tuples = vertex_valid_assignments(&star)
                .map_err(|source| EnumError::Vertex { vertex: v.id, source })?;
            let valid = tuples.iter().fold(0u16, |acc, t| {
                let idx = t.iter().fold(0, |i, &m| i << 1 | (m == Mv::Mountain) as usize);
                acc | 1 << idx
            });
            let slots: [usize; 4] = std::array::from_fn(|k| slot_of(star.creases[k]));
            for &s in &slots {
                touching[s].push(rules.len());
            }
            rules.push(VertexRule { slots, valid });
        }
        Ok(Search { creases, rules, touching, pruning })
    }

    pub fn crease_count(&self) -> usize {
        self.creases.len()
    }

    /// Whether `values[..=depth]` can still extend to a valid assignment.
    fn consistent(&self, depth: usize, values: &[bool]) -> bool {
        match self.pruning {
            Pruning::Partial => self.touching[depth].iter().all(|&r| self.rules[r].admits(depth, values)),
            Pruning::None => {
                depth + 1 < self.creases.len() || self.rules.iter().all(|r| r.admits(depth, values))
            }
        }
    }

    fn count_from(&self, depth: usize, values: &mut Vec<bool>) -> u64 {
        if depth == self.creases.len() {
            return 1;
        }
        let mut total = 0;
        for label in [false, true] {
            values.push(label);
            if self.consistent(depth, values) {
                total += self.count_from(depth + 1, values);
            }
            values.pop();
        }
        total
    }

    fn prefixes(&self, depth: usize, values: &mut Vec<bool>, limit: usize, out: &mut Vec<Vec<bool>>) {
        if depth == limit {
            out.push(values.clone());
            return;
        }
        for label in [false, true] {
            values.push(label);
            if self.consistent(depth, values) {
                self.prefixes(depth + 1, values, limit, out);
            }
            values.pop();
        }
    }

    /// Number of valid assignments. The first few creases are fixed
    /// sequentially and the remaining subtrees are counted in parallel.
    pub fn count(&self) -> BigUint {
        let split = SPLIT_DEPTH.min(self.creases.len());
        let mut prefixes = Vec::new();
        self.prefixes(0, &mut Vec::new(), split, &mut prefixes);
        let total: u64 = prefixes
            .into_par_iter()
            .map(|mut p| self.count_from(split, &mut p))
            .sum();
        BigUint::from(total)
    }

    fn to_assignment(&self, values: &[bool]) -> MvAssignment {
        self.creases
            .iter()
            .zip(values)
            .map(|(&c, &m)| (c, if m { Mv::Mountain } else { Mv::Valley }))
            .collect()
    }

    pub fn iter(&self) -> MvIter<'_> {
        MvIter { search: self, values: Vec::new(), tried: Vec::new(), done: false }
    }
}

/// Lazy, lexicographically ordered stream of valid assignments.
pub struct MvIter<'a> {
    search: &'a Search,
    values: Vec<bool>,
    /// Labels already tried at each depth: 0, 1 (valley) or 2 (both).
    tried: Vec<u8>,
    done: bool,
}

impl Iterator for MvIter<'_> {
    type Item = MvAssignment;

    fn next(&mut self) -> Option<MvAssignment> {
        let n = self.search.creases.len();
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(MvAssignment::new());
        }
        if self.tried.is_empty() {
            self.tried.push(0);
            self.values.push(false);
        }
        loop {
            let d = self.tried.len() - 1;
            if self.tried[d] == 2 {
                self.tried.pop();
                self.values.pop();
                if self.tried.is_empty() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            self.values[d] = self.tried[d] == 1;
            self.tried[d] += 1;
            if !self.search.consistent(d, &self.values) {
                continue;
            }
            if d + 1 == n {
                return Some(self.search.to_assignment(&self.values));
            }
            self.tried.push(0);
            self.values.push(false);
        }
    }
}

/// Count, plus the assignments themselves when materialized.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationResult {
    pub count: BigUint,
    pub assignments: Option<Vec<MvAssignment>>,
}

pub fn count_mv(pattern: &CreasePattern) -> Result<BigUint, EnumError> {
    Ok(Search::new(pattern, Pruning::Partial)?.count())
}

pub fn count_mv_with(pattern: &CreasePattern, pruning: Pruning) -> Result<BigUint, EnumError> {
    Ok(Search::new(pattern, pruning)?.count())
}

/// Valid assignments in lexicographic order, at most `limit` of them.
pub fn enumerate_mv(pattern: &CreasePattern, limit: Option<usize>) -> Result<Vec<MvAssignment>, EnumError> {
    let search = Search::new(pattern, Pruning::Partial)?;
    Ok(search.iter().take(limit.unwrap_or(usize::MAX)).collect())
}

pub fn enumerate_all(pattern: &CreasePattern, materialize: bool) -> Result<EnumerationResult, EnumError> {
    let search = Search::new(pattern, Pruning::Partial)?;
    if materialize {
        let all: Vec<_> = search.iter().collect();
        Ok(EnumerationResult { count: BigUint::from(all.len()), assignments: Some(all) })
    } else {
        Ok(EnumerationResult { count: search.count(), assignments: None })
    }
}
