//! The origami line graph: one node per crease, a direct edge for every
//! pair of creases forced to take different labels, and a two-edge path
//! through a gadget node for every pair forced to agree. Proper 2-colorings
//! of this graph are candidate MV-assignments.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use thiserror::Error;

use crate::enumerate::{count_mv, EnumError};
use crate::local::{blb_pairs, degree4_forced_same, CreasePair};
use crate::model::{vertex_star, CreaseId, CreasePattern, VertexId};
use crate::parity::ParityUnionFind;

/// Largest crease count for which [`determined_check`] runs the exhaustive
/// oracle.
pub const DETERMINED_CHECK_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LineGraphError {
    #[error("interior vertex {vertex} has degree {degree}; only degree 4 is supported")]
    UnsupportedDegree { vertex: VertexId, degree: usize },
    #[error("line graph is not 2-colorable, so the pattern is not flat-foldable")]
    NotFlatFoldable,
    #[error("pattern has {0} creases; the exhaustive check is limited to {DETERMINED_CHECK_LIMIT}")]
    TooLarge(usize),
    #[error(transparent)]
    Enumerate(#[from] EnumError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineNode {
    Crease(CreaseId),
    Gadget(CreasePair),
}

impl fmt::Display for LineNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineNode::Crease(c) => write!(f, "c{c}"),
            LineNode::Gadget(p) => write!(f, "g{}_{}", p.first(), p.second()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Same,
    Different,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Same => "same",
            Relation::Different => "different",
        })
    }
}

/// One forcing constraint and what was done with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub pair: CreasePair,
    pub relation: Relation,
    /// Vertex whose star produced the constraint; `None` for synthetic ones.
    pub vertex: Option<VertexId>,
    /// False when a Same constraint was skipped because its creases already
    /// had even parity.
    pub applied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrigamiLineGraph {
    nodes: Vec<LineNode>,
    index: BTreeMap<LineNode, usize>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    log: Vec<Constraint>,
    parity: ParityUnionFind,
}

impl OrigamiLineGraph {
    /// A graph with one isolated node per crease.
    pub fn with_creases(creases: impl IntoIterator<Item = CreaseId>) -> Self {
        let mut g = OrigamiLineGraph {
            nodes: Vec::new(),
            index: BTreeMap::new(),
            edges: BTreeSet::new(),
            adjacency: Vec::new(),
            log: Vec::new(),
            parity: ParityUnionFind::new(0),
        };
        for c in creases {
            g.node(LineNode::Crease(c));
        }
        g
    }

    fn node(&mut self, node: LineNode) -> usize {
        if let Some(&i) = self.index.get(&node) {
            return i;
        }
        let i = self.nodes.len();
        self.nodes.push(node);
        self.index.insert(node, i);
        self.adjacency.push(Vec::new());
        self.parity.push();
        i
    }

    fn edge(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        if self.edges.insert(key) {
            self.adjacency[a].push(b);
            self.adjacency[b].push(a);
        }
    }

    /// Step 1: a direct edge between creases that must differ.
    pub fn add_different(&mut self, a: CreaseId, b: CreaseId, vertex: Option<VertexId>) {
        let (i, j) = (self.node(LineNode::Crease(a)), self.node(LineNode::Crease(b)));
        self.edge(i, j);
        self.parity.union(i, j, true);
        self.log.push(Constraint { pair: CreasePair::new(a, b), relation: Relation::Different, vertex, applied: true });
    }

    /// Step 2: a gadget path between creases that must agree, unless they
    /// already sit at the ends of an even path. A contradicting constraint
    /// is still added so that [`two_colorable`](Self::two_colorable) fails.
    pub fn add_same(&mut self, a: CreaseId, b: CreaseId, vertex: Option<VertexId>, skip_even_paths: bool) {
        let (i, j) = (self.node(LineNode::Crease(a)), self.node(LineNode::Crease(b)));
        let pair = CreasePair::new(a, b);
        let even = self.parity.relation(i, j) == Some(false);
        let applied = !(skip_even_paths && even);
        if applied {
            let g = self.node(LineNode::Gadget(pair));
            self.edge(i, g);
            self.edge(g, j);
            self.parity.union(i, j, false);
        }
        self.log.push(Constraint { pair, relation: Relation::Same, vertex, applied });
    }

    pub fn nodes(&self) -> &[LineNode] {
        &self.nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = (LineNode, LineNode)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.nodes[a], self.nodes[b]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.log
    }

    /// Breadth-first 2-coloring; `None` if some component has an odd cycle.
    pub fn coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.nodes.len()];
        for start in 0..self.nodes.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn two_colorable(&self) -> bool {
        self.coloring().is_some()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.nodes.len()];
        let mut count = 0;
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// 2^(components), the number of proper 2-colorings.
    pub fn count_mv_by_components(&self) -> Result<BigUint, LineGraphError> {
        if !self.two_colorable() {
            return Err(LineGraphError::NotFlatFoldable);
        }
        Ok(BigUint::from(1u32) << self.component_count())
    }

    /// DOT text; crease nodes are labelled by crease id, gadget nodes by
    /// `g<i>_<j>`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph origami_line_graph {\n");
        for node in &self.nodes {
            match node {
                LineNode::Crease(c) => writeln!(out, "  {node} [label=\"{c}\"];").unwrap(),
                LineNode::Gadget(_) => writeln!(out, "  {node} [label=\"{node}\", shape=point];").unwrap(),
            }
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the line graph, skipping Same gadgets whose creases are already
/// joined by an even path.
pub fn build_line_graph(pattern: &CreasePattern) -> Result<OrigamiLineGraph, LineGraphError> {
    build_line_graph_with(pattern, true)
}

pub fn build_line_graph_with(pattern: &CreasePattern, skip_even_paths: bool) -> Result<OrigamiLineGraph, LineGraphError> {
    let mut stars = Vec::new();
    for v in pattern.interior_vertices() {
        let degree = pattern.incident(v.id).len();
        if degree != 4 {
            return Err(LineGraphError::UnsupportedDegree { vertex: v.id, degree });
        }
        stars.push((v.id, vertex_star(pattern, v.id).expect("interior vertex has a star")));
    }
    let mut g = OrigamiLineGraph::with_creases(pattern.creases().iter().map(|c| c.id));
    for (id, star) in &stars {
        for pair in blb_pairs(star) {
            g.add_different(pair.first(), pair.second(), Some(*id));
        }
    }
    for (id, star) in &stars {
        let same = degree4_forced_same(star).expect("degree checked above");
        for pair in same {
            g.add_same(pair.first(), pair.second(), Some(*id), skip_even_paths);
        }
    }
    Ok(g)
}

/// Whether the exhaustive count equals the line-graph count, i.e. the line
/// graph captures every local restriction of this pattern. A graph that is
/// not 2-colorable predicts zero assignments.
pub fn determined_check(pattern: &CreasePattern) -> Result<bool, LineGraphError> {
    let n = pattern.creases().len();
    if n > DETERMINED_CHECK_LIMIT {
        return Err(LineGraphError::TooLarge(n));
    }
    let lg = build_line_graph(pattern)?;
    let exact = count_mv(pattern)?;
    Ok(match lg.count_mv_by_components() {
        Ok(predicted) => predicted == exact,
        Err(_) => exact == BigUint::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_miura, gen_single_vertex, gen_square_twist};

    fn c(i: u32) -> CreaseId {
        CreaseId(i)
    }

    #[test]
    fn empty_and_isolated() {
        let g = OrigamiLineGraph::with_creases([]);
        assert!(g.two_colorable());
        assert_eq!(g.component_count(), 0);
        assert_eq!(g.count_mv_by_components().unwrap(), BigUint::from(1u32));
        let g = OrigamiLineGraph::with_creases((0..5).map(c));
        assert_eq!(g.component_count(), 5);
        let g = build_line_graph(&CreasePattern::empty()).unwrap();
        assert_eq!(g.count_mv_by_components().unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn triangle_is_not_two_colorable() {
        let mut g = OrigamiLineGraph::with_creases((0..3).map(c));
        g.add_different(c(0), c(1), None);
        g.add_different(c(1), c(2), None);
        g.add_different(c(0), c(2), None);
        assert!(!g.two_colorable());
        assert_eq!(g.count_mv_by_components().unwrap_err(), LineGraphError::NotFlatFoldable);
    }

    #[test]
    fn contradicting_same_is_kept() {
        let mut g = OrigamiLineGraph::with_creases((0..2).map(c));
        g.add_different(c(0), c(1), None);
        g.add_same(c(0), c(1), None, true);
        assert!(g.constraints()[1].applied);
        assert!(!g.two_colorable());
    }

    #[test]
    fn even_path_is_skipped() {
        let mut g = OrigamiLineGraph::with_creases((0..3).map(c));
        g.add_different(c(0), c(1), None);
        g.add_different(c(1), c(2), None);
        g.add_same(c(0), c(2), None, true);
        assert!(!g.constraints()[2].applied);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn single_unique_min_vertex() {
        let p = gen_single_vertex(&[45.0, 90.0, 135.0, 90.0]).unwrap();
        let g = build_line_graph(&p).unwrap();
        let edges: Vec<_> = g.edges().collect();
        let gadget = LineNode::Gadget(CreasePair::new(c(2), c(3)));
        assert!(edges.contains(&(LineNode::Crease(c(0)), LineNode::Crease(c(1)))));
        assert!(edges.contains(&(LineNode::Crease(c(2)), gadget)));
        assert!(edges.contains(&(LineNode::Crease(c(3)), gadget)));
        assert_eq!(edges.len(), 3);
        assert_eq!(g.component_count(), 2);
        assert!(determined_check(&p).unwrap());
    }

    #[test]
    fn miura_has_no_edges() {
        let mp = gen_miura(2, 2, 60.0).unwrap();
        let g = build_line_graph(&mp.base).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.component_count(), 4);
        assert!(!determined_check(&mp.base).unwrap());
    }

    #[test]
    fn square_twist_components() {
        for m in 1..=6 {
            for n in 1..=6 {
                let s = gen_square_twist(m, n).unwrap();
                let g = build_line_graph(&s.base).unwrap();
                assert_eq!(g.component_count(), 2 * m * n + m + n, "S({m},{n})");
                if m <= 4 && n <= 4 {
                    assert!(g.two_colorable());
                    let full = build_line_graph_with(&s.base, false).unwrap();
                    assert_eq!(full.component_count(), g.component_count());
                    assert_eq!(full.two_colorable(), g.two_colorable());
                }
            }
        }
        let s = gen_square_twist(2, 2).unwrap();
        let g = build_line_graph(&s.base).unwrap();
        assert_eq!(g.count_mv_by_components().unwrap(), BigUint::from(4096u32));
        assert!(determined_check(&gen_square_twist(1, 1).unwrap().base).unwrap());
        assert_eq!(determined_check(&s.base).unwrap_err(), LineGraphError::TooLarge(40));
    }

    #[test]
    fn gadgets_have_degree_two() {
        let s = gen_square_twist(3, 2).unwrap();
        let g = build_line_graph_with(&s.base, false).unwrap();
        for (i, node) in g.nodes().iter().enumerate() {
            if let LineNode::Gadget(_) = node {
                assert_eq!(g.adjacency[i].len(), 2);
                assert!(g.adjacency[i].iter().all(|&j| matches!(g.nodes[j], LineNode::Crease(_))));
            }
        }
    }

    #[test]
    fn build_is_deterministic() {
        let s = gen_square_twist(3, 3).unwrap();
        let a = build_line_graph(&s.base).unwrap();
        let b = build_line_graph(&s.base).unwrap();
        assert_eq!(a.constraints(), b.constraints());
        assert_eq!(a.to_dot(), b.to_dot());
    }
}
