//! Finite simple undirected graphs with s-arc enumeration, symmetry testing
//! and bipartite-pattern recognition.
//!
//! Vertices are the contiguous integers `0..n`; adjacency lists are kept
//! sorted so every enumeration is deterministic.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::permgroup::GeneratedGroup;

/// Refuse to materialize s-arc lists whose size estimate `|V| * d^s`
/// exceeds this.
pub const MAX_S_ARC_ESTIMATE: usize = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for family `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("group degree {group} does not match vertex count {vertices}")]
    DegreeMismatch { group: usize, vertices: usize },
    #[error("generator {generator} is not an automorphism: edge ({u}, {v}) maps to a non-edge")]
    NotAutomorphism { generator: usize, u: usize, v: usize },
    #[error("s-arc estimate {estimate} exceeds limit {limit}")]
    TooManyArcs { estimate: usize, limit: usize },
}

/// A finite simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, count: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, count: n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// The common valency, when the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.degree(0);
        if (0..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Connected components as sorted vertex lists, sorted by first vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled by sorted position.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let pos: std::collections::HashMap<usize, usize> =
            sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &u) in sorted.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(&j) = pos.get(&v) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Graph::from_edges(sorted.len(), &edges).expect("induced subgraph is simple")
    }

    // ---- named families -------------------------------------------------

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParams {
                family: "cycle".into(),
                reason: format!("length {n} < 3"),
            });
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with parts `{0..n}` and `{n..2n}`.
    pub fn complete_bipartite(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                edges.push((u, n + v));
            }
        }
        Graph::from_edges(2 * n, &edges).unwrap()
    }

    /// `K_{n,n}` minus the perfect matching `i -- n+i`.
    pub fn complete_bipartite_minus_matching(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    edges.push((u, n + v));
                }
            }
        }
        Graph::from_edges(2 * n, &edges).unwrap()
    }

    /// `m` vertex-disjoint copies of `g`; copy `c` occupies vertices
    /// `c*|V(g)| .. (c+1)*|V(g)|`.
    pub fn disjoint_copies(g: &Graph, m: usize) -> Graph {
        let base = g.vertex_count();
        let mut edges = Vec::new();
        for c in 0..m {
            for (u, v) in g.edges() {
                edges.push((c * base + u, c * base + v));
            }
        }
        Graph::from_edges(base * m, &edges).unwrap()
    }

    /// The Petersen graph in its Kneser labelling: vertices are the ten
    /// 2-subsets of `{0..4}` in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Graph {
        let pairs = two_subsets(5);
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in (i + 1)..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Catalog dispatcher over the named families. Disjoint copies take a
    /// graph argument ([`Graph::disjoint_copies`]) and the matched cycle
    /// chain lives with the other generative constructions.
    pub fn named(family: &str, params: &[usize]) -> Result<Graph, GraphError> {
        match (family, params) {
            ("complete", [n]) => Ok(Graph::complete(*n)),
            ("cycle", [n]) => Graph::cycle(*n),
            ("complete-bipartite", [n]) => Ok(Graph::complete_bipartite(*n)),
            ("complete-bipartite-minus-matching", [n]) => {
                Ok(Graph::complete_bipartite_minus_matching(*n))
            }
            ("petersen", []) => Ok(Graph::petersen()),
            _ => Err(GraphError::UnknownFamily(format!("{family}{params:?}"))),
        }
    }
}

/// Lexicographically ordered 2-subsets of `{0..n}`.
pub fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            out.push((a, b));
        }
    }
    out
}

/// An s-arc: consecutive vertices adjacent, no immediate backtracking.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SArc {
    vertices: Vec<usize>,
}

impl fmt::Debug for SArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}

impl SArc {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn reversed(&self) -> SArc {
        let mut v = self.vertices.clone();
        v.reverse();
        SArc { vertices: v }
    }
}

/// All s-arcs of `g` in lexicographic order. `s = 0` lists the vertices,
/// `s = 1` both orientations of every edge.
pub fn s_arcs(g: &Graph, s: usize) -> Result<Vec<SArc>, GraphError> {
    let estimate = g
        .vertex_count()
        .saturating_mul(g.max_degree().max(1).saturating_pow(s as u32));
    if estimate > MAX_S_ARC_ESTIMATE {
        return Err(GraphError::TooManyArcs {
            estimate,
            limit: MAX_S_ARC_ESTIMATE,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(s + 1);
    for v in 0..g.vertex_count() {
        current.push(v);
        extend_arcs(g, s, &mut current, &mut out);
        current.pop();
    }
    Ok(out)
}

fn extend_arcs(g: &Graph, s: usize, current: &mut Vec<usize>, out: &mut Vec<SArc>) {
    if current.len() == s + 1 {
        out.push(SArc {
            vertices: current.clone(),
        });
        return;
    }
    let last = *current.last().unwrap();
    let forbidden = if current.len() >= 2 {
        Some(current[current.len() - 2])
    } else {
        None
    };
    for &next in g.neighbors(last) {
        if Some(next) != forbidden {
            current.push(next);
            extend_arcs(g, s, current, out);
            current.pop();
        }
    }
}

/// Arcs of `g` (ordered adjacent pairs) in lexicographic order.
pub fn arcs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(2 * g.edge_count());
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            out.push((u, v));
        }
    }
    out
}

/// Checks that every generator of `group` is an automorphism of `g`.
pub fn check_automorphisms(g: &Graph, group: &GeneratedGroup) -> Result<(), GraphError> {
    if group.degree() != g.vertex_count() {
        return Err(GraphError::DegreeMismatch {
            group: group.degree(),
            vertices: g.vertex_count(),
        });
    }
    for (gi, gen) in group.generators().iter().enumerate() {
        for (u, v) in g.edges() {
            if !g.has_edge(gen.apply(u), gen.apply(v)) {
                return Err(GraphError::NotAutomorphism {
                    generator: gi,
                    u,
                    v,
                });
            }
        }
    }
    Ok(())
}

/// Whether `g` is (G, s)-arc transitive: every generator an automorphism, the
/// group transitive on vertices and on s-arcs. `s = 1` is the G-symmetry test.
pub fn is_s_arc_transitive(
    g: &Graph,
    group: &GeneratedGroup,
    s: usize,
) -> Result<bool, GraphError> {
    check_automorphisms(g, group)?;
    if g.vertex_count() == 0 {
        return Ok(true);
    }
    if group.orbit(0).expect("in range").len() != g.vertex_count() {
        return Ok(false);
    }
    let all = s_arcs(g, s)?;
    if all.is_empty() {
        return Ok(true);
    }
    let orbit = group.orbit_of_tuple(all[0].vertices());
    Ok(orbit.len() == all.len())
}

/// Recognized shapes of the bipartite graph between two traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartitePattern {
    /// `a` disjoint edges.
    Matching { count: usize },
    /// One cycle alternating between the sides.
    SingleCycle { length: usize },
    /// `K_{k,k}` minus a perfect matching.
    CompleteMinusMatching { k: usize },
    /// `K_{k,k}`.
    Complete { k: usize },
    Other,
}

impl fmt::Display for BipartitePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BipartitePattern::Matching { count } => write!(f, "{count}*K2"),
            BipartitePattern::SingleCycle { length } => write!(f, "C{length}"),
            BipartitePattern::CompleteMinusMatching { k } => {
                write!(f, "K{k},{k} - {k}*K2")
            }
            BipartitePattern::Complete { k } => write!(f, "K{k},{k}"),
            BipartitePattern::Other => write!(f, "other"),
        }
    }
}

/// Classifies the bipartite graph formed by the `left`-`right` edges of `g`.
/// Vertices of `left`/`right` without cross edges are ignored; the empty
/// graph counts as a matching with zero edges.
pub fn classify_bipartite(g: &Graph, left: &[usize], right: &[usize]) -> BipartitePattern {
    let right_set: HashSet<usize> = right.iter().copied().collect();
    // Cross-degree per involved vertex.
    let mut cross: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut edge_count = 0;
    for &u in left {
        let nbrs: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|v| right_set.contains(v))
            .collect();
        edge_count += nbrs.len();
        if !nbrs.is_empty() {
            cross.push((u, nbrs));
        }
    }
    let left_set: HashSet<usize> = left.iter().copied().collect();
    let mut right_used: Vec<(usize, usize)> = Vec::new();
    for &v in right {
        let d = g
            .neighbors(v)
            .iter()
            .filter(|u| left_set.contains(u))
            .count();
        if d > 0 {
            right_used.push((v, d));
        }
    }

    if edge_count == 0 {
        return BipartitePattern::Matching { count: 0 };
    }
    let max_left = cross.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let max_right = right_used.iter().map(|&(_, d)| d).max().unwrap_or(0);
    if max_left <= 1 && max_right <= 1 {
        return BipartitePattern::Matching { count: edge_count };
    }

    let kl = cross.len();
    let kr = right_used.len();
    if kl != kr {
        return BipartitePattern::Other;
    }
    let k = kl;
    let left_regular = cross.iter().all(|(_, l)| l.len() == cross[0].1.len());
    let right_regular = right_used.iter().all(|&(_, d)| d == right_used[0].1);
    if !(left_regular && right_regular) {
        return BipartitePattern::Other;
    }
    let d = cross[0].1.len();

    if d == 2 && right_used[0].1 == 2 {
        // 2-regular bipartite graph: a disjoint union of even cycles; report a
        // single cycle only when connected.
        let involved: Vec<usize> = cross
            .iter()
            .map(|&(u, _)| u)
            .chain(right_used.iter().map(|&(v, _)| v))
            .collect();
        let sub = cross_subgraph(&cross, &right_set);
        if sub.is_connected() {
            return BipartitePattern::SingleCycle {
                length: involved.len(),
            };
        }
        return BipartitePattern::Other;
    }

    if d == k && edge_count == k * k {
        return BipartitePattern::Complete { k };
    }
    if d == k - 1 && edge_count == k * (k - 1) {
        // Complement of the cross edges must be a perfect matching.
        let rights: Vec<usize> = right_used.iter().map(|&(v, _)| v).collect();
        let mut ok = true;
        for (_, nbrs) in &cross {
            let missing = rights.iter().filter(|v| !nbrs.contains(v)).count();
            if missing != 1 {
                ok = false;
                break;
            }
        }
        if ok {
            return BipartitePattern::CompleteMinusMatching { k };
        }
    }
    BipartitePattern::Other
}

fn cross_subgraph(cross: &[(usize, Vec<usize>)], right_set: &HashSet<usize>) -> Graph {
    let mut vertices: Vec<usize> = cross.iter().map(|&(u, _)| u).collect();
    for &(_, ref nbrs) in cross {
        vertices.extend(nbrs.iter().copied());
    }
    vertices.sort_unstable();
    vertices.dedup();
    let pos: std::collections::HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for &(u, ref nbrs) in cross {
        for &v in nbrs {
            if right_set.contains(&v) {
                edges.push((pos[&u], pos[&v]));
            }
        }
    }
    Graph::from_edges(vertices.len(), &edges).expect("cross edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{GeneratedGroup, Permutation, DEFAULT_BOUND};

    #[test]
    fn named_graph_counts() {
        let k5 = Graph::complete(5);
        assert_eq!((k5.vertex_count(), k5.edge_count()), (5, 10));
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!((c6.vertex_count(), c6.edge_count()), (6, 6));
        let km = Graph::complete_bipartite_minus_matching(4);
        assert_eq!((km.vertex_count(), km.edge_count()), (8, 12));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::named("moebius", &[5]).is_err());
        let p = Graph::petersen();
        assert_eq!((p.vertex_count(), p.edge_count(), p.valency()), (10, 15, Some(3)));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::LoopEdge(0))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn s_arc_counts() {
        let k5 = Graph::complete(5);
        assert_eq!(s_arcs(&k5, 1).unwrap().len(), 20);
        // K4: 24 2-arcs, each extended by 2 choices of fourth vertex.
        let k4 = Graph::complete(4);
        assert_eq!(s_arcs(&k4, 2).unwrap().len(), 24);
        assert_eq!(s_arcs(&k4, 3).unwrap().len(), 48);
        // C6: every arc extends uniquely.
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(s_arcs(&c6, 2).unwrap().len(), 12);
        assert_eq!(s_arcs(&c6, 0).unwrap().len(), 6);
    }

    #[test]
    fn s_arcs_are_lexicographic_and_reversible() {
        let k4 = Graph::complete(4);
        let all = s_arcs(&k4, 3).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        for arc in &all {
            assert!(set.contains(&arc.reversed()));
        }
    }

    #[test]
    fn s_arc_count_formula_on_regular_graphs_with_large_girth() {
        // |V| * d * (d-1)^(s-1) for girth > s.
        let k4 = Graph::complete(4);
        assert_eq!(s_arcs(&k4, 1).unwrap().len(), 4 * 3);
        for n in [5usize, 6, 7] {
            let cn = Graph::cycle(n).unwrap();
            for s in 1..n {
                assert_eq!(s_arcs(&cn, s).unwrap().len(), n * 2, "C{n}, s={s}");
            }
        }
    }

    #[test]
    fn arc_transitivity_examples() {
        let k5 = Graph::complete(5);
        let s5 = GeneratedGroup::symmetric(5);
        assert!(is_s_arc_transitive(&k5, &s5, 2).unwrap());
        assert!(is_s_arc_transitive(&k5, &s5, 1).unwrap());

        let c6 = Graph::cycle(6).unwrap();
        let d12 = GeneratedGroup::dihedral(6);
        assert!(is_s_arc_transitive(&c6, &d12, 2).unwrap());

        // A single 5-rotation of the Petersen graph is far from arc-transitive.
        let p = Graph::petersen();
        let pairs = two_subsets(5);
        let rot5 = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let images: Vec<usize> = pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (rot5.apply(a), rot5.apply(b));
                let key = (x.min(y), x.max(y));
                pairs.iter().position(|&p| p == key).unwrap()
            })
            .collect();
        let g = GeneratedGroup::new(10, vec![Permutation::from_images(images).unwrap()]).unwrap();
        assert_eq!(g.order(DEFAULT_BOUND).unwrap(), 5);
        assert!(!is_s_arc_transitive(&p, &g, 1).unwrap());
    }

    #[test]
    fn s_arc_transitive_implies_lower() {
        let k5 = Graph::complete(5);
        let s5 = GeneratedGroup::symmetric(5);
        for s in [2usize, 3] {
            if is_s_arc_transitive(&k5, &s5, s).unwrap() {
                assert!(is_s_arc_transitive(&k5, &s5, s - 1).unwrap());
            }
        }
    }

    #[test]
    fn non_automorphism_is_reported() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bad = GeneratedGroup::new(
            3,
            vec![Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            is_s_arc_transitive(&path, &bad, 1),
            Err(GraphError::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn bipartite_patterns() {
        // Perfect matching on 4 + 4.
        let m = Graph::from_edges(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let left = [0, 1, 2, 3];
        let right = [4, 5, 6, 7];
        assert_eq!(
            classify_bipartite(&m, &left, &right),
            BipartitePattern::Matching { count: 4 }
        );

        let kb = Graph::complete_bipartite(4);
        assert_eq!(
            classify_bipartite(&kb, &left, &right),
            BipartitePattern::Complete { k: 4 }
        );

        // 8-cycle alternating across the two sides.
        let c8 = Graph::from_edges(
            8,
            &[(0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 0)],
        )
        .unwrap();
        assert_eq!(
            classify_bipartite(&c8, &left, &right),
            BipartitePattern::SingleCycle { length: 8 }
        );

        let kmm = Graph::complete_bipartite_minus_matching(4);
        assert_eq!(
            classify_bipartite(&kmm, &left, &right),
            BipartitePattern::CompleteMinusMatching { k: 4 }
        );

        let empty = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(
            classify_bipartite(&empty, &[0, 1], &[2, 3]),
            BipartitePattern::Matching { count: 0 }
        );

        // Two disjoint 4-cycles across 4 + 4 are 2-regular but not one cycle.
        let two_c4 = Graph::from_edges(
            8,
            &[(0, 4), (4, 1), (1, 0 + 5), (5, 0), (2, 6), (6, 3), (3, 7), (7, 2)],
        )
        .unwrap();
        assert_eq!(
            classify_bipartite(&two_c4, &left, &right),
            BipartitePattern::Other
        );
    }

    #[test]
    fn components_and_disjoint_copies() {
        let k2 = Graph::complete(2);
        let g = Graph::disjoint_copies(&k2, 3);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert!(!g.is_connected());
        assert!(Graph::complete(4).is_connected());
    }

    #[test]
    fn s_arc_guard_fires() {
        let k = Graph::complete(40);
        assert!(matches!(
            s_arcs(&k, 5),
            Err(GraphError::TooManyArcs { .. })
        ));
    }
}
