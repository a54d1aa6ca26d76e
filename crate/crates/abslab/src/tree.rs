//! Labeled free trees with dense vertex labels, plus the structural
//! decompositions the rest of the crate quantifies over: leaf partition,
//! internal paths, edge-type counts, and label-invariant canonical codes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Vertices are dense 0-based labels.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree must have at least one vertex")]
    Empty,
    #[error("expected {expected} edges for order {order}, got {got}")]
    WrongEdgeCount {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("edge ({0}, {1}) has an endpoint out of range")]
    EndpointOutOfRange(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) closes a cycle")]
    Cycle(Vertex, Vertex),
    #[error("leaf partition requires order >= 3, got {0}")]
    OrderTooSmallForPartition(usize),
}

/// An immutable free tree on `order` vertices labeled `0..order`.
///
/// Edges are stored normalized (`u < v`) and sorted, so equal trees have
/// equal representations and serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Tree {
    /// Builds a tree from an edge list, validating tree-ness (exactly
    /// `order - 1` edges, no self-loops or duplicates, acyclic hence
    /// connected).
    pub fn new(order: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, TreeError> {
        if order == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != order - 1 {
            return Err(TreeError::WrongEdgeCount {
                order,
                expected: order - 1,
                got: edges.len(),
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut dsu = Dsu::new(order);
        for &(a, b) in &edges {
            if a >= order || b >= order {
                return Err(TreeError::EndpointOutOfRange(a, b));
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !dsu.union(u, v) {
                // Either a repeated edge or a genuine cycle; tell them apart.
                if normalized.contains(&(u, v)) {
                    return Err(TreeError::DuplicateEdge(u, v));
                }
                return Err(TreeError::Cycle(u, v));
            }
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        Ok(Tree {
            order,
            edges: normalized,
        })
    }

    /// The path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("path is a tree")
    }

    /// The star on `n` vertices: center 0 adjacent to `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| (0, v)).collect()).expect("star is a tree")
    }

    /// A spider: center 0 with one pendent path per entry of `legs`, each of
    /// the given length (number of edges).
    pub fn spider(legs: &[usize]) -> Self {
        assert!(legs.iter().all(|&l| l >= 1), "legs must have length >= 1");
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::new(n, edges).expect("spider is a tree")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Degree multiset, sorted ascending. Sums to `2(n - 1)`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// Number of degree-1 vertices.
    pub fn pendent_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d == 1).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// The (W1, W2, W3) partition: leaves, neighbors of leaves, everything
    /// else. For n >= 3 no two leaves are adjacent, so the cells are disjoint.
    pub fn leaf_partition(&self) -> Result<VertexPartition, TreeError> {
        if self.order < 3 {
            return Err(TreeError::OrderTooSmallForPartition(self.order));
        }
        let deg = self.degrees();
        let adj = self.adjacency();
        let mut cell = vec![3u8; self.order];
        for v in 0..self.order {
            if deg[v] == 1 {
                cell[v] = 1;
            }
        }
        for v in 0..self.order {
            if cell[v] == 1 {
                cell[adj[v][0]] = 2;
            }
        }
        let pick = |c: u8| (0..self.order).filter(|&v| cell[v] == c).collect();
        Ok(VertexPartition {
            w1: pick(1),
            w2: pick(2),
            w3: pick(3),
        })
    }

    /// All maximal paths between branching vertices whose interior vertices
    /// have degree two. Empty when the tree has fewer than two branching
    /// vertices.
    pub fn internal_paths(&self) -> Vec<InternalPath> {
        let deg = self.degrees();
        let adj = self.adjacency();
        let mut paths = Vec::new();
        for start in 0..self.order {
            if deg[start] < 3 {
                continue;
            }
            for &first in &adj[start] {
                let mut prev = start;
                let mut cur = first;
                let mut vertices = vec![start];
                while deg[cur] == 2 {
                    vertices.push(cur);
                    let next = if adj[cur][0] == prev {
                        adj[cur][1]
                    } else {
                        adj[cur][0]
                    };
                    prev = cur;
                    cur = next;
                }
                vertices.push(cur);
                // Keep each path once, oriented from its smaller endpoint.
                if deg[cur] >= 3 && start < cur {
                    paths.push(InternalPath { vertices });
                }
            }
        }
        paths.sort_unstable_by(|a, b| a.vertices.cmp(&b.vertices));
        paths
    }

    /// Counts edges by the sorted degree pair of their endpoints.
    pub fn edge_type_counts(&self) -> EdgeTypeCounts {
        let deg = self.degrees();
        let mut counts = BTreeMap::new();
        for &(u, v) in &self.edges {
            let key = if deg[u] <= deg[v] {
                (deg[u], deg[v])
            } else {
                (deg[v], deg[u])
            };
            *counts.entry(key).or_insert(0) += 1;
        }
        EdgeTypeCounts { counts }
    }

    /// Label-invariant canonical code; two trees are isomorphic iff their
    /// codes are equal. Rooted AHU encoding at the tree center; bicentral
    /// trees take the lexicographically smaller of the two center codes.
    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode(code_of_adjacency(self.order, &self.adjacency()))
    }

    /// Renders the tree text format: first line `n`, then one `u v` line per
    /// edge with `u < v`, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// Parses the tree text format, reporting the offending line on failure.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut lines = input.lines().enumerate();
        let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let order: usize = header
            .trim()
            .parse()
            .map_err(|_| ParseError::BadOrder { line: 1 })?;
        if order == 0 {
            return Err(ParseError::BadOrder { line: 1 });
        }
        let mut edges = Vec::new();
        let mut dsu = Dsu::new(order);
        for (idx, raw) in lines {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() {
                return Err(ParseError::BlankLine { line });
            }
            if edges.len() == order - 1 {
                return Err(ParseError::TooManyEdges { line });
            }
            let mut parts = text.split_whitespace();
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => {
                    let u: usize = a.parse().map_err(|_| ParseError::BadInteger { line })?;
                    let v: usize = b.parse().map_err(|_| ParseError::BadInteger { line })?;
                    (u, v)
                }
                _ => return Err(ParseError::MalformedEdge { line }),
            };
            if u >= v {
                return Err(ParseError::UnorderedPair { line });
            }
            if v >= order {
                return Err(ParseError::EndpointOutOfRange { line });
            }
            if !dsu.union(u, v) {
                return Err(ParseError::Cycle { line });
            }
            edges.push((u, v));
        }
        if edges.len() != order - 1 {
            return Err(ParseError::Disconnected {
                expected: order - 1,
                got: edges.len(),
            });
        }
        Tree::new(order, edges).map_err(|_| ParseError::Disconnected {
            expected: order - 1,
            got: order - 1,
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: missing order header")]
    MissingHeader,
    #[error("line {line}: order header must be a positive integer")]
    BadOrder { line: usize },
    #[error("line {line}: blank line inside tree record")]
    BlankLine { line: usize },
    #[error("line {line}: expected `u v`")]
    MalformedEdge { line: usize },
    #[error("line {line}: endpoints must be decimal integers")]
    BadInteger { line: usize },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    UnorderedPair { line: usize },
    #[error("line {line}: endpoint out of range")]
    EndpointOutOfRange { line: usize },
    #[error("line {line}: this edge closes a cycle")]
    Cycle { line: usize },
    #[error("disconnected tree: expected {expected} edges, got {got}")]
    Disconnected { expected: usize, got: usize },
    #[error("line {line}: more edges than order allows")]
    TooManyEdges { line: usize },
}

/// Isomorphism-invariant byte encoding of a tree: nested parentheses of the
/// center-rooted AHU form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{:02x}", b));
        }
        s
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.0))
    }
}

/// The (W1, W2, W3) split of the vertex set: pendent vertices, their
/// neighbors, and the rest. Cells are sorted and pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub w1: Vec<Vertex>,
    pub w2: Vec<Vertex>,
    pub w3: Vec<Vertex>,
}

/// Multiset of edges keyed by the sorted degree pair of their endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTypeCounts {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeTypeCounts {
    pub fn count(&self, i: usize, j: usize) -> usize {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.counts.iter()
    }

    /// Builds the counts map expected for a given multiset, dropping zeros;
    /// handy for equality assertions.
    pub fn from_pairs(pairs: &[((usize, usize), usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &((i, j), c) in pairs {
            if c > 0 {
                let key = if i <= j { (i, j) } else { (j, i) };
                *counts.entry(key).or_insert(0) += c;
            }
        }
        EdgeTypeCounts { counts }
    }
}

/// A path `v0 - v1 - ... - vr` between two branching vertices whose interior
/// vertices all have degree two. Length is `r >= 1` (edge count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalPath {
    pub vertices: Vec<Vertex>,
}

impl InternalPath {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// True when this is a path in `t` with branching endpoints and
    /// degree-two interior.
    pub fn is_valid_in(&self, t: &Tree) -> bool {
        if self.vertices.len() < 2 {
            return false;
        }
        let deg = t.degrees();
        let ok_ends = deg[self.vertices[0]] >= 3 && deg[*self.vertices.last().unwrap()] >= 3;
        let ok_interior = self.vertices[1..self.vertices.len() - 1]
            .iter()
            .all(|&v| deg[v] == 2);
        let ok_edges = self
            .vertices
            .windows(2)
            .all(|w| t.has_edge(w[0], w[1]));
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        ok_ends && ok_interior && ok_edges && sorted.len() == self.vertices.len()
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Canonical code of a tree given as an adjacency list: the smaller of the
/// center-rooted AHU codes.
pub(crate) fn code_of_adjacency(n: usize, adj: &[Vec<Vertex>]) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for c in centers(n, adj) {
        let code = rooted_code(n, adj, c);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("tree has a center")
}

/// The one or two center vertices, found by iterated leaf stripping.
fn centers(n: usize, adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    if n == 1 {
        return vec![0];
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// AHU code of the tree rooted at `root`: `code(v) = ( sorted child codes )`,
/// computed bottom-up over a BFS order so deep trees cannot overflow the
/// stack.
fn rooted_code(n: usize, adj: &[Vec<Vertex>], root: Vertex) -> Vec<u8> {
    let mut parent = vec![usize::MAX; n];
    let mut bfs = Vec::with_capacity(n);
    bfs.push(root);
    parent[root] = root;
    let mut head = 0;
    while head < bfs.len() {
        let v = bfs[head];
        head += 1;
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                bfs.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in bfs.iter().rev() {
        let mut children: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != v && parent[w] == v)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edge_lists() {
        assert_eq!(Tree::new(0, vec![]), Err(TreeError::Empty));
        assert!(matches!(
            Tree::new(3, vec![(0, 1)]),
            Err(TreeError::WrongEdgeCount { .. })
        ));
        assert_eq!(
            Tree::new(3, vec![(0, 1), (1, 1)]),
            Err(TreeError::SelfLoop(1))
        );
        assert_eq!(
            Tree::new(3, vec![(0, 1), (1, 0)]),
            Err(TreeError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Tree::new(4, vec![(0, 1), (1, 2), (0, 2)]),
            Err(TreeError::Cycle(0, 2))
        );
        assert_eq!(
            Tree::new(2, vec![(0, 5)]),
            Err(TreeError::EndpointOutOfRange(0, 5))
        );
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(Tree::star(4).degree_sequence(), vec![1, 1, 1, 3]);
        assert_eq!(Tree::path(4).degree_sequence(), vec![1, 1, 2, 2]);
        assert_eq!(Tree::path(2).degree_sequence(), vec![1, 1]);
        let t = Tree::spider(&[2, 2, 2]);
        assert_eq!(t.degree_sequence().iter().sum::<usize>(), 2 * (7 - 1));
    }

    #[test]
    fn pendent_count_examples() {
        assert_eq!(Tree::star(6).pendent_count(), 5);
        assert_eq!(Tree::path(9).pendent_count(), 2);
        assert_eq!(Tree::spider(&[2, 2, 2]).pendent_count(), 3);
        assert_eq!(Tree::path(1).pendent_count(), 0);
    }

    #[test]
    fn leaf_partition_examples() {
        let s4 = Tree::star(4).leaf_partition().unwrap();
        assert_eq!(s4.w1, vec![1, 2, 3]);
        assert_eq!(s4.w2, vec![0]);
        assert!(s4.w3.is_empty());

        let p5 = Tree::path(5).leaf_partition().unwrap();
        assert_eq!(p5.w1, vec![0, 4]);
        assert_eq!(p5.w2, vec![1, 3]);
        assert_eq!(p5.w3, vec![2]);

        let sp = Tree::spider(&[2, 2, 2]).leaf_partition().unwrap();
        assert_eq!((sp.w1.len(), sp.w2.len(), sp.w3.len()), (3, 3, 1));

        assert_eq!(
            Tree::path(2).leaf_partition(),
            Err(TreeError::OrderTooSmallForPartition(2))
        );
        assert_eq!(
            Tree::path(1).leaf_partition(),
            Err(TreeError::OrderTooSmallForPartition(1))
        );
    }

    #[test]
    fn internal_path_examples() {
        assert!(Tree::path(7).internal_paths().is_empty());
        assert!(Tree::spider(&[2, 2, 2]).internal_paths().is_empty());

        // Two degree-3 hubs joined by an edge, each carrying two pendent
        // legs of length 2 (order 10).
        let t = double_spider(0);
        let paths = t.internal_paths();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].length(), 1);

        // Same, joined through one degree-2 vertex (order 11).
        let t = double_spider(1);
        let paths = t.internal_paths();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].length(), 2);
        assert!(paths[0].is_valid_in(&t));
    }

    /// Two hubs with two pendent length-2 legs each, joined by a path with
    /// `mid` interior vertices.
    fn double_spider(mid: usize) -> Tree {
        let mut edges = Vec::new();
        let hub_a = 0;
        let mut next = 1;
        let mut hub_b = 0;
        let mut prev = hub_a;
        for _ in 0..mid {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        hub_b += next;
        edges.push((prev, hub_b));
        next = hub_b + 1;
        for hub in [hub_a, hub_b] {
            for _ in 0..2 {
                edges.push((hub, next));
                edges.push((next, next + 1));
                next += 2;
            }
        }
        Tree::new(next, edges).unwrap()
    }

    #[test]
    fn internal_path_interiors_are_exactly_mid_degree2_vertices() {
        // Interior vertices across all internal paths == degree-2 vertices
        // lying between two branching vertices.
        let t = double_spider(3);
        let deg = t.degrees();
        let mut interior: Vec<Vertex> = t
            .internal_paths()
            .iter()
            .flat_map(|p| p.vertices[1..p.vertices.len() - 1].to_vec())
            .collect();
        interior.sort_unstable();
        // For this tree the leg mid-vertices lead to leaves, so only the
        // bridge vertices qualify.
        let expect: Vec<Vertex> = (0..t.order())
            .filter(|&v| {
                deg[v] == 2 && {
                    // between two branching vertices: walk both ways
                    let adj = t.adjacency();
                    let walk = |mut prev: Vertex, mut cur: Vertex| {
                        while deg[cur] == 2 {
                            let nxt = if adj[cur][0] == prev {
                                adj[cur][1]
                            } else {
                                adj[cur][0]
                            };
                            prev = cur;
                            cur = nxt;
                        }
                        deg[cur] >= 3
                    };
                    let adj_v = &adj[v];
                    walk(v, adj_v[0]) && walk(v, adj_v[1])
                }
            })
            .collect();
        assert_eq!(interior, expect);
    }

    #[test]
    fn edge_type_count_examples() {
        let s4 = Tree::star(4).edge_type_counts();
        assert_eq!(s4, EdgeTypeCounts::from_pairs(&[((1, 3), 3)]));

        let p5 = Tree::path(5).edge_type_counts();
        assert_eq!(p5, EdgeTypeCounts::from_pairs(&[((1, 2), 2), ((2, 2), 2)]));

        let sp = Tree::spider(&[2, 2, 2]).edge_type_counts();
        assert_eq!(sp, EdgeTypeCounts::from_pairs(&[((1, 2), 3), ((2, 3), 3)]));

        assert_eq!(sp.total(), 6);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        // Two labelings of P4.
        let a = Tree::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::new(4, vec![(0, 2), (1, 3), (0, 3)]).unwrap(); // 2-0-3-1
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_ne!(a.canonical_code(), Tree::star(4).canonical_code());
    }

    #[test]
    fn canonical_code_distinguishes_small_classes() {
        let k1 = Tree::path(1);
        let k2 = Tree::path(2);
        assert_ne!(k1.canonical_code(), k2.canonical_code());
        // Bicentral vs central trees of the same order.
        let p4 = Tree::path(4);
        let s4 = Tree::star(4);
        assert_ne!(p4.canonical_code(), s4.canonical_code());
    }

    #[test]
    fn text_roundtrip_and_diagnostics() {
        let t = Tree::spider(&[2, 2, 3]);
        let text = t.to_text();
        assert_eq!(Tree::parse(&text).unwrap(), t);

        assert_eq!(
            Tree::parse("3\n0 1\n1 2\n0 2\n"),
            Err(ParseError::TooManyEdges { line: 4 })
        );
        assert_eq!(
            Tree::parse("4\n0 1\n1 2\n0 2\n"),
            Err(ParseError::Cycle { line: 4 })
        );
        assert_eq!(
            Tree::parse("4\n1 0\n"),
            Err(ParseError::UnorderedPair { line: 2 })
        );
        assert_eq!(
            Tree::parse("4\n0 1\n1 9\n"),
            Err(ParseError::EndpointOutOfRange { line: 3 })
        );
        assert_eq!(
            Tree::parse("4\n0 1\n1 2\n"),
            Err(ParseError::Disconnected {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            Tree::parse("4\n0 1\nx 2\n2 3\n"),
            Err(ParseError::BadInteger { line: 3 })
        );
    }
}
