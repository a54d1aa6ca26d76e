//! Duplicate-free generation of non-isomorphic free trees of a given order,
//! with optional pendent-count and maximum-degree filters.
//!
//! The generator is orderly (canonical extension): a tree of order `k` is the
//! canonical parent of a tree `C` of order `k + 1` when deleting the leaf of
//! `C` whose removal minimizes the canonical code of the remainder yields it.
//! Starting from the one-vertex tree and expanding each tree into exactly the
//! children whose canonical parent it is enumerates every isomorphism class
//! once, with O(n) live state per branch of the generation tree.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::tree::{code_of_adjacency, Tree, Vertex};

/// What to enumerate: trees of `order`, optionally restricted to an exact
/// pendent-vertex count and/or a maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub pendent: Option<usize>,
    pub max_degree: Option<usize>,
}

impl EnumSpec {
    pub fn order(n: usize) -> Self {
        EnumSpec {
            order: n,
            pendent: None,
            max_degree: None,
        }
    }

    pub fn with_pendent(mut self, p: usize) -> Self {
        self.pendent = Some(p);
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    fn validate(&self) -> Result<(), EnumError> {
        if self.order < 1 {
            return Err(EnumError::OrderTooSmall);
        }
        if self.max_degree == Some(0) {
            return Err(EnumError::MaxDegreeZero);
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order must be at least 1")]
    OrderTooSmall,
    #[error("max_degree filter must be at least 1")]
    MaxDegreeZero,
}

/// One isomorphism class per item; emission order is deterministic for a
/// fixed spec. An out-of-range pendent filter yields an empty stream rather
/// than an error.
pub fn enumerate_trees(spec: &EnumSpec) -> Result<TreeStream, EnumError> {
    spec.validate()?;
    Ok(TreeStream::new(spec.clone()))
}

/// Length of the `enumerate_trees` stream without materializing the trees.
pub fn count_trees(spec: &EnumSpec) -> Result<u64, EnumError> {
    Ok(enumerate_trees(spec)?.map(|_| 1u64).sum())
}

struct Node {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    code: Vec<u8>,
}

pub struct TreeStream {
    spec: EnumSpec,
    stack: Vec<Node>,
}

impl TreeStream {
    fn new(spec: EnumSpec) -> Self {
        let seed = Node {
            order: 1,
            edges: Vec::new(),
            code: vec![b'(', b')'],
        };
        TreeStream {
            spec,
            stack: vec![seed],
        }
    }

    fn passes_filters(&self, order: usize, degrees: &[usize]) -> bool {
        debug_assert_eq!(order, degrees.len());
        if let Some(p) = self.spec.pendent {
            if degrees.iter().filter(|&&d| d == 1).count() != p {
                return false;
            }
        }
        if let Some(d) = self.spec.max_degree {
            if degrees.iter().copied().max().unwrap_or(0) > d {
                return false;
            }
        }
        true
    }

    /// All children of `node` in the generation tree that can still reach a
    /// tree passing the filters at the target order.
    fn children(&self, node: &Node) -> Vec<Node> {
        let k = node.order;
        let mut degrees = vec![0usize; k + 1];
        for &(u, v) in &node.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let leaf_count = if k == 1 {
            0
        } else {
            degrees[..k].iter().filter(|&&d| d == 1).count()
        };

        let mut by_code: BTreeMap<Vec<u8>, Vec<(Vertex, Vertex)>> = BTreeMap::new();
        for site in 0..k {
            if let Some(d) = self.spec.max_degree {
                if degrees[site] + 1 > d {
                    continue;
                }
            }
            if let Some(p) = self.spec.pendent {
                // Attaching to a leaf keeps the count; to an internal vertex
                // (or to K1) raises it. Both bounds are monotone along the
                // generation chain, so pruning here is sound.
                let next_count = if k == 1 {
                    2
                } else if degrees[site] == 1 {
                    leaf_count
                } else {
                    leaf_count + 1
                };
                if next_count > p || p.saturating_sub(next_count) > self.spec.order - (k + 1) {
                    continue;
                }
            }

            let mut edges = node.edges.clone();
            edges.push((site, k));
            let code = code_of_edges(k + 1, &edges);
            by_code.entry(code).or_insert(edges);
        }

        by_code
            .into_iter()
            .filter(|(code, edges)| is_canonical_child(k + 1, edges, code, &node.code))
            .map(|(code, edges)| Node {
                order: k + 1,
                edges,
                code,
            })
            .collect()
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while let Some(node) = self.stack.pop() {
            if node.order == self.spec.order {
                let mut degrees = vec![0usize; node.order];
                for &(u, v) in &node.edges {
                    degrees[u] += 1;
                    degrees[v] += 1;
                }
                if self.passes_filters(node.order, &degrees) {
                    return Some(
                        Tree::new(node.order, node.edges).expect("generator emits valid trees"),
                    );
                }
                continue;
            }
            let mut children = self.children(&node);
            // Pop order = ascending code order.
            children.reverse();
            self.stack.extend(children);
        }
        None
    }
}

fn code_of_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    code_of_adjacency(n, &adj)
}

/// Accepts `child` (order n, last-attached vertex `n - 1`) iff its canonical
/// parent is the tree it was extended from: removing the freshly attached
/// leaf yields `parent_code` exactly, so the child is canonical iff no other
/// leaf removal yields a strictly smaller code.
fn is_canonical_child(
    n: usize,
    child_edges: &[(Vertex, Vertex)],
    _child_code: &[u8],
    parent_code: &[u8],
) -> bool {
    let mut degrees = vec![0usize; n];
    for &(u, v) in child_edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    for leaf in 0..n - 1 {
        if degrees[leaf] != 1 {
            continue;
        }
        if code_without_leaf(n, child_edges, leaf).as_slice() < parent_code {
            return false;
        }
    }
    true
}

/// Canonical code of the tree with pendent vertex `leaf` deleted, relabeling
/// the remaining vertices densely.
fn code_without_leaf(n: usize, edges: &[(Vertex, Vertex)], leaf: Vertex) -> Vec<u8> {
    let relabel = |x: Vertex| if x > leaf { x - 1 } else { x };
    let mut adj = vec![Vec::new(); n - 1];
    for &(u, v) in edges {
        if u == leaf || v == leaf {
            continue;
        }
        let (a, b) = (relabel(u), relabel(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    code_of_adjacency(n - 1, &adj)
}
