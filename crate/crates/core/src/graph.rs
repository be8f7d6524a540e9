//! Simple undirected graphs on vertices `0..n` and hop distances.
//!
//! Vertices are plain indices. Adjacency lists are kept sorted so every
//! traversal (and therefore every solver trace) is deterministic.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidSpec(format!(
                    "edge {}-{} out of range for {n} vertices",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidSpec(format!("self-loop at vertex {}", u + 1)));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::InvalidSpec(format!(
                    "duplicate edge {}-{}",
                    u + 1,
                    v + 1
                )));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Adds an edge between two distinct vertices if absent. Used by the
    /// family builders, which only produce in-range pairs.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Checks the structural invariants: symmetric, sorted, loop-free,
    /// duplicate-free adjacency with in-range indices.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v < n && v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0).iter().all(Option::is_some)
    }

    /// True when the edge set is exactly `{i, i+1}` for consecutive indices,
    /// i.e. the graph is the path `v_1 v_2 ... v_n` in index order.
    pub fn is_indexed_path(&self) -> bool {
        let n = self.n();
        n >= 1
            && self.edge_count() + 1 == n
            && (0..n.saturating_sub(1)).all(|i| self.has_edge(i, i + 1))
    }

    /// True when the graph is the cycle `v_1 v_2 ... v_n v_1` in index order.
    pub fn is_indexed_cycle(&self) -> bool {
        let n = self.n();
        n >= 3 && self.edge_count() == n && (0..n).all(|i| self.has_edge(i, (i + 1) % n))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The join `g1 + g2`: disjoint union plus every cross edge. Vertices of
/// `g1` keep their indices; those of `g2` are shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut adj = Vec::with_capacity(n1 + n2);
    for list in &g1.adj {
        let mut l = list.clone();
        l.extend(n1..n1 + n2);
        adj.push(l);
    }
    for list in &g2.adj {
        let mut l: Vec<usize> = (0..n1).collect();
        l.extend(list.iter().map(|&v| v + n1));
        adj.push(l);
    }
    Graph { adj }
}

/// All-pairs hop distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    /// Marker stored for pairs in different components.
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry; `UNREACHABLE` for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(
            g.bfs(s)
                .into_iter()
                .map(|x| x.unwrap_or(DistanceTable::UNREACHABLE)),
        );
    }
    DistanceTable { n, d }
}

/// Diameter of a graph: finite for connected graphs, infinite otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

pub fn diameter(g: &Graph) -> Diameter {
    diameter_of(&all_pairs_distances(g))
}

pub fn diameter_of(table: &DistanceTable) -> Diameter {
    if !table.is_connected() {
        return Diameter::Infinite;
    }
    Diameter::Finite(table.d.iter().copied().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn path_and_cycle_distances() {
        let d = all_pairs_distances(&path(5));
        assert_eq!(d.get(0, 4), Some(4));
        let d = all_pairs_distances(&cycle(6));
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(0, 5), Some(1));
    }

    #[test]
    fn join_counts() {
        let g = join(&path(2), &path(2));
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_well_formed());
        assert_eq!(diameter(&g), Diameter::Finite(1));
    }

    #[test]
    fn disconnected_is_infinite() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&g), Diameter::Infinite);
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.raw(0, 2), DistanceTable::UNREACHABLE);
    }

    #[test]
    fn indexed_shapes() {
        assert!(path(5).is_indexed_path());
        assert!(!path(5).is_indexed_cycle());
        assert!(cycle(5).is_indexed_cycle());
        assert!(!cycle(5).is_indexed_path());
        assert!(Graph::empty(1).is_indexed_path());
    }
}
