//! Brute-force reference implementations, deliberately sharing no code with
//! the library: graphs are edge lists, distances come from Floyd–Warshall,
//! and minimum color counts come from enumerating every set partition.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub const INF: u32 = u32::MAX / 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeGraph {
    pub fn adjacent(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    }
}

pub fn path(n: usize) -> EdgeGraph {
    EdgeGraph {
        n,
        edges: (1..n).map(|i| (i - 1, i)).collect(),
    }
}

pub fn cycle(n: usize) -> EdgeGraph {
    let mut g = path(n);
    g.edges.push((0, n - 1));
    g
}

pub fn complete(n: usize) -> EdgeGraph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    EdgeGraph { n, edges }
}

pub fn multipartite(parts: &[usize]) -> EdgeGraph {
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let n = part_of.len();
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    EdgeGraph { n, edges }
}

pub fn cliques(t: usize, m: usize) -> EdgeGraph {
    let mut edges = Vec::new();
    for c in 0..t {
        for v in 0..m {
            for u in 0..v {
                edges.push((c * m + u, c * m + v));
            }
        }
    }
    EdgeGraph { n: t * m, edges }
}

pub fn join(a: &EdgeGraph, b: &EdgeGraph) -> EdgeGraph {
    let mut edges = a.edges.clone();
    edges.extend(b.edges.iter().map(|&(u, v)| (u + a.n, v + a.n)));
    for u in 0..a.n {
        for v in 0..b.n {
            edges.push((u, a.n + v));
        }
    }
    EdgeGraph {
        n: a.n + b.n,
        edges,
    }
}

pub fn floyd(g: &EdgeGraph) -> Vec<Vec<u32>> {
    let n = g.n;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in &g.edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

pub fn connected(g: &EdgeGraph) -> bool {
    floyd(g).iter().all(|row| row.iter().all(|&x| x < INF))
}

pub fn proper(g: &EdgeGraph, colors: &[usize]) -> bool {
    g.edges.iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Distinct codes over all vertex pairs (not only within classes).
pub fn naive_locating(g: &EdgeGraph, colors: &[usize]) -> bool {
    if !proper(g, colors) {
        return false;
    }
    let d = floyd(g);
    let k = *colors.iter().max().unwrap();
    let codes: Vec<Vec<u32>> = (0..g.n)
        .map(|v| {
            (1..=k)
                .map(|c| {
                    (0..g.n)
                        .filter(|&u| colors[u] == c)
                        .map(|u| d[v][u])
                        .min()
                        .unwrap_or(INF)
                })
                .collect()
        })
        .collect();
    let distinct: BTreeSet<&Vec<u32>> = codes.iter().collect();
    distinct.len() == g.n
}

pub fn naive_neighbor_locating(g: &EdgeGraph, colors: &[usize]) -> bool {
    if !proper(g, colors) {
        return false;
    }
    let a = g.adjacent();
    let keys: BTreeSet<(usize, Vec<usize>)> = (0..g.n)
        .map(|v| {
            let mut s: Vec<usize> = (0..g.n).filter(|&u| a[v][u]).map(|u| colors[u]).collect();
            s.sort();
            s.dedup();
            (colors[v], s)
        })
        .collect();
    keys.len() == g.n
}

/// Calls `visit` with every set partition of `0..n` as a restricted growth
/// string with blocks numbered from 1.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(s: &mut Vec<usize>, n: usize, max: usize, visit: &mut dyn FnMut(&[usize])) {
        if s.len() == n {
            visit(s);
            return;
        }
        for c in 1..=max + 1 {
            s.push(c);
            rec(s, n, max.max(c), visit);
            s.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Fewest classes over all partitions satisfying `pred`.
pub fn brute_min(g: &EdgeGraph, pred: fn(&EdgeGraph, &[usize]) -> bool) -> usize {
    let mut best = usize::MAX;
    for_each_partition(g.n, |s| {
        let k = *s.iter().max().unwrap();
        if k < best && pred(g, s) {
            best = k;
        }
    });
    best
}

/// Whether some completion of `prefix` to length `n` over `1..=k` (not
/// necessarily onto) is neighbor-locating.
pub fn completable(g: &EdgeGraph, prefix: &[usize], k: usize) -> bool {
    let mut s = prefix.to_vec();
    fn rec(g: &EdgeGraph, s: &mut Vec<usize>, k: usize) -> bool {
        if s.len() == g.n {
            return naive_neighbor_locating(g, s);
        }
        (1..=k).any(|c| {
            s.push(c);
            let ok = rec(g, s, k);
            s.pop();
            ok
        })
    }
    rec(g, &mut s, k)
}

pub fn capacity(k: usize) -> usize {
    (k * k * k - k * k) / 2
}

pub fn least_k_with_capacity(n: usize) -> usize {
    (1..).find(|&k| capacity(k) >= n).unwrap()
}

pub fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
