//! Exact backtracking search for locating and neighbor-locating colorings.
//!
//! Vertices are colored in index order and colors are tried in ascending
//! order. With symmetry breaking on, a vertex may take color `c` only if
//! `1..c` already occur earlier (first-occurrence canonical form); both
//! predicates are invariant under color permutations, so this loses no
//! solutions. The first coloring found sequentially is therefore the
//! lexicographically least canonical one.
//!
//! Pruning:
//! - properness against already-colored neighbors;
//! - surjectivity: the remaining vertices must be able to supply every
//!   unused color;
//! - neighbor-locating: a vertex is checked as soon as it and all its
//!   neighbors are colored;
//! - locating: codes depend on the whole partition and are compared only on
//!   complete assignments;
//! - segment pruning (neighbor-locating on `v_1..v_n` paths and cycles):
//!   repeated segments and color classes above `(k^2 - k) / 2` members are
//!   rejected, and `n > capacity(k)` is refuted outright.
//!
//! A node limit turns an unfinished search into an explicit inconclusive
//! outcome, never a silent miss.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::coloring::{Coloring, Mode};
use crate::error::{Error, Result};
use crate::formulas::capacity;
use crate::graph::{all_pairs_distances, DistanceTable, Graph};
use crate::segment::{Segment, Topology};

/// Largest palette the search supports (neighbor color sets are `u64` masks).
pub const MAX_COLORS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `k` tried by [`min_colors_exact`]; defaults to the order.
    pub max_k: Option<usize>,
    /// Cap on search-tree nodes (color placements tried) per call.
    pub node_limit: Option<u64>,
    pub symmetry_breaking: bool,
    pub segment_pruning: bool,
    /// Explore disjoint subtrees on the rayon pool. The decision for each
    /// `k` is unchanged; the witness may differ from the sequential one.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_k: None,
            node_limit: None,
            symmetry_breaking: true,
            segment_pruning: true,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Sequential,
    Parallel,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Sequential => "sequential",
            SearchMode::Parallel => "parallel",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Coloring),
    /// Exhaustive search found nothing.
    Refuted,
    /// The node limit was hit first.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FindResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveValue {
    Exact(usize),
    /// Every `k` up to `max_k` was refuted.
    ExceededBudget {
        max_k: usize,
    },
    /// The node limit stopped the search; every `k` up to `largest_refuted`
    /// was refuted.
    Inconclusive {
        largest_refuted: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: SolveValue,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    pub search: SearchMode,
}

impl fmt::Display for SolveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            SolveValue::Exact(k) => write!(f, "value={k}")?,
            SolveValue::ExceededBudget { max_k } => {
                write!(f, "value=exceeded-budget max_k={max_k}")?
            }
            SolveValue::Inconclusive { largest_refuted } => {
                write!(f, "value=inconclusive largest_refuted=")?;
                match largest_refuted {
                    Some(k) => write!(f, "{k}")?,
                    None => f.write_str("-")?,
                }
            }
        }
        match &self.witness {
            Some(w) => write!(f, " witness={w}")?,
            None => f.write_str(" witness=-")?,
        }
        write!(f, " nodes={} search={}", self.nodes_explored, self.search)
    }
}

/// Why a partial assignment was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reject {
    Improper {
        u: usize,
        v: usize,
    },
    NeighborCollision {
        v: usize,
    },
    RepeatedSegment(Segment),
    Overfull {
        color: usize,
        cap: usize,
    },
    OverCapacity {
        n: usize,
        cap: usize,
    },
    /// Entry outside `1..=k`.
    OutOfPalette {
        v: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Proper,
    Mode(Mode),
}

struct Problem<'g> {
    g: &'g Graph,
    n: usize,
    k: usize,
    check: Check,
    symmetry: bool,
    /// Neighbors with a smaller index.
    back: Vec<Vec<usize>>,
    /// Vertices whose closed neighborhood is fully colored once position
    /// `p` is, for the generic neighbor-locating check.
    completes_at: Vec<Vec<usize>>,
    segments: Option<Topology>,
    class_cap: usize,
    dist: Option<DistanceTable>,
}

#[derive(Clone)]
struct State {
    colors: Vec<usize>,
    counts: Vec<usize>,
    used: usize,
    nl_seen: Vec<Vec<u64>>,
    seg_seen: Vec<bool>,
    /// Per position: how many neighbor masks and segments it recorded.
    undo: Vec<(Vec<usize>, Vec<usize>)>,
}

struct Counter<'a> {
    nodes: &'a AtomicU64,
    limit: Option<u64>,
    stop: &'a AtomicBool,
}

impl Counter<'_> {
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        self.limit.is_none_or(|l| n <= l)
    }
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

impl<'g> Problem<'g> {
    fn new(g: &'g Graph, k: usize, check: Check, cfg: &SearchConfig) -> Self {
        let n = g.n();
        let back = (0..n)
            .map(|v| g.neighbors(v).iter().copied().filter(|&u| u < v).collect())
            .collect();
        let mut completes_at = vec![Vec::new(); n];
        let segments = match check {
            Check::Mode(Mode::NeighborLocating) if cfg.segment_pruning => {
                if n >= 2 && g.is_indexed_path() {
                    Some(Topology::Path)
                } else if g.is_indexed_cycle() {
                    Some(Topology::Cycle)
                } else {
                    None
                }
            }
            _ => None,
        };
        if check == Check::Mode(Mode::NeighborLocating) && segments.is_none() {
            for v in 0..n {
                let last = g.neighbors(v).iter().copied().fold(v, usize::max);
                completes_at[last].push(v);
            }
        }
        let dist = (check == Check::Mode(Mode::Locating)).then(|| all_pairs_distances(g));
        Problem {
            g,
            n,
            k,
            check,
            symmetry: cfg.symmetry_breaking,
            back,
            completes_at,
            segments,
            class_cap: (k * k - k) / 2,
            dist,
        }
    }

    fn fresh_state(&self) -> State {
        let side = self.k + 1;
        State {
            colors: vec![0; self.n],
            counts: vec![0; side],
            used: 0,
            nl_seen: vec![Vec::new(); side],
            seg_seen: if self.segments.is_some() {
                vec![false; side * side * side]
            } else {
                Vec::new()
            },
            undo: vec![(Vec::new(), Vec::new()); self.n],
        }
    }

    fn seg_index(&self, r: usize, s: usize, t: usize) -> usize {
        let side = self.k + 1;
        let (lo, hi) = (r.min(t), r.max(t));
        (s * side + lo) * side + hi
    }

    /// Segments that become fully determined when position `p` is colored.
    fn new_segments(&self, c: &[usize], p: usize, topo: Topology) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::with_capacity(2);
        match topo {
            Topology::Path => {
                if p == 1 {
                    out.push((c[1], c[0], c[1]));
                } else if p >= 2 {
                    out.push((c[p - 2], c[p - 1], c[p]));
                }
                if p == n - 1 {
                    out.push((c[p - 1], c[p], c[p - 1]));
                }
            }
            Topology::Cycle => {
                if p >= 2 {
                    out.push((c[p - 2], c[p - 1], c[p]));
                }
                if p == n - 1 {
                    out.push((c[p - 1], c[p], c[0]));
                    out.push((c[p], c[0], c[1]));
                }
            }
        }
        out
    }

    /// Colors position `p` with `c`, or explains why not. On rejection the
    /// state is left unchanged.
    fn place(&self, st: &mut State, p: usize, c: usize) -> std::result::Result<(), Reject> {
        if c == 0 || c > self.k {
            return Err(Reject::OutOfPalette { v: p });
        }
        if let Some(&u) = self.back[p].iter().find(|&&u| st.colors[u] == c) {
            return Err(Reject::Improper { u, v: p });
        }
        if self.segments.is_some() && st.counts[c] + 1 > self.class_cap {
            return Err(Reject::Overfull {
                color: c,
                cap: self.class_cap,
            });
        }
        st.colors[p] = c;
        st.counts[c] += 1;
        if st.counts[c] == 1 {
            st.used += 1;
        }
        let mut nl_log = std::mem::take(&mut st.undo[p].0);
        let mut seg_log = std::mem::take(&mut st.undo[p].1);
        let verdict = self.record(st, p, &mut nl_log, &mut seg_log);
        st.undo[p] = (nl_log, seg_log);
        if verdict.is_err() {
            self.unplace(st, p);
        }
        verdict
    }

    fn record(
        &self,
        st: &mut State,
        p: usize,
        nl_log: &mut Vec<usize>,
        seg_log: &mut Vec<usize>,
    ) -> std::result::Result<(), Reject> {
        if let Some(topo) = self.segments {
            for (r, s, t) in self.new_segments(&st.colors, p, topo) {
                let idx = self.seg_index(r, s, t);
                if st.seg_seen[idx] {
                    let seg = Segment::new(r, s, t).expect("proper prefix");
                    return Err(Reject::RepeatedSegment(seg));
                }
                st.seg_seen[idx] = true;
                seg_log.push(idx);
            }
        }
        for &v in &self.completes_at[p] {
            let mask = self
                .g
                .neighbors(v)
                .iter()
                .fold(0u64, |m, &u| m | 1 << st.colors[u]);
            let cv = st.colors[v];
            if st.nl_seen[cv].contains(&mask) {
                return Err(Reject::NeighborCollision { v });
            }
            st.nl_seen[cv].push(mask);
            nl_log.push(cv);
        }
        Ok(())
    }

    fn unplace(&self, st: &mut State, p: usize) {
        let (nl_log, seg_log) = &mut st.undo[p];
        for c in nl_log.drain(..) {
            st.nl_seen[c].pop();
        }
        for idx in seg_log.drain(..) {
            st.seg_seen[idx] = false;
        }
        let c = st.colors[p];
        st.counts[c] -= 1;
        if st.counts[c] == 0 {
            st.used -= 1;
        }
        st.colors[p] = 0;
    }

    fn leaf_ok(&self, st: &State) -> bool {
        if st.used != self.k {
            return false;
        }
        match self.check {
            Check::Mode(Mode::Locating) => self.codes_distinct(&st.colors),
            _ => true,
        }
    }

    fn codes_distinct(&self, colors: &[usize]) -> bool {
        let dist = self
            .dist
            .as_ref()
            .expect("distance table for locating mode");
        let k = self.k;
        let mut codes = vec![u32::MAX; self.n * k];
        for v in 0..self.n {
            let row = dist.row(v);
            let code = &mut codes[v * k..(v + 1) * k];
            for (u, &d) in row.iter().enumerate() {
                let slot = &mut code[colors[u] - 1];
                *slot = (*slot).min(d);
            }
        }
        // Collisions are only possible inside a color class.
        for v in 0..self.n {
            for u in 0..v {
                if colors[u] == colors[v] && codes[u * k..(u + 1) * k] == codes[v * k..(v + 1) * k]
                {
                    return false;
                }
            }
        }
        true
    }

    fn max_color(&self, st: &State) -> usize {
        if self.symmetry {
            self.k.min(st.used + 1)
        } else {
            self.k
        }
    }

    fn surjective_possible(&self, st: &State, next: usize) -> bool {
        self.k - st.used <= self.n - next
    }

    fn dfs(&self, st: &mut State, p: usize, ctr: &Counter) -> Step {
        if p == self.n {
            return if self.leaf_ok(st) {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        for c in 1..=self.max_color(st) {
            if !ctr.tick() {
                return Step::Aborted;
            }
            if self.place(st, p, c).is_err() {
                continue;
            }
            if self.surjective_possible(st, p + 1) {
                match self.dfs(st, p + 1, ctr) {
                    Step::Found => return Step::Found,
                    Step::Aborted => {
                        self.unplace(st, p);
                        return Step::Aborted;
                    }
                    Step::Exhausted => {}
                }
            }
            self.unplace(st, p);
        }
        Step::Exhausted
    }

    /// Collects every surviving prefix of length `depth`.
    fn prefixes(
        &self,
        st: &mut State,
        p: usize,
        depth: usize,
        ctr: &Counter,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if p == depth {
            out.push(st.colors[..depth].to_vec());
            return true;
        }
        for c in 1..=self.max_color(st) {
            if !ctr.tick() {
                return false;
            }
            if self.place(st, p, c).is_err() {
                continue;
            }
            let ok =
                !self.surjective_possible(st, p + 1) || self.prefixes(st, p + 1, depth, ctr, out);
            self.unplace(st, p);
            if !ok {
                return false;
            }
        }
        true
    }

    fn solve(&self, cfg: &SearchConfig) -> FindResult {
        let nodes = AtomicU64::new(0);
        let stop = AtomicBool::new(false);
        let ctr = Counter {
            nodes: &nodes,
            limit: cfg.node_limit,
            stop: &stop,
        };
        if self.k > self.n {
            return FindResult {
                outcome: Outcome::Refuted,
                nodes: 0,
            };
        }
        if self.segments.is_some() && self.n > capacity(self.k) {
            return FindResult {
                outcome: Outcome::Refuted,
                nodes: 0,
            };
        }
        let outcome = if cfg.parallel {
            self.solve_parallel(&ctr, &stop)
        } else {
            let mut st = self.fresh_state();
            match self.dfs(&mut st, 0, &ctr) {
                Step::Found => Outcome::Found(self.to_coloring(st.colors)),
                Step::Exhausted => Outcome::Refuted,
                Step::Aborted => Outcome::Inconclusive,
            }
        };
        FindResult {
            outcome,
            nodes: nodes.load(Ordering::Relaxed),
        }
    }

    fn solve_parallel(&self, ctr: &Counter, stop: &AtomicBool) -> Outcome {
        let depth = self.n.min(8);
        let mut prefixes = Vec::new();
        let mut st = self.fresh_state();
        if !self.prefixes(&mut st, 0, depth, ctr, &mut prefixes) {
            return Outcome::Inconclusive;
        }
        let aborted = AtomicBool::new(false);
        let found = prefixes.par_iter().find_map_any(|prefix| {
            let mut st = self.fresh_state();
            for (p, &c) in prefix.iter().enumerate() {
                self.place(&mut st, p, c).expect("prefix replays");
            }
            let local = Counter {
                nodes: ctr.nodes,
                limit: ctr.limit,
                stop,
            };
            match self.dfs(&mut st, depth, &local) {
                Step::Found => {
                    stop.store(true, Ordering::Relaxed);
                    Some(st.colors)
                }
                Step::Aborted => {
                    aborted.store(true, Ordering::Relaxed);
                    None
                }
                Step::Exhausted => None,
            }
        });
        match found {
            Some(colors) => Outcome::Found(self.to_coloring(colors)),
            None if aborted.load(Ordering::Relaxed) => Outcome::Inconclusive,
            None => Outcome::Refuted,
        }
    }

    fn to_coloring(&self, colors: Vec<usize>) -> Coloring {
        Coloring::with_palette(colors, self.k).expect("search colorings are onto 1..=k")
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_COLORS {
        return Err(Error::SearchConfig(format!(
            "color count must be in 1..={MAX_COLORS}, got {k}"
        )));
    }
    Ok(())
}

/// Searches for a coloring of `g` with exactly `k` nonempty classes that
/// satisfies `mode`.
pub fn find_coloring(g: &Graph, k: usize, mode: Mode, cfg: &SearchConfig) -> Result<FindResult> {
    check_k(k)?;
    if mode == Mode::Locating && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Problem::new(g, k, Check::Mode(mode), cfg).solve(cfg))
}

/// Chromatic number by the same backtracking engine (properness only).
pub fn chromatic_number(g: &Graph) -> usize {
    let cfg = SearchConfig::default();
    (1..=g.n().max(1))
        .find(|&k| {
            matches!(
                Problem::new(g, k, Check::Proper, &cfg).solve(&cfg).outcome,
                Outcome::Found(_)
            )
        })
        .unwrap_or(0)
}

/// Smallest `k` in `chi(g)..=max_k` admitting a coloring in `mode`.
pub fn min_colors_exact(g: &Graph, mode: Mode, cfg: &SearchConfig) -> Result<SolveResult> {
    let n = g.n();
    let max_k = cfg.max_k.unwrap_or(n).min(MAX_COLORS);
    if max_k > n {
        return Err(Error::SearchConfig(format!(
            "max_k = {max_k} exceeds the {n} vertices"
        )));
    }
    if mode == Mode::Locating && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let search = if cfg.parallel {
        SearchMode::Parallel
    } else {
        SearchMode::Sequential
    };
    let mut nodes = 0;
    let mut largest_refuted = None;
    for k in chromatic_number(g)..=max_k {
        let r = find_coloring(g, k, mode, cfg)?;
        nodes += r.nodes;
        match r.outcome {
            Outcome::Found(c) => {
                return Ok(SolveResult {
                    value: SolveValue::Exact(k),
                    witness: Some(c),
                    nodes_explored: nodes,
                    search,
                })
            }
            Outcome::Refuted => largest_refuted = Some(k),
            Outcome::Inconclusive => {
                return Ok(SolveResult {
                    value: SolveValue::Inconclusive { largest_refuted },
                    witness: None,
                    nodes_explored: nodes,
                    search,
                })
            }
        }
    }
    Ok(SolveResult {
        value: SolveValue::ExceededBudget { max_k },
        witness: None,
        nodes_explored: nodes,
        search,
    })
}

/// Whether a prefix `[c_1, ..., c_p]` of a `k`-coloring of the path or cycle
/// `v_1..v_n` can still extend to a neighbor-locating coloring, judged by
/// segment repetition and class capacity. Both violations persist under
/// extension, so a rejection is final.
pub fn count_class_capacity_prune(
    prefix: &[usize],
    k: usize,
    n: usize,
    topology: Topology,
) -> std::result::Result<(), Reject> {
    assert!(prefix.len() <= n, "prefix longer than the sequence");
    let cap = capacity(k);
    if n > cap {
        return Err(Reject::OverCapacity { n, cap });
    }
    let spec = match topology {
        Topology::Path => crate::family::GraphSpec::Path(n),
        Topology::Cycle => crate::family::GraphSpec::Cycle(n),
    };
    let g = crate::family::build_graph(&spec).expect("valid path or cycle length");
    let cfg = SearchConfig {
        symmetry_breaking: false,
        segment_pruning: true,
        ..SearchConfig::default()
    };
    let problem = Problem::new(&g, k, Check::Mode(Mode::NeighborLocating), &cfg);
    let mut st = problem.fresh_state();
    for (p, &c) in prefix.iter().enumerate() {
        problem.place(&mut st, p, c)?;
    }
    Ok(())
}
