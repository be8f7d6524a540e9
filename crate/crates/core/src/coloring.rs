//! Colorings, color codes and the locating / neighbor-locating predicates.
//!
//! Colors are `1..=k`. Every [`Coloring`] is onto its palette: each color
//! class is nonempty. That is checked once, when the value is built, and
//! the verifiers below rely on it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceTable, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// Coloring whose palette is `1..=max(colors)`.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Self::with_palette(colors, k)
    }

    /// Coloring over exactly `k` colors; every color in `1..=k` must occur.
    pub fn with_palette(colors: Vec<usize>, k: usize) -> Result<Self> {
        let mut used = vec![false; k + 1];
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::InvalidColoring(format!(
                    "v_{} has color {c}, outside 1..={k}",
                    v + 1
                )));
            }
            used[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!(
                "color {c} of 1..={k} is never used"
            )));
        }
        Ok(Coloring { k, colors })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes `V_1..V_k`, each sorted by vertex index.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    /// Applies `shift` to every color; the palette grows accordingly.
    pub fn shifted(&self, shift: usize) -> Vec<usize> {
        self.colors.iter().map(|&c| c + shift).collect()
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let colors = s
            .split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidColoring(format!("bad color `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(colors)
    }
}

/// Which predicate a coloring is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Locating,
    NeighborLocating,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Locating => "locating",
            Mode::NeighborLocating => "nl",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "locating" => Ok(Mode::Locating),
            "nl" | "neighbor-locating" => Ok(Mode::NeighborLocating),
            _ => Err(Error::InvalidColoring(format!("unknown mode `{s}`"))),
        }
    }
}

/// Why a coloring fails a check. Vertex indices are 0-based, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Same color and the same code (locating) or the same neighbor color
    /// set (neighbor-locating).
    Collision(usize, usize),
    /// A monochromatic edge.
    ImproperEdge(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(w) => Some(*w),
        }
    }
}

/// Ordered tuple `(d(v, V_1), ..., d(v, V_k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorCode(pub Vec<u32>);

impl ColorCode {
    pub const UNREACHABLE: u32 = DistanceTable::UNREACHABLE;
}

impl fmt::Display for ColorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if d == Self::UNREACHABLE {
                f.write_str("inf")?;
            } else {
                write!(f, "{d}")?;
            }
        }
        f.write_str(")")
    }
}

fn first_improper_edge(g: &Graph, f: &Coloring) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| f.color(u) == f.color(v))
}

pub fn is_proper(g: &Graph, f: &Coloring) -> Result<bool> {
    f.check_size(g)?;
    Ok(first_improper_edge(g, f).is_none())
}

fn require_proper(g: &Graph, f: &Coloring) -> Result<()> {
    f.check_size(g)?;
    match first_improper_edge(g, f) {
        Some((u, v)) => Err(Error::Improper(u, v)),
        None => Ok(()),
    }
}

fn codes_from_table(table: &DistanceTable, f: &Coloring) -> Vec<ColorCode> {
    (0..table.n())
        .map(|v| {
            let mut code = vec![ColorCode::UNREACHABLE; f.k()];
            for (u, &d) in table.row(v).iter().enumerate() {
                let slot = &mut code[f.color(u) - 1];
                *slot = (*slot).min(d);
            }
            ColorCode(code)
        })
        .collect()
}

/// Color codes of every vertex. Defined only for connected graphs.
pub fn color_codes(g: &Graph, f: &Coloring) -> Result<Vec<ColorCode>> {
    f.check_size(g)?;
    let table = all_pairs_distances(g);
    if !table.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(codes_from_table(&table, f))
}

/// Color codes with every entry `>= 2` (including unreachable) clamped to 2.
/// The 1-entries are exactly the distinct colors seen on the neighborhood.
pub fn modified_color_codes(g: &Graph, f: &Coloring) -> Result<Vec<ColorCode>> {
    f.check_size(g)?;
    let table = all_pairs_distances(g);
    let mut codes = codes_from_table(&table, f);
    for code in &mut codes {
        for d in &mut code.0 {
            *d = (*d).min(2);
        }
    }
    Ok(codes)
}

/// Lexicographically least pair `(u, v)`, `u < v`, with equal keys.
fn first_collision<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Option<(usize, usize)> {
    let mut first_seen: HashMap<K, usize> = HashMap::new();
    let mut partner: Vec<Option<usize>> = Vec::new();
    for (v, key) in keys.into_iter().enumerate() {
        partner.push(None);
        match first_seen.get(&key) {
            Some(&u) => {
                if partner[u].is_none() {
                    partner[u] = Some(v);
                }
            }
            None => {
                first_seen.insert(key, v);
            }
        }
    }
    partner
        .iter()
        .enumerate()
        .find_map(|(u, p)| p.map(|v| (u, v)))
}

/// Decides whether `f` is a locating coloring of the connected graph `g`.
/// On failure the witness is the lexicographically first pair of vertices
/// with identical codes.
pub fn is_locating(g: &Graph, f: &Coloring) -> Result<Verdict> {
    require_proper(g, f)?;
    let codes = color_codes(g, f)?;
    // Codes of different classes differ in the zero coordinate, so codes
    // alone are a sufficient key.
    Ok(match first_collision(codes) {
        Some((u, v)) => Verdict::Invalid(Witness::Collision(u, v)),
        None => Verdict::Valid,
    })
}

/// `f(N(v))` for every vertex; empty for isolated vertices.
pub fn neighbor_color_sets(g: &Graph, f: &Coloring) -> Result<Vec<BTreeSet<usize>>> {
    f.check_size(g)?;
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&u| f.color(u)).collect())
        .collect())
}

/// Decides whether same-colored vertices always see different neighbor
/// color sets. Works on disconnected graphs.
pub fn is_neighbor_locating(g: &Graph, f: &Coloring) -> Result<Verdict> {
    require_proper(g, f)?;
    let sets = neighbor_color_sets(g, f)?;
    let keys = sets.into_iter().enumerate().map(|(v, s)| (f.color(v), s));
    Ok(match first_collision(keys) {
        Some((u, v)) => Verdict::Invalid(Witness::Collision(u, v)),
        None => Verdict::Valid,
    })
}

/// Checks `f` in the given mode, reporting a monochromatic edge as an
/// invalid verdict instead of an error.
pub fn check(g: &Graph, f: &Coloring, mode: Mode) -> Result<Verdict> {
    f.check_size(g)?;
    if let Some((u, v)) = first_improper_edge(g, f) {
        return Ok(Verdict::Invalid(Witness::ImproperEdge(u, v)));
    }
    match mode {
        Mode::Locating => is_locating(g, f),
        Mode::NeighborLocating => is_neighbor_locating(g, f),
    }
}
