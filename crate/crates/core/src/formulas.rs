//! Closed-form chromatic numbers for the supported graph families.
//!
//! Every result carries a stable branch tag naming the closed form that
//! produced it, so tests can assert which branch fired.

use std::fmt;

use crate::coloring::Mode;
use crate::error::{Error, Result};
use crate::family::GraphSpec;

/// Maximum length of a path or cycle that admits a neighbor-locating
/// `k`-coloring: `(k^3 - k^2) / 2`.
pub fn capacity(k: usize) -> usize {
    k * k * (k.saturating_sub(1)) / 2
}

/// Least `k` with `capacity(k) >= n`.
pub fn m_of(n: usize) -> usize {
    let mut k = 1;
    while capacity(k) < n {
        k += 1;
    }
    k
}

/// Binomial coefficient, saturating at `usize::MAX`.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// `min { k : t <= C(k, m) }`, the palette size for `t` disjoint copies of `K_m`.
pub fn clique_family_colors(t: usize, m: usize) -> usize {
    let mut k = m;
    while binomial(k, m) < t {
        k += 1;
    }
    k
}

pub fn chi_l2_path(n: usize) -> usize {
    if n == 1 {
        1
    } else {
        m_of(n)
    }
}

/// True when `n >= 9` sits one below the capacity of its palette, the case
/// where a cycle needs one color more than the path of the same length.
pub fn is_capacity_minus_one(n: usize) -> bool {
    n >= 9 && n + 1 == capacity(m_of(n))
}

pub fn chi_l2_cycle(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidSpec(format!(
            "cycle needs at least 3 vertices, got {n}"
        ))),
        3..=8 => Ok(if n % 2 == 1 { 3 } else { 4 }),
        _ if is_capacity_minus_one(n) => Ok(m_of(n) + 1),
        _ => Ok(m_of(n)),
    }
}

/// Locating chromatic number of the friendship graph `K_1 + tK_2`.
pub fn chi_l_friendship(t: usize) -> usize {
    1 + clique_family_colors(t, 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: usize,
    pub mode: Mode,
    pub tag: &'static str,
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "value={} mode={} tag={}",
            self.value, self.mode, self.tag
        )
    }
}

fn nl(value: usize, tag: &'static str) -> Result<FormulaResult> {
    Ok(FormulaResult {
        value,
        mode: Mode::NeighborLocating,
        tag,
    })
}

fn loc(value: usize, tag: &'static str) -> Result<FormulaResult> {
    Ok(FormulaResult {
        value,
        mode: Mode::Locating,
        tag,
    })
}

/// Neighbor-locating chromatic number of a family instance.
pub fn chi_l2_of(spec: &GraphSpec) -> Result<FormulaResult> {
    spec.validate()?;
    match spec {
        GraphSpec::Path(1) | GraphSpec::Complete(1) => nl(1, "base.single-vertex"),
        GraphSpec::Path(n) => nl(m_of(*n), "thm2"),
        GraphSpec::Cycle(n) if *n < 9 => nl(chi_l2_cycle(*n)?, "cycle.small"),
        GraphSpec::Cycle(n) if is_capacity_minus_one(*n) => {
            nl(chi_l2_cycle(*n)?, "thm3.capacity-minus-1")
        }
        GraphSpec::Cycle(n) => nl(chi_l2_cycle(*n)?, "thm3"),
        GraphSpec::Complete(n) => nl(*n, "complete"),
        GraphSpec::CompleteMultipartite(parts) => nl(parts.iter().sum(), "multipartite"),
        GraphSpec::CliqueFamily { t, m } => nl(clique_family_colors(*t, *m), "clique-family"),
        GraphSpec::Friendship(t) => nl(chi_l_friendship(*t), "prop2"),
        GraphSpec::Join(a, b) => nl(chi_l2_of(a)?.value + chi_l2_of(b)?.value, "thm1"),
        GraphSpec::Custom { .. } => Err(Error::NoClosedForm(spec.to_string())),
    }
}

/// Locating chromatic number of `a + b`, tagged with the specific branch
/// when the pair is one of the named families.
pub fn chi_l_join(a: &GraphSpec, b: &GraphSpec) -> Result<FormulaResult> {
    let value = chi_l2_of(a)?.value + chi_l2_of(b)?.value;
    loc(value, join_tag(a, b))
}

fn cycle_branch(
    n: usize,
    small: &'static str,
    regular: &'static str,
    minus_one: &'static str,
) -> &'static str {
    if n < 9 {
        small
    } else if is_capacity_minus_one(n) {
        minus_one
    } else {
        regular
    }
}

fn join_tag(a: &GraphSpec, b: &GraphSpec) -> &'static str {
    use GraphSpec::*;
    let pair = |x: &GraphSpec, y: &GraphSpec| -> Option<&'static str> {
        match (x, y) {
            (Complete(1), CliqueFamily { m: 2, .. }) => Some("prop2"),
            (Complete(_), Path(n)) if *n >= 2 => Some("cor2"),
            (CompleteMultipartite(_), Path(n)) if *n >= 2 => Some("rem1.cor2"),
            (Path(m), Path(n)) if *m >= 2 && *n >= 2 => Some("cor3"),
            (Path(m), Cycle(n)) if *m >= 2 => Some(cycle_branch(
                *n,
                "cor4.small-cycle",
                "cor4",
                "cor4.capacity-minus-1",
            )),
            (Complete(_), Cycle(n)) => Some(cycle_branch(
                *n,
                "cor5.small-cycle",
                "cor5",
                "cor5.capacity-minus-1",
            )),
            (CompleteMultipartite(_), Cycle(n)) => Some(cycle_branch(
                *n,
                "rem1.cor5.small-cycle",
                "rem1.cor5",
                "rem1.cor5.capacity-minus-1",
            )),
            (Cycle(m), Cycle(n)) if m <= n => Some(cor6_tag(*m, *n)),
            _ => None,
        }
    };
    pair(a, b).or_else(|| pair(b, a)).unwrap_or("thm1")
}

fn cor6_tag(m: usize, n: usize) -> &'static str {
    match (m < 9, n < 9) {
        (_, true) => "cor6.small",
        (true, false) if is_capacity_minus_one(n) => "cor6.mixed.capacity-minus-1",
        (true, false) => "cor6.mixed",
        (false, _) => match (is_capacity_minus_one(m), is_capacity_minus_one(n)) {
            (false, false) => "cor6.large",
            (true, true) => "cor6.large.capacity-minus-1-both",
            _ => "cor6.large.capacity-minus-1",
        },
    }
}

/// Locating chromatic number where a closed form exists: joins, friendship
/// graphs, and the base facts for paths, cycles and complete multipartite
/// graphs. Disconnected families are rejected.
pub fn chi_l_of(spec: &GraphSpec) -> Result<FormulaResult> {
    spec.validate()?;
    match spec {
        GraphSpec::Join(a, b) => chi_l_join(a, b),
        GraphSpec::Friendship(t) => loc(chi_l_friendship(*t), "prop2"),
        GraphSpec::Path(n) => loc((*n).min(3), "base.path"),
        GraphSpec::Cycle(n) => loc(if n % 2 == 1 { 3 } else { 4 }, "base.cycle"),
        GraphSpec::Complete(n) => loc(*n, "base.complete"),
        GraphSpec::CompleteMultipartite(parts) if parts.len() == 1 && parts[0] > 1 => {
            Err(Error::Disconnected)
        }
        GraphSpec::CompleteMultipartite(parts) => loc(parts.iter().sum(), "base.multipartite"),
        GraphSpec::CliqueFamily { t: 1, m } => loc(*m, "base.complete"),
        GraphSpec::CliqueFamily { .. } => Err(Error::Disconnected),
        GraphSpec::Custom { .. } => Err(Error::NoClosedForm(spec.to_string())),
    }
}

/// Dispatches on mode.
pub fn formula(spec: &GraphSpec, mode: Mode) -> Result<FormulaResult> {
    match mode {
        Mode::Locating => chi_l_of(spec),
        Mode::NeighborLocating => chi_l2_of(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GraphSpec {
        s.parse().unwrap()
    }

    #[test]
    fn capacities() {
        assert_eq!(capacity(1), 0);
        assert_eq!(capacity(3), 9);
        assert_eq!(capacity(4), 24);
        assert_eq!(capacity(5), 50);
        assert_eq!(capacity(6), 90);
        assert_eq!(capacity(7), 147);
    }

    #[test]
    fn m_values() {
        assert_eq!(m_of(1), 2);
        assert_eq!(m_of(9), 3);
        assert_eq!(m_of(10), 4);
        assert_eq!(m_of(50), 5);
        assert_eq!(m_of(51), 6);
        assert_eq!(m_of(147), 7);
    }

    #[test]
    fn path_and_cycle_values() {
        assert_eq!(chi_l2_path(1), 1);
        assert_eq!(chi_l2_path(2), 2);
        assert_eq!(chi_l2_path(9), 3);
        assert_eq!(chi_l2_path(10), 4);
        assert_eq!(chi_l2_cycle(8).unwrap(), 4);
        assert_eq!(chi_l2_cycle(9).unwrap(), 3);
        assert_eq!(chi_l2_cycle(23).unwrap(), 5);
        assert_eq!(chi_l2_cycle(49).unwrap(), 6);
        assert_eq!(chi_l2_cycle(89).unwrap(), 7);
        assert!(chi_l2_cycle(2).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(200, 100), usize::MAX);
        assert_eq!(clique_family_colors(7, 2), 5);
        assert_eq!(clique_family_colors(1, 2), 2);
        assert_eq!(clique_family_colors(3, 2), 3);
    }

    #[test]
    fn friendship() {
        assert_eq!(chi_l_friendship(1), 3);
        assert_eq!(chi_l_friendship(2), 4);
        assert_eq!(chi_l_friendship(7), 6);
    }

    #[test]
    fn l2_dispatch() {
        assert_eq!(chi_l2_of(&spec("complete:5")).unwrap().value, 5);
        assert_eq!(chi_l2_of(&spec("cliques:3x2")).unwrap().value, 3);
        assert_eq!(chi_l2_of(&spec("multipartite:2,3")).unwrap().value, 5);
        assert_eq!(
            chi_l2_of(&spec("path:1")).unwrap().tag,
            "base.single-vertex"
        );
        assert_eq!(
            chi_l2_of(&spec("cycle:23")).unwrap().tag,
            "thm3.capacity-minus-1"
        );
        assert_eq!(chi_l2_of(&spec("cycle:24")).unwrap().tag, "thm3");
        assert!(matches!(
            chi_l2_of(&spec("custom:2:1-2")),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn join_values_and_tags() {
        let r = chi_l_join(&spec("path:10"), &spec("path:10")).unwrap();
        assert_eq!((r.value, r.tag), (8, "cor3"));
        let r = chi_l_join(&spec("complete:1"), &spec("cycle:5")).unwrap();
        assert_eq!((r.value, r.tag), (4, "cor5.small-cycle"));
        let r = chi_l_join(&spec("cycle:23"), &spec("cycle:23")).unwrap();
        assert_eq!((r.value, r.tag), (10, "cor6.large.capacity-minus-1-both"));
        let r = chi_l_join(&spec("cycle:24"), &spec("cycle:5")).unwrap();
        assert_eq!((r.value, r.tag), (7, "cor6.mixed"));
        let r = chi_l_join(&spec("cliques:3x2"), &spec("complete:1")).unwrap();
        assert_eq!((r.value, r.tag), (4, "prop2"));
        let r = chi_l_join(&spec("multipartite:1,3"), &spec("path:4")).unwrap();
        assert_eq!((r.value, r.tag), (7, "rem1.cor2"));
        let r = chi_l_join(&spec("path:1"), &spec("path:4")).unwrap();
        assert_eq!((r.value, r.tag), (4, "thm1"));
    }

    #[test]
    fn locating_base_facts() {
        assert_eq!(chi_l_of(&spec("path:2")).unwrap().value, 2);
        assert_eq!(chi_l_of(&spec("path:10")).unwrap().value, 3);
        assert_eq!(chi_l_of(&spec("cycle:8")).unwrap().value, 4);
        assert_eq!(chi_l_of(&spec("friendship:2")).unwrap().value, 4);
        assert_eq!(chi_l_of(&spec("multipartite:1")).unwrap().value, 1);
        assert_eq!(chi_l_of(&spec("multipartite:3")), Err(Error::Disconnected));
        assert_eq!(chi_l_of(&spec("cliques:2x2")), Err(Error::Disconnected));
    }
}
