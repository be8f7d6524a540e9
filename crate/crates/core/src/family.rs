//! Symbolic graph families and their text syntax.
//!
//! ```text
//! path:N  cycle:N  complete:N  multipartite:N1,N2,...  cliques:TxM
//! friendship:T  join(SPEC,SPEC)  custom:N:u-v,u-v,...
//! ```
//!
//! Custom edge endpoints are 1-based, like every vertex shown to users.
//! Vertex numbering of the built graphs:
//! - `path`/`cycle`: `v_1..v_n` in sequence order;
//! - `multipartite`: part 0 first, then part 1, ...;
//! - `cliques`: copy 0 first, then copy 1, ...;
//! - `join`: left vertices first, right shifted by the left order;
//! - `friendship:T` is `join(complete:1,cliques:Tx2)`, so the center is `v_1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `t` disjoint copies of `K_m`.
    CliqueFamily {
        t: usize,
        m: usize,
    },
    /// `K_1 + tK_2`.
    Friendship(usize),
    Join(Box<GraphSpec>, Box<GraphSpec>),
    /// 0-based edge list.
    Custom {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphSpec {
    pub fn join(left: GraphSpec, right: GraphSpec) -> Self {
        GraphSpec::Join(Box::new(left), Box::new(right))
    }

    /// Number of vertices of the described graph.
    pub fn order(&self) -> usize {
        match self {
            GraphSpec::Path(n) | GraphSpec::Cycle(n) | GraphSpec::Complete(n) => *n,
            GraphSpec::CompleteMultipartite(parts) => parts.iter().sum(),
            GraphSpec::CliqueFamily { t, m } => t * m,
            GraphSpec::Friendship(t) => 2 * t + 1,
            GraphSpec::Join(a, b) => a.order() + b.order(),
            GraphSpec::Custom { n, .. } => *n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GraphSpec::Path(0) => bad("path needs at least 1 vertex".into()),
            GraphSpec::Cycle(n) if *n < 3 => {
                bad(format!("cycle needs at least 3 vertices, got {n}"))
            }
            GraphSpec::Complete(0) => bad("complete graph needs at least 1 vertex".into()),
            GraphSpec::CompleteMultipartite(parts) if parts.is_empty() => {
                bad("multipartite graph needs at least one part".into())
            }
            GraphSpec::CompleteMultipartite(parts) if parts.contains(&0) => {
                bad("multipartite part sizes must be at least 1".into())
            }
            GraphSpec::CliqueFamily { t, m } if *t == 0 || *m == 0 => bad(format!(
                "clique family needs t >= 1 and m >= 1, got {t}x{m}"
            )),
            GraphSpec::Friendship(0) => bad("friendship graph needs t >= 1".into()),
            GraphSpec::Join(a, b) => {
                a.validate()?;
                b.validate()
            }
            GraphSpec::Custom { n: 0, .. } => bad("custom graph needs at least 1 vertex".into()),
            GraphSpec::Custom { n, edges } => Graph::from_edges(*n, edges).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Expands `Friendship(t)` into its defining join; other specs are
    /// returned unchanged.
    pub fn expand(&self) -> GraphSpec {
        match self {
            GraphSpec::Friendship(t) => GraphSpec::join(
                GraphSpec::Complete(1),
                GraphSpec::CliqueFamily { t: *t, m: 2 },
            ),
            other => other.clone(),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn build_graph(spec: &GraphSpec) -> Result<Graph> {
    spec.validate()?;
    Ok(build_unchecked(spec))
}

fn build_unchecked(spec: &GraphSpec) -> Graph {
    match spec {
        GraphSpec::Path(n) => {
            let mut g = Graph::empty(*n);
            for i in 1..*n {
                g.add_edge(i - 1, i);
            }
            g
        }
        GraphSpec::Cycle(n) => {
            let mut g = build_unchecked(&GraphSpec::Path(*n));
            g.add_edge(0, n - 1);
            g
        }
        GraphSpec::Complete(n) => {
            let mut g = Graph::empty(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        GraphSpec::CompleteMultipartite(parts) => {
            let n = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        GraphSpec::CliqueFamily { t, m } => {
            let mut g = Graph::empty(t * m);
            for c in 0..*t {
                let base = c * m;
                for u in 0..*m {
                    for v in u + 1..*m {
                        g.add_edge(base + u, base + v);
                    }
                }
            }
            g
        }
        GraphSpec::Friendship(_) => build_unchecked(&spec.expand()),
        GraphSpec::Join(a, b) => graph::join(&build_unchecked(a), &build_unchecked(b)),
        GraphSpec::Custom { n, edges } => {
            Graph::from_edges(*n, edges).expect("custom spec validated before build")
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::CompleteMultipartite(parts) => {
                write!(f, "multipartite:")?;
                write_list(f, parts.iter())
            }
            GraphSpec::CliqueFamily { t, m } => write!(f, "cliques:{t}x{m}"),
            GraphSpec::Friendship(t) => write!(f, "friendship:{t}"),
            GraphSpec::Join(a, b) => write!(f, "join({a},{b})"),
            GraphSpec::Custom { n, edges } => {
                write!(f, "custom:{n}:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}-{}", u + 1, v + 1)?;
                }
                Ok(())
            }
        }
    }
}

fn write_list<'a>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = &'a usize>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { input: s, pos: 0 };
        let spec = p.spec()?;
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::SpecSyntax {
            input: self.input.to_string(),
            pos: self.pos,
            reason: reason.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn peek(&self) -> Option<u8> {
        self.input.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &self.input[self.pos..self.pos + digits];
        let value = text
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    /// True if a comma is followed by a digit, i.e. a list continues rather
    /// than a sibling spec inside `join(...)` starting.
    fn list_continues(&self) -> bool {
        let b = self.input.as_bytes();
        b.get(self.pos) == Some(&b',') && b.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        if self.eat("join(") {
            let left = self.spec()?;
            self.expect(",")?;
            let right = self.spec()?;
            self.expect(")")?;
            return Ok(GraphSpec::join(left, right));
        }
        let name_len = self
            .rest()
            .bytes()
            .take_while(u8::is_ascii_lowercase)
            .count();
        let name = &self.input[self.pos..self.pos + name_len];
        self.pos += name_len;
        self.expect(":")?;
        match name {
            "path" => Ok(GraphSpec::Path(self.number()?)),
            "cycle" => Ok(GraphSpec::Cycle(self.number()?)),
            "complete" => Ok(GraphSpec::Complete(self.number()?)),
            "friendship" => Ok(GraphSpec::Friendship(self.number()?)),
            "cliques" => {
                let t = self.number()?;
                self.expect("x")?;
                let m = self.number()?;
                Ok(GraphSpec::CliqueFamily { t, m })
            }
            "multipartite" => {
                let mut parts = vec![self.number()?];
                while self.list_continues() {
                    self.pos += 1;
                    parts.push(self.number()?);
                }
                Ok(GraphSpec::CompleteMultipartite(parts))
            }
            "custom" => {
                let n = self.number()?;
                self.expect(":")?;
                let mut edges = Vec::new();
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    edges.push(self.edge()?);
                    while self.list_continues() {
                        self.pos += 1;
                        edges.push(self.edge()?);
                    }
                }
                Ok(GraphSpec::Custom { n, edges })
            }
            _ => {
                self.pos -= name_len + 1;
                Err(self.error("unknown graph family"))
            }
        }
    }

    fn edge(&mut self) -> Result<(usize, usize)> {
        let u = self.number()?;
        self.expect("-")?;
        let v = self.number()?;
        if u == 0 || v == 0 {
            return Err(self.error("vertices are numbered from 1"));
        }
        Ok((u - 1, v - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, Diameter};

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.n()).map(|v| g.degree(v)).collect()
    }

    #[test]
    fn path_three() {
        let g = build_graph(&GraphSpec::Path(3)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn friendship_two() {
        let g = build_graph(&GraphSpec::Friendship(2)).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(degrees(&g), vec![4, 2, 2, 2, 2]);
    }

    #[test]
    fn star_is_path_three() {
        // K_{1,2} with center v_1: edges 1-2, 1-3. Relabelled, this is P_3.
        let g = build_graph(&GraphSpec::CompleteMultipartite(vec![1, 2])).unwrap();
        assert_eq!(g.edge_count(), 2);
        let mut d = degrees(&g);
        d.sort();
        assert_eq!(d, vec![1, 1, 2]);
    }

    #[test]
    fn fan_and_wheel() {
        let fan = build_graph(&"join(complete:1,path:4)".parse().unwrap()).unwrap();
        assert_eq!((fan.n(), fan.edge_count()), (5, 7));
        let wheel = build_graph(&"join(complete:1,cycle:5)".parse().unwrap()).unwrap();
        assert_eq!((wheel.n(), wheel.edge_count()), (6, 10));
    }

    #[test]
    fn diameters() {
        let k7 = build_graph(&GraphSpec::Complete(7)).unwrap();
        assert_eq!(diameter(&k7), Diameter::Finite(1));
        let j = build_graph(&GraphSpec::join(GraphSpec::Path(10), GraphSpec::Path(10))).unwrap();
        assert_eq!(diameter(&j), Diameter::Finite(2));
        let c = build_graph(&GraphSpec::CliqueFamily { t: 2, m: 3 }).unwrap();
        assert_eq!(diameter(&c), Diameter::Infinite);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(build_graph(&GraphSpec::Cycle(2)).is_err());
        assert!(build_graph(&GraphSpec::Path(0)).is_err());
        assert!(build_graph(&GraphSpec::CompleteMultipartite(vec![])).is_err());
        assert!(build_graph(&GraphSpec::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(build_graph(&GraphSpec::CliqueFamily { t: 0, m: 2 }).is_err());
        assert!(build_graph(&"custom:3:1-1".parse().unwrap()).is_err());
        assert!(build_graph(&"custom:3:1-4".parse().unwrap()).is_err());
    }

    #[test]
    fn parses_nested_specs() {
        let s: GraphSpec = "join(multipartite:1,2,3,join(custom:4:1-2,3-4,cliques:2x3))"
            .parse()
            .unwrap();
        assert_eq!(
            s,
            GraphSpec::join(
                GraphSpec::CompleteMultipartite(vec![1, 2, 3]),
                GraphSpec::join(
                    GraphSpec::Custom {
                        n: 4,
                        edges: vec![(0, 1), (2, 3)]
                    },
                    GraphSpec::CliqueFamily { t: 2, m: 3 }
                )
            )
        );
        assert_eq!(
            s.to_string(),
            "join(multipartite:1,2,3,join(custom:4:1-2,3-4,cliques:2x3))"
        );
    }

    #[test]
    fn custom_without_edges() {
        let s: GraphSpec = "join(custom:2:,path:2)".parse().unwrap();
        assert_eq!(s.to_string(), "join(custom:2:,path:2)");
    }

    #[test]
    fn rejects_bad_syntax() {
        for bad in [
            "",
            "path",
            "path:",
            "path: 3",
            "path:3 ",
            "tree:4",
            "join(path:2)",
            "cliques:3",
            "custom:3:0-1",
            "join(path:2,path:2",
        ] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad:?} parsed");
        }
    }
}
