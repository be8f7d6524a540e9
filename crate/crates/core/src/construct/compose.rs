use crate::coloring::{is_neighbor_locating, Coloring};
use crate::construct::{cycle_coloring, path_coloring};
use crate::error::{Error, Result};
use crate::family::{build_graph, GraphSpec};
use crate::formulas::clique_family_colors;
use crate::graph::{join, Graph};

/// Coloring of `g1 + g2` from neighbor-locating colorings of the two sides:
/// `f1` unchanged, `f2` shifted past `f1`'s palette. The result is
/// neighbor-locating on the join, hence locating (the join has diameter at
/// most two), with `k1 + k2` colors.
pub fn join_coloring(g1: &Graph, f1: &Coloring, g2: &Graph, f2: &Coloring) -> Result<Coloring> {
    for (g, f) in [(g1, f1), (g2, f2)] {
        if !is_neighbor_locating(g, f)?.is_valid() {
            return Err(Error::NotNeighborLocating);
        }
    }
    let mut colors = f1.colors().to_vec();
    colors.extend(f2.shifted(f1.k()));
    let out = Coloring::with_palette(colors, f1.k() + f2.k())?;
    assert!(
        is_neighbor_locating(&join(g1, g2), &out)?.is_valid(),
        "join composition lost the neighbor-locating property"
    );
    Ok(out)
}

/// Advances a sorted `m`-subset of `1..` to its colexicographic successor.
fn next_colex(c: &mut [usize]) {
    let m = c.len();
    let mut i = 0;
    while i + 1 < m && c[i] + 1 == c[i + 1] {
        i += 1;
    }
    c[i] += 1;
    for (j, x) in c[..i].iter_mut().enumerate() {
        *x = j + 1;
    }
}

/// Coloring of `t` disjoint copies of `K_m` with the fewest colors: copy `i`
/// gets the `i`-th `m`-subset of `1..=k` in colex order, assigned to its
/// vertices in increasing order.
pub fn clique_family_coloring(t: usize, m: usize) -> Result<Coloring> {
    if t == 0 || m == 0 {
        return Err(Error::InvalidSpec(format!(
            "clique family needs t >= 1 and m >= 1, got {t}x{m}"
        )));
    }
    let k = clique_family_colors(t, m);
    let mut subset: Vec<usize> = (1..=m).collect();
    let mut colors = Vec::with_capacity(t * m);
    for copy in 0..t {
        if copy > 0 {
            next_colex(&mut subset);
        }
        colors.extend_from_slice(&subset);
    }
    let out = Coloring::with_palette(colors, k)?;
    let g = build_graph(&GraphSpec::CliqueFamily { t, m })?;
    assert!(
        is_neighbor_locating(&g, &out)?.is_valid(),
        "clique family coloring repeats a color set"
    );
    Ok(out)
}

/// Optimal neighbor-locating coloring of a family instance. For joins this
/// is also an optimal locating coloring.
pub fn optimal_coloring(spec: &GraphSpec) -> Result<Coloring> {
    spec.validate()?;
    match spec {
        GraphSpec::Path(n) => Ok(path_coloring(*n)?.to_coloring()),
        GraphSpec::Cycle(n) => Ok(cycle_coloring(*n)?.to_coloring()),
        GraphSpec::Complete(n) => Coloring::new((1..=*n).collect()),
        GraphSpec::CompleteMultipartite(parts) => Coloring::new((1..=parts.iter().sum()).collect()),
        GraphSpec::CliqueFamily { t, m } => clique_family_coloring(*t, *m),
        GraphSpec::Friendship(_) => optimal_coloring(&spec.expand()),
        GraphSpec::Join(a, b) => {
            let (ga, gb) = (build_graph(a)?, build_graph(b)?);
            join_coloring(&ga, &optimal_coloring(a)?, &gb, &optimal_coloring(b)?)
        }
        GraphSpec::Custom { .. } => Err(Error::NoClosedForm(spec.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_locating;

    fn graph(s: &str) -> Graph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn colex_order() {
        let mut c = vec![1, 2];
        let mut seen = vec![c.clone()];
        for _ in 0..5 {
            next_colex(&mut c);
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn clique_families() {
        let f = clique_family_coloring(1, 2).unwrap();
        assert_eq!((f.colors(), f.k()), (&[1, 2][..], 2));
        let f = clique_family_coloring(3, 2).unwrap();
        assert_eq!((f.colors(), f.k()), (&[1, 2, 1, 3, 2, 3][..], 3));
        assert_eq!(clique_family_coloring(7, 2).unwrap().k(), 5);
        assert_eq!(
            clique_family_coloring(4, 1).unwrap().colors(),
            &[1, 2, 3, 4]
        );
        assert!(clique_family_coloring(0, 2).is_err());
    }

    #[test]
    fn join_of_two_edges_is_k4() {
        let p2 = graph("path:2");
        let f2 = Coloring::new(vec![2, 1]).unwrap();
        let f = join_coloring(&p2, &f2, &p2, &f2).unwrap();
        assert_eq!(f.colors(), &[2, 1, 4, 3]);
        assert!(is_locating(&join(&p2, &p2), &f).unwrap().is_valid());
    }

    #[test]
    fn wheel_five() {
        let f = optimal_coloring(&"join(complete:1,cycle:5)".parse().unwrap()).unwrap();
        assert_eq!(f.k(), 4);
        assert!(is_locating(&graph("join(complete:1,cycle:5)"), &f)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn rejects_non_neighbor_locating_inputs() {
        let p4 = graph("path:4");
        let bad = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        let ok = Coloring::new(vec![1, 3, 2, 1]).unwrap();
        assert_eq!(
            join_coloring(&p4, &bad, &p4, &ok),
            Err(Error::NotNeighborLocating)
        );
    }

    #[test]
    fn custom_has_no_construction() {
        assert!(matches!(
            optimal_coloring(&"custom:2:1-2".parse().unwrap()),
            Err(Error::NoClosedForm(_))
        ));
    }
}
