//! Random instances for sweeps and property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Coloring;
use crate::graph::{diameter, Diameter, Graph};
use crate::segment::Topology;

/// Relabels colors by first occurrence so the palette is `1..=k`.
pub fn canonical_relabel(colors: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    colors
        .iter()
        .map(|c| {
            let next = map.len() + 1;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

/// Erdős–Rényi graph on `n` vertices, resampled until connected with
/// diameter at most `max_diameter`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, max_diameter: u32) -> Graph {
    assert!(n >= 1);
    loop {
        let p = rng.gen_range(0.35..0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("simple edge list");
        if matches!(diameter(&g), Diameter::Finite(d) if d <= max_diameter) {
            return g;
        }
    }
}

/// Uniform-ish random proper coloring: vertices in random order each take a
/// random color from `1..=max_k` unused by colored neighbors (falling back to
/// a fresh color), then the palette is compacted.
pub fn random_proper_coloring<R: Rng>(rng: &mut R, g: &Graph, max_k: usize) -> Coloring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors = vec![0; n];
    for &v in &order {
        let free: Vec<usize> = (1..=max_k.max(1))
            .filter(|c| g.neighbors(v).iter().all(|&u| colors[u] != *c))
            .collect();
        colors[v] = match free.choose(rng) {
            Some(&c) => c,
            None => (1..)
                .find(|c| g.neighbors(v).iter().all(|&u| colors[u] != *c))
                .unwrap(),
        };
    }
    Coloring::new(canonical_relabel(&colors)).expect("relabelled palette is contiguous")
}

/// Random proper color sequence for the path or cycle `v_1..v_n` over at
/// most `k >= 2` colors (`k >= 3` for odd cycles), with compacted palette.
pub fn random_proper_sequence<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    topology: Topology,
) -> Vec<usize> {
    assert!(k >= 2 && n >= 1);
    assert!(
        topology == Topology::Path || n.is_multiple_of(2) || k >= 3,
        "odd cycles need three colors"
    );
    loop {
        let mut s = Vec::with_capacity(n);
        for i in 0..n {
            let c = loop {
                let c = rng.gen_range(1..=k);
                if i == 0 || s[i - 1] != c {
                    break c;
                }
            };
            s.push(c);
        }
        if topology == Topology::Path || n < 2 || s[0] != s[n - 1] {
            return canonical_relabel(&s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            let g = random_connected_graph(&mut rng, n, 2);
            assert!(g.is_connected());
            let f = random_proper_coloring(&mut rng, &g, 4);
            assert!(is_proper(&g, &f).unwrap());
        }
        let s = random_proper_sequence(&mut rng, 9, 3, Topology::Cycle);
        assert_ne!(s[0], s[8]);
        assert_eq!(canonical_relabel(&[3, 1, 3, 2]), vec![1, 2, 1, 3]);
    }
}
