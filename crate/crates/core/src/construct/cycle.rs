//! Optimal neighbor-locating colorings of cycles.

use crate::construct::path::path_entries;
use crate::construct::ColoringSeq;
use crate::error::{Error, Result};
use crate::formulas::{is_capacity_minus_one, m_of};
use crate::segment::{all_segments_unique, Topology};

/// Neighbor-locating 4-coloring of `C_8`: the lexicographically first one
/// in first-occurrence canonical form, found by exhaustive search. The
/// exact solver reproduces it (see the solver tests).
pub const H8: [usize; 8] = [1, 2, 1, 2, 3, 1, 2, 4];

/// An optimal neighbor-locating coloring of `C_n`, `n >= 3`.
///
/// For `n >= 9` the path coloring of the same length is reused, since it
/// starts with `[2, 1]` and ends with `[2, 1]`, so closing the cycle leaves
/// every neighbor color set unchanged. At `n = capacity(n0) - 1` the path
/// coloring of `P_{n-1}` is closed through one extra vertex of a new color.
pub fn cycle_coloring(n: usize) -> Result<ColoringSeq> {
    let entries = match n {
        0..=2 => {
            return Err(Error::InvalidSpec(format!(
                "cycle needs at least 3 vertices, got {n}"
            )))
        }
        3 => vec![1, 2, 3],
        4 => vec![1, 2, 3, 4],
        5 => vec![1, 2, 1, 2, 3],
        6 => vec![1, 2, 1, 3, 2, 4],
        7 => vec![2, 1, 3, 2, 3, 2, 1],
        8 => H8.to_vec(),
        _ if is_capacity_minus_one(n) => {
            let mut e = path_entries(n - 1);
            e.push(m_of(n) + 1);
            e
        }
        _ => path_entries(n),
    };
    assert!(
        all_segments_unique(&entries, Topology::Cycle).expect("cycle construction is proper"),
        "cycle construction for n = {n} repeats a segment"
    );
    Ok(ColoringSeq::new(entries).expect("cycle construction has a contiguous palette"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::path_coloring;

    #[test]
    fn small_cycles() {
        assert_eq!(cycle_coloring(5).unwrap().entries(), &[1, 2, 1, 2, 3]);
        assert_eq!(cycle_coloring(8).unwrap().palette_size(), 4);
        assert!(cycle_coloring(2).is_err());
    }

    #[test]
    fn nine_reuses_the_path() {
        let c9 = cycle_coloring(9).unwrap();
        assert_eq!(c9.entries(), &[2, 1, 3, 1, 3, 2, 3, 2, 1]);
    }

    #[test]
    fn capacity_minus_one_gets_a_new_color() {
        let c23 = cycle_coloring(23).unwrap();
        let f22 = path_coloring(22).unwrap();
        assert_eq!(&c23.entries()[..22], f22.entries());
        assert_eq!(c23.entries()[22], 5);
        assert_eq!(c23.palette_size(), 5);
    }
}
