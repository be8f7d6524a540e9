//! Explicit optimal colorings: paths, cycles, clique families and joins.
//!
//! Every generator validates its output before returning it. A failed
//! validation is a bug in the construction and panics.

mod compose;
mod cycle;
mod path;

pub use compose::{clique_family_coloring, join_coloring, optimal_coloring};
pub use cycle::{cycle_coloring, H8};
pub use path::{path_coloring, BlockLibrary};

use std::fmt;

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Coloring of a path written as its color sequence `[f(v_1), ..., f(v_n)]`.
/// No two adjacent entries are equal and the palette is `1..=palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColoringSeq {
    entries: Vec<usize>,
    palette_size: usize,
}

impl ColoringSeq {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some(i) = entries.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::ImproperSequence(format!(
                "entries {} and {} are both {}",
                i + 1,
                i + 2,
                entries[i]
            )));
        }
        let palette_size = Coloring::new(entries.clone())?.k();
        Ok(ColoringSeq {
            entries,
            palette_size,
        })
    }

    /// The empty sequence, neutral for [`concat`].
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_coloring(&self) -> Coloring {
        Coloring::with_palette(self.entries.clone(), self.palette_size)
            .expect("sequence palette is contiguous")
    }
}

impl fmt::Display for ColoringSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_coloring())
    }
}

/// `a ⊕ b`: glue two path colorings end to start.
pub fn concat(a: &ColoringSeq, b: &ColoringSeq) -> Result<ColoringSeq> {
    let entries = glue(&a.entries, &b.entries)?;
    Ok(ColoringSeq {
        entries,
        palette_size: a.palette_size.max(b.palette_size),
    })
}

/// Concatenation on raw blocks, which need not have contiguous palettes.
pub(crate) fn glue(a: &[usize], b: &[usize]) -> Result<Vec<usize>> {
    if let (Some(&x), Some(&y)) = (a.last(), b.first()) {
        if x == y {
            return Err(Error::ConcatBoundary(x));
        }
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    Ok(out)
}

/// Left-to-right `⊕` of several raw blocks.
pub(crate) fn glue_all(blocks: &[&[usize]]) -> Result<Vec<usize>> {
    blocks.iter().try_fold(Vec::new(), |acc, b| glue(&acc, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(e: &[usize]) -> ColoringSeq {
        ColoringSeq::new(e.to_vec()).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(
            concat(&seq(&[2, 1]), &seq(&[3, 2, 1])).unwrap(),
            seq(&[2, 1, 3, 2, 1])
        );
        assert_eq!(
            concat(&seq(&[2, 1]), &ColoringSeq::empty()).unwrap(),
            seq(&[2, 1])
        );
        assert_eq!(
            concat(&ColoringSeq::empty(), &seq(&[2, 1])).unwrap(),
            seq(&[2, 1])
        );
        assert_eq!(
            concat(&seq(&[2, 1]), &seq(&[1, 3, 2])),
            Err(Error::ConcatBoundary(1))
        );
    }

    #[test]
    fn sequence_invariants() {
        assert!(ColoringSeq::new(vec![1, 1]).is_err());
        assert!(ColoringSeq::new(vec![1, 3]).is_err());
        assert_eq!(seq(&[2, 1, 3]).palette_size(), 3);
    }
}
