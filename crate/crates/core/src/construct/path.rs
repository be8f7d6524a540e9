//! Optimal neighbor-locating colorings of paths.
//!
//! Lengths up to 50 come from a fixed table. Beyond that, with `m` colors
//! and `base = capacity(m - 1)`, the coloring of `P_n` is assembled from the
//! complete `(m-1)`-coloring of `P_base` and the blocks of [`BlockLibrary`],
//! in four stages indexed by `d = n - base`:
//!
//! 1. `d` in `1..=12`: truncated base plus one of twelve explicit tails;
//! 2. the A stage, growing `A` two entries at a time;
//! 3. the D stage, adding `D_4 .. D_{m-3}` one triple at a time;
//! 4. the final `6m - 12` lengths: the complete model with a shorter prefix.
//!
//! All outputs end in `[.., m, 2, 1]` and, except at `capacity(m) - 1`,
//! start with `[2, 1, ..]`.

use crate::construct::{glue, glue_all, ColoringSeq};
use crate::error::{Error, Result};
use crate::formulas::{capacity, m_of};
use crate::segment::{all_segments_unique, Topology};

/// Building blocks of the inductive construction for a palette of `m`
/// colors, `m >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLibrary {
    m: usize,
}

impl BlockLibrary {
    pub fn new(m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidSpec(format!(
                "block library needs m >= 4, got {m}"
            )));
        }
        Ok(BlockLibrary { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `T = [m,1,3,m,3,2,m,2,1]`.
    pub fn t(&self) -> Vec<usize> {
        let m = self.m;
        vec![m, 1, 3, m, 3, 2, m, 2, 1]
    }

    /// `[m, i, m, i-1, ..., m, 1]`; empty for `i = 0`.
    pub fn pairs(&self, i: usize) -> Vec<usize> {
        (1..=i).rev().flat_map(|c| [self.m, c]).collect()
    }

    /// `A = [m, m-4, m, m-5, ..., m, 1]`.
    pub fn a(&self) -> Vec<usize> {
        self.pairs(self.m - 4)
    }

    /// `[m, m-1, m, m-2, m, m-3]`.
    pub fn opening(&self) -> Vec<usize> {
        let m = self.m;
        vec![m, m - 1, m, m - 2, m, m - 3]
    }

    /// `D_{i,j} = [m,i,j, m,i,j-1, ..., m,i,1]`; empty for `j = 0`.
    pub fn d_ij(&self, i: usize, j: usize) -> Vec<usize> {
        debug_assert!(j == 0 || (4..self.m).contains(&i) && j + 2 <= i);
        (1..=j).rev().flat_map(|c| [self.m, i, c]).collect()
    }

    /// `D_i = [m, i-1, i] ⊕ D_{i,i-2}`; empty for `i <= 3`.
    pub fn d_i(&self, i: usize) -> Vec<usize> {
        if i <= 3 {
            return Vec::new();
        }
        let mut out = vec![self.m, i - 1, i];
        out.extend(self.d_ij(i, i - 2));
        out
    }

    /// `D_{[i]} = D_i ⊕ D_{i-1} ⊕ ... ⊕ D_4`; empty for `i <= 3`.
    pub fn d_prefix(&self, i: usize) -> Vec<usize> {
        (4..=i).rev().flat_map(|l| self.d_i(l)).collect()
    }

    /// The complete model with the given prefix in place of `f_{base}`:
    /// `prefix ⊕ opening ⊕ A ⊕ D_{[m-1]} ⊕ T`.
    pub fn complete_model(&self, prefix: &[usize]) -> Result<Vec<usize>> {
        glue_all(&[
            prefix,
            &self.opening(),
            &self.a(),
            &self.d_prefix(self.m - 1),
            &self.t(),
        ])
    }
}

/// An optimal neighbor-locating coloring of `P_n`, with `chi_L2(P_n)`
/// colors.
pub fn path_coloring(n: usize) -> Result<ColoringSeq> {
    if n == 0 {
        return Err(Error::InvalidSpec("path needs at least 1 vertex".into()));
    }
    let entries = path_entries(n);
    assert_eq!(
        entries.len(),
        n,
        "path construction produced the wrong length"
    );
    let seq = ColoringSeq::new(entries).expect("path construction is proper");
    if n >= 2 {
        assert!(
            all_segments_unique(seq.entries(), Topology::Path).expect("proper"),
            "path construction for n = {n} repeats a segment"
        );
    }
    Ok(seq)
}

pub(crate) fn path_entries(n: usize) -> Vec<usize> {
    if n <= 50 {
        return table(n);
    }
    let m = m_of(n);
    let base = capacity(m - 1);
    let lib = BlockLibrary::new(m).expect("m >= 6 beyond the table");
    let f_base = path_entries(base);
    let d = n - base;
    let t = lib.t();
    let a = lib.a();
    let a_len = a.len();

    let built = if d <= 12 {
        glue(&f_base[..base - 2], &step_tail(m, d))
    } else if d <= 12 + a_len {
        let j = d - 12;
        let i = j.div_ceil(2);
        if j % 2 == 1 {
            glue_all(&[&f_base, &[m, m - 1, m, m - 2], &lib.pairs(i - 1), &t])
        } else {
            glue_all(&[&f_base, &[m, m - 1, m - 2], &lib.pairs(i), &t])
        }
    } else {
        let mut start = base + 12 + a_len;
        let mut staged = None;
        for i in 4..=m.saturating_sub(3) {
            let len = 3 * (i - 1);
            if n <= start + len {
                staged = Some(d_stage(&lib, &f_base, i, n - start));
                break;
            }
            start += len;
        }
        match staged {
            Some(b) => b,
            None => {
                let steps = 6 * m - 12;
                let j = n - start;
                assert!(
                    j >= 1 && j <= steps && start + steps == capacity(m),
                    "final stage offsets inconsistent for n = {n}"
                );
                lib.complete_model(&path_entries(base - steps + j))
            }
        }
    };
    built.expect("block boundaries never repeat a color")
}

/// The D stage while adding `D_i`, at offset `off` in `1..=3(i-1)` past the
/// point where `D_{[i-1]}` is complete.
fn d_stage(lib: &BlockLibrary, f_base: &[usize], i: usize, off: usize) -> Result<Vec<usize>> {
    let m = lib.m();
    let j = (off - 1) / 3 + 1;
    let a = lib.a();
    let rest = glue_all(&[&lib.d_ij(i, j - 1), &lib.d_prefix(i - 1), &lib.t()])?;
    match off - 3 * (j - 1) {
        1 => glue_all(&[f_base, &[m, m - 1, m, m - 2], &a, &rest]),
        2 => glue_all(&[f_base, &[m, m - 1, m - 2, m, m - 3], &a, &rest]),
        _ => {
            let triple = if j + 1 < i { [m, i, j] } else { [m, j, i] };
            glue_all(&[f_base, &[m, m - 1, m - 2], &a, &triple, &rest])
        }
    }
}

/// Tail appended to the base coloring minus its last two entries, for the
/// first twelve lengths past the base.
fn step_tail(m: usize, d: usize) -> Vec<usize> {
    match d {
        1 => vec![m, 2, 1],
        2 => vec![2, m, 2, 1],
        3 => vec![2, 1, m, 2, 1],
        4 => vec![m, 3, 1, m, 2, 1],
        5 => vec![m, 3, m, 1, m, 2, 1],
        6 => vec![m, 3, m, 1, 3, m, 2, 1],
        7 => vec![m, 3, m, 1, m, 2, m, 2, 1],
        8 => vec![m, 3, m, 1, 3, m, 2, m, 2, 1],
        9 => vec![2, 1, m, 1, 3, m, 3, 2, m, 2, 1],
        10 => vec![2, 1, m, 1, m, 3, m, 3, 2, m, 2, 1],
        11 => vec![2, 1, m, m - 1, 1, m, 3, m, 3, 2, m, 2, 1],
        12 => vec![2, 1, m, m - 1, m - 2, m, 1, 3, m, 3, 2, m, 2, 1],
        _ => unreachable!("step tails cover offsets 1..=12"),
    }
}

const TAIL_24: [usize; 15] = [4, 3, 4, 2, 4, 1, 4, 1, 3, 4, 3, 2, 4, 2, 1];
const TAIL_50: [usize; 26] = [
    5, 4, 5, 3, 5, 2, 5, 1, 5, 3, 4, 5, 4, 2, 5, 4, 1, 5, 1, 3, 5, 3, 2, 5, 2, 1,
];

fn table(n: usize) -> Vec<usize> {
    let with = |prefix: Vec<usize>, tail: &[usize]| -> Vec<usize> {
        glue(&prefix, tail).expect("table rows glue cleanly")
    };
    let f24_22 = || table(24)[..22].to_vec();
    match n {
        1 => vec![1],
        2 => vec![2, 1],
        3 => vec![3, 2, 1],
        4 => vec![1, 3, 2, 1],
        5 => vec![2, 1, 3, 2, 1],
        6 => vec![3, 2, 3, 1, 2, 1],
        7 => vec![2, 1, 3, 2, 3, 2, 1],
        8 => vec![3, 2, 3, 1, 3, 1, 2, 1],
        9 => vec![2, 1, 3, 1, 3, 2, 3, 2, 1],
        10 => vec![2, 1, 3, 1, 3, 2, 3, 4, 2, 1],
        11 => vec![2, 1, 3, 1, 3, 2, 3, 2, 4, 2, 1],
        12 => vec![2, 1, 3, 1, 3, 2, 3, 2, 1, 4, 2, 1],
        13 => vec![2, 1, 3, 1, 3, 2, 3, 4, 3, 1, 4, 2, 1],
        14 => vec![2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 1],
        15 => vec![2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 1],
        16 => vec![2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 4, 2, 1],
        17 => vec![2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 4, 2, 1],
        18 => with(table(9), &[4, 1, 3, 4, 3, 2, 4, 2, 1]),
        19 => with(table(9), &[4, 1, 4, 3, 4, 3, 2, 4, 2, 1]),
        20 => with(table(9), &[4, 3, 1, 4, 2, 4, 3, 2, 4, 2, 1]),
        21 => with(table(9), &[4, 1, 4, 2, 4, 3, 4, 3, 2, 4, 2, 1]),
        22 => with(table(7), &TAIL_24),
        23 => with(table(8), &TAIL_24),
        24 => with(table(9), &TAIL_24),
        25 => with(f24_22(), &[5, 2, 1]),
        26 => with(f24_22(), &[2, 5, 2, 1]),
        27 => with(f24_22(), &[2, 1, 5, 2, 1]),
        28 => with(f24_22(), &[5, 3, 1, 5, 2, 1]),
        29 => with(f24_22(), &[5, 3, 5, 1, 5, 2, 1]),
        30 => with(f24_22(), &[5, 3, 5, 1, 3, 5, 2, 1]),
        31 => with(f24_22(), &[5, 3, 5, 1, 5, 2, 5, 2, 1]),
        32 => with(f24_22(), &[5, 3, 5, 1, 3, 5, 2, 5, 2, 1]),
        33 => with(table(24), &[5, 1, 3, 5, 3, 2, 5, 2, 1]),
        34 => with(table(24), &[5, 1, 5, 3, 5, 3, 2, 5, 2, 1]),
        35..=50 => with(table(n - 26), &TAIL_50),
        _ => unreachable!("table covers 1..=50"),
    }
}
