//! Segment calculus for colorings of paths and cycles.
//!
//! A vertex colored `s` whose neighbors carry the colors `{r, t}` forms the
//! segment `[[r,s,t]]`; a path leaf with neighbor color `r` forms `[[r,s,r]]`.
//! Ends are unordered. A coloring of a path or cycle is neighbor-locating
//! exactly when no segment occurs twice.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Path,
    Cycle,
}

/// `[[r, s, t]]` with the ends stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    center: usize,
    lo: usize,
    hi: usize,
}

impl Segment {
    /// Returns `None` when an end equals the center.
    pub fn new(r: usize, s: usize, t: usize) -> Option<Self> {
        if r == s || t == s {
            return None;
        }
        Some(Segment {
            center: s,
            lo: r.min(t),
            hi: r.max(t),
        })
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.lo, self.center, self.hi)
    }
}

/// Every possible segment over `1..=k`; there are `(k^3 - k^2) / 2` of them.
pub fn possible_segments(k: usize) -> Vec<Segment> {
    let mut out = Vec::new();
    for s in 1..=k {
        for r in 1..=k {
            for t in r..=k {
                if let Some(seg) = Segment::new(r, s, t) {
                    out.push(seg);
                }
            }
        }
    }
    out
}

fn check_sequence(seq: &[usize], topology: Topology) -> Result<()> {
    let min_len = match topology {
        Topology::Path => 2,
        Topology::Cycle => 3,
    };
    if seq.len() < min_len {
        return Err(Error::ImproperSequence(format!(
            "{topology:?} sequence needs at least {min_len} entries, got {}",
            seq.len()
        )));
    }
    if let Some(i) = seq.windows(2).position(|w| w[0] == w[1]) {
        return Err(Error::ImproperSequence(format!(
            "entries {} and {} are both {}",
            i + 1,
            i + 2,
            seq[i]
        )));
    }
    if topology == Topology::Cycle && seq[0] == seq[seq.len() - 1] {
        return Err(Error::ImproperSequence(format!(
            "first and last entries are both {}",
            seq[0]
        )));
    }
    Ok(())
}

/// One segment per vertex, in vertex order.
pub fn segments_of(seq: &[usize], topology: Topology) -> Result<Vec<Segment>> {
    check_sequence(seq, topology)?;
    let n = seq.len();
    let seg = |r, s, t| Segment::new(r, s, t).expect("proper sequence");
    Ok((0..n)
        .map(|i| {
            let (prev, next) = match topology {
                Topology::Path if i == 0 => (seq[1], seq[1]),
                Topology::Path if i == n - 1 => (seq[n - 2], seq[n - 2]),
                _ => (seq[(i + n - 1) % n], seq[(i + 1) % n]),
            };
            seg(prev, seq[i], next)
        })
        .collect())
}

/// Occurrence count of every segment in the sequence.
pub fn segment_census(seq: &[usize], topology: Topology) -> Result<HashMap<Segment, usize>> {
    let mut census = HashMap::new();
    for s in segments_of(seq, topology)? {
        *census.entry(s).or_insert(0) += 1;
    }
    Ok(census)
}

pub fn all_segments_unique(seq: &[usize], topology: Topology) -> Result<bool> {
    let segs = segments_of(seq, topology)?;
    let mut seen = std::collections::HashSet::with_capacity(segs.len());
    Ok(segs.into_iter().all(|s| seen.insert(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(r: usize, s: usize, t: usize) -> Segment {
        Segment::new(r, s, t).unwrap()
    }

    #[test]
    fn ends_are_unordered() {
        assert_eq!(seg(1, 2, 3), seg(3, 2, 1));
        assert!(Segment::new(2, 2, 1).is_none());
        assert_eq!(seg(3, 1, 2).to_string(), "[[2,1,3]]");
    }

    #[test]
    fn path_segments() {
        let got = segments_of(&[2, 1, 3, 2, 1], Topology::Path).unwrap();
        assert_eq!(
            got,
            vec![
                seg(1, 2, 1),
                seg(2, 1, 3),
                seg(1, 3, 2),
                seg(3, 2, 1),
                seg(2, 1, 2)
            ]
        );
        let got = segments_of(&[2, 1], Topology::Path).unwrap();
        assert_eq!(got, vec![seg(1, 2, 1), seg(2, 1, 2)]);
    }

    #[test]
    fn cycle_segments() {
        let got = segments_of(&[1, 2, 3], Topology::Cycle).unwrap();
        assert_eq!(got, vec![seg(3, 1, 2), seg(1, 2, 3), seg(2, 3, 1)]);
    }

    #[test]
    fn improper_sequences_rejected() {
        assert!(segments_of(&[1, 1, 2], Topology::Path).is_err());
        assert!(segments_of(&[1, 2, 1], Topology::Cycle).is_err());
        assert!(segments_of(&[1], Topology::Path).is_err());
        assert!(segments_of(&[1, 2], Topology::Cycle).is_err());
    }

    #[test]
    fn uniqueness() {
        assert!(!all_segments_unique(&[1, 2, 1, 2, 1], Topology::Path).unwrap());
        assert!(all_segments_unique(&[2, 1, 3, 2, 3, 2, 1], Topology::Cycle).unwrap());
        let f9 = [2, 1, 3, 1, 3, 2, 3, 2, 1];
        assert!(all_segments_unique(&f9, Topology::Path).unwrap());
        let census = segment_census(&f9, Topology::Path).unwrap();
        assert_eq!(census.len(), 9);
        assert!(possible_segments(3).iter().all(|s| census[s] == 1));
    }

    #[test]
    fn possible_segment_counts() {
        for k in 1..=7 {
            assert_eq!(possible_segments(k).len(), (k * k * k - k * k) / 2);
        }
    }
}
