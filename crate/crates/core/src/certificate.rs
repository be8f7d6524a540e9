//! One-line certificate records exchanged by the CLI.
//!
//! ```text
//! spec=path:5 colors=1,2,1,2,3 mode=nl verdict=invalid witness=v1,v3
//! ```
//!
//! Fields appear in this order, separated by single spaces. Vertices in the
//! witness are 1-based: `vI,vJ` for two vertices the mode fails to separate,
//! `edge:vI,vJ` for a monochromatic edge, `-` when the verdict is valid.
//! Parsing accepts only the canonical form, so `parse` and `Display` are
//! exact inverses.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{check, Coloring, Mode, Verdict, Witness};
use crate::error::{Error, Result};
use crate::family::{build_graph, GraphSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub spec: GraphSpec,
    pub coloring: Coloring,
    pub mode: Mode,
    pub verdict: Verdict,
}

impl Certificate {
    /// Checks `coloring` on the graph of `spec` and records the outcome.
    pub fn issue(spec: GraphSpec, coloring: Coloring, mode: Mode) -> Result<Self> {
        let g = build_graph(&spec)?;
        let verdict = check(&g, &coloring, mode)?;
        Ok(Certificate {
            spec,
            coloring,
            mode,
            verdict,
        })
    }

    /// Re-derives the verdict from scratch; true iff it matches the record,
    /// witness included.
    pub fn recheck(&self) -> Result<bool> {
        let g = build_graph(&self.spec)?;
        Ok(check(&g, &self.coloring, self.mode)? == self.verdict)
    }
}

fn fmt_witness(w: Option<Witness>) -> String {
    match w {
        None => "-".into(),
        Some(Witness::Collision(u, v)) => format!("v{},v{}", u + 1, v + 1),
        Some(Witness::ImproperEdge(u, v)) => format!("edge:v{},v{}", u + 1, v + 1),
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.verdict.is_valid() {
            "valid"
        } else {
            "invalid"
        };
        write!(
            f,
            "spec={} colors={} mode={} verdict={} witness={}",
            self.spec,
            self.coloring,
            self.mode,
            verdict,
            fmt_witness(self.verdict.witness())
        )
    }
}

fn syntax(msg: impl Into<String>) -> Error {
    Error::CertificateSyntax(msg.into())
}

fn parse_vertex(s: &str) -> Result<usize> {
    let digits = s
        .strip_prefix('v')
        .ok_or_else(|| syntax(format!("vertex `{s}` must look like v1")))?;
    match digits.parse::<usize>() {
        Ok(i) if i >= 1 && digits == i.to_string() => Ok(i - 1),
        _ => Err(syntax(format!("bad vertex `{s}`"))),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| syntax(format!("witness `{s}` needs two vertices")))?;
    let (u, v) = (parse_vertex(a)?, parse_vertex(b)?);
    if u >= v {
        return Err(syntax(format!(
            "witness `{s}` must list the smaller vertex first"
        )));
    }
    Ok((u, v))
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(' ').collect();
        let keys = ["spec", "colors", "mode", "verdict", "witness"];
        if fields.len() != keys.len() {
            return Err(syntax(format!(
                "expected {} space-separated fields, got {}",
                keys.len(),
                fields.len()
            )));
        }
        let mut vals = [""; 5];
        for (i, (field, key)) in fields.iter().zip(keys).enumerate() {
            vals[i] = field
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| syntax(format!("field {} must be `{key}=...`", i + 1)))?;
        }
        let [spec, colors, mode, verdict, witness] = vals;
        let spec: GraphSpec = spec.parse()?;
        let coloring: Coloring = colors.parse()?;
        if coloring.to_string() != colors {
            return Err(syntax(format!(
                "colors `{colors}` are not in canonical form"
            )));
        }
        let mode: Mode = match mode {
            "locating" => Mode::Locating,
            "nl" => Mode::NeighborLocating,
            _ => {
                return Err(syntax(format!(
                    "mode must be `locating` or `nl`, got `{mode}`"
                )))
            }
        };
        let verdict = match (verdict, witness) {
            ("valid", "-") => Verdict::Valid,
            ("valid", _) => return Err(syntax("a valid verdict carries witness `-`")),
            ("invalid", "-") => return Err(syntax("an invalid verdict needs a witness")),
            ("invalid", w) => Verdict::Invalid(match w.strip_prefix("edge:") {
                Some(rest) => {
                    let (u, v) = parse_pair(rest)?;
                    Witness::ImproperEdge(u, v)
                }
                None => {
                    let (u, v) = parse_pair(w)?;
                    Witness::Collision(u, v)
                }
            }),
            _ => {
                return Err(syntax(format!(
                    "verdict must be `valid` or `invalid`, got `{verdict}`"
                )))
            }
        };
        if coloring.len() != spec.order() {
            return Err(Error::SizeMismatch {
                expected: spec.order(),
                got: coloring.len(),
            });
        }
        Ok(Certificate {
            spec,
            coloring,
            mode,
            verdict,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn issue(spec: &str, colors: &str, mode: Mode) -> Certificate {
        Certificate::issue(spec.parse().unwrap(), colors.parse().unwrap(), mode).unwrap()
    }

    #[test]
    fn invalid_path_record() {
        let c = issue("path:5", "1,2,1,2,3", Mode::NeighborLocating);
        let line = "spec=path:5 colors=1,2,1,2,3 mode=nl verdict=invalid witness=v1,v3";
        assert_eq!(c.to_string(), line);
        assert_eq!(line.parse::<Certificate>().unwrap(), c);
        assert!(c.recheck().unwrap());
    }

    #[test]
    fn round_trips() {
        for (spec, colors, mode) in [
            ("path:9", "2,1,3,1,3,2,3,2,1", Mode::NeighborLocating),
            ("join(complete:1,cycle:5)", "1,2,3,2,3,4", Mode::Locating),
            ("cycle:4", "1,1,2,2", Mode::Locating),
            ("custom:3:1-2", "1,2,1", Mode::NeighborLocating),
        ] {
            let c = issue(spec, colors, mode);
            let line = c.to_string();
            let back: Certificate = line.parse().unwrap();
            assert_eq!(back, c);
            assert_eq!(back.to_string(), line);
        }
        assert_eq!(
            issue("cycle:4", "1,1,2,2", Mode::Locating).to_string(),
            "spec=cycle:4 colors=1,1,2,2 mode=locating verdict=invalid witness=edge:v1,v2"
        );
    }

    #[test]
    fn tampered_records_fail_recheck() {
        let line = "spec=path:5 colors=1,2,1,2,3 mode=nl verdict=valid witness=-";
        let c: Certificate = line.parse().unwrap();
        assert!(!c.recheck().unwrap());
    }

    #[test]
    fn rejects_noncanonical_input() {
        for bad in [
            "spec=path:2 colors=2,1 mode=nl verdict=valid",
            "spec=path:2  colors=2,1 mode=nl verdict=valid witness=-",
            "spec=path:2 colors=2,1 mode=neighbor-locating verdict=valid witness=-",
            "spec=path:2 colors=2,1 mode=nl verdict=valid witness=v1,v2",
            "spec=path:2 colors=2,1 mode=nl verdict=invalid witness=-",
            "spec=path:3 colors=1,2,1 mode=nl verdict=invalid witness=v3,v1",
            "spec=path:3 colors=1,2,1 mode=nl verdict=invalid witness=v01,v3",
            "spec=path:3 colors=2,1 mode=nl verdict=valid witness=-",
            "colors=2,1 spec=path:2 mode=nl verdict=valid witness=-",
        ] {
            assert!(bad.parse::<Certificate>().is_err(), "{bad}");
        }
    }
}
