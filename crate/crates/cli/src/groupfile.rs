//! Line-oriented group files:
//!
//! ```text
//! # comment
//! name A5
//! degree 5
//! gen (1 2 3 4 5)
//! gen (1 2 3)
//! ```

use std::fmt::Write as _;

use grp_core::{PermGroup, Permutation};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("malformed {0}")]
    Malformed(&'static str),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("cycles are not disjoint: point {0} appears in two cycles")]
    NonDisjointCycles(u32),
    #[error("point {0} appears twice in one cycle")]
    DuplicatePoint(u32),
    #[error("`{0}` given twice")]
    Repeated(&'static str),
    #[error("`gen` before `degree`")]
    GenBeforeDegree,
    #[error("missing `degree`")]
    MissingDegree,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn from_group(name: &str, group: &PermGroup) -> Self {
        GroupFile {
            name: name.to_string(),
            degree: group.degree(),
            generators: group.generators().to_vec(),
        }
    }

    pub fn to_group(&self) -> grp_core::Result<PermGroup> {
        PermGroup::new(self.degree, self.generators.clone())
    }

    /// Canonical text; `parse` of it gives back `self`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "name {}", self.name);
        let _ = writeln!(s, "degree {}", self.degree);
        for g in &self.generators {
            let _ = writeln!(s, "gen {}", g.to_cycle_string());
        }
        s
    }
}

fn parse_cycles(text: &str, degree: usize, line: usize) -> Result<Permutation, ParseError> {
    let err = |kind| ParseError { line, kind };
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut seen = vec![false; degree];
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(err(ParseErrorKind::Malformed("generator")));
    }
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| err(ParseErrorKind::Malformed("cycle")))?;
        let body = &rest[1..body_end + 1];
        rest = rest[body_end + 2..].trim_start();
        let mut cycle = Vec::new();
        for tok in body.split_whitespace() {
            let pt: u32 = tok.parse().map_err(|_| err(ParseErrorKind::Malformed("point")))?;
            if pt == 0 || pt as usize > degree {
                return Err(err(ParseErrorKind::PointOutOfRange { point: pt, degree }));
            }
            if cycle.contains(&pt) {
                return Err(err(ParseErrorKind::DuplicatePoint(pt)));
            }
            if seen[pt as usize - 1] {
                return Err(err(ParseErrorKind::NonDisjointCycles(pt)));
            }
            cycle.push(pt);
        }
        for &pt in &cycle {
            seen[pt as usize - 1] = true;
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(Permutation::from_cycles(degree, &cycles).expect("validated cycles"))
}

/// Parses a group file. Generators keep file order.
pub fn parse_group_file(text: &str) -> Result<GroupFile, ParseError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let (directive, arg) = match content.split_once(char::is_whitespace) {
            Some((d, a)) => (d, a.trim()),
            None => (content, ""),
        };
        match directive {
            "name" => {
                if name.is_some() {
                    return Err(err(ParseErrorKind::Repeated("name")));
                }
                if arg.is_empty() || arg.contains(char::is_whitespace) {
                    return Err(err(ParseErrorKind::Malformed("name")));
                }
                name = Some(arg.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(err(ParseErrorKind::Repeated("degree")));
                }
                degree = Some(arg.parse().map_err(|_| err(ParseErrorKind::Malformed("degree")))?);
            }
            "gen" => {
                let d = degree.ok_or_else(|| err(ParseErrorKind::GenBeforeDegree))?;
                generators.push(parse_cycles(arg, d, line)?);
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    let degree = degree.ok_or(ParseError {
        line: last_line,
        kind: ParseErrorKind::MissingDegree,
    })?;
    Ok(GroupFile {
        name: name.unwrap_or_else(|| "G".to_string()),
        degree,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_file() {
        let f = parse_group_file("name A5\ndegree 5\ngen (1 2 3 4 5)\ngen (1 2 3)").unwrap();
        assert_eq!(f.to_group().unwrap().order(), 60);
        assert_eq!(parse_group_file(&f.render()).unwrap(), f);
    }

    #[test]
    fn identity_and_comments() {
        let f = parse_group_file("# trivial\ndegree 3 # three points\ngen ()\n").unwrap();
        assert!(f.generators[0].is_identity());
        assert_eq!(f.name, "G");
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_group_file("degree 3\ngen (1 2)(2 3)").unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::NonDisjointCycles(2)));
        let e = parse_group_file("degree 3\n\ngen (1 1)").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicatePoint(1)));
        let e = parse_group_file("degree 3\ngen (1 4)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::PointOutOfRange { point: 4, degree: 3 });
        let e = parse_group_file("order 3").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownDirective("order".into()));
        assert_eq!(parse_group_file("gen ()").unwrap_err().kind, ParseErrorKind::GenBeforeDegree);
    }
}
