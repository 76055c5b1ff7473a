//! The CPT v1 text format.
//!
//! ```text
//! CPT 1
//! vertices <count>
//! <id> <x> <y> <B|I>
//! edges <count>
//! <id> <v1> <v2> <M|V|U>
//! ```
//!
//! Blank lines are skipped and `#` starts a comment that runs to the end of
//! the line. The canonical form lists ids ascending, separates fields with a
//! single space and prints reals with the shortest representation that
//! parses back to the same value.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{
    Crease, CreaseId, CreasePattern, Mv, MvAssignment, PatternError, Vertex, VertexId, VertexKind,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: `{section}` declares {declared} entries but {found} follow")]
    CountMismatch { line: usize, section: &'static str, declared: usize, found: usize },
    #[error("line {line}: duplicate {kind} id {id}")]
    DuplicateId { line: usize, kind: &'static str, id: u32 },
    #[error("line {line}: edge {edge} references undeclared vertex {vertex}")]
    DanglingVertex { line: usize, edge: u32, vertex: u32 },
    #[error("invalid pattern: {0}")]
    Pattern(#[from] PatternError),
    #[error("assignment labels crease {0}, which is not in the pattern")]
    UnknownCrease(CreaseId),
}

fn syntax(line: usize, message: impl Into<String>) -> CptError {
    CptError::Syntax { line, message: message.into() }
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_u32(tok: &str, line: usize, what: &str) -> Result<u32, CptError> {
    tok.parse().map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

fn parse_real(tok: &str, line: usize) -> Result<f64, CptError> {
    let x: f64 = tok.parse().map_err(|_| syntax(line, format!("invalid coordinate `{tok}`")))?;
    if !x.is_finite() {
        return Err(syntax(line, format!("coordinate `{tok}` is not finite")));
    }
    Ok(x)
}

fn parse_header<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    keyword: &'static str,
    last_line: usize,
) -> Result<(usize, usize), CptError> {
    let (line, body) = lines
        .next()
        .ok_or_else(|| syntax(last_line, format!("expected `{keyword} <count>`")))?;
    let toks: Vec<&str> = body.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != keyword {
        return Err(syntax(line, format!("expected `{keyword} <count>`, found `{body}`")));
    }
    let count = toks[1]
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("invalid {keyword} count `{}`", toks[1])))?;
    Ok((line, count))
}

/// Parses a CPT v1 document. Creases marked `M` or `V` populate the returned
/// assignment; `U` creases are left out of it.
pub fn parse_cpt(text: &str) -> Result<(CreasePattern, MvAssignment), CptError> {
    let total_lines = text.lines().count().max(1);
    let mut lines = content_lines(text).peekable();

    match lines.next() {
        Some((_, "CPT 1")) => {}
        Some((line, other)) => return Err(syntax(line, format!("expected `CPT 1`, found `{other}`"))),
        None => return Err(syntax(1, "empty document, expected `CPT 1`")),
    }

    let (vline, vcount) = parse_header(&mut lines, "vertices", total_lines)?;
    let mut vertices = Vec::with_capacity(vcount);
    let mut vertex_ids = HashSet::new();
    while let Some(&(line, body)) = lines.peek() {
        if body.starts_with("edges") {
            break;
        }
        lines.next();
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(syntax(line, "vertex line needs `<id> <x> <y> <B|I>`"));
        }
        let id = parse_u32(toks[0], line, "vertex id")?;
        let x = parse_real(toks[1], line)?;
        let y = parse_real(toks[2], line)?;
        let kind = match toks[3] {
            "B" => VertexKind::Boundary,
            "I" => VertexKind::Interior,
            other => return Err(syntax(line, format!("vertex kind must be B or I, found `{other}`"))),
        };
        if !vertex_ids.insert(id) {
            return Err(CptError::DuplicateId { line, kind: "vertex", id });
        }
        vertices.push(Vertex { id: VertexId(id), x, y, kind });
    }
    if vertices.len() != vcount {
        return Err(CptError::CountMismatch {
            line: vline,
            section: "vertices",
            declared: vcount,
            found: vertices.len(),
        });
    }

    let (eline, ecount) = parse_header(&mut lines, "edges", total_lines)?;
    let mut creases = Vec::with_capacity(ecount);
    let mut crease_ids = HashSet::new();
    let mut mv = MvAssignment::new();
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(syntax(line, "edge line needs `<id> <v1> <v2> <M|V|U>`"));
        }
        let id = parse_u32(toks[0], line, "edge id")?;
        let a = parse_u32(toks[1], line, "vertex reference")?;
        let b = parse_u32(toks[2], line, "vertex reference")?;
        for v in [a, b] {
            if !vertex_ids.contains(&v) {
                return Err(CptError::DanglingVertex { line, edge: id, vertex: v });
            }
        }
        if !crease_ids.insert(id) {
            return Err(CptError::DuplicateId { line, kind: "edge", id });
        }
        match toks[3] {
            "M" => {
                mv.insert(CreaseId(id), Mv::Mountain);
            }
            "V" => {
                mv.insert(CreaseId(id), Mv::Valley);
            }
            "U" => {}
            other => return Err(syntax(line, format!("edge label must be M, V or U, found `{other}`"))),
        }
        creases.push(Crease { id: CreaseId(id), endpoints: (VertexId(a), VertexId(b)) });
    }
    if creases.len() != ecount {
        return Err(CptError::CountMismatch {
            line: eline,
            section: "edges",
            declared: ecount,
            found: creases.len(),
        });
    }

    Ok((CreasePattern::new(vertices, creases)?, mv))
}

/// Emits the canonical CPT v1 text for `pattern`. Creases missing from `mv`
/// are written as `U`.
pub fn serialize_cpt(pattern: &CreasePattern, mv: Option<&MvAssignment>) -> Result<String, CptError> {
    if let Some(mv) = mv {
        if let Some((c, _)) = mv.iter().find(|(c, _)| pattern.crease(*c).is_none()) {
            return Err(CptError::UnknownCrease(c));
        }
    }
    let mut out = String::from("CPT 1\n");
    writeln!(out, "vertices {}", pattern.vertices().len()).unwrap();
    for v in pattern.vertices() {
        let kind = match v.kind {
            VertexKind::Boundary => 'B',
            VertexKind::Interior => 'I',
        };
        writeln!(out, "{} {} {} {}", v.id, v.x, v.y, kind).unwrap();
    }
    writeln!(out, "edges {}", pattern.creases().len()).unwrap();
    for c in pattern.creases() {
        let label = mv.and_then(|m| m.get(c.id)).map_or('U', Mv::letter);
        writeln!(out, "{} {} {} {}", c.id, c.endpoints.0, c.endpoints.1, label).unwrap();
    }
    Ok(out)
}

/// One `<id> <v1> <v2> <M|V|U>` line per crease: the edge block used by
/// `enumerate` output.
pub fn edge_block(pattern: &CreasePattern, mv: &MvAssignment) -> String {
    let mut out = String::new();
    for c in pattern.creases() {
        let label = mv.get(c.id).map_or('U', Mv::letter);
        writeln!(out, "{} {} {} {}", c.id, c.endpoints.0, c.endpoints.1, label).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "CPT 1\nvertices 2\n0 0 0 B\n1 1 0 B\nedges 1\n0 0 1 M\n";

    #[test]
    fn smallest_document() {
        let (p, mv) = parse_cpt(SMALL).unwrap();
        assert_eq!(p.creases().len(), 1);
        assert_eq!(mv.len(), 1);
        assert_eq!(mv.get(CreaseId(0)), Some(Mv::Mountain));
        assert_eq!(serialize_cpt(&p, Some(&mv)).unwrap(), SMALL);
    }

    #[test]
    fn canonicalizes_messy_input() {
        let messy = "# header\nCPT 1\n\nvertices 2   # two\n1   1.0 0 B\n0 0.000 -0 B\nedges 1\n0 1 0 U\n";
        let (p, mv) = parse_cpt(messy).unwrap();
        assert!(mv.is_empty());
        let canon = serialize_cpt(&p, Some(&mv)).unwrap();
        assert_eq!(canon, "CPT 1\nvertices 2\n0 0 0 B\n1 1 0 B\nedges 1\n0 1 0 U\n");
        let (p2, mv2) = parse_cpt(&canon).unwrap();
        assert_eq!(serialize_cpt(&p2, Some(&mv2)).unwrap(), canon);
    }

    #[test]
    fn empty_pattern_is_header_only() {
        let text = serialize_cpt(&CreasePattern::empty(), None).unwrap();
        assert_eq!(text, "CPT 1\nvertices 0\nedges 0\n");
        let (p, _) = parse_cpt(&text).unwrap();
        assert!(p.vertices().is_empty());
    }

    #[test]
    fn partial_assignment_writes_u() {
        let text = "CPT 1\nvertices 3\n0 0 0 B\n1 1 0 I\n2 2 1 B\nedges 2\n0 0 1 V\n1 1 2 U\n";
        let (p, mv) = parse_cpt(text).unwrap();
        assert_eq!(serialize_cpt(&p, Some(&mv)).unwrap(), text);
        assert!(!mv.is_total_for(&p));
    }

    #[test]
    fn dangling_reference() {
        let text = "CPT 1\nvertices 2\n0 0 0 B\n1 1 0 B\nedges 1\n0 0 99 M\n";
        assert_eq!(
            parse_cpt(text).unwrap_err(),
            CptError::DanglingVertex { line: 6, edge: 0, vertex: 99 }
        );
    }

    #[test]
    fn error_cases_carry_line_numbers() {
        let dup = "CPT 1\nvertices 2\n0 0 0 B\n0 1 0 B\nedges 0\n";
        assert_eq!(parse_cpt(dup).unwrap_err(), CptError::DuplicateId { line: 4, kind: "vertex", id: 0 });

        let short = "CPT 1\nvertices 3\n0 0 0 B\n1 1 0 B\nedges 0\n";
        assert!(matches!(
            parse_cpt(short).unwrap_err(),
            CptError::CountMismatch { line: 2, declared: 3, found: 2, .. }
        ));

        let bad_kind = "CPT 1\nvertices 1\n0 0 0 X\nedges 0\n";
        assert!(matches!(parse_cpt(bad_kind).unwrap_err(), CptError::Syntax { line: 3, .. }));

        let negative = "CPT 1\nvertices -1\nedges 0\n";
        assert!(matches!(parse_cpt(negative).unwrap_err(), CptError::Syntax { line: 2, .. }));

        assert!(matches!(parse_cpt("CPT 2\n").unwrap_err(), CptError::Syntax { line: 1, .. }));
        assert!(matches!(parse_cpt("").unwrap_err(), CptError::Syntax { .. }));

        let nan = "CPT 1\nvertices 1\n0 nan 0 B\nedges 0\n";
        assert!(matches!(parse_cpt(nan).unwrap_err(), CptError::Syntax { line: 3, .. }));
    }

    #[test]
    fn serialize_rejects_foreign_crease() {
        let (p, _) = parse_cpt(SMALL).unwrap();
        let mv: MvAssignment = [(CreaseId(7), Mv::Valley)].into_iter().collect();
        assert_eq!(serialize_cpt(&p, Some(&mv)).unwrap_err(), CptError::UnknownCrease(CreaseId(7)));
    }
}
