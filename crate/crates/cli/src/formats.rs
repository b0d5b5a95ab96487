//! Plain-text file formats.
//!
//! All formats are 1-indexed, use LF line endings and single spaces (or
//! commas for adjacency rows) between fields. Writers always end the file
//! with exactly one LF. Readers accept a missing final LF but reject blank
//! lines, CR characters, signs and any extra whitespace.
//!
//! - `.rot`: header `n d`, then `n` rows of `d` vertex ids.
//! - `.adj`: `n` rows of `n` comma-separated `0`/`1` digits.
//! - `.perm`: header `N d`, then `N*d` lines `v i w j`, one per dart in
//!   index order `(v - 1) * d + i`.
//! - DOT export: one undirected edge per line, labelled `"i|j"` with the
//!   port at each end.
//! - JSON export: `{"n":…,"d":…,"rot":[[…],…]}`.

use std::fmt::Write as _;

use rotmap::{AdjacencyMatrix, Dart, RotationMatrix, ShiftPermutation};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] rotmap::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Syntax { line, message: message.into() })
}

/// Splits into lines, rejecting CR, blank lines and empty input.
fn lines(text: &str) -> Result<Vec<&str>, FormatError> {
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        return syntax(line, "CR characters are not allowed; use LF line endings");
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return syntax(1, "empty file");
    }
    let lines: Vec<&str> = body.split('\n').collect();
    if let Some(k) = lines.iter().position(|l| l.is_empty()) {
        return syntax(k + 1, "blank line");
    }
    Ok(lines)
}

fn number(token: &str, line: usize) -> Result<usize, FormatError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return syntax(line, format!("expected a decimal integer, found {token:?}"));
    }
    token.parse().or_else(|_| syntax(line, format!("{token} is too large")))
}

fn numbers(text: &str, line: usize, expected: usize) -> Result<Vec<usize>, FormatError> {
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != expected {
        return syntax(line, format!("expected {expected} space-separated fields, found {}", fields.len()));
    }
    fields.into_iter().map(|t| number(t, line)).collect()
}

fn header(lines: &[&str]) -> Result<(usize, usize), FormatError> {
    let h = numbers(lines[0], 1, 2)?;
    if h[0] == 0 || h[1] == 0 {
        return syntax(1, "both header fields must be positive");
    }
    Ok((h[0], h[1]))
}

/// Reads a `.rot` file, checking only its shape and vertex ranges.
pub fn parse_rot_matrix(text: &str) -> Result<RotationMatrix, FormatError> {
    let lines = lines(text)?;
    let (n, d) = header(&lines)?;
    if lines.len() != n + 1 {
        return syntax(1, format!("expected {n} rows after the header, found {}", lines.len() - 1));
    }
    let mut entries = Vec::with_capacity(n * d);
    for (k, line) in lines[1..].iter().enumerate() {
        entries.extend(numbers(line, k + 2, d)?);
    }
    Ok(RotationMatrix::new(n, d, entries)?)
}

/// Reads a `.rot` file that must hold a valid (not necessarily consistent)
/// rotation map.
pub fn parse_rot(text: &str) -> Result<RotationMatrix, FormatError> {
    let r = parse_rot_matrix(text)?;
    r.ensure_valid()?;
    Ok(r)
}

pub fn write_rot(r: &RotationMatrix) -> String {
    format!("{} {}\n{r}", r.num_vertices(), r.degree())
}

/// Reads a `.adj` file; the graph must be regular.
pub fn parse_adj(text: &str) -> Result<AdjacencyMatrix, FormatError> {
    let lines = lines(text)?;
    let n = lines.len();
    let mut entries = Vec::with_capacity(n * n);
    for (k, line) in lines.iter().enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != n {
            return syntax(k + 1, format!("expected {n} comma-separated entries, found {}", fields.len()));
        }
        for f in fields {
            match f {
                "0" => entries.push(0),
                "1" => entries.push(1),
                _ => return syntax(k + 1, format!("expected 0 or 1, found {f:?}")),
            }
        }
    }
    let a = AdjacencyMatrix::new(n, entries)?;
    a.regular_degree()?;
    Ok(a)
}

pub fn write_adj(a: &AdjacencyMatrix) -> String {
    a.to_string()
}

pub fn write_perm(s: &ShiftPermutation) -> String {
    let mut out = format!("{} {}\n", s.num_vertices(), s.degree());
    for (x, y) in s.pairs() {
        writeln!(out, "{} {} {} {}", x.vertex, x.port, y.vertex, y.port).unwrap();
    }
    out
}

/// Reads a `.perm` file. Lines must list darts in index order and the
/// pairs must form an involutive permutation.
pub fn parse_perm(text: &str) -> Result<ShiftPermutation, FormatError> {
    let lines = lines(text)?;
    let (n, d) = header(&lines)?;
    let size = n * d;
    if lines.len() != size + 1 {
        return syntax(1, format!("expected {size} dart lines after the header, found {}", lines.len() - 1));
    }
    let mut images = Vec::with_capacity(size);
    for (k, line) in lines[1..].iter().enumerate() {
        let lineno = k + 2;
        let f = numbers(line, lineno, 4)?;
        let (from, to) = (Dart::new(f[0], f[1]), Dart::new(f[2], f[3]));
        if from != Dart::from_index(k + 1, d) {
            return syntax(lineno, format!("expected dart {}, found {from}", Dart::from_index(k + 1, d)));
        }
        if to.vertex == 0 || to.vertex > n || to.port == 0 || to.port > d {
            return syntax(lineno, format!("dart {to} out of range"));
        }
        images.push(to.index(d));
    }
    let s = ShiftPermutation::from_images(d, &images)?;
    if !rotmap::shift::verify_unitary(&s) {
        return syntax(1, "listed pairs do not form an involutive permutation");
    }
    Ok(s)
}

/// Undirected DOT graph, one edge per line with label `"i|j"`: port `i` at
/// the lower-numbered end, port `j` at the other.
pub fn write_dot(r: &RotationMatrix) -> Result<String, FormatError> {
    r.ensure_valid()?;
    let table = r.to_full_form()?;
    let mut out = String::from("graph rotmap {\n");
    for x in table.darts() {
        let y = table.apply(x);
        if x.vertex < y.vertex {
            writeln!(out, "  {} -- {} [label=\"{}|{}\"];", x.vertex, y.vertex, x.port, y.port).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotJson {
    n: usize,
    d: usize,
    rot: Vec<Vec<usize>>,
}

pub fn write_json(r: &RotationMatrix) -> String {
    let doc = RotJson { n: r.num_vertices(), d: r.degree(), rot: r.to_rows() };
    let mut s = serde_json::to_string(&doc).expect("plain integers always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<RotationMatrix, FormatError> {
    let doc: RotJson = serde_json::from_str(text)?;
    let r = RotationMatrix::from_rows(&doc.rot)?;
    if (r.num_vertices(), r.degree()) != (doc.n, doc.d) {
        return syntax(1, format!("declared {}x{} but rot is {}x{}", doc.n, doc.d, r.num_vertices(), r.degree()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rotmap::families::{cycle, generalized_petersen, k2};

    #[test]
    fn rot_text_is_exact() {
        assert_eq!(write_rot(&cycle(5).unwrap()), "5 2\n2 5\n3 1\n4 2\n5 3\n1 4\n");
        assert_eq!(parse_rot("2 1\n2\n1\n").unwrap(), k2());
        assert_eq!(parse_rot("2 1\n2\n1").unwrap(), k2(), "final LF is optional");
    }

    #[test]
    fn rot_rejects_sloppy_text() {
        for bad in [
            "",
            "2 1\n2\n1\n\n",
            "2 1\r\n2\r\n1\r\n",
            "2  1\n2\n1\n",
            "2 1\n2 \n1\n",
            "2 1\n+2\n1\n",
            "2 1\n2\n",
            "2 1\n2\n1\n1\n",
            "2 0\n",
            "x 1\n2\n1\n",
            "2 1\n3\n1\n",
        ] {
            assert!(parse_rot_matrix(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn rot_validity_is_checked_only_by_parse_rot() {
        let self_loop = "3 2\n1 3\n3 1\n1 2\n";
        assert!(parse_rot_matrix(self_loop).is_ok());
        assert!(matches!(parse_rot(self_loop), Err(FormatError::Graph(rotmap::Error::InvalidMap(_)))));
        // inconsistent but valid is fine
        assert!(parse_rot("3 2\n2 3\n1 3\n1 2\n").is_ok());
    }

    #[test]
    fn adjacency_text() {
        let a = parse_adj("0,1,1\n1,0,1\n1,1,0\n").unwrap();
        assert_eq!(a.regular_degree(), Ok(2));
        assert_eq!(write_adj(&a), "0,1,1\n1,0,1\n1,1,0\n");
        assert!(parse_adj("0,1,0\n1,0,1\n0,1,0\n").is_err(), "path is not regular");
        assert!(parse_adj("0,1\n0,0\n").is_err(), "not symmetric");
        assert!(parse_adj("0,1\n1,0,0\n").is_err());
        assert!(parse_adj("0, 1\n1,0\n").is_err());
        assert!(parse_adj("0,2\n2,0\n").is_err());
    }

    #[test]
    fn perm_text() {
        let s = rotmap::shift::build_shift(&cycle(3).unwrap()).unwrap();
        let text = write_perm(&s);
        assert_eq!(text, "3 2\n1 1 2 2\n1 2 3 1\n2 1 3 2\n2 2 1 1\n3 1 1 2\n3 2 2 1\n");
        assert_eq!(parse_perm(&text).unwrap(), s);
        // not an involution
        assert!(parse_perm("3 1\n1 1 2 1\n2 1 3 1\n3 1 1 1\n").is_err());
        // out of order
        assert!(parse_perm("2 1\n2 1 1 1\n1 1 2 1\n").is_err());
        assert!(parse_perm("2 1\n1 1 3 1\n2 1 1 1\n").is_err());
    }

    #[test]
    fn dot_export() {
        let dot = write_dot(&cycle(3).unwrap()).unwrap();
        assert_eq!(
            dot,
            "graph rotmap {\n  1 -- 2 [label=\"1|2\"];\n  1 -- 3 [label=\"2|1\"];\n  2 -- 3 [label=\"1|2\"];\n}\n"
        );
        let gp = write_dot(&generalized_petersen(5, 2).unwrap()).unwrap();
        assert_eq!(gp.matches(" -- ").count(), 15);
    }

    #[test]
    fn json_export() {
        let r = cycle(3).unwrap();
        assert_eq!(write_json(&r), "{\"n\":3,\"d\":2,\"rot\":[[2,3],[3,1],[1,2]]}\n");
        assert_eq!(parse_json(&write_json(&r)).unwrap(), r);
        assert!(parse_json("{\"n\":4,\"d\":2,\"rot\":[[2,3],[3,1],[1,2]]}").is_err());
        assert!(parse_json("{\"n\":3,\"d\":2}").is_err());
    }
}
