//! The `.ring` file format.
//!
//! ```text
//! # Gorenstein, e = 5
//! field 101
//! vars x y z
//! rel x*y
//! rel x^2 - y^2
//! cap 12
//! ```
//!
//! One directive per line, `#` starts a comment. `field` defaults to 101 and
//! `cap` to 12; `vars` is mandatory and must precede every `rel`.

use std::fmt;
use std::path::Path;

use multlab_core::{parse_polynomial, PrimeField, RingPresentation};

pub const DEFAULT_FIELD: u32 = 101;
pub const DEFAULT_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct RingSpec {
    pub field: u32,
    pub vars: Vec<String>,
    /// Relation texts as written, with their line numbers.
    pub relations: Vec<(usize, String)>,
    pub cap: usize,
    pub presentation: RingPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SpecError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> SpecError {
    SpecError { line, column, message: message.into() }
}

/// 1-based character column of byte offset `at` in `line`.
fn column(line: &str, at: usize) -> usize {
    line[..at.min(line.len())].chars().count() + 1
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_alphanumeric() || ch == '_')
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut field: Option<(usize, u32)> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut cap: Option<usize> = None;
    let mut rels: Vec<(usize, usize, String)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let ln = k + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let body = line.trim_start();
        if body.trim().is_empty() {
            continue;
        }
        let key_at = line.len() - body.len();
        let key_len = body.find(char::is_whitespace).unwrap_or(body.len());
        let key = &body[..key_len];
        let rest_at = key_at + key_len;
        let rest = &line[rest_at..];
        let arg_at = rest_at + (rest.len() - rest.trim_start().len());
        let arg = rest.trim();

        match key {
            "field" => {
                if field.is_some() {
                    return Err(err(ln, column(line, key_at), "duplicate `field`"));
                }
                let p: u32 = arg
                    .parse()
                    .map_err(|_| err(ln, column(line, arg_at), format!("expected a prime, found `{arg}`")))?;
                PrimeField::new(p).map_err(|e| err(ln, column(line, arg_at), e.to_string()))?;
                field = Some((ln, p));
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err(ln, column(line, key_at), "duplicate `vars`"));
                }
                let mut names: Vec<String> = Vec::new();
                let mut pos = arg_at;
                for tok in line[arg_at..].split_whitespace() {
                    let at = pos + line[pos..].find(tok).unwrap();
                    pos = at + tok.len();
                    if !is_identifier(tok) {
                        return Err(err(ln, column(line, at), format!("invalid variable name `{tok}`")));
                    }
                    if names.iter().any(|n| n == tok) {
                        return Err(err(ln, column(line, at), format!("variable `{tok}` listed twice")));
                    }
                    names.push(tok.to_string());
                }
                if names.is_empty() {
                    return Err(err(ln, column(line, key_at), "`vars` needs at least one name"));
                }
                vars = Some(names);
            }
            "rel" => {
                if vars.is_none() {
                    return Err(err(ln, column(line, key_at), "`rel` before `vars`"));
                }
                if arg.is_empty() {
                    return Err(err(ln, column(line, key_at), "empty relation"));
                }
                rels.push((ln, arg_at, line.to_string()));
            }
            "cap" => {
                if cap.is_some() {
                    return Err(err(ln, column(line, key_at), "duplicate `cap`"));
                }
                let c: usize = arg
                    .parse()
                    .map_err(|_| err(ln, column(line, arg_at), format!("expected a degree, found `{arg}`")))?;
                cap = Some(c);
            }
            other => return Err(err(ln, column(line, key_at), format!("unknown key `{other}`"))),
        }
    }

    let vars = vars.ok_or_else(|| err(1, 1, "missing `vars` line"))?;
    let p = field.map_or(DEFAULT_FIELD, |(_, p)| p);
    let f = PrimeField::new(p).expect("checked above");
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut polys = Vec::new();
    let mut relations = Vec::new();
    for (ln, at, line) in &rels {
        let text = line[*at..].trim_end();
        let poly = parse_polynomial(text, &names, f).map_err(|e| {
            let off = match &e {
                multlab_core::Error::Syntax { offset, .. } | multlab_core::Error::UnknownVariable { offset, .. } => *offset,
                _ => 0,
            };
            err(*ln, column(line, at + off), e.to_string())
        })?;
        polys.push(poly);
        relations.push((*ln, text.to_string()));
    }
    let presentation = RingPresentation::new(f, vars.clone(), polys).map_err(|e| {
        let ln = match e {
            multlab_core::Error::RelationNotInSquare { index } => relations[index].0,
            _ => 1,
        };
        err(ln, 1, e.to_string())
    })?;
    Ok(RingSpec { field: p, vars, relations, cap: cap.unwrap_or(DEFAULT_CAP), presentation })
}

#[derive(Debug)]
pub enum LoadError {
    Io(String, std::io::Error),
    Spec(String, SpecError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(path, e) => write!(f, "{path}: {e}"),
            LoadError::Spec(path, e) => write!(f, "{path}:{e}"),
        }
    }
}

impl std::error::Error for LoadError {}

pub fn load_ring_spec(path: &Path) -> Result<RingSpec, LoadError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(name.clone(), e))?;
    parse_ring_spec(&text).map_err(|e| LoadError::Spec(name, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_spec() {
        let s = parse_ring_spec("# comment\nfield 7\nvars x y\nrel x^2\nrel y^2 # trailing\ncap 5\n").unwrap();
        assert_eq!(s.field, 7);
        assert_eq!(s.vars, ["x", "y"]);
        assert_eq!(s.cap, 5);
        assert_eq!(s.relations, [(4, "x^2".to_string()), (5, "y^2".to_string())]);
    }

    #[test]
    fn defaults() {
        let s = parse_ring_spec("vars t\nrel t^3").unwrap();
        assert_eq!((s.field, s.cap), (101, 12));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ring_spec("vars x y\nrel x^2\n  ideal x").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        assert!(e.message.contains("unknown key"));
        let e = parse_ring_spec("vars x y\nrel  x^2 + z").unwrap_err();
        assert_eq!((e.line, e.column), (2, 12));
        let e = parse_ring_spec("field 12\nvars x").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = parse_ring_spec("rel x^2\nvars x").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_ring_spec("vars x y\nrel x^2\nrel x + y^2").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_ring_spec("vars x x").unwrap_err();
        assert_eq!((e.line, e.column), (1, 8));
        assert!(parse_ring_spec("field 5\n").is_err());
    }
}
