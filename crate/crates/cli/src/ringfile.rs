//! Line-oriented ring definitions and the built-in example rings.
//!
//! ```text
//! # Fermat cubic
//! char 7
//! var x 1
//! var y 1
//! var z 1
//! rel x^3 + y^3 + z^3
//! dim 2
//! ```

use std::path::Path;
use std::sync::Arc;

use tclab::gfp::FieldError;
use tclab::poly::{ParseError, VarError};
use tclab::ring::RingError;
use tclab::{PolyRing, Polynomial, PrimeField, RingPresentation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Field { line: usize, source: FieldError },
    #[error("line {line}: {source}")]
    Var { line: usize, source: VarError },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Ring { line: usize, source: RingError },
    #[error("missing 'char' line")]
    MissingChar,
    #[error("no variables declared")]
    NoVars,
    #[error("unknown example ring '@{0}' (known: {known})", known = NAMES.join(", "))]
    UnknownRing(String),
}

impl LoadError {
    pub fn kind(&self) -> &'static str {
        match self {
            LoadError::Io { .. } => "io",
            LoadError::Syntax { .. } | LoadError::MissingChar | LoadError::NoVars => "syntax",
            LoadError::Field { .. } => "characteristic",
            LoadError::Var { .. } => "variable",
            LoadError::Parse { .. } => "polynomial",
            LoadError::Ring { .. } => "relation",
            LoadError::UnknownRing(_) => "unknown-ring",
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            LoadError::Syntax { line, .. } | LoadError::Field { line, .. } | LoadError::Var { line, .. } | LoadError::Parse { line, .. } | LoadError::Ring { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Syntax { line, message: message.into() }
}

/// Parse a ring definition. Lines may come in any order.
pub fn parse_ring(text: &str) -> Result<RingPresentation, LoadError> {
    let mut field = None;
    let mut vars: Vec<(String, u32)> = Vec::new();
    let mut var_line = 0;
    let mut rels: Vec<(usize, String)> = Vec::new();
    let mut dim = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match key {
            "char" => {
                if field.is_some() {
                    return Err(syntax(line, "duplicate 'char' line"));
                }
                let p: u64 = rest.parse().map_err(|_| syntax(line, format!("'{rest}' is not a nonnegative integer")))?;
                field = Some(PrimeField::new(p).map_err(|source| LoadError::Field { line, source })?);
            }
            "var" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let (name, weight) = match parts.as_slice() {
                    [name] => (*name, 1),
                    [name, w] => (*name, w.parse::<u32>().map_err(|_| syntax(line, format!("'{w}' is not a weight")))?),
                    _ => return Err(syntax(line, "expected 'var <name> <weight>'")),
                };
                vars.push((name.to_string(), weight));
                var_line = line;
            }
            "rel" => {
                if rest.is_empty() {
                    return Err(syntax(line, "empty relation"));
                }
                rels.push((line, rest.to_string()));
            }
            "dim" => {
                if dim.is_some() {
                    return Err(syntax(line, "duplicate 'dim' line"));
                }
                dim = Some(rest.parse::<usize>().map_err(|_| syntax(line, format!("'{rest}' is not a dimension")))?);
            }
            other => return Err(syntax(line, format!("unknown keyword '{other}'"))),
        }
    }
    let field = field.ok_or(LoadError::MissingChar)?;
    if vars.is_empty() {
        return Err(LoadError::NoVars);
    }
    let ring = Arc::new(PolyRing::new(field, &vars).map_err(|source| LoadError::Var { line: var_line, source })?);
    let mut relations = Vec::with_capacity(rels.len());
    for (line, text) in &rels {
        let f = Polynomial::parse(text, &ring).map_err(|source| LoadError::Parse { line: *line, source })?;
        // validate one relation at a time so the error names its line
        RingPresentation::new(ring.clone(), vec![f.clone()], None).map_err(|source| LoadError::Ring { line: *line, source })?;
        relations.push(f);
    }
    RingPresentation::new(ring, relations, dim).map_err(|source| LoadError::Ring {
        line: text.lines().position(|l| l.trim_start().starts_with("dim")).map_or(0, |k| k + 1),
        source,
    })
}

pub fn load_ring(path: &Path) -> Result<RingPresentation, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_ring(&text)
}

pub const NAMES: [&str; 4] = ["poly2", "fermat3", "nodalline", "curve4"];

/// Text of a built-in ring over `F_p`.
pub fn registry_text(name: &str, p: u64) -> Option<String> {
    let body = match name {
        "poly2" => "var x 1\nvar y 1\n",
        "fermat3" => "var x 1\nvar y 1\nvar z 1\nrel x^3 + y^3 + z^3\n",
        "nodalline" => "var x 1\nvar y 1\nrel x*y\n",
        "curve4" => "var a 1\nvar b 1\nvar c 1\nvar d 1\nrel a*d - b*c\nrel b^3 - a^2*c\nrel c^3 - b*d^2\nrel a*c^2 - b^2*d\ndim 2\n",
        _ => return None,
    };
    Some(format!("char {p}\n{body}"))
}

/// `@name` selects a built-in ring; anything else is a file path.
pub fn resolve(spec: &str, p: u64) -> Result<RingPresentation, LoadError> {
    match spec.strip_prefix('@') {
        Some(name) => parse_ring(&registry_text(name, p).ok_or_else(|| LoadError::UnknownRing(name.to_string()))?),
        None => load_ring(Path::new(spec)),
    }
}
