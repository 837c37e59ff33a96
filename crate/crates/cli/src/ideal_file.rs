//! Ideal files: a `ring <n> char <p>` header, then one generator per line.

use std::fmt;

use surfgen_core::{AlgebraError, Field, Ideal, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

/// Header of an ideal file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub nvars: usize,
    pub characteristic: u32,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError { line, column, message: message.into() }
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// The header and the generator lines with their line numbers.
pub fn split(text: &str) -> Result<(Header, Vec<(usize, String)>), FileError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, strip(l))).filter(|(_, l)| !l.is_empty());
    let (ln, head) = lines.next().ok_or_else(|| err(1, 1, "missing `ring <n> char <p>` header"))?;
    let words: Vec<&str> = head.split_whitespace().collect();
    if words.len() != 4 || words[0] != "ring" || words[2] != "char" {
        return Err(err(ln, 1, "expected `ring <n> char <p>`"));
    }
    let nvars: usize = words[1].parse().map_err(|_| err(ln, 6, format!("bad variable count `{}`", words[1])))?;
    if nvars == 0 || nvars > 15 {
        return Err(err(ln, 6, "variable count must lie in 1..=15"));
    }
    let characteristic: u32 = words[3].parse().map_err(|_| err(ln, 1, format!("bad characteristic `{}`", words[3])))?;
    let gens = lines.map(|(k, l)| (k, l.to_string())).collect();
    Ok((Header { nvars, characteristic }, gens))
}

/// Parses the generators over `ring`.
pub fn parse_ideal<F: Field>(ring: &Ring<F>, gens: &[(usize, String)]) -> Result<Ideal<F>, FileError> {
    let mut polys = Vec::with_capacity(gens.len());
    for (ln, text) in gens {
        match ring.parse(text) {
            Ok(p) => polys.push(p),
            Err(AlgebraError::Parse { column, message }) => return Err(err(*ln, column, message)),
            Err(e) => return Err(err(*ln, 1, e.to_string())),
        }
    }
    Ideal::new(ring, polys).map_err(|e| err(gens.first().map_or(1, |g| g.0), 1, e.to_string()))
}

pub fn write_ideal<F: Field>(i: &Ideal<F>, comment: &str) -> String {
    let ring = i.ring();
    let mut out = String::new();
    for line in comment.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("ring {} char {}\n", ring.nvars(), ring.field.characteristic()));
    for g in i.generators() {
        out.push_str(&format!("{g}\n"));
    }
    out
}
