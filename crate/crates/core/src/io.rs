//! `.grp` and `.sub` text formats.
//!
//! ```text
//! # comment
//! degree 4
//! gen (1 2 3 4)
//! gen (1 2)
//! ```
//!
//! A `.sub` file uses the same `gen` lines; its `degree` line is optional.

use std::fs;
use std::path::Path;

use crate::error::{GroupError, Result};
use crate::group::{Caps, Group};
use crate::perm::Permutation;

/// Parsed contents of a `.grp` or `.sub` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: Option<usize>,
    pub gens: Vec<String>,
}

pub fn parse_generator_text(text: &str) -> Result<GeneratorFile> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "degree" => {
                let n = rest.trim().parse::<usize>().map_err(|_| {
                    GroupError::Parse(format!("line {}: bad degree {:?}", lineno + 1, rest.trim()))
                })?;
                if n == 0 {
                    return Err(GroupError::Parse(format!("line {}: degree must be positive", lineno + 1)));
                }
                if degree.replace(n).is_some() {
                    return Err(GroupError::Parse(format!("line {}: repeated degree", lineno + 1)));
                }
            }
            "gen" => gens.push(rest.trim().to_string()),
            _ => {
                return Err(GroupError::Parse(format!(
                    "line {}: expected `degree` or `gen`, found {key:?}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(GeneratorFile { degree, gens })
}

pub fn parse_grp(text: &str, caps: Caps) -> Result<Group> {
    let file = parse_generator_text(text)?;
    let degree = file
        .degree
        .ok_or_else(|| GroupError::Parse("missing `degree` line".into()))?;
    let gens = file
        .gens
        .iter()
        .map(|g| Permutation::parse_cycles(degree, g))
        .collect::<Result<Vec<_>>>()?;
    Group::with_caps(degree, gens, caps)
}

pub fn load_grp(path: &Path, caps: Caps) -> Result<Group> {
    let text = read(path)?;
    parse_grp(&text, caps)
}

/// Generators of a `.sub` file on the given degree.
pub fn parse_sub(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    let file = parse_generator_text(text)?;
    if let Some(d) = file.degree {
        if d != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: d,
            });
        }
    }
    file.gens
        .iter()
        .map(|g| Permutation::parse_cycles(degree, g))
        .collect()
}

pub fn load_sub(path: &Path, degree: usize) -> Result<Vec<Permutation>> {
    parse_sub(&read(path)?, degree)
}

/// Inline generator list: cycle strings separated by commas outside
/// parentheses, e.g. `(1 2 3),(4 5)` or `(1 2)(3 4),(1 3)(2 4)`.
pub fn parse_inline(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = text.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(GroupError::Parse(format!("unbalanced parentheses in {text:?}")));
        }
    }
    out.push(&text[start..]);
    out.into_iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Permutation::parse_cycles(degree, s))
        .collect()
}

pub fn write_grp(g: &Group) -> String {
    let mut s = format!("degree {}\n", g.degree());
    for p in g.generators() {
        s.push_str(&format!("gen {p}\n"));
    }
    s
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| GroupError::Io {
        path: path.display().to_string(),
        source,
    })
}
