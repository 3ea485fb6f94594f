//! Corpus manifests: named groups given by a builtin expression or a
//! `.grp` file, optionally carrying a declared separating subgroup.

use std::fs;
use std::path::{Path, PathBuf};

use chiefs::builders;
use chiefs::io::{load_grp, load_sub, parse_inline};
use chiefs::{Caps, Group, GroupError, Permutation, Result};
use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize)]
pub struct Manifest {
    #[serde(default, rename = "group")]
    pub groups: Vec<Entry>,
    #[serde(skip)]
    pub root: PathBuf,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub name: String,
    pub builtin: Option<String>,
    pub file: Option<String>,
    /// Expected order, checked on load.
    pub order: Option<u64>,
    /// `.sub` file (relative to the manifest) of a subgroup expected to
    /// satisfy partial Π-property but not Π-property.
    pub separating: Option<String>,
}

/// A loaded corpus entry.
pub struct Loaded {
    pub name: String,
    pub group: Group,
    pub separating: Option<Vec<Permutation>>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        let text = fs::read_to_string(path).map_err(|source| GroupError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut m = Manifest::parse(&text)?;
        m.root = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(m)
    }

    pub fn parse(text: &str) -> Result<Manifest> {
        let m: Manifest = toml::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
        let mut names = std::collections::BTreeSet::new();
        for e in &m.groups {
            if e.builtin.is_some() == e.file.is_some() {
                return Err(GroupError::Parse(format!(
                    "entry {:?} needs exactly one of `builtin` and `file`",
                    e.name
                )));
            }
            if !names.insert(e.name.as_str()) {
                return Err(GroupError::Parse(format!("duplicate entry {:?}", e.name)));
            }
        }
        Ok(m)
    }

    pub fn load_entry(&self, e: &Entry, caps: Caps) -> Result<Loaded> {
        let group = match (&e.builtin, &e.file) {
            (Some(expr), _) => with_caps(builtin(expr)?, caps)?,
            (_, Some(file)) => load_grp(&self.root.join(file), caps)?,
            _ => unreachable!("checked at parse time"),
        };
        if let Some(n) = e.order {
            if group.order() != n {
                return Err(GroupError::Invalid(format!(
                    "{}: expected order {n}, generated {}",
                    e.name,
                    group.order()
                )));
            }
        }
        let separating = match &e.separating {
            Some(f) => Some(load_sub(&self.root.join(f), group.degree())?),
            None => None,
        };
        Ok(Loaded {
            name: e.name.clone(),
            group,
            separating,
        })
    }
}

fn with_caps(g: Group, caps: Caps) -> Result<Group> {
    Group::with_caps(g.degree(), g.generators().to_vec(), caps)
}

/// Evaluates a builtin expression such as `dihedral(8)`, `cyclic(3) x
/// symmetric(3)` or `perm(4; (1 2 3 4), (1 2))`.
///
/// Dihedral and dicyclic arguments are group orders.
pub fn builtin(expr: &str) -> Result<Group> {
    let parts = split_top(expr, 'x');
    if parts.len() > 1 {
        let mut it = parts.into_iter();
        let mut g = builtin(it.next().unwrap())?;
        for p in it {
            g = builders::direct_product(&g, &builtin(p)?);
        }
        return Ok(g);
    }
    let expr = expr.trim();
    let bad = || GroupError::Parse(format!("bad builtin {expr:?}"));
    let (name, args) = match expr.split_once('(') {
        Some((n, rest)) => (n.trim(), rest.strip_suffix(')').ok_or_else(bad)?),
        None => (expr, ""),
    };
    if name == "perm" {
        let (deg, gens) = args.split_once(';').ok_or_else(bad)?;
        let deg: usize = deg.trim().parse().map_err(|_| bad())?;
        return Group::generate(deg, parse_inline(gens, deg)?);
    }
    let nums = args
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    let one = |lo: usize| match nums.as_slice() {
        [n] if *n >= lo => Ok(*n),
        _ => Err(bad()),
    };
    Ok(match name {
        "trivial" if nums.is_empty() => builders::trivial(),
        "example" if nums.is_empty() => builders::example_group().group,
        "cyclic" => builders::cyclic(one(1)?),
        "dihedral" => {
            let n = one(2)?;
            if n % 2 != 0 {
                return Err(bad());
            }
            builders::dihedral(n / 2)
        }
        "dicyclic" => {
            let n = one(4)?;
            if n % 4 != 0 {
                return Err(bad());
            }
            builders::dicyclic(n / 4)
        }
        "quaternion" => {
            let n = one(8)?;
            if !n.is_power_of_two() {
                return Err(bad());
            }
            builders::quaternion(n)
        }
        "symmetric" => builders::symmetric(one(1)?),
        "alternating" => builders::alternating(one(1)?),
        "sl2" => builders::sl2(prime_arg(one(2)?).ok_or_else(bad)?),
        "gl2" => builders::gl2(prime_arg(one(2)?).ok_or_else(bad)?),
        "elementary_abelian" => match nums.as_slice() {
            [p, k] if chiefs::arith::is_prime(*p as u64) => builders::elementary_abelian(*p, *k),
            _ => return Err(bad()),
        },
        "frobenius" => match nums.as_slice() {
            [p, q] if chiefs::arith::is_prime(*p as u64) && *q >= 1 && (p - 1) % q == 0 => {
                builders::frobenius(*p, *q)
            }
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    })
}

fn prime_arg(p: usize) -> Option<usize> {
    chiefs::arith::is_prime(p as u64).then_some(p)
}

/// Splits on ` x ` separators outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    let b = s.as_bytes();
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if depth == 0
                && c == sep as u8
                && i > 0
                && b[i - 1] == b' '
                && b.get(i + 1) == Some(&b' ') =>
            {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
