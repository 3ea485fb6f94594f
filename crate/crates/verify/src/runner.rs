//! Runs the selected suites over every corpus entry on a worker pool.

use std::fmt;
use std::str::FromStr;

use chiefs::{Caps, Group, GroupError, Result, SubgroupRef};
use rayon::prelude::*;

use crate::context::Ctx;
use crate::corpus::{Entry, Manifest};
use crate::report::{CorpusReport, Status, VerifierReport};
use crate::statements::{self, StatementId};
use crate::{implications, metamorphic, oracles};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Statements,
    Implications,
    Oracles,
    Metamorphic,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Statements, Suite::Implications, Suite::Oracles, Suite::Metamorphic];

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "statements" => Suite::Statements,
            "implications" => Suite::Implications,
            "oracles" => Suite::Oracles,
            "metamorphic" => Suite::Metamorphic,
            _ => return Err(GroupError::Invalid(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Statements => "statements",
            Suite::Implications => "implications",
            Suite::Oracles => "oracles",
            Suite::Metamorphic => "metamorphic",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub suites: Vec<Suite>,
    /// Restricts the statements suite; empty means all statements.
    pub statements: Vec<StatementId>,
    pub jobs: usize,
    pub seed: u64,
    pub caps: Caps,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            suites: Suite::ALL.to_vec(),
            statements: Vec::new(),
            jobs: 1,
            seed: 0,
            caps: Caps::default(),
        }
    }
}

pub fn run_corpus(manifest: &Manifest, opts: &RunOptions) -> Result<CorpusReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| GroupError::Invalid(e.to_string()))?;
    let rows: Vec<VerifierReport> = pool.install(|| {
        manifest
            .groups
            .par_iter()
            .flat_map_iter(|e| run_entry(manifest, e, opts))
            .collect()
    });
    Ok(CorpusReport::from_rows(rows, manifest.groups.len() as u64))
}

/// All rows for one entry. A group that fails to load yields a single
/// error (or skipped, for a cap) row instead of aborting the run.
pub fn run_entry(manifest: &Manifest, e: &Entry, opts: &RunOptions) -> Vec<VerifierReport> {
    let loaded = match manifest.load_entry(e, opts.caps) {
        Ok(l) => l,
        Err(err) => {
            let status = if err.is_cap() { Status::Skipped } else { Status::Error };
            return vec![VerifierReport::new("LOAD", &e.name)
                .detail("error", err.to_string())
                .status(status)];
        }
    };
    let g = &loaded.group;
    let separating = match &loaded.separating {
        Some(gens) => match g.subgroup(gens) {
            Ok(s) => Some(s),
            Err(err) => {
                return vec![VerifierReport::new("LOAD", &e.name)
                    .detail("error", err.to_string())
                    .status(Status::Error)]
            }
        },
        None => None,
    };
    run_group(&loaded.name, g, separating.as_ref(), opts)
}

/// All rows of the selected suites for one group.
pub fn run_group(name: &str, g: &Group, separating: Option<&SubgroupRef>, opts: &RunOptions) -> Vec<VerifierReport> {
    let ctx = Ctx::new(name, g);
    let mut rows = Vec::new();
    for suite in &opts.suites {
        match suite {
            Suite::Statements => {
                let ids: &[StatementId] = if opts.statements.is_empty() {
                    &StatementId::ALL
                } else {
                    &opts.statements
                };
                for &id in ids {
                    rows.extend(statements::check(&ctx, id, separating));
                }
            }
            Suite::Implications => rows.extend(implications::matrix(&ctx)),
            Suite::Oracles => rows.extend(oracles::run(&ctx, opts.seed)),
            Suite::Metamorphic => rows.extend(metamorphic::run(&ctx)),
        }
    }
    rows
}
