//! The implication matrix between embedding predicates, evaluated on
//! subgroup class representatives.

use chiefs::{PredicateId, Result, SubgroupRef};
use serde::Serialize;

use crate::context::{timed, Ctx};
use crate::report::{Status, VerifierReport};

/// Which subgroups an implication is asserted for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    All,
    PSubgroups,
    /// Contained in the largest solvable normal subgroup.
    InSolvableRadical,
}

#[derive(Clone, Copy, Debug)]
pub struct Implication {
    pub premise: PredicateId,
    pub conclusion: PredicateId,
    pub scope: Scope,
}

impl Implication {
    pub fn name(&self) -> String {
        format!("{}=>{}", self.premise, self.conclusion)
    }
}

const fn imp(premise: PredicateId, conclusion: PredicateId, scope: Scope) -> Implication {
    Implication {
        premise,
        conclusion,
        scope,
    }
}

use PredicateId as P;

pub const IMPLICATIONS: [Implication; 17] = [
    imp(P::SQuasinormal, P::PiProperty, Scope::All),
    imp(P::Cap, P::PiProperty, Scope::All),
    imp(P::UHypEmbedded, P::PiProperty, Scope::All),
    imp(P::SSemipermutable, P::PiProperty, Scope::PSubgroups),
    imp(P::SsQuasinormal, P::PiProperty, Scope::PSubgroups),
    imp(P::PartialCap, P::PartialPi, Scope::All),
    imp(P::SEmbedded, P::PartialPi, Scope::All),
    imp(P::PiNormal, P::PartialPi, Scope::PSubgroups),
    imp(P::WeaklySPermutable, P::PartialPi, Scope::PSubgroups),
    imp(P::WeaklySSemipermutable, P::PartialPi, Scope::PSubgroups),
    imp(P::WeaklyTauQuasinormal, P::PartialPi, Scope::PSubgroups),
    imp(P::SQnEmbedded, P::PiProperty, Scope::InSolvableRadical),
    imp(P::SCondPermutable, P::PiProperty, Scope::InSolvableRadical),
    imp(P::PiProperty, P::PartialPi, Scope::All),
    imp(P::Quasinormal, P::SQuasinormal, Scope::All),
    imp(P::SQuasinormal, P::SSemipermutable, Scope::All),
    imp(P::Cap, P::PartialCap, Scope::All),
];

/// Largest order for which the matrix is evaluated.
pub const MATRIX_MAX_ORDER: u64 = 400;

/// One row per implication with premise hits (within scope) and the
/// subgroups violating it.
pub fn matrix(ctx: &Ctx<'_>) -> Vec<VerifierReport> {
    if ctx.g.order() > MATRIX_MAX_ORDER {
        return IMPLICATIONS
            .iter()
            .map(|i| {
                ctx.row(&format!("IMP:{}", i.name()))
                    .status(Status::Skipped)
                    .detail("reason", format!("order above {MATRIX_MAX_ORDER}"))
            })
            .collect();
    }
    timed(ctx, "IMP", || evaluate(ctx))
}

fn evaluate(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let radical = ctx.solvable_radical()?;
    let reps: Vec<SubgroupRef> = g.catalog()?.representatives().into_iter().cloned().collect();
    let mut rows = Vec::new();
    for imp in IMPLICATIONS {
        let mut hits = 0u64;
        let mut violations = Vec::new();
        for h in &reps {
            let in_scope = match imp.scope {
                Scope::All => true,
                Scope::PSubgroups => h.is_trivial() || g.is_p_subgroup(h).is_some(),
                Scope::InSolvableRadical => h.is_subgroup_of(&radical),
            };
            if !in_scope || !g.holds(h, imp.premise)? {
                continue;
            }
            hits += 1;
            if !g.holds(h, imp.conclusion)? {
                violations.push(ctx.desc(h));
            }
        }
        let status = match (hits, violations.is_empty()) {
            (_, false) => Status::Counterexample,
            (0, true) => Status::HypothesisFailed,
            _ => Status::Verified,
        };
        rows.push(
            ctx.row(&format!("IMP:{}", imp.name()))
                .bind("scope", serde_json::to_value(imp.scope).unwrap().as_str().unwrap())
                .detail("subgroups", reps.len())
                .detail("premise_hits", hits)
                .detail("violations", violations)
                .status(status),
        );
    }
    Ok(rows)
}
