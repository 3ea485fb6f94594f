//! Metamorphic checks for partial Π-property under conjugation, passage to
//! normal subgroups and passage to quotients.

use chiefs::arith::gcd;
use chiefs::{NodeId, Result, SubgroupRef};
use serde::Serialize;

use crate::context::{timed, Ctx};
use crate::oracles::quotient_edge_good;
use crate::report::{Status, VerifierReport};

pub const METAMORPHIC_MAX_ORDER: u64 = 400;

#[derive(Default, Serialize)]
struct Tally {
    hypothesis_hits: u64,
    violations: Vec<String>,
    /// Cases where the literal below-`N` condition and its quotient-level
    /// reading disagree.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reading_mismatches: Vec<String>,
}

impl Tally {
    fn check(&mut self, hyp: bool, concl: impl FnOnce() -> Result<bool>, what: impl FnOnce() -> String) -> Result<()> {
        if hyp {
            self.hypothesis_hits += 1;
            if !concl()? {
                self.violations.push(what());
            }
        }
        Ok(())
    }

    fn into_row(self, ctx: &Ctx<'_>, variant: u32) -> VerifierReport {
        let status = match (self.violations.is_empty(), self.hypothesis_hits) {
            (false, _) => Status::Counterexample,
            (true, 0) => Status::HypothesisFailed,
            _ => Status::Verified,
        };
        let row = ctx.row(&format!("L2.1({variant})"));
        let details = serde_json::to_value(&self).unwrap();
        VerifierReport { details, ..row }.status(status)
    }
}

pub fn run(ctx: &Ctx<'_>) -> Vec<VerifierReport> {
    if ctx.g.order() > METAMORPHIC_MAX_ORDER {
        return (1..=5)
            .map(|v| {
                ctx.row(&format!("L2.1({v})"))
                    .status(Status::Skipped)
                    .detail("reason", format!("order above {METAMORPHIC_MAX_ORDER}"))
            })
            .collect();
    }
    let mut rows = Vec::new();
    for v in 1..=5 {
        rows.extend(timed(ctx, &format!("L2.1({v})"), || variant(ctx, v).map(|t| vec![t.into_row(ctx, v)])));
    }
    rows
}

fn variant(ctx: &Ctx<'_>, v: u32) -> Result<Tally> {
    let g = ctx.g;
    let l = ctx.lattice()?;
    let cat = g.catalog()?;
    let reps: Vec<SubgroupRef> = cat.representatives().into_iter().cloned().collect();
    let mut t = Tally::default();
    match v {
        1 => {
            for class in cat.classes() {
                let first = ctx.pp(cat.get(class[0]))?;
                t.check(
                    first,
                    || {
                        for &i in class {
                            if !ctx.pp(cat.get(i))? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    },
                    || ctx.desc(cat.get(class[0])),
                )?;
            }
        }
        2 => {
            for h in reps.iter().filter(|h| g.is_p_subgroup(h).is_some()) {
                let pp = ctx.pp(h)?;
                for n in 0..l.len() {
                    if !h.is_subgroup_of(l.node(n)) {
                        continue;
                    }
                    t.check(
                        pp,
                        || {
                            let ng = ctx.node_group(n)?;
                            let hn = g.restrict_to(&ng, h)?;
                            Ok(ng.partial_pi(&hn)?.verdict)
                        },
                        || format!("{} in node {n}", ctx.desc(h)),
                    )?;
                }
            }
        }
        3 => {
            for h in &reps {
                let pp = ctx.pp(h)?;
                for n in 0..l.len() {
                    let ns = l.node(n);
                    if !(ns.is_subgroup_of(h) || gcd(h.order(), ns.order()) == 1) {
                        continue;
                    }
                    t.check(
                        pp,
                        || {
                            let q = ctx.quotient(n)?;
                            Ok(q.target().partial_pi(&q.image(h)?)?.verdict)
                        },
                        || format!("{} mod node {n}", ctx.desc(h)),
                    )?;
                }
            }
        }
        4 => {
            for h in &reps {
                for p in chiefs::arith::prime_divisors(h.order()) {
                    let s = g.sylow_of(h, p)?;
                    let hyp = ctx.max_ok(&s)?;
                    for n in 0..l.len() {
                        if !l.node(n).is_subgroup_of(h) {
                            continue;
                        }
                        t.check(
                            hyp,
                            || {
                                let q = ctx.quotient(n)?;
                                let target = q.target();
                                for m in target.maximal_subgroups_of_p_group(&q.image(&s)?)? {
                                    if !target.partial_pi(&m)?.verdict {
                                        return Ok(false);
                                    }
                                }
                                Ok(true)
                            },
                            || format!("{} p={p} mod node {n}", ctx.desc(h)),
                        )?;
                    }
                }
            }
        }
        5 => {
            for h in &reps {
                for n in 0..l.len() {
                    let q = ctx.quotient(n)?;
                    let above = q.target().partial_pi(&q.image(h)?)?.verdict;
                    let below = below_condition(ctx, h, n, false)?;
                    let reading = below_condition(ctx, h, n, true)?;
                    if below != reading {
                        t.reading_mismatches.push(format!("{} below node {n}", ctx.desc(h)));
                    }
                    t.check(above && below, || ctx.pp(h), || format!("{} over node {n}", ctx.desc(h)))?;
                }
            }
        }
        _ => unreachable!("variants are 1 to 5"),
    }
    Ok(t)
}

/// A chief series of `G` from 1 to `N` whose factors pass the edge test,
/// either literally (`|G : N_G(HN_{i-1} ∩ N_i)|`) or evaluated in
/// `G/N_{i-1}`.
fn below_condition(ctx: &Ctx<'_>, h: &SubgroupRef, n: NodeId, quotient_level: bool) -> Result<bool> {
    let l = ctx.lattice()?;
    let mut good = Vec::with_capacity(l.edges().len());
    for &(lo, hi) in l.edges() {
        let inside = l.contains(hi, n);
        good.push(
            inside
                && if quotient_level {
                    quotient_edge_good(ctx, h, lo, hi)?
                } else {
                    ctx.g.good_edge(h, lo, hi)?.good
                },
        );
    }
    let edges = l.edges();
    Ok(l
        .reach_between(l.bottom(), n, |lo, hi| good[edges.binary_search(&(lo, hi)).unwrap()])
        .verdict)
}
