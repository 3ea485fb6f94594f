//! Independent recomputations of lattice, reachability, hypercentre and
//! arithmetic results by naive means.

use std::collections::{BTreeSet, HashSet, VecDeque};

use chiefs::arith::{is_pi_number, p_part, prime_divisors};
use chiefs::{Group, NodeId, Permutation, PredicateId, Result, SubgroupRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::{timed, Ctx};
use crate::report::{Status, VerifierReport};
use crate::statements::CHAIN_CAP;

pub const ORACLE_MAX_ORDER: u64 = 400;
pub const PRODUCT_MAX_ORDER: u64 = 200;
pub const CLOSURE_MAX_ORDER: u64 = 5000;
pub const SAMPLED_PRODUCTS: usize = 100;

pub fn run(ctx: &Ctx<'_>, seed: u64) -> Vec<VerifierReport> {
    let mut rows = Vec::new();
    let mut guarded = |name: &str, limit: u64, f: &dyn Fn() -> Result<Vec<VerifierReport>>| {
        if ctx.g.order() > limit {
            rows.push(
                ctx.row(name)
                    .status(Status::Skipped)
                    .detail("reason", format!("order above {limit}")),
            );
        } else {
            rows.extend(timed(ctx, name, f));
        }
    };
    guarded("ORACLE:normal_lattice", ORACLE_MAX_ORDER, &|| normal_lattice(ctx));
    guarded("ORACLE:partial_pi_chains", ORACLE_MAX_ORDER, &|| partial_pi_chains(ctx));
    guarded("ORACLE:hypercentre_greedy", ORACLE_MAX_ORDER, &|| hypercentre_greedy(ctx));
    guarded("ORACLE:set_product", PRODUCT_MAX_ORDER, &|| set_products(ctx));
    guarded("ORACLE:order_closure", CLOSURE_MAX_ORDER, &|| order_closure(ctx));
    guarded("ORACLE:quotient_sampling", u64::MAX, &|| quotient_sampling(ctx, seed));
    guarded("ORACLE:sylow", u64::MAX, &|| sylow_counts(ctx));
    rows
}

fn verdict(row: VerifierReport, mismatches: &[String]) -> VerifierReport {
    let ok = mismatches.is_empty();
    row.detail("mismatches", mismatches)
        .status(if ok { Status::Verified } else { Status::Counterexample })
}

/// Normality tested against every element of `G`.
pub fn brute_normal(g: &Group, h: &SubgroupRef) -> Result<bool> {
    let t = g.elements()?;
    Ok(t.ids().all(|x| h.ids().all(|y| h.contains_id(t.conj(y, x)))))
}

fn normal_lattice(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let mut brute = BTreeSet::new();
    for h in g.catalog()?.subgroups() {
        if brute_normal(g, h)? {
            brute.insert(h.digest());
        }
    }
    let lattice: BTreeSet<String> = ctx.lattice()?.nodes().iter().map(|n| n.digest()).collect();
    let mut mism = Vec::new();
    if brute != lattice {
        mism.push(format!("brute {} nodes, lattice {}", brute.len(), lattice.len()));
    }
    Ok(vec![verdict(ctx.row("ORACLE:normal_lattice").detail("nodes", lattice.len()), &mism)])
}

/// The edge condition evaluated in `G/K`: the index of the normaliser of
/// `HK/K ∩ L/K`, found by testing every element of the quotient.
pub fn quotient_edge_good(ctx: &Ctx<'_>, h: &SubgroupRef, lo: NodeId, hi: NodeId) -> Result<bool> {
    let q = ctx.quotient(lo)?;
    let t = q.target();
    let d = t.intersect(&q.image(h)?, &q.image(ctx.lattice()?.node(hi))?)?;
    if d.is_trivial() {
        return Ok(true);
    }
    let et = t.elements()?;
    let norm = et
        .ids()
        .filter(|&x| d.ids().all(|y| d.contains_id(et.conj(y, x))))
        .count() as u64;
    Ok(is_pi_number(t.order() / norm, &prime_divisors(d.order())))
}

fn partial_pi_chains(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let l = ctx.lattice()?;
    let edges = l.edges();
    let reps: Vec<SubgroupRef> = g.catalog()?.representatives().into_iter().cloned().collect();
    let mut mism = Vec::new();
    let mut chains = 0;
    for h in &reps {
        let good = edges
            .iter()
            .map(|&(lo, hi)| quotient_edge_good(ctx, h, lo, hi))
            .collect::<Result<Vec<_>>>()?;
        let is_good = |lo: NodeId, hi: NodeId| good[edges.binary_search(&(lo, hi)).unwrap()];
        let mut exists = false;
        chains = l.for_each_maximal_chain(CHAIN_CAP, |c| {
            exists |= c.windows(2).all(|w| is_good(w[0], w[1]));
        })?;
        let partial = g.predicate(h, PredicateId::PartialPi)?;
        let full = g.predicate(h, PredicateId::PiProperty)?;
        if partial.verdict != exists {
            mism.push(format!("partial_pi {}", ctx.desc(h)));
        }
        if full.verdict != good.iter().all(|&b| b) {
            mism.push(format!("pi_property {}", ctx.desc(h)));
        }
        if partial.verdict && !partial.witness_nodes.windows(2).all(|w| is_good(w[0], w[1])) {
            mism.push(format!("witness {}", ctx.desc(h)));
        }
        if full.violations.iter().any(|v| is_good(v.edge.0, v.edge.1)) {
            mism.push(format!("violation {}", ctx.desc(h)));
        }
    }
    Ok(vec![verdict(
        ctx.row("ORACLE:partial_pi_chains")
            .detail("subgroups", reps.len())
            .detail("chains", chains),
        &mism,
    )])
}

fn hypercentre_greedy(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let l = ctx.lattice()?;
    let mut mism = Vec::new();
    for tag in ctx.tags() {
        let h = ctx.g.hypercentre(tag)?;
        let join = l.node_of(&h.subgroup).expect("normal");
        if h.greedy != join || !h.join_is_hypercentral {
            mism.push(format!("{tag}: join {join}, greedy {}", h.greedy));
        }
    }
    Ok(vec![verdict(ctx.row("ORACLE:hypercentre_greedy").detail("tags", ctx.tags().len()), &mism)])
}

fn set_products(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let cat = g.catalog()?;
    let mut mism = Vec::new();
    let mut pairs = 0u64;
    for h in cat.representatives() {
        for k in cat.subgroups() {
            pairs += 1;
            let set = g.product_set(h, k)?;
            let sp = g.set_product(h, k)?;
            let closed = set == *g.join(h, k)?.members();
            if set.count_ones(..) as u64 != sp.size || closed != sp.is_subgroup {
                mism.push(format!("{} * {}", ctx.desc(h), ctx.desc(k)));
            }
        }
    }
    Ok(vec![verdict(ctx.row("ORACLE:set_product").detail("pairs", pairs), &mism)])
}

/// Closure of the generators by breadth-first multiplication.
pub fn naive_order(g: &Group) -> u64 {
    let id = Permutation::identity(g.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in g.generators() {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len() as u64
}

fn order_closure(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let n = naive_order(ctx.g);
    let mism = if n == ctx.g.order() {
        Vec::new()
    } else {
        vec![format!("chain {} closure {n}", ctx.g.order())]
    };
    Ok(vec![verdict(ctx.row("ORACLE:order_closure").detail("order", n), &mism)])
}

fn stable_hash(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn quotient_sampling(ctx: &Ctx<'_>, seed: u64) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let l = ctx.lattice()?;
    let t = g.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stable_hash(ctx.name));
    let mut mism = Vec::new();
    for n in 0..l.len() {
        let q = ctx.quotient(n)?;
        let target = q.target();
        let tt = target.elements()?;
        if target.order() * l.node(n).order() != g.order() {
            mism.push(format!("orders at node {n}"));
        }
        for _ in 0..SAMPLED_PRODUCTS {
            let x = rng.gen_range(0..t.len()) as u32;
            let y = rng.gen_range(0..t.len()) as u32;
            if q.map(t.mul(x, y)) != tt.mul(q.map(x), q.map(y)) {
                mism.push(format!("product at node {n}"));
                break;
            }
        }
    }
    Ok(vec![verdict(ctx.row("ORACLE:quotient_sampling").detail("quotients", l.len()), &mism)])
}

fn sylow_counts(ctx: &Ctx<'_>) -> Result<Vec<VerifierReport>> {
    let g = ctx.g;
    let mut mism = Vec::new();
    let mut counts = Vec::new();
    for p in ctx.primes() {
        let all = g.all_sylow(p)?;
        let n = all.len() as u64;
        counts.push((p, n));
        let orders_ok = all.iter().all(|s| s.order() == p_part(g.order(), p));
        if !orders_ok || n % p != 1 || g.order() % n != 0 {
            mism.push(format!("p = {p}: {n} subgroups"));
        }
    }
    Ok(vec![verdict(ctx.row("ORACLE:sylow").detail("counts", counts), &mism)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use chiefs::builders;

    #[test]
    fn oracles_agree_on_small_groups() {
        for g in [builders::symmetric(4), builders::dihedral(4), builders::dicyclic(3)] {
            let ctx = Ctx::new("g", &g);
            for r in run(&ctx, 7) {
                assert_eq!(r.status, Status::Verified, "{r:?}");
            }
        }
    }

    #[test]
    fn naive_closure() {
        assert_eq!(naive_order(&builders::alternating(5)), 60);
        assert_eq!(naive_order(&builders::trivial()), 1);
    }
}
