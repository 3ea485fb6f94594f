//! Subgroup embedding predicates, each decided exactly and returned with a
//! witness that can be checked again from scratch.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_pi_number, p_part, prime_divisors};
use crate::classify::FormationTag;
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::NodeId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredicateId {
    PiProperty,
    PartialPi,
    Cap,
    PartialCap,
    Quasinormal,
    SQuasinormal,
    SSemipermutable,
    SsQuasinormal,
    SQnEmbedded,
    SCondPermutable,
    TauQuasinormal,
    UHypEmbedded,
    SEmbedded,
    PiNormal,
    WeaklySPermutable,
    WeaklySSemipermutable,
    WeaklyTauQuasinormal,
}

impl PredicateId {
    pub const ALL: [PredicateId; 17] = [
        PredicateId::PiProperty,
        PredicateId::PartialPi,
        PredicateId::Cap,
        PredicateId::PartialCap,
        PredicateId::Quasinormal,
        PredicateId::SQuasinormal,
        PredicateId::SSemipermutable,
        PredicateId::SsQuasinormal,
        PredicateId::SQnEmbedded,
        PredicateId::SCondPermutable,
        PredicateId::TauQuasinormal,
        PredicateId::UHypEmbedded,
        PredicateId::SEmbedded,
        PredicateId::PiNormal,
        PredicateId::WeaklySPermutable,
        PredicateId::WeaklySSemipermutable,
        PredicateId::WeaklyTauQuasinormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredicateId::PiProperty => "pi_property",
            PredicateId::PartialPi => "partial_pi",
            PredicateId::Cap => "cap",
            PredicateId::PartialCap => "partial_cap",
            PredicateId::Quasinormal => "quasinormal",
            PredicateId::SQuasinormal => "s_quasinormal",
            PredicateId::SSemipermutable => "s_semipermutable",
            PredicateId::SsQuasinormal => "ss_quasinormal",
            PredicateId::SQnEmbedded => "s_qn_embedded",
            PredicateId::SCondPermutable => "s_cond_permutable",
            PredicateId::TauQuasinormal => "tau_quasinormal",
            PredicateId::UHypEmbedded => "u_hyp_embedded",
            PredicateId::SEmbedded => "s_embedded",
            PredicateId::PiNormal => "pi_normal",
            PredicateId::WeaklySPermutable => "weakly_s_permutable",
            PredicateId::WeaklySSemipermutable => "weakly_s_semipermutable",
            PredicateId::WeaklyTauQuasinormal => "weakly_tau_quasinormal",
        }
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PredicateId {
    type Err = GroupError;

    /// Accepts the snake_case names, their kebab-case spellings and the
    /// short forms `pi` and `partial-pi`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        let norm = match norm.as_str() {
            "pi" => "pi_property",
            other => other,
        };
        PredicateId::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| GroupError::Invalid(format!("unknown predicate {s:?}")))
    }
}

/// Diagnostics for one cover edge `(K, L)` against a subgroup `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCheck {
    pub edge: (NodeId, NodeId),
    pub orders: (u64, u64),
    /// `|HK ∩ L|`.
    pub d_order: u64,
    /// `|G : N_G(HK ∩ L)|`.
    pub index: u64,
    /// Primes dividing `|HK ∩ L| / |K|`.
    pub pi: Vec<u64>,
    pub good: bool,
}

/// A subgroup recorded by order and generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub order: u64,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    pub predicate: PredicateId,
    pub subject: SubgroupSummary,
    pub verdict: bool,
    /// Lattice nodes of a witness chain (partial predicates).
    pub witness_nodes: Vec<NodeId>,
    /// Orders along the witness chain.
    pub witness_chain: Vec<u64>,
    /// Offending edges (universal predicates).
    pub violations: Vec<EdgeCheck>,
    /// Permuting partner, supplement or normal subgroup `K`.
    pub partner: Option<SubgroupSummary>,
    /// Intermediate subgroup `I`.
    pub intermediate: Option<SubgroupSummary>,
}

impl Group {
    pub fn summarize(&self, h: &SubgroupRef) -> Result<SubgroupSummary> {
        Ok(SubgroupSummary {
            order: h.order(),
            generators: self.generators_of(h)?.iter().map(|p| p.to_string()).collect(),
        })
    }

    fn report(&self, id: PredicateId, h: &SubgroupRef, verdict: bool) -> Result<PredicateReport> {
        Ok(PredicateReport {
            predicate: id,
            subject: self.summarize(h)?,
            verdict,
            witness_nodes: Vec::new(),
            witness_chain: Vec::new(),
            violations: Vec::new(),
            partner: None,
            intermediate: None,
        })
    }

    /// The π-condition of a cover edge: with `D = HK ∩ L`, every prime of
    /// `|G : N_G(D)|` divides `|D/K|`; `D = K` is always good.
    pub fn good_edge(&self, h: &SubgroupRef, lo: NodeId, hi: NodeId) -> Result<EdgeCheck> {
        let l = self.normal_lattice()?;
        let (k, m) = (l.node(lo), l.node(hi));
        let hk = self.join(h, k)?;
        let d = self.intersect(&hk, m)?;
        let (index, pi) = if d == *k {
            (1, Vec::new())
        } else {
            let n = self.normalizer(&d)?;
            (self.order() / n.order(), prime_divisors(d.order() / k.order()))
        };
        Ok(EdgeCheck {
            edge: (lo, hi),
            orders: (k.order(), m.order()),
            d_order: d.order(),
            index,
            good: is_pi_number(index, &pi),
            pi,
        })
    }

    fn edge_checks(&self, h: &SubgroupRef) -> Result<Vec<EdgeCheck>> {
        let l = self.normal_lattice()?;
        l.edges()
            .iter()
            .map(|&(lo, hi)| self.good_edge(h, lo, hi))
            .collect()
    }

    fn chain_report(
        &self,
        id: PredicateId,
        h: &SubgroupRef,
        good: &[bool],
    ) -> Result<PredicateReport> {
        let l = self.normal_lattice()?;
        let edges = l.edges();
        let r = l.reach(|lo, hi| good[edges.binary_search(&(lo, hi)).unwrap()]);
        let mut rep = self.report(id, h, r.verdict)?;
        rep.witness_chain = r.witness.iter().map(|&v| l.node(v).order()).collect();
        rep.witness_nodes = r.witness;
        Ok(rep)
    }

    fn cached(&self, id: PredicateId, h: &SubgroupRef, f: impl FnOnce() -> Result<bool>) -> Result<bool> {
        let key = (id, h.members().clone());
        if let Some(&v) = self.memo.lock().unwrap().predicates.get(&key) {
            return Ok(v);
        }
        let v = f()?;
        self.memo.lock().unwrap().predicates.insert(key, v);
        Ok(v)
    }

    pub fn partial_pi(&self, h: &SubgroupRef) -> Result<PredicateReport> {
        self.check_parent(h)?;
        let good: Vec<bool> = self.edge_checks(h)?.iter().map(|c| c.good).collect();
        let rep = self.chain_report(PredicateId::PartialPi, h, &good)?;
        self.memo
            .lock()
            .unwrap()
            .predicates
            .insert((PredicateId::PartialPi, h.members().clone()), rep.verdict);
        Ok(rep)
    }

    pub fn pi_property(&self, h: &SubgroupRef) -> Result<PredicateReport> {
        self.check_parent(h)?;
        let bad: Vec<EdgeCheck> = self.edge_checks(h)?.into_iter().filter(|c| !c.good).collect();
        let mut rep = self.report(PredicateId::PiProperty, h, bad.is_empty())?;
        rep.violations = bad;
        Ok(rep)
    }

    /// Whether `H` covers (`L ≤ HK`) or avoids (`H ∩ L ≤ K`) the factor.
    pub fn covers_or_avoids(&self, h: &SubgroupRef, lo: NodeId, hi: NodeId) -> Result<bool> {
        let l = self.normal_lattice()?;
        let (k, m) = (l.node(lo), l.node(hi));
        let hk = self.join(h, k)?;
        if m.is_subgroup_of(&hk) {
            return Ok(true);
        }
        let hm = self.intersect(h, m)?;
        Ok(hm.is_subgroup_of(k))
    }

    fn permutes_with_all(&self, h: &SubgroupRef, ks: &[SubgroupRef]) -> Result<bool> {
        for k in ks {
            if !self.permutes(h, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn sylows_of(&self, p: u64) -> Result<Vec<SubgroupRef>> {
        self.all_sylow(p)
    }

    pub fn is_s_quasinormal(&self, h: &SubgroupRef) -> Result<bool> {
        self.cached(PredicateId::SQuasinormal, h, || {
            for p in prime_divisors(self.order()) {
                if !self.permutes_with_all(h, &self.sylows_of(p)?)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    pub fn is_s_semipermutable(&self, h: &SubgroupRef) -> Result<bool> {
        self.cached(PredicateId::SSemipermutable, h, || {
            for p in prime_divisors(self.order()) {
                if h.order() % p != 0 && !self.permutes_with_all(h, &self.sylows_of(p)?)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    pub fn is_tau_quasinormal(&self, h: &SubgroupRef) -> Result<bool> {
        self.cached(PredicateId::TauQuasinormal, h, || {
            for p in prime_divisors(self.order()) {
                if h.order() % p == 0 {
                    continue;
                }
                for s in self.sylows_of(p)? {
                    let closure = self.normal_closure(&s)?;
                    if gcd(h.order(), closure.order()) != 1 && !self.permutes(h, &s)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })
    }

    /// Catalog indices of the subgroups in a named family, memoised.
    fn family(&self, name: &'static str, keep: impl Fn(&SubgroupRef) -> Result<bool>) -> Result<Vec<usize>> {
        if let Some(v) = self.memo.lock().unwrap().families.get(name) {
            return Ok(v.clone());
        }
        let cat = self.catalog()?;
        let mut out = Vec::new();
        for (i, k) in cat.subgroups().iter().enumerate() {
            if keep(k)? {
                out.push(i);
            }
        }
        self.memo.lock().unwrap().families.insert(name, out.clone());
        Ok(out)
    }

    fn subnormal_family(&self) -> Result<Vec<usize>> {
        self.family("subnormal", |k| self.is_subnormal(k))
    }

    fn s_quasinormal_family(&self) -> Result<Vec<usize>> {
        self.family("s_quasinormal", |k| self.is_s_quasinormal(k))
    }

    /// Join of the subgroups of `H` passing `keep`.
    fn interior(&self, h: &SubgroupRef, keep: impl Fn(&SubgroupRef) -> Result<bool>) -> Result<SubgroupRef> {
        let cat = self.catalog()?;
        let mut j = self.trivial()?;
        for k in cat.subgroups() {
            if k.is_subgroup_of(h) && !k.is_subgroup_of(&j) && keep(k)? {
                j = self.join(&j, k)?;
            }
        }
        Ok(j)
    }

    /// `H_{sG}`.
    pub fn s_interior(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.interior(h, |k| self.is_s_quasinormal(k))
    }

    /// `H_{τG}`.
    pub fn tau_interior(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.interior(h, |k| self.is_tau_quasinormal(k))
    }

    /// Subnormal supplements `K` (`G = HK`) in canonical order.
    fn subnormal_supplements(&self, h: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
        let cat = self.catalog()?;
        let mut out = Vec::new();
        for i in self.subnormal_family()? {
            let k = cat.get(i);
            let inter = self.intersect(h, k)?;
            if h.order() * k.order() / inter.order() == self.order() {
                out.push(k.clone());
            }
        }
        Ok(out)
    }

    /// Evaluates any registered predicate.
    pub fn predicate(&self, h: &SubgroupRef, id: PredicateId) -> Result<PredicateReport> {
        self.check_parent(h)?;
        match id {
            PredicateId::PartialPi => self.partial_pi(h),
            PredicateId::PiProperty => self.pi_property(h),
            PredicateId::Cap => {
                let l = self.normal_lattice()?;
                let mut rep = self.report(id, h, true)?;
                for &(lo, hi) in l.edges() {
                    if !self.covers_or_avoids(h, lo, hi)? {
                        rep.verdict = false;
                        rep.violations.push(self.good_edge(h, lo, hi)?);
                    }
                }
                Ok(rep)
            }
            PredicateId::PartialCap => {
                let l = self.normal_lattice()?;
                let good = l
                    .edges()
                    .iter()
                    .map(|&(lo, hi)| self.covers_or_avoids(h, lo, hi))
                    .collect::<Result<Vec<_>>>()?;
                self.chain_report(id, h, &good)
            }
            PredicateId::Quasinormal => {
                let cat = self.catalog()?;
                let mut rep = self.report(id, h, true)?;
                for k in cat.subgroups() {
                    if !self.permutes(h, k)? {
                        rep.verdict = false;
                        rep.partner = Some(self.summarize(k)?);
                        break;
                    }
                }
                Ok(rep)
            }
            PredicateId::SQuasinormal | PredicateId::SSemipermutable | PredicateId::TauQuasinormal => {
                let v = match id {
                    PredicateId::SQuasinormal => self.is_s_quasinormal(h)?,
                    PredicateId::SSemipermutable => self.is_s_semipermutable(h)?,
                    _ => self.is_tau_quasinormal(h)?,
                };
                self.report(id, h, v)
            }
            PredicateId::SsQuasinormal => {
                let cat = self.catalog()?;
                let mut rep = self.report(id, h, false)?;
                for k in cat.subgroups() {
                    let inter = self.intersect(h, k)?;
                    if h.order() * k.order() / inter.order() != self.order() {
                        continue;
                    }
                    let mut ok = true;
                    for p in prime_divisors(k.order()) {
                        let part = p_part(k.order(), p);
                        let sylows: Vec<SubgroupRef> = cat
                            .subgroups()
                            .iter()
                            .filter(|s| s.order() == part && s.is_subgroup_of(k))
                            .cloned()
                            .collect();
                        if !self.permutes_with_all(h, &sylows)? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        rep.verdict = true;
                        rep.partner = Some(self.summarize(k)?);
                        break;
                    }
                }
                Ok(rep)
            }
            PredicateId::SQnEmbedded => {
                let cat = self.catalog()?;
                let sq = self.s_quasinormal_family()?;
                let mut rep = self.report(id, h, true)?;
                'primes: for p in prime_divisors(h.order()) {
                    let part = p_part(h.order(), p);
                    for s in cat.subgroups().iter().filter(|s| s.order() == part && s.is_subgroup_of(h)) {
                        let found = sq.iter().any(|&i| {
                            let x = cat.get(i);
                            s.is_subgroup_of(x) && p_part(x.order(), p) == part
                        });
                        if !found {
                            rep.verdict = false;
                            rep.partner = Some(self.summarize(s)?);
                            break 'primes;
                        }
                    }
                }
                Ok(rep)
            }
            PredicateId::SCondPermutable => {
                let mut rep = self.report(id, h, true)?;
                for p in prime_divisors(self.order()) {
                    let mut any = false;
                    for s in self.sylows_of(p)? {
                        if self.permutes(h, &s)? {
                            any = true;
                            break;
                        }
                    }
                    if !any {
                        rep.verdict = false;
                        break;
                    }
                }
                Ok(rep)
            }
            PredicateId::UHypEmbedded => {
                let (core, closure) = self.core_and_closure(h)?;
                let l = self.normal_lattice()?;
                let (a, b) = (l.node_of(&core).unwrap(), l.node_of(&closure).unwrap());
                let mut central = Vec::new();
                for &(lo, hi) in l.edges() {
                    if l.contains(a, lo) && l.contains(hi, b) && self.f_central(lo, hi, FormationTag::U)? {
                        central.push((lo, hi));
                    }
                }
                let r = l.reach_between(a, b, |lo, hi| central.contains(&(lo, hi)));
                let mut rep = self.report(id, h, r.verdict)?;
                rep.witness_chain = r.witness.iter().map(|&v| l.node(v).order()).collect();
                rep.witness_nodes = r.witness;
                Ok(rep)
            }
            PredicateId::SEmbedded => {
                let l = self.normal_lattice()?;
                let hs = self.s_interior(h)?;
                let mut rep = self.report(id, h, false)?;
                for k in l.nodes() {
                    let hk = self.join(h, k)?;
                    if !self.is_s_quasinormal(&hk)? {
                        continue;
                    }
                    if self.intersect(h, k)?.is_subgroup_of(&hs) {
                        rep.verdict = true;
                        rep.partner = Some(self.summarize(k)?);
                        rep.intermediate = Some(self.summarize(&hs)?);
                        break;
                    }
                }
                Ok(rep)
            }
            PredicateId::PiNormal => {
                let cat = self.catalog()?;
                let mut rep = self.report(id, h, false)?;
                'search: for k in self.subnormal_supplements(h)? {
                    let hk = self.intersect(h, &k)?;
                    for i in cat.subgroups() {
                        if !hk.is_subgroup_of(i) || !i.is_subgroup_of(h) {
                            continue;
                        }
                        let pi = self.cached(PredicateId::PiProperty, i, || Ok(self.pi_property(i)?.verdict))?;
                        if pi {
                            rep.verdict = true;
                            rep.partner = Some(self.summarize(&k)?);
                            rep.intermediate = Some(self.summarize(i)?);
                            break 'search;
                        }
                    }
                }
                Ok(rep)
            }
            PredicateId::WeaklySPermutable | PredicateId::WeaklyTauQuasinormal => {
                let inner = if id == PredicateId::WeaklySPermutable {
                    self.s_interior(h)?
                } else {
                    self.tau_interior(h)?
                };
                let mut rep = self.report(id, h, false)?;
                for k in self.subnormal_supplements(h)? {
                    if self.intersect(h, &k)?.is_subgroup_of(&inner) {
                        rep.verdict = true;
                        rep.partner = Some(self.summarize(&k)?);
                        rep.intermediate = Some(self.summarize(&inner)?);
                        break;
                    }
                }
                Ok(rep)
            }
            PredicateId::WeaklySSemipermutable => {
                let cat = self.catalog()?;
                let mut rep = self.report(id, h, false)?;
                'search: for k in self.subnormal_supplements(h)? {
                    let hk = self.intersect(h, &k)?;
                    for i in cat.subgroups() {
                        if hk.is_subgroup_of(i) && i.is_subgroup_of(h) && self.is_s_semipermutable(i)? {
                            rep.verdict = true;
                            rep.partner = Some(self.summarize(&k)?);
                            rep.intermediate = Some(self.summarize(i)?);
                            break 'search;
                        }
                    }
                }
                Ok(rep)
            }
        }
    }

    /// Verdict only, memoised per subgroup.
    pub fn holds(&self, h: &SubgroupRef, id: PredicateId) -> Result<bool> {
        self.cached(id, h, || Ok(self.predicate(h, id)?.verdict))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::perm::Permutation;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn s4_cyclic_four() {
        let g = builders::symmetric(4);
        let h = g.subgroup(&[p(4, "(1 2 3 4)")]).unwrap();
        let e = g.good_edge(&h, 0, 1).unwrap();
        assert_eq!((e.d_order, e.index, e.pi.clone(), e.good), (2, 3, vec![2], false));
        assert!(!g.partial_pi(&h).unwrap().verdict);
        let w = g.whole().unwrap();
        assert!(g.partial_pi(&w).unwrap().verdict);
        let v4 = g.subgroup(&[p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        for id in [PredicateId::PiProperty, PredicateId::SQuasinormal, PredicateId::Cap, PredicateId::PiNormal] {
            assert!(g.predicate(&v4, id).unwrap().verdict, "{id}");
        }
        let other = g.subgroup(&[p(4, "(1 3)"), p(4, "(2 4)")]).unwrap();
        assert!(!g.predicate(&other, PredicateId::Cap).unwrap().verdict);
    }

    #[test]
    fn q8_subgroups_are_quasinormal() {
        let g = builders::quaternion(8);
        for h in g.catalog().unwrap().subgroups() {
            assert!(g.predicate(h, PredicateId::Quasinormal).unwrap().verdict);
        }
    }

    #[test]
    fn names_parse() {
        for id in PredicateId::ALL {
            assert_eq!(id.name().parse::<PredicateId>().unwrap(), id);
            assert_eq!(id.name().replace('_', "-").parse::<PredicateId>().unwrap(), id);
        }
        assert_eq!("pi".parse::<PredicateId>().unwrap(), PredicateId::PiProperty);
        assert!("x_permutable".parse::<PredicateId>().is_err());
    }
}
