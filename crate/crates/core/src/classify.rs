//! Group classes, characteristic subgroups, F-central chief factors and
//! formation hypercentres.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, p_part, prime_divisors, prime_power_base};
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::{ChiefFactor, NodeId};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupClass {
    Abelian,
    Nilpotent,
    PNilpotent(u64),
    Solvable,
    PSolvable(u64),
    Supersolvable,
    PSupersolvable(u64),
    Quasinilpotent,
    PQuasinilpotent(u64),
    Simple,
    Quasisimple,
}

impl GroupClass {
    /// Parses a class name; `p` is required by the `p-` variants.
    pub fn parse(name: &str, p: Option<u64>) -> Result<GroupClass> {
        let need_p = || {
            p.filter(|&p| is_prime(p))
                .ok_or_else(|| GroupError::Invalid(format!("class {name} needs a prime --p")))
        };
        Ok(match name {
            "abelian" => GroupClass::Abelian,
            "nilpotent" => GroupClass::Nilpotent,
            "p-nilpotent" => GroupClass::PNilpotent(need_p()?),
            "solvable" => GroupClass::Solvable,
            "p-solvable" => GroupClass::PSolvable(need_p()?),
            "supersolvable" => GroupClass::Supersolvable,
            "p-supersolvable" => GroupClass::PSupersolvable(need_p()?),
            "quasinilpotent" => GroupClass::Quasinilpotent,
            "p-quasinilpotent" => GroupClass::PQuasinilpotent(need_p()?),
            "simple" => GroupClass::Simple,
            "quasisimple" => GroupClass::Quasisimple,
            _ => return Err(GroupError::Invalid(format!("unknown class {name:?}"))),
        })
    }
}

/// The formations the statement suites instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormationTag {
    U,
    Up(u64),
    N,
    Np(u64),
}

impl FormationTag {
    pub fn class(self) -> GroupClass {
        match self {
            FormationTag::U => GroupClass::Supersolvable,
            FormationTag::Up(p) => GroupClass::PSupersolvable(p),
            FormationTag::N => GroupClass::Nilpotent,
            FormationTag::Np(p) => GroupClass::PNilpotent(p),
        }
    }

    pub fn all_for(p: u64) -> [FormationTag; 4] {
        [FormationTag::U, FormationTag::Up(p), FormationTag::N, FormationTag::Np(p)]
    }
}

impl fmt::Display for FormationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormationTag::U => f.write_str("U"),
            FormationTag::Up(p) => write!(f, "U{p}"),
            FormationTag::N => f.write_str("N"),
            FormationTag::Np(p) => write!(f, "N{p}"),
        }
    }
}

impl FromStr for FormationTag {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || GroupError::Invalid(format!("unknown formation {s:?}"));
        let prime = |t: &str| -> Result<u64> {
            let p: u64 = t.parse().map_err(|_| bad())?;
            if is_prime(p) {
                Ok(p)
            } else {
                Err(bad())
            }
        };
        match s {
            "U" => Ok(FormationTag::U),
            "N" => Ok(FormationTag::N),
            _ if s.starts_with('U') => Ok(FormationTag::Up(prime(&s[1..])?)),
            _ if s.starts_with('N') => Ok(FormationTag::Np(prime(&s[1..])?)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharKind {
    Center,
    Hypercenter,
    Frattini,
    Fitting,
    Op,
    OpPrime,
    OUpperP,
    Socle,
    Layer,
    FStar,
    FStarP,
    Omega1,
    Omega2,
    Psi,
}

impl CharKind {
    pub fn needs_p(self) -> bool {
        matches!(
            self,
            CharKind::Op
                | CharKind::OpPrime
                | CharKind::OUpperP
                | CharKind::FStarP
                | CharKind::Psi
        )
    }
}

impl FromStr for CharKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Z" | "center" => CharKind::Center,
            "Zinf" | "hypercenter" => CharKind::Hypercenter,
            "Phi" | "frattini" => CharKind::Frattini,
            "F" | "fitting" => CharKind::Fitting,
            "Op" => CharKind::Op,
            "Op'" | "Opprime" => CharKind::OpPrime,
            "O^p" | "Oupper" => CharKind::OUpperP,
            "socle" => CharKind::Socle,
            "E" | "layer" => CharKind::Layer,
            "Fstar" => CharKind::FStar,
            "Fstarp" => CharKind::FStarP,
            "Omega1" => CharKind::Omega1,
            "Omega2" => CharKind::Omega2,
            "Psi" => CharKind::Psi,
            _ => return Err(GroupError::Invalid(format!("unknown subgroup kind {s:?}"))),
        })
    }
}

/// Outcome of a hypercentre computation.
#[derive(Clone, Debug)]
pub struct Hypercentre {
    pub subgroup: SubgroupRef,
    /// Nodes reachable from 1 through F-central cover edges.
    pub hypercentral_nodes: Vec<NodeId>,
    /// Whether the join is itself one of those nodes.
    pub join_is_hypercentral: bool,
    /// Where the greedy single-edge climb stops.
    pub greedy: NodeId,
}

impl Group {
    /// One chief series: the deterministic chain through smallest nodes.
    pub fn chief_series(&self) -> Result<Vec<NodeId>> {
        Ok(self.normal_lattice()?.reach(|_, _| true).witness)
    }

    fn chief_orders(&self) -> Result<Vec<u64>> {
        let l = self.normal_lattice()?;
        let chain = self.chief_series()?;
        Ok(chain
            .windows(2)
            .map(|w| l.node(w[1]).order() / l.node(w[0]).order())
            .collect())
    }

    pub fn group_class(&self, class: GroupClass) -> Result<bool> {
        let n = self.order();
        match class {
            GroupClass::Abelian => {
                let w = self.whole()?;
                self.is_abelian_sub(&w)
            }
            GroupClass::Nilpotent => {
                for p in prime_divisors(n) {
                    let s = self.sylow(p)?;
                    if !self.is_normal(&s)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            GroupClass::PNilpotent(p) => {
                let target = n / p_part(n, p);
                Ok(self.normal_lattice()?.nodes().iter().any(|x| x.order() == target))
            }
            GroupClass::Solvable => Ok(self.derived_series()?.last().unwrap().is_trivial()),
            GroupClass::PSolvable(p) => Ok(self
                .chief_orders()?
                .iter()
                .all(|&f| f % p != 0 || prime_power_base(f) == Some(p))),
            GroupClass::Supersolvable => Ok(self.chief_orders()?.iter().all(|&f| is_prime(f))),
            GroupClass::PSupersolvable(p) => Ok(self.group_class(GroupClass::PSolvable(p))?
                && self.chief_orders()?.iter().all(|&f| f % p != 0 || f == p)),
            GroupClass::Quasinilpotent => self.induces_inner(None),
            GroupClass::PQuasinilpotent(p) => self.induces_inner(Some(p)),
            GroupClass::Simple => Ok(n > 1 && self.normal_lattice()?.len() == 2),
            GroupClass::Quasisimple => {
                if n == 1 {
                    return Ok(false);
                }
                let w = self.whole()?;
                if self.derived_subgroup(&w)? != w {
                    return Ok(false);
                }
                let z = self.center()?;
                let l = self.normal_lattice()?;
                let zi = l.node_of(&z).expect("centre is normal");
                Ok(l.is_cover(zi, l.top()))
            }
        }
    }

    /// Whether every generator of `G` acts on each factor of one chief
    /// series (restricted to factors of order divisible by `p`) as some
    /// element of the factor does.
    fn induces_inner(&self, p: Option<u64>) -> Result<bool> {
        let l = self.normal_lattice()?;
        let t = self.elements()?;
        let gens = self.gen_ids()?;
        let chain = self.chief_series()?;
        for w in chain.windows(2) {
            let (k, m) = (l.node(w[0]), l.node(w[1]));
            let order = m.order() / k.order();
            if p.is_some_and(|p| order % p != 0) {
                continue;
            }
            for &g in &gens {
                let inner = m.ids().any(|y| {
                    m.gens()
                        .iter()
                        .all(|&x| k.contains_id(t.mul(t.conj(x, g), t.inv(t.conj(x, y)))))
                });
                if !inner {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Class membership of a subgroup, regarded as a group.
    pub fn subgroup_in_class(&self, h: &SubgroupRef, class: GroupClass) -> Result<bool> {
        self.subgroup_as_group(h)?.group_class(class)
    }

    fn largest_node(&self, keep: impl Fn(&SubgroupRef) -> bool) -> Result<SubgroupRef> {
        let l = self.normal_lattice()?;
        Ok(l.nodes().iter().rev().find(|x| keep(x)).unwrap().clone())
    }

    pub fn o_p(&self, p: u64) -> Result<SubgroupRef> {
        self.largest_node(|x| x.order() == 1 || prime_power_base(x.order()) == Some(p))
    }

    pub fn o_p_prime(&self, p: u64) -> Result<SubgroupRef> {
        self.largest_node(|x| x.order() % p != 0)
    }

    /// Smallest normal subgroup with a `p`-group quotient.
    pub fn o_upper_p(&self, p: u64) -> Result<SubgroupRef> {
        let l = self.normal_lattice()?;
        let n = self.order();
        Ok(l.nodes()
            .iter()
            .find(|x| {
                let idx = n / x.order();
                idx == 1 || prime_power_base(idx) == Some(p)
            })
            .unwrap()
            .clone())
    }

    pub fn fitting(&self) -> Result<SubgroupRef> {
        let mut f = self.trivial()?;
        for p in prime_divisors(self.order()) {
            f = self.join(&f, &self.o_p(p)?)?;
        }
        Ok(f)
    }

    pub fn hypercenter(&self) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let gens = self.gen_ids()?;
        let mut z = self.trivial()?;
        loop {
            let mut m = t.empty_set();
            for g in t.ids() {
                if gens.iter().all(|&x| z.contains_id(t.comm(g, x))) {
                    m.insert(g as usize);
                }
            }
            if m == z.members {
                return Ok(z);
            }
            z = self.from_members(m)?;
        }
    }

    /// Intersection of the maximal subgroups.
    pub fn frattini(&self) -> Result<SubgroupRef> {
        let w = self.whole()?;
        if self.order() == 1 {
            return Ok(w);
        }
        if self.is_p_subgroup(&w).is_some() {
            return self.frattini_of_p_group(&w);
        }
        let cat = self.catalog()?;
        let subs = cat.subgroups();
        let proper = &subs[..subs.len() - 1];
        let mut m = w.members.clone();
        for (i, h) in proper.iter().enumerate() {
            let maximal = proper[i + 1..]
                .iter()
                .all(|k| k.order() == h.order() || !h.is_subgroup_of(k));
            if maximal {
                m.intersect_with(&h.members);
            }
        }
        self.from_members(m)
    }

    pub fn socle(&self) -> Result<SubgroupRef> {
        let mut s = self.trivial()?;
        for n in self.minimal_normals()? {
            s = self.join(&s, &n)?;
        }
        Ok(s)
    }

    /// Join of the subnormal quasisimple subgroups (trivial for solvable
    /// groups).
    pub fn layer(&self) -> Result<SubgroupRef> {
        if self.group_class(GroupClass::Solvable)? {
            return self.trivial();
        }
        let cat = self.catalog()?;
        let mut e = self.trivial()?;
        for h in cat.subgroups() {
            if h.order() == 1 || h.is_subgroup_of(&e) {
                continue;
            }
            if self.derived_subgroup(h)? != *h {
                continue;
            }
            if self.is_subnormal(h)? && self.subgroup_in_class(h, GroupClass::Quasisimple)? {
                e = self.join(&e, h)?;
            }
        }
        Ok(e)
    }

    /// `F*(G) = F(G) E(G)`.
    pub fn f_star(&self) -> Result<SubgroupRef> {
        let f = self.fitting()?;
        let e = self.layer()?;
        self.join(&f, &e)
    }

    /// Largest normal subgroup that is quasinilpotent as a group; agrees
    /// with `f_star`.
    pub fn quasinilpotent_radical(&self) -> Result<SubgroupRef> {
        self.radical_by(GroupClass::Quasinilpotent)
    }

    /// `F*_p(G)`, the `p`-quasinilpotent radical.
    pub fn f_star_p(&self, p: u64) -> Result<SubgroupRef> {
        self.radical_by(GroupClass::PQuasinilpotent(p))
    }

    fn radical_by(&self, class: GroupClass) -> Result<SubgroupRef> {
        let l = self.normal_lattice()?;
        let mut r = self.trivial()?;
        for n in l.nodes().iter().rev() {
            if n.is_subgroup_of(&r) {
                continue;
            }
            if self.subgroup_in_class(n, class)? {
                r = self.join(&r, n)?;
            }
        }
        Ok(r)
    }

    pub fn omega(&self, pgrp: &SubgroupRef, i: u32) -> Result<SubgroupRef> {
        let p = match self.is_p_subgroup(pgrp) {
            Some(p) => p,
            None if pgrp.is_trivial() => return Ok(pgrp.clone()),
            None => return Err(GroupError::NotPGroup(pgrp.order())),
        };
        let bound = p.pow(i);
        self.generated_by_orders(pgrp, |o| o > 1 && bound % o as u64 == 0)
    }

    /// `Ψ_p(H)`: generated by elements of order `p`, or of order 2 or 4
    /// when `p = 2`.
    pub fn psi(&self, h: &SubgroupRef, p: u64) -> Result<SubgroupRef> {
        self.generated_by_orders(h, |o| o as u64 == p || (p == 2 && o == 4))
    }

    pub fn char_subgroup(&self, kind: CharKind, p: Option<u64>) -> Result<SubgroupRef> {
        let need = || {
            p.filter(|&p| is_prime(p))
                .ok_or_else(|| GroupError::Invalid("a prime p is required".into()))
        };
        let w = self.whole()?;
        match kind {
            CharKind::Center => self.center(),
            CharKind::Hypercenter => self.hypercenter(),
            CharKind::Frattini => self.frattini(),
            CharKind::Fitting => self.fitting(),
            CharKind::Op => self.o_p(need()?),
            CharKind::OpPrime => self.o_p_prime(need()?),
            CharKind::OUpperP => self.o_upper_p(need()?),
            CharKind::Socle => self.socle(),
            CharKind::Layer => self.layer(),
            CharKind::FStar => self.f_star(),
            CharKind::FStarP => self.f_star_p(need()?),
            CharKind::Omega1 => self.omega(&w, 1),
            CharKind::Omega2 => self.omega(&w, 2),
            CharKind::Psi => self.psi(&w, need()?),
        }
    }

    /// `(L/K) ⋊ (G/C_G(L/K))` as a permutation group on the cosets of `K`
    /// in `L`: right translations by `L` together with conjugation by `G`.
    pub fn factor_semidirect(&self, factor: &ChiefFactor) -> Result<Group> {
        let l = self.normal_lattice()?;
        let t = self.elements()?;
        let (k, m) = (l.node(factor.lo), l.node(factor.hi));
        let degree = factor.order;
        if degree > self.caps().max_quotient_degree {
            return Err(GroupError::CapExceeded {
                what: "factor degree",
                limit: self.caps().max_quotient_degree,
                actual: degree,
            });
        }
        let mut coset_of = vec![u32::MAX; t.len()];
        let mut reps = Vec::new();
        for x in m.ids() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for y in k.ids() {
                coset_of[t.mul(y, x) as usize] = c;
            }
        }
        let action = |f: &dyn Fn(u32) -> u32| -> Permutation {
            Permutation::from_images(reps.iter().map(|&r| coset_of[f(r) as usize]).collect())
                .expect("coset action")
        };
        let mut gens: Vec<Permutation> = m
            .gens()
            .iter()
            .map(|&y| action(&|r| t.mul(r, y)))
            .collect();
        for g in self.gen_ids()? {
            gens.push(action(&|r| t.conj(r, g)));
        }
        Group::with_caps(reps.len(), gens, self.caps())
    }

    /// Whether the chief factor `(lo, hi)` is F-central.
    pub fn f_central(&self, lo: NodeId, hi: NodeId, tag: FormationTag) -> Result<bool> {
        if let Some(&v) = self.memo.lock().unwrap().f_central.get(&(lo, hi, tag)) {
            return Ok(v);
        }
        let factor = self.chief_factor(lo, hi)?;
        let v = self.factor_semidirect(&factor)?.group_class(tag.class())?;
        self.memo.lock().unwrap().f_central.insert((lo, hi, tag), v);
        Ok(v)
    }

    /// `Z_F(G)` as the join of all nodes reached from 1 through F-central
    /// cover edges.
    pub fn hypercentre(&self, tag: FormationTag) -> Result<Hypercentre> {
        if let Some(h) = self.memo.lock().unwrap().hypercentre.get(&tag) {
            return Ok(h.clone());
        }
        let l = self.normal_lattice()?;
        let mut central = vec![Vec::new(); l.len()];
        for &(lo, hi) in l.edges() {
            if self.f_central(lo, hi, tag)? {
                central[lo].push(hi);
            }
        }
        let r = l.reach(|lo, hi| central[lo].contains(&hi));
        let mut join = self.trivial()?;
        for &v in &r.frontier {
            join = self.join(&join, l.node(v))?;
        }
        let join_node = l.node_of(&join).expect("joins of normal subgroups are normal");
        let mut greedy = l.bottom();
        while let Some(&next) = central[greedy].first() {
            greedy = next;
        }
        let h = Hypercentre {
            subgroup: join,
            join_is_hypercentral: r.frontier.contains(&join_node),
            hypercentral_nodes: r.frontier,
            greedy,
        };
        self.memo.lock().unwrap().hypercentre.insert(tag, h.clone());
        Ok(h)
    }

    pub fn z_f(&self, tag: FormationTag) -> Result<SubgroupRef> {
        Ok(self.hypercentre(tag)?.subgroup)
    }

    /// Whether the 2-group `P` has no section isomorphic to `Q8`.
    pub fn quaternion_free(&self, pgrp: &SubgroupRef) -> Result<bool> {
        if pgrp.order() < 8 {
            return Ok(true);
        }
        if self.is_p_subgroup(pgrp) != Some(2) {
            return Err(GroupError::NotPGroup(pgrp.order()));
        }
        let pg = self.subgroup_as_group(pgrp)?;
        let t = pg.elements()?;
        let subs = pg.catalog()?.subgroups();
        for s in subs.iter().filter(|s| s.order() >= 8) {
            for tt in subs.iter().filter(|x| x.order() * 8 == s.order() && x.is_subgroup_of(s)) {
                let normal = s
                    .gens()
                    .iter()
                    .all(|&g| tt.gens().iter().all(|&x| tt.contains_id(t.conj(x, g))));
                if !normal {
                    continue;
                }
                let nonabelian = s
                    .gens()
                    .iter()
                    .any(|&x| s.gens().iter().any(|&y| !tt.contains_id(t.comm(x, y))));
                let involution_lifts = s
                    .ids()
                    .filter(|&x| !tt.contains_id(x) && tt.contains_id(t.mul(x, x)))
                    .count() as u64;
                if nonabelian && involution_lifts == tt.order() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `(n, p - 1) = 1`.
    pub fn coprime_to_p_minus_one(n: u64, p: u64) -> bool {
        gcd(n, p - 1) == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn classes_of_small_groups() {
        let s4 = builders::symmetric(4);
        assert!(!s4.group_class(GroupClass::Supersolvable).unwrap());
        assert!(!s4.group_class(GroupClass::PSupersolvable(2)).unwrap());
        assert!(s4.group_class(GroupClass::PSupersolvable(3)).unwrap());
        assert!(s4.group_class(GroupClass::Solvable).unwrap());
        let q8 = builders::quaternion(8);
        assert!(q8.group_class(GroupClass::Nilpotent).unwrap());
        assert!(!q8.group_class(GroupClass::Quasisimple).unwrap());
        let a5 = builders::alternating(5);
        assert!(a5.group_class(GroupClass::Quasinilpotent).unwrap());
        assert!(!a5.group_class(GroupClass::Nilpotent).unwrap());
        assert!(a5.group_class(GroupClass::Simple).unwrap());
        assert!(builders::sl2(5).group_class(GroupClass::Quasisimple).unwrap());
        assert!(!builders::symmetric(5).group_class(GroupClass::Quasinilpotent).unwrap());
        assert!(builders::frobenius(5, 4).group_class(GroupClass::PNilpotent(2)).unwrap());
        assert!(!builders::frobenius(5, 4).group_class(GroupClass::PNilpotent(5)).unwrap());
    }

    #[test]
    fn characteristic_subgroups() {
        let s4 = builders::symmetric(4);
        assert_eq!(s4.f_star().unwrap().order(), 4);
        assert_eq!(s4.fitting().unwrap().order(), 4);
        assert_eq!(s4.layer().unwrap().order(), 1);
        assert_eq!(s4.o_upper_p(2).unwrap().order(), 12);
        assert_eq!(s4.frattini().unwrap().order(), 1);
        let a5 = builders::alternating(5);
        assert_eq!(a5.f_star().unwrap().order(), 60);
        assert_eq!(a5.fitting().unwrap().order(), 1);
        let q8 = builders::quaternion(8);
        let w = q8.whole().unwrap();
        assert_eq!(q8.psi(&w, 2).unwrap().order(), 8);
        assert_eq!(q8.omega(&w, 1).unwrap().order(), 2);
        assert_eq!(q8.frattini().unwrap().order(), 2);
        assert_eq!(builders::dihedral(4).hypercenter().unwrap().order(), 8);
        assert_eq!(builders::symmetric(3).hypercenter().unwrap().order(), 1);
        let sl25 = builders::sl2(5);
        assert_eq!(sl25.f_star().unwrap().order(), 120);
        assert_eq!(sl25.quasinilpotent_radical().unwrap().order(), 120);
        assert_eq!(sl25.frattini().unwrap().order(), 2);
    }

    #[test]
    fn f_central_examples() {
        let s4 = builders::symmetric(4);
        let f = s4.chief_factor(0, 1).unwrap();
        assert_eq!(s4.factor_semidirect(&f).unwrap().order(), 24);
        assert!(!s4.f_central(0, 1, FormationTag::U).unwrap());
        let a5 = builders::alternating(5);
        assert!(!a5.f_central(0, 1, FormationTag::U).unwrap());
        let c6 = builders::cyclic(6);
        for (lo, hi) in c6.normal_lattice().unwrap().edges().to_vec() {
            for tag in FormationTag::all_for(2) {
                assert!(c6.f_central(lo, hi, tag).unwrap());
            }
        }
    }

    #[test]
    fn hypercentres() {
        assert_eq!(builders::symmetric(4).z_f(FormationTag::U).unwrap().order(), 1);
        assert_eq!(builders::cyclic(6).z_f(FormationTag::U).unwrap().order(), 6);
        let s3 = builders::symmetric(3);
        assert_eq!(s3.z_f(FormationTag::N).unwrap().order(), 1);
        assert_eq!(s3.z_f(FormationTag::U).unwrap().order(), 6);
        let h = s3.hypercentre(FormationTag::U).unwrap();
        assert!(h.join_is_hypercentral);
        assert_eq!(s3.normal_lattice().unwrap().node(h.greedy), &h.subgroup);
    }

    #[test]
    fn quaternion_sections() {
        let q8 = builders::quaternion(8);
        assert!(!q8.quaternion_free(&q8.whole().unwrap()).unwrap());
        let d8 = builders::dihedral(4);
        assert!(d8.quaternion_free(&d8.whole().unwrap()).unwrap());
        let e8 = builders::elementary_abelian(2, 3);
        assert!(e8.quaternion_free(&e8.whole().unwrap()).unwrap());
        let q16 = builders::quaternion(16);
        assert!(!q16.quaternion_free(&q16.whole().unwrap()).unwrap());
        let d16 = builders::dihedral(8);
        assert!(d16.quaternion_free(&d16.whole().unwrap()).unwrap());
    }

    #[test]
    fn tags_round_trip() {
        for tag in FormationTag::all_for(3) {
            assert_eq!(tag.to_string().parse::<FormationTag>().unwrap(), tag);
        }
        assert!("U4".parse::<FormationTag>().is_err());
    }
}
