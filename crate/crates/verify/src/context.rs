//! Per-group evaluation context with the caches shared by all suites.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::time::Instant;

use chiefs::arith::prime_divisors;
use chiefs::quotient::Epimorphism;
use chiefs::{FormationTag, Group, GroupClass, NodeId, NormalLattice, PredicateId, Result, SubgroupRef};

use crate::report::{Status, VerifierReport};

pub struct Ctx<'a> {
    pub name: &'a str,
    pub g: &'a Group,
    quotients: RefCell<HashMap<NodeId, Rc<Epimorphism>>>,
    as_groups: RefCell<HashMap<NodeId, Rc<Group>>>,
    f_stars: RefCell<HashMap<NodeId, SubgroupRef>>,
    quotient_classes: RefCell<HashMap<(NodeId, GroupClass), bool>>,
}

impl<'a> Ctx<'a> {
    pub fn new(name: &'a str, g: &'a Group) -> Ctx<'a> {
        Ctx {
            name,
            g,
            quotients: RefCell::default(),
            as_groups: RefCell::default(),
            f_stars: RefCell::default(),
            quotient_classes: RefCell::default(),
        }
    }

    pub fn lattice(&self) -> Result<&'a NormalLattice> {
        self.g.normal_lattice()
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.g.order())
    }

    /// `U`, `N` and `U_p`, `N_p` for each prime divisor of `|G|`.
    pub fn tags(&self) -> Vec<FormationTag> {
        let mut v = vec![FormationTag::U, FormationTag::N];
        for p in self.primes() {
            v.push(FormationTag::Up(p));
            v.push(FormationTag::Np(p));
        }
        v
    }

    pub fn row(&self, statement: &str) -> VerifierReport {
        VerifierReport::new(statement, self.name)
    }

    /// `order:gen,gen,...` in cycle notation, with canonical generators.
    pub fn desc(&self, h: &SubgroupRef) -> String {
        describe(self.g, h)
    }

    pub fn node_desc(&self, n: NodeId) -> Result<String> {
        Ok(self.desc(self.lattice()?.node(n)))
    }

    pub fn pp(&self, h: &SubgroupRef) -> Result<bool> {
        self.g.holds(h, PredicateId::PartialPi)
    }

    /// Every maximal subgroup of the `p`-group `P` has partial Π-property.
    pub fn max_ok(&self, pgrp: &SubgroupRef) -> Result<bool> {
        for m in self.g.maximal_subgroups_of_p_group(pgrp)? {
            if !self.pp(&m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every cyclic subgroup of `P` of order `p`, and of order 4 when
    /// `P` is a 2-group that is not quaternion-free, has partial Π-property.
    pub fn cyc_ok(&self, pgrp: &SubgroupRef, p: u64) -> Result<bool> {
        let mut orders = vec![p as u32];
        if p == 2 && !self.g.quaternion_free(pgrp)? {
            orders.push(4);
        }
        for c in self.g.cyclic_subgroups_of_order(pgrp, &orders)? {
            if !self.pp(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All Sylow `p`-subgroups of a normal subgroup `X`.
    pub fn sylows_in(&self, x: &SubgroupRef, p: u64) -> Result<Vec<SubgroupRef>> {
        let s = self.g.sylow_of(x, p)?;
        self.g.conjugacy_class_of(&s)
    }

    pub fn quotient(&self, n: NodeId) -> Result<Rc<Epimorphism>> {
        if let Some(q) = self.quotients.borrow().get(&n) {
            return Ok(q.clone());
        }
        let q = Rc::new(self.g.quotient(self.lattice()?.node(n))?);
        self.quotients.borrow_mut().insert(n, q.clone());
        Ok(q)
    }

    /// Whether `G/N` lies in `class`.
    pub fn quotient_in(&self, n: NodeId, class: GroupClass) -> Result<bool> {
        if let Some(&v) = self.quotient_classes.borrow().get(&(n, class)) {
            return Ok(v);
        }
        let v = self.quotient(n)?.target().group_class(class)?;
        self.quotient_classes.borrow_mut().insert((n, class), v);
        Ok(v)
    }

    pub fn node_group(&self, n: NodeId) -> Result<Rc<Group>> {
        if let Some(x) = self.as_groups.borrow().get(&n) {
            return Ok(x.clone());
        }
        let x = Rc::new(self.g.subgroup_as_group(self.lattice()?.node(n))?);
        self.as_groups.borrow_mut().insert(n, x.clone());
        Ok(x)
    }

    /// `F*(E)` for a normal subgroup `E`, inside `G`.
    pub fn f_star_of(&self, e: NodeId) -> Result<SubgroupRef> {
        if let Some(x) = self.f_stars.borrow().get(&e) {
            return Ok(x.clone());
        }
        let eg = self.node_group(e)?;
        let f = self.g.embed(&eg, &eg.f_star()?)?;
        self.f_stars.borrow_mut().insert(e, f.clone());
        Ok(f)
    }

    pub fn node_of(&self, h: &SubgroupRef) -> Result<NodeId> {
        Ok(self.lattice()?.node_of(h).expect("normal subgroup is a lattice node"))
    }

    pub fn in_hypercentre(&self, h: &SubgroupRef, tag: FormationTag) -> Result<bool> {
        Ok(h.is_subgroup_of(&self.g.z_f(tag)?))
    }

    /// Largest solvable normal subgroup.
    pub fn solvable_radical(&self) -> Result<SubgroupRef> {
        let l = self.lattice()?;
        let mut r = self.g.trivial()?;
        for n in l.nodes() {
            if !n.is_subgroup_of(&r) && self.g.subgroup_in_class(n, GroupClass::Solvable)? {
                r = self.g.join(&r, n)?;
            }
        }
        Ok(r)
    }
}

pub fn describe(g: &Group, h: &SubgroupRef) -> String {
    let gens = g
        .canonical_generators(h)
        .map(|v| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
        .unwrap_or_default();
    format!("{}:{}", h.order(), gens)
}

/// Runs one check, turning errors into skipped or error rows and stamping
/// elapsed time on every row produced.
pub fn timed(
    ctx: &Ctx<'_>,
    statement: &str,
    f: impl FnOnce() -> Result<Vec<VerifierReport>>,
) -> Vec<VerifierReport> {
    let start = Instant::now();
    let mut rows = match f() {
        Ok(rows) => rows,
        Err(e) => {
            let status = if e.is_cap() { Status::Skipped } else { Status::Error };
            vec![ctx.row(statement).status(status).detail("reason", e.to_string())]
        }
    };
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut rows {
        r.elapsed_ms = ms;
    }
    rows
}
