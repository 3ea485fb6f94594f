//! Subgroup arithmetic inside an enumerated group. Everything here works on
//! member bitsets over element ids.

use fixedbitset::FixedBitSet;

use crate::elements::ElemId;
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};

/// Size of the product set `HK` and whether it is a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetProduct {
    pub size: u64,
    pub is_subgroup: bool,
}

impl Group {
    pub fn intersect(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        if h.is_subgroup_of(k) {
            return Ok(h.clone());
        }
        if k.is_subgroup_of(h) {
            return Ok(k.clone());
        }
        let mut m = h.members.clone();
        m.intersect_with(&k.members);
        self.from_members(m)
    }

    /// `⟨H, K⟩`.
    pub fn join(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        if k.is_subgroup_of(h) {
            return Ok(h.clone());
        }
        if h.is_subgroup_of(k) {
            return Ok(k.clone());
        }
        let t = self.elements()?;
        let members = t.extend(&h.members, &h.gens, &k.gens, None).unwrap();
        let mut gens = h.gens.clone();
        gens.extend(k.gens.iter().filter(|&&x| !h.contains_id(x)));
        Ok(self.make_ref(gens, members))
    }

    pub fn set_product(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<SetProduct> {
        let i = self.intersect(h, k)?;
        let size = h.order * k.order / i.order;
        Ok(SetProduct {
            size,
            is_subgroup: self.permutes(h, k)?,
        })
    }

    /// `HK = KH`, decided by closing `H` under `K` with an early exit once
    /// the closure outgrows `|H||K|/|H∩K|`.
    pub fn permutes(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<bool> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        if h.is_subgroup_of(k) || k.is_subgroup_of(h) {
            return Ok(true);
        }
        let inter = h.members.intersection(&k.members).count() as u64;
        let size = h.order * k.order / inter;
        if self.order() % size != 0 {
            return Ok(false);
        }
        let t = self.elements()?;
        Ok(t.extend(&h.members, &h.gens, &k.gens, Some(size as usize))
            .is_some_and(|m| m.count_ones(..) as u64 == size))
    }

    pub fn is_normal(&self, h: &SubgroupRef) -> Result<bool> {
        self.check_parent(h)?;
        let t = self.elements()?;
        let gens = self.gen_ids()?;
        Ok(gens
            .iter()
            .all(|&g| h.gens.iter().all(|&x| h.contains_id(t.conj(x, g)))))
    }

    /// `N_G(H)` by element filter.
    pub fn normalizer(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_parent(h)?;
        if let Some(n) = self.memo.lock().unwrap().normalizers.get(&h.members) {
            return Ok(n.clone());
        }
        let t = self.elements()?;
        let n = if self.is_normal(h)? {
            self.whole()?
        } else {
            let mut m = t.empty_set();
            for g in t.ids() {
                if h.gens.iter().all(|&x| h.contains_id(t.conj(x, g))) {
                    m.insert(g as usize);
                }
            }
            self.from_members(m)?
        };
        self.memo
            .lock()
            .unwrap()
            .normalizers
            .insert(h.members.clone(), n.clone());
        Ok(n)
    }

    /// Normalizer of `H` inside the subgroup `J`.
    pub fn normalizer_in(&self, j: &SubgroupRef, h: &SubgroupRef) -> Result<SubgroupRef> {
        let n = self.normalizer(h)?;
        self.intersect(&n, j)
    }

    /// `C_G(S)` for an arbitrary element set.
    pub fn centralizer(&self, s: &[ElemId]) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let mut m = t.empty_set();
        for g in t.ids() {
            if s.iter().all(|&x| t.mul(x, g) == t.mul(g, x)) {
                m.insert(g as usize);
            }
        }
        self.from_members(m)
    }

    pub fn center(&self) -> Result<SubgroupRef> {
        let gens = self.gen_ids()?;
        self.centralizer(&gens)
    }

    /// Largest normal subgroup of `G` inside `H`: the union of the
    /// conjugacy classes contained in `H`.
    pub fn core(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_parent(h)?;
        let classes = self.conjugacy_classes()?;
        let mut m = self.elements()?.empty_set();
        for c in classes {
            if c.iter().all(|&x| h.contains_id(x)) {
                m.extend(c.iter().map(|&x| x as usize));
            }
        }
        self.from_members(m)
    }

    /// Smallest normal subgroup of `G` containing `H`.
    pub fn normal_closure(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        let whole = self.whole()?;
        self.normal_closure_in(&whole, h)
    }

    /// Smallest subgroup containing `H` and normalized by `J`.
    pub fn normal_closure_in(&self, j: &SubgroupRef, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_parent(h)?;
        self.check_parent(j)?;
        let t = self.elements()?;
        let mut members = h.members.clone();
        let mut gens = h.gens.clone();
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            for &g in &j.gens {
                let y = t.conj(x, g);
                if !members.contains(y as usize) {
                    members = t.extend(&members, &gens, &[y], None).unwrap();
                    gens.push(y);
                }
            }
            i += 1;
        }
        Ok(self.make_ref(gens, members))
    }

    pub fn core_and_closure(&self, h: &SubgroupRef) -> Result<(SubgroupRef, SubgroupRef)> {
        Ok((self.core(h)?, self.normal_closure(h)?))
    }

    /// `[A, B]`: generated by commutators of generators, then closed under
    /// conjugation by `⟨A, B⟩`.
    pub fn commutator(&self, a: &SubgroupRef, b: &SubgroupRef) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let mut comms = Vec::new();
        for &x in &a.gens {
            for &y in &b.gens {
                let c = t.comm(x, y);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        let seed = self.subgroup_by_ids(&comms)?;
        let ab = self.join(a, b)?;
        self.normal_closure_in(&ab, &seed)
    }

    pub fn derived_subgroup(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.commutator(h, h)
    }

    /// `G ⊇ G' ⊇ G'' ⊇ …` up to and including the first repeated term.
    pub fn derived_series(&self) -> Result<Vec<SubgroupRef>> {
        let mut series = vec![self.whole()?];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_subgroup(last)?;
            if &next == last {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// Whether `K` is subnormal: iterate `K^{previous}` downward until it
    /// stabilizes.
    pub fn is_subnormal(&self, k: &SubgroupRef) -> Result<bool> {
        let mut cur = self.whole()?;
        loop {
            if cur == *k {
                return Ok(true);
            }
            let next = self.normal_closure_in(&cur, k)?;
            if next == cur {
                return Ok(false);
            }
            cur = next;
        }
    }

    /// Conjugate subgroup `H^g`.
    pub fn conjugate(&self, h: &SubgroupRef, g: ElemId) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let mut m = t.empty_set();
        for x in h.ids() {
            m.insert(t.conj(x, g) as usize);
        }
        let gens = h.gens.iter().map(|&x| t.conj(x, g)).collect();
        Ok(self.make_ref(gens, m))
    }

    /// Subgroup generated by all elements of `H` whose order satisfies `keep`.
    pub fn generated_by_orders(
        &self,
        h: &SubgroupRef,
        keep: impl Fn(u32) -> bool,
    ) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let mut members = t.trivial_set();
        let mut gens = Vec::new();
        for x in h.ids() {
            if !members.contains(x as usize) && keep(t.order_of(x)) {
                members = t.extend(&members, &gens, &[x], None).unwrap();
                gens.push(x);
            }
        }
        Ok(self.make_ref(gens, members))
    }

    /// Whether `H` is a `p`-group for some prime (trivial counts).
    pub fn is_p_subgroup(&self, h: &SubgroupRef) -> Option<u64> {
        crate::arith::prime_power_base(h.order)
    }

    pub(crate) fn require_p_group(&self, h: &SubgroupRef) -> Result<u64> {
        self.is_p_subgroup(h)
            .ok_or(GroupError::NotPGroup(h.order))
    }

    pub fn is_abelian_sub(&self, h: &SubgroupRef) -> Result<bool> {
        let t = self.elements()?;
        Ok(h.gens
            .iter()
            .all(|&x| h.gens.iter().all(|&y| t.mul(x, y) == t.mul(y, x))))
    }

    /// Set of elements `{xy : x ∈ H, y ∈ K}`.
    pub fn product_set(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<FixedBitSet> {
        let t = self.elements()?;
        let mut m = t.empty_set();
        for x in h.ids() {
            for y in k.ids() {
                m.insert(t.mul(x, y) as usize);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use crate::builders;
    use crate::perm::Permutation;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn s3_products() {
        let g = builders::symmetric(3);
        let h = g.subgroup(&[p(3, "(1 2)")]).unwrap();
        let k = g.subgroup(&[p(3, "(1 3)")]).unwrap();
        let sp = g.set_product(&h, &k).unwrap();
        assert_eq!((sp.size, sp.is_subgroup), (4, false));
        assert_eq!(g.product_set(&h, &k).unwrap().count_ones(..), 4);
        let sp = g.set_product(&h, &h).unwrap();
        assert_eq!((sp.size, sp.is_subgroup), (2, true));
    }

    #[test]
    fn s4_subgroup_ops() {
        let g = builders::symmetric(4);
        let v4 = g.subgroup(&[p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        let c4 = g.subgroup(&[p(4, "(1 2 3 4)")]).unwrap();
        let i = g.intersect(&v4, &c4).unwrap();
        assert_eq!(i, g.subgroup(&[p(4, "(1 3)(2 4)")]).unwrap());
        let inv = g.subgroup(&[p(4, "(1 3)(2 4)")]).unwrap();
        assert_eq!(g.normalizer(&inv).unwrap().order(), 8);
        let t = g.subgroup(&[p(4, "(1 2)")]).unwrap();
        let (core, closure) = g.core_and_closure(&t).unwrap();
        assert_eq!((core.order(), closure.order()), (1, 24));
        let (core, closure) = g.core_and_closure(&inv).unwrap();
        assert_eq!((core.order(), closure.order()), (1, 4));
        assert!(g.is_subnormal(&inv).unwrap());
        assert!(!g.is_subnormal(&t).unwrap());
        let orders: Vec<u64> = g.derived_series().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert_eq!(g.center().unwrap().order(), 1);
    }

    #[test]
    fn a5_is_perfect() {
        let g = builders::alternating(5);
        let orders: Vec<u64> = g.derived_series().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![60]);
    }

    #[test]
    fn centralizer_lies_in_normalizer() {
        let g = builders::symmetric(4);
        let c = g.subgroup(&[p(4, "(1 2 3)")]).unwrap();
        let cent = g.centralizer(c.gens()).unwrap();
        assert!(cent.is_subgroup_of(&g.normalizer(&c).unwrap()));
        assert_eq!(cent.order(), 3);
    }
}
