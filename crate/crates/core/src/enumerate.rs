//! Complete subgroup enumeration by cyclic extension over zuppos
//! (cyclic subgroups of prime-power order), plus the p-group helpers.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::arith::prime_power_base;
use crate::elements::ElemId;
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};

/// All subgroups of a group, sorted canonically, grouped into conjugacy
/// classes.
pub struct SubgroupCatalog {
    subgroups: Vec<SubgroupRef>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    index: HashMap<FixedBitSet, usize>,
}

impl SubgroupCatalog {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupRef] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupRef {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &SubgroupRef) -> Option<usize> {
        self.index.get(&h.members).copied()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Conjugacy classes as index lists; class order follows the smallest
    /// member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// One representative (the canonically smallest) per class.
    pub fn representatives(&self) -> Vec<&SubgroupRef> {
        self.classes.iter().map(|c| &self.subgroups[c[0]]).collect()
    }
}

/// Filter for `enumerate_subgroups`.
#[derive(Clone, Debug, Default)]
pub struct SubgroupFilter {
    pub orders: Option<Vec<u64>>,
    pub p_subgroups_only: bool,
    pub up_to_conjugacy: bool,
}

impl Group {
    /// The full subgroup catalog, built once.
    pub fn catalog(&self) -> Result<&SubgroupCatalog> {
        if let Some(c) = self.catalog.get() {
            return Ok(c);
        }
        self.check_cap("subgroup enumeration")?;
        let built = self.build_catalog()?;
        Ok(self.catalog.get_or_init(|| built))
    }

    pub fn enumerate_subgroups(&self, filter: &SubgroupFilter) -> Result<Vec<SubgroupRef>> {
        let cat = self.catalog()?;
        let keep = |h: &SubgroupRef| {
            filter.orders.as_ref().map_or(true, |o| o.contains(&h.order()))
                && (!filter.p_subgroups_only || h.order() == 1 || prime_power_base(h.order()).is_some())
        };
        let out = if filter.up_to_conjugacy {
            cat.representatives().into_iter().filter(|h| keep(h)).cloned().collect()
        } else {
            cat.subgroups().iter().filter(|h| keep(h)).cloned().collect()
        };
        Ok(out)
    }

    /// One generator per cyclic subgroup of prime-power order > 1.
    pub(crate) fn zuppos(&self, within: &SubgroupRef) -> Result<Vec<ElemId>> {
        let t = self.elements()?;
        let mut seen = t.empty_set();
        let mut out = Vec::new();
        for x in within.ids() {
            if x == 0 || seen.contains(x as usize) || prime_power_base(t.order_of(x) as u64).is_none() {
                continue;
            }
            let cyc = t.closure(&[x]);
            for y in cyc.ones() {
                if t.order_of(y as ElemId) == t.order_of(x) {
                    seen.insert(y);
                }
            }
            out.push(x);
        }
        Ok(out)
    }

    fn build_catalog(&self) -> Result<SubgroupCatalog> {
        let t = self.elements()?;
        let whole = self.whole()?;
        let zuppos = self.zuppos(&whole)?;
        let gen_ids = self.gen_ids()?;
        let conj_maps: Vec<Vec<ElemId>> = gen_ids.iter().map(|&g| t.conj_map(g)).collect();

        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut subs: Vec<SubgroupRef> = Vec::new();
        let mut raw_class: Vec<usize> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();

        let add_class = |h: SubgroupRef,
                             index: &mut HashMap<FixedBitSet, usize>,
                             subs: &mut Vec<SubgroupRef>,
                             raw_class: &mut Vec<usize>,
                             reps: &mut Vec<usize>| {
            let ci = reps.len();
            reps.push(subs.len());
            let start = subs.len();
            index.insert(h.members.clone(), subs.len());
            subs.push(h);
            raw_class.push(ci);
            let mut i = start;
            while i < subs.len() {
                for map in &conj_maps {
                    let src = &subs[i];
                    let mut m = t.empty_set();
                    for x in src.members.ones() {
                        m.insert(map[x] as usize);
                    }
                    if !index.contains_key(&m) {
                        let gens = src.gens.iter().map(|&x| map[x as usize]).collect();
                        let c = self.make_ref(gens, m.clone());
                        index.insert(m, subs.len());
                        subs.push(c);
                        raw_class.push(ci);
                    }
                }
                i += 1;
            }
        };

        add_class(self.trivial()?, &mut index, &mut subs, &mut raw_class, &mut reps);
        let mut r = 0;
        while r < reps.len() {
            let h = subs[reps[r]].clone();
            for &z in &zuppos {
                if h.contains_id(z) {
                    continue;
                }
                let m = t.extend(&h.members, &h.gens, &[z], None).unwrap();
                if index.contains_key(&m) {
                    continue;
                }
                let mut gens = h.gens.clone();
                gens.push(z);
                let k = self.make_ref(gens, m);
                add_class(k, &mut index, &mut subs, &mut raw_class, &mut reps);
            }
            r += 1;
        }

        let mut order: Vec<usize> = (0..subs.len()).collect();
        order.sort_by(|&a, &b| subs[a].cmp(&subs[b]));
        let subgroups: Vec<SubgroupRef> = order.iter().map(|&i| subs[i].clone()).collect();
        let index: HashMap<FixedBitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members.clone(), i))
            .collect();
        let mut class_remap: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; subgroups.len()];
        for (new_i, &old_i) in order.iter().enumerate() {
            let rc = raw_class[old_i];
            let ci = *class_remap.entry(rc).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[ci].push(new_i);
            class_of[new_i] = ci;
        }
        Ok(SubgroupCatalog {
            subgroups,
            class_of,
            classes,
            index,
        })
    }

    /// Frattini subgroup of a `p`-group `P`: `P' P^p`.
    pub fn frattini_of_p_group(&self, pgrp: &SubgroupRef) -> Result<SubgroupRef> {
        let p = match self.is_p_subgroup(pgrp) {
            Some(p) => p,
            None if pgrp.order() == 1 => return Ok(pgrp.clone()),
            None => return Err(GroupError::NotPGroup(pgrp.order())),
        };
        let t = self.elements()?;
        let derived = self.derived_subgroup(pgrp)?;
        let powers: Vec<ElemId> = pgrp.gens.iter().map(|&x| t.pow(x, p)).collect();
        let pw = self.subgroup_by_ids(&powers)?;
        self.join(&derived, &pw)
    }

    /// Index-`p` subgroups of the `p`-group `P`, as preimages of the
    /// hyperplanes of `P/Φ(P)`.
    pub fn maximal_subgroups_of_p_group(&self, pgrp: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
        if pgrp.order() == 1 {
            return Ok(Vec::new());
        }
        let p = self.require_p_group(pgrp)?;
        let t = self.elements()?;
        let phi = self.frattini_of_p_group(pgrp)?;
        let mut basis = Vec::new();
        let mut span = phi.members.clone();
        let mut span_gens = phi.gens.clone();
        for x in pgrp.ids() {
            if !span.contains(x as usize) {
                span = t.extend(&span, &span_gens, &[x], None).unwrap();
                span_gens.push(x);
                basis.push(x);
            }
        }
        let d = basis.len();
        let mut out = Vec::new();
        // A hyperplane is the kernel of a functional whose first nonzero
        // coefficient (at index k) is 1.
        for k in 0..d {
            let tail = d - k - 1;
            let count = (p as usize).pow(tail as u32);
            for code in 0..count {
                let mut coeffs = vec![0u64; d];
                let mut c = code;
                for slot in coeffs.iter_mut().skip(k + 1) {
                    *slot = (c % p as usize) as u64;
                    c /= p as usize;
                }
                let mut gens = phi.gens.clone();
                for (j, &b) in basis.iter().enumerate() {
                    if j < k {
                        gens.push(b);
                    } else if j > k {
                        let corr = t.pow(basis[k], (p - coeffs[j]) % p);
                        gens.push(t.mul(b, corr));
                    }
                }
                let members = t.extend(&phi.members, &phi.gens, &gens[phi.gens.len()..], None).unwrap();
                out.push(self.make_ref(gens, members));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Distinct cyclic subgroups `⟨x⟩ ≤ H` with `o(x)` in `orders`.
    pub fn cyclic_subgroups_of_order(&self, h: &SubgroupRef, orders: &[u32]) -> Result<Vec<SubgroupRef>> {
        let t = self.elements()?;
        let mut seen = t.empty_set();
        let mut out = Vec::new();
        for x in h.ids() {
            if seen.contains(x as usize) || !orders.contains(&t.order_of(x)) {
                continue;
            }
            let c = self.subgroup_by_ids(&[x])?;
            for y in c.ids() {
                if t.order_of(y) == t.order_of(x) {
                    seen.insert(y as usize);
                }
            }
            out.push(c);
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::perm::Permutation;
    use std::collections::HashSet;

    /// Every subset closed under multiplication, found by closing every
    /// pair of elements and iterating to a fixpoint.
    fn brute_force_count(g: &Group) -> usize {
        let t = g.elements().unwrap();
        let mut found: HashSet<FixedBitSet> = HashSet::new();
        found.insert(t.trivial_set());
        let mut frontier: Vec<FixedBitSet> = vec![t.trivial_set()];
        while let Some(s) = frontier.pop() {
            for x in t.ids() {
                if s.contains(x as usize) {
                    continue;
                }
                let mut gens: Vec<ElemId> = s.ones().map(|y| y as ElemId).collect();
                gens.push(x);
                let c = t.closure(&gens);
                if found.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        found.len()
    }

    #[test]
    fn small_counts() {
        let cases = [
            (builders::symmetric(3), 6),
            (builders::cyclic(6), 4),
            (builders::quaternion(8), 6),
            (builders::dihedral(4), 10),
            (builders::symmetric(4), 30),
            (builders::alternating(4), 10),
        ];
        for (g, n) in cases {
            let cat = g.catalog().unwrap();
            assert_eq!(cat.len(), n, "group of order {}", g.order());
            assert_eq!(brute_force_count(&g), n);
            for h in cat.subgroups() {
                assert_eq!(g.order() % h.order(), 0);
            }
        }
    }

    #[test]
    fn larger_counts() {
        assert_eq!(builders::alternating(5).catalog().unwrap().len(), 59);
        assert_eq!(builders::symmetric(5).catalog().unwrap().len(), 156);
        assert_eq!(builders::sl2(5).catalog().unwrap().len(), 76);
    }

    #[test]
    fn classes_are_conjugacy_classes() {
        let g = builders::symmetric(4);
        let cat = g.catalog().unwrap();
        assert_eq!(cat.classes().len(), 11);
        for class in cat.classes() {
            let rep = cat.get(class[0]);
            let conj = g.conjugacy_class_of(rep).unwrap();
            let listed: Vec<SubgroupRef> = class.iter().map(|&i| cat.get(i).clone()).collect();
            assert_eq!(conj, listed);
        }
    }

    #[test]
    fn p_group_helpers() {
        let c4 = builders::cyclic(4);
        let w = c4.whole().unwrap();
        assert_eq!(c4.maximal_subgroups_of_p_group(&w).unwrap().len(), 1);
        assert_eq!(c4.cyclic_subgroups_of_order(&w, &[2]).unwrap().len(), 1);
        let v4 = builders::elementary_abelian(2, 2);
        let w = v4.whole().unwrap();
        assert_eq!(v4.maximal_subgroups_of_p_group(&w).unwrap().len(), 3);
        let d8 = builders::dihedral(4);
        let w = d8.whole().unwrap();
        let max = d8.maximal_subgroups_of_p_group(&w).unwrap();
        assert_eq!(max.len(), 3);
        assert!(max.iter().all(|m| m.order() == 4));
        let c4s: Vec<_> = max.iter().filter(|m| d8.is_abelian_sub(m).unwrap()).collect();
        assert_eq!(c4s.len(), 3);
        let q8 = builders::quaternion(8);
        let w = q8.whole().unwrap();
        assert_eq!(q8.cyclic_subgroups_of_order(&w, &[2]).unwrap().len(), 1);
        assert_eq!(q8.cyclic_subgroups_of_order(&w, &[2, 4]).unwrap().len(), 4);
        let s4 = builders::symmetric(4);
        let t = s4.subgroup(&[Permutation::parse_cycles(4, "(1 2)").unwrap()]).unwrap();
        assert!(s4.maximal_subgroups_of_p_group(&s4.whole().unwrap()).is_err());
        assert_eq!(s4.maximal_subgroups_of_p_group(&t).unwrap(), vec![s4.trivial().unwrap()]);
    }

    #[test]
    fn maximal_subgroups_agree_with_catalog() {
        for g in [builders::dihedral(8), builders::quaternion(16), builders::elementary_abelian(3, 3)] {
            let w = g.whole().unwrap();
            let via_frattini = g.maximal_subgroups_of_p_group(&w).unwrap();
            let p = g.is_p_subgroup(&w).unwrap();
            let from_cat: Vec<SubgroupRef> = g
                .catalog()
                .unwrap()
                .subgroups()
                .iter()
                .filter(|h| h.order() * p == g.order())
                .cloned()
                .collect();
            assert_eq!(via_frattini, from_cat);
        }
    }

    #[test]
    fn filters() {
        let g = builders::symmetric(4);
        let f = SubgroupFilter {
            orders: Some(vec![2]),
            ..Default::default()
        };
        assert_eq!(g.enumerate_subgroups(&f).unwrap().len(), 9);
        let f = SubgroupFilter {
            p_subgroups_only: true,
            up_to_conjugacy: true,
            ..Default::default()
        };
        // 1, C2 (two classes), C3, V4 (two classes), C4, D8
        assert_eq!(g.enumerate_subgroups(&f).unwrap().len(), 8);
    }
}
