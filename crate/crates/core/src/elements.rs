//! Full element enumeration of a group, in canonical (lexicographic image
//! table) order. Element id 0 is always the identity.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::perm::Permutation;

/// Groups up to this order get a dense multiplication table.
const MUL_TABLE_LIMIT: usize = 2048;

pub type ElemId = u32;

pub struct ElementTable {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, ElemId>,
    inv: Vec<ElemId>,
    orders: Vec<u32>,
    table: Option<Vec<ElemId>>,
}

impl ElementTable {
    pub(crate) fn new(mut elems: Vec<Permutation>, gens: &[Permutation]) -> Self {
        elems.sort_unstable();
        let index: HashMap<Permutation, ElemId> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as ElemId))
            .collect();
        let inv = elems.iter().map(|p| index[&p.inverse()]).collect();
        let mut t = ElementTable {
            elems,
            index,
            inv,
            orders: Vec::new(),
            table: None,
        };
        if t.len() <= MUL_TABLE_LIMIT {
            t.table = Some(t.build_table(gens));
        }
        t.orders = (0..t.len() as ElemId).map(|x| t.compute_order(x)).collect();
        t
    }

    /// Dense table from a Cayley-graph spanning tree: `a*b = (a*parent(b))*s`.
    fn build_table(&self, gens: &[Permutation]) -> Vec<ElemId> {
        let n = self.len();
        let gen_ids: Vec<ElemId> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| self.index[g])
            .collect();
        let right: Vec<Vec<ElemId>> = (0..n)
            .map(|a| {
                gen_ids
                    .iter()
                    .map(|&s| self.index[&self.elems[a].then(&self.elems[s as usize])])
                    .collect()
            })
            .collect();
        let mut order = vec![0usize];
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let b = order[i];
            for (si, &_s) in gen_ids.iter().enumerate() {
                let c = right[b][si] as usize;
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = (b, si);
                    order.push(c);
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), n);
        let mut table = vec![0 as ElemId; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as ElemId;
            for &b in &order[1..] {
                let (pb, si) = parent[b];
                row[b] = right[row[pb] as usize][si];
            }
        }
        table
    }

    fn compute_order(&self, x: ElemId) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn perm(&self, x: ElemId) -> &Permutation {
        &self.elems[x as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[a as usize * self.elems.len() + b as usize],
            None => self.index[&self.elems[a as usize].then(&self.elems[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inv[a as usize]
    }

    /// `g⁻¹ x g`
    #[inline]
    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn comm(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: ElemId, e: u64) -> ElemId {
        let e = e % self.order_of(x) as u64;
        (0..e).fold(0, |acc, _| self.mul(acc, x))
    }

    #[inline]
    pub fn order_of(&self, x: ElemId) -> u32 {
        self.orders[x as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> {
        0..self.elems.len() as ElemId
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    /// Conjugation map `x ↦ g⁻¹ x g` over all elements.
    pub fn conj_map(&self, g: ElemId) -> Vec<ElemId> {
        self.ids().map(|x| self.conj(x, g)).collect()
    }

    /// Closure of `base` (already a subgroup, given as member set plus
    /// generators) under extra generators, coset by coset. Returns `None`
    /// as soon as the result would exceed `limit` elements.
    pub(crate) fn extend(
        &self,
        base: &FixedBitSet,
        base_gens: &[ElemId],
        extra: &[ElemId],
        limit: Option<usize>,
    ) -> Option<FixedBitSet> {
        let mut members = base.clone();
        let mut current: Vec<ElemId> = base.ones().map(|x| x as ElemId).collect();
        let mut gens: Vec<ElemId> = base_gens.to_vec();
        for &x in extra {
            if members.contains(x as usize) {
                continue;
            }
            gens.push(x);
            // Closure of <current, x> by right cosets of `current`.
            let sub: Vec<ElemId> = current.clone();
            let mut reps = vec![0 as ElemId];
            let add_coset = |t: ElemId, members: &mut FixedBitSet, current: &mut Vec<ElemId>| {
                for &h in &sub {
                    let y = self.mul(h, t);
                    members.insert(y as usize);
                    current.push(y);
                }
            };
            add_coset(x, &mut members, &mut current);
            reps.push(x);
            if limit.is_some_and(|l| current.len() > l) {
                return None;
            }
            let mut i = 0;
            while i < reps.len() {
                let r = reps[i];
                for &s in &gens {
                    let t = self.mul(r, s);
                    if !members.contains(t as usize) {
                        add_coset(t, &mut members, &mut current);
                        reps.push(t);
                        if limit.is_some_and(|l| current.len() > l) {
                            return None;
                        }
                    }
                }
                i += 1;
            }
        }
        Some(members)
    }

    pub(crate) fn trivial_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert(0);
        s
    }

    pub fn closure(&self, gens: &[ElemId]) -> FixedBitSet {
        self.extend(&self.trivial_set(), &[], gens, None).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schreier::StabChain;

    fn table(n: usize, gens: &[&str]) -> ElementTable {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(n, s).unwrap())
            .collect();
        ElementTable::new(StabChain::new(n, &gens).elements(), &gens)
    }

    #[test]
    fn dense_table_matches_composition() {
        let t = table(4, &["(1 2 3 4)", "(1 2)"]);
        assert_eq!(t.len(), 24);
        assert!(t.perm(0).is_identity());
        for a in t.ids() {
            for b in t.ids() {
                assert_eq!(t.perm(t.mul(a, b)), &t.perm(a).then(t.perm(b)));
            }
            assert_eq!(t.mul(a, t.inv(a)), 0);
        }
    }

    #[test]
    fn extend_builds_subgroups() {
        let t = table(4, &["(1 2 3 4)", "(1 2)"]);
        let id = |s: &str| t.id_of(&Permutation::parse_cycles(4, s).unwrap()).unwrap();
        let v4 = t.closure(&[id("(1 2)(3 4)"), id("(1 3)(2 4)")]);
        assert_eq!(v4.count_ones(..), 4);
        let d8 = t.closure(&[id("(1 2 3 4)"), id("(1 3)")]);
        assert_eq!(d8.count_ones(..), 8);
        assert!(t.extend(&v4, &[], &[id("(1 2 3)")], Some(8)).is_none());
        let a4 = t.extend(&v4, &[], &[id("(1 2 3)")], None).unwrap();
        assert_eq!(a4.count_ones(..), 12);
    }
}
