//! Quotients `G/N` realised as the action of `G` on the right cosets of `N`.

use crate::elements::ElemId;
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};
use crate::perm::Permutation;

pub struct Epimorphism {
    kernel: SubgroupRef,
    target: Group,
    /// Coset index of every source element.
    coset_of: Vec<u32>,
    /// Smallest element of each coset.
    reps: Vec<ElemId>,
    /// Target element id of each coset.
    image_of_coset: Vec<ElemId>,
}

impl Group {
    pub fn quotient(&self, n: &SubgroupRef) -> Result<Epimorphism> {
        self.check_parent(n)?;
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let index = self.order() / n.order();
        if index > self.caps().max_quotient_degree {
            return Err(GroupError::CapExceeded {
                what: "quotient degree",
                limit: self.caps().max_quotient_degree,
                actual: index,
            });
        }
        let t = self.elements()?;
        let mut coset_of = vec![u32::MAX; t.len()];
        let mut reps = Vec::with_capacity(index as usize);
        for x in t.ids() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for k in n.ids() {
                coset_of[t.mul(k, x) as usize] = c;
            }
        }
        let m = reps.len();
        let act = |g: ElemId| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[t.mul(r, g) as usize])
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = self.gen_ids()?.into_iter().map(act).collect();
        let target = Group::with_caps(m.max(1), gens, self.caps())?;
        debug_assert_eq!(target.order() * n.order(), self.order());
        let image_of_coset = reps
            .iter()
            .map(|&r| target.id_of(&act(r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Epimorphism {
            kernel: n.clone(),
            target,
            coset_of,
            reps,
            image_of_coset,
        })
    }
}

impl Epimorphism {
    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn kernel(&self) -> &SubgroupRef {
        &self.kernel
    }

    pub fn coset_reps(&self) -> &[ElemId] {
        &self.reps
    }

    /// Image of a source element, as a target element id.
    pub fn map(&self, x: ElemId) -> ElemId {
        self.image_of_coset[self.coset_of[x as usize] as usize]
    }

    /// `HN/N` as a subgroup of the target.
    pub fn image(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        let ids: Vec<ElemId> = h.gens().iter().map(|&x| self.map(x)).collect();
        self.target.subgroup_by_ids(&ids)
    }

    /// Full preimage in the source of a target subgroup.
    pub fn preimage(&self, source: &Group, k: &SubgroupRef) -> Result<SubgroupRef> {
        source.check_parent(&self.kernel)?;
        self.target.check_parent(k)?;
        let t = source.elements()?;
        let mut m = t.empty_set();
        for x in t.ids() {
            if k.contains_id(self.map(x)) {
                m.insert(x as usize);
            }
        }
        source.from_members(m)
    }
}

#[cfg(test)]
mod tests {
    use crate::builders;
    use crate::perm::Permutation;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn s4_mod_v4() {
        let g = builders::symmetric(4);
        let v4 = g
            .subgroup(&[
                Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
                Permutation::parse_cycles(4, "(1 3)(2 4)").unwrap(),
            ])
            .unwrap();
        let q = g.quotient(&v4).unwrap();
        assert_eq!(q.target().order(), 6);
        assert_eq!(q.target().degree(), 6);
        assert!(!q.target().is_abelian_sub(&q.target().whole().unwrap()).unwrap());
        let t = g.elements().unwrap();
        let qt = q.target().elements().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = rng.gen_range(0..24);
            let b = rng.gen_range(0..24);
            assert_eq!(q.map(t.mul(a, b)), qt.mul(q.map(a), q.map(b)));
        }
        assert_eq!(q.preimage(&g, &q.target().trivial().unwrap()).unwrap(), v4);
    }

    #[test]
    fn extreme_kernels() {
        let g = builders::alternating(4);
        let whole = g.whole().unwrap();
        assert_eq!(g.quotient(&whole).unwrap().target().order(), 1);
        let triv = g.trivial().unwrap();
        assert_eq!(g.quotient(&triv).unwrap().target().order(), 12);
        let c3 = g.sylow(3).unwrap();
        assert!(g.quotient(&c3).is_err());
    }
}
