//! Sylow subgroups by normalizer growth.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::arith::{is_prime, p_part, prime_power_base};
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};

impl Group {
    /// One Sylow `p`-subgroup; trivial when `p` does not divide `|G|`.
    pub fn sylow(&self, p: u64) -> Result<SubgroupRef> {
        let whole = self.whole()?;
        self.sylow_of(&whole, p)
    }

    /// A Sylow `p`-subgroup of the subgroup `J`. Starting from 1, repeatedly
    /// adjoin the smallest `p`-element of `N_J(P) \ P`.
    pub fn sylow_of(&self, j: &SubgroupRef, p: u64) -> Result<SubgroupRef> {
        if !is_prime(p) {
            return Err(GroupError::Invalid(format!("{p} is not prime")));
        }
        let t = self.elements()?;
        let target = p_part(j.order(), p);
        let mut cur = self.trivial()?;
        while cur.order() < target {
            let n = self.normalizer_in(j, &cur)?;
            let x = n
                .ids()
                .find(|&x| !cur.contains_id(x) && prime_power_base(t.order_of(x) as u64) == Some(p))
                .expect("Sylow growth stalled");
            let members = t.extend(&cur.members, &cur.gens, &[x], None).unwrap();
            let mut gens = cur.gens.clone();
            gens.push(x);
            cur = self.make_ref(gens, members);
        }
        Ok(cur)
    }

    /// Every Sylow `p`-subgroup, in canonical order.
    pub fn all_sylow(&self, p: u64) -> Result<Vec<SubgroupRef>> {
        let s = self.sylow(p)?;
        self.conjugacy_class_of(&s)
    }

    /// All conjugates of `H` in canonical order.
    pub fn conjugacy_class_of(&self, h: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
        let gens = self.gen_ids()?;
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(h.members.clone());
        let mut out = vec![h.clone()];
        let mut i = 0;
        while i < out.len() {
            for &g in &gens {
                let c = self.conjugate(&out[i], g)?;
                if seen.insert(c.members.clone()) {
                    out.push(c);
                }
            }
            i += 1;
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::builders;

    #[test]
    fn s4_sylows() {
        let g = builders::symmetric(4);
        assert_eq!(g.sylow(2).unwrap().order(), 8);
        assert_eq!(g.sylow(3).unwrap().order(), 3);
        assert_eq!(g.sylow(5).unwrap().order(), 1);
        assert_eq!(g.all_sylow(2).unwrap().len(), 3);
        assert_eq!(g.all_sylow(3).unwrap().len(), 4);
    }

    #[test]
    fn abelian_has_one_sylow() {
        let g = builders::cyclic(12);
        for p in [2, 3] {
            assert_eq!(g.all_sylow(p).unwrap().len(), 1);
        }
    }

    #[test]
    fn sylow_counts_are_one_mod_p() {
        for g in [builders::alternating(5), builders::symmetric(5), builders::sl2(3)] {
            for p in crate::arith::prime_divisors(g.order()) {
                let all = g.all_sylow(p).unwrap();
                assert_eq!(all.len() as u64 % p, 1);
                assert_eq!(g.order() % all.len() as u64, 0);
                assert!(all.iter().all(|s| s.order() == crate::arith::p_part(g.order(), p)));
            }
        }
    }
}
