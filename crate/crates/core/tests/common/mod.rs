#![allow(dead_code)]

use std::sync::OnceLock;

use chiefs::{builders, ElemId, Group, SubgroupRef};
use proptest::prelude::*;
use proptest::sample::Index;

pub fn small_groups() -> &'static [(&'static str, Group)] {
    static GROUPS: OnceLock<Vec<(&'static str, Group)>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        vec![
            ("c1", builders::trivial()),
            ("c6", builders::cyclic(6)),
            ("s3", builders::symmetric(3)),
            ("d8", builders::dihedral(4)),
            ("q8", builders::quaternion(8)),
            ("c2^3", builders::elementary_abelian(2, 3)),
            ("a4", builders::alternating(4)),
            ("dic3", builders::dicyclic(3)),
            ("f20", builders::frobenius(5, 4)),
            ("f21", builders::frobenius(7, 3)),
            ("s4", builders::symmetric(4)),
            ("sl2_3", builders::sl2(3)),
            ("s3xc3", builders::direct_product(&builders::symmetric(3), &builders::cyclic(3))),
            ("s3xs3", builders::direct_product(&builders::symmetric(3), &builders::symmetric(3))),
            ("gl2_3", builders::gl2(3)),
            ("a5", builders::alternating(5)),
        ]
    })
}

/// A group from the pool with a subgroup generated by up to three random
/// elements.
pub fn group_and_subgroup() -> impl Strategy<Value = (usize, Vec<Index>)> {
    (0..small_groups().len(), prop::collection::vec(any::<Index>(), 0..3))
}

pub fn pick(gi: usize, picks: &[Index]) -> (&'static Group, SubgroupRef) {
    let g = &small_groups()[gi].1;
    let n = g.order() as usize;
    let ids: Vec<ElemId> = picks.iter().map(|i| i.index(n) as ElemId).collect();
    let h = g.subgroup_by_ids(&ids).unwrap();
    (g, h)
}

/// Normality by conjugating every member by every element.
pub fn brute_normal(g: &Group, h: &SubgroupRef) -> bool {
    let t = g.elements().unwrap();
    t.ids().all(|x| h.ids().all(|y| h.contains_id(t.conj(y, x))))
}
