mod common;

use std::collections::{HashSet, VecDeque};

use chiefs::arith::{p_part, prime_divisors};
use chiefs::{builders, Group, Permutation};
use common::{group_and_subgroup, pick, small_groups};
use proptest::prelude::*;
use proptest::sample::Index;

fn naive_order(g: &Group) -> u64 {
    let id = Permutation::identity(g.degree());
    let mut seen = HashSet::from([id.clone()]);
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

#[test]
fn chain_order_matches_closure() {
    for (name, g) in small_groups() {
        assert_eq!(g.order(), naive_order(g), "{name}");
    }
    let ex = builders::example_group();
    assert_eq!(ex.group.order(), 1875);
    assert_eq!(naive_order(&ex.group), 1875);
}

#[test]
fn builder_orders() {
    let cases = [
        (builders::cyclic(12), 12),
        (builders::dihedral(6), 12),
        (builders::symmetric(5), 120),
        (builders::alternating(6), 360),
        (builders::elementary_abelian(3, 3), 27),
        (builders::dicyclic(4), 16),
        (builders::quaternion(16), 16),
        (builders::frobenius(11, 5), 55),
        (builders::sl2(5), 120),
        (builders::gl2(3), 48),
    ];
    for (g, n) in cases {
        assert_eq!(g.order(), n);
    }
}

#[test]
fn subgroup_counts() {
    for (g, n) in [
        (builders::symmetric(3), 6),
        (builders::cyclic(6), 4),
        (builders::quaternion(8), 6),
        (builders::dihedral(4), 10),
        (builders::symmetric(4), 30),
        (builders::alternating(5), 59),
    ] {
        assert_eq!(g.catalog().unwrap().len(), n, "order {}", g.order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lagrange((gi, picks) in group_and_subgroup()) {
        let (g, h) = pick(gi, &picks);
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(h.members().count_ones(..) as u64, h.order());
    }

    #[test]
    fn set_product_formula((gi, a) in group_and_subgroup(), b in prop::collection::vec(any::<Index>(), 0..3)) {
        let (g, h) = pick(gi, &a);
        let (_, k) = pick(gi, &b);
        let sp = g.set_product(&h, &k).unwrap();
        let hk = g.intersect(&h, &k).unwrap();
        prop_assert_eq!(sp.size, h.order() * k.order() / hk.order());
        let t = g.elements().unwrap();
        let brute: HashSet<u32> = h.ids().flat_map(|x| k.ids().map(move |y| t.mul(x, y))).collect();
        prop_assert_eq!(brute.len() as u64, sp.size);
        prop_assert_eq!(sp.is_subgroup, g.permutes(&h, &k).unwrap());
        prop_assert_eq!(sp.is_subgroup, sp.size == g.join(&h, &k).unwrap().order());
    }

    #[test]
    fn normalizer_and_centralizer_by_definition((gi, picks) in group_and_subgroup()) {
        let (g, h) = pick(gi, &picks);
        let t = g.elements().unwrap();
        let n = g.normalizer(&h).unwrap();
        for x in t.ids() {
            let normalizes = h.ids().all(|y| h.contains_id(t.conj(y, x)));
            prop_assert_eq!(n.contains_id(x), normalizes);
        }
        let gens: Vec<u32> = h.ids().collect();
        let c = g.centralizer(&gens).unwrap();
        for x in t.ids() {
            let commutes = gens.iter().all(|&y| t.mul(x, y) == t.mul(y, x));
            prop_assert_eq!(c.contains_id(x), commutes);
        }
        prop_assert_eq!(g.is_normal(&h).unwrap(), common::brute_normal(g, &h));
    }

    #[test]
    fn core_and_closure_bracket((gi, picks) in group_and_subgroup()) {
        let (g, h) = pick(gi, &picks);
        let (core, closure) = g.core_and_closure(&h).unwrap();
        prop_assert!(core.is_subgroup_of(&h) && h.is_subgroup_of(&closure));
        prop_assert!(common::brute_normal(g, &core) && common::brute_normal(g, &closure));
    }

    #[test]
    fn quotient_is_a_homomorphism(gi in 0..small_groups().len(), ni in any::<Index>(), pairs in prop::collection::vec((any::<Index>(), any::<Index>()), 100)) {
        let g = &small_groups()[gi].1;
        let l = g.normal_lattice().unwrap();
        let n = l.node(ni.index(l.len()));
        let q = g.quotient(n).unwrap();
        prop_assert_eq!(q.target().order() * n.order(), g.order());
        prop_assert_eq!(q.kernel(), n);
        let t = g.elements().unwrap();
        let tt = q.target().elements().unwrap();
        for (a, b) in pairs {
            let (x, y) = (a.index(t.len()) as u32, b.index(t.len()) as u32);
            prop_assert_eq!(q.map(t.mul(x, y)), tt.mul(q.map(x), q.map(y)));
        }
        for x in t.ids() {
            prop_assert_eq!(q.map(x) == 0, n.contains_id(x));
        }
    }

    #[test]
    fn sylow_subgroups(gi in 0..small_groups().len()) {
        let g = &small_groups()[gi].1;
        for p in prime_divisors(g.order()) {
            let s = g.sylow(p).unwrap();
            prop_assert_eq!(s.order(), p_part(g.order(), p));
            let all = g.all_sylow(p).unwrap();
            prop_assert_eq!(all.len() as u64 % p, 1);
            prop_assert_eq!(g.order() % all.len() as u64, 0);
            prop_assert_eq!(all.len() as u64, g.order() / g.normalizer(&s).unwrap().order());
        }
    }
}

#[test]
fn caps_refuse_large_enumeration() {
    let caps = chiefs::Caps { max_order: 50, ..chiefs::Caps::default() };
    let g = Group::with_caps(5, builders::symmetric(5).generators().to_vec(), caps).unwrap();
    assert_eq!(g.order(), 120);
    assert!(g.elements().is_err_and(|e| e.is_cap()));
    assert!(g.normal_lattice().is_err_and(|e| e.is_cap()));
}
