//! The lattice of normal subgroups. Cover edges are exactly the chief
//! factors, so a chief series is a maximal chain from `1` to `G`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::arith::prime_power_base;
use crate::error::{GroupError, Result};
use crate::group::{Group, SubgroupRef};

pub type NodeId = usize;

pub struct NormalLattice {
    nodes: Vec<SubgroupRef>,
    up: Vec<Vec<NodeId>>,
    down: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
    index: HashMap<FixedBitSet, NodeId>,
}

/// Outcome of a filtered reachability query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachResult {
    pub verdict: bool,
    /// Node ids from source to target when `verdict` holds.
    pub witness: Vec<NodeId>,
    /// Nodes reachable from the source through accepted edges.
    pub frontier: Vec<NodeId>,
}

#[derive(Clone, Debug)]
pub struct ChiefFactor {
    pub lo: NodeId,
    pub hi: NodeId,
    pub order: u64,
    pub is_abelian: bool,
    pub prime: Option<u64>,
    pub centralizer: SubgroupRef,
}

impl NormalLattice {
    fn build(g: &Group) -> Result<NormalLattice> {
        let t = g.elements()?;
        let mut class_closures: Vec<SubgroupRef> = Vec::new();
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        for class in g.conjugacy_classes()?.iter().skip(1) {
            let m = t.closure(class);
            if seen.insert(m.clone(), ()).is_none() {
                class_closures.push(g.make_ref(class.clone(), m));
            }
        }
        let mut nodes = vec![g.trivial()?];
        let mut index: HashMap<FixedBitSet, NodeId> = HashMap::new();
        index.insert(nodes[0].members.clone(), 0);
        for c in &class_closures {
            if !index.contains_key(&c.members) {
                index.insert(c.members.clone(), nodes.len());
                nodes.push(c.clone());
            }
        }
        let mut i = 1;
        while i < nodes.len() {
            for c in &class_closures {
                if c.is_subgroup_of(&nodes[i]) {
                    continue;
                }
                let n = &nodes[i];
                let m = t.extend(&n.members, &n.gens, &c.gens, None).unwrap();
                if !index.contains_key(&m) {
                    let mut gens = n.gens.clone();
                    gens.extend(c.gens.iter().copied());
                    index.insert(m.clone(), nodes.len());
                    nodes.push(g.make_ref(gens, m));
                }
            }
            i += 1;
        }
        for n in &mut nodes {
            if n.gens.len() > 4 {
                *n = g.from_members(n.members.clone())?;
            }
        }
        nodes.sort();
        let index: HashMap<FixedBitSet, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.members.clone(), i))
            .collect();

        let count = nodes.len();
        let mut down: Vec<Vec<NodeId>> = vec![Vec::new(); count];
        for hi in 0..count {
            let mut covers: Vec<NodeId> = Vec::new();
            for lo in (0..hi).rev() {
                if nodes[lo].order >= nodes[hi].order || !nodes[lo].is_subgroup_of(&nodes[hi]) {
                    continue;
                }
                if covers.iter().all(|&c| !nodes[lo].is_subgroup_of(&nodes[c])) {
                    covers.push(lo);
                }
            }
            covers.sort_unstable();
            down[hi] = covers;
        }
        let mut up: Vec<Vec<NodeId>> = vec![Vec::new(); count];
        let mut edges = Vec::new();
        for (hi, los) in down.iter().enumerate() {
            for &lo in los {
                up[lo].push(hi);
                edges.push((lo, hi));
            }
        }
        for u in &mut up {
            u.sort_unstable();
        }
        edges.sort_unstable();
        Ok(NormalLattice {
            nodes,
            up,
            down,
            edges,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubgroupRef] {
        &self.nodes
    }

    pub fn node(&self, i: NodeId) -> &SubgroupRef {
        &self.nodes[i]
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn covers_above(&self, lo: NodeId) -> &[NodeId] {
        &self.up[lo]
    }

    pub fn covers_below(&self, hi: NodeId) -> &[NodeId] {
        &self.down[hi]
    }

    pub fn node_of(&self, h: &SubgroupRef) -> Option<NodeId> {
        self.index.get(&h.members).copied()
    }

    pub fn is_cover(&self, lo: NodeId, hi: NodeId) -> bool {
        self.down[hi].binary_search(&lo).is_ok()
    }

    pub fn contains(&self, lo: NodeId, hi: NodeId) -> bool {
        self.nodes[lo].is_subgroup_of(&self.nodes[hi])
    }

    pub fn minimal_normals(&self) -> Vec<NodeId> {
        if self.nodes.len() == 1 {
            return Vec::new();
        }
        self.up[0].clone()
    }

    /// Whether `target` can be reached from `source` by accepted cover
    /// edges. The witness always steps to the smallest eligible node.
    pub fn reach_between(
        &self,
        source: NodeId,
        target: NodeId,
        mut accept: impl FnMut(NodeId, NodeId) -> bool,
    ) -> ReachResult {
        let n = self.nodes.len();
        let in_range = |v: NodeId| self.contains(source, v) && self.contains(v, target);
        let mut good: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for v in 0..n {
            if !in_range(v) {
                continue;
            }
            for &w in &self.up[v] {
                if in_range(w) && accept(v, w) {
                    good[v].push(w);
                }
            }
        }
        // Edges increase the order, so descending index is a reverse
        // topological order.
        let mut to_target = vec![false; n];
        to_target[target] = true;
        for v in (0..n).rev() {
            if !to_target[v] {
                to_target[v] = good[v].iter().any(|&w| to_target[w]);
            }
        }
        let mut reached = vec![false; n];
        reached[source] = true;
        for v in 0..n {
            if reached[v] {
                for &w in &good[v] {
                    reached[w] = true;
                }
            }
        }
        let frontier: Vec<NodeId> = (0..n).filter(|&v| reached[v]).collect();
        if !to_target[source] {
            return ReachResult {
                verdict: false,
                witness: Vec::new(),
                frontier,
            };
        }
        let mut witness = vec![source];
        let mut v = source;
        while v != target {
            v = *good[v].iter().find(|&&w| to_target[w]).unwrap();
            witness.push(v);
        }
        ReachResult {
            verdict: true,
            witness,
            frontier,
        }
    }

    pub fn reach(&self, accept: impl FnMut(NodeId, NodeId) -> bool) -> ReachResult {
        self.reach_between(self.bottom(), self.top(), accept)
    }

    /// Number of maximal chains, saturating.
    pub fn chain_count(&self) -> u128 {
        let n = self.nodes.len();
        let mut ways = vec![0u128; n];
        ways[self.top()] = 1;
        for v in (0..n).rev() {
            for &w in &self.up[v] {
                ways[v] = ways[v].saturating_add(ways[w]);
            }
        }
        ways[0]
    }

    /// Visits every maximal chain `1 = G_0 < … < G_n = G`; refuses when the
    /// chain count exceeds `cap`.
    pub fn for_each_maximal_chain(&self, cap: u64, mut visit: impl FnMut(&[NodeId])) -> Result<u64> {
        let count = self.chain_count();
        if count > cap as u128 {
            return Err(GroupError::CapExceeded {
                what: "maximal chains",
                limit: cap,
                actual: count.min(u64::MAX as u128) as u64,
            });
        }
        let mut path = vec![0];
        self.dfs(&mut path, &mut visit);
        Ok(count as u64)
    }

    fn dfs(&self, path: &mut Vec<NodeId>, visit: &mut impl FnMut(&[NodeId])) {
        let v = *path.last().unwrap();
        if v == self.top() {
            visit(path);
            return;
        }
        for &w in &self.up[v] {
            path.push(w);
            self.dfs(path, visit);
            path.pop();
        }
    }

    pub fn all_maximal_chains(&self, cap: u64) -> Result<Vec<Vec<NodeId>>> {
        let mut out = Vec::new();
        self.for_each_maximal_chain(cap, |c| out.push(c.to_vec()))?;
        Ok(out)
    }

    /// Sorted chief-factor orders along a chain.
    pub fn factor_orders(&self, chain: &[NodeId]) -> Vec<u64> {
        let mut v: Vec<u64> = chain
            .windows(2)
            .map(|w| self.nodes[w[1]].order / self.nodes[w[0]].order)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Factor orders of the deterministic chain through smallest nodes.
    pub fn jh_multiset(&self) -> Vec<u64> {
        let chain = self.reach(|_, _| true).witness;
        self.factor_orders(&chain)
    }
}

impl Group {
    pub fn normal_lattice(&self) -> Result<&NormalLattice> {
        if let Some(l) = self.lattice.get() {
            return Ok(l);
        }
        let built = NormalLattice::build(self)?;
        Ok(self.lattice.get_or_init(|| built))
    }

    pub fn minimal_normals(&self) -> Result<Vec<SubgroupRef>> {
        let l = self.normal_lattice()?;
        Ok(l.minimal_normals().into_iter().map(|i| l.node(i).clone()).collect())
    }

    /// Decorates the cover edge `(lo, hi)`.
    pub fn chief_factor(&self, lo: NodeId, hi: NodeId) -> Result<ChiefFactor> {
        let l = self.normal_lattice()?;
        if !l.is_cover(lo, hi) {
            return Err(GroupError::Invalid(format!("({lo}, {hi}) is not a cover edge")));
        }
        let t = self.elements()?;
        let (k, m) = (l.node(lo), l.node(hi));
        let order = m.order / k.order;
        let is_abelian = m
            .gens
            .iter()
            .all(|&x| m.gens.iter().all(|&y| k.contains_id(t.comm(x, y))));
        let mut cent = t.empty_set();
        for g in t.ids() {
            if m.gens.iter().all(|&h| k.contains_id(t.comm(g, h))) {
                cent.insert(g as usize);
            }
        }
        Ok(ChiefFactor {
            lo,
            hi,
            order,
            is_abelian,
            prime: prime_power_base(order),
            centralizer: self.from_members(cent)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    fn orders(g: &Group) -> Vec<u64> {
        g.normal_lattice().unwrap().nodes().iter().map(|n| n.order()).collect()
    }

    fn brute_normals(g: &Group) -> Vec<SubgroupRef> {
        g.catalog()
            .unwrap()
            .subgroups()
            .iter()
            .filter(|h| g.is_normal(h).unwrap())
            .cloned()
            .collect()
    }

    #[test]
    fn small_lattices() {
        let a4 = builders::alternating(4);
        assert_eq!(orders(&a4), vec![1, 4, 12]);
        assert_eq!(a4.normal_lattice().unwrap().edges(), &[(0, 1), (1, 2)]);
        let s4 = builders::symmetric(4);
        assert_eq!(orders(&s4), vec![1, 4, 12, 24]);
        assert_eq!(s4.normal_lattice().unwrap().all_maximal_chains(1000).unwrap().len(), 1);
        assert_eq!(s4.normal_lattice().unwrap().jh_multiset(), vec![4, 3, 2]);
        let a5 = builders::alternating(5);
        assert_eq!(orders(&a5), vec![1, 60]);
        assert_eq!(a5.normal_lattice().unwrap().jh_multiset(), vec![60]);
        let v4 = builders::elementary_abelian(2, 2);
        let l = v4.normal_lattice().unwrap();
        assert_eq!(l.all_maximal_chains(1000).unwrap().len(), 3);
        assert_eq!(l.minimal_normals().len(), 3);
        assert_eq!(builders::cyclic(6).normal_lattice().unwrap().jh_multiset(), vec![3, 2]);
    }

    #[test]
    fn matches_brute_force() {
        for g in [
            builders::symmetric(4),
            builders::dihedral(4),
            builders::quaternion(8),
            builders::elementary_abelian(2, 3),
            builders::direct_product(&builders::symmetric(3), &builders::symmetric(3)),
            builders::gl2(3),
        ] {
            let l = g.normal_lattice().unwrap();
            assert_eq!(l.nodes(), brute_normals(&g).as_slice());
        }
    }

    #[test]
    fn chief_factors_of_s4() {
        let g = builders::symmetric(4);
        let f = g.chief_factor(0, 1).unwrap();
        assert_eq!((f.order, f.is_abelian, f.prime), (4, true, Some(2)));
        assert_eq!(f.centralizer.order(), 4);
        let f = g.chief_factor(2, 3).unwrap();
        assert_eq!((f.order, f.centralizer.order()), (2, 24));
        assert!(g.chief_factor(0, 2).is_err());
        let a5 = builders::alternating(5);
        let f = a5.chief_factor(0, 1).unwrap();
        assert_eq!((f.order, f.is_abelian, f.centralizer.order()), (60, false, 1));
    }

    #[test]
    fn reach_filters_edges() {
        let g = builders::elementary_abelian(2, 2);
        let l = g.normal_lattice().unwrap();
        assert!(l.reach(|_, _| true).verdict);
        let r = l.reach(|_, _| false);
        assert!(!r.verdict);
        assert_eq!(r.frontier, vec![0]);
        // Forbid everything through the smallest atom: the witness moves on
        // to the next one.
        let r = l.reach(|lo, hi| lo != 1 && hi != 1);
        assert_eq!(r.witness, vec![0, 2, 4]);
        assert!(l.for_each_maximal_chain(2, |_| {}).is_err());
    }

    #[test]
    fn jordan_holder_across_chains() {
        let g = builders::direct_product(&builders::symmetric(3), &builders::cyclic(6));
        let l = g.normal_lattice().unwrap();
        let expected = l.jh_multiset();
        let n = l
            .for_each_maximal_chain(1_000_000, |c| assert_eq!(l.factor_orders(c), expected))
            .unwrap();
        assert!(n > 1);
    }
}
