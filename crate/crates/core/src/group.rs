//! Generated permutation groups and their subgroups.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Mutex, OnceLock};

use fixedbitset::FixedBitSet;
use sha2::{Digest, Sha256};

use crate::elements::{ElemId, ElementTable};
use crate::enumerate::SubgroupCatalog;
use crate::error::{GroupError, Result};
use crate::lattice::NormalLattice;
use crate::perm::Permutation;
use crate::schreier::StabChain;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Size limits. Anything that needs the full element list refuses groups
/// above `max_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_order: u64,
    pub hard_order: u64,
    pub max_chains: u64,
    pub max_quotient_degree: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 20_000,
            hard_order: 1 << 62,
            max_chains: 1_000_000,
            max_quotient_degree: 20_000,
        }
    }
}

#[derive(Default)]
pub(crate) struct Memo {
    pub normalizers: HashMap<FixedBitSet, SubgroupRef>,
    pub predicates: HashMap<(crate::embeddings::PredicateId, FixedBitSet), bool>,
    pub f_central: HashMap<(usize, usize, crate::classify::FormationTag), bool>,
    pub hypercentre: HashMap<crate::classify::FormationTag, crate::classify::Hypercentre>,
    pub families: HashMap<&'static str, Vec<usize>>,
}

/// An immutable permutation group. Derived data (element table, classes,
/// normal lattice, subgroup catalog) is computed once on first use.
pub struct Group {
    id: u64,
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
    order: u64,
    caps: Caps,
    table: OnceLock<ElementTable>,
    classes: OnceLock<Vec<Vec<ElemId>>>,
    pub(crate) lattice: OnceLock<NormalLattice>,
    pub(crate) catalog: OnceLock<SubgroupCatalog>,
    pub(crate) memo: Mutex<Memo>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Group {
    pub fn generate(degree: usize, gens: Vec<Permutation>) -> Result<Group> {
        Self::with_caps(degree, gens, Caps::default())
    }

    pub fn with_caps(degree: usize, gens: Vec<Permutation>, caps: Caps) -> Result<Group> {
        if degree == 0 {
            return Err(GroupError::Invalid("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, &gens);
        let order = chain.order().ok_or(GroupError::CapExceeded {
            what: "group order",
            limit: caps.hard_order,
            actual: u64::MAX,
        })?;
        if order > caps.hard_order {
            return Err(GroupError::CapExceeded {
                what: "group order",
                limit: caps.hard_order,
                actual: order,
            });
        }
        Ok(Group {
            id: NEXT_GROUP_ID.fetch_add(1, AtomicOrdering::Relaxed),
            degree,
            gens,
            chain,
            order,
            caps,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            lattice: OnceLock::new(),
            catalog: OnceLock::new(),
            memo: Mutex::new(Memo::default()),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain.contains(g))
    }

    pub(crate) fn check_cap(&self, what: &'static str) -> Result<()> {
        if self.order > self.caps.max_order {
            return Err(GroupError::CapExceeded {
                what,
                limit: self.caps.max_order,
                actual: self.order,
            });
        }
        Ok(())
    }

    /// The full element table (requires `order <= caps.max_order`).
    pub fn elements(&self) -> Result<&ElementTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        self.check_cap("group order")?;
        Ok(self
            .table
            .get_or_init(|| ElementTable::new(self.chain.elements(), &self.gens)))
    }

    pub fn id_of(&self, g: &Permutation) -> Result<ElemId> {
        if !self.contains(g)? {
            return Err(GroupError::NotMember(g.to_string()));
        }
        Ok(self.elements()?.id_of(g).unwrap())
    }

    pub(crate) fn gen_ids(&self) -> Result<Vec<ElemId>> {
        let t = self.elements()?;
        Ok(self
            .gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| t.id_of(g).unwrap())
            .collect())
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Result<&[Vec<ElemId>]> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let t = self.elements()?;
        let gens = self.gen_ids()?;
        let classes = self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; t.len()];
            let mut out: Vec<Vec<ElemId>> = Vec::new();
            for x in t.ids() {
                if class_of[x as usize] != usize::MAX {
                    continue;
                }
                let ci = out.len();
                class_of[x as usize] = ci;
                let mut class = vec![x];
                let mut i = 0;
                while i < class.len() {
                    let y = class[i];
                    for &g in &gens {
                        let z = t.conj(y, g);
                        if class_of[z as usize] == usize::MAX {
                            class_of[z as usize] = ci;
                            class.push(z);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                out.push(class);
            }
            out
        });
        Ok(classes)
    }

    pub fn element_order(g: &Permutation) -> u64 {
        g.order()
    }

    /// SHA-256 over the sorted element image tables.
    pub fn canonical_digest(&self) -> Result<String> {
        let t = self.elements()?;
        let mut h = Sha256::new();
        h.update((self.degree as u64).to_le_bytes());
        for x in t.ids() {
            for &img in t.perm(x).images() {
                h.update(img.to_le_bytes());
            }
        }
        Ok(hex::encode(h.finalize()))
    }

    // ---- subgroup construction ----

    pub fn whole(&self) -> Result<SubgroupRef> {
        let gens = self.gen_ids()?;
        let mut members = self.elements()?.empty_set();
        members.insert_range(..);
        Ok(self.make_ref(gens, members))
    }

    pub fn trivial(&self) -> Result<SubgroupRef> {
        Ok(self.make_ref(Vec::new(), self.elements()?.trivial_set()))
    }

    pub(crate) fn make_ref(&self, gens: Vec<ElemId>, members: FixedBitSet) -> SubgroupRef {
        let order = members.count_ones(..) as u64;
        let gens = gens.into_iter().filter(|&g| g != 0).collect();
        SubgroupRef {
            parent: self.id,
            gens,
            members,
            order,
        }
    }

    /// Subgroup generated by permutations, each of which must lie in the group.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<SubgroupRef> {
        let ids = gens
            .iter()
            .map(|g| self.id_of(g))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_by_ids(&ids)
    }

    pub fn subgroup_by_ids(&self, ids: &[ElemId]) -> Result<SubgroupRef> {
        let t = self.elements()?;
        Ok(self.make_ref(ids.to_vec(), t.closure(ids)))
    }

    /// Wraps a member set already known to be a subgroup, choosing a small
    /// generating set greedily in element order.
    pub fn from_members(&self, members: FixedBitSet) -> Result<SubgroupRef> {
        let t = self.elements()?;
        let mut gens = Vec::new();
        let mut cur = t.trivial_set();
        let target = members.count_ones(..);
        for x in members.ones() {
            if cur.count_ones(..) == target {
                break;
            }
            if !cur.contains(x) {
                let g = x as ElemId;
                cur = t.extend(&cur, &gens, &[g], None).unwrap();
                gens.push(g);
            }
        }
        debug_assert_eq!(cur, members);
        Ok(self.make_ref(gens, members))
    }

    pub(crate) fn check_parent(&self, h: &SubgroupRef) -> Result<()> {
        if h.parent != self.id {
            return Err(GroupError::ForeignSubgroup);
        }
        Ok(())
    }

    pub fn generators_of(&self, h: &SubgroupRef) -> Result<Vec<Permutation>> {
        let t = self.elements()?;
        Ok(h.gens.iter().map(|&g| t.perm(g).clone()).collect())
    }

    /// Generators depending only on the member set: the greedy choice of
    /// `from_members`.
    pub fn canonical_generators(&self, h: &SubgroupRef) -> Result<Vec<Permutation>> {
        self.check_parent(h)?;
        self.generators_of(&self.from_members(h.members().clone())?)
    }

    /// The subgroup as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, h: &SubgroupRef) -> Result<Group> {
        self.check_parent(h)?;
        Group::with_caps(self.degree, self.generators_of(h)?, self.caps)
    }

    /// Maps a subgroup of `sub` (a group built by `subgroup_as_group`) back
    /// into this group.
    pub fn embed(&self, sub: &Group, k: &SubgroupRef) -> Result<SubgroupRef> {
        let perms = sub.generators_of(k)?;
        self.subgroup(&perms)
    }

    /// Maps a subgroup of this group into `sub`, which must contain it.
    pub fn restrict_to(&self, sub: &Group, k: &SubgroupRef) -> Result<SubgroupRef> {
        let perms = self.generators_of(k)?;
        sub.subgroup(&perms)
    }
}

/// A subgroup of an enumerated group: member set over element ids plus a
/// generating set. Identity is decided by the member set.
#[derive(Clone, Debug)]
pub struct SubgroupRef {
    pub(crate) parent: u64,
    pub(crate) gens: Vec<ElemId>,
    pub(crate) members: FixedBitSet,
    pub(crate) order: u64,
}

impl SubgroupRef {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn gens(&self) -> &[ElemId] {
        &self.gens
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains_id(&self, x: ElemId) -> bool {
        self.members.contains(x as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRef) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.members.ones().map(|x| x as ElemId)
    }

    /// Lexicographic comparison of the sorted member ids.
    pub fn key_cmp(&self, other: &SubgroupRef) -> Ordering {
        self.members.ones().cmp(other.members.ones())
    }

    /// SHA-256 over the sorted member ids, hex encoded.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for x in self.members.ones() {
            h.update((x as u32).to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for SubgroupRef {}

impl Hash for SubgroupRef {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for SubgroupRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then by sorted member ids.
impl Ord for SubgroupRef {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.key_cmp(other))
    }
}
