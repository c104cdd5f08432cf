//! Finite permutation groups with full multiplication tables.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::cyclo::table::lcm;
use crate::cyclo::CycNum;

pub mod lattice;
pub mod named;
mod perm;
mod subgroup;

pub use lattice::{
    chief_step, elementary_mod_n, is_elementary, is_nilpotent, is_nilpotent_quotient,
    normal_subgroups, normal_subgroups_containing, quotient_map, subgroup_classes, Quotient,
};
pub use perm::Perm;
pub use subgroup::Subgroup;

pub const DEFAULT_ORDER_BOUND: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order exceeds the bound {0}")]
    OrderBoundExceeded(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of the given group")]
    NotSubgroup,
    #[error("no proper step: the two normal subgroups coincide")]
    NoProperStep,
    #[error("chief factor of non-prime order {0}")]
    PrimalityViolated(usize),
    #[error("objects belong to different groups")]
    GroupMismatch,
}

pub type Group = Arc<FiniteGroup>;

#[derive(Default)]
pub(crate) struct GroupCache {
    pub char_table: OnceLock<Vec<Vec<CycNum>>>,
    pub subgroup_classes: OnceLock<Vec<lattice::ClassData>>,
}

/// A permutation group together with its element list (sorted
/// lexicographically, so the identity has index 0), multiplication table,
/// conjugacy classes and a spanning tree expressing each element as a word in
/// the generators.
pub struct FiniteGroup {
    degree: usize,
    name: Option<String>,
    gen_perms: Vec<Perm>,
    gens: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    tree: Vec<(u32, u32)>,
    exponent: u64,
    pub(crate) cache: GroupCache,
}

impl FiniteGroup {
    pub fn from_generators(
        degree: usize,
        gens: Vec<Perm>,
        name: Option<String>,
    ) -> Result<Group, GroupError> {
        Self::from_generators_bounded(degree, gens, name, DEFAULT_ORDER_BOUND)
    }

    pub fn from_generators_bounded(
        degree: usize,
        gens: Vec<Perm>,
        name: Option<String>,
        bound: usize,
    ) -> Result<Group, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "{g} has degree {} but the group acts on {degree} points",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = x.compose(s);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(GroupError::OrderBoundExceeded(bound));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Perm, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let mul = |a: usize, b: usize| index[&elements[a].compose(&elements[b])] as usize;
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b) as u32);
            }
        }
        Ok(Arc::new(Self::assemble(degree, name, gens, elements, table)))
    }

    /// Build all derived data from a sorted element list and its multiplication table.
    pub(crate) fn assemble(
        degree: usize,
        name: Option<String>,
        gen_perms: Vec<Perm>,
        elements: Vec<Perm>,
        mul: Vec<u32>,
    ) -> FiniteGroup {
        let n = elements.len();
        let index: HashMap<Perm, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let gens: Vec<usize> = gen_perms.iter().map(|p| index[p] as usize).collect();
        let m = |a: usize, b: usize| mul[a * n + b] as usize;

        let inv: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();

        let mut orders = vec![1u32; n];
        for a in 1..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = m(x, a);
                k += 1;
            }
            orders[a] = k;
        }
        let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));

        let mut tree = vec![(u32::MAX, u32::MAX); n];
        tree[0] = (0, u32::MAX);
        let mut queue = VecDeque::from([0usize]);
        let mut reached = vec![false; n];
        reached[0] = true;
        while let Some(x) = queue.pop_front() {
            for (gi, &s) in gens.iter().enumerate() {
                let y = m(x, s);
                if !reached[y] {
                    reached[y] = true;
                    tree[y] = (x as u32, gi as u32);
                    queue.push_back(y);
                }
            }
        }

        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = vec![a];
            class_of[a] = c;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &s in &gens {
                    let y = m(m(s, x), inv[s] as usize);
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }

        FiniteGroup {
            degree,
            name,
            gen_perms,
            gens,
            elements,
            index,
            mul,
            inv,
            orders,
            classes,
            class_of,
            tree,
            exponent,
            cache: GroupCache::default(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Generator element indices, in the order given at construction.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn generator_perms(&self) -> &[Perm] {
        &self.gen_perms
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a] as i64;
        let e = k.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `g·x·g⁻¹`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.commutes(a, b)))
    }

    /// Conjugacy classes as sorted member lists, ordered by least member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The least member of each class.
    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order() / self.classes[class].len()
    }

    /// Class containing the `k`-th powers of the members of `class`.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        self.class_of(self.pow(self.classes[class][0], k))
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.class_of(self.inv(self.classes[class][0]))
    }

    /// For a non-identity element, the tree parent `p` and generator slot `j`
    /// with `a = p · gens[j]`.
    pub fn tree_parent(&self, a: usize) -> Option<(usize, usize)> {
        if a == 0 {
            return None;
        }
        let (p, g) = self.tree[a];
        Some((p as usize, g as usize))
    }

    /// Generator slots whose product, left to right, equals `a`.
    pub fn word(&self, mut a: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.tree_parent(a) {
            w.push(g);
            a = p;
        }
        w.reverse();
        w
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Same permutation group (same degree and element set).
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.elements == other.elements && self.gen_perms == other.gen_perms)
    }

}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(order {}, degree {})",
            self.name.as_deref().unwrap_or("Group"),
            self.order(),
            self.degree
        )
    }
}
