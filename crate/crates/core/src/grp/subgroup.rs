use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{FiniteGroup, Group, GroupError, Perm};

/// A subgroup of a parent group, stored as a sorted list of parent element
/// indices. Its own [`FiniteGroup`] (whose element `i` is parent element
/// `elements[i]`) is built on first use.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    elements: Arc<Vec<usize>>,
    gens: Vec<usize>,
    own: Arc<OnceLock<Group>>,
}

/// Greedy generating set: scan elements in index order, keep those outside
/// the span of the ones kept so far.
pub(crate) fn greedy_generators(parent: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    for &x in elements.iter().skip(1) {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = parent.closure(&gens);
            if span.len() == elements.len() {
                break;
            }
        }
    }
    gens
}

impl Subgroup {
    pub fn generated(parent: &Group, gens: &[usize]) -> Subgroup {
        let elements = parent.closure(gens);
        Self::from_sorted(parent, elements)
    }

    pub fn from_perms(parent: &Group, gens: &[Perm]) -> Result<Subgroup, GroupError> {
        let idx = gens
            .iter()
            .map(|p| parent.index_of(p).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::generated(parent, &idx))
    }

    /// `elements` must be a sorted, closed subset of the parent. The whole
    /// group keeps the parent's generators and is its own group.
    pub(crate) fn from_sorted(parent: &Group, elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        if elements.len() == parent.order() {
            let own = OnceLock::new();
            let _ = own.set(parent.clone());
            return Subgroup {
                parent: parent.clone(),
                elements: Arc::new(elements),
                gens: parent.generators().to_vec(),
                own: Arc::new(own),
            };
        }
        let gens = greedy_generators(parent, &elements);
        Subgroup {
            parent: parent.clone(),
            elements: Arc::new(elements),
            gens,
            own: Arc::new(OnceLock::new()),
        }
    }

    pub fn whole(parent: &Group) -> Subgroup {
        Self::from_sorted(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Group) -> Subgroup {
        Self::from_sorted(parent, vec![0])
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// Parent indices, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Canonical generators (parent indices).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.gens.iter().map(|&g| self.parent.element(g).clone()).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.elements[local]
    }

    pub fn to_local(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The subgroup as a group in its own right.
    pub fn group(&self) -> Group {
        self.own
            .get_or_init(|| {
                let n = self.order();
                let p = &self.parent;
                let mut mul = Vec::with_capacity(n * n);
                for &a in self.elements.iter() {
                    for &b in self.elements.iter() {
                        let c = p.mul(a, b);
                        mul.push(self.elements.binary_search(&c).expect("closed") as u32);
                    }
                }
                let elements = self.elements.iter().map(|&i| p.element(i).clone()).collect();
                Arc::new(FiniteGroup::assemble(
                    p.degree(),
                    None,
                    self.generator_perms(),
                    elements,
                    mul,
                ))
            })
            .clone()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order()
            && other.order() % self.order() == 0
            && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let p = &self.parent;
        p.generators().iter().all(|&s| {
            self.gens.iter().all(|&h| self.contains(p.conjugate(h, s)))
        })
    }

    /// Normal in the subgroup `outer` (which must contain `self`).
    pub fn is_normal_in(&self, outer: &Subgroup) -> bool {
        let p = &self.parent;
        outer.gens.iter().all(|&s| {
            self.gens.iter().all(|&h| self.contains(p.conjugate(h, s)))
        })
    }

    /// `g·H·g⁻¹`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut els: Vec<usize> =
            self.elements.iter().map(|&x| self.parent.conjugate(x, g)).collect();
        els.sort_unstable();
        Self::from_sorted(&self.parent, els)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted(&self.parent, els)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Self::generated(&self.parent, &gens)
    }

    /// Normal closure in the parent.
    pub fn normal_closure(&self) -> Subgroup {
        let p = &self.parent;
        let mut gens: Vec<usize> = self.gens.clone();
        let mut cur = Self::generated(p, &gens);
        loop {
            let extra: Vec<usize> = cur
                .gens
                .iter()
                .flat_map(|&h| p.generators().iter().map(move |&s| (h, s)))
                .map(|(h, s)| p.conjugate(h, s))
                .filter(|&y| !cur.contains(y))
                .collect();
            if extra.is_empty() {
                return cur;
            }
            gens = cur.gens.clone();
            gens.extend(extra);
            cur = Self::generated(p, &gens);
        }
    }

    /// View a subgroup of `self.group()` as a subgroup of the parent.
    pub fn lift(&self, inner: &Subgroup) -> Subgroup {
        debug_assert!(inner.parent.same_as(&self.group()));
        let els = inner.elements.iter().map(|&i| self.elements[i]).collect();
        Self::from_sorted(&self.parent, els)
    }

    /// View `self` (a subgroup of the common parent contained in `outer`) as a
    /// subgroup of `outer.group()`.
    pub fn within(&self, outer: &Subgroup) -> Result<Subgroup, GroupError> {
        let els = self
            .elements
            .iter()
            .map(|&x| outer.to_local(x).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_sorted(&outer.group(), els))
    }

    /// Sort key: order, then canonical generators.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.order(), self.gens.clone())
    }
}

pub(crate) fn bits_of(n: usize, elements: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &x in elements {
        b[x / 64] |= 1 << (x % 64);
    }
    b
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generator_perms().iter().map(Perm::to_string).collect();
        write!(f, "Subgroup(order {}, <{}>)", self.order(), gens.join(", "))
    }
}
