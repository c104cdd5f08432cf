//! Subgroup lattice navigation: conjugacy classes of subgroups, normal
//! subgroups, quotients, nilpotency and elementary subgroups modulo a normal
//! subgroup.

use std::collections::HashSet;
use std::sync::Arc;

use super::subgroup::{bits_of, greedy_generators as greedy};
use super::{FiniteGroup, Group, GroupError, Perm, Subgroup};
use crate::cyclo::table::prime_factors;

#[derive(Clone, Debug)]
pub(crate) struct ClassData {
    pub elements: Vec<usize>,
    pub normal: bool,
}

fn is_prime_power(mut n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = prime_factors(n as u64)[0] as usize;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

struct Enumeration<'a> {
    g: &'a FiniteGroup,
    seen: HashSet<Vec<u64>>,
    reps: Vec<(Vec<usize>, Vec<usize>, bool)>,
}

impl Enumeration<'_> {
    /// Record the conjugacy class of `els` if new; returns its slot.
    fn register(&mut self, els: Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        if self.seen.contains(&bits_of(n, &els)) {
            return None;
        }
        let mut local: HashSet<Vec<u64>> = HashSet::new();
        let mut best = els.clone();
        for c in 0..n {
            let mut conj: Vec<usize> = els.iter().map(|&x| self.g.conjugate(x, c)).collect();
            conj.sort_unstable();
            if local.insert(bits_of(n, &conj)) && conj < best {
                best = conj;
            }
        }
        let normal = local.len() == 1;
        self.seen.extend(local);
        let gens = greedy(self.g, &best);
        self.reps.push((best, gens, normal));
        Some(self.reps.len() - 1)
    }
}

/// Bottom-up: every subgroup is generated by elements of prime-power order,
/// so joining class representatives with prime-power cyclic subgroups reaches
/// every class.
fn compute_classes(g: &FiniteGroup) -> Vec<ClassData> {
    let n = g.order();
    let mut cyclic_gens = Vec::new();
    let mut cyc_seen = HashSet::new();
    for x in 0..n {
        if is_prime_power(g.element_order(x)) {
            let els = g.closure(&[x]);
            if cyc_seen.insert(bits_of(n, &els)) {
                cyclic_gens.push(x);
            }
        }
    }
    let mut e = Enumeration { g, seen: HashSet::new(), reps: Vec::new() };
    let mut queue = vec![e.register(vec![0]).expect("fresh")];
    while let Some(i) = queue.pop() {
        let (h_els, h_gens) = (e.reps[i].0.clone(), e.reps[i].1.clone());
        for &x in &cyclic_gens {
            if h_els.binary_search(&x).is_ok() {
                continue;
            }
            let mut gs = h_gens.clone();
            gs.push(x);
            if let Some(k) = e.register(g.closure(&gs)) {
                queue.push(k);
            }
        }
    }
    let mut reps = e.reps;
    reps.sort_by(|a, b| (a.0.len(), &a.1).cmp(&(b.0.len(), &b.1)));
    reps.into_iter()
        .map(|(elements, _, normal)| ClassData { elements, normal })
        .collect()
}

fn class_data(g: &Group) -> &[ClassData] {
    g.cache.subgroup_classes.get_or_init(|| compute_classes(g))
}

/// Representatives of the conjugacy classes of subgroups (each the
/// lexicographically least member of its class), sorted by order and then by
/// canonical generators.
pub fn subgroup_classes(g: &Group) -> Vec<Subgroup> {
    class_data(g)
        .iter()
        .map(|c| Subgroup::from_sorted(g, c.elements.clone()))
        .collect()
}

/// All normal subgroups, ascending.
pub fn normal_subgroups(g: &Group) -> Vec<Subgroup> {
    class_data(g)
        .iter()
        .filter(|c| c.normal)
        .map(|c| Subgroup::from_sorted(g, c.elements.clone()))
        .collect()
}

/// `G/N` with the projection `G → G/N`.
pub struct Quotient {
    pub group: Group,
    /// `map[x]` is the image of parent element `x`.
    pub map: Vec<usize>,
    pub kernel: Subgroup,
}

impl Quotient {
    pub fn image_of(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = h.elements().iter().map(|&x| self.map[x]).collect();
        els.sort_unstable();
        els.dedup();
        Subgroup::from_sorted(&self.group, els)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, hbar: &Subgroup) -> Subgroup {
        let els = (0..self.map.len()).filter(|&x| hbar.contains(self.map[x])).collect();
        Subgroup::from_sorted(self.kernel.parent(), els)
    }
}

fn check_normal(g: &Group, n: &Subgroup) -> Result<(), GroupError> {
    if !n.parent().same_as(g) {
        return Err(GroupError::GroupMismatch);
    }
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    Ok(())
}

/// The quotient by a normal subgroup, realized as the regular action on cosets.
pub fn quotient_map(g: &Group, n: &Subgroup) -> Result<Quotient, GroupError> {
    check_normal(g, n)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] == usize::MAX {
            for &y in n.elements() {
                coset_of[g.mul(x, y)] = reps.len();
            }
            reps.push(x);
        }
    }
    let m = reps.len();
    let perm_of = |x: usize| {
        Perm::new((0..m).map(|d| coset_of[g.mul(x, reps[d])]).collect()).expect("coset action")
    };
    let perms: Vec<Perm> = reps.iter().map(|&r| perm_of(r)).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| perms[a].cmp(&perms[b]));
    let mut pos = vec![0usize; m];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }
    let mut table = vec![0u32; m * m];
    for c1 in 0..m {
        for c2 in 0..m {
            let c = coset_of[g.mul(reps[c1], reps[c2])];
            table[pos[c1] * m + pos[c2]] = pos[c] as u32;
        }
    }
    let elements: Vec<Perm> = order.iter().map(|&c| perms[c].clone()).collect();
    let gens: Vec<Perm> = g.generators().iter().map(|&s| perm_of(s)).collect();
    let name = g.name().map(|s| format!("{s}/N"));
    let group = Arc::new(FiniteGroup::assemble(m, name, gens, elements, table));
    let map = (0..g.order()).map(|x| pos[coset_of[x]]).collect();
    Ok(Quotient { group, map, kernel: n.clone() })
}

fn p_part(n: usize, p: usize) -> usize {
    let mut q = 1;
    let mut n = n;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

/// Order statistics of a subset closed under multiplication, read from the
/// element orders of the ambient group.
fn subset_is(g: &FiniteGroup, els: &[usize], elementary: bool) -> bool {
    let n = els.len();
    let mut noncyclic = 0;
    for p in prime_factors(n as u64) {
        let p = p as usize;
        let pp = p_part(n, p);
        let p_elements = els.iter().filter(|&&x| p_part(g.element_order(x), p) == g.element_order(x)).count();
        if p_elements != pp {
            return false;
        }
        if !els.iter().any(|&x| g.element_order(x) == pp) {
            noncyclic += 1;
        }
    }
    !elementary || noncyclic <= 1
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let els: Vec<usize> = (0..g.order()).collect();
    subset_is(g, &els, false)
}

/// Nilpotent with at most one non-cyclic Sylow subgroup, i.e. a cyclic group
/// of order prime to `p` times a `p`-group.
pub fn is_elementary(g: &FiniteGroup) -> bool {
    let els: Vec<usize> = (0..g.order()).collect();
    subset_is(g, &els, true)
}

pub fn is_nilpotent_quotient(g: &Group, n: &Subgroup) -> Result<bool, GroupError> {
    check_normal(g, n)?;
    if n.is_trivial() {
        return Ok(is_nilpotent(g));
    }
    Ok(is_nilpotent(&quotient_map(g, n)?.group))
}

fn sort_subgroups(v: &mut [Subgroup]) {
    v.sort_by_key(Subgroup::sort_key);
}

/// Subgroups `H` with `N ⊆ H ⊆ G` and `H/N` elementary, one per conjugacy class.
pub fn elementary_mod_n(g: &Group, n: &Subgroup) -> Result<Vec<Subgroup>, GroupError> {
    check_normal(g, n)?;
    let mut out: Vec<Subgroup> = if n.is_trivial() {
        class_data(g)
            .iter()
            .filter(|c| subset_is(g, &c.elements, true))
            .map(|c| Subgroup::from_sorted(g, c.elements.clone()))
            .collect()
    } else {
        let q = quotient_map(g, n)?;
        class_data(&q.group)
            .iter()
            .filter(|c| subset_is(&q.group, &c.elements, true))
            .map(|c| q.preimage(&Subgroup::from_sorted(&q.group, c.elements.clone())))
            .collect()
    };
    sort_subgroups(&mut out);
    Ok(out)
}

/// Normal subgroups of `G` containing `N`, ascending.
pub fn normal_subgroups_containing(g: &Group, n: &Subgroup) -> Result<Vec<Subgroup>, GroupError> {
    check_normal(g, n)?;
    let mut out: Vec<Subgroup> = if n.is_trivial() {
        normal_subgroups(g)
    } else {
        let q = quotient_map(g, n)?;
        normal_subgroups(&q.group).iter().map(|h| q.preimage(h)).collect()
    };
    sort_subgroups(&mut out);
    Ok(out)
}

/// A maximal `G`-normal `L` with `N ⊆ L ⊊ K`; `[K:L]` must be prime.
pub fn chief_step(g: &Group, n: &Subgroup, k: &Subgroup) -> Result<Subgroup, GroupError> {
    check_normal(g, n)?;
    check_normal(g, k)?;
    if !n.is_subgroup_of(k) {
        return Err(GroupError::NotSubgroup);
    }
    if n == k {
        return Err(GroupError::NoProperStep);
    }
    let candidates: Vec<Subgroup> = normal_subgroups_containing(g, n)?
        .into_iter()
        .filter(|l| l.order() < k.order() && l.is_subgroup_of(k))
        .collect();
    let best = candidates
        .iter()
        .filter(|l| {
            !candidates
                .iter()
                .any(|m| m.order() > l.order() && l.is_subgroup_of(m))
        })
        .max_by(|a, b| a.order().cmp(&b.order()).then(b.sort_key().cmp(&a.sort_key())))
        .cloned()
        .expect("N itself is a candidate");
    let idx = k.order() / best.order();
    if !crate::cyclo::table::is_prime(idx as u64) {
        return Err(GroupError::PrimalityViolated(idx));
    }
    Ok(best)
}
