//! Subgroup machinery over Cayley-table groups: cyclic subgroups,
//! centralizers, generated closures, Hughes subgroups, Sylow subgroups, and
//! the derived predicates (nilpotency, cyclicity, exponent, spectra).
//!
//! Several operations come in a `_within` variant that works inside a
//! subgroup carrier without re-indexing: the carrier is a closed subset, so
//! closures started inside it stay inside it.

use super::{CyclicSubgroup, ElementSet, FiniteGroup, GroupError};
use crate::bitset::BitSet;
use crate::numth;
use std::collections::{BTreeSet, HashSet};

/// The cyclic subgroup generated by `x`.
pub fn cyclic_subgroup(g: &FiniteGroup, x: usize) -> CyclicSubgroup {
    let mut members = BitSet::new(g.order());
    let mut cur = g.identity();
    loop {
        members.insert(cur);
        cur = g.op(cur, x);
        if cur == g.identity() {
            break;
        }
    }
    let order = members.count();
    debug_assert_eq!(order as u64, g.element_order(x));
    CyclicSubgroup {
        generator: x,
        members,
        order,
    }
}

/// All maximal cyclic subgroups, one entry per distinct member set, sorted
/// by (order descending, smallest generator ascending). Every element of the
/// group lies in at least one of them.
pub fn maximal_cyclic_subgroups(g: &FiniteGroup) -> Vec<CyclicSubgroup> {
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut subs: Vec<CyclicSubgroup> = Vec::new();
    for x in g.elements() {
        let c = cyclic_subgroup(g, x);
        if seen.insert(c.members.clone()) {
            subs.push(c);
        }
    }
    subs.sort_by(|a, b| b.order.cmp(&a.order).then(a.generator.cmp(&b.generator)));
    let mut maximal: Vec<CyclicSubgroup> = Vec::new();
    for c in subs {
        if !maximal.iter().any(|m| c.members.is_subset(&m.members)) {
            maximal.push(c);
        }
    }
    maximal
}

/// `{h : hx = xh}`.
pub fn centralizer(g: &FiniteGroup, x: usize) -> ElementSet {
    let bits = BitSet::from_iter(
        g.order(),
        g.elements().filter(|&h| g.op(h, x) == g.op(x, h)),
    );
    ElementSet { bits, subgroup: true }
}

/// Elements commuting with everything.
pub fn center(g: &FiniteGroup) -> ElementSet {
    let bits = BitSet::from_iter(
        g.order(),
        g.elements()
            .filter(|&z| g.elements().all(|h| g.op(z, h) == g.op(h, z))),
    );
    ElementSet { bits, subgroup: true }
}

/// Smallest subgroup containing `seed` (and the identity).
pub fn subgroup_generated(g: &FiniteGroup, seed: &BitSet) -> ElementSet {
    ElementSet {
        bits: closure(g, seed.iter()),
        subgroup: true,
    }
}

fn closure(g: &FiniteGroup, seed: impl IntoIterator<Item = usize>) -> BitSet {
    let mut bits = BitSet::new(g.order());
    let mut members: Vec<usize> = Vec::new();
    let push = |bits: &mut BitSet, members: &mut Vec<usize>, v: usize| {
        if !bits.contains(v) {
            bits.insert(v);
            members.push(v);
        }
    };
    push(&mut bits, &mut members, g.identity());
    for s in seed {
        push(&mut bits, &mut members, s);
    }
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        let mut j = 0;
        while j < members.len() {
            let y = members[j];
            push(&mut bits, &mut members, g.op(x, y));
            push(&mut bits, &mut members, g.op(y, x));
            j += 1;
        }
        head += 1;
    }
    bits
}

/// Hughes subgroup: generated by all elements whose order differs from `p`.
pub fn hughes_subgroup(g: &FiniteGroup, p: u64) -> ElementSet {
    ElementSet {
        bits: hughes_subgroup_within(g, &BitSet::full(g.order()), p),
        subgroup: true,
    }
}

/// Hughes subgroup computed inside a subgroup carrier.
pub fn hughes_subgroup_within(g: &FiniteGroup, carrier: &BitSet, p: u64) -> BitSet {
    let out = closure(g, carrier.iter().filter(|&x| g.element_order(x) != p));
    debug_assert!(out.is_subset(carrier));
    out
}

/// All `p`-elements (orders a power of `p`, identity included). Not
/// necessarily closed under the operation.
pub fn sylow_elements(g: &FiniteGroup, p: u64) -> ElementSet {
    ElementSet {
        bits: p_elements_within(g, &BitSet::full(g.order()), p),
        subgroup: false,
    }
}

pub fn p_elements_within(g: &FiniteGroup, carrier: &BitSet, p: u64) -> BitSet {
    BitSet::from_iter(
        g.order(),
        carrier.iter().filter(|&x| is_power_of(g.element_order(x), p)),
    )
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Exact power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// One Sylow `p`-subgroup, as a member set of exact order `p^a` where
/// `p^a` is the `p`-part of the group order.
///
/// Search: seed with a maximal-order cyclic `p`-subgroup, extend by
/// `p`-elements whose closure stays a `p`-group, backtrack on failure.
/// Candidates are tried in ascending element index, so the result is
/// deterministic. Returns the whole group's identity subgroup when `p` does
/// not divide the order.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<ElementSet, GroupError> {
    let bits = sylow_subgroup_within(g, &BitSet::full(g.order()), p)?;
    Ok(ElementSet { bits, subgroup: true })
}

pub fn sylow_subgroup_within(
    g: &FiniteGroup,
    carrier: &BitSet,
    p: u64,
) -> Result<BitSet, GroupError> {
    let target = p_part(carrier.count() as u64, p);
    if target == 1 {
        return Ok(BitSet::singleton(g.order(), g.identity()));
    }
    let p_elems = p_elements_within(g, carrier, p);
    let seed = p_elems
        .iter()
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .expect("p divides the carrier order, so a p-element exists");
    let start = cyclic_subgroup(g, seed).members;
    grow_p_subgroup(g, &p_elems, start, target, p)
        .ok_or(GroupError::SearchExhausted("sylow subgroup growth"))
}

fn grow_p_subgroup(
    g: &FiniteGroup,
    p_elems: &BitSet,
    current: BitSet,
    target: u64,
    p: u64,
) -> Option<BitSet> {
    if current.count() as u64 == target {
        return Some(current);
    }
    for cand in p_elems.iter() {
        if current.contains(cand) {
            continue;
        }
        let mut seed: Vec<usize> = current.iter().collect();
        seed.push(cand);
        let ext = closure(g, seed);
        let size = ext.count() as u64;
        if size <= target && is_power_of(size, p) && ext.is_subset(p_elems) {
            if let Some(found) = grow_p_subgroup(g, p_elems, ext, target, p) {
                return Some(found);
            }
        }
    }
    None
}

/// True iff for every prime dividing the order, the set of `p`-elements is
/// closed under the operation (the group is the direct product of its Sylow
/// subgroups).
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let n = g.order() as u64;
    numth::factorize(n).expect("group order is positive").primes().all(|p| {
        let elems: Vec<usize> = sylow_elements(g, p).bits.iter().collect();
        let bits = BitSet::from_iter(g.order(), elems.iter().copied());
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| bits.contains(g.op(a, b))))
    })
}

pub fn is_cyclic(g: &FiniteGroup) -> bool {
    g.elements().any(|x| g.element_order(x) == g.order() as u64)
}

/// Least common multiple of all element orders.
pub fn exponent(g: &FiniteGroup) -> u64 {
    exponent_of_subset(g, &BitSet::full(g.order()))
}

pub fn exponent_of_subset(g: &FiniteGroup, set: &BitSet) -> u64 {
    set.iter().fold(1, |acc, x| numth::lcm(acc, g.element_order(x)))
}

/// The set of element orders.
pub fn order_spectrum(g: &FiniteGroup) -> BTreeSet<u64> {
    g.elements().map(|x| g.element_order(x)).collect()
}

/// True iff the distinct maximal cyclic subgroups pairwise intersect in the
/// identity alone.
pub fn maximal_cyclics_partition(g: &FiniteGroup) -> bool {
    let subs = maximal_cyclic_subgroups(g);
    for (i, a) in subs.iter().enumerate() {
        for b in &subs[i + 1..] {
            if a.members.intersection_count(&b.members) > 1 {
                return false;
            }
        }
    }
    true
}

/// Closed under the operation, contains the identity, closed under inverse.
pub fn is_subgroup_set(g: &FiniteGroup, set: &BitSet) -> bool {
    set.contains(g.identity())
        && set.iter().all(|a| set.contains(g.inverse(a)))
        && set.iter().all(|a| set.iter().all(|b| set.contains(g.op(a, b))))
}

/// True iff `sub` is normalized by every element of `ambient`.
pub fn is_normal_within(g: &FiniteGroup, sub: &BitSet, ambient: &BitSet) -> bool {
    ambient
        .iter()
        .all(|h| sub.iter().all(|x| sub.contains(g.conjugate(h, x))))
}

/// A subgroup carrier is cyclic iff some member's order equals its size.
pub fn is_cyclic_subset(g: &FiniteGroup, set: &BitSet) -> bool {
    let size = set.count() as u64;
    set.iter().any(|x| g.element_order(x) == size)
}
