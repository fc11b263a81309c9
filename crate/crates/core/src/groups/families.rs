//! Constructors for the named group families.
//!
//! Each constructor builds a table in a documented canonical element order,
//! runs the full validation pass, and additionally checks its defining
//! relations against the finished table.

use super::{FiniteGroup, GroupError, DEFAULT_ORDER_BOUND};
use crate::numth;
use std::collections::HashMap;

/// Cyclic group of order `n`, elements `0..n` with addition mod `n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameters("cyclic order must be >= 1".into()));
    }
    check_bound(n)?;
    let mut flat = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            flat.push(((i + j) % n) as u16);
        }
    }
    FiniteGroup::from_flat_table(flat, n, &format!("Z{n}"))
}

/// Direct product; element `(g, h)` sits at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product_bounded(g, h, DEFAULT_ORDER_BOUND)
}

pub fn direct_product_bounded(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bound: usize,
) -> Result<FiniteGroup, GroupError> {
    let n = g
        .order()
        .checked_mul(h.order())
        .filter(|&n| n <= bound)
        .ok_or(GroupError::ExceedsBound {
            requested: g.order().saturating_mul(h.order()),
            bound,
        })?;
    let hn = h.order();
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        let (ga, ha) = (a / hn, a % hn);
        for b in 0..n {
            let (gb, hb) = (b / hn, b % hn);
            flat.push((g.op(ga, gb) * hn + h.op(ha, hb)) as u16);
        }
    }
    FiniteGroup::from_flat_table(flat, n, &format!("{}x{}", g.label(), h.label()))
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(factors: &[usize]) -> Result<FiniteGroup, GroupError> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| GroupError::InvalidParameters("abelian factor list must be nonempty".into()))?;
    let mut g = cyclic(*first)?;
    for &f in rest {
        g = direct_product(&g, &cyclic(f)?)?;
    }
    Ok(g)
}

/// Elementary abelian group of order `p^k`, labeled `E<p^k>`.
pub fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup, GroupError> {
    if !numth::is_prime(p as u64) || k == 0 {
        return Err(GroupError::InvalidParameters(format!(
            "elementary abelian group needs a prime and k >= 1, got p={p}, k={k}"
        )));
    }
    let order = (p as u64).pow(k);
    if order > DEFAULT_ORDER_BOUND as u64 {
        return Err(GroupError::ExceedsBound {
            requested: order as usize,
            bound: DEFAULT_ORDER_BOUND,
        });
    }
    let mut g = abelian(&vec![p; k as usize])?;
    g.set_label(format!("E{order}"));
    Ok(g)
}

/// Dihedral group of the given (even) order `2m`: rotations `a^i` at indices
/// `0..m`, reflections `a^i b` at `m..2m`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order < 2 || order % 2 != 0 {
        return Err(GroupError::InvalidParameters(format!(
            "dihedral order must be even and >= 2, got {order}"
        )));
    }
    let m = order / 2;
    metacyclic(m, 2, (m - 1) % m, 0, &format!("D{order}"))
}

/// Generalized quaternion group of order `2^n`, `n >= 3`.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup, GroupError> {
    if !order.is_power_of_two() || order < 8 {
        return Err(GroupError::InvalidParameters(format!(
            "generalized quaternion order must be 2^n with n >= 3, got {order}"
        )));
    }
    let m = order / 2;
    metacyclic(m, 2, m - 1, m / 2, &format!("Q{order}"))
}

/// Semidihedral group of order `2^n`, `n >= 3`.
pub fn semidihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if !order.is_power_of_two() || order < 8 {
        return Err(GroupError::InvalidParameters(format!(
            "semidihedral order must be 2^n with n >= 3, got {order}"
        )));
    }
    let m = order / 2;
    metacyclic(m, 2, m / 2 - 1, 0, &format!("SD{order}"))
}

/// Modular group of order `p^n`, `n >= 3`: relations `a^(p^(n-1)) = b^p = 1`,
/// `a^b = a^(p^(n-2)+1)`.
pub fn modular(p: usize, n: u32) -> Result<FiniteGroup, GroupError> {
    if !numth::is_prime(p as u64) || n < 3 {
        return Err(GroupError::InvalidParameters(format!(
            "modular group needs a prime p and n >= 3, got p={p}, n={n}"
        )));
    }
    let order = (p as u64).pow(n);
    if order > DEFAULT_ORDER_BOUND as u64 {
        return Err(GroupError::ExceedsBound {
            requested: order as usize,
            bound: DEFAULT_ORDER_BOUND,
        });
    }
    let m = p.pow(n - 1);
    metacyclic(m, p, m / p + 1, 0, &format!("M{order}"))
}

/// `Z_n` extended by `Z_m` acting as `a -> a^k`: relations `a^n = b^m = 1`,
/// `b^-1 a b = a^k`. Elements `a^i b^j` at index `j*n + i`.
pub fn semidirect_cyclic(n: usize, m: usize, k: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || m == 0 {
        return Err(GroupError::InvalidParameters(
            "semidirect factors must be nonempty".into(),
        ));
    }
    let k = k % n.max(1);
    if numth::gcd(k as u64, n as u64) != 1 {
        return Err(GroupError::InvalidAction(format!(
            "multiplier {k} is not a unit mod {n}"
        )));
    }
    if numth::pow_mod(k as u64, m as u64, n as u64) != 1 % n as u64 {
        return Err(GroupError::InvalidAction(format!(
            "{k}^{m} is not 1 mod {n}, so the action does not define Z{n}:Z{m}"
        )));
    }
    metacyclic(n, m, k, 0, &format!("Z{n}:Z{m}({k})"))
}

/// Group presented as `a^m = 1`, `b^t = a^e`, `b^-1 a b = a^k`, with
/// `k^t = 1 (mod m)`. Element `a^i b^j` sits at index `j*m + i`.
fn metacyclic(m: usize, t: usize, k: usize, e: usize, label: &str) -> Result<FiniteGroup, GroupError> {
    let n = m
        .checked_mul(t)
        .filter(|&n| n <= DEFAULT_ORDER_BOUND)
        .ok_or(GroupError::ExceedsBound {
            requested: m.saturating_mul(t),
            bound: DEFAULT_ORDER_BOUND,
        })?;
    // b a = a^u b with u = k^(t-1) = k^-1 (mod m); precompute u^j for j < t.
    let u = numth::pow_mod(k as u64, t as u64 - 1, m as u64);
    let mut u_pow = vec![1u64 % m as u64; t];
    for j in 1..t {
        u_pow[j] = u_pow[j - 1] * u % m as u64;
    }
    let idx = |i: usize, j: usize| j * m + i;
    let mut flat = vec![0u16; n * n];
    for j1 in 0..t {
        for i1 in 0..m {
            for j2 in 0..t {
                for i2 in 0..m {
                    let mut i = (i1 + i2 * u_pow[j1] as usize) % m;
                    let mut j = j1 + j2;
                    if j >= t {
                        j -= t;
                        i = (i + e) % m;
                    }
                    flat[idx(i1, j1) * n + idx(i2, j2)] = idx(i, j) as u16;
                }
            }
        }
    }
    let g = FiniteGroup::from_flat_table(flat, n, label)?;
    check_metacyclic_relations(&g, m, t, k, e)?;
    Ok(g)
}

fn check_metacyclic_relations(
    g: &FiniteGroup,
    m: usize,
    t: usize,
    k: usize,
    e: usize,
) -> Result<(), GroupError> {
    let a = if m > 1 { 1 } else { 0 };
    let b = if t > 1 { m } else { 0 };
    let ok = g.pow(a, m as u64) == g.identity()
        && g.pow(b, t as u64) == g.pow(a, e as u64)
        && g.op(g.op(g.inverse(b), a), b) == g.pow(a, k as u64);
    if ok {
        Ok(())
    } else {
        Err(GroupError::InvalidParameters(format!(
            "presentation relations do not hold in constructed table for {}",
            g.label()
        )))
    }
}

/// Closure of a set of permutations of `0..degree` under composition, as a
/// group. Elements are ordered by BFS discovery from the identity, expanding
/// by right multiplication with the generators in the order given.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    from_permutations_bounded(degree, generators, DEFAULT_ORDER_BOUND)
}

pub fn from_permutations_bounded(
    degree: usize,
    generators: &[Vec<usize>],
    bound: usize,
) -> Result<FiniteGroup, GroupError> {
    for g in generators {
        let mut seen = vec![false; degree];
        if g.len() != degree || !g.iter().all(|&v| v < degree && !std::mem::replace(&mut seen[v], true)) {
            return Err(GroupError::InvalidParameters(format!(
                "{g:?} is not a permutation of 0..{degree}"
            )));
        }
    }
    // (p*q)(x) = p[q[x]].
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };

    let identity: Vec<usize> = (0..degree).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elems.len() {
        let current = elems[head].clone();
        for gen in generators {
            let next = compose(&current, gen);
            if !index.contains_key(&next) {
                if elems.len() >= bound {
                    return Err(GroupError::ClosureExceedsBound { bound });
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        head += 1;
    }

    let n = elems.len();
    let mut flat = Vec::with_capacity(n * n);
    for p in &elems {
        for q in &elems {
            flat.push(index[&compose(p, q)] as u16);
        }
    }
    FiniteGroup::from_flat_table(flat, n, &format!("Perm{n}@{degree}"))
}

/// Named permutation groups used by the catalog.
pub fn symmetric(k: usize) -> Result<FiniteGroup, GroupError> {
    if !(2..=5).contains(&k) {
        return Err(GroupError::InvalidParameters(format!(
            "symmetric group degree must be 2..=5, got {k}"
        )));
    }
    let transposition = swap_perm(k, 0, 1);
    let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let gens = if k == 2 { vec![transposition] } else { vec![transposition, cycle] };
    let mut g = from_permutations(k, &gens)?;
    g.set_label(format!("S{k}"));
    Ok(g)
}

pub fn alternating(k: usize) -> Result<FiniteGroup, GroupError> {
    if !(3..=5).contains(&k) {
        return Err(GroupError::InvalidParameters(format!(
            "alternating group degree must be 3..=5, got {k}"
        )));
    }
    let three_cycle = cycle_perm(k, &[0, 1, 2]);
    let gens = match k {
        3 => vec![three_cycle],
        4 => vec![three_cycle, cycle_perm(k, &[1, 2, 3])],
        _ => vec![three_cycle, cycle_perm(k, &[0, 1, 2, 3, 4])],
    };
    let mut g = from_permutations(k, &gens)?;
    g.set_label(format!("A{k}"));
    Ok(g)
}

fn swap_perm(degree: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    p.swap(a, b);
    p
}

fn cycle_perm(degree: usize, cycle: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..cycle.len() {
        p[cycle[w]] = cycle[(w + 1) % cycle.len()];
    }
    p
}

fn check_bound(n: usize) -> Result<(), GroupError> {
    if n > DEFAULT_ORDER_BOUND {
        Err(GroupError::ExceedsBound {
            requested: n,
            bound: DEFAULT_ORDER_BOUND,
        })
    } else {
        Ok(())
    }
}
