//! Closure computation and closed-subset enumeration.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, Subset};
use crate::species::SubsetPredicate;

/// Environment variable overriding [`SearchLimits::max_exhaustive_order`].
pub const MAX_EXHAUSTIVE_ENV: &str = "NEUTROMAGMA_MAX_EXHAUSTIVE";

/// Largest order the power-set scan will accept even when overridden.
pub const HARD_EXHAUSTIVE_CAP: usize = 30;

/// Bounds for subset search.
///
/// Up to `max_exhaustive_order` every subset is scanned. Beyond it, only
/// closures of generator sets of size at most `max_generators` are visited
/// and the result is marked incomplete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_exhaustive_order: usize,
    pub max_generators: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        let max_exhaustive_order = std::env::var(MAX_EXHAUSTIVE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(16);
        SearchLimits { max_exhaustive_order, max_generators: 3 }
    }
}

/// Enumeration result; `complete` is false on the generator-bounded path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub subsets: Vec<Subset>,
    pub complete: bool,
}

pub fn is_closed(m: &FiniteMagma, s: &Subset) -> bool {
    let mask = s.mask(m.order());
    s.iter().all(|&x| s.iter().all(|&y| mask[m.op(x, y)]))
}

/// Least closed superset of `gens`, by worklist saturation.
pub fn generated_closure(m: &FiniteMagma, gens: &[usize]) -> Result<Subset> {
    if gens.is_empty() {
        return Err(Error::Parameter("closure needs at least one generator".into()));
    }
    if let Some(&g) = gens.iter().find(|&&g| g >= m.order()) {
        return Err(Error::Domain(format!("generator {g} outside 0..{}", m.order())));
    }
    let mut set = FixedBitSet::with_capacity(m.order());
    let mut members = Vec::new();
    extend_closure(m, &mut set, &mut members, gens);
    Ok(Subset::new(members))
}

/// Adds `new` to the closed set `(set, members)` and re-closes it.
fn extend_closure(m: &FiniteMagma, set: &mut FixedBitSet, members: &mut Vec<usize>, new: &[usize]) {
    let mut work = Vec::new();
    for &g in new {
        if !set.put(g) {
            members.push(g);
            work.push(g);
        }
    }
    while let Some(x) = work.pop() {
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for z in [m.op(x, y), m.op(y, x)] {
                if !set.put(z) {
                    members.push(z);
                    work.push(z);
                }
            }
            i += 1;
        }
    }
}

fn excluded(m: &FiniteMagma, s: &Subset) -> bool {
    s.is_empty()
        || s.len() == m.order()
        || (s.len() == 1 && Some(s.members()[0]) == m.effective_identity())
}

/// All closed subsets satisfying `pred`, minus the empty set, the whole
/// carrier and the identity singleton, sorted lexicographically.
pub fn enumerate_closed_subsets(
    m: &FiniteMagma,
    pred: &SubsetPredicate,
    limits: SearchLimits,
) -> Result<Enumeration> {
    let all = closed_subsets(m, limits)?;
    let subsets = all.subsets.into_iter().filter(|s| pred.eval_closed(m, s)).collect();
    Ok(Enumeration { subsets, complete: all.complete })
}

/// Every closed subset, minus the three exclusions, sorted.
pub fn closed_subsets(m: &FiniteMagma, limits: SearchLimits) -> Result<Enumeration> {
    let k = m.order();
    if k <= limits.max_exhaustive_order {
        if k > HARD_EXHAUSTIVE_CAP {
            return Err(Error::ResourceLimit(format!(
                "power-set scan over {k} elements exceeds the cap of {HARD_EXHAUSTIVE_CAP}"
            )));
        }
        Ok(Enumeration { subsets: exhaustive(m), complete: true })
    } else {
        Ok(Enumeration { subsets: generated(m, limits.max_generators), complete: false })
    }
}

fn exhaustive(m: &FiniteMagma) -> Vec<Subset> {
    let k = m.order();
    let bit: Vec<u64> = (0..k * k).map(|c| 1u64 << m.op(c / k, c % k)).collect();
    let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut out = Vec::new();
    let mut elems = Vec::with_capacity(k);
    for mask in 1..full {
        elems.clear();
        elems.extend((0..k).filter(|&i| mask >> i & 1 == 1));
        let closed = elems
            .iter()
            .all(|&x| elems.iter().all(|&y| bit[x * k + y] & mask != 0));
        if closed {
            let s = Subset::new(elems.iter().copied());
            if !excluded(m, &s) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

fn generated(m: &FiniteMagma, max_generators: usize) -> Vec<Subset> {
    let k = m.order();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut level: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
    for g in 0..k {
        let mut set = FixedBitSet::with_capacity(k);
        let mut members = Vec::new();
        extend_closure(m, &mut set, &mut members, &[g]);
        if seen.insert(set.clone()) {
            level.push((set, members));
        }
    }
    let mut all: Vec<Subset> = level.iter().map(|(_, v)| Subset::new(v.iter().copied())).collect();
    for _ in 1..max_generators {
        let mut next = Vec::new();
        for (set, members) in &level {
            for g in 0..k {
                if set.contains(g) {
                    continue;
                }
                let mut s2 = set.clone();
                let mut m2 = members.clone();
                extend_closure(m, &mut s2, &mut m2, &[g]);
                if seen.insert(s2.clone()) {
                    all.push(Subset::new(m2.iter().copied()));
                    next.push((s2, m2));
                }
            }
        }
        level = next;
    }
    all.retain(|s| !excluded(m, s));
    all.sort();
    all
}
