//! Substructure species: the predicates that decide which closed subsets
//! count as groups, neutrosophic subgroups, ideals and so on.

use std::fmt;
use std::sync::Arc;

use crate::magma::{FiniteMagma, Subset};
use crate::search::{generated_closure, is_closed};

/// A user-supplied species with a display name.
#[derive(Clone)]
pub struct NamedPredicate {
    pub name: String,
    pub f: Arc<dyn Fn(&FiniteMagma, &Subset) -> bool + Send + Sync>,
}

impl NamedPredicate {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&FiniteMagma, &Subset) -> bool + Send + Sync + 'static,
    ) -> Self {
        NamedPredicate { name: name.into(), f: Arc::new(f) }
    }
}

impl fmt::Debug for NamedPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NamedPredicate({})", self.name)
    }
}

impl PartialEq for NamedPredicate {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

/// Uniform handle for the substructure species searched by the engines.
///
/// Every variant implies closure under the parent operation.
#[derive(Clone, Debug, PartialEq)]
pub enum SubsetPredicate {
    /// A group of order at least 2 under the induced operation.
    IsGroup,
    IsSemigroup,
    IsLoop,
    IsSubgroupoid,
    /// Neutrosophic, with an internal identity, containing a purely real
    /// group of order at least 2.
    IsNeutrosophicSubgroup,
    /// Neutrosophic, with an internal identity, containing no purely real
    /// group of order at least 2.
    IsPseudoNeutrosophicSubgroup,
    /// Neutrosophic and containing a purely real group of order at least 2.
    IsSNeutrosophicSub,
    IsIdeal,
    IsLeftIdeal,
    IsRightIdeal,
    /// Associative and neutrosophic.
    IsNeutrosophicSemigroup,
    /// Contains a proper group of order at least 2.
    IsSSemigroup,
    /// Real part a loop containing a group of order at least 2, tagged part
    /// equal to the real part times the neutrosophic identity.
    IsSNeutrosophicSubloop,
    /// Neutrosophic with an internal identity.
    IsNeutrosophicSubmonoid,
    Custom(NamedPredicate),
}

impl SubsetPredicate {
    pub fn name(&self) -> &str {
        use SubsetPredicate::*;
        match self {
            IsGroup => "group",
            IsSemigroup => "semigroup",
            IsLoop => "loop",
            IsSubgroupoid => "subgroupoid",
            IsNeutrosophicSubgroup => "neutrosophic-subgroup",
            IsPseudoNeutrosophicSubgroup => "pseudo-neutrosophic-subgroup",
            IsSNeutrosophicSub => "s-neutrosophic-sub",
            IsIdeal => "ideal",
            IsLeftIdeal => "left-ideal",
            IsRightIdeal => "right-ideal",
            IsNeutrosophicSemigroup => "neutrosophic-semigroup",
            IsSSemigroup => "s-semigroup",
            IsSNeutrosophicSubloop => "s-neutrosophic-subloop",
            IsNeutrosophicSubmonoid => "neutrosophic-submonoid",
            Custom(p) => &p.name,
        }
    }

    /// Parses a built-in species name.
    pub fn parse(s: &str) -> Option<SubsetPredicate> {
        use SubsetPredicate::*;
        [
            IsGroup,
            IsSemigroup,
            IsLoop,
            IsSubgroupoid,
            IsNeutrosophicSubgroup,
            IsPseudoNeutrosophicSubgroup,
            IsSNeutrosophicSub,
            IsIdeal,
            IsLeftIdeal,
            IsRightIdeal,
            IsNeutrosophicSemigroup,
            IsSSemigroup,
            IsSNeutrosophicSubloop,
            IsNeutrosophicSubmonoid,
        ]
        .into_iter()
        .find(|p| p.name() == s)
    }

    pub fn eval(&self, m: &FiniteMagma, s: &Subset) -> bool {
        m.check_subset(s).is_ok() && !s.is_empty() && is_closed(m, s) && self.eval_closed(m, s)
    }

    /// Evaluates on a subset already known to be closed and non-empty.
    pub(crate) fn eval_closed(&self, m: &FiniteMagma, s: &Subset) -> bool {
        use SubsetPredicate::*;
        match self {
            IsGroup => s.len() >= 2 && is_group_on(m, s),
            IsSemigroup => is_associative_on(m, s),
            IsLoop => is_loop_on(m, s),
            IsSubgroupoid => true,
            IsNeutrosophicSubgroup => {
                has_neutro(m, s) && internal_identity(m, s).is_some() && has_real_group(m, s)
            }
            IsPseudoNeutrosophicSubgroup => {
                has_neutro(m, s) && internal_identity(m, s).is_some() && !has_real_group(m, s)
            }
            IsSNeutrosophicSub => has_neutro(m, s) && has_real_group(m, s),
            IsIdeal => is_left_absorbing(m, s) && is_right_absorbing(m, s),
            IsLeftIdeal => is_left_absorbing(m, s),
            IsRightIdeal => is_right_absorbing(m, s),
            IsNeutrosophicSemigroup => has_neutro(m, s) && is_associative_on(m, s),
            IsSSemigroup => contains_proper_group(m, s),
            IsSNeutrosophicSubloop => is_s_neutrosophic_subloop(m, s),
            IsNeutrosophicSubmonoid => has_neutro(m, s) && internal_identity(m, s).is_some(),
            Custom(p) => (p.f)(m, s),
        }
    }
}

impl fmt::Display for SubsetPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn has_neutro(m: &FiniteMagma, s: &Subset) -> bool {
    s.iter().any(|&x| m.is_neutro(x))
}

/// Members without an indeterminate component.
pub fn real_part(m: &FiniteMagma, s: &Subset) -> Subset {
    s.iter().copied().filter(|&x| !m.is_neutro(x)).collect()
}

pub fn neutro_part(m: &FiniteMagma, s: &Subset) -> Subset {
    s.iter().copied().filter(|&x| m.is_neutro(x)).collect()
}

pub fn is_associative_on(m: &FiniteMagma, s: &Subset) -> bool {
    s.iter().all(|&x| {
        s.iter().all(|&y| {
            let xy = m.op(x, y);
            s.iter().all(|&z| m.op(xy, z) == m.op(x, m.op(y, z)))
        })
    })
}

/// An element of `s` acting as a two-sided identity on `s`.
pub fn internal_identity(m: &FiniteMagma, s: &Subset) -> Option<usize> {
    s.iter()
        .copied()
        .find(|&u| s.iter().all(|&x| m.op(u, x) == x && m.op(x, u) == x))
}

/// Closed, associative, with identity and inverses inside `s`.
pub fn is_group_on(m: &FiniteMagma, s: &Subset) -> bool {
    if s.is_empty() || !is_closed(m, s) {
        return false;
    }
    let Some(u) = internal_identity(m, s) else {
        return false;
    };
    s.iter()
        .all(|&x| s.iter().any(|&y| m.op(x, y) == u && m.op(y, x) == u))
        && is_associative_on(m, s)
}

/// Every row and column restricted to `s` is a permutation of `s`.
pub fn is_latin_on(m: &FiniteMagma, s: &Subset) -> bool {
    let n = m.order();
    let mask = s.mask(n);
    let mut seen = vec![usize::MAX; n];
    let mut stamp = 0;
    for &x in s {
        for side in 0..2 {
            stamp += 1;
            for &y in s {
                let z = if side == 0 { m.op(x, y) } else { m.op(y, x) };
                if !mask[z] || seen[z] == stamp {
                    return false;
                }
                seen[z] = stamp;
            }
        }
    }
    true
}

pub fn is_loop_on(m: &FiniteMagma, s: &Subset) -> bool {
    !s.is_empty() && is_latin_on(m, s) && internal_identity(m, s).is_some()
}

/// Groups of order at least 2 inside `within`, one per generating pair
/// `{e, x}` with `e` idempotent.
fn groups_inside<'a>(m: &'a FiniteMagma, within: &Subset) -> impl Iterator<Item = Subset> + 'a {
    let idempotents: Vec<usize> = within.iter().copied().filter(|&e| m.op(e, e) == e).collect();
    let within = within.clone();
    idempotents.into_iter().flat_map(move |e| {
        let within = within.clone();
        within
            .members()
            .to_vec()
            .into_iter()
            .filter(move |&x| x != e)
            .filter_map(move |x| {
                let c = generated_closure(m, &[e, x]).ok()?;
                (c.is_subset_of(&within) && is_group_on(m, &c)).then_some(c)
            })
    })
}

/// True when the purely real members of `s` contain a group of order >= 2.
pub fn has_real_group(m: &FiniteMagma, s: &Subset) -> bool {
    let r = real_part(m, s);
    groups_inside(m, &r).next().is_some()
}

/// True when `s` contains a group of order >= 2 other than `s` itself.
pub fn contains_proper_group(m: &FiniteMagma, s: &Subset) -> bool {
    groups_inside(m, s).any(|g| g.len() < s.len())
}

/// `m·s ⊆ s`.
pub fn is_left_absorbing(m: &FiniteMagma, s: &Subset) -> bool {
    let mask = s.mask(m.order());
    s.iter().all(|&a| m.elements().all(|x| mask[m.op(x, a)]))
}

/// `s·m ⊆ s`.
pub fn is_right_absorbing(m: &FiniteMagma, s: &Subset) -> bool {
    let mask = s.mask(m.order());
    s.iter().all(|&a| m.elements().all(|x| mask[m.op(a, x)]))
}

fn is_s_neutrosophic_subloop(m: &FiniteMagma, s: &Subset) -> bool {
    let Some(i) = m.neutro_identity() else {
        return false;
    };
    let h = real_part(m, s);
    let t = neutro_part(m, s);
    if h.is_empty() || t.is_empty() || !is_loop_on(m, &h) {
        return false;
    }
    let tagged: Subset = h.iter().map(|&x| m.op(x, i)).collect();
    tagged == t && groups_inside(m, &h).next().is_some()
}
