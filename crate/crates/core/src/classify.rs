//! Smarandache detection and the Lagrange, Sylow and Cauchy engines.
//!
//! Each engine is written once against a list of `(members, order)` items so
//! that single magmas and N-structures share it.

use serde::{Deserialize, Serialize};

use crate::constructors::factorize;
use crate::error::{Error, Result};
use crate::laws::{check_identity_law, units, IdentityLaw};
use crate::magma::{FiniteMagma, Subset};
use crate::ops::{classify_basic, cosets, element_orders, Side};
use crate::search::{enumerate_closed_subsets, is_closed, SearchLimits};
use crate::species::{has_neutro, is_associative_on, is_loop_on, real_part, SubsetPredicate};

/// Smarandache kinds, each bound to the species of its witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SKind {
    SSemigroup,
    SLoop,
    SGroupoid,
    SNeutrosophicGroup,
    StrongSNeutrosophicGroup,
    SNeutrosophicSemigroup,
    SNeutrosophicLoop,
    SNeutrosophicGroupoid,
}

impl SKind {
    pub const ALL: [SKind; 8] = [
        SKind::SSemigroup,
        SKind::SLoop,
        SKind::SGroupoid,
        SKind::SNeutrosophicGroup,
        SKind::StrongSNeutrosophicGroup,
        SKind::SNeutrosophicSemigroup,
        SKind::SNeutrosophicLoop,
        SKind::SNeutrosophicGroupoid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SKind::SSemigroup => "s_semigroup",
            SKind::SLoop => "s_loop",
            SKind::SGroupoid => "s_groupoid",
            SKind::SNeutrosophicGroup => "s_neutrosophic_group",
            SKind::StrongSNeutrosophicGroup => "strong_s_neutrosophic_group",
            SKind::SNeutrosophicSemigroup => "s_neutrosophic_semigroup",
            SKind::SNeutrosophicLoop => "s_neutrosophic_loop",
            SKind::SNeutrosophicGroupoid => "s_neutrosophic_groupoid",
        }
    }

    pub fn witness_species(self) -> SubsetPredicate {
        use SubsetPredicate::*;
        match self {
            SKind::SSemigroup | SKind::SNeutrosophicSemigroup | SKind::SLoop => IsGroup,
            SKind::SGroupoid => IsSemigroup,
            SKind::SNeutrosophicGroup => IsPseudoNeutrosophicSubgroup,
            SKind::StrongSNeutrosophicGroup | SKind::SNeutrosophicLoop => IsNeutrosophicSubgroup,
            SKind::SNeutrosophicGroupoid => IsNeutrosophicSemigroup,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SDetection {
    pub holds: bool,
    pub witness: Option<Subset>,
    /// False when the search was generator-bounded; a negative answer is
    /// then inconclusive.
    pub complete: bool,
}

pub fn detect_s_kind(m: &FiniteMagma, kind: SKind) -> Result<SDetection> {
    detect_s_kind_with(m, kind, SearchLimits::default())
}

/// Whether the whole carrier has the structure the kind is defined over.
pub fn carrier_admits(m: &FiniteMagma, kind: SKind) -> bool {
    let full = Subset::full(m.order());
    let neutro = has_neutro(m, &full);
    match kind {
        SKind::SSemigroup => classify_basic(m).is_semigroup,
        SKind::SLoop => classify_basic(m).is_loop,
        SKind::SGroupoid => true,
        SKind::SNeutrosophicSemigroup => neutro && is_associative_on(m, &full),
        SKind::SNeutrosophicLoop => neutro && is_loop_on(m, &real_part(m, &full)),
        SKind::SNeutrosophicGroup | SKind::StrongSNeutrosophicGroup | SKind::SNeutrosophicGroupoid => neutro,
    }
}

pub fn detect_s_kind_with(m: &FiniteMagma, kind: SKind, limits: SearchLimits) -> Result<SDetection> {
    if !carrier_admits(m, kind) {
        return Ok(SDetection { holds: false, witness: None, complete: true });
    }
    let e = enumerate_closed_subsets(m, &kind.witness_species(), limits)?;
    let witness = e.subsets.into_iter().next();
    Ok(SDetection { holds: witness.is_some(), witness, complete: e.complete })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict3 {
    Full,
    Weak,
    Free,
    Vacuous,
}

impl Verdict3 {
    pub fn name(self) -> &'static str {
        match self {
            Verdict3::Full => "full",
            Verdict3::Weak => "weak",
            Verdict3::Free => "free",
            Verdict3::Vacuous => "vacuous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub members: Vec<usize>,
    pub order: usize,
    pub qualifies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
}

/// Verdict with per-witness evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub verdict: Verdict3,
    pub complete: bool,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    pub species: String,
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl ClassReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn qualifying(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.qualifies)
    }
}

/// Lagrange verdict over substructures of the given orders.
pub fn lagrange_verdict(
    total: usize,
    items: Vec<(Vec<usize>, usize)>,
    complete: bool,
    species: &str,
) -> ClassReport {
    let witnesses: Vec<Witness> = items
        .into_iter()
        .map(|(members, order)| Witness {
            members,
            order,
            qualifies: order > 0 && total % order == 0,
            flavor: None,
        })
        .collect();
    let hits = witnesses.iter().filter(|w| w.qualifies).count();
    let verdict = if witnesses.is_empty() {
        Verdict3::Vacuous
    } else if hits == witnesses.len() {
        Verdict3::Full
    } else if hits > 0 {
        Verdict3::Weak
    } else {
        Verdict3::Free
    };
    ClassReport { verdict, complete, witnesses, species: species.into(), notes: Vec::new() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SylowVariant {
    /// Order exactly `p^α` with `p^α ∥ o`.
    Standard,
    /// Order `p^(α+t)`, `t ≥ 1`.
    Super,
    /// Order `p^t`, `1 ≤ t < α`.
    Semi,
}

fn sylow_targets(total: usize, variant: SylowVariant) -> Vec<(usize, Vec<usize>)> {
    factorize(total as u64)
        .into_iter()
        .map(|(p, a)| {
            let p = p as usize;
            let t: Vec<usize> = match variant {
                SylowVariant::Standard => vec![p.pow(a)],
                SylowVariant::Super => {
                    let mut v = Vec::new();
                    let mut q = p.pow(a + 1);
                    while q <= total {
                        v.push(q);
                        q *= p;
                    }
                    v
                }
                SylowVariant::Semi => (1..a).map(|t| p.pow(t)).collect(),
            };
            (p, t)
        })
        .collect()
}

/// Sylow verdict: Full when every prime of `total` has a witness of the
/// variant's order, Weak when some prime does, Free when none.
pub fn sylow_verdict(
    total: usize,
    items: Vec<(Vec<usize>, usize)>,
    variant: SylowVariant,
    complete: bool,
    species: &str,
) -> ClassReport {
    let targets = sylow_targets(total, variant);
    let mut notes = Vec::new();
    let witnesses: Vec<Witness> = items
        .into_iter()
        .map(|(members, order)| Witness {
            members,
            qualifies: targets.iter().any(|(_, t)| t.contains(&order)),
            order,
            flavor: None,
        })
        .collect();
    for (p, t) in &targets {
        if variant == SylowVariant::Standard && t == &vec![total] {
            notes.push(format!("{p}-Sylow order equals the carrier order; no proper witness"));
        }
    }
    let satisfied = targets
        .iter()
        .filter(|(_, t)| witnesses.iter().any(|w| t.contains(&w.order)))
        .count();
    let verdict = if witnesses.is_empty() || targets.is_empty() {
        Verdict3::Vacuous
    } else if satisfied == targets.len() {
        Verdict3::Full
    } else if satisfied > 0 {
        Verdict3::Weak
    } else {
        Verdict3::Free
    };
    ClassReport { verdict, complete, witnesses, species: species.into(), notes }
}

/// Cauchy verdict over `(members, order, flavor)` torsion items.
pub fn cauchy_verdict(total: usize, items: Vec<(Vec<usize>, usize, &'static str)>) -> ClassReport {
    let witnesses: Vec<Witness> = items
        .into_iter()
        .map(|(members, order, flavor)| Witness {
            members,
            order,
            qualifies: total % order == 0,
            flavor: Some(flavor.into()),
        })
        .collect();
    let hits = witnesses.iter().filter(|w| w.qualifies).count();
    let verdict = if witnesses.is_empty() {
        Verdict3::Vacuous
    } else if hits == witnesses.len() {
        Verdict3::Full
    } else if hits > 0 {
        Verdict3::Weak
    } else {
        Verdict3::Free
    };
    ClassReport {
        verdict,
        complete: true,
        witnesses,
        species: "elements".into(),
        notes: Vec::new(),
    }
}

fn species_items(
    m: &FiniteMagma,
    species: &SubsetPredicate,
    limits: SearchLimits,
) -> Result<(Vec<(Vec<usize>, usize)>, bool)> {
    let e = enumerate_closed_subsets(m, species, limits)?;
    let items = e.subsets.into_iter().map(|s| {
        let n = s.len();
        (s.into_members(), n)
    });
    Ok((items.collect(), e.complete))
}

pub fn lagrange_classify(m: &FiniteMagma, species: &SubsetPredicate) -> Result<ClassReport> {
    lagrange_classify_with(m, species, SearchLimits::default())
}

pub fn lagrange_classify_with(
    m: &FiniteMagma,
    species: &SubsetPredicate,
    limits: SearchLimits,
) -> Result<ClassReport> {
    let (items, complete) = species_items(m, species, limits)?;
    Ok(lagrange_verdict(m.order(), items, complete, species.name()))
}

pub fn sylow_classify(
    m: &FiniteMagma,
    species: &SubsetPredicate,
    variant: SylowVariant,
) -> Result<ClassReport> {
    sylow_classify_with(m, species, variant, SearchLimits::default())
}

pub fn sylow_classify_with(
    m: &FiniteMagma,
    species: &SubsetPredicate,
    variant: SylowVariant,
    limits: SearchLimits,
) -> Result<ClassReport> {
    if m.order() < 2 {
        return Err(Error::Precondition("Sylow classification needs order ≥ 2".into()));
    }
    let (items, complete) = species_items(m, species, limits)?;
    Ok(sylow_verdict(m.order(), items, variant, complete, species.name()))
}

/// Torsion items of the given elements, skipping orders equal to 1.
pub fn torsion_items(
    m: &FiniteMagma,
    elements: &[usize],
    offset: usize,
) -> Result<Vec<(Vec<usize>, usize, &'static str)>> {
    let mut out = Vec::new();
    for &x in elements {
        let o = element_orders(m, x)?;
        if let Some(k) = o.real_order.filter(|&k| k > 1) {
            out.push((vec![x + offset], k, "real"));
        }
        if let Some(t) = o.neutro_order.filter(|&t| t > 1) {
            out.push((vec![x + offset], t, "neutro"));
        }
    }
    Ok(out)
}

/// Cauchy classification; with `relative_to`, orders are tested against the
/// size of that subset and only its members are examined.
pub fn cauchy_classify(m: &FiniteMagma, relative_to: Option<&Subset>) -> Result<ClassReport> {
    let (elements, total): (Vec<usize>, usize) = match relative_to {
        Some(s) => {
            m.check_subset(s)?;
            (s.members().to_vec(), s.len())
        }
        None => (m.elements().collect(), m.order()),
    };
    let mut r = cauchy_verdict(total, torsion_items(m, &elements, 0)?);
    if m.effective_identity().is_none() {
        r.notes.push("no identity; real orders skipped".into());
    }
    if m.neutro_identity().is_none() {
        r.notes.push("no neutrosophic identity; neutrosophic orders skipped".into());
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strength {
    Strong,
    Weak,
}

/// Whether the law holds on one substructure, checked in the induced magma.
/// Inverse-dependent laws are checked on its unit group.
pub fn law_holds_on(m: &FiniteMagma, law: IdentityLaw, s: &Subset) -> Result<bool> {
    let sub = m.restrict(s)?;
    if law.needs_inverses() {
        if sub.effective_identity().is_none() {
            return Ok(false);
        }
        let u = units(&sub);
        return Ok(check_identity_law(&sub, law, Some(&u))?.holds);
    }
    Ok(check_identity_law(&sub, law, None)?.holds)
}

/// Identity-class verdict quantified over species substructures.
pub fn s_identity_class(
    m: &FiniteMagma,
    law: IdentityLaw,
    species: &SubsetPredicate,
    strength: Strength,
) -> Result<Verdict3> {
    let e = enumerate_closed_subsets(m, species, SearchLimits::default())?;
    if e.subsets.is_empty() {
        return Ok(Verdict3::Vacuous);
    }
    let mut hits = 0;
    for s in &e.subsets {
        if law_holds_on(m, law, s)? {
            hits += 1;
        }
    }
    Ok(match (strength, hits) {
        (_, 0) => Verdict3::Free,
        (Strength::Strong, h) if h == e.subsets.len() => Verdict3::Full,
        _ => Verdict3::Weak,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperReport {
    pub largest_group: Option<Subset>,
    pub hyper_subsemigroup: Option<Subset>,
    pub s_simple: bool,
    pub complete: bool,
    pub note: Option<String>,
}

/// Largest proper subgroup and the smallest proper subsemigroup strictly
/// containing it.
pub fn s_hyper_and_simple(m: &FiniteMagma) -> Result<HyperReport> {
    let basic = classify_basic(m);
    if !basic.is_semigroup {
        return Err(Error::Precondition(format!("{} is not a semigroup", m.kind())));
    }
    if basic.is_group {
        return Ok(HyperReport {
            largest_group: Some(Subset::full(m.order())),
            hyper_subsemigroup: None,
            s_simple: true,
            complete: true,
            note: Some("the largest subgroup is the whole carrier".into()),
        });
    }
    let limits = SearchLimits::default();
    let groups = enumerate_closed_subsets(m, &SubsetPredicate::IsGroup, limits)?;
    let Some(max) = groups.subsets.iter().map(|g| g.len()).max() else {
        return Ok(HyperReport {
            largest_group: None,
            hyper_subsemigroup: None,
            s_simple: true,
            complete: groups.complete,
            note: Some("no subgroup of order ≥ 2".into()),
        });
    };
    let g = groups.subsets.iter().find(|g| g.len() == max).cloned().expect("max exists");
    let semis = enumerate_closed_subsets(m, &SubsetPredicate::IsSemigroup, limits)?;
    let hyper = semis
        .subsets
        .iter()
        .filter(|s| s.len() > g.len() && g.is_subset_of(s))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .cloned();
    Ok(HyperReport {
        s_simple: hyper.is_none(),
        largest_group: Some(g),
        hyper_subsemigroup: hyper,
        complete: groups.complete && semis.complete,
        note: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CosetFlavor {
    Plain,
    Pseudo,
}

/// Right coset `h·a` over a neutrosophic or pseudo neutrosophic subgroup.
pub fn s_cosets(m: &FiniteMagma, h: &Subset, a: usize, flavor: CosetFlavor) -> Result<Subset> {
    m.check_subset(h)?;
    let ok = match flavor {
        CosetFlavor::Plain => {
            SubsetPredicate::IsNeutrosophicSubgroup.eval(m, h) || (!h.is_empty() && is_closed(m, h))
        }
        CosetFlavor::Pseudo => SubsetPredicate::IsPseudoNeutrosophicSubgroup.eval(m, h),
    };
    if !ok {
        let what = match flavor {
            CosetFlavor::Plain => "neutrosophic-subgroup or closed",
            CosetFlavor::Pseudo => "pseudo-neutrosophic-subgroup",
        };
        return Err(Error::Precondition(format!("{} fails {what}", m.show(h))));
    }
    cosets(m, h, a, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lagrange_trichotomy() {
        let f = |orders: &[usize]| {
            lagrange_verdict(12, orders.iter().map(|&o| (vec![], o)).collect(), true, "x").verdict
        };
        assert_eq!(f(&[]), Verdict3::Vacuous);
        assert_eq!(f(&[2, 3, 4]), Verdict3::Full);
        assert_eq!(f(&[2, 5]), Verdict3::Weak);
        assert_eq!(f(&[5, 7]), Verdict3::Free);
    }

    #[test]
    fn sylow_standard_and_semi() {
        let items = |o: &[usize]| o.iter().map(|&x| (vec![], x)).collect::<Vec<_>>();
        let r = sylow_verdict(12, items(&[4, 3]), SylowVariant::Standard, true, "x");
        assert_eq!(r.verdict, Verdict3::Full);
        let r = sylow_verdict(12, items(&[4]), SylowVariant::Standard, true, "x");
        assert_eq!(r.verdict, Verdict3::Weak);
        let r = sylow_verdict(12, items(&[2]), SylowVariant::Semi, true, "x");
        assert_eq!(r.verdict, Verdict3::Weak);
        let r = sylow_verdict(7, items(&[2]), SylowVariant::Standard, true, "x");
        assert_eq!(r.verdict, Verdict3::Free);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn cauchy_trichotomy() {
        assert_eq!(cauchy_verdict(10, vec![]).verdict, Verdict3::Vacuous);
        assert_eq!(cauchy_verdict(10, vec![(vec![0], 2, "real")]).verdict, Verdict3::Full);
        assert_eq!(cauchy_verdict(9, vec![(vec![0], 2, "real")]).verdict, Verdict3::Free);
    }

    #[test]
    fn report_json_shape() {
        let r = lagrange_verdict(4, vec![(vec![0, 1], 2)], true, "x");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "full");
        assert_eq!(v["witnesses"][0]["members"], serde_json::json!([0, 1]));
        assert!(v.get("species").is_none());
    }
}
