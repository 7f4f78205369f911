//! Neutrosophic carriers and the neutrosophic subset predicates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, Subset};
use crate::ops::classify_basic;
use crate::search::{generated_closure, is_closed, SearchLimits};
use crate::species::{self, SubsetPredicate};

/// The element `a + bI` of `Z_n[I]`, with `I² = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NeutroResidue {
    pub a: u64,
    pub b: u64,
}

impl NeutroResidue {
    pub fn new(a: u64, b: u64, n: u64) -> Self {
        NeutroResidue { a: a % n, b: b % n }
    }

    pub fn is_neutro(self) -> bool {
        self.b != 0
    }

    /// `(a + bI)(c + dI) = ac + (ad + bc + bd)I`.
    pub fn mul(self, o: NeutroResidue, n: u64) -> NeutroResidue {
        NeutroResidue::new(self.a * o.a, self.a * o.b + self.b * o.a + self.b * o.b, n)
    }

    /// Canonical label: `0`, `a`, `bI`, `a+bI`, with `I` for `b = 1`.
    pub fn label(self) -> String {
        let i = match self.b {
            0 => String::new(),
            1 => "I".into(),
            b => format!("{b}I"),
        };
        match (self.a, self.b) {
            (a, 0) => a.to_string(),
            (0, _) => i,
            (a, _) => format!("{a}+{i}"),
        }
    }

    /// Position in [`zn_full_neutro`]: reals first, then by `b`.
    pub fn index(self, n: u64) -> usize {
        (self.b * n + self.a) as usize
    }

    pub fn from_index(i: usize, n: u64) -> Self {
        NeutroResidue { a: i as u64 % n, b: i as u64 / n }
    }
}

/// How a neutrosophic carrier was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NeutroMode {
    Tagged,
    Full,
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NeutroExtensionMeta {
    pub base_order: usize,
    pub mode: NeutroMode,
    pub neutro_identity: Option<usize>,
}

/// Doubles a magma to `{x, xI}`. Any product with a tagged operand is the
/// base product, tagged; `eI` is the designated indeterminate.
pub fn extend_tagged(base: &FiniteMagma) -> Result<FiniteMagma> {
    let k = base.order();
    let mut labels: Vec<String> = base.labels().to_vec();
    labels.extend(base.labels().iter().map(|l| format!("{l}I")));
    let m = FiniteMagma::from_fn(format!("tagged({})", base.kind()), labels, |x, y| {
        let p = base.op(x % k, y % k);
        if x >= k || y >= k {
            p + k
        } else {
            p
        }
    })?;
    let mask = (0..2 * k).map(|i| i >= k).collect();
    let ni = base.effective_identity().map(|e| e + k);
    m.with_neutro(mask, ni)
}

pub fn tagged_meta(base: &FiniteMagma, ext: &FiniteMagma) -> NeutroExtensionMeta {
    NeutroExtensionMeta {
        base_order: base.order(),
        mode: NeutroMode::Tagged,
        neutro_identity: ext.neutro_identity(),
    }
}

/// Multiplicative magma of `Z_n[I] = {a + bI}`, order `n²`.
pub fn zn_full_neutro(n: u64) -> Result<FiniteMagma> {
    if n < 2 {
        return Err(Error::Parameter(format!("Z_n[I] needs n ≥ 2, got {n}")));
    }
    let k = (n * n) as usize;
    let els: Vec<NeutroResidue> = (0..k).map(|i| NeutroResidue::from_index(i, n)).collect();
    let labels = els.iter().map(|r| r.label()).collect();
    let m = FiniteMagma::from_fn(format!("zn_full_neutro({n})"), labels, |x, y| {
        els[x].mul(els[y], n).index(n)
    })?;
    let mask = els.iter().map(|r| r.is_neutro()).collect();
    m.with_neutro(mask, Some(NeutroResidue { a: 0, b: 1 }.index(n)))
}

/// `{0, …, n−1} ∪ {I, 2I, …, (n−1)I}` under multiplication, with `0I = 0`;
/// order `2n − 1`.
pub fn zn_line_neutro(n: u64) -> Result<FiniteMagma> {
    if n < 2 {
        return Err(Error::Parameter(format!("the line carrier needs n ≥ 2, got {n}")));
    }
    let nn = n as usize;
    let els: Vec<NeutroResidue> = (0..nn)
        .map(|a| NeutroResidue { a: a as u64, b: 0 })
        .chain((1..nn).map(|b| NeutroResidue { a: 0, b: b as u64 }))
        .collect();
    let pos = |r: NeutroResidue| if r.b == 0 { r.a as usize } else { nn - 1 + r.b as usize };
    let labels = els.iter().map(|r| r.label()).collect();
    let m = FiniteMagma::from_fn(format!("zn_line_neutro({n})"), labels, |x, y| {
        pos(els[x].mul(els[y], n))
    })?;
    let mask = els.iter().map(|r| r.is_neutro()).collect();
    m.with_neutro(mask, Some(nn))
}

/// The nonzero part of [`zn_line_neutro`], closed exactly when `n` is prime.
pub fn zn_line_neutro_nonzero(n: u64) -> Result<FiniteMagma> {
    let m = zn_line_neutro(n)?;
    let s = Subset::new(1..m.order());
    let r = m
        .restrict(&s)
        .map_err(|_| Error::Parameter(format!("nonzero elements of the line carrier are not closed for n = {n}")))?;
    Ok(r.with_kind(format!("zn_line_neutro_nonzero({n})")))
}

/// `Z_n[I]` under `(a + bI) * (c + dI) = (ta + uc) + (tb + ud)I`.
pub fn zn_full_neutro_groupoid(n: u64, t: u64, u: u64) -> Result<FiniteMagma> {
    if n < 2 {
        return Err(Error::Parameter(format!("Z_n[I] needs n ≥ 2, got {n}")));
    }
    let k = (n * n) as usize;
    let els: Vec<NeutroResidue> = (0..k).map(|i| NeutroResidue::from_index(i, n)).collect();
    let labels = els.iter().map(|r| r.label()).collect();
    let m = FiniteMagma::from_fn(format!("zn_full_neutro_groupoid({n},{t},{u})"), labels, |x, y| {
        NeutroResidue::new(t * els[x].a + u * els[y].a, t * els[x].b + u * els[y].b, n).index(n)
    })?;
    let mask = els.iter().map(|r| r.is_neutro()).collect();
    m.with_neutro(mask, Some(NeutroResidue { a: 0, b: 1 }.index(n)))
}

/// `{0, …, n−1} ∪ {I, …, (n−1)I}` under `a * b = ta + ub (mod n)` on
/// coefficients, where a tagged operand tags the result and `0I = 0`.
pub fn zn_line_neutro_groupoid(n: u64, t: u64, u: u64) -> Result<FiniteMagma> {
    if n < 2 {
        return Err(Error::Parameter(format!("the line carrier needs n ≥ 2, got {n}")));
    }
    let nn = n as usize;
    let coef = |x: usize| if x < nn { x } else { x - nn + 1 };
    let labels = (0..nn)
        .map(|a| a.to_string())
        .chain((1..nn).map(|b| NeutroResidue { a: 0, b: b as u64 }.label()))
        .collect();
    let m = FiniteMagma::from_fn(format!("zn_line_neutro_groupoid({n},{t},{u})"), labels, |x, y| {
        let c = (t as usize * coef(x) + u as usize * coef(y)) % nn;
        if (x < nn && y < nn) || c == 0 {
            c
        } else {
            nn - 1 + c
        }
    })?;
    let mask = (0..2 * nn - 1).map(|i| i >= nn).collect();
    m.with_neutro(mask, Some(nn))
}

pub fn is_neutrosophic_subset(m: &FiniteMagma, s: &Subset) -> bool {
    species::has_neutro(m, s)
}

pub fn is_neutrosophic_subgroup(m: &FiniteMagma, s: &Subset) -> bool {
    SubsetPredicate::IsNeutrosophicSubgroup.eval(m, s)
}

pub fn is_pseudo_neutrosophic_subgroup(m: &FiniteMagma, s: &Subset) -> bool {
    SubsetPredicate::IsPseudoNeutrosophicSubgroup.eval(m, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealMode {
    Plain,
    Maximal,
    Minimal,
    Principal,
}

fn is_plain_neutro_ideal(m: &FiniteMagma, s: &Subset) -> bool {
    !s.is_empty()
        && s.len() < m.order()
        && species::has_neutro(m, s)
        && is_closed(m, s)
        && species::is_left_absorbing(m, s)
        && species::is_right_absorbing(m, s)
}

/// Two-sided absorptive closure of `{x}`: the least set containing `x`
/// closed under products with anything on either side.
fn principal_ideal(m: &FiniteMagma, x: usize) -> Subset {
    let mut seed = vec![x];
    for y in m.elements() {
        seed.push(m.op(x, y));
        seed.push(m.op(y, x));
        for z in m.elements() {
            seed.push(m.op(m.op(y, x), z));
        }
    }
    seed.sort_unstable();
    seed.dedup();
    let mut cur = generated_closure(m, &seed).expect("seed is non-empty");
    loop {
        let mut next: Vec<usize> = cur.members().to_vec();
        for &a in cur.members() {
            for y in m.elements() {
                next.push(m.op(a, y));
                next.push(m.op(y, a));
            }
        }
        let n = Subset::new(next);
        if n == cur {
            return cur;
        }
        cur = n;
    }
}

pub fn neutrosophic_ideal_check(m: &FiniteMagma, s: &Subset, mode: IdealMode) -> Result<bool> {
    m.check_subset(s)?;
    if !classify_basic(m).is_semigroup {
        return Err(Error::Precondition(format!(
            "neutrosophic ideals need a semigroup; {} is not associative",
            m.kind()
        )));
    }
    match mode {
        IdealMode::Plain => Ok(is_plain_neutro_ideal(m, s)),
        IdealMode::Principal => Ok(is_plain_neutro_ideal(m, s)
            && s.iter().any(|&x| &principal_ideal(m, x) == s)),
        IdealMode::Maximal | IdealMode::Minimal => {
            if !is_plain_neutro_ideal(m, s) {
                return Ok(false);
            }
            let all = crate::search::enumerate_closed_subsets(
                m,
                &SubsetPredicate::IsIdeal,
                SearchLimits::default(),
            )?;
            if !all.complete {
                return Err(Error::ResourceLimit(
                    "maximal/minimal ideal checks need an exhaustive search".into(),
                ));
            }
            let ideals: Vec<&Subset> =
                all.subsets.iter().filter(|t| species::has_neutro(m, t)).collect();
            Ok(match mode {
                IdealMode::Maximal => {
                    !ideals.iter().any(|t| *t != s && s.is_subset_of(t))
                }
                _ => !ideals.iter().any(|t| *t != s && t.is_subset_of(s)),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_labels() {
        assert_eq!(NeutroResidue { a: 0, b: 0 }.label(), "0");
        assert_eq!(NeutroResidue { a: 0, b: 1 }.label(), "I");
        assert_eq!(NeutroResidue { a: 3, b: 1 }.label(), "3+I");
        assert_eq!(NeutroResidue { a: 2, b: 4 }.label(), "2+4I");
    }

    #[test]
    fn full_carrier_basics() {
        let m = zn_full_neutro(5).unwrap();
        assert_eq!(m.order(), 25);
        let i = m.idx("I").unwrap();
        assert_eq!(m.op(i, i), i);
        let t = m.idx("1+3I").unwrap();
        assert_eq!(m.label(m.op(t, t)), "1");
        assert_eq!(m.identity(), Some(m.idx("1").unwrap()));
    }

    #[test]
    fn line_carrier_basics() {
        let m = zn_line_neutro(6).unwrap();
        assert_eq!(m.order(), 11);
        assert_eq!(m.label(m.op(5, 5)), "1");
        assert_eq!(zn_line_neutro(7).unwrap().order(), 13);
    }

    #[test]
    fn tagged_doubling() {
        let z3 = FiniteMagma::from_fn("z3", vec!["0".into(), "1".into(), "2".into()], |x, y| {
            (x + y) % 3
        })
        .unwrap();
        let t = extend_tagged(&z3).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.label(t.op(1, 5)), "0I");
        assert_eq!(t.neutro_identity(), Some(3));
    }

    #[test]
    fn line_groupoid_is_closed_with_seven_elements() {
        let g = zn_line_neutro_groupoid(4, 2, 1).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.label(g.op(g.idx("1").unwrap(), g.idx("I").unwrap())), "3I");
    }

    #[test]
    fn ideal_modes() {
        let m = zn_line_neutro(6).unwrap();
        let j = m.subset(&["0", "2", "4", "2I", "4I"]).unwrap();
        assert!(neutrosophic_ideal_check(&m, &j, IdealMode::Plain).unwrap());
        let full = Subset::full(m.order());
        assert!(!neutrosophic_ideal_check(&m, &full, IdealMode::Plain).unwrap());
    }
}
