//! Cayley-table magmas and index subsets.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite magma stored as a flat `k × k` Cayley table over indices `0..k`.
///
/// Every constructor in the crate normalizes into this type. Values are
/// immutable once built; all algebra reads the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMagma {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    identity: Option<usize>,
    neutro_mask: Vec<bool>,
    neutro_identity: Option<usize>,
    kind: String,
}

impl FiniteMagma {
    /// Builds and validates a magma from a flat row-major table.
    pub fn new(
        kind: impl Into<String>,
        labels: Vec<String>,
        table: Vec<usize>,
        identity: Option<usize>,
        neutro_mask: Vec<bool>,
        neutro_identity: Option<usize>,
    ) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::Parameter("a magma needs at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::Parameter(format!(
                "table has {} cells, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::Domain(format!("table entry {bad} outside 0..{order}")));
        }
        if neutro_mask.len() != order {
            return Err(Error::Parameter(format!(
                "neutro mask has {} entries, expected {order}",
                neutro_mask.len()
            )));
        }
        let mut index = HashMap::with_capacity(order);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Parameter(format!("duplicate label {l:?}")));
            }
        }
        let m = FiniteMagma {
            order,
            table,
            labels,
            index,
            identity,
            neutro_mask,
            neutro_identity,
            kind: kind.into(),
        };
        if let Some(e) = identity {
            if e >= order {
                return Err(Error::Domain(format!("identity {e} outside 0..{order}")));
            }
            if let Some(x) = (0..order).find(|&x| m.op(e, x) != x || m.op(x, e) != x) {
                return Err(Error::Parameter(format!(
                    "declared identity {} fails on {}",
                    m.labels[e], m.labels[x]
                )));
            }
        }
        if let Some(n) = neutro_identity {
            if n >= order {
                return Err(Error::Domain(format!("neutro identity {n} outside 0..{order}")));
            }
            if !m.neutro_mask[n] {
                return Err(Error::Parameter(format!(
                    "neutro identity {} is not marked neutrosophic",
                    m.labels[n]
                )));
            }
        }
        Ok(m)
    }

    /// Builds a magma from an operation closure; the identity is detected.
    pub fn from_fn(
        kind: impl Into<String>,
        labels: Vec<String>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let k = labels.len();
        let mut table = Vec::with_capacity(k * k);
        for x in 0..k {
            for y in 0..k {
                table.push(f(x, y));
            }
        }
        let mut m = FiniteMagma::new(kind, labels, table, None, vec![false; k], None)?;
        m.identity = m.find_identity();
        Ok(m)
    }

    /// Returns a copy carrying the given neutrosophic mask and designated `I`.
    pub fn with_neutro(self, mask: Vec<bool>, neutro_identity: Option<usize>) -> Result<Self> {
        FiniteMagma::new(
            self.kind,
            self.labels,
            self.table,
            self.identity,
            mask,
            neutro_identity,
        )
    }

    /// Returns a copy with a different provenance tag.
    pub fn with_kind(mut self, kind: impl Into<String>) -> Self {
        self.kind = kind.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Table lookup without range checks beyond slice indexing.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// Checked table lookup.
    pub fn apply(&self, x: usize, y: usize) -> Result<usize> {
        if x >= self.order || y >= self.order {
            return Err(Error::Domain(format!(
                "index pair ({x}, {y}) outside 0..{}",
                self.order
            )));
        }
        Ok(self.op(x, y))
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Looks up a label, failing with a domain error when it is unknown.
    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::Domain(format!("unknown label {label:?} in {}", self.kind)))
    }

    /// Builds a subset from labels.
    pub fn subset(&self, labels: &[&str]) -> Result<Subset> {
        labels.iter().map(|l| self.idx(l)).collect::<Result<Vec<_>>>().map(Subset::new)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn neutro_identity(&self) -> Option<usize> {
        self.neutro_identity
    }

    pub fn neutro_mask(&self) -> &[bool] {
        &self.neutro_mask
    }

    pub fn is_neutro(&self, x: usize) -> bool {
        self.neutro_mask[x]
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The two-sided identity of the table, if any.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    /// Declared identity, falling back to detection.
    pub fn effective_identity(&self) -> Option<usize> {
        self.identity.or_else(|| self.find_identity())
    }

    /// The two-sided inverse of `x` relative to the effective identity.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let e = self.effective_identity()?;
        (0..self.order).find(|&y| self.op(x, y) == e && self.op(y, x) == e)
    }

    /// Fails when any member of `s` is out of range.
    pub fn check_subset(&self, s: &Subset) -> Result<()> {
        match s.members().last() {
            Some(&x) if x >= self.order => Err(Error::Domain(format!(
                "subset member {x} outside 0..{}",
                self.order
            ))),
            _ => Ok(()),
        }
    }

    /// The set `{a·b : a ∈ xs, b ∈ ys}`.
    pub fn product_set(&self, xs: &[usize], ys: &[usize]) -> Subset {
        Subset::new(xs.iter().flat_map(|&a| ys.iter().map(move |&b| self.op(a, b))))
    }

    /// The submagma on a closed subset, relabelled in member order.
    pub fn restrict(&self, s: &Subset) -> Result<FiniteMagma> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Err(Error::Parameter("cannot restrict to the empty set".into()));
        }
        let pos: HashMap<usize, usize> =
            s.members().iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = Vec::with_capacity(s.len() * s.len());
        for &x in s.members() {
            for &y in s.members() {
                let z = self.op(x, y);
                let p = pos.get(&z).ok_or_else(|| {
                    Error::Precondition(format!(
                        "subset not closed: {}·{} = {}",
                        self.label(x),
                        self.label(y),
                        self.label(z)
                    ))
                })?;
                table.push(*p);
            }
        }
        let labels = s.members().iter().map(|&x| self.labels[x].clone()).collect();
        let mask = s.members().iter().map(|&x| self.neutro_mask[x]).collect();
        let ni = self.neutro_identity.and_then(|n| pos.get(&n).copied());
        let mut m = FiniteMagma::new(
            format!("{}|restrict", self.kind),
            labels,
            table,
            None,
            mask,
            ni,
        )?;
        m.identity = m.find_identity();
        Ok(m)
    }

    /// Renders a subset with this magma's labels.
    pub fn show(&self, s: &Subset) -> String {
        let parts: Vec<&str> = s.members().iter().map(|&x| self.label(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn to_doc(&self) -> MagmaDoc {
        MagmaDoc {
            kind: self.kind.clone(),
            order: self.order,
            labels: self.labels.clone(),
            table: (0..self.order).map(|x| self.row(x).to_vec()).collect(),
            identity: self.identity,
            neutro_mask: self.neutro_mask.clone(),
            neutro_identity: self.neutro_identity,
        }
    }

    pub fn from_doc(doc: MagmaDoc) -> Result<Self> {
        if doc.order != doc.labels.len() || doc.table.len() != doc.order {
            return Err(Error::Parameter(format!(
                "order {} disagrees with {} labels / {} rows",
                doc.order,
                doc.labels.len(),
                doc.table.len()
            )));
        }
        if let Some(r) = doc.table.iter().position(|r| r.len() != doc.order) {
            return Err(Error::Parameter(format!("row {r} has the wrong length")));
        }
        let table = doc.table.into_iter().flatten().collect();
        FiniteMagma::new(
            doc.kind,
            doc.labels,
            table,
            doc.identity,
            doc.neutro_mask,
            doc.neutro_identity,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("magma documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        FiniteMagma::from_doc(serde_json::from_str(s)?)
    }
}

impl fmt::Display for FiniteMagma {
    /// Prints the Cayley table with a header row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        write!(f, "{:>w$} |", "·")?;
        for l in &self.labels {
            write!(f, " {l:>w$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((w + 1) * (self.order + 1) + 1))?;
        for x in 0..self.order {
            write!(f, "{:>w$} |", self.labels[x])?;
            for y in 0..self.order {
                write!(f, " {:>w$}", self.labels[self.op(x, y)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// JSON interchange form of a magma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagmaDoc {
    pub kind: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: Option<usize>,
    pub neutro_mask: Vec<bool>,
    pub neutro_identity: Option<usize>,
}

/// A sorted, duplicate-free set of element indices.
///
/// Subsets are not tied to a magma by lifetime; operations take the parent
/// magma alongside and range-check where it matters. The derived ordering is
/// lexicographic by member list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Subset(v)
    }

    pub fn full(order: usize) -> Self {
        Subset((0..order).collect())
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_members(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Membership vector of length `order`.
    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut v = vec![false; order];
        for &x in &self.0 {
            v[x] = true;
        }
        v
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::new(iter)
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
