//! Structure-agnostic computations on a single magma: basic classification,
//! centres and nuclei, cosets, normality, ideals, conjugacy, element orders,
//! homomorphisms, isotopes and isomorphism search.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laws::{check_identity_law, IdentityLaw};
use crate::magma::{FiniteMagma, Subset};
use crate::search::{generated_closure, is_closed};
use crate::species::{is_left_absorbing, is_right_absorbing};

/// Which side a translate or ideal acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicReport {
    pub is_semigroup: bool,
    pub is_commutative: bool,
    pub is_loop: bool,
    pub is_group: bool,
    pub identity: Option<usize>,
    pub inverses_exist: bool,
}

/// True when every row and column is a permutation.
pub fn latin_square_check(m: &FiniteMagma) -> bool {
    crate::species::is_latin_on(m, &Subset::full(m.order()))
}

pub fn classify_basic(m: &FiniteMagma) -> BasicReport {
    let holds = |law| check_identity_law(m, law, None).map(|c| c.holds).unwrap_or(false);
    let identity = m.effective_identity();
    let is_semigroup = holds(IdentityLaw::Associative);
    let is_loop = identity.is_some() && latin_square_check(m);
    let inverses_exist = identity.is_some() && m.elements().all(|x| m.inverse(x).is_some());
    BasicReport {
        is_semigroup,
        is_commutative: holds(IdentityLaw::Commutative),
        is_loop,
        is_group: is_loop && is_semigroup,
        identity,
        inverses_exist,
    }
}

/// Elements commuting with everything.
pub fn center(m: &FiniteMagma) -> Subset {
    m.elements()
        .filter(|&x| m.elements().all(|a| m.op(a, x) == m.op(x, a)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nuclei {
    pub left: Subset,
    pub middle: Subset,
    pub right: Subset,
    pub nucleus: Subset,
    pub commutant: Subset,
    pub centre: Subset,
}

pub fn nuclei(m: &FiniteMagma) -> Result<Nuclei> {
    if m.effective_identity().is_none() {
        return Err(Error::Precondition("nuclei need an identity element".into()));
    }
    let assoc = |x: usize, y: usize, z: usize| m.op(m.op(x, y), z) == m.op(x, m.op(y, z));
    let pairs = |f: &dyn Fn(usize, usize) -> bool| m.elements().all(|x| m.elements().all(|y| f(x, y)));
    let left: Subset = m.elements().filter(|&a| pairs(&|x, y| assoc(a, x, y))).collect();
    let middle: Subset = m.elements().filter(|&a| pairs(&|x, y| assoc(x, a, y))).collect();
    let right: Subset = m.elements().filter(|&a| pairs(&|x, y| assoc(x, y, a))).collect();
    let nucleus: Subset =
        left.iter().copied().filter(|&a| middle.contains(a) && right.contains(a)).collect();
    let commutant = center(m);
    let centre = nucleus.iter().copied().filter(|&a| commutant.contains(a)).collect();
    Ok(Nuclei { left, middle, right, nucleus, commutant, centre })
}

fn require_loop(m: &FiniteMagma, what: &str) -> Result<usize> {
    match m.effective_identity() {
        Some(e) if latin_square_check(m) => Ok(e),
        _ => Err(Error::Precondition(format!("{what} needs a loop"))),
    }
}

/// The unique `w` with `a·w = b`.
fn left_div(m: &FiniteMagma, a: usize, b: usize) -> usize {
    m.elements().find(|&w| m.op(a, w) == b).expect("latin rows are permutations")
}

/// The unique `w` with `w·a = b`.
fn right_div(m: &FiniteMagma, b: usize, a: usize) -> usize {
    m.elements().find(|&w| m.op(w, a) == b).expect("latin columns are permutations")
}

/// The associator `(x, y, z)`: the `w` with `(xy)z = (x(yz))w`.
pub fn associator(m: &FiniteMagma, x: usize, y: usize, z: usize) -> usize {
    left_div(m, m.op(x, m.op(y, z)), m.op(m.op(x, y), z))
}

/// The commutator `(x, y)`: the `w` with `xy = (yx)w`.
pub fn commutator(m: &FiniteMagma, x: usize, y: usize) -> usize {
    left_div(m, m.op(y, x), m.op(x, y))
}

/// Subloop generated by all associators.
pub fn associator_subloop(m: &FiniteMagma) -> Result<Subset> {
    let e = require_loop(m, "the associator subloop")?;
    let mut gens = vec![e];
    for x in m.elements() {
        for y in m.elements() {
            for z in m.elements() {
                gens.push(associator(m, x, y, z));
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    generated_closure(m, &gens)
}

/// Subloop generated by all commutators.
pub fn commutator_subloop(m: &FiniteMagma) -> Result<Subset> {
    let e = require_loop(m, "the commutator subloop")?;
    let mut gens = vec![e];
    for x in m.elements() {
        for y in m.elements() {
            gens.push(commutator(m, x, y));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    generated_closure(m, &gens)
}

/// `h·a` (right) or `a·h` (left). No partition property is assumed.
pub fn cosets(m: &FiniteMagma, h: &Subset, a: usize, side: Side) -> Result<Subset> {
    m.check_subset(h)?;
    if a >= m.order() {
        return Err(Error::Domain(format!("element {a} outside 0..{}", m.order())));
    }
    Ok(match side {
        Side::Right => m.product_set(h.members(), &[a]),
        Side::Left => m.product_set(&[a], h.members()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCoset {
    pub set: Subset,
    /// False when the carrier is not a semigroup and products were grouped
    /// as `(a·x)·b`.
    pub associativity_assumed: bool,
}

/// `AxB = {(a·x)·b}`.
pub fn double_coset(m: &FiniteMagma, a: &Subset, b: &Subset, x: usize) -> Result<DoubleCoset> {
    m.check_subset(a)?;
    m.check_subset(b)?;
    if x >= m.order() {
        return Err(Error::Domain(format!("element {x} outside 0..{}", m.order())));
    }
    let ax = m.product_set(a.members(), &[x]);
    Ok(DoubleCoset {
        set: m.product_set(ax.members(), b.members()),
        associativity_assumed: classify_basic(m).is_semigroup,
    })
}

/// Quantifier range for the groupoid normality equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalRange {
    /// `x, y, a` range over the candidate subgroupoid.
    Subset,
    /// `x, y, a` range over the whole carrier.
    Whole,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalMode {
    /// `gHg⁻¹ = H` for all `g`; the carrier must be a group.
    Subgroup,
    /// `xH = Hx`, `(Hx)y = H(xy)`, `y(xH) = (yx)H` for all `x, y` in the loop.
    Subloop,
    /// The same three equations quantified over the given range.
    Subgroupoid(NormalRange),
}

impl NormalMode {
    /// Groupoid mode with the subset range.
    pub fn subgroupoid() -> Self {
        NormalMode::Subgroupoid(NormalRange::Subset)
    }
}

pub fn is_normal(m: &FiniteMagma, h: &Subset, mode: NormalMode) -> Result<bool> {
    m.check_subset(h)?;
    if h.is_empty() || !is_closed(m, h) {
        return Err(Error::Precondition(format!("{} is not closed", m.show(h))));
    }
    let hs = h.members();
    match mode {
        NormalMode::Subgroup => {
            if !classify_basic(m).is_group {
                return Err(Error::Precondition("subgroup normality needs a group".into()));
            }
            Ok(m.elements().all(|g| {
                let gi = m.inverse(g).expect("groups have inverses");
                let conj: Subset = hs.iter().map(|&x| m.op(m.op(g, x), gi)).collect();
                &conj == h
            }))
        }
        NormalMode::Subloop => Ok(three_equations(m, h, &Subset::full(m.order()))),
        NormalMode::Subgroupoid(range) => {
            let r = match range {
                NormalRange::Subset => h.clone(),
                NormalRange::Whole => Subset::full(m.order()),
            };
            Ok(three_equations(m, h, &r))
        }
    }
}

fn three_equations(m: &FiniteMagma, h: &Subset, range: &Subset) -> bool {
    let hs = h.members();
    for &x in range {
        if m.product_set(&[x], hs) != m.product_set(hs, &[x]) {
            return false;
        }
        let hx = m.product_set(hs, &[x]);
        let xh = m.product_set(&[x], hs);
        for &y in range {
            if m.product_set(hx.members(), &[y]) != m.product_set(hs, &[m.op(x, y)]) {
                return false;
            }
            if m.product_set(&[y], xh.members()) != m.product_set(&[m.op(y, x)], hs) {
                return false;
            }
        }
    }
    true
}

/// The literal reading "`H = xHy` for all `x, y`", kept apart from
/// [`is_normal`].
pub fn literal_xhy_normal(m: &FiniteMagma, h: &Subset) -> Result<bool> {
    m.check_subset(h)?;
    Ok(m.elements().all(|x| {
        let xh = m.product_set(&[x], h.members());
        m.elements().all(|y| &m.product_set(xh.members(), &[y]) == h)
    }))
}

/// Closed `p` absorbing products from the given side.
pub fn is_ideal(m: &FiniteMagma, p: &Subset, side: IdealSide) -> bool {
    if m.check_subset(p).is_err() || p.is_empty() || !is_closed(m, p) {
        return false;
    }
    match side {
        IdealSide::Left => is_left_absorbing(m, p),
        IdealSide::Right => is_right_absorbing(m, p),
        IdealSide::TwoSided => is_left_absorbing(m, p) && is_right_absorbing(m, p),
    }
}

/// An element conjugating one subset onto another, with the equations it
/// satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateWitness {
    pub element: usize,
    /// `x·h1 = h2·x`
    pub left: bool,
    /// `h1·x = x·h2`
    pub right: bool,
}

pub fn conjugate_witnesses(
    m: &FiniteMagma,
    h1: &Subset,
    h2: &Subset,
) -> Result<Vec<ConjugateWitness>> {
    for h in [h1, h2] {
        m.check_subset(h)?;
        if h.is_empty() || !is_closed(m, h) {
            return Err(Error::Precondition(format!("{} is not closed", m.show(h))));
        }
    }
    Ok(m.elements()
        .filter_map(|x| {
            let left = m.product_set(&[x], h1.members()) == m.product_set(h2.members(), &[x]);
            let right = m.product_set(h1.members(), &[x]) == m.product_set(&[x], h2.members());
            (left || right).then_some(ConjugateWitness { element: x, left, right })
        })
        .collect())
}

/// All pairs `(a, b)` with `a·x = y·b`, in lexicographic order.
pub fn conjugate_pairs(m: &FiniteMagma, x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in m.elements() {
        let ax = m.op(a, x);
        for b in m.elements() {
            if m.op(y, b) == ax {
                out.push((a, b));
            }
        }
    }
    out
}

/// The least pair `(a, b)` with `a·x = y·b`.
pub fn conjugate_pair(m: &FiniteMagma, x: usize, y: usize) -> Option<(usize, usize)> {
    conjugate_pairs(m, x, y).into_iter().next()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ElementOrders {
    pub real_order: Option<usize>,
    pub neutro_order: Option<usize>,
}

/// Left-associated powers `x, x·x, (x·x)·x, …`, up to the carrier order.
pub fn powers(m: &FiniteMagma, x: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.order());
    let mut p = x;
    for _ in 0..m.order() {
        out.push(p);
        p = m.op(p, x);
    }
    out
}

pub fn element_orders(m: &FiniteMagma, x: usize) -> Result<ElementOrders> {
    if x >= m.order() {
        return Err(Error::Domain(format!("element {x} outside 0..{}", m.order())));
    }
    let pw = powers(m, x);
    let first = |t: Option<usize>| t.and_then(|t| pw.iter().position(|&p| p == t).map(|i| i + 1));
    Ok(ElementOrders {
        real_order: first(m.effective_identity()),
        neutro_order: first(m.neutro_identity()),
    })
}

/// A map defined on part of a source magma.
#[derive(Clone, Debug)]
pub struct PartialMap<'a> {
    pub source: &'a FiniteMagma,
    pub target: &'a FiniteMagma,
    pairs: BTreeMap<usize, usize>,
}

impl<'a> PartialMap<'a> {
    pub fn new(
        source: &'a FiniteMagma,
        target: &'a FiniteMagma,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (x, y) in pairs {
            if x >= source.order() || y >= target.order() {
                return Err(Error::Domain(format!("pair ({x}, {y}) out of range")));
            }
            if map.insert(x, y).is_some() {
                return Err(Error::Parameter(format!(
                    "source element {} mapped twice",
                    source.label(x)
                )));
            }
        }
        Ok(PartialMap { source, target, pairs: map })
    }

    /// Builds a map from label pairs.
    pub fn from_labels(
        source: &'a FiniteMagma,
        target: &'a FiniteMagma,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let p = pairs
            .iter()
            .map(|(a, b)| Ok((source.idx(a)?, target.idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        PartialMap::new(source, target, p)
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.pairs.get(&x).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `f(x·y) = f(x)·f(y)` wherever `x`, `y` and `x·y` lie in the domain, and
/// `f(I) = I` when both sides designate an indeterminate.
pub fn check_homomorphism(f: &PartialMap<'_>) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::Parameter("homomorphism check needs a non-empty map".into()));
    }
    let (s, t) = (f.source, f.target);
    for (x, fx) in f.pairs() {
        for (y, fy) in f.pairs() {
            if let Some(fxy) = f.get(s.op(x, y)) {
                if fxy != t.op(fx, fy) {
                    return Ok(false);
                }
            }
        }
    }
    if let (Some(i), Some(j)) = (s.neutro_identity(), t.neutro_identity()) {
        if let Some(fi) = f.get(i) {
            if fi != j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The principal isotope `x∘y = (x/a)·(b\y)`; its identity is `b·a`.
pub fn principal_isotope(m: &FiniteMagma, a: usize, b: usize) -> Result<FiniteMagma> {
    require_loop(m, "a principal isotope")?;
    if a >= m.order() || b >= m.order() {
        return Err(Error::Domain("isotope parameters out of range".into()));
    }
    let xs: Vec<usize> = m.elements().map(|x| right_div(m, x, a)).collect();
    let ys: Vec<usize> = m.elements().map(|y| left_div(m, b, y)).collect();
    FiniteMagma::from_fn(
        format!("{}|isotope({},{})", m.kind(), m.label(a), m.label(b)),
        m.labels().to_vec(),
        |x, y| m.op(xs[x], ys[y]),
    )
}

/// A table-preserving bijection `m1 → m2`, if one exists.
pub fn is_isomorphic(
    m1: &FiniteMagma,
    m2: &FiniteMagma,
    max_order: usize,
) -> Result<Option<Vec<usize>>> {
    if m1.order() > max_order || m2.order() > max_order {
        return Err(Error::ResourceLimit(format!(
            "isomorphism search limited to order {max_order}"
        )));
    }
    if m1.order() != m2.order() {
        return Ok(None);
    }
    let k = m1.order();
    let e1 = m1.effective_identity();
    let e2 = m2.effective_identity();
    if e1.is_some() != e2.is_some() {
        return Ok(None);
    }
    let mut order: Vec<usize> = Vec::with_capacity(k);
    if let Some(e) = e1 {
        order.push(e);
    }
    order.extend((0..k).filter(|&x| Some(x) != e1));
    let sig = |m: &FiniteMagma, x: usize| {
        let mut p = powers(m, x);
        p.sort_unstable();
        p.dedup();
        (m.op(x, x) == x, p.len())
    };
    let sig1: Vec<_> = (0..k).map(|x| sig(m1, x)).collect();
    let sig2: Vec<_> = (0..k).map(|x| sig(m2, x)).collect();
    let mut phi = vec![usize::MAX; k];
    let mut used = vec![false; k];
    fn consistent(m1: &FiniteMagma, m2: &FiniteMagma, phi: &[usize], x: usize) -> bool {
        for y in 0..phi.len() {
            if phi[y] == usize::MAX {
                continue;
            }
            for (a, b) in [(x, y), (y, x)] {
                let z = m1.op(a, b);
                if phi[z] != usize::MAX && phi[z] != m2.op(phi[a], phi[b]) {
                    return false;
                }
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        order: &[usize],
        m1: &FiniteMagma,
        m2: &FiniteMagma,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig1: &[(bool, usize)],
        sig2: &[(bool, usize)],
        e2: Option<usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let candidates: Vec<usize> = match e2 {
            Some(e) if i == 0 => vec![e],
            _ => (0..phi.len()).filter(|&c| !used[c] && sig1[x] == sig2[c]).collect(),
        };
        for c in candidates {
            if used[c] {
                continue;
            }
            phi[x] = c;
            used[c] = true;
            if consistent(m1, m2, phi, x) && go(i + 1, order, m1, m2, phi, used, sig1, sig2, e2) {
                return true;
            }
            phi[x] = usize::MAX;
            used[c] = false;
        }
        false
    }
    if go(0, &order, m1, m2, &mut phi, &mut used, &sig1, &sig2, e2) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

/// The column permutation `x ↦ x·a`.
pub fn right_regular_representation(m: &FiniteMagma, a: usize) -> Result<Vec<usize>> {
    if a >= m.order() {
        return Err(Error::Domain(format!("element {a} outside 0..{}", m.order())));
    }
    let col: Vec<usize> = m.elements().map(|x| m.op(x, a)).collect();
    let mut seen = vec![false; m.order()];
    for &c in &col {
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::Precondition(format!(
                "column {} is not a permutation",
                m.label(a)
            )));
        }
    }
    Ok(col)
}
