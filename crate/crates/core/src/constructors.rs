//! Concrete families: the loops `L_n(m)`, the groupoids `Z_n(t, u)`, and the
//! standard groups and semigroups used as components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Prime factorization by trial division, as `(p, α)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Parameters of `L_n(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LnParams {
    pub n: u64,
    pub m: u64,
}

impl LnParams {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n <= 3 || n % 2 == 0 {
            return Err(Error::Parameter(format!("L_n(m) needs odd n > 3, got n = {n}")));
        }
        if m <= 1 || m >= n {
            return Err(Error::Parameter(format!("L_n(m) needs 1 < m < n, got m = {m}")));
        }
        if gcd(m, n) != 1 {
            return Err(Error::Parameter(format!("gcd(m, n) = gcd({m}, {n}) = {} ≠ 1", gcd(m, n))));
        }
        if gcd(m - 1, n) != 1 {
            return Err(Error::Parameter(format!(
                "gcd(m − 1, n) = gcd({}, {n}) = {} ≠ 1",
                m - 1,
                gcd(m - 1, n)
            )));
        }
        Ok(LnParams { n, m })
    }
}

/// The loop `L_n(m)` on `{e, 1, …, n}`: `e` is the identity, `i·i = e`, and
/// `i·j = mj − (m−1)i (mod n)` otherwise, with residue 0 written `n`.
pub fn ln(n: u64, m: u64) -> Result<FiniteMagma> {
    let p = LnParams::new(n, m)?;
    let k = (p.n + 1) as usize;
    let mut labels = vec!["e".to_string()];
    labels.extend((1..=p.n).map(|i| i.to_string()));
    let nn = p.n as i64;
    let mm = p.m as i64;
    FiniteMagma::from_fn(format!("ln({},{})", p.n, p.m), labels, |x, y| {
        if x == 0 {
            y
        } else if y == 0 {
            x
        } else if x == y {
            0
        } else {
            let r = (mm * y as i64 - (mm - 1) * x as i64).rem_euclid(nn);
            if r == 0 {
                k - 1
            } else {
                r as usize
            }
        }
    })
}

/// Admissible multipliers for `L_n`.
pub fn ln_multipliers(n: u64) -> Vec<u64> {
    if n <= 3 || n % 2 == 0 {
        return Vec::new();
    }
    (2..n).filter(|&m| gcd(m, n) == 1 && gcd(m - 1, n) == 1).collect()
}

pub fn ln_class(n: u64) -> Result<Vec<FiniteMagma>> {
    if n <= 3 || n % 2 == 0 {
        return Err(Error::Parameter(format!("L_n needs odd n > 3, got {n}")));
    }
    ln_multipliers(n).into_iter().map(|m| ln(n, m)).collect()
}

/// `|L_n| = Π (p − 2) p^(α−1)`.
pub fn ln_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, a)| (p - 2) * p.pow(a - 1)).product()
}

/// Strictly non-commutative members, `F_n = Π (p − 3) p^(α−1)`.
pub fn ln_strict_noncomm_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, a)| (p - 3) * p.pow(a - 1)).product()
}

/// Membership class of a `Z_n(t, u)` groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZnClass {
    /// `t ≠ u`, both nonzero, coprime.
    Z,
    /// `t ≠ u`, both nonzero.
    Zstar,
    /// Both nonzero, `t = u` allowed.
    Zdoublestar,
    /// Zeros allowed.
    Ztriplestar,
}

impl ZnClass {
    pub fn name(self) -> &'static str {
        match self {
            ZnClass::Z => "z",
            ZnClass::Zstar => "zstar",
            ZnClass::Zdoublestar => "zdoublestar",
            ZnClass::Ztriplestar => "ztriplestar",
        }
    }

    pub fn parse(s: &str) -> Option<ZnClass> {
        [ZnClass::Z, ZnClass::Zstar, ZnClass::Zdoublestar, ZnClass::Ztriplestar]
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
    }

    /// Whether `(t, u)` belongs to this class over `Z_n`.
    pub fn admits(self, n: u64, t: u64, u: u64) -> bool {
        if t >= n || u >= n {
            return false;
        }
        match self {
            ZnClass::Z => t != 0 && u != 0 && t != u && gcd(t, u) == 1,
            ZnClass::Zstar => t != 0 && u != 0 && t != u,
            ZnClass::Zdoublestar => t != 0 && u != 0,
            ZnClass::Ztriplestar => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZnGroupoidParams {
    pub n: u64,
    pub t: u64,
    pub u: u64,
    pub class: ZnClass,
}

impl ZnGroupoidParams {
    pub fn new(n: u64, t: u64, u: u64, class: ZnClass) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("Z_n(t, u) needs n ≥ 3, got {n}")));
        }
        if !class.admits(n, t, u) {
            return Err(Error::Parameter(format!(
                "(t, u) = ({t}, {u}) is not admissible for class {} over Z_{n}",
                class.name()
            )));
        }
        Ok(ZnGroupoidParams { n, t, u, class })
    }
}

/// `a * b = ta + ub (mod n)`.
pub fn zn(p: &ZnGroupoidParams) -> Result<FiniteMagma> {
    let p = ZnGroupoidParams::new(p.n, p.t, p.u, p.class)?;
    let n = p.n as usize;
    let (t, u) = (p.t as usize, p.u as usize);
    FiniteMagma::from_fn(
        format!("zn({},{},{})", p.n, p.t, p.u),
        (0..n).map(|i| i.to_string()).collect(),
        |a, b| (t * a + u * b) % n,
    )
}

/// Shorthand for a class `Zstar` groupoid, the class most examples use.
pub fn zn_star(n: u64, t: u64, u: u64) -> Result<FiniteMagma> {
    zn(&ZnGroupoidParams::new(n, t, u, ZnClass::Zstar)?)
}

/// All `(t, u)` admitted by `class` over `Z_n`, lexicographically.
pub fn zn_class_members(n: u64, class: ZnClass) -> Vec<(u64, u64)> {
    (0..n)
        .flat_map(|t| (0..n).map(move |u| (t, u)))
        .filter(|&(t, u)| class.admits(n, t, u))
        .collect()
}

/// Number of groupoids in the class: closed form for `Zstar`, a gcd sieve
/// for `Z`.
pub fn zn_class_size(n: u64, class: ZnClass) -> u64 {
    match class {
        ZnClass::Zstar => (n - 1) * (n - 2),
        ZnClass::Zdoublestar => (n - 1) * (n - 1),
        ZnClass::Ztriplestar => n * n,
        ZnClass::Z => zn_class_members(n, ZnClass::Z).len() as u64,
    }
}

/// `Z_n` under multiplication.
pub fn zmod_mult(n: u64) -> Result<FiniteMagma> {
    if n < 2 {
        return Err(Error::Parameter(format!("Z_n needs n ≥ 2, got {n}")));
    }
    let k = n as usize;
    FiniteMagma::from_fn(format!("zmod({n})"), (0..k).map(|i| i.to_string()).collect(), |a, b| {
        a * b % k
    })
}

/// `Z_n` under addition, written multiplicatively as powers of `g`.
pub fn cyclic(n: u64) -> Result<FiniteMagma> {
    if n < 1 {
        return Err(Error::Parameter("a cyclic group needs n ≥ 1".into()));
    }
    let k = n as usize;
    let labels = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteMagma::from_fn(format!("cyclic({n})"), labels, |a, b| (a + b) % k)
}

/// Permutations of `1..=n` in lexicographic order of their one-line form.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x];
        }
        let parts: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("({})", parts.join(" ")));
    }
    if s.is_empty() {
        "()".into()
    } else {
        s
    }
}

fn is_even(p: &[usize]) -> bool {
    let inv = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inv % 2 == 0
}

/// Product `(pq)(i) = q(p(i))`: apply `p` first.
fn perm_group(kind: String, perms: Vec<Vec<usize>>) -> Result<FiniteMagma> {
    let pos: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    FiniteMagma::from_fn(kind, labels, |a, b| {
        let c: Vec<usize> = perms[a].iter().map(|&i| perms[b][i]).collect();
        pos[&c]
    })
}

pub fn symmetric_group(n: u64) -> Result<FiniteMagma> {
    if !(1..=5).contains(&n) {
        return Err(Error::ResourceLimit(format!("symmetric groups limited to n ≤ 5, got {n}")));
    }
    perm_group(format!("sym({n})"), permutations(n as usize))
}

pub fn alternating(n: u64) -> Result<FiniteMagma> {
    if !(1..=5).contains(&n) {
        return Err(Error::ResourceLimit(format!(
            "alternating groups limited to n ≤ 5, got {n}"
        )));
    }
    let perms = permutations(n as usize).into_iter().filter(|p| is_even(p)).collect();
    perm_group(format!("alt({n})"), perms)
}

/// `D_{2,n} = ⟨a, b | a² = bⁿ = 1, bab = a⟩`, elements `aⁱbʲ`.
pub fn dihedral(n: u64) -> Result<FiniteMagma> {
    if n < 1 {
        return Err(Error::Parameter("dihedral groups need n ≥ 1".into()));
    }
    let k = n as usize;
    let label = |i: usize, j: usize| {
        let b = match j {
            0 => String::new(),
            1 => "b".into(),
            _ => format!("b^{j}"),
        };
        match (i, j) {
            (0, 0) => "1".into(),
            (0, _) => b,
            _ => format!("a{b}"),
        }
    };
    let labels = (0..2).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| label(i, j)).collect();
    FiniteMagma::from_fn(format!("dihedral({n})"), labels, |x, y| {
        let (i, j) = (x / k, x % k);
        let (p, q) = (y / k, y % k);
        let j2 = if p == 1 { (k - j) % k } else { j };
        ((i + p) % 2) * k + (j2 + q) % k
    })
}

/// All maps `{1..n} → {1..n}` under composition (apply left first).
pub fn symmetric_semigroup(n: u64) -> Result<FiniteMagma> {
    if !(1..=4).contains(&n) {
        return Err(Error::ResourceLimit(format!(
            "symmetric semigroups limited to n ≤ 4, got {n}"
        )));
    }
    let k = n as usize;
    let total = k.pow(k as u32);
    let maps: Vec<Vec<usize>> = (0..total)
        .map(|mut c| {
            let mut v = vec![0; k];
            for slot in v.iter_mut().rev() {
                *slot = c % k;
                c /= k;
            }
            v
        })
        .collect();
    let code = |v: &[usize]| v.iter().fold(0, |acc, &d| acc * k + d);
    let labels = maps
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(|d| (d + 1).to_string()).collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    FiniteMagma::from_fn(format!("symsemi({n})"), labels, |a, b| {
        let c: Vec<usize> = maps[a].iter().map(|&i| maps[b][i]).collect();
        code(&c)
    })
}

/// Componentwise product; labels are pairs.
pub fn direct_product(m1: &FiniteMagma, m2: &FiniteMagma) -> Result<FiniteMagma> {
    let (k1, k2) = (m1.order(), m2.order());
    let labels = (0..k1 * k2)
        .map(|i| format!("({},{})", m1.label(i / k2), m2.label(i % k2)))
        .collect();
    let mask: Vec<bool> = (0..k1 * k2)
        .map(|i| m1.is_neutro(i / k2) || m2.is_neutro(i % k2))
        .collect();
    let p = FiniteMagma::from_fn(format!("product({},{})", m1.kind(), m2.kind()), labels, |x, y| {
        m1.op(x / k2, y / k2) * k2 + m2.op(x % k2, y % k2)
    })?;
    p.with_neutro(mask, None)
}
