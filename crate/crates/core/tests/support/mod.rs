//! Seeded random magmas and brute-force oracles that share no code with the
//! library beyond reading the table.

#![allow(dead_code)]

use std::collections::BTreeSet;

use neutromagma::FiniteMagma;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Plain copy of a Cayley table.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    pub cells: Vec<usize>,
    pub neutro: Vec<bool>,
}

impl Table {
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn of(m: &FiniteMagma) -> Table {
        let n = m.order();
        let cells = (0..n * n).map(|c| m.op(c / n, c % n)).collect();
        Table { n, cells, neutro: m.neutro_mask().to_vec() }
    }

    pub fn magma(&self) -> FiniteMagma {
        let labels = (0..self.n).map(|i| format!("x{i}")).collect();
        FiniteMagma::new("random", labels, self.cells.clone(), None, self.neutro.clone(), None)
            .expect("valid random table")
    }
}

fn latin_square(n: usize, r: &mut ChaCha8Rng) -> Vec<usize> {
    fn fill(n: usize, pos: usize, cells: &mut Vec<usize>, r: &mut ChaCha8Rng) -> bool {
        if pos == n * n {
            return true;
        }
        let (row, col) = (pos / n, pos % n);
        let mut cand: Vec<usize> = (0..n)
            .filter(|&v| (0..col).all(|c| cells[row * n + c] != v) && (0..row).all(|q| cells[q * n + col] != v))
            .collect();
        cand.shuffle(r);
        for v in cand {
            cells[pos] = v;
            if fill(n, pos + 1, cells, r) {
                return true;
            }
        }
        false
    }
    let mut cells = vec![0; n * n];
    assert!(fill(n, 0, &mut cells, r));
    cells
}

/// A random magma of order `1..=max`: an arbitrary table, a loop, or a table
/// with an adjoined identity, with a random neutrosophic mask.
pub fn random_table(r: &mut ChaCha8Rng, max: usize) -> Table {
    let n = r.gen_range(1..=max);
    let cells = match r.gen_range(0..3) {
        0 => (0..n * n).map(|_| r.gen_range(0..n)).collect(),
        1 => {
            let l = latin_square(n, r);
            let mut row_of = vec![0; n];
            let mut col_of = vec![0; n];
            for i in 0..n {
                row_of[l[i * n]] = i;
                col_of[l[i]] = i;
            }
            (0..n * n).map(|c| l[row_of[c / n] * n + col_of[c % n]]).collect()
        }
        _ => (0..n * n)
            .map(|c| {
                let (a, b) = (c / n, c % n);
                if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    r.gen_range(0..n)
                }
            })
            .collect(),
    };
    let neutro = (0..n).map(|_| r.gen_bool(0.4)).collect();
    Table { n, cells, neutro }
}

pub fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn closed(t: &Table, s: &[usize]) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| s.contains(&t.op(a, b))))
}

pub fn identity(t: &Table) -> Option<usize> {
    local_identity(t, &(0..t.n).collect::<Vec<_>>())
}

pub fn local_identity(t: &Table, s: &[usize]) -> Option<usize> {
    s.iter().copied().find(|&u| s.iter().all(|&x| t.op(u, x) == x && t.op(x, u) == x))
}

pub fn inverse(t: &Table, x: usize) -> Option<usize> {
    let e = identity(t)?;
    (0..t.n).find(|&y| t.op(x, y) == e && t.op(y, x) == e)
}

pub fn assoc(t: &Table, s: &[usize]) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| s.iter().all(|&c| t.op(t.op(a, b), c) == t.op(a, t.op(b, c)))))
}

pub fn group(t: &Table, s: &[usize]) -> bool {
    if s.is_empty() || !closed(t, s) || !assoc(t, s) {
        return false;
    }
    match local_identity(t, s) {
        Some(u) => s.iter().all(|&x| s.iter().any(|&y| t.op(x, y) == u && t.op(y, x) == u)),
        None => false,
    }
}

pub fn latin_loop(t: &Table, s: &[usize]) -> bool {
    if local_identity(t, s).is_none() {
        return false;
    }
    s.iter().all(|&a| {
        s.iter().all(|&b| {
            s.iter().filter(|&&x| t.op(a, x) == b).count() == 1 && s.iter().filter(|&&y| t.op(y, a) == b).count() == 1
        })
    })
}

/// Whether some subset of `within` of size at least 2 is a group; with
/// `proper`, the subset must also be smaller than `within`.
pub fn has_group_inside(t: &Table, within: &[usize], proper: bool) -> bool {
    let k = within.len();
    (1u32..1 << k).any(|mask| {
        let sub: Vec<usize> = members(mask, k).into_iter().map(|i| within[i]).collect();
        sub.len() >= 2 && (!proper || sub.len() < k) && group(t, &sub)
    })
}

pub fn real(t: &Table, s: &[usize]) -> Vec<usize> {
    s.iter().copied().filter(|&x| !t.neutro[x]).collect()
}

pub fn any_neutro(t: &Table, s: &[usize]) -> bool {
    s.iter().any(|&x| t.neutro[x])
}

pub fn left_absorbing(t: &Table, s: &[usize]) -> bool {
    s.iter().all(|&a| (0..t.n).all(|x| s.contains(&t.op(x, a))))
}

pub fn right_absorbing(t: &Table, s: &[usize]) -> bool {
    s.iter().all(|&a| (0..t.n).all(|x| s.contains(&t.op(a, x))))
}

/// Species by name, evaluated on a closed subset.
pub fn species(name: &str, t: &Table, s: &[usize]) -> bool {
    match name {
        "subgroupoid" => true,
        "semigroup" => assoc(t, s),
        "group" => s.len() >= 2 && group(t, s),
        "loop" => latin_loop(t, s),
        "ideal" => left_absorbing(t, s) && right_absorbing(t, s),
        "left-ideal" => left_absorbing(t, s),
        "right-ideal" => right_absorbing(t, s),
        "neutrosophic-semigroup" => any_neutro(t, s) && assoc(t, s),
        "s-neutrosophic-sub" => any_neutro(t, s) && has_group_inside(t, &real(t, s), false),
        "neutrosophic-subgroup" => {
            any_neutro(t, s) && local_identity(t, s).is_some() && has_group_inside(t, &real(t, s), false)
        }
        "pseudo-neutrosophic-subgroup" => {
            any_neutro(t, s) && local_identity(t, s).is_some() && !has_group_inside(t, &real(t, s), false)
        }
        "s-semigroup" => has_group_inside(t, s, true),
        "neutrosophic-submonoid" => any_neutro(t, s) && local_identity(t, s).is_some(),
        other => panic!("no oracle for {other}"),
    }
}

pub const ORACLE_SPECIES: &[&str] = &[
    "subgroupoid",
    "semigroup",
    "group",
    "loop",
    "ideal",
    "left-ideal",
    "right-ideal",
    "neutrosophic-semigroup",
    "s-neutrosophic-sub",
    "neutrosophic-subgroup",
    "pseudo-neutrosophic-subgroup",
    "s-semigroup",
    "neutrosophic-submonoid",
];

/// Closed subsets of a species, minus the empty set, the carrier and the
/// identity singleton, in lexicographic order.
pub fn enumerate(t: &Table, name: &str) -> Vec<Vec<usize>> {
    let e = identity(t);
    let mut out: Vec<Vec<usize>> = (1u32..1 << t.n)
        .map(|mask| members(mask, t.n))
        .filter(|s| s.len() < t.n && !(s.len() == 1 && Some(s[0]) == e))
        .filter(|s| closed(t, s) && species(name, t, s))
        .collect();
    out.sort();
    out
}

pub fn ideal(t: &Table, s: &[usize], left: bool, right: bool) -> bool {
    !s.is_empty() && closed(t, s) && (!left || left_absorbing(t, s)) && (!right || right_absorbing(t, s))
}

fn set(items: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    items.into_iter().collect()
}

/// `xH = Hx`, `(Hx)y = H(xy)`, `y(xH) = (yx)H` for `x, y` in `range`.
pub fn three_equations(t: &Table, h: &[usize], range: &[usize]) -> bool {
    range.iter().all(|&x| {
        let xh = set(h.iter().map(|&a| t.op(x, a)));
        let hx = set(h.iter().map(|&a| t.op(a, x)));
        xh == hx
            && range.iter().all(|&y| {
                set(hx.iter().map(|&a| t.op(a, y))) == set(h.iter().map(|&a| t.op(a, t.op(x, y))))
                    && set(xh.iter().map(|&a| t.op(y, a))) == set(h.iter().map(|&a| t.op(t.op(y, x), a)))
            })
    })
}

/// `gHg⁻¹ = H` for every `g`; `None` when the carrier is not a group.
pub fn conjugation_normal(t: &Table, h: &[usize]) -> Option<bool> {
    let all: Vec<usize> = (0..t.n).collect();
    if !group(t, &all) {
        return None;
    }
    let hs = set(h.iter().copied());
    Some((0..t.n).all(|g| {
        let gi = inverse(t, g).unwrap();
        set(h.iter().map(|&a| t.op(t.op(g, a), gi))) == hs
    }))
}

/// Identity laws by name: `Err` when an inverse law has no identity or a
/// needed inverse, otherwise the first counterexample.
pub fn law(t: &Table, name: &str, dom: &[usize]) -> Result<Option<Vec<usize>>, ()> {
    let p = |a: usize, b: usize| t.op(a, b);
    let first3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
        for &x in dom {
            for &y in dom {
                for &z in dom {
                    if !f(x, y, z) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    };
    let first2 = |f: &dyn Fn(usize, usize) -> bool| {
        for &x in dom {
            for &y in dom {
                if !f(x, y) {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    };
    Ok(match name {
        "associative" => first3(&|x, y, z| p(p(x, y), z) == p(x, p(y, z))),
        "commutative" => first2(&|x, y| p(x, y) == p(y, x)),
        "idempotent" => dom.iter().find(|&&x| p(x, x) != x).map(|&x| vec![x]),
        "moufang1" => first3(&|x, y, z| p(p(x, y), p(z, x)) == p(p(x, p(y, z)), x)),
        "moufang2" => first3(&|x, y, z| p(p(p(x, y), z), y) == p(x, p(y, p(z, y)))),
        "moufang3" => first3(&|x, y, z| p(x, p(y, p(x, z))) == p(p(p(x, y), x), z)),
        "bol" => first3(&|x, y, z| p(p(p(x, y), z), y) == p(x, p(p(y, z), y))),
        "bruck-identity" => first3(&|x, y, z| p(p(x, p(y, x)), z) == p(x, p(y, p(x, z)))),
        "left-alternative" => first2(&|x, y| p(p(x, x), y) == p(x, p(x, y))),
        "right-alternative" => first2(&|x, y| p(p(x, y), y) == p(x, p(y, y))),
        "p-groupoid" => first2(&|x, y| p(p(x, y), x) == p(x, p(y, x))),
        "wip" | "bruck-inverse" => {
            let e = identity(t).ok_or(())?;
            for &x in dom {
                inverse(t, x).ok_or(())?;
            }
            if name == "wip" {
                first3(&|x, y, z| p(p(x, y), z) != e || p(x, p(y, z)) == e)
            } else {
                let mut found = None;
                'outer: for &x in dom {
                    for &y in dom {
                        let inv_xy = inverse(t, p(x, y)).ok_or(())?;
                        if inv_xy != p(inverse(t, x).unwrap(), inverse(t, y).unwrap()) {
                            found = Some(vec![x, y]);
                            break 'outer;
                        }
                    }
                }
                found
            }
        }
        other => panic!("no oracle for {other}"),
    })
}
