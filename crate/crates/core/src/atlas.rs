//! Class sweeps: one record of engine results per family member.
//!
//! CSV columns, in order:
//!
//! `family, params, order, commutative, left_alt, right_alt, wip, moufang,
//! bol, bruck, p_groupoid, idempotent, associative`, then one column per
//! [`SKind`] named by [`SKind::name`], then `lagrange, sylow, cauchy`.
//!
//! Booleans are `0`/`1` and verdicts lowercase. After the records come
//! footer rows `#footer,<n>,<records>,<expected>,<match>` comparing the
//! number of members found against [`ln_count`] or [`zn_class_size`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::classify::{
    cauchy_classify, detect_s_kind, lagrange_classify, sylow_classify, SKind, SylowVariant,
};
use crate::constructors::{ln, ln_count, ln_multipliers, zn, zn_class_members, zn_class_size, ZnClass, ZnGroupoidParams};
use crate::error::{Error, Result};
use crate::laws::{check_identity_law, moufang_summary, IdentityLaw};
use crate::magma::FiniteMagma;
use crate::species::SubsetPredicate;

pub const FLAG_COLUMNS: &[&str] = &[
    "commutative",
    "left_alt",
    "right_alt",
    "wip",
    "moufang",
    "bol",
    "bruck",
    "p_groupoid",
    "idempotent",
    "associative",
];

pub fn csv_columns() -> Vec<String> {
    let mut c: Vec<String> = ["family", "params", "order"].iter().map(|s| s.to_string()).collect();
    c.extend(FLAG_COLUMNS.iter().map(|s| s.to_string()));
    c.extend(SKind::ALL.iter().map(|k| k.name().to_string()));
    c.extend(["lagrange", "sylow", "cauchy"].iter().map(|s| s.to_string()));
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtlasFamily {
    Ln,
    Zn(ZnClass),
}

impl AtlasFamily {
    pub fn name(self) -> &'static str {
        match self {
            AtlasFamily::Ln => "ln",
            AtlasFamily::Zn(_) => "zn",
        }
    }

    /// Every member for one `n`, with its parameter string.
    pub fn members(self, n: u64) -> Result<Vec<(String, FiniteMagma)>> {
        match self {
            AtlasFamily::Ln => ln_multipliers(n)
                .into_iter()
                .map(|m| Ok((format!("n={n} m={m}"), ln(n, m)?)))
                .collect(),
            AtlasFamily::Zn(class) => {
                if n < 3 {
                    return Ok(Vec::new());
                }
                zn_class_members(n, class)
                    .into_iter()
                    .map(|(t, u)| {
                        let g = zn(&ZnGroupoidParams::new(n, t, u, class)?)?;
                        Ok((format!("n={n} t={t} u={u} class={}", class.name()), g))
                    })
                    .collect()
            }
        }
    }

    /// The closed-form member count the sweep is checked against.
    pub fn expected(self, n: u64) -> u64 {
        match self {
            AtlasFamily::Ln => ln_count(n),
            AtlasFamily::Zn(_) if n < 3 => 0,
            AtlasFamily::Zn(class) => zn_class_size(n, class),
        }
    }

    /// Species used for the Lagrange and Sylow columns.
    pub fn species(self) -> SubsetPredicate {
        match self {
            AtlasFamily::Ln => SubsetPredicate::IsLoop,
            AtlasFamily::Zn(_) => SubsetPredicate::IsSubgroupoid,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub family: String,
    pub params: String,
    pub order: usize,
    pub flags: BTreeMap<String, bool>,
    pub s_flags: BTreeMap<String, bool>,
    pub lagrange_verdict: String,
    pub sylow_verdict: String,
    pub cauchy_verdict: String,
}

fn holds(m: &FiniteMagma, law: IdentityLaw) -> bool {
    check_identity_law(m, law, None).map(|r| r.holds).unwrap_or(false)
}

/// Runs every engine on one magma.
pub fn record_for(family: AtlasFamily, params: String, m: &FiniteMagma) -> Result<AtlasRecord> {
    use IdentityLaw::*;
    let moufang = moufang_summary(m, None).map(|s| s.any()).unwrap_or(false);
    let flag_values = [
        holds(m, Commutative),
        holds(m, LeftAlternative),
        holds(m, RightAlternative),
        holds(m, WIP),
        moufang,
        holds(m, Bol),
        holds(m, BruckIdentity),
        holds(m, PGroupoid),
        holds(m, Idempotent),
        holds(m, Associative),
    ];
    let flags = FLAG_COLUMNS.iter().map(|c| c.to_string()).zip(flag_values).collect();
    let mut s_flags = BTreeMap::new();
    for k in SKind::ALL {
        s_flags.insert(k.name().to_string(), detect_s_kind(m, k)?.holds);
    }
    let species = family.species();
    let sylow = if m.order() < 2 {
        "vacuous".to_string()
    } else {
        sylow_classify(m, &species, SylowVariant::Standard)?.verdict.name().to_string()
    };
    Ok(AtlasRecord {
        family: family.name().to_string(),
        params,
        order: m.order(),
        flags,
        s_flags,
        lagrange_verdict: lagrange_classify(m, &species)?.verdict.name().to_string(),
        sylow_verdict: sylow,
        cauchy_verdict: cauchy_classify(m, None)?.verdict.name().to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FooterRow {
    pub n: u64,
    pub records: u64,
    pub expected: u64,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub records: Vec<AtlasRecord>,
    pub footer: Vec<FooterRow>,
}

impl Atlas {
    pub fn counts_match(&self) -> bool {
        self.footer.iter().all(|f| f.matches)
    }

    pub fn to_csv(&self) -> String {
        let b = |x: bool| if x { "1" } else { "0" };
        let mut s = csv_columns().join(",");
        s.push('\n');
        for r in &self.records {
            let mut cells = vec![r.family.clone(), r.params.clone(), r.order.to_string()];
            cells.extend(FLAG_COLUMNS.iter().map(|c| b(r.flags[*c]).to_string()));
            cells.extend(SKind::ALL.iter().map(|k| b(r.s_flags[k.name()]).to_string()));
            cells.extend([r.lagrange_verdict.clone(), r.sylow_verdict.clone(), r.cauchy_verdict.clone()]);
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        for f in &self.footer {
            let _ = writeln!(s, "#footer,{},{},{},{}", f.n, f.records, f.expected, b(f.matches));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("atlas serializes")
    }
}

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let bad = || Error::Parameter(format!("bad range {s:?}; expected N or A..B"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Sweeps `family` over every `n` in `range`, one thread per `n`.
pub fn build_atlas(family: AtlasFamily, range: RangeInclusive<u64>) -> Result<Atlas> {
    let ns: Vec<u64> = range.collect();
    let per_n: Vec<Result<(Vec<AtlasRecord>, FooterRow)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ns
            .iter()
            .map(|&n| {
                scope.spawn(move || {
                    let members = family.members(n)?;
                    let recs = members
                        .into_iter()
                        .map(|(p, m)| record_for(family, p, &m))
                        .collect::<Result<Vec<_>>>()?;
                    let expected = family.expected(n);
                    let footer = FooterRow {
                        n,
                        records: recs.len() as u64,
                        expected,
                        matches: recs.len() as u64 == expected,
                    };
                    Ok((recs, footer))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("atlas worker panicked")).collect()
    });
    let mut atlas = Atlas { records: Vec::new(), footer: Vec::new() };
    for r in per_n {
        let (recs, footer) = r?;
        atlas.records.extend(recs);
        atlas.footer.push(footer);
    }
    Ok(atlas)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("5..25").unwrap(), 5..=25);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("x..3").is_err());
    }

    #[test]
    fn empty_range_gives_header_only() {
        let a = build_atlas(AtlasFamily::Ln, parse_range("9..5").unwrap()).unwrap();
        assert_eq!(a.to_csv().lines().count(), 1);
        assert!(a.counts_match());
    }

    #[test]
    fn zstar_five_has_twelve_records() {
        let a = build_atlas(AtlasFamily::Zn(ZnClass::Zstar), 5..=5).unwrap();
        assert_eq!(a.records.len(), 12);
        assert!(a.counts_match());
    }

    #[test]
    fn commutative_loop_flagged() {
        let a = build_atlas(AtlasFamily::Ln, 5..=5).unwrap();
        let comm: Vec<&str> = a.records.iter().filter(|r| r.flags["commutative"]).map(|r| r.params.as_str()).collect();
        assert_eq!(comm, ["n=5 m=3"]);
        assert_eq!(a.to_csv().lines().next().unwrap().split(',').count(), csv_columns().len());
    }
}
