//! The command layer behind the `neutromagma` binary.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{
    cauchy_classify, detect_s_kind, lagrange_classify, sylow_classify, ClassReport, SKind,
    SylowVariant,
};
use crate::constructors::{
    alternating, cyclic, dihedral, ln, symmetric_group, symmetric_semigroup, zmod_mult, zn,
    ZnClass, ZnGroupoidParams,
};
use crate::error::{Error, Result};
use crate::laws::{check_identity_law, IdentityLaw};
use crate::magma::{FiniteMagma, MagmaDoc, Subset};
use crate::neutro::{
    extend_tagged, zn_full_neutro, zn_full_neutro_groupoid, zn_line_neutro, zn_line_neutro_groupoid,
    zn_line_neutro_nonzero,
};
use crate::nstruct::{classify_n_kind, DeclaredKind, NStructure, NStructureDoc};
use crate::ops::{classify_basic, conjugate_pairs, conjugate_witnesses, cosets, Side};
use crate::search::{enumerate_closed_subsets, SearchLimits};
use crate::species::SubsetPredicate;

/// Exit code for a library error: IO is 3, everything else is a usage or
/// parameter problem.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => 3,
        _ => 2,
    }
}

pub const FAMILIES: &[&str] = &[
    "ln",
    "zn",
    "zmod",
    "cyclic",
    "symmetric",
    "alternating",
    "dihedral",
    "symmetric-semigroup",
    "zn-full-neutro",
    "zn-line-neutro",
    "zn-line-neutro-nonzero",
    "zn-full-neutro-groupoid",
    "zn-line-neutro-groupoid",
    "tagged-ln",
];

/// A named constructor call.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

impl Recipe {
    fn need(&self, v: Option<u64>, name: &str) -> Result<u64> {
        v.ok_or_else(|| Error::Parameter(format!("family {} needs --{name}", self.family)))
    }

    pub fn build(&self) -> Result<FiniteMagma> {
        let n = || self.need(self.n, "n");
        let m = || self.need(self.m, "m");
        let t = || self.need(self.t, "t");
        let u = || self.need(self.u, "u");
        match self.family.as_str() {
            "ln" => ln(n()?, m()?),
            "zn" => {
                let class = match &self.class {
                    None => ZnClass::Zstar,
                    Some(c) => ZnClass::parse(c)
                        .ok_or_else(|| Error::Parameter(format!("unknown groupoid class {c:?}")))?,
                };
                zn(&ZnGroupoidParams::new(n()?, t()?, u()?, class)?)
            }
            "zmod" => zmod_mult(n()?),
            "cyclic" => cyclic(n()?),
            "symmetric" => symmetric_group(n()?),
            "alternating" => alternating(n()?),
            "dihedral" => dihedral(n()?),
            "symmetric-semigroup" => symmetric_semigroup(n()?),
            "zn-full-neutro" => zn_full_neutro(n()?),
            "zn-line-neutro" => zn_line_neutro(n()?),
            "zn-line-neutro-nonzero" => zn_line_neutro_nonzero(n()?),
            "zn-full-neutro-groupoid" => zn_full_neutro_groupoid(n()?, t()?, u()?),
            "zn-line-neutro-groupoid" => zn_line_neutro_groupoid(n()?, t()?, u()?),
            "tagged-ln" => extend_tagged(&ln(n()?, m()?)?),
            f => Err(Error::Parameter(format!("unknown family {f:?}; known: {}", FAMILIES.join(", ")))),
        }
    }
}

/// Splits `a, b, (1,2)` at top-level commas.
pub fn split_labels(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out.retain(|l| !l.is_empty());
    out
}

pub fn parse_subset(m: &FiniteMagma, s: &str) -> Result<Subset> {
    let labels = split_labels(s);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    m.subset(&refs)
}

pub fn parse_species(s: &str) -> Result<SubsetPredicate> {
    SubsetPredicate::parse(s).ok_or_else(|| Error::Parameter(format!("unknown species {s:?}")))
}

pub fn parse_variant(s: &str) -> Result<SylowVariant> {
    match s {
        "standard" => Ok(SylowVariant::Standard),
        "super" => Ok(SylowVariant::Super),
        "semi" => Ok(SylowVariant::Semi),
        _ => Err(Error::Parameter(format!("unknown Sylow variant {s:?}"))),
    }
}

fn labels(m: &FiniteMagma, s: &Subset) -> Vec<String> {
    s.iter().map(|&x| m.label(x).to_string()).collect()
}

/// Basic structure, every identity law and every Smarandache kind.
pub fn classify_json(m: &FiniteMagma) -> Result<Value> {
    let basic = classify_basic(m);
    let mut laws = serde_json::Map::new();
    for law in IdentityLaw::ALL {
        let v = match check_identity_law(m, law, None) {
            Ok(r) => json!(r.holds),
            Err(_) => Value::Null,
        };
        laws.insert(law.name().replace('-', "_"), v);
    }
    let mut kinds = serde_json::Map::new();
    for k in SKind::ALL {
        let d = detect_s_kind(m, k)?;
        kinds.insert(k.name().to_string(), json!(d.holds));
        if let Some(w) = &d.witness {
            kinds.insert(format!("{}_witness", k.name()), json!(labels(m, w)));
        }
    }
    let mut out = serde_json::Map::new();
    out.insert("kind".into(), json!(m.kind()));
    out.insert("order".into(), json!(m.order()));
    out.insert("basic".into(), serde_json::to_value(&basic)?);
    for (k, v) in laws {
        out.insert(k, v);
    }
    for (k, v) in kinds {
        out.insert(k, v);
    }
    Ok(Value::Object(out))
}

pub fn subsets_json(m: &FiniteMagma, species: &SubsetPredicate) -> Result<Value> {
    let e = enumerate_closed_subsets(m, species, SearchLimits::default())?;
    let list: Vec<Vec<String>> = e.subsets.iter().map(|s| labels(m, s)).collect();
    Ok(json!({ "species": species.name(), "complete": e.complete, "subsets": list }))
}

pub fn cosets_json(m: &FiniteMagma, h: &Subset, a: usize, side: Side) -> Result<Value> {
    let c = cosets(m, h, a, side)?;
    Ok(json!({ "subset": labels(m, h), "by": m.label(a), "side": format!("{side:?}").to_lowercase(), "coset": labels(m, &c) }))
}

pub fn conjugate_json(m: &FiniteMagma, h1: &Subset, h2: &Subset) -> Result<Value> {
    let w = conjugate_witnesses(m, h1, h2)?;
    let list: Vec<Value> = w
        .iter()
        .map(|c| json!({ "element": m.label(c.element), "left": c.left, "right": c.right }))
        .collect();
    let set: Vec<&str> = w.iter().map(|c| m.label(c.element)).collect();
    Ok(json!({ "witnesses": list, "set": set }))
}

pub fn conjugate_pairs_json(m: &FiniteMagma, x: usize, y: usize) -> Value {
    let pairs: Vec<[&str; 2]> = conjugate_pairs(m, x, y).into_iter().map(|(a, b)| [m.label(a), m.label(b)]).collect();
    json!({ "x": m.label(x), "y": m.label(y), "least": pairs.first(), "pairs": pairs })
}

/// A report with witness members rendered as labels of a single magma.
pub fn report_json(r: &ClassReport, label: &dyn Fn(usize) -> String) -> Value {
    let ws: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            let mut v = json!({
                "members": w.members.iter().map(|&x| label(x)).collect::<Vec<_>>(),
                "order": w.order,
                "qualifies": w.qualifies,
            });
            if let Some(f) = &w.flavor {
                v["flavor"] = json!(f);
            }
            v
        })
        .collect();
    json!({
        "species": r.species,
        "verdict": r.verdict.name(),
        "complete": r.complete,
        "witnesses": ws,
        "notes": r.notes,
    })
}

pub fn lagrange_json(m: &FiniteMagma, species: &SubsetPredicate) -> Result<Value> {
    Ok(report_json(&lagrange_classify(m, species)?, &|x| m.label(x).to_string()))
}

pub fn sylow_json(m: &FiniteMagma, species: &SubsetPredicate, v: SylowVariant) -> Result<Value> {
    Ok(report_json(&sylow_classify(m, species, v)?, &|x| m.label(x).to_string()))
}

pub fn cauchy_json(m: &FiniteMagma, relative_to: Option<&Subset>) -> Result<Value> {
    Ok(report_json(&cauchy_classify(m, relative_to)?, &|x| m.label(x).to_string()))
}

/// A component given either by recipe or as a full magma document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentSpec {
    Recipe(Recipe),
    Magma(MagmaDoc),
}

/// Input for `nstruct build`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub name: String,
    pub components: Vec<ComponentSpec>,
    pub declared_kinds: Vec<String>,
}

impl Manifest {
    pub fn build(&self) -> Result<NStructure> {
        let comps = self
            .components
            .iter()
            .map(|c| match c {
                ComponentSpec::Recipe(r) => r.build(),
                ComponentSpec::Magma(d) => FiniteMagma::from_doc(d.clone()),
            })
            .collect::<Result<Vec<_>>>()?;
        let kinds = self.declared_kinds.iter().map(|k| DeclaredKind::parse(k)).collect::<Result<Vec<_>>>()?;
        NStructure::build(self.name.clone(), comps, kinds)
    }

    pub fn from_json(s: &str) -> Result<Manifest> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Reads a manifest or a serialized N-structure.
pub fn load_nstructure(text: &str) -> Result<NStructure> {
    match serde_json::from_str::<NStructureDoc>(text) {
        Ok(doc) => NStructure::from_doc(doc),
        Err(_) => Manifest::from_json(text)?.build(),
    }
}

pub fn nstruct_classify_json(ns: &NStructure) -> Result<Value> {
    let kinds: Vec<String> = ns.kinds().iter().map(|k| k.to_string()).collect();
    let orders: Vec<usize> = ns.components().iter().map(|c| c.order()).collect();
    Ok(json!({
        "name": ns.name(),
        "n": ns.n(),
        "order": ns.order(),
        "component_orders": orders,
        "declared_kinds": kinds,
        "family": serde_json::to_value(classify_n_kind(ns))?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_split_at_top_level() {
        assert_eq!(split_labels("(1,1), (2,2),0"), ["(1,1)", "(2,2)", "0"]);
        assert_eq!(split_labels(" e, 3I "), ["e", "3I"]);
        assert!(split_labels("").is_empty());
    }

    #[test]
    fn recipes_build_and_reject() {
        let r = Recipe { family: "ln".into(), n: Some(5), m: Some(2), ..Default::default() };
        assert_eq!(r.build().unwrap().order(), 6);
        let bad = Recipe { family: "ln".into(), n: Some(6), m: Some(2), ..Default::default() };
        assert!(matches!(bad.build(), Err(Error::Parameter(_))));
        let z = Recipe { family: "zn".into(), n: Some(5), t: Some(2), u: Some(4), class: Some("zstar".into()), ..Default::default() };
        let g = z.build().unwrap();
        assert!(check_identity_law(&g, IdentityLaw::Idempotent, None).unwrap().holds);
    }

    #[test]
    fn manifest_mixes_recipes_and_documents() {
        let doc = cyclic(2).unwrap().to_json();
        let text = format!(
            r#"{{"name":"B","components":[{{"family":"tagged-ln","n":5,"m":3}},{doc}],"declared_kinds":["s-neutrosophic-loop","group"]}}"#
        );
        let ns = load_nstructure(&text).unwrap();
        assert_eq!(ns.order(), 14);
        let round = load_nstructure(&ns.to_json()).unwrap();
        assert_eq!(round.order(), 14);
    }

    #[test]
    fn classify_reports_every_law() {
        let v = classify_json(&ln(7, 3).unwrap()).unwrap();
        assert_eq!(v["wip"], json!(true));
        let v = classify_json(&zmod_mult(7).unwrap()).unwrap();
        assert_eq!(v["s_semigroup"], json!(true));
    }
}
