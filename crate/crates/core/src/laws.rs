//! Exhaustive checks of loop and groupoid identities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, Subset};

/// Identities a magma may satisfy. Each variant is one quantified equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityLaw {
    /// `(xy)z = x(yz)`
    Associative,
    /// `xy = yx`
    Commutative,
    /// `xx = x`
    Idempotent,
    /// `(xy)(zx) = (x(yz))x`
    Moufang1,
    /// `((xy)z)y = x(y(zy))`
    Moufang2,
    /// `x(y(xz)) = ((xy)x)z`
    Moufang3,
    /// `((xy)z)y = x((yz)y)`
    Bol,
    /// `(x(yx))z = x(y(xz))`, see [`BruckReading`] for the other grouping.
    BruckIdentity,
    /// `(xy)⁻¹ = x⁻¹y⁻¹`
    BruckInverse,
    /// `(xy)z = e` implies `x(yz) = e`
    WIP,
    /// `(xx)y = x(xy)`
    LeftAlternative,
    /// `(xy)y = x(yy)`
    RightAlternative,
    /// `(xy)x = x(yx)`
    PGroupoid,
}

impl IdentityLaw {
    pub const ALL: [IdentityLaw; 13] = [
        IdentityLaw::Associative,
        IdentityLaw::Commutative,
        IdentityLaw::Idempotent,
        IdentityLaw::Moufang1,
        IdentityLaw::Moufang2,
        IdentityLaw::Moufang3,
        IdentityLaw::Bol,
        IdentityLaw::BruckIdentity,
        IdentityLaw::BruckInverse,
        IdentityLaw::WIP,
        IdentityLaw::LeftAlternative,
        IdentityLaw::RightAlternative,
        IdentityLaw::PGroupoid,
    ];

    /// Number of quantified variables.
    pub fn arity(self) -> usize {
        use IdentityLaw::*;
        match self {
            Idempotent => 1,
            Commutative | BruckInverse | LeftAlternative | RightAlternative | PGroupoid => 2,
            _ => 3,
        }
    }

    pub fn needs_inverses(self) -> bool {
        matches!(self, IdentityLaw::BruckInverse | IdentityLaw::WIP)
    }

    pub fn name(self) -> &'static str {
        use IdentityLaw::*;
        match self {
            Associative => "associative",
            Commutative => "commutative",
            Idempotent => "idempotent",
            Moufang1 => "moufang1",
            Moufang2 => "moufang2",
            Moufang3 => "moufang3",
            Bol => "bol",
            BruckIdentity => "bruck-identity",
            BruckInverse => "bruck-inverse",
            WIP => "wip",
            LeftAlternative => "left-alternative",
            RightAlternative => "right-alternative",
            PGroupoid => "p-groupoid",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityLaw> {
        IdentityLaw::ALL.into_iter().find(|l| l.name() == s)
    }
}

/// How the left side of the Bruck identity is grouped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BruckReading {
    /// `(x(yx))z`
    #[default]
    LeftGrouped,
    /// `x((yx)z)`
    RightGrouped,
}

/// Outcome of an identity check: the first counterexample in lexicographic
/// order of the quantified variables, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl LawCheck {
    fn ok() -> Self {
        LawCheck { holds: true, witness: None }
    }

    fn fail(w: Vec<usize>) -> Self {
        LawCheck { holds: false, witness: Some(w) }
    }
}

pub fn check_identity_law(
    m: &FiniteMagma,
    law: IdentityLaw,
    domain: Option<&Subset>,
) -> Result<LawCheck> {
    check_identity_law_with(m, law, domain, BruckReading::default())
}

pub fn check_identity_law_with(
    m: &FiniteMagma,
    law: IdentityLaw,
    domain: Option<&Subset>,
    reading: BruckReading,
) -> Result<LawCheck> {
    let dom: Vec<usize> = match domain {
        Some(s) => {
            m.check_subset(s)?;
            s.members().to_vec()
        }
        None => m.elements().collect(),
    };
    let p = |a: usize, b: usize| m.op(a, b);
    use IdentityLaw::*;
    if law.needs_inverses() {
        return check_inverse_law(m, law, &dom);
    }
    match law.arity() {
        1 => {
            for &x in &dom {
                if p(x, x) != x {
                    return Ok(LawCheck::fail(vec![x]));
                }
            }
        }
        2 => {
            for &x in &dom {
                for &y in &dom {
                    let ok = match law {
                        Commutative => p(x, y) == p(y, x),
                        LeftAlternative => p(p(x, x), y) == p(x, p(x, y)),
                        RightAlternative => p(p(x, y), y) == p(x, p(y, y)),
                        PGroupoid => p(p(x, y), x) == p(x, p(y, x)),
                        _ => unreachable!(),
                    };
                    if !ok {
                        return Ok(LawCheck::fail(vec![x, y]));
                    }
                }
            }
        }
        _ => {
            for &x in &dom {
                for &y in &dom {
                    let xy = p(x, y);
                    for &z in &dom {
                        let ok = match law {
                            Associative => p(xy, z) == p(x, p(y, z)),
                            Moufang1 => p(xy, p(z, x)) == p(p(x, p(y, z)), x),
                            Moufang2 => p(p(xy, z), y) == p(x, p(y, p(z, y))),
                            Moufang3 => p(x, p(y, p(x, z))) == p(p(xy, x), z),
                            Bol => p(p(xy, z), y) == p(x, p(p(y, z), y)),
                            BruckIdentity => {
                                let lhs = match reading {
                                    BruckReading::LeftGrouped => p(p(x, p(y, x)), z),
                                    BruckReading::RightGrouped => p(x, p(p(y, x), z)),
                                };
                                lhs == p(x, p(y, p(x, z)))
                            }
                            _ => unreachable!(),
                        };
                        if !ok {
                            return Ok(LawCheck::fail(vec![x, y, z]));
                        }
                    }
                }
            }
        }
    }
    Ok(LawCheck::ok())
}

fn check_inverse_law(m: &FiniteMagma, law: IdentityLaw, dom: &[usize]) -> Result<LawCheck> {
    let e = m.effective_identity().ok_or_else(|| {
        Error::Precondition(format!("{} needs an identity element", law.name()))
    })?;
    let inv = |x: usize| {
        m.inverse(x).ok_or_else(|| {
            Error::Precondition(format!(
                "{} needs inverses; {} has none",
                law.name(),
                m.label(x)
            ))
        })
    };
    let dom_inv = dom.iter().map(|&x| inv(x)).collect::<Result<Vec<_>>>()?;
    match law {
        IdentityLaw::BruckInverse => {
            for (i, &x) in dom.iter().enumerate() {
                for (j, &y) in dom.iter().enumerate() {
                    if inv(m.op(x, y))? != m.op(dom_inv[i], dom_inv[j]) {
                        return Ok(LawCheck::fail(vec![x, y]));
                    }
                }
            }
        }
        IdentityLaw::WIP => {
            for &x in dom {
                for &y in dom {
                    let xy = m.op(x, y);
                    for &z in dom {
                        if m.op(xy, z) == e && m.op(x, m.op(y, z)) != e {
                            return Ok(LawCheck::fail(vec![x, y, z]));
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(LawCheck::ok())
}

/// Elements with a two-sided inverse relative to the identity.
pub fn units(m: &FiniteMagma) -> Subset {
    m.elements().filter(|&x| m.inverse(x).is_some()).collect()
}

/// The three Moufang identities reported separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoufangSummary {
    pub moufang1: LawCheck,
    pub moufang2: LawCheck,
    pub moufang3: LawCheck,
}

impl MoufangSummary {
    /// True when any one identity holds; on loops the three are equivalent.
    pub fn any(&self) -> bool {
        self.moufang1.holds || self.moufang2.holds || self.moufang3.holds
    }
}

pub fn moufang_summary(m: &FiniteMagma, domain: Option<&Subset>) -> Result<MoufangSummary> {
    Ok(MoufangSummary {
        moufang1: check_identity_law(m, IdentityLaw::Moufang1, domain)?,
        moufang2: check_identity_law(m, IdentityLaw::Moufang2, domain)?,
        moufang3: check_identity_law(m, IdentityLaw::Moufang3, domain)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(k: usize, f: impl Fn(usize, usize) -> usize) -> FiniteMagma {
        FiniteMagma::from_fn("t", (0..k).map(|i| i.to_string()).collect(), f).unwrap()
    }

    #[test]
    fn group_satisfies_everything() {
        let c5 = table(5, |x, y| (x + y) % 5);
        for law in IdentityLaw::ALL {
            let r = check_identity_law(&c5, law, None).unwrap();
            assert_eq!(r.holds, law != IdentityLaw::Idempotent, "{law:?}");
        }
    }

    #[test]
    fn first_counterexample_is_lexicographic() {
        let sub = table(3, |x, y| (x + 3 - y) % 3);
        let r = check_identity_law(&sub, IdentityLaw::Commutative, None).unwrap();
        assert_eq!(r.witness, Some(vec![0, 1]));
    }

    #[test]
    fn wip_without_identity_errors() {
        let zero = table(2, |_, _| 0);
        assert!(matches!(
            check_identity_law(&zero, IdentityLaw::WIP, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn wip_without_inverse_errors() {
        let mul = table(3, |x, y| (x * y) % 3);
        let err = check_identity_law(&mul, IdentityLaw::WIP, None).unwrap_err();
        assert!(err.to_string().contains("0 has none"));
        let u = units(&mul);
        assert!(check_identity_law(&mul, IdentityLaw::WIP, Some(&u)).unwrap().holds);
    }

    #[test]
    fn parse_names() {
        for law in IdentityLaw::ALL {
            assert_eq!(IdentityLaw::parse(law.name()), Some(law));
        }
    }
}
