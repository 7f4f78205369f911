//! Groupoids Z_n(t, u) with a*b = ta + ub: class sizes, associativity,
//! idempotency, ideals and normal subgroupoids.

use neutromagma::classify::{detect_s_kind, SKind};
use neutromagma::constructors::{zn_class_members, zn_class_size, zn_star, ZnClass};
use neutromagma::laws::{check_identity_law, IdentityLaw};
use neutromagma::ops::{is_normal, NormalMode, NormalRange};
use neutromagma::search::{closed_subsets, enumerate_closed_subsets, SearchLimits};
use neutromagma::species::SubsetPredicate;

fn main() -> neutromagma::Result<()> {
    for class in [ZnClass::Z, ZnClass::Zstar, ZnClass::Zdoublestar, ZnClass::Ztriplestar] {
        let sizes: Vec<u64> = (3..=8).map(|n| zn_class_size(n, class)).collect();
        println!("{:<12} sizes for n = 3..8: {sizes:?}", class.name());
    }

    println!("\nassociative or idempotent members of Z*(10):");
    for (t, u) in zn_class_members(10, ZnClass::Zstar) {
        let g = zn_star(10, t, u)?;
        let assoc = check_identity_law(&g, IdentityLaw::Associative, None)?.holds;
        let idem = check_identity_law(&g, IdentityLaw::Idempotent, None)?.holds;
        if assoc || idem {
            println!("  ({t},{u}): associative {assoc}, idempotent {idem}");
        }
    }

    println!();
    let g = zn_star(6, 3, 4)?;
    for sp in [SubsetPredicate::IsLeftIdeal, SubsetPredicate::IsRightIdeal, SubsetPredicate::IsIdeal] {
        let e = enumerate_closed_subsets(&g, &sp, SearchLimits::default())?;
        let shown: Vec<String> = e.subsets.iter().map(|s| g.show(s)).collect();
        let shown = if shown.is_empty() { "none".to_string() } else { shown.join(" ") };
        println!("Z6(3,4) {sp}: {shown}");
    }
    let d = detect_s_kind(&g, SKind::SGroupoid)?;
    println!("Z6(3,4) S-groupoid {} with witness {:?}", d.holds, d.witness.map(|w| g.show(&w)));

    for (n, t, u) in [(5, 2, 3), (7, 2, 5), (13, 2, 11)] {
        let g = zn_star(n, t, u)?;
        let subs = closed_subsets(&g, SearchLimits::default())?.subsets;
        let normal = subs
            .iter()
            .filter(|h| is_normal(&g, h, NormalMode::Subgroupoid(NormalRange::Whole)).unwrap_or(false))
            .count();
        println!("Z{n}({t},{u}): {} proper closed subsets, {normal} normal", subs.len());
    }
    Ok(())
}
