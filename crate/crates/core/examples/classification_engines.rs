//! Smarandache detection and the Lagrange, Sylow and Cauchy engines on a
//! few carriers.

use neutromagma::classify::{
    cauchy_classify, detect_s_kind, lagrange_classify, s_hyper_and_simple, sylow_classify, SKind, SylowVariant,
};
use neutromagma::constructors::{ln, symmetric_semigroup, zmod_mult};
use neutromagma::neutro::{extend_tagged, zn_line_neutro};
use neutromagma::species::SubsetPredicate;
use neutromagma::FiniteMagma;

fn summarize(name: &str, g: &FiniteMagma, sp: &SubsetPredicate) -> neutromagma::Result<()> {
    let l = lagrange_classify(g, sp)?;
    let s = sylow_classify(g, sp, SylowVariant::Standard)?;
    let c = cauchy_classify(g, None)?;
    let mut orders: Vec<usize> = l.witnesses.iter().map(|w| w.order).collect();
    orders.sort_unstable();
    orders.dedup();
    println!(
        "{name:<22} o = {:>2}  {sp}: lagrange {:<7} sylow {:<7} cauchy {:<7} orders {orders:?}",
        g.order(),
        l.verdict.name(),
        s.verdict.name(),
        c.verdict.name()
    );
    Ok(())
}

fn main() -> neutromagma::Result<()> {
    let z7 = zmod_mult(7)?;
    for k in SKind::ALL {
        let d = detect_s_kind(&z7, k)?;
        if d.holds {
            println!("Z7 under ·: {} with witness {}", k.name(), z7.show(d.witness.as_ref().unwrap()));
        }
    }
    let h = s_hyper_and_simple(&zmod_mult(10)?)?;
    println!("Z10 under ·: largest group {:?}, S-simple {}", h.largest_group.map(|s| s.into_members()), h.s_simple);

    println!();
    summarize("<Z6 ∪ I> line", &zn_line_neutro(6)?, &SubsetPredicate::IsSNeutrosophicSub)?;
    summarize("<Z8 ∪ I> line", &zn_line_neutro(8)?, &SubsetPredicate::IsSNeutrosophicSub)?;
    summarize("Z12 under ·", &zmod_mult(12)?, &SubsetPredicate::IsGroup)?;
    summarize("S(3) maps", &symmetric_semigroup(3)?, &SubsetPredicate::IsGroup)?;
    summarize("<L15(2) ∪ I>", &extend_tagged(&ln(15, 2)?)?, &SubsetPredicate::IsSNeutrosophicSubloop)?;
    Ok(())
}
