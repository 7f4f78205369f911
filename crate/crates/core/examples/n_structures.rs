//! N-structures: construction, kind flags, N-substructures and the N-level
//! engines.

use neutromagma::classify::SylowVariant;
use neutromagma::constructors::{cyclic, ln, zmod_mult};
use neutromagma::corpus::{s_mixed_six, mixed_order_50};
use neutromagma::neutro::{extend_tagged, zn_line_neutro};
use neutromagma::nstruct::{
    classify_n_kind, deficit_substructures, enumerate_n_substructures, n_cauchy, n_coset, n_lagrange, n_sylow,
    NStructure,
};
use neutromagma::species::SubsetPredicate::*;

fn main() -> neutromagma::Result<()> {
    let b = NStructure::build_named(
        "B",
        vec![extend_tagged(&ln(5, 2)?)?, cyclic(6)?],
        &["s-neutrosophic-loop", "group"],
    )?;
    println!("bistructure of order {}: {:?}", b.order(), b.kinds().iter().map(|k| k.to_string()).collect::<Vec<_>>());
    let p = b.subset(&[&["e", "eI", "3", "3I"], &["1", "g^3"]])?;
    println!("P = {} of order {}", b.show(&p), p.order());
    let c = n_coset(&b, &p, (1, b.component(1).idx("g")?))?;
    println!("P·g = {}", b.show(&c));

    let e = enumerate_n_substructures(&b, &[IsSNeutrosophicSubloop, IsGroup], true)?;
    println!("{} sub-bistructures, complete {}", e.subsets.len(), e.complete);
    println!("lagrange {}", n_lagrange(&b, &[IsSNeutrosophicSubloop, IsGroup], true)?.verdict.name());
    println!("sylow    {}", n_sylow(&b, &[IsSNeutrosophicSubloop, IsGroup], SylowVariant::Standard, true)?.verdict.name());
    println!("cauchy   {}", n_cauchy(&b)?.verdict.name());

    let s = NStructure::build_named(
        "S",
        vec![zmod_mult(8)?, zn_line_neutro(4)?],
        &["s-semigroup", "neutrosophic-semigroup"],
    )?;
    println!("\nS of order {}: cauchy {}", s.order(), n_cauchy(&s)?.verdict.name());

    let mixed = s_mixed_six()?;
    let k = classify_n_kind(&mixed);
    println!("\nN = {} mixed structure of order {}: s-mixed {}, glsg {}", mixed.n(), mixed.order(), k.s_mixed_neutrosophic, k.n_glsg);

    let w = mixed_order_50()?;
    let species = [IsNeutrosophicSubgroup, IsNeutrosophicSemigroup, IsNeutrosophicSubgroup, IsNeutrosophicSemigroup, IsGroup, IsSemigroup];
    let d = deficit_substructures(&w, 3, &species)?;
    println!("structure of order {}: {} substructures using exactly 3 components", w.order(), d.subsets.len());
    Ok(())
}
