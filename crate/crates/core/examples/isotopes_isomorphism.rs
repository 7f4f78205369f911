//! Principal isotopes, isomorphism search, homomorphism checks and right
//! regular representations.

use neutromagma::constructors::{ln, ln_multipliers};
use neutromagma::neutro::extend_tagged;
use neutromagma::ops::{check_homomorphism, is_isomorphic, principal_isotope, right_regular_representation, PartialMap};

fn main() -> neutromagma::Result<()> {
    let g = ln(7, 3)?;
    let iso = principal_isotope(&g, g.idx("2")?, g.idx("5")?)?;
    println!("isotope of L7(3) by (2,5): identity {:?}", iso.effective_identity().map(|e| iso.label(e).to_string()));

    println!("\nisomorphism classes within L9:");
    let ms = ln_multipliers(9);
    for (i, &a) in ms.iter().enumerate() {
        for &b in &ms[i + 1..] {
            let f = is_isomorphic(&ln(9, a)?, &ln(9, b)?, 16)?;
            println!("  L9({a}) ≅ L9({b}): {}", f.is_some());
        }
    }

    let r = right_regular_representation(&g, g.idx("1")?)?;
    let perm: Vec<&str> = r.iter().map(|&x| g.label(x)).collect();
    println!("\nright multiplication by 1 in L7(3): {}", perm.join(" "));

    let a = extend_tagged(&ln(5, 3)?)?;
    let b = extend_tagged(&ln(5, 3)?)?;
    let f = PartialMap::from_labels(&a, &b, &[("e", "e"), ("1", "1"), ("eI", "eI"), ("1I", "1I")])?;
    println!("partial identity map on {{e, 1, eI, 1I}} is a homomorphism: {}", check_homomorphism(&f)?);
    Ok(())
}
