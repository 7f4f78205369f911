//! The loops L_n(m): class sizes, the commutative member, nuclei and the
//! identities each member satisfies.

use neutromagma::constructors::{ln, ln_count, ln_multipliers, ln_strict_noncomm_count};
use neutromagma::laws::{check_identity_law, moufang_summary, IdentityLaw};
use neutromagma::ops::{associator_subloop, nuclei};

fn main() -> neutromagma::Result<()> {
    for n in [5u64, 7, 9, 15, 21] {
        println!(
            "n = {n:>2}: |L_n| = {:>2}, strictly non-commutative {:>2}, multipliers {:?}",
            ln_count(n),
            ln_strict_noncomm_count(n),
            ln_multipliers(n)
        );
    }

    let g = ln(7, 3)?;
    println!("\nL7(3), order {}", g.order());
    for x in g.elements() {
        let row: Vec<&str> = g.elements().map(|y| g.label(g.op(x, y))).collect();
        println!("  {:>2} | {}", g.label(x), row.join(" "));
    }

    println!("\nidentities of L7(m):");
    for m in ln_multipliers(7) {
        let g = ln(7, m)?;
        let held: Vec<&str> = IdentityLaw::ALL
            .into_iter()
            .filter(|&law| check_identity_law(&g, law, None).map(|c| c.holds).unwrap_or(false))
            .map(|law| law.name())
            .collect();
        let mf = moufang_summary(&g, None)?;
        println!("  m = {m}: {} (Moufang {})", held.join(", "), mf.any());
    }

    let g = ln(5, 2)?;
    let nu = nuclei(&g)?;
    println!(
        "\nL5(2): nucleus {}, commutant {}, centre {}, associator subloop {}",
        g.show(&nu.nucleus),
        g.show(&nu.commutant),
        g.show(&nu.centre),
        g.show(&associator_subloop(&g)?)
    );
    Ok(())
}
