//! Neutrosophic carriers over Z_n and the right cosets of a pseudo
//! neutrosophic subgroup of <Z_5 ∪ I>.

use neutromagma::classify::{s_cosets, CosetFlavor};
use neutromagma::neutro::{
    is_neutrosophic_subgroup, is_pseudo_neutrosophic_subgroup, zn_full_neutro, zn_line_neutro,
};
use neutromagma::ops::element_orders;

fn main() -> neutromagma::Result<()> {
    let g = zn_full_neutro(5)?;
    let line = zn_line_neutro(5)?;
    println!("<Z5 ∪ I> has {} elements; the line carrier has {}", g.order(), line.order());
    println!("(2+3I)(4+I) = {}", g.label(g.op(g.idx("2+3I")?, g.idx("4+I")?)));

    let p = g.subset(&["1", "I", "4I"])?;
    let m = g.subset(&["1", "I", "4", "4I"])?;
    println!(
        "P = {} pseudo {}, M = {} neutrosophic subgroup {}",
        g.show(&p),
        is_pseudo_neutrosophic_subgroup(&g, &p),
        g.show(&m),
        is_neutrosophic_subgroup(&g, &m)
    );
    for a in ["2", "3", "2I", "1+I", "3+4I"] {
        let x = g.idx(a)?;
        println!(
            "  P·{a:<4} = {:<22} M·{a:<4} = {}",
            g.show(&s_cosets(&g, &p, x, CosetFlavor::Pseudo)?),
            g.show(&s_cosets(&g, &m, x, CosetFlavor::Plain)?)
        );
    }

    let o = element_orders(&g, g.idx("4I")?)?;
    println!("4I: real order {:?}, order relative to I {:?}", o.real_order, o.neutro_order);
    Ok(())
}
