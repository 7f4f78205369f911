//! Conjugating elements of two subsets and conjugate pairs of elements.

use neutromagma::neutro::{zn_full_neutro, zn_line_neutro};
use neutromagma::ops::{conjugate_pair, conjugate_pairs, conjugate_witnesses};
use neutromagma::Subset;

fn main() -> neutromagma::Result<()> {
    for (name, g) in [("line carrier", zn_line_neutro(15)?), ("full carrier", zn_full_neutro(15)?)] {
        let w = conjugate_witnesses(&g, &g.subset(&["1", "4"])?, &g.subset(&["1", "14"])?)?;
        let set = Subset::new(w.iter().map(|c| c.element));
        println!("{name} over Z15, conjugating {{1,4}} to {{1,14}}: {} elements", set.len());
        println!("  {}", g.show(&set));
    }

    let g = zn_full_neutro(6)?;
    let (x, y) = (g.idx("3")?, g.idx("5")?);
    let pairs = conjugate_pairs(&g, x, y);
    let lbl = |(a, b): (usize, usize)| format!("({},{})", g.label(a), g.label(b));
    println!("\npairs (a,b) with a·3 = 5·b in <Z6 ∪ I>: {}", pairs.len());
    println!("  least {}", conjugate_pair(&g, x, y).map(lbl).unwrap_or_default());
    let with_a1: Vec<String> = pairs.iter().filter(|p| p.0 == g.idx("1").unwrap()).map(|&p| lbl(p)).collect();
    println!("  with a = 1: {}", with_a1.join(" "));
    Ok(())
}
