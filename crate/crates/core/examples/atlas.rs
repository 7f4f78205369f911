//! A small atlas of the L_n and Z*(n) families, written as CSV.
//!
//! `cargo run --example atlas -- 5..11`

use neutromagma::atlas::{build_atlas, parse_range, AtlasFamily};
use neutromagma::constructors::ZnClass;

fn main() -> neutromagma::Result<()> {
    let range = std::env::args().nth(1).unwrap_or_else(|| "5..9".into());
    let loops = build_atlas(AtlasFamily::Ln, parse_range(&range)?)?;
    print!("{}", loops.to_csv());
    let groupoids = build_atlas(AtlasFamily::Zn(ZnClass::Zstar), parse_range("3..5")?)?;
    print!("{}", groupoids.to_csv());
    println!("member counts match: {}", loops.counts_match() && groupoids.counts_match());
    Ok(())
}
