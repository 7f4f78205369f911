//! Runs the verification corpus, optionally filtered by an id glob.
//!
//! ```text
//! cargo run --example corpus -- 'ex-2.1.3*'
//! ```

use neutromagma::corpus;

fn main() -> neutromagma::Result<()> {
    let filter = std::env::args().nth(1);
    let summary = corpus::run(filter.as_deref())?;
    print!("{}", summary.render_table());
    std::process::exit(summary.exit_code());
}
