//! The full battery of checks on one semilattice, as run by `nestkit verify`.
//!
//! ```text
//! cargo run --example verify_report
//! ```

use nestkit::catalog::{bond_lattice, complete_graph, remove_top};
use nestkit::verify::{verify, Selection, VerifyOptions};

fn main() -> nestkit::Result<()> {
    let k4 = remove_top(&bond_lattice(4, &complete_graph(4))?)?;
    let opts = VerifyOptions {
        selection: Selection::Extremes,
        trials: 200,
        ..VerifyOptions::default()
    };
    let report = verify(&k4, &opts)?;
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
