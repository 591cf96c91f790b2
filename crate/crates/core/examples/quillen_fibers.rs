//! Fibers of the map from nested sets to their joins, each checked
//! contractible by a witness and by homology.
//!
//! ```text
//! cargo run --example quillen_fibers
//! ```

use nestkit::building::min_building;
use nestkit::catalog::{partition, remove_top};
use nestkit::topology::quillen_fiber_report;

fn main() -> nestkit::Result<()> {
    let s = remove_top(&partition(4)?)?;
    let g = min_building(&s)?;
    let report = quillen_fiber_report(&s, &g)?;
    for c in &report.checks {
        println!(
            "{:<10} {:?} witness {:?}, {} nested sets, acyclic {}",
            c.element,
            c.case,
            c.witness,
            c.size,
            c.homology.is_acyclic()
        );
    }
    println!("all fibers contractible: {}", report.passed());
    Ok(())
}
