//! Simplicial fans of nested set complexes and the chain of stellar
//! subdivisions between two building sets.
//!
//! ```text
//! cargo run --example fan_subdivision
//! ```

use nestkit::building::{max_building, min_building};
use nestkit::catalog::partition;
use nestkit::fan::{fan_from_nested, sample_support_equality, stellar_subdivide, subdivision_sequence, Fan};

fn main() -> nestkit::Result<()> {
    // the positive quadrant, split along the diagonal
    let quadrant = Fan::new(2, vec![vec![1, 0], vec![0, 1]], &[vec![0, 1]], None)?;
    let split = stellar_subdivide(&quadrant, &[0, 1], &[1, 1])?;
    println!("subdivided quadrant: {:?}", split.maximal_cones());

    let p4 = partition(4)?;
    let (min, max) = (min_building(&p4)?, max_building(&p4)?);
    let coarse = fan_from_nested(&p4, &min)?;
    let fine = fan_from_nested(&p4, &max)?;
    println!("Pi_4 fans: {} and {} maximal cones", coarse.maximal_cones().len(), fine.maximal_cones().len());

    let report = subdivision_sequence(&p4, &max, &min)?;
    for (step, s) in report.steps.iter().enumerate() {
        println!("step {step}: add `{}` on factors {:?}, passed {}", s.element, s.factors, s.passed());
    }

    let support = sample_support_equality(&coarse, &fine, 1000, 7)?;
    println!("same support on {}/{} sample points", support.agreements, support.trials);
    Ok(())
}
