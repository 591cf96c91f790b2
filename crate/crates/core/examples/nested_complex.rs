//! Nested set complexes and their reduced homology.
//!
//! ```text
//! cargo run --example nested_complex
//! ```

use nestkit::building::{crosscut_complex, max_building, min_building, nested_complex};
use nestkit::catalog::{partition, remove_top};
use nestkit::homology::reduced_homology;
use nestkit::topology::{cone_check, homology_agreement};

fn main() -> nestkit::Result<()> {
    let p4 = partition(4)?;
    for (name, g) in [("minimal", min_building(&p4)?), ("maximal", max_building(&p4)?)] {
        let n = nested_complex(&p4, &g)?;
        println!(
            "{name}: {} vertices, {} facets, dimension {}, euler {}",
            n.vertices().len(),
            n.facets().len(),
            n.dimension(),
            n.euler_characteristic()
        );
        let agreement = homology_agreement(&p4, &g)?;
        println!("  homology matches the proper part: {}", agreement.agrees());
        if let Some(c) = cone_check(&p4, &g)? {
            println!("  cone with apex `{}` over the proper part: {}", c.apex, c.passed());
        }
    }

    // atoms form a crosscut; without the top they no longer span a simplex
    let proper = remove_top(&p4)?;
    let atoms = proper.set_from_labels(&proper.atoms().iter().map(|&a| proper.label(a)).collect::<Vec<_>>())?;
    let h = reduced_homology(&crosscut_complex(&proper, &atoms)?)?;
    println!("atom crosscut of Pi_4 without its top: rank {} in dimension 1", h.rank(1));
    Ok(())
}
