//! Reduced integral homology of simplicial complexes, torsion included.
//!
//! ```text
//! cargo run --example homology
//! ```

use nestkit::homology::reduced_homology;
use nestkit::io::homology_to_json;
use nestkit::complex::SimplicialComplex;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn main() -> nestkit::Result<()> {
    let circle = SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]], 64)?;
    println!("circle: {}", homology_to_json(&reduced_homology(&circle)?));

    // six-vertex real projective plane
    let rp2 = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ];
    let facets: Vec<Vec<usize>> = rp2.iter().map(|f| f.to_vec()).collect();
    let rp2 = SimplicialComplex::from_facets(labels(6), &facets, 1 << 10)?;
    let h = reduced_homology(&rp2)?;
    println!("RP^2: rank H_1 = {}, torsion {:?}", h.rank(1), h.group(1).torsion);
    Ok(())
}
