//! Combinatorial blowups of semilattices and of face posets.
//!
//! ```text
//! cargo run --example blowup
//! ```

use nestkit::blowup::{blowup, blowup_face_poset};
use nestkit::catalog::boolean;
use nestkit::complex::SimplicialComplex;

fn main() -> nestkit::Result<()> {
    let b2 = boolean(2)?;
    let top = b2.top().unwrap();
    let bl = blowup(&b2, top)?;
    let hatted = bl.elements.iter().filter(|e| e.hatted).count();
    println!("blowup of B_2 at `{}`: {} plain, {} hatted", b2.label(top), bl.elements.len() - hatted, hatted);
    for &(a, b) in bl.lattice.poset().covers() {
        println!("  {} < {}", bl.lattice.label(a), bl.lattice.label(b));
    }

    // blowing up a face of a triangle is a stellar subdivision of that face
    let triangle = SimplicialComplex::from_facets(vec!["a".into(), "b".into(), "c".into()], &[vec![0, 1, 2]], 64)?;
    let fp = triangle.face_poset();
    let edge = fp.index_of("{a,b}")?;
    let sub = blowup_face_poset(&fp, edge)?;
    println!("face poset of the triangle: {} elements, blown up at {{a,b}}: {}", fp.len(), sub.lattice.len());
    Ok(())
}
