//! Minimal, maximal and arbitrary building sets, with factorization
//! certificates.
//!
//! ```text
//! cargo run --example building_sets
//! ```

use nestkit::building::{check_building, enumerate_building_sets, factors, max_building, min_building, BuildingCheck};
use nestkit::catalog::{bond_lattice, boolean, partition};

fn main() -> nestkit::Result<()> {
    let b3 = boolean(3)?;
    let min = min_building(&b3)?;
    let max = max_building(&b3)?;
    println!("B_3 minimal building set: {:?}", b3.labels_of(min.carrier()));
    println!("B_3 maximal building set: {} elements", max.len());

    let all = enumerate_building_sets(&b3, 64)?;
    println!("B_3 has {} building sets", all.len());

    // the top of B_3 splits into the three atoms in the minimal set
    let top = b3.top().unwrap();
    println!("factors of `{}` in the minimal set: {:?}", b3.label(top), b3.labels_of(&factors(&b3, &min, top)?));

    // atoms alone fail on the partition lattice: 12|34 is not a product of atoms
    let p4 = partition(4)?;
    let atoms = p4.set_from_labels(&p4.atoms().iter().map(|&a| p4.label(a)).collect::<Vec<_>>())?;
    match check_building(&p4, &atoms, BuildingCheck::Canonical) {
        Ok(_) => println!("atoms of Pi_4 form a building set"),
        Err(f) => println!("atoms of Pi_4 fail: {}", f.reason),
    }
    println!("Pi_4 minimal building set: {} elements", min_building(&p4)?.len());

    // bond lattice of a path: the graphic building set of connected subgraphs
    let path = bond_lattice(3, &[(1, 2), (2, 3)])?;
    println!("bond lattice of a path: {:?}", path.labels_of(min_building(&path)?.carrier()));
    Ok(())
}
