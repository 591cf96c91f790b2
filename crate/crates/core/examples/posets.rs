//! Building a meet-semilattice from cover relations and exploring it.
//!
//! ```text
//! cargo run --example posets
//! ```

use nestkit::catalog::{boolean, partition};
use nestkit::{is_isomorphic, product, validate_meet_semilattice, Poset};

fn main() -> nestkit::Result<()> {
    // the diamond: two atoms under a common top
    let diamond = Poset::from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])?;
    let s = validate_meet_semilattice(diamond)?;
    let (a, b) = (s.index_of("a")?, s.index_of("b")?);
    println!("meet(a, b) = {}", s.label(s.meet(a, b)));
    println!("join(a, b) = {:?}", s.join(a, b).map(|j| s.label(j)));
    println!("atoms: {:?}", s.atoms().iter().map(|&x| s.label(x)).collect::<Vec<_>>());

    // the diamond is the boolean lattice on two atoms
    let b2 = boolean(2)?;
    println!("diamond ~ B_2: {}", is_isomorphic(s.poset(), b2.poset()).is_some());

    // B_1 x B_1 is B_2 as well
    let b1 = boolean(1)?;
    let square = product(&[b1.poset(), b1.poset()])?;
    println!("B_1 x B_1 ~ B_2: {}", is_isomorphic(&square, b2.poset()).is_some());

    // a bowtie has two minimal elements and is rejected
    let bowtie = Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])?;
    if let Err(e) = validate_meet_semilattice(bowtie) {
        println!("bowtie: {e}");
    }

    let p4 = partition(4)?;
    let top = p4.top().expect("partition lattices have a top");
    let below = p4.interval(p4.bottom(), p4.index_of("12|34")?)?;
    println!("Pi_4: {} elements, top `{}`, [0, 12|34] has {} elements", p4.len(), p4.label(top), below.poset.len());
    Ok(())
}
