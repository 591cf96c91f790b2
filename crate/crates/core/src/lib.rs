pub mod blowup;
pub mod building;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod error;
pub mod fan;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod poset;
pub mod semilattice;
pub mod set;
pub mod snf;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use poset::{is_isomorphic, product, Poset, SubPoset};
pub use semilattice::{validate_meet_semilattice, Semilattice};
pub use set::ElementSet;
