pub mod catalog;
pub mod circuit;
pub mod dense;
pub mod enumeration;
pub mod error;
pub mod identities;
pub mod invariants;
pub mod lattice;
pub mod pauli;
pub mod ring;
pub mod subgroup;
pub mod suites;
pub mod synthesis;
pub mod tableau;

pub use catalog::{Gate, OneQubit};
pub use circuit::Circuit;
pub use error::Error;
pub use pauli::PauliString;
pub use ring::{Pauli, RingElem, Subring};
pub use tableau::Tableau;
