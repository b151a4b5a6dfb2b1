//! Exact computations with graded ideals in polynomial rings and exterior
//! algebras over QQ: generic initial ideals, graded Betti numbers, generic
//! annihilator numbers, the Koszul homology they control, and executable checks
//! of the rigidity statements relating I and gin(I).

pub mod annihilator;
pub mod battery;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod resolution;
pub mod rigidity;
pub mod ring;

pub use error::{Error, Result};
