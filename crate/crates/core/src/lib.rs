//! Characteristic numbers of circle actions from isolated fixed-point data.
//!
//! Given the integer weights of the isotropy representation at each fixed
//! point, this crate evaluates Bott residue sums exactly and audits the
//! consequences: vanishing of sub-top-degree sums, integrality, lower bounds on
//! the number of fixed points, semi-free obstructions and the divisibility of
//! the first Chern class via rigidity. All arithmetic is over arbitrary
//! precision integers and rationals.

pub mod certifier;
pub mod error;
pub mod localization;
pub mod model;
pub mod poly;
pub mod ratfunc;
pub mod rigidity;
pub mod semifree;
pub mod symfunc;

pub use error::{Error, Result};
pub use localization::{CharacteristicNumber, Flavor};
pub use model::{FixedPoint, FixedPointProfile, Partition, Structure};
pub use ratfunc::RationalFunction;
