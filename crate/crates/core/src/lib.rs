pub mod arith;
pub mod error;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{integers_mod, make_coeff_ring, CoeffRing, RingElem};
pub mod character;
pub mod linalg;
pub mod symbols;
pub mod eigen;
pub mod hecke;
pub mod scenario;
pub mod properties;
