//! Exact Dehn-surgery calculus on lens spaces, simple knots and the filling
//! families of the magic manifold, with exhaustive verification sweeps.

pub mod error;
pub mod families;
pub mod lens;
pub mod normseq;
pub mod pentangle;
pub mod rationals;
pub mod simpleknot;
pub mod sweep;
pub mod tangle;

pub use error::{Error, Result};
pub use lens::LensSpace;
pub use normseq::NormSeq;
pub use rationals::{ContFrac, ExtRational};
