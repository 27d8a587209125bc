//! Exact finite-dimensional computations with braided Hopf algebras:
//! Yetter-Drinfeld modules, Hopf bimodules, cross products and
//! bosonization, braided exterior algebras and bicovariant differential
//! calculi, all realized as matrices over an exact field.

pub mod crossprod;
pub mod diffcalc;
pub mod error;
pub mod exactla;
pub mod gradedcalc;
pub mod hopf;
pub mod hopfbimod;
pub mod io;
pub mod report;
pub mod yd;

pub use error::{Error, Result};
pub use exactla::{Field, FieldSpec, LinMap, Scalar, SplitPair};
pub use hopf::{Bimodule, FiniteHopfAlgebra};
pub use hopfbimod::HopfBimodule;
pub use report::{Check, Report, Witness};
pub use yd::YDModule;
