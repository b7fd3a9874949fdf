//! Exact-arithmetic workbench for Zinbiel algebras and their relatives.
//!
//! Algebras, coalgebras, bimodules, matched pairs and bialgebra candidates are
//! all represented by sparse structure constants over the rationals. Every
//! law is checked by evaluation on basis tuples, and every failure comes with
//! an exact witness.
//!
//! The crate's runnable `examples/` walk through each capability; the
//! `zinbiel` binary exposes the same functionality as `check`, `audit`,
//! `construct` and `model` subcommands over JSON files.

pub mod algebra;
pub mod audit;
pub mod bialgebra;
pub mod bimodule;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod fuzz;
pub mod identity;
pub mod io;
pub mod matched_pair;
pub mod models;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::AlgebraTable;
pub use bialgebra::{BialgebraCandidate, BilinearFormTable};
pub use error::{Error, Result};
pub use identity::{parse_identity, Identity};
pub use io::Object;
pub use matched_pair::MatchedPairData;
pub use models::Orientation;
pub use bimodule::Bimodule;
pub use coalgebra::CoalgebraTable;
pub use report::{Finding, Report, Value, Verdict, Witness};
pub use scalar::Scalar;
pub use tensor::{Matrix, Tensor3, Vector};
