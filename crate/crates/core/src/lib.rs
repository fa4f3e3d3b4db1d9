//! Exact symbolic verification of Yang-Baxter families attached to sl(2).

pub mod classical;
pub mod diagrams;
pub mod error;
pub mod field;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod quantum;
pub mod report;
pub mod runner;
pub mod tensor;
pub mod uqsl2;

pub use error::{Error, Result};
pub use field::{qint, FieldElement};
pub use poly::{Poly, Var};
pub use tensor::{Factor, ImageBasis, LinearOperator, Space};
