pub mod bar;
pub mod center;
pub mod error;
pub mod gsz;
pub mod hochschild;
pub mod linalg;
pub mod quiver;
pub mod report;
pub mod resolution;
pub mod scalar;
pub mod yoneda;

pub use error::{Error, Result};
pub use quiver::{Algebra, AlgebraElement, Letter, Monomial, Vertex};
pub use report::CheckReport;
pub use scalar::{Field, Scalar};
