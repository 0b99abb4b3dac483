pub mod arith;
pub mod constructions;
pub mod eaqecc;
pub mod error;
pub mod field;
pub mod grs;
pub mod hull;
pub mod matrix;
pub mod poly;
pub mod request;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, FieldElement, FieldOptions};
pub use grs::GrsCode;
pub use matrix::Matrix;
pub use poly::Polynomial;
