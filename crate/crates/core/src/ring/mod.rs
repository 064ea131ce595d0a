//! Exact coefficient arithmetic and the function ring `C[z][F⁻¹] ⊕ w·C[z][F⁻¹]`.

mod locfn;
mod lpoly;
mod scalar;
mod superfn;
pub mod text;
mod zpoly;

pub use locfn::{LocFn, RingCtx};
pub use lpoly::LambdaPoly;
pub use scalar::Scalar;
pub use superfn::{Grade, SuperFn};
pub use text::{format_superfn_terms, parse_superfn, superfn_terms, var_name};
pub use zpoly::{Monomial, ZPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different norm contexts")]
    ContextMismatch,
    #[error("expected degree {expected}, found {found:?}")]
    Degree { expected: usize, found: Option<usize> },
    #[error("roots are irrational (discriminant {discriminant})")]
    IrrationalRoot { discriminant: String },
    #[error("function is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
}
