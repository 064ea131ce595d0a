//! Exact symbolic engine for twisted differential operators on Jordan-algebra
//! coordinates, their critical twists, and the sl(2) star product.

pub mod jordan;
pub mod linalg;
pub mod moyal;
pub mod rep;
pub mod ring;
pub mod verify;
pub mod weyl;
