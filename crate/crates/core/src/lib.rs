//! Exact verification of the correspondence between the root system F4, the
//! ℤ₂-graded 𝔢₆ = 𝔰𝔩₂×𝔰𝔩₆ ⊕ ℂ²⊗Λ³ℂ⁶, and the desmic pencil of quartic
//! surfaces.
//!
//! Everything is computed over ℚ(ζ₈) without floating point.

pub mod algebra;
pub mod desmic;
pub mod elliptic;
pub mod error;
pub mod extalg;
pub mod rootsys;
pub mod sampling;
pub mod vinberg;

pub use error::Error;
