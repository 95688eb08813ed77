//! Exact computer algebra for first-order Galilei-invariant wave equations.
//!
//! The library constructs the indecomposable vector/scalar and spinor
//! representations of the homogeneous Galilei algebra hg(1,3), solves the
//! invariance conditions for first-order wave operators β·p + β₄m over them,
//! classifies each system's spin content and internal energy from exact
//! plane-wave kernels, builds the Galilean Clifford/Duffin–Kemmer–Petiau
//! structures, reduces gauge-coupled systems to Pauli-type Hamiltonians with
//! exact coefficient extraction, and performs the contraction of the
//! relativistic Proca system to its Galilean limit.
//!
//! All arithmetic is exact over the Gaussian rationals; no floating point
//! appears anywhere in the core.

pub mod scalar;
pub mod poly;
pub mod matrix;
pub mod reps;

pub use matrix::Mat;
pub use poly::{var, Poly, Var};
pub use scalar::Gaussian;
