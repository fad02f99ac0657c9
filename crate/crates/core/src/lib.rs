//! Exact arithmetic for automorphism groups of K3 surfaces whose Picard lattice has rank 3.
//!
//! The central object is the isomorphism between the discriminant kernel `O_Γ(L)` of a
//! rank-3 even lattice and the unit group of its Clifford algebra modulo `±1`, read
//! through the grading `Cl(L) = Cl⁺(L) ⊕ Cl⁻(L)`.
//!
//! - [`lattice`]: Gram matrices, signatures, discriminant groups and forms, kernel and cone tests.
//! - [`clifford`]: the eight-dimensional algebra `Cl(L)`, its quaternion order `Cl⁺(L)`, the central element `E`.
//! - [`exterior`]: `W = ∧²Cl⁺(L)`, the sublattices `P±`, and the actions `μ`, `μ̃`.
//! - [`isometry`]: isometries from units and units from isometries.
//! - [`modular`]: congruence subgroups of `PGL₂(Z)`, indices, torsion, negative Pell.
//! - [`report`]: the automorphism-group report for `U(k) ⊕ ⟨2l⟩` and Salem data.

pub mod arith;
pub mod clifford;
pub mod exterior;
pub mod isometry;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod modular;
pub mod report;

pub use arith::{Int, Rat};
pub use lattice::{Lattice, LatticeError};
pub use matrix::{IntMatrix, RatMatrix};
