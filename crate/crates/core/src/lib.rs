//! Exact chamber geometry for Weyl-group hyperplane arrangements.
//!
//! Everything in this crate is computed over the rationals with arbitrary
//! precision; there is no floating point anywhere. The crate is `no_std`
//! and only needs `alloc`.
//!
//! - [`exactlin`]: rational vectors, matrices, bilinear forms, polynomials,
//!   resultants and strict-inequality feasibility.
//! - [`rootsys`]: root systems of types A–G and their Weyl groups as
//!   explicit matrix groups.
//! - [`arrangement`]: chambers of central rational hyperplane arrangements,
//!   wall graphs, cones and fans.
//! - [`movcone`]: ample chamber, movable cone as a fundamental domain for a
//!   group action, and the flop graph inside it.
//! - [`parabolic`]: Levi-restricted arrangements, marked Dynkin diagrams and
//!   the twist operation.
//! - [`slice`]: the `A_{n-1}` surface family `x² + y² + ∏(z - s_i) = 0`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod exactlin;
pub mod movcone;
pub mod parabolic;
pub mod rootsys;
pub mod slice;
