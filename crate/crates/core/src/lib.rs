//! Exact arithmetic for second-order linear recurrences (Horadam sequences),
//! the four-dimensional Cartan number algebra, and the spinor forms of both.
//!
//! Everything here is computed over exact rationals or the quadratic ring
//! `Q[t]/(t^2 - d)`; there are no floating-point values anywhere. The crate
//! provides three layers:
//!
//! * value types and rings ([`exact`], [`cartan`], [`spinor`]),
//! * sequence machinery: iterative and matrix-power term evaluation,
//!   closed-form (Binet) coefficients, generating functions, and a decision
//!   procedure for identities between constant-recursive sequences
//!   ([`horadam`], [`sequences`], [`genfunc`], [`cfinite`]),
//! * a reconciliation [`report`] that compares a built-in table of quoted
//!   closed-form constants against the values the recurrences actually force.

pub mod cartan;
pub mod cfinite;
pub mod exact;
pub mod genfunc;
pub mod horadam;
pub mod json;
pub mod report;
pub mod sequences;
pub mod spinor;
