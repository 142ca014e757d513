//! Largest inscribed circles in fundamental domains of the hyperbolic plane
//! groups G = [3,3,...,3] with `l >= 4` rotation centers of order 3.
//!
//! The crate is organized around the pipeline that answers "which fundamental
//! domain of G admits the biggest incircle, and how big is it":
//!
//! * [`hyp_trig`] — the tangency relation cos(α/2) = cosh x · sin(β/2) between
//!   a vertex angle and its central angle, its derivatives, the circumscribed
//!   circle existence solver, areas, and the arcsin upper-bound margins.
//! * [`domain_enum`] — every combinatorial domain type of G as a nonnegative
//!   solution of a linear Diophantine system (a degree census of the tree
//!   surface graph), plus the side-count bounds.
//! * [`incircle`] — the single monotone radius equation h(β) = 0 per census,
//!   the solved incircle (radius, central angles, areas, density), and the
//!   closed-form global optimum x = arccosh(1/(2 sin(π/(4l−6)))).
//! * [`lagrange`] — the constrained-extremum formulation for the free-angle
//!   domain types of l = 4: KKT stationary points by Newton iteration,
//!   the bordered-determinant second-order test, and the angle-equalization
//!   step that strictly grows the incircle.
//! * [`render`] — unfolding a solved domain into Poincaré-disk coordinates
//!   and emitting a deterministic SVG figure.
//!
//! All angles are radians stored as `f64`; there is no degree API.

pub mod domain_enum;
pub mod error;
pub mod hyp_trig;
pub mod incircle;
pub mod lagrange;
pub mod render;

pub use error::Error;
pub use hyp_trig::{AngleList, AngleValue, CoshRadius};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
