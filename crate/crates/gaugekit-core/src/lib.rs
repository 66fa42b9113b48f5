//! Gauge geometry on finite-dimensional real vector spaces, with symplectic
//! duality.
//!
//! A *gauge* is the Minkowski functional `γ_K(x) = inf { λ ≥ 0 : x ∈ λK }` of
//! a convex body `K` that contains the origin in its interior — a norm without
//! the symmetry axiom. On an even-dimensional space a nondegenerate
//! skew-symmetric form `ω` identifies the space with its dual, turning the
//! polar body `K°` into the *dual body* `K^ω` and the polar gauge into the
//! *dual gauge* `γ_ω(x) = max { ω(x, y) : y ∈ K }`.
//!
//! The crate provides:
//!
//! * [`symplectic`] — forms, the identification `X* ↔ X`, symplectic
//!   complements, bases, and planes;
//! * [`body`] — vertex polytopes, halfspace polytopes, and smooth
//!   (quadratic level-set) bodies with membership/support/boundary queries;
//! * [`gauge`] — gauge evaluation, asymmetric distances, point–line
//!   distance, the symmetrized norm, and curve length;
//! * [`duality`] — polar bodies, dual bodies, bi-duality, and homothety
//!   detection;
//! * [`orthogonality`] — the Birkhoff-style relation `x ⊣ y`, support
//!   pairs, and dual-gauge attainment points;
//! * [`isometry`] — gauge-isometry verification, adjoints, dual
//!   isometries, and planar linear-equivalence search;
//! * [`characteristics`] — the boundary map `J`, characteristic flows on
//!   smooth boundaries, symplectic area, planar sections, and capacity
//!   estimates.
//!
//! The crate is `no_std` (with `alloc`); scalar math comes from `std` by
//! default or from `libm` when the `std` feature is disabled.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("gaugekit-core needs either the `std` or the `libm` feature");

mod error;
pub(crate) mod float;

pub mod body;
pub mod characteristics;
pub mod curve;
pub mod directions;
pub mod duality;
pub mod gauge;
pub mod isometry;
pub mod linalg;
pub mod lp;
pub mod orthogonality;
pub mod rng;
pub mod sampling;
pub mod symplectic;

pub use body::{Body, FaceInfo, HPolytope, SmoothBody, Support, VPolytope};
pub use curve::SampledCurve;
pub use error::{Error, Result};
pub use gauge::{Gauge, Line};
pub use isometry::AffineMap;
pub use symplectic::{Covector, PlaneSubspace, SymplecticForm};

/// Default tolerance for geometric comparisons (support gaps, membership).
pub const DEFAULT_GEOMETRY_EPS: f64 = 1e-9;
