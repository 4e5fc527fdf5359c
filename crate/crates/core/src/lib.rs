//! Exact computation of asymptotic Hilbert polynomials of limiting shapes,
//! certified upper bounds for Waldschmidt constants, and a monomial-ideal
//! symbolic-power oracle.
//!
//! The library is organized in four layers:
//!
//! * [`exact`] — arbitrary-precision rationals, dense univariate polynomials
//!   over Q, and certified real-root location via Sturm sequences.
//! * [`shape`] — limiting shapes of the form `Δ(a₁,…,a_c) × R^{n−c}` and
//!   their asymptotic Hilbert polynomials, computed by exact symbolic
//!   integration.
//! * [`bound`] — the polynomial `Λ(t) = tⁿ/n! − aHP(t)`, its derivatives,
//!   and reports carrying a certified interval around the largest real root,
//!   which bounds the Waldschmidt constant from above.
//! * [`monomial`] — an exact monomial-ideal engine (symbolic powers of
//!   coordinate-subspace arrangements, Hilbert functions, Δ-sets) used as an
//!   independent cross-check of the shape-side bounds.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use concurrently.

pub mod bound;
pub mod error;
pub mod exact;
pub mod monomial;
pub mod shape;

pub use bound::{check_bound_against_samples, lambda_poly, waldschmidt_bound, BoundReport};
pub use error::{Error, Result};
pub use exact::{
    cauchy_bound, largest_real_root, parse_rat, sturm_count, Poly, Rat, RootInterval,
};
pub use monomial::{Monomial, MonomialIdeal};
pub use shape::{
    ahp_configuration, ahp_simplex, star_closed_formula, star_shape, verify_star_formula,
    Configuration, SimplexShape,
};
