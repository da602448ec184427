//! Exact computation of the Hilbert depth, dimension and depth of quotients
//! `J/I` of squarefree monomial ideals.
//!
//! The Hilbert depth is computed combinatorially: count the squarefree
//! monomials of `J \ I` by degree (the α-vector), apply the alternating
//! binomial transform at each level `q` (the β-vectors), and take the largest
//! level at which every entry is nonnegative. Dimension and depth come from
//! the Stanley–Reisner side: the relative complex `Ψ = (Δ(I), Δ(J))`, its
//! skeletons and the reduced homology of links.
//!
//! ```
//! use hdepth::{IdealPair, Limits, MonomialIdeal, RingContext};
//!
//! let ring = RingContext::new(3).unwrap();
//! let ideal = MonomialIdeal::parse("x1*x2*x3", ring).unwrap();
//! let pair = IdealPair::quotient(ideal).unwrap();
//! assert_eq!(hdepth::hdepth(&pair, &Limits::default()).unwrap(), 2);
//! ```

pub mod cli;
pub mod complex;
pub mod error;
pub mod hdepth;
pub mod homology;
pub mod macaulay;
pub mod monomial;
pub mod random;
pub mod rank;
pub mod report;
pub mod verify;

pub use complex::{complex_of_ideal, ideal_of_complex, FVector, RelativeComplex, SimplicialComplex};
pub use error::{Error, Result};
pub use hdepth::{
    alpha, alpha_from_beta, beta, dim_module, h_vector, hdepth, AlphaVector, BetaVector,
};
pub use homology::{depth, CoefficientField};
pub use monomial::{parse_ideal, IdealPair, Limits, Monomial, MonomialIdeal, RingContext};
