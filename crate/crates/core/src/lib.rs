//! Arithmetical-rank witnesses for squarefree monomial ideals.
//!
//! The crate builds polynomials that generate a squarefree monomial ideal
//! up to radical (two of them for every height-2 Cohen–Macaulay ideal) and
//! certifies each result with exact Gröbner-basis computations.
//!
//! ```
//! use arank_core::{constructions::construct_h2cm, format::parse_ideal};
//!
//! let ideal = parse_ideal("x1*x2\nx1*x4\nx3*x4").unwrap();
//! let witness = construct_h2cm(&ideal).unwrap();
//! assert_eq!(witness.elements.len(), 2);
//! assert!(witness.verified);
//! ```

pub mod betti;
pub mod constructions;
pub mod error;
pub mod format;
pub mod monomial;
pub mod poly;
pub mod simplicial;
pub mod verifier;

pub use constructions::{GeneratorWitness, Provenance};
pub use error::{Error, Result};
pub use monomial::{MonomialIdeal, SquarefreeMonomial, VarSet};
pub use poly::{parse_polynomial, Polynomial};
pub use simplicial::SimplicialComplex;
pub use verifier::{verify_up_to_radical, RadicalReport};
