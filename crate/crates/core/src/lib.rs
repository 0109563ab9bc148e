//! Exact free-basis certificates for projective modules over `Q[x1, ..., xn]`.
//!
//! A finitely generated projective module is carried around as an idempotent
//! matrix `E`; a freeness certificate is a pair `(A, B)` with `A·B = E` and
//! `B·A = I_m`. The crate builds such pairs by running the constructive
//! machinery behind the Quillen–Suslin theorem:
//!
//! - [`poly`], [`gcd`]: exact multivariate polynomials over `Q`.
//! - [`fraction`], [`local`]: rational functions, the monic localization
//!   `R(x)`, its polynomial-part retraction, and rational-point localizations.
//! - [`matrix`], [`certificate`], [`hermite`], [`elementary`], [`linalg`]:
//!   matrices, equivalence certificates, Hermite bases over Euclidean domains
//!   and elementary factorization over fields.
//! - [`horrocks`]: local freeness over `R[x]` from freeness over `R(x)`.
//! - [`patching`]: translation certificates and the local-to-global step.
//! - [`solver`]: the induction driver, rational point search and unimodular
//!   row completion.
//!
//! Everything is exact; there is no floating point anywhere in the crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certificate;
pub mod elementary;
pub mod error;
pub mod fraction;
pub mod gcd;
pub mod hermite;
pub mod horrocks;
pub mod linalg;
pub mod local;
pub mod matrix;
pub mod patching;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod solver;
pub mod vars;

pub use certificate::{EquivalenceCertificate, FreeCertificate, VerifyReport};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use local::{LocalElem, PointIdeal};
pub use matrix::Mat;
pub use poly::{MultiPoly, Substitution};
pub use rational::Rational;
pub use ring::{Field, Ring};
pub use vars::VarContext;
