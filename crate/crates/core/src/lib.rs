//! Exact moments of permutation-pattern counts on conjugacy classes.
//!
//! For a pattern `sigma` in `S_k` and `d >= 1`, the average of
//! `N_sigma(pi)^d` over the conjugacy class of `pi` is a polynomial in
//! `n, m_1(pi), ..., m_{dk}(pi)`. This crate computes that polynomial
//! exactly through the partition algebra `Par_{dk}(n)`, decomposes it into
//! the stable irreducible characters `chi^{lambda[n]}`, and checks every
//! stage against brute-force enumeration.
//!
//! The main entry points are [`moments::moment_polynomial`] and
//! [`moments::stable_decomposition`]; [`oracle::verify_all`] runs the
//! cross-checks.

pub mod characters;
pub mod config;
pub mod error;
pub mod linalg;
pub mod moments;
pub mod oracle;
pub mod partition_algebra;
pub mod perm;
pub mod poly;
pub mod trace;

pub use config::Guardrails;
pub use error::{Error, Result};
pub use perm::{CycleType, GeneralizedPattern, Permutation};
pub use poly::{MPoly, Rational, UPoly};
