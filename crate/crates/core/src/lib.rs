//! Exact symbolic engine for full weak exceptional collections on
//! `S_n`-equivariant derived categories of real Brauer–Severi varieties.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: rational matrices, polynomials, factorization over ℚ, Sturm
//!   counts and Sylvester signatures.
//! - [`algebra`]: finite-dimensional ℚ-algebras by structure constants,
//!   fixed subalgebras, and Wedderburn decomposition classified over ℝ.
//! - [`brauer`]: Brauer classes over ℝ, central simple algebra descriptors,
//!   noncommutative motive comparison and rational-point predicates.
//! - [`symrep`]: multi-indices, Young subgroups and Young's natural
//!   representation over ℚ.
//! - [`collection`]: the collection engine and its report.
//! - [`verify`]: claim-level verification pipelines.
//! - [`cli`]: the `sodkit` command-line surface.

pub mod algebra;
pub mod brauer;
pub mod cli;
pub mod collection;
pub mod exact;
pub mod symrep;
pub mod verify;
