//! Exact symbolic computation for the quantum group U_q(gl(N+1)).
//!
//! The crate constructs the central elements C_m of U_q(gl(N+1)) explicitly
//! in terms of the generators, re-derives them independently from fused
//! R-matrices via the quantum-trace (Drinfeld) construction, and verifies
//! centrality, scalar eigenvalues and the underlying algebraic relations in
//! exact arithmetic over Laurent polynomials in q^{1/2}.
//!
//! Module map:
//!
//! - [`scalars`]: Laurent polynomials in s = q^{1/2} over the rationals,
//!   localized at q - q^{-1}. All coefficient arithmetic is exact.
//! - [`combinatorics`]: symmetric-group machinery — inversion counts,
//!   minimal-inversion coset representatives, multi-indices and occupation
//!   vectors.
//! - [`expressions`]: the formal algebra layer — ordered words in generators
//!   and dressed root vectors, coset-symmetrized root products, and the
//!   closed-form central elements.
//! - [`representations`]: exact matrix representations — defining action,
//!   tensor-power coproducts, the symmetric-subspace basis and its
//!   normalized closed form.
//! - [`fusion`]: R-matrices, fused R-matrices, and the partial quantum trace
//!   producing the central elements a second way.
//! - [`verification`]: centrality / scalar-action / relation check suites
//!   with machine-readable reports.

pub mod combinatorics;
pub mod expressions;
pub mod fusion;
pub mod representations;
pub mod scalars;
pub mod verification;

pub use scalars::{LaurentPoly, QScalar};
