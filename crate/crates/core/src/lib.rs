//! Exact symbolic computation for three algebras at a root of unity: the
//! universal Askey-Wilson algebra, `U_q(sl2)` with Laurent coefficients, and
//! the double affine Hecke algebra of type `(C1v, C1)`.
//!
//! Everything is computed over the cyclotomic field `Q(zeta_d)` (or over
//! `Z[Q^{±1}]` for generic-parameter identities); there is no floating point
//! anywhere.  Each algebra carries a Poincare-Birkhoff-Witt style normal form
//! driven by a confluent rewriting system, and the crate mechanically checks
//! the centrality statements, basis theorems and coefficient tables that tie
//! the three algebras together:
//!
//! * `coeffring` - sparse exact scalar and polynomial arithmetic,
//! * `chebyshev` - normalized Chebyshev polynomials and the `Phi_n`/`Psi_n`
//!   solver for the composition functional equation,
//! * `qidentities` - the q-binomial theorem, Iorgov's identity and the
//!   `P/Q/R/S` recurrence system in a quantum-torus model,
//! * `uaw` - the universal Askey-Wilson algebra and its center,
//! * `uqsl2` - `U_q(sl2)`, the embedding of the Askey-Wilson algebra, and the
//!   auxiliary coefficient tables,
//! * `daha` - the rank-one double affine Hecke algebra and its center,
//! * `harness` - the check registry behind the `awcenter` binary.

pub mod chebyshev;
pub mod coeffring;
pub mod daha;
pub mod harness;
pub mod qidentities;
pub mod report;
pub mod uaw;
pub mod uqsl2;

pub use coeffring::{CycloScalar, GenericQScalar, MultiPoly, Rational, VarRegistry};
