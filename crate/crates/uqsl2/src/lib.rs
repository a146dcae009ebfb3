//! Exact verification of the quantum group U_q(sl2) on its finite-dimensional
//! irreducible modules.
//!
//! Everything here is computed over the rational numbers — no floating point,
//! no tolerances. A check passes when two matrices are equal entry by entry
//! and fails otherwise, with the first differing entry reported.
//!
//! The crate builds the irreducible module of diameter d and sign ε in two
//! presentations of the algebra:
//!
//! * the **Chevalley presentation** with generators e, f, k^{±1} satisfying
//!   k e = q² e k, k f = q⁻² f k, e f − f e = (k − k⁻¹)/(q − q⁻¹);
//! * the **equitable presentation** with generators x, y^{±1}, z satisfying
//!   the three cyclic relations (q g h − q⁻¹ h g)/(q − q⁻¹) = 1 for
//!   (g, h) ∈ {(x, y), (y, z), (z, x)}.
//!
//! On top of the modules it constructs the nilpotent elements n_x, n_y, n_z,
//! the Casimir element Λ, the two-parameter family of identifications between
//! the presentations, q-exponentials and their conjugation identities, the
//! standard rotator Ω with its nine product forms, the τ maps, and the
//! reflection-style operators T, T^∨, T⁻¹, (T^∨)⁻¹ with their closed forms —
//! culminating in the factorization of those operators through a
//! q-exponential times a half-power diagonal twist.
//!
//! # Quick start
//!
//! ```
//! use uqsl2::{QContext, Rat, Realization, BasisKind, ThetaMode, IdentKind};
//!
//! let ctx = QContext::new(
//!     Rat::int(4),           // q
//!     Rat::int(-2),          // theta, a square root of q up to sign
//!     ThetaMode::SqQ,        // theta^2 = q
//!     0,                     // twist exponent t
//!     IdentKind::Primary,    // which identification family
//! ).unwrap();
//! let real = Realization::irreducible(&ctx, 3, BasisKind::Equitable).unwrap();
//! assert_eq!(real.dim(), 4);
//! let omega = uqsl2::rotator::standard_rotator(&real, &ctx).unwrap();
//! let cube = omega.pow(3);
//! // Omega^3 is the scalar (-1)^d q^{d(d-1)} on the irreducible of diameter d.
//! assert_eq!(
//!     cube.as_scalar_multiple_of_identity().unwrap(),
//!     -ctx.q_pow(6),
//! );
//! ```
//!
//! # Layout
//!
//! * [`scalar`] — exact rationals and the parameter context (q, θ, t, kind);
//! * [`linalg`] — dense rational matrices, inverses, nilpotency, polynomials;
//! * [`expr`] — noncommutative words and linear combinations, the defining
//!   relations of both presentations;
//! * [`module`] — the irreducible modules, direct sums, weight spaces, and
//!   the [`module::Realization`] wrapper used by every higher layer;
//! * [`identification`] — the maps between the presentations, both ways;
//! * [`qexp`] — q-exponentials and their conjugation identities;
//! * [`rotator`] — caps, Ω, its product forms, Υ, 𝔯, and the τ maps;
//! * [`lusztig`] — the reflection operators, automorphism tables, and the
//!   factorization theorem checks;
//! * [`harness`] — the parameter-grid suite runner and operator emission;
//! * [`report`] — the pass/fail record type shared by all check functions.

pub mod error;
pub mod expr;
pub mod harness;
pub mod identification;
pub mod linalg;
pub mod lusztig;
pub mod module;
pub mod qexp;
pub mod report;
pub mod rotator;
pub mod scalar;

pub use error::{Error, Result};
pub use expr::{AlgebraExpression, GenSym, SymbolTable, Word};
pub use harness::{emit_operator, run_suites, CheckRecord, Report, Suite, SuiteConfig, Summary};
pub use linalg::{Matrix, PolyCoeffs};
pub use module::{BasisKind, IrreducibleModule, Realization, WeightDecomposition};
pub use report::IdentityCheck;
pub use scalar::{IdentKind, QContext, Rat, ThetaMode};
