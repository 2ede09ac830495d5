//! Exact computational algebra for the elementary symplectic Witt group.
//!
//! The crate provides four layers:
//!
//! * [`field`] and [`poly`]: exact coefficient arithmetic (arbitrary-precision
//!   rationals or a prime field `F_p` with `p > 3`) and multivariate
//!   polynomials under a fixed monomial order.
//! * [`groebner`] and [`ring`]: Buchberger completion with step/degree
//!   budgets, normal forms, and finitely presented quotient rings
//!   `k[x_1..x_n]/I` whose elements are kept in canonical normal form.
//!   Bezout witnesses for `1` are produced by an extended (transcript
//!   tracking) Buchberger run and re-verified on every return.
//! * [`matrix`]: division-free exact linear algebra over such rings —
//!   block sums, Berkowitz determinants, Pfaffians, adjugate inverses and
//!   the standard `psi`/`sigma` block matrices.
//! * [`witt`] and [`umrow`]: representatives of stabilized equivalence
//!   classes of invertible alternating matrices, elementary-word
//!   certificates for the congruence relation, the eta maps with Whitehead
//!   factorizations, symplectic reduction over fields, and the unimodular
//!   row calculus (Bezout certification, the 4x4 alternating symbol of a
//!   length-3 row, Koszul homotopies, square-row completion).
//!
//! Equivalence of alternating matrices is existential over a stabilization
//! level and an elementary matrix; this crate never searches for such data.
//! It verifies supplied certificates exactly, and generates them only where
//! a constructive recipe exists (stabilization, block swaps, eta
//! multiplicativity, and anything with entries in the coefficient field).
//!
//! All values are immutable after construction and all operations are
//! deterministic; sharing a ring between threads is safe, and long basis
//! computations are cancelable through the ring's step budget.

pub mod field;
pub mod groebner;
pub mod poly;
pub mod ring;

pub use field::{Coeff, FieldSpec};
pub use groebner::{Budget, BudgetExceeded, GroebnerBasis};
pub use poly::{MonomialOrder, ParseError, PolyRing, Polynomial};
pub use ring::{LiftOutcome, RingElement, RingError, RingSpec};
