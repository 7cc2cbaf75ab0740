//! Commutator calculus in free groups, the Magnus power-series embedding,
//! and certificate-based perfectness verification for inverse sequences of
//! finitely presented groups.
//!
//! The toolkit is organized around a single running example: the tower of
//! iterated-commutator relators `r_{i,j}` over the free group on three
//! generators, the quotients `G_i` it presents, and the Δ-adic depth
//! obstruction that separates almost-perfect from strongly-almost-perfect
//! behaviour of the resulting inverse sequence. Each module stands on its
//! own:
//!
//! * [`words`] — exact free-group word algebra and a text grammar,
//! * [`magnus`] — the truncated noncommutative series ring with `x_j² = 0`,
//!   the embedding `β(a_j) = 1 + x_j`, and Δ-adic depth,
//! * [`tower`] — the relator tower `r_{i,j}`, its presentations and
//!   perfectness witnesses,
//! * [`prosequence`] — augmented inverse sequences, membership certificates,
//!   witness verification and subsequence transport,
//! * [`obstruction`] — the depth-based refutation harness for strong
//!   perfectness witness candidates,
//! * [`chainring`] — two-term free chain complexes over a group ring with
//!   monomial boundaries, their homology and direct limits.
//!
//! Series coefficients are generic over [`magnus::SeriesCoeff`]; the aliases
//! below fix the default arbitrary-precision instantiation used by the CLI
//! and by every computation that must never overflow.

pub mod chainring;
mod error;
pub mod magnus;
pub mod obstruction;
pub mod prosequence;
pub mod tower;
pub mod words;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Default exact coefficient scalar: arbitrary-precision signed integer.
pub type Coeff = num_bigint::BigInt;

/// Truncated Magnus series over the default exact scalar.
pub type Series = magnus::TruncatedSeries<Coeff>;

/// Fixed-width series for small caps; operations fail loudly on overflow
/// instead of wrapping.
pub type SeriesI64 = magnus::TruncatedSeries<i64>;
