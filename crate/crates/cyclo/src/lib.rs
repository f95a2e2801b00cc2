//! # cyclo — exact spectral classification of digraphs with Hermitian radius ≤ 2
//!
//! A digraph Δ (vertices joined by *digons* — edges in both directions — or by
//! single *arcs*) is encoded by its **Hermitian adjacency matrix** H(Δ):
//!
//! * `H[x][y] = 1`  if {x,y} is a digon,
//! * `H[x][y] = i`  if there is an arc x→y (and so `H[y][x] = −i`),
//! * `H[x][y] = 0`  otherwise, and the diagonal is zero.
//!
//! H(Δ) is Hermitian, so its spectrum is real; its **spectral radius** ρ(Δ) is the
//! largest absolute eigenvalue. Digraphs with ρ ≤ 2 are the *cyclotomic* ones: their
//! span-2 eigenvalue windows make them the digraph analogue of the classical
//! graphs-with-eigenvalues-in-[−2,2], and they carry Gaussian-integer root systems.
//!
//! This crate constructs the maximal examples, decides ρ < 2 / ρ = 2 / ρ > 2 with
//! **exact arithmetic only** (arbitrary-precision Gaussian integers, Sturm sequences
//! over ℚ and ℚ(√2); no floating point anywhere in the decision path), tests
//! *switching equivalence* of digraphs by complete witness search, and verifies the
//! classification exhaustively at small vertex counts:
//!
//! * every connected digraph with ρ = 2 embeds, up to switching, in one of the
//!   maximal 2k-vertex toroidal digraphs Δ₂ₖ^(1), Δ₂ₖ^(i) or one of the three
//!   sporadics Δ₈†, Δ₁₄, Δ₁₆;
//! * every connected digraph with ρ < 2 is, up to switching, a cycle variant
//!   (Dₙ, C̃ₙ, C̃′ₙ, C̃″ₙ), a path, a □-shaped or Y-shaped tree-with-quadrangle
//!   gadget, or a subdigraph of one of thirteen exceptional digraphs on ≤ 8 vertices.
//!
//! ## Modules
//!
//! * [`gaussint`] — Gaussian integers, integer characteristic polynomials
//!   (fraction-free Faddeev–LeVerrier), Sturm root counting with endpoints in
//!   ℚ ∪ ℚ·√2, the [`gaussint::RadiusClass`] trichotomy, and exact rank of 2I−H.
//! * [`digraph`] — digraphs as pair-state tables, Hermitian adjacency both ways,
//!   connectivity, odd-arc-cycle detection, JSON/DOT formats.
//! * [`signed`] — signed graphs, the associated signed graph S(Δ) on 2n vertices
//!   (its spectrum is the square of Δ's), components, and the canonical digraph of
//!   a connected bipartite signed graph.
//! * [`equivalence`] — switching witnesses (vertex bijection + unit phases +
//!   optional conjugation/negation), complete backtracking searches for strong
//!   equivalence and equivalence, canonical forms, and subdigraph containment up
//!   to switching.
//! * [`catalog`] — the maximal matrices T₂ₖ^(x) and sporadics S₈†, S₁₄, S₁₆, their
//!   digraph realizations via displaced Gram matrices of norm-2 Gaussian vectors,
//!   the small families (items (4)–(13)), and the signed-graph side (U₁..U₁₁,
//!   O₂ₖ, Q_{h,k}).
//! * [`classify`] — the decision procedure: radius class, a container with an
//!   explicit witness, Gaussian root-lattice labels, and the λ_min > −√2 ⇔
//!   complete-graph criterion.
//! * [`harness`] — exhaustive enumeration over all 4^(n(n−1)/2) pair-state
//!   assignments with monotone pruning, switching-class deduplication, and the
//!   `verify` entry points used by the acceptance suite and the CLI.
//!
//! ## Exactness ground rules
//!
//! Every decision that the public API reports — radius classes, root counts,
//! eigenvalue bounds, ranks, witness validity — is computed over ℤ, ℤ\[i\], ℚ, ℚ(i)
//! or ℚ(√2) and is exact. Returned witnesses are re-verified by re-application
//! before they are handed out; a witness that fails re-verification is a bug and
//! panics rather than returning silently wrong data.
//!
//! ## CLI
//!
//! The `cyclo` binary exposes generation (`gen`), spectra (`spectrum`),
//! classification (`classify`), equivalence search (`equiv`), exhaustive
//! enumeration (`enumerate`), the verification suites (`verify`), and format
//! conversion (`export`). See the README for a tour.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod catalog;
pub mod classify;
pub mod digraph;
pub mod equivalence;
pub mod gaussint;
pub mod harness;
pub mod signed;

pub use digraph::Digraph;
pub use gaussint::{GaussInt, HermMatrix, IntPoly, RadiusClass};
pub use signed::SignedGraph;

/// Errors reported by the library.
///
/// Contract violations that indicate a bug *inside* the library (e.g. a
/// characteristic polynomial coefficient failing to be a real integer, or a
/// witness failing re-verification) panic instead: they are theorem violations,
/// not recoverable conditions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A matrix that must be Hermitian is not: `entries[row][col]` is not the
    /// conjugate of `entries[col][row]` (or a diagonal entry is not real).
    #[error("matrix is not Hermitian at ({row},{col})")]
    NonHermitian {
        /// Row of the offending entry.
        row: usize,
        /// Column of the offending entry.
        col: usize,
    },

    /// An entry is outside the digraph alphabet {0, 1, i, −i}.
    #[error("entry {entry} at ({row},{col}) is not a digraph adjacency value (0, 1, i or -i)")]
    InvalidAdjacency {
        /// Row of the offending entry.
        row: usize,
        /// Column of the offending entry.
        col: usize,
        /// The offending value, rendered as `a+bi`.
        entry: String,
    },

    /// An entry is outside the adjacency-class alphabet {0, ±1, ±i}.
    #[error("entry {entry} at ({row},{col}) is not in the adjacency alphabet {{0, ±1, ±i}}")]
    NotAdjacencyClass {
        /// Row of the offending entry.
        row: usize,
        /// Column of the offending entry.
        col: usize,
        /// The offending value, rendered as `a+bi`.
        entry: String,
    },

    /// A catalog generator was called with parameters outside its family.
    #[error("parameter out of range: {0}")]
    ParamRange(String),

    /// A displaced Gram matrix was requested for a vector that does not have
    /// squared norm 2.
    #[error("vector {index} has squared norm {norm}, expected 2")]
    BadRoot {
        /// Index of the offending vector in the input list.
        index: usize,
        /// Its squared norm.
        norm: String,
    },

    /// An operation with a hard size cap was called on a larger instance.
    #[error("instance has {n} vertices, larger than the supported cap {cap}")]
    CapExceeded {
        /// Vertex count of the instance.
        n: usize,
        /// The cap.
        cap: usize,
    },

    /// `lattice_label` was asked about a catalog entry that carries no label.
    #[error("catalog entry {0} has no tabulated lattice label")]
    NotInTables(String),

    /// A certified property failed to verify: the classification promised a
    /// witness and the complete search found none.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// The operation requires a connected input.
    #[error("input digraph is not connected")]
    Disconnected,

    /// The operation requires a bipartite input.
    #[error("input signed graph is not bipartite")]
    NotBipartite,

    /// A vertex subset argument is invalid (out of range, repeated, or empty).
    #[error("invalid vertex subset: {0}")]
    InvalidVertexSet(String),

    /// A file or string being loaded is not a valid serialized object.
    #[error("invalid input format: {0}")]
    InvalidFormat(String),

    /// Underlying JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
