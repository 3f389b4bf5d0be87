//! Exact local Gromov-Witten invariants of the configuration of three
//! rational curves meeting at a triple point in a Calabi-Yau threefold,
//! each component with normal bundle O(-1) + O(-1).
//!
//! The invariant `N^g_{d1,d2,d3}` is computed by exact arithmetic through
//! a reduction over blowups of P^3:
//!
//! 1. [`lattice`] — the homology lattices of the six-point blowup `X` and
//!    of its further blowup `Xhat` along six lines, with their
//!    intersection pairings;
//! 2. [`cremona`] — the involution the Cremona transformation induces on
//!    curve classes, which carries the configuration class to a multiple
//!    of a single line;
//! 3. [`invariants`] — the reduction pipeline, the vanishing test for
//!    classes with a negative multiplicity, the closed multiple-cover
//!    formula driven by an exact Bernoulli-number engine, and table
//!    generation;
//! 4. [`toric`] — the graph of torus-invariant curves with an exhaustive
//!    decomposition oracle certifying that stable maps in the
//!    configuration class cannot escape the configuration;
//! 5. [`nef`] — the surface-level intersection computations certifying
//!    the two nef statements the reduction relies on;
//! 6. [`cli`] — machine-readable command implementations behind the
//!    `closed-vertex` binary.
//!
//! Every value is an exact rational; see the `examples/` directory for a
//! runnable tour of each capability.

pub mod cli;
pub mod cremona;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod nef;
pub mod toric;

pub use cremona::{anticanonical_degree, cremona_on_x, tau_star_xhat};
pub use invariants::{
    bernoulli, bernoulli_sequence, build_vertex_class, closed_vertex_invariant, fp_invariant, invariant_table,
    vanishing_witness, InvariantResult, Rational, VertexDegrees,
};
pub use lattice::{
    intersect_div_curve_x, intersect_div_curve_xhat, intersect_div_div_x, intersect_div_div_xhat,
    section_class, CurveClassX, CurveClassXhat, DivisorClassX, DivisorClassXhat, PairIndex,
};
pub use toric::{enumerate_decompositions, invariant_curve_graph, verify_vertex_support};
