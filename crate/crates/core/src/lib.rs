//! LCM lattices of monomial ideals: finite lattice predicates, Phan ideals,
//! multigraded Betti numbers through order-complex homology, and the lattice
//! theory of edge ideals.
//!
//! Linear algebra is generic over [`Scalar`]; the concrete fields are the
//! rationals and the prime fields `Fp<P>` listed in [`SUPPORTED_PRIMES`].

pub mod constructions;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod lattice;
pub mod monomial;
pub mod resolution;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, GraphJson};
pub use homology::{CheckedRanks, SimplicialComplexData, SparseMatrix};
pub use ideal::{phan_ideal, IdealJson, MonomialIdeal};
pub use lattice::{
    BitSet, FiniteLattice, LatticeJson, Property, PropertyReport, RankFunction, Verdict, Witness,
};
pub use monomial::Monomial;
pub use resolution::{
    betti_table, betti_table_checked, boolean_equivalence_report, is_cohen_macaulay, is_pure,
    pd_vs_height_report, projective_dimension, taylor_betti_numbers, taylor_is_minimal,
    BettiTable, TaylorReport,
};
pub use scalar::{FieldSpec, Fp, Scalar, SUPPORTED_PRIMES};

pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F32003 = Fp<32003>;
