//! Semantic oracles: finite relational models and GF(2) linear relations.

pub mod finite;
pub mod gf2;

pub use finite::{eval_graph, FiniteModel, Relation, SpiderKind};
pub use gf2::{ib_equations, ib_subspace, readoff_equations, readoff_reduced, readoff_span, IbColours, Subspace2};
