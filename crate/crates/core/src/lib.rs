//! String diagram rewriting modulo Frobenius structure.
//!
//! Terms over a monoidal signature are interpreted as discrete cospans of
//! labelled hypergraphs ([`cospan`], [`term`]) and rewritten by double-pushout
//! rewriting with interfaces ([`dpoi`]). Several Frobenius structures on one
//! sort are handled by colour changers ([`multifrob`]). Two terminating
//! strategies live in [`strategies`] and the semantic oracles in [`semantics`].

pub mod cospan;
pub mod dpoi;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod multifrob;
pub mod random;
pub mod semantics;
pub mod signature;
pub mod strategies;
pub mod term;
pub mod unionfind;

pub use cospan::{cospan_iso, interfaced_iso, Cospan, InterfacedGraph};
pub use error::{Error, Result};
pub use hypergraph::{Edge, Homomorphism, Hypergraph, Label};
pub use signature::{FrobKind, Signature};
