//! Canonical bases of higher-level q-deformed Fock spaces and the
//! decomposition matrices of Ariki-Koike algebras they compute.
//!
//! Layers, bottom up: [`qint`] (Laurent polynomials), [`combinatorics`]
//! (multipartitions and nodes), [`abacus`] (wedge monomials), [`wedge`]
//! (straightening and the bar involution), [`fock`] (Chevalley action),
//! [`crystal`] (good nodes and labelings), [`avalue`] (a-values),
//! [`canonical`] (canonical basis and decomposition matrices).

pub mod abacus;
pub mod avalue;
pub mod canonical;
pub mod cli;
pub mod combinatorics;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod qint;
pub mod wedge;

pub use abacus::{from_pair, to_pair, WedgeMonomial};
pub use combinatorics::{Charge, MultiComposition, MultiPartition, Node, Partition};
pub use error::{Error, Result};
pub use qint::LaurentPoly;
pub use wedge::{BarEngine, Straightener, WedgeVector};
