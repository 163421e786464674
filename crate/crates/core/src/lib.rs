//! Jellyfish invariants of ordered set partitions: tableau enumeration,
//! exact polynomial arithmetic, Grassmann–Cayley evaluation, tensor diagrams,
//! Specht-module rank computations and the linear relations among them.

pub mod combinat;
pub mod diagrams;
pub mod error;
pub mod grassmann;
pub mod invariants;
pub mod polyring;
pub mod relations;
pub mod specht;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
