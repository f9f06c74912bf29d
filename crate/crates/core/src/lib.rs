//! Relational Poly-Klumpenhouwer networks.
//!
//! The crate is layered bottom-up: [`relcore`] (finite relations),
//! [`chords`] (the triad universe and parsimony relations), [`monoid`]
//! (relation monoids), [`context`] (preset supports), [`pknet`] (networks
//! and homographies), [`groth`] (the category of elements of a context) and
//! [`cli`] (file formats and command implementations).

pub mod chords;
pub mod cli;
pub mod context;
mod dot;
pub mod error;
pub mod gallery;
pub mod groth;
pub mod monoid;
pub mod pknet;
pub mod relcore;
pub mod report;

pub use error::{Error, Result};
