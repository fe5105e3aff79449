//! Lower bounds on the decoding-error probability of two-user multiple
//! access channels, classical and classical-quantum.
//!
//! The crate evaluates, at desk scale, the family of converse bounds built
//! from threshold events and positive-part sums: the Han bound, the
//! Yagi-Oohama bound and its specializations, the fundamental positive-part
//! inequality they all derive from, and the quantum analogues stated in
//! terms of Hermitian spectral projectors. Every bound comes with an
//! independent brute-force oracle (MAP decoding, exhaustive enumeration,
//! direct eigensums) so the inequalities can be validated instance by
//! instance rather than trusted.
//!
//! The crate is `no_std`-compatible (`alloc` required); all IO, file
//! formats and the command-line front end live in the companion
//! `macbounds-cli` crate.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod decoders;
pub mod error;
pub mod herm;
pub mod model;
pub mod quantum;
pub mod sampling;
pub mod spectrum;
pub mod tol;

pub use error::{Error, Result};
