//! Discrete-time Grover walks on two simple graphs joined by a single
//! weak bridge edge.
//!
//! The bridge carries weight `ε` while every other edge has weight one. For
//! small `ε` the walker started uniformly on the first graph pulses back and
//! forth between the two graphs with a period of order `ε^{-1/2}`.
//!
//! The crate is `no_std` (it needs `alloc`). It holds the pure parts:
//!
//! * [`graph`]: simple graphs, generators, and the bridged composition;
//! * [`walk`]: the matrix-free evolution `U(ε) = S(2d*d - I)`;
//! * [`dense`]: explicit matrices used to cross-check the engine;
//! * [`spectral`]: transition matrices, Jacobi eigensolver, perturbation
//!   splitting, and the lift from vertex to arc eigenvectors;
//! * [`asymptotics`]: closed-form envelopes and the transfer period.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod asymptotics;
pub mod dense;
mod error;
pub mod graph;
pub mod spectral;
pub mod walk;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use graph::{Arc, BridgedGraph, GraphKind, Region, SimpleGraph, WeightedDegrees};
pub use walk::{ProbabilitySeries, ProbabilityTriple, WalkState, Walker};
