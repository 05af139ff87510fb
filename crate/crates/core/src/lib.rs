// Copyright 2026 The qbaker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Quantum baker's maps on registers of qubits and the entanglement they
//! generate.
//!
//! - [`tensor`]: state vectors, partitions, reduced density matrices, the
//!   centered Fourier transform and a Hermitian eigensolver.
//! - [`baker`]: the maps `B_{N,n}`, their partially transformed basis states
//!   and the spectrum of the non-entangling member `B_{N,N}`.
//! - [`measures`]: purity, linear and von Neumann entropies, concurrence,
//!   entanglement of formation, Meyer–Wallach `Q` and the `N`-tangle.
//! - [`ensembles`]: Haar and product-state sampling, special states and the
//!   closed-form statistics of random states.
//! - [`harness`]: deterministic parallel experiments with CSV output.

pub mod baker;
pub mod ensembles;
pub mod error;
pub mod harness;
pub mod measures;
pub mod tensor;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Version string recorded in output headers.
pub const VERSION: &str = env!("QBAKER_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/registers.md")]
    mod registers {}
    #[doc = include_str!("../../../book/src/baker-maps.md")]
    mod baker_maps {}
    #[doc = include_str!("../../../book/src/measures.md")]
    mod measures {}
    #[doc = include_str!("../../../book/src/random-states.md")]
    mod random_states {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
