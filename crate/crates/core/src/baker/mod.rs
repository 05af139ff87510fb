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

//! Quantum baker's maps `B_{N,n}` on `N` qubits.

mod basis;
mod export;
mod map;
mod spectrum;

pub use basis::{
    make_partial_basis_state, partial_basis_state_product_form, verify_basis_mapping, BasisMappingReport,
    PartialBasisLabel, MAX_BASIS_SWEEP_QUBITS,
};
pub use export::write_matrix_csv;
pub use map::{
    baker_matrix, baker_step, partial_fourier, shift, shift_matrix, BakerMap, BakerMapConfig, Strategy, Workspace,
    MAX_DENSE_QUBITS,
};
pub use spectrum::{periodic_spectrum, PeriodicEigenpair, MAX_SPECTRUM_QUBITS};
