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

//! Complex linear-algebra kernels for qubit registers.

mod density;
mod eigen;
mod fourier;
mod partition;
mod state;

pub(crate) use density::coefficient_matrix;
pub use density::{partial_trace, DensityMatrix};
pub(crate) use eigen::clamp_psd;
pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, hermitian_psd_sqrt, HermitianEigen, MAX_EIGEN_DIM, PSD_CLAMP,
};
pub use fourier::{apply_on_suffix, centered_dft, centered_dft_matrix, CenteredDft, SuffixKernel};
pub use partition::Partition;
pub use state::{StateVector, MAX_QUBITS};
