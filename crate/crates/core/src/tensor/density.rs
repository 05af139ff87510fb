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

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::eigen::{hermitian_eigenvalues, PSD_CLAMP};
use super::partition::Partition;
use super::state::StateVector;
use crate::error::{ensure_arg, Result};

const DENSITY_TOL: f64 = 1e-12;

/// Hermitian, positive-semidefinite, unit-trace operator on a subsystem.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace (within 1e-12) and
    /// eigenvalues `>= -1e-10`.
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        ensure_arg!(m.is_square() && m.nrows() >= 1, "density matrix must be square and nonempty");
        let d = m.nrows();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in i..d {
                worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        ensure_arg!(worst <= DENSITY_TOL, "density matrix is not Hermitian (deviation {worst:e})");
        let trace: Complex64 = (0..d).map(|i| m[(i, i)]).sum();
        ensure_arg!((trace - 1.0).norm() <= DENSITY_TOL, "density matrix trace {trace} is not 1");
        let lowest = hermitian_eigenvalues(&m)?[0];
        ensure_arg!(lowest >= -PSD_CLAMP, "density matrix has negative eigenvalue {lowest:e}");
        Ok(Self { m })
    }

    /// `|psi><psi|`.
    pub fn pure(psi: &StateVector) -> Self {
        let a = psi.amplitudes();
        let d = a.len();
        Self { m: DMatrix::from_fn(d, d, |i, j| a[i] * a[j].conj()) }
    }

    /// Maximally mixed state `I/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        let x = Complex64::new(1.0 / d as f64, 0.0);
        Self { m: DMatrix::from_diagonal_element(d, d, x) }
    }

    pub(crate) fn from_matrix_unchecked(m: DMatrix<Complex64>) -> Self {
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.m[(i, i)]).sum()
    }

    /// Eigenvalues, ascending, with rounding-level negatives clamped to 0.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eigenvalues(&self.m)?
            .into_iter()
            .map(super::eigen::clamp_psd)
            .collect())
    }
}

/// Reshapes `psi` into the `kept × traced` coefficient matrix `M` with
/// `psi = sum M[a,b] |a>_A |b>_B`.
pub(crate) fn coefficient_matrix(psi: &StateVector, part: &Partition) -> DMatrix<Complex64> {
    let mut m = DMatrix::zeros(part.kept_dim(), part.traced_dim());
    for (amp, (a, b)) in psi.amplitudes().iter().zip(part.split_table()) {
        m[(a, b)] = *amp;
    }
    m
}

/// Reduced density matrix on the kept qubits of `part`.
pub fn partial_trace(psi: &StateVector, part: &Partition) -> Result<DensityMatrix> {
    ensure_arg!(
        part.num_qubits() == psi.num_qubits(),
        "partition is for {} qubits but the state has {}",
        part.num_qubits(),
        psi.num_qubits()
    );
    let m = coefficient_matrix(psi, part);
    let rho = &m * m.adjoint();
    // Enforce exact Hermiticity against rounding in the product.
    let d = rho.nrows();
    let rho = DMatrix::from_fn(d, d, |i, j| (rho[(i, j)] + rho[(j, i)].conj()) * 0.5);
    Ok(DensityMatrix::from_matrix_unchecked(rho))
}
