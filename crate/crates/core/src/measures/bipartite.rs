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

use crate::error::{ensure_arg, Result};
use crate::tensor::{coefficient_matrix, DensityMatrix, Partition, StateVector};

/// `tr(rho^2)`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix().iter().map(|z| z.norm_sqr()).sum()
}

/// `beta (1 - R)` with `beta = mu / (mu - 1)`, so the result lies in `[0, 1]`.
///
/// `mu` is normally the dimension of `rho`. A larger `rho` is accepted when
/// its rank is at most `mu`, which is the case for the bigger reduction of a
/// pure state whose smaller side has dimension `mu`.
pub fn linear_entropy(rho: &DensityMatrix, mu: usize) -> Result<f64> {
    ensure_arg!(mu >= 2, "linear entropy needs a subsystem dimension of at least 2, got {mu}");
    ensure_arg!(mu <= rho.dim(), "mu={mu} exceeds the density matrix dimension {}", rho.dim());
    Ok(linear_entropy_from_purity(purity(rho), mu))
}

pub(crate) fn linear_entropy_from_purity(r: f64, mu: usize) -> f64 {
    let beta = mu as f64 / (mu as f64 - 1.0);
    (beta * (1.0 - r)).clamp(0.0, 1.0)
}

/// `-sum p ln p` over the eigenvalues of `rho` (natural log, `0 ln 0 = 0`).
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let s: f64 = rho
        .eigenvalues()?
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum();
    Ok(s.max(0.0))
}

/// Purity of one side of a bipartite pure state, reused across many states.
///
/// The reduced state is formed on whichever side is smaller, as the
/// Gram matrix of the coefficient matrix; both sides share the same
/// nonzero spectrum.
#[derive(Clone, Debug)]
pub struct BipartitePurity {
    partition: Partition,
    /// Register index of each coefficient-matrix entry in row-major order,
    /// or `None` when the layouts coincide (kept side = leading qubits).
    gather: Option<Vec<usize>>,
    rows: usize,
    cols: usize,
}

impl BipartitePurity {
    pub fn new(partition: &Partition) -> Self {
        let small = partition.smaller_side();
        let (rows, cols) = (small.kept_dim(), small.traced_dim());
        let mut gather = vec![0; rows * cols];
        for (index, (a, b)) in small.split_table().into_iter().enumerate() {
            gather[a * cols + b] = index;
        }
        let identity = gather.iter().enumerate().all(|(i, &g)| i == g);
        Self { partition: partition.clone(), gather: (!identity).then_some(gather), rows, cols }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Dimension of the smaller side.
    pub fn mu(&self) -> usize {
        self.rows
    }

    pub fn purity(&self, psi: &StateVector) -> Result<f64> {
        ensure_arg!(
            psi.num_qubits() == self.partition.num_qubits(),
            "partition is for {} qubits but the state has {}",
            self.partition.num_qubits(),
            psi.num_qubits()
        );
        let gathered: Vec<Complex64>;
        let m: &[Complex64] = match &self.gather {
            None => psi.amplitudes(),
            Some(g) => {
                let amps = psi.amplitudes();
                gathered = g.iter().map(|&i| amps[i]).collect();
                &gathered
            }
        };
        // tr(G^2) for the Hermitian Gram matrix G = M M^dagger, from its
        // upper triangle.
        let row = |a: usize| &m[a * self.cols..(a + 1) * self.cols];
        let mut diag = 0.0;
        let mut off = 0.0;
        for a in 0..self.rows {
            let ra = row(a);
            let gaa: f64 = ra.iter().map(|z| z.norm_sqr()).sum();
            diag += gaa * gaa;
            for b in a + 1..self.rows {
                let g: Complex64 = ra.iter().zip(row(b)).map(|(x, y)| x * y.conj()).sum();
                off += g.norm_sqr();
            }
        }
        Ok(diag + 2.0 * off)
    }

    /// Linear entropy with `mu` the smaller dimension.
    pub fn linear_entropy(&self, psi: &StateVector) -> Result<f64> {
        Ok(linear_entropy_from_purity(self.purity(psi)?, self.rows))
    }
}

/// Purity of the reduction of `psi` to the kept side of `part`.
pub fn subsystem_purity(psi: &StateVector, part: &Partition) -> Result<f64> {
    BipartitePurity::new(part).purity(psi)
}

/// Reduced density matrix of the smaller side of `part`.
pub(crate) fn smaller_reduction(psi: &StateVector, part: &Partition) -> DensityMatrix {
    let m = coefficient_matrix(psi, &part.smaller_side());
    let rho = &m * m.adjoint();
    let d = rho.nrows();
    DensityMatrix::from_matrix_unchecked(DMatrix::from_fn(d, d, |i, j| (rho[(i, j)] + rho[(j, i)].conj()) * 0.5))
}
