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

//! Centered (anti-periodic) discrete Fourier transform.
//!
//! The kernel is
//!
//! ```text
//! F[j,k] = exp(2πi (j+1/2)(k+1/2) / M) / sqrt(M)
//! ```
//!
//! which factors as `e^{iπ/(2M)} · e^{iπj/M} · e^{2πijk/M} · e^{iπk/M}`, so
//! the fast path is a phase ramp, an ordinary FFT, and a second phase ramp.
//! [`centered_dft_matrix`] builds the dense kernel entry by entry and serves
//! as the reference the fast path is checked against.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::state::StateVector;
use crate::error::{ensure_arg, Result};

/// A planned centered DFT of one power-of-two length, reusable across calls
/// and threads.
#[derive(Clone)]
pub struct CenteredDft {
    len: usize,
    inverse: bool,
    fft: Arc<dyn Fft<f64>>,
    pre: Vec<Complex64>,
    post: Vec<Complex64>,
}

impl fmt::Debug for CenteredDft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CenteredDft").field("len", &self.len).field("inverse", &self.inverse).finish()
    }
}

impl CenteredDft {
    /// Plans the transform of length `len` (a power of two); `inverse`
    /// selects the conjugate-transpose kernel.
    pub fn new(len: usize, inverse: bool) -> Result<Self> {
        ensure_arg!(len.is_power_of_two(), "centered DFT length {len} is not a power of two");
        let mut planner = FftPlanner::new();
        // rustfft's "inverse" direction carries the e^{+2πijk/M} sign.
        let fft = if inverse { planner.plan_fft_forward(len) } else { planner.plan_fft_inverse(len) };
        let sign = if inverse { -1.0 } else { 1.0 };
        let m = len as f64;
        let pre = (0..len).map(|k| Complex64::from_polar(1.0, sign * PI * k as f64 / m)).collect();
        let scale = 1.0 / m.sqrt();
        let post = (0..len)
            .map(|j| Complex64::from_polar(scale, sign * PI * (j as f64 + 0.5) / m))
            .collect();
        Ok(Self { len, inverse, fft, pre, post })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    /// Scratch length needed by [`CenteredDft::process_blocks`].
    pub fn scratch_len(&self) -> usize {
        self.fft.get_inplace_scratch_len()
    }

    /// Transforms every consecutive block of `len` amplitudes in `data`
    /// in place.
    pub fn process_blocks(&self, data: &mut [Complex64], scratch: &mut Vec<Complex64>) {
        debug_assert_eq!(data.len() % self.len, 0);
        if scratch.len() < self.scratch_len() {
            scratch.resize(self.scratch_len(), Complex64::new(0.0, 0.0));
        }
        for block in data.chunks_exact_mut(self.len) {
            block.iter_mut().zip(&self.pre).for_each(|(x, p)| *x *= p);
        }
        if self.len > 1 {
            self.fft.process_with_scratch(data, &mut scratch[..self.scratch_len()]);
        }
        for block in data.chunks_exact_mut(self.len) {
            block.iter_mut().zip(&self.post).for_each(|(x, p)| *x *= p);
        }
    }
}

/// Centered DFT of `v` (length `m`, a power of two), or its inverse.
pub fn centered_dft(m: usize, v: &[Complex64], inverse: bool) -> Result<Vec<Complex64>> {
    ensure_arg!(m >= 1, "transform length must be at least 1");
    ensure_arg!(v.len() == m, "input has length {} but the transform length is {m}", v.len());
    let plan = CenteredDft::new(m, inverse)?;
    let mut out = v.to_vec();
    plan.process_blocks(&mut out, &mut Vec::new());
    Ok(out)
}

/// Dense `m × m` centered DFT kernel (or its conjugate transpose), evaluated
/// entry by entry with the phase reduced exactly in integers.
pub fn centered_dft_matrix(m: usize, inverse: bool) -> DMatrix<Complex64> {
    let scale = 1.0 / (m as f64).sqrt();
    let period = 4 * m as u128;
    DMatrix::from_fn(m, m, |j, k| {
        // (j+1/2)(k+1/2)/m = (2j+1)(2k+1) / (4m)
        let t = ((2 * j as u128 + 1) * (2 * k as u128 + 1)) % period;
        let angle = 2.0 * PI * t as f64 / period as f64;
        Complex64::from_polar(scale, if inverse { -angle } else { angle })
    })
}

/// Transform applied by [`apply_on_suffix`] to a block of trailing qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuffixKernel {
    Identity,
    CenteredDft,
    InverseCenteredDft,
}

/// Applies `kernel` (of dimension `op_dim`) to qubits `start_qubit..=N`
/// of `psi`, i.e. `1 ⊗ kernel` with the identity on the leading qubits.
pub fn apply_on_suffix(
    op_dim: usize,
    kernel: SuffixKernel,
    psi: &StateVector,
    start_qubit: usize,
) -> Result<StateVector> {
    let n = psi.num_qubits();
    ensure_arg!(
        (1..=n).contains(&start_qubit),
        "start qubit {start_qubit} outside 1..={n}"
    );
    let expected = 1usize << (n - start_qubit + 1);
    ensure_arg!(
        op_dim == expected,
        "operator dimension {op_dim} does not match qubits {start_qubit}..={n} (expected {expected})"
    );
    let mut out = psi.clone();
    let inverse = match kernel {
        SuffixKernel::Identity => return Ok(out),
        SuffixKernel::CenteredDft => false,
        SuffixKernel::InverseCenteredDft => true,
    };
    let plan = CenteredDft::new(op_dim, inverse)?;
    plan.process_blocks(out.amplitudes_mut(), &mut Vec::new());
    Ok(out)
}
