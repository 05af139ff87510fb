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

use num_complex::Complex64;

use crate::error::{ensure_arg, Result};

/// Largest register the library will allocate a state for.
pub const MAX_QUBITS: usize = 26;

const NORM_TOL: f64 = 1e-12;

/// Pure state of an `N`-qubit register.
///
/// Amplitudes are stored in big-endian qubit order: amplitude index
/// `j = sum_l x_l 2^(N-l)`, so qubit 1 is the most significant bit of the
/// index and qubit `N` the least significant.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps a vector of `2^N` amplitudes whose norm is already 1 (within 1e-12).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amps.len())?;
        let norm = norm_sqr(&amps).sqrt();
        ensure_arg!(
            (norm - 1.0).abs() <= NORM_TOL,
            "state norm {norm} differs from 1 by more than {NORM_TOL:e}"
        );
        Ok(Self { num_qubits, amps })
    }

    /// Scales `amps` to unit norm.
    pub fn normalized(mut amps: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amps.len())?;
        let norm = norm_sqr(&amps).sqrt();
        ensure_arg!(norm > 0.0 && norm.is_finite(), "cannot normalize a vector of norm {norm}");
        let inv = 1.0 / norm;
        amps.iter_mut().for_each(|a| *a *= inv);
        Ok(Self { num_qubits, amps })
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        ensure_arg!(
            (1..=MAX_QUBITS).contains(&num_qubits),
            "register size {num_qubits} outside 1..={MAX_QUBITS}"
        );
        let dim = 1usize << num_qubits;
        ensure_arg!(index < dim, "basis index {index} out of range for {num_qubits} qubits");
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    /// Basis state from a bit string such as `"00100111"`; the first
    /// character is qubit 1.
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        ensure_arg!(!bits.is_empty(), "empty bit string");
        let mut index = 0usize;
        for ch in bits.chars() {
            let bit = match ch {
                '0' => 0,
                '1' => 1,
                other => return Err(crate::error::arg_err!("invalid bit {other:?} in {bits:?}")),
            };
            index = (index << 1) | bit;
        }
        Self::basis(bits.len(), index)
    }

    /// Tensor product `|f_1> ⊗ |f_2> ⊗ ... ⊗ |f_N>` of single-qubit states,
    /// each given as `[amp0, amp1]` and normalized independently.
    pub fn product(factors: &[[Complex64; 2]]) -> Result<Self> {
        ensure_arg!(
            (1..=MAX_QUBITS).contains(&factors.len()),
            "register size {} outside 1..={MAX_QUBITS}",
            factors.len()
        );
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for f in factors {
            let n = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
            ensure_arg!(n > 0.0, "zero single-qubit factor");
            let (a, b) = (f[0] / n, f[1] / n);
            amps = amps.iter().flat_map(|&x| [x * a, x * b]).collect();
        }
        Ok(Self { num_qubits: factors.len(), amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    /// Mutable access for unitary in-place updates. Callers must keep the
    /// norm at 1.
    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        norm_sqr(&self.amps).sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|self> ⊗ |other>`, with `self` occupying the leading qubits.
    pub fn kron(&self, other: &StateVector) -> Result<StateVector> {
        let n = self.num_qubits + other.num_qubits;
        ensure_arg!(n <= MAX_QUBITS, "register size {n} exceeds {MAX_QUBITS}");
        let amps = self
            .amps
            .iter()
            .flat_map(|&a| other.amps.iter().map(move |&b| a * b))
            .collect();
        Ok(Self { num_qubits: n, amps })
    }

    /// `max_j |self_j - other_j|`, or infinity if the registers differ.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        if self.amps.len() != other.amps.len() {
            return f64::INFINITY;
        }
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    ensure_arg!(len.is_power_of_two() && len >= 2, "state length {len} is not 2^N with N >= 1");
    let n = len.trailing_zeros() as usize;
    ensure_arg!(n <= MAX_QUBITS, "register size {n} exceeds {MAX_QUBITS}");
    Ok(n)
}

pub(crate) fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}
