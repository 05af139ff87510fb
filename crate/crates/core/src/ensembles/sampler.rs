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
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{ensure_arg, Result};
use crate::tensor::{StateVector, MAX_QUBITS};

/// Deterministic random source for one trial.
///
/// Every `(master_seed, stream_index)` pair selects an independent ChaCha8
/// stream, so trials can be sampled in any order or in parallel and still
/// reproduce bit-for-bit.
#[derive(Clone, Debug)]
pub struct SeededSampler {
    master_seed: u64,
    stream_index: u64,
    rng: ChaCha8Rng,
}

impl SeededSampler {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(stream_index);
        Self { master_seed, stream_index, rng }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Complex number with independent standard normal parts.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.rng.sample(StandardNormal), self.rng.sample(StandardNormal))
    }
}

/// `dim` Haar-distributed amplitudes: independent complex Gaussians,
/// normalized.
pub fn sample_haar_amplitudes(dim: usize, sampler: &mut SeededSampler) -> Result<Vec<Complex64>> {
    ensure_arg!(dim >= 1, "dimension must be at least 1");
    loop {
        let mut amps: Vec<Complex64> = (0..dim).map(|_| sampler.complex_gaussian()).collect();
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        // A zero vector has probability zero but would be fatal.
        if norm > 0.0 {
            amps.iter_mut().for_each(|z| *z /= norm);
            return Ok(amps);
        }
    }
}

/// Haar-random pure state on `num_qubits` qubits.
pub fn sample_haar_state(num_qubits: usize, sampler: &mut SeededSampler) -> Result<StateVector> {
    ensure_arg!(
        (1..=MAX_QUBITS).contains(&num_qubits),
        "number of qubits must be in 1..={MAX_QUBITS}, got {num_qubits}"
    );
    StateVector::from_amplitudes(sample_haar_amplitudes(1 << num_qubits, sampler)?)
}

/// Tensor product of `num_qubits` independent single-qubit Haar states.
pub fn sample_product_state(num_qubits: usize, sampler: &mut SeededSampler) -> Result<StateVector> {
    ensure_arg!(
        (1..=MAX_QUBITS).contains(&num_qubits),
        "number of qubits must be in 1..={MAX_QUBITS}, got {num_qubits}"
    );
    let factors = (0..num_qubits)
        .map(|_| {
            let a = sample_haar_amplitudes(2, sampler)?;
            Ok([a[0], a[1]])
        })
        .collect::<Result<Vec<_>>>()?;
    StateVector::product(&factors)
}
