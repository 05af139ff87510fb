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

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{ensure_arg, Result};
use crate::tensor::{StateVector, MAX_QUBITS};

/// Named initial states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialState {
    /// Computational basis state from a bitstring, qubit 1 first.
    Basis(String),
    /// `2^{-N/4} sum_x |x x>` over `x` of `N/2` bits: the first half of the
    /// register maximally entangled with the second half.
    MaxEntangledHalf { num_qubits: usize },
    /// `(|0…0> + |1…1>) / sqrt 2`.
    Cat { num_qubits: usize },
}

pub fn make_special_state(kind: &SpecialState) -> Result<StateVector> {
    match kind {
        SpecialState::Basis(bits) => StateVector::from_bitstring(bits),
        &SpecialState::MaxEntangledHalf { num_qubits } => {
            ensure_arg!(
                num_qubits >= 2 && num_qubits % 2 == 0 && num_qubits <= MAX_QUBITS,
                "maximally entangled halves need an even register of at least 2 qubits, got {num_qubits}"
            );
            let half = num_qubits / 2;
            let weight = Complex64::new(1.0 / ((1usize << half) as f64).sqrt(), 0.0);
            let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
            for x in 0..1usize << half {
                amps[(x << half) | x] = weight;
            }
            StateVector::from_amplitudes(amps)
        }
        &SpecialState::Cat { num_qubits } => {
            ensure_arg!(
                (1..=MAX_QUBITS).contains(&num_qubits),
                "number of qubits must be in 1..={MAX_QUBITS}, got {num_qubits}"
            );
            let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
            amps[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
            amps[(1 << num_qubits) - 1] = Complex64::new(FRAC_1_SQRT_2, 0.0);
            StateVector::from_amplitudes(amps)
        }
    }
}
