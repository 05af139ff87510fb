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

//! Analytic eigenpairs of the non-entangling map `B_{N,N}`.
//!
//! `B_{N,N}` cycles the qubits left and applies
//! `U = e^{-iπ/4} e^{iσ_x π/4}` to the qubit that wraps around. On products
//! of the `U` eigenstates `|+>` (eigenvalue 1) and `|->` (eigenvalue `-i`)
//! it therefore acts as a phased cyclic shift, and each cycle class of
//! strings `α_1…α_N` with period `P` yields `P` eigenstates whose
//! eigenvalues are the `P`-th roots of `α_1⋯α_P`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{ensure_arg, Error, Result};
use crate::tensor::StateVector;

/// Largest register [`periodic_spectrum`] enumerates.
pub const MAX_SPECTRUM_QUBITS: usize = 10;

/// One eigenpair of `B_{N,N}`.
#[derive(Clone, Debug)]
pub struct PeriodicEigenpair {
    /// Eigenvalue `e^{iπ k / (2N)}`.
    pub eigenvalue: Complex64,
    /// Exponent `k` in `0..4N`.
    pub root_index: usize,
    pub eigenstate: StateVector,
    /// Period of the generating string under cycling.
    pub period: usize,
    /// Generating string; `true` marks the `-i` eigenstate of `U`.
    pub string: Vec<bool>,
}

impl PeriodicEigenpair {
    /// Generating string written with `+` for eigenvalue 1 and `-` for `-i`.
    pub fn string_label(&self) -> String {
        self.string.iter().map(|&m| if m { '-' } else { '+' }).collect()
    }
}

fn rotate_left(bits: usize, width: usize) -> usize {
    let mask = (1usize << width) - 1;
    ((bits << 1) | (bits >> (width - 1))) & mask
}

fn period_of(bits: usize, width: usize) -> usize {
    let mut r = rotate_left(bits, width);
    let mut p = 1;
    while r != bits {
        r = rotate_left(r, width);
        p += 1;
    }
    p
}

fn is_canonical(bits: usize, width: usize) -> bool {
    let mut r = bits;
    for _ in 0..width {
        r = rotate_left(r, width);
        if r < bits {
            return false;
        }
    }
    true
}

fn product_state(bits: usize, width: usize) -> Result<StateVector> {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let factors: Vec<[Complex64; 2]> = (0..width)
        .map(|q| if (bits >> (width - 1 - q)) & 1 == 1 { [s, -s] } else { [s, s] })
        .collect();
    StateVector::product(&factors)
}

fn root_of_unity(k: usize, order: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / order as f64)
}

/// All `2^N` eigenpairs of `B_{N,N}`, built from cycle classes of strings
/// over the two eigenstates of `U`.
pub fn periodic_spectrum(num_qubits: usize) -> Result<Vec<PeriodicEigenpair>> {
    ensure_arg!(num_qubits >= 1, "register must have at least one qubit");
    if num_qubits > MAX_SPECTRUM_QUBITS {
        return Err(Error::Capacity(format!(
            "spectrum enumeration is limited to {MAX_SPECTRUM_QUBITS} qubits, got {num_qubits}"
        )));
    }
    let width = num_qubits;
    let order = 4 * width;
    let mut pairs = Vec::with_capacity(1 << width);
    for bits in 0..1usize << width {
        if !is_canonical(bits, width) {
            continue;
        }
        let period = period_of(bits, width);
        let string: Vec<bool> = (0..width).map(|q| (bits >> (width - 1 - q)) & 1 == 1).collect();
        // α_1⋯α_P = (-i)^m; its P-th roots are e^{iπ(4r - m)/(2P)}, i.e.
        // k = (4r - m)·N/P in units of e^{iπ/(2N)}.
        let minus_count = string[..period].iter().filter(|&&m| m).count() as i64;
        let shifted: Vec<StateVector> = {
            let mut out = Vec::with_capacity(period);
            let mut r = bits;
            for _ in 0..period {
                out.push(product_state(r, width)?);
                r = rotate_left(r, width);
            }
            out
        };
        for r in 0..period as i64 {
            let k = ((4 * r - minus_count) * (width / period) as i64).rem_euclid(order as i64) as usize;
            let lambda = root_of_unity(k, order);
            let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
            let mut coeff = Complex64::new(1.0 / (period as f64).sqrt(), 0.0);
            for (step, state) in shifted.iter().enumerate() {
                for (a, b) in amps.iter_mut().zip(state.amplitudes()) {
                    *a += coeff * b;
                }
                // c_{k+1} = c_k · α_{k+1} / λ
                let alpha = if string[step] { Complex64::new(0.0, -1.0) } else { Complex64::new(1.0, 0.0) };
                coeff = coeff * alpha / lambda;
            }
            pairs.push(PeriodicEigenpair {
                eigenvalue: lambda,
                root_index: k,
                eigenstate: StateVector::normalized(amps)?,
                period,
                string: string.clone(),
            });
        }
    }
    Ok(pairs)
}
