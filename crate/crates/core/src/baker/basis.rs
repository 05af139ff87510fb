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

//! Partially Fourier-transformed basis states `|a_{N-n}…a_1 • x_1…x_n>`.

use std::collections::HashSet;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;

use super::map::{partial_fourier, BakerMap, BakerMapConfig};
use crate::error::{ensure_arg, Error, Result};
use crate::tensor::StateVector;

/// Largest register [`verify_basis_mapping`] will sweep exhaustively.
pub const MAX_BASIS_SWEEP_QUBITS: usize = 8;

/// Label of a partially transformed basis state: `n` position bits
/// `x_1..x_n` and `N-n` momentum bits `a_1..a_{N-n}`.
///
/// The state is `G_n |x_1…x_n a_1…a_{N-n}>`; it is localized at the
/// phase-space point `1 a_{N-n}…a_1 • x_1…x_n 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialBasisLabel {
    momentum: Vec<u8>,
    position: Vec<u8>,
}

impl PartialBasisLabel {
    /// `momentum` lists `a_1, a_2, …`; `position` lists `x_1, x_2, …`.
    pub fn new(momentum: Vec<u8>, position: Vec<u8>) -> Result<Self> {
        let total = momentum.len() + position.len();
        ensure_arg!(total >= 1, "label has no bits");
        ensure_arg!(total <= crate::tensor::MAX_QUBITS, "label of {total} bits is too long");
        ensure_arg!(
            momentum.iter().chain(&position).all(|&b| b <= 1),
            "label bits must be 0 or 1"
        );
        Ok(Self { momentum, position })
    }

    /// The label whose register bits are `index` (qubit 1 first), split
    /// into `n` position bits followed by `N-n` momentum bits.
    pub fn from_index(num_qubits: usize, n: usize, index: usize) -> Result<Self> {
        ensure_arg!(n <= num_qubits, "position bits n={n} exceed register size {num_qubits}");
        let bit = |q: usize| ((index >> (num_qubits - 1 - q)) & 1) as u8;
        let position = (0..n).map(bit).collect();
        let momentum = (n..num_qubits).map(bit).collect();
        Self::new(momentum, position)
    }

    pub fn num_qubits(&self) -> usize {
        self.momentum.len() + self.position.len()
    }

    pub fn position_count(&self) -> usize {
        self.position.len()
    }

    pub fn momentum_bits(&self) -> &[u8] {
        &self.momentum
    }

    pub fn position_bits(&self) -> &[u8] {
        &self.position
    }

    /// Index of `|x_1…x_n a_1…a_{N-n}>` in the register.
    pub fn register_index(&self) -> usize {
        self.position
            .iter()
            .chain(&self.momentum)
            .fold(0, |acc, &b| (acc << 1) | b as usize)
    }

    /// The label the baker's map sends this one to: the dot moves one place
    /// right, so `x_1` becomes the new least significant momentum bit.
    pub fn after_step(&self) -> Option<PartialBasisLabel> {
        let (&x1, rest) = self.position.split_first()?;
        let mut momentum = Vec::with_capacity(self.momentum.len() + 1);
        momentum.push(x1);
        momentum.extend_from_slice(&self.momentum);
        Some(Self { momentum, position: rest.to_vec() })
    }
}

impl fmt::Display for PartialBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.momentum.iter().rev() {
            write!(f, "{b}")?;
        }
        write!(f, "•")?;
        for b in &self.position {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Builds the labeled state from its definition `G_n |x a>`.
pub fn make_partial_basis_state(label: &PartialBasisLabel) -> Result<StateVector> {
    let total = label.num_qubits();
    let psi = StateVector::basis(total, label.register_index())?;
    partial_fourier(label.position_count(), &psi, false)
}

/// Binary fraction `0.b_1 b_2 … b_k 1`.
fn binary_fraction_with_one(bits: &[u8]) -> f64 {
    let mut value = 0.0;
    let mut weight = 0.5;
    for &b in bits {
        value += weight * b as f64;
        weight *= 0.5;
    }
    value + weight
}

/// Builds the labeled state from its explicit product form
///
/// ```text
/// e^{πi (0.a_1…a_{N-n}1)} ⊗_{k≤n} |x_k> ⊗_{k>n} (|0> + e^{2πi (0.a_{N-k+1}…a_{N-n}1)} |1>)/√2
/// ```
///
/// This is the controlled-phase picture of the map; it is independent of
/// the Fourier-transform path in [`make_partial_basis_state`].
pub fn partial_basis_state_product_form(label: &PartialBasisLabel) -> Result<StateVector> {
    let a = &label.momentum;
    let m = a.len();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut factors: Vec<[Complex64; 2]> =
        label.position.iter().map(|&x| if x == 0 { [one, zero] } else { [zero, one] }).collect();
    for l in 1..=m {
        let theta = 2.0 * PI * binary_fraction_with_one(&a[m - l..]);
        factors.push([
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::from_polar(FRAC_1_SQRT_2, theta),
        ]);
    }
    let global = Complex64::from_polar(1.0, PI * binary_fraction_with_one(a));
    let product = StateVector::product(&factors)?;
    let amps = product.into_amplitudes().into_iter().map(|z| z * global).collect();
    StateVector::from_amplitudes(amps)
}

/// Outcome of [`verify_basis_mapping`].
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMappingReport {
    pub num_qubits: usize,
    pub position_bits: usize,
    /// Number of labels checked (`2^N`).
    pub checked: usize,
    /// Largest amplitude deviation between `B|in>` and `|out>`.
    pub max_deviation: f64,
    /// Every output label was distinct.
    pub one_to_one: bool,
    /// `one_to_one` and every deviation within 1e-11.
    pub passed: bool,
}

/// Checks that `B_{N,n}` maps every state `|a • x_1 x_2…x_n>` to
/// `|a x_1 • x_2…x_n>`, with both sides built from the product form.
pub fn verify_basis_mapping(cfg: &BakerMapConfig) -> Result<BasisMappingReport> {
    let total = cfg.num_qubits();
    if total > MAX_BASIS_SWEEP_QUBITS {
        return Err(Error::Capacity(format!(
            "exhaustive basis check is limited to {MAX_BASIS_SWEEP_QUBITS} qubits, got {total}"
        )));
    }
    let n = cfg.position_bits();
    let map = BakerMap::new(*cfg)?;
    let mut seen = HashSet::new();
    let mut max_deviation = 0.0f64;
    let dim = 1usize << total;
    for index in 0..dim {
        let label = PartialBasisLabel::from_index(total, n, index)?;
        let image = label.after_step().expect("n >= 1 guarantees a position bit");
        let input = partial_basis_state_product_form(&label)?;
        let expected = partial_basis_state_product_form(&image)?;
        let got = map.apply(&input)?;
        max_deviation = max_deviation.max(got.max_abs_diff(&expected));
        seen.insert(image);
    }
    let one_to_one = seen.len() == dim;
    Ok(BasisMappingReport {
        num_qubits: total,
        position_bits: n,
        checked: dim,
        max_deviation,
        one_to_one,
        passed: one_to_one && max_deviation <= 1e-11,
    })
}
