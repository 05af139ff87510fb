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

use crate::error::{ensure_arg, Error, Result};
use crate::tensor::{centered_dft_matrix, CenteredDft, StateVector};

/// Largest register for which dense matrices are built.
pub const MAX_DENSE_QUBITS: usize = 12;

/// How a baker's map is applied to a state.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Inverse centered DFT, bit rotation, centered DFT; `O(2^N (N-n))`.
    #[default]
    MatrixFree,
    /// Multiplication by the dense `2^N × 2^N` unitary.
    Dense,
}

/// Selects the map `B_{N,n}` on `N` qubits with `n` position bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BakerMapConfig {
    num_qubits: usize,
    position_bits: usize,
    strategy: Strategy,
}

impl BakerMapConfig {
    pub fn new(num_qubits: usize, position_bits: usize, strategy: Strategy) -> Result<Self> {
        ensure_arg!(num_qubits >= 1, "a baker's map needs at least one qubit");
        ensure_arg!(
            (1..=num_qubits).contains(&position_bits),
            "position bits n={position_bits} outside 1..={num_qubits}"
        );
        ensure_arg!(num_qubits <= crate::tensor::MAX_QUBITS, "register of {num_qubits} qubits is too large");
        if strategy == Strategy::Dense && num_qubits > MAX_DENSE_QUBITS {
            return Err(Error::Capacity(format!(
                "dense strategy supports at most {MAX_DENSE_QUBITS} qubits, got {num_qubits}"
            )));
        }
        Ok(Self { num_qubits, position_bits, strategy })
    }

    /// Matrix-free configuration, the usual choice.
    pub fn matrix_free(num_qubits: usize, position_bits: usize) -> Result<Self> {
        Self::new(num_qubits, position_bits, Strategy::MatrixFree)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn position_bits(&self) -> usize {
        self.position_bits
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn with_strategy(self, strategy: Strategy) -> Result<Self> {
        Self::new(self.num_qubits, self.position_bits, strategy)
    }
}

fn check_register(psi: &StateVector, num_qubits: usize) -> Result<()> {
    ensure_arg!(
        psi.num_qubits() == num_qubits,
        "state has {} qubits but the map acts on {num_qubits}",
        psi.num_qubits()
    );
    Ok(())
}

/// Applies the partial Fourier transform `G_n = 1_{2^n} ⊗ F_{2^{N-n}}` (or
/// its inverse): identity on qubits `1..=n`, centered DFT on the rest.
///
/// `G_0` is the full centered DFT and `G_N = i·1`.
pub fn partial_fourier(n: usize, psi: &StateVector, inverse: bool) -> Result<StateVector> {
    let total = psi.num_qubits();
    ensure_arg!(n <= total, "partial Fourier index n={n} exceeds register size {total}");
    let plan = CenteredDft::new(1 << (total - n), inverse)?;
    let mut out = psi.clone();
    plan.process_blocks(out.amplitudes_mut(), &mut Vec::new());
    Ok(out)
}

/// Rotates the leading `n` bits of `index` (within an `N`-bit register)
/// left by one: `x_1 x_2 ... x_n` becomes `x_2 ... x_n x_1`.
#[inline]
pub(crate) fn rotate_prefix(index: usize, n: usize, suffix_bits: usize) -> usize {
    let mask = (1usize << n) - 1;
    let hi = index >> suffix_bits;
    let lo = index & ((1usize << suffix_bits) - 1);
    let rotated = ((hi << 1) | (hi >> (n - 1))) & mask;
    (rotated << suffix_bits) | lo
}

/// Applies the shift `S_n`, the cyclic left shift of qubits `1..=n`.
/// The result is an exact permutation of amplitudes.
pub fn shift(n: usize, psi: &StateVector) -> Result<StateVector> {
    let total = psi.num_qubits();
    ensure_arg!((1..=total).contains(&n), "shift length n={n} outside 1..={total}");
    let src = psi.amplitudes();
    let mut out = vec![Complex64::new(0.0, 0.0); src.len()];
    for (j, amp) in src.iter().enumerate() {
        out[rotate_prefix(j, n, total - n)] = *amp;
    }
    StateVector::from_amplitudes(out)
}

/// Reusable buffers for [`BakerMap::apply_in_place`].
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    tmp: Vec<Complex64>,
    scratch: Vec<Complex64>,
}

/// A planned baker's map `B_{N,n} = G_{n-1} ∘ S_n ∘ G_n^{-1}`.
///
/// Planning is done once; the map is then shared read-only across trials.
#[derive(Clone, Debug)]
pub struct BakerMap {
    cfg: BakerMapConfig,
    inverse_dft: CenteredDft,
    forward_dft: CenteredDft,
    dense: Option<DMatrix<Complex64>>,
}

impl BakerMap {
    pub fn new(cfg: BakerMapConfig) -> Result<Self> {
        let momentum_bits = cfg.num_qubits - cfg.position_bits;
        let inverse_dft = CenteredDft::new(1 << momentum_bits, true)?;
        let forward_dft = CenteredDft::new(1 << (momentum_bits + 1), false)?;
        let dense = match cfg.strategy {
            Strategy::Dense => Some(baker_matrix(&cfg)?),
            Strategy::MatrixFree => None,
        };
        Ok(Self { cfg, inverse_dft, forward_dft, dense })
    }

    pub fn config(&self) -> &BakerMapConfig {
        &self.cfg
    }

    /// Returns `B_{N,n} |psi>`.
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        let mut out = psi.clone();
        self.apply_in_place(&mut out, &mut Workspace::default())?;
        Ok(out)
    }

    /// Replaces `psi` by `B_{N,n} |psi>`.
    pub fn apply_in_place(&self, psi: &mut StateVector, ws: &mut Workspace) -> Result<()> {
        check_register(psi, self.cfg.num_qubits)?;
        let dim = psi.dim();
        if ws.tmp.len() != dim {
            ws.tmp.resize(dim, Complex64::new(0.0, 0.0));
        }
        let amps = psi.amplitudes_mut();
        if let Some(b) = &self.dense {
            for (i, out) in ws.tmp.iter_mut().enumerate() {
                *out = b.row(i).iter().zip(amps.iter()).map(|(x, y)| x * y).sum();
            }
            amps.copy_from_slice(&ws.tmp);
            return Ok(());
        }
        let n = self.cfg.position_bits;
        let suffix = self.cfg.num_qubits - n;
        // G_n^{-1}: inverse centered DFT on qubits n+1..N
        self.inverse_dft.process_blocks(amps, &mut ws.scratch);
        // S_n: exact permutation of the leading n qubits
        if n == 1 {
            ws.tmp.copy_from_slice(amps);
        } else {
            for (j, amp) in amps.iter().enumerate() {
                ws.tmp[rotate_prefix(j, n, suffix)] = *amp;
            }
        }
        // G_{n-1}: centered DFT on qubits n..N
        self.forward_dft.process_blocks(&mut ws.tmp, &mut ws.scratch);
        amps.copy_from_slice(&ws.tmp);
        Ok(())
    }
}

/// One application of `B_{N,n}` to `psi` using the configured strategy.
pub fn baker_step(cfg: &BakerMapConfig, psi: &StateVector) -> Result<StateVector> {
    check_register(psi, cfg.num_qubits)?;
    BakerMap::new(*cfg)?.apply(psi)
}

/// Dense unitary of `B_{N,n}`, built from the dense centered-DFT kernels.
///
/// Column `h·m + l'` of `S_n G_n^{-1}` (with `m = 2^{N-n}`) is the `l'`-th
/// column of `F_m^†` placed in row block `rot(h)`, and `G_{n-1}` then mixes
/// pairs of adjacent row blocks with `F_{2m}`.
pub fn baker_matrix(cfg: &BakerMapConfig) -> Result<DMatrix<Complex64>> {
    let total = cfg.num_qubits;
    if total > MAX_DENSE_QUBITS {
        return Err(Error::Capacity(format!(
            "dense matrices are limited to {MAX_DENSE_QUBITS} qubits, got {total}"
        )));
    }
    let n = cfg.position_bits;
    let m = 1usize << (total - n);
    let dim = 1usize << total;
    let inv_small = centered_dft_matrix(m, true);
    let big = centered_dft_matrix(2 * m, false);
    let zero = Complex64::new(0.0, 0.0);

    // product[r, l'] = sum_l F_{2m}[r, half*m + l] F_m^†[l, l'] for half in {0, 1}
    let halves: Vec<DMatrix<Complex64>> = (0..2)
        .map(|half| {
            DMatrix::from_fn(2 * m, m, |r, lp| {
                (0..m).map(|l| big[(r, half * m + l)] * inv_small[(l, lp)]).sum()
            })
        })
        .collect();

    let mut b = DMatrix::from_element(dim, dim, zero);
    for h in 0..(1usize << n) {
        let rot = rotate_prefix(h, n, 0);
        let block = rot >> 1;
        let half = &halves[rot & 1];
        for lp in 0..m {
            let col = h * m + lp;
            for r in 0..2 * m {
                b[(block * 2 * m + r, col)] = half[(r, lp)];
            }
        }
    }
    Ok(b)
}

/// Permutation matrix of `S_n` on `N` qubits.
pub fn shift_matrix(num_qubits: usize, n: usize) -> Result<DMatrix<Complex64>> {
    ensure_arg!((1..=num_qubits).contains(&n), "shift length n={n} outside 1..={num_qubits}");
    if num_qubits > MAX_DENSE_QUBITS {
        return Err(Error::Capacity(format!(
            "dense matrices are limited to {MAX_DENSE_QUBITS} qubits, got {num_qubits}"
        )));
    }
    let dim = 1usize << num_qubits;
    let mut s = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for j in 0..dim {
        s[(rotate_prefix(j, n, num_qubits - n), j)] = Complex64::new(1.0, 0.0);
    }
    Ok(s)
}
