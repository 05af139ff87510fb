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

use std::str::FromStr;

use num_complex::Complex64;

use super::bipartite::purity;
use crate::error::{arg_err, ensure_arg, Error, Result};
use crate::tensor::{partial_trace, Partition, StateVector};

/// How [`meyer_wallach_q`] is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QAlgorithm {
    /// `(4/N) sum_k D(psi_k^0, psi_k^1)`, with
    /// `D(u, v) = |u|^2 |v|^2 - |<u|v>|^2` for the two projections of
    /// `psi` onto qubit `k`.
    #[default]
    Wedge,
    /// `2 (1 - (1/N) sum_k tr rho_k^2)` from the single-qubit reductions.
    Purity,
}

impl FromStr for QAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wedge" => Ok(Self::Wedge),
            "purity" => Ok(Self::Purity),
            _ => Err(arg_err!("unknown Q algorithm {s:?} (expected wedge or purity)")),
        }
    }
}

/// Meyer–Wallach global entanglement `Q(psi)` in `[0, 1]`.
pub fn meyer_wallach_q(psi: &StateVector, algorithm: QAlgorithm) -> f64 {
    let n = psi.num_qubits();
    let q = match algorithm {
        QAlgorithm::Wedge => {
            let amps = psi.amplitudes();
            let total: f64 = (0..n)
                .map(|k| {
                    let mask = 1usize << (n - 1 - k);
                    let (mut n0, mut n1, mut overlap) = (0.0, 0.0, Complex64::new(0.0, 0.0));
                    for (i, a0) in amps.iter().enumerate().filter(|(i, _)| i & mask == 0) {
                        let a1 = amps[i | mask];
                        n0 += a0.norm_sqr();
                        n1 += a1.norm_sqr();
                        overlap += a0.conj() * a1;
                    }
                    n0 * n1 - overlap.norm_sqr()
                })
                .sum();
            4.0 * total / n as f64
        }
        QAlgorithm::Purity => {
            if n < 2 {
                return 0.0;
            }
            let mean: f64 = (1..=n)
                .map(|k| {
                    let part = Partition::new(n, vec![k]).expect("single qubit of a register with N >= 2");
                    purity(&partial_trace(psi, &part).expect("partition matches the state"))
                })
                .sum::<f64>()
                / n as f64;
            2.0 * (1.0 - mean)
        }
    };
    q.clamp(0.0, 1.0)
}

/// The `N`-tangle `|<psi| sigma_y^{⊗N} |psi*>|^2` for even `N`, evaluated
/// as `|sum_x (-1)^{|x|} psi_x psi_{~x}|^2` with `~x` the bitwise complement.
pub fn n_tangle(psi: &StateVector) -> Result<f64> {
    let n = psi.num_qubits();
    ensure_arg!(n % 2 == 0, "the N-tangle is defined for even N only, got N={n}");
    let amps = psi.amplitudes();
    let mask = amps.len() - 1;
    let sum: Complex64 = amps
        .iter()
        .enumerate()
        .map(|(x, a)| {
            let term = a * amps[x ^ mask];
            if x.count_ones() % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    Ok(sum.norm_sqr().min(1.0))
}
