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

//! Entanglement functionals of pure states and their reductions.
//!
//! Von Neumann entropy uses the natural log; entanglement of formation is
//! reported in bits.

mod bipartite;
mod multipartite;
mod pairwise;

use std::fmt;
use std::str::FromStr;

pub use bipartite::{linear_entropy, purity, subsystem_purity, von_neumann_entropy, BipartitePurity};
pub use multipartite::{meyer_wallach_q, n_tangle, QAlgorithm};
pub use pairwise::{
    binary_entropy, concurrence, concurrence_c, entanglement_of_formation, pair_density,
};

use crate::error::{arg_err, ensure_arg, Error, Result};
use crate::tensor::{Partition, StateVector};

/// Identifier of a measure, with the short names used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MeasureId {
    Purity,
    LinearEntropy,
    VonNeumann,
    ConcurrenceC,
    Concurrence,
    Eof,
    MwQ,
    Tangle,
}

impl MeasureId {
    pub const ALL: [MeasureId; 8] = [
        Self::Purity,
        Self::LinearEntropy,
        Self::VonNeumann,
        Self::ConcurrenceC,
        Self::Concurrence,
        Self::Eof,
        Self::MwQ,
        Self::Tangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Purity => "purity",
            Self::LinearEntropy => "slin",
            Self::VonNeumann => "svn",
            Self::ConcurrenceC => "c",
            Self::Concurrence => "concurrence",
            Self::Eof => "eof",
            Self::MwQ => "q",
            Self::Tangle => "tau",
        }
    }

    /// Closed interval the measure is guaranteed to lie in. The von Neumann
    /// upper end is `ln mu` and depends on the partition, so it is reported
    /// as infinite here.
    pub fn range(self) -> (f64, f64) {
        match self {
            Self::ConcurrenceC => (-0.5, 1.0),
            Self::VonNeumann => (0.0, f64::INFINITY),
            _ => (0.0, 1.0),
        }
    }

    fn uses_partition(self) -> bool {
        matches!(self, Self::Purity | Self::LinearEntropy | Self::VonNeumann)
    }

    fn uses_pair(self) -> bool {
        matches!(self, Self::ConcurrenceC | Self::Concurrence | Self::Eof)
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .or(match s {
                "linear_entropy" => Some(Self::LinearEntropy),
                "von_neumann" => Some(Self::VonNeumann),
                "concurrence_c" => Some(Self::ConcurrenceC),
                "mw_q" => Some(Self::MwQ),
                "tangle" => Some(Self::Tangle),
                _ => None,
            })
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|m| m.name()).collect();
                arg_err!("unknown measure {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// A measure bound to the subsystem it reads on an `N`-qubit register.
#[derive(Clone, Debug)]
pub struct Measure {
    id: MeasureId,
    num_qubits: usize,
    partition: Option<Partition>,
    pair: Option<(usize, usize)>,
    kernel: Option<BipartitePurity>,
}

impl Measure {
    /// Binds `id` to an `N`-qubit register. Partition measures default to
    /// qubits `1..N/2`; pair measures default to the pair `(1, N)`.
    pub fn new(
        id: MeasureId,
        num_qubits: usize,
        partition: Option<Partition>,
        pair: Option<(usize, usize)>,
    ) -> Result<Self> {
        ensure_arg!(num_qubits >= 1, "register must have at least one qubit");
        let mut m = Self { id, num_qubits, partition: None, pair: None, kernel: None };
        if id.uses_partition() {
            let part = match partition {
                Some(p) => p,
                None => Partition::range(num_qubits, 1, (num_qubits / 2).max(1))?,
            };
            ensure_arg!(
                part.num_qubits() == num_qubits,
                "partition is for {} qubits, register has {num_qubits}",
                part.num_qubits()
            );
            m.kernel = Some(BipartitePurity::new(&part));
            m.partition = Some(part);
        }
        if id.uses_pair() {
            let (i, j) = pair.unwrap_or((1, num_qubits));
            ensure_arg!(
                i != j && (1..=num_qubits).contains(&i) && (1..=num_qubits).contains(&j),
                "invalid qubit pair ({i}, {j}) for {num_qubits} qubits"
            );
            m.pair = Some((i, j));
        }
        if id == MeasureId::Tangle {
            ensure_arg!(num_qubits % 2 == 0, "the N-tangle needs an even register, got N={num_qubits}");
        }
        Ok(m)
    }

    pub fn id(&self) -> MeasureId {
        self.id
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn pair(&self) -> Option<(usize, usize)> {
        self.pair
    }

    /// Short description of the subsystem, e.g. `1-4` or `1,8`.
    pub fn target_label(&self) -> String {
        match (&self.partition, self.pair) {
            (Some(p), _) => p.to_string(),
            (None, Some((i, j))) => format!("{i},{j}"),
            _ => "all".to_string(),
        }
    }

    pub fn evaluate(&self, psi: &StateVector) -> Result<f64> {
        ensure_arg!(
            psi.num_qubits() == self.num_qubits,
            "measure is bound to {} qubits but the state has {}",
            self.num_qubits,
            psi.num_qubits()
        );
        match self.id {
            MeasureId::Purity => self.kernel.as_ref().unwrap().purity(psi),
            MeasureId::LinearEntropy => self.kernel.as_ref().unwrap().linear_entropy(psi),
            MeasureId::VonNeumann => {
                von_neumann_entropy(&bipartite::smaller_reduction(psi, self.partition.as_ref().unwrap()))
            }
            MeasureId::ConcurrenceC => concurrence_c(&pair_density(psi, self.pair.unwrap())?),
            MeasureId::Concurrence => concurrence(&pair_density(psi, self.pair.unwrap())?),
            MeasureId::Eof => entanglement_of_formation(&pair_density(psi, self.pair.unwrap())?),
            MeasureId::MwQ => Ok(meyer_wallach_q(psi, QAlgorithm::Wedge)),
            MeasureId::Tangle => n_tangle(psi),
        }
    }

    pub fn result(&self, psi: &StateVector) -> Result<MeasureResult> {
        Ok(MeasureResult {
            measure_id: self.id,
            value: self.evaluate(psi)?,
            partition: self.partition.clone(),
            pair: self.pair,
        })
    }
}

/// One evaluated measure together with the subsystem it was read on.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureResult {
    pub measure_id: MeasureId,
    pub value: f64,
    pub partition: Option<Partition>,
    pub pair: Option<(usize, usize)>,
}
