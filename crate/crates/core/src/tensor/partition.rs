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

use std::fmt;

use crate::error::{ensure_arg, Result};

/// Split of an `N`-qubit register into a kept subsystem A and its
/// complement B. Qubits are numbered from 1 (most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    num_qubits: usize,
    keep: Vec<usize>,
}

impl Partition {
    /// `keep` must be nonempty, strictly increasing and a proper subset of
    /// `1..=num_qubits`.
    pub fn new(num_qubits: usize, keep: Vec<usize>) -> Result<Self> {
        ensure_arg!(num_qubits >= 2, "a partition needs at least 2 qubits, got {num_qubits}");
        ensure_arg!(!keep.is_empty(), "kept subsystem is empty");
        ensure_arg!(keep.len() < num_qubits, "kept subsystem is the whole register");
        ensure_arg!(
            keep.windows(2).all(|w| w[0] < w[1]),
            "kept qubits {keep:?} are not strictly increasing"
        );
        ensure_arg!(
            keep[0] >= 1 && *keep.last().unwrap() <= num_qubits,
            "kept qubits {keep:?} outside 1..={num_qubits}"
        );
        Ok(Self { num_qubits, keep })
    }

    /// Keeps the contiguous block `first..=last`.
    pub fn range(num_qubits: usize, first: usize, last: usize) -> Result<Self> {
        ensure_arg!(first <= last, "empty qubit range {first}-{last}");
        Self::new(num_qubits, (first..=last).collect())
    }

    /// Parses `"1-4"` (inclusive range) or `"1,3,5"` (explicit list).
    pub fn parse(num_qubits: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((a, b)) = text.split_once('-') {
            let first = parse_qubit(a)?;
            let last = parse_qubit(b)?;
            return Self::range(num_qubits, first, last);
        }
        let keep = text.split(',').map(parse_qubit).collect::<Result<Vec<_>>>()?;
        Self::new(num_qubits, keep)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Kept qubits, 1-based and ascending.
    pub fn keep(&self) -> &[usize] {
        &self.keep
    }

    /// Traced-out qubits, 1-based and ascending.
    pub fn traced(&self) -> Vec<usize> {
        (1..=self.num_qubits).filter(|q| !self.keep.contains(q)).collect()
    }

    pub fn complement(&self) -> Partition {
        Partition { num_qubits: self.num_qubits, keep: self.traced() }
    }

    /// Dimension of the kept subsystem, `2^|A|`.
    pub fn kept_dim(&self) -> usize {
        1 << self.keep.len()
    }

    /// Dimension of the traced subsystem, `2^(N-|A|)`.
    pub fn traced_dim(&self) -> usize {
        1 << (self.num_qubits - self.keep.len())
    }

    /// The smaller of the two subsystem dimensions.
    pub fn mu(&self) -> usize {
        self.kept_dim().min(self.traced_dim())
    }

    /// The larger of the two subsystem dimensions.
    pub fn nu(&self) -> usize {
        self.kept_dim().max(self.traced_dim())
    }

    /// This partition relabeled so that the kept side is the smaller one
    /// (ties keep `self`).
    pub fn smaller_side(&self) -> Partition {
        if self.kept_dim() <= self.traced_dim() {
            self.clone()
        } else {
            self.complement()
        }
    }

    /// For every full register index, the pair (kept index, traced index)
    /// with each sub-index in big-endian order of its own qubits.
    pub(crate) fn split_table(&self) -> Vec<(usize, usize)> {
        let n = self.num_qubits;
        let kept_shifts: Vec<usize> = self.keep.iter().map(|q| n - q).collect();
        let traced_shifts: Vec<usize> = self.traced().iter().map(|q| n - q).collect();
        (0..1usize << n)
            .map(|j| (gather(j, &kept_shifts), gather(j, &traced_shifts)))
            .collect()
    }
}

fn gather(index: usize, shifts: &[usize]) -> usize {
    shifts.iter().fold(0, |acc, &s| (acc << 1) | ((index >> s) & 1))
}

fn parse_qubit(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| crate::error::arg_err!("invalid qubit index {s:?}"))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let contiguous = self.keep.windows(2).all(|w| w[1] == w[0] + 1);
        if contiguous && self.keep.len() > 1 {
            write!(f, "{}-{}", self.keep[0], self.keep[self.keep.len() - 1])
        } else {
            let parts: Vec<String> = self.keep.iter().map(|q| q.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}
