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
use std::str::FromStr;

use super::run::{check_capacity, for_each_trial, InitialState};
use super::stats::{Histogram, Running};
use crate::baker::{BakerMap, BakerMapConfig, Workspace};
use crate::ensembles::{sample_haar_state, sample_product_state, SeededSampler};
use crate::error::{arg_err, ensure_arg, Error, Result};
use crate::measures::{concurrence_c, pair_density, BipartitePurity, Measure};
use crate::tensor::{Partition, StateVector};

/// Where the states of a sampling experiment come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateSource {
    Haar,
    /// Random product states after `steps` applications of `B_{N,n}`.
    Baked { n: usize, steps: usize },
}

impl StateSource {
    fn validate(&self, num_qubits: usize) -> Result<()> {
        if let StateSource::Baked { n, .. } = *self {
            BakerMapConfig::matrix_free(num_qubits, n)?;
        }
        Ok(())
    }

    fn draw(&self, num_qubits: usize, seed: u64, trial: u64, map: Option<&BakerMap>) -> Result<StateVector> {
        let mut sampler = SeededSampler::new(seed, trial);
        match *self {
            StateSource::Haar => sample_haar_state(num_qubits, &mut sampler),
            StateSource::Baked { steps, .. } => {
                let map = map.expect("baked source has a planned map");
                let mut psi = sample_product_state(num_qubits, &mut sampler)?;
                let mut ws = Workspace::default();
                for _ in 0..steps {
                    map.apply_in_place(&mut psi, &mut ws)?;
                }
                Ok(psi)
            }
        }
    }

    fn plan(&self, num_qubits: usize) -> Result<Option<BakerMap>> {
        self.validate(num_qubits)?;
        match *self {
            StateSource::Haar => Ok(None),
            StateSource::Baked { n, .. } => Ok(Some(BakerMap::new(BakerMapConfig::matrix_free(num_qubits, n)?)?)),
        }
    }
}

impl fmt::Display for StateSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSource::Haar => f.write_str("haar"),
            StateSource::Baked { n, steps } => write!(f, "baked:{n}:{steps}"),
        }
    }
}

impl FromStr for StateSource {
    type Err = Error;

    /// `haar` or `baked:<n>:<steps>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "haar" {
            return Ok(StateSource::Haar);
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["baked", n, steps] => Ok(StateSource::Baked {
                n: n.parse().map_err(|_| arg_err!("bad position bits in {s:?}"))?,
                steps: steps.parse().map_err(|_| arg_err!("bad step count in {s:?}"))?,
            }),
            _ => Err(arg_err!("unknown state source {s:?} (expected haar or baked:<n>:<steps>)")),
        }
    }
}

/// Values of each measure on `samples` states, in trial order
/// (`result[measure][trial]`).
pub fn sample_measures(
    num_qubits: usize,
    source: StateSource,
    measures: &[Measure],
    samples: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    ensure_arg!(samples >= 1, "need at least one sample");
    ensure_arg!(!measures.is_empty(), "no measures requested");
    ensure_arg!(measures.iter().all(|m| m.num_qubits() == num_qubits), "measures are bound to a different register");
    let map = source.plan(num_qubits)?;
    let mut out = vec![Vec::with_capacity(samples); measures.len()];
    for_each_trial(
        samples,
        |t| {
            let psi = source.draw(num_qubits, seed, t, map.as_ref())?;
            measures.iter().map(|m| m.evaluate(&psi)).collect::<Result<Vec<f64>>>()
        },
        |values| out.iter_mut().zip(values).for_each(|(o, v)| o.push(v)),
    )?;
    Ok(out)
}

/// Outcome of [`pairwise_probability`].
#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseReport {
    /// Fraction of samples with `c > 0`.
    pub probability: f64,
    pub positive: usize,
    pub samples: usize,
    pub mean_c: f64,
    pub std_c: f64,
    /// Distribution of `c` on `[-1/2, 1]`, 100 bins.
    pub histogram: Histogram,
}

/// Probability that the qubits of `pair` are entangled (`c > 0`) in states
/// drawn from `source`, with the distribution of `c`.
pub fn pairwise_probability(
    num_qubits: usize,
    samples: usize,
    pair: (usize, usize),
    seed: u64,
    source: StateSource,
) -> Result<PairwiseReport> {
    ensure_arg!(samples >= 1, "need at least one sample");
    ensure_arg!(num_qubits >= 2, "pairwise entanglement needs at least 2 qubits");
    let (i, j) = pair;
    ensure_arg!(
        i != j && (1..=num_qubits).contains(&i) && (1..=num_qubits).contains(&j),
        "invalid qubit pair ({i}, {j}) for {num_qubits} qubits"
    );
    let map = source.plan(num_qubits)?;
    let mut histogram = Histogram::new(-0.5, 1.0, 100)?;
    let mut stats = Running::default();
    let mut positive = 0;
    for_each_trial(
        samples,
        |t| {
            let psi = source.draw(num_qubits, seed, t, map.as_ref())?;
            concurrence_c(&pair_density(&psi, pair)?)
        },
        |c| {
            if c > 0.0 {
                positive += 1;
            }
            histogram.add(c);
            stats.push(c);
        },
    )?;
    Ok(PairwiseReport {
        probability: positive as f64 / samples as f64,
        positive,
        samples,
        mean_c: stats.mean(),
        std_c: stats.std(),
        histogram,
    })
}

/// Long-time average of an ensemble mean, from [`saturation_average`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaturationReport {
    pub n: usize,
    /// Average over `k = 1..=count` of the ensemble mean at step `stride k`.
    pub value: f64,
    /// Standard error from the spread of per-trial time averages.
    pub stderr: f64,
}

/// Time average of the ensemble-mean `measure` over the iterates
/// `stride, 2 stride, …, count stride` of random product states under
/// `B_{N,n}`.
pub fn saturation_average(
    n: usize,
    stride: usize,
    count: usize,
    samples: usize,
    seed: u64,
    measure: &Measure,
    max_bytes: u64,
) -> Result<SaturationReport> {
    ensure_arg!(stride >= 1 && count >= 1, "stride and count must be at least 1");
    ensure_arg!(samples >= 1, "need at least one sample");
    let num_qubits = measure.num_qubits();
    check_capacity(num_qubits, samples, max_bytes)?;
    let map = BakerMap::new(BakerMapConfig::matrix_free(num_qubits, n)?)?;
    let mut per_trial = Running::default();
    for_each_trial(
        samples,
        |t| {
            let mut psi = InitialState::ProductRandom.prepare(num_qubits, seed, t)?;
            let mut ws = Workspace::default();
            let mut total = 0.0;
            for _ in 0..count {
                for _ in 0..stride {
                    map.apply_in_place(&mut psi, &mut ws)?;
                }
                total += measure.evaluate(&psi)?;
            }
            Ok(total / count as f64)
        },
        |avg| per_trial.push(avg),
    )?;
    Ok(SaturationReport { n, value: per_trial.mean(), stderr: per_trial.stderr() })
}

/// Window-averaged linear entropy of one map, from [`ranking_report`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankEntry {
    pub n: usize,
    pub mean: f64,
    pub stderr: f64,
}

/// Maps ordered by their entangling power.
#[derive(Clone, Debug, PartialEq)]
pub struct RankingReport {
    pub num_qubits: usize,
    pub partition: Partition,
    pub window: (usize, usize),
    /// Descending by `mean`.
    pub entries: Vec<RankEntry>,
}

impl RankingReport {
    /// Position-bit counts from most to least entangling.
    pub fn order(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.n).collect()
    }
}

/// Ranks `B_{N,n}`, `n = 1..N-1`, by the ensemble-mean linear entropy across
/// `partition`, averaged over steps `window.0..=window.1`, starting from
/// random product states. Every map sees the same initial states.
pub fn ranking_report(
    samples: usize,
    window: (usize, usize),
    seed: u64,
    partition: &Partition,
    max_bytes: u64,
) -> Result<RankingReport> {
    let num_qubits = partition.num_qubits();
    let (start, end) = window;
    ensure_arg!(start >= 1 && start <= end, "window {start}..={end} must be nonempty and start at step 1 or later");
    ensure_arg!(samples >= 1, "need at least one sample");
    check_capacity(num_qubits, samples, max_bytes)?;
    let kernel = BipartitePurity::new(partition);
    let mut entries = Vec::with_capacity(num_qubits - 1);
    for n in 1..num_qubits {
        let map = BakerMap::new(BakerMapConfig::matrix_free(num_qubits, n)?)?;
        let mut per_trial = Running::default();
        for_each_trial(
            samples,
            |t| {
                let mut psi = InitialState::ProductRandom.prepare(num_qubits, seed, t)?;
                let mut ws = Workspace::default();
                let mut total = 0.0;
                for step in 1..=end {
                    map.apply_in_place(&mut psi, &mut ws)?;
                    if step >= start {
                        total += kernel.linear_entropy(&psi)?;
                    }
                }
                Ok(total / (end + 1 - start) as f64)
            },
            |avg| per_trial.push(avg),
        )?;
        entries.push(RankEntry { n, mean: per_trial.mean(), stderr: per_trial.stderr() });
    }
    entries.sort_by(|a, b| b.mean.total_cmp(&a.mean));
    Ok(RankingReport { num_qubits, partition: partition.clone(), window, entries })
}
