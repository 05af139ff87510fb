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

use rayon::prelude::*;

use super::stats::{Running, Summary};
use crate::baker::{BakerMap, BakerMapConfig, Workspace};
use crate::ensembles::{make_special_state, sample_product_state, SeededSampler, SpecialState};
use crate::error::{arg_err, ensure_arg, Error, Result};
use crate::measures::Measure;
use crate::tensor::StateVector;

/// Environment variable bounding the memory of a state ensemble, in bytes.
pub const MAX_BYTES_ENV: &str = "QBAKER_MAX_BYTES";
/// Budget used when [`MAX_BYTES_ENV`] is unset: 2 GiB.
pub const DEFAULT_MAX_BYTES: u64 = 2 << 30;

/// Memory budget from [`MAX_BYTES_ENV`], falling back to
/// [`DEFAULT_MAX_BYTES`].
pub fn max_bytes_from_env() -> Result<u64> {
    match std::env::var(MAX_BYTES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| arg_err!("{MAX_BYTES_ENV}={v:?} is not a byte count")),
        Err(_) => Ok(DEFAULT_MAX_BYTES),
    }
}

/// Fails with a capacity error if `samples` states of `num_qubits` qubits
/// would need more than `max_bytes`.
pub fn check_capacity(num_qubits: usize, samples: usize, max_bytes: u64) -> Result<()> {
    let need = 16u128 * (1u128 << num_qubits) * samples as u128;
    if need > max_bytes as u128 {
        return Err(Error::Capacity(format!(
            "{samples} states of {num_qubits} qubits need {need} bytes, over the budget of {max_bytes} \
             (set {MAX_BYTES_ENV} to raise it)"
        )));
    }
    Ok(())
}

/// Trials run in chunks of this size; results are merged chunk by chunk in
/// trial order.
pub(crate) const CHUNK: usize = 512;

/// Evaluates `trial(t)` for `t` in `0..samples` in parallel and feeds the
/// results to `sink` in trial order.
pub(crate) fn for_each_trial<T, F, S>(samples: usize, trial: F, mut sink: S) -> Result<()>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
    S: FnMut(T),
{
    let mut start = 0;
    while start < samples {
        let end = (start + CHUNK).min(samples);
        let results: Vec<Result<T>> = (start..end).into_par_iter().map(|t| trial(t as u64)).collect();
        for r in results {
            sink(r?);
        }
        start = end;
    }
    Ok(())
}

/// Which maps an ensemble run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapChoice {
    Single(usize),
    /// Every `n` in `1..=N`, one run each.
    All,
}

impl MapChoice {
    pub fn position_bits(&self, num_qubits: usize) -> Vec<usize> {
        match *self {
            MapChoice::Single(n) => vec![n],
            MapChoice::All => (1..=num_qubits).collect(),
        }
    }
}

impl FromStr for MapChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(MapChoice::All);
        }
        s.parse().map(MapChoice::Single).map_err(|_| arg_err!("map must be a number of position bits or \"all\", got {s:?}"))
    }
}

/// Initial ensemble of an [`EnsembleRun`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialState {
    /// Independent single-qubit Haar states on every qubit, one draw per trial.
    ProductRandom,
    Basis(String),
    MaxEntangledHalf,
}

impl InitialState {
    /// The state for trial `trial` of an `N`-qubit run.
    pub fn prepare(&self, num_qubits: usize, seed: u64, trial: u64) -> Result<StateVector> {
        match self {
            InitialState::ProductRandom => sample_product_state(num_qubits, &mut SeededSampler::new(seed, trial)),
            InitialState::Basis(bits) => {
                ensure_arg!(bits.len() == num_qubits, "bitstring {bits:?} does not have {num_qubits} qubits");
                make_special_state(&SpecialState::Basis(bits.clone()))
            }
            InitialState::MaxEntangledHalf => make_special_state(&SpecialState::MaxEntangledHalf { num_qubits }),
        }
    }
}

impl fmt::Display for InitialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialState::ProductRandom => f.write_str("product"),
            InitialState::Basis(b) => write!(f, "basis:{b}"),
            InitialState::MaxEntangledHalf => f.write_str("max-entangled-half"),
        }
    }
}

impl FromStr for InitialState {
    type Err = Error;

    /// `product`, `max-entangled-half`, or `basis:<bits>` (a bare bitstring
    /// also works).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "product" | "product_random" => Ok(InitialState::ProductRandom),
            "max-entangled-half" | "max_entangled_half" => Ok(InitialState::MaxEntangledHalf),
            _ => {
                let bits = s.strip_prefix("basis:").unwrap_or(s);
                ensure_arg!(
                    !bits.is_empty() && bits.chars().all(|c| c == '0' || c == '1'),
                    "unknown initial state {s:?} (expected product, max-entangled-half or basis:<bits>)"
                );
                Ok(InitialState::Basis(bits.to_string()))
            }
        }
    }
}

/// An ensemble evolved under repeated application of baker's maps.
#[derive(Clone, Debug)]
pub struct EnsembleRun {
    pub num_qubits: usize,
    pub map: MapChoice,
    pub steps: usize,
    pub samples: usize,
    pub initial: InitialState,
    pub measures: Vec<Measure>,
    pub seed: u64,
    pub max_bytes: u64,
}

impl EnsembleRun {
    pub fn validate(&self) -> Result<()> {
        ensure_arg!(self.samples >= 1, "an ensemble needs at least one sample");
        ensure_arg!(!self.measures.is_empty(), "no measures requested");
        for m in &self.measures {
            ensure_arg!(
                m.num_qubits() == self.num_qubits,
                "measure {} is bound to {} qubits, run has {}",
                m.id(),
                m.num_qubits(),
                self.num_qubits
            );
        }
        for n in self.map.position_bits(self.num_qubits) {
            BakerMapConfig::matrix_free(self.num_qubits, n)?;
        }
        check_capacity(self.num_qubits, self.samples, self.max_bytes)
    }
}

/// Ensemble statistics of every measure at one step of one map.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeriesRow {
    /// Position bits of the map.
    pub n: usize,
    pub step: usize,
    /// One entry per measure, in the order of [`EnsembleRun::measures`].
    pub stats: Vec<Summary>,
}

/// Measures every trial after each of `0..=steps` applications of the map
/// and reports ensemble statistics per step. Step 0 is the initial ensemble.
pub fn evolve_measures(run: &EnsembleRun) -> Result<Vec<TimeSeriesRow>> {
    run.validate()?;
    let mut rows = Vec::new();
    for n in run.map.position_bits(run.num_qubits) {
        let map = BakerMap::new(BakerMapConfig::matrix_free(run.num_qubits, n)?)?;
        let width = run.measures.len();
        let mut acc = vec![Running::default(); (run.steps + 1) * width];
        for_each_trial(
            run.samples,
            |t| {
                let mut psi = run.initial.prepare(run.num_qubits, run.seed, t)?;
                let mut ws = Workspace::default();
                let mut values = Vec::with_capacity((run.steps + 1) * width);
                for step in 0..=run.steps {
                    if step > 0 {
                        map.apply_in_place(&mut psi, &mut ws)?;
                    }
                    for m in &run.measures {
                        values.push(m.evaluate(&psi)?);
                    }
                }
                Ok(values)
            },
            |values| acc.iter_mut().zip(values).for_each(|(a, v)| a.push(v)),
        )?;
        rows.extend(acc.chunks(width).enumerate().map(|(step, chunk)| TimeSeriesRow {
            n,
            step,
            stats: chunk.iter().map(Running::summary).collect(),
        }));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::MeasureId;
    use crate::tensor::Partition;

    fn slin(n: usize) -> Measure {
        Measure::new(MeasureId::LinearEntropy, n, Some(Partition::range(n, 1, n / 2).unwrap()), None).unwrap()
    }

    fn run(n_qubits: usize, map: MapChoice, initial: InitialState, steps: usize, samples: usize) -> EnsembleRun {
        EnsembleRun {
            num_qubits: n_qubits,
            map,
            steps,
            samples,
            initial,
            measures: vec![slin(n_qubits)],
            seed: 7,
            max_bytes: DEFAULT_MAX_BYTES,
        }
    }

    #[test]
    fn non_entangling_map_keeps_products() {
        let rows = evolve_measures(&run(8, MapChoice::Single(8), InitialState::ProductRandom, 100, 20)).unwrap();
        assert_eq!(rows.len(), 101);
        assert!(rows.iter().all(|r| r.stats[0].mean.abs() < 1e-12));
    }

    #[test]
    fn basis_state_entangles_under_n4() {
        let rows = evolve_measures(&run(8, MapChoice::Single(4), InitialState::Basis("00000000".into()), 60, 1)).unwrap();
        assert!(rows[0].stats[0].mean.abs() < 1e-12);
        let late: f64 = rows[30..].iter().map(|r| r.stats[0].mean).sum::<f64>() / 31.0;
        assert!(late > 0.5, "late mean {late}");
        assert_eq!(rows[5].stats[0].std, 0.0);
    }

    #[test]
    fn maximal_initial_entanglement_is_destroyed() {
        let rows = evolve_measures(&run(8, MapChoice::All, InitialState::MaxEntangledHalf, 20, 1)).unwrap();
        assert_eq!(rows.len(), 8 * 21);
        for n in 1..=7 {
            let series: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.stats[0].mean).collect();
            assert!((series[0] - 1.0).abs() < 1e-12);
            assert!(series[1..].iter().any(|&s| s < 0.99), "n={n}");
        }
    }

    #[test]
    fn step_zero_equals_direct_evaluation() {
        let r = run(6, MapChoice::Single(3), InitialState::ProductRandom, 0, 50);
        let rows = evolve_measures(&r).unwrap();
        let mut direct = Running::default();
        for t in 0..50 {
            let psi = r.initial.prepare(6, r.seed, t).unwrap();
            direct.push(r.measures[0].evaluate(&psi).unwrap());
        }
        assert!((rows[0].stats[0].mean - direct.mean()).abs() < 1e-12);
    }

    #[test]
    fn same_result_on_one_or_many_threads() {
        let r = run(6, MapChoice::Single(2), InitialState::ProductRandom, 30, 700);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| evolve_measures(&r)).unwrap();
        let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| evolve_measures(&r)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn validation_and_capacity() {
        let mut r = run(8, MapChoice::Single(9), InitialState::ProductRandom, 1, 1);
        assert!(matches!(evolve_measures(&r), Err(Error::Argument(_))));
        r.map = MapChoice::Single(4);
        r.samples = 1000;
        r.max_bytes = 1000;
        assert!(matches!(evolve_measures(&r), Err(Error::Capacity(_))));
        r.samples = 0;
        assert!(evolve_measures(&r).is_err());
        r = run(8, MapChoice::Single(4), InitialState::Basis("0101".into()), 1, 1);
        assert!(evolve_measures(&r).is_err());
        assert!(check_capacity(26, 1000, DEFAULT_MAX_BYTES).is_err());
        assert!(check_capacity(8, 16_000, DEFAULT_MAX_BYTES).is_ok());
    }

    #[test]
    fn parsing() {
        assert_eq!("all".parse::<MapChoice>().unwrap(), MapChoice::All);
        assert_eq!("3".parse::<MapChoice>().unwrap(), MapChoice::Single(3));
        assert!("x".parse::<MapChoice>().is_err());
        assert_eq!("product".parse::<InitialState>().unwrap(), InitialState::ProductRandom);
        assert_eq!("basis:0011".parse::<InitialState>().unwrap(), InitialState::Basis("0011".into()));
        assert_eq!("00100111".parse::<InitialState>().unwrap(), InitialState::Basis("00100111".into()));
        assert!("haar".parse::<InitialState>().is_err());
        assert_eq!(InitialState::Basis("01".into()).to_string(), "basis:01");
    }
}
