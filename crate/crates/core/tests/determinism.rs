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

//! Results must not depend on how rayon schedules trials.

use qbaker::harness::{
    evolve_measures, pairwise_probability, ranking_report, EnsembleRun, InitialState, MapChoice, StateSource,
    DEFAULT_MAX_BYTES,
};
use qbaker::measures::{Measure, MeasureId};
use qbaker::tensor::Partition;

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn evolve_is_independent_of_thread_count() {
    // More samples than one chunk, so several chunks are in flight at once.
    let run = EnsembleRun {
        num_qubits: 5,
        map: MapChoice::All,
        steps: 6,
        samples: 1300,
        initial: InitialState::ProductRandom,
        measures: vec![
            Measure::new(MeasureId::LinearEntropy, 5, None, None).unwrap(),
            Measure::new(MeasureId::ConcurrenceC, 5, None, Some((2, 4))).unwrap(),
            Measure::new(MeasureId::MwQ, 5, None, None).unwrap(),
        ],
        seed: 17,
        max_bytes: DEFAULT_MAX_BYTES,
    };
    let one = with_threads(1, || evolve_measures(&run).unwrap());
    let four = with_threads(4, || evolve_measures(&run).unwrap());
    assert_eq!(one, four);
}

#[test]
fn pairwise_and_ranking_are_independent_of_thread_count() {
    let source = StateSource::Baked { n: 2, steps: 5 };
    let a = with_threads(1, || pairwise_probability(4, 1100, (1, 4), 3, source).unwrap());
    let b = with_threads(3, || pairwise_probability(4, 1100, (1, 4), 3, source).unwrap());
    assert_eq!(a, b);

    let half = Partition::range(4, 1, 2).unwrap();
    let a = with_threads(1, || ranking_report(600, (3, 8), 5, &half, DEFAULT_MAX_BYTES).unwrap());
    let b = with_threads(4, || ranking_report(600, (3, 8), 5, &half, DEFAULT_MAX_BYTES).unwrap());
    assert_eq!(a, b);
}
