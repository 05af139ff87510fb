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

//! Deterministic batch experiments over ensembles of baked states.
//!
//! Trial `t` of a run with seed `s` draws its randomness from the stream
//! `(s, t)` of [`SeededSampler`](crate::ensembles::SeededSampler), trials run
//! in parallel, and per-trial results are reduced in trial order, so output
//! does not depend on the number of worker threads.

mod csv;
mod experiments;
mod run;
mod stats;

pub use self::csv::{write_histogram, write_key_values, write_table, write_time_series, CsvHeader, CONVENTIONS};
pub use experiments::{
    pairwise_probability, ranking_report, sample_measures, saturation_average, PairwiseReport, RankEntry,
    RankingReport, SaturationReport, StateSource,
};
pub use run::{
    check_capacity, evolve_measures, max_bytes_from_env, EnsembleRun, InitialState, MapChoice, TimeSeriesRow,
    DEFAULT_MAX_BYTES, MAX_BYTES_ENV,
};
pub use stats::{ks_critical_value_1pct, ks_statistic, Histogram, MomentSummary, Running, Summary};
