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

//! Streaming summaries, histograms and goodness-of-fit helpers.

use crate::error::{ensure_arg, Result};

/// Running mean and variance (Welford), merged in a fixed order so results
/// do not depend on scheduling.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Running {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Running {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample standard deviation (`n - 1` denominator; 0 for one value).
    pub fn std(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.m2 / (self.count - 1) as f64).max(0.0).sqrt()
        }
    }

    pub fn stderr(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.std() / (self.count as f64).sqrt()
        }
    }

    pub fn summary(&self) -> Summary {
        Summary { mean: self.mean, std: self.std(), stderr: self.stderr() }
    }
}

/// Mean, standard deviation and standard error of a sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub stderr: f64,
}

/// Mean, variance and third cumulant of a sample with their standard
/// errors. The errors come from the influence functions of the three
/// estimators, `(x-m)`, `(x-m)^2 - k2` and `(x-m)^3 - 3 k2 (x-m) - k3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentSummary {
    pub count: usize,
    pub mean: f64,
    pub mean_se: f64,
    pub variance: f64,
    pub variance_se: f64,
    pub third_cumulant: f64,
    pub third_cumulant_se: f64,
}

impl MomentSummary {
    pub fn from_samples(xs: &[f64]) -> Result<Self> {
        ensure_arg!(xs.len() >= 2, "need at least two samples for moments");
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let central = |p: i32| xs.iter().map(|x| (x - mean).powi(p)).sum::<f64>() / n;
        let k2 = central(2);
        let k3 = central(3);
        let spread = |f: &dyn Fn(f64) -> f64| {
            let v = xs.iter().map(|&x| f(x - mean).powi(2)).sum::<f64>() / n;
            (v / n).sqrt()
        };
        Ok(Self {
            count: xs.len(),
            mean,
            mean_se: spread(&|d| d),
            variance: k2,
            variance_se: spread(&|d| d * d - k2),
            third_cumulant: k3,
            third_cumulant_se: spread(&|d| d * d * d - 3.0 * k2 * d - k3),
        })
    }
}

/// Uniform-bin histogram on `[lo, hi]`; values outside are clamped into the
/// end bins.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    lo: f64,
    hi: f64,
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn new(lo: f64, hi: f64, bins: usize) -> Result<Self> {
        ensure_arg!(bins >= 1 && hi > lo, "histogram needs at least one bin and lo < hi");
        Ok(Self { lo, hi, counts: vec![0; bins], total: 0 })
    }

    pub fn add(&mut self, x: f64) {
        let bins = self.counts.len();
        let pos = ((x - self.lo) / (self.hi - self.lo) * bins as f64).floor();
        let i = if pos.is_nan() || pos < 0.0 { 0 } else { (pos as usize).min(bins - 1) };
        self.counts[i] += 1;
        self.total += 1;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.counts.len() as f64
    }

    /// `(left, right, count, density)` per bin; densities integrate to 1.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, u64, f64)> + '_ {
        let w = self.bin_width();
        let total = self.total.max(1) as f64;
        self.counts.iter().enumerate().map(move |(i, &c)| {
            let left = self.lo + i as f64 * w;
            (left, left + w, c, c as f64 / (total * w))
        })
    }

    /// Center of the fullest bin.
    pub fn mode(&self) -> f64 {
        let (i, _) = self.counts.iter().enumerate().max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i))).unwrap();
        self.lo + (i as f64 + 0.5) * self.bin_width()
    }
}

/// Kolmogorov–Smirnov distance between the empirical distribution of `xs`
/// and the continuous CDF `cdf`.
pub fn ks_statistic(xs: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = xs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = cdf(x);
        d.max(f - i as f64 / n).max((i + 1) as f64 / n - f)
    })
}

/// Asymptotic 1% critical value of the one-sample KS distance, `1.6276/sqrt(n)`.
pub fn ks_critical_value_1pct(n: usize) -> f64 {
    1.627_61 / (n as f64).sqrt()
}
