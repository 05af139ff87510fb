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

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.
//!
//! Run with `cargo test -p qbaker --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use nalgebra::DMatrix;
use qbaker::baker::{
    baker_matrix, periodic_spectrum, shift_matrix, verify_basis_mapping, BakerMap, BakerMapConfig, Strategy,
    Workspace,
};
use qbaker::ensembles::{
    exact_cdf_mu2, exact_pdf_mu2, linear_entropy_cumulants, lubkin_mean_purity, page_mean_entropy,
    purity_third_cumulant, purity_variance, q_moments, sample_haar_state, sample_product_state, tau_moments,
    SeededSampler,
};
use qbaker::harness::{
    evolve_measures, ks_critical_value_1pct, ks_statistic, EnsembleRun, InitialState, MapChoice, pairwise_probability, ranking_report, sample_measures, saturation_average,
    MomentSummary, StateSource, DEFAULT_MAX_BYTES,
};
use qbaker::measures::{meyer_wallach_q, n_tangle, BipartitePurity, Measure, MeasureId, QAlgorithm};
use qbaker::tensor::{Partition, StateVector};
use qbaker::Complex64;

type Outcome = (bool, String);

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn within(value: f64, target: f64, se: f64, k: f64) -> bool {
    (value - target).abs() <= k * se
}

fn unitarity_and_strategies() -> Outcome {
    let mut worst_unitary = 0.0f64;
    let mut worst_agree = 0.0f64;
    for total in 1..=8 {
        let dim = 1usize << total;
        for n in 1..=total {
            let dense_cfg = BakerMapConfig::new(total, n, Strategy::Dense).unwrap();
            let b = baker_matrix(&dense_cfg).unwrap();
            let err = max_abs(&(b.adjoint() * &b - DMatrix::<Complex64>::identity(dim, dim)));
            worst_unitary = worst_unitary.max(err);
            let dense = BakerMap::new(dense_cfg).unwrap();
            let free = BakerMap::new(BakerMapConfig::matrix_free(total, n).unwrap()).unwrap();
            for trial in 0..100 {
                let psi = sample_haar_state(total, &mut SeededSampler::new(101, trial)).unwrap();
                let a = dense.apply(&psi).unwrap();
                let f = free.apply(&psi).unwrap();
                worst_agree = worst_agree.max(a.max_abs_diff(&f));
            }
        }
    }
    (
        worst_unitary <= 1e-12 && worst_agree <= 1e-11,
        format!("max |B^dag B - I| = {worst_unitary:.2e}, max |dense - matrix-free| = {worst_agree:.2e}"),
    )
}

fn periodicity() -> Outcome {
    let mut worst = 0.0f64;
    for total in 1..=5 {
        let dim = 1usize << total;
        let b = baker_matrix(&BakerMapConfig::new(total, total, Strategy::Dense).unwrap()).unwrap();
        let mut power = DMatrix::<Complex64>::identity(dim, dim);
        for _ in 0..4 * total {
            power = &b * power;
        }
        worst = worst.max(max_abs(&(power - DMatrix::<Complex64>::identity(dim, dim))));
    }
    (worst <= 1e-10, format!("max |B_(N,N)^(4N) - I| over N=1..5 = {worst:.2e}"))
}

fn spectrum() -> Outcome {
    // Eigenvalues of the dense B_{2,2} from a complex Schur decomposition.
    let b = baker_matrix(&BakerMapConfig::new(2, 2, Strategy::Dense).unwrap()).unwrap();
    let mut got: Vec<Complex64> = b.clone().schur().eigenvalues().expect("triangular Schur form").iter().copied().collect();
    let mut want = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::from_polar(1.0, -PI / 4.0),
        Complex64::from_polar(1.0, 3.0 * PI / 4.0),
    ];
    let key = |z: &Complex64| z.arg();
    got.sort_by(|a, b| key(a).total_cmp(&key(b)));
    want.sort_by(|a, b| key(a).total_cmp(&key(b)));
    let spectral_err = got.iter().zip(&want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let mut eq_err = 0.0f64;
    for total in 1..=8 {
        let map = BakerMap::new(BakerMapConfig::matrix_free(total, total).unwrap()).unwrap();
        for p in periodic_spectrum(total).unwrap() {
            let image = map.apply(&p.eigenstate).unwrap();
            let scaled: Vec<Complex64> = p.eigenstate.amplitudes().iter().map(|a| a * p.eigenvalue).collect();
            let err = image.amplitudes().iter().zip(&scaled).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            eq_err = eq_err.max(err);
        }
    }
    let mut k5: Vec<usize> = periodic_spectrum(5).unwrap().iter().map(|p| p.root_index).collect();
    k5.sort();
    let degenerate = k5.windows(2).any(|w| w[0] == w[1]);
    (
        spectral_err <= 1e-12 && eq_err <= 1e-10 && degenerate,
        format!("B_(2,2) spectrum error {spectral_err:.2e}; eigen-equation error N<=8 {eq_err:.2e}; N=5 degenerate: {degenerate}"),
    )
}

fn composition_and_basis() -> Outcome {
    let mut worst = 0.0f64;
    let mut basis_ok = true;
    let mut basis_dev = 0.0f64;
    for total in 1..=6 {
        for n in 1..=total {
            let b = baker_matrix(&BakerMapConfig::new(total, n, Strategy::Dense).unwrap()).unwrap();
            let small = baker_matrix(&BakerMapConfig::new(total - n + 1, 1, Strategy::Dense).unwrap()).unwrap();
            let lead = 1usize << (n - 1);
            let composed = DMatrix::<Complex64>::identity(lead, lead).kronecker(&small) * shift_matrix(total, n).unwrap();
            worst = worst.max(max_abs(&(b - composed)));
            let report = verify_basis_mapping(&BakerMapConfig::matrix_free(total, n).unwrap()).unwrap();
            basis_ok &= report.passed;
            basis_dev = basis_dev.max(report.max_deviation);
        }
    }
    (
        worst <= 1e-12 && basis_ok,
        format!("max |B_(N,n) - (1 x B_(N-n+1,1)) S_n| = {worst:.2e}; basis mapping passed: {basis_ok} (max deviation {basis_dev:.2e})"),
    )
}

fn random_state_moments() -> Outcome {
    const SAMPLES: usize = 100_000;
    let mut ok = true;
    let mut notes = Vec::new();
    for (mu, nu, total, part) in [(2, 8, 4, "1"), (4, 4, 4, "1-2"), (16, 16, 8, "1-4")] {
        let part = Partition::parse(total, part).unwrap();
        let measures: Vec<Measure> = [MeasureId::VonNeumann, MeasureId::Purity, MeasureId::LinearEntropy]
            .into_iter()
            .map(|id| Measure::new(id, total, Some(part.clone()), None).unwrap())
            .collect();
        let values = sample_measures(total, StateSource::Haar, &measures, SAMPLES, 2024).unwrap();
        let svn = MomentSummary::from_samples(&values[0]).unwrap();
        let r = MomentSummary::from_samples(&values[1]).unwrap();
        let sl = MomentSummary::from_samples(&values[2]).unwrap();
        let k = linear_entropy_cumulants(mu, nu).unwrap();
        let checks = [
            ("S", svn.mean, page_mean_entropy(mu, nu).unwrap(), svn.mean_se),
            ("<R>", r.mean, lubkin_mean_purity(mu, nu).unwrap(), r.mean_se),
            ("var R", r.variance, purity_variance(mu, nu).unwrap(), r.variance_se),
            ("k3 R", r.third_cumulant, purity_third_cumulant(mu, nu).unwrap(), r.third_cumulant_se),
            ("a", sl.mean, k.a, sl.mean_se),
            ("b", sl.variance, k.b, sl.variance_se),
            ("c", sl.third_cumulant, k.c, sl.third_cumulant_se),
        ];
        let worst = checks.iter().map(|&(_, v, t, se)| (v - t).abs() / se).fold(0.0, f64::max);
        ok &= checks.iter().all(|&(_, v, t, se)| within(v, t, se, 5.0));
        notes.push(format!("({mu},{nu}) worst {worst:.2} SE"));
    }
    for total in [2, 4, 6, 8] {
        let measures = vec![
            Measure::new(MeasureId::MwQ, total, None, None).unwrap(),
            Measure::new(MeasureId::Tangle, total, None, None).unwrap(),
        ];
        let values = sample_measures(total, StateSource::Haar, &measures, SAMPLES, 77).unwrap();
        let q = MomentSummary::from_samples(&values[0]).unwrap();
        let t = MomentSummary::from_samples(&values[1]).unwrap();
        let dim = 1usize << total;
        let (qm, qv) = q_moments(dim, total).unwrap();
        let (tm, tv) = tau_moments(dim).unwrap();
        let checks = [(q.mean, qm, q.mean_se), (q.variance, qv, q.variance_se), (t.mean, tm, t.mean_se), (t.variance, tv, t.variance_se)];
        let worst = checks.iter().map(|&(v, m, se)| (v - m).abs() / se).fold(0.0, f64::max);
        ok &= checks.iter().all(|&(v, m, se)| within(v, m, se, 5.0));
        notes.push(format!("Q/tau N={total} worst {worst:.2} SE"));
    }
    (ok, notes.join("; "))
}

fn exact_mu2_law() -> Outcome {
    const SAMPLES: usize = 100_000;
    let mut ok = true;
    let mut notes = Vec::new();
    for (nu, total) in [(8usize, 4usize), (128, 8)] {
        let m = Measure::new(MeasureId::LinearEntropy, total, Some(Partition::parse(total, "1").unwrap()), None).unwrap();
        let values = sample_measures(total, StateSource::Haar, &[m], SAMPLES, 31).unwrap();
        let d = ks_statistic(&values[0], |s| exact_cdf_mu2(s.clamp(0.0, 1.0), nu).unwrap());
        let crit = ks_critical_value_1pct(SAMPLES);
        ok &= d < crit;
        notes.push(format!("nu={nu} KS {d:.5} (1% critical {crit:.5})"));
    }
    let pointwise = (0..=100)
        .map(|i| {
            let s = i as f64 / 100.0;
            (exact_pdf_mu2(s, 2).unwrap() - 1.5 * (1.0 - s).sqrt()).abs()
        })
        .fold(0.0, f64::max);
    ok &= pointwise <= 1e-12;
    notes.push(format!("nu=2 max pointwise error {pointwise:.2e}"));
    (ok, notes.join("; "))
}

fn pairwise_probabilities() -> Outcome {
    const SAMPLES: usize = 100_000;
    let mut ok = true;
    let mut notes = Vec::new();
    for total in [3, 4, 6, 8] {
        let r = pairwise_probability(total, SAMPLES, (1, total), 5, StateSource::Haar).unwrap();
        let p = r.probability;
        ok &= match total {
            3 => p > 0.99,
            4 => (p - 0.76).abs() <= 0.02,
            6 => (p - 0.006).abs() <= 0.003,
            _ => p < 0.001,
        };
        notes.push(format!("N={total} P(c>0)={p:.4}"));
    }
    (ok, notes.join(", "))
}

fn brennen_identity() -> Outcome {
    let mut worst = 0.0f64;
    for trial in 0..1000 {
        let psi = sample_haar_state(8, &mut SeededSampler::new(8, trial)).unwrap();
        let w = meyer_wallach_q(&psi, QAlgorithm::Wedge);
        let p = meyer_wallach_q(&psi, QAlgorithm::Purity);
        worst = worst.max((w - p).abs());
    }
    let kernel = BipartitePurity::new(&Partition::parse(2, "1").unwrap());
    let mut worst2 = 0.0f64;
    for trial in 0..1000 {
        let psi = sample_haar_state(2, &mut SeededSampler::new(2, trial)).unwrap();
        let q = meyer_wallach_q(&psi, QAlgorithm::Wedge);
        let tau = n_tangle(&psi).unwrap();
        let s = kernel.linear_entropy(&psi).unwrap();
        worst2 = worst2.max((q - tau).abs()).max((q - s).abs());
    }
    (
        worst <= 1e-10 && worst2 <= 1e-10,
        format!("wedge vs purity Q (N=8) {worst:.2e}; Q, tau_2, S_L (N=2) {worst2:.2e}"),
    )
}

fn ranking() -> Outcome {
    let part = Partition::parse(8, "1-4").unwrap();
    let random_mean = linear_entropy_cumulants(16, 16).unwrap().a;
    let want = vec![4, 5, 3, 2, 1, 6, 7];
    let mut ok = true;
    let mut notes = Vec::new();
    for seed in [1, 2, 3] {
        let r = ranking_report(2000, (200, 500), seed, &part, DEFAULT_MAX_BYTES).unwrap();
        let order = r.order();
        let below = r.entries.iter().all(|e| e.mean < random_mean);
        let last_is_7 = order.last() == Some(&7)
            && r.entries[r.entries.len() - 1].mean < r.entries[r.entries.len() - 2].mean;
        ok &= order == want && below && last_is_7;
        let means: Vec<String> = r.entries.iter().map(|e| format!("{}:{:.4}", e.n, e.mean)).collect();
        notes.push(format!("seed {seed} order {order:?} [{}]", means.join(" ")));
    }
    notes.push(format!("random-state mean {random_mean:.5}"));
    (ok, notes.join("; "))
}

fn non_entangling_extreme() -> Outcome {
    let map = BakerMap::new(BakerMapConfig::matrix_free(8, 8).unwrap()).unwrap();
    let kernel = BipartitePurity::new(&Partition::parse(8, "1-4").unwrap());
    let mut worst = [0.0f64; 3];
    for trial in 0..100 {
        let mut psi: StateVector = sample_product_state(8, &mut SeededSampler::new(10, trial)).unwrap();
        let tau0 = n_tangle(&psi).unwrap();
        let mut ws = Workspace::default();
        for _ in 0..100 {
            map.apply_in_place(&mut psi, &mut ws).unwrap();
            worst[0] = worst[0].max(kernel.linear_entropy(&psi).unwrap());
            worst[1] = worst[1].max(meyer_wallach_q(&psi, QAlgorithm::Wedge));
            worst[2] = worst[2].max((n_tangle(&psi).unwrap() - tau0).abs());
        }
    }
    (
        worst.iter().all(|&w| w < 1e-12),
        format!("max S_L {:.2e}, max Q {:.2e}, max |tau_8(t) - tau_8(0)| {:.2e}", worst[0], worst[1], worst[2]),
    )
}

fn saturation_sweep() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for total in [4, 6, 8] {
        let q = Measure::new(MeasureId::MwQ, total, None, None).unwrap();
        let mut values = Vec::new();
        let mut agree = true;
        for n in 1..=total {
            let a = saturation_average(n, 512, 20, 500, 11, &q, DEFAULT_MAX_BYTES).unwrap();
            let b = saturation_average(n, 512, 20, 500, 12, &q, DEFAULT_MAX_BYTES).unwrap();
            let combined = (a.stderr.powi(2) + b.stderr.powi(2)).sqrt();
            agree &= (a.value - b.value).abs() <= 5.0 * combined;
            values.push(a.value);
        }
        let peak = values.iter().cloned().fold(f64::MIN, f64::max);
        let drop = values[total - 1].abs() < 1e-12 && values[total - 2] < peak;
        ok &= agree && drop;
        let shown: Vec<String> = values.iter().enumerate().map(|(i, v)| format!("{}:{:.4}", i + 1, v)).collect();
        notes.push(format!("N={total} [{}] seeds agree: {agree}", shown.join(" ")));
    }
    (ok, notes.join("; "))
}

fn property_fallback() -> Outcome {
    // Localization of the S_L distribution away from its maximum.
    let k = linear_entropy_cumulants(16, 16).unwrap();
    let localized = k.b.sqrt() < 17.0 / 257.0;
    // Concurrence of the end pair: brief rise, then negative.
    let c = Measure::new(MeasureId::ConcurrenceC, 8, None, Some((1, 8))).unwrap();
    let mut run = EnsembleRun {
        num_qubits: 8,
        map: MapChoice::Single(4),
        steps: 30,
        samples: 500,
        initial: InitialState::ProductRandom,
        measures: vec![c],
        seed: 12,
        max_bytes: DEFAULT_MAX_BYTES,
    };
    let means: Vec<f64> = evolve_measures(&run).unwrap().iter().map(|r| r.stats[0].mean).collect();
    let transient = means[1..6].iter().any(|&v| v > 0.0) && means[20..].iter().all(|&v| v < 0.0);
    // Maximal initial entanglement across 4|4 is lost under every entangling map.
    run.map = MapChoice::All;
    run.steps = 50;
    run.samples = 1;
    run.initial = InitialState::MaxEntangledHalf;
    run.measures = vec![Measure::new(MeasureId::LinearEntropy, 8, None, None).unwrap()];
    let rows = evolve_measures(&run).unwrap();
    let destroyed = (1..8).all(|n| {
        let series: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.stats[0].mean).collect();
        (series[0] - 1.0).abs() < 1e-12 && series[1..].iter().any(|&v| v < 0.99)
    });
    (
        localized && transient && destroyed,
        format!(
            "curve shapes without tabulated values are checked as properties: localization {localized}, \
             concurrence rise-then-fall {transient}, maximal initial entanglement destroyed {destroyed}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1 unitarity and strategy equivalence", unitarity_and_strategies),
        ("2 periodicity of B_(N,N)", periodicity),
        ("3 spectrum of B_(N,N)", spectrum),
        ("4 composition and basis mapping", composition_and_basis),
        ("5 random-state moments", random_state_moments),
        ("6 exact two-dimensional law", exact_mu2_law),
        ("7 pairwise entanglement probabilities", pairwise_probabilities),
        ("8 Q algorithm agreement and N=2 equivalence", brennen_identity),
        ("9 entangling-power ranking", ranking),
        ("10 non-entangling extreme", non_entangling_extreme),
        ("11 saturation sweep", saturation_sweep),
        ("12 property fallback", property_fallback),
    ];
    let mut failures = 0;
    let start = Instant::now();
    for (name, check) in criteria {
        let t = Instant::now();
        let (passed, detail) = check();
        if !passed {
            failures += 1;
        }
        println!(
            "criterion {name}: {} ({detail}) [{:.1}s]",
            if passed { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 criteria failed in {:.1}s", failures, start.elapsed().as_secs_f64());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
