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

//! Closed-form statistics of Haar-random bipartite and multi-qubit states.
//!
//! `mu <= nu` are the dimensions of the two subsystems; functions that are
//! symmetric in the pair accept either order.

use statrs::distribution::{Continuous, Normal};
use statrs::function::beta::beta_reg;
use statrs::function::gamma::ln_gamma;

use super::airy::airy_ai_scaled;
use crate::error::{ensure_arg, Result};

fn ordered(mu: usize, nu: usize) -> Result<(f64, f64)> {
    ensure_arg!(mu >= 1 && nu >= 1, "subsystem dimensions must be positive, got ({mu}, {nu})");
    Ok((mu.min(nu) as f64, mu.max(nu) as f64))
}

/// Mean entanglement (von Neumann, natural log) of a random state,
/// `sum_{k=nu+1}^{mu nu} 1/k - (mu - 1)/(2 nu)`.
pub fn page_mean_entropy(mu: usize, nu: usize) -> Result<f64> {
    let (m, n) = ordered(mu, nu)?;
    let (lo, hi) = (n as usize + 1, (m * n) as usize);
    // Summed from the small terms up.
    let harmonic: f64 = (lo..=hi).rev().map(|k| 1.0 / k as f64).sum();
    Ok(harmonic - (m - 1.0) / (2.0 * n))
}

/// Mean purity `(mu + nu) / (mu nu + 1)`.
pub fn lubkin_mean_purity(mu: usize, nu: usize) -> Result<f64> {
    let (m, n) = ordered(mu, nu)?;
    Ok((m + n) / (m * n + 1.0))
}

/// Variance of the purity.
pub fn purity_variance(mu: usize, nu: usize) -> Result<f64> {
    let (m, n) = ordered(mu, nu)?;
    let d = m * n;
    Ok(2.0 * (m * m - 1.0) * (n * n - 1.0) / ((d + 3.0) * (d + 2.0) * (d + 1.0).powi(2)))
}

/// Third cumulant of the purity.
pub fn purity_third_cumulant(mu: usize, nu: usize) -> Result<f64> {
    let (m, n) = ordered(mu, nu)?;
    let d = m * n;
    Ok(8.0 * (m * m - 1.0) * (n * n - 1.0) * (m + n) * (d - 5.0)
        / ((d + 5.0) * (d + 4.0) * (d + 3.0) * (d + 2.0) * (d + 1.0).powi(3)))
}

/// Mean `a`, variance `b` and third cumulant `c` of the linear entropy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CumulantTriple {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Cumulants of `S_L = beta (1 - R)`, `beta = mu / (mu - 1)`.
pub fn linear_entropy_cumulants(mu: usize, nu: usize) -> Result<CumulantTriple> {
    let (m, n) = ordered(mu, nu)?;
    ensure_arg!(m >= 2.0, "linear entropy needs both dimensions at least 2, got ({mu}, {nu})");
    let beta = m / (m - 1.0);
    Ok(CumulantTriple {
        a: beta * (m - 1.0) * (n - 1.0) / (m * n + 1.0),
        b: beta * beta * purity_variance(mu, nu)?,
        c: -beta.powi(3) * purity_third_cumulant(mu, nu)?,
    })
}

fn check_unit(s: f64) -> Result<()> {
    ensure_arg!((0.0..=1.0).contains(&s), "linear entropy {s} outside [0, 1]");
    Ok(())
}

/// Density of `S_L` obtained by truncating its cumulant expansion after the
/// third order,
///
/// ```text
/// |2/c|^{1/3} exp[b³/(3c²) + b(s-a)/c] Ai[(2/c)^{1/3} (s - a + b²/(2c))]
/// ```
///
/// where the cube root of a negative `c` is the negative real root.
///
/// The truncated expansion is not a true density: past the upper edge of the
/// bulk it follows the oscillating tail of `Ai` and can dip below zero. The
/// signed value is returned so that the approximation keeps its unit
/// integral.
pub fn airy_pdf_from_cumulants(s: f64, k: &CumulantTriple) -> Result<f64> {
    check_unit(s)?;
    let CumulantTriple { a, b, c } = *k;
    ensure_arg!(c != 0.0 && b > 0.0, "the Airy density needs b > 0 and c != 0");
    let scale = (2.0 / c).cbrt();
    let z = scale * (s - a + b * b / (2.0 * c));
    let mut exponent = b.powi(3) / (3.0 * c * c) + b * (s - a) / c;
    if z > 0.0 {
        // Ai(z) = e^{-ζ} times the scaled value; fold e^{-ζ} into the exponent.
        exponent -= 2.0 / 3.0 * z.powf(1.5);
    }
    Ok(scale.abs() * exponent.exp() * airy_ai_scaled(z))
}

/// Airy-approximation density of `S_L` for dimensions `(mu, nu)`.
pub fn airy_pdf(s: f64, mu: usize, nu: usize) -> Result<f64> {
    airy_pdf_from_cumulants(s, &linear_entropy_cumulants(mu, nu)?)
}

/// Normal density with the exact mean and variance of `S_L`.
pub fn gaussian_pdf(s: f64, mu: usize, nu: usize) -> Result<f64> {
    let k = linear_entropy_cumulants(mu, nu)?;
    let normal = Normal::new(k.a, k.b.sqrt()).expect("positive variance");
    Ok(normal.pdf(s))
}

/// Exact density of `S_L` for `mu = 2`:
/// `2 Γ(nu + 1/2) / (sqrt(π) Γ(nu - 1)) sqrt(1 - s) s^{nu - 2}`.
pub fn exact_pdf_mu2(s: f64, nu: usize) -> Result<f64> {
    check_unit(s)?;
    ensure_arg!(nu >= 2, "the two-dimensional law needs nu >= 2, got {nu}");
    if s == 1.0 {
        return Ok(0.0);
    }
    let nu = nu as f64;
    if s == 0.0 {
        return Ok(if nu == 2.0 { 1.5 } else { 0.0 });
    }
    let ln_norm = std::f64::consts::LN_2 + ln_gamma(nu + 0.5) - 0.5 * std::f64::consts::PI.ln() - ln_gamma(nu - 1.0);
    Ok((ln_norm + (nu - 2.0) * s.ln()).exp() * (1.0 - s).sqrt())
}

/// Cumulative distribution of [`exact_pdf_mu2`]: the regularized incomplete
/// beta function `I_s(nu - 1, 3/2)`.
pub fn exact_cdf_mu2(s: f64, nu: usize) -> Result<f64> {
    check_unit(s)?;
    ensure_arg!(nu >= 2, "the two-dimensional law needs nu >= 2, got {nu}");
    Ok(beta_reg(nu as f64 - 1.0, 1.5, s))
}

fn qubit_count(dim: usize) -> Result<usize> {
    ensure_arg!(dim >= 2 && dim.is_power_of_two(), "dimension {dim} is not a power of two >= 2");
    Ok(dim.trailing_zeros() as usize)
}

/// Mean and variance of the Meyer–Wallach `Q` over random states of
/// dimension `dim = 2^N`.
pub fn q_moments(dim: usize, num_qubits: usize) -> Result<(f64, f64)> {
    let n = qubit_count(dim)?;
    ensure_arg!(n == num_qubits, "dimension {dim} does not match {num_qubits} qubits");
    let d = dim as f64;
    let mean = (d - 2.0) / (d + 1.0);
    let var = 6.0 * (d - 4.0) / ((d + 3.0) * (d + 2.0) * (d + 1.0) * n as f64)
        + 18.0 * d / ((d + 3.0) * (d + 2.0) * (d + 1.0).powi(2));
    Ok((mean, var))
}

/// Mean and variance of the `N`-tangle over random states of dimension
/// `dim = 2^N`.
pub fn tau_moments(dim: usize) -> Result<(f64, f64)> {
    qubit_count(dim)?;
    let d = dim as f64;
    Ok((2.0 / (d + 1.0), 4.0 * (d - 1.0) / ((d + 3.0) * (d + 1.0).powi(2))))
}

/// Unnormalized joint density of the Schmidt coefficients `p` of a random
/// `mu x nu` state: `prod_{i<j} (p_i - p_j)^2 prod_k p_k^{nu - mu}`.
pub fn schmidt_joint_density_unnormalized(p: &[f64], mu: usize, nu: usize) -> Result<f64> {
    ensure_arg!(p.len() == mu, "expected {mu} Schmidt coefficients, got {}", p.len());
    ensure_arg!(mu >= 1 && mu <= nu, "need 1 <= mu <= nu, got ({mu}, {nu})");
    ensure_arg!(p.iter().all(|&x| x > 0.0 && x <= 1.0), "Schmidt coefficients must lie in (0, 1]");
    let total: f64 = p.iter().sum();
    ensure_arg!((total - 1.0).abs() <= 1e-12, "Schmidt coefficients sum to {total}, not 1");
    let mut value = 1.0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            value *= (p[i] - p[j]).powi(2);
        }
        value *= p[i].powi((nu - mu) as i32);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Composite Simpson rule on `[lo, hi]`.
    fn simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64, intervals: usize) -> f64 {
        let h = (hi - lo) / intervals as f64;
        let mut sum = f(lo) + f(hi);
        for i in 1..intervals {
            sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(lo + i as f64 * h);
        }
        sum * h / 3.0
    }

    /// `∫_0^1 g(s) P(s) ds` for the mu = 2 law, after `s = 1 - t²` removes
    /// the square-root endpoint singularity.
    fn exact_mu2_expectation(g: impl Fn(f64) -> f64, nu: usize) -> f64 {
        simpson(|t| 2.0 * t * g(1.0 - t * t) * exact_pdf_mu2(1.0 - t * t, nu).unwrap(), 0.0, 1.0, 20_000)
    }

    #[test]
    fn two_by_two_values() {
        assert!((page_mean_entropy(2, 2).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((lubkin_mean_purity(2, 2).unwrap() - 0.8).abs() < 1e-15);
        assert!((purity_variance(2, 2).unwrap() - 3.0 / 175.0).abs() < 1e-15);
        assert!((purity_third_cumulant(2, 2).unwrap() + 2.0 / 2625.0).abs() < 1e-15);
        let k = linear_entropy_cumulants(2, 2).unwrap();
        assert!((k.a - 0.4).abs() < 1e-15);
        assert!((k.b - 72.0 / 1050.0).abs() < 1e-15);
        assert!((k.c - 8.0 * 2.0 / 2625.0).abs() < 1e-15);
    }

    #[test]
    fn trivial_subsystem() {
        assert_eq!(page_mean_entropy(1, 7).unwrap(), 0.0);
        assert_eq!(lubkin_mean_purity(1, 7).unwrap(), 1.0);
        assert_eq!(purity_variance(1, 7).unwrap(), 0.0);
        assert_eq!(purity_third_cumulant(5, 1).unwrap(), 0.0);
        assert!(linear_entropy_cumulants(1, 4).is_err());
        assert_eq!(page_mean_entropy(8, 2).unwrap(), page_mean_entropy(2, 8).unwrap());
    }

    #[test]
    fn mean_entropy_two_forms() {
        for (m, n) in [(2, 8), (4, 4), (16, 16), (3, 5)] {
            let k = linear_entropy_cumulants(m, n).unwrap();
            let alt = 1.0 - (m as f64 + 1.0) / ((m * n) as f64 + 1.0);
            assert!((k.a - alt).abs() < 1e-14);
        }
    }

    #[test]
    fn localized_away_from_maximal() {
        let k = linear_entropy_cumulants(16, 16).unwrap();
        assert!(k.b.sqrt() < 17.0 / 257.0);
    }

    #[test]
    fn exact_law_matches_cumulants() {
        for nu in [2, 3, 8, 32, 128] {
            let norm = exact_mu2_expectation(|_| 1.0, nu);
            assert!((norm - 1.0).abs() < 1e-8, "nu={nu} norm {norm}");
            let mean = exact_mu2_expectation(|s| s, nu);
            let var = exact_mu2_expectation(|s| (s - mean).powi(2), nu);
            let k3 = exact_mu2_expectation(|s| (s - mean).powi(3), nu);
            let k = linear_entropy_cumulants(2, nu).unwrap();
            assert!((mean - k.a).abs() < 1e-8 && (var - k.b).abs() < 1e-8 && (k3 - k.c).abs() < 1e-8, "nu={nu}");
        }
    }

    #[test]
    fn exact_law_special_points() {
        for i in 0..=20 {
            let s = i as f64 / 20.0;
            assert!((exact_pdf_mu2(s, 2).unwrap() - 1.5 * (1.0 - s).sqrt()).abs() < 1e-13);
        }
        assert_eq!(exact_pdf_mu2(1.0, 9).unwrap(), 0.0);
        assert!(exact_pdf_mu2(1.5, 9).is_err());
        assert!(exact_pdf_mu2(0.5, 1).is_err());
    }

    #[test]
    fn exact_cdf_is_the_integral_of_the_density() {
        for nu in [2, 8, 128] {
            for s in [0.3f64, 0.7, 0.95, 0.99] {
                let t0 = (1.0 - s).sqrt();
                let tail = simpson(|t| 2.0 * t * exact_pdf_mu2(1.0 - t * t, nu).unwrap(), 0.0, t0, 20_000);
                assert!((exact_cdf_mu2(s, nu).unwrap() - (1.0 - tail)).abs() < 1e-9, "nu={nu} s={s}");
            }
        }
    }

    #[test]
    fn airy_density_reference_points() {
        for ((m, n), want) in [((16, 16), 67.47889289834984), ((2, 8), 2.8942026056894172), ((4, 4), 4.128703270892033)] {
            let k = linear_entropy_cumulants(m, n).unwrap();
            let got = airy_pdf(k.a, m, n).unwrap();
            assert!((got / want - 1.0).abs() < 1e-7, "({m},{n}) {got} vs {want}");
        }
    }

    #[test]
    fn airy_density_normalization() {
        for (m, n) in [(8, 8), (8, 32), (16, 16), (16, 64), (32, 32)] {
            let total = simpson(|s| airy_pdf(s, m, n).unwrap(), 0.0, 1.0, 20_000);
            assert!((total - 1.0).abs() < 1e-3, "({m},{n}) integrates to {total}");
        }
    }

    #[test]
    fn airy_density_approaches_gaussian_shape() {
        let k = linear_entropy_cumulants(16, 16).unwrap();
        let airy = airy_pdf(k.a, 16, 16).unwrap();
        let gauss = gaussian_pdf(k.a, 16, 16).unwrap();
        assert!((airy / gauss - 1.0).abs() < 0.05);
    }

    #[test]
    fn moment_formulas() {
        let (qm, qv) = q_moments(4, 2).unwrap();
        assert!((qm - 0.4).abs() < 1e-15 && (qv - 72.0 / 1050.0).abs() < 1e-15);
        let (tm, tv) = tau_moments(4).unwrap();
        assert!((tm - 0.4).abs() < 1e-15 && (tv - 12.0 / 175.0).abs() < 1e-15);
        for n in 4..20 {
            let d = 1usize << n;
            assert!((1.0 - q_moments(d, n).unwrap().0) < 3.0 / d as f64);
        }
        assert!(q_moments(6, 2).is_err());
        assert!(q_moments(8, 2).is_err());
        assert!(tau_moments(12).is_err());
    }

    #[test]
    fn schmidt_density() {
        assert!((schmidt_joint_density_unnormalized(&[0.75, 0.25], 2, 2).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(schmidt_joint_density_unnormalized(&[0.25, 0.25, 0.5], 3, 4).unwrap(), 0.0);
        let v = schmidt_joint_density_unnormalized(&[0.75, 0.25], 2, 4).unwrap();
        assert!((v - 0.25 * (0.75f64 * 0.25).powi(2)).abs() < 1e-15);
        assert!(schmidt_joint_density_unnormalized(&[0.7, 0.2], 2, 2).is_err());
        assert!(schmidt_joint_density_unnormalized(&[1.0, 0.0], 2, 2).is_err());
    }
}
