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

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{ensure_arg, Result};
use crate::tensor::{clamp_psd, hermitian_eigenvalues, hermitian_psd_sqrt, partial_trace, DensityMatrix, Partition, StateVector};

/// `(sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y)`.
///
/// `sigma_y ⊗ sigma_y` is real and anti-diagonal with signs `(-1, 1, 1, -1)`,
/// so the flip permutes `i -> 3 - i` and applies the sign product.
fn spin_flip(rho: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let sign = [-1.0, 1.0, 1.0, -1.0];
    DMatrix::from_fn(4, 4, |i, j| rho[(3 - i, 3 - j)].conj() * (sign[i] * sign[j]))
}

/// The unclipped concurrence `lambda_1 - lambda_2 - lambda_3 - lambda_4`,
/// with `lambda_i` the descending square roots of the eigenvalues of
/// `rho (sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y)`. Lies in `[-1/2, 1]`.
pub fn concurrence_c(rho: &DensityMatrix) -> Result<f64> {
    ensure_arg!(rho.dim() == 4, "concurrence needs a two-qubit density matrix, got dimension {}", rho.dim());
    // sqrt(rho) rho~ sqrt(rho) is Hermitian and shares the spectrum of rho rho~.
    let root = hermitian_psd_sqrt(rho.matrix())?;
    let x = &root * spin_flip(rho.matrix()) * &root;
    let x = DMatrix::from_fn(4, 4, |i, j| (x[(i, j)] + x[(j, i)].conj()) * 0.5);
    let mut lambda: Vec<f64> = hermitian_eigenvalues(&x)?.into_iter().map(|v| clamp_psd(v).max(0.0).sqrt()).collect();
    lambda.sort_by(|a, b| b.total_cmp(a));
    Ok(lambda[0] - lambda[1] - lambda[2] - lambda[3])
}

/// `max(0, c)`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    Ok(concurrence_c(rho)?.clamp(0.0, 1.0))
}

/// Binary entropy in bits, `-x log2 x - (1-x) log2 (1-x)`.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

/// Entanglement of formation in bits, `h((1 + sqrt(1 - C^2)) / 2)`.
pub fn entanglement_of_formation(rho: &DensityMatrix) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho)?))
}

pub(crate) fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt()))
}

/// Two-qubit reduction of `psi` onto qubits `pair` (1-based, in order).
pub fn pair_density(psi: &StateVector, pair: (usize, usize)) -> Result<DensityMatrix> {
    let n = psi.num_qubits();
    let (i, j) = pair;
    ensure_arg!(i != j, "pair qubits must differ, got ({i}, {j})");
    ensure_arg!((1..=n).contains(&i) && (1..=n).contains(&j), "pair ({i}, {j}) outside 1..={n}");
    if n == 2 {
        let rho = DensityMatrix::pure(psi);
        return Ok(if i < j { rho } else { swap_qubits(&rho) });
    }
    let rho = partial_trace(psi, &Partition::new(n, vec![i.min(j), i.max(j)])?)?;
    Ok(if i < j { rho } else { swap_qubits(&rho) })
}

fn swap_qubits(rho: &DensityMatrix) -> DensityMatrix {
    let p = [0, 2, 1, 3];
    let m = rho.matrix();
    DensityMatrix::from_matrix_unchecked(DMatrix::from_fn(4, 4, |i, j| m[(p[i], p[j])]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::test_util::random_state;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> StateVector {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::from_amplitudes(vec![c(s), c(0.0), c(0.0), c(s)]).unwrap()
    }

    #[test]
    fn reference_values() {
        let zero = DensityMatrix::pure(&StateVector::from_bitstring("00").unwrap());
        assert!(concurrence_c(&zero).unwrap().abs() < 1e-7);
        assert_eq!(entanglement_of_formation(&zero).unwrap(), 0.0);
        let b = DensityMatrix::pure(&bell());
        assert!((concurrence_c(&b).unwrap() - 1.0).abs() < 1e-12);
        assert!((entanglement_of_formation(&b).unwrap() - 1.0).abs() < 1e-12);
        assert!((concurrence_c(&DensityMatrix::maximally_mixed(4)).unwrap() + 0.5).abs() < 1e-12);
        assert!((eof_from_concurrence(0.6) - binary_entropy(0.9)).abs() < 1e-15);
        assert!(concurrence_c(&DensityMatrix::maximally_mixed(2)).is_err());
    }

    #[test]
    fn pure_two_qubit_states_match_closed_form() {
        // For a pure state C = 2|ad - bc|.
        for seed in 0..50 {
            let psi = random_state(2, seed);
            let a = psi.amplitudes();
            let want = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
            let got = concurrence_c(&DensityMatrix::pure(&psi)).unwrap();
            assert!((got - want).abs() < 1e-7, "{got} vs {want}");
        }
    }

    #[test]
    fn werner_family() {
        // p |Bell><Bell| + (1-p) I/4 has c = (3p - 1)/2.
        let b = DensityMatrix::pure(&bell());
        for k in 0..=10 {
            let p = k as f64 / 10.0;
            let m = b.matrix() * c(p) + DensityMatrix::maximally_mixed(4).matrix() * c(1.0 - p);
            let rho = DensityMatrix::new(m).unwrap();
            assert!((concurrence_c(&rho).unwrap() - (3.0 * p - 1.0) / 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn ranges_and_monotone_formation() {
        let mut pairs = Vec::new();
        for seed in 0..300 {
            let psi = random_state(4, seed);
            let rho = pair_density(&psi, (1, 4)).unwrap();
            let cc = concurrence_c(&rho).unwrap();
            assert!((-0.5 - 1e-12..=1.0 + 1e-12).contains(&cc));
            pairs.push((concurrence(&rho).unwrap(), entanglement_of_formation(&rho).unwrap()));
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        assert!(pairs.windows(2).all(|w| w[1].1 >= w[0].1 - 1e-15));
        assert!(pairs.iter().all(|&(_, e)| (0.0..=1.0).contains(&e)));
    }

    #[test]
    fn pair_order_and_validation() {
        let psi = StateVector::from_bitstring("011").unwrap();
        let rho = pair_density(&psi, (3, 1)).unwrap();
        // qubit 3 = 1, qubit 1 = 0 -> |10>
        assert_eq!(rho.matrix()[(2, 2)], c(1.0));
        assert!(pair_density(&psi, (2, 2)).is_err());
        assert!(pair_density(&psi, (0, 2)).is_err());
        let two = StateVector::from_bitstring("01").unwrap();
        assert_eq!(pair_density(&two, (2, 1)).unwrap().matrix()[(2, 2)], c(1.0));
    }
}
