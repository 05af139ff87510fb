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

//! Hermitian eigenproblems by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a
//! diagonal unitary and then applies the classical real Jacobi rotation, so
//! one step is `A <- J^† A J` with
//!
//! ```text
//! J = | c            s          |   (rows/cols p, q)
//!     | -s e^{-iφ}   c e^{-iφ}  |
//! ```
//!
//! Sweeps stop once the off-diagonal Frobenius norm drops below
//! `1e-14 · ||A||_F`, or after 100 sweeps.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{ensure_arg, Error, Result};

const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;
const HERMITIAN_TOL: f64 = 1e-10;
/// Largest matrix the solver accepts.
pub const MAX_EIGEN_DIM: usize = 1024;
/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as rounding noise and set to 0.
pub const PSD_CLAMP: f64 = 1e-10;
const PSD_REJECT: f64 = 1e-8;

/// Eigenvalues (ascending) and the matching unit eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

fn check_hermitian(m: &DMatrix<Complex64>) -> Result<()> {
    ensure_arg!(m.is_square(), "matrix is {}x{}, not square", m.nrows(), m.ncols());
    let n = m.nrows();
    ensure_arg!(n >= 1, "empty matrix");
    if n > MAX_EIGEN_DIM {
        return Err(Error::Capacity(format!("matrix dimension {n} exceeds {MAX_EIGEN_DIM}")));
    }
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    ensure_arg!(worst <= HERMITIAN_TOL, "matrix is not Hermitian (deviation {worst:e})");
    Ok(())
}

fn off_diagonal_norm(a: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(m: &DMatrix<Complex64>, want_vectors: bool) -> (Vec<f64>, Option<DMatrix<Complex64>>) {
    let n = m.nrows();
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    let mut a = DMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = want_vectors.then(|| DMatrix::<Complex64>::identity(n, n));
    let scale = a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_TOL * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 || mag <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / mag; // e^{iφ}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let jpp = Complex64::new(c, 0.0);
                let jpq = Complex64::new(s, 0.0);
                let jqp = -phase.conj() * s;
                let jqq = phase.conj() * c;

                // A <- A J (columns p, q)
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * jpp + aiq * jqp;
                    a[(i, q)] = aip * jpq + aiq * jqq;
                }
                // A <- J^† A (rows p, q)
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = jpp.conj() * apj + jqp.conj() * aqj;
                    a[(q, j)] = jpq.conj() * apj + jqq.conj() * aqj;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
                if let Some(v) = v.as_mut() {
                    for i in 0..n {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = vip * jpp + viq * jqp;
                        v[(i, q)] = vip * jpq + viq * jqq;
                    }
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)].re).collect(), v)
}

/// Real eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    check_hermitian(m)?;
    let (mut values, _) = jacobi(m, false);
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Full eigendecomposition `m = V diag(values) V^†`, values ascending.
pub fn hermitian_eigen(m: &DMatrix<Complex64>) -> Result<HermitianEigen> {
    check_hermitian(m)?;
    let (values, vectors) = jacobi(m, true);
    let vectors = vectors.expect("eigenvectors requested");
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let sorted = order.iter().map(|&i| values[i]).collect();
    let vectors = DMatrix::from_fn(vectors.nrows(), vectors.ncols(), |r, c| vectors[(r, order[c])]);
    Ok(HermitianEigen { values: sorted, vectors })
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero; anything below `-1e-8`
/// is rejected as not PSD.
pub fn hermitian_psd_sqrt(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let eig = hermitian_eigen(m)?;
    if let Some(&lowest) = eig.values.first() {
        ensure_arg!(lowest >= -PSD_REJECT, "matrix is not positive semidefinite (eigenvalue {lowest:e})");
    }
    let n = m.nrows();
    let roots: Vec<f64> = eig.values.iter().map(|&x| clamp_psd(x).sqrt()).collect();
    let v = &eig.vectors;
    Ok(DMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| v[(i, k)] * roots[k] * v[(j, k)].conj()).sum()
    }))
}

/// Clamps tiny negative eigenvalues of a nominally PSD matrix to zero.
pub(crate) fn clamp_psd(x: f64) -> f64 {
    if (-PSD_CLAMP..0.0).contains(&x) {
        0.0
    } else {
        x.max(0.0)
    }
}
