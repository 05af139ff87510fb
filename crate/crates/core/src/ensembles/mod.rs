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

//! Random and special states, and closed-form statistics of random states.

mod airy;
mod analytic;
mod sampler;
mod special;

pub use airy::{airy_ai, airy_ai_scaled};
pub use analytic::{
    airy_pdf, airy_pdf_from_cumulants, exact_cdf_mu2, exact_pdf_mu2, gaussian_pdf, linear_entropy_cumulants,
    lubkin_mean_purity, page_mean_entropy, purity_third_cumulant, purity_variance, q_moments,
    schmidt_joint_density_unnormalized, tau_moments, CumulantTriple,
};
pub use sampler::{sample_haar_amplitudes, sample_haar_state, sample_product_state, SeededSampler};
pub use special::{make_special_state, SpecialState};
