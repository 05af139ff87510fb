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

use std::io::Write;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;

/// Writes `m` as CSV, one matrix row per line, each entry as a `re,im` pair.
pub fn write_matrix_csv<W: Write + ?Sized>(w: &mut W, m: &DMatrix<Complex64>) -> Result<()> {
    for i in 0..m.nrows() {
        let mut first = true;
        for z in m.row(i).iter() {
            if !first {
                write!(w, ",")?;
            }
            first = false;
            write!(w, "{},{}", z.re, z.im)?;
        }
        writeln!(w)?;
    }
    Ok(())
}
