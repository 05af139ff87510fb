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

//! CSV output with self-describing `#` header lines.

use std::io::Write;

use super::run::TimeSeriesRow;
use super::stats::Histogram;
use crate::error::Result;
use crate::measures::Measure;

/// Units and ordering conventions stated in every output.
pub const CONVENTIONS: &str =
    "von Neumann entropy in nats (natural log); entanglement of formation in bits (log base 2); qubit 1 is the most significant bit";

/// Comment lines written before the table.
#[derive(Clone, Debug, Default)]
pub struct CsvHeader {
    pub command: String,
    pub seed: Option<u64>,
    /// Further `key: value` lines.
    pub params: Vec<(String, String)>,
}

impl CsvHeader {
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), ..Self::default() }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn write<W: Write + ?Sized>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "# command: {}", self.command)?;
        if let Some(seed) = self.seed {
            writeln!(w, "# seed: {seed}")?;
        }
        writeln!(w, "# version: qbaker {}", crate::VERSION)?;
        writeln!(w, "# conventions: {CONVENTIONS}")?;
        for (k, v) in &self.params {
            writeln!(w, "# {k}: {v}")?;
        }
        Ok(())
    }
}

/// Writes `header` followed by a table with the given column names.
pub fn write_table<W, R, I>(w: &mut W, header: &CsvHeader, columns: &[&str], rows: I) -> Result<()>
where
    W: Write + ?Sized,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    header.write(w)?;
    let mut out = csv::Writer::from_writer(w);
    out.write_record(columns).map_err(csv_error)?;
    for row in rows {
        out.write_record(row).map_err(csv_error)?;
    }
    out.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> crate::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io.into(),
        other => crate::Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

/// `quantity,value` table.
pub fn write_key_values<W: Write + ?Sized>(w: &mut W, header: &CsvHeader, rows: &[(String, f64)]) -> Result<()> {
    write_table(w, header, &["quantity", "value"], rows.iter().map(|(k, v)| [k.clone(), v.to_string()]))
}

/// `bin_left,bin_right,count,density` table.
pub fn write_histogram<W: Write + ?Sized>(w: &mut W, header: &CsvHeader, hist: &Histogram) -> Result<()> {
    write_table(
        w,
        header,
        &["bin_left", "bin_right", "count", "density"],
        hist.rows().map(|(l, r, c, d)| [l.to_string(), r.to_string(), c.to_string(), d.to_string()]),
    )
}

/// One row per `(n, step)` with mean, std and stderr of every measure.
pub fn write_time_series<W: Write + ?Sized>(
    w: &mut W,
    header: &CsvHeader,
    measures: &[Measure],
    rows: &[TimeSeriesRow],
) -> Result<()> {
    let mut columns = vec!["n".to_string(), "step".to_string()];
    for m in measures {
        let base = if m.id().name() == "q" || m.id().name() == "tau" {
            m.id().name().to_string()
        } else {
            format!("{}[{}]", m.id().name(), m.target_label())
        };
        for stat in ["mean", "std", "stderr"] {
            columns.push(format!("{base}_{stat}"));
        }
    }
    let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
    write_table(
        w,
        header,
        &columns,
        rows.iter().map(|r| {
            let mut rec = vec![r.n.to_string(), r.step.to_string()];
            for s in &r.stats {
                rec.extend([s.mean.to_string(), s.std.to_string(), s.stderr.to_string()]);
            }
            rec
        }),
    )
}
