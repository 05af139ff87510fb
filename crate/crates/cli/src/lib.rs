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

//! Command-line front end: parses arguments, runs one experiment and writes
//! its CSV to stdout or `--out`.
//!
//! Exit codes: 0 on success, 2 on argument errors (including unknown
//! subcommands), 3 when a capacity limit is hit, 1 on I/O failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qbaker::baker::{baker_matrix, periodic_spectrum, write_matrix_csv, BakerMapConfig, Strategy};
use qbaker::ensembles::{
    airy_pdf, exact_pdf_mu2, gaussian_pdf, linear_entropy_cumulants, lubkin_mean_purity, page_mean_entropy,
    purity_third_cumulant, purity_variance, q_moments, tau_moments,
};
use qbaker::harness::{
    evolve_measures, max_bytes_from_env, pairwise_probability, ranking_report, sample_measures, saturation_average,
    write_histogram, write_key_values, write_table, write_time_series, CsvHeader, EnsembleRun, Histogram,
    InitialState, MapChoice, MomentSummary, StateSource,
};
use qbaker::measures::{Measure, MeasureId};
use qbaker::tensor::Partition;
use qbaker::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_ARGUMENT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qbaker", version = qbaker::VERSION, about = "Entanglement experiments with quantum baker's maps")]
struct Cli {
    /// Write the CSV here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form statistics of random states, or the S_L densities on a grid.
    Analytic(AnalyticArgs),
    /// Distribution of a measure over random or baked states.
    Sample(SampleArgs),
    /// Ensemble statistics of measures under repeated baking.
    Evolve(EvolveArgs),
    /// Probability that a pair of qubits is entangled.
    Pairwise(PairwiseArgs),
    /// Long-time average of a measure under baking.
    Saturation(SaturationArgs),
    /// Maps ordered by entangling power.
    Ranking(RankingArgs),
    /// Eigenpairs of the non-entangling map B_{N,N}.
    Spectrum(SpectrumArgs),
    /// Dense unitary of B_{N,n} as re,im pairs.
    MapMatrix(MapMatrixArgs),
}

#[derive(Debug, Args)]
struct AnalyticArgs {
    #[arg(long)]
    mu: usize,
    #[arg(long)]
    nu: usize,
    /// Tabulate the Airy, Gaussian and (mu = 2) exact densities at this many
    /// points of [0, 1] instead of the summary.
    #[arg(long)]
    pdf_points: Option<usize>,
}

#[derive(Debug, Args)]
struct Target {
    /// Kept qubits for bipartite measures, e.g. `1-4` or `1,3,5`.
    #[arg(long)]
    partition: Option<String>,
    /// Qubit pair for concurrence measures, e.g. `1,8`.
    #[arg(long)]
    pair: Option<String>,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long)]
    qubits: usize,
    /// purity, slin, svn, c, concurrence, eof, q or tau.
    #[arg(long, default_value = "slin")]
    measure: String,
    #[command(flatten)]
    target: Target,
    /// `haar` or `baked:<n>:<steps>` (random product states after baking).
    #[arg(long, default_value = "haar")]
    source: String,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 100)]
    bins: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct EvolveArgs {
    #[arg(long)]
    qubits: usize,
    /// Position bits of the map, or `all`.
    #[arg(long)]
    n: String,
    /// `product`, `max-entangled-half` or `basis:<bits>`.
    #[arg(long, default_value = "product")]
    initial: String,
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// One or more measures, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "slin")]
    measure: Vec<String>,
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct PairwiseArgs {
    #[arg(long)]
    qubits: usize,
    #[arg(long)]
    pair: Option<String>,
    #[arg(long, default_value = "haar")]
    source: String,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SaturationArgs {
    #[arg(long)]
    qubits: usize,
    /// Position bits of the map, or `all`.
    #[arg(long, default_value = "all")]
    n: String,
    #[arg(long, default_value_t = 512)]
    stride: usize,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4000)]
    samples: usize,
    #[arg(long, default_value = "q")]
    measure: String,
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct RankingArgs {
    #[arg(long, default_value_t = 8)]
    qubits: usize,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// First and last step of the averaging window.
    #[arg(long, default_value = "200,500")]
    window: String,
    /// Kept qubits; defaults to the first half of the register.
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long)]
    qubits: usize,
}

#[derive(Debug, Args)]
struct MapMatrixArgs {
    #[arg(long)]
    qubits: usize,
    #[arg(long)]
    n: usize,
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Argument(format!("pair must look like `1,8`, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_window(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Argument(format!("window must look like `200,500`, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn bind_measure(name: &str, qubits: usize, target: &Target) -> Result<Measure> {
    let id: MeasureId = name.parse()?;
    let partition = target.partition.as_deref().map(|p| Partition::parse(qubits, p)).transpose()?;
    let pair = target.pair.as_deref().map(parse_pair).transpose()?;
    Measure::new(id, qubits, partition, pair)
}

fn analytic(args: &AnalyticArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let (mu, nu) = (args.mu, args.nu);
    let header = header.param("mu", mu).param("nu", nu);
    if let Some(points) = args.pdf_points {
        if points < 2 {
            return Err(Error::Argument("--pdf-points must be at least 2".into()));
        }
        let rows = (0..points)
            .map(|i| {
                let s = i as f64 / (points - 1) as f64;
                let exact = if mu.min(nu) == 2 { exact_pdf_mu2(s, mu.max(nu))?.to_string() } else { String::new() };
                Ok(vec![s.to_string(), airy_pdf(s, mu, nu)?.to_string(), gaussian_pdf(s, mu, nu)?.to_string(), exact])
            })
            .collect::<Result<Vec<_>>>()?;
        return write_table(w, &header, &["s", "airy", "gaussian", "exact_mu2"], rows);
    }
    let k = linear_entropy_cumulants(mu, nu)?;
    let small = mu.min(nu) as f64;
    let mut rows = vec![
        ("page_mean_entropy".to_string(), page_mean_entropy(mu, nu)?),
        ("mean_purity".to_string(), lubkin_mean_purity(mu, nu)?),
        ("purity_variance".to_string(), purity_variance(mu, nu)?),
        ("purity_third_cumulant".to_string(), purity_third_cumulant(mu, nu)?),
        ("beta".to_string(), small / (small - 1.0)),
        ("a".to_string(), k.a),
        ("b".to_string(), k.b),
        ("c".to_string(), k.c),
    ];
    let dim = mu * nu;
    if dim.is_power_of_two() {
        let qubits = dim.trailing_zeros() as usize;
        let (qm, qv) = q_moments(dim, qubits)?;
        let (tm, tv) = tau_moments(dim)?;
        rows.extend([
            ("q_mean".to_string(), qm),
            ("q_variance".to_string(), qv),
            ("tau_mean".to_string(), tm),
            ("tau_variance".to_string(), tv),
        ]);
    }
    write_key_values(w, &header, &rows)
}

fn sample(args: &SampleArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let measure = bind_measure(&args.measure, args.qubits, &args.target)?;
    let source: StateSource = args.source.parse()?;
    qbaker::harness::check_capacity(args.qubits, 1, max_bytes_from_env()?)?;
    let values = sample_measures(args.qubits, source, std::slice::from_ref(&measure), args.samples, args.seed)?;
    let (lo, hi) = match measure.id() {
        MeasureId::VonNeumann => (0.0, (measure.partition().unwrap().mu() as f64).ln()),
        id => id.range(),
    };
    let mut hist = Histogram::new(lo, hi, args.bins)?;
    values[0].iter().for_each(|&v| hist.add(v));
    let mut header = header
        .seed(args.seed)
        .param("samples", args.samples)
        .param("measure", measure.id())
        .param("target", measure.target_label())
        .param("source", source);
    if let Ok(m) = MomentSummary::from_samples(&values[0]) {
        header = header
            .param("mean", format!("{} +/- {}", m.mean, m.mean_se))
            .param("variance", format!("{} +/- {}", m.variance, m.variance_se))
            .param("third_cumulant", format!("{} +/- {}", m.third_cumulant, m.third_cumulant_se));
    }
    write_histogram(w, &header, &hist)
}

fn evolve(args: &EvolveArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let measures =
        args.measure.iter().map(|m| bind_measure(m, args.qubits, &args.target)).collect::<Result<Vec<_>>>()?;
    let run = EnsembleRun {
        num_qubits: args.qubits,
        map: args.n.parse()?,
        steps: args.steps,
        samples: args.samples,
        initial: args.initial.parse::<InitialState>()?,
        measures,
        seed: args.seed,
        max_bytes: max_bytes_from_env()?,
    };
    let rows = evolve_measures(&run)?;
    let header = header.seed(args.seed).param("samples", args.samples).param("initial", &run.initial);
    write_time_series(w, &header, &run.measures, &rows)
}

fn pairwise(args: &PairwiseArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let pair = args.pair.as_deref().map(parse_pair).transpose()?.unwrap_or((1, args.qubits));
    let source: StateSource = args.source.parse()?;
    let r = pairwise_probability(args.qubits, args.samples, pair, args.seed, source)?;
    let header = header
        .seed(args.seed)
        .param("samples", args.samples)
        .param("measure", "c")
        .param("pair", format!("{},{}", pair.0, pair.1))
        .param("source", source)
        .param("probability", r.probability)
        .param("mean_c", r.mean_c)
        .param("std_c", r.std_c);
    write_histogram(w, &header, &r.histogram)
}

fn saturation(args: &SaturationArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let measure = bind_measure(&args.measure, args.qubits, &args.target)?;
    let maps: MapChoice = args.n.parse()?;
    let max_bytes = max_bytes_from_env()?;
    let rows = maps
        .position_bits(args.qubits)
        .into_iter()
        .map(|n| {
            let r = saturation_average(n, args.stride, args.count, args.samples, args.seed, &measure, max_bytes)?;
            Ok([r.n.to_string(), r.value.to_string(), r.stderr.to_string()])
        })
        .collect::<Result<Vec<_>>>()?;
    let header = header
        .seed(args.seed)
        .param("samples", args.samples)
        .param("measure", measure.id())
        .param("target", measure.target_label())
        .param("iterates", format!("{} x k for k = 1..{}", args.stride, args.count));
    write_table(w, &header, &["n", "value", "stderr"], rows)
}

fn ranking(args: &RankingArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let partition = match &args.partition {
        Some(p) => Partition::parse(args.qubits, p)?,
        None => Partition::range(args.qubits, 1, (args.qubits / 2).max(1))?,
    };
    let window = parse_window(&args.window)?;
    let r = ranking_report(args.samples, window, args.seed, &partition, max_bytes_from_env()?)?;
    let header = header
        .seed(args.seed)
        .param("samples", args.samples)
        .param("measure", "slin")
        .param("partition", &partition)
        .param("window", format!("{}..={}", window.0, window.1));
    let rows = r.entries.iter().enumerate().map(|(i, e)| {
        [(i + 1).to_string(), e.n.to_string(), e.mean.to_string(), e.stderr.to_string()]
    });
    write_table(w, &header, &["rank", "n", "mean", "stderr"], rows)
}

fn spectrum(args: &SpectrumArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let pairs = periodic_spectrum(args.qubits)?;
    let header = header.param("qubits", args.qubits).param("eigenvalue", format!("exp(i pi k / {})", 2 * args.qubits));
    let rows = pairs.iter().map(|p| {
        [
            p.root_index.to_string(),
            p.eigenvalue.re.to_string(),
            p.eigenvalue.im.to_string(),
            p.period.to_string(),
            p.string_label(),
        ]
    });
    write_table(w, &header, &["k", "eigenvalue_re", "eigenvalue_im", "period", "string"], rows)
}

fn map_matrix(args: &MapMatrixArgs, header: CsvHeader, w: &mut dyn Write) -> Result<()> {
    let cfg = BakerMapConfig::new(args.qubits, args.n, Strategy::Dense)?;
    let m = baker_matrix(&cfg)?;
    header
        .param("qubits", args.qubits)
        .param("n", args.n)
        .param("layout", "one matrix row per line, each entry as re,im")
        .write(w)?;
    write_matrix_csv(w, &m)
}

fn execute(cli: &Cli, command_line: String, w: &mut dyn Write) -> Result<()> {
    let header = CsvHeader::new(command_line);
    match &cli.command {
        Command::Analytic(a) => analytic(a, header, w),
        Command::Sample(a) => sample(a, header, w),
        Command::Evolve(a) => evolve(a, header, w),
        Command::Pairwise(a) => pairwise(a, header, w),
        Command::Saturation(a) => saturation(a, header, w),
        Command::Ranking(a) => ranking(a, header, w),
        Command::Spectrum(a) => spectrum(a, header, w),
        Command::MapMatrix(a) => map_matrix(a, header, w),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) => EXIT_ARGUMENT,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Io(_) => EXIT_IO,
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code. CSV goes to `out` unless `--out` names a file; messages go to `err`.
pub fn dispatch<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let command_line = std::iter::once("qbaker").chain(argv.iter().skip(1).map(String::as_str)).collect::<Vec<_>>().join(" ");
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(Error::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            execute(&cli, command_line, &mut w)?;
            w.flush()?;
            Ok(())
        }),
        None => execute(&cli, command_line, out).and_then(|_| out.flush().map_err(Error::from)),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "qbaker: {e}");
            exit_code(&e)
        }
    }
}
