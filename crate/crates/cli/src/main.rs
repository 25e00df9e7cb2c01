use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use coinmotif::params::{default_paa_dim, default_radius};
use coinmotif::{PipelineParams, Strategy};
use coinmotif_cli::bench::{bench_scaling, format_table, BenchConfig};
use coinmotif_cli::ingest::{expand_inputs, load_runs, read_runs};
use coinmotif_cli::run::{run, RunConfig};
use coinmotif_cli::CliError;

/// Discover frequent motifs in sensor time-series.
#[derive(Debug, Parser)]
#[command(name = "coinmotif", version)]
struct Args {
    /// Run files (CSV with a header row); glob patterns allowed, repeatable.
    #[arg(long, short)]
    input: Vec<String>,
    /// Sensor column to analyze; repeatable. Defaults to every non-time column.
    #[arg(long, short)]
    sensor: Vec<String>,
    /// Window length in samples.
    #[arg(long, short, default_value_t = 20)]
    window: usize,
    /// Cluster radius; defaults to sqrt(w/20).
    #[arg(long, short)]
    radius: Option<f64>,
    /// Clusters and motifs must have more members than this.
    #[arg(long, default_value_t = PipelineParams::DEFAULT_SUPPORT)]
    support: usize,
    /// Minimum max-min range of a z-normalized window.
    #[arg(long, default_value_t = 1.0)]
    filter: f64,
    /// Reduced dimension; defaults to w/2 capped at 10.
    #[arg(long)]
    paa_dim: Option<usize>,
    #[arg(long, value_enum, default_value = "birch")]
    accel: Accel,
    /// CF-tree branching factor.
    #[arg(long, default_value_t = 50)]
    branching: usize,
    /// LSH hash functions per bucket-id.
    #[arg(long, default_value_t = 3)]
    lsh_r: usize,
    /// LSH bucket-ids per point.
    #[arg(long, default_value_t = 5)]
    lsh_b: usize,
    /// LSH quantization width; defaults to 4R.
    #[arg(long)]
    lsh_width: Option<f64>,
    /// Seed for LSH planes and the synthetic benchmark series.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cluster subsequences in a random order drawn from this seed.
    #[arg(long)]
    shuffle_seed: Option<u64>,
    #[arg(long, default_value_t = 4)]
    sax_alphabet: usize,
    /// Start-time tolerance of the shifted-cluster test; defaults to d.
    #[arg(long)]
    shift_tolerance: Option<usize>,
    /// Share of the smaller cluster that must pair up, in percent.
    #[arg(long, default_value_t = 50.0)]
    shift_percent: f64,
    #[arg(long, default_value_t = 2.0)]
    shift_std: f64,
    /// Level split DBSCAN radius.
    #[arg(long, default_value_t = 0.5)]
    level_eps: f64,
    #[arg(long, default_value_t = 2)]
    level_min_pts: usize,
    /// Output directory for the catalog and plots.
    #[arg(long, short, default_value = "coinmotif-out")]
    out: PathBuf,
    /// Write one SVG per motif.
    #[arg(long)]
    plots: bool,
    /// Print the scaling benchmark instead of discovering motifs.
    #[arg(long)]
    bench: bool,
    /// Benchmark series lengths (comma separated).
    #[arg(long, value_delimiter = ',', default_values_t = [25_000usize, 50_000, 100_000, 200_000])]
    bench_lengths: Vec<usize>,
    /// Lengths at which the exhaustive search is timed (comma separated).
    #[arg(long, value_delimiter = ',', default_values_t = [1_250usize, 2_500, 5_000])]
    bench_oracle_lengths: Vec<usize>,
    /// Strategies to benchmark (comma separated).
    #[arg(long, value_enum, value_delimiter = ',', default_values = ["birch", "lsh"])]
    bench_accel: Vec<Accel>,
    #[arg(long, default_value_t = 5)]
    bench_repeats: usize,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum Accel {
    Basic,
    Birch,
    Lsh,
}

impl From<Accel> for Strategy {
    fn from(a: Accel) -> Self {
        match a {
            Accel::Basic => Strategy::Basic,
            Accel::Birch => Strategy::Birch,
            Accel::Lsh => Strategy::Lsh,
        }
    }
}

impl Args {
    fn params(&self) -> PipelineParams {
        let mut p = PipelineParams::for_window(self.window);
        p.radius = self.radius.unwrap_or_else(|| default_radius(self.window));
        p.support = self.support;
        p.min_deviation = self.filter;
        p.paa_dim = self.paa_dim.unwrap_or_else(|| default_paa_dim(self.window));
        p.sax_alphabet = self.sax_alphabet;
        p.lsh_seed = self.seed;
        p.strategy = self.accel.into();
        p.branching = self.branching;
        p.lsh.hashes_per_key = self.lsh_r;
        p.lsh.tables = self.lsh_b;
        p.lsh.width = self.lsh_width;
        p.shift.start_tolerance = self.shift_tolerance;
        p.shift.match_percent = self.shift_percent;
        p.shift.max_std_dev = self.shift_std;
        p.levels.eps = self.level_eps;
        p.levels.min_pts = self.level_min_pts;
        p.shuffle_seed = self.shuffle_seed;
        p
    }
}

fn bench(args: &Args, params: &PipelineParams) -> Result<(), CliError> {
    let source = if args.input.is_empty() {
        None
    } else {
        let paths = expand_inputs(&args.input)?;
        let sensor = match args.sensor.first() {
            Some(s) => s.clone(),
            None => read_runs(&paths[..1])?[0]
                .sensor_columns()
                .into_iter()
                .next()
                .ok_or_else(|| CliError::Data("no sensor columns".into()))?,
        };
        Some(load_runs(&paths, &sensor)?.into_iter().flat_map(|s| s.values).collect::<Vec<f64>>())
    };
    let config = BenchConfig {
        lengths: args.bench_lengths.clone(),
        strategies: args.bench_accel.iter().map(|&a| a.into()).collect(),
        oracle_lengths: args.bench_oracle_lengths.clone(),
        repeats: args.bench_repeats,
        seed: args.seed,
    };
    let rows = bench_scaling(&config, params, source.as_deref())?;
    print!("{}", format_table(&rows));
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let params = args.params();
    let result = if args.bench {
        bench(&args, &params)
    } else {
        run(&RunConfig {
            inputs: args.input.clone(),
            sensors: args.sensor.clone(),
            params,
            out: args.out.clone(),
            plots: args.plots,
        })
        .map(|outcome| {
            let motifs: usize = outcome.catalog.sensors.iter().map(|s| s.motifs.len()).sum();
            println!(
                "{} sensors, {} motifs -> {}",
                outcome.catalog.sensors.len(),
                motifs,
                outcome.catalog_path.display()
            );
        })
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
