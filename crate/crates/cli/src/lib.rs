//! Command-line front end for the `dcx` complexity toolkit.

mod targets;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dcx_core::cartpole::{self, CartPoleParams, RolloutConfig, Variant};
use dcx_core::datasets::{self, LabeledImageDataset, Split};
use dcx_core::descriptor::{self, DomainDescriptor};
use dcx_core::games::{self, GridGameSpec};
use dcx_core::metrics;
use dcx_core::report::{self, ComplexityReport};
use dcx_core::{Direction, Error, MeasureFamily, MeasureResult, Provenance};

pub use targets::IRIS_TABLE;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MEASURE_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dcx", version, about = "Dimensionality, sparsity and diversity of task domains")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Master seed for stochastic measures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// k-in-a-row board games.
    Game(GameArgs),
    /// Analyze a domain descriptor file or a bundled descriptor by name.
    Descriptor {
        /// Path to a JSON descriptor, or one of the bundled names.
        source: String,
    },
    /// Cart-pole simulator measures.
    Cartpole(CartpoleArgs),
    /// Image and tabular dataset measures.
    Dataset(DatasetArgs),
    /// Compare two JSON reports measure by measure.
    Compare { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GamePreset {
    Ttt,
    Qubic,
    Custom,
}

#[derive(Debug, Args)]
struct GameArgs {
    #[arg(value_enum)]
    preset: GamePreset,
    #[arg(long)]
    side: Option<u32>,
    #[arg(long)]
    dims: Option<u32>,
    #[arg(long)]
    plies: Option<u32>,
    #[arg(long)]
    win: Option<u32>,
    /// Average game length for the game-tree estimate.
    #[arg(long)]
    length: Option<u64>,
    /// Skip exhaustive enumeration.
    #[arg(long)]
    no_enumerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    #[value(name = "2d")]
    TwoD,
    #[value(name = "2dg")]
    TwoDG,
    #[value(name = "3d")]
    ThreeD,
}

impl VariantArg {
    fn variant(self) -> Variant {
        match self {
            VariantArg::TwoD => Variant::TwoD,
            VariantArg::TwoDG => Variant::TwoDG,
            VariantArg::ThreeD => Variant::ThreeD,
        }
    }

    fn key(self) -> &'static str {
        match self {
            VariantArg::TwoD => "2d",
            VariantArg::TwoDG => "2dg",
            VariantArg::ThreeD => "3d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CartMeasure {
    Table,
    Limit,
    Sparsity,
    Entropy,
}

#[derive(Debug, Args)]
struct CartpoleArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::TwoD)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = CartMeasure::Table)]
    measure: CartMeasure,
    /// Sample count for sparsity and rollout entropy.
    #[arg(long)]
    samples: Option<u64>,
    /// Trials for the constant-action limit.
    #[arg(long, default_value_t = cartpole::DEFAULT_LIMIT_TRIALS)]
    trials: u64,
    /// Histogram bins for rollout entropy.
    #[arg(long, default_value_t = 256)]
    bins: usize,
    /// Use this limit for sparsity instead of simulating it.
    #[arg(long)]
    limit: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DatasetName {
    Mnist,
    Cifar10,
    Iris,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DatasetMeasure {
    All,
    Dimensionality,
    Sparsity,
    Gini,
    Entropy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Raw,
    Binarized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SplitArg {
    Train,
    Test,
    All,
}

impl SplitArg {
    fn split(self) -> Split {
        match self {
            SplitArg::Train => Split::Train,
            SplitArg::Test => Split::Test,
            SplitArg::All => Split::All,
        }
    }
}

#[derive(Debug, Args)]
struct DatasetArgs {
    #[arg(value_enum)]
    name: DatasetName,
    #[arg(long, value_enum, default_value_t = DatasetMeasure::All)]
    measure: DatasetMeasure,
    /// Pixel mode; MNIST defaults to binarized, CIFAR-10 to raw.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long)]
    data_dir: Option<PathBuf>,
    /// Images used for per-image measures. Defaults to both splits, except
    /// MNIST entropy, which uses the training split.
    #[arg(long, value_enum)]
    split: Option<SplitArg>,
    /// Fetch missing files into the data directory.
    #[arg(long, requires = "data_dir")]
    download: bool,
    /// Expected digest of a downloaded file, as FILE=HEX. Repeatable.
    #[arg(long = "sha256", value_name = "FILE=HEX")]
    sha256: Vec<String>,
    /// Also write per-class boxplot statistics as CSV here.
    #[arg(long)]
    class_csv: Option<PathBuf>,
}

/// Parses `argv` (including the program name) and runs the command,
/// writing the result to `stdout` unless `--out` is given.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match &cli.out {
            Some(path) => match fs::write(path, text) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    EXIT_MEASURE_ERROR
                }
            },
            None => {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Measure(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_MEASURE_ERROR
        }
    }
}

enum Failure {
    Usage(String),
    Measure(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Measure(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn execute(cli: &Cli) -> Outcome<String> {
    if let Command::Compare { a, b } = &cli.command {
        return compare(cli.format, a, b);
    }
    let (report, class_csv) = match &cli.command {
        Command::Game(args) => (game(args)?, None),
        Command::Descriptor { source } => (descriptor(source)?, None),
        Command::Cartpole(args) => (cartpole(args, cli.seed)?, None),
        Command::Dataset(args) => (dataset(args)?, args.class_csv.as_deref()),
        Command::Compare { .. } => unreachable!(),
    };
    let report = report.seal();
    if let Some(path) = class_csv {
        fs::write(path, report.summaries_csv()?).map_err(Error::from)?;
    }
    Ok(match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    })
}

fn game(args: &GameArgs) -> Outcome<ComplexityReport> {
    let (spec, name, default_length) = match args.preset {
        GamePreset::Ttt => (GridGameSpec::tic_tac_toe(), "tic-tac-toe", 9),
        GamePreset::Qubic => (GridGameSpec::qubic(), "qubic", 20),
        GamePreset::Custom => {
            let (Some(side), Some(dims)) = (args.side, args.dims) else {
                return Err(Failure::Usage("custom games need --side and --dims".into()));
            };
            let cells = u64::from(side).checked_pow(dims).unwrap_or(u64::MAX);
            let plies = args.plies.unwrap_or(cells.min(u64::from(u32::MAX)) as u32);
            let spec = GridGameSpec::new(side, dims, plies, args.win.unwrap_or(side))?;
            (spec, "custom", u64::from(spec.max_plies))
        }
    };
    if args.preset != GamePreset::Custom
        && (args.side.is_some() || args.dims.is_some() || args.plies.is_some() || args.win.is_some())
    {
        return Err(Failure::Usage(
            "--side/--dims/--plies/--win apply only to custom games".into(),
        ));
    }
    let length = args.length.unwrap_or(default_length);
    let measures = games::analyze(&spec, length, !args.no_enumerate)?;
    let key = match args.preset {
        GamePreset::Ttt => "ttt",
        GamePreset::Qubic => "qubic",
        GamePreset::Custom => "",
    };
    let mut notes = vec![format!(
        "{}^{} board, {} plies, {} in a row, average game length {length}",
        spec.side, spec.dims, spec.max_plies, spec.win_length
    )];
    if spec.cells() > games::ENUMERATION_CELL_LIMIT && !args.no_enumerate {
        notes.push(format!(
            "enumeration skipped above {} cells",
            games::ENUMERATION_CELL_LIMIT
        ));
    }
    Ok(ComplexityReport::new(name, measures)
        .with_targets(targets::game(key))
        .with_notes(notes))
}

fn load_descriptor(source: &str) -> Outcome<DomainDescriptor> {
    let path = Path::new(source);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(Error::from)?;
        return Ok(DomainDescriptor::from_json(&text)?);
    }
    descriptor::bundled(source).ok_or_else(|| {
        Failure::Usage(format!(
            "{source} is neither a file nor a bundled descriptor ({})",
            descriptor::bundled_names().collect::<Vec<_>>().join(", ")
        ))
    })
}

fn descriptor(source: &str) -> Outcome<ComplexityReport> {
    let d = load_descriptor(source)?;
    let measures = descriptor::analyze(&d)?;
    Ok(ComplexityReport::new(d.name.clone(), measures)
        .with_targets(targets::descriptor(&d.name))
        .with_notes(d.notes.clone()))
}

fn cartpole(args: &CartpoleArgs, seed: u64) -> Outcome<ComplexityReport> {
    let variant = args.variant.variant();
    let params = CartPoleParams::standard(variant);
    let sparsity_samples = args.samples.unwrap_or(cartpole::DEFAULT_SPARSITY_SAMPLES);
    let rollout = RolloutConfig {
        seed,
        sample_count: args.samples.unwrap_or(RolloutConfig::default().sample_count),
        bin_count: args.bins,
        ..RolloutConfig::default()
    };
    let limit = |trials| -> Outcome<MeasureResult> {
        Ok(match args.limit {
            Some(l) => MeasureResult::new(
                "constant_action_limit",
                MeasureFamily::Sparsity,
                l,
                "supplied on the command line",
                Provenance::Analytic,
            )
            .with_direction(Direction::Unordered),
            None => cartpole::limit_measure(&params, trials, seed)?,
        })
    };
    let mut measures = Vec::new();
    match args.measure {
        CartMeasure::Table => {
            let d = descriptor::bundled(cartpole::descriptor_name(variant)).expect("bundled");
            measures.extend(descriptor::analyze(&d)?);
            let l = limit(args.trials)?;
            let s = cartpole::sparsity_measure(variant, l.value, sparsity_samples, seed)?;
            measures.push(l);
            measures.push(s);
            measures.extend(cartpole::entropy_measures(&params, &rollout)?);
        }
        CartMeasure::Limit => measures.push(limit(args.trials)?),
        CartMeasure::Sparsity => {
            let l = limit(args.trials)?;
            let s = cartpole::sparsity_measure(variant, l.value, sparsity_samples, seed)?;
            measures.push(l);
            measures.push(s);
        }
        CartMeasure::Entropy => measures.extend(cartpole::entropy_measures(&params, &rollout)?),
    }
    let mut t = targets::cartpole(args.variant.key());
    if args.measure == CartMeasure::Table {
        t.extend(targets::descriptor(cartpole::descriptor_name(variant)));
    }
    let mut notes = vec![format!(
        "gravity {} m/s^2, cart {} kg, pole {} kg, half-length {} m, force {} N, timestep {} s",
        params.gravity,
        params.cart_mass,
        params.pole_mass,
        params.pole_half_length,
        params.force_magnitude,
        params.timestep
    )];
    if variant == Variant::ThreeD {
        notes.push(
            "3D is two independent planar cart-poles sharing parameters; balls enter only the \
             descriptor arithmetic"
                .into(),
        );
    }
    let mut report = ComplexityReport::new(variant.label(), measures)
        .with_targets(t)
        .with_notes(notes);
    report.seed = Some(seed);
    Ok(report)
}

fn parse_digests(pairs: &[String]) -> Outcome<Vec<(String, String)>> {
    pairs
        .iter()
        .map(|p| {
            p.split_once('=')
                .map(|(f, h)| (f.to_string(), h.to_string()))
                .ok_or_else(|| Failure::Usage(format!("--sha256 expects FILE=HEX, got {p}")))
        })
        .collect()
}

fn digest_for<'a>(digests: &'a [(String, String)], file: &str) -> Outcome<&'a str> {
    digests
        .iter()
        .find(|(f, _)| f == file)
        .map(|(_, h)| h.as_str())
        .ok_or_else(|| Failure::Usage(format!("--download needs --sha256 {file}=HEX")))
}

fn download(args: &DatasetArgs, dir: &Path) -> Outcome<()> {
    let digests = parse_digests(&args.sha256)?;
    match args.name {
        DatasetName::Mnist => {
            for file in datasets::MNIST_FILES {
                let url = format!("{}{file}", datasets::MNIST_BASE_URL);
                datasets::fetch(&url, digest_for(&digests, file)?, dir)?;
            }
        }
        DatasetName::Cifar10 => {
            if dir.join("cifar-10-batches-bin").is_dir() {
                return Ok(());
            }
            let file = datasets::CIFAR10_URL.rsplit('/').next().expect("url has a file");
            let archive = datasets::fetch(datasets::CIFAR10_URL, digest_for(&digests, file)?, dir)?;
            datasets::unpack_tar_gz(&archive, dir)?;
        }
        DatasetName::Iris => {}
    }
    Ok(())
}

fn dataset(args: &DatasetArgs) -> Outcome<ComplexityReport> {
    if args.name == DatasetName::Iris {
        return iris(args);
    }
    if let (true, Some(dir)) = (args.download, &args.data_dir) {
        download(args, dir)?;
    }
    let is_mnist = args.name == DatasetName::Mnist;
    let mode = args.mode.unwrap_or(if is_mnist { Mode::Binarized } else { Mode::Raw });
    let binarized = mode == Mode::Binarized;
    let domain = if is_mnist { "mnist" } else { "cifar10" };
    let wants = |m| args.measure == DatasetMeasure::All || args.measure == m;

    let mut measures = Vec::new();
    let mut summaries = Vec::new();
    let mut notes = vec![format!("pixel mode {}", if binarized { "binarized (pixel > 0)" } else { "raw 8-bit" })];
    let Some(dir) = &args.data_dir else {
        if args.measure != DatasetMeasure::Dimensionality {
            return Err(Failure::Usage(format!("--data-dir is required for {domain} pixel measures")));
        }
        let meta = canonical_meta(is_mnist, binarized);
        notes.push("dataset sizes are the published totals; no files were read".into());
        measures.push(metrics::dimensionality_measure(&meta)?);
        return Ok(ComplexityReport::new(domain, measures)
            .with_targets(targets::dataset(domain))
            .with_notes(notes));
    };
    let load = |split: Split| -> Outcome<LabeledImageDataset> {
        let ds = if is_mnist {
            datasets::load_mnist(dir, split)?
        } else {
            datasets::load_cifar10(dir, split)?
        };
        Ok(if binarized { datasets::binarize(&ds, 0)? } else { ds })
    };
    if binarized && !is_mnist {
        return Err(Failure::Usage("binarized mode needs single-channel images".into()));
    }
    let all_split = args.split.map_or(Split::All, SplitArg::split);
    let mut all: Option<LabeledImageDataset> = None;
    if wants(DatasetMeasure::Dimensionality) || wants(DatasetMeasure::Sparsity) || wants(DatasetMeasure::Gini) {
        let ds = load(all_split)?;
        if wants(DatasetMeasure::Dimensionality) {
            measures.push(metrics::dimensionality_measure(&ds.meta())?);
        }
        if wants(DatasetMeasure::Sparsity) {
            let s = metrics::dataset_sparsity(&ds)?;
            measures.extend(s.measures());
            summaries.push(s);
        }
        if wants(DatasetMeasure::Gini) {
            for s in metrics::dataset_channel_gini(&ds)? {
                if s.excluded > 0 {
                    notes.push(format!("{}: {} all-zero images excluded", s.measure_name, s.excluded));
                }
                measures.extend(s.measures());
                summaries.push(s);
            }
        }
        all = Some(ds);
    }
    if wants(DatasetMeasure::Entropy) {
        let default = if is_mnist { Split::Train } else { Split::All };
        let entropy_split = args.split.map_or(default, SplitArg::split);
        let ds = match all {
            Some(ds) if entropy_split == all_split => ds,
            _ => load(entropy_split)?,
        };
        let s = metrics::dataset_entropy(&ds, binarized)?;
        measures.extend(s.measures());
        summaries.push(s);
    }
    Ok(ComplexityReport::new(domain, measures)
        .with_targets(targets::dataset(domain))
        .with_notes(notes)
        .with_summaries(summaries))
}

fn canonical_meta(is_mnist: bool, binarized: bool) -> datasets::DatasetMeta {
    let pixel_values = if binarized { 2 } else { 256 };
    if is_mnist {
        datasets::DatasetMeta {
            pixels: 784,
            channels: 1,
            classes: 10,
            pixel_values,
            images: 70_000,
        }
    } else {
        datasets::DatasetMeta {
            pixels: 1024,
            channels: 3,
            classes: 10,
            pixel_values,
            images: 60_000,
        }
    }
}

fn iris(args: &DatasetArgs) -> Outcome<ComplexityReport> {
    if !matches!(args.measure, DatasetMeasure::All | DatasetMeasure::Gini) {
        return Err(Failure::Usage("Iris supports only the gini measure".into()));
    }
    let ds = match &args.data_dir {
        Some(dir) => {
            let path = ["iris.data", "iris.csv"]
                .iter()
                .map(|f| dir.join(f))
                .find(|p| p.exists())
                .ok_or_else(|| Failure::Usage(format!("no iris.data or iris.csv in {}", dir.display())))?;
            datasets::parse_iris_csv(&fs::read_to_string(path).map_err(Error::from)?)?
        }
        None => datasets::bundled_iris(),
    };
    let measures = metrics::tabular_gini_table(&ds)?
        .into_iter()
        .map(|c| {
            MeasureResult::new(
                format!("gini.{}.{}", c.class_name, c.feature_name),
                MeasureFamily::Sparsity,
                c.gini,
                "sorted-ascending Gini index over the class's raw measurements",
                Provenance::Enumerated,
            )
        })
        .collect();
    Ok(ComplexityReport::new("iris", measures).with_targets(targets::dataset("iris")))
}

fn compare(format: Format, a: &Path, b: &Path) -> Outcome<String> {
    let read = |p: &Path| -> Outcome<ComplexityReport> {
        let text = fs::read_to_string(p).map_err(Error::from)?;
        Ok(ComplexityReport::from_json(&text)?)
    };
    let (ra, rb) = (read(a)?, read(b)?);
    let rows = report::compare(&ra, &rb)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Csv => report::comparison_csv(&rows)?,
        Format::Text => report::comparison_text(&ra, &rb, &rows),
    })
}
