//! Acceptance criteria, each checked at its stated tolerance. Prints one
//! PASS/FAIL/SKIP line per criterion followed by the individual checks.
//!
//! MNIST and CIFAR-10 criteria read `DCX_DATA_DIR` (MNIST files in
//! `$DCX_DATA_DIR/mnist`, CIFAR-10 batches in `$DCX_DATA_DIR/cifar10`) and
//! are skipped when the data is absent.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dcx_core::cartpole::{
    analytic_sparsity, constant_action_limit, rollout_entropy, Axes, CartPoleParams,
    RolloutConfig, Variant, SPARSITY_EPISODE_LENGTH,
};
use dcx_core::datasets::{self, bundled_iris, parse_idx, IdxTensor, Split};
use dcx_core::descriptor::{self, bundled, DomainDescriptor};
use dcx_core::games::{enumerate_states, ply_term, gtc_factorial, ssc_combinatorial, GridGameSpec};
use dcx_core::measures::{normalized_entropy, shannon_entropy, Cardinality, ProbDist};
use dcx_core::metrics;
use dcx_core::Error;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria whose stated target contradicts exact arithmetic. They are
/// still evaluated at the stated tolerance and still print FAIL.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    2,
    "log10(64!/44!) = 34.68 exactly, outside 34.07 +- 0.01",
)];

#[derive(Default)]
struct Checks {
    lines: Vec<(bool, String)>,
    skipped: Option<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, text: impl Into<String>) {
        self.lines.push((ok, text.into()));
    }

    fn near(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        self.check(
            (got - want).abs() <= tol,
            format!("{name}: {got:.6} vs {want} +- {tol}"),
        );
    }

    fn within(&mut self, name: &str, got: Duration, limit: Duration) {
        self.check(got < limit, format!("{name} runtime {got:.2?} < {limit:?}"));
    }

    fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _)| *ok)
    }
}

fn c1_tic_tac_toe() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let spec = GridGameSpec::tic_tac_toe();
    let ssc = ssc_combinatorial(&spec);
    let table = common::placements_bruteforce(9);
    let direct: u64 = (1..=9usize).map(|i| table[i.div_ceil(2)][i / 2]).sum();
    c.check(
        ssc.total == BigUint::from(6045u32) && direct == 6045,
        format!("combinatorial total {} (direct summation {direct}) = 6045", ssc.total),
    );
    c.near("log10 total", ssc.log10, 6045f64.log10(), 1e-12);
    c.check(ssc.log10.floor() == 3.0, format!("presented as {}", ssc.log10.floor()));
    let gtc = gtc_factorial(9, 9).unwrap();
    c.near("game tree log10(9!)", gtc, 5.559, 0.001);
    c.check(gtc.floor() == 5.0, format!("presented as {}", gtc.floor()));
    let (raw_oracle, sym_oracle) = common::tic_tac_toe_bruteforce();
    let raw = enumerate_states(&spec, false).unwrap();
    let sym = enumerate_states(&spec, true).unwrap();
    c.check(
        raw.total() == 5478 && raw.counts_per_ply == raw_oracle,
        format!("legal positions {} = 5478, per ply matches brute force", raw.total()),
    );
    c.check(
        sym.total() == 765 && sym.counts_per_ply == sym_oracle,
        format!("symmetry classes {} = 765, per ply matches brute force", sym.total()),
    );
    c.within("criterion", start.elapsed(), Duration::from_secs(5));
    c
}

fn c2_qubic() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let ssc = ssc_combinatorial(&GridGameSpec::qubic());
    c.near("combinatorial log10", ssc.log10, 30.0, 1.0);
    c.near("gtc_factorial(64, 20)", gtc_factorial(64, 20).unwrap(), 34.07, 0.01);
    c.within("criterion", start.elapsed(), Duration::from_secs(1));
    c
}

fn get(d: &DomainDescriptor, name: &str) -> f64 {
    descriptor::analyze(d)
        .unwrap()
        .into_iter()
        .find(|m| m.measure_name == name)
        .unwrap_or_else(|| panic!("{} lacks {name}", d.name))
        .value
}

fn c3_cartpole_tables() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    for (name, ssc, tree, game, branching) in [
        ("cartpole2d", 6.0, 30.4, 14.0, 2.0),
        ("cartpole2d-g", 6.0, 30.4, 14.0, 2.0),
        ("cartpole3d", 24.0, 60.3, 27.2, 4.0),
    ] {
        let d = bundled(name).unwrap();
        c.near(&format!("{name} state space"), get(&d, "state_space_complexity"), ssc, 0.05);
        c.near(&format!("{name} tree"), get(&d, "game_tree_complexity_uniform_sum"), tree, 0.05);
        c.near(&format!("{name} game space"), get(&d, "game_space_complexity"), game, 0.05);
        c.check(
            get(&d, "branching_factor") == branching,
            format!("{name} branching {branching}"),
        );
    }
    c.within("criterion", start.elapsed(), Duration::from_secs(1));
    c
}

fn component(d: &DomainDescriptor, name: &str) -> Cardinality {
    d.components
        .iter()
        .find(|x| x.name == name)
        .unwrap()
        .cardinality
        .clone()
}

fn c4_monopoly() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let d = bundled("monopoly").unwrap();
    let positions = component(&d, "player_positions").count_value();
    c.check(
        positions == BigUint::from(2_560_000u32),
        format!("40^4 = {positions} = 2.56 x 10^6"),
    );
    let ownership = component(&d, "property_ownership").count_value().to_f64().unwrap();
    c.check(
        (ownership / 3.73e19 - 1.0).abs() <= 0.01,
        format!("5^28 = {ownership:.4e} within 1% of 3.73e19"),
    );
    let full = descriptor::state_space_complexity(&d).unwrap();
    c.check(full > 72.0, format!("component product log10 {full:.4} > 72"));
    c.near("railroad strategy entropy", get(&d, "strategy_entropy.all_railroads"), 0.52, 0.01);
    c.near(
        "Boardwalk strategy entropy",
        get(&d, "strategy_entropy.boardwalk_and_park_place"),
        0.90,
        0.01,
    );
    c.within("criterion", start.elapsed(), Duration::from_secs(1));
    c
}

fn c5_pogo() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let d = bundled("pogo").unwrap();
    c.near("state space", get(&d, "state_space_complexity"), 60.1, 0.1);
    c.near("game tree", get(&d, "game_tree_complexity"), 816.7, 0.1);
    c.near("game space", get(&d, "game_space_complexity"), 65.0, 0.1);
    c.near("information entropy", get(&d, "information_entropy"), 0.870, 0.005);
    let sparsity = 10f64.powf(get(&d, "path_sparsity_log10"));
    c.check(
        (sparsity - 4.6e-19).abs() <= 5e-20,
        format!("sparsity bound {sparsity:.4e} vs 4.6e-19 +- 5e-20"),
    );
    c.within("criterion", start.elapsed(), Duration::from_secs(1));
    c
}

fn c6_cartpole_simulator() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let seed = 1;
    let limit = |v| constant_action_limit(&CartPoleParams::standard(v), 10_000, seed).unwrap();
    let (l2, lg, l3) = (limit(Variant::TwoD), limit(Variant::TwoDG), limit(Variant::ThreeD));
    c.near("2D constant-action limit", l2, 9.37, 1.0);
    c.near("2D-G constant-action limit", lg, 9.22, 1.0);
    let sparsity = |l, axes| analytic_sparsity(l, SPARSITY_EPISODE_LENGTH, 100_000, seed, axes).unwrap();
    let (s2, sg, s3) = (sparsity(l2, Axes::One), sparsity(lg, Axes::One), sparsity(l3, Axes::Two));
    c.near("2D sparsity", s2, 0.1171, 0.02);
    c.near("2D-G sparsity", sg, 0.1118, 0.02);
    c.check(s2 > sg && sg > s3, format!("ordering {s2:.4} > {sg:.4} > {s3:.4}"));
    let cfg = RolloutConfig { seed, ..RolloutConfig::default() };
    let e2 = rollout_entropy(&CartPoleParams::standard(Variant::TwoD), &cfg).unwrap();
    c.near("2D action entropy", e2.action_entropy, 1.0, 0.01);
    c.within("criterion", start.elapsed(), Duration::from_secs(120));
    let eg = rollout_entropy(&CartPoleParams::standard(Variant::TwoDG), &cfg).unwrap();
    let e3 = rollout_entropy(&CartPoleParams::standard(Variant::ThreeD), &cfg).unwrap();
    println!(
        "    reference only: 3D limit {l3:.3} (published 10.6), 3D sparsity {s3:.4} (published 0.054), \
         feature entropy sums {:.3} / {:.3} / {:.3} (published 20.556 / 17.626 / 99.999), \
         3D action entropy {:.4} (published 2.322)",
        e2.feature_entropy_sum, eg.feature_entropy_sum, e3.feature_entropy_sum, e3.action_entropy
    );
    c
}

fn data_dir(sub: &str) -> Option<PathBuf> {
    let root = PathBuf::from(std::env::var_os("DCX_DATA_DIR")?);
    let nested = root.join(sub);
    Some(if nested.is_dir() { nested } else { root })
}

fn missing(e: &Error) -> bool {
    matches!(e, Error::Io(io) if io.kind() == std::io::ErrorKind::NotFound)
}

fn skip(reason: impl Into<String>) -> Checks {
    Checks {
        skipped: Some(reason.into()),
        ..Checks::default()
    }
}

fn c7_mnist() -> Checks {
    let Some(dir) = data_dir("mnist") else {
        return skip("DCX_DATA_DIR not set");
    };
    let start = Instant::now();
    let all = match datasets::load_mnist(&dir, Split::All) {
        Ok(d) => d,
        Err(e) if missing(&e) => return skip(format!("no MNIST files under {}", dir.display())),
        Err(e) => panic!("MNIST load failed: {e}"),
    };
    let mut c = Checks::default();
    let bin = datasets::binarize(&all, 0).unwrap();
    c.near(
        "dimensionality",
        metrics::feature_space_dimensionality(&bin.meta()).unwrap(),
        9.04,
        0.01,
    );
    let s = metrics::dataset_sparsity(&all).unwrap();
    c.near("mean zero-fraction sparsity", s.mean, 0.813, 0.01);
    let means: Vec<(String, f64)> = s.classes.iter().map(|k| (k.class_name.clone(), k.mean)).collect();
    c.check(
        means.iter().all(|(_, m)| (0.74..=0.91).contains(m)),
        format!("per-digit means in [0.74, 0.91]: {means:.3?}"),
    );
    let top = means.iter().max_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
    c.check(top.0 == "1", format!("digit with highest sparsity is {}", top.0));
    let train = datasets::binarize(&datasets::load_mnist(&dir, Split::Train).unwrap(), 0).unwrap();
    let e = metrics::dataset_entropy(&train, true).unwrap();
    c.near("binarized entropy median of medians", e.median_of_medians, 0.090, 0.02);
    c.within("criterion", start.elapsed(), Duration::from_secs(60));
    c
}

fn c8_cifar() -> Checks {
    let Some(dir) = data_dir("cifar10") else {
        return skip("DCX_DATA_DIR not set");
    };
    let start = Instant::now();
    let ds = match datasets::load_cifar10(&dir, Split::All) {
        Ok(d) => d,
        Err(e) if missing(&e) => return skip(format!("no CIFAR-10 batches under {}", dir.display())),
        Err(e) => panic!("CIFAR-10 load failed: {e}"),
    };
    let mut c = Checks::default();
    c.near(
        "dimensionality",
        metrics::feature_space_dimensionality(&ds.meta()).unwrap(),
        11.67,
        0.01,
    );
    let g = metrics::dataset_channel_gini(&ds).unwrap();
    for (s, want) in g.iter().zip([0.235, 0.237, 0.26]) {
        c.near(&format!("{} median", s.measure_name), s.median, want, 0.01);
    }
    let e = metrics::dataset_entropy(&ds, false).unwrap();
    c.near("entropy median of medians", e.median_of_medians, 0.925, 0.02);
    c.near("bird entropy median", e.class("bird").unwrap().median, 0.892, 0.02);
    c.near("truck entropy median", e.class("truck").unwrap().median, 0.946, 0.02);
    c.within("criterion", start.elapsed(), Duration::from_secs(180));
    c
}

const IRIS_TABLE: [[f64; 4]; 3] = [
    [0.0392, 0.0602, 0.0634, 0.2086],
    [0.0489, 0.0632, 0.0610, 0.0826],
    [0.0533, 0.0589, 0.0551, 0.0759],
];

fn c9_iris() -> Checks {
    let mut c = Checks::default();
    let iris = bundled_iris();
    for (class, row) in IRIS_TABLE.iter().enumerate() {
        for (feature, want) in row.iter().enumerate() {
            let name = format!("{} {}", iris.class_names[class], iris.feature_names[feature]);
            c.near(&name, metrics::tabular_gini(&iris, class, feature).unwrap(), *want, 0.005);
        }
    }
    c
}

fn c10_properties() -> Checks {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);

    let mut violations = 0;
    for _ in 0..1000 {
        let v = common::random_vector(&mut rng);
        violations += common::hurley_violations(&v, &mut rng).len();
    }
    c.check(violations == 0, format!("six Gini criteria over 1000 vectors: {violations} violations"));

    let mut entropy_ok = true;
    for n in 2..64 {
        let u = ProbDist::uniform(n).unwrap();
        entropy_ok &= (normalized_entropy(&u, n).unwrap() - 1.0).abs() < 1e-12;
        let mut p = vec![0.0; n];
        p[rng.gen_range(0..n)] = 1.0;
        entropy_ok &= shannon_entropy(&ProbDist::new(p).unwrap()) == 0.0;
        let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let h = shannon_entropy(&ProbDist::from_weights(&w).unwrap());
        entropy_ok &= (0.0..=(n as f64).log2() + 1e-12).contains(&h);
    }
    c.check(entropy_ok, "entropy bounds, uniform and point-mass identities");

    let mut terms_ok = true;
    for cells in 1..=9u32 {
        let table = common::placements_bruteforce(cells);
        for ply in 1..=cells as usize {
            let term = ply_term(u64::from(cells), ply as u64).to_u64().unwrap();
            terms_ok &= term == table[ply.div_ceil(2)][ply / 2];
        }
    }
    c.check(terms_ok, "combinatorial terms equal brute-force placement counts for boards <= 9 cells");

    let mut mc_ok = true;
    let samples = 20_000u64;
    for (steps, limit) in [(20u32, 3.0), (20, 2.4), (14, 1.5), (18, 5.0)] {
        for (axes, k) in [(Axes::One, 1), (Axes::Two, 2)] {
            let p = common::expected_sparsity(limit, steps, k, common::band_survival_exact);
            let est = analytic_sparsity(limit, u64::from(steps), samples, 77, axes).unwrap();
            let sigma = (p * (1.0 - p) / samples as f64).sqrt();
            mc_ok &= (est - p).abs() <= 3.0 * sigma + 1e-12;
        }
    }
    c.check(mc_ok, "Monte-Carlo sparsity within 3 sigma of exact 2^n enumeration, n <= 20");

    let mut idx_ok = true;
    for _ in 0..200 {
        let dims: Vec<u32> = (0..rng.gen_range(0..4)).map(|_| rng.gen_range(1..7)).collect();
        let n: u32 = dims.iter().product();
        let data: Vec<u8> = (0..n).map(|_| rng.gen()).collect();
        let bytes = IdxTensor { dims, data }.to_bytes();
        idx_ok &= parse_idx(&bytes).map(|t| t.to_bytes() == bytes).unwrap_or(false);
    }
    c.check(idx_ok, "IDX round trip is byte-identical");
    c
}

trait CountValue {
    fn count_value(&self) -> BigUint;
}

impl CountValue for Cardinality {
    fn count_value(&self) -> BigUint {
        match self {
            Cardinality::Count(n) => n.clone(),
            Cardinality::Power { base, exp } => BigUint::from(*base).pow(*exp as u32),
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Checks); 10] = [
        (1, "tic-tac-toe", c1_tic_tac_toe),
        (2, "Qubic", c2_qubic),
        (3, "cart-pole descriptor tables", c3_cartpole_tables),
        (4, "Monopoly", c4_monopoly),
        (5, "POGO", c5_pogo),
        (6, "cart-pole simulator", c6_cartpole_simulator),
        (7, "MNIST", c7_mnist),
        (8, "CIFAR-10", c8_cifar),
        (9, "Iris", c9_iris),
        (10, "property suites", c10_properties),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let checks = run();
        let elapsed = start.elapsed();
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id);
        let status = match (&checks.skipped, checks.passed()) {
            (Some(_), _) => "SKIP",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        };
        println!("criterion {id:>2} {status} {name} ({elapsed:.2?})");
        if let Some(reason) = &checks.skipped {
            println!("    skipped: {reason}");
        }
        for (ok, text) in &checks.lines {
            println!("    [{}] {text}", if *ok { "ok" } else { "FAIL" });
        }
        match (status, known) {
            ("FAIL", Some((_, why))) => println!("    known unattainable: {why}"),
            ("FAIL", None) => unexpected.push(format!("criterion {id} failed")),
            ("PASS", Some(_)) => unexpected.push(format!("criterion {id} passed but is listed as unattainable")),
            _ => {}
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all attainable criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}

