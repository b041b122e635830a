//! Published reference values attached to reports as annotations.

use dcx_core::report::ReferenceTarget as T;

pub fn game(preset: &str) -> Vec<T> {
    match preset {
        "ttt" => vec![
            T::new("state_space_upper_bound", 19683f64.log10(), 0.01, "3^9 = 19,683"),
            T::new("state_space_complexity", 6045f64.log10(), 0.01, "published as 3"),
            T::new("game_tree_complexity", 5.559, 0.001, "9! = 362880 terminal nodes"),
            T::new("legal_positions", 5478.0, 0.0, "exhaustive legal-position count"),
            T::new("symmetry_classes", 765.0, 0.0, "positions up to symmetry"),
            T::new("ply_entropy", 0.3959, 0.0, "published value, not reproduced"),
        ],
        "qubic" => vec![
            T::new("state_space_upper_bound", 30.54, 0.01, "3^64 = 3.43 x 10^30"),
            T::new("state_space_complexity", 30.0, 1.0, "published as 30"),
            T::new("game_tree_complexity", 34.07, 0.01, "64!/44!, published as 34"),
        ],
        _ => vec![],
    }
}

pub fn descriptor(name: &str) -> Vec<T> {
    match name {
        "cartpole2d" | "cartpole2d-g" => vec![
            T::new("state_space_complexity", 6.0, 0.05, "cart-pole table"),
            T::new("game_tree_complexity_uniform_sum", 30.4, 0.05, "cart-pole table"),
            T::new("game_space_complexity", 14.0, 0.05, "cart-pole table"),
            T::new("branching_factor", 2.0, 0.0, "cart-pole table"),
        ],
        "cartpole3d" => vec![
            T::new("state_space_complexity", 24.0, 0.05, "cart-pole table"),
            T::new("game_tree_complexity_uniform_sum", 60.3, 0.05, "cart-pole table"),
            T::new("game_space_complexity", 27.2, 0.05, "cart-pole table"),
            T::new("branching_factor", 4.0, 0.0, "cart-pole table"),
        ],
        "monopoly" => vec![
            T::new("strategy_entropy.all_railroads", 0.52, 0.01, "Monopoly strategy entropy"),
            T::new("strategy_entropy.boardwalk_and_park_place", 0.90, 0.01, "Monopoly strategy entropy"),
        ],
        "pogo" => vec![
            T::new("state_space_complexity", 60.1, 0.1, "POGO complexity table"),
            T::new("game_tree_complexity", 816.7, 0.1, "POGO complexity table"),
            T::new("game_space_complexity", 65.0, 0.1, "POGO complexity table"),
            T::new("information_entropy", 0.870, 0.005, "POGO information entropy"),
            T::new("path_sparsity_log10", 4.6e-19f64.log10(), 0.05, "sparsity bound 4.6 x 10^-19"),
        ],
        _ => vec![],
    }
}

pub fn cartpole(variant: &str) -> Vec<T> {
    match variant {
        "2d" => vec![
            T::new("constant_action_limit", 9.37, 1.0, "published constant-action limit"),
            T::new("solution_sparsity", 0.1171, 0.02, "published Monte-Carlo sparsity"),
            T::new("action_entropy", 1.0, 0.01, "two uniform actions"),
            T::new("feature_entropy_sum", 20.556, 0.0, "published value, reference only"),
        ],
        "2dg" => vec![
            T::new("constant_action_limit", 9.22, 1.0, "published constant-action limit"),
            T::new("solution_sparsity", 0.1118, 0.02, "published Monte-Carlo sparsity"),
            T::new("feature_entropy_sum", 17.626, 0.0, "published value, reference only"),
        ],
        "3d" => vec![
            T::new("constant_action_limit", 10.6, 0.0, "published value, reference only"),
            T::new("solution_sparsity", 0.054, 0.0, "published value, reference only"),
            T::new("feature_entropy_sum", 99.999, 0.0, "published value, reference only"),
            T::new("action_entropy", 2.322, 0.0, "published value, reference only"),
        ],
        _ => vec![],
    }
}

pub fn dataset(name: &str) -> Vec<T> {
    match name {
        "mnist" => vec![
            T::new("feature_space_dimensionality", 9.04, 0.01, "MNIST dimensionality, published as 9"),
            T::new("zero_sparsity.mean", 0.813, 0.01, "MNIST mean sparsity"),
            T::new("image_entropy.binarized.median_of_medians", 0.090, 0.02, "MNIST median of median entropy"),
        ],
        "cifar10" => vec![
            T::new("feature_space_dimensionality", 11.67, 0.01, "CIFAR-10 dimensionality"),
            T::new("channel_gini.red.median", 0.235, 0.01, "CIFAR-10 red Gini median"),
            T::new("channel_gini.green.median", 0.237, 0.01, "CIFAR-10 green Gini median"),
            T::new("channel_gini.blue.median", 0.26, 0.01, "CIFAR-10 blue Gini median"),
            T::new("image_entropy.raw.median_of_medians", 0.925, 0.02, "CIFAR-10 median of median entropy"),
            T::new("image_entropy.raw.bird.median", 0.892, 0.02, "CIFAR-10 bird entropy median"),
            T::new("image_entropy.raw.truck.median", 0.946, 0.02, "CIFAR-10 truck entropy median"),
        ],
        "iris" => IRIS_TABLE
            .iter()
            .flat_map(|(class, row)| {
                dcx_core::datasets::IRIS_FEATURES
                    .iter()
                    .zip(row)
                    .map(move |(f, v)| T::new(&format!("gini.{class}.{f}"), *v, 0.005, "Iris Gini table"))
            })
            .collect(),
        _ => vec![],
    }
}

/// Published per-class, per-feature Iris Gini values.
pub const IRIS_TABLE: [(&str, [f64; 4]); 3] = [
    ("setosa", [0.0392, 0.0602, 0.0634, 0.2086]),
    ("versicolor", [0.0489, 0.0632, 0.0610, 0.0826]),
    ("virginica", [0.0533, 0.0589, 0.0551, 0.0759]),
];
