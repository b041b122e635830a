//! Brute-force oracles shared by the integration and acceptance tests.
//! Each is written independently of the library code it checks.
#![allow(dead_code)]

use std::collections::HashSet;

use dcx_core::measures::gini;
use rand::Rng;

/// Per-ply counts of legal tic-tac-toe positions from a scan of all 3^9
/// boards: `(raw, up to the 8 board symmetries)`.
pub fn tic_tac_toe_bruteforce() -> (Vec<u64>, Vec<u64>) {
    const LINES: [[usize; 3]; 8] = [
        [0, 1, 2],
        [3, 4, 5],
        [6, 7, 8],
        [0, 3, 6],
        [1, 4, 7],
        [2, 5, 8],
        [0, 4, 8],
        [2, 4, 6],
    ];
    let wins = |b: &[u8; 9], p: u8| LINES.iter().any(|l| l.iter().all(|&i| b[i] == p));
    // (r, c) -> cell index under each dihedral element
    let maps: Vec<[usize; 9]> = (0..8)
        .map(|t| {
            let mut m = [0; 9];
            for r in 0..3 {
                for c in 0..3 {
                    let (r2, c2) = match t {
                        0 => (r, c),
                        1 => (c, 2 - r),
                        2 => (2 - r, 2 - c),
                        3 => (2 - c, r),
                        4 => (r, 2 - c),
                        5 => (2 - r, c),
                        6 => (c, r),
                        _ => (2 - c, 2 - r),
                    };
                    m[r * 3 + c] = r2 * 3 + c2;
                }
            }
            m
        })
        .collect();
    let mut raw = vec![0u64; 10];
    let mut classes: Vec<HashSet<[u8; 9]>> = vec![HashSet::new(); 10];
    for code in 0..3u32.pow(9) {
        let mut b = [0u8; 9];
        let mut k = code;
        for cell in b.iter_mut() {
            *cell = (k % 3) as u8;
            k /= 3;
        }
        let x = b.iter().filter(|&&v| v == 1).count();
        let o = b.iter().filter(|&&v| v == 2).count();
        if x != o && x != o + 1 {
            continue;
        }
        let (xw, ow) = (wins(&b, 1), wins(&b, 2));
        if (xw && ow) || (xw && x != o + 1) || (ow && x != o) {
            continue;
        }
        let ply = x + o;
        raw[ply] += 1;
        let canon = maps
            .iter()
            .map(|m| {
                let mut t = [0u8; 9];
                for i in 0..9 {
                    t[m[i]] = b[i];
                }
                t
            })
            .min()
            .unwrap();
        classes[ply].insert(canon);
    }
    (raw, classes.iter().map(|s| s.len() as u64).collect())
}

/// Boards of `cells` cells holding exactly `x` X stones and `o` O stones,
/// counted by scanning all 3^cells boards.
pub fn placements_bruteforce(cells: u32) -> Vec<Vec<u64>> {
    let n = cells as usize;
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    for code in 0..3u64.pow(cells) {
        let (mut x, mut o, mut k) = (0, 0, code);
        for _ in 0..n {
            match k % 3 {
                1 => x += 1,
                2 => o += 1,
                _ => {}
            }
            k /= 3;
        }
        table[x][o] += 1;
    }
    table
}

/// Fraction of the 2^steps `+-1` sequences whose running sum stays within
/// `[-band, band]`, by direct enumeration.
pub fn band_survival_exact(steps: u32, band: i64) -> f64 {
    let mut ok = 0u64;
    for mask in 0..(1u64 << steps) {
        let mut s = 0i64;
        let mut alive = true;
        for t in 0..steps {
            s += if mask >> t & 1 == 1 { 1 } else { -1 };
            if s.abs() > band {
                alive = false;
                break;
            }
        }
        ok += u64::from(alive);
    }
    ok as f64 / (1u64 << steps) as f64
}

/// Same quantity by dynamic programming over positions.
pub fn band_survival_dp(steps: u32, band: i64) -> f64 {
    let width = (2 * band + 1) as usize;
    let mut p = vec![0.0; width];
    p[band as usize] = 1.0;
    for _ in 0..steps {
        let mut next = vec![0.0; width];
        for (i, &v) in p.iter().enumerate() {
            if i > 0 {
                next[i - 1] += v / 2.0;
            }
            if i + 1 < width {
                next[i + 1] += v / 2.0;
            }
        }
        p = next;
    }
    p.iter().sum()
}

/// Expected analytic sparsity for a fractional limit under randomized
/// rounding, with `axes` independent walks sharing one band.
pub fn expected_sparsity(limit: f64, steps: u32, axes: i32, exact: impl Fn(u32, i64) -> f64) -> f64 {
    let b = limit.floor() as i64;
    let f = limit - limit.floor();
    (1.0 - f) * exact(steps, b).powi(axes) + f * exact(steps, b + 1).powi(axes)
}

/// Names of the Hurley sparsity criteria that `values` violates. `values`
/// must have at least two distinct positive entries.
pub fn hurley_violations<R: Rng>(values: &[f64], rng: &mut R) -> Vec<&'static str> {
    let g = gini(values).unwrap();
    let mut bad = Vec::new();
    let n = values.len();

    // Robin Hood: moving wealth from richer to poorer lowers sparsity
    let (hi, lo) = {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        if values[i] >= values[j] {
            (i, j)
        } else {
            (j, i)
        }
    };
    if values[hi] > values[lo] {
        let mut v = values.to_vec();
        let a = (values[hi] - values[lo]) / 4.0;
        v[hi] -= a;
        v[lo] += a;
        if gini(&v).unwrap() >= g {
            bad.push("robin_hood");
        }
    }
    // Scaling
    let alpha = rng.gen_range(0.01..100.0);
    let scaled: Vec<f64> = values.iter().map(|x| x * alpha).collect();
    if (gini(&scaled).unwrap() - g).abs() > 1e-9 {
        bad.push("scaling");
    }
    // Rising tide
    let tide = rng.gen_range(0.01..10.0);
    let raised: Vec<f64> = values.iter().map(|x| x + tide).collect();
    if gini(&raised).unwrap() >= g {
        bad.push("rising_tide");
    }
    // Cloning
    let cloned: Vec<f64> = values.iter().chain(values).copied().collect();
    if (gini(&cloned).unwrap() - g).abs() > 1e-9 {
        bad.push("cloning");
    }
    // Bill Gates: growing the largest entry raises sparsity
    let mut v = values.to_vec();
    let imax = (0..n).max_by(|&a, &b| v[a].total_cmp(&v[b])).unwrap();
    v[imax] += rng.gen_range(0.1..100.0);
    if gini(&v).unwrap() <= g {
        bad.push("bill_gates");
    }
    // Babies: appending a zero raises sparsity
    let mut v = values.to_vec();
    v.push(0.0);
    if gini(&v).unwrap() <= g {
        bad.push("babies");
    }
    bad
}

/// A random vector with at least two distinct positive entries.
pub fn random_vector<R: Rng>(rng: &mut R) -> Vec<f64> {
    loop {
        let n = rng.gen_range(2..40);
        let v: Vec<f64> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    0.0
                } else {
                    rng.gen_range(0.01..100.0)
                }
            })
            .collect();
        let positive: Vec<f64> = v.iter().copied().filter(|x| *x > 0.0).collect();
        if positive.len() >= 2 && positive.iter().any(|x| *x != positive[0]) {
            return v;
        }
    }
}
