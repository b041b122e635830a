use itertools::Itertools;

/// Cell layout of an `N^D` board: winning lines and the spatial symmetry
/// group, both as index maps over the flattened board.
///
/// Cell `(c_0, .., c_{D-1})` has index `sum c_j * N^j`.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub side: usize,
    pub dims: usize,
    pub cells: usize,
    pub lines: Vec<Vec<usize>>,
    /// Each entry maps a cell to its image under one group element.
    pub symmetries: Vec<Vec<usize>>,
}

impl Geometry {
    pub fn new(side: usize, dims: usize, win_length: usize) -> Self {
        let cells = side.pow(dims as u32);
        let coords: Vec<Vec<usize>> = (0..cells).map(|i| to_coords(i, side, dims)).collect();
        Self {
            side,
            dims,
            cells,
            lines: lines(side, dims, win_length, &coords),
            symmetries: symmetries(side, dims, &coords),
        }
    }
}

fn to_coords(mut index: usize, side: usize, dims: usize) -> Vec<usize> {
    let mut c = Vec::with_capacity(dims);
    for _ in 0..dims {
        c.push(index % side);
        index /= side;
    }
    c
}

fn to_index(coords: &[usize], side: usize) -> usize {
    coords.iter().rev().fold(0, |acc, c| acc * side + c)
}

/// Every run of `k` cells along a direction in `{-1, 0, 1}^D` whose first
/// nonzero component is `+1` (so each line appears once).
fn lines(side: usize, dims: usize, k: usize, coords: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n_dirs = 3usize.pow(dims as u32);
    for d in 0..n_dirs {
        let dir: Vec<i64> = to_coords(d, 3, dims).iter().map(|v| *v as i64 - 1).collect();
        match dir.iter().find(|v| **v != 0) {
            Some(1) => {}
            _ => continue,
        }
        for start in coords {
            let run: Option<Vec<usize>> = (0..k as i64)
                .map(|step| {
                    let c: Option<Vec<usize>> = start
                        .iter()
                        .zip(&dir)
                        .map(|(s, d)| {
                            let v = *s as i64 + d * step;
                            (0..side as i64).contains(&v).then_some(v as usize)
                        })
                        .collect();
                    c.map(|c| to_index(&c, side))
                })
                .collect();
            if let Some(run) = run {
                out.push(run);
            }
        }
    }
    out
}

/// Axis permutations combined with per-axis reflections: `2^D * D!` maps.
fn symmetries(side: usize, dims: usize, coords: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for perm in (0..dims).permutations(dims) {
        for flips in 0..(1usize << dims) {
            let map = coords
                .iter()
                .map(|c| {
                    let image: Vec<usize> = (0..dims)
                        .map(|axis| {
                            let v = c[perm[axis]];
                            if flips >> axis & 1 == 1 {
                                side - 1 - v
                            } else {
                                v
                            }
                        })
                        .collect();
                    to_index(&image, side)
                })
                .collect();
            out.push(map);
        }
    }
    out
}
