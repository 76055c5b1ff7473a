//! Proper 3-colorings of the m×n grid graph with the upper-left cell
//! colored 0: exhaustive counting, transfer-matrix counting, and the
//! per-vertex growth table compared with Lieb's square-ice constant.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Largest `rows * cols` for the exhaustive counter.
pub const MAX_BRUTE_CELLS: usize = 20;
/// Largest column height for the transfer matrix.
pub const MAX_TRANSFER_HEIGHT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ColoringError {
    #[error("dimensions must be positive, got {rows}x{cols}")]
    Dimensions { rows: usize, cols: usize },
    #[error("{rows}x{cols} grid exceeds the exhaustive bound of {MAX_BRUTE_CELLS} cells")]
    TooManyCells { rows: usize, cols: usize },
    #[error("column height {0} exceeds the transfer-matrix bound of {MAX_TRANSFER_HEIGHT}")]
    TooTall(usize),
    #[error("table size must lie between 2 and {MAX_TRANSFER_HEIGHT}, got {0}")]
    TableSize(usize),
}

fn check_dims(rows: usize, cols: usize) -> Result<(), ColoringError> {
    if rows == 0 || cols == 0 {
        return Err(ColoringError::Dimensions { rows, cols });
    }
    Ok(())
}

/// Counts by backtracking over cells in row-major order.
pub fn count_colorings_brute(rows: usize, cols: usize) -> Result<BigUint, ColoringError> {
    check_dims(rows, cols)?;
    if rows * cols > MAX_BRUTE_CELLS {
        return Err(ColoringError::TooManyCells { rows, cols });
    }
    fn go(cells: &mut [u8], k: usize, cols: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let mut total = 0;
        for color in 0..3 {
            let left_ok = k.is_multiple_of(cols) || cells[k - 1] != color;
            let up_ok = k < cols || cells[k - cols] != color;
            if left_ok && up_ok {
                cells[k] = color;
                total += go(cells, k + 1, cols);
            }
        }
        total
    }
    let mut cells = vec![0u8; rows * cols];
    Ok(BigUint::from(go(&mut cells, 1, cols)))
}

/// Column states of height `m` (Z₃ sequences with no two equal neighbours),
/// in lexicographic order, and the compatibility relation between them.
///
/// State ranks are `d0 · 2^(m-1) + bits`, where bit `j` records whether
/// digit `j` took the larger of the two values allowed after digit `j - 1`.
#[derive(Clone, Debug)]
pub struct TransferMatrix {
    m: usize,
}

impl TransferMatrix {
    pub fn new(m: usize) -> Result<TransferMatrix, ColoringError> {
        if m == 0 {
            return Err(ColoringError::Dimensions { rows: m, cols: 1 });
        }
        if m > MAX_TRANSFER_HEIGHT {
            return Err(ColoringError::TooTall(m));
        }
        Ok(TransferMatrix { m })
    }

    pub fn height(&self) -> usize {
        self.m
    }

    pub fn state_count(&self) -> usize {
        3 << (self.m - 1)
    }

    pub fn state(&self, rank: usize) -> Vec<u8> {
        let mut digits = Vec::with_capacity(self.m);
        digits.push((rank >> (self.m - 1)) as u8);
        for j in 1..self.m {
            let bit = rank >> (self.m - 1 - j) & 1;
            let prev = digits[j - 1];
            let options = [(prev + 1) % 3, (prev + 2) % 3];
            digits.push(options[0].min(options[1]) + bit as u8 * options[0].abs_diff(options[1]));
        }
        digits
    }

    pub fn rank(&self, digits: &[u8]) -> Option<usize> {
        if digits.len() != self.m || digits.iter().any(|&d| d > 2) {
            return None;
        }
        let mut rank = (digits[0] as usize) << (self.m - 1);
        for j in 1..self.m {
            let (prev, d) = (digits[j - 1], digits[j]);
            if d == prev {
                return None;
            }
            let larger = d > [0u8, 1, 2].into_iter().find(|&x| x != prev && x != d).unwrap();
            rank |= (larger as usize) << (self.m - 1 - j);
        }
        Some(rank)
    }

    /// Ranks of the states that differ from `rank` in every position.
    pub fn compatible(&self, rank: usize) -> Vec<usize> {
        let t = self.state(rank);
        let mut out = Vec::new();
        self.extend(&t, 0, 0, 0, &mut out);
        out
    }

    fn extend(&self, t: &[u8], j: usize, prev: u8, acc: usize, out: &mut Vec<usize>) {
        if j == self.m {
            out.push(acc);
            return;
        }
        if j == 0 {
            for d in 0..3u8 {
                if d != t[0] {
                    self.extend(t, 1, d, (d as usize) << (self.m - 1), out);
                }
            }
            return;
        }
        let options = [(prev + 1) % 3, (prev + 2) % 3];
        let (lo, hi) = (options[0].min(options[1]), options[0].max(options[1]));
        for (bit, d) in [(0usize, lo), (1, hi)] {
            if d != t[j] {
                self.extend(t, j + 1, d, acc | bit << (self.m - 1 - j), out);
            }
        }
    }

    /// Dense 0/1 matrix; only sensible for small heights.
    pub fn dense(&self) -> Vec<Vec<u8>> {
        let n = self.state_count();
        (0..n)
            .map(|i| {
                let mut row = vec![0u8; n];
                for j in self.compatible(i) {
                    row[j] = 1;
                }
                row
            })
            .collect()
    }

    /// One column step: `out[t] = Σ_{s compatible with t} v[s]`.
    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        (0..self.state_count())
            .into_par_iter()
            .with_min_len(64)
            .map(|t| self.compatible(t).into_iter().map(|s| &v[s]).sum())
            .collect()
    }
}

/// Column-by-column dynamic programming with columns of height `rows`.
pub fn count_colorings_transfer(rows: usize, cols: usize) -> Result<BigUint, ColoringError> {
    check_dims(rows, cols)?;
    let tm = TransferMatrix::new(rows)?;
    let first_zero = 1usize << (rows - 1);
    let mut v: Vec<BigUint> =
        (0..tm.state_count()).map(|s| if s < first_zero { BigUint::from(1u32) } else { BigUint::zero() }).collect();
    for _ in 1..cols {
        v = tm.apply(&v);
    }
    Ok(v.iter().sum())
}

/// Natural logarithm of a positive big integer, from its top 64 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits in 64 bits").to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Per-vertex number of proper 3-colorings of a large grid, (4/3)^(3/2).
pub fn lieb_constant() -> f64 {
    (4.0f64 / 3.0).powf(1.5)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiebRow {
    pub n: usize,
    pub count: BigUint,
    /// `count^(1/n²)`.
    pub f: f64,
}

/// Counts for the n×n grids, n = 1..=n_max, with per-vertex estimates.
pub fn lieb_table(n_max: usize) -> Result<Vec<LiebRow>, ColoringError> {
    if !(2..=MAX_TRANSFER_HEIGHT).contains(&n_max) {
        return Err(ColoringError::TableSize(n_max));
    }
    (1..=n_max)
        .map(|n| {
            let count = count_colorings_transfer(n, n)?;
            let f = (ln_biguint(&count) / (n * n) as f64).exp();
            Ok(LiebRow { n, count, f })
        })
        .collect()
}
