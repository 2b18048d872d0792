//! Binary measurement matrices.
//!
//! Rows are tests, columns are items, entries are bit-packed 64 per word.
//! Besides element access the module provides the standard constructions
//! (Bernoulli, bit-test, isolation), the row-wise tensor product used to
//! compose a block-selector matrix with an identification matrix, and row
//! orderings that minimize the total Hamming distance between consecutive
//! tests.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rand::Rng;
use thiserror::Error;

use crate::seeding::derive_rng;

const WORD_BITS: usize = 64;

/// Errors produced by matrix construction, combination, ordering, and IO.
#[derive(Debug, Error)]
pub enum MatrixError {
    /// Tensor factors or compared matrices disagree on column count.
    #[error("incompatible shapes: {left} columns vs {right} columns")]
    IncompatibleShapes { left: usize, right: usize },
    /// Bernoulli density outside the open interval (0, 1).
    #[error("invalid density {0}: must lie strictly between 0 and 1")]
    InvalidDensity(f64),
    /// Row order is not a bijection on the matrix rows.
    #[error("invalid permutation: not a bijection on 0..{rows}")]
    InvalidPermutation { rows: usize },
    /// Exact ordering was requested beyond its row budget.
    #[error("instance too large for exact mode: {rows} rows exceeds {max}")]
    ExactTooLarge { rows: usize, max: usize },
    /// Matrix file header is not two positive decimal dimensions.
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    /// Matrix file ended before all declared rows were read.
    #[error("missing row {row}: file declares {expected} rows")]
    MissingRow { row: usize, expected: usize },
    /// A data line has the wrong number of entries.
    #[error("ragged row {row}: expected {expected} entries, got {got}")]
    RaggedRow { row: usize, expected: usize, got: usize },
    /// A data line contains a character other than 0 or 1.
    #[error("non-binary entry {found:?} in row {row}")]
    NonBinaryEntry { row: usize, found: char },
    /// Matrix file contains data past the declared rows.
    #[error("trailing data after row {0}")]
    TrailingData(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A binary test design with at least one row and one column.
#[derive(Clone, PartialEq, Eq)]
pub struct MeasurementMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl MeasurementMatrix {
    /// All-zero matrix. Dimensions must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let words_per_row = cols.div_ceil(WORD_BITS);
        MeasurementMatrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    /// Identity design: test i pools exactly item i.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Independent entries, each 1 with probability `density` in (0, 1).
    pub fn bernoulli(rows: usize, cols: usize, density: f64, seed: u64) -> Result<Self, MatrixError> {
        if !(density > 0.0 && density < 1.0) {
            return Err(MatrixError::InvalidDensity(density));
        }
        Ok(Self::fill_random(rows, cols, density, seed))
    }

    /// Binary identification design over `n` items: `ceil(log2 n) + 1` rows,
    /// row r pools item j iff bit r of j is 1, and the final row pools
    /// everything. Reading the outcome bits of the first rows as a binary
    /// number recovers a lone pooled item.
    pub fn bit_test(n: usize) -> Self {
        let index_rows = index_bits(n);
        let mut m = Self::zeros(index_rows + 1, n);
        for j in 0..n {
            for r in 0..index_rows {
                if j >> r & 1 == 1 {
                    m.set(r, j, true);
                }
            }
            m.set(index_rows, j, true);
        }
        m
    }

    /// Block-selector design: each of `blocks` rows pools every item
    /// independently with probability `1 / sparsity`, so a row isolates one
    /// member of a set of `sparsity` items with constant probability.
    /// `sparsity = 1` is permitted and yields all-ones rows.
    pub fn isolation(n: usize, sparsity: usize, blocks: usize, seed: u64) -> Self {
        assert!(sparsity >= 1, "sparsity bound must be positive");
        Self::fill_random(blocks, n, 1.0 / sparsity as f64, seed)
    }

    fn fill_random(rows: usize, cols: usize, density: f64, seed: u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        let mut rng = derive_rng(&[seed, crate::seeding::TAG_MATRIX]);
        for i in 0..rows {
            for j in 0..cols {
                if rng.random_bool(density) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        let word = self.bits[row * self.words_per_row + col / WORD_BITS];
        word >> (col % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let word = &mut self.bits[row * self.words_per_row + col / WORD_BITS];
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    /// Column indices pooled by `row`, ascending.
    pub fn row_support(&self, row: usize) -> Vec<usize> {
        let mut support = Vec::new();
        for (w, &word) in self.row_words(row).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                support.push(w * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        support
    }

    /// Number of items pooled by `row`.
    pub fn row_weight(&self, row: usize) -> usize {
        self.row_words(row).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Total number of 1 entries.
    pub fn total_weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Hamming distance between two rows.
    pub fn row_hamming(&self, a: usize, b: usize) -> usize {
        self.row_words(a)
            .iter()
            .zip(self.row_words(b))
            .map(|(x, y)| (x ^ y).count_ones() as usize)
            .sum()
    }

    /// Matrix whose row i is `self`'s row `order[i]`.
    pub fn permute_rows(&self, order: &RowOrder) -> Result<Self, MatrixError> {
        if order.len() != self.rows {
            return Err(MatrixError::InvalidPermutation { rows: self.rows });
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &src) in order.as_slice().iter().enumerate() {
            let dst_range = i * self.words_per_row..(i + 1) * self.words_per_row;
            out.bits[dst_range].copy_from_slice(self.row_words(src));
        }
        Ok(out)
    }

    /// Matrix with each row duplicated `factor` times consecutively, the
    /// layout consumed by majority voting over repeated tests.
    pub fn repeat_rows(&self, factor: usize) -> Self {
        assert!(factor >= 1, "repetition factor must be positive");
        let mut out = Self::zeros(self.rows * factor, self.cols);
        for i in 0..self.rows {
            for r in 0..factor {
                let dst = (i * factor + r) * self.words_per_row;
                out.bits[dst..dst + self.words_per_row].copy_from_slice(self.row_words(i));
            }
        }
        out
    }

    /// Row-wise tensor product: for each row a of `self` and row s of
    /// `inner`, the result contains the entrywise AND of a and s. Block i of
    /// the result (rows `i * inner.rows() ..`) is `inner` masked by row i of
    /// `self`, so the product has `self.rows() * inner.rows()` rows.
    pub fn tensor_product(&self, inner: &Self) -> Result<Self, MatrixError> {
        if self.cols != inner.cols {
            return Err(MatrixError::IncompatibleShapes {
                left: self.cols,
                right: inner.cols,
            });
        }
        let mut out = Self::zeros(self.rows * inner.rows, self.cols);
        for i in 0..self.rows {
            let outer_row = self.row_words(i);
            for k in 0..inner.rows {
                let dst = (i * inner.rows + k) * out.words_per_row;
                for (w, (&a, &s)) in outer_row.iter().zip(inner.row_words(k)).enumerate() {
                    out.bits[dst + w] = a & s;
                }
            }
        }
        Ok(out)
    }

    /// Serializes as a header line `rows cols` followed by one line of 0/1
    /// characters per row.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<(), MatrixError> {
        writeln!(w, "{} {}", self.rows, self.cols)?;
        let mut line = String::with_capacity(self.cols + 1);
        for i in 0..self.rows {
            line.clear();
            for j in 0..self.cols {
                line.push(if self.get(i, j) { '1' } else { '0' });
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn write_file<P: AsRef<Path>>(&self, path: P) -> Result<(), MatrixError> {
        let mut buf = Vec::new();
        self.write_text(&mut buf)?;
        fs::write(path, buf)?;
        Ok(())
    }

    /// Parses the text format produced by [`write_text`](Self::write_text).
    pub fn read_text(input: &str) -> Result<Self, MatrixError> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| MatrixError::MalformedHeader("empty input".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(MatrixError::MalformedHeader(format!(
                "expected two dimensions, got {:?}",
                header
            )));
        }
        let rows: usize = dims[0]
            .parse()
            .map_err(|_| MatrixError::MalformedHeader(format!("bad row count {:?}", dims[0])))?;
        let cols: usize = dims[1]
            .parse()
            .map_err(|_| MatrixError::MalformedHeader(format!("bad column count {:?}", dims[1])))?;
        if rows == 0 || cols == 0 {
            return Err(MatrixError::MalformedHeader(format!(
                "dimensions must be positive, got {rows} {cols}"
            )));
        }
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            let line = lines.next().ok_or(MatrixError::MissingRow {
                row: i,
                expected: rows,
            })?;
            if line.chars().count() != cols {
                return Err(MatrixError::RaggedRow {
                    row: i,
                    expected: cols,
                    got: line.chars().count(),
                });
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => {
                        return Err(MatrixError::NonBinaryEntry { row: i, found: other });
                    }
                }
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(MatrixError::TrailingData(rows));
        }
        Ok(m)
    }

    pub fn read_file<P: AsRef<Path>>(path: P) -> Result<Self, MatrixError> {
        Self::read_text(&fs::read_to_string(path)?)
    }
}

impl fmt::Debug for MeasurementMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MeasurementMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Row-wise tensor product as a free function; see
/// [`MeasurementMatrix::tensor_product`].
pub fn tensor_product(
    outer: &MeasurementMatrix,
    inner: &MeasurementMatrix,
) -> Result<MeasurementMatrix, MatrixError> {
    outer.tensor_product(inner)
}

/// Number of index rows needed to address `n` items in binary.
fn index_bits(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// A validated permutation of row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowOrder(Vec<usize>);

impl RowOrder {
    /// Identity ordering on `rows` rows.
    pub fn identity(rows: usize) -> Self {
        RowOrder((0..rows).collect())
    }

    /// Validates that `perm` is a bijection on `0..perm.len()`.
    pub fn new(perm: Vec<usize>) -> Result<Self, MatrixError> {
        let rows = perm.len();
        let mut seen = vec![false; rows];
        for &p in &perm {
            if p >= rows || seen[p] {
                return Err(MatrixError::InvalidPermutation { rows });
            }
            seen[p] = true;
        }
        Ok(RowOrder(perm))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Sum of Hamming distances between consecutive rows under `order`.
///
/// This is the objective minimized by [`min_gap_order`]; a matrix whose
/// optimal value is t-1 admits a Gray-code style test schedule.
pub fn zero_gap_cost(matrix: &MeasurementMatrix, order: &RowOrder) -> Result<u64, MatrixError> {
    if order.len() != matrix.rows() {
        return Err(MatrixError::InvalidPermutation { rows: matrix.rows() });
    }
    let seq = order.as_slice();
    let mut cost = 0u64;
    for pair in seq.windows(2) {
        cost += matrix.row_hamming(pair[0], pair[1]) as u64;
    }
    Ok(cost)
}

/// Strategy for minimizing consecutive-row Hamming cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingMode {
    /// Optimal open path by dynamic programming over row subsets. Rejects
    /// matrices with more than [`EXACT_ORDER_MAX_ROWS`] rows.
    Exact,
    /// Nearest-neighbor chains from every start row; ties break toward the
    /// lowest row index. Never optimal by guarantee, never worse than its
    /// own greedy bound, and linear in memory.
    Greedy,
}

/// Largest row count accepted by [`OrderingMode::Exact`].
pub const EXACT_ORDER_MAX_ROWS: usize = 14;

/// Finds a row order of small consecutive Hamming cost, returning the order
/// and its cost. `Exact` returns a global minimum; `Greedy` an upper bound.
/// Both modes are deterministic.
pub fn min_gap_order(
    matrix: &MeasurementMatrix,
    mode: OrderingMode,
) -> Result<(RowOrder, u64), MatrixError> {
    let t = matrix.rows();
    if t == 1 {
        return Ok((RowOrder::identity(1), 0));
    }
    let dist = pairwise_distances(matrix);
    match mode {
        OrderingMode::Exact => {
            if t > EXACT_ORDER_MAX_ROWS {
                return Err(MatrixError::ExactTooLarge {
                    rows: t,
                    max: EXACT_ORDER_MAX_ROWS,
                });
            }
            Ok(exact_path(&dist, t))
        }
        OrderingMode::Greedy => Ok(greedy_path(&dist, t)),
    }
}

#[allow(clippy::needless_range_loop)] // symmetric fill writes two rows per step
fn pairwise_distances(matrix: &MeasurementMatrix) -> Vec<Vec<u64>> {
    let t = matrix.rows();
    let mut dist = vec![vec![0u64; t]; t];
    for a in 0..t {
        for b in a + 1..t {
            let d = matrix.row_hamming(a, b) as u64;
            dist[a][b] = d;
            dist[b][a] = d;
        }
    }
    dist
}

/// Held-Karp dynamic program for the cheapest open path visiting all rows.
fn exact_path(dist: &[Vec<u64>], t: usize) -> (RowOrder, u64) {
    let full = 1usize << t;
    let mut cost = vec![vec![u64::MAX; t]; full];
    let mut parent = vec![vec![usize::MAX; t]; full];
    for last in 0..t {
        cost[1 << last][last] = 0;
    }
    for mask in 1..full {
        for last in 0..t {
            let here = cost[mask][last];
            if here == u64::MAX || mask >> last & 1 == 0 {
                continue;
            }
            for next in 0..t {
                if mask >> next & 1 == 1 {
                    continue;
                }
                let next_mask = mask | 1 << next;
                let candidate = here + dist[last][next];
                if candidate < cost[next_mask][next] {
                    cost[next_mask][next] = candidate;
                    parent[next_mask][next] = last;
                }
            }
        }
    }
    let final_mask = full - 1;
    let (mut last, &best) = cost[final_mask]
        .iter()
        .enumerate()
        .min_by_key(|&(i, &c)| (c, i))
        .expect("at least one row");
    let mut order = Vec::with_capacity(t);
    let mut mask = final_mask;
    while last != usize::MAX {
        order.push(last);
        let prev = parent[mask][last];
        mask &= !(1 << last);
        last = prev;
    }
    order.reverse();
    debug_assert_eq!(order.len(), t);
    (RowOrder(order), best)
}

fn greedy_path(dist: &[Vec<u64>], t: usize) -> (RowOrder, u64) {
    let mut best: Option<(Vec<usize>, u64)> = None;
    for start in 0..t {
        let mut visited = vec![false; t];
        let mut order = Vec::with_capacity(t);
        let mut cost = 0u64;
        visited[start] = true;
        order.push(start);
        let mut here = start;
        for _ in 1..t {
            let next = (0..t)
                .filter(|&j| !visited[j])
                .min_by_key(|&j| (dist[here][j], j))
                .expect("unvisited row remains");
            cost += dist[here][next];
            visited[next] = true;
            order.push(next);
            here = next;
        }
        if best.as_ref().is_none_or(|(_, c)| cost < *c) {
            best = Some((order, cost));
        }
    }
    let (order, cost) = best.expect("at least one row");
    (RowOrder(order), cost)
}
