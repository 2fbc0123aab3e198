//! Exact integer and rational matrix algebra.
//!
//! All entries are arbitrary-precision (`BigInt` / `BigRational`); fixed
//! width arithmetic is deliberately not offered because intermediate Smith
//! normal form entries routinely overflow machine words. Operations are
//! deterministic: for a fixed input the pivot choices, and hence every
//! transform matrix, are reproducible bit for bit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactMatError {
    DimensionMismatch { expected: (usize, usize), got: (usize, usize) },
    NotSquare,
    NotSymmetric { row: usize, col: usize },
    /// `rational_solve` on a system with no solution.
    Inconsistent,
    /// `rational_solve` asked for a unique solution but the kernel is nontrivial.
    AmbiguousSolve,
    BadShape(String),
}

impl fmt::Display for ExactMatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactMatError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {}x{}, got {}x{}", expected.0, expected.1, got.0, got.1)
            }
            ExactMatError::NotSquare => write!(f, "matrix is not square"),
            ExactMatError::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric: entries ({row},{col}) and ({col},{row}) differ")
            }
            ExactMatError::Inconsistent => write!(f, "inconsistent system"),
            ExactMatError::AmbiguousSolve => write!(f, "non-square ambiguous solve"),
            ExactMatError::BadShape(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for ExactMatError {}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, ExactMatError> {
        if data.len() != rows * cols {
            return Err(ExactMatError::BadShape(format!(
                "entry count {} does not equal rows*cols = {}",
                data.len(),
                rows * cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, ExactMatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactMatError::BadShape("ragged rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Small-literal constructor, mostly for tests and the catalog.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| BigInt::from(x))).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_cols(cols: Vec<Vec<BigInt>>) -> Result<Self, ExactMatError> {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        if cols.iter().any(|col| col.len() != r) {
            return Err(ExactMatError::BadShape("ragged columns".into()));
        }
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, ExactMatError> {
        if self.cols != other.rows {
            return Err(ExactMatError::DimensionMismatch {
                expected: (self.cols, other.rows),
                got: (other.rows, other.cols),
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    let cur = out.at(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ExactMatError> {
        if v.len() != self.cols {
            return Err(ExactMatError::DimensionMismatch { expected: (self.cols, 1), got: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// First index pair witnessing non-symmetry, if any.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.at(r, c) != self.at(c, r) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Block-diagonal assembly.
    pub fn block_diag(parts: &[&IntMatrix]) -> IntMatrix {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zero(rows, cols);
        let (mut ro, mut co) = (0usize, 0usize);
        for p in parts {
            for r in 0..p.rows {
                for c in 0..p.cols {
                    out.set(ro + r, co + c, p.at(r, c).clone());
                }
            }
            ro += p.rows;
            co += p.cols;
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix, ExactMatError> {
        if self.rows != other.rows {
            return Err(ExactMatError::DimensionMismatch {
                expected: (self.rows, other.cols),
                got: (other.rows, other.cols),
            });
        }
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from(x.clone())).collect(),
        }
    }
}

/// Dense row-major rational matrix; entries are kept in lowest terms with
/// positive denominators by `BigRational` itself.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self, ExactMatError> {
        if data.len() != rows * cols {
            return Err(ExactMatError::BadShape(format!(
                "entry count {} does not equal rows*cols = {}",
                data.len(),
                rows * cols
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, ExactMatError> {
        if self.cols != other.rows {
            return Err(ExactMatError::DimensionMismatch {
                expected: (self.cols, other.rows),
                got: (other.rows, other.cols),
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    let cur = out.at(i, j).clone() + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// True if every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }
}

/// Result of a Smith normal form computation: `left * a * right` is the
/// diagonal matrix with `diag` on the diagonal, `left` and `right` are
/// unimodular, and the nonzero diagonal entries are positive and form a
/// divisibility chain `d1 | d2 | ...` followed by zeros.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diag: Vec<BigInt>,
}

impl SnfResult {
    /// Invariant factors, i.e. the nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by elementary row/column operations. The pivot at each
/// step is the smallest nonzero absolute value in the remaining block, ties
/// broken by row then column order, so the output is deterministic.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut m = a.clone();
    let mut left = IntMatrix::identity(m.rows());
    let mut right = IntMatrix::identity(m.cols());

    let steps = m.rows().min(m.cols());
    let mut n = 0usize;
    while n < steps {
        // locate pivot: smallest nonzero |entry| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for r in n..m.rows() {
            for c in n..m.cols() {
                if m.at(r, c).is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((r, c)),
                    Some((pr, pc)) => {
                        if m.at(r, c).abs() < m.at(pr, pc).abs() {
                            pivot = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        swap_rows(&mut m, &mut left, n, pr);
        swap_cols(&mut m, &mut right, n, pc);

        // clear row and column n; restart whenever a reduction leaves a
        // remainder smaller than the pivot
        loop {
            // find smallest pivot again within row/col n (entries may have shrunk)
            let mut best = (n, n);
            for r in n..m.rows() {
                if !m.at(r, n).is_zero() && m.at(r, n).abs() < m.at(best.0, best.1).abs() {
                    best = (r, n);
                }
            }
            for c in n..m.cols() {
                if !m.at(n, c).is_zero() && m.at(n, c).abs() < m.at(best.0, best.1).abs() {
                    best = (n, c);
                }
            }
            swap_rows(&mut m, &mut left, n, best.0);
            swap_cols(&mut m, &mut right, n, best.1);

            let mut dirty = false;
            for r in (n + 1)..m.rows() {
                if m.at(r, n).is_zero() {
                    continue;
                }
                let q = div_round(m.at(r, n), m.at(n, n));
                if !q.is_zero() {
                    add_row_multiple(&mut m, &mut left, r, n, &-q);
                }
                if !m.at(r, n).is_zero() {
                    dirty = true;
                }
            }
            for c in (n + 1)..m.cols() {
                if m.at(n, c).is_zero() {
                    continue;
                }
                let q = div_round(m.at(n, c), m.at(n, n));
                if !q.is_zero() {
                    add_col_multiple(&mut m, &mut right, c, n, &-q);
                }
                if !m.at(n, c).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // pivot must divide every remaining entry; if not, fold the offending
        // row into row n and repeat the clearing loop
        let mut fixed = true;
        'check: for r in (n + 1)..m.rows() {
            for c in (n + 1)..m.cols() {
                if !(m.at(r, c) % m.at(n, n)).is_zero() {
                    add_row_multiple(&mut m, &mut left, n, r, &BigInt::one());
                    fixed = false;
                    break 'check;
                }
            }
        }
        if !fixed {
            continue; // redo step n with the new row
        }

        if m.at(n, n).is_negative() {
            negate_row(&mut m, &mut left, n);
        }
        n += 1;
    }

    let diag: Vec<BigInt> = (0..steps).map(|i| m.at(i, i).clone()).collect();
    SnfResult { left, right, diag }
}

fn swap_rows(m: &mut IntMatrix, left: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols() {
        let x = m.at(a, c).clone();
        let y = m.at(b, c).clone();
        m.set(a, c, y);
        m.set(b, c, x);
    }
    for c in 0..left.cols() {
        let x = left.at(a, c).clone();
        let y = left.at(b, c).clone();
        left.set(a, c, y);
        left.set(b, c, x);
    }
}

fn swap_cols(m: &mut IntMatrix, right: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.rows() {
        let x = m.at(r, a).clone();
        let y = m.at(r, b).clone();
        m.set(r, a, y);
        m.set(r, b, x);
    }
    for r in 0..right.rows() {
        let x = right.at(r, a).clone();
        let y = right.at(r, b).clone();
        right.set(r, a, y);
        right.set(r, b, x);
    }
}

/// row[a] += q * row[b]
fn add_row_multiple(m: &mut IntMatrix, left: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let v = m.at(a, c) + q * m.at(b, c);
        m.set(a, c, v);
    }
    for c in 0..left.cols() {
        let v = left.at(a, c) + q * left.at(b, c);
        left.set(a, c, v);
    }
}

/// col[a] += q * col[b]
fn add_col_multiple(m: &mut IntMatrix, right: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for r in 0..m.rows() {
        let v = m.at(r, a) + q * m.at(r, b);
        m.set(r, a, v);
    }
    for r in 0..right.rows() {
        let v = right.at(r, a) + q * right.at(r, b);
        right.set(r, a, v);
    }
}

fn negate_row(m: &mut IntMatrix, left: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let v = -m.at(r, c);
        m.set(r, c, v);
    }
    for c in 0..left.cols() {
        let v = -left.at(r, c);
        left.set(r, c, v);
    }
}

/// Round-to-nearest quotient, which keeps remainders at most |b|/2 and makes
/// the reduction loop converge quickly.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if (r.abs() * &two) > b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Column-style Hermite normal form: returns `(h, u)` with `a * u = h`,
/// `u` unimodular and `h` in lower-triangular column echelon form.
pub fn hnf_col(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut m = a.clone();
    // reuse the row-op machinery on the transpose
    let mut u = IntMatrix::identity(m.cols());
    let mut pivot_row = 0usize;
    let mut pivot_col = 0usize;
    while pivot_row < m.rows() && pivot_col < m.cols() {
        // reduce columns pivot_col.. against each other in row pivot_row
        loop {
            let mut best: Option<usize> = None;
            for c in pivot_col..m.cols() {
                if m.at(pivot_row, c).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(c),
                    Some(b) if m.at(pivot_row, c).abs() < m.at(pivot_row, b).abs() => Some(c),
                    keep => keep,
                };
            }
            let Some(b) = best else { break };
            swap_cols(&mut m, &mut u, pivot_col, b);
            let mut dirty = false;
            for c in (pivot_col + 1)..m.cols() {
                if m.at(pivot_row, c).is_zero() {
                    continue;
                }
                let q = div_round(m.at(pivot_row, c), m.at(pivot_row, pivot_col));
                if !q.is_zero() {
                    add_col_multiple(&mut m, &mut u, c, pivot_col, &-q);
                }
                if !m.at(pivot_row, c).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if m.at(pivot_row, pivot_col).is_zero() {
            pivot_row += 1; // no pivot in this row
            continue;
        }
        if m.at(pivot_row, pivot_col).is_negative() {
            for r in 0..m.rows() {
                let v = -m.at(r, pivot_col);
                m.set(r, pivot_col, v);
            }
            for r in 0..u.rows() {
                let v = -u.at(r, pivot_col);
                u.set(r, pivot_col, v);
            }
        }
        pivot_row += 1;
        pivot_col += 1;
    }
    (m, u)
}

/// Basis of the integer column span of `a`: the nonzero columns of the
/// column Hermite form.
pub fn column_span_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf_col(a);
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..h.cols() {
        let col = h.col(c);
        if col.iter().any(|x| !x.is_zero()) {
            cols.push(col);
        }
    }
    if cols.is_empty() {
        return IntMatrix::zero(a.rows(), 0);
    }
    IntMatrix::from_cols(cols).expect("columns share the height of a")
}

/// Saturated kernel: the columns form a basis of `{x : a·x = 0}` that is
/// primitive, i.e. extends to a basis of the full integer space.
pub fn kernel_saturated(a: &IntMatrix) -> IntMatrix {
    if a.rows() == 0 {
        return IntMatrix::identity(a.cols());
    }
    let s = snf(a);
    let r = s.rank();
    let cols: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| s.right.col(j)).collect();
    if cols.is_empty() {
        return IntMatrix::zero(a.cols(), 0);
    }
    IntMatrix::from_cols(cols).expect("kernel columns have full height")
}

/// Inertia of a symmetric matrix: `(n_plus, n_minus, n_zero)` computed by
/// exact symmetric congruence diagonalization over the rationals.
pub fn signature_symmetric(g: &IntMatrix) -> Result<(usize, usize, usize), ExactMatError> {
    if let Some((r, c)) = g.symmetry_defect() {
        return Err(ExactMatError::NotSymmetric { row: r, col: c });
    }
    let n = g.rows();
    let mut m = g.to_rational();
    let mut plus = 0usize;
    let mut minus = 0usize;
    let mut zero = 0usize;
    let mut k = 0usize;
    while k < n {
        if m.at(k, k).is_zero() {
            // try to bring a nonzero diagonal entry to position k
            if let Some(j) = ((k + 1)..n).find(|&j| !m.at(j, j).is_zero()) {
                sym_swap(&mut m, k, j);
            } else if let Some(j) = ((k + 1)..n).find(|&j| !m.at(k, j).is_zero()) {
                // two-step trick: row/col k += row/col j makes the diagonal 2*m[k][j]
                sym_add(&mut m, k, j);
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let pivot = m.at(k, k).clone();
        if pivot.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        for j in (k + 1)..n {
            if m.at(k, j).is_zero() {
                continue;
            }
            let factor = m.at(k, j) / &pivot;
            // row j -= factor * row k ; col j -= factor * col k
            for c in 0..n {
                let v = m.at(j, c) - &factor * m.at(k, c);
                m.set(j, c, v);
            }
            for r in 0..n {
                let v = m.at(r, j) - &factor * m.at(r, k);
                m.set(r, j, v);
            }
        }
        k += 1;
    }
    Ok((plus, minus, zero))
}

fn sym_swap(m: &mut RatMatrix, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let x = m.at(a, c).clone();
        let y = m.at(b, c).clone();
        m.set(a, c, y);
        m.set(b, c, x);
    }
    for r in 0..n {
        let x = m.at(r, a).clone();
        let y = m.at(r, b).clone();
        m.set(r, a, y);
        m.set(r, b, x);
    }
}

fn sym_add(m: &mut RatMatrix, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let v = m.at(a, c) + m.at(b, c);
        m.set(a, c, v);
    }
    for r in 0..n {
        let v = m.at(r, a) + m.at(r, b);
        m.set(r, a, v);
    }
}

/// Signed determinant by fraction-free Bareiss elimination.
pub fn det_exact(g: &IntMatrix) -> Result<BigInt, ExactMatError> {
    if !g.is_square() {
        return Err(ExactMatError::NotSquare);
    }
    let n = g.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = g.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..(n - 1) {
        if m.at(k, k).is_zero() {
            let Some(swap) = ((k + 1)..n).find(|&r| !m.at(r, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            for c in 0..n {
                let x = m.at(k, c).clone();
                let y = m.at(swap, c).clone();
                m.set(k, c, y);
                m.set(swap, c, x);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                let v = num / &prev; // exact division in Bareiss
                m.set(i, j, v);
            }
        }
        prev = m.at(k, k).clone();
    }
    let d = m.at(n - 1, n - 1).clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Solve `a · x = b` exactly. Errors with [`ExactMatError::Inconsistent`] if no
/// solution exists and with [`ExactMatError::AmbiguousSolve`] if the solution
/// is not unique.
pub fn rational_solve(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, ExactMatError> {
    if a.rows() != b.rows() {
        return Err(ExactMatError::DimensionMismatch { expected: (a.rows(), b.cols()), got: (b.rows(), b.cols()) });
    }
    let rows = a.rows();
    let cols = a.cols();
    let rhs = b.cols();
    let mut m = RatMatrix::zero(rows, cols + rhs);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, a.at(r, c).clone());
        }
        for c in 0..rhs {
            m.set(r, cols + c, b.at(r, c).clone());
        }
    }
    // forward elimination with column pivots
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m.at(r, col).is_zero()) else { continue };
        if p != row {
            for c in 0..(cols + rhs) {
                let x = m.at(row, c).clone();
                let y = m.at(p, c).clone();
                m.set(row, c, y);
                m.set(p, c, x);
            }
        }
        let inv = m.at(row, col).clone();
        for c in col..(cols + rhs) {
            let v = m.at(row, c) / &inv;
            m.set(row, c, v);
        }
        for r in 0..rows {
            if r == row || m.at(r, col).is_zero() {
                continue;
            }
            let f = m.at(r, col).clone();
            for c in col..(cols + rhs) {
                let v = m.at(r, c) - &f * m.at(row, c);
                m.set(r, c, v);
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistency: zero row with nonzero rhs
    for r in row..rows {
        if (0..rhs).any(|c| !m.at(r, cols + c).is_zero()) {
            return Err(ExactMatError::Inconsistent);
        }
    }
    if pivot_cols.len() < cols {
        return Err(ExactMatError::AmbiguousSolve);
    }
    let mut x = RatMatrix::zero(cols, rhs);
    for (r, &col) in pivot_cols.iter().enumerate() {
        for c in 0..rhs {
            x.set(col, c, m.at(r, cols + c).clone());
        }
    }
    Ok(x)
}

/// Exact inverse of a square rational matrix.
pub fn rational_inverse(a: &RatMatrix) -> Result<RatMatrix, ExactMatError> {
    if a.rows() != a.cols() {
        return Err(ExactMatError::NotSquare);
    }
    rational_solve(a, &RatMatrix::identity(a.rows()))
}

/// True iff `n` is the square of a nonnegative integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// True iff the rational is the square of a rational number.
pub fn is_square_rational(q: &BigRational) -> bool {
    is_perfect_square(q.numer()) && is_perfect_square(q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Oracle: invariant factors via gcd of k×k minors, feasible up to 4×4.
    fn snf_minor_oracle(a: &IntMatrix) -> Vec<BigInt> {
        let n = a.rows().min(a.cols());
        let mut gcds = Vec::new();
        for k in 1..=n {
            let mut g = BigInt::zero();
            for rows in combinations(a.rows(), k) {
                for cols in combinations(a.cols(), k) {
                    let mut sub = IntMatrix::zero(k, k);
                    for (i, &r) in rows.iter().enumerate() {
                        for (j, &c) in cols.iter().enumerate() {
                            sub.set(i, j, a.at(r, c).clone());
                        }
                    }
                    g = num_integer::Integer::gcd(&g, &det_exact(&sub).unwrap());
                }
            }
            gcds.push(g);
        }
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for g in gcds {
            if g.is_zero() {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if k > n {
            return vec![];
        }
        let mut out = Vec::new();
        for first in 0..=(n - k) {
            for mut rest in combinations(n - first - 1, k - 1) {
                for x in rest.iter_mut() {
                    *x += first + 1;
                }
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }

    fn cofactor_det(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return a.at(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for c in 0..n {
            if a.at(0, c).is_zero() {
                continue;
            }
            let mut sub = IntMatrix::zero(n - 1, n - 1);
            for r in 1..n {
                let mut jj = 0;
                for j in 0..n {
                    if j == c {
                        continue;
                    }
                    sub.set(r - 1, jj, a.at(r, j).clone());
                    jj += 1;
                }
            }
            let term = a.at(0, c) * cofactor_det(&sub);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn check_snf(a: &IntMatrix) {
        let s = snf(a);
        let prod = s.left.mul(a).unwrap().mul(&s.right).unwrap();
        for r in 0..prod.rows() {
            for c in 0..prod.cols() {
                let expect = if r == c && r < s.diag.len() { s.diag[r].clone() } else { BigInt::zero() };
                assert_eq!(prod.at(r, c), &expect, "transform identity fails at ({r},{c})");
            }
        }
        assert_eq!(det_exact(&s.left).unwrap().abs(), bi(1));
        assert_eq!(det_exact(&s.right).unwrap().abs(), bi(1));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {f:?}");
        }
        assert!(f.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn snf_diag_2_3() {
        // oracle: gcd of entries is 1, product of factors is 6
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        check_snf(&a);
        assert_eq!(snf(&a).invariant_factors(), vec![bi(1), bi(6)]);
        assert_eq!(snf_minor_oracle(&a), vec![bi(1), bi(6)]);
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        assert_eq!(snf(&a).invariant_factors(), vec![bi(1), bi(1), bi(1)]);
    }

    #[test]
    fn snf_2x2_example() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        check_snf(&a);
        // oracle: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        assert_eq!(snf_minor_oracle(&a), vec![bi(2), bi(4)]);
        assert_eq!(snf(&a).invariant_factors(), vec![bi(2), bi(4)]);
    }

    #[test]
    fn kernel_coordinate() {
        let a = IntMatrix::from_i64_rows(&[&[1, 0]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(a.mul(&k).unwrap(), IntMatrix::zero(1, 1));
        assert_eq!(k.col(0).iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![bi(0), bi(1)]);
    }

    #[test]
    fn kernel_2_4() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(a.mul(&k).unwrap(), IntMatrix::zero(1, 1));
        // oracle: enumerate small solutions of 2x + 4y = 0; all are multiples of (2,-1)
        let g = k.col(0);
        for x in -10i64..=10 {
            for y in -10i64..=10 {
                if 2 * x + 4 * y == 0 {
                    let (x, y) = (bi(x), bi(y));
                    // (x,y) must be an integer multiple of g
                    let ok = if g[0].is_zero() { x.is_zero() } else { (&x * &g[1]) == (&y * &g[0]) };
                    assert!(ok, "({x},{y}) not on the kernel line");
                }
            }
        }
        // primitivity
        assert_eq!(snf(&k.transpose()).invariant_factors(), vec![bi(1)]);
    }

    #[test]
    fn kernel_invertible_is_empty() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(kernel_saturated(&a).cols(), 0);
    }

    #[test]
    fn signature_hyperbolic() {
        let u = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature_symmetric(&u).unwrap(), (1, 1, 0));
    }

    #[test]
    fn signature_a2() {
        // leading principal minors -2, 3 -> both eigenvalues negative
        let a2 = IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]]);
        assert_eq!(signature_symmetric(&a2).unwrap(), (0, 2, 0));
    }

    #[test]
    fn signature_rejects_nonsymmetric() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[2, 0]]);
        assert!(matches!(signature_symmetric(&m), Err(ExactMatError::NotSymmetric { .. })));
    }

    #[test]
    fn det_u() {
        let u = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_exact(&u).unwrap(), bi(-1));
    }

    #[test]
    fn det_rejects_nonsquare() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3]]);
        assert!(matches!(det_exact(&m), Err(ExactMatError::NotSquare)));
    }

    #[test]
    fn solve_identity() {
        let a = RatMatrix::identity(3);
        let b = IntMatrix::from_i64_rows(&[&[5], &[-7], &[11]]).to_rational();
        assert_eq!(rational_solve(&a, &b).unwrap(), b);
    }

    #[test]
    fn solve_u_gram() {
        let u = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).to_rational();
        let b = IntMatrix::from_i64_rows(&[&[1], &[0]]).to_rational();
        let x = rational_solve(&u, &b).unwrap();
        assert_eq!(x, IntMatrix::from_i64_rows(&[&[0], &[1]]).to_rational());
    }

    #[test]
    fn solve_scalar() {
        let a = IntMatrix::from_i64_rows(&[&[-2]]).to_rational();
        let b = IntMatrix::from_i64_rows(&[&[1]]).to_rational();
        let x = rational_solve(&a, &b).unwrap();
        assert_eq!(x.at(0, 0), &BigRational::new(bi(-1), bi(2)));
    }

    #[test]
    fn solve_errors() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).to_rational();
        let b = IntMatrix::from_i64_rows(&[&[1], &[2]]).to_rational();
        assert!(matches!(rational_solve(&a, &b), Err(ExactMatError::Inconsistent)));
        let b2 = IntMatrix::from_i64_rows(&[&[1], &[1]]).to_rational();
        assert!(matches!(rational_solve(&a, &b2), Err(ExactMatError::AmbiguousSolve)));
    }

    #[test]
    fn hnf_identity_holds() {
        let a = IntMatrix::from_i64_rows(&[&[4, 6, 2], &[2, 8, 10]]);
        let (h, u) = hnf_col(&a);
        assert_eq!(a.mul(&u).unwrap(), h);
        assert_eq!(det_exact(&u).unwrap().abs(), bi(1));
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&bi(0)));
        assert!(is_perfect_square(&bi(49)));
        assert!(!is_perfect_square(&bi(48)));
        assert!(!is_perfect_square(&bi(-4)));
        assert!(is_square_rational(&BigRational::new(bi(9), bi(4))));
        assert!(!is_square_rational(&BigRational::new(bi(9), bi(8))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn snf_random(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let data: Vec<BigInt> = entries.iter().map(|&x| bi(x)).collect();
            let a = IntMatrix::new(3, 4, data).unwrap();
            check_snf(&a);
        }

        #[test]
        fn snf_square_det_product(entries in proptest::collection::vec(-6i64..=6, 9)) {
            let data: Vec<BigInt> = entries.iter().map(|&x| bi(x)).collect();
            let a = IntMatrix::new(3, 3, data).unwrap();
            let d = det_exact(&a).unwrap();
            if !d.is_zero() {
                let prod: BigInt = snf(&a).invariant_factors().iter().product();
                prop_assert_eq!(prod, d.abs());
            }
        }

        #[test]
        fn det_matches_cofactor(entries in proptest::collection::vec(-5i64..=5, 16)) {
            let data: Vec<BigInt> = entries.iter().map(|&x| bi(x)).collect();
            let a = IntMatrix::new(4, 4, data).unwrap();
            prop_assert_eq!(det_exact(&a).unwrap(), cofactor_det(&a));
        }

        #[test]
        fn kernel_is_primitive(entries in proptest::collection::vec(-4i64..=4, 8)) {
            let data: Vec<BigInt> = entries.iter().map(|&x| bi(x)).collect();
            let a = IntMatrix::new(2, 4, data).unwrap();
            let k = kernel_saturated(&a);
            prop_assert_eq!(a.mul(&k).unwrap(), IntMatrix::zero(2, k.cols()));
            if k.cols() > 0 {
                let f = snf(&k.transpose()).invariant_factors();
                prop_assert!(f.iter().all(|d| d == &bi(1)), "kernel not saturated: {:?}", f);
            }
        }

        #[test]
        fn signature_congruence_invariant(entries in proptest::collection::vec(-3i64..=3, 6), shears in proptest::collection::vec((-2i64..=2, 0usize..3, 0usize..3), 4)) {
            // random symmetric 3x3
            let mut g = IntMatrix::zero(3, 3);
            let mut it = entries.iter();
            for r in 0..3 {
                for c in r..3 {
                    let v = bi(*it.next().unwrap());
                    g.set(r, c, v.clone());
                    g.set(c, r, v);
                }
            }
            // random unimodular as a product of shears
            let mut u = IntMatrix::identity(3);
            for &(k, i, j) in &shears {
                if i != j {
                    let mut s = IntMatrix::identity(3);
                    s.set(i, j, bi(k));
                    u = u.mul(&s).unwrap();
                }
            }
            let g2 = u.transpose().mul(&g).unwrap().mul(&u).unwrap();
            prop_assert_eq!(signature_symmetric(&g).unwrap(), signature_symmetric(&g2).unwrap());
        }
    }

    #[test]
    fn snf_example_with_minor_oracle_3x3() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        check_snf(&a);
        assert_eq!(snf(&a).invariant_factors(), snf_minor_oracle(&a));
    }
}
