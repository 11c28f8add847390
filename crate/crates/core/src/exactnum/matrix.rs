//! Exact integer linear algebra: Smith normal form, linear solving, and
//! kernel lattices.
//!
//! [`smith_normal_form`] returns unimodular `U`, `V` (with tracked inverses)
//! and the diagonal `D = U * A * V` whose nonzero entries form a
//! divisibility chain.  [`smith_solve`] finds an integer solution of
//! `A x = b` or reports that none exists; [`lattice_kernel`] returns a basis
//! of the integer kernel lattice.  Everything is big-integer exact; there is
//! no rounding anywhere.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense row-major matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds from row slices; all rows must share a length.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix { rows: r, cols: c, data: rows.concat() }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let converted: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(&converted)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.entry(k, j);
                    *out.entry_mut(i, j) += t;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.entry(i, j).is_one()
                    } else {
                        self.entry(i, j).is_zero()
                    }
                })
            })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    /// `row_dst += k * row_src`.
    fn row_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = k * self.entry(src, c);
            *self.entry_mut(dst, c) += t;
        }
    }

    /// `col_dst += k * col_src`.
    fn col_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = k * self.entry(r, src);
            *self.entry_mut(r, dst) += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.entry(i, c).clone();
            self.set(i, c, v);
        }
    }
}

/// Result of [`smith_normal_form`]: `u * a * v = d` with `u`, `v`
/// unimodular, `d` diagonal, and `diag[0] | diag[1] | ...` nonnegative.
/// The inverses are tracked exactly alongside the reduction.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    /// Diagonal entries, length `min(rows, cols)`; zeros trail the chain.
    pub diag: Vec<BigInt>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

impl SmithDecomposition {
    /// The diagonal matrix `D` at the original shape.
    pub fn d_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zero(self.rows, self.cols);
        for (i, e) in self.diag.iter().enumerate() {
            d.set(i, i, e.clone());
        }
        d
    }
}

/// The reduction state: the working matrix plus the four transforms kept in
/// lockstep, so `u * a * v = m` and `u * u_inv = v * v_inv = I` hold after
/// every elementary step.
struct Workspace {
    m: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Workspace {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.m.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.m.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// `row_dst += k * row_src`; the inverse transform compensates on the
    /// opposite side.
    fn row_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.m.row_axpy(dst, src, k);
        self.u.row_axpy(dst, src, k);
        let neg = -k;
        self.u_inv.col_axpy(src, dst, &neg);
    }

    /// `col_dst += k * col_src`.
    fn col_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.m.col_axpy(dst, src, k);
        self.v.col_axpy(dst, src, k);
        let neg = -k;
        self.v_inv.row_axpy(src, dst, &neg);
    }

    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        self.u.negate_row(i);
        for r in 0..self.u_inv.rows {
            let v = -self.u_inv.entry(r, i).clone();
            self.u_inv.set(r, i, v);
        }
    }
}

/// Smith normal form over the integers.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Workspace {
        m: a.clone(),
        u: IntegerMatrix::identity(rows),
        u_inv: IntegerMatrix::identity(rows),
        v: IntegerMatrix::identity(cols),
        v_inv: IntegerMatrix::identity(cols),
    };
    let min = rows.min(cols);
    let mut t = 0;
    while t < min {
        // Pivot: the nonzero entry of least magnitude in the trailing
        // submatrix; none means the rest is zero and we are done.
        let Some((pi, pj)) = pivot_position(&w.m, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            // Clear the pivot column with row operations.  A nonzero
            // remainder is strictly smaller than the pivot, so swapping it
            // up and restarting terminates.
            let mut improved = false;
            for i in t + 1..rows {
                if w.m.entry(i, t).is_zero() {
                    continue;
                }
                let q = w.m.entry(i, t) / w.m.entry(t, t);
                let neg_q = -q;
                w.row_op(i, t, &neg_q);
                if !w.m.entry(i, t).is_zero() {
                    w.swap_rows(t, i);
                    improved = true;
                    break;
                }
            }
            if improved {
                continue;
            }
            // Clear the pivot row with column operations; these cannot
            // disturb the already-cleared column except through a swap,
            // which restarts the loop with a smaller pivot.
            for j in t + 1..cols {
                if w.m.entry(t, j).is_zero() {
                    continue;
                }
                let q = w.m.entry(t, j) / w.m.entry(t, t);
                let neg_q = -q;
                w.col_op(j, t, &neg_q);
                if !w.m.entry(t, j).is_zero() {
                    w.swap_cols(t, j);
                    improved = true;
                    break;
                }
            }
            if improved {
                continue;
            }
            // Row and column are clear.  Enforce the divisibility chain: if
            // the pivot misses an entry of the trailing submatrix, folding
            // that row into the pivot row shrinks the pivot to a proper
            // divisor on the next pass.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(w.m.entry(i, j) % w.m.entry(t, t)).is_zero() {
                        w.row_op(t, i, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if w.m.entry(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let diag: Vec<BigInt> = (0..min).map(|i| w.m.entry(i, i).clone()).collect();
    let rank = diag.iter().take_while(|d| !d.is_zero()).count();
    SmithDecomposition {
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
        diag,
        rank,
        rows,
        cols,
    }
}

fn pivot_position(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let e = m.entry(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if e.abs() < m.entry(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// An integer solution of `A x = b`, or `None` when no integer solution
/// exists (including when the rational solution is non-integral).  Free
/// coordinates are set to zero, so the answer is deterministic.
pub fn smith_solve(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match rows");
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        match s.diag.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = num_integer::Integer::div_rem(ci, d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ => {
                if !ci.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(s.v.mul_vec(&y))
}

/// A basis of the kernel lattice `{x : A x = 0}`: the trailing columns of
/// `V`, one per zero invariant factor, each normalized so its first nonzero
/// entry is positive.
pub fn lattice_kernel(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(a);
    let mut basis = Vec::with_capacity(a.cols() - s.rank);
    for j in s.rank..a.cols() {
        let mut col = s.v.column(j);
        if let Some(first) = col.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        basis.push(col);
    }
    basis
}
