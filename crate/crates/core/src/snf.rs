//! Exact integer matrices and Smith normal form.
//!
//! The matrices arising here are tiny (relator count × generator count), so
//! the algorithm favors clarity: minimal-absolute-value pivoting and plain
//! row/column reduction over arbitrary-precision integers, with the
//! unimodular transforms tracked so `U·A·V = D` can be checked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows<R, T>(rows: Vec<R>) -> IntMatrix
    where
        R: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Result of Smith normal form: `u * a * v = d` with `u`, `v` unimodular,
/// `d` diagonal with nonnegative entries satisfying `d₁ | d₂ | …`.
/// `invariants` lists the nonzero diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub invariants: Vec<BigInt>,
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let bound = a.rows().min(a.cols());
    let mut t = 0;
    while t < bound {
        // Smallest nonzero entry of the trailing submatrix as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..d.rows() {
            for j in t..d.cols() {
                if !d.get(i, j).is_zero()
                    && pivot
                        .map(|(pi, pj)| d.get(i, j).abs() < d.get(pi, pj).abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        // Clear the pivot's column and row; truncated division keeps every
        // remainder strictly smaller than the pivot, so this terminates.
        let mut dirty = false;
        for i in (t + 1)..d.rows() {
            if !d.get(i, t).is_zero() {
                let q = -(d.get(i, t) / d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                dirty = dirty || !d.get(i, t).is_zero();
            }
        }
        for j in (t + 1)..d.cols() {
            if !d.get(t, j).is_zero() {
                let q = -(d.get(t, j) / d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                dirty = dirty || !d.get(t, j).is_zero();
            }
        }
        if dirty {
            continue;
        }
        // Divisibility: fold any non-multiple into the pivot's row and
        // retry with a strictly smaller pivot eventually emerging.
        let mut fixed = true;
        'scan: for i in (t + 1)..d.rows() {
            for j in (t + 1)..d.cols() {
                if !(d.get(i, j) % d.get(t, t)).is_zero() {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
    }
    let invariants = (0..bound)
        .map(|i| d.get(i, i).clone())
        .filter(|x| !x.is_zero())
        .collect();
    SmithNormalForm {
        d,
        u,
        v,
        invariants,
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    a.get(n - 1, n - 1) * sign
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Gcd of all `k×k` minors (0 when there are none or all vanish). The SNF
/// invariant products must match these, which is the standard correctness
/// oracle.
pub fn gcd_of_minors(m: &IntMatrix, k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for rows in combinations(m.rows(), k) {
        for cols in combinations(m.cols(), k) {
            let mut sub = IntMatrix::zeros(k, k);
            for (si, &i) in rows.iter().enumerate() {
                for (sj, &j) in cols.iter().enumerate() {
                    sub.set(si, sj, m.get(i, j).clone());
                }
            }
            acc = acc.gcd(&bareiss_det(&sub));
        }
    }
    acc
}
