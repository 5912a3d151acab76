//! Dense matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::Rat;

/// A column vector.
pub type QVector = Vec<Rat>;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &Rat) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn diag(values: &[Rat]) -> Self {
        let mut m = QMatrix::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix { rows, cols, entries }
    }

    /// Row-major construction; all rows must have length `cols`.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer matrix from literal rows. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        QMatrix::from_fn(r, c, |i, j| {
            let row = rows[i].as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            Rat::from_int(row[j])
        })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[QVector]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::ShapeMismatch("column length differs from row count".into()));
        }
        Ok(QMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn row(&self, i: usize) -> QVector {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<QVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rat) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn try_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> QVector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.entries[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> QMatrix {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The commutator `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &QMatrix) -> QMatrix {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Returns `Some(c)` when the matrix equals `c·I`.
    pub fn scalar_value(&self) -> Option<Rat> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { Rat::zero() } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected = if i == j { &c } else { &Rat::zero() };
                if &self[(i, j)] != expected {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        QMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                Rat::zero()
            } else {
                a * &other[(i % other.rows, j % other.cols)]
            }
        })
    }

    pub fn block_diag(blocks: &[QMatrix]) -> QMatrix {
        let rows = blocks.iter().map(QMatrix::rows).sum();
        let cols = blocks.iter().map(QMatrix::cols).sum();
        let mut out = QMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { matrix: m, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            let support: Vec<usize> = (c..cols).filter(|&j| !self[(r, j)].is_zero()).collect();
            for &j in &support {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for &j in &support {
                    let delta = &f * &self[(r, j)];
                    self[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by forward elimination, skipping zero entries.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<(usize, Rat)>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self[(i, j)].is_zero())
                    .map(|j| (j, self[(i, j)].clone()))
                    .collect()
            })
            .filter(|r: &Vec<(usize, Rat)>| !r.is_empty())
            .collect();
        sparse_rank(&mut rows)
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        let delta = &f * &m[(c, j)];
                        m[(i, j)] -= delta;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// Characteristic polynomial `det(t·I − self)` (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = QMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = -(am.trace() / Rat::from_int(k as i64));
        }
        Poly::new(coeffs)
    }
}

/// Rank of a list of sparse rows `(column, value)` sorted by column.
pub(crate) fn sparse_rank(rows: &mut Vec<Vec<(usize, Rat)>>) -> usize {
    let mut rank = 0;
    while !rows.is_empty() {
        // pivot on the row with the smallest leading column, preferring short rows
        let (best, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (r[0].0, r.len()))
            .expect("non-empty");
        let pivot = rows.swap_remove(best);
        let lead = pivot[0].0;
        let inv = pivot[0].1.recip();
        rank += 1;
        let mut kept = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            if row[0].0 != lead {
                kept.push(row);
                continue;
            }
            let f = &row[0].1 * &inv;
            let reduced = axpy_sparse(&row, &pivot, &f);
            if !reduced.is_empty() {
                kept.push(reduced);
            }
        }
        *rows = kept;
    }
    rank
}

/// `row − f·pivot` for sparse sorted rows, dropping zeros.
fn axpy_sparse(row: &[(usize, Rat)], pivot: &[(usize, Rat)], f: &Rat) -> Vec<(usize, Rat)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(f * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - f * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon form, pivot columns and rank of `m`.
pub fn rref_canonical(m: &QMatrix) -> (QMatrix, Vec<usize>, usize) {
    let r = m.rref();
    let rank = r.rank();
    (r.matrix, r.pivots, rank)
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    /// Panics on incompatible shapes; see [`QMatrix::try_mul`].
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("incompatible shapes")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Nilpotent Jordan block of size `n`: ones on the superdiagonal.
pub fn jordan_block(n: usize) -> QMatrix {
    QMatrix::from_fn(n, n, |i, j| if j == i + 1 { Rat::one() } else { Rat::zero() })
}

/// Unit vector `e_i` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> QVector {
    (0..n).map(|k| if k == i { Rat::one() } else { Rat::zero() }).collect()
}

pub fn is_zero_vector(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;
    use proptest::prelude::*;

    #[test]
    fn rref_examples() {
        let (m, pivots, rank) = rref_canonical(&QMatrix::from_ints(&[[2, 4], [1, 2]]));
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
        assert_eq!(m, QMatrix::from_ints(&[[1, 2], [0, 0]]));

        let id = QMatrix::identity(3);
        let (m, pivots, rank) = rref_canonical(&id);
        assert_eq!((m, pivots, rank), (id, vec![0, 1, 2], 3));

        let a = QMatrix::from_ints(&[[0, 1], [0, 0]]);
        let (m, pivots, rank) = rref_canonical(&a);
        assert_eq!((m, pivots, rank), (a, vec![1], 1));
    }

    #[test]
    fn det_inverse_charpoly() {
        let a = QMatrix::from_ints(&[[2, 1], [7, 4]]);
        assert_eq!(a.det(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, QMatrix::identity(2));
        assert_eq!(a.char_poly(), Poly::from_ints(&[1, -6, 1]));
        assert!(QMatrix::from_ints(&[[1, 2], [2, 4]]).inverse().is_none());
        assert_eq!(QMatrix::from_ints(&[[0, 1], [1, 0]]).det(), int(-1));
        assert_eq!(jordan_block(3).char_poly(), Poly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn kron_and_blocks() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let k = a.kron(&QMatrix::identity(2));
        assert_eq!(k[(2, 0)], int(3));
        assert_eq!(k[(3, 1)], int(3));
        assert_eq!(k[(0, 1)], int(0));
        let b = QMatrix::block_diag(&[a.clone(), QMatrix::identity(1)]);
        assert_eq!(b.rows(), 3);
        assert_eq!(b[(2, 2)], int(1));
        assert_eq!(b[(1, 0)], int(3));
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                QMatrix::from_row_major(r, c, v.into_iter().map(int).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_rref(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.rref().rank());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn det_matches_rank(m in small_matrix()) {
            if m.is_square() {
                prop_assert_eq!(m.det().is_zero(), m.rank() < m.rows());
            }
        }
    }
}
