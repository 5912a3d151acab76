//! Laurent polynomials in one variable `z` and matrices over them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::Poly;
use crate::rat::Rat;

/// Finite sum `Σ c_e z^e` over integer exponents; zero coefficients are never
/// stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Rat::one(), 0)
    }

    pub fn monomial(c: Rat, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `z^e`.
    pub fn z_pow(e: i64) -> Self {
        LaurentPoly::monomial(Rat::one(), e)
    }

    pub fn constant(c: Rat) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// From integer `(exponent, coefficient)` pairs.
    pub fn from_ints(terms: &[(i64, i64)]) -> Self {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rat::from_int(c))))
    }

    pub fn from_poly(p: &Poly) -> Self {
        LaurentPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    fn add_term(&mut self, e: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `(exponent, coefficient)` pairs by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, d))` when the polynomial is `c·z^d`.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(e, c)| (c.clone(), *e)),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitution `z ↦ 1/z`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval(&self, z: &Rat) -> Rat {
        assert!(!z.is_zero() || self.min_exp().is_none_or(|e| e >= 0), "evaluation at a pole");
        self.terms
            .iter()
            .map(|(e, c)| {
                let p = z.pow(e.unsigned_abs() as u32);
                if *e < 0 {
                    c / p
                } else {
                    c * p
                }
            })
            .sum()
    }

    /// `self / other` when it is again a Laurent polynomial.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        let (Some(lo_a), Some(lo_b)) = (self.min_exp(), other.min_exp()) else {
            return if self.is_zero() && !other.is_zero() { Some(LaurentPoly::zero()) } else { None };
        };
        let to_poly = |p: &LaurentPoly, lo: i64| {
            let deg = (p.max_exp().expect("nonzero") - lo) as usize;
            let mut coeffs = vec![Rat::zero(); deg + 1];
            for (e, c) in p.terms() {
                coeffs[(e - lo) as usize] = c.clone();
            }
            Poly::new(coeffs)
        };
        // other = z^lo_b·B with B(0) ≠ 0, so divisibility reduces to Q[z]
        let (q, r) = to_poly(self, lo_a).div_rem(&to_poly(other, lo_b));
        r.is_zero().then(|| LaurentPoly::from_poly(&q).shift(lo_a - lo_b))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (e, true) => write!(f, "z^{e}")?,
                (e, false) => write!(f, "{abs}*z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

/// Matrix with Laurent polynomial entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        LaurentMatrix::diag_monomials(&vec![0; n])
    }

    /// `diag(z^{a_1}, …, z^{a_r})`.
    pub fn diag_monomials(exponents: &[i64]) -> Self {
        let n = exponents.len();
        let mut m = LaurentMatrix::zeros(n, n);
        for (i, &a) in exponents.iter().enumerate() {
            m[(i, i)] = LaurentPoly::z_pow(a);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LaurentMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(LaurentMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Constant matrix.
    pub fn from_qmatrix(m: &QMatrix) -> Self {
        LaurentMatrix::from_fn(m.rows(), m.cols(), |i, j| LaurentPoly::constant(m[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        LaurentMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        LaurentMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    /// Multiplication by `z^m`, i.e. tensoring with `O(m)`.
    pub fn twist(&self, m: i64) -> Self {
        LaurentMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e.shift(m)).collect() }
    }

    /// Substitution `z ↦ 1/z` in every entry.
    pub fn invert_variable(&self) -> Self {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(LaurentPoly::invert_variable).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &LaurentMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(LaurentMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = LaurentPoly::zero();
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &rhs[(k, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn kron(&self, other: &LaurentMatrix) -> Self {
        LaurentMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            &self[(i / other.rows, j / other.cols)] * &other[(i % other.rows, j % other.cols)]
        })
    }

    pub fn block_diag(blocks: &[LaurentMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = LaurentMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Largest and smallest exponent over all entries.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().filter_map(LaurentPoly::min_exp).min()?;
        let hi = self.entries.iter().filter_map(LaurentPoly::max_exp).max()?;
        Some((lo, hi))
    }

    /// Every exponent is `≥ 0`.
    pub fn is_polynomial_in_z(&self) -> bool {
        self.exponent_range().is_none_or(|(lo, _)| lo >= 0)
    }

    /// Every exponent is `≤ 0`.
    pub fn is_polynomial_in_inverse(&self) -> bool {
        self.exponent_range().is_none_or(|(_, hi)| hi <= 0)
    }

    /// Coefficient matrix of `z^e`.
    pub fn coefficient(&self, e: i64) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].coeff(e))
    }

    pub fn eval(&self, z: &Rat) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].eval(z))
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> LaurentPoly {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return LaurentPoly::zero();
            };
            if p != k {
                for j in 0..n {
                    m.entries.swap(p * n + j, k * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[(k, k)] * &m[(i, j)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = num.div_exact(&prev).expect("fraction-free elimination divides exactly");
                }
                m[(i, k)] = LaurentPoly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = if n == 0 { LaurentPoly::one() } else { m[(n - 1, n - 1)].clone() };
        if sign {
            -&det
        } else {
            det
        }
    }

    fn minor(&self, row: usize, col: usize) -> LaurentMatrix {
        let n = self.rows;
        LaurentMatrix::from_fn(n - 1, n - 1, |i, j| {
            self[(if i < row { i } else { i + 1 }, if j < col { j } else { j + 1 })].clone()
        })
    }

    /// Classical adjoint, `adj(M)·M = det(M)·I`.
    pub fn adjugate(&self) -> LaurentMatrix {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return LaurentMatrix::identity(1);
        }
        LaurentMatrix::from_fn(n, n, |i, j| {
            let d = self.minor(j, i).det();
            if (i + j) % 2 == 1 {
                -&d
            } else {
                d
            }
        })
    }

    /// `(c, d)` with `det = c·z^d`, or `NotInvertibleOnOverlap`.
    pub fn monomial_det(&self) -> Result<(Rat, i64)> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let det = self.det();
        det.as_monomial().ok_or_else(|| Error::NotInvertibleOnOverlap { det: det.to_string() })
    }

    /// Inverse over the Laurent ring, when the determinant is a monomial.
    pub fn inverse(&self) -> Result<LaurentMatrix> {
        let (c, d) = self.monomial_det()?;
        let inv_det = LaurentPoly::monomial(c.recip(), -d);
        Ok(self.adjugate().scale(&inv_det))
    }
}

impl Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        self.try_mul(rhs).expect("shape mismatch in Laurent matrix product")
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
