//! Subspaces of `Q^n` in canonical form, and flags of them.
//!
//! A [`Subspace`] stores its basis as the transpose of the reduced row
//! echelon form of any spanning set. That form is unique, so two subspaces
//! are equal exactly when their stored bases are identical.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{is_zero_vector, QMatrix, QVector};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    /// `ambient_dim x dim`, columns in reduced column echelon form.
    basis: QMatrix,
    /// Row index of the leading one of each basis column.
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "span{:?} in Q^{}", self.basis_vectors(), self.ambient_dim)
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: QMatrix::zeros(ambient_dim, 0), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: &[QVector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::AmbientMismatch { left: ambient_dim, right: v.len() });
        }
        let rows = QMatrix::from_rows(vectors.to_vec())
            .expect("equal lengths checked")
            .rref();
        let dim = rows.rank();
        let basis = QMatrix::from_fn(ambient_dim, dim, |i, j| rows.matrix[(j, i)].clone());
        Ok(Subspace { ambient_dim, basis, pivots: rows.pivots })
    }

    /// Column space of `m`.
    pub fn column_space(m: &QMatrix) -> Self {
        Subspace::span(m.rows(), &m.columns()).expect("columns share the row count")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis as columns.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<QVector> {
        self.basis.columns()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    /// Membership test by reduction against the canonical basis.
    pub fn contains(&self, v: &[Rat]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut residual = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..self.ambient_dim {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    residual[i] -= &c * b;
                }
            }
        }
        is_zero_vector(&residual)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &vectors)
    }

    /// Intersection, via the kernel of `[U | −V]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = QMatrix::from_fn(self.ambient_dim, p + q, |i, j| {
            if j < p {
                self.basis[(i, j)].clone()
            } else {
                -&other.basis[(i, j - p)]
            }
        });
        let vectors: Vec<QVector> = kernel_vectors(&stacked)
            .into_iter()
            .map(|coeffs| self.basis.mul_vec(&coeffs[..p]))
            .collect();
        Subspace::span(self.ambient_dim, &vectors)
    }

    /// `true` iff `self ⊕ other` is the whole ambient space.
    pub fn direct_sum_check(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        if self.dim() + other.dim() != self.ambient_dim {
            return Ok(false);
        }
        Ok(self.sum(other)?.dim() == self.ambient_dim)
    }

    /// `true` iff `self = a ⊕ b` (internal direct sum inside `self`).
    pub fn is_direct_sum_of(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        Ok(a.dim() + b.dim() == self.dim() && &a.sum(b)? == self)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &QMatrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: m.cols() });
        }
        Ok(Subspace::column_space(&(m * &self.basis)))
    }

    pub fn is_invariant_under(&self, m: &QMatrix) -> Result<bool> {
        if !m.is_square() || m.rows() != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: m.rows() });
        }
        Ok(self.basis_vectors().iter().all(|v| self.contains(&m.mul_vec(v))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersect,
    DirectSumCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combined {
    Space(Subspace),
    Verdict(bool),
}

pub fn subspace_combine(u: &Subspace, v: &Subspace, mode: CombineMode) -> Result<Combined> {
    Ok(match mode {
        CombineMode::Sum => Combined::Space(u.sum(v)?),
        CombineMode::Intersect => Combined::Space(u.intersect(v)?),
        CombineMode::DirectSumCheck => Combined::Verdict(u.direct_sum_check(v)?),
    })
}

/// Kernel vectors of `m` read off its reduced row echelon form.
pub(crate) fn kernel_vectors(m: &QMatrix) -> Vec<QVector> {
    let rref = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = Rat::one();
            for (row, &p) in rref.pivots.iter().enumerate() {
                v[p] = -&rref.matrix[(row, f)];
            }
            v
        })
        .collect()
}

/// Null space `{v : M·v = 0}`.
pub fn kernel_basis(m: &QMatrix) -> Subspace {
    Subspace::span(m.cols(), &kernel_vectors(m)).expect("kernel vectors have length cols")
}

/// Column space of `M`.
pub fn image_basis(m: &QMatrix) -> Subspace {
    Subspace::column_space(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Ascending,
    Descending,
}

/// Strictly monotone chain of subspaces of a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    direction: Direction,
    spaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(direction: Direction, spaces: Vec<Subspace>) -> Result<Self> {
        for w in spaces.windows(2) {
            if w[0].ambient_dim() != w[1].ambient_dim() {
                return Err(Error::AmbientMismatch { left: w[0].ambient_dim(), right: w[1].ambient_dim() });
            }
            let (small, large) = match direction {
                Direction::Ascending => (&w[0], &w[1]),
                Direction::Descending => (&w[1], &w[0]),
            };
            if !(small.is_subspace_of(large) && small.dim() < large.dim()) {
                return Err(Error::NotAFlag(format!("inclusion is not strict and {direction:?}")));
            }
        }
        Ok(Flag { direction, spaces })
    }

    pub fn ascending(spaces: Vec<Subspace>) -> Result<Self> {
        Flag::new(Direction::Ascending, spaces)
    }

    pub fn descending(spaces: Vec<Subspace>) -> Result<Self> {
        Flag::new(Direction::Descending, spaces)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.spaces.first().map(Subspace::ambient_dim)
    }
}
