//! Nilpotent endomorphisms: power filtrations, Jordan chains, orbit curves
//! and complementary flags.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{is_zero_vector, unit_vector, QMatrix, QVector};
use crate::rat::Rat;
use crate::subspace::{image_basis, kernel_basis, Direction, Flag, Subspace};

/// Dimension data of the filtrations `ker A ⊆ ker A² ⊆ …` and
/// `… ⊆ im A² ⊆ im A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentProfile {
    /// Least `m` with `A^m = 0`.
    pub degree: usize,
    /// `dim ker(A^j)` for `j = 1..=degree`.
    pub ker_dims: Vec<usize>,
    /// `dim im(A^j)` for `j = 1..degree`.
    pub im_dims: Vec<usize>,
    /// Jordan block sizes, weakly decreasing.
    pub partition: Vec<usize>,
}

/// Powers `A^0, A^1, …, A^degree` of a nilpotent matrix, the last one zero.
fn nilpotent_powers(a: &QMatrix) -> Result<Vec<QMatrix>> {
    let n = a.ensure_square()?;
    let mut powers = vec![QMatrix::identity(n)];
    while !powers.last().expect("non-empty").is_zero() {
        if powers.len() > n {
            return Err(Error::NotNilpotent);
        }
        let next = powers.last().expect("non-empty") * a;
        powers.push(next);
    }
    Ok(powers)
}

/// Nilpotency degree of `a`, or `NotNilpotent`.
pub fn nilpotency_degree(a: &QMatrix) -> Result<usize> {
    Ok(nilpotent_powers(a)?.len() - 1)
}

pub fn is_nilpotent(a: &QMatrix) -> bool {
    a.is_square() && nilpotent_powers(a).is_ok()
}

/// Conjugate of a partition given by its column heights.
fn conjugate(counts: &[usize]) -> Vec<usize> {
    let max = counts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|i| counts.iter().filter(|&&c| c >= i).count()).collect()
}

pub fn nilpotent_profile(a: &QMatrix) -> Result<NilpotentProfile> {
    let powers = nilpotent_powers(a)?;
    let degree = powers.len() - 1;
    let n = a.rows();
    let ranks: Vec<usize> = powers.iter().map(QMatrix::rank).collect();
    let ker_dims: Vec<usize> = ranks[1..].iter().map(|r| n - r).collect();
    let im_dims = ranks[1..degree].to_vec();
    // ker_j − ker_{j−1} counts the blocks of size ≥ j
    let steps: Vec<usize> =
        (0..degree).map(|j| ker_dims[j] - if j == 0 { 0 } else { ker_dims[j - 1] }).collect();
    let partition = conjugate(&steps);
    Ok(NilpotentProfile { degree, ker_dims, im_dims, partition })
}

/// Jordan chains `(v, Av, …, A^{l−1}v)` with `A^l v = 0`, longest first.
///
/// Chain heads are chosen top-down through the kernel filtration, taking
/// standard basis vectors in index order before other kernel vectors.
pub fn jordan_basis(a: &QMatrix) -> Result<Vec<Vec<QVector>>> {
    let powers = nilpotent_powers(a)?;
    let degree = powers.len() - 1;
    let n = a.rows();
    let kernels: Vec<Subspace> = powers.iter().map(kernel_basis).collect();
    let mut heads: Vec<(QVector, usize)> = Vec::new();
    for level in (1..=degree).rev() {
        let target = &kernels[level];
        // images of longer chains at this level
        let mut spanning = kernels[level - 1].basis_vectors();
        for (v, len) in &heads {
            spanning.push(powers[len - level].mul_vec(v));
        }
        let mut covered = Subspace::span(n, &spanning)?;
        let candidates = (0..n)
            .map(|i| unit_vector(n, i))
            .filter(|v| target.contains(v))
            .chain(target.basis_vectors());
        for c in candidates {
            if covered.dim() == target.dim() {
                break;
            }
            if covered.contains(&c) {
                continue;
            }
            covered = covered.sum(&Subspace::span(n, std::slice::from_ref(&c))?)?;
            heads.push((c, level));
        }
        debug_assert_eq!(covered, *target);
    }
    Ok(heads
        .into_iter()
        .map(|(v, len)| (0..len).map(|i| powers[i].mul_vec(&v)).collect())
        .collect())
}

/// Closure of the orbit `t ↦ exp(tA)·u` in projective space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCurve {
    /// Largest `j` with `A^j u ≠ 0`; the curve is a rational normal curve of
    /// this degree.
    pub degree: usize,
    /// `A^i u / i!` for `i = 0..=degree`.
    pub coefficient_vectors: Vec<QVector>,
}

impl OrbitCurve {
    /// `exp(tA)·u = Σ t^i A^i u / i!`.
    pub fn point_at(&self, t: &Rat) -> QVector {
        let n = self.coefficient_vectors[0].len();
        let mut out = vec![Rat::zero(); n];
        let mut power = Rat::one();
        for v in &self.coefficient_vectors {
            for (o, x) in out.iter_mut().zip(v) {
                *o += &power * x;
            }
            power *= t;
        }
        out
    }
}

pub fn orbit_curve(a: &QMatrix, u: &[Rat]) -> Result<OrbitCurve> {
    let n = a.ensure_square()?;
    if u.len() != n {
        return Err(Error::AmbientMismatch { left: n, right: u.len() });
    }
    if is_zero_vector(u) {
        return Err(Error::ZeroVector);
    }
    nilpotent_powers(a)?;
    let mut vectors = vec![u.to_vec()];
    loop {
        let i = vectors.len() as i64;
        let next: QVector = a
            .mul_vec(vectors.last().expect("non-empty"))
            .into_iter()
            .map(|x| x / Rat::from_int(i))
            .collect();
        if is_zero_vector(&next) {
            break;
        }
        vectors.push(next);
    }
    Ok(OrbitCurve { degree: vectors.len() - 1, coefficient_vectors: vectors })
}

/// `ker(A^j)` for `j = 1..=k`.
pub fn kernel_flag(a: &QMatrix, k: usize) -> Result<Flag> {
    a.ensure_square()?;
    Flag::ascending((1..=k).map(|j| kernel_basis(&a.pow(j))).collect())
}

/// `im(B^j)` for `j = 1..=k`.
pub fn image_flag(b: &QMatrix, k: usize) -> Result<Flag> {
    b.ensure_square()?;
    Flag::descending((1..=k).map(|j| image_basis(&b.pow(j))).collect())
}

fn check_shapes(u: &Flag, v: &Flag) -> Result<()> {
    if u.direction() != Direction::Ascending {
        return Err(Error::NotAFlag("first flag must be ascending".into()));
    }
    if v.direction() != Direction::Descending {
        return Err(Error::NotAFlag("second flag must be descending".into()));
    }
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    if let (Some(l), Some(r)) = (u.ambient_dim(), v.ambient_dim()) {
        if l != r {
            return Err(Error::AmbientMismatch { left: l, right: r });
        }
    }
    Ok(())
}

/// Index (1-based) of the first `j` with `U_j ⊕ V_j ≠ E`.
fn first_failure(u: &Flag, v: &Flag) -> Result<Option<usize>> {
    check_shapes(u, v)?;
    for (j, (uj, vj)) in u.spaces().iter().zip(v.spaces()).enumerate() {
        if !uj.direct_sum_check(vj)? {
            return Ok(Some(j + 1));
        }
    }
    Ok(None)
}

/// `true` iff `U_j ⊕ V_j = E` for every `j`.
pub fn check_complementary_flags(u: &Flag, v: &Flag) -> Result<bool> {
    Ok(first_failure(u, v)?.is_none())
}

/// The pieces `D_j = U_j ∩ V_{j−1}`, `j = 2..=k`, with `U_j = U_{j−1} ⊕ D_j`
/// verified for each.
pub fn flag_refinement(u: &Flag, v: &Flag) -> Result<Vec<Subspace>> {
    if let Some(index) = first_failure(u, v)? {
        return Err(Error::NotComplementary { index });
    }
    let (us, vs) = (u.spaces(), v.spaces());
    let mut pieces = Vec::new();
    for j in 1..us.len() {
        let d = us[j].intersect(&vs[j - 1])?;
        assert!(
            us[j].is_direct_sum_of(&us[j - 1], &d)?,
            "complementary flags must refine by U_j ∩ V_(j-1)"
        );
        pieces.push(d);
    }
    Ok(pieces)
}
