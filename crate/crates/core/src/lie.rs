//! Matrix Lie algebras: closure under brackets, structure constants, Killing
//! form, commutant, centralizers and a search for nilpotent elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{rref_canonical, QMatrix, QVector};
use crate::nilpotent::is_nilpotent;
use crate::rat::Rat;
use crate::subspace::{kernel_basis, Subspace};

/// Random combinations tried by [`find_nilpotent`] after the basis elements.
pub const NILPOTENT_SEARCH_BUDGET: usize = 200;
/// Coefficients of the random combinations lie in `−3..=3`.
pub const NILPOTENT_SEARCH_RANGE: i64 = 3;

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, QVector)>,
}

impl Echelon {
    fn reduce(&self, v: &[Rat]) -> QVector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        v
    }

    /// Adds `v` when it is outside the current span.
    fn insert(&mut self, v: &[Rat]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        r.iter_mut().for_each(|x| *x *= &inv);
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}

/// Independent matrices spanning a Lie algebra, with structure constants
/// `[g_i, g_j] = Σ_k c[i][j][k]·g_k`.
#[derive(Clone, Debug)]
pub struct LieBasis {
    ambient_dim: usize,
    generators: Vec<QMatrix>,
    structure_constants: Vec<Vec<QVector>>,
    // rows of the flattened generators forming an invertible block
    coord_rows: Vec<usize>,
    coord_inverse: QMatrix,
}

impl LieBasis {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn structure_constants(&self) -> &[Vec<QVector>] {
        &self.structure_constants
    }

    /// Coordinates of `x` in the basis, or `NotInAlgebra`.
    pub fn coordinates(&self, x: &QMatrix) -> Result<QVector> {
        if x.rows() != self.ambient_dim || x.cols() != self.ambient_dim {
            return Err(Error::NotInAlgebra);
        }
        let flat = x.entries();
        let rhs: QVector = self.coord_rows.iter().map(|&r| flat[r].clone()).collect();
        let coords = self.coord_inverse.mul_vec(&rhs);
        if self.combine(&coords) != *x {
            return Err(Error::NotInAlgebra);
        }
        Ok(coords)
    }

    /// `Σ c_i g_i`.
    pub fn combine(&self, coeffs: &[Rat]) -> QMatrix {
        let n = self.ambient_dim;
        let mut out = QMatrix::zeros(n, n);
        for (c, g) in coeffs.iter().zip(&self.generators) {
            if !c.is_zero() {
                out = &out + &g.scale(c);
            }
        }
        out
    }

    /// Matrix of `ad g_i` in the basis: column `j` holds `[g_i, g_j]`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let d = self.dim();
        QMatrix::from_fn(d, d, |k, j| self.structure_constants[i][j][k].clone())
    }

    /// `ad x` for `x` given in coordinates.
    fn ad_of(&self, x: &[Rat]) -> QMatrix {
        let d = self.dim();
        QMatrix::from_fn(d, d, |k, j| {
            x.iter()
                .zip(&self.structure_constants)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, sc)| c * &sc[j][k])
                .sum()
        })
    }

    fn from_independent(ambient_dim: usize, generators: Vec<QMatrix>) -> Self {
        let d = generators.len();
        let rows_t = QMatrix::from_rows(generators.iter().map(|g| g.entries().to_vec()).collect())
            .unwrap_or_else(|_| QMatrix::zeros(0, ambient_dim * ambient_dim));
        let (_, coord_rows, rank) = rref_canonical(&rows_t);
        assert_eq!(rank, d, "generators must be independent");
        let block = QMatrix::from_fn(d, d, |r, c| generators[c].entries()[coord_rows[r]].clone());
        let coord_inverse = block.inverse().expect("pivot block is invertible");
        let mut basis = LieBasis {
            ambient_dim,
            generators,
            structure_constants: Vec::new(),
            coord_rows,
            coord_inverse,
        };
        let mut sc = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if j < i {
                    sc[i][j] = sc[j][i].iter().map(|x: &Rat| -x).collect();
                    continue;
                }
                let b = basis.generators[i].bracket(&basis.generators[j]);
                sc[i][j] = basis.coordinates(&b).expect("closed under brackets");
            }
        }
        basis.structure_constants = sc;
        basis
    }
}

/// Result of [`lie_closure`].
#[derive(Clone, Debug)]
pub struct LieClosure {
    pub basis: LieBasis,
    /// The span of the input was already closed under brackets.
    pub already_closed: bool,
}

/// Lie algebra generated by `mats`, by bracketing until the span stabilizes.
pub fn lie_closure(ambient_dim: usize, mats: &[QMatrix]) -> Result<LieClosure> {
    for m in mats {
        if m.rows() != ambient_dim || m.cols() != ambient_dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {ambient_dim}x{ambient_dim}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut echelon = Echelon::default();
    let mut basis: Vec<QMatrix> = Vec::new();
    for m in mats {
        if echelon.insert(m.entries()) {
            basis.push(m.clone());
        }
    }
    let input_dim = basis.len();
    // pairs (i, j) with j < done are already bracketed
    let mut done = 0;
    while done < basis.len() {
        let j = done;
        for i in 0..j {
            let b = basis[i].bracket(&basis[j]);
            if echelon.insert(b.entries()) {
                basis.push(b);
            }
        }
        done += 1;
    }
    let already_closed = basis.len() == input_dim;
    Ok(LieClosure { basis: LieBasis::from_independent(ambient_dim, basis), already_closed })
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub is_abelian: bool,
    /// Span of all brackets.
    pub derived: LieBasis,
    pub center_dim: usize,
    /// `tr(ad g_i ∘ ad g_j)`.
    pub killing_gram: QMatrix,
    /// `det ≠ 0`, certifying semisimplicity.
    pub is_killing_nondegenerate: bool,
}

pub fn structure_report(l: &LieBasis) -> StructureReport {
    let d = l.dim();
    let n = l.ambient_dim;
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            brackets.push(l.combine(&l.structure_constants[i][j]));
        }
    }
    let derived = lie_closure(n, &brackets).expect("brackets share the ambient shape").basis;
    let is_abelian = derived.dim() == 0;
    // x is central iff Σ_i x_i c[i][j][k] = 0 for all j, k
    let center_eqs = QMatrix::from_fn(d * d, d, |row, i| {
        let (j, k) = (row / d, row % d);
        l.structure_constants[i][j][k].clone()
    });
    let center_dim = kernel_basis(&center_eqs).dim();
    let ads: Vec<QMatrix> = (0..d).map(|i| l.ad(i)).collect();
    let killing_gram = QMatrix::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace());
    let is_killing_nondegenerate = d > 0 && !killing_gram.det().is_zero();
    StructureReport { is_abelian, derived, center_dim, killing_gram, is_killing_nondegenerate }
}

/// Outcome of the commutant test for irreducibility of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutantVerdict {
    /// Scalar commutant and a semisimple algebra, so `V` is irreducible.
    Irreducible,
    /// Scalar commutant, but the algebra is not semisimple; `V` is
    /// indecomposable and may still have invariant subspaces.
    ScalarCommutant,
    /// A proper nonzero invariant subspace: an eigenspace of a non-scalar
    /// commutant element.
    Reducible { witness: Subspace },
    /// Non-scalar commutant elements exist but none found has a rational
    /// eigenvalue.
    InconclusiveOverQ,
}

#[derive(Clone, Debug)]
pub struct Commutant {
    pub dim: usize,
    pub basis: Vec<QMatrix>,
    pub verdict: CommutantVerdict,
}

/// Endomorphisms of `V` commuting with every generator.
pub fn commutant_dimension(l: &LieBasis) -> Commutant {
    let n = l.ambient_dim;
    let nn = n * n;
    // unknown X flattened row-major: (XG − GX)_{ab} = Σ_c X_ac G_cb − G_ac X_cb
    let mut eqs = QMatrix::zeros(l.dim() * nn, nn);
    for (gi, g) in l.generators.iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                let row = gi * nn + a * n + b;
                for c in 0..n {
                    eqs[(row, a * n + c)] += &g[(c, b)];
                    eqs[(row, c * n + b)] -= &g[(a, c)];
                }
            }
        }
    }
    let basis: Vec<QMatrix> = kernel_basis(&eqs)
        .basis_vectors()
        .into_iter()
        .map(|v| QMatrix::from_row_major(n, n, v).expect("n*n entries"))
        .collect();
    let dim = basis.len();
    let verdict = if dim <= 1 {
        if structure_report(l).is_killing_nondegenerate || n <= 1 {
            CommutantVerdict::Irreducible
        } else {
            CommutantVerdict::ScalarCommutant
        }
    } else {
        reducibility_witness(n, &basis)
            .map(|witness| CommutantVerdict::Reducible { witness })
            .unwrap_or(CommutantVerdict::InconclusiveOverQ)
    };
    Commutant { dim, basis, verdict }
}

fn reducibility_witness(n: usize, basis: &[QMatrix]) -> Option<Subspace> {
    let mut candidates: Vec<QMatrix> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(&basis[i] + &basis[j]);
        }
    }
    for x in candidates.iter().filter(|x| x.scalar_value().is_none()) {
        let (roots, _) = x.char_poly().rational_roots();
        if let Some((lambda, _)) = roots.first() {
            return Some(kernel_basis(&(x - &QMatrix::scalar(n, lambda))));
        }
    }
    None
}

/// `dim {Y ∈ L : [X, Y] = 0}`.
pub fn centralizer_dimension(l: &LieBasis, x: &QMatrix) -> Result<usize> {
    let coords = l.coordinates(x)?;
    Ok(l.dim() - l.ad_of(&coords).rank())
}

/// A nonzero nilpotent element of `L`, searching generators lying in the
/// derived algebra, then the derived basis, then the remaining generators,
/// then seeded random integer combinations inside the derived algebra (or
/// inside `L` when it is abelian).
pub fn find_nilpotent(l: &LieBasis, seed: u64) -> Option<QMatrix> {
    let derived = structure_report(l).derived;
    let good = |m: &QMatrix| !m.is_zero() && is_nilpotent(m);
    let (in_derived, others): (Vec<&QMatrix>, Vec<&QMatrix>) =
        l.generators.iter().partition(|g| derived.dim() > 0 && derived.coordinates(g).is_ok());
    if let Some(m) = in_derived.into_iter().chain(&derived.generators).chain(others).find(|m| good(m)) {
        return Some(m.clone());
    }
    let pool = if derived.dim() > 0 { &derived } else { l };
    if pool.dim() == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..NILPOTENT_SEARCH_BUDGET {
        let coeffs: QVector = (0..pool.dim())
            .map(|_| Rat::from_int(rng.gen_range(-NILPOTENT_SEARCH_RANGE..=NILPOTENT_SEARCH_RANGE)))
            .collect();
        let m = pool.combine(&coeffs);
        if good(&m) {
            return Some(m);
        }
    }
    None
}

/// An eigenvalue with its eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub eigenvalue: Rat,
    pub space: Subspace,
}

/// Eigenspaces of `a`, eigenvalues decreasing; their projectivizations make
/// up the zero set of the vector field `a` induces on projective space.
pub fn linear_field_zeros(a: &QMatrix) -> Result<Vec<Eigenspace>> {
    let n = a.ensure_square()?;
    let (mut roots, rest) = a.char_poly().rational_roots();
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::IrrationalSpectrum { factor: rest.monic().to_string() });
    }
    roots.sort_by(|x, y| y.0.cmp(&x.0));
    Ok(roots
        .into_iter()
        .map(|(eigenvalue, _)| {
            let space = kernel_basis(&(a - &QMatrix::scalar(n, &eigenvalue)));
            Eigenspace { eigenvalue, space }
        })
        .collect())
}
