//! sl(2)-triples, the irreducible representations `U_n`, and weight
//! bookkeeping for representations twisted by a character.
//!
//! Conventions: on `U_n` with basis `e_1, …, e_{n+1}` the neutral element is
//! `H = diag(n, n−2, …, −n)`, the raising element sends `e_{i+1} ↦ e_i`, and
//! the lowering element sends `e_j ↦ j(n+1−j)·e_{j+1}`. All three matrices
//! are integral.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::matrix::{QMatrix, QVector};
use crate::nilpotent::{check_complementary_flags, image_flag, jordan_basis, kernel_flag, nilpotency_degree};
use crate::rat::Rat;
use crate::subspace::{image_basis, kernel_basis, Flag, Subspace};

/// Matrices `(A, H, B)` with `H = [A, B]`, `[H, A] = 2A`, `[H, B] = −2B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    raising: QMatrix,
    neutral: QMatrix,
    lowering: QMatrix,
}

impl Sl2Triple {
    pub fn new(raising: QMatrix, neutral: QMatrix, lowering: QMatrix) -> Result<Self> {
        let triple = Sl2Triple { raising, neutral, lowering };
        let n = triple.raising.ensure_square()?;
        if triple.neutral.rows() != n || triple.lowering.rows() != n || !triple.neutral.is_square() || !triple.lowering.is_square() {
            return Err(Error::ShapeMismatch("triple members must share one square shape".into()));
        }
        if !triple.satisfies_relations() {
            return Err(Error::NotSl2("bracket relations fail".into()));
        }
        Ok(triple)
    }

    pub fn raising(&self) -> &QMatrix {
        &self.raising
    }

    pub fn neutral(&self) -> &QMatrix {
        &self.neutral
    }

    pub fn lowering(&self) -> &QMatrix {
        &self.lowering
    }

    pub fn dim(&self) -> usize {
        self.raising.rows()
    }

    pub fn satisfies_relations(&self) -> bool {
        let (a, h, b) = (&self.raising, &self.neutral, &self.lowering);
        let two = Rat::from_int(2);
        a.bracket(b) == *h && h.bracket(a) == a.scale(&two) && h.bracket(b) == b.scale(&-two)
    }

    /// `[H, A^j] = 2j·A^j`, `[H, B^j] = −2j·B^j` and `[H, B^j A^j] = 0` for
    /// `j = 1..=k`.
    pub fn power_identities_hold(&self, k: usize) -> bool {
        let (a, h, b) = (&self.raising, &self.neutral, &self.lowering);
        let (mut aj, mut bj) = (a.clone(), b.clone());
        for j in 1..=k {
            let c = Rat::from_int(2 * j as i64);
            if h.bracket(&aj) != aj.scale(&c) || h.bracket(&bj) != bj.scale(&-c) {
                return false;
            }
            if !h.bracket(&(&bj * &aj)).is_zero() {
                return false;
            }
            aj = &aj * a;
            bj = &bj * b;
        }
        true
    }

    /// The triple shifted in weight: `H + m·I`, as for `U_n ⊗ O(m)`.
    pub fn twisted_neutral(&self, m: i64) -> QMatrix {
        &self.neutral + &QMatrix::scalar(self.dim(), &Rat::from_int(m))
    }
}

/// `(A, H, B)` acting on `U_n`, of dimension `n + 1`.
pub fn irrep_matrices(n: usize) -> Sl2Triple {
    let d = n + 1;
    let raising = QMatrix::from_fn(d, d, |i, j| if j == i + 1 { Rat::one() } else { Rat::zero() });
    let lowering = QMatrix::from_fn(d, d, |i, j| {
        // column j (0-based) is e_{j+1}; its image is (j+1)(n−j)·e_{j+2}
        if i == j + 1 {
            Rat::from_int(((j + 1) * (n - j)) as i64)
        } else {
            Rat::zero()
        }
    });
    let neutral = QMatrix::from_fn(d, d, |i, j| {
        if i == j {
            Rat::from_int(n as i64 - 2 * i as i64)
        } else {
            Rat::zero()
        }
    });
    Sl2Triple { raising, neutral, lowering }
}

/// Completes a nonzero nilpotent `A` to an sl(2)-triple through its Jordan
/// chains, placing the irreducible triple on each chain.
pub fn jacobson_morozov(a: &QMatrix) -> Result<Sl2Triple> {
    let n = a.ensure_square()?;
    nilpotency_degree(a)?;
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let chains = jordan_basis(a)?;
    // basis ordered chain by chain, each from its top A^{l−1}v down to v
    let mut columns: Vec<QVector> = Vec::with_capacity(n);
    let mut blocks_h = Vec::new();
    let mut blocks_b = Vec::new();
    for chain in &chains {
        columns.extend(chain.iter().rev().cloned());
        let irrep = irrep_matrices(chain.len() - 1);
        blocks_h.push(irrep.neutral);
        blocks_b.push(irrep.lowering);
    }
    let basis = QMatrix::from_columns(n, &columns)?;
    let inv = basis.inverse().expect("Jordan chains form a basis");
    let conj = |m: &QMatrix| &(&basis * m) * &inv;
    let triple = Sl2Triple {
        raising: a.clone(),
        neutral: conj(&QMatrix::block_diag(&blocks_h)),
        lowering: conj(&QMatrix::block_diag(&blocks_b)),
    };
    if !triple.satisfies_relations() {
        return Err(Error::NotSl2("Jacobson-Morozov completion failed its bracket check".into()));
    }
    Ok(triple)
}

/// Complementary flags and the projection attached to a pair of nilpotents
/// generating sl(2).
#[derive(Clone, Debug)]
pub struct Sl2Projection {
    /// `(A, [A, B'], B')` with `B' = scale·B`.
    pub triple: Sl2Triple,
    pub scale: Rat,
    /// Nilpotency degree minus one.
    pub k: usize,
    /// `ker(A^j)`, `j = 1..=k`.
    pub u_flag: Flag,
    /// `im(B'^j)`, `j = 1..=k`.
    pub v_flag: Flag,
    /// `c·B'^k A^k`, idempotent with image `im(B^k)` and kernel `ker(A^k)`.
    pub projection: QMatrix,
    pub normalization: Rat,
}

/// First entry where `m` is nonzero.
fn first_nonzero(m: &QMatrix) -> Option<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).find(|&ij| !m[ij].is_zero())
}

pub fn sl2_flags_and_projection(a: &QMatrix, b: &QMatrix) -> Result<Sl2Projection> {
    let n = a.ensure_square()?;
    b.ensure_square()?;
    if b.rows() != n {
        return Err(Error::AmbientMismatch { left: n, right: b.rows() });
    }
    let (deg_a, deg_b) = (nilpotency_degree(a)?, nilpotency_degree(b)?);
    if deg_a != deg_b {
        return Err(Error::DegreeMismatch { left: deg_a, right: deg_b });
    }
    // [[A, sB], A] = s·[[A, B], A] must equal 2A
    let c = a.bracket(b).bracket(a);
    let Some(ij) = first_nonzero(&c) else {
        return Err(Error::NotSl2("[[A,B],A] vanishes".into()));
    };
    let scale = Rat::from_int(2) * &a[ij] / &c[ij];
    if scale.is_zero() || c.scale(&scale) != a.scale(&Rat::from_int(2)) {
        return Err(Error::NotSl2("no rescaling of B gives [H,A] = 2A".into()));
    }
    let lowering = b.scale(&scale);
    let neutral = a.bracket(&lowering);
    let triple = Sl2Triple { raising: a.clone(), neutral, lowering };
    if !triple.satisfies_relations() {
        return Err(Error::NotSl2("rescaled pair fails [H,B] = -2B".into()));
    }
    let k = deg_a - 1;
    let u_flag = kernel_flag(a, k)?;
    let v_flag = image_flag(&triple.lowering, k)?;
    if !check_complementary_flags(&u_flag, &v_flag)? {
        return Err(Error::NotSl2("kernel and image flags are not complementary".into()));
    }
    let ak = a.pow(k);
    let bk = triple.lowering.pow(k);
    let m = &bk * &ak;
    let m2 = &m * &m;
    let Some(ij) = first_nonzero(&m) else {
        return Err(Error::NotSl2("B^k A^k vanishes".into()));
    };
    let lambda = &m2[ij] / &m[ij];
    if lambda.is_zero() || m2 != m.scale(&lambda) {
        return Err(Error::NotSl2("B^k A^k is not proportional to an idempotent".into()));
    }
    let normalization = lambda.recip();
    let projection = m.scale(&normalization);
    let out = Sl2Projection { triple, scale, k, u_flag, v_flag, projection, normalization };
    if let Some(failed) = out.checks().into_iter().find(|c| !c.passed) {
        return Err(Error::NotSl2(format!("postcondition failed: {}", failed.name)));
    }
    Ok(out)
}

impl Sl2Projection {
    /// Re-verifies every postcondition exactly.
    pub fn checks(&self) -> Vec<Check> {
        let a = self.triple.raising();
        let h = self.triple.neutral();
        let b = self.triple.lowering();
        let p = &self.projection;
        let flags_ok = check_complementary_flags(&self.u_flag, &self.v_flag).unwrap_or(false);
        let invariant = self
            .u_flag
            .spaces()
            .iter()
            .chain(self.v_flag.spaces())
            .all(|s| s.is_invariant_under(h).unwrap_or(false));
        vec![
            Check::new("bracket relations", self.triple.satisfies_relations()),
            Check::new("power bracket identities", self.triple.power_identities_hold(self.k)),
            Check::new("complementary flags", flags_ok),
            Check::new("projection idempotent", &(p * p) == p),
            Check::new("projection image is im(B^k)", image_basis(p) == image_basis(&b.pow(self.k))),
            Check::new("projection kernel is ker(A^k)", kernel_basis(p) == kernel_basis(&a.pow(self.k))),
            Check::new("flags invariant under H", invariant),
        ]
    }

    /// Union of the eigenspaces of `H` not contained in `ker(A^k)`: the zeros
    /// of the field induced by `H` off `P(ker A^k)`.
    pub fn zero_locus_off_kernel(&self) -> Result<Subspace> {
        let h = self.triple.neutral();
        let n = h.rows();
        let ker = kernel_basis(&self.triple.raising().pow(self.k));
        let weights = weight_multiset(h)?;
        let mut acc = Subspace::zero(n);
        for &(w, _) in weights.entries() {
            let eig = kernel_basis(&(h - &QMatrix::scalar(n, &Rat::from_int(w))));
            if !eig.is_subspace_of(&ker) {
                acc = acc.sum(&eig)?;
            }
        }
        Ok(acc)
    }
}

/// Integer weights with multiplicities, sorted by decreasing weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct WeightMultiset {
    weights: Vec<(i64, usize)>,
}

impl WeightMultiset {
    pub fn from_weights(weights: impl IntoIterator<Item = i64>) -> Self {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for w in weights {
            *counts.entry(w).or_insert(0) += 1;
        }
        WeightMultiset::from_counts(counts)
    }

    fn from_counts(counts: BTreeMap<i64, usize>) -> Self {
        WeightMultiset { weights: counts.into_iter().rev().filter(|&(_, m)| m > 0).collect() }
    }

    fn counts(&self) -> BTreeMap<i64, usize> {
        self.weights.iter().copied().collect()
    }

    /// `(weight, multiplicity)` pairs, weights decreasing.
    pub fn entries(&self) -> &[(i64, usize)] {
        &self.weights
    }

    /// Each weight repeated by multiplicity, decreasing.
    pub fn to_list(&self) -> Vec<i64> {
        self.weights.iter().flat_map(|&(w, m)| std::iter::repeat_n(w, m)).collect()
    }

    pub fn total(&self) -> usize {
        self.weights.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn shift(&self, m: i64) -> WeightMultiset {
        WeightMultiset { weights: self.weights.iter().map(|&(w, k)| (w + m, k)).collect() }
    }

    /// Multiset difference, `None` unless `other` is a sub-multiset.
    pub fn difference(&self, other: &WeightMultiset) -> Option<WeightMultiset> {
        let mut counts = self.counts();
        for &(w, m) in &other.weights {
            let c = counts.get_mut(&w)?;
            *c = c.checked_sub(m)?;
        }
        Some(WeightMultiset::from_counts(counts))
    }

    /// Highest weights of the irreducible summands of an sl(2)-character,
    /// found by repeatedly removing the string of the top weight.
    pub fn peel_irreducibles(&self) -> Option<Vec<usize>> {
        let mut counts = self.counts();
        let mut labels = Vec::new();
        while let Some((&top, _)) = counts.iter().next_back() {
            if top < 0 {
                return None;
            }
            let mut w = top;
            while w >= -top {
                let c = counts.get_mut(&w)?;
                *c -= 1;
                if *c == 0 {
                    counts.remove(&w);
                }
                w -= 2;
            }
            labels.push(top as usize);
        }
        Some(labels)
    }
}

/// Integer eigenvalues of a diagonalizable `H`, with multiplicities.
pub fn weight_multiset(h: &QMatrix) -> Result<WeightMultiset> {
    let n = h.ensure_square()?;
    let charpoly = h.char_poly();
    let (roots, rest) = charpoly.rational_roots();
    let non_integral = || Error::NonIntegerSpectrum { charpoly: charpoly.to_string() };
    if rest.degree() != Some(0) {
        return Err(non_integral());
    }
    let mut weights = Vec::with_capacity(roots.len());
    for (r, m) in &roots {
        weights.push((r.to_i64().ok_or_else(non_integral)?, *m));
    }
    // diagonalizable iff the product of (H − wI) over distinct w vanishes
    let mut prod = QMatrix::identity(n);
    for (w, _) in &weights {
        prod = &prod * &(h - &QMatrix::scalar(n, &Rat::from_int(*w)));
    }
    if !prod.is_zero() {
        let bad = weights
            .iter()
            .find(|(w, m)| kernel_basis(&(h - &QMatrix::scalar(n, &Rat::from_int(*w)))).dim() < *m)
            .map(|(w, _)| *w)
            .expect("a defective eigenvalue exists");
        return Err(Error::NotDiagonalizable { eigenvalue: bad.to_string() });
    }
    Ok(WeightMultiset::from_counts(weights.into_iter().collect()))
}

/// Weights of `U_n ⊗ χ_m`, read off `H + m·I` on `U_n`.
pub fn twisted_irrep_weights(n: usize, m: i64) -> Result<WeightMultiset> {
    weight_multiset(&irrep_matrices(n).twisted_neutral(m))
}

/// Highest weights of the summands of `U_m ⊗ U_n`.
pub fn clebsch_gordan(m: usize, n: usize) -> Vec<usize> {
    let hm = irrep_matrices(m).neutral;
    let hn = irrep_matrices(n).neutral;
    let h = &hm.kron(&QMatrix::identity(n + 1)) + &QMatrix::identity(m + 1).kron(&hn);
    // H acts diagonally on the tensor basis
    let diag = (0..h.rows()).map(|i| h[(i, i)].to_i64().expect("integral weights"));
    WeightMultiset::from_weights(diag)
        .peel_irreducibles()
        .expect("a tensor product of sl(2)-modules has an sl(2)-character")
}

/// `(m, n)` when the weights are exactly `m+n, m+n−2, …, m−n`, once each.
pub fn identify_twisted_irrep(w: &WeightMultiset) -> Option<(i64, i64)> {
    let entries = w.entries();
    if entries.is_empty() || entries.iter().any(|&(_, m)| m != 1) {
        return None;
    }
    if entries.windows(2).any(|p| p[0].0 - p[1].0 != 2) {
        return None;
    }
    let (max, min) = (entries[0].0, entries[entries.len() - 1].0);
    Some(((max + min) / 2, (max - min) / 2))
}

/// Weight data of `0 → U_1⊗O(1) → U_n⊗O(n) → N → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseWeights {
    pub n: usize,
    pub ambient: WeightMultiset,
    pub sub: WeightMultiset,
    pub quotient: WeightMultiset,
    /// `(m, n')` with `N = U_{n'} ⊗ O(m)`.
    pub identification: (i64, i64),
}

pub fn veronese_weights(n: i64) -> Result<VeroneseWeights> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let ambient = twisted_irrep_weights(n as usize, n)?;
    let sub = twisted_irrep_weights(1, 1)?;
    let quotient = ambient.difference(&sub).expect("U_1 ⊗ χ_1 weights lie inside U_n ⊗ χ_n weights");
    let identification =
        identify_twisted_irrep(&quotient).expect("the quotient weights form a single string");
    Ok(VeroneseWeights { n: n as usize, ambient, sub, quotient, identification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{jordan_block, unit_vector};
    use crate::rat::{frac, int};

    #[test]
    fn irrep_examples() {
        let t = irrep_matrices(1);
        assert_eq!(t.raising, QMatrix::from_ints(&[[0, 1], [0, 0]]));
        assert_eq!(t.lowering, QMatrix::from_ints(&[[0, 0], [1, 0]]));
        assert_eq!(t.neutral, QMatrix::from_ints(&[[1, 0], [0, -1]]));
        assert_eq!(irrep_matrices(2).neutral, QMatrix::diag(&[int(2), int(0), int(-2)]));
        let t0 = irrep_matrices(0);
        assert!(t0.raising.is_zero() && t0.neutral.is_zero() && t0.lowering.is_zero());
        for n in 0..8 {
            assert!(irrep_matrices(n).satisfies_relations());
        }
    }

    #[test]
    fn jacobson_morozov_examples() {
        let t = jacobson_morozov(&QMatrix::from_ints(&[[0, 1], [0, 0]])).unwrap();
        assert_eq!(t.lowering, QMatrix::from_ints(&[[0, 0], [1, 0]]));
        assert_eq!(t.neutral, QMatrix::from_ints(&[[1, 0], [0, -1]]));

        // B·e1 = 2e2, B·e2 = 2e3
        let t = jacobson_morozov(&jordan_block(3)).unwrap();
        assert_eq!(t.neutral, QMatrix::diag(&[int(2), int(0), int(-2)]));
        assert_eq!(t.lowering, QMatrix::from_ints(&[[0, 0, 0], [2, 0, 0], [0, 2, 0]]));

        let a = QMatrix::block_diag(&[jordan_block(2), jordan_block(2)]);
        let t = jacobson_morozov(&a).unwrap();
        let std = irrep_matrices(1);
        assert_eq!(t.lowering, QMatrix::block_diag(&[std.lowering.clone(), std.lowering]));
        assert_eq!(t.neutral, QMatrix::block_diag(&[std.neutral.clone(), std.neutral]));

        assert_eq!(jacobson_morozov(&QMatrix::zeros(2, 2)), Err(Error::ZeroMatrix));
        assert_eq!(jacobson_morozov(&QMatrix::identity(2)), Err(Error::NotNilpotent));
    }

    #[test]
    fn projection_for_j3() {
        let t = jacobson_morozov(&jordan_block(3)).unwrap();
        let b2a2 = &t.lowering.pow(2) * &t.raising.pow(2);
        let mut e33 = QMatrix::zeros(3, 3);
        e33[(2, 2)] = int(1);
        assert_eq!(b2a2, e33.scale(&int(4)));
        let p = sl2_flags_and_projection(&t.raising, &t.lowering).unwrap();
        assert_eq!(p.k, 2);
        assert_eq!(p.scale, int(1));
        assert_eq!(p.normalization, frac(1, 4));
        assert_eq!(p.projection, e33);
        let e = |i| unit_vector(3, i);
        let span = |vs: &[QVector]| Subspace::span(3, vs).unwrap();
        assert_eq!(p.u_flag.spaces(), &[span(&[e(0)]), span(&[e(0), e(1)])]);
        assert_eq!(p.v_flag.spaces(), &[span(&[e(1), e(2)]), span(&[e(2)])]);
        assert!(p.checks().iter().all(|c| c.passed));
        assert_eq!(p.zero_locus_off_kernel().unwrap(), span(&[e(2)]));
    }

    #[test]
    fn projection_for_defining_rep_and_rescaling() {
        let t = irrep_matrices(1);
        let p = sl2_flags_and_projection(&t.raising, &t.lowering).unwrap();
        let mut e22 = QMatrix::zeros(2, 2);
        e22[(1, 1)] = int(1);
        assert_eq!((p.k, p.normalization.clone(), p.projection.clone()), (1, int(1), e22.clone()));

        let p = sl2_flags_and_projection(&t.raising, &t.lowering.scale(&int(3))).unwrap();
        assert_eq!(p.scale, frac(1, 3));
        assert_eq!(p.projection, e22);
    }

    #[test]
    fn projection_errors() {
        let a = jordan_block(3);
        let b = QMatrix::block_diag(&[jordan_block(2), jordan_block(1)]).transpose();
        assert_eq!(
            sl2_flags_and_projection(&a, &b).unwrap_err(),
            Error::DegreeMismatch { left: 3, right: 2 }
        );
        // commuting nilpotents never generate sl(2)
        assert!(matches!(sl2_flags_and_projection(&a, &a), Err(Error::NotSl2(_))));
        assert!(matches!(sl2_flags_and_projection(&QMatrix::identity(3), &a), Err(Error::NotNilpotent)));
    }

    #[test]
    fn weight_examples() {
        let w = weight_multiset(&QMatrix::diag(&[int(2), int(0), int(-2)])).unwrap();
        assert_eq!(w.to_list(), vec![2, 0, -2]);
        for (n, m) in [(3usize, 4i64), (0, -2), (5, -1)] {
            let w = twisted_irrep_weights(n, m).unwrap();
            let expected: Vec<i64> = (0..=n as i64).map(|i| m + n as i64 - 2 * i).collect();
            assert_eq!(w.to_list(), expected);
        }
        assert!(matches!(weight_multiset(&jordan_block(3)), Err(Error::NotDiagonalizable { .. })));
        let half = QMatrix::diag(&[frac(1, 2), int(1)]);
        assert!(matches!(weight_multiset(&half), Err(Error::NonIntegerSpectrum { .. })));
        let rot = QMatrix::from_ints(&[[0, -1], [1, 0]]);
        assert!(matches!(weight_multiset(&rot), Err(Error::NonIntegerSpectrum { .. })));
        // non-diagonal but diagonalizable
        let h = QMatrix::from_ints(&[[1, 2], [0, -1]]);
        assert_eq!(weight_multiset(&h).unwrap().to_list(), vec![1, -1]);
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(1, 1), vec![2, 0]);
        assert_eq!(clebsch_gordan(2, 1), vec![3, 1]);
        assert_eq!(clebsch_gordan(4, 0), vec![4]);
        assert_eq!(clebsch_gordan(0, 0), vec![0]);
    }

    /// Independent oracle for clebsch_gordan(2, 1): peel {3,1,1,−1,−1,−3} by hand.
    #[test]
    fn clebsch_gordan_2_1_weight_oracle() {
        let mut weights = Vec::new();
        for a in [2i64, 0, -2] {
            for b in [1i64, -1] {
                weights.push(a + b);
            }
        }
        weights.sort_unstable_by(|x, y| y.cmp(x));
        assert_eq!(weights, vec![3, 1, 1, -1, -1, -3]);
        // remove the U_3 string {3,1,−1,−3}; {1,−1} remains, which is U_1
        let w = WeightMultiset::from_weights(weights);
        let rest = w.difference(&WeightMultiset::from_weights([3, 1, -1, -3])).unwrap();
        assert_eq!(rest.to_list(), vec![1, -1]);
        assert_eq!(clebsch_gordan(2, 1), vec![3, 1]);
    }

    #[test]
    fn clebsch_gordan_dimension_and_range() {
        for m in 0..7usize {
            for n in 0..7usize {
                let labels = clebsch_gordan(m, n);
                let dim: usize = labels.iter().map(|l| l + 1).sum();
                assert_eq!(dim, (m + 1) * (n + 1));
                let expected: Vec<usize> = (0..=m.min(n)).map(|i| m + n - 2 * i).collect();
                assert_eq!(labels, expected);
            }
        }
    }

    #[test]
    fn identify_examples() {
        assert_eq!(identify_twisted_irrep(&WeightMultiset::from_weights([6, 4])), Some((5, 1)));
        assert_eq!(identify_twisted_irrep(&WeightMultiset::from_weights([3, 0])), None);
        assert_eq!(identify_twisted_irrep(&WeightMultiset::from_weights([4])), Some((4, 0)));
        assert_eq!(identify_twisted_irrep(&WeightMultiset::from_weights([2, 2])), None);
        assert_eq!(identify_twisted_irrep(&WeightMultiset::default()), None);
        for n in 2..9i64 {
            let w = WeightMultiset::from_weights((2..=n).map(|i| 2 * i));
            assert_eq!(identify_twisted_irrep(&w), Some((n + 2, n - 2)));
        }
        for n in 0..=10usize {
            for m in -10..=10i64 {
                let w = twisted_irrep_weights(n, m).unwrap();
                assert_eq!(identify_twisted_irrep(&w), Some((m, n as i64)));
            }
        }
    }

    #[test]
    fn veronese_examples() {
        let v = veronese_weights(2).unwrap();
        assert_eq!((v.quotient.to_list(), v.identification), (vec![4], (4, 0)));
        let v = veronese_weights(3).unwrap();
        assert_eq!((v.quotient.to_list(), v.identification), (vec![6, 4], (5, 1)));
        let v = veronese_weights(5).unwrap();
        assert_eq!((v.quotient.to_list(), v.identification), (vec![10, 8, 6, 4], (7, 3)));
        assert_eq!(veronese_weights(1), Err(Error::BadDegree(1)));
    }
}
