//! Vector bundles on the projective line given by a transition matrix on the
//! overlap of the two standard charts.
//!
//! Convention: a section of the bundle `E_T` twisted by `O(n)` is a pair of
//! polynomial vectors `s_0(z)`, `s_∞(w)` with `s_0(z) = z^n·T(z)·s_∞(1/z)`.
//! Thus `O(a)` has transition `z^a` and `h⁰(O(a)) = a + 1` for `a ≥ 0`.
//! Frame changes act by `T ↦ P(z)·T·Q(1/z)` with `P`, `Q` polynomial of
//! constant nonzero determinant.

use serde::Serialize;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::matrix::{sparse_rank, QMatrix};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::subspace::kernel_basis;

/// Partial indices `a_1 ≥ … ≥ a_r` of `⊕ O(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingType {
    exponents: Vec<i64>,
}

impl SplittingType {
    /// Sorts the exponents into decreasing order.
    pub fn new(mut exponents: Vec<i64>) -> Self {
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { exponents }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> i64 {
        self.exponents.iter().sum()
    }

    /// `h⁰(⊕ O(a_i + n)) = Σ max(0, a_i + n + 1)`.
    pub fn h0(&self, n: i64) -> usize {
        self.exponents.iter().map(|a| (a + n + 1).max(0) as usize).sum()
    }

    pub fn twist(&self, m: i64) -> Self {
        SplittingType { exponents: self.exponents.iter().map(|a| a + m).collect() }
    }

    pub fn dual(&self) -> Self {
        SplittingType { exponents: self.exponents.iter().rev().map(|a| -a).collect() }
    }

    pub fn direct_sum(&self, other: &SplittingType) -> Self {
        SplittingType::new(self.exponents.iter().chain(&other.exponents).copied().collect())
    }
}

/// `det T = c·z^d`.
pub fn validate_transition(t: &LaurentMatrix) -> Result<(Rat, i64)> {
    t.monomial_det()
}

/// Exponent data bounding the partial indices: every `a_i` lies in
/// `[−hi(T⁻¹), hi(T)]`, and a section of `E(n)` has `deg s_∞ ≤ n − lo(T⁻¹)`.
#[derive(Clone, Debug)]
struct Bounds {
    hi: i64,
    inv_lo: i64,
    inv_hi: i64,
    width: i64,
}

impl Bounds {
    fn of(t: &LaurentMatrix) -> Result<Self> {
        let inv = t.inverse()?;
        let (lo, hi) = t.exponent_range().expect("invertible matrices are nonzero");
        let (inv_lo, inv_hi) = inv.exponent_range().expect("invertible matrices are nonzero");
        let width = [lo, hi, inv_lo, inv_hi].iter().map(|e| e.abs()).max().unwrap_or(0);
        Ok(Bounds { hi, inv_lo, inv_hi, width })
    }

    fn degree_bound(&self, n: i64) -> i64 {
        n - self.inv_lo
    }
}

/// Sections of `E_T(n)` whose chart-∞ part has degree at most `bound`.
fn sections_up_to(t: &LaurentMatrix, n: i64, bound: i64) -> usize {
    if bound < 0 {
        return 0;
    }
    let r = t.rows();
    let len = (bound + 1) as usize;
    // unknown x_{j,k}: coefficient of w^k in component j of s_∞
    let var = |j: usize, k: usize| j * len + k;
    let mut rows = Vec::new();
    for i in 0..r {
        // coefficient of z^e in component i of z^n·T·s_∞(1/z), for e < 0
        let mut by_exp: std::collections::BTreeMap<i64, Vec<(usize, Rat)>> = Default::default();
        for j in 0..r {
            for (te, c) in t[(i, j)].terms() {
                for k in 0..len {
                    let e = n + te - k as i64;
                    if e < 0 {
                        by_exp.entry(e).or_default().push((var(j, k), c.clone()));
                    }
                }
            }
        }
        for (_, mut row) in by_exp {
            row.sort_by_key(|(v, _)| *v);
            let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(row.len());
            for (v, c) in row {
                match merged.last_mut() {
                    Some((lv, lc)) if *lv == v => *lc += c,
                    _ => merged.push((v, c)),
                }
            }
            merged.retain(|(_, c)| !c.is_zero());
            if !merged.is_empty() {
                rows.push(merged);
            }
        }
    }
    r * len - sparse_rank(&mut rows)
}

fn h0_with_bounds(t: &LaurentMatrix, n: i64, b: &Bounds) -> Result<usize> {
    let bound = b.degree_bound(n);
    let first = sections_up_to(t, n, bound);
    let wider = sections_up_to(t, n, bound + b.width + 1);
    if first == wider {
        return Ok(first);
    }
    let widest = sections_up_to(t, n, bound + 2 * (b.width + 1));
    if widest == wider {
        Ok(wider)
    } else {
        Err(Error::BoundUnstable { twist: n })
    }
}

/// `dim H⁰(E_T ⊗ O(n))`.
pub fn h0_twisted(t: &LaurentMatrix, n: i64) -> Result<usize> {
    validate_transition(t)?;
    h0_with_bounds(t, n, &Bounds::of(t)?)
}

/// Partial indices from `h⁰` over a window of twists, via
/// `h(n) − h(n−1) = #{i : a_i ≥ −n}`.
pub fn splitting_type(t: &LaurentMatrix) -> Result<SplittingType> {
    let (_, d) = validate_transition(t)?;
    let b = Bounds::of(t)?;
    let r = t.rows() as i64;
    // |a_i| ≤ max(hi(T), hi(T⁻¹)) ≤ width; one retry on a wider window
    let base = b.hi.max(b.inv_hi).max(0);
    for reach in [base, r.max(1) * b.width] {
        if let Some(s) = scan_window(t, &b, reach, d)? {
            return Ok(s);
        }
    }
    Err(Error::InconsistentWindow(format!("no consistent splitting for rank {r}, degree {d}")))
}

fn scan_window(t: &LaurentMatrix, b: &Bounds, reach: i64, d: i64) -> Result<Option<SplittingType>> {
    let r = t.rows();
    let (lo, hi) = (-reach - 1, reach + 1);
    let mut h = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        h.push(h0_with_bounds(t, n, b)?);
    }
    if h[0] != 0 {
        return Ok(None);
    }
    let mut exponents = Vec::with_capacity(r);
    for (idx, n) in (lo + 1..=hi).enumerate() {
        let (prev, cur) = (h[idx], h[idx + 1]);
        let Some(count) = cur.checked_sub(prev) else {
            return Ok(None);
        };
        // #{a_i ≥ −n} grows from the previous twist by the number of a_i = −n
        if count < exponents.len() {
            return Ok(None);
        }
        exponents.extend(std::iter::repeat_n(-n, count - exponents.len()));
    }
    let s = SplittingType::new(exponents);
    if s.rank() != r || s.degree() != d {
        return Ok(None);
    }
    Ok(Some(s))
}

/// `T = t_plus(z)·diag(z^{a_i})·t_minus(1/z)`, with `t_plus` polynomial in
/// `z` and `t_minus` polynomial in `1/z`, both of constant determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffFactors {
    pub t_plus: LaurentMatrix,
    pub splitting: SplittingType,
    pub t_minus: LaurentMatrix,
}

impl BirkhoffFactors {
    pub fn diagonal(&self) -> LaurentMatrix {
        equivariant_model(&self.splitting)
    }

    pub fn product(&self) -> LaurentMatrix {
        &(&self.t_plus * &self.diagonal()) * &self.t_minus
    }

    pub fn checks(&self, t: &LaurentMatrix) -> Vec<Check> {
        let const_det = |m: &LaurentMatrix| m.monomial_det().is_ok_and(|(_, d)| d == 0);
        let sorted = self.splitting.exponents.windows(2).all(|w| w[0] >= w[1]);
        vec![
            Check::new("product equals input", self.product() == *t),
            Check::new("t_plus polynomial in z", self.t_plus.is_polynomial_in_z()),
            Check::new("t_plus determinant constant", const_det(&self.t_plus)),
            Check::new("t_minus polynomial in 1/z", self.t_minus.is_polynomial_in_inverse()),
            Check::new("t_minus determinant constant", const_det(&self.t_minus)),
            Check::new("exponents decreasing", sorted),
        ]
    }
}

/// Row degrees and leading coefficient matrix.
fn leading_data(m: &LaurentMatrix) -> (Vec<i64>, QMatrix) {
    let r = m.rows();
    let degs: Vec<i64> = (0..r)
        .map(|i| (0..m.cols()).filter_map(|j| m[(i, j)].max_exp()).max().expect("no zero rows"))
        .collect();
    let lead = QMatrix::from_fn(r, m.cols(), |i, j| m[(i, j)].coeff(degs[i]));
    (degs, lead)
}

/// Factorization by reducing row degrees with unimodular row operations in
/// `z` until the leading coefficient matrix is invertible.
pub fn birkhoff_factorize(t: &LaurentMatrix) -> Result<BirkhoffFactors> {
    let (_, d) = validate_transition(t)?;
    let r = t.rows();
    let mut reduced = t.clone();
    // inverse of the accumulated row operations
    let mut p = LaurentMatrix::identity(r);
    loop {
        let (degs, lead) = leading_data(&reduced);
        let null = kernel_basis(&lead.transpose());
        let Some(c) = null.basis_vectors().into_iter().next() else {
            break;
        };
        let sum: i64 = degs.iter().sum();
        if sum <= d {
            return Err(Error::FactorizationFailed("row degrees fell to the determinant degree".into()));
        }
        // row with the largest degree among the support of c
        let piv = (0..r)
            .filter(|&i| !c[i].is_zero())
            .max_by(|&a, &b| degs[a].cmp(&degs[b]).then(b.cmp(&a)))
            .expect("null vector is nonzero");
        for i in (0..r).filter(|&i| i != piv && !c[i].is_zero()) {
            let shift = degs[piv] - degs[i];
            let f = LaurentPoly::monomial(&c[i] / &c[piv], shift);
            for j in 0..r {
                let add = &f * &reduced[(i, j)];
                reduced[(piv, j)] = &reduced[(piv, j)] + &add;
                let sub = &f * &p[(j, piv)];
                p[(j, i)] = &p[(j, i)] - &sub;
            }
        }
    }
    let (degs, _) = leading_data(&reduced);
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| degs[b].cmp(&degs[a]).then(a.cmp(&b)));
    let t_plus = LaurentMatrix::from_fn(r, r, |i, j| p[(i, order[j])].clone());
    let t_minus = LaurentMatrix::from_fn(r, r, |i, j| reduced[(order[i], j)].shift(-degs[order[i]]));
    let splitting = SplittingType { exponents: order.iter().map(|&i| degs[i]).collect() };
    let factors = BirkhoffFactors { t_plus, splitting, t_minus };
    if let Some(failed) = factors.checks(t).into_iter().find(|c| !c.passed) {
        return Err(Error::FactorizationFailed(failed.name));
    }
    Ok(factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleOp {
    DirectSum,
    Tensor,
    Dual,
}

/// Transition of `E_1 ⊕ E_2`, `E_1 ⊗ E_2`, or `E_1^*` (the second argument
/// is ignored for the dual).
pub fn bundle_ops(t1: &LaurentMatrix, t2: &LaurentMatrix, op: BundleOp) -> Result<LaurentMatrix> {
    validate_transition(t1)?;
    match op {
        BundleOp::Dual => Ok(t1.inverse()?.transpose()),
        BundleOp::DirectSum => {
            validate_transition(t2)?;
            Ok(LaurentMatrix::block_diag(&[t1.clone(), t2.clone()]))
        }
        BundleOp::Tensor => {
            validate_transition(t2)?;
            Ok(t1.kron(t2))
        }
    }
}

/// `diag(z^{a_1}, …, z^{a_r})`.
pub fn equivariant_model(s: &SplittingType) -> LaurentMatrix {
    LaurentMatrix::diag_monomials(&s.exponents)
}

fn binomial(n: u64, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * Rat::from_int((n - i) as i64) / Rat::from_int((i + 1) as i64);
    }
    acc
}

/// The inclusion `U_1 ⊗ O(1) → U_n ⊗ O(n)` in both charts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseInclusion {
    pub n: usize,
    /// `(n+1) × 2`; columns are `(x + zy)^{n−1}·x` and `(x + zy)^{n−1}·y`
    /// in the monomial basis `x^n, x^{n−1}y, …, y^n`.
    pub chart0: LaurentMatrix,
    /// `w^{n−1}·I_0(1/w)`.
    pub chart_inf: LaurentMatrix,
}

impl VeroneseInclusion {
    /// 2×2 minors of a chart matrix, as polynomials.
    fn minors(m: &LaurentMatrix) -> Vec<Poly> {
        let rows = m.rows();
        let mut out = Vec::new();
        for a in 0..rows {
            for b in a + 1..rows {
                let det = &(&m[(a, 0)] * &m[(b, 1)]) - &(&m[(a, 1)] * &m[(b, 0)]);
                let deg = det.max_exp().unwrap_or(0).max(0) as usize;
                out.push(Poly::new((0..=deg).map(|e| det.coeff(e as i64)).collect()));
            }
        }
        out
    }

    /// The 2×2 minors of each chart matrix have no common root.
    pub fn is_fiberwise_injective(&self) -> bool {
        [&self.chart0, &self.chart_inf].iter().all(|m| {
            let g = VeroneseInclusion::minors(m).iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
            g.degree() == Some(0)
        })
    }

    /// `z^n·I_∞(1/z) = I_0(z)·z`.
    pub fn intertwines(&self) -> bool {
        self.chart_inf.invert_variable().twist(self.n as i64) == self.chart0.twist(1)
    }

    pub fn checks(&self) -> Vec<Check> {
        vec![
            Check::new("charts intertwine", self.intertwines()),
            Check::new("chart0 polynomial", self.chart0.is_polynomial_in_z()),
            Check::new("chart_inf polynomial", self.chart_inf.is_polynomial_in_z()),
            Check::new("minors have no common root", self.is_fiberwise_injective()),
        ]
    }
}

pub fn veronese_inclusion(n: i64) -> Result<VeroneseInclusion> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let nu = n as usize;
    let chart0 = LaurentMatrix::from_fn(nu + 1, 2, |i, col| {
        // (x+zy)^{n−1} contributes C(n−1, j) z^j to x^{n−1−j} y^j
        let j = i as i64 - col as i64;
        if (0..n).contains(&j) {
            LaurentPoly::monomial(binomial(nu as u64 - 1, j as u64), j)
        } else {
            LaurentPoly::zero()
        }
    });
    let chart_inf = chart0.invert_variable().twist(n - 1);
    Ok(VeroneseInclusion { n: nu, chart0, chart_inf })
}

/// `h⁰(N^*(t))` for the quotient `N` of the Veronese inclusion: polynomial
/// row vectors `φ` of degree `≤ t − n` with `φ·I_0 = 0`.
fn dual_quotient_sections(inc: &VeroneseInclusion, t: i64) -> usize {
    let n = inc.n as i64;
    let top = t - n;
    if top < 0 {
        return 0;
    }
    let len = (top + 1) as usize;
    let rows_in = inc.n + 1;
    let out_len = (top + n) as usize;
    let mut eqs = QMatrix::zeros(2 * out_len, rows_in * len);
    for col in 0..2 {
        for i in 0..rows_in {
            for (e, c) in inc.chart0[(i, col)].terms() {
                for k in 0..len {
                    eqs[(col * out_len + e as usize + k, i * len + k)] += c;
                }
            }
        }
    }
    rows_in * len - eqs.rank()
}

/// Splitting type of the normal bundle `N` of the degree `n` rational normal
/// curve, from `h⁰(N^*(t)) = Σ max(0, t − a_i + 1)`.
pub fn cokernel_splitting(n: i64) -> Result<SplittingType> {
    let inc = veronese_inclusion(n)?;
    // N is a quotient of O(n)^{n+1} of rank n−1 and degree n²+n−2, so
    // n ≤ a_i ≤ 3n − 2
    let (lo, hi) = (n - 1, 3 * n - 1);
    let h: Vec<usize> = (lo..=hi).map(|t| dual_quotient_sections(&inc, t)).collect();
    if h[0] != 0 {
        return Err(Error::InconsistentWindow(format!("h0(N*({lo})) = {}", h[0])));
    }
    let mut exponents = Vec::new();
    for (idx, t) in (lo + 1..=hi).enumerate() {
        // Δ(t) = #{a_i ≤ t}
        let count = h[idx + 1] - h[idx];
        if count < exponents.len() {
            return Err(Error::InconsistentWindow(format!("difference drops at t = {t}")));
        }
        exponents.extend(std::iter::repeat_n(t, count - exponents.len()));
    }
    let s = SplittingType::new(exponents);
    let (rank, degree) = ((n - 1) as usize, n * n + n - 2);
    if s.rank() != rank || s.degree() != degree {
        return Err(Error::InconsistentWindow(format!(
            "found rank {} degree {}, expected {rank} and {degree}",
            s.rank(),
            s.degree()
        )));
    }
    Ok(s)
}
