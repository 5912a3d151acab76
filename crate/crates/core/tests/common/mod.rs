//! Random generators shared by the integration tests.

#![allow(dead_code)]

use nilsplit::laurent::{LaurentMatrix, LaurentPoly};
use nilsplit::matrix::jordan_block;
use nilsplit::{QMatrix, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Partition with largest part `largest` and total at most `max_total`.
pub fn random_partition(rng: &mut impl Rng, largest: usize, max_total: usize) -> Vec<usize> {
    let mut parts = vec![largest];
    let mut total = largest;
    while total < max_total && rng.gen_bool(0.6) {
        let p = rng.gen_range(1..=largest.min(max_total - total));
        parts.push(p);
        total += p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

pub fn nilpotent_from_partition(parts: &[usize]) -> QMatrix {
    QMatrix::block_diag(&parts.iter().map(|&p| jordan_block(p)).collect::<Vec<_>>())
}

/// Product of random elementary integer row operations; determinant one.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> QMatrix {
    let mut g = QMatrix::identity(n);
    if n < 2 {
        return g;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = Rat::from_int(rng.gen_range(-2..=2));
        for col in 0..n {
            let delta = &c * &g[(j, col)];
            g[(i, col)] += delta;
        }
    }
    g
}

/// `g·a·g⁻¹`.
pub fn conjugate(a: &QMatrix, g: &QMatrix) -> QMatrix {
    &(g * a) * &g.inverse().expect("unimodular")
}

/// Nilpotent with the given Jordan type in a random integral basis.
pub fn random_nilpotent(rng: &mut impl Rng, parts: &[usize]) -> QMatrix {
    let a = nilpotent_from_partition(parts);
    let g = random_unimodular(rng, a.rows());
    conjugate(&a, &g)
}

fn random_poly(rng: &mut impl Rng, max_deg: i64, sign: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        (0..=max_deg).map(|d| (sign * d, Rat::from_int(rng.gen_range(-2..=2)))),
    )
}

/// Unit lower-triangular with entries polynomial in `z`.
pub fn random_lower_in_z(rng: &mut impl Rng, r: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(r, r, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => LaurentPoly::one(),
        std::cmp::Ordering::Greater => random_poly(rng, 2, 1),
        std::cmp::Ordering::Less => LaurentPoly::zero(),
    })
}

/// Unit upper-triangular with entries polynomial in `1/z`.
pub fn random_upper_in_inverse(rng: &mut impl Rng, r: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(r, r, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => LaurentPoly::one(),
        std::cmp::Ordering::Less => random_poly(rng, 2, -1),
        std::cmp::Ordering::Greater => LaurentPoly::zero(),
    })
}

/// `P(z)·diag(z^{a_i})·Q(1/z)` with random unipotent gauges, together with
/// the exponents used.
pub fn random_transition(rng: &mut impl Rng, max_rank: usize) -> (LaurentMatrix, Vec<i64>) {
    let r = rng.gen_range(1..=max_rank);
    let exps: Vec<i64> = (0..r).map(|_| rng.gen_range(-4..=4)).collect();
    let t = &(&random_lower_in_z(rng, r) * &LaurentMatrix::diag_monomials(&exps)) * &random_upper_in_inverse(rng, r);
    (t, exps)
}
