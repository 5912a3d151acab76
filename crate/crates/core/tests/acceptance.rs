//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nilsplit::bundle::{
    birkhoff_factorize, bundle_ops, cokernel_splitting, h0_twisted, splitting_type, BundleOp, SplittingType,
};
use nilsplit::laurent::LaurentMatrix;
use nilsplit::lie::{centralizer_dimension, commutant_dimension, find_nilpotent, lie_closure, structure_report};
use nilsplit::matrix::unit_vector;
use nilsplit::nilpotent::{check_complementary_flags, flag_refinement, orbit_curve};
use nilsplit::sl2::{
    irrep_matrices, jacobson_morozov, sl2_flags_and_projection, twisted_irrep_weights, veronese_weights,
};
use nilsplit::subspace::{image_basis, kernel_basis};
use nilsplit::{Flag, QMatrix, QVector, Rat, Subspace};
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn veronese() -> Outcome {
    let start = Instant::now();
    for n in 2..=8i64 {
        let v = veronese_weights(n).map_err(|e| e.to_string())?;
        let expected: Vec<i64> = (2..=n).rev().map(|i| 2 * i).collect();
        if v.quotient.to_list() != expected {
            return Err(format!("n={n}: quotient {:?}", v.quotient.to_list()));
        }
        if v.identification != (n + 2, n - 2) {
            return Err(format!("n={n}: identification {:?}", v.identification));
        }
        let s = cokernel_splitting(n).map_err(|e| e.to_string())?;
        if s.exponents() != vec![n + 2; (n - 1) as usize] {
            return Err(format!("n={n}: cokernel splitting {:?}", s.exponents()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("n = 2..8 in {:.2?}", elapsed))
}

fn weight_formula() -> Outcome {
    for n in 0..=8usize {
        for m in -8..=8i64 {
            let w = twisted_irrep_weights(n, m).map_err(|e| e.to_string())?;
            let expected: Vec<i64> = (0..=n as i64).map(|i| m + n as i64 - 2 * i).collect();
            if w.to_list() != expected {
                return Err(format!("n={n} m={m}: {:?}", w.to_list()));
            }
        }
    }
    Ok("153 pairs (n, m)".into())
}

fn complementary_projection() -> Outcome {
    let mut rng = rng(3);
    let two = Rat::from_int(2);
    for k in 1..=5usize {
        for trial in 0..50 {
            let parts = random_partition(&mut rng, k + 1, 12);
            let a = random_nilpotent(&mut rng, &parts);
            let t = jacobson_morozov(&a).map_err(|e| e.to_string())?;
            // hand the lowering element over with a random nonzero scale
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let scale = Rat::new(sign * rng.gen_range(1..=5), rng.gen_range(1..=4));
            let b_in = t.lowering().scale(&scale);
            let out = sl2_flags_and_projection(&a, &b_in).map_err(|e| format!("k={k} #{trial}: {e}"))?;
            let b = b_in.scale(&out.scale);
            let h = a.bracket(&b);
            let fail = |what: &str| Err(format!("k={k} #{trial} parts {parts:?}: {what}"));
            if out.k != k {
                return fail("wrong k");
            }
            if h.bracket(&a) != a.scale(&two) || h.bracket(&b) != b.scale(&-&two) {
                return fail("rescaled pair is not an sl(2)-triple");
            }
            if !check_complementary_flags(&out.u_flag, &out.v_flag).map_err(|e| e.to_string())? {
                return fail("flags not complementary");
            }
            for j in 1..=k {
                let (uj, vj) = (&out.u_flag.spaces()[j - 1], &out.v_flag.spaces()[j - 1]);
                if *uj != kernel_basis(&a.pow(j)) || *vj != image_basis(&b.pow(j)) {
                    return fail("flag spaces differ from ker A^j, im B^j");
                }
                if uj.dim() + vj.dim() != a.rows() || !uj.sum(vj).unwrap().is_full() {
                    return fail("U_j + V_j is not a direct sum decomposition");
                }
                for s in [uj, vj] {
                    if !Subspace::column_space(&(&h * s.basis())).is_subspace_of(s) {
                        return fail("flag space not H-invariant");
                    }
                }
                let (aj, bj) = (a.pow(j), b.pow(j));
                let c = Rat::from_int(2 * j as i64);
                if h.bracket(&aj) != aj.scale(&c) || h.bracket(&bj) != bj.scale(&-c) {
                    return fail("bracket identity for powers");
                }
                if !h.bracket(&(&bj * &aj)).is_zero() {
                    return fail("[H, B^j A^j] != 0");
                }
            }
            let p = &out.projection;
            if &(p * p) != p {
                return fail("P is not idempotent");
            }
            let bkak = &b.pow(k) * &a.pow(k);
            if out.normalization.is_zero() || bkak.scale(&out.normalization) != *p {
                return fail("P is not c·B^k A^k");
            }
            if image_basis(p) != image_basis(&b.pow(k)) || kernel_basis(p) != kernel_basis(&a.pow(k)) {
                return fail("image or kernel of P");
            }
        }
    }
    Ok("250 triples, k = 1..5, dim <= 12".into())
}

fn random_subspace(rng: &mut impl Rng, n: usize, max_dim: usize) -> Subspace {
    let d = rng.gen_range(0..=max_dim);
    let vs: Vec<QVector> =
        (0..d).map(|_| (0..n).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect()).collect();
    Subspace::span(n, &vs).unwrap()
}

fn span_cols(g: &QMatrix, cols: std::ops::Range<usize>) -> Subspace {
    let vs: Vec<QVector> = cols.map(|c| g.column(c)).collect();
    Subspace::span(g.rows(), &vs).unwrap()
}

/// `(U, V, W)` with `V ⊆ W`; half of them built with `U ⊕ V = E` by design.
fn lemma_instance(rng: &mut impl Rng, n: usize) -> (Subspace, Subspace, Subspace) {
    if rng.gen_bool(0.5) {
        let g = random_unimodular(rng, n);
        let split = rng.gen_range(0..=n);
        let v = span_cols(&g, split..n);
        let w = v.sum(&random_subspace(rng, n, 2)).unwrap();
        (span_cols(&g, 0..split), v, w)
    } else {
        let u = random_subspace(rng, n, n);
        let v = random_subspace(rng, n, n);
        let w = v.sum(&random_subspace(rng, n, n)).unwrap();
        (u, v, w)
    }
}

/// Complementary flags: `U_j` spanned by leading columns of `g`, `V_j` by
/// trailing columns of `g` times a random unit upper-triangular matrix.
fn complementary_flags(rng: &mut impl Rng, n: usize) -> (Vec<Subspace>, Vec<Subspace>) {
    let g = random_unimodular(rng, n);
    let k = rng.gen_range(0..=n.min(4));
    let mut dims: Vec<usize> = (0..k).map(|_| rng.gen_range(1..n.max(2))).filter(|&d| d < n).collect();
    dims.sort_unstable();
    dims.dedup();
    let upper = QMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rat::one(),
        std::cmp::Ordering::Less => Rat::from_int(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Greater => Rat::zero(),
    });
    let w = &g * &upper;
    let us = dims.iter().map(|&d| span_cols(&g, 0..d)).collect();
    let vs = dims.iter().map(|&d| span_cols(&w, d..n)).collect();
    (us, vs)
}

fn flag_lemmas() -> Outcome {
    let mut rng = rng(4);
    let (mut yes, mut no, mut pieces_checked) = (0, 0, 0);
    for trial in 0..500 {
        let n = rng.gen_range(1..=6);
        // E = U ⊕ V ⟺ E = U + W and W = (U ∩ W) ⊕ V, for V ⊆ W
        let (u, v, w) = lemma_instance(&mut rng, n);
        let lhs = u.direct_sum_check(&v).unwrap();
        let uw = u.intersect(&w).unwrap();
        let rhs = u.sum(&w).unwrap().is_full() && w.is_direct_sum_of(&uw, &v).unwrap();
        if lhs != rhs {
            return Err(format!("instance {trial}: direct sum {lhs} but criterion {rhs}"));
        }
        if lhs {
            yes += 1;
        } else {
            no += 1;
        }

        let (us, vs) = complementary_flags(&mut rng, n);
        let uf = Flag::ascending(us.clone()).map_err(|e| e.to_string())?;
        let vf = Flag::descending(vs.clone()).map_err(|e| e.to_string())?;
        let pieces = flag_refinement(&uf, &vf).map_err(|e| format!("instance {trial}: {e}"))?;
        for j in 1..us.len() {
            let d = &pieces[j - 1];
            if *d != us[j].intersect(&vs[j - 1]).unwrap() {
                return Err(format!("instance {trial}: D_j is not U_j ∩ V_(j-1)"));
            }
            if us[j - 1].dim() + d.dim() != us[j].dim() || us[j - 1].sum(d).unwrap() != us[j] {
                return Err(format!("instance {trial}: U_j != U_(j-1) ⊕ D_j"));
            }
            pieces_checked += 1;
        }
    }
    if yes == 0 || no == 0 {
        return Err(format!("one-sided sample: {yes} direct sums, {no} not"));
    }
    Ok(format!("500 instances ({yes} direct, {no} not), {pieces_checked} refinement steps"))
}

fn shear(upper: bool) -> LaurentMatrix {
    use nilsplit::laurent::LaurentPoly;
    let (a, d) = if upper { (1, -1) } else { (-1, 1) };
    LaurentMatrix::from_rows(vec![
        vec![LaurentPoly::z_pow(a), LaurentPoly::one()],
        vec![LaurentPoly::zero(), LaurentPoly::z_pow(d)],
    ])
    .unwrap()
}

fn birkhoff_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(5);
    for trial in 0..100 {
        let (t, exps) = random_transition(&mut rng, 4);
        let expected = SplittingType::new(exps);
        let s = splitting_type(&t).map_err(|e| format!("#{trial}: {e}"))?;
        if s != expected {
            return Err(format!("#{trial}: splitting {:?}, expected {:?}", s.exponents(), expected.exponents()));
        }
        let f = birkhoff_factorize(&t).map_err(|e| format!("#{trial}: {e}"))?;
        if f.splitting != expected || f.product() != t {
            return Err(format!("#{trial}: factorization does not reproduce the input"));
        }
        if !f.t_plus.is_polynomial_in_z() || !f.t_minus.is_polynomial_in_inverse() {
            return Err(format!("#{trial}: factor outside its chart"));
        }
        for m in [&f.t_plus, &f.t_minus] {
            if m.monomial_det().map(|(_, d)| d) != Ok(0) {
                return Err(format!("#{trial}: factor determinant not constant"));
            }
        }
    }
    for (upper, expected) in [(true, vec![1, -1]), (false, vec![0, 0])] {
        let t = shear(upper);
        let s = splitting_type(&t).map_err(|e| e.to_string())?;
        let f = birkhoff_factorize(&t).map_err(|e| e.to_string())?;
        if s.exponents() != expected || f.splitting.exponents() != expected || f.product() != t {
            return Err(format!("hand case {t}: {:?}", s.exponents()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("100 random + 2 hand cases in {:.2?}", elapsed))
}

/// `Σ max(0, a_i + n + 1)`, written out independently of the library.
fn h0_oracle(exps: &[i64], n: i64) -> usize {
    exps.iter().map(|a| if a + n + 1 > 0 { (a + n + 1) as usize } else { 0 }).sum()
}

fn h0_consistency() -> Outcome {
    let mut rng = rng(6);
    let mut evaluations = 0;
    for trial in 0..40 {
        let r = rng.gen_range(1..=4);
        let exps: Vec<i64> = (0..r).map(|_| rng.gen_range(-4..=4)).collect();
        let t = LaurentMatrix::diag_monomials(&exps);
        let w = exps.iter().map(|a| a.abs()).max().unwrap();
        for n in -w - 1..=w + 1 {
            let h = h0_twisted(&t, n).map_err(|e| e.to_string())?;
            if h != h0_oracle(&exps, n) {
                return Err(format!("#{trial} {exps:?} n={n}: h0 = {h}, expected {}", h0_oracle(&exps, n)));
            }
            evaluations += 1;
        }
    }
    // invariants over the random transition corpus
    let corpus: Vec<(LaurentMatrix, Vec<i64>)> = (0..20).map(|_| random_transition(&mut rng, 3)).collect();
    for (i, (t, _)) in corpus.iter().enumerate() {
        let s = splitting_type(t).map_err(|e| e.to_string())?;
        let m = rng.gen_range(-3..=3);
        if splitting_type(&t.twist(m)).map_err(|e| e.to_string())? != s.twist(m) {
            return Err(format!("#{i}: twist by {m}"));
        }
        let dual = bundle_ops(t, t, BundleOp::Dual).map_err(|e| e.to_string())?;
        if splitting_type(&dual).map_err(|e| e.to_string())? != s.dual() {
            return Err(format!("#{i}: dual"));
        }
        let (other, _) = &corpus[(i + 1) % corpus.len()];
        let so = splitting_type(other).map_err(|e| e.to_string())?;
        let sum = bundle_ops(t, other, BundleOp::DirectSum).map_err(|e| e.to_string())?;
        if splitting_type(&sum).map_err(|e| e.to_string())? != s.direct_sum(&so) {
            return Err(format!("#{i}: direct sum"));
        }
        let mut prev: Option<(usize, usize)> = None;
        for n in -8..=8 {
            let h = h0_twisted(t, n).map_err(|e| e.to_string())?;
            if h != h0_oracle(s.exponents(), n) {
                return Err(format!("#{i}: h0 at {n} disagrees with its splitting type"));
            }
            if let Some((ph, pd)) = prev {
                let d = h.checked_sub(ph).ok_or(format!("#{i}: h0 decreases at {n}"))?;
                if d < pd || d > s.rank() {
                    return Err(format!("#{i}: first differences misbehave at {n}"));
                }
                prev = Some((h, d));
            } else {
                prev = Some((h, 0));
            }
        }
    }
    Ok(format!("{evaluations} diagonal evaluations, 20 transitions x twist/dual/sum"))
}

/// Least `j` with `A^{j+1} u = 0`, straight from kernel membership.
fn orbit_degree_oracle(a: &QMatrix, u: &[Rat]) -> usize {
    (0..).find(|&j| kernel_basis(&a.pow(j + 1)).contains(u)).unwrap()
}

fn orbit_degrees() -> Outcome {
    let mut rng = rng(7);
    let mut vectors = 0;
    for trial in 0..30 {
        let largest = rng.gen_range(1..=5);
        let parts = random_partition(&mut rng, largest, 9);
        let a = random_nilpotent(&mut rng, &parts);
        let n = a.rows();
        for i in 0..n {
            let u = unit_vector(n, i);
            let j = orbit_degree_oracle(&a, &u);
            let in_lower = j > 0 && kernel_basis(&a.pow(j)).contains(&u);
            let c = orbit_curve(&a, &u).map_err(|e| e.to_string())?;
            if c.degree != j || in_lower {
                return Err(format!("#{trial} e{i}: degree {} but kernel level {j}", c.degree));
            }
            let span = Subspace::span(n, &c.coefficient_vectors).unwrap();
            if span.dim() != j + 1 {
                return Err(format!("#{trial} e{i}: coefficient vectors dependent"));
            }
            vectors += 1;
        }
    }
    Ok(format!("30 nilpotents, {vectors} basis vectors"))
}

fn lie_analysis() -> Outcome {
    for n in 1..=6 {
        let t = irrep_matrices(n);
        let l = lie_closure(n + 1, &[t.raising().clone(), t.neutral().clone(), t.lowering().clone()])
            .map_err(|e| e.to_string())?
            .basis;
        if !structure_report(&l).is_killing_nondegenerate {
            return Err(format!("U_{n}: Killing form degenerate"));
        }
        let c = commutant_dimension(&l);
        if c.dim != 1 {
            return Err(format!("U_{n}: commutant dimension {}", c.dim));
        }
        let z = centralizer_dimension(&l, t.neutral()).map_err(|e| e.to_string())?;
        if z != 1 {
            return Err(format!("U_{n}: centralizer of H has dimension {z}"));
        }
    }
    let mut rng = rng(8);
    for trial in 0..20 {
        let d = rng.gen_range(1..=5);
        let gens: Vec<QMatrix> = (0..rng.gen_range(1..=d))
            .map(|_| QMatrix::diag(&(0..d).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect::<Vec<_>>()))
            .collect();
        let l = lie_closure(d, &gens).map_err(|e| e.to_string())?.basis;
        if let Some(m) = find_nilpotent(&l, trial) {
            return Err(format!("diagonal algebra #{trial} produced nilpotent {m}"));
        }
    }
    Ok("U_1..U_6 and 20 diagonal algebras".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Veronese normal bundle", veronese),
        ("weight formula", weight_formula),
        ("complementary flags from sl(2)", complementary_projection),
        ("flag lemmas", flag_lemmas),
        ("Birkhoff round trip", birkhoff_round_trip),
        ("h0 oracle and invariants", h0_consistency),
        ("orbit degrees", orbit_degrees),
        ("Lie analysis", lie_analysis),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| {
                let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
                Err(format!("panicked: {}", msg.unwrap_or_default()))
            });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
