mod common;

use nilsplit::matrix::unit_vector;
use nilsplit::nilpotent::{flag_refinement, image_flag, kernel_flag, nilpotent_profile, orbit_curve};
use nilsplit::sl2::jacobson_morozov;
use nilsplit::subspace::{subspace_combine, kernel_basis, CombineMode, Combined};
use nilsplit::{QVector, Rat, Subspace};
use proptest::prelude::*;

use common::*;

fn partition() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..=4, 1..=4).prop_map(|mut p| {
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn profile_recovers_partition(parts in partition(), seed in any::<u64>()) {
        let a = random_nilpotent(&mut rng(seed), &parts);
        let p = nilpotent_profile(&a).unwrap();
        prop_assert_eq!(&p.partition, &parts);
        prop_assert_eq!(p.partition.iter().sum::<usize>(), a.rows());
        prop_assert_eq!(p.degree, parts[0]);
        prop_assert!(p.ker_dims.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(*p.ker_dims.last().unwrap(), a.rows());
    }

    #[test]
    fn orbit_degree_matches_kernel_level(
        parts in partition(),
        seed in any::<u64>(),
        coeffs in proptest::collection::vec(-2i64..=2, 16),
    ) {
        let a = random_nilpotent(&mut rng(seed), &parts);
        let n = a.rows();
        let u: QVector = coeffs[..n].iter().map(|&c| Rat::from_int(c)).collect();
        prop_assume!(u.iter().any(|x| !x.is_zero()));
        let c = orbit_curve(&a, &u).unwrap();
        let j = c.degree;
        prop_assert!(kernel_basis(&a.pow(j + 1)).contains(&u));
        prop_assert!(j == 0 || !kernel_basis(&a.pow(j)).contains(&u));
        prop_assert_eq!(Subspace::span(n, &c.coefficient_vectors).unwrap().dim(), j + 1);
        // point at t = 1 is exp(A)·u
        let mut expected = vec![Rat::zero(); n];
        for v in &c.coefficient_vectors {
            for (e, x) in expected.iter_mut().zip(v) {
                *e += x;
            }
        }
        prop_assert_eq!(c.point_at(&Rat::one()), expected);
    }

    #[test]
    fn refinement_pieces_rebuild_top_space(largest in 2usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let parts = random_partition(&mut r, largest, 10);
        let a = random_nilpotent(&mut r, &parts);
        let t = jacobson_morozov(&a).unwrap();
        let k = largest - 1;
        let u = kernel_flag(&a, k).unwrap();
        let v = image_flag(t.lowering(), k).unwrap();
        let pieces = flag_refinement(&u, &v).unwrap();
        let mut acc = u.spaces()[0].clone();
        for d in &pieces {
            prop_assert_eq!(subspace_combine(&acc, d, CombineMode::Intersect).unwrap(), Combined::Space(Subspace::zero(a.rows())));
            acc = acc.sum(d).unwrap();
        }
        prop_assert_eq!(&acc, u.spaces().last().unwrap());
    }
}

#[test]
fn generic_vector_reaches_full_degree() {
    let mut r = rng(11);
    for largest in 1..=5 {
        let parts = random_partition(&mut r, largest, 10);
        let a = random_nilpotent(&mut r, &parts);
        let n = a.rows();
        let k = largest - 1;
        let top = kernel_basis(&a.pow(k));
        for i in 0..n {
            let e = unit_vector(n, i);
            let generic = !top.contains(&e);
            assert_eq!(orbit_curve(&a, &e).unwrap().degree == k, generic);
        }
    }
}
