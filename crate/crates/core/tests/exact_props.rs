mod oracles;

use adjrank_core::exact::{parse_matrix, to_text, ExactMatrix, GaussianRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, 1i64..=4, -5i64..=5).prop_map(|(p, q, im)| {
        GaussianRational::new(BigRational::new(p.into(), q.into()), BigRational::from_integer(im.into()))
    })
}

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |e| ExactMatrix::new(n, e).unwrap())
}

fn any_matrix(max_n: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_n).prop_flat_map(matrix)
}

/// `X·Y` with `X` of size `n × r`: rank at most `r`.
fn low_rank(n: usize, r: usize) -> impl Strategy<Value = ExactMatrix> {
    (prop::collection::vec(scalar(), n * r), prop::collection::vec(scalar(), r * n)).prop_map(move |(x, y)| {
        ExactMatrix::from_fn(n, |i, j| {
            (0..r).fold(GaussianRational::zero(), |acc, t| acc + &x[i * r + t] * &y[t * n + j])
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_matches_laplace(a in any_matrix(5)) {
        prop_assert_eq!(a.det(), oracles::laplace_det(&a));
    }

    #[test]
    fn cofactor_matches_laplace(a in any_matrix(5)) {
        prop_assert_eq!(a.cofactor(), oracles::laplace_cofactor(&a));
    }

    #[test]
    fn cofactor_matches_laplace_at_corank_one(n in 3usize..=5, seed in any::<u64>()) {
        // Rank exactly n − 1 is where the rank-one route is taken.
        let mut rng = adjrank_core::seed::stream(seed, 0);
        let a = adjrank_core::subspace::sample_matrix(adjrank_core::SubspaceClass::General, n, n - 1, &mut rng).unwrap();
        prop_assert_eq!(a.cofactor(), oracles::laplace_cofactor(&a));
    }

    #[test]
    fn det_multiplicative(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = adjrank_core::seed::stream(seed, 1);
        let a = adjrank_core::subspace::random_matrix(n, &mut rng);
        let b = adjrank_core::subspace::random_matrix(n, &mut rng);
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
    }

    #[test]
    fn cofactor_commutes_with_transpose_and_conj(a in any_matrix(6)) {
        prop_assert_eq!(a.transpose().cofactor(), a.cofactor().transpose());
        prop_assert_eq!(a.conj().cofactor(), a.cofactor().conj());
    }

    #[test]
    fn cofactor_parity(a in any_matrix(6)) {
        // (−A)ᶜ = (−1)^(n−1)·Aᶜ.
        let expected = if a.n() % 2 == 1 { a.cofactor() } else { a.cofactor().neg() };
        prop_assert_eq!(a.neg().cofactor(), expected);
    }

    #[test]
    fn inverse_and_rank_agree(a in any_matrix(5)) {
        let singular = a.det().is_zero();
        prop_assert_eq!(a.inverse().is_none(), singular);
        prop_assert_eq!(a.rank() == a.n(), !singular);
        if let Some(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).is_identity());
        }
    }

    #[test]
    fn rank_of_products(n in 2usize..=5, r in 0usize..=5, seed in any::<u64>()) {
        let r = r.min(n);
        let mut rng = adjrank_core::seed::stream(seed, 2);
        let m = adjrank_core::subspace::sample_matrix(adjrank_core::SubspaceClass::General, n, r, &mut rng).unwrap();
        prop_assert_eq!(m.rank(), r);
        let ints: Vec<i128> = m
            .entries()
            .iter()
            .flat_map(|z| [z.re().to_integer(), z.im().to_integer()])
            .map(|v: BigInt| i128::try_from(v).unwrap())
            .collect();
        // Real embedding [[Re, −Im], [Im, Re]] has twice the complex rank.
        let re: Vec<i128> = ints.iter().step_by(2).copied().collect();
        let im: Vec<i128> = ints.iter().skip(1).step_by(2).copied().collect();
        let mut big = vec![0i128; 4 * n * n];
        for i in 0..n {
            for j in 0..n {
                big[i * 2 * n + j] = re[i * n + j];
                big[i * 2 * n + n + j] = -im[i * n + j];
                big[(n + i) * 2 * n + j] = im[i * n + j];
                big[(n + i) * 2 * n + n + j] = re[i * n + j];
            }
        }
        prop_assert_eq!(oracles::int_rank(2 * n, 2 * n, &big), 2 * r);
    }

    #[test]
    fn text_and_json_roundtrip(a in any_matrix(4)) {
        prop_assert_eq!(parse_matrix(&to_text(&a)).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(parse_matrix(&json).unwrap(), a);
    }

    #[test]
    fn scalar_field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        }
        prop_assert_eq!(x.to_string().parse::<GaussianRational>().unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn adjugate_identity_up_to_order_8(a in (1usize..=8).prop_flat_map(matrix)) {
        let lhs = a.mul(&a.cofactor().transpose());
        prop_assert_eq!(lhs, ExactMatrix::identity(a.n()).scale(&a.det()));
    }

    #[test]
    fn cofactor_vanishes_at_low_rank(
        a in (2usize..=7).prop_flat_map(|n| (0..=n - 2).prop_flat_map(move |r| low_rank(n, r)))
    ) {
        prop_assert!(a.cofactor().is_zero());
        prop_assert!(a.rank() + 2 <= a.n());
    }

    #[test]
    fn cofactor_routes_agree(a in (3usize..=7).prop_flat_map(matrix)) {
        prop_assert_eq!(a.cofactor(), a.cofactor_by_minors());
    }
}

#[test]
fn order_one_convention() {
    for v in [0i64, 3, -2] {
        let a = ExactMatrix::from_int_rows(&[[v]]);
        assert_eq!(a.cofactor(), ExactMatrix::identity(1));
        assert_eq!(a.mul(&a.cofactor().transpose()), ExactMatrix::identity(1).scale(&a.det()));
    }
    assert!(GaussianRational::one().is_one());
}
