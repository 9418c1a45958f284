use k3_conics::golay::GolayCode;
use k3_conics::lattice::fqf::{discriminant_form, fqf_isomorphic};
use k3_conics::lattice::{
    hnf_with_transform, int, orthogonal_complement, rat, saturation, short_vectors_up_to, snf, IntMatrix,
    IntegralLattice, RatMatrix,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn code() -> &'static GolayCode {
    static CODE: OnceLock<GolayCode> = OnceLock::new();
    CODE.get_or_init(|| GolayCode::build().unwrap())
}

fn int_matrix(n: usize, m: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(range, n * m)
}

fn is_unimodular(m: &IntMatrix) -> bool {
    let d = m.determinant();
    d == int(1) || d == int(-1)
}

/// Symmetric even Gram matrices of rank 1–4 with nonzero determinant.
fn even_gram() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), int_matrix(n, n, -3..=3), prop::collection::vec(-5i64..=5, n)))
        .prop_map(|(n, off, diag)| {
            let mut g = vec![0i64; n * n];
            for i in 0..n {
                for j in 0..n {
                    g[i * n + j] = if i == j {
                        2 * diag[i]
                    } else {
                        off[i.min(j) * n + i.max(j)]
                    };
                }
            }
            IntMatrix::from_i64(n, n, &g)
        })
        .prop_filter("nondegenerate and small", |g| {
            let d = g.determinant().abs();
            !d.is_zero() && d <= int(2000)
        })
}

/// A unimodular matrix as a product of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k, swap) in ops {
            if swap {
                u.swap_rows(i, j);
            } else if i != j {
                let src = u.row(j).to_vec();
                for (x, y) in u.row_mut(i).iter_mut().zip(src) {
                    *x += y * k;
                }
            }
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn golay_is_linear(a in 0usize..4096, b in 0usize..4096) {
        let w = code().words();
        prop_assert!(code().contains(w[a].sym_diff(w[b])));
    }

    #[test]
    fn hnf_transform_is_unimodular(rows in 1usize..5, cols in 1usize..5, seed in int_matrix(4, 4, -6..=6)) {
        let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let (h, u) = hnf_with_transform(&m);
        prop_assert!(is_unimodular(&u));
        prop_assert_eq!(u.mul(&m), h);
    }

    #[test]
    fn snf_is_a_valid_diagonalization(rows in 1usize..5, cols in 1usize..5, seed in int_matrix(4, 4, -6..=6)) {
        let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let s = snf(&m);
        prop_assert!(is_unimodular(&s.left) && is_unimodular(&s.right));
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..rows {
            for j in 0..cols {
                let expected = if i == j && i < s.divisors.len() { s.divisors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &expected);
            }
        }
        for w in s.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        if rows == cols && !m.determinant().is_zero() {
            let p: BigInt = s.divisors.iter().product();
            prop_assert_eq!(p, m.determinant().abs());
        }
    }

    #[test]
    fn discriminant_order_is_det(g in even_gram()) {
        let f = discriminant_form(&IntegralLattice::from_int_gram(&g)).unwrap();
        prop_assert_eq!(BigInt::from(f.order()), g.determinant().abs());
    }

    #[test]
    fn fqf_isomorphism_is_reflexive_and_symmetric(g in even_gram(), seed in unimodular(4)) {
        let n = g.rows();
        let u = IntMatrix::from_rows(n, (0..n).map(|i| seed.row(i)[..n].to_vec()).collect());
        prop_assume!(is_unimodular(&u));
        let f1 = discriminant_form(&IntegralLattice::from_int_gram(&g)).unwrap();
        let f2 = discriminant_form(&IntegralLattice::from_int_gram(&u.mul(&g).mul(&u.transpose()))).unwrap();
        let same = fqf_isomorphic(&f1, &f1).unwrap();
        prop_assert!(same.is_some_and(|w| w.verify(&f1, &f1)));
        let there = fqf_isomorphic(&f1, &f2).unwrap();
        let back = fqf_isomorphic(&f2, &f1).unwrap();
        prop_assert!(there.is_some_and(|w| w.verify(&f1, &f2)));
        prop_assert!(back.is_some_and(|w| w.verify(&f2, &f1)));
    }

    #[test]
    fn short_vectors_match_brute_force(
        n in 1usize..=3,
        seed in int_matrix(3, 3, -2..=2),
        bound in 1i64..=6,
        half in prop::collection::vec(any::<bool>(), 3),
        shifted in any::<bool>(),
    ) {
        let b = IntMatrix::from_i64(n, n, &seed[..n * n]);
        prop_assume!(!b.determinant().is_zero());
        let g = b.mul(&b.transpose()).to_rational();
        let shift: Vec<BigRational> = half[..n].iter().map(|&h| if h && shifted { rat(1, 2) } else { rat(0, 1) }).collect();
        let found = short_vectors_up_to(&g, &rat(bound, 1), shifted.then_some(&shift[..])).unwrap();

        // |x_i + s_i| ≤ sqrt(bound · (G⁻¹)_ii).
        let inv = g.inverse().unwrap();
        let r: Vec<i64> = (0..n)
            .map(|i| ((bound as f64) * inv[(i, i)].to_f64().unwrap()).sqrt().floor() as i64 + 1)
            .collect();
        let mut expected = BTreeSet::new();
        let mut x = vec![0i64; n];
        fn rec(i: usize, x: &mut Vec<i64>, r: &[i64], f: &mut dyn FnMut(&[i64])) {
            if i == x.len() { f(x); return; }
            for v in -r[i]..=r[i] { x[i] = v; rec(i + 1, x, r, f); }
        }
        rec(0, &mut x, &r, &mut |x| {
            let v: Vec<BigRational> = x.iter().zip(&shift).map(|(&a, s)| rat(a, 1) + s).collect();
            let norm = g.bilinear(&v, &v);
            if norm <= rat(bound, 1) && (shifted || !norm.is_zero()) {
                expected.insert(x.to_vec());
            }
        });
        let got: BTreeSet<Vec<i64>> = found.iter().map(|(x, _)| x.clone()).collect();
        prop_assert_eq!(&got, &expected);
        for (x, norm) in &found {
            let v: Vec<BigRational> = x.iter().zip(&shift).map(|(&a, s)| rat(a, 1) + s).collect();
            prop_assert_eq!(&g.bilinear(&v, &v), norm);
        }
        if !shifted {
            for x in &got {
                let neg: Vec<i64> = x.iter().map(|v| -v).collect();
                prop_assert!(got.contains(&neg));
            }
        }
    }

    #[test]
    fn complement_ranks_add_up(n in 2usize..=4, k in 1usize..=2, seed in int_matrix(2, 4, -3..=3)) {
        let ambient = IntegralLattice::scaled_euclidean(IntMatrix::identity(n), 1);
        let rows: Vec<Vec<BigInt>> = (0..k).map(|i| seed[i * 4..i * 4 + n].iter().map(|&x| int(x)).collect()).collect();
        let sub = IntegralLattice::in_ambient(IntMatrix::from_rows(n, rows.clone()), RatMatrix::identity(n));
        prop_assume!(sub.determinant() != rat(0, 1));
        let perp = orthogonal_complement(&sub, &ambient).unwrap();
        prop_assert_eq!(perp.rank() + k, n);
        for p in perp.basis().row_iter() {
            for s in &rows {
                let dot: BigInt = p.iter().zip(s).map(|(a, b)| a * b).sum();
                prop_assert!(dot.is_zero());
            }
        }
        let sat = saturation(&sub, &ambient).unwrap();
        for s in &rows {
            prop_assert!(sat.contains(s));
        }
    }
}
