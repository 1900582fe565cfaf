use arcsphere::chain::{invariant_factors, smith_normal_form, BigMatrix, IntMatrix, SparseMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Fraction-free Gaussian elimination.
fn determinant(m: &BigMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transforms_are_unimodular_and_diagonalize(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(rows);
        let s = smith_normal_form(&m);
        let big = m.map(|&x| BigInt::from(x));
        prop_assert_eq!(s.left.mul(&big).mul(&s.right), s.diagonal_matrix());
        prop_assert!(determinant(&s.left).abs().is_one());
        prop_assert!(determinant(&s.right).abs().is_one());
        for w in s.diagonal.windows(2) {
            prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.diagonal.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn sparse_and_dense_agree(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(rows);
        let dense: Vec<BigInt> = smith_normal_form(&m).diagonal.into_iter().filter(|d| !d.is_zero()).collect();
        prop_assert_eq!(invariant_factors(&SparseMatrix::from_dense(&m)), dense);
    }
}

#[test]
fn large_entries_fall_back_to_exact_arithmetic() {
    // products overflow i128 during elimination
    let big = i64::MAX / 3;
    let m = IntMatrix::from_rows(vec![vec![big, big - 1, 7], vec![big - 2, big, 11], vec![3, big, big - 5]]);
    let dense: Vec<BigInt> = smith_normal_form(&m).diagonal.into_iter().filter(|d| !d.is_zero()).collect();
    assert_eq!(invariant_factors(&SparseMatrix::from_dense(&m)), dense);
    let product: BigInt = dense.iter().product();
    assert_eq!(product.abs(), determinant(&m.map(|&x| BigInt::from(x))).abs());
}
