mod common;

use maxcomm::classical::{distinguished_eigenvalues, perron_pair, NonnegMatrix};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_nonneg(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(0.7) { rng.gen_range(0.0..5.0) } else { 0.0 })
                .collect()
        })
        .collect()
}

#[test]
fn perron_root_matches_characteristic_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..300 {
        let n = 2 + trial % 2;
        let rows = random_nonneg(&mut rng, n);
        let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
        let (root, vector) = perron_pair(&m);
        let expected = common::closed_form_root(&rows);
        assert!(
            (root - expected).abs() <= 1e-8 * (1.0 + expected),
            "trial {trial}: {rows:?} gave {root}, expected {expected}"
        );
        assert!(vector.iter().all(|&x| x >= -1e-12));
        let image = &m * DMatrix::from_column_slice(n, 1, &vector);
        for i in 0..n {
            assert!((image[i] - root * vector[i]).abs() <= 1e-8 * (1.0 + root));
        }
    }
}

#[test]
fn golden_ratio_and_cubic_examples() {
    let (root, _) = perron_pair(&DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 0.0]));
    assert!((root - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    // companion matrix of x^3 - 2x - 1, whose largest root is the golden ratio
    let companion = vec![vec![0.0, 2.0, 1.0], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
    assert!((common::closed_form_root(&companion) - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
}

#[test]
fn irreducible_matrix_has_one_distinguished_eigenvalue() {
    let a: NonnegMatrix = "1 2; 3 4".parse().unwrap();
    let roots = distinguished_eigenvalues(&a, 1e-9).unwrap();
    assert_eq!(roots.len(), 1);
    assert!((roots[0] - (5.0 + 33f64.sqrt()) / 2.0).abs() < 1e-8);
}
