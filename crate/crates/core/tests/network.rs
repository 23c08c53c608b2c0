mod common;

use proptest::prelude::*;
use sbath_core::presets::preset;
use sbath_core::{build_bath_resolvent, build_full_matrix, validate, Complex64};

#[test]
fn c1_preset_is_valid() {
    assert!(validate(&preset("C1").unwrap().spec).is_empty());
}

#[test]
fn c3_bath_resolvent_entrywise() {
    let spec = preset("C3").unwrap().spec;
    let w = 6.6;
    let m = build_bath_resolvent(&spec, w).unwrap();
    assert_eq!(m.omega, w);
    // hand-assembled from the bath block: B1..B5
    let om = [6.5, 6.7, 7.0, 7.2, 7.4];
    let g = 1e-3;
    let mut expect = [[Complex64::new(0.0, 0.0); 5]; 5];
    for i in 0..5 {
        expect[i][i] = Complex64::new(w - om[i], g);
    }
    let mut put = |i: usize, j: usize, v: f64| {
        expect[i][j] = Complex64::new(-v, 0.0);
        expect[j][i] = Complex64::new(-v, 0.0);
    };
    put(0, 1, 0.30); // B1-B2
    put(0, 2, 0.35); // B1-B3
    put(0, 3, 0.30); // B1-B4
    put(1, 3, 0.20); // B2-B4
    put(1, 4, 0.20); // B2-B5
    put(2, 3, 0.08); // B3-B4
    put(3, 4, 0.06); // B4-B5
    put(2, 4, 0.05); // B3-B5
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(m.matrix[(i, j)], expect[i][j], "entry ({i},{j})");
        }
    }
}

#[test]
fn c1_top_left_at_system_frequency() {
    let a = build_full_matrix(&preset("C1").unwrap().spec, 6.0).unwrap();
    assert_eq!(a[(0, 0)], Complex64::new(0.0, 0.0));
    assert_eq!(a[(0, 1)], Complex64::new(-0.05, 0.0));
}

#[test]
fn invalid_spec_is_rejected_by_builders() {
    let mut s = preset("C1").unwrap().spec;
    s.nodes[1].gamma = -1.0;
    assert!(build_bath_resolvent(&s, 6.0).is_err());
    assert!(build_full_matrix(&s, 6.0).is_err());
}

proptest! {
    #[test]
    fn bath_block_symmetry_and_linearity(seed in any::<u64>(), n in 2usize..9, w1 in 5.0f64..8.0, w2 in 5.0f64..8.0) {
        let spec = common::random_network(&mut common::rng(seed), n);
        let full = build_full_matrix(&spec, w1).unwrap();
        let bath = build_bath_resolvent(&spec, w1).unwrap().matrix;
        prop_assert_eq!(full.view((1, 1), (n - 1, n - 1)).into_owned(), bath.clone());
        prop_assert_eq!(full.transpose(), full.clone());
        prop_assert_eq!(bath.transpose(), bath.clone());
        for i in 0..n - 1 {
            let node = &spec.nodes[i + 1];
            prop_assert_eq!(bath[(i, i)].im, node.gamma);
        }

        let bath2 = build_bath_resolvent(&spec, w2).unwrap().matrix;
        let diff = &bath2 - &bath;
        let step = w2 - w1;
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                let d = diff[(i, j)];
                if i == j {
                    // (w2 − ω_i) − (w1 − ω_i) equals w2 − w1 up to rounding of the two subtractions
                    prop_assert!((d.re - step).abs() <= 8.0 * f64::EPSILON * 8.0);
                    prop_assert_eq!(d.im, 0.0);
                } else {
                    prop_assert_eq!(d, Complex64::new(0.0, 0.0));
                }
            }
        }
    }
}

#[test]
fn linearity_is_exact_on_dyadic_values() {
    let spec = preset("C1").unwrap().spec;
    let a = build_full_matrix(&spec, 6.25).unwrap();
    let b = build_full_matrix(&spec, 7.5).unwrap();
    let d = b - a;
    let expect = sbath_core::linalg::CMatrix::identity(6, 6) * Complex64::new(1.25, 0.0);
    assert_eq!(d, expect);
}
