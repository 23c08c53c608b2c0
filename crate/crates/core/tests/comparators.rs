mod common;

use std::f64::consts::PI;

use rand::Rng;
use sbath_core::comparators::thermal::kms_weights;
use sbath_core::comparators::*;
use sbath_core::Complex64;

fn random_modes(rng: &mut impl Rng, count: usize) -> HeomModes {
    HeomModes::new(
        (0..count)
            .map(|_| HeomMode {
                c: Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                gamma: rng.random_range(0.5..3.0),
            })
            .collect(),
    )
}

#[test]
fn heom_pole_sum_matches_quadrature() {
    let mut rng = common::rng(11);
    for _ in 0..5 {
        let m = random_modes(&mut rng, 3);
        let gmin = m.modes.iter().map(|x| x.gamma).fold(f64::INFINITY, f64::min);
        let t_end = 40.0 / gmin;
        for k in 0..=40 {
            let w = -10.0 + 0.5 * k as f64;
            let oracle = common::gauss_legendre(
                |t| heom_correlation(&m, t).unwrap() * Complex64::from_polar(1.0, w * t),
                0.0,
                t_end,
                4000,
            );
            let s = heom_sigma(&m, w).unwrap();
            assert!((s - oracle).norm() < 1e-6, "omega {w}: {s} vs {oracle}");
        }
    }
}

#[test]
fn sampled_correlation_matches_pole_sum() {
    let mut rng = common::rng(12);
    let m = random_modes(&mut rng, 3);
    let samples = CorrelationSamples::sample(&m, 1e-3, 60_001).unwrap();
    for w in [-4.0, -0.3, 0.0, 1.0, 6.5] {
        let e = correlation_to_sigma(&samples, w, 1e-9).unwrap();
        let exact = heom_sigma(&m, w).unwrap();
        assert!((e.value - exact).norm() < 1e-6, "{w}: {} vs {exact}", e.value);
        assert!(e.error < 1e-5);
    }
}

#[test]
fn continued_fraction_matches_tridiagonal_resolvent() {
    let mut rng = common::rng(13);
    let eta = 1e-6;
    for _ in 0..100 {
        let depth = rng.random_range(1..=20);
        let eps: Vec<f64> = (0..depth).map(|_| rng.random_range(-1.0..1.0)).collect();
        let hop: Vec<f64> = (1..depth).map(|_| rng.random_range(0.1..1.0)).collect();
        let lambda = rng.random_range(0.1..1.0);
        let chain = TnChain::new(lambda, eps.clone(), hop.clone()).with_eta(eta);
        let w = rng.random_range(-3.0..3.0);
        let cf = tn_sigma_cf(&chain, w).unwrap();
        let dense = lambda * lambda * common::tridiagonal_resolvent00(&eps, &hop, Complex64::new(w, eta));
        assert!((cf - dense).norm() / dense.norm() < 1e-10, "depth {depth}");
    }
}

#[test]
fn kernel_at_zero_time_is_plain_sum() {
    let chain = TnChain::new(0.8, vec![0.2, -0.4], vec![0.5]).with_eta(0.05);
    let (lo, hi, n) = (-5.0, 5.0, 1001);
    let h = (hi - lo) / (n - 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let s = tn_sigma_cf(&chain, lo + h * k as f64).unwrap();
        let wgt = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
        sum += s * wgt * h;
    }
    let k0 = tn_kernel(&chain, 0.0, (lo, hi), n).unwrap();
    assert!((k0 - sum / (2.0 * PI)).norm() < 1e-13);
}

#[test]
fn single_level_kernel_decays() {
    // for t > 0: (1/2π)∫ λ²/(ω − ε₀ + iη) e^{−iωt} dω = −i λ² e^{−iε₀t} e^{−ηt}
    let (lambda, e0, eta) = (1.0, 0.3, 0.5);
    let chain = TnChain::new(lambda, vec![e0], vec![]).with_eta(eta);
    let mut prev = f64::INFINITY;
    for t in [0.5, 1.0, 2.0, 3.0, 4.0] {
        let k = tn_kernel(&chain, t, (-400.0, 400.0), 400_001).unwrap();
        let exact = Complex64::new(0.0, -lambda * lambda) * Complex64::from_polar((-eta * t).exp(), -e0 * t);
        assert!((k - exact).norm() < 5e-3, "t = {t}: {k} vs {exact}");
        assert!(k.norm() < prev);
        prev = k.norm();
    }
}

#[test]
fn kernel_grid_convergence() {
    let chain = TnChain::new(0.6, vec![0.1, 0.4, -0.2], vec![0.3, 0.2]).with_eta(0.5);
    let a = tn_kernel(&chain, 1.3, (-20.0, 20.0), 20_001).unwrap();
    let b = tn_kernel(&chain, 1.3, (-20.0, 20.0), 40_001).unwrap();
    assert!((a - b).norm() < 1e-6);
}

#[test]
fn epr_pole_sits_at_shifted_frequency() {
    let m = EprModel::from_pairs(&[0.2, 0.3], &[0.5, 0.2]);
    let sigma = epr_sigma(&m).unwrap();
    assert_eq!(sigma.im, 0.0);
    let omega_m = 6.0;
    // bisection on the real denominator ω − ω_m − Σ
    let den = |w: f64| (Complex64::new(w - omega_m, 0.0) - sigma).re;
    let (mut lo, mut hi) = (5.5, 6.5);
    assert!(den(lo) < 0.0 && den(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if den(mid) < 0.0 {
            lo = mid
        } else {
            hi = mid
        }
    }
    assert!((lo - (omega_m + 0.062)).abs() < 1e-12);
}

#[test]
fn epr_is_additive() {
    let a = EprModel::from_pairs(&[0.2, 0.7, 1.1], &[0.5, 0.1, 0.33]);
    let b = EprModel::from_pairs(&[0.3], &[0.2]);
    let whole = epr_delta_omega(&a.concat(&b)).unwrap();
    let parts = epr_delta_omega(&a).unwrap() + epr_delta_omega(&b).unwrap();
    assert_eq!(whole, parts);
}

#[test]
fn detailed_balance() {
    for i in 0..10 {
        for j in 0..10 {
            let w = 0.1 + i as f64;
            let t = 0.1 + j as f64;
            let n = bose_occupation(w, t).unwrap();
            assert!((n / (n + 1.0) - (-w / t).exp()).abs() < 1e-14);
            let (emit, absorb) = kms_weights(w, t).unwrap();
            assert!((absorb / emit - (-w / t).exp()).abs() < 1e-14);
        }
    }
}

fn ohmic(points: usize) -> SpectralDensity {
    let omega: Vec<f64> = (0..points).map(|k| 1e-3 + 20.0 * k as f64 / (points - 1) as f64).collect();
    let values = omega.iter().map(|w| 0.1 * w * (-w / 2.0).exp()).collect();
    SpectralDensity::Tabulated { omega, values }
}

#[test]
fn correlation_hermiticity() {
    let j = ohmic(4001);
    for t in [0.1, 0.7, 2.5] {
        let a = bath_correlation_thermal(&j, 0.8, t).unwrap();
        let b = bath_correlation_thermal(&j, 0.8, -t).unwrap();
        assert!((b.value - a.value.conj()).norm() <= a.error + b.error + 1e-15);
    }
}

#[test]
fn correlation_grows_with_temperature() {
    let j = ohmic(2001);
    let mut prev = bath_correlation_thermal(&j, 0.0, 0.0).unwrap().value.re;
    for t in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let c = bath_correlation_thermal(&j, t, 0.0).unwrap();
        assert!(c.value.re > prev);
        assert!(c.value.im.abs() < 1e-15);
        prev = c.value.re;
    }
}

#[test]
fn tabulated_error_is_reported() {
    let j = ohmic(9);
    let e = bath_correlation_thermal(&j, 1.0, 3.0).unwrap();
    assert!(e.error > 1e-6);
    assert!(matches!(e.require(1e-9), Err(sbath_core::Error::Quadrature { .. })));
}
