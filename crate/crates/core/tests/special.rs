use std::f64::consts::PI;

use gfkit::arith::Rational;
use gfkit::numeric::{gauss_laguerre, gauss_legendre};
use gfkit::special::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn all_states() -> Vec<HydrogenState> {
    let mut out = Vec::new();
    for dim in 2..=6 {
        for n in 1..=4 {
            for l in 0..n {
                out.push(HydrogenState::top(dim, n, l).unwrap());
            }
        }
    }
    out
}

#[test]
fn recurrence_examples() {
    let l0 = PolyFamily::new(Family::Laguerre(0.7), 0).unwrap();
    assert_eq!(poly_eval(&l0, 3.2), 1.0);
    for q in [-1.3, 0.0, 0.4, 2.2] {
        assert!((hermite(2, q) - (4.0 * q * q - 2.0)).abs() < 1e-13);
        assert!((gegenbauer(2, 1.0, q) - (4.0 * q * q - 1.0)).abs() < 1e-13);
        assert!((legendre(3, q) - 0.5 * (5.0 * q * q * q - 3.0 * q)).abs() < 1e-13);
    }
}

#[test]
fn laguerre_orthogonality_by_quadrature() {
    for alpha in [0.0, 0.5, 2.0, 3.5] {
        let rule = gauss_laguerre(30, alpha);
        for n in 0..=8u32 {
            for m in 0..=8u32 {
                let v = rule.integrate(|x| laguerre(n, alpha, x) * laguerre(m, alpha, x));
                let expect = if n == m { gamma(alpha + n as f64 + 1.0) / gamma(n as f64 + 1.0) } else { 0.0 };
                assert!((v - expect).abs() < 1e-9 * expect.max(1.0), "alpha={alpha} n={n} m={m}: {v}");
            }
        }
    }
}

#[test]
fn laguerre_derivative_identity_exact() {
    for two_alpha in [0i64, 1, 3, 4, 7] {
        let alpha = Rational::new(BigInt::from(two_alpha), BigInt::from(2));
        let next = &alpha + Rational::from_integer(BigInt::from(1));
        for n in 1..=10u32 {
            let lhs = derivative_coefficients(&laguerre_coefficients(n, &alpha));
            let rhs: Vec<Rational> = laguerre_coefficients(n - 1, &next).into_iter().map(|c| -c).collect();
            assert_eq!(lhs, rhs, "n={n} alpha={alpha}");
        }
    }
}

#[test]
fn spherical_harmonic_examples_and_normalization() {
    let y00 = spherical_harmonic(0, 0, 1.1, 2.0).unwrap();
    assert!((y00.re - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-15 && y00.im == 0.0);
    let rule = gauss_legendre(40);
    let nphi = 64;
    for (l, m) in [(1, 0), (2, -1), (3, 2), (5, 5)] {
        let mut total = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            for k in 0..nphi {
                let phi = 2.0 * PI * k as f64 / nphi as f64;
                total += w * 2.0 * PI / nphi as f64 * spherical_harmonic(l, m, x.acos(), phi).unwrap().norm_sqr();
            }
        }
        assert!((total - 1.0).abs() < 1e-12, "l={l} m={m}: {total}");
    }
    assert!(spherical_harmonic(2, 3, 0.0, 0.0).is_err());
}

#[test]
fn hyperspherical_normalization_general_chains() {
    // product Gauss-Legendre in each theta_j with weight sin^{N-1-j}, uniform phi
    let rule = gauss_legendre(24);
    let chains: Vec<Vec<i64>> = vec![vec![2, 1, -1], vec![3, 2, 0], vec![2, 2, 2, 1], vec![3, 1, 1, -1]];
    for chain in chains {
        let dim = chain.len() + 1;
        let nt = dim - 2;
        let nphi = 16;
        let mut total = 0.0;
        let mut idx = vec![0usize; nt];
        loop {
            let mut angles = Vec::with_capacity(nt + 1);
            let mut w = 1.0;
            for (j, &i) in idx.iter().enumerate() {
                let theta = (rule.nodes[i] + 1.0) * PI / 2.0;
                w *= rule.weights[i] * PI / 2.0 * theta.sin().powi((dim - 2 - j) as i32);
                angles.push(theta);
            }
            for k in 0..nphi {
                let mut a = angles.clone();
                a.push(2.0 * PI * k as f64 / nphi as f64);
                total += w * 2.0 * PI / nphi as f64 * hyperspherical_harmonic(&chain, &a).unwrap().norm_sqr();
            }
            let mut pos = 0;
            loop {
                if pos == nt {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < rule.nodes.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == nt {
                break;
            }
        }
        assert!((total - 1.0).abs() < 1e-10, "chain {chain:?}: {total}");
    }
}

#[test]
fn position_norms() {
    let s = HydrogenState::top(3, 1, 0).unwrap();
    let r = 1.3;
    assert!((s.radial_position(r) / s.radial_position(0.0) - (-r as f64).exp()).abs() < 1e-14);
    assert!((position_norm(&HydrogenState::new(3, 2, 1, vec![1]).unwrap()) - 1.0).abs() < 1e-8);
    assert!((position_norm(&HydrogenState::top(5, 2, 1).unwrap()) - 1.0).abs() < 1e-7);
    for s in all_states() {
        assert!((position_norm(&s) - 1.0).abs() < 1e-10, "{s}");
    }
}

#[test]
fn radial_node_count() {
    for s in all_states() {
        let cutoff = 4.0 * (s.n() as f64 + 2.0) / s.delta();
        let mut sign_changes = 0;
        let mut prev = s.radial_position(1e-6);
        for i in 1..4000 {
            let v = s.radial_position(cutoff * i as f64 / 4000.0);
            if v == 0.0 {
                continue;
            }
            if v * prev < 0.0 {
                sign_changes += 1;
            }
            prev = v;
        }
        assert_eq!(sign_changes, s.n() - s.l() - 1, "{s}");
    }
}

#[test]
fn momentum_norms() {
    assert!((momentum_norm(&HydrogenState::new(3, 2, 1, vec![0]).unwrap()).unwrap() - 1.0).abs() < 1e-6);
    for s in all_states() {
        assert!((momentum_norm(&s).unwrap() - 1.0).abs() < 1e-9, "{s}");
    }
}

#[test]
fn momentum_matches_oracle_examples() {
    let ground = HydrogenState::top(3, 1, 0).unwrap();
    for i in 0..=25 {
        let p = 5.0 * i as f64 / 25.0;
        let closed = ground.radial_momentum(p).powi(2);
        let oracle = fourier_momentum_oracle(&ground, p).unwrap().powi(2);
        assert!((closed - oracle).abs() < 1e-6 * closed, "p={p}");
    }
    let peak = fourier_momentum_oracle(&ground, 0.0).unwrap();
    assert!((peak - ground.radial_momentum(0.0)).abs() < 1e-9 * peak);
    for (dim, n, l) in [(4, 2, 0), (3, 3, 2)] {
        let s = HydrogenState::top(dim, n, l).unwrap();
        let grid: Vec<f64> = (0..50).map(|i| 8.0 * s.delta() * i as f64 / 49.0).collect();
        let scale = grid.iter().map(|&p| s.radial_momentum(p).abs()).fold(0.0, f64::max);
        for &p in &grid {
            let err = (s.radial_momentum(p).abs() - fourier_momentum_oracle(&s, p).unwrap()).abs();
            assert!(err < 1e-5 * scale, "{s} p={p}");
        }
    }
}

#[test]
fn momentum_parity_three_dim() {
    for (n, l, m) in [(2, 1, 1), (3, 2, -1), (4, 3, 2), (3, 1, 0)] {
        let s = HydrogenState::new(3, n, l, vec![m]).unwrap();
        let (theta, phi) = (0.8, 0.4);
        let a = hydrogen_momentum_wf(&s, 0.3, &[theta, phi]).unwrap();
        let b = hydrogen_momentum_wf(&s, 0.3, &[PI - theta, phi + PI]).unwrap();
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        assert!((b - a * sign).norm() < 1e-13);
    }
}

#[test]
fn laguerre_scaled_three_dim_constant_ratio() {
    for n in 1..=5 {
        for l in 0..n {
            let ratio = laguerre_scaled_norm_ratio_3d(n, l).unwrap();
            assert!((ratio - 1.0).abs() < 1e-10, "n={n} l={l}: {ratio}");
        }
    }
}

#[test]
fn genfunc_examples() {
    let leg = GenFunc::Legendre { r: 0.5, cos_theta: 0.3 };
    assert!(genfunc_residual(&leg, DEFAULT_GENFUNC_ORDER).unwrap() < 1e-10);
    let geg = GenFunc::Gegenbauer { alpha: 2.0, r: 0.4, t: 0.1 };
    assert!(genfunc_residual(&geg, DEFAULT_GENFUNC_ORDER).unwrap() < 1e-10);
    let ch = GenFunc::Character { r: 0.6, phi: 0.3, theta: 1.2, psi: -0.7 };
    assert!(genfunc_residual(&ch, DEFAULT_GENFUNC_ORDER).unwrap() < 1e-10);
    assert_eq!(genfunc_residual(&GenFunc::Legendre { r: 0.0, cos_theta: 0.9 }, 80).unwrap(), 0.0);
    assert!(genfunc_residual(&GenFunc::Legendre { r: 1.0, cos_theta: 0.2 }, 80).is_err());
}

proptest! {
    #[test]
    fn addition_theorem(l in 0i64..8, theta in 0.0f64..PI, phi in 0.0f64..6.28) {
        let total: f64 = (-l..=l).map(|m| spherical_harmonic(l, m, theta, phi).unwrap().norm_sqr()).sum();
        prop_assert!((total - (2 * l + 1) as f64 / (4.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn bessel_recurrence(nu2 in 1u32..12, x in 0.05f64..80.0) {
        let nu = nu2 as f64 / 2.0;
        let lhs = bessel_j(nu - 1.0 + 1.0, x) * 2.0 * nu / x;
        let rhs = if nu >= 1.0 { bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x) } else { lhs };
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn gegenbauer_genfunc(alpha in 0.1f64..4.0, r in -0.5f64..0.5, t in -1.0f64..1.0) {
        let g = GenFunc::Gegenbauer { alpha, r, t };
        prop_assert!(genfunc_residual(&g, DEFAULT_GENFUNC_ORDER).unwrap() < 1e-10);
    }
}

#[test]
fn invalid_states_rejected() {
    assert!(HydrogenState::top(3, 2, 2).is_err());
    assert!(HydrogenState::new(3, 3, 1, vec![2]).is_err());
    assert!(HydrogenState::new(2, 3, 1, vec![0]).is_err());
    assert!(HydrogenState::top(1, 1, 0).is_err());
}
