use std::collections::{BTreeMap, HashMap};

use gfkit::arith::SqrtRational;
use gfkit::poly::Poly;
use gfkit::unitary::*;
use gfkit::wigner::clebsch_gordan;
use gfkit::HalfInt;
use itertools::Itertools;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn pat(s: &str) -> GelfandPattern {
    s.parse().unwrap()
}

fn labels(n: usize, max_sum: i64) -> Vec<IrrepLabel> {
    fn rec(n: usize, cap: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for h in 0..=cap.min(left) {
            cur.push(h);
            rec(n, h, left - h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_sum, max_sum, &mut Vec::new(), &mut out);
    out.into_iter().map(|h| IrrepLabel::new(h).unwrap()).collect()
}

// "y21 x32" -> y(2,1)*x(3,2)
fn mono(s: &str) -> ParamMonomial {
    let factors = s
        .split_whitespace()
        .map(|t| {
            let b = t.as_bytes();
            let (l, m) = ((b[1] - b'0') as usize, (b[2] - b'0') as usize);
            match b[0] {
                b'x' => Param::x(l, m),
                _ => Param::y(l, m),
            }
        })
        .collect();
    ParamMonomial::new(factors)
}

fn check_table(n: usize, expected: &[(&str, &str)]) {
    let got: BTreeMap<String, String> = bfr_generating_terms(n)
        .unwrap()
        .into_iter()
        .map(|(t, m)| (minor_name(&t.ones()), m.to_string()))
        .collect();
    assert_eq!(got.len(), expected.len());
    for (minor, m) in expected {
        let key = format!("D{minor}");
        assert_eq!(got.get(&key), Some(&mono(m).to_string()), "{key}");
    }
}

#[test]
fn u4_generating_function() {
    check_table(
        4,
        &[
            ("1", "y21 y31 y41"),
            ("2", "x21 y31 y41"),
            ("3", "x31 y41"),
            ("4", "x41"),
            ("13", "y21 x32 y42"),
            ("23", "x21 x32 y42"),
            ("12", "y32 y42"),
            ("14", "y21 y31 x42"),
            ("24", "x21 y31 x42"),
            ("34", "x31 x42"),
            ("134", "y21 x32 x43"),
            ("234", "x21 x32 x43"),
            ("124", "y32 x43"),
            ("123", "y43"),
            ("1234", "y44"),
        ],
    );
}

#[test]
fn u5_generating_function_with_determinant_term() {
    check_table(
        5,
        &[
            ("1", "y21 y31 y41 y51"),
            ("2", "x21 y31 y41 y51"),
            ("3", "x31 y41 y51"),
            ("4", "x41 y51"),
            ("5", "x51"),
            ("15", "y21 y31 y41 x52"),
            ("25", "x21 y31 y41 x52"),
            ("35", "x31 y41 x52"),
            ("45", "x41 x52"),
            ("13", "y21 x32 y42 y52"),
            ("23", "x21 x32 y42 y52"),
            ("12", "y32 y42 y52"),
            ("14", "y21 y31 x42 y52"),
            ("24", "x21 y31 x42 y52"),
            ("34", "x31 x42 y52"),
            ("135", "y21 x32 y42 x53"),
            ("235", "x21 x32 y42 x53"),
            ("125", "y32 y42 x53"),
            ("145", "y21 y31 x42 x53"),
            ("245", "x21 y31 x42 x53"),
            ("345", "x31 x42 x53"),
            ("1345", "y21 x32 x43 x54"),
            ("2345", "x21 x32 x43 x54"),
            ("1245", "y32 x43 x54"),
            ("1235", "y43 x54"),
            ("134", "y21 x32 x43 y53"),
            ("234", "x21 x32 x43 y53"),
            ("124", "y32 x43 y53"),
            ("123", "y43 y53"),
            ("1234", "y54"),
            ("12345", "y55"),
        ],
    );
}

#[test]
fn bfr_listed_examples() {
    let phi = |n, ones: &[usize]| bfr_phi(&BfrTable::from_positions(n, ones).unwrap());
    assert_eq!(phi(2, &[1]), mono("y21"));
    assert_eq!(phi(4, &[1, 3]), mono("y21 x32 y42"));
    assert_eq!(phi(4, &[1, 2, 3]), mono("y43"));
    for (t, m) in bfr_generating_terms(5).unwrap() {
        let lambdas: Vec<usize> = m.factors().iter().map(|p| p.lambda).collect();
        assert!(lambdas.windows(2).all(|w| w[0] < w[1]), "{t}: {m}");
    }
}

#[test]
fn gelfand_count_matches_weyl() {
    for n in 2..=5 {
        for h in labels(n, 6) {
            let all = gelfand_enumerate(&h);
            assert_eq!(BigInt::from(all.len()), weyl_dimension(&h), "{h:?}");
            assert!(all.windows(2).all(|w| w[0].rows() > w[1].rows()));
        }
    }
}

#[test]
fn u3_weight_multiset_is_symmetric() {
    for h in labels(3, 6) {
        let mut counts: HashMap<Vec<i64>, usize> = HashMap::new();
        for p in gelfand_enumerate(&h) {
            let w = pattern_weight(&p);
            assert_eq!(w.iter().sum::<i64>(), h.entries().iter().sum::<i64>());
            *counts.entry(w).or_default() += 1;
        }
        for (w, c) in &counts {
            for perm in w.iter().copied().permutations(3) {
                assert_eq!(counts.get(&perm), Some(c), "{h:?} {w:?}");
            }
        }
    }
}

// Independent expansion: S_k over words of length l built one box at a time.
fn pn1_oracle(p: &GelfandPattern) -> BigInt {
    let n = p.n();
    let mut index: BTreeMap<(char, usize, usize), usize> = BTreeMap::new();
    for l in 2..n {
        for m in 1..l {
            let k = index.len();
            index.insert(('x', l, m), k);
            index.insert(('y', l, m), k + 1);
        }
    }
    let nv = index.len();
    let mut target = vec![0u32; nv];
    for l in 2..n {
        for m in 1..l {
            target[index[&('x', l, m)]] = (p.h(m, l) - p.h(m, l - 1)) as u32;
            target[index[&('y', l, m)]] = (p.h(m, l - 1) - p.h(m + 1, l)) as u32;
        }
    }
    let lim: Vec<Option<u32>> = target.iter().map(|&t| Some(t)).collect();
    let var = |c, l, m| Poly::<BigInt>::var(nv, index[&(c, l, m)]);
    // s[k] for words of length l
    let mut s: Vec<Poly<BigInt>> = vec![Poly::one(nv), Poly::one(nv)];
    for l in 2..n {
        let mut next = vec![Poly::one(nv)];
        for k in 1..=l {
            let mut t = Poly::zero(nv);
            if k < l {
                t = t.add(&s[k].mul(&var('y', l, k)));
            }
            if k - 1 < l - 1 {
                t = t.add(&s[k - 1].mul(&var('x', l, k)));
            } else {
                t = t.add(&s[k - 1]);
            }
            next.push(t);
        }
        s = next;
    }
    let mut acc = Poly::one(nv);
    for k in 1..n {
        let e = (p.big_r(n, k) + p.big_l(n, k + 1)) as u32;
        acc = acc.mul_bounded(&s[k].pow_bounded(e, Some(&lim)), Some(&lim));
    }
    acc.coeff(&target)
}

#[test]
fn pn1_matches_expansion_oracle() {
    let mut checked = 0;
    for (n, max_sum) in [(3, 6), (4, 5), (5, 4)] {
        for h in labels(n, max_sum) {
            for p in gelfand_enumerate(&h) {
                let got = pn1(n, &p).unwrap();
                assert_eq!(got, BigRational::from_integer(pn1_oracle(&p)), "{p}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
    assert_eq!(pn1(3, &pat("2 0 0 / 2 0 / 1")).unwrap(), BigRational::from_integer(2.into()));
    assert_eq!(pn1(4, &pat("0 0 0 0 / 0 0 0 / 0 0 / 0")).unwrap(), BigRational::one());
}

#[test]
fn boson_polynomial_at_unit_minors_is_pn1() {
    for (n, max_sum) in [(3, 5), (4, 4), (5, 2)] {
        for h in labels(n, max_sum) {
            for p in gelfand_enumerate(&h) {
                let b = boson_polynomial(&p).unwrap();
                assert_eq!(BigRational::from_integer(raw_coefficient_sum(&b)), pn1(n, &p).unwrap(), "{p}");
            }
        }
    }
}

fn binom(n: i64, k: i64) -> BigInt {
    BigInt::from(gfkit::arith::binomial(n, k))
}

#[test]
fn u3_polynomial_matches_binomial_sum() {
    for h in labels(3, 6) {
        for p in gelfand_enumerate(&h) {
            let g = |m, l| p.h(m, l);
            let mut want = Poly::<BigInt>::zero(7);
            for i in 0..=(g(1, 1) - g(2, 2)) {
                let j = g(1, 1) - g(2, 2) - i;
                let e = [
                    i,
                    g(1, 2) - g(2, 3) - i,
                    g(1, 3) - g(1, 2),
                    g(2, 2) - g(3, 3),
                    j,
                    g(2, 3) - g(2, 2) - j,
                    g(3, 3),
                ];
                if e.iter().any(|&x| x < 0) {
                    continue;
                }
                let c = binom(g(1, 2) - g(2, 3), i) * binom(g(2, 3) - g(2, 2), j);
                want.add_term(e.iter().map(|&x| x as u32).collect(), c);
            }
            let b = u3_boson_polynomial(&p).unwrap();
            assert_eq!(b.raw(), &want, "{p}");
        }
    }
}

fn gaussian_matrix(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re * s, im * s)
    })
}

// Terminating 2F1(a, b; c; x) with a <= 0.
fn hyp2f1_terminating(a: i64, b: i64, c: i64, x: Complex64) -> Complex64 {
    let mut term = Complex64::one();
    let mut sum = Complex64::one();
    for k in 0..(-a) {
        let k = k as f64;
        term *= (a as f64 + k) * (b as f64 + k) / ((c as f64 + k) * (k + 1.0)) * x;
        sum += term;
    }
    sum
}

#[test]
fn u3_polynomial_matches_hypergeometric_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut compared = 0;
    for h in labels(3, 6).into_iter().filter(|h| h.entries()[2] == 0) {
        for p in gelfand_enumerate(&h) {
            let g = |m, l| p.h(m, l);
            if g(1, 1) < g(2, 3) {
                continue;
            }
            let b = u3_boson_polynomial(&p).unwrap();
            let mut ratio: Option<Complex64> = None;
            for _ in 0..4 {
                let z = gaussian_matrix(3, &mut rng);
                let d = |c: &[usize]| complex_minor(&z, c);
                let x = d(&[1]) * d(&[2, 3]) / (d(&[2]) * d(&[1, 3]));
                let f = d(&[1, 2]).powi(g(2, 2) as i32)
                    * d(&[1, 3]).powi((g(2, 3) - g(2, 2)) as i32)
                    * d(&[1]).powi((g(1, 1) - g(2, 3)) as i32)
                    * d(&[2]).powi((g(1, 2) - g(1, 1)) as i32)
                    * d(&[3]).powi((g(1, 3) - g(1, 2)) as i32)
                    * hyp2f1_terminating(g(2, 2) - g(2, 3), g(1, 1) - g(1, 2), g(1, 1) - g(2, 3) + 1, x);
                let r = b.eval(&z) / f;
                match ratio {
                    None => ratio = Some(r),
                    Some(r0) => assert!((r - r0).norm() < 1e-8 * r0.norm(), "{p}: {r} vs {r0}"),
                }
            }
            compared += 1;
        }
    }
    assert!(compared > 20);
}

#[test]
fn u3_states_orthonormal_under_gaussian_measure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let states: Vec<BosonPolynomial> = gelfand_enumerate(&IrrepLabel::new(vec![2, 1, 0]).unwrap())
        .iter()
        .chain(gelfand_enumerate(&IrrepLabel::new(vec![1, 1, 1]).unwrap()).iter())
        .map(|p| u3_boson_polynomial(p).unwrap())
        .collect();
    let samples = 40_000;
    let k = states.len();
    let mut sum = vec![vec![Complex64::zero(); k]; k];
    let mut sum_sq = vec![vec![0.0f64; k]; k];
    for _ in 0..samples {
        let z = gaussian_matrix(3, &mut rng);
        let v: Vec<Complex64> = states.iter().map(|s| s.eval(&z)).collect();
        for i in 0..k {
            for j in 0..k {
                let x = v[i].conj() * v[j];
                sum[i][j] += x;
                sum_sq[i][j] += x.norm_sqr();
            }
        }
    }
    let nf = samples as f64;
    for i in 0..k {
        for j in 0..k {
            let mean = sum[i][j] / nf;
            let sigma = ((sum_sq[i][j] / nf - mean.norm_sqr()) / nf).sqrt();
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((mean - want).norm() < 3.0 * sigma, "({i},{j}): {mean} +- {sigma}");
        }
    }
}

#[test]
fn u4_terms_satisfy_weight_and_degree_constraints() {
    for h in labels(4, 4) {
        for p in gelfand_enumerate(&h) {
            let b = u4_boson_polynomial(&p).unwrap();
            let w = pattern_weight(&p);
            for (_, e) in b.terms() {
                for (c, &wc) in w.iter().enumerate() {
                    let got: u32 = b.minors().iter().zip(&e).filter(|(m, _)| m.contains(&(c + 1))).map(|(_, k)| *k).sum();
                    assert_eq!(got as i64, wc, "{p}");
                }
                for size in 1..=4 {
                    let got: u32 = b.minors().iter().zip(&e).filter(|(m, _)| m.len() == size).map(|(_, k)| *k).sum();
                    let want = p.h(size, 4) - if size < 4 { p.h(size + 1, 4) } else { 0 };
                    assert_eq!(got as i64, want, "{p}");
                }
            }
        }
    }
    let b = u4_boson_polynomial(&pat("1 0 0 0 / 1 0 0 / 1 0 / 1")).unwrap();
    assert_eq!(b.terms(), vec![(SqrtRational::one(), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])]);
}

// Generator-based check of the SU(3) couplings on the product space.

type State = HashMap<[u32; 6], f64>;

fn apply_e(i: usize, j: usize, s: &State) -> State {
    let mut out = State::new();
    for (e, &c) in s {
        for off in [0, 3] {
            let (a, b) = (off + i, off + j);
            if e[b] == 0 {
                continue;
            }
            let mut e2 = *e;
            let f = if a == b {
                e[a] as f64
            } else {
                e2[b] -= 1;
                e2[a] += 1;
                ((e[b] as f64) * (e[a] as f64 + 1.0)).sqrt()
            };
            *out.entry(e2).or_default() += c * f;
        }
    }
    out
}

fn combo(a: &State, ka: f64, b: &State, kb: f64) -> State {
    let mut out = State::new();
    for (e, c) in a {
        *out.entry(*e).or_default() += ka * c;
    }
    for (e, c) in b {
        *out.entry(*e).or_default() += kb * c;
    }
    out
}

fn norm(s: &State) -> f64 {
    s.values().map(|c| c * c).sum::<f64>().sqrt()
}

fn dot(a: &State, b: &State) -> f64 {
    a.iter().map(|(e, c)| c * b.get(e).copied().unwrap_or(0.0)).sum()
}

fn z_exps(a: &Su3Label) -> [u32; 3] {
    let up = ((a.t + a.t0).doubled() / 2) as u32;
    [up, a.p as u32 - up, (a.lambda - a.p) as u32]
}

fn coupled(l1: i64, l2: i64, l3: i64, m3: i64, a3: &Su3Label) -> (State, Vec<(Su3Label, Su3Label, Su3Wigner)>) {
    let mut s = State::new();
    let mut parts = Vec::new();
    for a1 in su3_states(l1, 0).unwrap() {
        for a2 in su3_states(l2, 0).unwrap() {
            let w = su3_wigner_multfree(l1, l2, l3, m3, &a1, &a2, a3).unwrap();
            let (e1, e2) = (z_exps(&a1), z_exps(&a2));
            let key = [e1[0], e1[1], e1[2], e2[0], e2[1], e2[2]];
            if !w.cg.is_zero() {
                s.insert(key, w.cg.to_f64());
            }
            parts.push((a1, a2, w));
        }
    }
    (s, parts)
}

#[test]
fn su3_couplings_satisfy_generator_relations() {
    for l1 in 0..=3 {
        for l2 in 0..=3 {
            for (l3, m3) in su3_decompose_multfree(l1, l2).unwrap() {
                let states = su3_states(l3, m3).unwrap();
                let built: Vec<State> = states.iter().map(|a3| coupled(l1, l2, l3, m3, a3).0).collect();
                let (mm1, mm2) = ((l3 + m3) as f64, m3 as f64);
                let casimir = mm1 * (mm1 + 2.0) + mm2 * mm2;
                for (a3, psi) in states.iter().zip(&built) {
                    assert!((norm(psi) - 1.0).abs() < 1e-10, "{a3}");
                    let mut c = State::new();
                    for i in 0..3 {
                        for j in 0..3 {
                            c = combo(&c, 1.0, &apply_e(i, j, &apply_e(j, i, psi)), 1.0);
                        }
                    }
                    assert!(norm(&combo(&c, 1.0, psi, -casimir)) < 1e-10, "casimir {a3}");
                    let n33 = apply_e(2, 2, psi);
                    let y = (l1 + l2) as f64;
                    let hyper = combo(psi, y, &n33, -3.0);
                    assert!(norm(&combo(&hyper, 1.0, psi, -(a3.y as f64))) < 1e-10, "y {a3}");
                    let t0 = combo(&apply_e(0, 0, psi), 0.5, &apply_e(1, 1, psi), -0.5);
                    assert!(norm(&combo(&t0, 1.0, psi, -a3.t0.to_f64())) < 1e-10, "t0 {a3}");
                    // T- |t t0> = sqrt((t + t0)(t - t0 + 1)) |t t0-1>
                    let lowered = apply_e(1, 0, psi);
                    let (t, m) = (a3.t.to_f64(), a3.t0.to_f64());
                    if a3.t0.doubled() > -a3.t.doubled() {
                        let below = Su3Label::new(l3, m3, a3.p, a3.q, a3.t0.doubled() - 2).unwrap();
                        let idx = states.iter().position(|s| *s == below).unwrap();
                        let k = ((t + m) * (t - m + 1.0)).sqrt();
                        assert!(norm(&combo(&lowered, 1.0, &built[idx], -k)) < 1e-10, "lowering {a3}");
                    } else {
                        assert!(norm(&lowered) < 1e-10);
                    }
                }
                for i in 0..built.len() {
                    for j in 0..i {
                        assert!(dot(&built[i], &built[j]).abs() < 1e-10);
                    }
                }
            }
        }
    }
}

#[test]
fn su3_isoscalar_is_independent_of_projections() {
    for (l1, l2) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        for (l3, m3) in su3_decompose_multfree(l1, l2).unwrap() {
            let mut per_alpha3: Vec<f64> = Vec::new();
            for a3 in su3_states(l3, m3).unwrap() {
                let (_, parts) = coupled(l1, l2, l3, m3, &a3);
                let mut sum_w2 = BigRational::zero();
                for (a1, a2, w) in &parts {
                    sum_w2 += w.wigner.square();
                    if w.cg.is_zero() && w.isoscalar.is_zero() {
                        continue;
                    }
                    let su2 = clebsch_gordan(a1.t, a1.t0, a2.t, a2.t0, a3.t, a3.t0);
                    assert_eq!(gfkit::arith::sr_mul(&w.isoscalar, &su2), w.cg, "{a1} {a2} {a3}");
                }
                let want = BigRational::new(BigInt::one(), BigInt::from(a3.t.doubled() + 1));
                assert_eq!(sum_w2, want, "{a3}");
                per_alpha3.push(sum_w2.to_f64().unwrap());
            }
            let total: f64 = per_alpha3.iter().sum();
            assert!((total - ((l3 + 1) * (m3 + 1)) as f64).abs() < 1e-12);
        }
    }
}

#[test]
fn su3_trivial_coupling_and_sign() {
    let top = Su3Label::highest(2, 0).unwrap();
    let up = Su3Label::highest(1, 0).unwrap();
    let w = su3_wigner_multfree(1, 1, 2, 0, &up, &up, &top).unwrap();
    assert_eq!(w.cg, SqrtRational::one());
    assert_eq!(w.isoscalar, SqrtRational::one());
    let zero_t = HalfInt::ZERO;
    assert_eq!(Su3Label::new(0, 1, 0, 1, 0).unwrap().t, zero_t);
}

#[test]
fn su3_euler_matrix_is_special_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let unit_pair = |rng: &mut ChaCha8Rng| {
        let v: Vec<f64> = (0..4).map(|_| StandardNormal.sample(rng)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        [Complex64::new(v[0] / n, v[1] / n), Complex64::new(v[2] / n, v[3] / n)]
    };
    for _ in 0..200 {
        let a = unit_pair(&mut rng);
        let b = unit_pair(&mut rng);
        let nu: f64 = rand::Rng::random_range(&mut rng, 0.0..std::f64::consts::PI);
        let beta: f64 = rand::Rng::random_range(&mut rng, 0.0..std::f64::consts::PI);
        let u = su3_euler_matrix(a, nu, beta, b).unwrap();
        let id = nalgebra::Matrix3::<Complex64>::identity();
        assert!((u.adjoint() * u - id).norm() < 1e-14);
        assert!((u.determinant() - Complex64::one()).norm() < 1e-14);
    }
    let bad = [Complex64::new(2.0, 0.0), Complex64::zero()];
    assert!(su3_euler_matrix(bad, 0.0, 0.0, bad).is_err());
}
