use std::collections::HashMap;

use gfkit::arith::{RadicalSum, SqrtRational};
use gfkit::wigner::*;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `p/q * sqrt(r)`
fn v(p: i64, q: i64, r: i64) -> SqrtRational {
    SqrtRational::new(BigRational::new(p.into(), q.into()), BigRational::from_integer(r.into())).unwrap()
}

fn tj(j: [i64; 3], m: [i64; 3]) -> SqrtRational {
    wigner_3j(&ThreeJLabel::new(j, m).unwrap())
}

// Reference values from an independent symbolic implementation.
#[test]
fn frozen_3j_values() {
    let table = [
        ([2, 2, 2], [2, -2, 0], v(1, 6, 6)),
        ([2, 2, 4], [0, 0, 0], v(1, 15, 30)),
        ([1, 1, 2], [1, -1, 0], v(1, 6, 6)),
        ([3, 4, 5], [1, -2, 1], v(-1, 42, 105)),
        ([6, 4, 4], [2, 0, -2], v(-1, 35, 35)),
        ([8, 6, 4], [0, 2, -2], v(-1, 42, 70)),
        ([5, 5, 6], [3, -1, -2], v(-1, 210, 210)),
        ([7, 3, 6], [-1, 3, -2], v(-1, 21, 21)),
    ];
    for (j, m, want) in table {
        assert_eq!(tj(j, m), want, "{j:?} {m:?}");
    }
}

#[test]
fn frozen_6j_values() {
    let table = [
        ([2, 2, 2, 2, 2, 2], v(1, 6, 1)),
        ([0, 2, 2, 2, 2, 2], v(-1, 3, 1)),
        ([1, 2, 3, 1, 2, 3], v(-1, 12, 1)),
        ([4, 4, 4, 4, 4, 4], v(-3, 70, 1)),
        ([3, 3, 2, 3, 3, 4], v(1, 20, 1)),
        ([6, 4, 2, 4, 2, 6], v(-1, 105, 105)),
        ([5, 3, 4, 3, 5, 6], v(9, 70, 1)),
        ([2, 3, 1, 2, 1, 3], v(1, 12, 10)),
    ];
    for (j, want) in table {
        let l = SixJLabel::new(j).unwrap();
        assert_eq!(wigner_6j_oracle(&l), want, "{l}");
        assert_eq!(wigner_6j_gf(&l).unwrap(), want, "{l}");
    }
}

#[test]
fn frozen_9j_values() {
    let table = [
        ([[1, 1, 2], [1, 1, 2], [2, 2, 0]], v(-1, 18, 1)),
        ([[2, 2, 2], [2, 2, 2], [2, 2, 2]], SqrtRational::zero()),
        ([[1, 1, 0], [1, 1, 2], [2, 2, 2]], v(1, 18, 6)),
        ([[2, 1, 3], [1, 2, 3], [3, 3, 4]], v(1, 48, 1)),
        ([[4, 2, 2], [2, 2, 4], [2, 4, 2]], v(23, 450, 1)),
    ];
    for (j, want) in table {
        let l = NineJLabel::new(j).unwrap();
        assert_eq!(wigner_9j(&l), want, "{l}");
        assert_eq!(wigner_9j_via_6j(&l), want, "{l}");
    }
}

#[test]
fn clebsch_gordan_stretched_state_is_one() {
    use gfkit::HalfInt;
    for tj in 0..8 {
        for tm in (-tj..=tj).step_by(2) {
            let j = HalfInt::from_doubled(tj);
            let m = HalfInt::from_doubled(tm);
            let z = HalfInt::ZERO;
            assert_eq!(clebsch_gordan(j, m, z, z, j, m), SqrtRational::one());
        }
    }
}

#[test]
fn orthogonality_up_to_two_j_8() {
    let mut cache: HashMap<([i64; 3], [i64; 3]), SqrtRational> = HashMap::new();
    let mut get = |j: [i64; 3], m: [i64; 3]| {
        cache
            .entry((j, m))
            .or_insert_with(|| match ThreeJLabel::new(j, m) {
                Ok(l) => wigner_3j(&l),
                Err(_) => SqrtRational::zero(),
            })
            .clone()
    };
    for a in 0..=8i64 {
        for b in 0..=8i64 {
            let lo = (a - b).abs();
            let hi = (a + b).min(8);
            let mut c = lo;
            while c <= hi {
                let mut c2 = lo;
                while c2 <= hi {
                    for m3 in (-c.min(c2)..=c.min(c2)).step_by(2) {
                        let mut s = RadicalSum::new();
                        for m1 in (-a..=a).step_by(2) {
                            let m2 = -m1 - m3;
                            if m2.abs() > b {
                                continue;
                            }
                            let p = &get([a, b, c], [m1, m2, m3]) * &get([a, b, c2], [m1, m2, m3]);
                            s.add(&p);
                        }
                        let want = if c == c2 { v(1, c + 1, 1) } else { SqrtRational::zero() };
                        assert_eq!(s.to_sqrt_rational().unwrap(), want, "({a} {b} {c}/{c2}) m3={m3}");
                    }
                    c2 += 2;
                }
                c += 2;
            }
        }
    }
}

#[test]
fn odd_column_swap_phase() {
    for l in labels_up_to(6) {
        let [a, b, c] = l.two_j;
        let [x, y, z] = l.two_m;
        let swapped = ThreeJLabel::new([b, a, c], [y, x, z]).unwrap();
        let v0 = wigner_3j(&l);
        let v1 = wigner_3j(&swapped);
        let want = if ((a + b + c) / 2) % 2 == 0 { v0 } else { -v0 };
        assert_eq!(v1, want, "{l}");
    }
}

fn valid_6j_labels(max: i64) -> Vec<SixJLabel> {
    let mut out = Vec::new();
    let r = 0..=max;
    for j1 in r.clone() {
        for j2 in r.clone() {
            for j3 in r.clone() {
                for l1 in r.clone() {
                    for l2 in r.clone() {
                        for l3 in r.clone() {
                            if let Ok(l) = SixJLabel::new([j1, j2, j3, l1, l2, l3]) {
                                if l.triangles_ok() {
                                    out.push(l);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn generating_function_matches_oracle_up_to_two_j_6() {
    let labels = valid_6j_labels(6);
    assert_eq!(labels.len(), 3418);
    for l in &labels {
        assert_eq!(wigner_6j_gf(l).unwrap(), wigner_6j_oracle(l), "{l}");
    }
}

#[test]
fn literal_column_term_disagrees_with_oracle() {
    let l = SixJLabel::new([2, 2, 2, 2, 2, 2]).unwrap();
    let literal = wigner_6j_gf_with(&l, ColumnThree::Literal).unwrap();
    assert_ne!(literal, wigner_6j_oracle(&l));
}

#[test]
fn sixj_tetrahedral_symmetry() {
    for l in valid_6j_labels(4) {
        let v0 = wigner_6j_oracle(&l);
        for img in sixj_symmetries(&l) {
            assert_eq!(wigner_6j_oracle(&img), v0, "{l} -> {img}");
        }
    }
}

#[test]
fn ninej_symmetries() {
    let seeds = [
        [[1, 1, 2], [1, 1, 2], [2, 2, 0]],
        [[2, 1, 3], [1, 2, 3], [3, 3, 4]],
        [[4, 2, 2], [2, 2, 4], [2, 4, 2]],
        [[1, 2, 1], [2, 2, 2], [3, 2, 3]],
    ];
    for s in seeds {
        let l = NineJLabel::new(s).unwrap();
        let v0 = wigner_9j(&l);
        assert_eq!(wigner_9j(&l.transpose()), v0);
        let total: i64 = s.iter().flatten().sum::<i64>() / 2;
        let odd = if total % 2 == 0 { v0.clone() } else { -v0.clone() };
        let rows = NineJLabel::new([s[1], s[0], s[2]]).unwrap();
        assert_eq!(wigner_9j(&rows), odd);
        let cols = NineJLabel::new(s.map(|r| [r[0], r[2], r[1]])).unwrap();
        assert_eq!(wigner_9j(&cols), odd);
    }
}

#[test]
fn regge_orbit_sizes_divide_72() {
    for l in labels_up_to(5) {
        let orbit = regge_orbit(&l);
        assert_eq!(72 % orbit.len(), 0, "{l}");
    }
}

fn label_strategy() -> impl Strategy<Value = ThreeJLabel> {
    (0i64..=8, 0i64..=8, 0i64..=8, any::<u64>()).prop_filter_map("triangle", |(a, b, c, seed)| {
        if (a + b + c) % 2 != 0 || c > a + b || c < (a - b).abs() {
            return None;
        }
        let ma = -a + 2 * (seed % (a as u64 + 1)) as i64;
        let mb = -b + 2 * ((seed / 11) % (b as u64 + 1)) as i64;
        let mc = -ma - mb;
        if mc.abs() > c {
            return None;
        }
        ThreeJLabel::new([a, b, c], [ma, mb, mc]).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regge_orbit_preserves_magnitude(l in label_strategy()) {
        let v0 = wigner_3j(&l);
        for (img, sign) in regge_orbit(&l) {
            let w = wigner_3j(&img);
            prop_assert_eq!(w.abs(), v0.abs());
            prop_assert_eq!(if sign < 0 { -w } else { w }, v0.clone());
        }
    }

    #[test]
    fn three_j_squares_sum_to_one(a in 0i64..7, b in 0i64..7, c in 0i64..7) {
        prop_assume!((a + b + c) % 2 == 0 && c <= a + b && c >= (a - b).abs());
        let mut s = BigRational::zero();
        for ma in (-a..=a).step_by(2) {
            for mb in (-b..=b).step_by(2) {
                let mc = -ma - mb;
                if mc.abs() <= c {
                    s += tj([a, b, c], [ma, mb, mc]).square();
                }
            }
        }
        prop_assert_eq!(s, BigRational::one());
    }
}
