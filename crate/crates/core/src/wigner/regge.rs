use itertools::Itertools;

use super::threej::ThreeJLabel;

/// The Regge square of a 3j label: row 0 `J - 2j_i`, row 1 `j_i - m_i`,
/// row 2 `j_i + m_i`. Every row and column sums to `J`.
fn square(l: &ThreeJLabel) -> [[i64; 3]; 3] {
    let s: i64 = l.two_j.iter().sum();
    [
        [0, 1, 2].map(|i| (s - 2 * l.two_j[i]) / 2),
        [0, 1, 2].map(|i| (l.two_j[i] - l.two_m[i]) / 2),
        [0, 1, 2].map(|i| (l.two_j[i] + l.two_m[i]) / 2),
    ]
}

fn from_square(q: &[[i64; 3]; 3]) -> ThreeJLabel {
    ThreeJLabel {
        two_j: [0, 1, 2].map(|i| q[1][i] + q[2][i]),
        two_m: [0, 1, 2].map(|i| q[2][i] - q[1][i]),
    }
}

fn perm_parity(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Closure of `label` under the 72 Regge symmetries: row and column
/// permutations of the Regge square and its transpose. Each image carries the
/// sign relating its 3j value to the seed's.
pub fn regge_orbit(label: &ThreeJLabel) -> Vec<(ThreeJLabel, i32)> {
    let q = square(label);
    let two_big_j: i64 = label.two_j.iter().sum();
    // (-1)^J for an odd permutation; J is an integer on valid labels
    let odd_sign = if (two_big_j / 2) % 2 == 0 { 1 } else { -1 };
    let mut out: Vec<(ThreeJLabel, i32)> = Vec::new();
    for rp in (0..3).permutations(3) {
        for cp in (0..3).permutations(3) {
            for transpose in [false, true] {
                let mut img = [[0i64; 3]; 3];
                for r in 0..3 {
                    for c in 0..3 {
                        let v = q[rp[r]][cp[c]];
                        if transpose {
                            img[c][r] = v;
                        } else {
                            img[r][c] = v;
                        }
                    }
                }
                let odd = perm_parity(&rp) ^ perm_parity(&cp);
                let sign = if odd { odd_sign } else { 1 };
                let l = from_square(&img);
                if !out.iter().any(|(x, _)| *x == l) {
                    out.push((l, sign));
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wigner::wigner_3j;

    #[test]
    fn trivial_orbit() {
        let l = ThreeJLabel::new([0, 0, 0], [0, 0, 0]).unwrap();
        assert_eq!(regge_orbit(&l).len(), 1);
    }

    #[test]
    fn signed_values_agree() {
        let seed = ThreeJLabel::new([4, 3, 5], [2, 1, -3]).unwrap();
        let v = wigner_3j(&seed);
        assert!(!v.is_zero());
        let orbit = regge_orbit(&seed);
        assert_eq!(72 % orbit.len(), 0);
        for (l, s) in orbit {
            let w = wigner_3j(&l);
            assert_eq!(if s < 0 { -w } else { w }, v, "{l}");
        }
    }
}
