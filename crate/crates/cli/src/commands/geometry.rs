use gfkit::hurwitz::{cayley_rotation, cross_product, hurwitz_matrix, ks_transform_exact, HurwitzMatrix, QuadMap};
use gfkit::{GfError, Rational};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{matrix_table, vector_table, CmdResult};
use crate::args::HurwitzCmd;
use crate::envelope::{Envelope, Table};

fn parse_rational(s: &str) -> gfkit::Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| GfError::Parse(format!("{s:?}: {e}")))
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn real_matrix(m: &DMatrix<f64>) -> Table {
    matrix_table(m.nrows(), m.ncols(), &["value"], |i, j| vec![json!(m[(i, j)])])
}

pub fn hurwitz(cmd: HurwitzCmd) -> CmdResult {
    match cmd {
        HurwitzCmd::Matrix { n, u: Some(u) } => {
            let m = hurwitz_matrix(n, &u)?;
            let norm: f64 = u.iter().map(|x| x * x).sum();
            Ok(Envelope::table(real_matrix(&m), "Hurwitz matrix H(u) with H^t H = |u|^2 I").with_float(norm))
        }
        HurwitzCmd::Matrix { n, u: None } => {
            let h = HurwitzMatrix::standard(n)?;
            let t = matrix_table(n, n, &["entry"], |i, j| {
                let e = h.entry(i, j);
                vec![json!(format!("{}u{}", if e.sign < 0 { "-" } else { "" }, e.var + 1))]
            });
            let exact = if h.is_orthogonal_identity() { "H^t H = |u|^2 I" } else { "identity fails" };
            Ok(Envelope::table(t, "symbolic Hurwitz matrix, entries are signed variables").with_exact(exact.into()))
        }
        HurwitzCmd::Ks { u } => {
            let q: Vec<Rational> = u.iter().map(|s| parse_rational(s)).collect::<gfkit::Result<_>>()?;
            let x = ks_transform_exact(&[q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone()]);
            let r2: Rational = q.iter().map(|v| v * v).sum();
            let mut t = Table::new(&["index", "exact", "float"]);
            for (i, v) in x.iter().enumerate() {
                t.push(vec![json!(i), json!(v.to_string()), json!(to_f64(v))]);
            }
            Ok(Envelope::table(t, "Kustaanheimo-Stiefel map; |x| equals |u|^2 exactly").with_exact(r2.to_string()).with_float(to_f64(&r2)))
        }
        HurwitzCmd::Cayley { n, u } => {
            let o = cayley_rotation(n, &u)?;
            Ok(Envelope::table(real_matrix(&o), "Cayley rotation |u|^2 (u1 - S)(u1 + S)^{-1}").with_float(o.determinant()))
        }
        HurwitzCmd::Cross { n, a, b } => {
            let c = cross_product(n, &a, &b)?;
            let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
            Ok(Envelope::table(vector_table(&c), "cross product from the Hurwitz matrix V(a) b; value is |a x b|").with_float(norm))
        }
        HurwitzCmd::Check { seed, trials } => check(seed, trials),
    }
}

fn check(seed: u64, trials: usize) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Table::new(&["check", "passed", "max_residual"]);
    let mut worst = 0.0f64;
    for n in [2, 4, 8] {
        let ok = HurwitzMatrix::standard(n)?.is_orthogonal_identity();
        t.push(vec![json!(format!("gram identity n={n}")), json!(ok), json!(0.0)]);
    }
    let mut ks_ok = QuadMap::kustaanheimo_stiefel().norm_identity_holds();
    for _ in 0..trials {
        let u: [Rational; 4] = std::array::from_fn(|_| Rational::new(BigInt::from(rng.random_range(-50i64..50)), BigInt::from(rng.random_range(1i64..30))));
        let x = ks_transform_exact(&u);
        let lhs: Rational = x.iter().map(|v| v * v).sum();
        let r2: Rational = u.iter().map(|v| v * v).sum();
        ks_ok &= lhs == &r2 * &r2;
    }
    t.push(vec![json!("ks norm identity (rational)"), json!(ks_ok), json!(0.0)]);
    for n in [3, 7] {
        let mut res = 0.0f64;
        for _ in 0..trials {
            let a: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let c = cross_product(n, &a, &b)?;
            let dot = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(p, q)| p * q).sum::<f64>();
            res = res.max((dot(&c, &c) - (dot(&a, &a) * dot(&b, &b) - dot(&a, &b).powi(2))).abs());
        }
        worst = worst.max(res);
        t.push(vec![json!(format!("lagrange identity n={n}")), json!(res < 1e-12), json!(res)]);
    }
    let mut res = 0.0f64;
    for _ in 0..trials {
        let u: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
        let r2: f64 = u.iter().map(|x| x * x).sum();
        let o = cayley_rotation(7, &u)?;
        res = res.max((o.transpose() * &o - DMatrix::identity(7, 7) * (r2 * r2)).norm());
    }
    worst = worst.max(res);
    t.push(vec![json!("cayley n=7 orthogonality"), json!(res < 1e-10), json!(res)]);
    Ok(Envelope::table(t, "randomized Hurwitz, KS, cross product and Cayley identities").with_float(worst))
}
