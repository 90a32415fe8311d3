use gfkit::unitary::{
    boson_polynomial, gelfand_enumerate, pattern_weight, su3_decompose_multfree, su3_dimension, su3_euler_matrix, su3_wigner_multfree,
    GelfandPattern, IrrepLabel, Su3Label,
};
use gfkit::wigner::{clebsch_gordan, gaunt_exact, regge_orbit, wigner_3j, wigner_6j_gf, wigner_6j_oracle, wigner_9j, NineJLabel, SixJLabel, ThreeJLabel};
use gfkit::{GfError, HalfInt, SqrtRational};
use num_complex::Complex64;
use serde_json::json;

use super::{complex_cells, matrix_table, CmdResult};
use crate::args::{GelfandCmd, SixJMethod, Su3Cmd, Su3CouplingArgs, ThreeJArgs, WignerCmd};
use crate::envelope::{Envelope, Table};

fn exact(v: &SqrtRational, meta: &str) -> Envelope {
    Envelope::exact(v.to_string(), v.to_f64(), meta)
}

fn three(v: &[i64]) -> [i64; 3] {
    [v[0], v[1], v[2]]
}

fn three_j_label(a: &ThreeJArgs) -> gfkit::Result<ThreeJLabel> {
    ThreeJLabel::new(three(&a.two_j), three(&a.two_m))
}

pub fn wigner(cmd: WignerCmd) -> CmdResult {
    match cmd {
        WignerCmd::ThreeJ(a) => Ok(exact(&wigner_3j(&three_j_label(&a)?), "3j symbol, Van der Waerden single sum")),
        WignerCmd::Cg(a) => {
            three_j_label(&a)?;
            let h = |v: i64| HalfInt::from_doubled(v);
            let v = clebsch_gordan(h(a.two_j[0]), h(a.two_m[0]), h(a.two_j[1]), h(a.two_m[1]), h(a.two_j[2]), h(a.two_m[2]));
            Ok(exact(&v, "Clebsch-Gordan coefficient, (-1)^{j1-j2+m3} sqrt(2 j3 + 1) times 3j"))
        }
        WignerCmd::SixJ { two_j, method } => {
            let label = SixJLabel::new([two_j[0], two_j[1], two_j[2], two_j[3], two_j[4], two_j[5]])?;
            match method {
                SixJMethod::Gf => Ok(exact(&wigner_6j_gf(&label)?, "6j symbol, coefficient extraction from the Schwinger generating function")),
                SixJMethod::Oracle => Ok(exact(&wigner_6j_oracle(&label), "6j symbol, sum of four 3j symbols over magnetic numbers")),
            }
        }
        WignerCmd::NineJ { two_j } => {
            let label = NineJLabel::new([three(&two_j[0..3]), three(&two_j[3..6]), three(&two_j[6..9])])?;
            Ok(exact(&wigner_9j(&label), "9j symbol, single sum over products of 6j symbols"))
        }
        WignerCmd::Regge(a) => {
            let label = three_j_label(&a)?;
            let seed = wigner_3j(&label);
            let mut t = Table::new(&["two_j1", "two_j2", "two_j3", "two_m1", "two_m2", "two_m3", "sign"]);
            for (img, sign) in regge_orbit(&label) {
                let mut row: Vec<_> = img.two_j.iter().chain(&img.two_m).map(|v| json!(v)).collect();
                row.push(json!(sign));
                t.push(row);
            }
            Ok(exact(&seed, "Regge orbit of the 3j label; each image equals sign times the seed value").with_table(t))
        }
        WignerCmd::Gaunt { l, m } => Ok(exact(&gaunt_exact(three(&l), three(&m)), "integral of Y_l1m1 Y_l2m2 Y_l3m3 over the sphere")),
    }
}

fn su3_state(lambda: i64, mu: i64, v: &[i64]) -> gfkit::Result<Su3Label> {
    Su3Label::new(lambda, mu, v[0], v[1], v[2])
}

fn su3_coupling(a: &Su3CouplingArgs) -> gfkit::Result<gfkit::unitary::Su3Wigner> {
    let a1 = su3_state(a.l1, 0, &a.a1)?;
    let a2 = su3_state(a.l2, 0, &a.a2)?;
    let a3 = su3_state(a.lambda3, a.mu3, &a.a3)?;
    su3_wigner_multfree(a.l1, a.l2, a.lambda3, a.mu3, &a1, &a2, &a3)
}

pub fn su3(cmd: Su3Cmd) -> CmdResult {
    match cmd {
        Su3Cmd::Decompose { l1, l2 } => {
            let mut t = Table::new(&["lambda", "mu", "dim"]);
            let mut total = 0;
            for (lambda, mu) in su3_decompose_multfree(l1, l2)? {
                let d = su3_dimension(lambda, mu);
                total += d;
                t.push(vec![json!(lambda), json!(mu), json!(d)]);
            }
            Ok(Envelope::table(t, "(l1,0) x (l2,0) = sum over k of (l1+l2-2k, k); value is the summed dimension")
                .with_exact(total.to_string())
                .with_float(total as f64))
        }
        Su3Cmd::Wigner(a) => {
            let w = su3_coupling(&a)?;
            let mut t = Table::new(&["quantity", "exact", "float"]);
            for (name, v) in [("cg", &w.cg), ("wigner", &w.wigner), ("isoscalar", &w.isoscalar)] {
                t.push(vec![json!(name), json!(v.to_string()), json!(v.to_f64())]);
            }
            Ok(exact(&w.cg, "SU(3) coupling coefficient = isoscalar factor x SU(2) coefficient").with_table(t))
        }
        Su3Cmd::Isoscalar(a) => Ok(exact(&su3_coupling(&a)?.isoscalar, "SU(3) isoscalar factor")),
        Su3Cmd::Euler { a, nu3, beta3, b } => {
            let pair = |v: &[f64]| [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])];
            let u = su3_euler_matrix(pair(&a), nu3, beta3, pair(&b))?;
            let t = matrix_table(3, 3, &["re", "im"], |i, j| complex_cells(u[(i, j)]).to_vec());
            Ok(Envelope::table(t, "SU(3) element A R(nu3/2) D(beta3) B").with_float(u.determinant().re))
        }
    }
}

fn pattern(s: &str) -> gfkit::Result<GelfandPattern> {
    s.parse::<GelfandPattern>()
}

pub fn gelfand(cmd: GelfandCmd) -> CmdResult {
    match cmd {
        GelfandCmd::Dim { h } => {
            let label = IrrepLabel::new(h)?;
            let d = gfkit::unitary::weyl_dimension(&label);
            let f: f64 = d.to_string().parse().map_err(|_| GfError::Domain("dimension overflow".into()))?;
            Ok(Envelope::exact(d.to_string(), f, "Weyl dimension, product of (h_i - h_j + j - i)/(j - i)"))
        }
        GelfandCmd::Enumerate { h } => {
            let label = IrrepLabel::new(h)?;
            let mut t = Table::new(&["index", "pattern", "weight"]);
            let pats = gelfand_enumerate(&label);
            for (i, p) in pats.iter().enumerate() {
                let w: Vec<String> = pattern_weight(p).iter().map(|x| x.to_string()).collect();
                t.push(vec![json!(i), json!(p.to_string()), json!(w.join(" "))]);
            }
            Ok(Envelope::table(t, "Gel'fand patterns, betweenness conditions").with_float(pats.len() as f64))
        }
        GelfandCmd::Weight { pattern: s } => {
            let p = pattern(&s)?;
            let w: Vec<String> = pattern_weight(&p).iter().map(|x| x.to_string()).collect();
            Ok(Envelope::exact_only(w.join(" "), "weight w_l = (row l sum) - (row l-1 sum)"))
        }
        GelfandCmd::Poly { pattern: s } => {
            let b = boson_polynomial(&pattern(&s)?)?;
            let names = b.minor_names();
            let mut t = Table::new(&["coefficient", "float", "monomial"]);
            let terms = b.terms();
            let count = terms.len();
            for (c, exps) in terms {
                let mono: Vec<String> = names
                    .iter()
                    .zip(&exps)
                    .filter(|(_, &e)| e > 0)
                    .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
                    .collect();
                t.push(vec![json!(c.to_string()), json!(c.to_f64()), json!(if mono.is_empty() { "1".into() } else { mono.join("*") })]);
            }
            Ok(Envelope::table(t, "boson polynomial in the minors of the U(n) matrix, Fock normalized; value is the term count").with_float(count as f64))
        }
    }
}
