use gfkit::manybody::{
    boson_expansion_coeffs, determinant, fock_one_body_element, fock_two_body_element, generalized_cramer, generalized_cramer_all, lipkin_boson_images,
    lipkin_spectrum, lowdin_matrix_element, lowdin_two_body, random_unitary, slater_overlap, thouless, LipkinModel, Rows, SlaterSystem, SubstitutionQuery,
    TwoBody,
};
use gfkit::{GfError, Rational};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{complex_cells, CmdResult};
use crate::args::{ManybodyCmd, SlaterArgs};
use crate::envelope::{Envelope, Table};

fn parse_matrix(s: &str) -> gfkit::Result<Rows<Rational>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<Rational>().map_err(|e| GfError::Parse(format!("{x:?}: {e}"))))
                .collect::<gfkit::Result<Vec<_>>>()
        })
        .collect()
}

fn random_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Rows<Rational> {
    (0..rows).map(|_| (0..cols).map(|_| Rational::from_integer(BigInt::from(rng.random_range(-9i64..=9)))).collect()).collect()
}

fn rational_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn cramer(n: usize, s: usize, seed: u64, a: Option<String>, b: Option<String>, positions: Option<Vec<usize>>) -> CmdResult {
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) => (parse_matrix(&a)?, parse_matrix(&b)?),
        (None, None) => {
            if s > n {
                return Err(GfError::Domain(format!("s = {s} exceeds n = {n}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (random_rows(&mut rng, n, n), random_rows(&mut rng, n, s))
        }
        _ => return Err(GfError::Parse("--a and --b must be given together".into())),
    };
    let results = match positions {
        Some(pos) => {
            let q = SubstitutionQuery::new(a.clone(), b.clone(), pos.clone())?;
            vec![(pos, generalized_cramer(&q)?)]
        }
        None => {
            SubstitutionQuery::new(a.clone(), b.clone(), (0..b.first().map_or(0, Vec::len)).collect())?;
            generalized_cramer_all(&a, &b)?
        }
    };
    let mut t = Table::new(&["positions", "cramer", "direct", "agree"]);
    for (pos, value) in results {
        let direct = determinant(&SubstitutionQuery::new(a.clone(), b.clone(), pos.clone())?.substituted());
        let label: Vec<String> = pos.iter().map(|p| p.to_string()).collect();
        t.push(vec![json!(label.join(" ")), json!(value.to_string()), json!(direct.to_string()), json!(value == direct)]);
    }
    let det_a = determinant(&a);
    Ok(Envelope::table(t, "det(A with columns replaced by b_k) = det A det[x(k, i_l)], A X = B; value is det A")
        .with_exact(det_a.to_string())
        .with_float(rational_f64(&det_a)))
}

fn system(a: &SlaterArgs) -> gfkit::Result<SlaterSystem> {
    SlaterSystem::new(a.m, a.n_occ, random_unitary(a.m, a.scale, a.seed))
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

fn comparison_row(name: &str, formula: Complex64, fock: Complex64) -> Vec<serde_json::Value> {
    let [fr, fi] = complex_cells(formula);
    let [br, bi] = complex_cells(fock);
    vec![json!(name), fr, fi, br, bi]
}

pub fn manybody(cmd: ManybodyCmd) -> CmdResult {
    match cmd {
        ManybodyCmd::Cramer { n, s, seed, a, b, positions } => cramer(n, s, seed, a, b, positions),
        ManybodyCmd::Overlap(a) => {
            let sys = system(&a)?;
            let formula = slater_overlap(&sys);
            let fock = sys.reference()?.inner(&sys.transformed_reference()?);
            let mut t = Table::new(&["quantity", "formula_re", "formula_im", "fock_re", "fock_im"]);
            t.push(comparison_row("overlap", formula, fock));
            Ok(Envelope::table(t, "<Phi|U|Phi> = det of the occupied block; value is |formula - Fock space|").with_float((formula - fock).norm()))
        }
        ManybodyCmd::Lowdin(a) => {
            let sys = system(&a)?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed.wrapping_add(1));
            let m = a.m;
            let tm = DMatrix::from_fn(m, m, |_, _| random_complex(&mut rng));
            let raw: Vec<Complex64> = (0..m.pow(4)).map(|_| random_complex(&mut rng)).collect();
            let v = TwoBody::antisymmetrized(m, |i, j, k, l| raw[((i * m + j) * m + k) * m + l]);
            let one = (lowdin_matrix_element(&sys, &tm)?, fock_one_body_element(&sys, &tm)?);
            let two = (lowdin_two_body(&sys, &v)?, fock_two_body_element(&sys, &v)?);
            let mut t = Table::new(&["quantity", "formula_re", "formula_im", "fock_re", "fock_im"]);
            t.push(comparison_row("one_body", one.0, one.1));
            t.push(comparison_row("two_body", two.0, two.1));
            let worst = (one.0 - one.1).norm().max((two.0 - two.1).norm());
            Ok(Envelope::table(t, "transition elements from A^{-1} and its 2x2 minors against the Fock space; value is the max deviation").with_float(worst))
        }
        ManybodyCmd::Thouless(a) => {
            let rep = thouless(&system(&a)?)?;
            let mut t = Table::new(&["particle", "hole", "re", "im"]);
            for k in 0..rep.x.nrows() {
                for i in 0..rep.x.ncols() {
                    let [re, im] = complex_cells(rep.x[(k, i)]);
                    t.push(vec![json!(k + a.n_occ), json!(i), re, im]);
                }
            }
            Ok(Envelope::table(t, "U|Phi> = <Phi|U|Phi> exp(sum x(k,i) b_k^+ a_i)|Phi>; exact value is the series term count, float the residual")
                .with_exact(rep.terms.to_string())
                .with_float(rep.residual))
        }
        ManybodyCmd::Lipkin { n, e, v, truncation } => {
            let model = LipkinModel::new(n, e, v)?;
            let exact = lipkin_spectrum(&model);
            let gap = exact[1] - exact[0];
            match truncation {
                None => {
                    let mut t = Table::new(&["index", "energy"]);
                    for (i, en) in exact.iter().enumerate() {
                        t.push(vec![json!(i), json!(en)]);
                    }
                    Ok(Envelope::table(t, "exact spectrum of e J0 + (V/2)(J+^2 + J-^2); value is the lowest gap").with_float(gap))
                }
                Some(k) => {
                    let boson = lipkin_boson_images(&model, k)?.spectrum();
                    let mut t = Table::new(&["index", "energy", "boson_energy"]);
                    for (i, (en, b)) in exact.iter().zip(&boson).enumerate() {
                        t.push(vec![json!(i), json!(en), json!(b)]);
                    }
                    let err = ((boson[1] - boson[0]) - gap).abs();
                    Ok(Envelope::table(t, "exact and truncated boson-image spectra; value is the gap error").with_float(err))
                }
            }
        }
        ManybodyCmd::BosonCoeffs { k_max } => {
            let alpha = boson_expansion_coeffs(k_max);
            let mut t = Table::new(&["k", "alpha"]);
            for (k, a) in alpha.iter().enumerate() {
                t.push(vec![json!(k), json!(a)]);
            }
            Ok(Envelope::table(t, "alpha_k from sum_k (-1)^k n!/(n-k-1)! alpha_k = n sqrt(n); value is alpha_1").with_float(alpha.get(1).copied().unwrap_or(f64::NAN)))
        }
    }
}
