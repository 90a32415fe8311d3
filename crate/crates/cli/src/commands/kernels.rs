use gfkit::oscillator::{ho_generating_function, ho_propagator, ho_wavefunction_x, magnetic_propagator, OscillatorParams};
use gfkit::special::{fourier_momentum_oracle, hydrogen_momentum_wf, hydrogen_position_wf, momentum_norm, position_norm, HydrogenState};
use num_complex::Complex64;
use serde_json::json;

use super::{complex_cells, CmdResult};
use crate::args::{HydrogenCmd, HydrogenStateArgs, OscArgs, OscillatorCmd};
use crate::envelope::{Envelope, Table};

fn state(a: &HydrogenStateArgs) -> gfkit::Result<(HydrogenState, Vec<f64>)> {
    let s = match &a.labels {
        Some(labels) => HydrogenState::new(a.dim, a.n, a.l, labels.clone())?,
        None => HydrogenState::top(a.dim, a.n, a.l)?,
    };
    let angles = a.angles.clone().unwrap_or_else(|| vec![0.0; a.dim - 1]);
    Ok((s, angles))
}

fn sampled(var: &str, points: &[f64], f: impl Fn(f64) -> gfkit::Result<Complex64>) -> gfkit::Result<Table> {
    let mut t = Table::new(&[var, "re", "im", "abs2"]);
    for &x in points {
        let v = f(x)?;
        let [re, im] = complex_cells(v);
        t.push(vec![json!(x), re, im, json!(v.norm_sqr())]);
    }
    Ok(t)
}

pub fn hydrogen(cmd: HydrogenCmd) -> CmdResult {
    match cmd {
        HydrogenCmd::Position { state: a, r } => {
            let (s, angles) = state(&a)?;
            let t = sampled("r", &r, |x| hydrogen_position_wf(&s, x, &angles))?;
            Ok(Envelope::table(t, "position wavefunction, Laguerre radial part times hyperspherical harmonic; value is the energy").with_float(s.energy()))
        }
        HydrogenCmd::Momentum { state: a, p } => {
            let (s, angles) = state(&a)?;
            let t = sampled("p", &p, |x| hydrogen_momentum_wf(&s, x, &angles))?;
            Ok(Envelope::table(t, "momentum wavefunction, Gegenbauer radial part times hyperspherical harmonic; value is the energy").with_float(s.energy()))
        }
        HydrogenCmd::Verify { dim, n, l, points } => {
            let s = HydrogenState::top(dim, n, l)?;
            let last = points.saturating_sub(1).max(1) as f64;
            let grid: Vec<f64> = (0..points).map(|i| 8.0 * s.delta() * i as f64 / last).collect();
            let mut t = Table::new(&["p", "closed_form", "oracle", "abs_error"]);
            let mut scale = 0.0f64;
            let mut worst = 0.0f64;
            for &p in &grid {
                let closed = s.radial_momentum(p).abs();
                let oracle = fourier_momentum_oracle(&s, p)?;
                scale = scale.max(closed);
                worst = worst.max((closed - oracle).abs());
                t.push(vec![json!(p), json!(closed), json!(oracle), json!((closed - oracle).abs())]);
            }
            t.push(vec![json!("position_norm"), json!(position_norm(&s)), json!(1.0), json!((position_norm(&s) - 1.0).abs())]);
            let mn = momentum_norm(&s)?;
            t.push(vec![json!("momentum_norm"), json!(mn), json!(1.0), json!((mn - 1.0).abs())]);
            Ok(Envelope::table(t, "closed-form momentum radial function against the radial Hankel transform; value is max error over grid max")
                .with_float(if scale > 0.0 { worst / scale } else { worst }))
        }
    }
}

fn params(a: &OscArgs) -> gfkit::Result<OscillatorParams> {
    OscillatorParams::new(a.mass, a.omega, a.hbar)
}

pub fn oscillator(cmd: OscillatorCmd) -> CmdResult {
    match cmd {
        OscillatorCmd::Wf { params: a, n, x } => {
            let p = params(&a)?;
            let mut t = Table::new(&["x", "value"]);
            for &xi in &x {
                t.push(vec![json!(xi), json!(ho_wavefunction_x(&p, n, xi))]);
            }
            let first = ho_wavefunction_x(&p, n, x[0]);
            Ok(Envelope::table(t, "normalized oscillator eigenfunction via the Hermite-function recurrence").with_float(first))
        }
        OscillatorCmd::Genfunc { z, q } => {
            let g = ho_generating_function(Complex64::new(z[0], z[1]), q);
            let mut t = Table::new(&["re", "im"]);
            t.push(complex_cells(g).to_vec());
            Ok(Envelope::table(t, "pi^{-1/4} exp(sqrt2 q z - q^2/2 - z^2/2); value is the real part").with_float(g.re))
        }
        OscillatorCmd::Propagator { params: a, x, xp, t } => {
            let k = ho_propagator(&params(&a)?, x, xp, Complex64::new(t[0], t[1]))?;
            let mut tab = Table::new(&["x", "xp", "re", "im"]);
            let [re, im] = complex_cells(k);
            tab.push(vec![json!(x), json!(xp), re, im]);
            Ok(Envelope::table(tab, "Mehler kernel sqrt(m w/(2 pi i hbar sin wt)) exp(i m w ((x^2+x'^2) cos wt - 2 x x')/(2 hbar sin wt)); value is the real part")
                .with_float(k.re))
        }
        OscillatorCmd::Magnetic { params: a, omega_c, r1, r2, t } => {
            let k = magnetic_propagator(&params(&a)?, omega_c, [r1[0], r1[1]], [r2[0], r2[1]], Complex64::new(t[0], t[1]))?;
            let mut tab = Table::new(&["x1", "y1", "x2", "y2", "re", "im"]);
            let [re, im] = complex_cells(k);
            tab.push(vec![json!(r1[0]), json!(r1[1]), json!(r2[0]), json!(r2[1]), re, im]);
            Ok(Envelope::table(tab, "planar oscillator kernel rotated by the Larmor angle omega_c t; value is the real part").with_float(k.re))
        }
    }
}
