mod algebra;
mod geometry;
mod kernels;
mod manybody;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::args::Command;
use crate::envelope::{Envelope, Table};

pub type CmdResult = gfkit::Result<Envelope>;

pub fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Wigner(c) => algebra::wigner(c),
        Command::Su3(c) => algebra::su3(c),
        Command::Gelfand(c) => algebra::gelfand(c),
        Command::Hurwitz(c) => geometry::hurwitz(c),
        Command::Hydrogen(c) => kernels::hydrogen(c),
        Command::Oscillator(c) => kernels::oscillator(c),
        Command::Manybody(c) => manybody::manybody(c),
    }
}

fn complex_cells(z: Complex64) -> [Value; 2] {
    [json!(z.re), json!(z.im)]
}

fn vector_table(values: &[f64]) -> Table {
    let mut t = Table::new(&["index", "value"]);
    for (i, v) in values.iter().enumerate() {
        t.push(vec![json!(i), json!(v)]);
    }
    t
}

fn matrix_table<F: Fn(usize, usize) -> Vec<Value>>(rows: usize, cols: usize, extra: &[&str], cell: F) -> Table {
    let mut names = vec!["row", "col"];
    names.extend_from_slice(extra);
    let mut t = Table::new(&names);
    for i in 0..rows {
        for j in 0..cols {
            let mut row = vec![json!(i), json!(j)];
            row.extend(cell(i, j));
            t.push(row);
        }
    }
    t
}
