use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::envelope::Format;

#[derive(Debug, Parser)]
#[command(name = "gfkit", version, about = "Exact recoupling coefficients, U(n) machinery, Hurwitz maps, kernels and determinant tools")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// SU(2) recoupling coefficients.
    #[command(subcommand)]
    Wigner(WignerCmd),
    /// Multiplicity-free SU(3) coupling and Euler matrices.
    #[command(subcommand)]
    Su3(Su3Cmd),
    /// Gel'fand patterns of U(n) irreps.
    #[command(subcommand)]
    Gelfand(GelfandCmd),
    /// Hurwitz matrices, quadratic maps, Cayley rotations and cross products.
    #[command(subcommand)]
    Hurwitz(HurwitzCmd),
    /// N-dimensional hydrogen wavefunctions.
    #[command(subcommand)]
    Hydrogen(HydrogenCmd),
    /// Oscillator eigenfunctions and propagators.
    #[command(subcommand)]
    Oscillator(OscillatorCmd),
    /// Determinant identities, Slater overlaps and the Lipkin model.
    #[command(subcommand)]
    Manybody(ManybodyCmd),
}

#[derive(Debug, Args)]
pub struct ThreeJArgs {
    /// Doubled j1 j2 j3.
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    pub two_j: Vec<i64>,
    /// Doubled m1 m2 m3.
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    pub two_m: Vec<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SixJMethod {
    /// Generating-function extraction.
    Gf,
    /// Sum over magnetic quantum numbers.
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum WignerCmd {
    #[command(name = "3j")]
    ThreeJ(ThreeJArgs),
    /// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3>.
    Cg(ThreeJArgs),
    #[command(name = "6j")]
    SixJ {
        /// Doubled j1 j2 j3 j4 j5 j6 (rows of the symbol).
        #[arg(long, num_args = 6, required = true, allow_negative_numbers = true)]
        two_j: Vec<i64>,
        #[arg(long, value_enum, default_value = "gf")]
        method: SixJMethod,
    },
    #[command(name = "9j")]
    NineJ {
        /// Doubled entries, row by row.
        #[arg(long, num_args = 9, required = true, allow_negative_numbers = true)]
        two_j: Vec<i64>,
    },
    /// The 72 Regge images of a 3j label with their signs.
    Regge(ThreeJArgs),
    /// Integral of three spherical harmonics.
    Gaunt {
        #[arg(long, num_args = 3, required = true)]
        l: Vec<i64>,
        #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
        m: Vec<i64>,
    },
}

#[derive(Debug, Args)]
pub struct Su3CouplingArgs {
    #[arg(long)]
    pub l1: i64,
    #[arg(long)]
    pub l2: i64,
    #[arg(long)]
    pub lambda3: i64,
    #[arg(long)]
    pub mu3: i64,
    /// p q 2t0 of the first state.
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    pub a1: Vec<i64>,
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    pub a2: Vec<i64>,
    /// p q 2t0 of the coupled state.
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    pub a3: Vec<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Su3Cmd {
    /// (l1,0) x (l2,0) into irreps.
    Decompose {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
    },
    /// Full coupling coefficient and its factorization.
    Wigner(Su3CouplingArgs),
    /// Isoscalar factor only.
    Isoscalar(Su3CouplingArgs),
    /// U = A R(nu3/2) D(beta3) B from SU(2) parameters.
    Euler {
        /// re(a1) im(a1) re(a2) im(a2), unit norm.
        #[arg(long, num_args = 4, required = true, allow_negative_numbers = true)]
        a: Vec<f64>,
        #[arg(long)]
        nu3: f64,
        #[arg(long)]
        beta3: f64,
        #[arg(long, num_args = 4, required = true, allow_negative_numbers = true)]
        b: Vec<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GelfandCmd {
    /// Weyl dimension of the irrep [h].
    Dim {
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        h: Vec<i64>,
    },
    /// All patterns of [h] with their weights.
    Enumerate {
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        h: Vec<i64>,
    },
    /// Weight of a pattern given as "2 1 0 / 2 1 / 1".
    Weight {
        #[arg(long)]
        pattern: String,
    },
    /// Normalized boson polynomial of a pattern in the matrix minors.
    Poly {
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum HurwitzCmd {
    /// Symbolic Hurwitz matrix, or its value at --u.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        u: Option<Vec<f64>>,
    },
    /// Kustaanheimo-Stiefel map, exact on rationals such as 1/2.
    Ks {
        #[arg(long, num_args = 4, required = true, allow_negative_numbers = true)]
        u: Vec<String>,
    },
    /// Rational rotation built from the Cayley transform (n = 3 or 7).
    Cayley {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        u: Vec<f64>,
    },
    /// Cross product in 3 or 7 dimensions.
    Cross {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        a: Vec<f64>,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        b: Vec<f64>,
    },
    /// Randomized identity checks.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Debug, Args)]
pub struct HydrogenStateArgs {
    /// Space dimension N >= 2.
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub l: i64,
    /// Lower chain labels; defaults to the top of the chain.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    pub labels: Option<Vec<i64>>,
    /// Angles theta_1..theta_{N-2}, phi; default all zero.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    pub angles: Option<Vec<f64>>,
}

#[derive(Debug, Subcommand)]
pub enum HydrogenCmd {
    Position {
        #[command(flatten)]
        state: HydrogenStateArgs,
        #[arg(long, num_args = 1.., required = true)]
        r: Vec<f64>,
    },
    Momentum {
        #[command(flatten)]
        state: HydrogenStateArgs,
        #[arg(long, num_args = 1.., required = true)]
        p: Vec<f64>,
    },
    /// Closed-form momentum radial function against the Hankel transform.
    Verify {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
}

#[derive(Debug, Args)]
pub struct OscArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Debug, Subcommand)]
pub enum OscillatorCmd {
    /// Normalized eigenfunction u_n(x).
    Wf {
        #[command(flatten)]
        params: OscArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Generating function sum z^n/sqrt(n!) u_n(q).
    Genfunc {
        /// re im
        #[arg(long, num_args = 2, required = true, allow_negative_numbers = true)]
        z: Vec<f64>,
        #[arg(long, allow_negative_numbers = true)]
        q: f64,
    },
    /// 1-D kernel at complex time; t = (0, -beta) is imaginary time.
    Propagator {
        #[command(flatten)]
        params: OscArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        xp: f64,
        #[arg(long, num_args = 2, required = true, allow_negative_numbers = true)]
        t: Vec<f64>,
    },
    /// Charged planar oscillator kernel.
    Magnetic {
        #[command(flatten)]
        params: OscArgs,
        #[arg(long, allow_negative_numbers = true)]
        omega_c: f64,
        #[arg(long, num_args = 2, required = true, allow_negative_numbers = true)]
        r1: Vec<f64>,
        #[arg(long, num_args = 2, required = true, allow_negative_numbers = true)]
        r2: Vec<f64>,
        #[arg(long, num_args = 2, required = true, allow_negative_numbers = true)]
        t: Vec<f64>,
    },
}

#[derive(Debug, Args)]
pub struct SlaterArgs {
    /// Number of orbitals.
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub n_occ: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Distance of the random unitary from the identity.
    #[arg(long, default_value_t = 0.5)]
    pub scale: f64,
}

#[derive(Debug, Subcommand)]
pub enum ManybodyCmd {
    /// Substituted determinants through one solve; random rational input unless --a/--b are given.
    Cramer {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rows separated by ';', entries by ',' (rationals allowed).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// 0-based columns receiving b_1..b_s; all increasing placements if absent.
        #[arg(long, num_args = 1..)]
        positions: Option<Vec<usize>>,
    },
    /// <Phi|U|Phi> for a random unitary, with the Fock-space value.
    Overlap(SlaterArgs),
    /// One- and two-body transition elements for random operators.
    Lowdin(SlaterArgs),
    /// Exponential particle-hole representation of U|Phi>.
    Thouless(SlaterArgs),
    /// Exact spectrum, optionally next to the truncated boson spectrum.
    Lipkin {
        /// Particle number (even).
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        e: f64,
        #[arg(long, allow_negative_numbers = true)]
        v: f64,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Particle-hole boson coefficients alpha_0..alpha_kmax.
    BosonCoeffs {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
}
