//! Harmonic-oscillator eigenfunctions, the Bargmann generating function,
//! Feynman kernels (1-D and charged 2-D in a magnetic field) and the
//! cylindrical basis.

mod propagator;
mod wavefunction;

pub use propagator::{ho_propagator, magnetic_propagator, magnetic_spectral_trace, mehler_eigen_sum, KernelKind, PropagatorKernel, DEFAULT_TILT};
pub use wavefunction::{
    cartesian_cylindrical_overlap, cylindrical_wavefunction, fock_measure_identity, ho_generating_function, ho_wavefunction,
    ho_wavefunction_x, OscillatorParams,
};
