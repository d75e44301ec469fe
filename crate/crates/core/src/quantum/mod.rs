//! Potentials reverse-engineered from a lifted periodic wave function.
//!
//! Given a real `T`-periodic `ψ` and a constant `C` with `ψ + C` free of
//! zeros, `V = ψ''/(ψ + C)` makes `ψ + C` a zero-energy eigenfunction of
//! `-d²/dx² + V` on the circle. Being nodeless it is the ground state.

mod eigen;
mod lift;
mod potential;

pub use eigen::{apply_hamiltonian, count_nodes, richardson, solve_ground_state, EigenReport, MIN_GRID};
pub use lift::{
    critical_lift, second_derivative, second_derivative_of_spec, CriticalLift, LiftedWavefunction, LIFT_MARGIN,
};
pub use potential::{
    build_potential, potential_oscillation_report, OscillationReport, PotentialSpec, PotentialStatus, Singularity,
    SINGULAR_RTOL,
};
