//! Solver library for the space-time Caputo-Fabrizio fractional
//! groundwater-flow equation in a confined radial aquifer.
//!
//! The pipeline: special functions feed the fractional operators and their
//! discrete weight tables; the Crank-Nicolson scheme marches the head field;
//! the Picard module provides the fixed-point construction and contraction
//! estimates; the stability module verifies the von Neumann claims
//! numerically.

pub mod domain;
pub mod error;
pub mod fractional;
pub mod linalg;
pub mod picard;
pub mod scheme;
pub mod special;
pub mod stability;
pub mod weights;

pub use domain::{AquiferParams, Grid, HeadField, InitialProfile};
pub use error::{Error, Result};
pub use fractional::{
    cf_integral_prefactors, cf_space_laplacian, cf_time_derivative, cf_time_integral,
    FractionalOrder, SampledFunction,
};
pub use picard::{
    contraction_check, kernel_k, lipschitz_estimate, picard_iterate, picard_solve,
    picard_solve_from, uniqueness_check, KernelEval, LipschitzEstimate, PicardReport, PICARD_TOL,
};
pub use scheme::{
    assemble_system, classical_solve, cn_first_derivative, relative_l2_distance, run_simulation,
    step, StepSystem,
};
pub use special::{erf_fn, erfc_fn, gamma_fn};
pub use stability::{
    discrete_l2_norm, mode_amplification, parseval_check, perturbation_experiment,
    ModeAmplification, PerturbationTrace,
};
pub use weights::{
    build_e_weights, build_f_weights, discrete_space_laplacian, discrete_time_derivative,
    WeightTables,
};
