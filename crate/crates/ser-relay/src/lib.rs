//! Worst-case secrecy rate (WCSR) simulator for a wireless-powered
//! full-duplex relay link with self-energy recycling (S-ER).
//!
//! A multi-antenna source talks to a single-antenna destination through an
//! energy-harvesting amplify-and-forward relay while an eavesdropper with
//! imperfectly known channel listens in. The relay recycles its own loopback
//! transmission as an extra energy source instead of cancelling it. This
//! crate provides:
//!
//! - closed-form beamformer and power-allocation solutions that maximize the
//!   worst-case secrecy rate under a bounded eavesdropper-CSI error,
//! - a time-switching relaying (TSR) baseline solved by block-coordinate
//!   ascent,
//! - brute-force oracles (grid scans, random-sampling sweeps, uncertainty
//!   ball sampling) that certify every closed form at desk scale,
//! - a deterministic, seeded Monte Carlo harness with CSV export.
//!
//! Modules mirror the layering: [`numerics`] holds the complex linear
//! algebra kernels, [`channel`] the fading model, [`ser_model`] the analytic
//! SINR/rate level, [`power_alloc`] and [`beamform`] the closed-form
//! solutions, [`tsr`] the baseline, [`oracle`] the validators, and
//! [`harness`] the experiment runner used by the CLI.

pub mod beamform;
pub mod channel;
pub mod harness;
pub mod numerics;
pub mod oracle;
pub mod power_alloc;
pub mod ser_model;
pub mod tsr;

use thiserror::Error;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;

/// Errors surfaced by the numeric kernels and the model layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SerError {
    /// An SVD or eigendecomposition did not converge.
    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),
    /// A matrix required to be positive definite is not.
    #[error("matrix not positive definite (min eigenvalue {min_eig:.3e}, trace {trace:.3e})")]
    NotPositiveDefinite { min_eig: f64, trace: f64 },
    /// Zero-forcing needs at least two transmit antennas and a nonzero
    /// estimated eavesdropper channel.
    #[error("zero-forcing infeasible: {0}")]
    ZfInfeasible(String),
    /// Scalar search interval is empty or tolerance nonpositive.
    #[error("invalid search interval [{lo}, {hi}] with tol {tol}")]
    InvalidInterval { lo: f64, hi: f64, tol: f64 },
    /// Node distances must be positive.
    #[error("invalid distance {0}")]
    InvalidDistance(f64),
    /// A channel vector that must be nonzero is zero.
    #[error("zero channel vector: {0}")]
    ZeroChannel(String),
    /// The self-energy recycling loop is self-sustaining: the relay power
    /// denominator 1 - delta*eta*|f^H w_t|^2 is nonpositive.
    #[error("infeasible recycling: delta*eta*|f^H w_t|^2 = {loop_gain} >= 1")]
    InfeasibleRecycling { loop_gain: f64 },
    /// The leakage-constrained transmit design has no feasible coefficient.
    #[error("leakage constraint infeasible: {0}")]
    LeakageInfeasible(String),
    /// TSR time-switching coefficient outside (0, 1).
    #[error("invalid time-switching coefficient alpha = {0}")]
    InvalidAlpha(f64),
}






