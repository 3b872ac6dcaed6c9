// Copyright 2026 the dyonwell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Error type shared by the whole solver.

use core::fmt;

/// Which side of the well wall produced a pole of the matching function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleSide {
    Inside,
    Outside,
}

/// Everything that can go wrong while solving.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Trial energy is not below the well height.
    NotBound { eps: f64, u0: f64 },
    /// Quantum numbers violate the class rules or the orbital ladder.
    InvalidQuantumNumbers(&'static str),
    /// Argument outside the function's domain.
    DomainError(&'static str),
    /// Argument magnitude beyond the overflow-safe range.
    RangeError(&'static str),
    /// A series or iteration failed to reach its accuracy target.
    ConvergenceError {
        what: &'static str,
        est_error: f64,
    },
    /// The inside `F` or outside `U` vanishes at the wall for this trial
    /// energy, so the log-derivative has a pole there.
    PoleAtTrialEnergy { eps: f64, side: PoleSide },
    /// Operation has no meaning for this configuration (e.g. an outside
    /// solution of an infinitely high well).
    NotApplicable(&'static str),
    /// The ODE integrator underflowed its step size.
    IntegrationError(&'static str),
    /// An energy scan window was empty or inverted.
    EmptyWindow,
    /// refine_root was handed endpoints with equal signs.
    BadBracket { lo: f64, hi: f64 },
    /// Two radial nodes could not be separated at the finest grid level.
    NodeResolutionError,
    /// The outside solution underflowed, so the matching amplitude overflowed.
    AmplitudeOverflow,
    /// Adaptive quadrature exhausted its subdivision budget.
    QuadratureError { est_error: f64 },
    /// No Coulomb-free level exists at the requested (l, index).
    FreeLevelAbsent,
    /// No Coulomb level exists at the requested (l, index).
    CoulombLevelAbsent,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NotBound { eps, u0 } => {
                write!(f, "energy {eps} is not below the well height {u0}")
            }
            CoreError::InvalidQuantumNumbers(msg) => write!(f, "invalid quantum numbers: {msg}"),
            CoreError::DomainError(msg) => write!(f, "domain error: {msg}"),
            CoreError::RangeError(msg) => write!(f, "range error: {msg}"),
            CoreError::ConvergenceError { what, est_error } => {
                write!(f, "{what} did not converge (estimated error {est_error:.3e})")
            }
            CoreError::PoleAtTrialEnergy { eps, side } => {
                let side = match side {
                    PoleSide::Inside => "inside",
                    PoleSide::Outside => "outside",
                };
                write!(f, "matching function has a pole at eps = {eps} ({side} solution vanishes at the wall)")
            }
            CoreError::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
            CoreError::IntegrationError(msg) => write!(f, "ODE integration failed: {msg}"),
            CoreError::EmptyWindow => write!(f, "energy scan window is empty"),
            CoreError::BadBracket { lo, hi } => {
                write!(f, "bracket [{lo}, {hi}] does not change sign")
            }
            CoreError::NodeResolutionError => {
                write!(f, "could not separate adjacent radial nodes")
            }
            CoreError::AmplitudeOverflow => {
                write!(f, "outside solution underflowed; matching amplitude overflow")
            }
            CoreError::QuadratureError { est_error } => {
                write!(f, "quadrature did not converge (estimated error {est_error:.3e})")
            }
            CoreError::FreeLevelAbsent => write!(f, "no Coulomb-free level at this (l, index)"),
            CoreError::CoulombLevelAbsent => write!(f, "no Coulomb level at this (l, index)"),
        }
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, CoreError>;
