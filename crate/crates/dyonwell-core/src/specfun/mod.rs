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

//! Self-contained special-functions kernel.
//!
//! Everything the radial problem needs: log-gamma, confluent hypergeometric
//! functions of both kinds, Bessel `J`/`K` of general real order, spherical
//! Bessel functions for integer and half-integer order, and Wigner
//! d-functions. All routines are pure and allocation-free on the hot paths.

mod bessel;
mod dd;
mod gamma;
mod kummer;
mod tricomi;
mod wigner;

pub use bessel::{bessel_j, bessel_k, spherical_j, spherical_j_with_derivative};
pub use gamma::log_gamma;
pub use kummer::{kummer_m, kummer_m_real, kummer_m_with_shifted};
pub use tricomi::tricomi_u;
pub use wigner::wigner_d;

pub(crate) use gamma::{digamma, lgamma_pos, lgamma_signed, recip_gamma};

/// A computed value together with a relative error estimate from series
/// truncation and rounding bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult<T> {
    pub value: T,
    pub est_error: f64,
}
