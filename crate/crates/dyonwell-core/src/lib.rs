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

//! Bound states of a charge-dyon system confined in a rectangular spherical
//! quantum well of finite or infinite height.
//!
//! Everything is expressed in reduced units: lengths in Bohr radii
//! `a_B = hbar^2 / (mu e^2)` and energies in Rydbergs `E_R = mu e^4 / (2 hbar^2)`.
//! The radial problem inside the well is Coulombic (optionally switched off),
//! the well wall sits at radius `rho0`, and the outside region is offset by the
//! well height `u0`. Energy levels are the roots of log-derivative matching
//! conditions built from confluent hypergeometric functions (Kummer `M` inside,
//! Tricomi `U` outside) or, for the Coulomb-free reference problem, from
//! spherical Bessel and Macdonald functions.
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes through
//! `libm`. IO, file formats, and the command line live in the companion
//! `dyonwell` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod binding;
pub mod error;
pub mod normalize;
pub mod quad;
pub mod radial;
pub mod specfun;
pub mod spectrum;
pub mod units;

mod math;
mod ode;

pub use error::CoreError;
pub use units::{HalfInt, QuantumNumbers, ReducedParams, WellHeight, WellParams};
