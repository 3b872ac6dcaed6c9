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

//! Reduced-unit conventions, quantum-number bookkeeping, and the analytic
//! free-system spectrum.
//!
//! Units: lengths in Bohr radii `a_B`, energies in Rydbergs `E_R`. In these
//! units the inverse lengths and Coulomb parameters attached to a trial
//! energy `eps < u0` are
//!
//! ```text
//! gamma1 = sqrt(-eps)        k1 = 1/gamma1
//! gamma2 = sqrt(u0 - eps)    k2 = 1/gamma2
//! ```
//!
//! `gamma1` and `k1` continue to pure-imaginary values for `eps > 0` (the
//! `+i` branch is fixed for `gamma1`); `gamma2`, `k2` stay real for any bound
//! candidate.

use core::cmp::Ordering;
use core::fmt;

use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::math::FloatExt;

/// An integer or half-integer, stored as twice its value.
///
/// The dyon charge `s`, azimuthal number `m`, and orbital number `l` are all
/// integers or all half-integers together; storing `2x` as an `i32` makes the
/// class bookkeeping exact and gives one code path for both classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    /// Build from twice the value: `from_doubled(3)` is `3/2`.
    pub const fn from_doubled(twice: i32) -> Self {
        HalfInt(twice)
    }

    /// Build from an integer value.
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    /// Parse a decimal like `1`, `-0.5`, `1.5` or a fraction like `3/2`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: i32 = num.trim().parse().ok()?;
            let den: i32 = den.trim().parse().ok()?;
            return match den {
                1 => Some(HalfInt(2 * num)),
                2 => Some(HalfInt(num)),
                _ => None,
            };
        }
        if let Some(whole) = text.strip_suffix(".5") {
            let sign = if whole.starts_with('-') { -1 } else { 1 };
            let whole: i32 = if whole.is_empty() || whole == "-" {
                0
            } else {
                whole.parse().ok()?
            };
            return Some(HalfInt(2 * whole + sign));
        }
        let text = text.strip_suffix(".0").unwrap_or(text);
        let n: i32 = text.parse().ok()?;
        Some(HalfInt(2 * n))
    }

    /// Twice the value, always an integer.
    pub const fn doubled(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// True when `self` and `other` are both integers or both half-integers.
    pub const fn same_class(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    pub const fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }

    pub fn max(self, other: HalfInt) -> HalfInt {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }
}

impl core::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl core::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    /// Half-integers print as decimals (`0.5`), never as fractions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// Quantum numbers of one charge-dyon level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    /// Dyon charge number `s` (0, ±1/2, ±1, ...).
    pub s: HalfInt,
    /// Azimuthal number `m`, same class as `s`.
    pub m: HalfInt,
    /// Orbital number `l >= max(|m|, |s|)`, same class as `s`.
    pub l: HalfInt,
    /// Radial node count.
    pub n_r: u32,
}

impl QuantumNumbers {
    /// Validate the class rules and the orbital ladder.
    pub fn new(s: HalfInt, m: HalfInt, l: HalfInt, n_r: u32) -> Result<Self> {
        if !s.same_class(m) || !s.same_class(l) {
            return Err(CoreError::InvalidQuantumNumbers(
                "s, m, l must all be integers or all half-integers",
            ));
        }
        let l_min = ladder_min(m, s);
        if l < l_min {
            return Err(CoreError::InvalidQuantumNumbers(
                "l below the allowed ladder minimum (|m-s|+|m+s|)/2",
            ));
        }
        if !(l - l_min).is_integer() {
            return Err(CoreError::InvalidQuantumNumbers(
                "l does not sit on the unit-step ladder above its minimum",
            ));
        }
        if m.abs() > l {
            return Err(CoreError::InvalidQuantumNumbers("|m| exceeds l"));
        }
        Ok(QuantumNumbers { s, m, l, n_r })
    }

    /// Principal number `n = l + 1 + n_r`.
    pub fn principal(&self) -> HalfInt {
        self.l + HalfInt::from_int(1 + self.n_r as i32)
    }
}

/// Ladder minimum `(|m-s| + |m+s|) / 2 = max(|m|, |s|)`.
fn ladder_min(m: HalfInt, s: HalfInt) -> HalfInt {
    HalfInt((((m - s).abs().doubled() + (m + s).abs().doubled()) / 2).max(0))
}

/// Well height: finite in Rydbergs, or an infinitely high wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WellHeight {
    Finite(f64),
    Infinite,
}

impl WellHeight {
    pub fn is_finite(self) -> bool {
        matches!(self, WellHeight::Finite(_))
    }

    /// Height as an f64, `+inf` for the infinite wall.
    pub fn value(self) -> f64 {
        match self {
            WellHeight::Finite(u0) => u0,
            WellHeight::Infinite => f64::INFINITY,
        }
    }
}

/// Geometry and switches of the confining well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellParams {
    /// Well radius in Bohr radii.
    pub rho0: f64,
    /// Well height in Rydbergs.
    pub u0: WellHeight,
    /// `true`: the full charge-dyon problem; `false`: the Coulomb-free
    /// reference problem.
    pub coulomb: bool,
}

impl WellParams {
    pub fn new(rho0: f64, u0: WellHeight, coulomb: bool) -> Result<Self> {
        if !(rho0 > 0.0) || !rho0.is_finite() {
            return Err(CoreError::DomainError("well radius rho0 must be positive"));
        }
        if let WellHeight::Finite(h) = u0 {
            if !(h > 0.0) || !h.is_finite() {
                return Err(CoreError::DomainError(
                    "finite well height u0 must be positive",
                ));
            }
        }
        Ok(WellParams { rho0, u0, coulomb })
    }

    /// Outer cutoff for tails: `rho0 + max(30/gamma2, 10 rho0)`, which puts the
    /// truncated tail weight below quadrature tolerance.
    pub fn rho_max(&self, gamma2: f64) -> f64 {
        self.rho0 + f64::max(30.0 / gamma2, 10.0 * self.rho0)
    }
}

/// Inverse lengths and Coulomb parameters for one trial energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedParams {
    /// `sqrt(-eps)`; pure imaginary (+i branch) for `eps > 0`.
    pub gamma1: Complex64,
    /// `sqrt(u0 - eps)`, real and positive for bound candidates.
    pub gamma2: f64,
    /// `1/gamma1`.
    pub k1: Complex64,
    /// `1/gamma2`.
    pub k2: f64,
}

/// Reduced parameters for trial energy `eps` in a well of height `u0`.
///
/// For `eps > 0` the `+i` branch is taken for `gamma1`, and `k1 = 1/gamma1`
/// so that `k1 * gamma1 = 1` holds exactly in both components.
pub fn reduced_params(eps: f64, u0: WellHeight) -> Result<ReducedParams> {
    let u0v = u0.value();
    if !(eps < u0v) {
        return Err(CoreError::NotBound { eps, u0: u0v });
    }
    let gamma1 = if eps <= 0.0 {
        Complex64::new((-eps).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, eps.sqrt())
    };
    let k1 = if eps == 0.0 {
        Complex64::new(f64::INFINITY, 0.0)
    } else if eps < 0.0 {
        Complex64::new(1.0 / gamma1.re, 0.0)
    } else {
        // 1/(i kappa) = -i/kappa
        Complex64::new(0.0, -1.0 / gamma1.im)
    };
    let (gamma2, k2) = match u0 {
        WellHeight::Finite(h) => {
            let g2 = (h - eps).sqrt();
            (g2, 1.0 / g2)
        }
        WellHeight::Infinite => (f64::INFINITY, 0.0),
    };
    Ok(ReducedParams {
        gamma1,
        gamma2,
        k1,
        k2,
    })
}

/// The allowed orbital numbers for given `m`, `s`: the unit-step ladder
/// starting at `(|m-s|+|m+s|)/2 = max(|m|,|s|)`.
pub fn allowed_l(m: HalfInt, s: HalfInt, count: usize) -> Result<alloc::vec::Vec<HalfInt>> {
    if !m.same_class(s) {
        return Err(CoreError::InvalidQuantumNumbers(
            "m and s must be in the same integer/half-integer class",
        ));
    }
    if count == 0 {
        return Err(CoreError::InvalidQuantumNumbers("count must be >= 1"));
    }
    let l0 = ladder_min(m, s);
    Ok((0..count)
        .map(|i| l0 + HalfInt::from_int(i as i32))
        .collect())
}

/// Free charge-dyon spectrum `eps_n = -1/n^2` and level degeneracy
/// `g = (n - s)(n + s)`.
pub fn free_spectrum_and_degeneracy(n: HalfInt, s: HalfInt) -> Result<(f64, u64)> {
    if !n.same_class(s.abs() + HalfInt::from_int(1)) {
        return Err(CoreError::InvalidQuantumNumbers(
            "n must sit on |s|+1, |s|+2, ... for this s",
        ));
    }
    if n <= s.abs() {
        return Err(CoreError::InvalidQuantumNumbers("n must exceed |s|"));
    }
    let nv = n.value();
    let eps = -1.0 / (nv * nv);
    // (n-s)(n+s) = (2n-2s)(2n+2s)/4, both factors even or both odd; the
    // product of doubled values is divisible by 4 exactly when n, s share a
    // class, which was checked above.
    let prod = i64::from((n - s).doubled()) * i64::from((n + s).doubled());
    debug_assert!(prod > 0 && prod % 4 == 0);
    Ok((eps, (prod / 4) as u64))
}

impl PartialOrd for QuantumNumbers {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(
            (self.l, self.n_r, self.m, self.s).cmp(&(other.l, other.n_r, other.m, other.s)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_doubled(twice)
    }

    #[test]
    fn reduced_params_direct_substitution() {
        // eps = -1, u0 = 5
        let p = reduced_params(-1.0, WellHeight::Finite(5.0)).unwrap();
        assert_relative_eq!(p.gamma1.re, 1.0, max_relative = 1e-15);
        assert_eq!(p.gamma1.im, 0.0);
        assert_relative_eq!(p.gamma2, 2.449489742783178, max_relative = 1e-12);
        assert_relative_eq!(p.k1.re, 1.0, max_relative = 1e-15);
        assert_relative_eq!(p.k2, 0.4082482904638630, max_relative = 1e-12);
    }

    #[test]
    fn reduced_params_hydrogen_n2_in_infinite_well() {
        let p = reduced_params(-0.25, WellHeight::Infinite).unwrap();
        assert_relative_eq!(p.gamma1.re, 0.5, max_relative = 1e-15);
        assert_relative_eq!(p.k1.re, 2.0, max_relative = 1e-15);
        assert_eq!(p.gamma2, f64::INFINITY);
        assert_eq!(p.k2, 0.0);
    }

    #[test]
    fn reduced_params_positive_energy_branch() {
        // eps = +1, u0 = 5: gamma1 = +i, k1 = -i, gamma2 = 2
        let p = reduced_params(1.0, WellHeight::Finite(5.0)).unwrap();
        assert_eq!(p.gamma1.re, 0.0);
        assert_relative_eq!(p.gamma1.im, 1.0, max_relative = 1e-15);
        assert_eq!(p.k1.re, 0.0);
        assert_relative_eq!(p.k1.im, -1.0, max_relative = 1e-15);
        assert_relative_eq!(p.gamma2, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn reduced_params_rejects_unbound() {
        assert!(matches!(
            reduced_params(5.0, WellHeight::Finite(5.0)),
            Err(CoreError::NotBound { .. })
        ));
        assert!(matches!(
            reduced_params(6.0, WellHeight::Finite(5.0)),
            Err(CoreError::NotBound { .. })
        ));
    }

    #[test]
    fn allowed_l_ladders() {
        let ls = allowed_l(h(0), h(0), 3).unwrap();
        assert_eq!(ls, [h(0), h(2), h(4)]);

        // m = 1/2, s = 1/2 -> 1/2, 3/2 (fermion values)
        let ls = allowed_l(h(1), h(1), 2).unwrap();
        assert_eq!(ls, [h(1), h(3)]);

        // m = -1, s = 1 -> 1, 2
        let ls = allowed_l(h(-2), h(2), 2).unwrap();
        assert_eq!(ls, [h(2), h(4)]);
    }

    #[test]
    fn allowed_l_rejects_mixed_class() {
        assert!(allowed_l(h(1), h(0), 1).is_err());
    }

    #[test]
    fn free_spectrum_values() {
        let (e, g) = free_spectrum_and_degeneracy(h(2), h(0)).unwrap();
        assert_relative_eq!(e, -1.0);
        assert_eq!(g, 1);

        let (e, g) = free_spectrum_and_degeneracy(h(3), h(1)).unwrap();
        assert_relative_eq!(e, -4.0 / 9.0, max_relative = 1e-15);
        assert_eq!(g, 2);

        let (e, g) = free_spectrum_and_degeneracy(h(4), h(0)).unwrap();
        assert_relative_eq!(e, -0.25);
        assert_eq!(g, 4);
    }

    #[test]
    fn free_spectrum_rejects_small_n() {
        assert!(free_spectrum_and_degeneracy(h(1), h(1)).is_err());
        assert!(free_spectrum_and_degeneracy(h(2), h(1)).is_err());
    }

    #[test]
    fn quantum_numbers_ladder_validation() {
        assert!(QuantumNumbers::new(h(1), h(1), h(1), 0).is_ok());
        assert!(QuantumNumbers::new(h(1), h(1), h(0), 0).is_err());
        assert!(QuantumNumbers::new(h(0), h(0), h(1), 0).is_err());
        assert!(QuantumNumbers::new(h(2), h(0), h(1), 0).is_err());
        // |m| > l
        assert!(QuantumNumbers::new(h(0), h(4), h(2), 0).is_err());
    }

    #[test]
    fn halfint_parsing_and_display() {
        use alloc::string::ToString;
        assert_eq!(HalfInt::parse("0.5"), Some(h(1)));
        assert_eq!(HalfInt::parse("-0.5"), Some(h(-1)));
        assert_eq!(HalfInt::parse("1.5"), Some(h(3)));
        assert_eq!(HalfInt::parse("3/2"), Some(h(3)));
        assert_eq!(HalfInt::parse("-1/2"), Some(h(-1)));
        assert_eq!(HalfInt::parse("2"), Some(h(4)));
        assert_eq!(HalfInt::parse("2.0"), Some(h(4)));
        assert_eq!(HalfInt::parse("0.25"), None);
        assert_eq!(h(1).to_string(), "0.5");
        assert_eq!(h(4).to_string(), "2");
        assert_eq!(h(-3).to_string(), "-1.5");
    }

    #[test]
    fn principal_number() {
        let qn = QuantumNumbers::new(h(1), h(1), h(1), 1).unwrap();
        assert_eq!(qn.principal(), h(5)); // 1/2 + 1 + 1 = 5/2
    }
}
