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

//! `f64` transcendental methods backed by `libm`, so the crate stays `no_std`.

/// Extension trait supplying the float methods `core` does not provide.
pub(crate) trait FloatExt {
    fn abs(self) -> f64;
    fn sqrt(self) -> f64;
    fn cbrt(self) -> f64;
    fn exp(self) -> f64;
    fn ln(self) -> f64;
    fn log10(self) -> f64;
    fn sin(self) -> f64;
    fn cos(self) -> f64;
    fn tan(self) -> f64;
    fn sin_cos(self) -> (f64, f64);
    fn atan2(self, other: f64) -> f64;
    fn powf(self, p: f64) -> f64;
    fn powi(self, p: i32) -> f64;
    fn floor(self) -> f64;
    fn round(self) -> f64;
    fn mul_add(self, a: f64, b: f64) -> f64;
    fn hypot(self, other: f64) -> f64;
    fn signum(self) -> f64;
    fn max(self, other: f64) -> f64;
    fn min(self, other: f64) -> f64;
}

impl FloatExt for f64 {
    #[inline]
    fn abs(self) -> f64 {
        libm::fabs(self)
    }
    #[inline]
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }
    #[inline]
    fn cbrt(self) -> f64 {
        libm::cbrt(self)
    }
    #[inline]
    fn exp(self) -> f64 {
        libm::exp(self)
    }
    #[inline]
    fn ln(self) -> f64 {
        libm::log(self)
    }
    #[inline]
    fn log10(self) -> f64 {
        libm::log10(self)
    }
    #[inline]
    fn sin(self) -> f64 {
        libm::sin(self)
    }
    #[inline]
    fn cos(self) -> f64 {
        libm::cos(self)
    }
    #[inline]
    fn tan(self) -> f64 {
        libm::tan(self)
    }
    #[inline]
    fn sin_cos(self) -> (f64, f64) {
        (libm::sin(self), libm::cos(self))
    }
    #[inline]
    fn atan2(self, other: f64) -> f64 {
        libm::atan2(self, other)
    }
    #[inline]
    fn powf(self, p: f64) -> f64 {
        libm::pow(self, p)
    }
    #[inline]
    fn powi(self, p: i32) -> f64 {
        libm::pow(self, p as f64)
    }
    #[inline]
    fn floor(self) -> f64 {
        libm::floor(self)
    }
    #[inline]
    fn round(self) -> f64 {
        libm::round(self)
    }
    #[inline]
    fn mul_add(self, a: f64, b: f64) -> f64 {
        libm::fma(self, a, b)
    }
    #[inline]
    fn hypot(self, other: f64) -> f64 {
        libm::hypot(self, other)
    }
    #[inline]
    fn signum(self) -> f64 {
        if self.is_nan() {
            f64::NAN
        } else if self.is_sign_negative() {
            -1.0
        } else {
            1.0
        }
    }
    #[inline]
    fn max(self, other: f64) -> f64 {
        libm::fmax(self, other)
    }
    #[inline]
    fn min(self, other: f64) -> f64 {
        libm::fmin(self, other)
    }
}
