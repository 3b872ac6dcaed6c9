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

//! Double-double (~32 significant digits) arithmetic for series whose terms
//! cancel exponentially, e.g. the Kummer series at large imaginary argument.
//!
//! Only the handful of operations the series kernels need are provided.

use num_complex::Complex64;

use crate::math::FloatExt;

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    Dd { hi: s, lo: err }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = a.mul_add(b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// The exact sum `x + y` as a double-double (no rounding).
    #[inline]
    pub fn from_exact_sum(x: f64, y: f64) -> Dd {
        two_sum(x, y)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        // accurate variant: survives cancellation of the high parts
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let mid = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(mid.hi, mid.lo + t.lo)
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + self.hi * other.lo + self.lo * other.hi;
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        let lo = p.lo + self.lo * x;
        quick_two_sum(p.hi, lo)
    }

    /// Divide by an f64 (full double-double quotient is not needed here).
    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        let q1 = self.hi / x;
        // residual: self - q1 * x, exactly
        let p = two_prod(q1, x);
        let r = two_sum(self.hi, -p.hi);
        let q2 = (r.hi + (r.lo - p.lo + self.lo)) / x;
        quick_two_sum(q1, q2)
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.value().abs()
    }
}

/// Complex double-double, component-wise.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn from_c64(z: Complex64) -> CDd {
        CDd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub fn add(self, other: CDd) -> CDd {
        CDd {
            re: self.re.add(other.re),
            im: self.im.add(other.im),
        }
    }

    #[inline]
    pub fn mul(self, other: CDd) -> CDd {
        CDd {
            re: self.re.mul(other.re).sub(self.im.mul(other.im)),
            im: self.re.mul(other.im).add(self.im.mul(other.re)),
        }
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> CDd {
        CDd {
            re: self.re.div_f64(x),
            im: self.im.div_f64(x),
        }
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.re.value().hypot(self.im.value())
    }
}



#[cfg(test)]
mod scratch2 {
    use super::*;

    #[test]
    fn dump_term_bits() {
        let a = 0.8_f64;
        let b = 3.0_f64;
        let x = -25.0_f64;
        let mut term = Dd::from_f64(1.0);
        let mut sum = term;
        for k in 0..120usize {
            let kf = k as f64;
            term = term.mul(Dd::from_f64(a + kf)).mul(Dd::from_f64(x)).div_f64((b + kf) * (kf + 1.0));
            sum = sum.add(term);
            if k % 10 == 0 || k == 119 {
                std::println!("TERM {k} {:x} {:x} SUM {:x} {:x}", term.hi.to_bits(), term.lo.to_bits(), sum.hi.to_bits(), sum.lo.to_bits());
            }
        }
    }
}
