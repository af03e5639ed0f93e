use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A trapezoidal membership function on the truth-degree universe `[0, 1]`.
///
/// Corners follow the usual `[a, b, c, d]` bracket notation: the function
/// rises on `a..b`, is 1 on the plateau `b..=c` and falls on `c..d`.
/// A triangle is the special case `b == c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct TrapezoidMF {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl From<[f64; 4]> for TrapezoidMF {
    // Deserialization does not validate; documents are validated as a whole
    // so that every bad tuple can be reported at once.
    fn from([a, b, c, d]: [f64; 4]) -> Self {
        Self { a, b, c, d }
    }
}

impl From<TrapezoidMF> for [f64; 4] {
    fn from(mf: TrapezoidMF) -> Self {
        mf.corners()
    }
}

impl TrapezoidMF {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let mf = Self { a, b, c, d };
        mf.validate()?;
        Ok(mf)
    }

    pub fn from_corners(corners: [f64; 4]) -> Result<Self> {
        let [a, b, c, d] = corners;
        Self::new(a, b, c, d)
    }

    /// Checks `0 <= a <= b <= c <= d <= 1` with finite corners.
    pub fn validate(&self) -> Result<()> {
        let corners = self.corners();
        let reason = if corners.iter().any(|v| !v.is_finite()) {
            Some("corners must be finite")
        } else if corners.iter().any(|v| !(0.0..=1.0).contains(v)) {
            Some("corners must lie in [0, 1]")
        } else if !(self.a <= self.b && self.b <= self.c && self.c <= self.d) {
            Some("corners must satisfy a <= b <= c <= d")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidMembershipFunction {
                corners,
                reason: reason.to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn corners(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn support(&self) -> (f64, f64) {
        (self.a, self.d)
    }

    /// Membership degree of `x`.
    ///
    /// Vertical edges are inclusive steps: the plateau `[b, c]` always
    /// evaluates to 1, even when `a == b` or `c == d`.
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.a || x > self.d {
            0.0
        } else if x >= self.b && x <= self.c {
            1.0
        } else if x < self.b {
            (x - self.a) / (self.b - self.a)
        } else {
            (self.d - x) / (self.d - self.c)
        }
    }

    /// Area under the function.
    pub fn area(&self) -> f64 {
        ((self.d - self.a) + (self.c - self.b)) / 2.0
    }

    /// Center of gravity, in closed form.
    ///
    /// A zero-area (point) function defuzzifies to its location.
    pub fn centroid(&self) -> f64 {
        let Self { a, b, c, d } = *self;
        let den = 3.0 * (c + d - a - b);
        if den <= 0.0 {
            return a;
        }
        let num = (d * d + c * d + c * c) - (a * a + a * b + b * b);
        (num / den).clamp(a, d)
    }

    /// Corner-wise linear blend `(1 - eta) * self + eta * anchor`.
    ///
    /// Both endpoints are ordered, so every convex combination is too; the
    /// running max only absorbs rounding. The anchor is an exact fixed point.
    pub fn blend(&self, anchor: &TrapezoidMF, eta: f64) -> TrapezoidMF {
        let mix = |old: f64, target: f64| (old + eta * (target - old)).clamp(0.0, 1.0);
        let a = mix(self.a, anchor.a);
        let b = mix(self.b, anchor.b).max(a);
        let c = mix(self.c, anchor.c).max(b);
        let d = mix(self.d, anchor.d).max(c);
        TrapezoidMF { a, b, c, d }
    }

    /// Euclidean distance between the corner vectors.
    pub fn corner_distance(&self, other: &TrapezoidMF) -> f64 {
        self.corners()
            .iter()
            .zip(other.corners())
            .map(|(x, y)| (x - y).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

impl fmt::Display for TrapezoidMF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Evaluates `mf` at `x`, rejecting a malformed function.
pub fn mf_eval(mf: &TrapezoidMF, x: f64) -> Result<f64> {
    mf.validate()?;
    Ok(mf.eval(x))
}

/// Center of gravity of a validated function.
pub fn mf_centroid(mf: &TrapezoidMF) -> Result<f64> {
    mf.validate()?;
    Ok(mf.centroid())
}
