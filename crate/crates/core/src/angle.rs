//! Exact points of the circle `𝕋`, measured in turns.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point `e^{2πiθ}` of the circle.
///
/// Rational angles `θ = num/den` are exact reduced fractions in `[0, 1)`.
/// `Irrational` is an opaque marker `θ = multiple · ξ_generator` where the
/// generators are treated as rationally independent irrationals; it exists
/// only for equivalence-law tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Angle {
    Rational { num: u64, den: u64 },
    Irrational { generator: u32, multiple: i64 },
}

impl Angle {
    pub const ONE: Angle = Angle::Rational { num: 0, den: 1 };

    /// `e^{2πi·num/den}`, reduced.
    pub fn rational(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::BadAngle("zero denominator".into()));
        }
        let d = den as i128;
        let n = (num as i128).rem_euclid(d);
        let g = n.gcd(&d);
        Ok(Angle::Rational {
            num: (n / g) as u64,
            den: (d / g) as u64,
        })
    }

    /// The `k`-th of the `d`-th roots of unity.
    pub fn root_of_unity(k: u64, d: u64) -> Result<Self> {
        Self::rational(
            i64::try_from(k % d.max(1)).map_err(|_| Error::BadAngle("index".into()))?,
            d,
        )
    }

    /// All `d`-th roots of unity, in increasing angle.
    pub fn roots(d: u64) -> Result<Vec<Self>> {
        if d == 0 {
            return Err(Error::BadAngle("roots:0".into()));
        }
        (0..d).map(|k| Self::root_of_unity(k, d)).collect()
    }

    pub fn irrational(generator: u32, multiple: i64) -> Self {
        if multiple == 0 {
            Angle::ONE
        } else {
            Angle::Irrational {
                generator,
                multiple,
            }
        }
    }

    /// `λ ↦ λ^z`.
    pub fn pow(self, z: i64) -> Self {
        match self {
            Angle::Rational { num, den } => {
                let d = den as i128;
                let n = (num as i128 * z as i128).rem_euclid(d);
                let g = n.gcd(&d);
                Angle::Rational {
                    num: (n / g) as u64,
                    den: (d / g) as u64,
                }
            }
            Angle::Irrational {
                generator,
                multiple,
            } => Angle::irrational(
                generator,
                multiple.checked_mul(z).expect("irrational marker overflow"),
            ),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Angle::Rational { .. })
    }

    /// `(num, den)` for rational angles.
    pub fn as_fraction(&self) -> Result<(u64, u64)> {
        match *self {
            Angle::Rational { num, den } => Ok((num, den)),
            other => Err(Error::IrrationalAngle(other.to_string())),
        }
    }

    /// Floating point value, for float-mode checks only.
    pub fn to_complex(&self) -> Result<num_complex::Complex64> {
        let (num, den) = self.as_fraction()?;
        let theta = std::f64::consts::TAU * num as f64 / den as f64;
        Ok(num_complex::Complex64::from_polar(1.0, theta))
    }
}

/// Rational angles in increasing position on the circle, then markers.
impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (Angle::Rational { num: a, den: b }, Angle::Rational { num: c, den: d }) => {
                (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
            }
            (Angle::Rational { .. }, Angle::Irrational { .. }) => Ordering::Less,
            (Angle::Irrational { .. }, Angle::Rational { .. }) => Ordering::Greater,
            (
                Angle::Irrational {
                    generator: g1,
                    multiple: m1,
                },
                Angle::Irrational {
                    generator: g2,
                    multiple: m2,
                },
            ) => (g1, m1).cmp(&(g2, m2)),
        }
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Rational { num, den } => write!(f, "{num}/{den}"),
            Angle::Irrational {
                generator,
                multiple,
            } => write!(f, "{multiple}*xi{generator}"),
        }
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Parses `num/den` (in turns) or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadAngle(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => Angle::rational(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Angle::rational(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
