use crate::{CircuitError, Result};

/// An exact angle of the form `sign * pi / 2^k` radians.
///
/// Every rotation and phase angle in this toolkit is such a dyadic multiple of
/// pi, so angles are stored as the pair `(sign, k)` and only converted to
/// floating point at the last moment. This makes angle arithmetic (negation,
/// halving, equality) exact and keeps the fusion identities free of float
/// drift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicAngle {
    sign: i8,
    k: u32,
}

impl DyadicAngle {
    /// Builds the angle `sign * pi / 2^k`; `sign` must be `+1` or `-1`.
    pub fn new(sign: i8, k: u32) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(CircuitError::BadSign(sign as i32));
        }
        Ok(DyadicAngle { sign, k })
    }

    /// The positive angle `+pi / 2^k`.
    pub fn positive(k: u32) -> Self {
        DyadicAngle { sign: 1, k }
    }

    /// The negative angle `-pi / 2^k`.
    pub fn negative(k: u32) -> Self {
        DyadicAngle { sign: -1, k }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Converts to radians with a single division: `sign * (pi / 2^k)`.
    ///
    /// The divisor `2^k` is exact in binary floating point, so the result is
    /// bit-identical across runs and equal to the correctly rounded value.
    pub fn to_radians(&self) -> f64 {
        // 2^k is exactly representable, so pi / 2^k is a single correctly
        // rounded division.
        let denom = f64::powi(2.0, self.k as i32);
        f64::from(self.sign) * (std::f64::consts::PI / denom)
    }

    /// Same magnitude, opposite sign.
    pub fn negated(&self) -> Self {
        DyadicAngle {
            sign: -self.sign,
            k: self.k,
        }
    }

    /// Half the angle: increments the exponent, keeps the sign.
    pub fn halved(&self) -> Self {
        DyadicAngle {
            sign: self.sign,
            k: self.k + 1,
        }
    }

    /// Twice the angle; `k` must be positive (pi is the largest magnitude used).
    pub fn doubled(&self) -> Option<Self> {
        self.k.checked_sub(1).map(|k| DyadicAngle { sign: self.sign, k })
    }
}

impl std::fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.sign >= 0 { "" } else { "-" };
        if self.k == 0 {
            write!(f, "{s}pi")
        } else {
            write!(f, "{s}pi/{}", 1u64 << self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radians_match_direct_formula() {
        for k in 0..20 {
            for sign in [1i8, -1] {
                let a = DyadicAngle::new(sign, k).unwrap();
                let expect = f64::from(sign) * std::f64::consts::PI / f64::powi(2.0, k as i32);
                assert_eq!(a.to_radians(), expect);
            }
        }
    }

    #[test]
    fn radians_reproducible() {
        let a = DyadicAngle::positive(5);
        assert_eq!(a.to_radians().to_bits(), a.to_radians().to_bits());
    }

    #[test]
    fn negation_flips_sign_only() {
        let a = DyadicAngle::positive(3);
        let b = a.negated();
        assert_eq!(b.sign(), -1);
        assert_eq!(b.k(), 3);
        assert_eq!(b.negated(), a);
    }

    #[test]
    fn halving_increments_k_only() {
        let a = DyadicAngle::negative(2);
        let h = a.halved();
        assert_eq!(h.sign(), -1);
        assert_eq!(h.k(), 3);
        assert_eq!(h.doubled(), Some(a));
    }

    #[test]
    fn bad_sign_rejected() {
        assert!(DyadicAngle::new(0, 1).is_err());
        assert!(DyadicAngle::new(2, 1).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(DyadicAngle::positive(0).to_string(), "pi");
        assert_eq!(DyadicAngle::negative(1).to_string(), "-pi/2");
        assert_eq!(DyadicAngle::positive(3).to_string(), "pi/8");
    }
}
