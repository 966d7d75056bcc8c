//! Exact nonnegative dyadic rationals `num / 2^exp`.
//!
//! Average cut-rank values are always of this form (the denominator divides
//! `2^(n-1)`), so all comparisons and arithmetic here are exact; no floating
//! point is involved anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative dyadic rational, kept normalized: `num` is odd or `exp == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    num: BigUint,
    exp: u32,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            num: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            num: BigUint::one(),
            exp: 0,
        }
    }

    /// Builds `num / 2^exp` and normalizes.
    pub fn new(num: BigUint, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: u64) -> Self {
        Dyadic {
            num: BigUint::from(n),
            exp: 0,
        }
    }

    /// `p / 2^q` for machine-sized `p`.
    pub fn from_ratio(p: u64, q: u32) -> Self {
        Dyadic::new(BigUint::from(p), q)
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic {
            num: BigUint::one(),
            exp: k,
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0) as u32;
        let shift = tz.min(self.exp);
        if shift > 0 {
            self.num >>= shift as usize;
            self.exp -= shift;
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    /// The exponent `q` of the normalized denominator `2^q`.
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn denominator(&self) -> BigUint {
        BigUint::one() << (self.exp as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.max(other.exp);
        let a = &self.num << ((exp - self.exp) as usize);
        let b = &other.num << ((exp - other.exp) as usize);
        Dyadic::new(a + b, exp)
    }

    /// Exact difference; `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Dyadic) -> Option<Dyadic> {
        let exp = self.exp.max(other.exp);
        let a = &self.num << ((exp - self.exp) as usize);
        let b = &other.num << ((exp - other.exp) as usize);
        if a < b {
            None
        } else {
            Some(Dyadic::new(a - b, exp))
        }
    }

    pub fn add_int(&self, n: u64) -> Dyadic {
        self.add(&Dyadic::from_int(n))
    }

    /// `self - 2^-k`, when nonnegative.
    pub fn checked_sub_pow2(&self, k: u32) -> Option<Dyadic> {
        self.checked_sub(&Dyadic::pow2_neg(k))
    }

    /// `self * 2^k`.
    pub fn mul_pow2(&self, k: u32) -> Dyadic {
        if self.num.is_zero() {
            return Dyadic::zero();
        }
        if k >= self.exp {
            Dyadic {
                num: &self.num << ((k - self.exp) as usize),
                exp: 0,
            }
        } else {
            Dyadic {
                num: self.num.clone(),
                exp: self.exp - k,
            }
        }
    }

    pub fn mul_int(&self, n: u64) -> Dyadic {
        Dyadic::new(&self.num * n, self.exp)
    }

    pub fn cmp_int(&self, n: u64) -> Ordering {
        self.cmp(&Dyadic::from_int(n))
    }

    /// `⌊-log2 self⌋` for `0 < self <= 1`: the unique `j >= 0` with
    /// `2^-(j+1) < self <= 2^-j`.
    pub fn floor_neg_log2(&self) -> Result<u64> {
        if self.is_zero() || *self > Dyadic::one() {
            return Err(Error::Domain(format!(
                "floor_neg_log2 requires a value in (0, 1], got {self}"
            )));
        }
        let bits = self.num.bits(); // num >= 1, so bits >= 1
        if self.num.is_one() {
            // exactly 2^-exp
            Ok(self.exp as u64)
        } else {
            // num is odd and not a power of two: 2^(bits-1) < num < 2^bits,
            // so -log2 lies strictly between exp - bits and exp - bits + 1
            Ok(self.exp as u64 - bits)
        }
    }

    /// Exact decimal expansion (the denominator is a power of two, so the
    /// expansion terminates).
    pub fn to_decimal_string(&self) -> String {
        if self.exp == 0 {
            return self.num.to_string();
        }
        // num / 2^q = num * 5^q / 10^q
        let scaled = &self.num * BigUint::from(5u32).pow(self.exp);
        let digits = scaled.to_string();
        let q = self.exp as usize;
        if digits.len() > q {
            let (int_part, frac_part) = digits.split_at(digits.len() - q);
            format!("{int_part}.{frac_part}")
        } else {
            format!("0.{}{}", "0".repeat(q - digits.len()), digits)
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << ((exp - self.exp) as usize);
        let b = &other.num << ((exp - other.exp) as usize);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    /// Renders as `p/q` with `q = 2^exp`, or plain `p` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `p` or `p/q` where `q` is a power of two.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_nat = |t: &str, offset: usize| -> Result<BigUint> {
            t.parse::<BigUint>().map_err(|_| Error::Parse {
                offset,
                msg: format!("expected a nonnegative integer, got {t:?}"),
            })
        };
        match s.split_once('/') {
            None => Ok(Dyadic::new(parse_nat(s, 0)?, 0)),
            Some((p, q)) => {
                let num = parse_nat(p, 0)?;
                let den = parse_nat(q, p.len() + 1)?;
                if den.is_zero() || (&den & (&den - 1u32)) != BigUint::zero() {
                    return Err(Error::Parse {
                        offset: p.len() + 1,
                        msg: format!("denominator must be a power of two, got {den}"),
                    });
                }
                let exp = (den.bits() - 1) as u32;
                Ok(Dyadic::new(num, exp))
            }
        }
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn to_rational(d: &Dyadic) -> BigRational {
        BigRational::new(
            BigInt::from(d.numerator().clone()),
            BigInt::from(d.denominator()),
        )
    }

    #[test]
    fn normalization() {
        let d = Dyadic::from_ratio(6, 3); // 6/8 = 3/4
        assert_eq!(d.numerator(), &BigUint::from(3u32));
        assert_eq!(d.exponent(), 2);
        assert_eq!(d.to_string(), "3/4");

        let z = Dyadic::from_ratio(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.exponent(), 0);
        assert_eq!(z.to_string(), "0");

        let i = Dyadic::from_ratio(8, 3); // 8/8 = 1
        assert!(i.is_integer());
        assert_eq!(i.to_string(), "1");
    }

    #[test]
    fn display_and_parse_round_trip() {
        for (p, q) in [(25u64, 4u32), (57, 5), (0, 0), (7, 0), (1, 1), (3, 1)] {
            let d = Dyadic::from_ratio(p, q);
            let back: Dyadic = d.to_string().parse().unwrap();
            assert_eq!(d, back);
        }
        assert_eq!("25/16".parse::<Dyadic>().unwrap(), Dyadic::from_ratio(25, 4));
        assert_eq!("2".parse::<Dyadic>().unwrap(), Dyadic::from_int(2));
        assert!("3/6".parse::<Dyadic>().is_err());
        assert!("x/2".parse::<Dyadic>().is_err());
    }

    #[test]
    fn decimal_rendering_is_exact() {
        assert_eq!(Dyadic::from_ratio(25, 4).to_decimal_string(), "1.5625");
        assert_eq!(Dyadic::from_ratio(1, 1).to_decimal_string(), "0.5");
        assert_eq!(Dyadic::from_ratio(3, 0).to_decimal_string(), "3");
        assert_eq!(Dyadic::from_ratio(1, 5).to_decimal_string(), "0.03125");
    }

    #[test]
    fn floor_neg_log2_cases() {
        // 2^-(j+1) < t <= 2^-j
        assert_eq!(Dyadic::one().floor_neg_log2().unwrap(), 0);
        assert_eq!(Dyadic::from_ratio(1, 1).floor_neg_log2().unwrap(), 1);
        assert_eq!(Dyadic::from_ratio(3, 2).floor_neg_log2().unwrap(), 0); // 3/4
        assert_eq!(Dyadic::from_ratio(1, 2).floor_neg_log2().unwrap(), 2);
        assert_eq!(Dyadic::from_ratio(5, 3).floor_neg_log2().unwrap(), 0); // 5/8
        assert_eq!(Dyadic::from_ratio(3, 3).floor_neg_log2().unwrap(), 1); // 3/8
        assert!(Dyadic::zero().floor_neg_log2().is_err());
        assert!(Dyadic::from_int(2).floor_neg_log2().is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_matches_bigrational(p1 in 0u64..1u64<<40, q1 in 0u32..30,
                                          p2 in 0u64..1u64<<40, q2 in 0u32..30) {
            let a = Dyadic::from_ratio(p1, q1);
            let b = Dyadic::from_ratio(p2, q2);
            let (ra, rb) = (to_rational(&a), to_rational(&b));

            prop_assert_eq!(to_rational(&a.add(&b)), &ra + &rb);
            prop_assert_eq!(a.cmp(&b), ra.cmp(&rb));
            match a.checked_sub(&b) {
                Some(d) => prop_assert_eq!(to_rational(&d), &ra - &rb),
                None => prop_assert!(ra < rb),
            }
            prop_assert_eq!(to_rational(&a.mul_pow2(5)), &ra * BigRational::from_integer(32.into()));
            prop_assert_eq!(to_rational(&a.mul_int(3)), &ra * BigRational::from_integer(3.into()));
        }

        #[test]
        fn floor_neg_log2_matches_float(p in 1u64..1u64<<40, q in 0u32..30) {
            let mut t = Dyadic::from_ratio(p, q);
            if t > Dyadic::one() {
                // fold into (0, 1] by shifting the numerator out
                t = Dyadic::new(BigUint::one(), q);
            }
            let j = t.floor_neg_log2().unwrap();
            // check 2^-(j+1) < t <= 2^-j exactly
            prop_assert!(t <= Dyadic::pow2_neg(j as u32));
            prop_assert!(t > Dyadic::pow2_neg(j as u32 + 1));
        }
    }
}
