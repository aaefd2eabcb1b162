//! Exact arithmetic in Q(ζ), where ζ is a primitive sixth root of unity.
//!
//! Elements are stored as `rat + zeta·ζ` with both parts in lowest-terms
//! rationals. Products are reduced with ζ² = ζ − 1, so every element has
//! exactly one representation and structural equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    rat: BigRational,
    zeta: BigRational,
}

impl FieldElement {
    pub fn new(rat: BigRational, zeta: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        FieldElement { rat, zeta }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        FieldElement {
            rat,
            zeta: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The root ζ of t² − t + 1.
    pub fn zeta() -> Self {
        FieldElement {
            rat: BigRational::zero(),
            zeta: BigRational::one(),
        }
    }

    /// The other root ζ̄ = 1 − ζ = 1/ζ.
    pub fn zeta_bar() -> Self {
        FieldElement {
            rat: BigRational::one(),
            zeta: -BigRational::one(),
        }
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn zeta_part(&self) -> &BigRational {
        &self.zeta
    }

    pub fn is_rational(&self) -> bool {
        self.zeta.is_zero()
    }

    /// Image under the nontrivial automorphism ζ ↦ ζ̄.
    pub fn conjugate(&self) -> Self {
        // a + b(1 − ζ) = (a + b) − bζ
        FieldElement {
            rat: &self.rat + &self.zeta,
            zeta: -&self.zeta,
        }
    }

    /// Field norm a² + ab + b², a rational.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat + &self.rat * &self.zeta + &self.zeta * &self.zeta
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(FieldElement {
            rat: c.rat / &n,
            zeta: c.zeta / n,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement {
            rat: BigRational::zero(),
            zeta: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.zeta.is_zero()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            rat: &self.rat + &rhs.rat,
            zeta: &self.zeta + &rhs.zeta,
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            rat: &self.rat - &rhs.rat,
            zeta: &self.zeta - &rhs.zeta,
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        if self.zeta.is_zero() && rhs.zeta.is_zero() {
            return FieldElement::from_rational(&self.rat * &rhs.rat);
        }
        // (a + bζ)(c + dζ) = (ac − bd) + (ad + bc + bd)ζ
        let bd = &self.zeta * &rhs.zeta;
        FieldElement {
            rat: &self.rat * &rhs.rat - &bd,
            zeta: &self.rat * &rhs.zeta + &self.zeta * &rhs.rat + bd,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            rat: -&self.rat,
            zeta: -&self.zeta,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            rat: -self.rat,
            zeta: -self.zeta,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.rat += &rhs.rat;
        self.zeta += &rhs.zeta;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.rat -= &rhs.rat;
        self.zeta -= &rhs.zeta;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

/// Canonical text: `p`, `p/q`, `z`, `-z`, `r/sz`, or `p/q+r/sz` / `p/q-r/sz`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zeta.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let zeta_abs = self.zeta.abs();
        let mag = if zeta_abs.is_one() {
            "z".to_string()
        } else {
            format!("{}z", zeta_abs)
        };
        let neg = self.zeta.is_negative();
        if self.rat.is_zero() {
            if neg {
                write!(f, "-{}", mag)
            } else {
                write!(f, "{}", mag)
            }
        } else {
            write!(f, "{}{}{}", self.rat, if neg { '-' } else { '+' }, mag)
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) if valid_int(d, false) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for FieldElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid field element {:?}", s));
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('z') else {
            return parse_rational(s).map(Self::from_rational).ok_or_else(bad);
        };
        // Split off the ζ coefficient at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (rat_str, zeta_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        if rat_str.is_empty() && zeta_str.starts_with('+') {
            return Err(bad());
        }
        let zeta_str = zeta_str.strip_prefix('+').unwrap_or(zeta_str);
        let zeta = match zeta_str {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t).ok_or_else(bad)?,
        };
        let rat = if rat_str.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rat_str).ok_or_else(bad)?
        };
        Ok(FieldElement { rat, zeta })
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_squared_reduces() {
        let z = FieldElement::zeta();
        assert_eq!(&z * &z, &z - &FieldElement::one());
    }

    #[test]
    fn product_of_conjugate_style_pair() {
        let one = FieldElement::one();
        let z = FieldElement::zeta();
        let lhs = &(&one + &z) * &(&one - &z);
        assert_eq!(lhs, &FieldElement::from_int(2) - &z);
    }

    #[test]
    fn inverses() {
        let z = FieldElement::zeta();
        assert_eq!(z.invert().unwrap(), FieldElement::zeta_bar());
        assert_eq!(FieldElement::one().invert().unwrap(), FieldElement::one());
        let two_plus_z = &FieldElement::from_int(2) + &z;
        let expected = &(&FieldElement::from_int(3) - &z) * &FieldElement::from_ratio(1, 7);
        assert_eq!(two_plus_z.invert().unwrap(), expected);
        assert_eq!(&two_plus_z * &expected, FieldElement::one());
        assert!(matches!(
            FieldElement::zero().invert(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn zeta_times_conjugate_is_one() {
        assert_eq!(
            &FieldElement::zeta() * &FieldElement::zeta_bar(),
            FieldElement::one()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(FieldElement::from_ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(FieldElement::zeta().to_string(), "z");
        assert_eq!(FieldElement::zeta_bar().to_string(), "1-z");
        assert_eq!(
            FieldElement::new(BigRational::new(2.into(), 3.into()), BigRational::new(5.into(), 7.into()))
                .to_string(),
            "2/3+5/7z"
        );
        assert_eq!((-FieldElement::zeta()).to_string(), "-z");
        assert_eq!(FieldElement::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(fe("3"), FieldElement::from_int(3));
        assert_eq!(fe("2/4"), FieldElement::from_ratio(1, 2));
        assert_eq!(fe("z"), FieldElement::zeta());
        assert_eq!(fe("1-z"), FieldElement::zeta_bar());
        assert_eq!(fe("-1/2+3/4z").zeta_part(), &BigRational::new(3.into(), 4.into()));
        assert_eq!(fe("-1/2-3/4z").rat_part(), &BigRational::new((-1).into(), 2.into()));
        assert_eq!(fe("-3z").zeta_part(), &BigRational::from_integer((-3).into()));
        for bad in ["", "z z", "1/0", "abc", "1+", "+1", "1/-2", "--1", "1/2/3", "1+2", "zz", "+z", "1+-2z"] {
            assert!(bad.parse::<FieldElement>().is_err(), "{bad:?} should fail");
        }
    }
}
