use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{AlbertError, Result};

/// A complex number `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(re.into(), im.into())
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|²`, exact.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    /// `1/z`. Panics on zero.
    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        self.conj().scale(&n.recip())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // canonical exact form "a/b+c/d i"
        let re = format!("{}/{}", self.re.numer(), self.re.denom());
        let im = format!("{}/{}", self.im.numer(), self.im.denom());
        if self.im.is_negative() {
            write!(f, "{re}{im} i")
        } else {
            write!(f, "{re}+{im} i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl FromStr for GaussianRational {
    type Err = AlbertError;

    /// Parses `"a/b+c/d i"`, `"a/b-c/d i"`, `"c/d i"` or `"a/b"`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = t.strip_suffix('i') {
            // split at the last sign that is not the leading one
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(k, _)| k)
                .last();
            let (re, im) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                other => other.strip_prefix('+').unwrap_or(other),
            };
            Ok(Self::new(re.parse()?, im.parse()?))
        } else {
            Ok(Self::real(t.parse()?))
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_conjugation() {
        let z = GaussianRational::new(Rational::new(1, 2), Rational::from_int(3));
        let w = GaussianRational::from_ints(-2, 1);
        let zw = &z * &w;
        assert_eq!(zw, GaussianRational::new(Rational::from_int(-4), Rational::new(-11, 2)));
        assert_eq!((&z * &w).conj(), &z.conj() * &w.conj());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&z * &z.recip(), GaussianRational::one());
    }

    #[test]
    fn string_round_trip() {
        for s in ["1/2+3/1 i", "-1/3-2/5 i", "0/1+0/1 i"] {
            let z: GaussianRational = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        assert_eq!("-i".parse::<GaussianRational>().unwrap(), GaussianRational::from_ints(0, -1));
        assert_eq!("2/3".parse::<GaussianRational>().unwrap(), GaussianRational::real(Rational::new(2, 3)));
        assert_eq!("-1-1/2i".parse::<GaussianRational>().unwrap(), GaussianRational::new((-1).into(), Rational::new(-1, 2)));
    }
}
