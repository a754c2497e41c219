//! Exact Gaussian-rational scalars: complex numbers whose real and
//! imaginary parts are arbitrary-precision rationals. Every arithmetic
//! operation is exact; equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse `{0}` as an exact fraction")]
    BadFraction(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_fraction(text: &str) -> Result<BigRational, ScalarError> {
    let t = text.trim();
    let bad = || ScalarError::BadFraction(text.to_string());
    match t.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::ZeroDenominator(text.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(t).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Renders a rational in reduced form, `"p/q"` or `"p"` when q = 1.
pub fn format_fraction(r: &BigRational) -> String {
    r.to_string()
}

/// Convenience constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as a decimal string with the given number of
/// significant digits, rounding half away from zero.
pub fn format_decimal(r: &BigRational, sig_digits: usize) -> String {
    assert!(sig_digits > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let n = a.numer().clone();
    let d = a.denom().clone();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= a < 10^(e+1)
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    let pow10 = |k: u64| ten.pow(k as u32);
    let ge_pow = |k: i64| {
        // a >= 10^k ?
        if k >= 0 {
            n.clone() >= d.clone() * pow10(k as u64)
        } else {
            n.clone() * pow10((-k) as u64) >= d.clone()
        }
    };
    while !ge_pow(e) {
        e -= 1;
    }
    while ge_pow(e + 1) {
        e += 1;
    }

    let render = |digits: &str, e: i64| -> String {
        let int_len = e + 1;
        let body = if int_len >= digits.len() as i64 {
            let mut s = digits.to_string();
            s.push_str(&"0".repeat((int_len - digits.len() as i64) as usize));
            s
        } else if int_len > 0 {
            format!("{}.{}", &digits[..int_len as usize], &digits[int_len as usize..])
        } else {
            format!("0.{}{}", "0".repeat((-int_len) as usize), digits)
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    };

    loop {
        let shift = sig_digits as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (n.clone() * pow10(shift as u64), d.clone())
        } else {
            (n.clone(), d.clone() * pow10((-shift) as u64))
        };
        let m = (BigInt::from(2) * num + &den) / (BigInt::from(2) * den);
        let digits = m.to_string();
        if digits.len() > sig_digits {
            // rounding carried into one more digit; bump the exponent
            e += 1;
            continue;
        }
        return render(&digits, e);
    }
}

/// An exact complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_integer(1)
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        Scalar::new(re, BigRational::zero())
    }

    /// Exact rational `num/den` as a real scalar.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::real(rat(num, den))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Division by a nonzero real rational, componentwise.
    pub fn div_real(&self, r: &BigRational) -> Self {
        assert!(!r.is_zero(), "division by zero");
        Scalar::new(&self.re / r, &self.im / r)
    }

    pub fn parse(re: &str, im: &str) -> Result<Self, ScalarError> {
        Ok(Scalar::new(parse_fraction(re)?, parse_fraction(im)?))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag_part(r: &BigRational) -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else if r.is_integer() {
                format!("{}i", r)
            } else {
                format!("({})i", r)
            }
        }
        if self.is_zero() {
            write!(f, "0")
        } else if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", imag_part(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}", self.re, imag_part(&self.im.abs()))
        } else {
            write!(f, "{}+{}", self.re, imag_part(&self.im))
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "division by zero scalar");
        let c = rhs.conj();
        let p = self * &c;
        Scalar::new(p.re / &n, p.im / &n)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Scalar", 2)?;
        s.serialize_field("re", &format_fraction(&self.re))?;
        s.serialize_field("im", &format_fraction(&self.im))?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Complex { re: String, im: String },
    Plain(String),
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let parsed = match repr {
            ScalarRepr::Complex { re, im } => Scalar::parse(&re, &im),
            ScalarRepr::Plain(s) => parse_fraction(&s).map(Scalar::real),
        };
        parsed.map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_parsing_round_trips() {
        for s in ["0", "1", "-3", "1/2", "-7/3", "10/4"] {
            let r = parse_fraction(s).unwrap();
            let back = parse_fraction(&format_fraction(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(parse_fraction("10/4").unwrap(), rat(5, 2));
        assert!(matches!(
            parse_fraction("1/0"),
            Err(ScalarError::ZeroDenominator(_))
        ));
        assert!(parse_fraction("x").is_err());
        assert!(parse_fraction("1/2/3").is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Scalar::from_ratio(1, 3);
        let b = Scalar::from_ratio(1, 6);
        assert_eq!(&a + &b, Scalar::from_ratio(1, 2));
        assert_eq!(&a - &b, Scalar::from_ratio(1, 6));
        let z = Scalar::new(rat(1, 2), rat(1, 2));
        assert_eq!(&z * &z.conj(), Scalar::real(z.norm_sqr()));
        assert_eq!(&(&z * &z) / &z, z);
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_integer(-1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(Scalar::new(rat(1, 2), rat(-1, 3)).to_string(), "1/2-(1/3)i");
        assert_eq!(Scalar::new(rat(2, 1), rat(3, 1)).to_string(), "2+3i");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(format_decimal(&rat(1, 2), 3), "0.500");
        assert_eq!(format_decimal(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(format_decimal(&rat(2, 7), 12), "0.285714285714");
        assert_eq!(format_decimal(&rat(1000, 1), 3), "1000");
        assert_eq!(format_decimal(&rat(999, 1000), 2), "1.0");
        assert_eq!(format_decimal(&BigRational::zero(), 5), "0");
    }

    #[test]
    fn serde_object_and_plain_string() {
        let z = Scalar::new(rat(1, 2), rat(-2, 3));
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"re":"1/2","im":"-2/3"}"#);
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        let plain: Scalar = serde_json::from_str(r#""3/4""#).unwrap();
        assert_eq!(plain, Scalar::from_ratio(3, 4));
    }
}
