//! Exact scalars: rationals extended by the imaginary unit.
//!
//! Every numeric constant in the library lives in Q(i). The real and
//! imaginary parts are arbitrary-precision rationals kept in lowest terms
//! by `num_rational`, so equality is canonical-form equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Gaussian rational a + b·i with exact rational a, b.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// n/d as a real Gaussian rational. Panics on d = 0.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Gaussian::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        )
    }

    /// n/d · i.
    pub fn ratio_i(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Gaussian::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(n), BigInt::from(d)),
        )
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

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = z · conj(z), a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm_sq();
        Gaussian::new(&self.re / &n, -&self.im / &n)
    }

    /// Renders like "3/2", "-i", "1+1/2*i", "0"; inverse of `parse`.
    pub fn to_exact_string(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        if !self.re.is_zero() {
            s.push_str(&rat(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                s.push('+');
            }
            if self.im.is_one() {
                s.push_str("i");
            } else if (-self.im.clone()).is_one() {
                s.push_str("-i");
            } else {
                s.push_str(&rat(&self.im));
                s.push_str("*i");
            }
        }
        s
    }

    /// Parses the `to_exact_string` format.
    pub fn parse(s: &str) -> Option<Self> {
        fn rat(s: &str) -> Option<BigRational> {
            let s = s.trim();
            if let Some((n, d)) = s.split_once('/') {
                Some(BigRational::new(n.parse().ok()?, d.parse().ok()?))
            } else {
                Some(BigRational::from_integer(s.parse().ok()?))
            }
        }
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        // split off an imaginary tail if present
        if let Some(body) = s.strip_suffix("i") {
            let body = body.trim_end();
            let body = body.strip_suffix('*').unwrap_or(body).trim_end();
            // find the split between real part and imaginary coefficient:
            // scan for a '+'/'-' that is not leading and not after '/'
            let bytes = body.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
                    split = Some(idx);
                    break;
                }
            }
            match split {
                Some(idx) => {
                    let re = rat(&body[..idx])?;
                    let sign = if bytes[idx] == b'-' { -1 } else { 1 };
                    let tail = body[idx + 1..].trim();
                    let mag = if tail.is_empty() { BigRational::one() } else { rat(tail)? };
                    Some(Gaussian::new(re, mag * BigRational::from_integer(sign.into())))
                }
                None => {
                    let im = if body.is_empty() {
                        BigRational::one()
                    } else if body == "-" {
                        -BigRational::one()
                    } else {
                        rat(body)?
                    };
                    Some(Gaussian::new(BigRational::zero(), im))
                }
            }
        } else {
            Some(Gaussian::new(rat(s)?, BigRational::zero()))
        }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl<'a> Add<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn add(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(self.re + &o.re, self.im + &o.im)
    }
}

impl AddAssign for Gaussian {
    fn add_assign(&mut self, o: Gaussian) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl SubAssign for Gaussian {
    fn sub_assign(&mut self, o: Gaussian) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        &self * &o
    }
}

impl<'a, 'b> Mul<&'b Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl MulAssign for Gaussian {
    fn mul_assign(&mut self, o: Gaussian) {
        *self = &*self * &o;
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, o: Gaussian) -> Gaussian {
        &self * &o.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_inverse() {
        let z = Gaussian::ratio(3, 4) + Gaussian::ratio_i(-2, 5);
        let w = z.clone() * z.clone().inv();
        assert!(w.is_one());
        assert_eq!(z.clone().conj().conj(), z);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Gaussian::i() * Gaussian::i(), Gaussian::from_int(-1));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "1", "-3/2", "i", "-i", "1+1/2*i", "-2/3-5*i", "7*i"] {
            let z = Gaussian::parse(s).unwrap();
            assert_eq!(Gaussian::parse(&z.to_exact_string()).unwrap(), z, "{s}");
        }
    }
}
