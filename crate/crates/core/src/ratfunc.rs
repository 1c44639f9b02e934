//! Exact rational functions in one variable `h`, with powers of `h` kept apart.
//!
//! A value is `h^shift * num / den` where `num` and `den` are integer
//! polynomials with nonzero constant terms, coprime over the rationals, with no
//! common integer factor, and `den` has a positive leading coefficient. This
//! form is unique, so equality of values is equality of representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_parts(0, Poly::constant(c), Poly::one()).expect("nonzero denominator")
    }

    /// `h^k`, any sign of `k`.
    pub fn monomial(k: i64) -> Self {
        RationalFunction {
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_parts(0, p, Poly::one()).expect("nonzero denominator")
    }

    /// Builds and normalizes `h^shift * num / den`.
    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Result<Self> {
        Self::normalize(shift, num, den, true)
    }

    /// Like [`from_parts`](Self::from_parts) for callers that already know
    /// `num` and `den` share no nonconstant factor other than powers of `h`.
    pub(crate) fn from_coprime_parts(shift: i64, num: Poly, den: Poly) -> Result<Self> {
        Self::normalize(shift, num, den, false)
    }

    fn normalize(shift: i64, num: Poly, den: Poly, reduce: bool) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (nl, dl) = (num.low_order(), den.low_order());
        let mut num = num.shr(nl);
        let mut den = den.shr(dl);
        let shift = shift + nl as i64 - dl as i64;

        let g = if reduce { num.gcd(&den) } else { Poly::one() };
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let mut c = num.content().gcd(&den.content());
        if den.lead().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        Ok(RationalFunction { shift, num, den })
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if the function does not depend on `h`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.shift == 0 && self.num.degree() == Some(0) && self.den.degree() == Some(0))
            .then(|| BigRational::new(self.num.coeffs()[0].clone(), self.den.coeffs()[0].clone()))
    }

    /// Degree at infinity: `shift + deg num - deg den`; `None` for zero.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        Some(self.shift + dn - dd)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Self::from_parts(-self.shift, self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if x.is_zero() && self.shift < 0 {
            return None;
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        let hk = if self.shift >= 0 {
            num_traits::pow(x.clone(), self.shift as usize)
        } else {
            num_traits::pow(x.recip(), self.shift.unsigned_abs() as usize)
        };
        Some(hk * self.num.eval(x) / d)
    }

    pub fn to_json(&self) -> Value {
        let strs = |p: &Poly| p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>();
        json!({
            "shift": self.shift,
            "num": strs(&self.num),
            "den": strs(&self.den),
        })
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shl((self.shift - s) as usize);
        let b = rhs.num.shl((rhs.shift - s) as usize);
        let g = self.den.gcd(&rhs.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&a * &db) + &(&b * &da);
        let den = &self.den * &db;
        RationalFunction::from_parts(s, num, den).expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            shift: self.shift,
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::from_parts(
            self.shift + rhs.shift,
            &self.num * &rhs.num,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl fmt::Display for RationalFunction {
    /// `h/(1+h+h^2)`, `-1`, `(1-h)/(h^2*(1+h))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let top = if self.shift > 0 {
            self.num.shl(self.shift as usize)
        } else {
            self.num.clone()
        };
        let bottom_pow = if self.shift < 0 { -self.shift } else { 0 };
        if self.den.is_one() && bottom_pow == 0 {
            return write!(f, "{top}");
        }
        if terms(&top) > 1 {
            write!(f, "({top})/")?;
        } else {
            write!(f, "{top}/")?;
        }
        let hpow = match bottom_pow {
            0 => None,
            1 => Some("h".to_string()),
            k => Some(format!("h^{k}")),
        };
        match (hpow, self.den.is_one()) {
            (Some(hp), true) => write!(f, "{hp}"),
            (Some(hp), false) => write!(f, "({hp}*({}))", self.den),
            (None, _) if terms(&self.den) > 1 => write!(f, "({})", self.den),
            (None, _) => write!(f, "{}", self.den),
        }
    }
}
