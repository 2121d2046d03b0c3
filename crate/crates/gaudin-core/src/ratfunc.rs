//! Univariate rational functions of the degeneration parameter eps,
//! normalized so that numerator and denominator are coprime and the
//! denominator is monic. These carry "limits as z approaches the hyperplanes":
//! evaluation at eps = 0 is exact and poles are reported, never approximated.

use std::fmt;

use crate::matrix::Field;
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Limit {
    Finite(Scalar),
    Infinite,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lead_inv = den.leading().unwrap().inv();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.monic(),
        }
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn eps() -> RatFunc {
        RatFunc {
            num: Poly::eps(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Scalar) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "division by zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        self.mul(&other.inv())
    }

    /// Order of vanishing at eps = 0 (negative at a pole); None for zero.
    pub fn ord(&self) -> Option<i64> {
        let n = self.num.ord()? as i64;
        let d = self.den.ord().expect("nonzero denominator") as i64;
        Some(n - d)
    }

    /// Multiply by eps^k (k may be negative).
    pub fn shift(&self, k: i64) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        if k >= 0 {
            RatFunc::new(self.num.shift_up(k as usize), self.den.clone())
        } else {
            RatFunc::new(self.num.clone(), self.den.shift_up((-k) as usize))
        }
    }

    /// Exact value at eps = 0, with removable singularities already cancelled
    /// by the coprime normal form; a remaining pole is reported as Infinite.
    pub fn limit_at_zero(&self) -> Limit {
        let d0 = self.den.at_zero();
        if d0.is_zero() {
            // gcd(num, den) = 1, so the numerator cannot also vanish at 0
            Limit::Infinite
        } else {
            Limit::Finite(self.num.at_zero().div(&d0))
        }
    }

    /// Exact evaluation at a scalar point; None where the denominator
    /// vanishes.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x).div(&d))
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        RatFunc::div(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
