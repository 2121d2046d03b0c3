//! Dense univariate polynomials in the degeneration parameter eps, with
//! coefficients in an exact scalar field.

use std::fmt;

use crate::scalar::Scalar;

/// Guard against runaway degree growth; curve computations stay far below.
pub const DEGREE_CAP: usize = 512;

/// Coefficients little-endian, trimmed: the zero polynomial has no
/// coefficients, otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly::constant(Scalar::one())
    }

    pub fn eps() -> Poly {
        Poly::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Poly {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        assert!(coeffs.len() <= DEGREE_CAP, "polynomial degree cap exceeded");
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Order of vanishing at eps = 0 (index of the lowest nonzero
    /// coefficient); None for the zero polynomial.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn at_zero(&self) -> Scalar {
        self.coeffs.first().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiply by eps^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::from_coeffs(out)
    }

    /// Exact division by eps^k; panics if the order is smaller than k.
    pub fn shift_down(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        assert!(self.ord().map_or(true, |o| o >= k), "inexact division by eps^k");
        if self.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn divrem(&self, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let db = other.coeffs.len() - 1;
        if rem.coeffs.len() <= db {
            return (Poly::zero(), rem);
        }
        let lead_inv = other.leading().unwrap().inv();
        let mut quo = vec![Scalar::zero(); rem.coeffs.len() - db];
        while !rem.is_zero() && rem.coeffs.len() - 1 >= db {
            let k = rem.coeffs.len() - 1 - db;
            let c = rem.leading().unwrap().mul(&lead_inv);
            quo[k] = c.clone();
            let mut coeffs = rem.coeffs;
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[k + j] = coeffs[k + j].sub(&b.mul(&c));
            }
            rem = Poly::from_coeffs(coeffs);
            if rem.coeffs.len() <= db {
                break;
            }
        }
        (Poly::from_coeffs(quo), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "eps")?,
                1 => write!(f, "{c}*eps")?,
                _ if c.is_one() => write!(f, "eps^{i}")?,
                _ => write!(f, "{c}*eps^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
