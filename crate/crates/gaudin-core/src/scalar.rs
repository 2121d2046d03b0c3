//! Exact scalars: arbitrary-precision rationals and elements of real
//! algebraic extension fields Q(g), where g is a distinguished real root of a
//! monic irreducible polynomial with an isolating interval.
//!
//! Rationals are the field of definition for all coordinates; extension
//! elements appear only in the root-system realizations that need them
//! (dihedral types and H3). A `Scalar` is canonical: an extension element
//! whose higher coefficients are all zero collapses to the rational variant,
//! so equality is structural.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, little-endian coefficient order.
// Internal helpers for minimal polynomials, Sturm chains and field arithmetic.
// ---------------------------------------------------------------------------

fn rp_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rp_is_zero(p: &[Rat]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn rp_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn rp_deriv(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
        .collect()
}

fn rp_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    rp_trim(out)
}

fn rp_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if rp_is_zero(a) || rp_is_zero(b) {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    rp_trim(out)
}

/// Euclidean division; `b` must be nonzero.
fn rp_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = rp_trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = rp_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quo = vec![Rat::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        quo[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let v = bc * &c;
            rem[k + j] -= v;
        }
        rem = rp_trim(rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() - 1 < db {
            break;
        }
    }
    (rp_trim(quo), rem)
}

fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![rp_trim(p.to_vec())];
    let d = rp_trim(rp_deriv(p));
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = rp_divrem(&chain[n - 2], &chain[n - 1]);
        if rp_is_zero(&r) {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

fn sturm_variations(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for p in chain {
        let v = rp_eval(p, x);
        let s = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of the chain's polynomial in (a, b].
fn sturm_count(chain: &[Vec<Rat>], a: &Rat, b: &Rat) -> usize {
    sturm_variations(chain, a) - sturm_variations(chain, b)
}

// ---------------------------------------------------------------------------
// Minimal polynomials of 2cos(2*pi/n).
// ---------------------------------------------------------------------------

/// Chebyshev-like S_k: S_0 = 1, S_1 = x, S_k = x*S_{k-1} - S_{k-2};
/// S_k(2cos t) = sin((k+1)t)/sin(t).
fn cheb_s(k: usize) -> Vec<Rat> {
    let mut prev: Vec<Rat> = vec![Rat::one()];
    if k == 0 {
        return prev;
    }
    let mut cur: Vec<Rat> = vec![Rat::zero(), Rat::one()];
    for _ in 1..k {
        let mut next = vec![Rat::zero()];
        next.extend(cur.iter().cloned());
        let next = rp_sub(&next, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of 2cos(2*pi/n) over Q, for n >= 3. Monic with integer
/// coefficients, degree phi(n)/2. Computed by dividing the product formulas
/// S_{n/2-1} (n even) and S_{(n-1)/2}+S_{(n-3)/2} (n odd), whose roots are
/// exactly the 2cos(2*pi*k/n), by the minimal polynomials of the lower orders.
pub fn two_cos_2pi_over_minpoly(n: u32) -> Vec<Rat> {
    fn go(n: u32, memo: &mut HashMap<u32, Vec<Rat>>) -> Vec<Rat> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut base = if n % 2 == 0 {
            cheb_s((n / 2 - 1) as usize)
        } else {
            let a = cheb_s(((n - 1) / 2) as usize);
            let b = cheb_s(((n - 3) / 2) as usize);
            rp_sub(&a, &b.iter().map(|c| -c).collect::<Vec<_>>())
        };
        for d in 3..n {
            if n % d == 0 {
                let q = go(d, memo);
                let (quo, rem) = rp_divrem(&base, &q);
                assert!(rp_is_zero(&rem), "exact division in minpoly recursion");
                base = quo;
            }
        }
        memo.insert(n, base.clone());
        base
    }
    assert!(n >= 3);
    let mut memo = HashMap::new();
    go(n, &mut memo)
}

// ---------------------------------------------------------------------------
// Extension fields.
// ---------------------------------------------------------------------------

/// A real algebraic extension Q(g): monic irreducible minimal polynomial of
/// degree >= 2 together with an isolating interval pinning down which real
/// root g is. Immutable after construction.
pub struct ExtField {
    symbol: String,
    minpoly: Vec<Rat>,
    lo: Rat,
    hi: Rat,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtField({})", self.symbol)
    }
}

pub enum TwoCos {
    Rational(Rat),
    Algebraic(Arc<ExtField>),
}

impl ExtField {
    /// `minpoly` must be monic of degree >= 2 with no rational roots and
    /// exactly one root in the open interval (lo, hi).
    pub fn new(symbol: &str, minpoly: Vec<Rat>, lo: Rat, hi: Rat) -> Arc<ExtField> {
        let minpoly = rp_trim(minpoly);
        assert!(minpoly.len() >= 3, "extension degree must be >= 2");
        assert!(minpoly.last().unwrap().is_one(), "minimal polynomial must be monic");
        let chain = sturm_chain(&minpoly);
        assert_eq!(
            sturm_count(&chain, &lo, &hi),
            1,
            "interval must isolate exactly one root"
        );
        let s_lo = rp_eval(&minpoly, &lo);
        let s_hi = rp_eval(&minpoly, &hi);
        assert!(!s_lo.is_zero() && !s_hi.is_zero(), "endpoints must not be roots");
        assert!(s_lo.is_negative() != s_hi.is_negative(), "sign change required");
        Arc::new(ExtField { symbol: symbol.to_string(), minpoly, lo, hi })
    }

    /// The value 2cos(pi/m) as a rational or as the generator of Q(2cos(pi/m)).
    pub fn two_cos_pi_over(m: u32) -> TwoCos {
        assert!(m >= 1);
        let p = two_cos_2pi_over_minpoly(2 * m);
        if p.len() == 2 {
            // x + c: root is -c
            return TwoCos::Rational(-p[0].clone());
        }
        let symbol = if m == 5 { "phi".to_string() } else { format!("g{m}") };
        // 2cos(pi/m) is the largest real root; isolate it in (a, 2].
        let chain = sturm_chain(&p);
        let mut a = rat_int(-2);
        let mut b = rat_int(2);
        while sturm_count(&chain, &a, &b) > 1 {
            let mid = (&a + &b) / rat_int(2);
            if sturm_count(&chain, &mid, &b) >= 1 {
                a = mid;
            } else {
                b = mid;
            }
        }
        // Tighten so downstream sign determinations start from a narrow box.
        let (mut lo, mut hi) = (a, b);
        let s_hi = rp_eval(&p, &hi).is_negative();
        for _ in 0..8 {
            let mid = (&lo + &hi) / rat_int(2);
            if rp_eval(&p, &mid).is_negative() == s_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        TwoCos::Algebraic(ExtField::new(&symbol, p, lo, hi))
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[Rat] {
        &self.minpoly
    }

    /// For quadratic fields Q(sqrt(d)), the square-free d; None otherwise.
    pub fn quadratic_sqrt_part(&self) -> Option<Int> {
        if self.degree() != 2 {
            return None;
        }
        let p = &self.minpoly[1];
        let q = &self.minpoly[0];
        let disc = p * p - rat_int(4) * q;
        let n = disc.numer() * disc.denom();
        Some(squarefree_part(n))
    }

    fn refine(&self, lo: &mut Rat, hi: &mut Rat) {
        let mid = (&*lo + &*hi) / rat_int(2);
        let s_mid = rp_eval(&self.minpoly, &mid).is_negative();
        let s_hi = rp_eval(&self.minpoly, hi).is_negative();
        if s_mid == s_hi {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }

    /// f64 approximation of the generator.
    pub fn approx(&self) -> f64 {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        for _ in 0..80 {
            self.refine(&mut lo, &mut hi);
        }
        ((&lo + &hi) / rat_int(2)).to_f64().unwrap_or(f64::NAN)
    }
}

fn squarefree_part(n: Int) -> Int {
    let mut n = n;
    let neg = n.is_negative();
    if neg {
        n = -n;
    }
    let mut out = Int::one();
    let mut p = Int::from(2);
    while &p * &p <= n {
        let mut k = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        if k % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= n;
    if neg {
        out = -out;
    }
    out
}

// ---------------------------------------------------------------------------
// Scalars.
// ---------------------------------------------------------------------------

/// An exact scalar: a rational or an element of a fixed extension field,
/// stored as a reduced polynomial in the generator. Canonical form: if the
/// generator coefficients are all zero the value is the Rat variant, so
/// structural equality is value equality.
#[derive(Clone)]
pub enum Scalar {
    Rat(Rat),
    Ext(Arc<ExtField>, Vec<Rat>),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        Scalar::Rat(rat(n, d))
    }

    pub fn generator(field: &Arc<ExtField>) -> Scalar {
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[1] = Rat::one();
        Scalar::Ext(field.clone(), coeffs)
    }

    fn canonical(field: Arc<ExtField>, coeffs: Vec<Rat>) -> Scalar {
        debug_assert_eq!(coeffs.len(), field.degree());
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            Scalar::Rat(coeffs.into_iter().next().unwrap())
        } else {
            Scalar::Ext(field, coeffs)
        }
    }

    fn lift(field: &Arc<ExtField>, r: &Rat) -> Vec<Rat> {
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[0] = r.clone();
        coeffs
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(..) => None,
        }
    }

    pub fn field(&self) -> Option<&Arc<ExtField>> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(f, _) => Some(f),
        }
    }

    fn binop(&self, other: &Scalar, f: impl Fn(&[Rat], &[Rat], &Arc<ExtField>) -> Vec<Rat>, fr: impl Fn(&Rat, &Rat) -> Rat) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Ext(fld, a), Scalar::Rat(b)) => {
                let b = Scalar::lift(fld, b);
                Scalar::canonical(fld.clone(), f(a, &b, fld))
            }
            (Scalar::Rat(a), Scalar::Ext(fld, b)) => {
                let a = Scalar::lift(fld, a);
                Scalar::canonical(fld.clone(), f(&a, b, fld))
            }
            (Scalar::Ext(fa, a), Scalar::Ext(fb, b)) => {
                assert!(
                    Arc::ptr_eq(fa, fb) || fa.minpoly == fb.minpoly,
                    "scalars from different extension fields"
                );
                Scalar::canonical(fa.clone(), f(a, b, fa))
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.binop(
            other,
            |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect(),
            |a, b| a + b,
        )
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.binop(
            other,
            |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect(),
            |a, b| a - b,
        )
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.binop(other, |a, b, fld| ext_mul(a, b, fld), |a, b| a * b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Ext(f, c) => Scalar::Ext(f.clone(), c.iter().map(|x| -x).collect()),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Ext(fld, c) => {
                let u = ext_inverse(c, fld);
                Scalar::canonical(fld.clone(), u)
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Sign of the real value: -1, 0 or 1. Extension elements are evaluated
    /// by interval arithmetic on the generator's isolating interval, refined
    /// until the sign is decided (always terminates: nonzero by canonicity).
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    0
                } else if r.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Scalar::Ext(fld, coeffs) => {
                let mut lo = fld.lo.clone();
                let mut hi = fld.hi.clone();
                for _ in 0..10_000 {
                    let (elo, ehi) = interval_eval(coeffs, &lo, &hi);
                    if elo.is_positive() {
                        return 1;
                    }
                    if ehi.is_negative() {
                        return -1;
                    }
                    fld.refine(&mut lo, &mut hi);
                }
                unreachable!("sign determination did not converge (zero element escaped canonical form?)")
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Ext(fld, coeffs) => {
                let g = fld.approx();
                let mut acc = 0.0;
                for c in coeffs.iter().rev() {
                    acc = acc * g + c.to_f64().unwrap_or(f64::NAN);
                }
                acc
            }
        }
    }
}

fn ext_mul(a: &[Rat], b: &[Rat], fld: &Arc<ExtField>) -> Vec<Rat> {
    let d = fld.degree();
    let mut prod = vec![Rat::zero(); 2 * d - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            prod[i + j] += ca * cb;
        }
    }
    // reduce modulo the monic minimal polynomial
    for i in (d..prod.len()).rev() {
        if prod[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut prod[i], Rat::zero());
        for j in 0..d {
            let v = &fld.minpoly[j] * &c;
            prod[i - d + j] -= v;
        }
    }
    prod.truncate(d);
    prod
}

/// Multiplicative inverse modulo the minimal polynomial, via extended Euclid.
fn ext_inverse(a: &[Rat], fld: &Arc<ExtField>) -> Vec<Rat> {
    let a = rp_trim(a.to_vec());
    assert!(!a.is_empty(), "division by zero");
    // invariants: r0 = u0*a mod minpoly, r1 = u1*a mod minpoly
    let mut r0 = fld.minpoly.clone();
    let mut r1 = a;
    let mut u0: Vec<Rat> = vec![];
    let mut u1: Vec<Rat> = vec![Rat::one()];
    while !rp_is_zero(&r1) {
        let (q, r) = rp_divrem(&r0, &r1);
        let u = rp_sub(&u0, &rp_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    assert_eq!(r0.len(), 1, "minimal polynomial is irreducible, gcd must be constant");
    let c = r0[0].recip();
    let mut out: Vec<Rat> = u0.iter().map(|x| x * &c).collect();
    out.resize(fld.degree(), Rat::zero());
    out
}

fn interval_eval(coeffs: &[Rat], lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut alo = Rat::zero();
    let mut ahi = Rat::zero();
    for c in coeffs.iter().rev() {
        let p1 = &alo * lo;
        let p2 = &alo * hi;
        let p3 = &ahi * lo;
        let p4 = &ahi * hi;
        let mut nlo = p1.clone();
        let mut nhi = p1;
        for p in [p2, p3, p4] {
            if p < nlo {
                nlo = p.clone();
            }
            if p > nhi {
                nhi = p;
            }
        }
        alo = nlo + c;
        ahi = nhi + c;
    }
    (alo, ahi)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Ext(fa, a), Scalar::Ext(fb, b)) => {
                (Arc::ptr_eq(fa, fb) || fa.minpoly == fb.minpoly) && a == b
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rat(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            Scalar::Ext(_, coeffs) => {
                1u8.hash(state);
                coeffs.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    /// Total order by real value (the distinguished embedding).
    fn cmp(&self, other: &Scalar) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match self.sub(other).sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => fmt_rat(r, f),
            Scalar::Ext(fld, coeffs) => {
                let mut first = true;
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let mag = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if neg {
                        write!(f, "-")?;
                    } else {
                        write!(f, "+")?;
                    }
                    let coeff_is_one = mag.is_one();
                    if i == 0 || !coeff_is_one {
                        if mag.denom().is_one() {
                            write!(f, "{}", mag.numer())?;
                        } else {
                            write!(f, "{}/{}", mag.numer(), mag.denom())?;
                        }
                        if i > 0 {
                            write!(f, "*")?;
                        }
                    }
                    if i == 1 {
                        write!(f, "{}", fld.symbol)?;
                    } else if i > 1 {
                        write!(f, "{}^{}", fld.symbol, i)?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Scalar {
        Scalar::Rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &[Rat]) -> Vec<i64> {
        p.iter()
            .map(|c| {
                assert!(c.denom().is_one());
                c.numer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn minpoly_small_orders() {
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(3)), vec![1, 1]);
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(4)), vec![0, 1]);
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(5)), vec![-1, 1, 1]);
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(6)), vec![-1, 1]);
        // 2cos(pi/5) = golden ratio: x^2 - x - 1
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(10)), vec![-1, -1, 1]);
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(12)), vec![-3, 0, 1]);
        // 2cos(pi/7): x^3 - x^2 - 2x + 1
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(14)), vec![1, -2, -1, 1]);
        assert_eq!(coeffs(&two_cos_2pi_over_minpoly(8)), vec![-2, 0, 1]);
    }

    #[test]
    fn golden_ratio_field() {
        let TwoCos::Algebraic(fld) = ExtField::two_cos_pi_over(5) else {
            panic!("expected algebraic");
        };
        assert_eq!(fld.symbol(), "phi");
        assert_eq!(fld.degree(), 2);
        assert_eq!(fld.quadratic_sqrt_part(), Some(Int::from(5)));
        let phi = Scalar::generator(&fld);
        // phi^2 = phi + 1
        assert_eq!(phi.mul(&phi), phi.add(&Scalar::one()));
        // 1/phi = phi - 1
        assert_eq!(phi.inv(), phi.sub(&Scalar::one()));
        assert!((fld.approx() - 1.618033988749895).abs() < 1e-12);
        assert_eq!(phi.sign(), 1);
        assert_eq!(phi.sub(&Scalar::from_ratio(8, 5)).sign(), 1);
        assert_eq!(phi.sub(&Scalar::from_ratio(13, 8)).sign(), -1);
        assert_eq!(phi.sub(&phi).sign(), 0);
    }

    #[test]
    fn heptagon_field_is_cubic() {
        let TwoCos::Algebraic(fld) = ExtField::two_cos_pi_over(7) else {
            panic!("expected algebraic");
        };
        assert_eq!(fld.degree(), 3);
        assert_eq!(fld.quadratic_sqrt_part(), None);
        let g = Scalar::generator(&fld);
        // g satisfies its minimal polynomial
        let val = g.pow(3).sub(&g.pow(2)).sub(&g.mul(&Scalar::from_int(2))).add(&Scalar::one());
        assert!(val.is_zero());
        assert!((fld.approx() - 2.0 * (std::f64::consts::PI / 7.0).cos()).abs() < 1e-12);
        // arithmetic round trip: (g^2 - 1/3) * its inverse = 1
        let e = g.mul(&g).sub(&Scalar::from_ratio(1, 3));
        assert!(e.mul(&e.inv()).is_one());
    }

    #[test]
    fn rational_two_cos() {
        match ExtField::two_cos_pi_over(3) {
            TwoCos::Rational(r) => assert_eq!(r, rat_int(1)),
            _ => panic!("2cos(pi/3) is rational"),
        }
        match ExtField::two_cos_pi_over(2) {
            TwoCos::Rational(r) => assert_eq!(r, rat_int(0)),
            _ => panic!("2cos(pi/2) is rational"),
        }
    }

    #[test]
    fn ordering_mixed() {
        let TwoCos::Algebraic(fld) = ExtField::two_cos_pi_over(5) else {
            panic!();
        };
        let phi = Scalar::generator(&fld);
        let mut v = vec![
            Scalar::from_int(2),
            phi.clone(),
            Scalar::from_int(1),
            phi.neg(),
            Scalar::from_ratio(13, 8),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, vec!["-phi", "1", "phi", "13/8", "2"]);
    }
}
