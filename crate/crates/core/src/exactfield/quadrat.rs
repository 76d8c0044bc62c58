//! Numbers of the form `a + b·√d` with rational `a`, `b` and `d ∈ {1, 2, 5}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Radicands the toolkit knows how to work in.
pub const RADICANDS: [u32; 3] = [1, 2, 5];

/// Arithmetic operation selector for [`QuadRat::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact element of Q(√d).
///
/// Always kept normalized: both rational parts are in lowest terms with a
/// positive denominator, and for `d = 1` the irrational part is zero. Derived
/// equality and hashing are therefore semantic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
    d: u32,
}

fn check_radicand(d: u32) -> Result<()> {
    if RADICANDS.contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedRadicand(i64::from(d)))
    }
}

/// Exact square root of a non-negative rational, if it is itself rational.
pub(crate) fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let m = x.denom();
    let rn = n.sqrt();
    let rm = m.sqrt();
    if &(&rn * &rn) == n && &(&rm * &rm) == m {
        Some(BigRational::new(rn, rm))
    } else {
        None
    }
}

impl QuadRat {
    /// Builds `a + b·√d`, normalizing the `d = 1` case into `a`.
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Result<Self> {
        check_radicand(d)?;
        Ok(Self::new_unchecked(a, b, d))
    }

    fn new_unchecked(a: BigRational, b: BigRational, d: u32) -> Self {
        if d == 1 {
            QuadRat {
                a: a + b,
                b: BigRational::zero(),
                d,
            }
        } else {
            QuadRat { a, b, d }
        }
    }

    /// Builds the element from four integer components `an/ad + (bn/bd)·√d`.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64, d: u32) -> Result<Self> {
        if ad == 0 || bd == 0 {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        Self::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
            d,
        )
    }

    pub fn rational(a: BigRational, d: u32) -> Result<Self> {
        Self::new(a, BigRational::zero(), d)
    }

    /// Integer `n` as an element of Q(√d).
    ///
    /// # Panics
    /// If `d` is not a supported radicand.
    pub fn int(n: i64, d: u32) -> Self {
        Self::rational(BigRational::from_integer(n.into()), d).expect("unsupported radicand")
    }

    /// The fraction `n/m` in Q(√d).
    ///
    /// # Panics
    /// If `m == 0` or `d` is unsupported.
    pub fn frac(n: i64, m: i64, d: u32) -> Self {
        Self::from_parts(n, m, 0, 1, d).expect("invalid fraction")
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u32) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn zero(d: u32) -> Self {
        Self::int(0, d)
    }

    pub fn one(d: u32) -> Self {
        Self::int(1, d)
    }

    /// Golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        Self::from_parts(1, 2, 1, 2, 5).expect("radicand 5 is supported")
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// Re-expresses a rational-field value in Q(√d). Only `d = 1` values (or
    /// values already in the target field) can be embedded.
    pub fn embed(&self, d: u32) -> Result<Self> {
        check_radicand(d)?;
        if self.d == d {
            return Ok(self.clone());
        }
        if self.d == 1 {
            return Ok(QuadRat {
                a: self.a.clone(),
                b: BigRational::zero(),
                d,
            });
        }
        Err(Error::FieldMix {
            left: self.d,
            right: d,
        })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::FieldMix {
                left: self.d,
                right: other.d,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadRat {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadRat {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = BigRational::from_integer(self.d.into());
        let a = &self.a * &other.a + &self.b * &other.b * d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new_unchecked(a, b, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let inv = other.recip()?;
        self.try_mul(&inv)
    }

    /// Field arithmetic with explicit failure on field mix or division by zero.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.try_add(other),
            ArithOp::Sub => self.try_sub(other),
            ArithOp::Mul => self.try_mul(other),
            ArithOp::Div => self.try_div(other),
        }
    }

    /// `a − b·√d`.
    pub fn conjugate(&self) -> Self {
        QuadRat {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.into())
    }

    /// Multiplicative inverse via the conjugate.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        let n = self.norm();
        Ok(QuadRat {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d,
        })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QuadRat {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d,
        }
    }

    /// Exact sign of `a + b·√d`.
    pub fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with d·b².
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * BigRational::from_integer(self.d.into());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison; fails only on field mix.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        let diff = self.try_sub(other)?;
        Ok(diff.sign().cmp(&0))
    }

    /// Exact comparison of two values known to share a field.
    ///
    /// # Panics
    /// On field mix.
    pub fn cmp_same_field(&self, other: &Self) -> Ordering {
        self.cmp_exact(other).expect("comparison across fields")
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // |b|·√d = √(p·q)/q for b²d = p/q; bracket it with an integer root.
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.into());
        let (p, q) = (b2d.numer(), b2d.denom());
        let s = (p * q).sqrt();
        let lower = if self.b.is_positive() {
            &self.a + BigRational::new(s, q.clone())
        } else {
            &self.a - BigRational::new(s + 1u32, q.clone())
        };
        // The bracket is at most 1 wide, so the floor is n or n + 1.
        let mut n = lower.floor().to_integer();
        let as_q = |n: &BigInt| QuadRat::rational(BigRational::from_integer(n.clone()), self.d).expect("field");
        while as_q(&n).cmp_same_field(self) == Ordering::Greater {
            n -= 1;
        }
        while as_q(&(&n + 1u32)).cmp_same_field(self) != Ordering::Greater {
            n += 1;
        }
        n
    }

    fn to_f64_approx(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * f64::from(self.d).sqrt()
    }

    /// Correctly rounded (round-to-nearest, ties-to-even) `f64` value.
    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return self.a.to_f64().unwrap_or(f64::NAN);
        }
        // An irrational value lies strictly inside [X, X + 1)·2^-k with
        // X = floor(x·2^k). Once X has more than 66 bits, no f64 rounding
        // boundary falls inside that cell, so x rounds like its midpoint.
        let approx = self.to_f64_approx().abs();
        let mut k: i64 = if approx.is_normal() {
            70 - approx.log2().floor() as i64
        } else {
            70
        };
        loop {
            let x = self.scale(&pow2(k)).floor();
            let bits = x.bits() as i64;
            if bits > 66 {
                let mid = BigRational::new(2 * x + 1, BigInt::one()) * pow2(-(k + 1));
                return mid.to_f64().unwrap_or(f64::NAN);
            }
            k += 68 - bits;
        }
    }

    /// Non-negative square root, searched in Q, Q(√2) and Q(√5).
    ///
    /// Returns `None` when the root lies outside all supported fields or the
    /// value is negative.
    pub fn sqrt(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QuadRat::rational(r, self.d).expect("field"));
            }
            // a = e·q² gives q·√e.
            for e in [2u32, 5] {
                if self.d != 1 && self.d != e {
                    continue;
                }
                let q2 = &self.a / BigRational::from_integer(e.into());
                if let Some(q) = rational_sqrt(&q2) {
                    return QuadRat::new(BigRational::zero(), q, e).ok();
                }
            }
            return None;
        }
        // (p + q√d)² = p² + d·q² + 2pq·√d
        let disc = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        for p2 in [(&self.a + &disc) / &two, (&self.a - &disc) / &two] {
            if !p2.is_positive() {
                continue;
            }
            let Some(p) = rational_sqrt(&p2) else {
                continue;
            };
            let q = &self.b / (&two * &p);
            let root = QuadRat::new(p, q, self.d).expect("field");
            if &(&root * &root) == self {
                return Some(root.abs());
            }
        }
        None
    }
}

fn pow2(k: i64) -> BigRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            /// # Panics
            /// On field mix (or division by zero for `Div`).
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("√{}", self.d);
        let b_abs = self.b.abs();
        let b_str = if b_abs.is_one() {
            root
        } else {
            format!("{b_abs}{root}")
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{b_str}"),
            (true, true) => write!(f, "-{b_str}"),
            (false, false) => write!(f, "{}+{b_str}", self.a),
            (false, true) => write!(f, "{}-{b_str}", self.a),
        }
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadRat({self} in Q(√{}))", self.d)
    }
}
