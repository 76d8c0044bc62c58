//! Correctly rounded decimal rendering of exact values.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactfield::QuadRat;

fn pow10(e: i64, d: u32) -> QuadRat {
    let ten = BigInt::from(10);
    let p = ten.pow(e.unsigned_abs() as u32);
    let r = if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    };
    QuadRat::rational(r, d).expect("field")
}

/// `x` rounded to `digits` significant digits (round half to even on exact
/// ties), in plain positional notation. Integers print without a decimal
/// point.
pub fn format_significant(x: &QuadRat, digits: usize) -> String {
    if x.is_integer() {
        return x.a().to_integer().to_string();
    }
    let d = x.d();
    let neg = x.sign() < 0;
    let ax = x.abs();

    // Decimal exponent: 10^e <= |x| < 10^(e+1).
    let approx = ax.to_f64();
    let mut e = if approx > 0.0 && approx.is_finite() {
        approx.log10().floor() as i64
    } else {
        0
    };
    while pow10(e, d).cmp_same_field(&ax) == Ordering::Greater {
        e -= 1;
    }
    while pow10(e + 1, d).cmp_same_field(&ax) != Ordering::Greater {
        e += 1;
    }

    let p = digits as i64;
    let y = &ax * &pow10(p - 1 - e, d);
    let mut m = y.floor();
    let rem = &y - &QuadRat::rational(BigRational::from_integer(m.clone()), d).expect("field");
    let half = QuadRat::frac(1, 2, d);
    match rem.cmp_same_field(&half) {
        Ordering::Greater => m += 1,
        Ordering::Equal if (&m % 2u32) == BigInt::one() => m += 1,
        _ => {}
    }
    if m == BigInt::from(10).pow(digits as u32) {
        m = BigInt::from(10).pow(digits as u32 - 1);
        e += 1;
    }

    let s = m.to_string();
    let body = if e >= p - 1 {
        format!("{s}{}", "0".repeat((e - (p - 1)) as usize))
    } else if e >= 0 {
        let (int, frac) = s.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{s}", "0".repeat((-e - 1) as usize))
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Same rendering for a float, using its exact binary value.
pub fn format_f64(x: f64, digits: usize) -> String {
    match BigRational::from_float(x) {
        Some(r) if r.is_zero() => "0".into(),
        Some(r) => format_significant(&QuadRat::rational(r, 1).expect("field"), digits),
        None if x.is_nan() => "nan".into(),
        None if x.is_positive() => "inf".into(),
        None => "-inf".into(),
    }
}
