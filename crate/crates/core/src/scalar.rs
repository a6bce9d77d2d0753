//! Exact rational scalars and coordinate vectors.
//!
//! Every quantity in this crate is a `Scalar` (an arbitrary-precision
//! rational kept in canonical form: lowest terms, denominator positive)
//! or a dense coordinate vector of scalars. No floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n/d`. Panics on `d == 0`; use [`parse_scalar`] for untrusted input.
pub fn frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    BigRational::zero()
}

pub fn one() -> Scalar {
    BigRational::one()
}

/// Parses `"p"` or `"p/q"` with optional sign. The result is canonicalized,
/// so `"2/4"` and `"1/2"` denote the same scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Serde adapter: a `Vec<Scalar>` as an array of canonical `"p"`/`"p/q"`
/// strings, for readable structured reports.
pub mod serde_scalars {
    use super::{format_scalar, parse_scalar, Scalar};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_scalar))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Scalar>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_scalar(t).map_err(D::Error::custom))
            .collect()
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise (q > 0, lowest terms).
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn vec_zero(n: usize) -> Vec<Scalar> {
    vec![zero(); n]
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(k: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| k * x).collect()
}

/// `dst += k * src`, the workhorse of every multilinear evaluation.
pub fn vec_axpy(dst: &mut [Scalar], k: &Scalar, src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

pub fn vec_add_assign(dst: &mut [Scalar], src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s;
        }
    }
}

pub fn vec_sub_assign(dst: &mut [Scalar], src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= s;
        }
    }
}

/// Standard basis vector e_i in dimension n.
pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    debug_assert!(i < n);
    let mut v = vec_zero(n);
    v[i] = one();
    v
}

pub fn format_vector(v: &[Scalar]) -> String {
    let body: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", body.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(parse_scalar("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert_eq!(parse_scalar("-0").unwrap(), zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("a/b").is_err());
        assert!(matches!(parse_scalar("1/0"), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "-3", "1/2", "-7/3", "22"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&x), s);
            assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        }
    }

    #[test]
    fn axpy_accumulates() {
        let mut acc = vec_zero(3);
        vec_axpy(&mut acc, &int(2), &[int(1), int(0), int(-1)]);
        vec_axpy(&mut acc, &frac(1, 2), &[int(4), int(2), int(0)]);
        assert_eq!(acc, vec![int(4), int(1), int(-2)]);
    }
}
