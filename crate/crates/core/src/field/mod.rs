//! Exact scalar fields: prime fields, their extensions and the rationals.
//!
//! Every field hands out plain element values (`u32` indices for finite
//! fields, reduced fractions for Q) and performs all arithmetic itself, so
//! elements stay cheap to copy and compare.

mod embed;
mod galois;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use embed::{embed, Embedding};
pub use galois::{GaloisField, MAX_FIELD_ORDER};
pub use rational::Rationals;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime")]
    NonPrimeCharacteristic(u64),
    #[error("extensions of the rationals are not supported")]
    UnsupportedRationalExtension,
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {0} does not embed into {1}")]
    IncompatibleFields(String, String),
    #[error("{0} is infinite")]
    InfiniteField(String),
    #[error("modulus {0:?} is not a monic irreducible polynomial of degree {1}")]
    BadModulus(Vec<u32>, u32),
    #[error("field of order {0} exceeds the supported bound {MAX_FIELD_ORDER}")]
    FieldTooLarge(u128),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl FieldError {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        FieldError::Parse { what, input: input.to_string() }
    }
}

/// An exact field together with its element representation.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Ord + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// All elements in canonical order.
    fn elements(&self) -> Result<Vec<Self::Elem>, FieldError>;
    /// Distinct roots of a nonzero polynomial (constant term first), ascending.
    fn roots_of(&self, coeffs: &[Self::Elem]) -> Vec<Self::Elem>;

    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError>;
    /// Text form accepted by [`parse_field`].
    fn spec(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// A parsed field of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Finite(GaloisField),
    Rational(Rationals),
}

/// Parses `gf(p)`, `gf(p,k)`, `gf(p,k;c0,...,ck)` or `q`.
pub fn parse_field(text: &str) -> Result<AnyField, FieldError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = t.to_ascii_lowercase();
    if lower == "q" {
        return Ok(AnyField::Rational(Rationals));
    }
    let inner = lower
        .strip_prefix("gf(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| FieldError::parse("field", text))?;
    let (head, modulus) = match inner.split_once(';') {
        Some((h, m)) => (h, Some(m)),
        None => (inner, None),
    };
    let nums: Vec<u64> = head
        .split(',')
        .map(|s| s.parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| FieldError::parse("field", text))?;
    let (p, k) = match nums.as_slice() {
        [p] => (*p, 1),
        [p, k] => (*p, *k),
        _ => return Err(FieldError::parse("field", text)),
    };
    if p == 0 {
        return if k == 1 {
            Ok(AnyField::Rational(Rationals))
        } else {
            Err(FieldError::UnsupportedRationalExtension)
        };
    }
    let k = u32::try_from(k).map_err(|_| FieldError::parse("field", text))?;
    match modulus {
        None => Ok(AnyField::Finite(GaloisField::new(p, k)?)),
        Some(m) => {
            let coeffs: Vec<u32> = m
                .split(',')
                .map(|s| s.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| FieldError::parse("modulus", text))?;
            let f = GaloisField::with_modulus(p, &coeffs)?;
            if f.degree() != k {
                return Err(FieldError::BadModulus(coeffs, k));
            }
            Ok(AnyField::Finite(f))
        }
    }
}

/// Convenience for finite-only call sites.
pub fn parse_finite_field(text: &str) -> Result<GaloisField, FieldError> {
    match parse_field(text)? {
        AnyField::Finite(f) => Ok(f),
        AnyField::Rational(_) => Err(FieldError::InfiniteField("q".into())),
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
