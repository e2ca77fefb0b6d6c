//! Field arithmetic on values that become undefined after a division by
//! zero, so that table conditions can be written as plain formulas.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::field::{Field, GaloisField};
use crate::poly::conjugate_product;

#[derive(Clone, Copy)]
pub struct Ex<'a> {
    f: &'a GaloisField,
    v: Option<u32>,
}

impl std::fmt::Debug for Ex<'_> {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.v {
            Some(v) => write!(fm, "{}", self.f.format_elem(&v)),
            None => fm.write_str("undefined"),
        }
    }
}

pub trait Operand<'a> {
    fn into_ex(self, f: &'a GaloisField) -> Ex<'a>;
}

impl<'a> Operand<'a> for Ex<'a> {
    fn into_ex(self, _: &'a GaloisField) -> Ex<'a> {
        self
    }
}

impl<'a> Operand<'a> for i64 {
    fn into_ex(self, f: &'a GaloisField) -> Ex<'a> {
        Ex::int(f, self)
    }
}

impl<'a> Ex<'a> {
    pub fn new(f: &'a GaloisField, v: u32) -> Self {
        Ex { f, v: Some(v) }
    }

    pub fn int(f: &'a GaloisField, n: i64) -> Self {
        Ex { f, v: Some(f.from_i64(n)) }
    }

    pub fn value(self) -> Option<u32> {
        self.v
    }

    fn pair(self, other: impl Operand<'a>) -> Option<(u32, u32)> {
        Some((self.v?, other.into_ex(self.f).v?))
    }

    /// Equality; false when either side is undefined.
    pub fn is(self, other: impl Operand<'a>) -> bool {
        self.pair(other).is_some_and(|(a, b)| a == b)
    }

    /// Inequality; false when either side is undefined.
    pub fn isnt(self, other: impl Operand<'a>) -> bool {
        self.pair(other).is_some_and(|(a, b)| a != b)
    }

    pub fn zero(self) -> bool {
        self.is(0)
    }

    pub fn nonzero(self) -> bool {
        self.isnt(0)
    }

    pub fn sq(self) -> Self {
        self * self
    }

    pub fn cube(self) -> Self {
        self * self * self
    }

    /// `p(u + v s) p(u - v s)` with `s^2 = d`; `coeffs` start at the constant term.
    pub fn conjugate_product(coeffs: &[Ex<'a>], u: Ex<'a>, v: Ex<'a>, d: Ex<'a>) -> Ex<'a> {
        let f = u.f;
        let vals: Option<Vec<u32>> = coeffs.iter().map(|c| c.v).collect();
        let v = match (vals, u.v, v.v, d.v) {
            (Some(cs), Some(u), Some(v), Some(d)) => Some(conjugate_product(f, &cs, &u, &v, &d)),
            _ => None,
        };
        Ex { f, v }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl<'a, R: Operand<'a>> $tr<R> for Ex<'a> {
            type Output = Ex<'a>;
            fn $m(self, rhs: R) -> Ex<'a> {
                let f = self.f;
                let op: fn(&GaloisField, u32, u32) -> Option<u32> = $op;
                Ex { f, v: self.pair(rhs).and_then(|(a, b)| op(f, a, b)) }
            }
        }

        impl<'a> $tr<Ex<'a>> for i64 {
            type Output = Ex<'a>;
            fn $m(self, rhs: Ex<'a>) -> Ex<'a> {
                Ex::int(rhs.f, self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |f, a, b| Some(f.add(&a, &b)));
binop!(Sub, sub, |f, a, b| Some(f.sub(&a, &b)));
binop!(Mul, mul, |f, a, b| Some(f.mul(&a, &b)));
binop!(Div, div, |f, a, b| f.div(&a, &b).ok());

impl<'a> Neg for Ex<'a> {
    type Output = Ex<'a>;
    fn neg(self) -> Ex<'a> {
        Ex { f: self.f, v: self.v.map(|a| self.f.neg(&a)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_undefined_values() {
        let f = GaloisField::prime(7).unwrap();
        let x = Ex::new(&f, 3);
        assert!((x + 4).zero());
        assert!((1 / x).is(5));
        assert!((Ex::int(&f, 1) / 3).is(5));
        let bad = x / 0;
        assert!(!bad.is(0) && !bad.isnt(0));
        assert!(!(bad + 1).nonzero());
        assert!((-x).is(4));
        assert!(x.sq().is(2) && x.cube().is(6));
    }
}
