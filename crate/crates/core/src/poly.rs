//! Univariate polynomials, root finding, splitting fields and the cubic
//! root-count classifier.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{embed, Embedding, Field, FieldError, GaloisField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("splitting fields over the rationals are not supported")]
    RationalSplittingUnsupported,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Dense polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct UPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.format(), self.field.spec())
    }
}

impl<F: Field> UPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &F) -> Self {
        UPoly { field: field.clone(), coeffs: vec![] }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monic linear polynomial `y - r`.
    pub fn linear_root(field: &F, r: &F::Elem) -> Self {
        Self::new(field, vec![field.neg(r), field.one()])
    }

    /// Parses `c0,c1,...`.
    pub fn parse(field: &F, text: &str) -> Result<Self, FieldError> {
        let coeffs = text
            .split(',')
            .map(|s| field.parse_elem(s.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(field, coeffs))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(f, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f));
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Ok(Self::new(f, c))
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|c| f.mul(c, k)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        Self::new(f, c)
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.check(d)?;
        let f = &self.field;
        let dl = d.leading().ok_or(PolyError::Field(FieldError::DivisionByZero))?;
        let dl_inv = f.inv(dl)?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(&r[i], &dl_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = f.sub(&r[i - dd + j], &f.mul(&c, dc));
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(f, q), Self::new(f, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        Ok(self.divrem(d)?.1)
    }

    /// Human-readable form in the variable `y`, highest degree first.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                let mut s = f.format_elem(c);
                if s.contains(['+', '-']) && i > 0 {
                    s = format!("({s})");
                }
                match (i, s.as_str()) {
                    (0, _) => s,
                    (1, "1") => "y".into(),
                    (1, _) => format!("{s}*y"),
                    (_, "1") => format!("y^{i}"),
                    _ => format!("{s}*y^{i}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(f: &UPoly<F>, g: &UPoly<F>) -> Result<UPoly<F>, PolyError> {
    f.check(g)?;
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Roots of a polynomial in its own field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSet<E> {
    /// The zero polynomial vanishes everywhere.
    AllElements,
    Roots(Vec<E>),
}

pub fn roots_in_field<F: Field>(f: &UPoly<F>) -> RootSet<F::Elem> {
    if f.is_zero() {
        RootSet::AllElements
    } else {
        RootSet::Roots(f.field.roots_of(&f.coeffs))
    }
}

/// A polynomial's splitting field together with its roots there.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub field: GaloisField,
    /// Base field into `field`.
    pub embedding: Embedding,
    pub roots: Vec<u32>,
}

type SplitCache = Mutex<HashMap<((u32, Vec<u32>), Vec<u32>), Arc<Splitting>>>;

fn split_cache() -> &'static SplitCache {
    static C: OnceLock<SplitCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

impl UPoly<GaloisField> {
    /// Image under a field embedding.
    pub fn map(&self, e: &Embedding) -> UPoly<GaloisField> {
        UPoly::new(e.dst(), self.coeffs.iter().map(|&c| e.apply(c)).collect())
    }

    fn powmod(&self, mut exp: u64, m: &Self) -> Result<Self, PolyError> {
        let f = &self.field;
        let mut base = self.rem(m)?;
        let mut acc = UPoly::constant(f, f.one()).rem(m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            base = base.mul(&base)?.rem(m)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Least common multiple of the degrees of the irreducible factors.
    pub fn splitting_degree(&self) -> Result<u32, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let f = &self.field;
        let q = f.size() as u64;
        let x = UPoly::new(f, vec![f.zero(), f.one()]);
        let mut rest = self.monic();
        let mut h = x.clone();
        let mut lcm = 1u32;
        let mut d = 0u32;
        while rest.degree().unwrap_or(0) > 0 {
            d += 1;
            h = h.powmod(q, self)?;
            let g = poly_gcd(&rest, &h.sub(&x)?)?;
            if g.degree().unwrap_or(0) > 0 {
                lcm = num_integer::lcm(lcm, d);
                let mut cur = rest;
                loop {
                    let c = poly_gcd(&cur, &g)?;
                    if c.degree().unwrap_or(0) == 0 {
                        break;
                    }
                    cur = cur.divrem(&c)?.0;
                }
                rest = cur;
            }
        }
        Ok(lcm)
    }
}

/// Smallest extension of the coefficient field in which `f` splits, with
/// all distinct roots there. Results are memoized.
pub fn splitting_field(f: &UPoly<GaloisField>) -> Result<Arc<Splitting>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let base = f.field();
    let m = f.monic();
    let key = (base.key(), m.coeffs.clone());
    if let Some(s) = split_cache().lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let deg = m.splitting_degree()?;
    let (field, embedding) = if deg == 1 {
        (base.clone(), Embedding::identity(base))
    } else {
        let big = GaloisField::new(base.p() as u64, base.degree() * deg)?;
        let e = embed(base, &big)?;
        (big, e)
    };
    let lifted = m.map(&embedding);
    let roots = match roots_in_field(&lifted) {
        RootSet::Roots(r) => r,
        RootSet::AllElements => unreachable!("nonzero polynomial"),
    };
    let s = Arc::new(Splitting { field, embedding, roots });
    split_cache().lock().unwrap().insert(key, s.clone());
    Ok(s)
}

/// Number of distinct roots over a root-closed field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CountCategory {
    Zero,
    One,
    Two,
    Three,
    Infinite,
}

impl CountCategory {
    pub fn from_count(n: usize) -> Option<Self> {
        [Self::Zero, Self::One, Self::Two, Self::Three].get(n).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::Two => "2",
            Self::Three => "3",
            Self::Infinite => "inf",
        }
    }
}

impl fmt::Display for CountCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Zero => "Zero",
            Self::One => "One",
            Self::Two => "Two",
            Self::Three => "Three",
            Self::Infinite => "Infinite",
        };
        f.write_str(s)
    }
}

/// `p(u + v s) * p(u - v s)` where `s^2 = d`, computed as a norm from
/// `F[s]/(s^2 - d)` so no square root has to exist in `F`.
pub fn conjugate_product<F: Field>(
    field: &F,
    coeffs: &[F::Elem],
    u: &F::Elem,
    v: &F::Elem,
    d: &F::Elem,
) -> F::Elem {
    let f = field;
    let mul = |(a1, b1): (F::Elem, F::Elem), (a2, b2): (&F::Elem, &F::Elem)| {
        let re = f.add(&f.mul(&a1, a2), &f.mul(&f.mul(&b1, b2), d));
        let im = f.add(&f.mul(&a1, b2), &f.mul(&b1, a2));
        (re, im)
    };
    let (mut re, mut im) = (f.zero(), f.zero());
    for c in coeffs.iter().rev() {
        (re, im) = mul((re, im), (u, v));
        re = f.add(&re, c);
    }
    f.sub(&f.mul(&re, &re), &f.mul(&f.mul(&im, &im), d))
}

/// Distinct-root count of `a y^3 + b y^2 + c y + d` over the root-closed
/// field, by the characteristic-specific criteria (characteristic 0 is
/// handled with the generic branch).
pub fn classify_cubic<F: Field>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> CountCategory {
    use CountCategory::*;
    let f = field;
    let z = |x: &F::Elem| f.is_zero(x);
    let k = |n: i64| f.from_i64(n);
    let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    let ch = f.characteristic();
    if z(a) {
        if z(b) && z(c) {
            return if z(d) { Infinite } else { Zero };
        }
        if z(b) {
            return One;
        }
        let disc = match ch {
            2 => return if z(c) { One } else { Two },
            3 => f.sub(&m(c, c), &m(b, d)),
            _ => f.sub(&m(c, c), &m(&k(4), &m(b, d))),
        };
        return if z(&disc) { One } else { Two };
    }
    let p = [d.clone(), c.clone(), b.clone(), a.clone()];
    let eval = |y: &F::Elem| p.iter().rev().fold(f.zero(), |acc, co| f.add(&m(&acc, y), co));
    match ch {
        2 => {
            let adbc = f.sub(&m(a, d), &m(b, c));
            let acbb = f.sub(&m(a, c), &m(b, b));
            match (z(&adbc), z(&acbb)) {
                (true, true) => One,
                (true, false) => Two,
                (false, _) => Three,
            }
        }
        3 => {
            if z(b) {
                return if z(c) { One } else { Three };
            }
            let y = f.div(c, b).expect("b is nonzero");
            if z(&eval(&y)) {
                Two
            } else {
                Three
            }
        }
        _ => {
            let disc = f.sub(&m(b, b), &m(&k(3), &m(a, c)));
            let e = f.sub(&m(b, c), &m(&k(9), &m(a, d)));
            if z(&disc) && z(&e) {
                return One;
            }
            let inv3a = f.inv(&m(&k(3), a)).expect("a is nonzero");
            let u = f.neg(&m(b, &inv3a));
            let prod = conjugate_product(f, &p, &u, &inv3a, &disc);
            if z(&prod) {
                Two
            } else {
                Three
            }
        }
    }
}

/// Distinct-root count over the splitting field; `Infinite` for zero.
pub fn closed_root_count(f: &UPoly<GaloisField>) -> Result<CountCategory, PolyError> {
    if f.is_zero() {
        return Ok(CountCategory::Infinite);
    }
    let n = splitting_field(f)?.roots.len();
    Ok(CountCategory::from_count(n).unwrap_or(CountCategory::Three))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn gf(p: u64) -> GaloisField {
        GaloisField::prime(p).unwrap()
    }

    fn poly(f: &GaloisField, c: &[i64]) -> UPoly<GaloisField> {
        UPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn gcd_examples() {
        let f5 = gf(5);
        let g = poly_gcd(&poly(&f5, &[-1, 0, 1]), &poly(&f5, &[-1, 1])).unwrap();
        assert_eq!(g, poly(&f5, &[-1, 1]));
        let f7 = gf(7);
        let g = poly_gcd(&poly(&f7, &[-1, 0, 0, 1]), &poly(&f7, &[1, 1, 1])).unwrap();
        assert_eq!(g, poly(&f7, &[1, 1, 1]));
        assert!(poly_gcd(&UPoly::zero(&f7), &UPoly::zero(&f7)).unwrap().is_zero());
        assert_eq!(poly_gcd(&poly(&f5, &[1]), &poly(&f7, &[1])), Err(PolyError::FieldMismatch));
    }

    #[test]
    fn roots_examples() {
        let f11 = gf(11);
        assert_eq!(roots_in_field(&poly(&f11, &[0, 0, 3])), RootSet::Roots(vec![0]));
        assert_eq!(roots_in_field(&poly(&f11, &[-1, 0, 3])), RootSet::Roots(vec![2, 9]));
        assert_eq!(roots_in_field(&poly(&gf(2), &[1, 1, 1])), RootSet::Roots(vec![]));
        assert_eq!(roots_in_field(&UPoly::zero(&f11)), RootSet::AllElements);
    }

    #[test]
    fn splitting_examples() {
        let f2 = gf(2);
        let s = splitting_field(&poly(&f2, &[1, 1, 1])).unwrap();
        assert_eq!(s.field, GaloisField::new(2, 2).unwrap());
        assert_eq!(s.roots, vec![2, 3]);
        let f5 = gf(5);
        let s = splitting_field(&poly(&f5, &[-3, 1])).unwrap();
        assert_eq!((s.field.clone(), s.roots.clone()), (f5.clone(), vec![3]));
        let s = splitting_field(&poly(&f5, &[0, -1, 0, 1])).unwrap();
        assert_eq!(s.roots, vec![0, 1, 4]);
        assert_eq!(splitting_field(&UPoly::zero(&f5)).unwrap_err(), PolyError::ZeroPolynomial);
        // irreducible cubic times irreducible quadratic needs degree 6
        let f2 = gf(2);
        let p = poly(&f2, &[1, 1, 0, 1]).mul(&poly(&f2, &[1, 1, 1])).unwrap();
        let s = splitting_field(&p).unwrap();
        assert_eq!(s.field.degree(), 6);
        assert_eq!(s.roots.len(), 5);
    }

    #[test]
    fn classify_examples() {
        let f7 = gf(7);
        let c = |a, b, cc, d| classify_cubic(&f7, &a, &b, &cc, &d);
        assert_eq!(c(0, 0, 0, 5), CountCategory::Zero);
        assert_eq!(c(1, 0, 0, 0), CountCategory::One);
        assert_eq!(c(0, 0, 0, 0), CountCategory::Infinite);
        let f5 = gf(5);
        assert_eq!(classify_cubic(&f5, &1, &0, &4, &0), CountCategory::Three);
    }

    #[test]
    fn classify_over_rationals() {
        let q = Rationals;
        let r = |n: i64| q.from_i64(n);
        // y^3 - 3y + 2 = (y-1)^2 (y+2)
        assert_eq!(classify_cubic(&q, &r(1), &r(0), &r(-3), &r(2)), CountCategory::Two);
        // y^3 - 2 has three distinct complex roots
        assert_eq!(classify_cubic(&q, &r(1), &r(0), &r(0), &r(-2)), CountCategory::Three);
    }

    #[test]
    fn conjugate_product_matches_explicit_roots() {
        // in GF(25), with an honest square root of a GF(5) non-square
        let f25 = GaloisField::new(5, 2).unwrap();
        let d = 2u32;
        let s = (0..25).find(|&x| f25.mul(&x, &x) == d).unwrap();
        let p = [3u32, 1, 4, 2];
        let u = 4u32;
        let v = 3u32;
        let ev = |y: u32| p.iter().rev().fold(0, |acc, c| f25.add(&f25.mul(&acc, &y), c));
        let plus = ev(f25.add(&u, &f25.mul(&v, &s)));
        let minus = ev(f25.sub(&u, &f25.mul(&v, &s)));
        assert_eq!(conjugate_product(&f25, &p, &u, &v, &d), f25.mul(&plus, &minus));
    }

    #[test]
    fn formats_polynomials() {
        let f11 = gf(11);
        assert_eq!(poly(&f11, &[-1, 0, 3]).format(), "3*y^2 + 10");
        assert_eq!(UPoly::parse(&f11, "10,0,3").unwrap(), poly(&f11, &[-1, 0, 3]));
    }
}
