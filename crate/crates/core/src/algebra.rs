//! Two-dimensional algebras given by structure constants, the product,
//! definition checkers and the brute-force oracle.

use std::collections::BTreeSet;
use std::fmt;

use crate::field::{Embedding, Field, FieldError, GaloisField};

/// An element `x e1 + y e2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element<E> {
    pub x: E,
    pub y: E,
}

impl<E> Element<E> {
    pub fn new(x: E, y: E) -> Self {
        Element { x, y }
    }
}

pub fn e1<F: Field>(f: &F) -> Element<F::Elem> {
    Element::new(f.one(), f.zero())
}

pub fn e2<F: Field>(f: &F) -> Element<F::Elem> {
    Element::new(f.zero(), f.one())
}

pub fn scale<F: Field>(f: &F, k: &F::Elem, u: &Element<F::Elem>) -> Element<F::Elem> {
    Element::new(f.mul(k, &u.x), f.mul(k, &u.y))
}

pub fn add<F: Field>(f: &F, u: &Element<F::Elem>, v: &Element<F::Elem>) -> Element<F::Elem> {
    Element::new(f.add(&u.x, &v.x), f.add(&u.y, &v.y))
}

pub fn sub<F: Field>(f: &F, u: &Element<F::Elem>, v: &Element<F::Elem>) -> Element<F::Elem> {
    Element::new(f.sub(&u.x, &v.x), f.sub(&u.y, &v.y))
}

pub fn is_zero_elem<F: Field>(f: &F, u: &Element<F::Elem>) -> bool {
    f.is_zero(&u.x) && f.is_zero(&u.y)
}

/// `x e1 + y e2` rendered with the field's element syntax, e.g. `3*e1+2*e2`.
pub fn format_element<F: Field>(f: &F, u: &Element<F::Elem>) -> String {
    let part = |c: &F::Elem, name: &str| -> Option<String> {
        if f.is_zero(c) {
            return None;
        }
        let s = f.format_elem(c);
        Some(if s == "1" {
            name.to_string()
        } else if s.contains(['+', '-']) {
            format!("({s})*{name}")
        } else {
            format!("{s}*{name}")
        })
    };
    match (part(&u.x, "e1"), part(&u.y, "e2")) {
        (None, None) => "0".into(),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (Some(a), Some(b)) => format!("{a}+{b}"),
    }
}

/// A one-dimensional subspace, normalised to `F(e1 + y e2)` or `F e2`.
/// `E2` sorts first, matching the lexicographic order of representatives.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjPoint<E> {
    E2,
    Affine(E),
}

impl<E: Clone> ProjPoint<E> {
    pub fn representative<F: Field<Elem = E>>(&self, f: &F) -> Element<E> {
        match self {
            ProjPoint::E2 => e2(f),
            ProjPoint::Affine(y) => Element::new(f.one(), y.clone()),
        }
    }

    /// `None` for the zero vector.
    pub fn from_element<F: Field<Elem = E>>(f: &F, u: &Element<E>) -> Option<Self> {
        if !f.is_zero(&u.x) {
            Some(ProjPoint::Affine(f.div(&u.y, &u.x).ok()?))
        } else if !f.is_zero(&u.y) {
            Some(ProjPoint::E2)
        } else {
            None
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> String {
        match self {
            ProjPoint::E2 => "F(e2)".into(),
            ProjPoint::Affine(_) => format!("F({})", format_element(f, &self.representative(f))),
        }
    }
}

/// All projective points of a finite plane: `Fe2` first, then `F(e1+ye2)` by `y`.
pub fn all_points<F: Field>(f: &F) -> Result<Vec<ProjPoint<F::Elem>>, FieldError> {
    let mut v = vec![ProjPoint::E2];
    v.extend(f.elements()?.into_iter().map(ProjPoint::Affine));
    Ok(v)
}

/// A set of lines, or every line of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineSet<E: Ord> {
    All,
    Points(BTreeSet<ProjPoint<E>>),
}

impl<E: Ord + Clone> LineSet<E> {
    pub fn empty() -> Self {
        LineSet::Points(BTreeSet::new())
    }

    /// Explicit list of lines; `All` is expanded over a finite field.
    pub fn materialize<F: Field<Elem = E>>(&self, f: &F) -> Result<BTreeSet<ProjPoint<E>>, FieldError> {
        match self {
            LineSet::All => Ok(all_points(f)?.into_iter().collect()),
            LineSet::Points(p) => Ok(p.clone()),
        }
    }

    /// `None` for `All`.
    pub fn len(&self) -> Option<usize> {
        match self {
            LineSet::All => None,
            LineSet::Points(p) => Some(p.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

/// `(lambda(e1), lambda(e2))` with `e_i u = lambda(e_i) u` (or `u e_i` on the right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness<E> {
    pub lambda_e1: E,
    pub lambda_e2: E,
}

/// Structure constants: `e1e1 = a1 e1 + b1 e2`, `e1e2 = a2 e1 + b2 e2`,
/// `e2e1 = a3 e1 + b3 e2`, `e2e2 = a4 e1 + b4 e2`.
#[derive(Clone, PartialEq)]
pub struct Msc<F: Field> {
    field: F,
    alpha: [F::Elem; 4],
    beta: [F::Elem; 4],
}

impl<F: Field> fmt::Debug for Msc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) over {}", self.format(), self.field.spec())
    }
}

impl<F: Field> Msc<F> {
    pub fn new(field: &F, alpha: [F::Elem; 4], beta: [F::Elem; 4]) -> Self {
        Msc { field: field.clone(), alpha, beta }
    }

    pub fn zero(field: &F) -> Self {
        let z = field.zero();
        Self::new(field, [z.clone(), z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z.clone(), z])
    }

    /// From small integers, reduced into the field.
    pub fn from_ints(field: &F, alpha: [i64; 4], beta: [i64; 4]) -> Self {
        Self::new(field, alpha.map(|a| field.from_i64(a)), beta.map(|b| field.from_i64(b)))
    }

    /// Parses `a1,a2,a3,a4;b1,b2,b3,b4`.
    pub fn parse(field: &F, text: &str) -> Result<Self, FieldError> {
        let err = || FieldError::parse("structure constants", text);
        let (a, b) = text.split_once(';').ok_or_else(err)?;
        let row = |s: &str| -> Result<[F::Elem; 4], FieldError> {
            let v = s.split(',').map(|t| field.parse_elem(t.trim())).collect::<Result<Vec<_>, _>>()?;
            v.try_into().map_err(|_| err())
        };
        Ok(Self::new(field, row(a)?, row(b)?))
    }

    pub fn format(&self) -> String {
        let row = |r: &[F::Elem; 4]| r.iter().map(|c| self.field.format_elem(c)).collect::<Vec<_>>().join(",");
        format!("{};{}", row(&self.alpha), row(&self.beta))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn alpha(&self) -> &[F::Elem; 4] {
        &self.alpha
    }

    pub fn beta(&self) -> &[F::Elem; 4] {
        &self.beta
    }

    pub fn a1(&self) -> &F::Elem {
        &self.alpha[0]
    }
    pub fn a2(&self) -> &F::Elem {
        &self.alpha[1]
    }
    pub fn a3(&self) -> &F::Elem {
        &self.alpha[2]
    }
    pub fn a4(&self) -> &F::Elem {
        &self.alpha[3]
    }
    pub fn b1(&self) -> &F::Elem {
        &self.beta[0]
    }
    pub fn b2(&self) -> &F::Elem {
        &self.beta[1]
    }
    pub fn b3(&self) -> &F::Elem {
        &self.beta[2]
    }
    pub fn b4(&self) -> &F::Elem {
        &self.beta[3]
    }

    /// The bilinear product `u v`.
    pub fn mul(&self, u: &Element<F::Elem>, v: &Element<F::Elem>) -> Element<F::Elem> {
        let f = &self.field;
        let terms = [
            f.mul(&u.x, &v.x),
            f.mul(&u.x, &v.y),
            f.mul(&u.y, &v.x),
            f.mul(&u.y, &v.y),
        ];
        let dot = |c: &[F::Elem; 4]| {
            c.iter().zip(&terms).fold(f.zero(), |acc, (a, t)| f.add(&acc, &f.mul(a, t)))
        };
        Element::new(dot(&self.alpha), dot(&self.beta))
    }

    /// `u^2 = lambda u` for the representative `u`; returns `lambda`.
    pub fn is_subalgebra(&self, p: &ProjPoint<F::Elem>) -> Option<F::Elem> {
        let u = p.representative(&self.field);
        in_line(&self.field, p, &self.mul(&u, &u))
    }

    pub fn is_idempotent(&self, u: &Element<F::Elem>) -> bool {
        !is_zero_elem(&self.field, u) && self.mul(u, u) == *u
    }

    /// `e_i u` lies in `F u` for both basis vectors.
    pub fn is_left_ideal(&self, p: &ProjPoint<F::Elem>) -> Option<IdealWitness<F::Elem>> {
        let f = &self.field;
        let u = p.representative(f);
        Some(IdealWitness {
            lambda_e1: in_line(f, p, &self.mul(&e1(f), &u))?,
            lambda_e2: in_line(f, p, &self.mul(&e2(f), &u))?,
        })
    }

    /// `u e_i` lies in `F u` for both basis vectors.
    pub fn is_right_ideal(&self, p: &ProjPoint<F::Elem>) -> Option<IdealWitness<F::Elem>> {
        let f = &self.field;
        let u = p.representative(f);
        Some(IdealWitness {
            lambda_e1: in_line(f, p, &self.mul(&u, &e1(f)))?,
            lambda_e2: in_line(f, p, &self.mul(&u, &e2(f)))?,
        })
    }

    pub fn is_two_sided_ideal(&self, p: &ProjPoint<F::Elem>) -> bool {
        self.is_left_ideal(p).is_some() && self.is_right_ideal(p).is_some()
    }

    /// `e(uv) = (eu)v + u(ev) - uv` on all basis pairs.
    pub fn is_left_quasiunit(&self, e: &Element<F::Elem>) -> bool {
        let f = &self.field;
        let basis = [e1(f), e2(f)];
        basis.iter().all(|u| basis.iter().all(|v| self.quasiunit_identity_holds(e, u, v)))
    }

    pub fn quasiunit_identity_holds(
        &self,
        e: &Element<F::Elem>,
        u: &Element<F::Elem>,
        v: &Element<F::Elem>,
    ) -> bool {
        let f = &self.field;
        let uv = self.mul(u, v);
        let lhs = self.mul(e, &uv);
        let rhs = sub(f, &add(f, &self.mul(&self.mul(e, u), v), &self.mul(u, &self.mul(e, v))), &uv);
        lhs == rhs
    }
}

impl Msc<GaloisField> {
    /// Image of the structure constants under a field embedding.
    pub fn lift(&self, e: &Embedding) -> Msc<GaloisField> {
        Msc::new(e.dst(), self.alpha.map(|a| e.apply(a)), self.beta.map(|b| e.apply(b)))
    }
}

/// `w = lambda u` for the representative `u` of `p`.
fn in_line<F: Field>(f: &F, p: &ProjPoint<F::Elem>, w: &Element<F::Elem>) -> Option<F::Elem> {
    match p {
        ProjPoint::E2 => f.is_zero(&w.x).then(|| w.y.clone()),
        ProjPoint::Affine(y) => (f.mul(&w.x, y) == w.y).then(|| w.x.clone()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Subalgebras,
    LeftIdeals,
    RightIdeals,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Idempotents,
    LeftQuasiunits,
}

/// Tests every line of the plane with the matching checker.
pub fn oracle_enumerate<F: Field>(a: &Msc<F>, kind: LineKind) -> Result<LineSet<F::Elem>, FieldError> {
    let points = all_points(a.field())?;
    let total = points.len();
    let hits: BTreeSet<_> = points
        .into_iter()
        .filter(|p| match kind {
            LineKind::Subalgebras => a.is_subalgebra(p).is_some(),
            LineKind::LeftIdeals => a.is_left_ideal(p).is_some(),
            LineKind::RightIdeals => a.is_right_ideal(p).is_some(),
            LineKind::TwoSided => a.is_two_sided_ideal(p),
        })
        .collect();
    Ok(if hits.len() == total { LineSet::All } else { LineSet::Points(hits) })
}

/// Tests every element of the plane with the matching checker.
pub fn oracle_points<F: Field>(a: &Msc<F>, kind: PointKind) -> Result<BTreeSet<Element<F::Elem>>, FieldError> {
    let elems = a.field().elements()?;
    let mut out = BTreeSet::new();
    for x in &elems {
        for y in &elems {
            let u = Element::new(x.clone(), y.clone());
            let ok = match kind {
                PointKind::Idempotents => a.is_idempotent(&u),
                PointKind::LeftQuasiunits => a.is_left_quasiunit(&u),
            };
            if ok {
                out.insert(u);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> GaloisField {
        GaloisField::prime(p).unwrap()
    }

    fn a12(f: &GaloisField) -> Msc<GaloisField> {
        Msc::from_ints(f, [0, 0, 0, 0], [1, 0, 0, 0])
    }

    fn a10(f: &GaloisField) -> Msc<GaloisField> {
        Msc::from_ints(f, [0, 1, 1, 0], [0, 0, 0, -1])
    }

    fn a11(f: &GaloisField) -> Msc<GaloisField> {
        Msc::from_ints(f, [0, 1, 1, 0], [1, 0, 0, -1])
    }

    #[test]
    fn products() {
        let f = gf(5);
        assert_eq!(a12(&f).mul(&e1(&f), &e1(&f)), e2(&f));
        assert_eq!(a10(&f).mul(&e2(&f), &e2(&f)), Element::new(0, 4));
        assert_eq!(a10(&f).mul(&Element::new(0, 0), &e2(&f)), Element::new(0, 0));
    }

    #[test]
    fn checkers() {
        let f = gf(5);
        assert_eq!(a12(&f).is_subalgebra(&ProjPoint::E2), Some(0));
        assert_eq!(a12(&f).is_subalgebra(&ProjPoint::Affine(0)), None);
        let zero = Msc::zero(&f);
        assert_eq!(zero.is_subalgebra(&ProjPoint::Affine(3)), Some(0));
        assert!(a10(&f).is_idempotent(&Element::new(0, 4)));
        assert!(!a10(&f).is_idempotent(&e2(&f)));
        assert!(a12(&f).is_left_ideal(&ProjPoint::E2).is_some());
        assert!(a12(&f).is_right_ideal(&ProjPoint::E2).is_some());
        assert!(a12(&f).is_two_sided_ideal(&ProjPoint::E2));
        assert_eq!(
            zero.is_left_ideal(&ProjPoint::Affine(1)),
            Some(IdealWitness { lambda_e1: 0, lambda_e2: 0 })
        );
        assert!(a10(&f).is_left_quasiunit(&Element::new(0, 4)));
        let a = a11(&f);
        for p in all_points(&f).unwrap() {
            assert!(a.is_left_ideal(&p).is_none());
            assert!(a.is_right_ideal(&p).is_none());
        }
    }

    #[test]
    fn oracle_examples() {
        let f5 = gf(5);
        let expect: BTreeSet<_> = [ProjPoint::E2, ProjPoint::Affine(0)].into_iter().collect();
        assert_eq!(oracle_enumerate(&a10(&f5), LineKind::Subalgebras).unwrap(), LineSet::Points(expect));
        assert_eq!(oracle_enumerate(&Msc::zero(&gf(3)), LineKind::LeftIdeals).unwrap(), LineSet::All);
        let f11 = gf(11);
        let expect: BTreeSet<_> =
            [ProjPoint::E2, ProjPoint::Affine(2), ProjPoint::Affine(9)].into_iter().collect();
        assert_eq!(oracle_enumerate(&a11(&f11), LineKind::Subalgebras).unwrap(), LineSet::Points(expect));
        let f7 = gf(7);
        let id: Vec<_> = oracle_points(&a10(&f7), PointKind::Idempotents).unwrap().into_iter().collect();
        assert_eq!(id, vec![Element::new(0, 6)]);
        assert!(oracle_points(&a12(&f5), PointKind::Idempotents).unwrap().is_empty());
        // A_8(1/3) with 1/3 = 2 in GF(5)
        let a8 = Msc::from_ints(&f5, [2, 0, 0, 0], [0, -1, -2, 0]);
        let id = oracle_points(&a8, PointKind::Idempotents).unwrap();
        assert_eq!(id, (0..5).map(|t| Element::new(3, t)).collect());
    }

    #[test]
    fn parse_and_format() {
        let f = gf(11);
        let a = Msc::parse(&f, "0,1,1,0;1,0,0,10").unwrap();
        assert_eq!(a, a11(&f));
        assert_eq!(a.format(), "0,1,1,0;1,0,0,10");
        assert!(Msc::parse(&f, "0,1,1;1,0,0,10").is_err());
        assert_eq!(format_element(&f, &Element::new(3, 1)), "3*e1+e2");
        assert_eq!(ProjPoint::Affine(2).format(&f), "F(e1+2*e2)");
    }
}
