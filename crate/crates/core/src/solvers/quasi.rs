//! Left quasiunits: `e(uv) = (eu)v + u(ev) - uv` is linear in `e`, giving
//! eight equations in the two coordinates of `e`.

use std::collections::BTreeSet;

use crate::algebra::{format_element, is_zero_elem, Element, Msc};
use crate::field::{Field, FieldError};

/// Rows `cx * x0 + cy * y0 = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiunitSystem<E> {
    pub rows: Vec<[E; 2]>,
    pub rhs: Vec<E>,
}

/// An affine subspace of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSolutionSet<E> {
    Empty,
    Point(Element<E>),
    /// `base + t * direction`; the direction's first nonzero coordinate is 1
    /// and `base` has a zero in that coordinate.
    Line { base: Element<E>, direction: Element<E> },
    Plane,
}

impl<E: Clone + Ord> AffineSolutionSet<E> {
    pub fn materialize<F: Field<Elem = E>>(&self, f: &F) -> Result<BTreeSet<Element<E>>, FieldError> {
        Ok(match self {
            Self::Empty => BTreeSet::new(),
            Self::Point(p) => BTreeSet::from([p.clone()]),
            Self::Line { base, direction } => f
                .elements()?
                .iter()
                .map(|t| Element::new(f.add(&base.x, &f.mul(t, &direction.x)), f.add(&base.y, &f.mul(t, &direction.y))))
                .collect(),
            Self::Plane => {
                let el = f.elements()?;
                el.iter().flat_map(|x| el.iter().map(move |y| Element::new(x.clone(), y.clone()))).collect()
            }
        })
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, u: &Element<E>) -> bool {
        match self {
            Self::Empty => false,
            Self::Point(p) => p == u,
            Self::Plane => true,
            Self::Line { base, direction } => {
                let dx = f.sub(&u.x, &base.x);
                let dy = f.sub(&u.y, &base.y);
                f.is_zero(&f.sub(&f.mul(&dx, &direction.y), &f.mul(&dy, &direction.x)))
            }
        }
    }

    /// `none`, a single element, `base+t*(direction)` or `all`.
    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> String {
        match self {
            Self::Empty => "none".into(),
            Self::Point(p) => format_element(f, p),
            Self::Line { base, direction } if is_zero_elem(f, base) => format!("t*({})", format_element(f, direction)),
            Self::Line { base, direction } => {
                format!("{}+t*({})", format_element(f, base), format_element(f, direction))
            }
            Self::Plane => "all".into(),
        }
    }

    /// Line with its canonical base and direction.
    pub fn line<F: Field<Elem = E>>(f: &F, base: Element<E>, direction: Element<E>) -> Self {
        if !f.is_zero(&direction.x) {
            let k = f.inv(&direction.x).expect("nonzero");
            let d = Element::new(f.one(), f.mul(&k, &direction.y));
            let b = Element::new(f.zero(), f.sub(&base.y, &f.mul(&base.x, &d.y)));
            Self::Line { base: b, direction: d }
        } else {
            Self::Line { base: Element::new(base.x, f.zero()), direction: Element::new(f.zero(), f.one()) }
        }
    }
}

/// The eight linear equations satisfied by a left quasiunit `x0 e1 + y0 e2`.
pub fn quasiunit_system<F: Field>(a: &Msc<F>) -> QuasiunitSystem<F::Elem> {
    let f = a.field();
    let [a1, a2, a3, a4] = a.alpha();
    let [b1, b2, b3, b4] = a.beta();
    let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    let sum = |terms: &[F::Elem]| terms.iter().fold(f.zero(), |acc, t| f.add(&acc, t));
    let n = |x: F::Elem| f.neg(&x);
    let two = f.from_i64(2);
    // (cx, cy, constant)
    let raw: [(F::Elem, F::Elem, &F::Elem); 8] = [
        (
            sum(&[n(m(a1, a1)), n(m(a3, b1))]),
            sum(&[n(m(a3, a1)), m(a4, b1), n(m(a2, b3)), n(m(a3, b3))]),
            a1,
        ),
        (
            sum(&[n(m(a1, a2)), n(m(a4, b1))]),
            sum(&[n(m(b4, a2)), n(m(a1, a4)), m(a4, b2), n(m(a4, b3))]),
            a2,
        ),
        (
            sum(&[n(m(a1, a2)), m(a2, b3), n(m(a4, b1)), n(m(a3, b2))]),
            sum(&[n(m(a1, a4)), n(m(a3, b4))]),
            a3,
        ),
        (
            sum(&[n(m(a2, a2)), n(m(a2, a3)), m(a2, b4), m(a1, a4), n(m(&two, &m(a4, b2)))]),
            sum(&[n(m(a2, a4)), n(m(a4, b4))]),
            a4,
        ),
        (
            sum(&[n(m(b1, b3)), n(m(a1, b1))]),
            sum(&[n(m(b3, b3)), m(a1, b3), n(m(b2, b3)), n(m(&two, &m(a3, b1))), m(b1, b4)]),
            b1,
        ),
        (
            sum(&[n(m(b1, b4)), n(m(a1, b2))]),
            sum(&[n(m(a4, b1)), n(m(a3, b2)), m(a2, b3), n(m(b3, b4))]),
            b2,
        ),
        (
            sum(&[n(m(a2, b1)), m(a3, b1), n(m(b1, b4)), n(m(a1, b3))]),
            sum(&[n(m(a4, b1)), n(m(b3, b4))]),
            b3,
        ),
        (
            sum(&[n(m(b2, b4)), m(a4, b1), n(m(a2, b2)), n(m(a2, b3))]),
            sum(&[n(m(b4, b4)), n(m(a4, b2))]),
            b4,
        ),
    ];
    let mut rows = Vec::with_capacity(8);
    let mut rhs = Vec::with_capacity(8);
    for (cx, cy, c) in raw {
        rows.push([cx, cy]);
        rhs.push(f.neg(c));
    }
    QuasiunitSystem { rows, rhs }
}

/// Gauss-Jordan elimination with the first nonzero entry as pivot.
pub fn solve_affine<F: Field>(f: &F, sys: &QuasiunitSystem<F::Elem>) -> AffineSolutionSet<F::Elem> {
    let mut rows: Vec<(Vec<F::Elem>, F::Elem)> =
        sys.rows.iter().zip(&sys.rhs).map(|(r, b)| (r.to_vec(), b.clone())).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut top = 0;
    for col in 0..2 {
        let Some(p) = (top..rows.len()).find(|&i| !f.is_zero(&rows[i].0[col])) else {
            continue;
        };
        rows.swap(top, p);
        let inv = f.inv(&rows[top].0[col]).expect("pivot is nonzero");
        let (r, b) = &mut rows[top];
        r.iter_mut().for_each(|c| *c = f.mul(c, &inv));
        *b = f.mul(b, &inv);
        let (pr, pb) = rows[top].clone();
        for (i, (r, b)) in rows.iter_mut().enumerate() {
            if i != top && !f.is_zero(&r[col]) {
                let k = r[col].clone();
                for (c, pc) in r.iter_mut().zip(&pr) {
                    *c = f.sub(c, &f.mul(&k, pc));
                }
                *b = f.sub(b, &f.mul(&k, &pb));
            }
        }
        pivots.push(col);
        top += 1;
    }
    if rows[top..].iter().any(|(_, b)| !f.is_zero(b)) {
        return AffineSolutionSet::Empty;
    }
    match pivots.as_slice() {
        [] => AffineSolutionSet::Plane,
        [0, 1] => AffineSolutionSet::Point(Element::new(rows[0].1.clone(), rows[1].1.clone())),
        // x0 + c y0 = b
        [0] => AffineSolutionSet::line(
            f,
            Element::new(rows[0].1.clone(), f.zero()),
            Element::new(f.neg(&rows[0].0[1]), f.one()),
        ),
        [1] => AffineSolutionSet::line(f, Element::new(f.zero(), rows[0].1.clone()), Element::new(f.one(), f.zero())),
        _ => unreachable!(),
    }
}

pub fn left_quasiunits<F: Field>(a: &Msc<F>) -> AffineSolutionSet<F::Elem> {
    solve_affine(a.field(), &quasiunit_system(a))
}
