//! Closed-form solvers built on the defining polynomial systems.
//!
//! Every enumeration here works in the algebra's own field. The `closed`
//! submodule lifts an algebra to the splitting field of the relevant
//! polynomials when a count over a root-closed field is wanted.

pub mod closed;
pub mod props;
pub mod quasi;

use std::collections::BTreeSet;

use crate::algebra::{Element, LineSet, Msc, ProjPoint};
use crate::field::{Field, FieldError};
use crate::poly::{poly_gcd, roots_in_field, RootSet, UPoly};

pub use closed::{
    idempotent_count_closed, left_count_closed, lift_for_closure, right_count_closed, subalgebra_count_closed,
    system_count_closed, two_sided_closed, two_sided_count_closed, ClosedCounts,
};
pub use props::{
    check_simplicity, is_simple, predict_left_count_char_ne2, predict_right_count, simplicity_verbatim, PropError,
};
pub use quasi::{left_quasiunits, quasiunit_system, AffineSolutionSet, QuasiunitSystem};

/// Solver failures that indicate an internal inconsistency.
#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error(transparent)]
    Prop(#[from] PropError),
    #[error("simplicity predicate says {predicted} but the solved ideal set says {solved} for {msc}")]
    SimplicityMismatch { msc: String, predicted: bool, solved: bool },
}

fn poly<F: Field>(f: &F, c: [F::Elem; 4]) -> UPoly<F> {
    UPoly::new(f, c.to_vec())
}

/// `a4 y^3 + (a2+a3-b4) y^2 + (a1-b2-b3) y - b1`.
pub fn p_a<F: Field>(a: &Msc<F>) -> UPoly<F> {
    let f = a.field();
    poly(
        f,
        [
            f.neg(a.b1()),
            f.sub(&f.sub(a.a1(), a.b2()), a.b3()),
            f.sub(&f.add(a.a2(), a.a3()), a.b4()),
            a.a4().clone(),
        ],
    )
}

/// `a4 y^2 + (a2+a3) y + a1`.
pub fn lambda_a<F: Field>(a: &Msc<F>) -> UPoly<F> {
    let f = a.field();
    UPoly::new(f, vec![a.a1().clone(), f.add(a.a2(), a.a3()), a.a4().clone()])
}

fn quadratic<F: Field>(f: &F, y2: &F::Elem, y1: F::Elem, y0: &F::Elem) -> UPoly<F> {
    UPoly::new(f, vec![f.neg(y0), y1, y2.clone()])
}

/// `(l1, l2)` with `l1 = a4 y^2 + (a3-b4) y - b3`, `l2 = a2 y^2 + (a1-b2) y - b1`.
pub fn left_system<F: Field>(a: &Msc<F>) -> (UPoly<F>, UPoly<F>) {
    let f = a.field();
    (
        quadratic(f, a.a4(), f.sub(a.a3(), a.b4()), a.b3()),
        quadratic(f, a.a2(), f.sub(a.a1(), a.b2()), a.b1()),
    )
}

/// `(r1, r2)` with `r1 = a4 y^2 + (a2-b4) y - b2`, `r2 = a3 y^2 + (a1-b3) y - b1`.
pub fn right_system<F: Field>(a: &Msc<F>) -> (UPoly<F>, UPoly<F>) {
    let f = a.field();
    (
        quadratic(f, a.a4(), f.sub(a.a2(), a.b4()), a.b2()),
        quadratic(f, a.a3(), f.sub(a.a1(), a.b3()), a.b1()),
    )
}

/// Common roots of several polynomials, through their gcd.
pub fn common_roots<F: Field>(polys: &[UPoly<F>]) -> RootSet<F::Elem> {
    roots_in_field(&system_gcd(polys))
}

/// Monic gcd of a polynomial system; zero when every member is zero.
pub fn system_gcd<F: Field>(polys: &[UPoly<F>]) -> UPoly<F> {
    let mut iter = polys.iter();
    let first = iter.next().expect("nonempty system").clone();
    iter.fold(first, |g, p| poly_gcd(&g, p).expect("same field"))
}

fn lines<F: Field>(f: &F, roots: RootSet<F::Elem>, with_e2: bool) -> LineSet<F::Elem> {
    match roots {
        RootSet::AllElements if with_e2 => LineSet::All,
        RootSet::AllElements => {
            let elems = f.elements().expect("a zero system without Fe2 only arises over finite fields");
            LineSet::Points(elems.into_iter().map(ProjPoint::Affine).collect())
        }
        RootSet::Roots(r) => {
            let mut set: BTreeSet<_> = r.into_iter().map(ProjPoint::Affine).collect();
            if with_e2 {
                set.insert(ProjPoint::E2);
            }
            LineSet::Points(set)
        }
    }
}

/// Nontrivial subalgebras: roots of `p_A` plus `Fe2` when `a4 = 0`.
pub fn subalgebras<F: Field>(a: &Msc<F>) -> LineSet<F::Elem> {
    let f = a.field();
    lines(f, roots_in_field(&p_a(a)), f.is_zero(a.a4()))
}

pub fn left_ideals<F: Field>(a: &Msc<F>) -> LineSet<F::Elem> {
    let f = a.field();
    let (l1, l2) = left_system(a);
    lines(f, common_roots(&[l1, l2]), f.is_zero(a.a2()) && f.is_zero(a.a4()))
}

pub fn right_ideals<F: Field>(a: &Msc<F>) -> LineSet<F::Elem> {
    let f = a.field();
    let (r1, r2) = right_system(a);
    lines(f, common_roots(&[r1, r2]), f.is_zero(a.a3()) && f.is_zero(a.a4()))
}

/// `Fe2` is a two-sided ideal exactly when `a2 = a3 = a4 = 0`.
pub fn e2_two_sided<F: Field>(a: &Msc<F>) -> bool {
    let f = a.field();
    f.is_zero(a.a2()) && f.is_zero(a.a3()) && f.is_zero(a.a4())
}

/// `l1 - r1 = (a3-a2) y - b3 + b2`, so unequal `a2, a3` leave one candidate.
pub fn two_sided_ideals<F: Field>(a: &Msc<F>) -> LineSet<F::Elem> {
    let f = a.field();
    let (l1, l2) = left_system(a);
    let (r1, r2) = right_system(a);
    let e2 = e2_two_sided(a);
    let da = f.sub(a.a3(), a.a2());
    if !f.is_zero(&da) {
        let y = f.div(&f.sub(a.b3(), a.b2()), &da).expect("nonzero");
        let hit = [&l1, &l2, &r1, &r2].iter().all(|p| f.is_zero(&p.eval(&y)));
        return lines(f, RootSet::Roots(if hit { vec![y] } else { vec![] }), e2);
    }
    lines(f, common_roots(&[l1, l2, r1, r2]), e2)
}

/// Idempotents as isolated points, an optional one-parameter family and
/// the extra point `(1/b4) e2`.
#[derive(Clone, PartialEq)]
pub struct IdempotentSet<F: Field> {
    pub isolated: BTreeSet<Element<F::Elem>>,
    /// `lambda_A` when `p_A = 0`; members are `(1/lambda(t))(e1 + t e2)` for `lambda(t) != 0`.
    pub family: Option<UPoly<F>>,
    pub e2_point: Option<Element<F::Elem>>,
}

impl<F: Field> std::fmt::Debug for IdempotentSet<F> {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("IdempotentSet")
            .field("isolated", &self.isolated)
            .field("family", &self.family.as_ref().map(|p| p.format()))
            .field("e2_point", &self.e2_point)
            .finish()
    }
}

fn idempotent_at<F: Field>(f: &F, lambda: &UPoly<F>, t: &F::Elem) -> Option<Element<F::Elem>> {
    let l = lambda.eval(t);
    let inv = f.inv(&l).ok()?;
    Some(Element::new(inv.clone(), f.mul(&inv, t)))
}

impl<F: Field> IdempotentSet<F> {
    /// Every idempotent; the family is expanded over a finite field.
    pub fn materialize(&self) -> Result<BTreeSet<Element<F::Elem>>, FieldError> {
        let mut out = self.isolated.clone();
        if let Some(lambda) = &self.family {
            let f = lambda.field();
            out.extend(f.elements()?.iter().filter_map(|t| idempotent_at(f, lambda, t)));
        }
        out.extend(self.e2_point.iter().cloned());
        Ok(out)
    }

    /// `None` when the family is nonempty.
    pub fn finite_len(&self) -> Option<usize> {
        match &self.family {
            Some(l) if !l.is_zero() => None,
            _ => Some(self.isolated.len() + self.e2_point.is_some() as usize),
        }
    }
}

pub fn idempotents<F: Field>(a: &Msc<F>) -> IdempotentSet<F> {
    let f = a.field();
    let lambda = lambda_a(a);
    let e2_point = (f.is_zero(a.a4()) && !f.is_zero(a.b4()))
        .then(|| Element::new(f.zero(), f.inv(a.b4()).expect("nonzero")));
    match roots_in_field(&p_a(a)) {
        RootSet::AllElements => IdempotentSet { isolated: BTreeSet::new(), family: Some(lambda), e2_point },
        RootSet::Roots(r) => IdempotentSet {
            isolated: r.iter().filter_map(|y| idempotent_at(f, &lambda, y)).collect(),
            family: None,
            e2_point,
        },
    }
}
