//! Case-analysis predictors for the ideal systems and for simplicity,
//! evaluated clause by clause. They are cross-checks for the solvers.

use crate::algebra::Msc;
use crate::field::{Field, GaloisField};
use crate::poly::CountCategory;

use super::closed::two_sided_closed;
use super::SolverError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PropError {
    #[error("predicate requires characteristic != {0}")]
    WrongCharacteristic(u64),
    /// The clause list matched no category, or more than one.
    #[error("clause list is not a partition here: matched {0:?}")]
    Unresolved(Vec<CountCategory>),
}

/// Coefficients of `q1 = p y^2 + q y - r`, `q2 = s y^2 + t y - u`.
struct Pair<E> {
    p: E,
    q: E,
    r: E,
    s: E,
    t: E,
    u: E,
}

fn pick(matched: &[(CountCategory, bool)]) -> Result<CountCategory, PropError> {
    let mut hits: Vec<CountCategory> = matched.iter().filter(|(_, b)| *b).map(|(c, _)| *c).collect();
    hits.sort();
    hits.dedup();
    match hits.as_slice() {
        [one] => Ok(*one),
        _ => Err(PropError::Unresolved(hits)),
    }
}

fn pair_ne2<F: Field>(f: &F, c: &Pair<F::Elem>) -> Result<CountCategory, PropError> {
    use CountCategory::*;
    let Pair { p, q, r, s, t, u } = c;
    let z = |x: &F::Elem| f.is_zero(x);
    let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    let k = |n: i64| f.from_i64(n);
    // s r^2 + r t q - u q^2
    let lin = f.sub(&f.add(&m(s, &m(r, r)), &m(r, &m(t, q))), &m(u, &m(q, q)));
    let disc = f.add(&m(q, q), &m(&k(4), &m(p, r)));
    // s q^2 - 2 p t q - 4 u p^2
    let dbl = f.sub(&f.sub(&m(s, &m(q, q)), &m(&k(2), &m(p, &m(t, q)))), &m(&k(4), &m(u, &m(p, p))));
    let w = f.sub(&m(p, t), &m(s, q));
    let v = f.sub(&m(p, u), &m(s, r));
    let at = if z(&w) {
        None
    } else {
        let y = f.div(&v, &w).expect("nonzero");
        Some(f.sub(&f.add(&m(p, &m(&y, &y)), &m(q, &y)), r))
    };
    let at_zero = at.as_ref().map(&z);
    let inner = f.add(&m(t, t), &m(&k(4), &m(s, u)));
    let first_zero = z(p) && z(q) && z(r);
    pick(&[
        (Zero, z(p) && z(q) && !z(r)),
        (Zero, z(p) && !z(q) && !z(&lin)),
        (Zero, !z(p) && z(&disc) && !z(&dbl)),
        (Zero, !z(p) && !z(&disc) && !z(&w) && at_zero == Some(false)),
        (Zero, !z(p) && !z(&disc) && z(&w) && !z(&v)),
        (Zero, first_zero && z(s) && z(t) && !z(u)),
        (One, z(p) && !z(q) && z(&lin)),
        (One, !z(p) && z(&disc) && z(&dbl)),
        (One, !z(p) && !z(&disc) && !z(&w) && at_zero == Some(true)),
        (One, first_zero && z(&inner) && !z(s)),
        (One, first_zero && z(s) && !z(t)),
        (Two, !z(p) && !z(&disc) && z(&w) && z(&v)),
        (Two, first_zero && !z(s) && !z(&inner)),
        (Infinite, first_zero && z(s) && z(t) && z(u)),
    ])
}

fn pair_char2<F: Field>(f: &F, c: &Pair<F::Elem>) -> Result<CountCategory, PropError> {
    use CountCategory::*;
    let Pair { p, q, r, s, t, u } = c;
    let z = |x: &F::Elem| f.is_zero(x);
    let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    let lin = f.sub(&f.add(&m(s, &m(r, r)), &m(r, &m(t, q))), &m(u, &m(q, q)));
    // s^2 r^2 + r p t^2 - u^2 p^2
    let dbl = f.sub(&f.add(&m(&m(s, s), &m(r, r)), &m(r, &m(p, &m(t, t)))), &m(&m(u, u), &m(p, p)));
    let w = f.sub(&m(p, t), &m(s, q));
    let v = f.sub(&m(p, u), &m(s, r));
    let at_zero = (!z(&w)).then(|| {
        let y = f.div(&v, &w).expect("nonzero");
        z(&f.sub(&f.add(&m(p, &m(&y, &y)), &m(q, &y)), r))
    });
    let first_zero = z(p) && z(q) && z(r);
    pick(&[
        (Zero, z(p) && z(q) && !z(r)),
        (Zero, z(p) && !z(q) && !z(&lin)),
        (Zero, !z(p) && z(q) && !z(&dbl)),
        (Zero, !z(p) && !z(q) && !z(&w) && at_zero == Some(false)),
        (Zero, !z(p) && !z(q) && z(&w) && !z(&v)),
        (Zero, first_zero && z(s) && z(t) && !z(u)),
        (One, z(p) && !z(q) && z(&lin)),
        (One, !z(p) && z(q) && z(&dbl)),
        (One, !z(p) && !z(q) && !z(&w) && at_zero == Some(true)),
        (One, first_zero && z(t) && !z(s)),
        (One, first_zero && z(s) && !z(t)),
        (Two, !z(p) && !z(q) && z(&w) && z(&v)),
        (Two, first_zero && !z(s) && !z(t)),
        (Infinite, first_zero && z(s) && z(t) && z(u)),
    ])
}

fn left_pair<F: Field>(a: &Msc<F>) -> Pair<F::Elem> {
    let f = a.field();
    Pair {
        p: a.a4().clone(),
        q: f.sub(a.a3(), a.b4()),
        r: a.b3().clone(),
        s: a.a2().clone(),
        t: f.sub(a.a1(), a.b2()),
        u: a.b1().clone(),
    }
}

fn right_pair<F: Field>(a: &Msc<F>) -> Pair<F::Elem> {
    let f = a.field();
    Pair {
        p: a.a4().clone(),
        q: f.sub(a.a2(), a.b4()),
        r: a.b2().clone(),
        s: a.a3().clone(),
        t: f.sub(a.a1(), a.b3()),
        u: a.b1().clone(),
    }
}

/// Number of solutions of the left system over a root-closed field
/// (`Fe2` not included).
pub fn predict_left_count_char_ne2<F: Field>(a: &Msc<F>) -> Result<CountCategory, PropError> {
    if a.field().characteristic() == 2 {
        return Err(PropError::WrongCharacteristic(2));
    }
    pair_ne2(a.field(), &left_pair(a))
}

/// Number of solutions of the right system over a root-closed field, with
/// the characteristic-2 clause list where it applies.
pub fn predict_right_count<F: Field>(a: &Msc<F>) -> Result<CountCategory, PropError> {
    let f = a.field();
    if f.characteristic() == 2 {
        pair_char2(f, &right_pair(a))
    } else {
        pair_ne2(f, &right_pair(a))
    }
}

/// The three listed cases only. Misses commutative simple algebras.
pub fn simplicity_verbatim<F: Field>(a: &Msc<F>) -> bool {
    let f = a.field();
    let z = |x: &F::Elem| f.is_zero(x);
    let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
    let db = f.sub(a.b3(), a.b2());
    let da = f.sub(a.a3(), a.a2());
    let case1 = !z(&db) && z(&da) && !z(a.a2());
    let case2 = !z(&db) && z(a.a2()) && z(a.a3()) && !z(a.a4());
    let case3 = !z(&da) && {
        let e1 = f.sub(
            &f.add(&m(&m(&db, &db), a.a2()), &m(&m(&db, &da), &f.sub(a.a1(), a.b2()))),
            &m(&m(&da, &da), a.b1()),
        );
        let e2 = f.sub(
            &f.add(&m(&m(&db, &db), a.a4()), &m(&m(&db, &da), &f.sub(a.a3(), a.b4()))),
            &m(&m(&da, &da), a.b3()),
        );
        !z(&e1) || !z(&e2)
    };
    case1 || case2 || case3
}

/// The three listed cases plus the commutative one, where two-sided ideals
/// are the right ideals: simple iff the right system has no solution and
/// `Fe2` is not an ideal.
pub fn is_simple<F: Field>(a: &Msc<F>) -> Result<bool, PropError> {
    if simplicity_verbatim(a) {
        return Ok(true);
    }
    let f = a.field();
    let commutative = a.a2() == a.a3() && a.b2() == a.b3();
    if !commutative {
        return Ok(false);
    }
    let e2 = f.is_zero(a.a2()) && f.is_zero(a.a4());
    Ok(!e2 && predict_right_count(a)? == CountCategory::Zero)
}

/// Runs both the predicate and the solver over the splitting field of the
/// two-sided system and fails loudly if they differ.
pub fn check_simplicity(a: &Msc<GaloisField>) -> Result<bool, SolverError> {
    let predicted = is_simple(a)?;
    let solved = two_sided_closed(a)?.is_empty();
    if predicted != solved {
        return Err(SolverError::SimplicityMismatch { msc: a.format(), predicted, solved });
    }
    Ok(solved)
}
