//! Counts over a root-closed field, approximated by splitting fields.

use serde::{Deserialize, Serialize};

use crate::algebra::{LineSet, Msc};
use crate::field::GaloisField;
use crate::poly::{splitting_field, CountCategory, PolyError, UPoly};

use super::{
    e2_two_sided, lambda_a, left_system, p_a, right_system, system_gcd, two_sided_ideals,
};

fn category(n: usize) -> CountCategory {
    CountCategory::from_count(n).expect("at most three lines or points")
}

/// Distinct common roots of a system over its splitting field.
pub fn system_count_closed(polys: &[UPoly<GaloisField>]) -> Result<CountCategory, PolyError> {
    let g = system_gcd(polys);
    if g.is_zero() {
        return Ok(CountCategory::Infinite);
    }
    Ok(category(splitting_field(&g)?.roots.len()))
}

fn with_e2(count: CountCategory, e2: bool) -> CountCategory {
    match count {
        CountCategory::Infinite => CountCategory::Infinite,
        c => category(c as usize + e2 as usize),
    }
}

/// Never `Zero`: a cubic with nonzero leading coefficient always has a root
/// in its splitting field, and otherwise `Fe2` is a subalgebra.
pub fn subalgebra_count_closed(a: &Msc<GaloisField>) -> Result<CountCategory, PolyError> {
    let c = system_count_closed(&[p_a(a)])?;
    Ok(with_e2(c, a.a4() == &0))
}

pub fn left_count_closed(a: &Msc<GaloisField>) -> Result<CountCategory, PolyError> {
    let (l1, l2) = left_system(a);
    Ok(with_e2(system_count_closed(&[l1, l2])?, *a.a2() == 0 && *a.a4() == 0))
}

pub fn right_count_closed(a: &Msc<GaloisField>) -> Result<CountCategory, PolyError> {
    let (r1, r2) = right_system(a);
    Ok(with_e2(system_count_closed(&[r1, r2])?, *a.a3() == 0 && *a.a4() == 0))
}

fn two_sided_system(a: &Msc<GaloisField>) -> UPoly<GaloisField> {
    let (l1, l2) = left_system(a);
    let (r1, r2) = right_system(a);
    system_gcd(&[l1, l2, r1, r2])
}

/// Two-sided ideals after lifting to the splitting field of the system's gcd.
pub fn two_sided_closed(a: &Msc<GaloisField>) -> Result<LineSet<u32>, PolyError> {
    let g = two_sided_system(a);
    if g.is_zero() {
        return Ok(two_sided_ideals(a));
    }
    let s = splitting_field(&g)?;
    Ok(two_sided_ideals(&a.lift(&s.embedding)))
}

pub fn two_sided_count_closed(a: &Msc<GaloisField>) -> Result<CountCategory, PolyError> {
    let g = two_sided_system(a);
    let c = if g.is_zero() { CountCategory::Infinite } else { category(splitting_field(&g)?.roots.len()) };
    Ok(with_e2(c, e2_two_sided(a)))
}

/// Idempotents over the splitting field of `p_A`.
pub fn idempotent_count_closed(a: &Msc<GaloisField>) -> Result<CountCategory, PolyError> {
    let p = p_a(a);
    let lambda = lambda_a(a);
    let e2 = *a.a4() == 0 && *a.b4() != 0;
    if p.is_zero() {
        return Ok(if lambda.is_zero() { category(e2 as usize) } else { CountCategory::Infinite });
    }
    let s = splitting_field(&p)?;
    let lifted = lambda.map(&s.embedding);
    let n = s.roots.iter().filter(|y| lifted.eval(y) != 0).count();
    Ok(category(n + e2 as usize))
}

/// The algebra lifted to one field where every defining polynomial splits.
pub fn lift_for_closure(a: &Msc<GaloisField>) -> Result<Msc<GaloisField>, PolyError> {
    let (l1, l2) = left_system(a);
    let (r1, r2) = right_system(a);
    let f = a.field();
    let mut product = UPoly::constant(f, 1);
    for g in [p_a(a), system_gcd(&[l1, l2]), system_gcd(&[r1, r2]), two_sided_system(a)] {
        if !g.is_zero() {
            product = product.mul(&g)?;
        }
    }
    let s = splitting_field(&product)?;
    Ok(a.lift(&s.embedding))
}

/// Every closed count at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedCounts {
    pub subalgebras: CountCategory,
    pub idempotents: CountCategory,
    pub left_ideals: CountCategory,
    pub right_ideals: CountCategory,
    pub two_sided: CountCategory,
}

impl ClosedCounts {
    pub fn of(a: &Msc<GaloisField>) -> Result<Self, PolyError> {
        Ok(ClosedCounts {
            subalgebras: subalgebra_count_closed(a)?,
            idempotents: idempotent_count_closed(a)?,
            left_ideals: left_count_closed(a)?,
            right_ideals: right_count_closed(a)?,
            two_sided: two_sided_count_closed(a)?,
        })
    }
}
