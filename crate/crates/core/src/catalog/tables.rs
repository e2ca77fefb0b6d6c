//! Cell-by-cell transcription of the published count tables. A cell is a
//! column (count) with a conjunction of conditions on the structure
//! constants; every cell keeps its condition text for citations. Symbols
//! `a1..a4, b1..b4` always mean structure constants of the instantiated
//! algebra. Known misprints are transcribed as printed.

use crate::algebra::{Element, Msc};
use crate::field::GaloisField;
use crate::poly::CountCategory::{self, Infinite, One, Three, Two, Zero};
use crate::solvers::AffineSolutionSet;

use super::ex::Ex;
use super::{FamilyId, Prediction, Quantity, Regime};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub category: CountCategory,
    pub condition: &'static str,
    pub holds: bool,
}

fn c(category: CountCategory, condition: &'static str, holds: bool) -> Cell {
    Cell { category, condition, holds }
}

fn always(category: CountCategory) -> Vec<Cell> {
    vec![c(category, "+", true)]
}

/// The structure constants the tables refer to, as expressions.
#[derive(Clone, Copy)]
pub(super) struct V<'a> {
    pub a1: Ex<'a>,
    pub a2: Ex<'a>,
    pub a4: Ex<'a>,
    pub b1: Ex<'a>,
    pub b2: Ex<'a>,
    pub f: &'a GaloisField,
}

impl<'a> V<'a> {
    pub fn of(a: &'a Msc<GaloisField>) -> Self {
        let f = a.field();
        let [a1, a2, _, a4] = a.alpha().map(|x| Ex::new(f, x));
        let [b1, b2, _, _] = a.beta().map(|x| Ex::new(f, x));
        V { a1, a2, a4, b1, b2, f }
    }

    pub fn k(&self, n: i64) -> Ex<'a> {
        Ex::int(self.f, n)
    }
}

pub fn cells(fam: FamilyId, q: Quantity, a: &Msc<GaloisField>) -> Vec<Cell> {
    let v = V::of(a);
    match q {
        Quantity::Subalgebras => subalgebras(fam, v),
        Quantity::LeftIdeals => left_ideals(fam, v),
        Quantity::RightIdeals => right_ideals(fam, v),
        Quantity::TwoSided => two_sided(fam, v),
        Quantity::Quasiunits => Vec::new(),
    }
}

pub(super) fn citation(fam: FamilyId, q: Quantity, cell: &Cell) -> String {
    format!("Table {}, {}, {}: {}", q.table(fam.regime()), fam, cell.category.as_str(), cell.condition)
}

pub(super) fn resolve(fam: FamilyId, q: Quantity, cells: &[Cell]) -> Prediction {
    let hits: Vec<&Cell> = cells.iter().filter(|c| c.holds).collect();
    let Some(first) = hits.first() else {
        return Prediction::NoRow { citation: format!("Table {}, {}: no cell holds", q.table(fam.regime()), fam) };
    };
    if hits.iter().all(|h| h.category == first.category) {
        Prediction::Count { category: first.category, citation: citation(fam, q, first) }
    } else {
        Prediction::Conflict { citations: hits.iter().map(|h| citation(fam, q, h)).collect() }
    }
}

/// `x = c +- k sqrt(r)` as `(x - c)^2 = k^2 r`.
fn plus_minus_sqrt<'a>(x: Ex<'a>, c: Ex<'a>, k: Ex<'a>, r: Ex<'a>) -> (Ex<'a>, Ex<'a>) {
    ((x - c).sq(), k.sq() * r)
}

pub(super) fn subalgebras_a3_two(v: V<'_>, reading_middle_is_b2: bool) -> bool {
    let lhs = if reading_middle_is_b2 { v.b2 } else { v.b1 };
    lhs.is(-(v.b2 + 1).sq() / 12)
}

fn subalgebras(fam: FamilyId, v: V<'_>) -> Vec<Cell> {
    let V { a1, a2, a4, b1, b2, .. } = v;
    let third = v.k(1) / 3;
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23, 1) => {
            let s = 3 * a2 + 1;
            let crit = s.sq() / (9 * a4) + third;
            let d = s.sq() - a4 * (3 * a1 - 1);
            let pp = Ex::conjugate_product(&[-b1, 3 * a1 - 1, s, a4], -s / (3 * a4), 1 / (3 * a4), d);
            let (l, r) = plus_minus_sqrt(a1, third, v.k(2) / 3, -(1 + a2) * b1);
            vec![
                c(
                    One,
                    "a4!=0, a1=(3a2+1)^2/(9a4)+1/3, b1=-(3a2+1)^3/(27a4^2)",
                    a4.nonzero() && a1.is(crit) && b1.is(-s.cube() / (27 * a4.sq())),
                ),
                c(One, "a4=0, b1!=0, a1=1/3, a2=-1/3", a4.zero() && b1.nonzero() && a1.is(third) && a2.is(-third)),
                c(
                    Two,
                    "a4!=0, a1!=(3a2+1)^2/(9a4)+1/3, p(y-)p(y+)=0, y+-=(-(3a2+1)+-sqrt((3a2+1)^2-a4(3a1-1)))/(3a4)",
                    a4.nonzero() && a1.isnt(crit) && pp.zero(),
                ),
                c(
                    Two,
                    "a4=0, a2!=-1/3, a1=1/3+-(2/3)sqrt(-(1+a2)b1)",
                    a4.zero() && a2.isnt(-third) && l.is(r),
                ),
                c(Two, "a4=0, a1!=1/3, a2=-1/3", a4.zero() && a1.isnt(third) && a2.is(-third)),
                c(Three, "a4!=0, p(y-)p(y+)!=0", a4.nonzero() && pp.nonzero()),
                c(
                    Three,
                    "a4=0, a2!=-1/3, a1!=1/3+-(2/3)sqrt(-(1+a2)b1)",
                    a4.zero() && a2.isnt(-third) && l.isnt(r),
                ),
                c(Infinite, "a4=0, b1=0, a1=1/3, a2=-1/3", a4.zero() && b1.zero() && a1.is(third) && a2.is(-third)),
            ]
        }
        (Regime::CharNe23, 2) => {
            let pp = Ex::conjugate_product(&[-b1, 2 * a1 - b2 - 1, v.k(0), v.k(1)], v.k(0), third, 3 * (1 + b2 - 2 * a1));
            vec![
                c(One, "b1=0, b2=2a1-1", b1.zero() && b2.is(2 * a1 - 1)),
                c(Two, "b2!=2a1-1, p(y-)p(y+)=0, y+-=+-sqrt(3(1+b2-2a1))/3", b2.isnt(2 * a1 - 1) && pp.zero()),
                c(Three, "p(y-)p(y+)!=0", pp.nonzero()),
            ]
        }
        (Regime::CharNe23, 3) => {
            let two = subalgebras_a3_two(v, false);
            vec![c(Two, "b1=-(b2+1)^2/12", two), c(Three, "b1!=-(b2+1)^2/12", !two && b1.isnt(-(b2 + 1).sq() / 12))]
        }
        (Regime::CharNe23, 4) => vec![c(Two, "b2!=2a1-1", b2.isnt(2 * a1 - 1)), c(Infinite, "b2=2a1-1", b2.is(2 * a1 - 1))],
        (Regime::CharNe23, 5) => always(One),
        (Regime::CharNe23, 6) => {
            let pp = Ex::conjugate_product(&[-b1, 3 * a1 - 1, v.k(0), v.k(1)], v.k(0), third, 3 * (1 - 3 * a1));
            vec![
                c(One, "b1=0, a1=1/3", b1.zero() && a1.is(third)),
                c(Two, "a1!=1/3, p(y-)p(y+)=0, y+-=+-sqrt(3(1-3a1))/3", a1.isnt(third) && pp.zero()),
                c(Three, "p(y-)p(y+)!=0", pp.nonzero()),
            ]
        }
        (Regime::CharNe23, 7) => {
            let t = v.k(-1) / 12;
            vec![c(Two, "b1=-1/12", b1.is(t)), c(Three, "b1!=-1/12", b1.isnt(t))]
        }
        (Regime::CharNe23, 8) => vec![c(Two, "a1!=1/3", a1.isnt(third)), c(Infinite, "a1=1/3", a1.is(third))],
        (Regime::CharNe23, 9) => always(One),
        (Regime::CharNe23, 10) => always(Two),
        (Regime::CharNe23, 11) => always(Three),
        (Regime::CharNe23, 12) => always(One),

        (Regime::Char2, 1) => {
            let crit = 1 + (a2 + 1).sq() / a4;
            vec![
                c(
                    One,
                    "a4!=0, a1=1+(a2+1)^2/a4, b1=(a2+1)^3/a4^2",
                    a4.nonzero() && a1.is(crit) && b1.is((a2 + 1).cube() / a4.sq()),
                ),
                c(One, "a1=1, a2=1, a4=0, b1!=0", a1.is(1) && a2.is(1) && a4.zero() && b1.nonzero()),
                c(
                    Two,
                    "a4!=0, b1=(a1-1)(a2+1)/a4, a1!=1+(a2+1)^2/a4",
                    a4.nonzero() && b1.is((a1 - 1) * (a2 + 1) / a4) && a1.isnt(crit),
                ),
                c(Two, "a1=1, a2!=1, a4=0", a1.is(1) && a2.isnt(1) && a4.zero()),
                c(Two, "a1!=1, a2!=1, a4=0", a1.isnt(1) && a2.isnt(1) && a4.zero()),
                c(Three, "a4!=0, b1!=(1+a1)(1+a2)/a4", a4.nonzero() && b1.isnt((1 + a1) * (1 + a2) / a4)),
                c(Three, "a1!=1, a2=1, a4=0", a1.isnt(1) && a2.is(1) && a4.zero()),
                c(Infinite, "a4=0, b1=0, a1=1, a2=1", a4.zero() && b1.zero() && a1.is(1) && a2.is(1)),
            ]
        }
        (Regime::Char2, 2) => vec![
            c(One, "b1=0, b2=1", b1.zero() && b2.is(1)),
            c(Two, "b1=0, b2!=1", b1.zero() && b2.isnt(1)),
            c(Three, "b1!=0", b1.nonzero()),
        ],
        (Regime::Char2, 3) => vec![c(Two, "b2=1", b2.is(1)), c(Three, "b2!=1", b2.isnt(1))],
        (Regime::Char2, 4) => vec![c(Two, "b2!=1", b2.isnt(1)), c(Infinite, "b2=1", b2.is(1))],
        (Regime::Char2, 5) => always(One),
        (Regime::Char2, 6) => vec![
            c(One, "b1=0, a1=1", b1.zero() && a1.is(1)),
            c(Two, "a1!=1, b1=0", a1.isnt(1) && b1.zero()),
            c(Three, "b1!=0", b1.nonzero()),
        ],
        (Regime::Char2, 7) => vec![c(Two, "a1=1", a1.is(1)), c(Three, "a1!=1", a1.isnt(1))],
        (Regime::Char2, 8) => vec![c(Two, "a1!=1", a1.isnt(1)), c(Infinite, "a1=1", a1.is(1))],
        (Regime::Char2, 9) => always(One),
        (Regime::Char2, 10) => always(Two),
        (Regime::Char2, 11) => always(Three),
        (Regime::Char2, 12) => always(One),

        (Regime::Char3, 1) => vec![
            c(Two, "a4!=0, b1=-a4-1", a4.nonzero() && b1.is(-a4 - 1)),
            c(Two, "a4=0, b1=-1", a4.zero() && b1.is(-1)),
            c(Three, "a4(b1+a4+1)!=0", (a4 * (b1 + a4 + 1)).nonzero()),
            c(Three, "a4=0, b1!=-1", a4.zero() && b1.isnt(-1)),
        ],
        (Regime::Char3, 2) => vec![c(One, "b2=2a2-1", b2.is(2 * a2 - 1)), c(Three, "b2!=2a2-1", b2.isnt(2 * a2 - 1))],
        (Regime::Char3, 3) => vec![
            c(One, "b2=-1, b1!=0", b2.is(-1) && b1.nonzero()),
            c(Two, "b2!=-1", b2.isnt(-1)),
            c(Infinite, "b2=-1, b1=0", b2.is(-1) && b1.zero()),
        ],
        (Regime::Char3, 4) => vec![c(Two, "b2!=2a1-1", b2.isnt(2 * a1 - 1)), c(Infinite, "b2=2a1-1", b2.is(2 * a1 - 1))],
        (Regime::Char3, 5) => always(One),
        (Regime::Char3, 6) => always(Three),
        (Regime::Char3, 7) => always(Two),
        (Regime::Char3, 8) => always(Two),
        (Regime::Char3, 9) => always(One),
        (Regime::Char3, 10) => always(Infinite),
        (Regime::Char3, 11) => always(One),
        (Regime::Char3, 12) => always(One),
        _ => unreachable!(),
    }
}

/// The auxiliary quantity of the left-ideal table caption.
pub(super) fn left_p(v: V<'_>) -> Ex<'_> {
    let V { a1, a2, a4, b1, .. } = v;
    (a4 * b1 - a2 * (1 - a1)).sq() + (2 * a1 * a4 - a2 * (2 * a2 + 1)) * ((2 * a2 + 1) * b1 - 2 * a1 * (1 - a1))
}

/// The auxiliary quantity of the right-ideal table captions.
pub(super) fn right_p(v: V<'_>) -> Ex<'_> {
    let V { a1, a2, a4, b1, .. } = v;
    (a4 * b1 + a1 * (a2 + 1)).sq()
        + a2 * (a2 + 1) * (-4 * a2 * b1 - 4 * a1.sq() + 2 * a1)
        + a4 * (4 * a2 * a1 * b1 - 2 * a2 * b1 + 4 * (a1 - 1) * a1.sq() + a1)
}

/// The characteristic-3 row for `A_1` of the left-ideal table, whose `P` is
/// not defined in that table's caption.
pub(super) fn left_a1_char3<'a>(v: V<'a>, p: Ex<'a>) -> Vec<Cell> {
    let V { a1, a2, a4, b1, .. } = v;
    let c1 = 1 + (2 * a2 + 1).sq() / a4;
    let c2 = a2 * (2 * a2 + 1) / (2 * a4);
    let lin = (1 - a1) * (2 * a1 + a2) / (2 * a2 + 1).sq();
    let at_c1 = (2 * a2 + 1) * (2 * a2.sq() + a2 - a4 * a1) / a4.sq();
    let generic = a4.nonzero() && a1.isnt(c1) && a1.isnt(c2);
    vec![
        c(
            Zero,
            "a4=0, a2!=0,1, b1!=(1-a1)(2a1+a2)/(2a2+1)^2",
            a4.zero() && a2.nonzero() && a2.isnt(1) && b1.isnt(lin),
        ),
        c(Zero, "a4=0, a1!=1, a2=1", a4.zero() && a1.isnt(1) && a2.is(1)),
        c(Zero, "P!=0, a4!=0, a1!=1+(2a2+1)^2/a4, a2(2a2+1)/(2a4)", p.nonzero() && generic),
        c(
            Zero,
            "a4!=0, a1=1+(2a2+1)^2/a4, b1!=(2a2+1)(2a2^2+a2-a4a1)/a4^2",
            a4.nonzero() && a1.is(c1) && b1.isnt(at_c1),
        ),
        c(
            Zero,
            "a4!=0, a1!=1+(2a2+1)^2/a4, a1=a2(2a2+1)/(2a4), b1!=a2(1-a1)/a4",
            a4.nonzero() && a1.isnt(c1) && a1.is(c2) && b1.isnt(a2 * (1 - a1) / a4),
        ),
        c(One, "a4=0, a2!=0,1, b1=(1-a1)(2a1+a2)/(2a2+1)^2", a4.zero() && a2.nonzero() && a2.isnt(1) && b1.is(lin)),
        c(
            One,
            "a4!=0, a1=1+(2a2+1)^2/a4, b1=(2a2+1)(2a2^2+a2-a4a1)/a4^2",
            a4.nonzero() && a1.is(c1) && b1.is(at_c1),
        ),
        c(One, "P=0, a4!=0, a1!=1+(2a2+1)^2/a4, a2(2a2+1)/(2a4)", p.zero() && generic),
        c(One, "a1=1, a2=1, a4=0, b1=2", a1.is(1) && a2.is(1) && a4.zero() && b1.is(2)),
        c(One, "a4=a2=0, b1!=2a1(1-a1)", a4.zero() && a2.zero() && b1.isnt(2 * a1 * (1 - a1))),
        c(
            Two,
            "a4!=0, a1=1+(2a2+1)^2/a4, b1=a2(2a2+1)/(2a4), a2=-(a4+1)",
            a4.nonzero() && a1.is(c1) && b1.is(c2) && a2.is(-(a4 + 1)),
        ),
        c(Two, "a4=0, a1=1, a2=1, b1!=2", a4.zero() && a1.is(1) && a2.is(1) && b1.isnt(2)),
        c(Two, "a4=a2=0, b1=2a1(1-a1)", a4.zero() && a2.zero() && b1.is(2 * a1 * (1 - a1))),
    ]
}

fn left_ideals(fam: FamilyId, v: V<'_>) -> Vec<Cell> {
    let V { a1, a2, a4, b1, b2, .. } = v;
    let half = v.k(1) / 2;
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23, 1) => {
            let p = left_p(v);
            let c1 = 1 + (2 * a2 + 1).sq() / (4 * a4);
            let c2 = a2 * (2 * a2 + 1) / (2 * a4);
            let lin = (1 - a1) * (2 * a1 + a2 + 3 * a1 * a2) / (2 * a2 + 1).sq();
            let at_c1 = (2 * a2 + 1) * (2 * a2.sq() + a2 - 4 * a4 * a1) / (4 * a4.sq());
            let generic = a4.nonzero() && a1.isnt(c1) && a1.isnt(c2);
            let a2_ok = a2.isnt(-half) && a2.nonzero();
            vec![
                c(Zero, "a4=0, a2!=-1/2,0, b1!=(1-a1)(2a1+a2+3a1a2)/(2a2+1)^2", a4.zero() && a2_ok && b1.isnt(lin)),
                c(Zero, "a4=0, a1!=1, a2=-1/2", a4.zero() && a1.isnt(1) && a2.is(-half)),
                c(Zero, "P!=0, a4!=0, a1!=1+(2a2+1)^2/(4a4), a2(2a2+1)/(2a4)", p.nonzero() && generic),
                c(
                    Zero,
                    "a4!=0, a1=1+(2a2+1)^2/(4a4), b1!=(2a2+1)(2a2^2+a2-4a4a1)/(4a4^2)",
                    a4.nonzero() && a1.is(c1) && b1.isnt(at_c1),
                ),
                c(
                    Zero,
                    "a4!=0, a1!=1+(2a2+1)^2/(4a4), a1=a2(2a2+1)/(2a4), b1!=a2(1-a1)/a4",
                    a4.nonzero() && a1.isnt(c1) && a1.is(c2) && b1.isnt(a2 * (1 - a1) / a4),
                ),
                c(One, "a4=0, a2!=-1/2,0, b1=(1-a1)(2a1+a2+3a1a2)/(2a2+1)^2", a4.zero() && a2_ok && b1.is(lin)),
                c(
                    One,
                    "a4!=0, a1=1+(2a2+1)^2/(4a4), b1=(2a2+1)(2a2^2+a2-4a4a1)/(4a4^2)",
                    a4.nonzero() && a1.is(c1) && b1.is(at_c1),
                ),
                c(One, "P=0, a4!=0, a1!=1+(2a2+1)^2/(4a4), a2(2a2+1)/(2a4)", p.zero() && generic),
                c(One, "a1=1, a2=-1/2, a4=0, b1=2", a1.is(1) && a2.is(-half) && a4.zero() && b1.is(2)),
                c(One, "a4=a2=0, b1!=2a1(1-a1)", a4.zero() && a2.zero() && b1.isnt(2 * a1 * (1 - a1))),
                c(
                    Two,
                    "a4!=0, a1=1+(2a2+1)^2/(4a4), b1=a2(2a2+1)/(2a4), a2=-(4a4+1)/2",
                    a4.nonzero() && a1.is(c1) && b1.is(c2) && a2.is(-(4 * a4 + 1) / 2),
                ),
                c(Two, "a4=0, a1=1, a2=-1/2, b1!=2", a4.zero() && a1.is(1) && a2.is(-half) && b1.isnt(2)),
                c(Two, "a4=a2=0, b1=2a1(1-a1)", a4.zero() && a2.zero() && b1.is(2 * a1 * (1 - a1))),
            ]
        }
        (Regime::CharNe23 | Regime::Char3, 2) => {
            let q = b1.sq() + a1 - 1;
            vec![
                c(Zero, "b1!=0, a1=1", b1.nonzero() && a1.is(1)),
                c(Zero, "a1!=1, b2!=a1, b1^2+a1-1!=0", a1.isnt(1) && b2.isnt(a1) && q.nonzero()),
                c(Zero, "a1!=1, b2=a1, b1!=0", a1.isnt(1) && b2.is(a1) && b1.nonzero()),
                c(One, "a1=1, b1=0", a1.is(1) && b1.zero()),
                c(One, "a1!=1, b2!=a1, b1^2+a1-1=0", a1.isnt(1) && b2.isnt(a1) && q.zero()),
                c(Two, "a1!=1, b2=a1, b1=0", a1.isnt(1) && b2.is(a1) && b1.zero()),
            ]
        }
        (Regime::CharNe23, 3) => {
            let e = 1 - 2 * b2 - 4 * b1;
            vec![c(Zero, "1-2b2-4b1!=0", e.nonzero()), c(One, "1-2b2-4b1=0", e.zero())]
        }
        (Regime::CharNe23 | Regime::Char3, 4) => vec![
            c(One, "a1!=1", a1.isnt(1)),
            c(Two, "a1=1, b2!=a1", a1.is(1) && b2.isnt(a1)),
            c(Infinite, "b2=a1=1", b2.is(1) && a1.is(1)),
        ],
        (Regime::CharNe23, 5) => always(One),
        (Regime::CharNe23, 6) => vec![
            c(Zero, "a1=0, b1!=0", a1.zero() && b1.nonzero()),
            c(Zero, "a1!=0,1/2, b1^2!=a1", a1.nonzero() && a1.isnt(half) && b1.sq().isnt(a1)),
            c(One, "a1=1/2, b1=0", a1.is(half) && b1.zero()),
            c(One, "a1!=0,1/2, b1^2=a1", a1.nonzero() && a1.isnt(half) && b1.sq().is(a1)),
            c(Two, "a1=1/2, b1=0", a1.is(half) && b1.zero()),
        ],
        (Regime::CharNe23 | Regime::Char3, 7) => {
            vec![c(Zero, "b1!=0", b1.nonzero()), c(One, "b1=0", b1.zero())]
        }
        (Regime::CharNe23 | Regime::Char3, 8) => vec![c(One, "a1!=0", a1.nonzero()), c(Two, "a1=0", a1.zero())],
        (Regime::CharNe23, 9) => always(One),
        (Regime::CharNe23, 10) => always(One),
        (Regime::CharNe23, 11) => always(Zero),
        (Regime::CharNe23, 12) => always(One),

        (Regime::Char2, 1) => {
            let e1 = a2 * (1 - a1).sq() - b1;
            let e2 = a4.sq() * b1.sq() + a2.sq() * (1 - a1).sq() + a2 * b1;
            vec![
                c(Zero, "a4=0, a2!=0, a2(1-a1)^2-b1!=0", a4.zero() && a2.nonzero() && e1.nonzero()),
                c(Zero, "a2a4!=0, a4^2b1^2+a2^2(1-a1)^2+a2b1!=0", (a2 * a4).nonzero() && e2.nonzero()),
                c(Zero, "a4b1!=0, a2=0", (a4 * b1).nonzero() && a2.zero()),
                c(One, "a4=0, a2!=0, a2(1-a1)^2-b1=0", a4.zero() && a2.nonzero() && e1.zero()),
                c(One, "a2a4!=0, a4^2b1^2+a2^2(1-a1)^2+a2b1=0", (a2 * a4).nonzero() && e2.zero()),
                c(One, "a4=0, a2=0, b1!=0", a4.zero() && a2.zero() && b1.nonzero()),
                c(Two, "a4!=0, a2=b1=0", a4.nonzero() && a2.zero() && b1.zero()),
                c(Two, "a4=a2=0, b1=0", a4.zero() && a2.zero() && b1.zero()),
            ]
        }
        (Regime::Char2, 2) => {
            let e = (a1.sq() + b2.sq()) * (1 - a1) + b1.sq();
            vec![c(Zero, "(a1^2+b2^2)(1-a1)+b1^2!=0", e.nonzero()), c(One, "(a1^2+b2^2)(1-a1)+b1^2=0", e.zero())]
        }
        (Regime::Char2, 3) => vec![
            c(Zero, "a1!=1", a1.isnt(1)),
            c(One, "a1=b2=1", a1.is(1) && b2.is(1)),
            c(Two, "a1=1, b2!=1", a1.is(1) && b2.isnt(1)),
        ],
        (Regime::Char2, 4) => vec![
            c(One, "a1!=1", a1.isnt(1)),
            c(Two, "a1=1, a1-b2!=0", a1.is(1) && (a1 - b2).nonzero()),
            c(Infinite, "b2=a1=1", b2.is(1) && a1.is(1)),
        ],
        (Regime::Char2, 5) => always(One),
        (Regime::Char2, 6) => {
            let e = a1 + b1.sq();
            vec![c(Zero, "a1+b1^2!=0", e.nonzero()), c(One, "a1+b1^2=0", e.zero())]
        }
        (Regime::Char2, 7) => vec![c(Zero, "a1!=0", a1.nonzero()), c(Two, "a1=0", a1.zero())],
        (Regime::Char2, 8) => vec![c(One, "a1!=0", a1.nonzero()), c(Two, "a1=0", a1.zero())],
        (Regime::Char2, 9) => always(One),
        (Regime::Char2, 10) => always(One),
        (Regime::Char2, 11) => always(Zero),
        (Regime::Char2, 12) => always(One),

        (Regime::Char3, 1) => left_a1_char3(v, left_p(v)),
        (Regime::Char3, 3) => {
            let e = 1 - 2 * b2 - b1;
            vec![c(Zero, "1-2b2-b1!=0", e.nonzero()), c(One, "1-2b2-b1=0", e.zero())]
        }
        (Regime::Char3, 5) => always(One),
        (Regime::Char3, 6) => vec![
            c(Zero, "a1=0, b1!=0", a1.zero() && b1.nonzero()),
            c(Zero, "a1!=0,-1, b1^2!=a1", a1.nonzero() && a1.isnt(-1) && b1.sq().isnt(a1)),
            c(One, "a1=-1, b1=0", a1.is(-1) && b1.zero()),
            c(One, "a1!=0,-1, b1^2=a1", a1.nonzero() && a1.isnt(-1) && b1.sq().is(a1)),
            c(Two, "a1=-1, b1=0", a1.is(-1) && b1.zero()),
        ],
        (Regime::Char3, 9) => always(Zero),
        (Regime::Char3, 10) => always(One),
        (Regime::Char3, 11) => always(One),
        (Regime::Char3, 12) => always(One),
        _ => unreachable!(),
    }
}

fn right_ideals(fam: FamilyId, v: V<'_>) -> Vec<Cell> {
    let V { a1, a2, a4, b1, b2, .. } = v;
    let half = v.k(1) / 2;
    let quarter = v.k(1) / 4;
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23, 1) => {
            let p = right_p(v);
            let d1 = a2.sq() / a4;
            let d2 = half + a2 * (a2 + 1) / a4;
            let lin = a1 * (2 * a2 + a1 - 3 * a1 * a2) / (4 * a2.sq());
            let at_d1 = a2.sq() * (a2 + 2 * a4 - 4 * a4 * a1 + 1) / a4.sq();
            let at_d2 = -a1 * (a2 + 1) / a4;
            let a2_ok = a2.nonzero() && a2.isnt(-1);
            let generic = a4.nonzero() && a1.isnt(d1) && a1.isnt(d2);
            let zeros = a4.zero() && a1.zero() && a2.zero();
            vec![
                c(Zero, "a4=0, a2!=0,-1, b1!=a1(2a2+a1-3a1a2)/(4a2^2)", a4.zero() && a2_ok && b1.isnt(lin)),
                c(Zero, "a4=a2=0, a1!=0", a4.zero() && a2.zero() && a1.nonzero()),
                c(Zero, "a4!=0, a1!=a2^2/a4, 1/2+a2(a2+1)/a4, P!=0", generic && p.nonzero()),
                c(
                    Zero,
                    "a4!=0, a1=a2^2/a4, b1!=a2^2(a2+2a4-4a4a1+1)/a4^2",
                    a4.nonzero() && a1.is(d1) && b1.isnt(at_d1),
                ),
                c(
                    Zero,
                    "a4!=0, a1=1/2+a2(a2+1)/a4, a2!=-a4/2, b1!=-a1(a2+1)/a4",
                    a4.nonzero() && a1.is(d2) && a2.isnt(-a4 / 2) && b1.isnt(at_d2),
                ),
                c(One, "a4=0, a2!=0,-1, b1=a1(2a2+a1-3a1a2)/(4a2^2)", a4.zero() && a2_ok && b1.is(lin)),
                c(One, "a4=a1=a2=0, b1=-1/4", zeros && b1.is(-quarter)),
                c(One, "a4!=0, a1!=a2^2/a4, 1/2+a2(a2+1)/a4, P=0", generic && p.zero()),
                c(
                    One,
                    "a4!=0, a1=a2^2/a4, b1=a2^2(a2+2a4-4a4a1+1)/a4^2",
                    a4.nonzero() && a1.is(d1) && b1.is(at_d1),
                ),
                c(One, "a4=0, a2=-1, b1!=a1(2a1-1)/2", a4.zero() && a2.is(-1) && b1.isnt(a1 * (2 * a1 - 1) / 2)),
                c(
                    Two,
                    "a4!=0, a1=1/2+a2(a2+1)/a4, a2!=-a4/2, b1=-a1(a2+1)/a4",
                    a4.nonzero() && a1.is(d2) && a2.isnt(-a4 / 2) && b1.is(at_d2),
                ),
                c(Two, "a4=a1=a2=0, b1!=-1/4", zeros && b1.isnt(-quarter)),
                c(Two, "a4=0, a2=-1, b1=a1(2a1-1)/2", a4.zero() && a2.is(-1) && b1.is(a1 * (2 * a1 - 1) / 2)),
            ]
        }
        (Regime::CharNe23, 2) => {
            let e = b1.sq() - b2 * (2 * a1 - 1).sq();
            vec![
                c(Zero, "b1!=0, b2=0", b1.nonzero() && b2.zero()),
                c(Zero, "a1!=1/2, b2!=0, b1^2-b2(2a1-1)^2!=0", a1.isnt(half) && b2.nonzero() && e.nonzero()),
                c(Zero, "a1=1/2, b2!=0, b1!=0", a1.is(half) && b2.nonzero() && b1.nonzero()),
                c(One, "b2!=0, b1=0", b2.nonzero() && b1.zero()),
                c(One, "a1!=1/2, b2!=0, b1^2-b2(2a1-1)^2=0", a1.isnt(half) && b2.nonzero() && e.zero()),
                c(Two, "a1=1/2, b2!=0, b1=0", a1.is(half) && b2.nonzero() && b1.zero()),
            ]
        }
        (Regime::CharNe23, 3) => {
            let e = b2.sq() - 2 * b2 - 4 * b1;
            vec![c(Zero, "b2^2-2b2-4b1!=0", e.nonzero()), c(One, "b2^2-2b2-4b1=0", e.zero())]
        }
        (Regime::CharNe23, 4) => vec![
            c(One, "b2!=0", b2.nonzero()),
            c(Two, "b2=0, a1!=1/2", b2.zero() && a1.isnt(half)),
            c(Infinite, "b2=0, a1=1/2", b2.zero() && a1.is(half)),
        ],
        (Regime::CharNe23, 5) => always(One),
        (Regime::CharNe23, 6) => {
            let e = b1.sq() - 4 * a1.sq() + 4 * a1.cube();
            vec![
                c(Zero, "a1=1, b1!=0", a1.is(1) && b1.nonzero()),
                c(Zero, "a1!=1,0, b1^2-4a1^2+4a1^3!=0", a1.isnt(1) && a1.nonzero() && e.nonzero()),
                c(Zero, "a1=0, b1!=0", a1.zero() && b1.nonzero()),
                c(One, "a1=1, b1=0", a1.is(1) && b1.zero()),
                c(One, "a1!=1,0, b1^2-4a1^2+4a1^3=0", a1.isnt(1) && a1.nonzero() && e.zero()),
                c(Two, "a1=b1=0", a1.zero() && b1.zero()),
            ]
        }
        (Regime::CharNe23, 7) => vec![c(Zero, "b1!=1/4", b1.isnt(quarter)), c(One, "b1=1/4", b1.is(quarter))],
        (Regime::CharNe23 | Regime::Char3, 8) => vec![c(One, "a1!=1", a1.isnt(1)), c(Two, "a1=1", a1.is(1))],
        (Regime::CharNe23, 9) => always(One),
        (Regime::CharNe23, 10) => always(One),
        (Regime::CharNe23, 11) => always(Zero),
        (Regime::CharNe23, 12) => always(One),

        (Regime::Char2, 1) => {
            let crit = -((a2 + 1).sq() * (1 - a1).sq() - b1.sq() * a4.sq()) / a4;
            vec![
                c(Zero, "a4=0, a1!=0, a2!=1", a4.zero() && a1.nonzero() && a2.isnt(1)),
                c(Zero, "a4!=0, a1!=-((a2+1)^2(1-a1)^2-b1^2a4^2)/a4", a4.nonzero() && a1.isnt(crit)),
                c(One, "a4!=0, a1=-((a2+1)^2(1-a1)^2-b1^2a4^2)/a4", a4.nonzero() && a1.is(crit)),
                c(One, "a4=0, a1!=0, a2=1", a4.zero() && a1.nonzero() && a2.is(1)),
                c(Two, "a4=a1=0, a2!=1", a4.zero() && a1.zero() && a2.isnt(1)),
                c(Two, "a4=a1=0, a2=1", a4.zero() && a1.zero() && a2.is(1)),
            ]
        }
        (Regime::Char2, 2) => {
            let e = b1 - b2.sq();
            vec![c(Zero, "b1-b2^2!=0", e.nonzero()), c(One, "b1-b2^2=0", e.zero())]
        }
        (Regime::Char2, 3) => vec![c(Zero, "b2!=0", b2.nonzero()), c(Two, "b2=0", b2.zero())],
        (Regime::Char2, 4) => vec![c(One, "b2!=0", b2.nonzero()), c(Two, "b2=0", b2.zero())],
        (Regime::Char2, 5) => always(One),
        (Regime::Char2, 6) => vec![c(Zero, "b1!=0", b1.nonzero()), c(One, "b1=0", b1.zero())],
        (Regime::Char2, 7) => vec![c(Zero, "a1!=0", a1.nonzero()), c(One, "a1=0", a1.zero())],
        (Regime::Char2, 8) => vec![c(One, "a1!=1", a1.isnt(1)), c(Infinite, "a1=1", a1.is(1))],
        (Regime::Char2, 9) => always(One),
        (Regime::Char2, 10) => always(One),
        (Regime::Char2, 11) => always(Zero),
        (Regime::Char2, 12) => always(One),

        (Regime::Char3, 1) => {
            let p = right_p(v);
            let d1 = a2.sq() / a4;
            let d2 = -1 + a2 * (a2 + 1) / a4;
            let lin = a1 * (2 * a2 + a1) / a2.sq();
            let at_d1 = a2.sq() * (a2 + 2 * a4 - a4 * a1 + 1) / a4.sq();
            let at_d2 = -a1 * (a2 + 1) / a4;
            let a2_ok = a2.nonzero() && a2.isnt(-1);
            let generic = a4.nonzero() && a1.isnt(d1) && a1.isnt(d2);
            let zeros = a4.zero() && a1.zero() && a2.zero();
            vec![
                c(Zero, "a4=0, a2!=0,-1, b1!=a1(2a2+a1)/a2^2", a4.zero() && a2_ok && b1.isnt(lin)),
                c(Zero, "a1!=0, a4=a2=0", a1.nonzero() && a4.zero() && a2.zero()),
                c(Zero, "P!=0, a4!=0, a1!=a2^2/a4, -1+a2(a2+1)/a4", p.nonzero() && generic),
                c(
                    Zero,
                    "a4!=0, a1=a2^2/a4, b1!=a2^2(a2+2a4-a4a1+1)/a4^2",
                    a4.nonzero() && a1.is(d1) && b1.isnt(at_d1),
                ),
                c(
                    Zero,
                    "a2!=a4, a4!=0, a1=-1+a2(a2+1)/a4, b1!=-a1(a2+1)/a4",
                    a2.isnt(a4) && a4.nonzero() && a1.is(d2) && b1.isnt(at_d2),
                ),
                c(One, "a4=0, a2!=0,-1, b1=a1(2a2+a1)/a2^2", a4.zero() && a2_ok && b1.is(lin)),
                c(One, "a4=a1=a2=0, b1=-1/4", zeros && b1.is(-quarter)),
                c(One, "P=0, a4!=0, a1!=a2^2/a4, -1+a2(a2+1)/a4", p.zero() && generic),
                c(
                    One,
                    "a4!=0, a1=a2^2/a4, b1=a2^2(a2+2a4-a4a1+1)/a4^2",
                    a4.nonzero() && a1.is(d1) && b1.is(at_d1),
                ),
                c(One, "a4=0, a2=-1, b1!=-a1(2a1-1)", a4.zero() && a2.is(-1) && b1.isnt(-a1 * (2 * a1 - 1))),
                c(
                    Two,
                    "a4!=0, a1=1/2+a2(a2+1)/a4, a2!=a4, b1=-a1(a2+1)/a4",
                    a4.nonzero() && a1.is(half + a2 * (a2 + 1) / a4) && a2.isnt(a4) && b1.is(at_d2),
                ),
                c(Two, "a4=a1=a2=0, b1!=-1", zeros && b1.isnt(-1)),
                c(Two, "a4=0, a2=-1, b1=-a1(2a1-1)", a4.zero() && a2.is(-1) && b1.is(-a1 * (2 * a1 - 1))),
            ]
        }
        (Regime::Char3, 2) => {
            let e = b1.sq() - b2 * (2 * a2 - 1).sq();
            vec![
                c(Zero, "b1!=0, b2=0", b1.nonzero() && b2.zero()),
                c(Zero, "a1!=-1, b2!=0, b1^2-b2(2a2-1)^2!=0", a1.isnt(-1) && b2.nonzero() && e.nonzero()),
                c(Zero, "a1=-1, b2!=0, b1!=0", a1.is(-1) && b2.nonzero() && b1.nonzero()),
                c(One, "b2!=0, b1=0", b2.nonzero() && b1.zero()),
                c(One, "a1!=-1, b2!=0, b1^2-b2(2a2-1)^2=0", a1.isnt(-1) && b2.nonzero() && e.zero()),
                c(Two, "a1=-1, b2!=0, b1=0", a1.is(-1) && b2.nonzero() && b1.zero()),
            ]
        }
        (Regime::Char3, 3) => {
            let e = b2.sq() - 2 * b2 - b1;
            vec![c(Zero, "b2^2-2b2-b1!=0", e.nonzero()), c(One, "b2^2-2b2-b1=0", e.zero())]
        }
        (Regime::Char3, 4) => vec![
            c(One, "b2!=0", b2.nonzero()),
            c(Two, "b2=0, a1!=-1", b2.zero() && a1.isnt(-1)),
            c(Infinite, "b2=0, a1=-1", b2.zero() && a1.is(-1)),
        ],
        (Regime::Char3, 5) => always(One),
        (Regime::Char3, 6) => {
            let e = b1.sq() - a1.sq() + a1.cube();
            vec![
                c(Zero, "a1=1, b1!=0", a1.is(1) && b1.nonzero()),
                c(Zero, "a1!=0,1, b1^2-a1^2+a1^3!=0", a1.nonzero() && a1.isnt(1) && e.nonzero()),
                c(Zero, "a1=0, b1!=0", a1.zero() && b1.nonzero()),
                c(One, "a1=1, b1=0", a1.is(1) && b1.zero()),
                c(One, "a1!=1,0, b1^2-a1^2+a1^3=0", a1.isnt(1) && a1.nonzero() && e.zero()),
                c(Two, "a1=b1=0", a1.zero() && b1.zero()),
            ]
        }
        (Regime::Char3, 7) => vec![c(Zero, "b1!=1", b1.isnt(1)), c(One, "b1=1", b1.is(1))],
        (Regime::Char3, 9) => always(One),
        (Regime::Char3, 10) => always(One),
        (Regime::Char3, 11) => always(One),
        (Regime::Char3, 12) => always(One),
        _ => unreachable!(),
    }
}

/// The one-ideal condition of the `A_1` two-sided row; `b1_rhs` is the
/// right-hand side of the `b1` equation.
pub(super) fn two_sided_a1<'a>(v: V<'a>, b1_rhs: Ex<'a>, text: [&'static str; 2]) -> Vec<Cell> {
    let V { a1, a2, a4, b1, .. } = v;
    let on = a4.is(-a1 - 2 * a2) && b1.is(b1_rhs);
    let off = a4.isnt(-a1 - 2 * a2) || b1.isnt(b1_rhs);
    vec![c(Zero, text[0], off), c(One, text[1], on)]
}

fn two_sided(fam: FamilyId, v: V<'_>) -> Vec<Cell> {
    let V { a1, a2, a4, b1, b2, .. } = v;
    let half = v.k(1) / 2;
    let a1_text = ["a4!=-a1-2a2 or b1!=2a1+a2", "a4=-a1-2a2, b1=2a1+a2"];
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23 | Regime::Char3, 1) => two_sided_a1(v, 2 * a1 + a2, a1_text),
        (Regime::CharNe23 | Regime::Char3, 2) => {
            let q = b1.sq() + a1 - 1;
            let mid = a1.isnt(half) && a1.isnt(1) && b2.is(1 - a1);
            vec![
                c(Zero, "a1=1, b1!=0, b2=0", a1.is(1) && b1.nonzero() && b2.zero()),
                c(Zero, "a1!=1/2,1, b1^2+a1-1!=0, b2=1-a1", mid && q.nonzero()),
                c(Zero, "a1=b2=1/2, b1!=0", a1.is(half) && b2.is(half) && b1.nonzero()),
                c(Zero, "b2!=1-a1", b2.isnt(1 - a1)),
                c(One, "a1=1, b1=b2=0", a1.is(1) && b1.zero() && b2.zero()),
                c(One, "a1!=1/2,1, b2=1-a1, b1^2+a1-1=0", mid && q.zero()),
                c(Two, "a1=b2=1/2, b1=0", a1.is(half) && b2.is(half) && b1.zero()),
            ]
        }
        (Regime::CharNe23, 3) => {
            let quarter = v.k(1) / 4;
            vec![
                c(Zero, "b1!=-1/4, b2=1", b1.isnt(-quarter) && b2.is(1)),
                c(Zero, "b1!=1", b1.isnt(1)),
                c(One, "b1=-1/4, b2=1", b1.is(-quarter) && b2.is(1)),
            ]
        }
        (_, 4) => vec![
            c(One, "a1!=1, b2=1-a1", a1.isnt(1) && b2.is(1 - a1)),
            c(One, "b2!=1-a1", b2.isnt(1 - a1)),
            c(Two, "a1=1, b2=0", a1.is(1) && b2.zero()),
        ],
        (_, 5) => always(One),
        (_, 6) => always(Zero),
        (_, 7) => always(Zero),
        (_, 8) => always(One),
        (Regime::CharNe23 | Regime::Char2, 9) => always(One),
        (Regime::Char3, 9) => always(Zero),
        (Regime::CharNe23 | Regime::Char2, 11) => always(Zero),
        (Regime::Char3, 11) => always(One),
        (_, 10 | 12) => always(One),

        (Regime::Char2, 1) => vec![
            c(Zero, "a4!=a1 or b1!=a2", a4.isnt(a1) || b1.isnt(a2)),
            c(One, "a4=a1, b1=a2", a4.is(a1) && b1.is(a2)),
        ],
        (Regime::Char2, 2) => {
            let q = 1 - a1 + b1.sq();
            vec![
                c(Zero, "1-a1+b1^2!=0, b2=1-a1", q.nonzero() && b2.is(1 - a1)),
                c(Zero, "b2!=1-a1", b2.isnt(1 - a1)),
                c(One, "1-a1+b1^2=0, b2=1-a1", q.zero() && b2.is(1 - a1)),
            ]
        }
        (Regime::Char2, 3) => vec![
            c(Zero, "a1!=1 or b2!=0", a1.isnt(1) || b2.nonzero()),
            c(Two, "a1=1, b2=0", a1.is(1) && b2.zero()),
        ],
        (Regime::Char3, 3) => vec![
            c(Zero, "b1!=-1, b2=1", b1.isnt(-1) && b2.is(1)),
            c(Zero, "b2!=1", b2.isnt(1)),
            c(One, "b1=-1, b2=1", b1.is(-1) && b2.is(1)),
        ],
        _ => unreachable!(),
    }
}

/// A row of the quasiunit table: a condition and the set it lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiRow {
    pub condition: &'static str,
    pub holds: bool,
    pub set: Option<AffineSolutionSet<u32>>,
}

fn point(x: Ex<'_>, y: Ex<'_>) -> Option<AffineSolutionSet<u32>> {
    Some(AffineSolutionSet::Point(Element::new(x.value()?, y.value()?)))
}

fn line<'a>(v: V<'a>, base: (Ex<'a>, Ex<'a>), dir: (Ex<'a>, Ex<'a>)) -> Option<AffineSolutionSet<u32>> {
    let b = Element::new(base.0.value()?, base.1.value()?);
    let d = Element::new(dir.0.value()?, dir.1.value()?);
    Some(AffineSolutionSet::line(v.f, b, d))
}

fn q(condition: &'static str, holds: bool, set: Option<AffineSolutionSet<u32>>) -> QuasiRow {
    QuasiRow { condition, holds, set }
}

pub fn quasiunit_rows(fam: FamilyId, a: &Msc<GaloisField>) -> Vec<QuasiRow> {
    let v = V::of(a);
    let V { a1, a2, a4, b1, b2, .. } = v;
    let (zero, one) = (v.k(0), v.k(1));
    let e1_plus_te2 = || line(v, (one, zero), (zero, one));
    let e2 = || point(zero, one);
    let inv_a1 = || point(1 / a1, zero);
    let half = one / 2;
    let third = one / 3;
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23, 1) => vec![
            q(
                "A_1(a1, -(2a1(a1-1)+b1)/(2b1), -2a2(a1-1)/(2b1), b1), b1!=0: 2(a1-1)/b1 e1+2e2",
                b1.nonzero()
                    && a2.is(-(2 * a1 * (a1 - 1) + b1) / (2 * b1))
                    && a4.is(-2 * a2 * (a1 - 1) / (2 * b1)),
                point(2 * (a1 - 1) / b1, v.k(2)),
            ),
            q(
                "A_1(1, a2, a2(1+2a2)/2, 0): -(1+2a2)e1+2e2",
                a1.is(1) && b1.zero() && a4.is(a2 * (1 + 2 * a2) / 2),
                point(-(1 + 2 * a2), v.k(2)),
            ),
        ],
        (Regime::CharNe23, 2) => vec![q(
            "A_2(a1, 0, a1), a1!=0: (1/a1)e1",
            a1.nonzero() && b1.zero() && b2.is(a1),
            inv_a1(),
        )],
        (Regime::CharNe23, 4) => vec![
            q("A_4(1, b2): e1+te2", a1.is(1), e1_plus_te2()),
            q(
                "A_4(a1, b2), a1!=0,1, b2!=2a1-1: (1/a1)e1",
                a1.nonzero() && a1.isnt(1) && b2.isnt(2 * a1 - 1),
                inv_a1(),
            ),
            q(
                "A_4(a1, 2a1-1), a1!=0,1: (1/a1)e1+te2",
                a1.nonzero() && a1.isnt(1) && b2.is(2 * a1 - 1),
                line(v, (1 / a1, zero), (zero, one)),
            ),
        ],
        (Regime::CharNe23, 5) => vec![q("A_5(1): e1+te2", a1.is(1), e1_plus_te2())],
        (Regime::CharNe23, 6) => {
            vec![q("A_6(1/2, 0): 2e1", a1.is(half) && b1.zero(), point(v.k(2), zero))]
        }
        (Regime::CharNe23, 8) => vec![
            q("A_8(a1), a1!=0,1/3: (1/a1)e1", a1.nonzero() && a1.isnt(third), inv_a1()),
            q("A_8(1/3): 3e1+te2", a1.is(third), line(v, (v.k(3), zero), (zero, one))),
        ],
        (Regime::CharNe23, 10) => vec![q("A_10: -e2", true, point(zero, -one))],

        (Regime::Char2, 1) => vec![q(
            "A_{1,2}(a1, 0, a4, 0), a1!=0: -(1/a1)e1",
            a1.nonzero() && a2.zero() && b1.zero(),
            point(-1 / a1, zero),
        )],
        (Regime::Char2, 2) => vec![q("A_{2,2}(a1, 0, b2), a1!=0: (1/a1)e1", a1.nonzero() && b1.zero(), inv_a1())],
        (Regime::Char2, 3) => vec![q("A_{3,2}(a1, 1), A_{3,2}(1, b2): e2", b2.is(1) || a1.is(1), e2())],
        (Regime::Char2, 4) => vec![
            q("A_{4,2}(1, b2): e1+te2", a1.is(1), e1_plus_te2()),
            q(
                "A_{4,2}(a1, b2), a1!=0,1, b2!=1: (1/a1)e1",
                a1.nonzero() && a1.isnt(1) && b2.isnt(1),
                inv_a1(),
            ),
            q(
                "A_{4,2}(a1, 1), a1!=0,1: (1/a1)e1+te2",
                a1.nonzero() && a1.isnt(1) && b2.is(1),
                line(v, (1 / a1, zero), (zero, one)),
            ),
        ],
        (Regime::Char2, 5) => vec![q("A_{5,2}(1): e1+te2", a1.is(1), e1_plus_te2())],
        (Regime::Char2, 6) => vec![q("A_{6,2}(a1, 0), a1!=0: (1/a1)e1", a1.nonzero() && b1.zero(), inv_a1())],
        (Regime::Char2, 7) => vec![q("A_{7,2}(0), A_{7,2}(1): e2", a1.zero() || a1.is(1), e2())],
        (Regime::Char2, 8) => vec![
            q("A_{8,2}(a1), a1!=0,1: (1/a1)e1", a1.nonzero() && a1.isnt(1), inv_a1()),
            q("A_{8,2}(1): e1+te2", a1.is(1), e1_plus_te2()),
        ],
        (Regime::Char2, 10) => vec![q("A_{10,2}: e2", true, e2())],

        (Regime::Char3, 1) => vec![
            q(
                "A_{1,3}(a1, a1(1-a1)/b1-1/2, a1(1-a1)^2/b1^2-(1-a1)/(2b1), b1), b1!=0: ((1-a1)/b1)e1+2e2",
                b1.nonzero()
                    && a2.is(a1 * (1 - a1) / b1 - half)
                    && a4.is(a1 * (1 - a1).sq() / b1.sq() - (1 - a1) / (2 * b1)),
                point((1 - a1) / b1, v.k(2)),
            ),
            q(
                "A_{1,3}(1, a2, a2(2a2+1)/2, 0): (a2-1)e1+2e2",
                a1.is(1) && b1.zero() && a4.is(a2 * (2 * a2 + 1) / 2),
                point(a2 - 1, v.k(2)),
            ),
        ],
        (Regime::Char3, 2) => vec![q(
            "A_{2,3}(a1, 0, a1), a1!=0: (1/a1)e1",
            a1.nonzero() && b1.zero() && b2.is(a1),
            inv_a1(),
        )],
        (Regime::Char3, 4) => vec![
            q(
                "A_{4,3}(a1, -1-a1), a1!=0,1: (1/a1)e1+te2",
                a1.nonzero() && a1.isnt(1) && b2.is(-1 - a1),
                line(v, (1 / a1, zero), (zero, one)),
            ),
            q(
                "A_{4,3}(a1, b2), a1!=0,1, b2!=-1-a1: (1/a1)e1",
                a1.nonzero() && a1.isnt(1) && b2.isnt(-1 - a1),
                inv_a1(),
            ),
            q("A_{4,3}(1, b2): e1+te2", a1.is(1), e1_plus_te2()),
        ],
        (Regime::Char3, 5) => vec![q("A_{5,3}(1): e1+te2", a1.is(1), e1_plus_te2())],
        (Regime::Char3, 6) => vec![q("A_{6,3}(-1, 0): -e1", a1.is(-1) && b1.zero(), point(-one, zero))],
        (Regime::Char3, 8) => vec![q("A_{8,3}(a1), a1!=0: (1/a1)e1", a1.nonzero(), inv_a1())],
        (Regime::Char3, 10) => vec![q("A_{10,3}: te1-e2", true, line(v, (zero, -one), (one, zero)))],
        _ => Vec::new(),
    }
}

pub(super) fn predict_quasiunits(fam: FamilyId, a: &Msc<GaloisField>) -> Prediction {
    let rows = quasiunit_rows(fam, a);
    let hits: Vec<&QuasiRow> = rows.iter().filter(|r| r.holds).collect();
    let cite = |r: &QuasiRow| format!("Table 9, {}", r.condition);
    match hits.as_slice() {
        [] => Prediction::Quasiunits {
            set: AffineSolutionSet::Empty,
            citation: format!("Table 9, {fam}: no row (no left quasiunit)"),
        },
        [r] => match &r.set {
            Some(set) => Prediction::Quasiunits { set: set.clone(), citation: cite(r) },
            None => Prediction::NoRow { citation: format!("{} (listed element undefined)", cite(r)) },
        },
        many => Prediction::Conflict { citations: many.iter().map(|r| cite(r)).collect() },
    }
}
