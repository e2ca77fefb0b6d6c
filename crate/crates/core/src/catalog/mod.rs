//! The twelve canonical families in each characteristic regime, their
//! published counts as executable predicates, and a sweep that checks those
//! predicates against the solvers.

mod ex;
mod probes;
mod sweep;
mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Msc;
use crate::field::{Field, FieldError, GaloisField};
use crate::poly::{CountCategory, PolyError};
use crate::solvers::AffineSolutionSet;

pub use ex::{Ex, Operand};
pub use probes::{ProbeReport, ReadingTally};
pub use sweep::{sweep_verify, verify_params, Budget, OracleMode, SweepOptions, SweepReport, Verdict, VerifyLine, DEFAULT_SEED};
pub use tables::{cells, quasiunit_rows, Cell, QuasiRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("{family} does not exist in characteristic {characteristic}")]
    RegimeMismatch { family: String, characteristic: u64 },
    #[error("{family} takes {expected} parameters, got {got}")]
    ArityMismatch { family: String, expected: usize, got: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown regime {0:?} (expected ne23, char2 or char3)")]
    UnknownRegime(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    #[serde(rename = "ne23")]
    CharNe23,
    Char2,
    Char3,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::CharNe23, Regime::Char2, Regime::Char3];

    pub fn of_characteristic(p: u64) -> Regime {
        match p {
            2 => Regime::Char2,
            3 => Regime::Char3,
            _ => Regime::CharNe23,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::CharNe23 => "ne23",
            Regime::Char2 => "char2",
            Regime::Char3 => "char3",
        }
    }

    pub fn parse(s: &str) -> Result<Regime, CatalogError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ne23" | "charne23" => Ok(Regime::CharNe23),
            "char2" | "2" => Ok(Regime::Char2),
            "char3" | "3" => Ok(Regime::Char3),
            other => Err(CatalogError::UnknownRegime(other.into())),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `A_index` in a regime; printed `A_3`, `A_{3,2}` or `A_{3,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    index: u8,
    regime: Regime,
}

const ARITY: [usize; 12] = [4, 3, 2, 2, 1, 2, 1, 1, 0, 0, 0, 0];

impl FamilyId {
    pub fn new(index: u8, regime: Regime) -> Result<Self, CatalogError> {
        if !(1..=12).contains(&index) {
            return Err(CatalogError::UnknownFamily(format!("A_{index}")));
        }
        Ok(FamilyId { index, regime })
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn regime(self) -> Regime {
        self.regime
    }

    pub fn arity(self) -> usize {
        ARITY[self.index as usize - 1]
    }

    pub fn all(regime: Regime) -> impl Iterator<Item = FamilyId> {
        (1..=12).map(move |index| FamilyId { index, regime })
    }

    /// Accepts `A_7`, `A7`, `7`, `A_{7,2}`; a subscript regime must agree
    /// with `regime`.
    pub fn parse(name: &str, regime: Regime) -> Result<Self, CatalogError> {
        let bad = || CatalogError::UnknownFamily(name.into());
        let s = name.trim();
        let s = s.strip_prefix(['A', 'a']).unwrap_or(s);
        let s = s.strip_prefix('_').unwrap_or(s);
        let s = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
        let (idx, sub) = match s.split_once(',') {
            Some((i, r)) => (i, Some(r.trim())),
            None => (s, None),
        };
        let index: u8 = idx.trim().parse().map_err(|_| bad())?;
        if let Some(r) = sub {
            let stated = match r {
                "2" => Regime::Char2,
                "3" => Regime::Char3,
                _ => return Err(bad()),
            };
            if stated != regime {
                return Err(bad());
            }
        }
        FamilyId::new(index, regime)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.regime {
            Regime::CharNe23 => write!(f, "A_{}", self.index),
            Regime::Char2 => write!(f, "A_{{{},2}}", self.index),
            Regime::Char3 => write!(f, "A_{{{},3}}", self.index),
        }
    }
}

fn check<F: Field>(fam: FamilyId, params: &[F::Elem], f: &F) -> Result<(), CatalogError> {
    let p = f.characteristic();
    if Regime::of_characteristic(p) != fam.regime {
        return Err(CatalogError::RegimeMismatch { family: fam.to_string(), characteristic: p });
    }
    if params.len() != fam.arity() {
        return Err(CatalogError::ArityMismatch { family: fam.to_string(), expected: fam.arity(), got: params.len() });
    }
    Ok(())
}

/// The structure constants of a canonical family at a parameter point.
pub fn instantiate<F: Field>(fam: FamilyId, params: &[F::Elem], f: &F) -> Result<Msc<F>, CatalogError> {
    check(fam, params, f)?;
    let k = |n: i64| f.from_i64(n);
    let c = |i: usize| params[i].clone();
    let one_minus = |x: &F::Elem| f.sub(&k(1), x);
    let frac = |n: i64, d: i64| f.div(&k(n), &k(d)).expect("denominator is a unit in this regime");
    use Regime::*;
    let (alpha, beta) = match (fam.regime, fam.index) {
        (_, 1) => {
            let (a1, a2, a4, b1) = (c(0), c(1), c(2), c(3));
            let a3 = f.add(&a2, &k(1));
            ([a1.clone(), a2.clone(), a3, a4], [b1, f.neg(&a1), one_minus(&a1), f.neg(&a2)])
        }
        (_, 2) => {
            let (a1, b1, b2) = (c(0), c(1), c(2));
            ([a1.clone(), k(0), k(0), k(1)], [b1, b2, one_minus(&a1), k(0)])
        }
        (Char2, 3) => {
            let (a1, b2) = (c(0), c(1));
            ([a1.clone(), k(1), k(1), k(0)], [k(0), b2, one_minus(&a1), k(1)])
        }
        (_, 3) => ([k(0), k(1), k(1), k(0)], [c(0), c(1), k(1), k(-1)]),
        (_, 4) => {
            let (a1, b2) = (c(0), c(1));
            ([a1.clone(), k(0), k(0), k(0)], [k(0), b2, one_minus(&a1), k(0)])
        }
        (CharNe23, 5) => {
            let a1 = c(0);
            let b2 = f.sub(&f.mul(&k(2), &a1), &k(1));
            ([a1.clone(), k(0), k(0), k(0)], [k(1), b2, one_minus(&a1), k(0)])
        }
        (Char2, 5) => {
            let a1 = c(0);
            ([a1.clone(), k(0), k(0), k(0)], [k(1), k(1), one_minus(&a1), k(0)])
        }
        (Char3, 5) => {
            let a1 = c(0);
            ([a1.clone(), k(0), k(0), k(0)], [k(1), f.sub(&k(-1), &a1), one_minus(&a1), k(0)])
        }
        (Char2, 6) => {
            let (a1, b1) = (c(0), c(1));
            ([a1.clone(), k(0), k(0), k(1)], [b1, one_minus(&a1), a1, k(0)])
        }
        (_, 6) => {
            let (a1, b1) = (c(0), c(1));
            ([a1.clone(), k(0), k(0), k(1)], [b1, one_minus(&a1), f.neg(&a1), k(0)])
        }
        (Char2, 7) => {
            let a1 = c(0);
            ([a1.clone(), k(1), k(1), k(0)], [k(0), one_minus(&a1), a1, k(1)])
        }
        (_, 7) => ([k(0), k(1), k(1), k(0)], [c(0), k(1), k(0), k(-1)]),
        (Char2, 8) => {
            let a1 = c(0);
            ([a1.clone(), k(0), k(0), k(0)], [k(0), one_minus(&a1), a1, k(0)])
        }
        (_, 8) => {
            let a1 = c(0);
            ([a1.clone(), k(0), k(0), k(0)], [k(0), one_minus(&a1), f.neg(&a1), k(0)])
        }
        (CharNe23, 9) => ([frac(1, 3), k(0), k(0), k(0)], [k(1), frac(2, 3), frac(-1, 3), k(0)]),
        (Char2, 9) => ([k(1), k(0), k(0), k(0)], [k(1), k(0), k(1), k(0)]),
        (Char3, 9) => ([k(0), k(1), k(1), k(0)], [k(1), k(0), k(0), k(-1)]),
        (Char3, 10) => ([k(0), k(1), k(1), k(0)], [k(0), k(0), k(0), k(-1)]),
        (_, 10) => ([k(0), k(1), k(1), k(0)], [k(0), k(0), k(0), k(-1)]),
        (Char2, 11) => ([k(1), k(1), k(1), k(0)], [k(0), k(1), k(1), k(1)]),
        (Char3, 11) => ([k(1), k(0), k(0), k(0)], [k(1), k(-1), k(-1), k(0)]),
        (_, 11) => ([k(0), k(1), k(1), k(0)], [k(1), k(0), k(0), k(-1)]),
        (_, 12) => ([k(0), k(0), k(0), k(0)], [k(1), k(0), k(0), k(0)]),
        _ => unreachable!("index checked in FamilyId::new"),
    };
    Ok(Msc::new(f, alpha, beta))
}

/// The quantities the tables describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Subalgebras,
    LeftIdeals,
    RightIdeals,
    TwoSided,
    Quasiunits,
}

impl Quantity {
    pub const ALL: [Quantity; 5] =
        [Quantity::Subalgebras, Quantity::LeftIdeals, Quantity::RightIdeals, Quantity::TwoSided, Quantity::Quasiunits];

    /// Printed table number for a regime.
    pub fn table(self, regime: Regime) -> u8 {
        let split = regime != Regime::CharNe23;
        match self {
            Quantity::Subalgebras => 1 + split as u8,
            Quantity::LeftIdeals => 3 + split as u8,
            Quantity::RightIdeals => 5 + split as u8,
            Quantity::TwoSided => 7 + split as u8,
            Quantity::Quasiunits => 9,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Subalgebras => "subalgebras",
            Quantity::LeftIdeals => "left_ideals",
            Quantity::RightIdeals => "right_ideals",
            Quantity::TwoSided => "two_sided",
            Quantity::Quasiunits => "quasiunits",
        }
    }
}

/// What a table says about one quantity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prediction {
    Count { category: CountCategory, citation: String },
    Quasiunits { set: AffineSolutionSet<u32>, citation: String },
    /// No cell of the family's row holds.
    NoRow { citation: String },
    /// Cells from different columns hold at once.
    Conflict { citations: Vec<String> },
}

impl Prediction {
    pub fn citation(&self) -> String {
        match self {
            Prediction::Count { citation, .. }
            | Prediction::Quasiunits { citation, .. }
            | Prediction::NoRow { citation } => citation.clone(),
            Prediction::Conflict { citations } => citations.join(" | "),
        }
    }

    pub fn describe(&self, f: &GaloisField) -> String {
        match self {
            Prediction::Count { category, .. } => category.as_str().into(),
            Prediction::Quasiunits { set, .. } => set.format(f),
            Prediction::NoRow { .. } => "no-row".into(),
            Prediction::Conflict { .. } => "conflict".into(),
        }
    }
}

/// The table prediction for an instantiated family member.
pub fn predict(fam: FamilyId, a: &Msc<GaloisField>, q: Quantity) -> Prediction {
    if q == Quantity::Quasiunits {
        return tables::predict_quasiunits(fam, a);
    }
    tables::resolve(fam, q, &cells(fam, q, a))
}

/// Instantiates and predicts in one step.
pub fn predicted(
    fam: FamilyId,
    q: Quantity,
    params: &[u32],
    f: &GaloisField,
) -> Result<Prediction, CatalogError> {
    Ok(predict(fam, &instantiate(fam, params, f)?, q))
}

pub fn predicted_subalgebras(fam: FamilyId, params: &[u32], f: &GaloisField) -> Result<Prediction, CatalogError> {
    predicted(fam, Quantity::Subalgebras, params, f)
}

pub fn predicted_left_ideals(fam: FamilyId, params: &[u32], f: &GaloisField) -> Result<Prediction, CatalogError> {
    predicted(fam, Quantity::LeftIdeals, params, f)
}

pub fn predicted_right_ideals(fam: FamilyId, params: &[u32], f: &GaloisField) -> Result<Prediction, CatalogError> {
    predicted(fam, Quantity::RightIdeals, params, f)
}

pub fn predicted_two_sided(fam: FamilyId, params: &[u32], f: &GaloisField) -> Result<Prediction, CatalogError> {
    predicted(fam, Quantity::TwoSided, params, f)
}

pub fn predicted_quasiunits(fam: FamilyId, params: &[u32], f: &GaloisField) -> Result<Prediction, CatalogError> {
    predicted(fam, Quantity::Quasiunits, params, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> GaloisField {
        GaloisField::prime(p).unwrap()
    }

    #[test]
    fn instantiate_examples() {
        let a12 = FamilyId::new(12, Regime::CharNe23).unwrap();
        assert_eq!(instantiate(a12, &[], &gf(5)).unwrap().format(), "0,0,0,0;1,0,0,0");
        let a9 = FamilyId::new(9, Regime::CharNe23).unwrap();
        assert_eq!(instantiate(a9, &[], &gf(7)).unwrap().format(), "5,0,0,0;1,3,2,0");
        assert!(matches!(instantiate(a9, &[], &gf(3)), Err(CatalogError::RegimeMismatch { .. })));
        let a1 = FamilyId::new(1, Regime::CharNe23).unwrap();
        assert!(matches!(instantiate(a1, &[1, 2], &gf(5)), Err(CatalogError::ArityMismatch { expected: 4, .. })));
    }

    #[test]
    fn parse_and_display() {
        let f = FamilyId::parse("A_{3,2}", Regime::Char2).unwrap();
        assert_eq!(f.to_string(), "A_{3,2}");
        assert_eq!(FamilyId::parse("A_10", Regime::CharNe23).unwrap().to_string(), "A_10");
        assert!(FamilyId::parse("A_{3,2}", Regime::Char3).is_err());
        assert!(FamilyId::parse("A_13", Regime::Char3).is_err());
        assert_eq!(Regime::parse("char3").unwrap(), Regime::Char3);
    }
}
