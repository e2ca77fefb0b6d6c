//! Full structural analysis of one algebra, serializable as JSON, and the
//! comparison of every solver enumeration with the brute-force oracle.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    format_element, oracle_enumerate, oracle_points, Element, LineKind, LineSet, Msc, PointKind, ProjPoint,
};
use crate::field::{AnyField, Field, FieldError, GaloisField};
use crate::poly::{splitting_field, CountCategory, PolyError};
use crate::solvers::{
    check_simplicity, idempotents, is_simple, left_ideals, left_quasiunits, left_system, lift_for_closure, p_a,
    right_ideals, right_system, subalgebra_count_closed, subalgebras, system_gcd, two_sided_ideals, AffineSolutionSet,
    IdempotentSet, PropError, SolverError,
};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Prop(#[from] PropError),
    #[error("oracle disagrees with the solver on {0}")]
    OracleMismatch(Disagreement),
}

/// A set of lines, either the whole projective line or listed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinesReport {
    All,
    Lines(Vec<String>),
}

impl LinesReport {
    pub fn of<F: Field>(f: &F, s: &LineSet<F::Elem>) -> Self {
        match s {
            LineSet::All => LinesReport::All,
            LineSet::Points(p) => LinesReport::Lines(p.iter().map(|p| p.format(f)).collect()),
        }
    }

    pub fn count(&self) -> String {
        match self {
            LinesReport::All => CountCategory::Infinite.as_str().into(),
            LinesReport::Lines(v) => v.len().to_string(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, LinesReport::Lines(v) if v.is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsReport {
    pub points: Vec<String>,
    /// Present when every root of a vanishing `p_A` yields an idempotent.
    pub family: Option<String>,
}

impl IdempotentsReport {
    pub fn of<F: Field>(f: &F, s: &IdempotentSet<F>) -> Self {
        let mut pts: BTreeSet<&Element<F::Elem>> = s.isolated.iter().collect();
        pts.extend(&s.e2_point);
        let family = s.family.as_ref().and_then(|lambda| match lambda.degree() {
            None => None,
            Some(0) => {
                let k = f.inv(&lambda.coeff(0)).expect("nonzero constant");
                let line = AffineSolutionSet::line(f, Element::new(k.clone(), f.zero()), Element::new(f.zero(), k));
                Some(line.format(f))
            }
            Some(_) => {
                let l = lambda.format().replace('y', "t");
                Some(format!("(e1+t*e2)/({l}) for {l} != 0"))
            }
        });
        IdempotentsReport { points: pts.into_iter().map(|p| format_element(f, p)).collect(), family }
    }

    pub fn count(&self) -> String {
        if self.family.is_some() {
            CountCategory::Infinite.as_str().into()
        } else {
            self.points.len().to_string()
        }
    }
}

/// Everything the tool knows about one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub msc: String,
    pub field: String,
    /// The field the sets below are enumerated over.
    pub enumerated_over: String,
    pub subalgebras: LinesReport,
    /// Over a root-closed field; absent over the rationals.
    pub subalgebra_category_closed: Option<CountCategory>,
    pub idempotents: IdempotentsReport,
    pub left_ideals: LinesReport,
    pub right_ideals: LinesReport,
    pub two_sided: LinesReport,
    /// Over a root-closed field.
    pub simple: bool,
    pub quasiunits: String,
    pub splitting_fields_used: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AnalyzeOptions {
    /// Enumerate over a splitting field of every defining polynomial.
    pub closed: bool,
    /// Also enumerate by brute force and require agreement.
    pub oracle: bool,
}

fn sets<F: Field>(a: &Msc<F>) -> (LinesReport, IdempotentsReport, LinesReport, LinesReport, LinesReport, String) {
    let f = a.field();
    (
        LinesReport::of(f, &subalgebras(a)),
        IdempotentsReport::of(f, &idempotents(a)),
        LinesReport::of(f, &left_ideals(a)),
        LinesReport::of(f, &right_ideals(a)),
        LinesReport::of(f, &two_sided_ideals(a)),
        left_quasiunits(a).format(f),
    )
}

/// Splitting fields of `p_A` and of the two-sided system, when they are
/// proper extensions.
fn splitting_fields(a: &Msc<GaloisField>) -> Result<Vec<String>, PolyError> {
    let (l1, l2) = left_system(a);
    let (r1, r2) = right_system(a);
    let mut out = Vec::new();
    for g in [p_a(a), system_gcd(&[l1, l2, r1, r2])] {
        if g.is_zero() {
            continue;
        }
        let s = splitting_field(&g)?;
        if s.field.size() > a.field().size() {
            let spec = s.field.spec();
            if !out.contains(&spec) {
                out.push(spec);
            }
        }
    }
    Ok(out)
}

pub fn analyze_finite(a: &Msc<GaloisField>, opts: AnalyzeOptions) -> Result<AnalysisReport, ReportError> {
    let base = a.field();
    let target = if opts.closed { lift_for_closure(a)? } else { a.clone() };
    if opts.oracle {
        if let Some(d) = oracle_disagreements(&target)?.into_iter().next() {
            return Err(ReportError::OracleMismatch(d));
        }
    }
    let mut used = splitting_fields(a)?;
    if opts.closed && target.field().size() > base.size() && !used.contains(&target.field().spec()) {
        used.push(target.field().spec());
    }
    let (subalgebras, idempotents, left_ideals, right_ideals, two_sided, quasiunits) = sets(&target);
    Ok(AnalysisReport {
        msc: a.format(),
        field: base.spec(),
        enumerated_over: target.field().spec(),
        subalgebras,
        subalgebra_category_closed: Some(subalgebra_count_closed(a)?),
        idempotents,
        left_ideals,
        right_ideals,
        two_sided,
        simple: check_simplicity(a)?,
        quasiunits,
        splitting_fields_used: used,
    })
}

/// Over the rationals only roots lying in Q are listed.
pub fn analyze_generic<F: Field>(a: &Msc<F>) -> Result<AnalysisReport, ReportError> {
    let (subalgebras, idempotents, left_ideals, right_ideals, two_sided, quasiunits) = sets(a);
    Ok(AnalysisReport {
        msc: a.format(),
        field: a.field().spec(),
        enumerated_over: a.field().spec(),
        subalgebras,
        subalgebra_category_closed: None,
        idempotents,
        left_ideals,
        right_ideals,
        two_sided,
        simple: is_simple(a)?,
        quasiunits,
        splitting_fields_used: Vec::new(),
    })
}

/// Parses the algebra over `field` and analyzes it.
pub fn analyze(field: &AnyField, msc: &str, opts: AnalyzeOptions) -> Result<AnalysisReport, ReportError> {
    match field {
        AnyField::Finite(f) => analyze_finite(&Msc::parse(f, msc)?, opts),
        AnyField::Rational(q) => {
            if opts.oracle || opts.closed {
                return Err(FieldError::InfiniteField(q.spec()).into());
            }
            analyze_generic(&Msc::parse(q, msc)?)
        }
    }
}

/// Solver and oracle disagree on one quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub msc: String,
    pub field: String,
    pub quantity: String,
    pub solver: Vec<String>,
    pub oracle: Vec<String>,
}

impl std::fmt::Display for Disagreement {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fm,
            "{} of {} over {}: solver {{{}}}, oracle {{{}}}",
            self.quantity,
            self.msc,
            self.field,
            self.solver.join(", "),
            self.oracle.join(", ")
        )
    }
}

fn line_strings<F: Field>(f: &F, s: BTreeSet<ProjPoint<F::Elem>>) -> Vec<String> {
    s.iter().map(|p| p.format(f)).collect()
}

fn point_strings<F: Field>(f: &F, s: BTreeSet<Element<F::Elem>>) -> Vec<String> {
    s.iter().map(|p| format_element(f, p)).collect()
}

/// Every quantity whose solver enumeration differs from brute force, as
/// fully materialized sets. Requires a finite field.
pub fn oracle_disagreements<F: Field>(a: &Msc<F>) -> Result<Vec<Disagreement>, FieldError> {
    let f = a.field();
    let mut out = Vec::new();
    let mut push = |quantity: &str, solver: Vec<String>, oracle: Vec<String>| {
        if solver != oracle {
            out.push(Disagreement {
                msc: a.format(),
                field: f.spec(),
                quantity: quantity.into(),
                solver,
                oracle,
            });
        }
    };
    let lines: [(&str, LineSet<F::Elem>, LineKind); 4] = [
        ("subalgebras", subalgebras(a), LineKind::Subalgebras),
        ("left_ideals", left_ideals(a), LineKind::LeftIdeals),
        ("right_ideals", right_ideals(a), LineKind::RightIdeals),
        ("two_sided", two_sided_ideals(a), LineKind::TwoSided),
    ];
    for (name, solved, kind) in lines {
        let oracle = oracle_enumerate(a, kind)?.materialize(f)?;
        push(name, line_strings(f, solved.materialize(f)?), line_strings(f, oracle));
    }
    push(
        "idempotents",
        point_strings(f, idempotents(a).materialize()?),
        point_strings(f, oracle_points(a, PointKind::Idempotents)?),
    );
    push(
        "quasiunits",
        point_strings(f, left_quasiunits(a).materialize(f)?),
        point_strings(f, oracle_points(a, PointKind::LeftQuasiunits)?),
    );
    Ok(out)
}
