//! Parameter sweeps comparing table predictions with the solvers, and the
//! brute-force oracle wherever the two disagree.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{oracle_enumerate, oracle_points, Element, LineKind, LineSet, Msc, PointKind};
use crate::field::{embed, Field, GaloisField};
use crate::poly::{splitting_field, CountCategory};
use crate::solvers::{left_quasiunits, left_system, p_a, right_system, system_gcd, AffineSolutionSet, ClosedCounts};

use super::probes::{outcome, probes_for, tally, ProbeReport};
use super::{instantiate, predict, CatalogError, FamilyId, Prediction, Quantity};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Exhaustive,
    /// Exhaustive when the parameter space has at most this many points,
    /// otherwise this many seeded uniform samples.
    Samples(u64),
}

impl Default for Budget {
    fn default() -> Self {
        Budget::Samples(1_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    Never,
    #[default]
    OnMismatch,
    Always,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub budget: Budget,
    pub seed: u64,
    pub oracle: OracleMode,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { budget: Budget::default(), seed: DEFAULT_SEED, oracle: OracleMode::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agree,
    Mismatch,
}

/// One (parameter point, quantity) comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub family: String,
    pub regime: String,
    pub field: String,
    pub params: Vec<String>,
    pub quantity: Quantity,
    pub predicted: String,
    pub solved: String,
    /// Brute force over a field where the relevant polynomials split.
    pub oracle: Option<String>,
    pub verdict: Verdict,
    pub citation: String,
}

impl VerifyLine {
    /// The solver and the brute-force oracle disagree: an implementation bug.
    pub fn oracle_mismatch(&self) -> bool {
        self.oracle.as_ref().is_some_and(|o| *o != self.solved)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub regime: String,
    pub field: String,
    pub exhaustive: bool,
    pub points: usize,
    pub lines: Vec<VerifyLine>,
    pub probes: Vec<ProbeReport>,
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyLine> {
        self.lines.iter().filter(|l| l.verdict == Verdict::Mismatch)
    }

    pub fn oracle_mismatches(&self) -> impl Iterator<Item = &VerifyLine> {
        self.lines.iter().filter(|l| l.oracle_mismatch())
    }
}

pub(crate) fn parameter_points(arity: usize, q: u32, opts: &SweepOptions, salt: u64) -> (bool, Vec<Vec<u32>>) {
    let space = (q as u64).checked_pow(arity as u32);
    let exhaustive = match (opts.budget, space) {
        (Budget::Exhaustive, _) => true,
        (Budget::Samples(n), Some(s)) => s <= n,
        (Budget::Samples(_), None) => false,
    };
    if exhaustive {
        let total = space.expect("exhaustive sweeps fit in u64");
        let points = (0..total)
            .map(|mut i| {
                let mut v = vec![0u32; arity];
                for slot in v.iter_mut().rev() {
                    *slot = (i % q as u64) as u32;
                    i /= q as u64;
                }
                v
            })
            .collect();
        return (true, points);
    }
    let Budget::Samples(n) = opts.budget else { unreachable!() };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ salt);
    let set: BTreeSet<Vec<u32>> = (0..n).map(|_| (0..arity).map(|_| rng.gen_range(0..q)).collect()).collect();
    (false, set.into_iter().collect())
}

fn line_count(s: &LineSet<u32>) -> String {
    match s.len() {
        None => CountCategory::Infinite.as_str().into(),
        Some(n) => CountCategory::from_count(n).map_or_else(|| format!("{n} lines"), |c| c.as_str().into()),
    }
}

/// Lifts `a` to the splitting field of the polynomial governing `q`, and
/// past GF(2) where three lines would already be all of them.
fn oracle_field_lift(a: &Msc<GaloisField>, q: Quantity) -> Result<Msc<GaloisField>, CatalogError> {
    let g = match q {
        Quantity::Subalgebras => p_a(a),
        Quantity::LeftIdeals => {
            let (l1, l2) = left_system(a);
            system_gcd(&[l1, l2])
        }
        Quantity::RightIdeals => {
            let (r1, r2) = right_system(a);
            system_gcd(&[r1, r2])
        }
        Quantity::TwoSided => {
            let (l1, l2) = left_system(a);
            let (r1, r2) = right_system(a);
            system_gcd(&[l1, l2, r1, r2])
        }
        Quantity::Quasiunits => return Ok(a.clone()),
    };
    let mut lifted = if g.degree().unwrap_or(0) > 0 { a.lift(&splitting_field(&g)?.embedding) } else { a.clone() };
    if lifted.field().size() == 2 {
        let gf4 = GaloisField::new(2, 2)?;
        lifted = lifted.lift(&embed(lifted.field(), &gf4)?);
    }
    Ok(lifted)
}

/// Describes a point set found by brute force in the solver's vocabulary.
fn describe_points(f: &GaloisField, pts: &BTreeSet<Element<u32>>) -> String {
    let q = f.size() as usize;
    let mut it = pts.iter();
    match pts.len() {
        0 => AffineSolutionSet::Empty.format(f),
        1 => AffineSolutionSet::Point(pts.first().cloned().expect("one point")).format(f),
        n if n == q * q => AffineSolutionSet::<u32>::Plane.format(f),
        n if n == q => {
            let p0 = it.next().expect("q points").clone();
            let p1 = it.next().expect("q points").clone();
            let dir = Element::new(f.sub(&p1.x, &p0.x), f.sub(&p1.y, &p0.y));
            let l = AffineSolutionSet::line(f, p0, dir);
            if pts.iter().all(|p| l.contains(f, p)) {
                l.format(f)
            } else {
                format!("{n} points")
            }
        }
        n => format!("{n} points"),
    }
}

fn oracle(a: &Msc<GaloisField>, q: Quantity) -> Result<String, CatalogError> {
    let kind = match q {
        Quantity::Subalgebras => LineKind::Subalgebras,
        Quantity::LeftIdeals => LineKind::LeftIdeals,
        Quantity::RightIdeals => LineKind::RightIdeals,
        Quantity::TwoSided => LineKind::TwoSided,
        Quantity::Quasiunits => {
            return Ok(describe_points(a.field(), &oracle_points(a, PointKind::LeftQuasiunits)?));
        }
    };
    let lifted = oracle_field_lift(a, q)?;
    Ok(line_count(&oracle_enumerate(&lifted, kind)?))
}

struct PointResult {
    lines: Vec<VerifyLine>,
    probes: Vec<Option<[bool; 2]>>,
}

fn verify_point(
    fam: FamilyId,
    f: &GaloisField,
    params: &[u32],
    opts: &SweepOptions,
) -> Result<PointResult, CatalogError> {
    let a = instantiate(fam, params, f)?;
    let counts = ClosedCounts::of(&a)?;
    let quasi = left_quasiunits(&a);
    let solved_count = |q: Quantity| match q {
        Quantity::Subalgebras => counts.subalgebras,
        Quantity::LeftIdeals => counts.left_ideals,
        Quantity::RightIdeals => counts.right_ideals,
        Quantity::TwoSided | Quantity::Quasiunits => counts.two_sided,
    };
    let params_text: Vec<String> = params.iter().map(|p| f.format_elem(p)).collect();
    let mut lines = Vec::with_capacity(Quantity::ALL.len());
    for q in Quantity::ALL {
        let pred = predict(fam, &a, q);
        let (solved, agree) = match (&pred, q) {
            (Prediction::Quasiunits { set, .. }, Quantity::Quasiunits) => (quasi.format(f), *set == quasi),
            (_, Quantity::Quasiunits) => (quasi.format(f), false),
            (Prediction::Count { category, .. }, _) => (solved_count(q).as_str().into(), *category == solved_count(q)),
            _ => (solved_count(q).as_str().to_string(), false),
        };
        let run_oracle = match opts.oracle {
            OracleMode::Never => false,
            OracleMode::OnMismatch => !agree,
            OracleMode::Always => true,
        };
        lines.push(VerifyLine {
            family: fam.to_string(),
            regime: fam.regime().as_str().into(),
            field: f.spec(),
            params: params_text.clone(),
            quantity: q,
            predicted: pred.describe(f),
            solved,
            oracle: if run_oracle { Some(oracle(&a, q)?) } else { None },
            verdict: if agree { Verdict::Agree } else { Verdict::Mismatch },
            citation: pred.citation(),
        });
    }
    let probes = probes_for(fam).iter().map(|p| outcome(p, fam, &a, solved_count(p.quantity))).collect();
    Ok(PointResult { lines, probes })
}

/// Every table comparison at one parameter point.
pub fn verify_params(
    fam: FamilyId,
    f: &GaloisField,
    params: &[u32],
    opts: &SweepOptions,
) -> Result<Vec<VerifyLine>, CatalogError> {
    Ok(verify_point(fam, f, params, opts)?.lines)
}

/// Sweeps a family's parameter space over `f`. Output order follows the
/// parameter vectors, independent of scheduling.
pub fn sweep_verify(fam: FamilyId, f: &GaloisField, opts: &SweepOptions) -> Result<SweepReport, CatalogError> {
    instantiate(fam, &vec![0; fam.arity()], f)?;
    let (exhaustive, points) = parameter_points(fam.arity(), f.size(), opts, fam.index() as u64);
    let results: Vec<PointResult> =
        points.par_iter().map(|p| verify_point(fam, f, p, opts)).collect::<Result<_, _>>()?;
    let probes = probes_for(fam)
        .iter()
        .enumerate()
        .map(|(i, p)| tally(p, fam, &f.spec(), results.iter().filter_map(|r| r.probes[i])))
        .collect();
    Ok(SweepReport {
        family: fam.to_string(),
        regime: fam.regime().as_str().into(),
        field: f.spec(),
        exhaustive,
        points: points.len(),
        lines: results.into_iter().flat_map(|r| r.lines).collect(),
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::super::Regime;
    use super::*;

    #[test]
    fn a12_agrees_everywhere() {
        let f = GaloisField::prime(5).unwrap();
        let fam = FamilyId::new(12, Regime::CharNe23).unwrap();
        let r = sweep_verify(fam, &f, &SweepOptions::default()).unwrap();
        assert_eq!(r.points, 1);
        assert!(r.lines.iter().all(|l| l.verdict == Verdict::Agree), "{:?}", r.lines);
        let solved: Vec<&str> = r.lines.iter().map(|l| l.solved.as_str()).collect();
        assert_eq!(solved, ["1", "1", "1", "1", "none"]);
    }

    #[test]
    fn a8_over_gf7() {
        let f = GaloisField::prime(7).unwrap();
        let fam = FamilyId::new(8, Regime::CharNe23).unwrap();
        let opts = SweepOptions { budget: Budget::Exhaustive, ..Default::default() };
        let r = sweep_verify(fam, &f, &opts).unwrap();
        for l in r.lines.iter().filter(|l| l.quantity == Quantity::Subalgebras) {
            let want = if l.params == ["5"] { "inf" } else { "2" };
            assert_eq!(l.solved, want);
            assert_eq!(l.verdict, Verdict::Agree);
        }
    }

    #[test]
    fn a10_quasiunit_with_oracle() {
        let f = GaloisField::prime(5).unwrap();
        let fam = FamilyId::new(10, Regime::CharNe23).unwrap();
        let opts = SweepOptions { oracle: OracleMode::Always, ..Default::default() };
        let r = sweep_verify(fam, &f, &opts).unwrap();
        let l = r.lines.iter().find(|l| l.quantity == Quantity::Quasiunits).unwrap();
        assert_eq!((l.predicted.as_str(), l.solved.as_str(), l.oracle.as_deref()), ("4*e2", "4*e2", Some("4*e2")));
        assert_eq!(r.oracle_mismatches().count(), 0);
    }

    #[test]
    fn sampling_is_seeded() {
        let opts = SweepOptions { budget: Budget::Samples(50), ..Default::default() };
        let (ex, a) = parameter_points(4, 9, &opts, 1);
        let (_, b) = parameter_points(4, 9, &opts, 1);
        assert!(!ex);
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}
