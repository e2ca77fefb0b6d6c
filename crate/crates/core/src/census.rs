//! Censuses over whole spaces of structure constants: solver against
//! brute force, and the closed-form count predicates against the solver.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Msc;
use crate::catalog::Budget;
use crate::field::{Field, FieldError, GaloisField};
use crate::poly::CountCategory;
use crate::report::{oracle_disagreements, Disagreement};
use crate::solvers::{
    is_simple, left_system, predict_left_count_char_ne2, predict_right_count, right_system, system_count_closed,
    two_sided_closed, PropError, SolverError,
};

/// Structure-constant vectors `(a1..a4, b1..b4)` as field element indices,
/// in lexicographic order.
pub fn msc_space(f: &GaloisField, budget: Budget, seed: u64) -> (bool, Vec<[u32; 8]>) {
    let q = f.size();
    let space = (q as u64).checked_pow(8);
    let exhaustive = match (budget, space) {
        (Budget::Exhaustive, _) => true,
        (Budget::Samples(n), Some(s)) => s <= n,
        (Budget::Samples(_), None) => false,
    };
    let decode = |mut i: u64| {
        let mut v = [0u32; 8];
        for slot in v.iter_mut().rev() {
            *slot = (i % q as u64) as u32;
            i /= q as u64;
        }
        v
    };
    if exhaustive {
        return (true, (0..space.expect("exhaustive census fits in u64")).map(decode).collect());
    }
    let Budget::Samples(n) = budget else { unreachable!() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = BTreeSet::new();
    while (set.len() as u64) < n {
        set.insert(std::array::from_fn(|_| rng.gen_range(0..q)));
    }
    (false, set.into_iter().collect())
}

pub fn msc_of(f: &GaloisField, v: &[u32; 8]) -> Msc<GaloisField> {
    Msc::new(f, [v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCensus {
    pub field: String,
    pub exhaustive: bool,
    pub algebras: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Compares every solver enumeration with brute force over `f` itself.
pub fn oracle_census(f: &GaloisField, budget: Budget, seed: u64) -> Result<OracleCensus, FieldError> {
    let (exhaustive, space) = msc_space(f, budget, seed);
    let found: Vec<Vec<Disagreement>> =
        space.par_iter().map(|v| oracle_disagreements(&msc_of(f, v))).collect::<Result<_, _>>()?;
    Ok(OracleCensus {
        field: f.spec(),
        exhaustive,
        algebras: space.len(),
        disagreements: found.into_iter().flatten().collect(),
    })
}

/// A closed-form predicate that disagrees with the splitting-field solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateFailure {
    pub msc: String,
    pub predicate: String,
    pub predicted: String,
    pub solved: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateCensus {
    pub field: String,
    pub exhaustive: bool,
    pub algebras: usize,
    /// Comparisons made per predicate name.
    pub checked: Vec<(String, usize)>,
    pub failures: Vec<PredicateFailure>,
}

const LEFT: &str = "left-count";
const RIGHT: &str = "right-count";
const SIMPLE: &str = "simplicity";

fn described(c: Result<CountCategory, PropError>) -> String {
    match c {
        Ok(c) => c.as_str().into(),
        Err(e) => e.to_string(),
    }
}

fn check_one(a: &Msc<GaloisField>) -> Result<Vec<(&'static str, Option<PredicateFailure>)>, SolverError> {
    let fail = |predicate: &str, predicted: String, solved: String| {
        (predicted != solved).then(|| PredicateFailure { msc: a.format(), predicate: predicate.into(), predicted, solved })
    };
    let mut out = Vec::new();
    if a.field().p() != 2 {
        let (l1, l2) = left_system(a);
        let solved = system_count_closed(&[l1, l2])?.as_str().into();
        out.push((LEFT, fail(LEFT, described(predict_left_count_char_ne2(a)), solved)));
    }
    let (r1, r2) = right_system(a);
    let solved = system_count_closed(&[r1, r2])?.as_str().into();
    out.push((RIGHT, fail(RIGHT, described(predict_right_count(a)), solved)));
    let simple = is_simple(a).map_or_else(|e| e.to_string(), |s| s.to_string());
    out.push((SIMPLE, fail(SIMPLE, simple, two_sided_closed(a)?.is_empty().to_string())));
    Ok(out)
}

/// Checks the left and right common-root count predicates and the
/// simplicity criterion against the solver over splitting fields.
pub fn predicate_census(f: &GaloisField, budget: Budget, seed: u64) -> Result<PredicateCensus, SolverError> {
    let (exhaustive, space) = msc_space(f, budget, seed);
    let rows: Vec<_> = space.par_iter().map(|v| check_one(&msc_of(f, v))).collect::<Result<_, _>>()?;
    let mut checked: Vec<(String, usize)> = Vec::new();
    let mut failures = Vec::new();
    for (name, failure) in rows.into_iter().flatten() {
        match checked.iter_mut().find(|(n, _)| n == name) {
            Some((_, c)) => *c += 1,
            None => checked.push((name.into(), 1)),
        }
        failures.extend(failure);
    }
    Ok(PredicateCensus { field: f.spec(), exhaustive, algebras: space.len(), checked, failures })
}
