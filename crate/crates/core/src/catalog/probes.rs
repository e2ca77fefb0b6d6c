//! Competing readings of ambiguous printed conditions. Each probe predicts
//! a count under every reading; the sweep tallies which readings agree with
//! the solver where the readings differ.

use serde::{Deserialize, Serialize};

use crate::algebra::Msc;
use crate::field::GaloisField;
use crate::poly::CountCategory;

use super::tables::{left_a1_char3, left_p, resolve, right_p, subalgebras_a3_two, two_sided_a1, V};
use super::{FamilyId, Prediction, Quantity, Regime};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingTally {
    pub reading: String,
    /// Agreements at points where the readings differ.
    pub agree: usize,
    pub disagree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub probe: String,
    pub family: String,
    pub quantity: Quantity,
    pub description: String,
    pub fields: Vec<String>,
    /// Points where the readings predict different counts.
    pub discriminating: usize,
    pub readings: Vec<ReadingTally>,
    /// The single reading that never disagrees on a discriminating point.
    pub resolved: Option<String>,
}

impl ProbeReport {
    /// Adds another sweep's tallies for the same probe.
    pub fn merge(&mut self, other: &ProbeReport) {
        assert_eq!(self.probe, other.probe);
        self.fields.extend(other.fields.iter().cloned());
        self.discriminating += other.discriminating;
        for (mine, theirs) in self.readings.iter_mut().zip(&other.readings) {
            mine.agree += theirs.agree;
            mine.disagree += theirs.disagree;
        }
        self.settle();
    }

    fn settle(&mut self) {
        let consistent: Vec<&ReadingTally> =
            self.readings.iter().filter(|r| r.disagree == 0 && r.agree > 0).collect();
        self.resolved = match consistent.as_slice() {
            [one] => Some(one.reading.clone()),
            _ => None,
        };
    }
}

pub(super) struct Probe {
    pub name: &'static str,
    pub quantity: Quantity,
    pub description: &'static str,
    pub readings: [&'static str; 2],
    pub eval: for<'a> fn(FamilyId, V<'a>) -> [Option<CountCategory>; 2],
}

fn count(p: Prediction) -> Option<CountCategory> {
    match p {
        Prediction::Count { category, .. } => Some(category),
        _ => None,
    }
}

fn a3_middle(_: FamilyId, v: V<'_>) -> [Option<CountCategory>; 2] {
    let pick = |two: bool| Some(if two { CountCategory::Two } else { CountCategory::Three });
    [pick(subalgebras_a3_two(v, false)), pick(subalgebras_a3_two(v, true))]
}

fn a13_two_sided(fam: FamilyId, v: V<'_>) -> [Option<CountCategory>; 2] {
    let text = ["", ""];
    [
        count(resolve(fam, Quantity::TwoSided, &two_sided_a1(v, v.a2 + 2 * v.a2, text))),
        count(resolve(fam, Quantity::TwoSided, &two_sided_a1(v, v.a2 + 2 * v.a1, text))),
    ]
}

fn a23_one_subalgebra(_: FamilyId, v: V<'_>) -> [Option<CountCategory>; 2] {
    let pick = |one: bool| Some(if one { CountCategory::One } else { CountCategory::Three });
    [pick(v.b2.is(2 * v.a1 - 1)), pick(v.b2.is(-1))]
}

fn a13_left_p(fam: FamilyId, v: V<'_>) -> [Option<CountCategory>; 2] {
    [
        count(resolve(fam, Quantity::LeftIdeals, &left_a1_char3(v, left_p(v)))),
        count(resolve(fam, Quantity::LeftIdeals, &left_a1_char3(v, right_p(v)))),
    ]
}

pub(super) fn probes_for(fam: FamilyId) -> Vec<Probe> {
    match (fam.regime(), fam.index()) {
        (Regime::CharNe23, 3) => vec![Probe {
            name: "a3-two-subalgebras",
            quantity: Quantity::Subalgebras,
            description: "two subalgebras when the first parameter equals -(b2+1)^2/12, or when b2 does",
            readings: ["b1=-(b2+1)^2/12", "b2=-(b2+1)^2/12"],
            eval: a3_middle,
        }],
        (Regime::Char3, 1) => vec![
            Probe {
                name: "a13-two-sided-b1",
                quantity: Quantity::TwoSided,
                description: "one two-sided ideal when a4=-a1-2a2 and b1 = a2+2a2 (as printed) or a2+2a1",
                readings: ["b1=a2+2a2", "b1=a2+2a1"],
                eval: a13_two_sided,
            },
            Probe {
                name: "a13-left-ideal-p",
                quantity: Quantity::LeftIdeals,
                description: "the auxiliary P of the characteristic 2,3 left-ideal row is the left-ideal caption's or the right-ideal caption's",
                readings: ["left-ideal P", "right-ideal P"],
                eval: a13_left_p,
            },
        ],
        (Regime::Char3, 2) => vec![Probe {
            name: "a23-one-subalgebra",
            quantity: Quantity::Subalgebras,
            description: "one subalgebra when b2=2a1-1 (theorem) or b2=2a2-1=-1 (table)",
            readings: ["b2=2a1-1", "b2=-1"],
            eval: a23_one_subalgebra,
        }],
        _ => Vec::new(),
    }
}

/// Which readings agree with `solved`; `None` when the readings coincide.
pub(super) fn outcome(probe: &Probe, fam: FamilyId, a: &Msc<GaloisField>, solved: CountCategory) -> Option<[bool; 2]> {
    let [r0, r1] = (probe.eval)(fam, V::of(a));
    (r0 != r1).then(|| [r0 == Some(solved), r1 == Some(solved)])
}

pub(super) fn tally(probe: &Probe, fam: FamilyId, field: &str, outcomes: impl Iterator<Item = [bool; 2]>) -> ProbeReport {
    let mut readings: Vec<ReadingTally> =
        probe.readings.iter().map(|r| ReadingTally { reading: (*r).into(), agree: 0, disagree: 0 }).collect();
    let mut discriminating = 0;
    for o in outcomes {
        discriminating += 1;
        for (t, ok) in readings.iter_mut().zip(o) {
            if ok {
                t.agree += 1;
            } else {
                t.disagree += 1;
            }
        }
    }
    let mut r = ProbeReport {
        probe: probe.name.into(),
        family: fam.to_string(),
        quantity: probe.quantity,
        description: probe.description.into(),
        fields: vec![field.into()],
        discriminating,
        readings,
        resolved: None,
    };
    r.settle();
    r
}
