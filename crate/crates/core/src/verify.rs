//! Runs every structural check on one semilattice and a selection of its
//! building sets, collecting pass/fail outcomes with witnesses.

use serde::Serialize;

use crate::blowup::blowup;
use crate::building::{
    crosscut_complex, enumerate_building_sets, is_building, max_building, min_building, nested_complex,
    BuildingSet, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::fan::{check_subdivision_duality, dependent_nested_sets, fan_from_nested, sample_support_equality, subdivision_sequence};
use crate::semilattice::Semilattice;
use crate::set::ElementSet;
use crate::topology::{cone_check, homology_agreement, proper_part_complex, quillen_fiber_report};

/// Semilattices larger than this need `slow` set.
pub const FAST_ELEMENT_LIMIT: usize = 32;

#[derive(Clone, Debug, Default)]
pub enum Selection {
    /// The minimal and maximal building sets.
    #[default]
    Extremes,
    /// Every building set.
    All,
    Given(ElementSet),
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub selection: Selection,
    pub slow: bool,
    pub seed: u64,
    pub trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            selection: Selection::Extremes,
            slow: false,
            seed: 0,
            trials: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub check: String,
    pub subject: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub outcomes: Vec<Outcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    fn push(&mut self, check: &str, subject: &str, result: std::result::Result<(), String>) {
        self.outcomes.push(Outcome {
            check: check.to_string(),
            subject: subject.to_string(),
            passed: result.is_ok(),
            detail: result.err(),
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let mark = if o.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {} {}", o.check, o.subject));
            if let Some(d) = &o.detail {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.outcomes.len(), failed));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn set_name(s: &Semilattice, set: &ElementSet) -> String {
    format!("{{{}}}", s.labels_of(set).join(", "))
}

fn labels(s: &Semilattice, elements: &[usize]) -> String {
    let names: Vec<&str> = elements.iter().map(|&e| s.label(e)).collect();
    format!("{{{}}}", names.join(", "))
}

fn select(s: &Semilattice, selection: &Selection) -> Result<Vec<BuildingSet>> {
    match selection {
        Selection::Extremes => {
            let (min, max) = (min_building(s)?, max_building(s)?);
            Ok(if min == max { vec![min] } else { vec![min, max] })
        }
        Selection::All => enumerate_building_sets(s, DEFAULT_ENUMERATION_CAP),
        Selection::Given(set) => is_building(s, set)
            .map(|g| vec![g])
            .ok_or_else(|| Error::NotBuilding(set_name(s, set), "rejected by the building check".into())),
    }
}

/// Every lower interval is boolean, so the atoms form a building set and
/// the crosscut complex is defined in the simplicial-poset sense.
fn is_simplicial_poset(s: &Semilattice) -> bool {
    (0..s.len()).all(|x| {
        let atoms = s.atoms_below(x).len();
        atoms < usize::BITS as usize && s.down_set(x).len() == 1 << atoms
    }) && s.is_atomic()
}

pub fn verify(s: &Semilattice, opts: &VerifyOptions) -> Result<VerifyReport> {
    if s.len() > FAST_ELEMENT_LIMIT && !opts.slow {
        return Err(Error::OutOfRange(format!(
            "{} elements exceed the limit of {FAST_ELEMENT_LIMIT} without --slow",
            s.len()
        )));
    }
    let sets = select(s, &opts.selection)?;
    let mut report = VerifyReport {
        seed: opts.seed,
        outcomes: Vec::new(),
    };

    for x in s.proper_elements().iter() {
        report.push("blowup-closure", s.label(x), blowup(s, x).map(|_| ()).map_err(|e| e.to_string()));
    }

    let max = max_building(s)?;
    let identity = match (nested_complex(s, &max), proper_part_complex(s)) {
        (Ok(n), Ok(d)) if n.same_faces(&d) => Ok(()),
        (Ok(_), Ok(_)) => Err("face sets differ".to_string()),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    };
    report.push("max-nested-is-order-complex", &set_name(s, max.carrier()), identity);

    if is_simplicial_poset(s) {
        let atoms = ElementSet::from_indices(s.len(), s.atoms().iter().copied());
        if let Some(g) = is_building(s, &atoms) {
            let result = match (crosscut_complex(s, &atoms), nested_complex(s, &g)) {
                (Ok(c), Ok(n)) if c.same_faces(&n) => Ok(()),
                (Ok(_), Ok(_)) => Err("face sets differ".to_string()),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            };
            report.push("crosscut-is-nested", &set_name(s, &atoms), result);
        }
    }

    let min = min_building(s)?;
    let atomic = s.is_atomic();
    let min_fan = if atomic { Some(fan_from_nested(s, &min)?) } else { None };
    for g in &sets {
        let name = set_name(s, g.carrier());
        let agreement = homology_agreement(s, g)?;
        report.push(
            "homology-agreement",
            &name,
            if agreement.agrees() {
                Ok(())
            } else {
                Err(format!("nested {:?} vs order {:?}", agreement.nested.nontrivial(), agreement.order.nontrivial()))
            },
        );

        let fibers = quillen_fiber_report(s, g)?;
        let failure = fibers.checks.iter().find(|c| !c.passed()).map(|c| {
            if let Some(bad) = &c.counterexample {
                format!("fiber at `{}`: {{{}}} does not absorb the witness", c.element, bad.join(", "))
            } else {
                format!("fiber at `{}` has homology {:?}", c.element, c.homology.nontrivial())
            }
        });
        report.push("quillen-fibers", &name, failure.map_or(Ok(()), Err));

        if let Some(cone) = cone_check(s, g)? {
            let result = match (cone.is_cone, cone.base_matches) {
                (true, true) => Ok(()),
                (false, _) => Err(format!("not a cone with apex `{}`", cone.apex)),
                (true, false) => Err("the base differs from the proper part's nested set complex".into()),
            };
            report.push("cone-over-proper-part", &name, result);
        }

        if !atomic {
            continue;
        }
        let dependent = dependent_nested_sets(s, g)?;
        report.push(
            "simplicial",
            &name,
            dependent.first().map_or(Ok(()), |d| Err(format!("{} has dependent vectors", labels(s, d)))),
        );
        let fan = fan_from_nested(s, g)?;
        report.push(
            "fan-intersections",
            &name,
            fan.improper_intersection().map_or(Ok(()), |(a, b)| {
                Err(format!("cones {a:?} and {b:?} do not meet in a common face"))
            }),
        );
        let duality = fan
            .cones()
            .iter()
            .filter(|c| !c.is_empty())
            .find_map(|c| check_subdivision_duality(&fan, c).err().map(|e| format!("cone {c:?}: {e}")));
        report.push("stellar-is-blowup", &name, duality.map_or(Ok(()), Err));

        let seq = subdivision_sequence(s, g, &min)?;
        report.push(
            "subdivision-sequence",
            &name,
            seq.first_failure().map_or(Ok(()), |step| {
                Err(format!(
                    "adding `{}`: {}",
                    step.element,
                    step.detail.clone().unwrap_or_else(|| "factor sum or Euler characteristic differs".into())
                ))
            }),
        );
        let support = sample_support_equality(min_fan.as_ref().unwrap(), &fan, opts.trials, opts.seed)?;
        report.push(
            "support-sampling",
            &name,
            match &support.witness {
                None => Ok(()),
                Some(p) => Err(format!(
                    "{} of {} points agree; witness {}",
                    support.agreements,
                    support.trials,
                    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                )),
            },
        );
    }
    Ok(report)
}
