//! JSON formats for posets, building sets, complexes, fans and homology.
//!
//! * poset: `{"elements": [..], "covers": [[a, b], ..]}`
//! * building set: `["a", "b", ..]`
//! * complex: `{"vertices": [..], "facets": [[0, 1], ..]}`
//! * fan: `{"rays": [[1, 0], ..], "cones": [[0, 1], ..], "labels": [..]}`,
//!   where input cones may be just the maximal ones and output lists every
//!   cone, the zero cone included
//! * homology: `{"1": {"rank": 1, "torsion": [2]}, ..}`

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::building::BuildingSet;
use crate::complex::{face_cap, SimplicialComplex};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::homology::{HomologyGroup, HomologyResult};
use crate::poset::Poset;
use crate::semilattice::{validate_meet_semilattice, Semilattice};
use crate::set::ElementSet;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

pub fn poset_to_json(p: &Poset) -> String {
    let covers = p
        .covers()
        .iter()
        .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
        .collect();
    pretty(&PosetJson {
        elements: p.labels().to_vec(),
        covers,
    })
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let j: PosetJson = serde_json::from_str(text).map_err(parse_err)?;
    Poset::from_covers(&j.elements, &j.covers)
}

pub fn semilattice_from_json(text: &str) -> Result<Semilattice> {
    validate_meet_semilattice(poset_from_json(text)?)
}

pub fn building_to_json(s: &Semilattice, g: &BuildingSet) -> String {
    element_set_to_json(s, g.carrier())
}

pub fn element_set_to_json(s: &Semilattice, set: &ElementSet) -> String {
    pretty(&s.labels_of(set))
}

/// An element set given by labels; whether it is a building set is up to
/// the caller.
pub fn element_set_from_json(s: &Semilattice, text: &str) -> Result<ElementSet> {
    let labels: Vec<String> = serde_json::from_str(text).map_err(parse_err)?;
    s.set_from_labels(&labels)
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    pretty(&ComplexJson {
        vertices: c.vertices().to_vec(),
        facets: c.facets(),
    })
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let j: ComplexJson = serde_json::from_str(text).map_err(parse_err)?;
    SimplicialComplex::from_facets(j.vertices, &j.facets, face_cap())
}

#[derive(Serialize, Deserialize)]
struct FanJson {
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn fan_to_json(f: &Fan) -> String {
    pretty(&FanJson {
        rays: f.rays().to_vec(),
        cones: f.cones().to_vec(),
        labels: f.labels().map(<[String]>::to_vec),
    })
}

/// The ambient dimension comes from the rays; a fan without rays is read as
/// living in dimension zero.
pub fn fan_from_json(text: &str) -> Result<Fan> {
    let j: FanJson = serde_json::from_str(text).map_err(parse_err)?;
    let dim = j.rays.first().map_or(0, Vec::len);
    Fan::new(dim, j.rays, &j.cones, j.labels)
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    rank: usize,
    torsion: Vec<u64>,
}

pub fn homology_to_json(h: &HomologyResult) -> String {
    let map: BTreeMap<String, GroupJson> = h
        .groups
        .iter()
        .map(|(d, g)| {
            let torsion = g
                .torsion
                .iter()
                .map(|t| u64::try_from(t).expect("torsion coefficients fit in 64 bits"))
                .collect();
            (d.to_string(), GroupJson { rank: g.rank, torsion })
        })
        .collect();
    pretty(&map)
}

pub fn homology_from_json(text: &str) -> Result<HomologyResult> {
    let map: BTreeMap<String, GroupJson> = serde_json::from_str(text).map_err(parse_err)?;
    let mut groups = BTreeMap::new();
    for (d, g) in map {
        let d: isize = d.parse().map_err(|_| Error::Parse(format!("dimension `{d}` is not an integer")))?;
        groups.insert(
            d,
            HomologyGroup {
                rank: g.rank,
                torsion: g.torsion.into_iter().map(BigUint::from).collect(),
            },
        );
    }
    Ok(HomologyResult { groups })
}
