//! Combinatorial blowup of a meet-semilattice at an element.
//!
//! `Bl_X L` keeps every `Y` with `Y >= X` false, and adds a hatted copy `Y^`
//! for each such `Y` whose join with `X` exists. The order is
//!
//! * `Y < Z` and `Y^ < Z^` whenever `Y < Z` in `L`,
//! * `Y < Z^` whenever `Y <= Z` in `L`,
//!
//! and nothing hatted lies below anything plain. For the face poset of a fan
//! and a cone `s`, the blowup at `s` is the face poset of the stellar
//! subdivision at `s`: plain elements are the surviving cones, `Y^` is the
//! cone spanned by `Y` and the new ray.

use std::collections::{HashMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::semilattice::{validate_meet_semilattice, Semilattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlownElement {
    pub origin: usize,
    pub hatted: bool,
}

#[derive(Clone, Debug)]
pub struct Blowup {
    pub lattice: Semilattice,
    /// `elements[i]` describes element `i` of `lattice`.
    pub elements: Vec<BlownElement>,
    pub center: usize,
}

impl Blowup {
    pub fn position(&self, e: BlownElement) -> Option<usize> {
        self.elements.iter().position(|&b| b == e)
    }
}

pub fn blowup(s: &Semilattice, x: usize) -> Result<Blowup> {
    let (poset, elements) = blown_order(s, x)?;
    let lattice = validate_meet_semilattice(poset).map_err(|e| {
        Error::Falsified(format!("blowup at `{}` is not a meet-semilattice: {e}", s.label(x)))
    })?;
    Ok(Blowup {
        lattice,
        elements,
        center: x,
    })
}

/// The blown-up order before its meets are checked.
fn blown_order(s: &Semilattice, x: usize) -> Result<(Poset, Vec<BlownElement>)> {
    s.check_index(x)?;
    if x == s.bottom() {
        return Err(Error::AtBottom);
    }
    let kept: Vec<usize> = (0..s.len()).filter(|&y| !s.leq(x, y)).collect();
    let mut elements: Vec<BlownElement> = kept
        .iter()
        .map(|&origin| BlownElement { origin, hatted: false })
        .collect();
    elements.extend(
        kept.iter()
            .filter(|&&y| s.join(y, x).is_some())
            .map(|&origin| BlownElement { origin, hatted: true }),
    );
    let labels = render_labels(s, &elements);
    let poset = Poset::from_relation(labels, |a, b| {
        let (ea, eb) = (elements[a], elements[b]);
        match (ea.hatted, eb.hatted) {
            (true, false) => false,
            _ => s.leq(ea.origin, eb.origin),
        }
    })?;
    Ok((poset, elements))
}

/// Hatted elements render as `label^`; extra carets keep labels distinct if
/// the source already uses such names.
fn render_labels(s: &Semilattice, elements: &[BlownElement]) -> Vec<String> {
    let mut used: HashSet<String> = HashSet::new();
    let mut out = Vec::with_capacity(elements.len());
    for e in elements {
        let mut label = s.label(e.origin).to_string();
        if e.hatted {
            label.push('^');
        }
        while !used.insert(label.clone()) {
            label.push('^');
        }
        out.push(label);
    }
    out
}

/// Blowup of a face poset at one of its faces; the same operation as
/// [`blowup`], named for use with fans and complexes.
pub fn blowup_face_poset(fp: &Semilattice, face: usize) -> Result<Blowup> {
    blowup(fp, face)
}

/// Checks that the face poset of the complex `target` is the blowup of the
/// face poset of `source` at `center`, realized by the map sending plain `Y`
/// to the face `Y` and `Y^` to `Y + new_vertex`.
///
/// Faces are sorted lists of arbitrary vertex ids, closed under subsets and
/// including the empty face. On success returns the number of elements
/// matched; on failure the smallest witness found.
pub fn check_blowup_realization(
    source: &[Vec<usize>],
    center: &[usize],
    new_vertex: usize,
    target: &[Vec<usize>],
) -> std::result::Result<usize, String> {
    let complex = id_complex(source).map_err(|e| format!("source faces: {e}"))?;
    let fp = complex.face_poset();
    let center_id = complex
        .face_id(center)
        .ok_or_else(|| format!("center {center:?} is not a face of the source"))?;
    let (order, elements) = blown_order(&fp, center_id).map_err(|e| e.to_string())?;
    let faces = complex.faces();
    let images: Vec<Vec<usize>> = elements
        .iter()
        .map(|e| {
            let mut f = faces[e.origin].clone();
            if e.hatted {
                f.push(new_vertex);
                f.sort_unstable();
                f.dedup();
            }
            f
        })
        .collect();
    let target_pos: HashMap<&Vec<usize>, usize> = target.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut hit = vec![false; target.len()];
    for (e, img) in elements.iter().zip(&images) {
        let Some(&t) = target_pos.get(img) else {
            return Err(format!(
                "blowup element {}{} maps to {img:?}, which is not a target face",
                fp.label(e.origin),
                if e.hatted { "^" } else { "" }
            ));
        };
        if std::mem::replace(&mut hit[t], true) {
            return Err(format!("target face {img:?} is hit twice"));
        }
    }
    if let Some(t) = hit.iter().position(|&h| !h) {
        return Err(format!("target face {:?} is not in the image", target[t]));
    }
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|v| b.binary_search(v).is_ok());
    let n = images.len();
    for a in 0..n {
        for b in 0..n {
            if order.leq(a, b) != subset(&images[a], &images[b]) {
                return Err(format!(
                    "order mismatch between {:?} and {:?}",
                    images[a], images[b]
                ));
            }
        }
    }
    Ok(n)
}

/// A complex whose vertex `i` is labelled `i`, for faces over raw ids.
fn id_complex(faces: &[Vec<usize>]) -> Result<SimplicialComplex> {
    let n = faces.iter().flatten().max().map_or(0, |&m| m + 1);
    SimplicialComplex::from_faces((0..n).map(|i| i.to_string()).collect(), faces.to_vec())
}
