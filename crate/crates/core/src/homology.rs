//! Reduced integral homology of simplicial complexes.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::snf::{invariant_factors, SparseMatrix};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Torsion coefficients, each greater than one and dividing the next.
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology by dimension. Dimensions run from 0 to the dimension of
/// the complex; the complex `{ {} }` has only dimension -1, with rank 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: BTreeMap<isize, HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, d: isize) -> HomologyGroup {
        self.groups.get(&d).cloned().unwrap_or_default()
    }

    pub fn rank(&self, d: isize) -> usize {
        self.group(d).rank
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.groups.values().all(HomologyGroup::is_trivial)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(|g| g.torsion.is_empty())
    }

    /// `1 + sum (-1)^d rank_d`, which equals the Euler characteristic.
    pub fn euler_from_ranks(&self) -> i64 {
        1 + self
            .groups
            .iter()
            .map(|(&d, g)| if d.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum::<i64>()
    }

    /// Only the nontrivial groups, for comparisons that should not depend on
    /// the dimension range.
    pub fn nontrivial(&self) -> BTreeMap<isize, HomologyGroup> {
        self.groups
            .iter()
            .filter(|(_, g)| !g.is_trivial())
            .map(|(&d, g)| (d, g.clone()))
            .collect()
    }

    /// Equality of all ranks and torsion, ignoring trailing trivial dimensions.
    pub fn same_as(&self, other: &HomologyResult) -> bool {
        self.nontrivial() == other.nontrivial()
    }
}

/// Boundary map from `d`-faces to `(d-1)`-faces (the empty face is the only
/// `(-1)`-face), one row per `d`-face.
pub fn boundary_matrix(c: &SimplicialComplex, d: isize) -> SparseMatrix {
    let lower: Vec<&Vec<usize>> = c.faces_of_dim(d - 1).collect();
    let lower_pos: std::collections::HashMap<&Vec<usize>, usize> =
        lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = SparseMatrix::new(lower.len());
    for f in c.faces_of_dim(d) {
        let row = (0..f.len())
            .map(|i| {
                let mut sub = f.clone();
                sub.remove(i);
                (lower_pos[&sub], if i % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        m.push_row(row);
    }
    m
}

pub fn reduced_homology(c: &SimplicialComplex) -> Result<HomologyResult> {
    reduced_homology_capped(c, crate::complex::face_cap())
}

pub fn reduced_homology_capped(c: &SimplicialComplex, cap: usize) -> Result<HomologyResult> {
    if c.face_count() > cap {
        return Err(Error::CapExceeded {
            size: c.face_count(),
            cap,
        });
    }
    let top = c.dimension();
    // factors[d] are the invariant factors of the boundary out of dimension d;
    // dimension 0 maps onto the empty face.
    let factors: Vec<Vec<BigInt>> = (0..=top.max(-1) + 1)
        .into_par_iter()
        .map(|d| if d > top { Vec::new() } else { invariant_factors(&boundary_matrix(c, d)) })
        .collect();
    let boundary_rank = |d: isize| -> usize {
        if d < 0 || d > top {
            0
        } else {
            factors[d as usize].len()
        }
    };
    let chains = |d: isize| c.faces_of_dim(d).count();
    let mut groups = BTreeMap::new();
    let first = if top < 0 { -1 } else { 0 };
    for d in first..=top {
        let rank = chains(d) - boundary_rank(d) - boundary_rank(d + 1);
        let torsion = if d < top {
            factors[(d + 1) as usize]
                .iter()
                .filter(|f| !f.is_one())
                .map(|f| f.magnitude().clone())
                .collect()
        } else {
            Vec::new()
        };
        groups.insert(d, HomologyGroup { rank, torsion });
    }
    Ok(HomologyResult { groups })
}
