//! Building sets, factors, nested sets and nested set complexes.
//!
//! A subset `G` of `L \ {0}` is a building set when, for every `x != 0`, the
//! lower interval `[0, x]` is the product of the intervals below the maximal
//! members of `G` under `x` (the factors of `x`), via an isomorphism sending
//! each factor's unit tuple to that factor. The check here uses the
//! canonical join map `(y_1, ..., y_k) -> y_1 v ... v y_k`; any qualifying
//! isomorphism agrees with it up to automorphisms of the factors, so the two
//! formulations accept the same sets. [`BuildingCheck::Exhaustive`] runs the
//! isomorphism search instead and is kept for cross-validation.

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::{find_isomorphism, product, tuple_at, tuple_index, Poset, SubPoset};
use crate::semilattice::Semilattice;
use crate::set::ElementSet;

/// Default bound on `|L \ {0}|` for [`enumerate_building_sets`].
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// Verified product decomposition of one lower interval `[0, x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub element: usize,
    pub factors: Vec<usize>,
    /// `images[t]` is the join of the `t`-th tuple of the product of the
    /// factor intervals, tuples enumerated lexicographically over the
    /// down-sets of the factors in index order.
    pub images: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BuildingSet {
    carrier: ElementSet,
    factor_map: Vec<ElementSet>,
    certificates: Vec<Option<Certificate>>,
}

impl BuildingSet {
    pub fn carrier(&self) -> &ElementSet {
        &self.carrier
    }

    pub fn contains(&self, x: usize) -> bool {
        self.carrier.contains(x)
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn members(&self) -> Vec<usize> {
        self.carrier.to_vec()
    }

    /// `F_G(x)`; empty at the bottom.
    pub fn factors_of(&self, x: usize) -> &ElementSet {
        &self.factor_map[x]
    }

    pub fn certificate(&self, x: usize) -> Option<&Certificate> {
        self.certificates[x].as_ref()
    }
}

impl PartialEq for BuildingSet {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
    }
}

impl Eq for BuildingSet {}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BuildingCheck {
    #[default]
    Canonical,
    Exhaustive,
}

/// Why a candidate failed to be a building set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingFailure {
    /// First element (in index order) whose lower interval does not factor.
    pub element: Option<usize>,
    pub reason: String,
}

/// `max { g in carrier : g <= x }`
pub fn factor_set(s: &Semilattice, carrier: &ElementSet, x: usize) -> ElementSet {
    s.max_of(&s.restrict_below(carrier, x))
}

/// The factors `F_G(x)` of `x` in a building set.
pub fn factors(s: &Semilattice, g: &BuildingSet, x: usize) -> Result<ElementSet> {
    s.check_index(x)?;
    if x == s.bottom() {
        return Err(Error::AtBottom);
    }
    Ok(g.factors_of(x).clone())
}

fn relation_count_below(s: &Semilattice, x: usize) -> usize {
    s.down_set(x).iter().map(|z| s.down_set(z).len()).sum()
}

/// The canonical join map `prod [0, f_j] -> [0, x]`, if it is an order
/// isomorphism. The map is monotone, so it is an isomorphism exactly when it
/// is a bijection and both sides have the same number of order relations.
pub fn canonical_join_map(s: &Semilattice, factors: &[usize], x: usize) -> Option<Vec<usize>> {
    let intervals: Vec<Vec<usize>> = factors.iter().map(|&f| s.down_set(f).to_vec()).collect();
    let sizes: Vec<usize> = intervals.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    let target = s.down_set(x);
    if total != target.len() {
        return None;
    }
    let mut hit = ElementSet::new(s.len());
    let mut images = Vec::with_capacity(total);
    for t in 0..total {
        let tuple = tuple_at(&sizes, t);
        let j = s.join_iter(tuple.iter().zip(&intervals).map(|(&i, iv)| iv[i]))?;
        if !target.contains(j) || hit.contains(j) {
            return None;
        }
        hit.insert(j);
        images.push(j);
    }
    let product_relations: usize = factors.iter().map(|&f| relation_count_below(s, f)).product();
    (product_relations == relation_count_below(s, x)).then_some(images)
}

/// Searches all isomorphisms `prod [0, f_j] -> [0, x]` sending unit tuples to
/// the factors, returning the first one found (as element images in the same
/// tuple order as [`canonical_join_map`]).
pub fn exhaustive_factorization(s: &Semilattice, factors: &[usize], x: usize) -> Option<Vec<usize>> {
    let target = s.interval(s.bottom(), x).ok()?;
    if factors.is_empty() {
        return (target.poset.len() == 1).then(|| vec![s.bottom()]);
    }
    let intervals: Vec<_> = factors
        .iter()
        .map(|&f| s.interval(s.bottom(), f).expect("bottom is below everything"))
        .collect();
    let posets: Vec<&Poset> = intervals.iter().map(|iv| &iv.poset).collect();
    let prod = product(&posets).ok()?;
    let sizes: Vec<usize> = posets.iter().map(|p| p.len()).collect();
    let position = |sub: &SubPoset, e: usize| sub.embedding.iter().position(|&v| v == e);
    let bottom_tuple: Vec<usize> = intervals
        .iter()
        .map(|iv| position(iv, s.bottom()).unwrap())
        .collect();
    let mut fixed = Vec::with_capacity(factors.len());
    for (j, &f) in factors.iter().enumerate() {
        let mut unit = bottom_tuple.clone();
        unit[j] = position(&intervals[j], f).unwrap();
        fixed.push((tuple_index(&sizes, &unit), position(&target, f)?));
    }
    let iso = find_isomorphism(&prod, &target.poset, &fixed)?;
    Some(iso.into_iter().map(|i| target.embedding[i]).collect())
}

/// Validates `candidate` as a building set, returning per-element certificates.
pub fn check_building(
    s: &Semilattice,
    candidate: &ElementSet,
    mode: BuildingCheck,
) -> std::result::Result<BuildingSet, BuildingFailure> {
    if candidate.capacity() != s.len() {
        return Err(BuildingFailure {
            element: None,
            reason: "candidate set has the wrong capacity".into(),
        });
    }
    if candidate.contains(s.bottom()) {
        return Err(BuildingFailure {
            element: Some(s.bottom()),
            reason: "building sets may not contain the bottom element".into(),
        });
    }
    let mut factor_map = vec![ElementSet::new(s.len()); s.len()];
    let mut certificates = vec![None; s.len()];
    for x in 0..s.len() {
        if x == s.bottom() {
            continue;
        }
        let fs = factor_set(s, candidate, x);
        let fv = fs.to_vec();
        let cert = match mode {
            BuildingCheck::Canonical => canonical_join_map(s, &fv, x),
            BuildingCheck::Exhaustive => exhaustive_factorization(s, &fv, x),
        };
        match cert {
            Some(images) => {
                certificates[x] = Some(Certificate {
                    element: x,
                    factors: fv,
                    images,
                })
            }
            None => {
                let names: Vec<&str> = fv.iter().map(|&f| s.label(f)).collect();
                return Err(BuildingFailure {
                    element: Some(x),
                    reason: format!(
                        "[0, {}] is not the product of the intervals below its factors {{{}}}",
                        s.label(x),
                        names.join(", ")
                    ),
                });
            }
        }
        factor_map[x] = fs;
    }
    Ok(BuildingSet {
        carrier: candidate.clone(),
        factor_map,
        certificates,
    })
}

pub fn is_building(s: &Semilattice, candidate: &ElementSet) -> Option<BuildingSet> {
    check_building(s, candidate, BuildingCheck::Canonical).ok()
}

fn require_building(s: &Semilattice, candidate: &ElementSet) -> Result<BuildingSet> {
    check_building(s, candidate, BuildingCheck::Canonical).map_err(|f| {
        Error::NotBuilding(
            format!("{{{}}}", s.labels_of(candidate).join(", ")),
            f.reason,
        )
    })
}

/// `x` admits a nontrivial product decomposition of `[0, x]`. Two factors
/// suffice: grouping all but one factor of a longer decomposition gives a
/// two-factor one.
pub fn is_decomposable(s: &Semilattice, x: usize) -> bool {
    if x == s.bottom() {
        return false;
    }
    let inner: Vec<usize> = s
        .down_set(x)
        .iter()
        .filter(|&y| y != x && y != s.bottom())
        .collect();
    inner.iter().enumerate().any(|(i, &a)| {
        inner[i + 1..].iter().any(|&b| {
            !s.poset().comparable(a, b)
                && s.join(a, b) == Some(x)
                && canonical_join_map(s, &[a, b], x).is_some()
        })
    })
}

/// The irreducible elements, which form the inclusion-minimal building set.
pub fn min_building(s: &Semilattice) -> Result<BuildingSet> {
    let mut carrier = s.empty_set();
    for x in 0..s.len() {
        if x != s.bottom() && !is_decomposable(s, x) {
            carrier.insert(x);
        }
    }
    require_building(s, &carrier)
}

/// All of `L \ {0}`.
pub fn max_building(s: &Semilattice) -> Result<BuildingSet> {
    require_building(s, &s.proper_elements())
}

/// Every building set, ordered by the subset of `max \ min` it adds (as a
/// binary number over those elements in index order).
pub fn enumerate_building_sets(s: &Semilattice, cap: usize) -> Result<Vec<BuildingSet>> {
    let proper = s.len() - 1;
    if proper > cap {
        return Err(Error::CapExceeded { size: proper, cap });
    }
    let min = min_building(s)?;
    let free: Vec<usize> = s.proper_elements().difference(min.carrier()).to_vec();
    let found: Vec<BuildingSet> = (0u64..1 << free.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut c = min.carrier().clone();
            for (i, &e) in free.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    c.insert(e);
                }
            }
            is_building(s, &c)
        })
        .collect();
    Ok(found)
}

/// Visits every antichain of size at least two inside `members`, with its
/// join (`None` when the join does not exist). Stops early when `visit`
/// returns `false`.
fn for_each_antichain<F>(s: &Semilattice, members: &[usize], visit: &mut F) -> bool
where
    F: FnMut(&[usize], Option<usize>) -> bool,
{
    fn go<F>(
        s: &Semilattice,
        members: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        join: Option<usize>,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize], Option<usize>) -> bool,
    {
        for i in start..members.len() {
            let y = members[i];
            if chosen.iter().any(|&c| s.poset().comparable(c, y)) {
                continue;
            }
            let j = join.and_then(|j| s.join(j, y));
            chosen.push(y);
            if chosen.len() >= 2 && !visit(chosen, j) {
                chosen.pop();
                return false;
            }
            let keep = go(s, members, i + 1, chosen, j, visit);
            chosen.pop();
            if !keep {
                return false;
            }
        }
        true
    }
    go(s, members, 0, &mut Vec::new(), Some(s.bottom()), visit)
}

fn antichains_ok(s: &Semilattice, g: &ElementSet, members: &[usize]) -> bool {
    for_each_antichain(s, members, &mut |_, j| matches!(j, Some(j) if !g.contains(j)))
}

/// Every antichain of size at least two in `cand` has a join outside `G`.
pub fn is_nested(s: &Semilattice, g: &BuildingSet, cand: &ElementSet) -> Result<bool> {
    if let Some(x) = cand.difference(g.carrier()).first() {
        return Err(Error::NotInBuildingSet(s.label(x).to_string()));
    }
    Ok(antichains_ok(s, g.carrier(), &cand.to_vec()))
}

/// Antichains of `cand` that break nestedness, for diagnostics.
pub fn first_nesting_violation(s: &Semilattice, g: &BuildingSet, cand: &ElementSet) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_antichain(s, &cand.to_vec(), &mut |a, j| match j {
        Some(j) if !g.contains(j) => true,
        _ => {
            found = Some(a.to_vec());
            false
        }
    });
    found
}

/// Adding `v` to the nested set `base` keeps it nested. Only antichains
/// through `v` need checking.
fn extends_nested(s: &Semilattice, g: &ElementSet, base: &[usize], v: usize) -> bool {
    let others: Vec<usize> = base
        .iter()
        .copied()
        .filter(|&b| !s.poset().comparable(b, v))
        .collect();
    // antichains A of `others` (any size >= 1) must have A + v joining outside G
    let mut ok = true;
    let mut check = |a: &[usize]| {
        let j = s.join_iter(a.iter().copied().chain([v]));
        ok = matches!(j, Some(j) if !g.contains(j));
        ok
    };
    for &o in &others {
        if !check(&[o]) {
            return false;
        }
    }
    for_each_antichain(s, &others, &mut |a, _| check(a));
    ok
}

/// All nested sets as sorted element-index lists, the empty set first,
/// ordered by size then lexicographically.
pub fn nested_faces(s: &Semilattice, g: &BuildingSet, cap: usize) -> Result<Vec<Vec<usize>>> {
    let members = g.members();
    let mut faces = vec![Vec::new()];
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((face, next)) = stack.pop() {
        for (i, &v) in members.iter().enumerate().skip(next) {
            if extends_nested(s, g.carrier(), &face, v) {
                let mut f = face.clone();
                f.push(v);
                faces.push(f.clone());
                if faces.len() > cap {
                    return Err(Error::CapExceeded { size: faces.len(), cap });
                }
                stack.push((f, i + 1));
            }
        }
    }
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(faces)
}

/// The nested set complex on the vertex set `G` (vertex `i` is the `i`-th
/// member of `G` in index order, labelled like the element).
pub fn nested_complex(s: &Semilattice, g: &BuildingSet) -> Result<SimplicialComplex> {
    nested_complex_capped(s, g, crate::complex::face_cap())
}

pub fn nested_complex_capped(s: &Semilattice, g: &BuildingSet, cap: usize) -> Result<SimplicialComplex> {
    let members = g.members();
    let faces = nested_faces(s, g, cap)?;
    complex_on(s, &members, faces)
}

/// Re-indexes element-level faces onto the vertex list `members`.
pub(crate) fn complex_on(s: &Semilattice, members: &[usize], faces: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
    let mut pos = vec![usize::MAX; s.len()];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    let labels = members.iter().map(|&m| s.label(m).to_string()).collect();
    SimplicialComplex::from_faces(
        labels,
        faces.into_iter().map(|f| f.into_iter().map(|e| pos[e]).collect()),
    )
}

/// Subsets of atoms that are bounded above. `crosscut` must be the atom set.
pub fn crosscut_complex(s: &Semilattice, crosscut: &ElementSet) -> Result<SimplicialComplex> {
    let atoms = ElementSet::from_indices(s.len(), s.atoms().iter().copied());
    if *crosscut != atoms {
        return Err(Error::NotAtomCrosscut);
    }
    let members = s.atoms().to_vec();
    let mut faces = vec![Vec::new()];
    let mut stack: Vec<(Vec<usize>, usize, usize)> = vec![(Vec::new(), 0, s.bottom())];
    while let Some((face, next, join)) = stack.pop() {
        for (i, &a) in members.iter().enumerate().skip(next) {
            if let Some(j) = s.join(join, a) {
                let mut f = face.clone();
                f.push(a);
                faces.push(f.clone());
                stack.push((f, i + 1, j));
            }
        }
    }
    complex_on(s, &members, faces)
}
