//! Homotopy evidence for nested set complexes: join-contractibility
//! witnesses, the fibers of `S -> join(S)`, homology comparison with the
//! order complex, and the cone structure when `G` contains the top.

use rayon::prelude::*;

use crate::building::{complex_on, is_building, is_nested, nested_complex, nested_faces, BuildingSet};
use crate::catalog::remove_top;
use crate::complex::{face_cap, order_complex, order_complex_capped, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, HomologyResult};
use crate::semilattice::Semilattice;
use crate::set::ElementSet;

/// Where joins are evaluated when testing a subposet for
/// join-contractibility.
pub trait JoinContext {
    type Item: Clone + PartialEq;

    fn join(&self, a: &Self::Item, b: &Self::Item) -> Option<Self::Item>;
}

impl JoinContext for Semilattice {
    type Item = usize;

    fn join(&self, a: &usize, b: &usize) -> Option<usize> {
        Semilattice::join(self, *a, *b)
    }
}

/// The face poset of a nested set complex: the join of two nested sets is
/// their union when that is nested.
pub struct NestedFaceJoins<'a> {
    pub semilattice: &'a Semilattice,
    pub building: &'a BuildingSet,
}

impl JoinContext for NestedFaceJoins<'_> {
    type Item = Vec<usize>;

    fn join(&self, a: &Vec<usize>, b: &Vec<usize>) -> Option<Vec<usize>> {
        let mut u = a.clone();
        u.extend(b);
        u.sort_unstable();
        u.dedup();
        let set = ElementSet::from_indices(self.semilattice.len(), u.iter().copied());
        is_nested(self.semilattice, self.building, &set).ok()?.then_some(u)
    }
}

/// The first `x0` in `p` such that `x0 v x` exists and lies in `p` for every
/// `x` in `p`.
pub fn is_join_contractible<C: JoinContext>(ctx: &C, p: &[C::Item]) -> Option<C::Item> {
    p.iter()
        .find(|x0| p.iter().all(|x| ctx.join(x0, x).is_some_and(|j| p.contains(&j))))
        .cloned()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCase {
    /// `x` is in `G`; the fiber is join-contractible via `{x}`.
    InBuilding,
    /// `x` is not in `G`; the fiber is join-contractible via its factors.
    ViaFactors,
}

#[derive(Clone, Debug)]
pub struct FiberCheck {
    pub element: String,
    pub case: FiberCase,
    /// The nested set the case prescribes as contraction witness.
    pub witness: Vec<String>,
    /// Number of nonempty nested sets with join below the element.
    pub size: usize,
    pub witness_valid: bool,
    /// The first nested set that does not absorb the witness.
    pub counterexample: Option<Vec<String>>,
    pub homology: HomologyResult,
}

impl FiberCheck {
    pub fn passed(&self) -> bool {
        self.witness_valid && self.homology.is_acyclic()
    }
}

#[derive(Clone, Debug)]
pub struct FiberReport {
    pub checks: Vec<FiberCheck>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(FiberCheck::passed)
    }
}

/// For every `x != 0`, builds the fiber of nonempty nested sets `S` with
/// `join(S) <= x`, checks that adding the case witness keeps every member
/// nested and below `x`, and computes the reduced homology of the fiber's
/// order complex.
pub fn quillen_fiber_report(s: &Semilattice, g: &BuildingSet) -> Result<FiberReport> {
    let faces = nested_faces(s, g, face_cap())?;
    let joins: Vec<usize> = faces
        .iter()
        .map(|f| s.join_iter(f.iter().copied()).expect("nested sets have joins"))
        .collect();
    let elements: Vec<usize> = s.proper_elements().to_vec();
    let checks = elements
        .par_iter()
        .map(|&x| fiber_check(s, g, &faces, &joins, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(FiberReport { checks })
}

fn fiber_check(s: &Semilattice, g: &BuildingSet, faces: &[Vec<usize>], joins: &[usize], x: usize) -> Result<FiberCheck> {
    let (case, witness) = if g.contains(x) {
        (FiberCase::InBuilding, vec![x])
    } else {
        (FiberCase::ViaFactors, g.factors_of(x).to_vec())
    };
    let fiber: Vec<&Vec<usize>> = faces
        .iter()
        .zip(joins)
        .filter(|(f, &j)| !f.is_empty() && s.leq(j, x))
        .map(|(f, _)| f)
        .collect();
    let absorbs = |f: &Vec<usize>| {
        let mut u = f.clone();
        u.extend(&witness);
        u.sort_unstable();
        u.dedup();
        let set = ElementSet::from_indices(s.len(), u.iter().copied());
        is_nested(s, g, &set).unwrap_or(false) && s.join_set(&set).is_some_and(|j| s.leq(j, x))
    };
    let counterexample = fiber.iter().find(|f| !absorbs(f));
    let members = g.members();
    let sub = complex_on(s, &members, fiber.iter().map(|f| (*f).clone()).collect())?;
    let homology = fiber_homology(&sub)?;
    Ok(FiberCheck {
        element: s.label(x).to_string(),
        case,
        witness: witness.iter().map(|&w| s.label(w).to_string()).collect(),
        size: fiber.len(),
        witness_valid: counterexample.is_none(),
        counterexample: counterexample.map(|f| f.iter().map(|&e| s.label(e).to_string()).collect()),
        homology,
    })
}

/// Reduced homology of the order complex of the nonempty faces of `c`.
pub fn fiber_homology(c: &SimplicialComplex) -> Result<HomologyResult> {
    let fp = c.face_poset();
    let mut nonempty = ElementSet::full(fp.len());
    nonempty.remove(fp.bottom());
    let poset = fp.poset().induced(&nonempty).poset;
    reduced_homology(&order_complex_capped(&poset, face_cap())?)
}

/// The order complex of `L \ {0}`.
pub fn proper_part_complex(s: &Semilattice) -> Result<SimplicialComplex> {
    let p = s.poset().induced(&s.proper_elements()).poset;
    order_complex_capped(&p, face_cap())
}

#[derive(Clone, Debug)]
pub struct HomologyAgreement {
    pub nested: HomologyResult,
    pub order: HomologyResult,
}

impl HomologyAgreement {
    pub fn agrees(&self) -> bool {
        self.nested.same_as(&self.order)
    }
}

/// Reduced homology of the nested set complex next to that of the order
/// complex of `L \ {0}`.
pub fn homology_agreement(s: &Semilattice, g: &BuildingSet) -> Result<HomologyAgreement> {
    let (nested, order) = rayon::join(
        || nested_complex(s, g).and_then(|c| reduced_homology(&c)),
        || proper_part_complex(s).and_then(|c| reduced_homology(&c)),
    );
    Ok(HomologyAgreement {
        nested: nested?,
        order: order?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCheck {
    pub apex: String,
    pub is_cone: bool,
    /// The deletion of the apex equals the nested set complex of
    /// `L \ {1}` with `G \ {1}`.
    pub base_matches: bool,
}

impl ConeCheck {
    pub fn passed(&self) -> bool {
        self.is_cone && self.base_matches
    }
}

/// When `G` contains the top element, checks that the nested set complex is
/// a cone with that apex over the nested set complex of the proper part.
/// Returns `None` when the top is absent from `G` or `s` has no top.
pub fn cone_check(s: &Semilattice, g: &BuildingSet) -> Result<Option<ConeCheck>> {
    let Some(top) = s.top() else { return Ok(None) };
    if !g.contains(top) || s.len() < 2 {
        return Ok(None);
    }
    let n = nested_complex(s, g)?;
    let apex = n.vertex_index(s.label(top))?;
    let is_cone = n.is_cone(apex)?;
    let base = n.deletion(apex);
    let rest = remove_top(s)?;
    let mut labels = s.labels_of(g.carrier());
    labels.retain(|l| l != s.label(top));
    let carrier = rest.set_from_labels(&labels)?;
    let h = is_building(&rest, &carrier).ok_or_else(|| {
        Error::Falsified(format!("G without `{}` is not a building set of the proper part", s.label(top)))
    })?;
    let base_matches = base.same_faces(&nested_complex(&rest, &h)?);
    Ok(Some(ConeCheck {
        apex: s.label(top).to_string(),
        is_cone,
        base_matches,
    }))
}

/// Order complex of a poset with a maximum is a cone at the maximum.
pub fn order_complex_is_cone_at_max(s: &Semilattice) -> Option<bool> {
    let top = s.top()?;
    order_complex(s.poset()).is_cone(top).ok()
}
