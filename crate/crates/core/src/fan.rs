//! Simplicial fans realized from nested set complexes, and stellar
//! subdivisions between them.
//!
//! Rays are stored as primitive integer vectors and cones as sorted lists of
//! ray indices closed under taking faces. All arithmetic is exact.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::blowup::check_blowup_realization;
use crate::building::{factor_set, is_building, nested_faces, BuildingSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{combination, feasible_nonnegative, is_independent, primitive, q, ConeMembership, Q};
use crate::semilattice::Semilattice;
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    /// Ordered by size then lexicographically; the zero cone comes first.
    cones: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Fan {
    /// Builds a fan from generating cones, adding all their faces. Rays are
    /// made primitive; they must be nonzero, distinct, and every cone must
    /// have linearly independent rays.
    pub fn new(
        dim: usize,
        rays: Vec<Vec<i64>>,
        cones: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Fan> {
        let mut seen = HashMap::new();
        let mut prim = Vec::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(r.len(), dim));
            }
            if r.iter().all(|&x| x == 0) {
                return Err(Error::InvalidFan(format!("ray {i} is zero")));
            }
            let p = primitive(r);
            if let Some(j) = seen.insert(p.clone(), i) {
                return Err(Error::InvalidFan(format!("rays {j} and {i} span the same half-line")));
            }
            prim.push(p);
        }
        if let Some(l) = &labels {
            if l.len() != rays.len() {
                return Err(Error::InvalidFan(format!("{} labels for {} rays", l.len(), rays.len())));
            }
        }
        let mut closed: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        closed.insert((0, Vec::new()));
        for cone in cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&r| r >= prim.len()) {
                return Err(Error::IndexOutOfRange(bad));
            }
            let gens: Vec<Vec<i64>> = c.iter().map(|&r| prim[r].clone()).collect();
            if !is_independent(&gens) {
                return Err(Error::LinearlyDependent(c));
            }
            if c.len() >= usize::BITS as usize - 1 {
                return Err(Error::CapExceeded { size: usize::MAX, cap: crate::complex::face_cap() });
            }
            for mask in 1usize..(1 << c.len()) {
                let sub: Vec<usize> = (0..c.len()).filter(|b| mask & (1 << b) != 0).map(|b| c[b]).collect();
                closed.insert((sub.len(), sub));
            }
        }
        Ok(Fan {
            dim,
            rays: prim,
            cones: closed.into_iter().map(|(_, c)| c).collect(),
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// All cones, including the zero cone.
    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn ray_label(&self, r: usize) -> String {
        match &self.labels {
            Some(l) => l[r].clone(),
            None => format!("r{r}"),
        }
    }

    pub fn ray_index(&self, v: &[i64]) -> Option<usize> {
        let p = primitive(v);
        self.rays.iter().position(|r| *r == p)
    }

    pub fn contains_cone(&self, cone: &[usize]) -> bool {
        self.cones.binary_search_by(|c| c.len().cmp(&cone.len()).then_with(|| c.as_slice().cmp(cone))).is_ok()
    }

    pub fn maximal_cones(&self) -> Vec<Vec<usize>> {
        self.as_complex().facets()
    }

    /// The cones as an abstract simplicial complex on the rays.
    pub fn as_complex(&self) -> SimplicialComplex {
        let vertices = (0..self.rays.len()).map(|r| self.ray_label(r)).collect();
        SimplicialComplex::from_faces(vertices, self.cones.clone()).expect("cones are face-closed")
    }

    /// Cones ordered by the face relation, with the zero cone as bottom.
    pub fn face_poset(&self) -> Semilattice {
        self.as_complex().face_poset()
    }

    /// The cone as a set of ray vectors, for comparisons across fans.
    fn cone_vectors(&self, cone: &[usize]) -> BTreeSet<Vec<i64>> {
        cone.iter().map(|&r| self.rays[r].clone()).collect()
    }

    /// Whether `p` lies in one of the cones.
    pub fn contains_point(&self, p: &[Q]) -> bool {
        in_support(&self.maximal_generators(), p)
    }

    fn maximal_generators(&self) -> Vec<Vec<Vec<i64>>> {
        self.maximal_cones()
            .iter()
            .map(|c| c.iter().map(|&r| self.rays[r].clone()).collect())
            .collect()
    }

    /// A pair of maximal cones whose intersection is not a common face, if
    /// there is one.
    pub fn improper_intersection(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let maximal = self.maximal_cones();
        let pairs: Vec<(usize, usize)> = (0..maximal.len())
            .flat_map(|i| (i + 1..maximal.len()).map(move |j| (i, j)))
            .collect();
        pairs
            .into_par_iter()
            .find_first(|&(i, j)| !self.meet_in_a_face(&maximal[i], &maximal[j]))
            .map(|(i, j)| (maximal[i].clone(), maximal[j].clone()))
    }

    /// `cone(S) ∩ cone(T) = cone(S ∩ T)`. Fails exactly when some point of
    /// the intersection uses a ray of `S \ T` with positive weight, which is
    /// a linear feasibility problem.
    fn meet_in_a_face(&self, s: &[usize], t: &[usize]) -> bool {
        let union: BTreeSet<usize> = s.iter().chain(t).copied().collect();
        let gens: Vec<Vec<i64>> = union.iter().map(|&r| self.rays[r].clone()).collect();
        if is_independent(&gens) {
            return true;
        }
        let cols = s.len() + t.len();
        let mut a: Vec<Vec<Q>> = (0..self.dim)
            .map(|k| {
                s.iter()
                    .map(|&r| q(self.rays[r][k]))
                    .chain(t.iter().map(|&r| -q(self.rays[r][k])))
                    .collect()
            })
            .collect();
        let mut last = vec![Q::zero(); cols];
        for (i, r) in s.iter().enumerate() {
            if !t.contains(r) {
                last[i] = q(1);
            }
        }
        a.push(last);
        let mut b = vec![Q::zero(); self.dim];
        b.push(q(1));
        !feasible_nonnegative(&a, &b)
    }
}

fn membership_tests(maximal: &[Vec<Vec<i64>>], dim: usize) -> Option<Vec<ConeMembership>> {
    maximal.iter().map(|gens| ConeMembership::new(gens, dim)).collect()
}

fn in_support(maximal: &[Vec<Vec<i64>>], p: &[Q]) -> bool {
    p.iter().all(Zero::is_zero)
        || maximal
            .iter()
            .any(|gens| combination(gens, p).is_some_and(|l| l.iter().all(|x| !x.is_negative())))
}

/// `(v_x)_i = 1` exactly when the `i`-th atom lies below `x`.
pub fn char_vector(s: &Semilattice, x: usize) -> Result<Vec<i64>> {
    s.require_atomic()?;
    s.check_index(x)?;
    if x == s.bottom() {
        return Err(Error::AtBottom);
    }
    Ok(s.atoms().iter().map(|&a| i64::from(s.leq(a, x))).collect())
}

/// The fan whose cones are spanned by the characteristic vectors of nested
/// sets. Ray `i` belongs to the `i`-th member of `G` in index order.
pub fn fan_from_nested(s: &Semilattice, g: &BuildingSet) -> Result<Fan> {
    s.require_atomic()?;
    let members = g.members();
    let mut pos = vec![usize::MAX; s.len()];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    let rays = members.iter().map(|&m| char_vector(s, m)).collect::<Result<Vec<_>>>()?;
    let faces = nested_faces(s, g, crate::complex::face_cap())?;
    let cones: Vec<Vec<usize>> = faces.iter().map(|f| f.iter().map(|&e| pos[e]).collect()).collect();
    let labels = members.iter().map(|&m| s.label(m).to_string()).collect();
    Fan::new(s.atoms().len(), rays, &cones, Some(labels)).map_err(|e| match e {
        Error::LinearlyDependent(c) => Error::LinearlyDependent(c.iter().map(|&r| members[r]).collect()),
        other => other,
    })
}

/// Stellar subdivision of `f` at the cone `sigma` by a ray through `v`,
/// which must lie in the relative interior of `sigma`. Subdividing a ray
/// changes nothing.
pub fn stellar_subdivide(f: &Fan, sigma: &[usize], v: &[i64]) -> Result<Fan> {
    let mut sigma = sigma.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    if !f.contains_cone(&sigma) {
        return Err(Error::ConeNotInFan(sigma));
    }
    if v.len() != f.dim {
        return Err(Error::DimensionMismatch(v.len(), f.dim));
    }
    let gens: Vec<Vec<i64>> = sigma.iter().map(|&r| f.rays[r].clone()).collect();
    let interior = !sigma.is_empty()
        && combination(&gens, &crate::linalg::to_q(v)).is_some_and(|l| l.iter().all(Signed::is_positive));
    if !interior {
        return Err(Error::NotInRelativeInterior);
    }
    if sigma.len() == 1 {
        return Ok(f.clone());
    }
    let new_ray = f.rays.len();
    let mut rays = f.rays.clone();
    rays.push(primitive(v));
    let mut labels = f.labels.clone();
    if let Some(l) = labels.as_mut() {
        l.push(format!("{v:?}"));
    }
    let contains_sigma = |c: &[usize]| sigma.iter().all(|r| c.binary_search(r).is_ok());
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for c in &f.cones {
        if !contains_sigma(c) {
            cones.push(c.clone());
            continue;
        }
        for mask in 0usize..(1 << c.len()) {
            let rho: Vec<usize> = (0..c.len()).filter(|b| mask & (1 << b) != 0).map(|b| c[b]).collect();
            if !contains_sigma(&rho) {
                let mut cone = rho;
                cone.push(new_ray);
                cones.push(cone);
            }
        }
    }
    Fan::new(f.dim, rays, &cones, labels)
}

/// The first difference between two fans, comparing ray sets and cones as
/// sets of ray vectors.
pub fn fan_mismatch(a: &Fan, b: &Fan) -> Option<String> {
    if a.dim != b.dim {
        return Some(format!("ambient dimensions {} and {}", a.dim, b.dim));
    }
    let ra: BTreeSet<&Vec<i64>> = a.rays.iter().collect();
    let rb: BTreeSet<&Vec<i64>> = b.rays.iter().collect();
    if let Some(r) = ra.symmetric_difference(&rb).next() {
        return Some(format!("ray {r:?} is in only one fan"));
    }
    let ca: BTreeSet<BTreeSet<Vec<i64>>> = a.cones.iter().map(|c| a.cone_vectors(c)).collect();
    let cb: BTreeSet<BTreeSet<Vec<i64>>> = b.cones.iter().map(|c| b.cone_vectors(c)).collect();
    ca.symmetric_difference(&cb)
        .min_by_key(|c| c.len())
        .map(|c| format!("cone {c:?} is in only one fan"))
}

pub fn fans_equal(a: &Fan, b: &Fan) -> bool {
    fan_mismatch(a, b).is_none()
}

/// Whether `v_x` is the sum of the characteristic vectors of the factors of
/// `x` in `h`, which places it in the relative interior of their cone.
pub fn factor_sum_check(s: &Semilattice, g: &BuildingSet, x: usize, h: &BuildingSet) -> Result<bool> {
    if !g.contains(x) {
        return Err(Error::NotInBuildingSet(s.label(x).to_string()));
    }
    let target = char_vector(s, x)?;
    let mut sum = vec![0i64; target.len()];
    for f in factor_set(s, h.carrier(), x).iter() {
        for (acc, c) in sum.iter_mut().zip(char_vector(s, f)?) {
            *acc += c;
        }
    }
    Ok(sum == target)
}

/// `G = G_1 ⊇ G_2 ⊇ ... ⊇ G_t = H`, each step removing the minimal element
/// of `G_i \ H` with the least label. Every intermediate set is checked to
/// be a building set.
pub fn building_chain(s: &Semilattice, g: &BuildingSet, h: &BuildingSet) -> Result<Vec<BuildingSet>> {
    if !h.carrier().is_subset(g.carrier()) {
        return Err(Error::NotSubset);
    }
    let mut chain = vec![g.clone()];
    loop {
        let current = chain.last().unwrap();
        let extra = current.carrier().difference(h.carrier());
        if extra.is_empty() {
            return Ok(chain);
        }
        let x = extra
            .iter()
            .filter(|&x| extra.iter().all(|y| y == x || !s.leq(y, x)))
            .min_by(|&a, &b| s.label(a).cmp(s.label(b)))
            .expect("a finite nonempty set has minimal elements");
        let mut next = current.carrier().clone();
        next.remove(x);
        let Some(b) = is_building(s, &next) else {
            return Err(Error::Falsified(format!(
                "removing `{}` leaves {{{}}}, which is not a building set",
                s.label(x),
                s.labels_of(&next).join(", ")
            )));
        };
        chain.push(b);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionStep {
    /// The element added when passing from the coarser to the finer set.
    pub element: String,
    /// Its factors in the coarser building set.
    pub factors: Vec<String>,
    /// The subdivided cone, as ray indices of the coarser fan.
    pub cone: Vec<usize>,
    pub factor_sum: bool,
    /// The stellar subdivision equals the fan of the finer building set.
    pub fan_equal: bool,
    /// The fan of the finer set has the blowup of the coarser face poset as
    /// its face poset.
    pub blowup_equal: bool,
    pub euler_preserved: bool,
    pub detail: Option<String>,
}

impl SubdivisionStep {
    pub fn passed(&self) -> bool {
        self.factor_sum && self.fan_equal && self.blowup_equal && self.euler_preserved
    }
}

#[derive(Clone, Debug)]
pub struct SubdivisionReport {
    /// Building sets from `H` up to `G`, as label lists.
    pub chain: Vec<Vec<String>>,
    /// `fans[i]` realizes `chain[i]`.
    pub fans: Vec<Fan>,
    /// `steps[i]` goes from `fans[i]` to `fans[i + 1]`.
    pub steps: Vec<SubdivisionStep>,
}

impl SubdivisionReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(SubdivisionStep::passed)
    }

    pub fn first_failure(&self) -> Option<&SubdivisionStep> {
        self.steps.iter().find(|s| !s.passed())
    }
}

/// Walks the building chain from `H` up to `G`, checking at every step that
/// the finer fan is the stellar subdivision of the coarser one at the cone
/// of the new element's factors, and that its face poset is the
/// corresponding blowup. Failed checks are reported, not raised.
pub fn subdivision_sequence(s: &Semilattice, g: &BuildingSet, h: &BuildingSet) -> Result<SubdivisionReport> {
    SubdivisionVerifier::new(s)?.sequence(g, h)
}

/// Runs [`subdivision_sequence`] over many pairs, caching fans per building
/// set and step reports per consecutive pair.
pub struct SubdivisionVerifier<'a> {
    s: &'a Semilattice,
    fans: HashMap<Vec<usize>, Fan>,
    steps: HashMap<(Vec<usize>, Vec<usize>), SubdivisionStep>,
}

impl<'a> SubdivisionVerifier<'a> {
    pub fn new(s: &'a Semilattice) -> Result<Self> {
        s.require_atomic()?;
        Ok(SubdivisionVerifier {
            s,
            fans: HashMap::new(),
            steps: HashMap::new(),
        })
    }

    fn fan(&mut self, b: &BuildingSet) -> Result<Fan> {
        let key = b.members();
        if let Some(f) = self.fans.get(&key) {
            return Ok(f.clone());
        }
        let f = fan_from_nested(self.s, b)?;
        self.fans.insert(key, f.clone());
        Ok(f)
    }

    pub fn sequence(&mut self, g: &BuildingSet, h: &BuildingSet) -> Result<SubdivisionReport> {
        let mut chain = building_chain(self.s, g, h)?;
        chain.reverse();
        let fans = chain.iter().map(|b| self.fan(b)).collect::<Result<Vec<_>>>()?;
        let mut steps = Vec::with_capacity(chain.len().saturating_sub(1));
        for i in 0..chain.len().saturating_sub(1) {
            let key = (chain[i].members(), chain[i + 1].members());
            let step = match self.steps.get(&key) {
                Some(step) => step.clone(),
                None => {
                    let step = subdivision_step(self.s, &chain[i], &chain[i + 1], &fans[i], &fans[i + 1])?;
                    self.steps.insert(key, step.clone());
                    step
                }
            };
            steps.push(step);
        }
        Ok(SubdivisionReport {
            chain: chain.iter().map(|b| self.s.labels_of(b.carrier())).collect(),
            fans,
            steps,
        })
    }

    /// Distinct steps checked so far.
    pub fn steps_checked(&self) -> usize {
        self.steps.len()
    }
}

fn subdivision_step(
    s: &Semilattice,
    coarse: &BuildingSet,
    fine: &BuildingSet,
    coarse_fan: &Fan,
    fine_fan: &Fan,
) -> Result<SubdivisionStep> {
    let x = fine
        .carrier()
        .difference(coarse.carrier())
        .first()
        .expect("consecutive chain members differ by one element");
    let factors = factor_set(s, coarse.carrier(), x);
    let members = coarse.members();
    let cone: Vec<usize> = factors
        .iter()
        .map(|f| members.binary_search(&f).expect("factors lie in the building set"))
        .collect();
    let v = char_vector(s, x)?;
    let mut step = SubdivisionStep {
        element: s.label(x).to_string(),
        factors: s.labels_of(&factors),
        cone: cone.clone(),
        factor_sum: factor_sum_check(s, fine, x, coarse)?,
        fan_equal: false,
        blowup_equal: false,
        euler_preserved: false,
        detail: None,
    };
    step.euler_preserved =
        coarse_fan.as_complex().euler_characteristic() == fine_fan.as_complex().euler_characteristic();
    match stellar_subdivide(coarse_fan, &cone, &v) {
        Ok(st) => match fan_mismatch(&st, fine_fan) {
            None => step.fan_equal = true,
            Some(m) => step.detail = Some(format!("stellar subdivision differs: {m}")),
        },
        Err(e) => step.detail = Some(format!("cannot subdivide at {{{}}}: {e}", step.factors.join(", "))),
    }
    // Compare the finer fan with the blowup directly, matching rays by vector.
    let new_id = coarse_fan.rays.len();
    let id_of = |r: &Vec<i64>| if *r == primitive(&v) { Some(new_id) } else { coarse_fan.ray_index(r) };
    let target: Option<Vec<Vec<usize>>> = fine_fan
        .cones
        .iter()
        .map(|c| {
            let mut ids = c.iter().map(|&r| id_of(&fine_fan.rays[r])).collect::<Option<Vec<_>>>()?;
            ids.sort_unstable();
            Some(ids)
        })
        .collect();
    match target {
        Some(t) => match check_blowup_realization(&coarse_fan.cones, &cone, new_id, &t) {
            Ok(_) => step.blowup_equal = true,
            Err(e) => {
                step.detail.get_or_insert(format!("face poset is not the blowup: {e}"));
            }
        },
        None => {
            step.detail.get_or_insert("the finer fan has a ray outside the coarser fan and v".into());
        }
    }
    Ok(step)
}

/// Subdivides `f` at `sigma` by the sum of its rays and checks that the
/// face poset of the result is the blowup of the face poset of `f` at
/// `sigma`, through the explicit correspondence. Returns the subdivided fan.
pub fn check_subdivision_duality(f: &Fan, sigma: &[usize]) -> std::result::Result<Fan, String> {
    let mut v = vec![0i64; f.dim];
    for &r in sigma {
        let ray = f.rays.get(r).ok_or_else(|| format!("ray {r} out of range"))?;
        for (acc, &x) in v.iter_mut().zip(ray) {
            *acc += x;
        }
    }
    let st = stellar_subdivide(f, sigma, &v).map_err(|e| e.to_string())?;
    let new_vertex = if sigma.len() == 1 { sigma[0] } else { f.rays.len() };
    check_blowup_realization(&f.cones, sigma, new_vertex, &st.cones)?;
    Ok(st)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub seed: u64,
    pub trials: usize,
    pub agreements: usize,
    /// The first sample point (by trial index) in exactly one support.
    pub witness: Option<Vec<Q>>,
}

impl SupportReport {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.trials
    }
}

/// Compares support membership of the two fans on seeded sample points.
/// Half the points are nonnegative rational combinations of rays of either
/// fan, the rest small integer vectors.
pub fn sample_support_equality(f1: &Fan, f2: &Fan, trials: usize, seed: u64) -> Result<SupportReport> {
    if f1.dim != f2.dim {
        return Err(Error::DimensionMismatch(f1.dim, f2.dim));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<&Vec<i64>> = f1.rays.iter().chain(&f2.rays).collect();
    // each point is an integer vector over a positive denominator
    let points: Vec<(Vec<i64>, i64)> = (0..trials)
        .map(|t| {
            if t % 2 == 0 && !pool.is_empty() {
                // coefficients c / d with d <= 4, over the common denominator 12
                let mut p = vec![0i64; f1.dim];
                for _ in 0..rng.gen_range(1..=f1.dim.max(1)) {
                    let r = pool[rng.gen_range(0..pool.len())];
                    let c = rng.gen_range(0..=6i64) * (12 / rng.gen_range(1..=4i64));
                    for (x, &y) in p.iter_mut().zip(r) {
                        *x += c * y;
                    }
                }
                (p, 12)
            } else {
                ((0..f1.dim).map(|_| rng.gen_range(-3..=3)).collect(), 1)
            }
        })
        .collect();
    let rational = |(p, d): &(Vec<i64>, i64)| -> Vec<Q> { p.iter().map(|&x| Q::new(x.into(), (*d).into())).collect() };
    let (g1, g2) = (f1.maximal_generators(), f2.maximal_generators());
    let (t1, t2) = (membership_tests(&g1, f1.dim), membership_tests(&g2, f1.dim));
    let member = |gens: &[Vec<Vec<i64>>], tests: &Option<Vec<ConeMembership>>, point: &(Vec<i64>, i64)| {
        let ip: Vec<i128> = point.0.iter().map(|&x| i128::from(x)).collect();
        let fast = tests
            .as_ref()
            .and_then(|tests| tests.iter().try_fold(false, |found, t| Some(found || t.contains(&ip)?)));
        fast.unwrap_or_else(|| in_support(gens, &rational(point)))
    };
    let agree: Vec<bool> = points
        .par_iter()
        .map(|p| member(&g1, &t1, p) == member(&g2, &t2, p))
        .collect();
    Ok(SupportReport {
        seed,
        trials,
        agreements: agree.iter().filter(|&&a| a).count(),
        witness: agree.iter().position(|&a| !a).map(|i| rational(&points[i])),
    })
}

/// Nested sets whose characteristic vectors are linearly dependent; empty
/// when the fan is simplicial.
pub fn dependent_nested_sets(s: &Semilattice, g: &BuildingSet) -> Result<Vec<Vec<usize>>> {
    s.require_atomic()?;
    let faces = nested_faces(s, g, crate::complex::face_cap())?;
    let vectors: Vec<Vec<i64>> = (0..s.len())
        .map(|x| if x == s.bottom() { Vec::new() } else { char_vector(s, x).unwrap() })
        .collect();
    Ok(faces
        .into_par_iter()
        .filter(|f| !is_independent(&f.iter().map(|&x| vectors[x].clone()).collect::<Vec<_>>()))
        .collect())
}

/// The cone of `f` whose rays are the given elements' vectors, if any.
pub fn cone_of_elements(f: &Fan, s: &Semilattice, elements: &ElementSet) -> Option<Vec<usize>> {
    let mut cone = elements
        .iter()
        .map(|x| char_vector(s, x).ok().and_then(|v| f.ray_index(&v)))
        .collect::<Option<Vec<_>>>()?;
    cone.sort_unstable();
    f.contains_cone(&cone).then_some(cone)
}
