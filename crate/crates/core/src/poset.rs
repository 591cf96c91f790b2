//! Finite posets with a dense order representation.
//!
//! Elements are identified by index; labels are carried along for
//! presentation and serialization only. The order is stored twice, as the
//! down-set and the up-set of every element, so that `leq` and the set
//! operations used by the semilattice layer are bitset lookups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `below[y]` = { x : x <= y }
    below: Vec<ElementSet>,
    /// `above[x]` = { y : x <= y }
    above: Vec<ElementSet>,
    covers: Vec<(usize, usize)>,
}

/// An induced subposet together with the indices of its elements in the
/// poset it was cut out of.
#[derive(Clone, Debug)]
pub struct SubPoset {
    pub poset: Poset,
    pub embedding: Vec<usize>,
}

fn label_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from covering (or any generating) pairs `(lower, upper)`.
    /// The order is the reflexive-transitive closure of the pairs.
    pub fn from_covers<L, C>(labels: &[L], covers: &[(C, C)]) -> Result<Poset>
    where
        L: AsRef<str>,
        C: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let index = label_index(&labels)?;
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_index_pairs(labels, &pairs)
    }

    /// Same as [`Poset::from_covers`] with pairs given by index.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let index = label_index(&labels)?;
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(Error::IndexOutOfRange(b));
            }
            if a == b {
                continue;
            }
            succ[a].push(b);
            indegree[b] += 1;
        }
        // Kahn's algorithm; anything left over sits on a cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() < n {
            let culprit = (0..n).find(|&i| indegree[i] > 0).unwrap();
            return Err(Error::Cycle(labels[culprit].clone()));
        }
        let mut below: Vec<ElementSet> = (0..n)
            .map(|i| ElementSet::from_indices(n, [i]))
            .collect();
        for &v in &topo {
            let bv = below[v].clone();
            for &w in &succ[v] {
                below[w].union_with(&bv);
            }
        }
        Ok(Self::from_parts(labels, index, below))
    }

    /// Builds a poset from a full `leq` predicate, checking the partial order axioms.
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let index = label_index(&labels)?;
        let mut below = vec![ElementSet::new(n); n];
        for (y, set) in below.iter_mut().enumerate() {
            for x in 0..n {
                if leq(x, y) {
                    set.insert(x);
                }
            }
        }
        for x in 0..n {
            if !below[x].contains(x) {
                return Err(Error::NotPartialOrder(format!(
                    "`{}` is not related to itself",
                    labels[x]
                )));
            }
            for y in below[x].iter() {
                if y != x && below[y].contains(x) {
                    return Err(Error::NotPartialOrder(format!(
                        "`{}` and `{}` are distinct but mutually related",
                        labels[x], labels[y]
                    )));
                }
                if !below[y].is_subset(&below[x]) {
                    return Err(Error::NotPartialOrder(format!(
                        "relation is not transitive through `{}`",
                        labels[y]
                    )));
                }
            }
        }
        Ok(Self::from_parts(labels, index, below))
    }

    fn from_parts(labels: Vec<String>, index: HashMap<String, usize>, below: Vec<ElementSet>) -> Poset {
        let n = labels.len();
        let mut above = vec![ElementSet::new(n); n];
        for (y, set) in below.iter().enumerate() {
            for x in set.iter() {
                above[x].insert(y);
            }
        }
        let mut covers = Vec::new();
        for y in 0..n {
            for x in below[y].iter() {
                if x != y && above[x].intersection_len(&below[y]) == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Poset {
            labels,
            index,
            below,
            above,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ x : x <= y }`
    pub fn down_set(&self, y: usize) -> &ElementSet {
        &self.below[y]
    }

    /// `{ y : x <= y }`
    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.above[x]
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.below[i].len() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.above[i].len() == 1).collect()
    }

    /// Number of pairs `(x, y)` with `x <= y`.
    pub fn relation_count(&self) -> usize {
        self.below.iter().map(ElementSet::len).sum()
    }

    /// Length of the longest chain ending at each element (minimal elements get 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.below[i].len());
        let mut h = vec![0; self.len()];
        for &y in &order {
            h[y] = self
                .below[y]
                .iter()
                .filter(|&x| x != y)
                .map(|x| h[x] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain starting at each element (maximal elements get 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.above[i].len());
        let mut d = vec![0; self.len()];
        for &x in &order {
            d[x] = self
                .above[x]
                .iter()
                .filter(|&y| y != x)
                .map(|y| d[y] + 1)
                .max()
                .unwrap_or(0);
        }
        d
    }

    /// The maximal elements of `set`.
    pub fn max_of(&self, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::new(self.len());
        for x in set.iter() {
            if self.above[x].intersection_len(set) == 1 {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_antichain(&self, set: &ElementSet) -> bool {
        set.iter().all(|x| self.below[x].intersection_len(set) == 1)
    }

    pub fn is_chain(&self, elements: &[usize]) -> bool {
        elements
            .iter()
            .enumerate()
            .all(|(i, &x)| elements[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    /// Induced subposet on `members`, keeping index order.
    pub fn induced(&self, members: &ElementSet) -> SubPoset {
        let embedding = members.to_vec();
        let labels = embedding.iter().map(|&i| self.labels[i].clone()).collect();
        let index = embedding
            .iter()
            .enumerate()
            .map(|(k, &i)| (self.labels[i].clone(), k))
            .collect();
        let m = embedding.len();
        let below = embedding
            .iter()
            .map(|&y| {
                ElementSet::from_indices(
                    m,
                    embedding
                        .iter()
                        .enumerate()
                        .filter(|&(_, &x)| self.leq(x, y))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        SubPoset {
            poset: Self::from_parts(labels, index, below),
            embedding,
        }
    }

    /// Closed interval `[x, y]` as an induced subposet.
    pub fn interval(&self, x: usize, y: usize) -> Result<SubPoset> {
        if x >= self.len() {
            return Err(Error::IndexOutOfRange(x));
        }
        if y >= self.len() {
            return Err(Error::IndexOutOfRange(y));
        }
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        Ok(self.induced(&self.above[x].intersection(&self.below[y])))
    }

    /// The dual poset, with the same labels.
    pub fn dual(&self) -> Poset {
        Self::from_parts(self.labels.clone(), self.index.clone(), self.above.clone())
    }
}

/// Index of a tuple in the lexicographic enumeration of a product with the
/// given factor sizes.
pub fn tuple_index(sizes: &[usize], tuple: &[usize]) -> usize {
    tuple
        .iter()
        .zip(sizes)
        .fold(0, |acc, (&t, &s)| acc * s + t)
}

/// Decodes a lexicographic product index back into a tuple.
pub fn tuple_at(sizes: &[usize], mut index: usize) -> Vec<usize> {
    let mut tuple = vec![0; sizes.len()];
    for (slot, &s) in tuple.iter_mut().zip(sizes).rev() {
        *slot = index % s;
        index /= s;
    }
    tuple
}

/// Cartesian product with the componentwise order; tuples are indexed
/// lexicographically and labelled `(a,b,...)`.
pub fn product(factors: &[&Poset]) -> Result<Poset> {
    if factors.is_empty() {
        return Err(Error::Empty);
    }
    let sizes: Vec<usize> = factors.iter().map(|p| p.len()).collect();
    let total: usize = sizes.iter().product();
    let tuples: Vec<Vec<usize>> = (0..total).map(|i| tuple_at(&sizes, i)).collect();
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&i, p)| p.label(i)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Poset::from_relation(labels, |a, b| {
        tuples[a]
            .iter()
            .zip(&tuples[b])
            .zip(factors)
            .all(|((&x, &y), p)| p.leq(x, y))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Signature {
    height: usize,
    depth: usize,
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &Poset) -> Vec<Signature> {
    let heights = p.heights();
    let depths = p.depths();
    let mut lower = vec![0; p.len()];
    let mut upper = vec![0; p.len()];
    for &(x, y) in p.covers() {
        upper[x] += 1;
        lower[y] += 1;
    }
    (0..p.len())
        .map(|i| Signature {
            height: heights[i],
            depth: depths[i],
            down: p.down_set(i).len(),
            up: p.up_set(i).len(),
            lower_covers: lower[i],
            upper_covers: upper[i],
        })
        .collect()
}

/// Finds an order isomorphism `p -> q`, returned as the image of each element
/// of `p`. Deterministic for fixed inputs.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    find_isomorphism(p, q, &[])
}

/// Like [`is_isomorphic`], but only isomorphisms mapping `fixed[i].0` to
/// `fixed[i].1` are considered.
pub fn find_isomorphism(p: &Poset, q: &Poset, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let n = p.len();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in fixed {
        if x >= n || y >= n || sp[x] != sq[y] {
            return None;
        }
        if image[x] != usize::MAX && image[x] != y {
            return None;
        }
        if used[y] && image[x] != y {
            return None;
        }
        image[x] = y;
        used[y] = true;
    }
    for &(x, _) in fixed {
        for &(z, _) in fixed {
            if p.leq(x, z) != q.leq(image[x], image[z]) {
                return None;
            }
        }
    }
    // Assign bottom-up so order constraints bite early.
    let mut order: Vec<usize> = (0..n).filter(|&i| image[i] == usize::MAX).collect();
    order.sort_by_key(|&i| (sp[i].height, i));
    let mut assigned: Vec<usize> = (0..n).filter(|&i| image[i] != usize::MAX).collect();
    if extend(p, q, &sp, &sq, &order, 0, &mut image, &mut used, &mut assigned) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Poset,
    q: &Poset,
    sp: &[Signature],
    sq: &[Signature],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    assigned: &mut Vec<usize>,
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 0..q.len() {
        if used[y] || sq[y] != sp[x] {
            continue;
        }
        let consistent = assigned.iter().all(|&z| {
            p.leq(z, x) == q.leq(image[z], y) && p.leq(x, z) == q.leq(y, image[z])
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        assigned.push(x);
        if extend(p, q, sp, sq, order, depth + 1, image, used, assigned) {
            return true;
        }
        assigned.pop();
        used[y] = false;
        image[x] = usize::MAX;
    }
    false
}

/// Checks that `map` is an order isomorphism `p -> q`.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &y in map {
        if y >= q.len() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..p.len()).all(|x| (0..p.len()).all(|z| p.leq(x, z) == q.leq(map[x], map[z])))
}
