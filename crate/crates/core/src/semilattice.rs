//! Finite meet-semilattices.
//!
//! A [`Semilattice`] is a [`Poset`] whose meet has been verified for every
//! pair. Joins are partial: the join of a set exists exactly when the set has
//! a common upper bound, and is then the least element of the upper bounds.

use crate::error::{Error, Result};
use crate::poset::{Poset, SubPoset};
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct Semilattice {
    poset: Poset,
    bottom: usize,
    meet: Vec<u32>,
    join: Vec<Option<u32>>,
    atoms: Vec<usize>,
}

/// Checks that every pair of elements has a greatest lower bound and builds
/// the meet and join tables.
pub fn validate_meet_semilattice(poset: Poset) -> Result<Semilattice> {
    let n = poset.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let minimal = poset.minimal_elements();
    if minimal.len() != 1 {
        return Err(Error::NoMinimum);
    }
    let bottom = minimal[0];
    let down_sizes: Vec<usize> = (0..n).map(|i| poset.down_set(i).len()).collect();
    let up_sizes: Vec<usize> = (0..n).map(|i| poset.up_set(i).len()).collect();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![None; n * n];
    for x in 0..n {
        for y in x..n {
            let m = if poset.leq(x, y) {
                x
            } else if poset.leq(y, x) {
                y
            } else {
                // A common lower bound whose down-set holds all of them is
                // the greatest one.
                let (dx, dy) = (poset.down_set(x), poset.down_set(y));
                let lower = dx.intersection_len(dy);
                dx.iter()
                    .find(|&z| down_sizes[z] == lower && dy.contains(z))
                    .ok_or_else(|| Error::NoMeet(poset.label(x).to_string(), poset.label(y).to_string()))?
            };
            meet[x * n + y] = m as u32;
            meet[y * n + x] = m as u32;
        }
    }
    // With all meets present, common upper bounds have a least element.
    for x in 0..n {
        for y in x..n {
            let j = if poset.leq(x, y) {
                Some(y)
            } else if poset.leq(y, x) {
                Some(x)
            } else {
                let (ux, uy) = (poset.up_set(x), poset.up_set(y));
                let upper = ux.intersection_len(uy);
                ux.iter().find(|&z| up_sizes[z] == upper && uy.contains(z))
            };
            join[x * n + y] = j.map(|j| j as u32);
            join[y * n + x] = j.map(|j| j as u32);
        }
    }
    Ok(Semilattice::assemble(poset, bottom, meet, join))
}

impl Semilattice {
    fn assemble(poset: Poset, bottom: usize, meet: Vec<u32>, join: Vec<Option<u32>>) -> Semilattice {
        let atoms = poset
            .covers()
            .iter()
            .filter(|&&(x, _)| x == bottom)
            .map(|&(_, y)| y)
            .collect();
        Semilattice {
            poset,
            bottom,
            meet,
            join,
            atoms,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Atoms, in index order.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.poset.index_of(label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x * self.len() + y].map(|j| j as usize)
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(x))
        }
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::new(self.len())
    }

    /// All elements except the bottom.
    pub fn proper_elements(&self) -> ElementSet {
        let mut s = ElementSet::full(self.len());
        s.remove(self.bottom);
        s
    }

    pub fn meet_set(&self, set: &ElementSet) -> Result<usize> {
        let mut it = set.iter();
        let first = it.next().ok_or(Error::EmptyMeet)?;
        Ok(it.fold(first, |acc, x| self.meet(acc, x)))
    }

    /// Least upper bound of `set`, if the set has any upper bound. The empty
    /// set joins to the bottom.
    pub fn join_set(&self, set: &ElementSet) -> Option<usize> {
        self.join_iter(set.iter())
    }

    pub fn join_iter<I: IntoIterator<Item = usize>>(&self, items: I) -> Option<usize> {
        items
            .into_iter()
            .try_fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn atoms_below(&self, x: usize) -> ElementSet {
        let mut out = ElementSet::new(self.len());
        for &a in &self.atoms {
            if self.leq(a, x) {
                out.insert(a);
            }
        }
        out
    }

    pub fn max_of(&self, set: &ElementSet) -> ElementSet {
        self.poset.max_of(set)
    }

    /// `{ g in set : g <= x }`
    pub fn restrict_below(&self, set: &ElementSet, x: usize) -> ElementSet {
        set.intersection(self.poset.down_set(x))
    }

    pub fn down_set(&self, x: usize) -> &ElementSet {
        self.poset.down_set(x)
    }

    pub fn up_set(&self, x: usize) -> &ElementSet {
        self.poset.up_set(x)
    }

    pub fn interval(&self, x: usize, y: usize) -> Result<SubPoset> {
        self.poset.interval(x, y)
    }

    /// The unique maximum, if there is one.
    pub fn top(&self) -> Option<usize> {
        let max = self.poset.maximal_elements();
        (max.len() == 1).then(|| max[0])
    }

    /// Every non-bottom element is the join of the atoms below it.
    pub fn is_atomic(&self) -> bool {
        self.first_non_atomic().is_none()
    }

    pub fn first_non_atomic(&self) -> Option<usize> {
        (0..self.len())
            .filter(|&x| x != self.bottom)
            .find(|&x| self.join_set(&self.atoms_below(x)) != Some(x))
    }

    pub fn require_atomic(&self) -> Result<()> {
        match self.first_non_atomic() {
            None => Ok(()),
            Some(x) => Err(Error::NotAtomic(self.label(x).to_string())),
        }
    }

    /// Parses a list of labels into an element set.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.index_of(l.as_ref())?);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| self.label(i).to_string()).collect()
    }
}
