//! Abstract simplicial complexes stored by their full face list.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::semilattice::{validate_meet_semilattice, Semilattice};

/// Default cap on the number of faces a complex may hold, overridable through
/// `NESTKIT_FACE_CAP`.
pub const DEFAULT_FACE_CAP: usize = 1 << 20;

pub fn face_cap() -> usize {
    std::env::var("NESTKIT_FACE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_FACE_CAP)
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    /// Sorted vertex lists, ordered by size then lexicographically; the empty
    /// face comes first.
    faces: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl SimplicialComplex {
    /// Builds a complex from a face list that is already closed under
    /// subsets. Closure is verified.
    pub fn from_faces(vertices: Vec<String>, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let c = Self::assemble(vertices, faces)?;
        for f in &c.faces {
            for i in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(i);
                if !c.index.contains_key(&sub) {
                    return Err(Error::Parse(format!("face {f:?} is missing its facet {sub:?}")));
                }
            }
        }
        Ok(c)
    }

    /// Generates every subset of the given facets, up to `cap` faces.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<usize>], cap: usize) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(Vec::new());
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() >= usize::BITS as usize - 1 {
                return Err(Error::CapExceeded { size: usize::MAX, cap });
            }
            for mask in 1usize..(1 << f.len()) {
                let sub: Vec<usize> = (0..f.len()).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                all.insert(sub);
                if all.len() > cap {
                    return Err(Error::CapExceeded { size: all.len(), cap });
                }
            }
        }
        Self::assemble(vertices, all)
    }

    fn assemble(vertices: Vec<String>, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut set: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::IndexOutOfRange(v));
            }
            set.insert((f.len(), f));
        }
        set.insert((0, Vec::new()));
        let faces: Vec<Vec<usize>> = set.into_iter().map(|(_, f)| f).collect();
        let index = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        Ok(SimplicialComplex {
            vertices,
            faces,
            index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// All faces including the empty one.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.index.contains_key(face)
    }

    pub fn face_id(&self, face: &[usize]) -> Option<usize> {
        self.index.get(face).copied()
    }

    /// -1 for the complex whose only face is empty.
    pub fn dimension(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &Vec<usize>> {
        self.faces
            .iter()
            .filter(move |f| f.len() as isize - 1 == d)
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut is_facet = vec![true; self.faces.len()];
        for f in &self.faces {
            for i in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(i);
                is_facet[self.index[&sub]] = false;
            }
        }
        self.faces
            .iter()
            .zip(is_facet)
            .filter(|(_, keep)| *keep)
            .map(|(f, _)| f.clone())
            .collect()
    }

    /// Faces rendered as sorted label sets, for comparing complexes built on
    /// differently ordered vertex lists.
    pub fn labelled_faces(&self) -> BTreeSet<Vec<String>> {
        self.faces
            .iter()
            .map(|f| {
                let mut l: Vec<String> = f.iter().map(|&v| self.vertices[v].clone()).collect();
                l.sort();
                l
            })
            .collect()
    }

    /// Equality of face sets, matching vertices by label.
    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        self.faces.len() == other.faces.len() && self.labelled_faces() == other.labelled_faces()
    }

    /// The subcomplex of faces avoiding `vertex`, on the remaining vertices.
    pub fn deletion(&self, vertex: usize) -> SimplicialComplex {
        let remap = |v: usize| if v > vertex { v - 1 } else { v };
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != vertex)
            .map(|(_, l)| l.clone())
            .collect();
        let faces: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|f| !f.contains(&vertex))
            .map(|f| f.iter().map(|&v| remap(v)).collect())
            .collect();
        Self::assemble(vertices, faces).expect("deletion keeps indices in range")
    }

    /// Alternating count of nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Every face stays a face after adding `apex`.
    pub fn is_cone(&self, apex: usize) -> Result<bool> {
        if apex >= self.vertices.len() {
            return Err(Error::IndexOutOfRange(apex));
        }
        Ok(self.faces.iter().all(|f| {
            if f.contains(&apex) {
                return true;
            }
            let mut g = f.clone();
            g.push(apex);
            g.sort_unstable();
            self.index.contains_key(&g)
        }))
    }

    /// Faces ordered by inclusion, with the empty face as bottom.
    pub fn face_poset(&self) -> Semilattice {
        let labels = self
            .faces
            .iter()
            .map(|f| {
                let parts: Vec<&str> = f.iter().map(|&v| self.vertices[v].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        let mut covers = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(k);
                covers.push((self.index[&sub], i));
            }
        }
        let poset = Poset::from_index_pairs(labels, &covers).expect("face inclusion is acyclic");
        validate_meet_semilattice(poset).expect("face posets of complexes are meet-semilattices")
    }
}

/// The complex of chains of `p`, on the elements of `p`.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    order_complex_capped(p, usize::MAX).expect("uncapped")
}

pub fn order_complex_capped(p: &Poset, cap: usize) -> Result<SimplicialComplex> {
    // Chains grow upward from their maximum, so each one is produced once.
    let n = p.len();
    let mut faces: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack: Vec<Vec<usize>> = (0..n).map(|x| vec![x]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().unwrap();
        for y in p.up_set(top).iter() {
            if y != top {
                let mut next = chain.clone();
                next.push(y);
                stack.push(next);
            }
        }
        faces.push(chain);
        if faces.len() > cap {
            return Err(Error::CapExceeded { size: faces.len(), cap });
        }
    }
    SimplicialComplex::assemble(p.labels().to_vec(), faces)
}
