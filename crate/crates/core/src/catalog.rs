//! Generators for the semilattices used as a test corpus: boolean lattices,
//! partition lattices, chains, bond lattices of graphs, and the
//! top-removal that turns a lattice into the semilattice of its proper part
//! plus bottom.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::semilattice::{validate_meet_semilattice, Semilattice};
use crate::set::ElementSet;

/// Subsets of `{1..n}` under inclusion. The empty set is labelled `0`, other
/// subsets by their digits (`13`).
pub fn boolean(n: usize) -> Result<Semilattice> {
    if !(1..=6).contains(&n) {
        return Err(Error::OutOfRange(format!("boolean({n}) needs 1 <= n <= 6")));
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), subset_label(m, n)));
    let labels = masks.iter().map(|&m| subset_label(m, n)).collect();
    let poset = Poset::from_relation(labels, |a, b| masks[a] & !masks[b] == 0)?;
    validate_meet_semilattice(poset)
}

fn subset_label(mask: u32, n: usize) -> String {
    if mask == 0 {
        return "0".to_string();
    }
    (0..n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| char::from(b'1' + i as u8))
        .collect()
}

/// A set partition of `{0..n}` in restricted-growth form: `blocks[i]` is the
/// block number of `i`, blocks numbered in order of first appearance.
type Rgs = Vec<u8>;

fn all_partitions(n: usize) -> Vec<Rgs> {
    fn grow(prefix: &mut Rgs, max: u8, n: usize, out: &mut Vec<Rgs>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            grow(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut prefix = vec![0u8];
    grow(&mut prefix, 0, n, &mut out);
    out
}

fn block_count(p: &Rgs) -> usize {
    p.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
}

/// `p` refines `q`: elements together in `p` are together in `q`.
fn refines(p: &Rgs, q: &Rgs) -> bool {
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i] != p[j] || q[i] == q[j]))
}

fn partition_label(p: &Rgs) -> String {
    let blocks: Vec<String> = (0..block_count(p))
        .map(|b| {
            (0..p.len())
                .filter(|&i| p[i] as usize == b)
                .map(|i| char::from(b'1' + i as u8))
                .collect()
        })
        .collect();
    blocks.join("|")
}

fn refinement_lattice(mut parts: Vec<Rgs>) -> Result<Semilattice> {
    let n = parts.first().map_or(0, Vec::len);
    parts.sort_by_key(|p| (n - block_count(p), partition_label(p)));
    let labels = parts.iter().map(partition_label).collect();
    let poset = Poset::from_relation(labels, |a, b| refines(&parts[a], &parts[b]))?;
    validate_meet_semilattice(poset)
}

/// Set partitions of `{1..n}` ordered by refinement, bottom = all singletons.
/// Labels list the blocks, e.g. `12|3|4`.
pub fn partition(n: usize) -> Result<Semilattice> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange(format!("partition({n}) needs 2 <= n <= 6")));
    }
    refinement_lattice(all_partitions(n))
}

/// Linear order `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Result<Semilattice> {
    if n == 0 {
        return Err(Error::OutOfRange("chain(0) is empty".into()));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    validate_meet_semilattice(Poset::from_index_pairs(labels, &pairs)?)
}

/// Bond lattice of a simple graph on vertices `1..=vertices`: partitions of
/// the vertex set whose blocks induce connected subgraphs, under refinement.
pub fn bond_lattice(vertices: usize, edges: &[(usize, usize)]) -> Result<Semilattice> {
    if !(1..=7).contains(&vertices) {
        return Err(Error::OutOfRange(format!(
            "bond lattice needs 1 to 7 vertices, got {vertices}"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut adjacent = vec![vec![false; vertices]; vertices];
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > vertices || v > vertices {
            return Err(Error::OutOfRange(format!("edge {u}-{v} leaves 1..={vertices}")));
        }
        if u == v {
            return Err(Error::NotSimpleGraph(format!("loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::NotSimpleGraph(format!("repeated edge {u}-{v}")));
        }
        adjacent[u - 1][v - 1] = true;
        adjacent[v - 1][u - 1] = true;
    }
    let connected_blocks = |p: &Rgs| {
        (0..block_count(p)).all(|b| {
            let members: Vec<usize> = (0..vertices).filter(|&i| p[i] as usize == b).collect();
            let mut reached = vec![members[0]];
            let mut stack = vec![members[0]];
            while let Some(x) = stack.pop() {
                for &y in &members {
                    if adjacent[x][y] && !reached.contains(&y) {
                        reached.push(y);
                        stack.push(y);
                    }
                }
            }
            reached.len() == members.len()
        })
    };
    let parts = all_partitions(vertices)
        .into_iter()
        .filter(|p| connected_blocks(p))
        .collect();
    refinement_lattice(parts)
}

/// Complete graph edges on `1..=n`, for [`bond_lattice`].
pub fn complete_graph(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// Removes the unique maximum.
pub fn remove_top(s: &Semilattice) -> Result<Semilattice> {
    let top = s.top().ok_or(Error::NoMaximum)?;
    if s.len() == 1 {
        return Err(Error::Empty);
    }
    let mut keep = ElementSet::full(s.len());
    keep.remove(top);
    validate_meet_semilattice(s.poset().induced(&keep).poset)
}
