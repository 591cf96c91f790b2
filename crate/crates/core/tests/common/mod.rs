//! Independent oracles. Everything here works from the raw order relation
//! and does not call the library's joins, factor maps, eliminations or
//! boundary matrices.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use nestkit::{validate_meet_semilattice, Poset, Semilattice};

/// A finite poset as a dense `leq` table with a known bottom.
pub struct Order {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
    pub bottom: usize,
}

impl Order {
    pub fn of(s: &Semilattice) -> Order {
        let n = s.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| s.leq(a, b)).collect()).collect();
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x])).expect("a bottom element");
        Order { n, leq, bottom }
    }

    pub fn join(&self, items: &[usize]) -> Option<usize> {
        let uppers: Vec<usize> = (0..self.n)
            .filter(|&u| items.iter().all(|&i| self.leq[i][u]))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u| uppers.iter().all(|&v| self.leq[u][v]))
    }

    pub fn below(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.leq[y][x]).collect()
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// The join map from the product of `[0, f]` over `factors` to `[0, x]`
    /// is an order isomorphism. Checked over every tuple and every pair of
    /// tuples.
    pub fn join_map_is_iso(&self, factors: &[usize], x: usize) -> bool {
        let intervals: Vec<Vec<usize>> = factors.iter().map(|&f| self.below(f)).collect();
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for iv in &intervals {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    iv.iter().map(move |&e| {
                        let mut t = t.clone();
                        t.push(e);
                        t
                    })
                })
                .collect();
        }
        let target = self.below(x);
        if tuples.len() != target.len() {
            return false;
        }
        let mut images = Vec::with_capacity(tuples.len());
        for t in &tuples {
            let items: Vec<usize> = if t.is_empty() { vec![self.bottom] } else { t.clone() };
            match self.join(&items) {
                Some(j) if self.leq[j][x] => images.push(j),
                _ => return false,
            }
        }
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != target.len() {
            return false;
        }
        for (i, a) in tuples.iter().enumerate() {
            for (j, b) in tuples.iter().enumerate() {
                let product_leq = a.iter().zip(b).all(|(&p, &q)| self.leq[p][q]);
                if product_leq != self.leq[images[i]][images[j]] {
                    return false;
                }
            }
        }
        true
    }

    /// Building-set test straight from the definition.
    pub fn is_building(&self, cand: &[usize]) -> bool {
        if cand.contains(&self.bottom) {
            return false;
        }
        (0..self.n).filter(|&x| x != self.bottom).all(|x| {
            let under: Vec<usize> = cand.iter().copied().filter(|&g| self.leq[g][x]).collect();
            let maxes: Vec<usize> = under
                .iter()
                .copied()
                .filter(|&g| !under.iter().any(|&h| self.lt(g, h)))
                .collect();
            self.join_map_is_iso(&maxes, x)
        })
    }

    /// Irreducible elements: no antichain of size at least two in `(0, x)`
    /// joins to `x` with `[0, x]` the product of the intervals below it.
    pub fn min_building(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.bottom)
            .filter(|&x| {
                let inner: Vec<usize> = (0..self.n)
                    .filter(|&y| y != self.bottom && self.lt(y, x))
                    .collect();
                !subsets(&inner).into_iter().any(|a| {
                    a.len() >= 2
                        && a.iter().all(|&p| a.iter().all(|&q| p == q || !self.leq[p][q]))
                        && self.join(&a) == Some(x)
                        && self.join_map_is_iso(&a, x)
                })
            })
            .collect()
    }

    /// Every subset of `L \ {0}`.
    pub fn candidates(&self) -> Vec<Vec<usize>> {
        let proper: Vec<usize> = (0..self.n).filter(|&x| x != self.bottom).collect();
        subsets(&proper)
    }
}

pub fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << items.len())
        .map(|m| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// Meet-semilattice of an intersection-closed family of subsets of a small
/// universe, given as bitmasks.
pub fn intersection_closed(family: &[u32]) -> Semilattice {
    let mut sets: BTreeSet<u32> = family.iter().copied().collect();
    loop {
        let extra: Vec<u32> = sets
            .iter()
            .flat_map(|&a| sets.iter().map(move |&b| a & b))
            .filter(|m| !sets.contains(m))
            .collect();
        if extra.is_empty() {
            break;
        }
        sets.extend(extra);
    }
    let sets: Vec<u32> = sets.into_iter().collect();
    let labels = sets.iter().map(|m| format!("s{m}")).collect();
    let poset = Poset::from_relation(labels, |a, b| sets[a] & !sets[b] == 0).unwrap();
    validate_meet_semilattice(poset).unwrap()
}

/// Smith normal form by elementary row and column operations: repeatedly
/// move the entry of least absolute value to the pivot and clear its row
/// and column, fixing divisibility as needed. Returns the nonzero invariant
/// factors in order.
pub fn naive_snf(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let f = a[r][t] / a[t][t];
            if f != 0 {
                for c in t..cols {
                    a[r][c] -= f * a[t][c];
                }
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let f = a[t][c] / a[t][t];
            if f != 0 {
                for r in t..rows {
                    a[r][c] -= f * a[r][t];
                }
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        let p = a[t][t];
        let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % p != 0));
        if let Some(r) = bad {
            for c in t..cols {
                a[t][c] += a[r][c];
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Invariant factors as quotients of successive gcds of k-minors. Only for
/// small matrices.
pub fn determinantal_factors(a: &[Vec<i128>]) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let row_ids: Vec<usize> = (0..rows).collect();
    let col_ids: Vec<usize> = (0..cols).collect();
    let (rs, cs) = (subsets(&row_ids), subsets(&col_ids));
    let mut prev = 1;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for r in rs.iter().filter(|r| r.len() == k) {
            for c in cs.iter().filter(|c| c.len() == k) {
                let m: Vec<Vec<i128>> = r.iter().map(|&i| c.iter().map(|&j| a[i][j]).collect()).collect();
                d = gcd(d, det(&m));
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}

/// Reduced integral homology of the complex with the given faces (sorted
/// vertex lists, closed under subsets, empty face optional), as
/// `dimension -> (rank, torsion)` for the nontrivial groups.
pub fn homology_oracle(faces: &[Vec<usize>]) -> BTreeMap<isize, (usize, Vec<i128>)> {
    let mut by_dim: BTreeMap<isize, Vec<Vec<usize>>> = BTreeMap::new();
    by_dim.entry(-1).or_default().push(vec![]);
    for f in faces.iter().filter(|f| !f.is_empty()) {
        by_dim.entry(f.len() as isize - 1).or_default().push(f.clone());
    }
    for v in by_dim.values_mut() {
        v.sort();
        v.dedup();
    }
    let top = *by_dim.keys().last().unwrap();
    let count = |d: isize| by_dim.get(&d).map_or(0, Vec::len);
    // snf of the boundary from dimension d to d - 1
    let mut snf: BTreeMap<isize, Vec<i128>> = BTreeMap::new();
    for d in 0..=top {
        let lower = &by_dim[&(d - 1)];
        let index: BTreeMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = vec![vec![0i128; by_dim[&d].len()]; lower.len()];
        for (j, f) in by_dim[&d].iter().enumerate() {
            for k in 0..f.len() {
                let mut g = f.clone();
                g.remove(k);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                m[index[&g]][j] = sign;
            }
        }
        snf.insert(d, naive_snf(m));
    }
    let mut out = BTreeMap::new();
    for d in -1..=top {
        let out_rank = snf.get(&d).map_or(0, Vec::len);
        let in_factors = snf.get(&(d + 1)).cloned().unwrap_or_default();
        let rank = count(d) - out_rank - in_factors.len();
        let torsion: Vec<i128> = in_factors.into_iter().filter(|&f| f > 1).collect();
        if rank > 0 || !torsion.is_empty() {
            out.insert(d, (rank, torsion));
        }
    }
    out
}

/// All chains of a strict order on `0..n`, as sorted index lists.
pub fn chains(n: usize, lt: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(c) = stack.pop() {
        let last = *c.last().unwrap();
        for j in 0..n {
            if lt(last, j) {
                let mut d = c.clone();
                d.push(j);
                stack.push(d);
            }
        }
        out.push(c);
    }
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out
}

/// Set partitions of `{0..n}` as block-label vectors in restricted growth
/// form.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let next = p.iter().max().map_or(0, |m| m + 1);
                (0..=next).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out
}

/// `p` refines `q`: every block of `p` lies inside a block of `q`.
pub fn refines(p: &[usize], q: &[usize]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| p[i] != p[j] || q[i] == q[j]))
}

/// Faces of the order complex of the partition lattice of an `n`-set minus
/// its bottom and top.
pub fn partition_proper_part_faces(n: usize) -> Vec<Vec<usize>> {
    let parts: Vec<Vec<usize>> = partitions(n)
        .into_iter()
        .filter(|p| {
            let blocks = p.iter().max().unwrap() + 1;
            blocks > 1 && blocks < n
        })
        .collect();
    chains(parts.len(), |a, b| a != b && refines(&parts[a], &parts[b]))
}

pub fn bell(n: usize) -> usize {
    // Bell triangle
    let mut row = vec![1usize];
    for _ in 1..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
