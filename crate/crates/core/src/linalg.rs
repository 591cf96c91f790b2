//! Exact rational linear algebra for ray vectors: ranks, coordinates in a
//! simplicial cone, and feasibility of `Ax = b, x >= 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Reduces `m` to row echelon form in place and returns the pivot columns.
fn echelon(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Fraction-free reduced row echelon form over `i128`: pivot rows are
/// scaled by the gcd of their entries instead of being divided through.
/// Returns the pivot columns, or `None` on overflow.
fn echelon_int(m: &mut [Vec<i128>]) -> Option<Vec<usize>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for j in 0..cols {
                m[i][j] = m[i][j].checked_mul(fa)?.checked_sub(m[r][j].checked_mul(fb)?)?;
            }
            let row_gcd = m[i].iter().fold(0i128, |g, &x| g.gcd(&x));
            if row_gcd > 1 {
                for x in m[i].iter_mut() {
                    *x /= row_gcd;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

pub fn rank_i64(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    match echelon_int(&mut m) {
        Some(p) => p.len(),
        None => rank(&vectors.iter().map(|v| to_q(v)).collect::<Vec<_>>()),
    }
}

pub fn is_independent(vectors: &[Vec<i64>]) -> bool {
    rank_i64(vectors) == vectors.len()
}

/// Coefficients `c` with `sum c_i g_i = target`, or `None` if `target` is
/// outside the span. With independent generators the solution is unique.
pub fn combination(generators: &[Vec<i64>], target: &[Q]) -> Option<Vec<Q>> {
    match combination_int(generators, target) {
        Ok(found) => found,
        Err(Overflow) => combination_rational(generators, target),
    }
}

struct Overflow;

fn combination_int(generators: &[Vec<i64>], target: &[Q]) -> Result<Option<Vec<Q>>, Overflow> {
    let k = generators.len();
    // clear denominators of the target
    let scale = target.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut m: Vec<Vec<i128>> = Vec::with_capacity(target.len());
    for (row, t) in target.iter().enumerate() {
        let mut r: Vec<i128> = generators.iter().map(|g| g[row] as i128).collect();
        let scaled = t.numer() * (&scale / t.denom());
        r.push(i128::try_from(&scaled).map_err(|_| Overflow)?);
        m.push(r);
    }
    let pivots = echelon_int(&mut m).ok_or(Overflow)?;
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut out = vec![Q::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = Q::new(BigInt::from(m[r][k]), BigInt::from(m[r][c]) * &scale);
    }
    Ok(Some(out))
}

fn combination_rational(generators: &[Vec<i64>], target: &[Q]) -> Option<Vec<Q>> {
    let k = generators.len();
    let mut m: Vec<Vec<Q>> = (0..target.len())
        .map(|row| {
            let mut r: Vec<Q> = generators.iter().map(|g| q(g[row])).collect();
            r.push(target[row].clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut out = vec![Q::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = m[r][k].clone();
    }
    Some(out)
}

/// Exact membership test for the cone spanned by linearly independent
/// integer vectors, precomputed so that each query is a handful of integer
/// dot products: `p` is in the cone iff `span * p = 0` and `coords * p >= 0`.
#[derive(Clone, Debug)]
pub struct ConeMembership {
    coords: Vec<Vec<i128>>,
    span: Vec<Vec<i128>>,
}

impl ConeMembership {
    /// `None` if the generators are dependent or the precomputed rows do not
    /// fit in `i128`.
    pub fn new(generators: &[Vec<i64>], dim: usize) -> Option<Self> {
        let k = generators.len();
        // reduced echelon form of [R | I] gives [I_k | A] over [0 | B]
        let mut m: Vec<Vec<Q>> = (0..dim)
            .map(|row| {
                let mut r: Vec<Q> = generators.iter().map(|g| q(g[row])).collect();
                r.extend((0..dim).map(|c| if c == row { Q::one() } else { Q::zero() }));
                r
            })
            .collect();
        let pivots = echelon(&mut m);
        if pivots.len() < k || pivots[..k].iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let integral = |row: &[Q]| -> Option<Vec<i128>> {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter()
                .map(|x| i128::try_from(&(x.numer() * (&l / x.denom()))).ok())
                .collect()
        };
        let coords = m[..k].iter().map(|r| integral(&r[k..])).collect::<Option<Vec<_>>>()?;
        let span = m[k..].iter().map(|r| integral(&r[k..])).collect::<Option<Vec<_>>>()?;
        Some(ConeMembership { coords, span })
    }

    /// `None` on overflow.
    pub fn contains(&self, p: &[i128]) -> Option<bool> {
        let dot = |row: &[i128]| -> Option<i128> {
            row.iter().zip(p).try_fold(0i128, |acc, (&a, &b)| acc.checked_add(a.checked_mul(b)?))
        };
        for row in &self.span {
            if dot(row)? != 0 {
                return Some(false);
            }
        }
        for row in &self.coords {
            if dot(row)? < 0 {
                return Some(false);
            }
        }
        Some(true)
    }
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|&x| x / g).collect()
    }
}

/// Whether `Ax = b` has a solution with `x >= 0`, by the first phase of the
/// simplex method with Bland's rule (which cannot cycle).
pub fn feasible_nonnegative(a: &[Vec<Q>], b: &[Q]) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // tableau columns: n originals, m artificials, rhs
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Q> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Q::one() } else { Q::zero() }));
        r.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| if j >= n { Q::one() } else { Q::zero() };
    loop {
        let entering = (0..n + m).find(|&j| {
            let reduced = (0..m).fold(cost(j), |acc, i| acc - cost(basis[i]) * &t[i][j]);
            reduced.is_negative()
        });
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][n + m] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so some row always leaves
        let (p, _) = leave.expect("phase-one objective is bounded");
        let inv = t[p][e].recip();
        for x in t[p].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != p && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..=n + m {
                    let sub = &f * &t[p][j];
                    t[i][j] -= sub;
                }
            }
        }
        basis[p] = e;
    }
    (0..m).all(|i| basis[i] < n || t[i][n + m].is_zero())
}
