//! Sparse integer matrices and their Smith normal form over `Z`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major sparse matrix with a column index kept in sync.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
            cols: vec![BTreeSet::new(); ncols],
        }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let nrows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let mut out = Self::zeros(nrows, ncols);
        for (r, row) in m.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                out.set(r, c, BigInt::from(v));
            }
        }
        out
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for k in 0..n {
            out.set(k, k, BigInt::one());
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column(&self, c: usize) -> Vec<(usize, BigInt)> {
        self.cols[c].iter().map(|&r| (r, self.rows[r][&c].clone())).collect()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows[r].iter().map(|(&c, v)| (c, v))
    }

    /// Dense product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = SparseMatrix::zeros(self.nrows, other.ncols);
        for r in 0..self.nrows {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, a) in &self.rows[r] {
                for (&c, b) in &other.rows[k] {
                    *acc.entry(c).or_default() += a * b;
                }
            }
            for (c, v) in acc {
                out.set(r, c, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// `row[k] -= q * row[r]`.
    fn sub_row_multiple(&mut self, k: usize, q: &BigInt, r: usize) {
        let src: Vec<(usize, BigInt)> = self.rows[r].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let cur = self.get(k, c);
            self.set(k, c, cur - q * v);
        }
    }
}

/// Invariant factors `d_1 | d_2 | ...` padded with zeros to `min(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|v| **v > BigInt::one()).cloned().collect()
    }
}

/// One sweep over the columns, pivoting on every unit entry found (the one
/// in the shortest row). Returns whether anything was eliminated.
fn eliminate_units(m: &mut SparseMatrix, pivots: &mut Vec<BigInt>) -> bool {
    let mut progress = false;
    for c in 0..m.ncols {
        let Some(r) = m.cols[c]
            .iter()
            .copied()
            .filter(|&r| m.rows[r][&c].is_one() || (-&m.rows[r][&c]).is_one())
            .min_by_key(|&r| m.rows[r].len())
        else {
            continue;
        };
        let p = m.get(r, c);
        let others: Vec<usize> = m.cols[c].iter().copied().filter(|&k| k != r).collect();
        for k in others {
            // p is ±1, so p^-1 = p
            let q = m.get(k, c) * &p;
            m.sub_row_multiple(k, &q, r);
        }
        // column c is clear off the pivot; column moves clear row r
        let row: Vec<usize> = m.rows[r].keys().copied().collect();
        for j in row {
            m.set(r, j, BigInt::zero());
        }
        pivots.push(BigInt::one());
        progress = true;
    }
    progress
}

/// Smallest-magnitude pivot, ties broken by Markowitz fill-in estimate.
fn choose_pivot(m: &SparseMatrix) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize, usize)> = None;
    for (r, row) in m.rows.iter().enumerate() {
        let row_cost = row.len().saturating_sub(1);
        for (&c, v) in row {
            let mag = v.abs();
            let cost = row_cost * m.cols[c].len().saturating_sub(1);
            let better = match &best {
                None => true,
                Some((bm, bc, _, _)) => mag < *bm || (mag == *bm && cost < *bc),
            };
            if better {
                let done = mag.is_one() && cost == 0;
                best = Some((mag, cost, r, c));
                if done {
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(_, _, r, c)| (r, c))
}

/// Diagonalizes by unimodular row and column moves, then normalizes the
/// diagonal into a divisibility chain.
pub fn smith_normal_form(matrix: &SparseMatrix) -> SnfResult {
    let mut m = matrix.clone();
    let mut pivots: Vec<BigInt> = Vec::new();

    loop {
        while eliminate_units(&mut m, &mut pivots) {}
        let Some((mut r, mut c)) = choose_pivot(&m) else { break };
        loop {
            let p = m.get(r, c);
            // clear column c below/above the pivot with row moves
            let others: Vec<usize> = m.cols[c].iter().copied().filter(|&k| k != r).collect();
            let mut moved = false;
            for k in others {
                let q = m.get(k, c).div_floor(&p);
                if !q.is_zero() {
                    m.sub_row_multiple(k, &q, r);
                }
                if m.rows[k].contains_key(&c) {
                    // nonzero remainder, smaller than the pivot
                    r = k;
                    moved = true;
                    break;
                }
            }
            if moved {
                continue;
            }
            // column c is now zero off the pivot, so column moves only
            // change row r: reduce its entries modulo the pivot
            let rest: Vec<(usize, BigInt)> =
                m.rows[r].iter().filter(|(&j, _)| j != c).map(|(&j, v)| (j, v.clone())).collect();
            let mut next: Option<(BigInt, usize)> = None;
            for (j, v) in rest {
                let rem = v.mod_floor(&p);
                if !rem.is_zero() {
                    let mag = rem.abs();
                    if next.as_ref().is_none_or(|(bm, _)| mag < *bm) {
                        next = Some((mag, j));
                    }
                }
                m.set(r, j, rem);
            }
            match next {
                Some((_, j)) => c = j,
                None => break,
            }
        }
        let p = m.get(r, c);
        m.set(r, c, BigInt::zero());
        pivots.push(p.abs());
    }

    let rank = pivots.len();
    let mut factors: Vec<BigInt> = pivots;
    normalize_chain(&mut factors);
    let n = matrix.nrows.min(matrix.ncols);
    factors.resize(n, BigInt::zero());
    SnfResult { diagonal: factors, rank }
}

/// Turns positive diagonal entries into a divisibility chain with the same
/// product and the same local structure at every prime.
fn normalize_chain(v: &mut Vec<BigInt>) {
    let (mut units, mut rest): (Vec<BigInt>, Vec<BigInt>) = v.drain(..).partition(|x| x.is_one());
    for a in 0..rest.len() {
        for b in a + 1..rest.len() {
            let g = rest[a].gcd(&rest[b]);
            let l = &rest[a] / &g * &rest[b];
            rest[a] = g;
            rest[b] = l;
        }
    }
    // gcd steps can create new units
    let (more_units, mut rest): (Vec<BigInt>, Vec<BigInt>) = rest.into_iter().partition(|x| x.is_one());
    units.extend(more_units);
    rest.sort();
    v.extend(units);
    v.extend(rest);
}
