//! Brute-force reference implementations used by the integration tests.
//! Nothing here calls the library's construction code; faces are plain
//! `(x_mask, y_mask)` pairs converted to `Face` only for comparison.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use xpol::Face;

pub type Raw = (u32, u32);

pub fn face(r: Raw) -> Face {
    Face::from_masks(r.0, r.1).expect("valid raw face")
}

pub fn raw(f: Face) -> Raw {
    (f.x_mask(), f.y_mask())
}

/// Letter `j` (1-based) of the word with y-mask `ys` is `y`.
fn is_y(ys: u32, j: usize) -> bool {
    ys >> (j - 1) & 1 == 1
}

/// Switches of a word, counted letter by letter.
pub fn switches(ys: u32, d: usize) -> usize {
    (1..d).filter(|&j| is_y(ys, j) != is_y(ys, j + 1)).count()
}

pub fn switch_positions(ys: u32, d: usize) -> Vec<usize> {
    (1..d).filter(|&j| is_y(ys, j) != is_y(ys, j + 1)).collect()
}

pub fn word_facet(ys: u32, d: usize) -> Raw {
    let all = (1u32 << d) - 1;
    (all & !ys, ys)
}

/// Facets of `B(i,d)` by filtering all `2^d` words.
pub fn b_facets(i: isize, d: usize) -> Vec<Raw> {
    (0..1u32 << d)
        .filter(|&ys| (switches(ys, d) as isize) <= i)
        .map(|ys| word_facet(ys, d))
        .collect()
}

pub fn complement_facets(i: isize, d: usize) -> Vec<Raw> {
    (0..1u32 << d)
        .filter(|&ys| (switches(ys, d) as isize) > i)
        .map(|ys| word_facet(ys, d))
        .collect()
}

/// Every face of the cross-polytope, from base-3 digits (0 absent, 1 x, 2 y).
pub fn all_faces(d: usize) -> Vec<Raw> {
    let mut out = Vec::new();
    for mut n in 0..3u32.pow(d as u32) {
        let (mut x, mut y) = (0, 0);
        for j in 0..d {
            match n % 3 {
                1 => x |= 1 << j,
                2 => y |= 1 << j,
                _ => {}
            }
            n /= 3;
        }
        out.push((x, y));
    }
    out
}

pub fn size(f: Raw) -> usize {
    (f.0 | f.1).count_ones() as usize
}

pub fn subset(a: Raw, b: Raw) -> bool {
    a.0 & !b.0 == 0 && a.1 & !b.1 == 0
}

/// All subsets of one face.
pub fn subfaces(f: Raw) -> Vec<Raw> {
    let bits: Vec<(bool, u32)> = (0..32)
        .filter_map(|j| {
            if f.0 >> j & 1 == 1 {
                Some((false, 1 << j))
            } else if f.1 >> j & 1 == 1 {
                Some((true, 1 << j))
            } else {
                None
            }
        })
        .collect();
    (0..1u64 << bits.len())
        .map(|m| {
            let mut s = (0, 0);
            for (k, &(is_y, bit)) in bits.iter().enumerate() {
                if m >> k & 1 == 1 {
                    if is_y {
                        s.1 |= bit
                    } else {
                        s.0 |= bit
                    }
                }
            }
            s
        })
        .collect()
}

/// Downward closure of a facet list.
pub fn closure(facets: &[Raw]) -> HashSet<Raw> {
    facets.iter().flat_map(|&f| subfaces(f)).collect()
}

pub fn ridges(f: Raw) -> Vec<Raw> {
    let mut out = Vec::new();
    for j in 0..32 {
        if f.0 >> j & 1 == 1 {
            out.push((f.0 & !(1 << j), f.1));
        }
        if f.1 >> j & 1 == 1 {
            out.push((f.0, f.1 & !(1 << j)));
        }
    }
    out
}

/// Ridges lying in exactly one facet.
pub fn boundary(facets: &[Raw]) -> Vec<Raw> {
    let mut count: HashMap<Raw, usize> = HashMap::new();
    for &f in facets {
        for r in ridges(f) {
            *count.entry(r).or_default() += 1;
        }
    }
    let mut out: Vec<Raw> = count.into_iter().filter(|&(_, n)| n == 1).map(|(r, _)| r).collect();
    out.sort();
    out
}

pub fn link(facets: &[Raw], sigma: Raw) -> Vec<Raw> {
    facets
        .iter()
        .filter(|&&t| subset(sigma, t))
        .map(|&t| (t.0 & !sigma.0, t.1 & !sigma.1))
        .collect()
}

/// `f_{-1}, f_0, ...` of the closure.
pub fn f_vector(facets: &[Raw]) -> Vec<u64> {
    let faces = closure(facets);
    let top = faces.iter().map(|&f| size(f)).max().unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    for s in faces {
        f[size(s)] += 1;
    }
    f
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for t in 1..row.len() {
            next[t] = row[t - 1] + row[t];
        }
        row = next;
    }
    row[k as usize]
}

/// `h_j = Σ_k (-1)^{j-k} C(n-k, j-k) f_{k-1}` with `n = dim + 1`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let n = f.len() as i64 - 1;
    (0..=n)
        .map(|j| {
            (0..=j)
                .map(|k| {
                    let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                    sign * binom(n - k, j - k) * f[k as usize] as i64
                })
                .sum()
        })
        .collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over `GF(p)` by dense elimination.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in c..cols {
                    let sub = f * m[rank][k] % p;
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers over `GF(p)`, degrees `-1..=dim`, by the
/// augmented chain complex.
pub fn betti_mod_p(facets: &[Raw], p: u64) -> Vec<usize> {
    let faces = closure(facets);
    let top = faces.iter().map(|&f| size(f)).max().unwrap_or(0);
    let mut by_size: Vec<Vec<Raw>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[size(f)].push(f);
    }
    for g in &mut by_size {
        g.sort();
    }
    // rank[k] = rank of the boundary from size k to size k-1
    let mut rank = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<Raw, usize> = by_size[k - 1].iter().enumerate().map(|(n, &f)| (f, n)).collect();
        let mut m = vec![vec![0u64; by_size[k].len()]; by_size[k - 1].len()];
        for (c, &s) in by_size[k].iter().enumerate() {
            // sign by position in coordinate order
            let mut coords: Vec<(u32, bool)> = (0..32)
                .filter(|j| (s.0 | s.1) >> j & 1 == 1)
                .map(|j| (j, s.1 >> j & 1 == 1))
                .collect();
            coords.sort();
            for (t, &(j, is_y)) in coords.iter().enumerate() {
                let r = if is_y { (s.0, s.1 & !(1 << j)) } else { (s.0 & !(1 << j), s.1) };
                m[index[&r]][c] = if t % 2 == 0 { 1 } else { p - 1 };
            }
        }
        rank[k] = rank_mod_p(m, p);
    }
    (0..=top).map(|k| by_size[k].len() - rank[k] - rank[k + 1]).collect()
}

/// Naive shelling test: new faces, their minimal elements found pairwise.
pub fn shelling_restrictions(order: &[Raw]) -> Option<Vec<Raw>> {
    let mut seen: HashSet<Raw> = HashSet::new();
    let mut out = Vec::new();
    for &t in order {
        let new: Vec<Raw> = subfaces(t).into_iter().filter(|s| !seen.contains(s)).collect();
        let minimal: Vec<Raw> = new
            .iter()
            .copied()
            .filter(|&a| !new.iter().any(|&b| b != a && subset(b, a)))
            .collect();
        if minimal.len() != 1 {
            return None;
        }
        out.push(minimal[0]);
        seen.extend(new);
    }
    Some(out)
}

/// `≺`: size first, then the lexicographically smaller sorted position list.
pub fn prec_key(positions: &[usize]) -> (usize, Vec<usize>) {
    (positions.len(), positions.to_vec())
}

/// Labels of `τ` sitting at its switch positions.
pub fn swel(t: Raw, d: usize) -> Raw {
    let mask: u32 = switch_positions(t.1, d).iter().map(|j| 1u32 << (j - 1)).sum();
    (t.0 & mask, t.1 & mask)
}

pub fn sorted(v: impl IntoIterator<Item = Raw>) -> BTreeSet<Raw> {
    v.into_iter().collect()
}
