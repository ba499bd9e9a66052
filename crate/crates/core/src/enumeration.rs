//! Closed-form face numbers of `B(i,d)` and `∂B(i,d)`, h'-numbers, and the
//! Euler-characteristic inequality for centrally symmetric manifolds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::complex::PureComplex;
use crate::crosspoly::{build_b, build_boundary, BidParams};
use crate::error::{Error, Result};
use crate::homology::{betti, reduced_betti_at};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

fn binom_i(n: usize, k: usize) -> i64 {
    i64::try_from(binomial(n as u64, k as u64)).expect("binomial fits i64")
}

fn sign(e: isize) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `C(q, m) = q (q-1) ... (q-m+1) / m!` for rational `q`.
pub fn generalized_binomial(q: &BigRational, m: u64) -> BigRational {
    let mut num = BigRational::one();
    for t in 0..m {
        num *= q - BigRational::from_integer(BigInt::from(t));
    }
    let mut fact = BigInt::one();
    for t in 1..=m {
        fact *= t;
    }
    num / BigRational::from_integer(fact)
}

/// Closed-form h-vector of `B(i,d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormH {
    pub i: isize,
    pub d: usize,
    pub values: Vec<i64>,
}

pub fn h_closed_form(i: isize, d: usize) -> Result<ClosedFormH> {
    if i < 0 {
        return Err(Error::Parameter(format!("i = {i} must be >= 0")));
    }
    BidParams::new(i, d)?;
    let values = (0..=d)
        .map(|j| {
            let c = binom_i(d, j);
            if j as isize <= i + 1 {
                c
            } else {
                sign(j as isize - i - 1) * c
            }
        })
        .collect();
    Ok(ClosedFormH { i, d, values })
}

/// Values of every case of the g-number formula that applies at `k`.
pub fn g_boundary_cases(i: isize, d: usize, k: usize) -> Vec<i64> {
    let c = binom_i(d, k);
    let (k, d_) = (k as isize, d as isize);
    let mut out = Vec::new();
    if k <= i + 1 {
        out.push(c);
    }
    if i + 1 <= k && k <= d_ - i - 1 {
        out.push(sign(k - i - 1) * c);
    }
    if k >= d_ - i - 1 {
        out.push(-(sign(k - i) + sign(d_ - k - i) + 1) * c);
    }
    out
}

/// `g_0..g_d` of `∂B(i,d)` for `0 <= i <= ⌊(d-2)/2⌋`.
pub fn g_boundary_closed_form(i: isize, d: usize) -> Result<Vec<i64>> {
    if d < 2 || i < 0 || i > (d as isize - 2) / 2 {
        return Err(Error::Parameter(format!(
            "i = {i} outside 0..=floor((d-2)/2); use complement parameters (d-i-2, d)"
        )));
    }
    (0..=d)
        .map(|k| {
            let cases = g_boundary_cases(i, d, k);
            match cases.split_first() {
                Some((first, rest)) if rest.iter().all(|v| v == first) => Ok(*first),
                _ => Err(Error::Parameter(format!("g-number cases disagree at k = {k}: {cases:?}"))),
            }
        })
        .collect()
}

/// Brute-force `g_0..g_d` of `∂B(i,d)`, using `h_d(∂B) := 0`.
pub fn g_boundary_brute(i: isize, d: usize) -> Result<Vec<i64>> {
    let h = build_boundary(BidParams::new(i, d)?)?.h_vector()?;
    Ok((0..=d).map(|k| h.get(k) - if k > 0 { h.get(k - 1) } else { 0 }).collect())
}

/// `h_{d-j}(B) - h_j(B) = (-1)^{d-j-1} C(d,j) χ̃(B) - g_j(∂B)` for all `j`,
/// every term computed by brute force.
pub fn ns_identity_check(i: isize, d: usize) -> Result<bool> {
    let p = BidParams::new(i, d)?;
    if i < 0 || i > d as isize - 2 {
        return Err(Error::Parameter(format!("i = {i} outside 0..=d-2")));
    }
    let b = build_b(p);
    let h = b.h_vector()?;
    let chi = b.reduced_euler_characteristic()?;
    let g = g_boundary_brute(i, d)?;
    Ok((0..=d).all(|j| {
        let lhs = h.get(d - j) - h.get(j);
        let rhs = sign(d as isize - j as isize - 1) * binom_i(d, j) * chi - g[j];
        lhs == rhs
    }))
}

/// `h'_j = h_j + C(D,j) Σ_{k=1}^{j-1} (-1)^{j-k-1} β_{k-1}`, `D = dim + 1`.
pub fn h_prime(k: &PureComplex) -> Result<Vec<i64>> {
    let h = k.h_vector()?;
    let beta = betti(k)?;
    let dd = h.0.len() - 1;
    Ok((0..=dd)
        .map(|j| {
            let corr: i64 = (1..j)
                .map(|t| sign(j as isize - t as isize - 1) * beta.get(t - 1).copied().unwrap_or(0) as i64)
                .sum();
            h.get(j) + binom_i(dd, j) * corr
        })
        .collect())
}

/// `h'_S = β_{|S|-1}(K_S)`.
pub fn flag_h_prime(k: &PureComplex, mask: u32) -> Result<usize> {
    let sub = k.rank_selected(mask)?;
    reduced_betti_at(&sub, mask.count_ones() as isize - 1)
}

/// Both sides of the inequality
/// `(-1)^r C(2r+1, r+1) (χ - 2) <= 4^{r+1} C((k-1)/2, r+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparlaReport {
    pub r: u64,
    pub k: u64,
    pub chi: i64,
    /// Exact rationals rendered as `p` or `p/q`.
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub equality: bool,
    pub skeleton_present: Option<bool>,
}

pub fn sparla_sides(chi: i64, r: u64, k: u64) -> (BigRational, BigRational) {
    let sgn = if r % 2 == 0 { 1 } else { -1 };
    let lhs = BigInt::from(sgn) * BigInt::from(binomial(2 * r + 1, r + 1)) * BigInt::from(chi - 2);
    let q = BigRational::new(BigInt::from(k) - 1, BigInt::from(2));
    let rhs = BigRational::from_integer(BigInt::from(4).pow((r + 1) as u32)) * generalized_binomial(&q, r + 1);
    (BigRational::from_integer(lhs), rhs)
}

fn render(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn sparla_check(chi: i64, r: u64, k: u64) -> Result<SparlaReport> {
    if r < 1 || k < r + 1 {
        return Err(Error::Parameter(format!("need r >= 1 and k >= r+1, got r = {r}, k = {k}")));
    }
    let (lhs, rhs) = sparla_sides(chi, r, k);
    Ok(SparlaReport {
        r,
        k,
        chi,
        lhs: render(&lhs),
        rhs: render(&rhs),
        holds: lhs <= rhs,
        equality: lhs == rhs,
        skeleton_present: None,
    })
}

/// Equality without the skeleton on `∂B(i, 2r+2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub r: u64,
    pub i: u64,
    pub d: usize,
    pub vertices: usize,
    pub sparla: SparlaReport,
    /// `β_i` of the manifold; nonzero means the r-skeleton cannot be present.
    pub homology_witness_degree: u64,
    pub homology_witness_rank: usize,
    /// An r-face of the cross-polytope absent from the manifold.
    pub missing_face: Option<String>,
}

pub fn sparla_counterexample_report(r: u64, i: u64) -> Result<CounterexampleReport> {
    if i >= r || (r - i) % 2 != 0 {
        return Err(Error::Parameter(format!(
            "need 0 <= i < r with i and r of equal parity, got r = {r}, i = {i}"
        )));
    }
    let d = (2 * r + 2) as usize;
    let m = build_boundary(BidParams::new(i as isize, d)?)?;
    let chi = m.euler_characteristic()?;
    let missing = m.missing_skeleton_face(r as usize);
    let mut sparla = sparla_check(chi, r, d as u64)?;
    sparla.skeleton_present = Some(missing.is_none());
    let rank = reduced_betti_at(&m, i as isize)?;
    Ok(CounterexampleReport {
        r,
        i,
        d,
        vertices: 2 * d,
        sparla,
        homology_witness_degree: i,
        homology_witness_rank: rank,
        missing_face: missing.map(|f| f.to_string()),
    })
}

/// Whether `lhs` exceeds `rhs` strictly; used when sweeping manifolds.
pub fn sparla_violated(chi: i64, r: u64, k: u64) -> bool {
    let (lhs, rhs) = sparla_sides(chi, r, k);
    (lhs - rhs).is_positive()
}

/// One row of the flag table, `S` given as 1-based coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagRow {
    pub set: Vec<usize>,
    pub f: u64,
    pub h: i64,
    pub h_prime: Option<usize>,
}

/// f-, h-, g-, h'- and flag numbers of one complex. Closed-form values sit
/// next to the brute-force ones they are compared with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorReport {
    pub complex: String,
    pub d: usize,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub h_closed_form: Option<Vec<i64>>,
    pub g_boundary: Option<Vec<i64>>,
    pub g_boundary_closed_form: Option<Vec<i64>>,
    pub h_prime: Option<Vec<i64>>,
    pub flag: Option<Vec<FlagRow>>,
    /// `Σ_{|S|=j} h_S = h_j` (and likewise for `h'`) for every `j`.
    pub flag_sums_match: Option<bool>,
}

/// Largest `d` for which homology-based columns (h', flag h') are filled in.
pub const VECTOR_HOMOLOGY_D_LIMIT: usize = 8;
/// Largest `d` for which the flag table is produced.
pub const FLAG_TABLE_D_LIMIT: usize = 12;

fn coords_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Vector report for `k`; `params` adds the closed-form columns of `B(i,d)`
/// and `∂B(i,d)` when `k` is one of them.
pub fn vector_report(name: &str, k: &PureComplex, params: Option<(BidParams, bool)>) -> Result<VectorReport> {
    let d = k.ambient_d();
    let f = k.f_vector()?.0;
    let h = k.h_vector()?.0;
    let homology = d <= VECTOR_HOMOLOGY_D_LIMIT;
    let h_prime_v = if homology { Some(h_prime(k)?) } else { None };

    let (mut h_cf, mut g, mut g_cf) = (None, None, None);
    if let Some((p, boundary)) = params {
        if !boundary && p.i >= 0 {
            h_cf = Some(h_closed_form(p.i, d)?.values);
        }
        if p.i >= 0 && p.i <= d as isize - 2 {
            g = Some(g_boundary_brute(p.i, d)?);
            if p.i <= (d as isize - 2) / 2 {
                g_cf = Some(g_boundary_closed_form(p.i, d)?);
            }
        }
    }

    let balanced = k.facet_size() == Some(d);
    let (flag, flag_sums_match) = if balanced && d <= FLAG_TABLE_D_LIMIT {
        let rows = (0..1u32 << d)
            .map(|mask| {
                Ok(FlagRow {
                    set: coords_of(mask),
                    f: k.flag_f(mask)?,
                    h: k.flag_h(mask)?,
                    h_prime: if homology { Some(flag_h_prime(k, mask)?) } else { None },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let ok = (0..=d).all(|j| {
            let at = rows.iter().filter(|r| r.set.len() == j);
            let h_ok = at.clone().map(|r| r.h).sum::<i64>() == h[j];
            let hp_ok = match &h_prime_v {
                Some(hp) => at.map(|r| r.h_prime.unwrap_or(0) as i64).sum::<i64>() == hp[j],
                None => true,
            };
            h_ok && hp_ok
        });
        (Some(rows), Some(ok))
    } else {
        (None, None)
    };

    Ok(VectorReport {
        complex: name.to_string(),
        d,
        f,
        h,
        h_closed_form: h_cf,
        g_boundary: g,
        g_boundary_closed_form: g_cf,
        h_prime: h_prime_v,
        flag,
        flag_sums_match,
    })
}

impl VectorReport {
    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        fn line<T: std::fmt::Display>(label: &str, v: &[T]) -> String {
            let cells: Vec<String> = v.iter().map(|x| format!("{x:>8}")).collect();
            format!("{label:<12}{}\n", cells.join(""))
        }
        let mut out = format!("{} (d = {})\n", self.complex, self.d);
        out += &line("f", &self.f);
        out += &line("h", &self.h);
        if let Some(v) = &self.h_closed_form {
            out += &line("h formula", v);
        }
        if let Some(v) = &self.g_boundary {
            out += &line("g(bd)", v);
        }
        if let Some(v) = &self.g_boundary_closed_form {
            out += &line("g formula", v);
        }
        if let Some(v) = &self.h_prime {
            out += &line("h'", v);
        }
        if let Some(rows) = &self.flag {
            out += "\nS                       f_S     h_S    h'_S\n";
            for r in rows {
                let set = format!("{{{}}}", r.set.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
                let hp = r.h_prime.map_or("-".to_string(), |v| v.to_string());
                out += &format!("{set:<20}{:>8}{:>8}{:>8}\n", r.f, r.h, hp);
            }
        }
        if let Some(ok) = self.flag_sums_match {
            out += &format!("flag sums match: {ok}\n");
        }
        out
    }
}
