//! Words, switch sets, fillings and the complexes `B(i,d)`.
//!
//! A facet of `C*_d` is the same thing as an `xy`-word of length `d`:
//! letter `j` is `x` exactly when `x_j` belongs to the facet. `B(i,d)` is
//! generated by the facets whose word changes letter at most `i` times.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::face::{full_mask, BitIter, Face, Sign, MAX_DIM};

/// An `xy`-word; bit `j-1` of `ys` is set when letter `j` is `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    d: usize,
    ys: u32,
}

impl Word {
    pub fn new(d: usize, ys: u32) -> Result<Self> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::AmbientDimension(d));
        }
        if ys & !full_mask(d) != 0 {
            return Err(Error::BadWord(format!("mask {ys:#b} longer than {d}")));
        }
        Ok(Word { d, ys })
    }

    pub fn of_facet(facet: Face, d: usize) -> Result<Self> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::AmbientDimension(d));
        }
        if !facet.is_facet_of(d) {
            return Err(Error::NotAFacet(facet));
        }
        Ok(Word { d, ys: facet.y_mask() })
    }

    pub fn facet(self) -> Face {
        let all = full_mask(self.d);
        Face::from_masks_unchecked(all & !self.ys, self.ys)
    }

    pub fn len(self) -> usize {
        self.d
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn letter(self, j: usize) -> Sign {
        if self.ys & (1 << (j - 1)) != 0 {
            Sign::Y
        } else {
            Sign::X
        }
    }

    pub fn switch_set(self) -> SwitchSet {
        let mask = (self.ys ^ (self.ys >> 1)) & full_mask(self.d - 1);
        SwitchSet { d: self.d, mask }
    }

    /// The unique word ending in `last` whose switch set is `switches`.
    pub fn with_switches_ending(switches: SwitchSet, last: Sign) -> Word {
        let d = switches.d;
        let mut ys = 0u32;
        let mut cur = last;
        for j in (1..=d).rev() {
            if j < d && switches.contains(j) {
                cur = cur.flip();
            }
            if cur == Sign::Y {
                ys |= 1 << (j - 1);
            }
        }
        Word { d, ys }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.d {
            write!(f, "{}", self.letter(j).letter())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > MAX_DIM {
            return Err(Error::BadWord(s.to_string()));
        }
        let mut ys = 0u32;
        for (k, c) in s.chars().enumerate() {
            match c {
                'x' => {}
                'y' => ys |= 1 << k,
                _ => return Err(Error::BadWord(s.to_string())),
            }
        }
        Ok(Word { d: s.len(), ys })
    }
}

/// Positions `j ∈ [d-1]` where letters `j` and `j+1` differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwitchSet {
    d: usize,
    mask: u32,
}

impl SwitchSet {
    pub fn from_positions(d: usize, positions: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &p in positions {
            if p == 0 || p >= d {
                return Err(Error::Parameter(format!("switch position {p} not in [{}]", d - 1)));
            }
            mask |= 1 << (p - 1);
        }
        Ok(SwitchSet { d, mask })
    }

    pub fn ambient_d(self) -> usize {
        self.d
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && self.mask & (1 << (j - 1)) != 0
    }

    pub fn positions(self) -> Vec<usize> {
        BitIter(self.mask).map(|b| b as usize + 1).collect()
    }

    /// `[d-1]` minus this set.
    pub fn complement(self) -> SwitchSet {
        SwitchSet { d: self.d, mask: !self.mask & full_mask(self.d - 1) }
    }
}

/// `I ≺ J` iff `|I| < |J|`, or equal sizes and the least element of the
/// symmetric difference lies in `I`.
pub fn prec_compare(a: SwitchSet, b: SwitchSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let diff = a.mask ^ b.mask;
        if diff == 0 {
            Ordering::Equal
        } else if a.mask & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

impl Ord for SwitchSet {
    fn cmp(&self, other: &Self) -> Ordering {
        prec_compare(*self, *other)
    }
}

impl PartialOrd for SwitchSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SwitchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.positions().iter().join(","))
    }
}

/// Switch set of a facet of `C*_d`.
pub fn switch_set_of(facet: Face, d: usize) -> Result<SwitchSet> {
    Ok(Word::of_facet(facet, d)?.switch_set())
}

/// The filling of `sigma`: each missing coordinate copies the next present
/// label, trailing coordinates copy the last one. `fill(∅)` is the all-`x`
/// facet.
pub fn fill(sigma: Face, d: usize) -> Face {
    let sign_at = |j: usize| {
        if sigma.y_mask() & (1 << (j - 1)) != 0 {
            Sign::Y
        } else {
            Sign::X
        }
    };
    let top = sigma.max_coord();
    let mut cur = if top > 0 { sign_at(top) } else { Sign::X };
    let mut ys = 0u32;
    for j in (1..=d).rev() {
        if sigma.support() & (1 << (j - 1)) != 0 {
            cur = sign_at(j);
        }
        if cur == Sign::Y {
            ys |= 1 << (j - 1);
        }
    }
    Face::from_masks_unchecked(full_mask(d) & !ys, ys)
}

/// Valid parameters `-1 <= i <= d-1`, `1 <= d <= 32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BidParams {
    pub i: isize,
    pub d: usize,
}

impl BidParams {
    pub fn new(i: isize, d: usize) -> Result<Self> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::AmbientDimension(d));
        }
        if i < -1 || i > d as isize - 1 {
            return Err(Error::Parameter(format!("i = {i} outside -1..={}", d - 1)));
        }
        Ok(BidParams { i, d })
    }

    /// Parameters of the complex isomorphic to the complement, `(d-i-2, d)`.
    pub fn dual(self) -> Result<Self> {
        BidParams::new(self.d as isize - self.i - 2, self.d)
    }
}

/// Membership via the filling criterion.
pub fn is_face_of_b(sigma: Face, p: BidParams) -> bool {
    if p.i < 0 {
        return false;
    }
    switch_count(fill(sigma, p.d), p.d) <= p.i as usize
}

pub(crate) fn switch_count(facet: Face, d: usize) -> usize {
    let ys = facet.y_mask();
    ((ys ^ (ys >> 1)) & full_mask(d - 1)).count_ones() as usize
}

/// Words with at most `max_switches` switches (and at least `min_switches`),
/// generated from switch-position subsets.
fn words_by_switch_count(d: usize, min_switches: usize, max_switches: usize) -> Vec<Face> {
    let mut facets = Vec::new();
    for k in min_switches..=max_switches.min(d - 1) {
        for positions in (1..d).combinations(k) {
            let s = SwitchSet::from_positions(d, &positions).expect("positions in range");
            for last in [Sign::X, Sign::Y] {
                facets.push(Word::with_switches_ending(s, last).facet());
            }
        }
    }
    facets
}

/// `B(i,d)`.
pub fn build_b(p: BidParams) -> PureComplex {
    if p.i < 0 {
        return PureComplex::void(p.d);
    }
    PureComplex::from_unsorted(p.d, words_by_switch_count(p.d, 0, p.i as usize))
}

/// `C(i,d)`: the facets of `C*_d` that are not in `B(i,d)`.
pub fn build_complement(p: BidParams) -> PureComplex {
    let lo = (p.i + 1) as usize;
    if lo > p.d - 1 {
        return PureComplex::void(p.d);
    }
    PureComplex::from_unsorted(p.d, words_by_switch_count(p.d, lo, p.d - 1))
}

/// The involution fixing odd coordinates and swapping `x_j`, `y_j` for even `j`.
pub fn complement_iso(tau: Face) -> Face {
    const EVEN: u32 = 0xAAAA_AAAA;
    let x = tau.x_mask();
    let y = tau.y_mask();
    Face::from_masks_unchecked((x & !EVEN) | (y & EVEN), (y & !EVEN) | (x & EVEN))
}

/// `∂B(i,d)` for `0 <= i <= d-2`.
pub fn build_boundary(p: BidParams) -> Result<PureComplex> {
    if p.i == p.d as isize - 1 {
        return Err(Error::ClosedComplex);
    }
    if p.i < 0 {
        return Err(Error::Parameter("B(-1,d) is void".into()));
    }
    build_b(p).boundary_complex()
}

/// `2 Σ_{k=0}^{i} C(d-1, k)`.
pub fn facet_count_formula(p: BidParams) -> u128 {
    if p.i < 0 {
        return 0;
    }
    2 * (0..=p.i as u64).map(|k| crate::enumeration::binomial(p.d as u64 - 1, k)).sum::<u128>()
}

/// `SwEl(τ)`: the labels of `τ` sitting at switch positions.
pub fn swel(tau: Face, d: usize) -> Result<Face> {
    let s = switch_set_of(tau, d)?;
    Ok(tau.restrict(s.mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(s: &str) -> Face {
        s.parse().unwrap()
    }

    #[test]
    fn words_and_facets() {
        assert_eq!(Word::from_str("xyxxy").unwrap().facet(), face("x1 y2 x3 x4 y5"));
        assert_eq!(Word::from_str("xxyyy").unwrap().facet(), face("x1 x2 y3 y4 y5"));
        let w = Word::of_facet(face("y1 x2 y3"), 3).unwrap();
        assert_eq!(w.to_string(), "yxy");
        assert!(Word::of_facet(face("x1 x3"), 3).is_err());
        assert!(Word::from_str("xz").is_err());
        assert!(Word::from_str("").is_err());
    }

    #[test]
    fn switch_sets() {
        let s = Word::from_str("xyxxyyy").unwrap().switch_set();
        assert_eq!(s.positions(), vec![1, 2, 4]);
        assert!(Word::from_str("xxxxx").unwrap().switch_set().is_empty());
        assert_eq!(Word::from_str("xyxy").unwrap().switch_set().positions(), vec![1, 2, 3]);
    }

    #[test]
    fn prec_chain_on_subsets_of_3() {
        let chain: Vec<SwitchSet> = [
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 2, 3],
        ]
        .iter()
        .map(|p| SwitchSet::from_positions(4, p).unwrap())
        .collect();
        for w in chain.windows(2) {
            assert_eq!(prec_compare(w[0], w[1]), Ordering::Less, "{} vs {}", w[0], w[1]);
        }
        let mut shuffled = chain.clone();
        shuffled.reverse();
        shuffled.sort();
        assert_eq!(shuffled, chain);
    }

    #[test]
    fn fill_examples() {
        assert_eq!(fill(face("y2"), 4), face("y1 y2 y3 y4"));
        let f = fill(face("x1 y3"), 4);
        assert_eq!(f, face("x1 y2 y3 y4"));
        assert_eq!(switch_set_of(f, 4).unwrap().positions(), vec![1]);
        let t = face("x1 y2 x3 y4");
        assert_eq!(fill(t, 4), t);
        assert_eq!(fill(Face::EMPTY, 4), face("xxxx"));
        assert_eq!(fill(face("x2 y3"), 5), face("x1 x2 y3 y4 y5"));
    }

    #[test]
    fn membership_examples() {
        let p = BidParams::new(2, 4).unwrap();
        assert!(!is_face_of_b(face("x1 y2 x3 y4"), p));
        assert!(is_face_of_b(Face::EMPTY, BidParams::new(0, 4).unwrap()));
        assert!(!is_face_of_b(Face::EMPTY, BidParams::new(-1, 4).unwrap()));
    }

    #[test]
    fn special_facet_counts() {
        for d in 2..=8 {
            let b0 = build_b(BidParams::new(0, d).unwrap());
            assert_eq!(b0.num_facets(), 2);
            let b1 = build_b(BidParams::new(1, d).unwrap());
            assert_eq!(b1.num_facets(), 2 * d);
            let top = build_b(BidParams::new(d as isize - 1, d).unwrap());
            assert_eq!(top, PureComplex::cross_polytope(d));
        }
        let b = build_b(BidParams::new(2, 4).unwrap());
        assert_eq!(b.num_facets(), 14);
        assert!(!b.facets().contains(&face("xyxy")));
        assert!(!b.facets().contains(&face("yxyx")));
        assert!(build_b(BidParams::new(-1, 4).unwrap()).is_void());
    }

    #[test]
    fn complement_counts() {
        assert!(build_complement(BidParams::new(3, 4).unwrap()).is_void());
        assert_eq!(build_complement(BidParams::new(0, 5).unwrap()).num_facets(), 30);
        assert_eq!(build_complement(BidParams::new(1, 4).unwrap()).num_facets(), 8);
    }

    #[test]
    fn complement_iso_examples() {
        let a = complement_iso(face("xxxx"));
        assert_eq!(a, face("xyxy"));
        assert_eq!(switch_set_of(a, 4).unwrap().positions(), vec![1, 2, 3]);
        let f = face("y1 x2 y5");
        assert_eq!(complement_iso(complement_iso(f)), f);
    }

    #[test]
    fn boundary_guards() {
        assert!(matches!(build_boundary(BidParams::new(3, 4).unwrap()), Err(Error::ClosedComplex)));
        let torus = build_boundary(BidParams::new(1, 4).unwrap()).unwrap();
        assert_eq!(torus.num_facets(), 16);
    }

    #[test]
    fn bijection_word_from_switches() {
        let s = SwitchSet::from_positions(4, &[1, 3]).unwrap();
        let w = Word::with_switches_ending(s, Sign::X);
        assert_eq!(w.to_string(), "xyyx");
        assert_eq!(w.switch_set(), s);
    }

    #[test]
    fn params_validation() {
        assert!(BidParams::new(-2, 4).is_err());
        assert!(BidParams::new(4, 4).is_err());
        assert!(BidParams::new(0, 0).is_err());
        assert_eq!(BidParams::new(1, 5).unwrap().dual().unwrap().i, 2);
    }
}
