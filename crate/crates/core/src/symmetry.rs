//! The label permutations `D`, `E`, `R`, `R'` (and the complement map `A`),
//! their action on complexes, and explicit group closure.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexLabel, MAX_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Antipodal map `x_j <-> y_j`.
    D,
    /// Reversal `x_j -> x_{d-j+1}`.
    E,
    /// Rotation `x_j -> x_{j+1}` mod `d`.
    R,
    /// Twisted rotation: like `R` but `x_d -> y_1`, `y_d -> x_1`.
    RPrime,
    /// Swap `x_j <-> y_j` for even `j` only.
    A,
}

impl Generator {
    pub const ALL: [Generator; 5] =
        [Generator::D, Generator::E, Generator::R, Generator::RPrime, Generator::A];

    pub fn name(self) -> &'static str {
        match self {
            Generator::D => "D",
            Generator::E => "E",
            Generator::R => "R",
            Generator::RPrime => "Rprime",
            Generator::A => "A",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(Generator::D),
            "E" => Ok(Generator::E),
            "R" => Ok(Generator::R),
            "Rprime" | "R'" | "Rp" => Ok(Generator::RPrime),
            "A" => Ok(Generator::A),
            _ => Err(Error::UnknownGenerator(s.to_string())),
        }
    }
}

/// A permutation of the `2d` labels, stored as an image array over the
/// canonical order `x_1..x_d, y_1..y_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPermutation {
    d: usize,
    image: Vec<u8>,
}

impl VertexPermutation {
    pub fn identity(d: usize) -> Self {
        VertexPermutation { d, image: (0..2 * d as u8).collect() }
    }

    pub fn from_fn<F: Fn(VertexLabel) -> VertexLabel>(d: usize, f: F) -> Result<Self> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::AmbientDimension(d));
        }
        let image: Vec<u8> = VertexLabel::all(d).map(|l| f(l).index(d) as u8).collect();
        let mut seen = vec![false; 2 * d];
        for &k in &image {
            if (k as usize) >= 2 * d || std::mem::replace(&mut seen[k as usize], true) {
                return Err(Error::Parameter("label map is not a bijection".into()));
            }
        }
        Ok(VertexPermutation { d, image })
    }

    pub fn generator(g: Generator, d: usize) -> Result<Self> {
        let next = |j: usize| if j == d { 1 } else { j + 1 };
        Self::from_fn(d, |l| match g {
            Generator::D => l.antipode(),
            Generator::E => VertexLabel { sign: l.sign, coord: d - l.coord + 1 },
            Generator::R => VertexLabel { sign: l.sign, coord: next(l.coord) },
            Generator::RPrime => {
                if l.coord == d {
                    VertexLabel { sign: l.sign.flip(), coord: 1 }
                } else {
                    VertexLabel { sign: l.sign, coord: l.coord + 1 }
                }
            }
            Generator::A => {
                if l.coord % 2 == 0 {
                    l.antipode()
                } else {
                    l
                }
            }
        })
    }

    pub fn ambient_d(&self) -> usize {
        self.d
    }

    pub fn apply_label(&self, l: VertexLabel) -> VertexLabel {
        VertexLabel::from_index(self.image[l.index(self.d)] as usize, self.d)
    }

    pub fn apply_face(&self, f: Face) -> Face {
        Face::from_labels(f.labels().map(|l| self.apply_label(l)))
            .expect("a permutation of C*_d labels that preserves antipodal pairs")
    }

    /// True when antipodal pairs go to antipodal pairs, so faces map to faces.
    pub fn is_simplicial(&self) -> bool {
        VertexLabel::all(self.d).all(|l| self.apply_label(l.antipode()) == self.apply_label(l).antipode())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        VertexPermutation {
            d: self.d,
            image: other.image.iter().map(|&k| self.image[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0u8; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v as usize] = k as u8;
        }
        VertexPermutation { d: self.d, image }
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::identity(self.d), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = p.compose(self);
            n += 1;
        }
        n
    }
}

/// Relabels every facet of `k`.
pub fn apply(pi: &VertexPermutation, k: &PureComplex) -> PureComplex {
    k.map_facets(|f| pi.apply_face(f))
}

/// `D` preserves `k`, and no nonempty face is fixed by `D` or meets its image.
pub fn is_centrally_symmetric(k: &PureComplex) -> bool {
    if k.is_void() {
        return false;
    }
    let d = VertexPermutation::generator(Generator::D, k.ambient_d()).expect("valid d");
    if apply(&d, k) != *k {
        return false;
    }
    k.facets().iter().all(|&t| {
        t.subfaces().all(|s| {
            let image = d.apply_face(s);
            s.is_empty() || (s.intersection(image).is_empty() && image != s)
        })
    })
}

/// Orbit of a label under the group generated by `gens`.
pub fn orbit(gens: &[VertexPermutation], start: VertexLabel, d: usize) -> Vec<VertexLabel> {
    let mut seen = vec![false; 2 * d];
    let mut queue = VecDeque::from([start]);
    seen[start.index(d)] = true;
    while let Some(l) = queue.pop_front() {
        for g in gens {
            let m = g.apply_label(l);
            if !std::mem::replace(&mut seen[m.index(d)], true) {
                queue.push_back(m);
            }
        }
    }
    let mut out: Vec<VertexLabel> =
        (0..2 * d).filter(|&k| seen[k]).map(|k| VertexLabel::from_index(k, d)).collect();
    out.sort();
    out
}

/// All elements of the generated group, by breadth-first products.
pub fn closure(gens: &[VertexPermutation], d: usize, bound: usize) -> Result<Vec<VertexPermutation>> {
    let id = VertexPermutation::identity(d);
    let mut seen: HashSet<VertexPermutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() >= bound {
                    return Err(Error::ClosureBound(bound));
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// One checked group relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub generators: Vec<String>,
    pub order: usize,
    pub vertex_transitive: bool,
    pub relations: Vec<RelationCheck>,
    pub relations_ok: bool,
    pub preserves_complex: Option<bool>,
}

/// Defining relations among whichever named generators are present.
pub fn relations(gens: &[Generator], d: usize) -> Result<Vec<RelationCheck>> {
    let p = |g| VertexPermutation::generator(g, d);
    let has = |g| gens.contains(&g);
    let mut out = Vec::new();
    let mut push = |relation: &str, holds: bool| {
        out.push(RelationCheck { relation: relation.to_string(), holds })
    };
    if has(Generator::D) {
        push("D^2 = id", p(Generator::D)?.pow(2).is_identity());
    }
    if has(Generator::E) {
        push("E^2 = id", p(Generator::E)?.pow(2).is_identity());
    }
    if has(Generator::R) {
        push("R^d = id", p(Generator::R)?.pow(d).is_identity());
    }
    if has(Generator::E) && has(Generator::R) {
        let (e, r) = (p(Generator::E)?, p(Generator::R)?);
        push("ERE = R^-1", e.compose(&r).compose(&e) == r.inverse());
    }
    if has(Generator::D) && has(Generator::E) {
        let (dd, e) = (p(Generator::D)?, p(Generator::E)?);
        push("DE = ED", dd.compose(&e) == e.compose(&dd));
    }
    if has(Generator::D) && has(Generator::R) {
        let (dd, r) = (p(Generator::D)?, p(Generator::R)?);
        push("DR = RD", dd.compose(&r) == r.compose(&dd));
    }
    if has(Generator::RPrime) {
        let rp = p(Generator::RPrime)?;
        push("R'^d = D", rp.pow(d) == p(Generator::D)?);
        push("R'^(2d) = id", rp.pow(2 * d).is_identity());
    }
    if has(Generator::E) && has(Generator::RPrime) {
        let (e, rp) = (p(Generator::E)?, p(Generator::RPrime)?);
        push("ER'E = R'^-1", e.compose(&rp).compose(&e) == rp.inverse());
    }
    Ok(out)
}

/// Closes the named generators, checks their relations and optionally
/// whether each generator preserves `complex`. The closure bound defaults to
/// `10 * 4d`.
pub fn group_closure(
    gens: &[Generator],
    d: usize,
    complex: Option<&PureComplex>,
    bound: Option<usize>,
) -> Result<GroupReport> {
    let perms = gens
        .iter()
        .map(|&g| VertexPermutation::generator(g, d))
        .collect::<Result<Vec<_>>>()?;
    let elements = closure(&perms, d, bound.unwrap_or(40 * d))?;
    let transitive = orbit(&perms, VertexLabel::x(1), d).len() == 2 * d;
    let relations = relations(gens, d)?;
    let relations_ok = relations.iter().all(|r| r.holds);
    let preserves_complex = complex.map(|k| perms.iter().all(|p| apply(p, k) == *k));
    Ok(GroupReport {
        generators: gens.iter().map(|g| g.name().to_string()).collect(),
        order: elements.len(),
        vertex_transitive: transitive,
        relations,
        relations_ok,
        preserves_complex,
    })
}
