//! Vertex labels and faces of the cross-polytope boundary `C*_d`.
//!
//! A face is stored as two bit masks, one bit per coordinate for `x_j` and
//! one for `y_j`. Bit `j - 1` stands for coordinate `j`. A valid face never
//! has both bits of a coordinate set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    X,
    Y,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::X => Sign::Y,
            Sign::Y => Sign::X,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Sign::X => 'x',
            Sign::Y => 'y',
        }
    }
}

/// A vertex `x_j` or `y_j`; `coord` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub sign: Sign,
    pub coord: usize,
}

impl VertexLabel {
    pub fn new(sign: Sign, coord: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&coord), "coordinate {coord} out of range");
        VertexLabel { sign, coord }
    }

    pub fn x(coord: usize) -> Self {
        Self::new(Sign::X, coord)
    }

    pub fn y(coord: usize) -> Self {
        Self::new(Sign::Y, coord)
    }

    pub fn antipode(self) -> Self {
        VertexLabel { sign: self.sign.flip(), coord: self.coord }
    }

    /// Position in the canonical label order `x_1..x_d, y_1..y_d`.
    pub fn index(self, d: usize) -> usize {
        match self.sign {
            Sign::X => self.coord - 1,
            Sign::Y => d + self.coord - 1,
        }
    }

    pub fn from_index(index: usize, d: usize) -> Self {
        if index < d {
            VertexLabel::x(index + 1)
        } else {
            VertexLabel::y(index - d + 1)
        }
    }

    /// Every label of `C*_d` in canonical order.
    pub fn all(d: usize) -> impl Iterator<Item = VertexLabel> {
        (0..2 * d).map(move |k| VertexLabel::from_index(k, d))
    }
}

// Labels compare by coordinate first, x before y at equal coordinate.
impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.coord, self.sign).cmp(&(other.coord, other.sign))
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign.letter(), self.coord)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let sign = match chars.next() {
            Some('x') => Sign::X,
            Some('y') => Sign::Y,
            _ => return Err(Error::BadLabel(s.to_string())),
        };
        let coord: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadLabel(s.to_string()))?;
        if !(1..=MAX_DIM).contains(&coord) {
            return Err(Error::BadLabel(s.to_string()));
        }
        Ok(VertexLabel { sign, coord })
    }
}

/// A face of `C*_d`: a set of labels using each coordinate at most once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face {
    x: u32,
    y: u32,
}

impl Face {
    pub const EMPTY: Face = Face { x: 0, y: 0 };

    /// Builds a face from raw masks, rejecting antipodal pairs.
    pub fn from_masks(x: u32, y: u32) -> Result<Self> {
        let both = x & y;
        if both != 0 {
            return Err(Error::AntipodalPair(both.trailing_zeros() as usize + 1));
        }
        Ok(Face { x, y })
    }

    /// Internal constructor for masks already known to be disjoint.
    pub(crate) const fn from_masks_unchecked(x: u32, y: u32) -> Self {
        Face { x, y }
    }

    pub fn from_labels<I: IntoIterator<Item = VertexLabel>>(labels: I) -> Result<Self> {
        let mut face = Face::EMPTY;
        for l in labels {
            let bit = 1u32 << (l.coord - 1);
            match l.sign {
                Sign::X => face.x |= bit,
                Sign::Y => face.y |= bit,
            }
        }
        Face::from_masks(face.x, face.y)
    }

    pub fn x_mask(self) -> u32 {
        self.x
    }

    pub fn y_mask(self) -> u32 {
        self.y
    }

    /// Coordinates used by the face.
    pub fn support(self) -> u32 {
        self.x | self.y
    }

    pub fn len(self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.support() == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    /// Largest coordinate present, or 0 for the empty face.
    pub fn max_coord(self) -> usize {
        32 - self.support().leading_zeros() as usize
    }

    pub fn contains(self, label: VertexLabel) -> bool {
        let bit = 1u32 << (label.coord - 1);
        match label.sign {
            Sign::X => self.x & bit != 0,
            Sign::Y => self.y & bit != 0,
        }
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.x & !other.x == 0 && self.y & !other.y == 0
    }

    pub fn union(self, other: Face) -> Result<Face> {
        Face::from_masks(self.x | other.x, self.y | other.y)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face { x: self.x & other.x, y: self.y & other.y }
    }

    pub fn difference(self, other: Face) -> Face {
        Face { x: self.x & !other.x, y: self.y & !other.y }
    }

    pub fn with(self, label: VertexLabel) -> Result<Face> {
        self.union(Face::from_labels([label])?)
    }

    pub fn without(self, label: VertexLabel) -> Face {
        self.difference(Face::from_labels([label]).expect("single label"))
    }

    /// Keeps only the coordinates in `mask`.
    pub fn restrict(self, mask: u32) -> Face {
        Face { x: self.x & mask, y: self.y & mask }
    }

    /// Swaps every `x_j` with `y_j`.
    pub fn antipode(self) -> Face {
        Face { x: self.y, y: self.x }
    }

    /// True when the face uses every coordinate `1..=d`.
    pub fn is_facet_of(self, d: usize) -> bool {
        self.support() == full_mask(d)
    }

    /// Labels in canonical order (by coordinate).
    pub fn labels(self) -> impl Iterator<Item = VertexLabel> {
        let support = self.support();
        let x = self.x;
        BitIter(support).map(move |c| {
            let sign = if x & (1 << c) != 0 { Sign::X } else { Sign::Y };
            VertexLabel { sign, coord: c as usize + 1 }
        })
    }

    /// All subfaces, including the empty face and `self`.
    pub fn subfaces(self) -> impl Iterator<Item = Face> {
        let s = self.support();
        let x = self.x;
        let y = self.y;
        let mut sub = s;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face { x: x & sub, y: y & sub };
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & s;
            }
            Some(out)
        })
    }

    /// Faces obtained by dropping one label, in canonical label order of the
    /// dropped vertex.
    pub fn ridges(self) -> impl Iterator<Item = Face> {
        self.labels().map(move |l| self.without(l))
    }

    pub fn check_ambient(self, d: usize) -> Result<()> {
        if self.support() & !full_mask(d) != 0 {
            let l = self.labels().last().expect("nonempty");
            return Err(Error::CoordinateOutOfRange { label: l.to_string(), d });
        }
        Ok(())
    }
}

/// Bit mask with the low `d` bits set.
pub fn full_mask(d: usize) -> u32 {
    if d >= 32 {
        u32::MAX
    } else {
        (1u32 << d) - 1
    }
}

/// Iterates set bit positions (0-based) from low to high.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

// Canonical order: lexicographic on the sorted label sequence. For facets of
// C*_d this is the word order with x < y.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.labels();
        let mut b = other.labels();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(p), Some(q)) => match p.cmp(&q) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.labels().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// Parses `{x1,y2}`, `x1 y2`, `x1,y2` or a bare word such as `xyxxy`.
impl FromStr for Face {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() {
            return Ok(Face::EMPTY);
        }
        if t.chars().all(|c| c == 'x' || c == 'y') {
            return Ok(crate::crosspoly::Word::from_str(t)?.facet());
        }
        let labels = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(VertexLabel::from_str)
            .collect::<Result<Vec<_>>>()?;
        let face = Face::from_labels(labels.iter().copied())?;
        if face.len() != labels.len() {
            return Err(Error::Parse(format!("repeated label in `{s}`")));
        }
        Ok(face)
    }
}

/// All faces of `C*_d` with exactly `k` labels, in canonical order.
pub fn cross_polytope_faces(d: usize, k: usize) -> Vec<Face> {
    let mut out = Vec::new();
    if k > d {
        return out;
    }
    for support in itertools::Itertools::combinations(0..d as u32, k) {
        let smask: u32 = support.iter().map(|&b| 1u32 << b).sum();
        for signs in 0u32..(1u32 << k) {
            let mut y = 0u32;
            for (t, &b) in support.iter().enumerate() {
                if signs & (1 << t) != 0 {
                    y |= 1 << b;
                }
            }
            out.push(Face { x: smask & !y, y });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antipode_is_involution() {
        for l in VertexLabel::all(5) {
            assert_eq!(l.antipode().antipode(), l);
            assert_ne!(l.antipode(), l);
        }
    }

    #[test]
    fn rejects_antipodal_pair() {
        let err = Face::from_labels([VertexLabel::x(2), VertexLabel::y(2)]).unwrap_err();
        assert!(matches!(err, Error::AntipodalPair(2)));
        assert!("x1 y1".parse::<Face>().is_err());
    }

    #[test]
    fn parse_forms() {
        let a: Face = "{x1,y2,x3}".parse().unwrap();
        let b: Face = "x1 y2 x3".parse().unwrap();
        let c: Face = "xyx".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "{x1,y2,x3}");
        assert_eq!(a.dim(), 2);
        assert!("z1".parse::<Face>().is_err());
        assert!("x0".parse::<Face>().is_err());
    }

    #[test]
    fn canonical_order_matches_words() {
        let words = ["xxx", "xxy", "xyx", "xyy", "yxx", "yxy", "yyx", "yyy"];
        let faces: Vec<Face> = words.iter().map(|w| w.parse().unwrap()).collect();
        let mut sorted = faces.clone();
        sorted.sort();
        assert_eq!(faces, sorted);
    }

    #[test]
    fn subfaces_count() {
        let f: Face = "x1 y3 x4".parse().unwrap();
        let subs: Vec<Face> = f.subfaces().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&Face::EMPTY));
        assert!(subs.iter().all(|s| s.is_subset(f)));
    }

    #[test]
    fn cross_polytope_face_counts() {
        assert_eq!(cross_polytope_faces(3, 0), vec![Face::EMPTY]);
        assert_eq!(cross_polytope_faces(4, 2).len(), 24);
        assert_eq!(cross_polytope_faces(3, 3).len(), 8);
    }
}
