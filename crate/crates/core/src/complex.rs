//! Pure simplicial complexes living inside `C*_d`.

use std::collections::{BTreeMap, HashMap, HashSet};

use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{cross_polytope_faces, full_mask, Face, MAX_DIM};

/// Default cap on materialized faces: `3^12`, every face of `C*_12`.
pub const DEFAULT_MAX_FACES: usize = 531_441;

static MAX_FACES: Lazy<usize> = Lazy::new(|| {
    std::env::var("XPOL_MAX_FACES")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_FACES)
});

/// Face-enumeration cap, read once from `XPOL_MAX_FACES`.
pub fn max_faces() -> usize {
    *MAX_FACES
}

/// A pure complex given by its facets, all subsets of the vertex set of
/// `C*_d`. The facet list is sorted canonically and deduplicated.
///
/// The void complex (no faces at all) has no facets. The complex `{∅}` has
/// exactly one facet, the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureComplex {
    d: usize,
    facets: Vec<Face>,
}

impl PureComplex {
    pub fn new<I: IntoIterator<Item = Face>>(d: usize, facets: I) -> Result<Self> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::AmbientDimension(d));
        }
        let mut facets: Vec<Face> = facets.into_iter().collect();
        facets.sort_unstable();
        facets.dedup();
        if let Some(first) = facets.first() {
            let size = first.len();
            for f in &facets {
                f.check_ambient(d)?;
                if f.len() != size {
                    return Err(Error::NotPure(size, f.len()));
                }
            }
        }
        Ok(PureComplex { d, facets })
    }

    /// Facets already validated, sorted and deduplicated.
    pub(crate) fn from_sorted(d: usize, facets: Vec<Face>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        PureComplex { d, facets }
    }

    pub(crate) fn from_unsorted(d: usize, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        PureComplex { d, facets }
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void(d: usize) -> Self {
        PureComplex { d, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face(d: usize) -> Self {
        PureComplex { d, facets: vec![Face::EMPTY] }
    }

    pub fn simplex(d: usize, facet: Face) -> Result<Self> {
        Self::new(d, [facet])
    }

    /// The boundary complex of the d-dimensional cross-polytope.
    pub fn cross_polytope(d: usize) -> Self {
        PureComplex { d, facets: cross_polytope_faces(d, d) }
    }

    pub fn ambient_d(&self) -> usize {
        self.d
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Common facet size, `None` for the void complex.
    pub fn facet_size(&self) -> Option<usize> {
        self.facets.first().map(|f| f.len())
    }

    /// Dimension, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facet_size().map(|s| s as isize - 1)
    }

    /// Same complex viewed in a different ambient dimension.
    pub fn with_ambient(&self, d: usize) -> Result<Self> {
        Self::new(d, self.facets.iter().copied())
    }

    pub fn contains_face(&self, sigma: Face) -> bool {
        self.facets.iter().any(|t| sigma.is_subset(*t))
    }

    /// Every face grouped by size, each group sorted canonically.
    pub fn enumerate_faces(&self) -> Result<FaceLattice> {
        let limit = max_faces();
        let Some(size) = self.facet_size() else {
            return Ok(FaceLattice { by_size: Vec::new() });
        };
        let mut seen: HashSet<Face> = HashSet::new();
        for &t in &self.facets {
            for s in t.subfaces() {
                if seen.insert(s) && seen.len() > limit {
                    return Err(Error::TooManyFaces { limit });
                }
            }
        }
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); size + 1];
        for f in seen {
            by_size[f.len()].push(f);
        }
        for group in &mut by_size {
            group.sort_unstable();
        }
        Ok(FaceLattice { by_size })
    }

    pub fn link(&self, sigma: Face) -> Result<PureComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let facets = self
            .facets
            .iter()
            .filter(|t| sigma.is_subset(**t))
            .map(|t| t.difference(sigma))
            .collect();
        Ok(Self::from_unsorted(self.d, facets))
    }

    pub fn star(&self, sigma: Face) -> Result<PureComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let facets = self.facets.iter().copied().filter(|t| sigma.is_subset(*t)).collect();
        Ok(Self::from_sorted(self.d, facets))
    }

    /// All faces of dimension at most `j`, grouped by size then canonical.
    pub fn skeleton(&self, j: isize) -> Result<Vec<Face>> {
        let dim = self.dim().ok_or_else(|| Error::Parameter("void complex has no skeleta".into()))?;
        if j < -1 || j > dim {
            return Err(Error::Parameter(format!("skeleton dimension {j} outside -1..={dim}")));
        }
        let lattice = self.enumerate_faces()?;
        Ok(lattice.by_size[..=(j + 1) as usize].iter().flatten().copied().collect())
    }

    /// Number of facets containing each ridge.
    pub fn ridge_degrees(&self) -> BTreeMap<Face, usize> {
        let mut degrees: HashMap<Face, usize> = HashMap::new();
        for &t in &self.facets {
            for r in t.ridges() {
                *degrees.entry(r).or_insert(0) += 1;
            }
        }
        degrees.into_iter().collect()
    }

    /// The complex generated by ridges lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<PureComplex> {
        let degrees = self.ridge_degrees();
        if let Some((&ridge, &degree)) = degrees.iter().find(|(_, &k)| k > 2) {
            return Err(Error::RidgeDegree { ridge, degree });
        }
        let facets = degrees.into_iter().filter(|(_, k)| *k == 1).map(|(r, _)| r).collect();
        Ok(Self::from_sorted(self.d, facets))
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let lattice = self.enumerate_faces()?;
        Ok(FVector(lattice.by_size.iter().map(|g| g.len() as u64).collect()))
    }

    pub fn h_vector(&self) -> Result<HVector> {
        Ok(self.f_vector()?.h_vector())
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.reduced_euler_characteristic()? + 1)
    }

    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        if self.is_void() {
            return Err(Error::Parameter("reduced Euler characteristic of the void complex".into()));
        }
        Ok(self.f_vector()?.reduced_euler_characteristic())
    }

    fn require_balanced(&self) -> Result<()> {
        match self.facet_size() {
            Some(s) if s == self.d => Ok(()),
            _ => Err(Error::NotBalanced),
        }
    }

    /// Faces supported on the coordinates in `mask` (bit `j-1` = coord `j`).
    pub fn rank_selected(&self, mask: u32) -> Result<PureComplex> {
        if mask & !full_mask(self.d) != 0 {
            return Err(Error::Parameter(format!("color set {mask:#b} not inside [{}]", self.d)));
        }
        self.require_balanced()?;
        let facets = self.facets.iter().map(|t| t.restrict(mask)).collect();
        Ok(Self::from_unsorted(self.d, facets))
    }

    pub fn flag_f(&self, mask: u32) -> Result<u64> {
        Ok(self.rank_selected(mask)?.num_facets() as u64)
    }

    /// `(-1)^{|S|-1} χ̃(K_S)`; equals 1 at `S = ∅`.
    pub fn flag_h(&self, mask: u32) -> Result<i64> {
        let sub = self.rank_selected(mask)?;
        let chi = sub.reduced_euler_characteristic()?;
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        Ok(sign * chi)
    }

    /// True iff every `j`-face of `C*_d` is a face of the complex.
    pub fn contains_skeleton(&self, j: usize) -> bool {
        self.missing_skeleton_face(j).is_none()
    }

    /// The canonically first `j`-face of `C*_d` missing from the complex.
    pub fn missing_skeleton_face(&self, j: usize) -> Option<Face> {
        let k = j + 1;
        if k > self.d {
            return None;
        }
        let mut present: HashSet<Face> = HashSet::new();
        for &t in &self.facets {
            if t.len() < k {
                continue;
            }
            for s in t.subfaces() {
                if s.len() == k {
                    present.insert(s);
                }
            }
        }
        cross_polytope_faces(self.d, k).into_iter().find(|f| !present.contains(f))
    }

    /// Applies a label map to every facet.
    pub fn map_facets<F: Fn(Face) -> Face>(&self, f: F) -> PureComplex {
        Self::from_unsorted(self.d, self.facets.iter().map(|&t| f(t)).collect())
    }
}

/// Faces of a complex grouped by cardinality; `by_size[k]` holds the
/// `(k-1)`-dimensional faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    pub by_size: Vec<Vec<Face>>,
}

impl FaceLattice {
    /// Faces of dimension `j` (empty slice when out of range).
    pub fn of_dim(&self, j: isize) -> &[Face] {
        let k = j + 1;
        if k < 0 {
            return &[];
        }
        self.by_size.get(k as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.by_size
            .get(f.len())
            .is_some_and(|g| g.binary_search(&f).is_ok())
    }
}

/// `(f_{-1}, f_0, ..., f_dim)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_j`, zero when out of range.
    pub fn get(&self, j: isize) -> u64 {
        if j < -1 {
            return 0;
        }
        self.0.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// `h(x) = f(x - 1)`, via a Taylor shift of the f-polynomial.
    pub fn h_vector(&self) -> HVector {
        // f(x) = sum_j f_{j-1} x^{D-j}; coefficients from highest power down
        // are exactly f_{-1}, f_0, ..., f_{D-1}.
        let mut shifted: Vec<i128> = Vec::with_capacity(self.0.len());
        for &c in &self.0 {
            // shifted := shifted * (x - 1) + c, coefficients high to low
            let mut next = vec![0i128; shifted.len() + 1];
            for (k, &a) in shifted.iter().enumerate() {
                next[k] += a;
                next[k + 1] -= a;
            }
            *next.last_mut().expect("nonempty") += c as i128;
            shifted = next;
        }
        HVector(shifted.into_iter().map(|v| i64::try_from(v).expect("h entry fits i64")).collect())
    }
}

/// `(h_0, ..., h_D)` with `D = dim + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn get(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Converts 1-based coordinates to a color mask.
pub fn coord_mask(coords: &[usize], d: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &c in coords {
        if c == 0 || c > d {
            return Err(Error::Parameter(format!("color {c} not in [{d}]")));
        }
        mask |= 1 << (c - 1);
    }
    Ok(mask)
}
