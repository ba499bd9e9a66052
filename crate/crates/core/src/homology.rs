//! Reduced integral homology from boundary matrices.
//!
//! The chain complex is augmented: `∂_0` sends every vertex to the empty
//! face, so the groups computed here are reduced homology directly.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{FaceLattice, PureComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::snf::{smith_normal_form, SnfResult, SparseMatrix};

/// `∂_j`: rows are the `(j-1)`-faces, columns the `j`-faces, both sorted
/// canonically. The coefficient of `σ - v` in `∂σ` is `(-1)^t` where `t` is
/// the position of `v` in `σ` ordered by coordinate.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    pub matrix: SparseMatrix,
}

fn boundary_from_lattice(lattice: &FaceLattice, j: isize) -> BoundaryMatrix {
    let rows = lattice.of_dim(j - 1).to_vec();
    let cols = lattice.of_dim(j).to_vec();
    let index: HashMap<Face, usize> = rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut matrix = SparseMatrix::zeros(rows.len(), cols.len());
    for (c, sigma) in cols.iter().enumerate() {
        for (t, ridge) in sigma.ridges().enumerate() {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            matrix.set(index[&ridge], c, BigInt::from(sign));
        }
    }
    BoundaryMatrix { rows, cols, matrix }
}

pub fn boundary_matrix(k: &PureComplex, j: isize) -> Result<BoundaryMatrix> {
    let dim = k.dim().ok_or_else(|| Error::Parameter("void complex".into()))?;
    if j < 0 || j > dim {
        return Err(Error::Parameter(format!("boundary degree {j} outside 0..={dim}")));
    }
    Ok(boundary_from_lattice(&k.enumerate_faces()?, j))
}

/// `H̃_degree ≅ Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: isize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology in degrees `0..=dim` (degree `-1` only for `{∅}`).
pub fn reduced_homology(k: &PureComplex) -> Result<Vec<HomologyGroup>> {
    let dim = k.dim().ok_or_else(|| Error::Parameter("homology of the void complex".into()))?;
    if dim < 0 {
        return Ok(vec![HomologyGroup { degree: -1, rank: 1, torsion: Vec::new() }]);
    }
    let lattice = k.enumerate_faces()?;
    // snf[j] is the Smith form of ∂_j, j = 0..=dim
    let snf: Vec<SnfResult> = (0..=dim)
        .into_par_iter()
        .map(|j| smith_normal_form(&boundary_from_lattice(&lattice, j).matrix))
        .collect();
    let rank_of = |j: isize| -> usize {
        if j < 0 || j > dim {
            0
        } else {
            snf[j as usize].rank
        }
    };
    (0..=dim)
        .map(|j| {
            let f = lattice.of_dim(j).len();
            let rank = f - rank_of(j) - rank_of(j + 1);
            let torsion = if j < dim {
                snf[(j + 1) as usize]
                    .torsion()
                    .iter()
                    .map(|t| u64::try_from(t).map_err(|_| Error::Parameter(format!("torsion {t} exceeds u64"))))
                    .collect::<Result<Vec<_>>>()?
            } else {
                Vec::new()
            };
            Ok(HomologyGroup { degree: j, rank, torsion })
        })
        .collect()
}

/// Reduced Betti numbers `β_0..β_dim` (rational ranks equal the free ranks).
pub fn betti(k: &PureComplex) -> Result<Vec<usize>> {
    Ok(reduced_homology(k)?.into_iter().filter(|g| g.degree >= 0).map(|g| g.rank).collect())
}

/// Unreduced Betti numbers: `β_0` gains one.
pub fn unreduced_betti(k: &PureComplex) -> Result<Vec<usize>> {
    let mut b = betti(k)?;
    if let Some(b0) = b.first_mut() {
        *b0 += 1;
    }
    Ok(b)
}

/// `β_j` for any `j >= -1`; `β_{-1}` is 1 exactly for `{∅}`.
pub fn reduced_betti_at(k: &PureComplex, j: isize) -> Result<usize> {
    Ok(reduced_homology(k)?.iter().find(|g| g.degree == j).map_or(0, |g| g.rank))
}

/// `χ = Σ_{j>=0} (-1)^j f_j`.
pub fn euler_char(k: &PureComplex) -> Result<i64> {
    k.euler_characteristic()
}
