//! Shelling verification, the switch-set shelling of vertex stars in
//! `B(i,d)`, and the Danaraj–Klee ball/sphere test.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::PureComplex;
use crate::crosspoly::{build_b, prec_compare, swel, switch_set_of, BidParams};
use crate::error::{Error, Result};
use crate::face::{Face, VertexLabel};

/// A facet order together with the restriction face of each facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    pub facets: Vec<Face>,
    pub restrictions: Vec<Face>,
}

/// Why an order failed to be a shelling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingFailure {
    /// 0-based position of the offending facet.
    pub index: usize,
    pub facet: String,
    /// Minimal faces of the new-face set (empty when nothing is new).
    pub minimal_new_faces: Vec<String>,
}

/// Checks `order` against the definition: each facet must add a face set
/// with a unique minimal element. Returns the restrictions on success.
///
/// The outer `Result` reports misuse (not a permutation of the facets); the
/// inner one reports a non-shelling.
pub fn verify_shelling(
    k: &PureComplex,
    order: &[Face],
) -> Result<std::result::Result<Vec<Face>, ShellingFailure>> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    let before = sorted.len();
    sorted.dedup();
    if sorted.len() != before {
        return Err(Error::NotAPermutation("repeated facet".into()));
    }
    if sorted != k.facets() {
        return Err(Error::NotAPermutation(format!(
            "{} facets given, complex has {}",
            order.len(),
            k.num_facets()
        )));
    }

    let mut covered: HashSet<Face> = HashSet::new();
    let mut restrictions = Vec::with_capacity(order.len());
    for (index, &tau) in order.iter().enumerate() {
        let new: Vec<Face> = tau.subfaces().filter(|s| !covered.contains(s)).collect();
        // new faces form an up-set of 2^tau, so a new face is minimal iff
        // all of its ridges are already covered
        let minimal: Vec<Face> = new
            .iter()
            .copied()
            .filter(|s| s.ridges().all(|r| covered.contains(&r)))
            .collect();
        if minimal.len() != 1 {
            let mut minimal = minimal;
            minimal.sort();
            return Ok(Err(ShellingFailure {
                index,
                facet: tau.to_string(),
                minimal_new_faces: minimal.iter().map(Face::to_string).collect(),
            }));
        }
        restrictions.push(minimal[0]);
        covered.extend(new);
    }
    Ok(Ok(restrictions))
}

/// Facets of `star(apex)` in `B(i,d)` sorted by `≺` on switch sets, with
/// `SwEl(τ)` as the claimed restriction of each.
pub fn star_shelling(p: BidParams, apex: VertexLabel) -> Result<ShellingOrder> {
    if p.i < 0 {
        return Err(Error::Parameter("B(-1,d) is void".into()));
    }
    if apex.coord != p.d {
        return Err(Error::Parameter(format!("apex must be x{0} or y{0}", p.d)));
    }
    let b = build_b(p);
    let star = b.star(Face::from_labels([apex])?)?;
    let mut keyed = star
        .facets()
        .iter()
        .map(|&t| Ok((switch_set_of(t, p.d)?, t)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| prec_compare(a.0, b.0));
    let facets: Vec<Face> = keyed.into_iter().map(|(_, t)| t).collect();
    let restrictions = facets.iter().map(|&t| swel(t, p.d)).collect::<Result<Vec<_>>>()?;
    Ok(ShellingOrder { facets, restrictions })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BallOrSphere {
    Ball,
    Sphere,
    NotApplicable,
}

/// Shellable with every ridge in at most two facets gives a ball (some
/// ridge free) or a sphere (none free).
pub fn danaraj_klee(k: &PureComplex, order: &[Face]) -> BallOrSphere {
    match verify_shelling(k, order) {
        Ok(Ok(_)) => {}
        _ => return BallOrSphere::NotApplicable,
    }
    let degrees = k.ridge_degrees();
    if degrees.values().any(|&n| n > 2) {
        BallOrSphere::NotApplicable
    } else if degrees.values().all(|&n| n == 2) {
        BallOrSphere::Sphere
    } else {
        BallOrSphere::Ball
    }
}
