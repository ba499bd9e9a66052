//! Pseudomanifold and manifold checks.
//!
//! Two independent routes: a local one (ridge degrees plus the homology of
//! every face link) and the inductive certificate for `B(i,d)`, in which the
//! stars of `x_d` and `y_d` are shown to be balls meeting along
//! `B(i-1,d-1)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::PureComplex;
use crate::crosspoly::{build_b, BidParams};
use crate::error::{Error, Result};
use crate::face::{Face, VertexLabel};
use crate::homology::reduced_homology;
use crate::shelling::{danaraj_klee, star_shelling, BallOrSphere};

/// Outcome of a ridge-degree test; `offending_ridge` is the first bad ridge
/// in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RidgeCheck {
    pub closed: bool,
    pub passed: bool,
    pub ridges: usize,
    pub free_ridges: usize,
    pub offending_ridge: Option<String>,
    pub offending_degree: Option<usize>,
}

/// Every ridge in exactly two facets (`closed`) or in at most two.
pub fn ridge_check(k: &PureComplex, closed: bool) -> RidgeCheck {
    let mut degrees = k.ridge_degrees();
    // any set of points is a closed 0-manifold
    if k.dim() == Some(0) {
        degrees.clear();
    }
    let bad = degrees.iter().find(|(_, &n)| if closed { n != 2 } else { n > 2 });
    RidgeCheck {
        closed,
        passed: bad.is_none(),
        ridges: degrees.len(),
        free_ridges: degrees.values().filter(|&&n| n == 1).count(),
        offending_ridge: bad.map(|(r, _)| r.to_string()),
        offending_degree: bad.map(|(_, &n)| n),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkCheck {
    pub passed: bool,
    pub faces_checked: usize,
    /// First face (canonical order) whose link is neither a homology ball
    /// nor a homology sphere of the right dimension.
    pub offending_face: Option<String>,
}

/// Whether `k` has the homology of a point (`sphere == false`) or of the
/// sphere of its own dimension.
fn homology_ball_or_sphere(k: &PureComplex, sphere: bool) -> Result<bool> {
    let dim = k.dim().ok_or_else(|| Error::Parameter("void link".into()))?;
    Ok(reduced_homology(k)?
        .iter()
        .all(|g| g.torsion.is_empty() && g.rank == usize::from(sphere && g.degree == dim)))
}

/// Links of all nonempty faces are homology spheres (`closed`) or homology
/// balls or spheres of dimension `dim - |σ|`.
pub fn link_check(k: &PureComplex, closed: bool) -> Result<LinkCheck> {
    let lattice = k.enumerate_faces()?;
    let faces: Vec<Face> = lattice.iter().filter(|f| !f.is_empty()).collect();
    let results: Vec<Result<bool>> = faces
        .par_iter()
        .map(|&sigma| {
            let link = k.link(sigma)?;
            let sphere = homology_ball_or_sphere(&link, true)?;
            Ok(sphere || (!closed && homology_ball_or_sphere(&link, false)?))
        })
        .collect();
    let mut offending = None;
    for (sigma, ok) in faces.iter().zip(results) {
        if !ok? {
            offending = Some(sigma.to_string());
            break;
        }
    }
    Ok(LinkCheck { passed: offending.is_none(), faces_checked: faces.len(), offending_face: offending })
}

/// One level of the inductive certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub i: isize,
    pub d: usize,
    pub star_x: BallOrSphere,
    pub star_y: BallOrSphere,
    pub links_meet_in_smaller_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldCertificate {
    pub i: isize,
    pub d: usize,
    pub passed: bool,
    /// `B(0, d-i)` is two disjoint simplices.
    pub base_ok: bool,
    pub steps: Vec<CertificateStep>,
}

/// Face sets of `lk x_d ∩ lk y_d` in `B(i,d)` and of `B(i-1,d-1)`, the
/// latter placed in ambient dimension `d`.
pub fn links_intersection(p: BidParams) -> Result<(BTreeSet<Face>, BTreeSet<Face>)> {
    if p.i < 1 {
        return Err(Error::Parameter(format!("links intersection needs i >= 1, got {}", p.i)));
    }
    let b = build_b(p);
    let lx: BTreeSet<Face> = b.link(Face::from_labels([VertexLabel::x(p.d)])?)?.enumerate_faces()?.iter().collect();
    let ly: BTreeSet<Face> = b.link(Face::from_labels([VertexLabel::y(p.d)])?)?.enumerate_faces()?.iter().collect();
    let meet = lx.intersection(&ly).copied().collect();
    let smaller = build_b(BidParams::new(p.i - 1, p.d - 1)?).with_ambient(p.d)?;
    Ok((meet, smaller.enumerate_faces()?.iter().collect()))
}

fn is_two_disjoint_simplices(k: &PureComplex) -> bool {
    let f = k.facets();
    f.len() == 2 && f[0].intersection(f[1]).is_empty() && f[0].support() == f[1].support()
}

/// Runs the induction on `i` down to the disjoint-simplices base case.
pub fn manifold_certificate(p: BidParams) -> Result<ManifoldCertificate> {
    if p.i < 0 {
        return Err(Error::Parameter("B(-1,d) is void".into()));
    }
    let mut steps = Vec::new();
    let mut cur = p;
    while cur.i > 0 {
        let b = build_b(cur);
        let mut shapes = [BallOrSphere::NotApplicable; 2];
        for (slot, apex) in shapes.iter_mut().zip([VertexLabel::x(cur.d), VertexLabel::y(cur.d)]) {
            let order = star_shelling(cur, apex)?;
            let star = b.star(Face::from_labels([apex])?)?;
            *slot = danaraj_klee(&star, &order.facets);
        }
        let (meet, smaller) = links_intersection(cur)?;
        steps.push(CertificateStep {
            i: cur.i,
            d: cur.d,
            star_x: shapes[0],
            star_y: shapes[1],
            links_meet_in_smaller_b: meet == smaller,
        });
        cur = BidParams::new(cur.i - 1, cur.d - 1)?;
    }
    let base_ok = is_two_disjoint_simplices(&build_b(cur));
    let passed = base_ok
        && steps.iter().all(|s| {
            s.star_x == BallOrSphere::Ball && s.star_y == BallOrSphere::Ball && s.links_meet_in_smaller_b
        });
    Ok(ManifoldCertificate { i: p.i, d: p.d, passed, base_ok, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crosspoly::build_boundary;

    #[test]
    fn ridge_checks() {
        let b = build_b(BidParams::new(1, 4).unwrap());
        let open = ridge_check(&b, false);
        assert!(open.passed);
        assert_eq!(open.free_ridges, 16);
        let closed = ridge_check(&b, true);
        assert!(!closed.passed);
        assert_eq!(closed.offending_degree, Some(1));
        assert!(ridge_check(&PureComplex::cross_polytope(4), true).passed);
    }

    #[test]
    fn removed_facet_breaks_closedness() {
        let t = build_boundary(BidParams::new(1, 4).unwrap()).unwrap();
        let fewer = PureComplex::new(4, t.facets()[1..].iter().copied()).unwrap();
        let r = ridge_check(&fewer, true);
        assert!(!r.passed);
        assert!(t.facets()[0].ridges().any(|x| Some(x.to_string()) == r.offending_ridge));
    }

    #[test]
    fn links_of_torus_and_b() {
        let t = build_boundary(BidParams::new(1, 4).unwrap()).unwrap();
        assert!(link_check(&t, true).unwrap().passed);
        let b = build_b(BidParams::new(2, 5).unwrap());
        assert!(link_check(&b, false).unwrap().passed);
        assert!(!link_check(&b, true).unwrap().passed);
    }

    #[test]
    fn bowtie_fails_link_check() {
        // two triangles meeting in a vertex: the link of that vertex is two points
        let k = PureComplex::new(
            3,
            ["x1 x2 x3", "x1 y2 y3"].iter().map(|s| s.parse::<Face>().unwrap()),
        )
        .unwrap();
        assert!(ridge_check(&k, false).passed);
        let lc = link_check(&k, false).unwrap();
        assert_eq!(lc.offending_face.as_deref(), Some("{x1}"));
    }

    #[test]
    fn certificate() {
        for d in 2..=6 {
            for i in 0..d as isize {
                let c = manifold_certificate(BidParams::new(i, d).unwrap()).unwrap();
                assert!(c.passed, "B({i},{d})");
                assert_eq!(c.steps.len(), i as usize);
            }
        }
    }
}
