//! Verification suites over `B(i,d)` and `∂B(i,d)`, and parameter sweeps.
//!
//! Every check carries an anchor string naming the claim it tests. Suites
//! run concurrently; results are collected in input order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::PureComplex;
use crate::crosspoly::{
    build_b, build_boundary, build_complement, complement_iso, facet_count_formula, is_face_of_b, switch_set_of,
    BidParams,
};
use crate::enumeration::{
    flag_h_prime, g_boundary_brute, g_boundary_closed_form, h_closed_form, ns_identity_check, sparla_check,
};
use crate::error::{Error, Result};
use crate::face::{cross_polytope_faces, full_mask, Face, VertexLabel};
use crate::homology::{reduced_homology, unreduced_betti, HomologyGroup};
use crate::manifold::{link_check, manifold_certificate, ridge_check};
use crate::shelling::{danaraj_klee, star_shelling, verify_shelling, BallOrSphere};
use crate::symmetry::{closure, is_centrally_symmetric, orbit, relations, Generator, VertexPermutation};

/// Largest `d` for which suites needing homology or every face link run.
pub const HOMOLOGY_D_LIMIT: usize = 8;
/// Largest `d` for the counting sweep.
pub const COUNTING_D_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Skeleton,
    Symmetry,
    Complement,
    Shelling,
    Manifold,
    Homology,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Skeleton, Suite::Symmetry, Suite::Complement, Suite::Shelling, Suite::Manifold, Suite::Homology];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Skeleton => "skeleton",
            Suite::Symmetry => "symmetry",
            Suite::Complement => "complement",
            Suite::Shelling => "shelling",
            Suite::Manifold => "manifold",
            Suite::Homology => "homology",
            Suite::All => "all",
        }
    }

    fn expand(suites: &[Suite]) -> Vec<Suite> {
        let set: BTreeSet<Suite> = suites
            .iter()
            .flat_map(|&s| if s == Suite::All { Suite::EACH.to_vec() } else { vec![s] })
            .collect();
        set.into_iter().collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: Value,
}

fn check(name: &str, anchor: &str, passed: bool, detail: Value) -> Check {
    Check { name: name.to_string(), anchor: anchor.to_string(), passed, detail }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        SuiteReport { suite: suite.name().to_string(), passed: checks.iter().all(|c| c.passed), checks }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub source: String,
    pub i: Option<isize>,
    pub d: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.suites.iter().flat_map(|s| &s.checks).find(|c| c.name == name)
    }
}

fn homology_json(groups: &[HomologyGroup]) -> Value {
    serde_json::to_value(groups).expect("homology serializes")
}

fn face_strings(faces: impl IntoIterator<Item = Face>) -> Vec<String> {
    faces.into_iter().map(|f| f.to_string()).collect()
}

/// All faces of the cross-polytope, including `∅`.
pub fn all_cross_polytope_faces(d: usize) -> Vec<Face> {
    (0..=d).flat_map(|k| cross_polytope_faces(d, k)).collect()
}

fn has_boundary(p: BidParams) -> bool {
    p.i >= 0 && p.i <= p.d as isize - 2
}

fn skeleton_suite(p: BidParams) -> Result<Vec<Check>> {
    let b = build_b(p);
    let i = p.i as usize;
    let missing = b.missing_skeleton_face(i);
    let mut out = vec![check(
        "b_contains_i_skeleton",
        "B(i,d) contains the entire i-skeleton of the cross-polytope",
        missing.is_none(),
        json!({ "j": i, "missing_face": missing.map(|f| f.to_string()) }),
    )];

    let lattice = b.enumerate_faces()?;
    let disagree = all_cross_polytope_faces(p.d).into_iter().find(|&s| is_face_of_b(s, p) != lattice.contains(s));
    out.push(check(
        "small_faces_criterion",
        "a face σ of the cross-polytope lies in B(i,d) iff the switch set of its filling has at most i elements",
        disagree.is_none(),
        json!({ "faces_tested": 3usize.pow(p.d as u32), "disagreement": disagree.map(|f| f.to_string()) }),
    ));

    if has_boundary(p) {
        let bd = build_boundary(p)?;
        let j = p.i.min(p.d as isize - p.i - 2) as usize;
        let missing = bd.missing_skeleton_face(j);
        out.push(check(
            "boundary_contains_skeleton",
            "∂B(i,d) contains the entire min{i,d-i-2}-skeleton of the cross-polytope",
            missing.is_none(),
            json!({ "j": j, "missing_face": missing.map(|f| f.to_string()) }),
        ));
        if 2 <= p.i && p.i <= p.d as isize - 4 {
            let missing = bd.missing_skeleton_face(2);
            out.push(check(
                "boundary_simply_connected",
                "for 2 <= i <= d-4, ∂B(i,d) contains the 2-skeleton of the cross-polytope and so is simply connected",
                missing.is_none(),
                json!({ "missing_face": missing.map(|f| f.to_string()) }),
            ));
        }
    }
    Ok(out)
}

/// `4d`, except that `E = R` for `d <= 2` halves `⟨D,E,R⟩`.
pub fn expected_group_order(gens: &[Generator], d: usize) -> usize {
    if gens.contains(&Generator::R) && d <= 2 {
        2 * d
    } else {
        4 * d
    }
}

fn group_check(name: &str, anchor: &str, perms: &[VertexPermutation], d: usize, expected: usize) -> Result<Check> {
    let elements = closure(perms, d, 40 * d)?;
    let orbit_x1 = orbit(perms, VertexLabel::x(1), d);
    let transitive = orbit_x1.len() == 2 * d;
    Ok(check(
        name,
        anchor,
        elements.len() == expected && transitive,
        json!({
            "order": elements.len(),
            "expected_order": expected,
            "vertex_transitive": transitive,
            "orbit_of_x1": orbit_x1.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        }),
    ))
}

fn symmetry_suite(p: BidParams) -> Result<Vec<Check>> {
    let d = p.d;
    let b = build_b(p);
    let gen = |g| VertexPermutation::generator(g, d);
    let preserves = |g: &VertexPermutation, k: &PureComplex| crate::symmetry::apply(g, k) == *k;
    let mut out = vec![check(
        "b_centrally_symmetric",
        "B(i,d) is centrally symmetric",
        is_centrally_symmetric(&b),
        Value::Null,
    )];

    let (dd, e) = (gen(Generator::D)?, gen(Generator::E)?);
    out.push(check(
        "d_e_preserve_b",
        "D and E are involutions on B(i,d)",
        preserves(&dd, &b) && preserves(&e, &b),
        json!({ "D": preserves(&dd, &b), "E": preserves(&e, &b) }),
    ));

    let family: Vec<Generator> = if p.i % 2 == 0 {
        vec![Generator::D, Generator::E, Generator::R]
    } else {
        vec![Generator::E, Generator::RPrime]
    };
    let rot = if p.i % 2 == 0 { Generator::R } else { Generator::RPrime };
    let rot_perm = gen(rot)?;
    out.push(check(
        "rotation_preserves_b",
        "R acts on the facets of B(i,d) for even i, and R' for odd i",
        preserves(&rot_perm, &b),
        json!({ "generator": rot.name() }),
    ));

    let perms = family.iter().map(|&g| gen(g)).collect::<Result<Vec<_>>>()?;
    let names: Vec<&str> = family.iter().map(|g| g.name()).collect();
    let mut group = group_check(
        "group_on_b",
        "B(i,d) admits a vertex-transitive action of a group of order 4d",
        &perms,
        d,
        expected_group_order(&family, d),
    )?;
    group.detail["generators"] = json!(names);
    out.push(group);

    let rels = relations(&family, d)?;
    out.push(check(
        "group_relations",
        "ERE = R^-1 with D commuting with E and R; ER'E = R'^-1 with R'^d = D",
        rels.iter().all(|r| r.holds),
        serde_json::to_value(&rels)?,
    ));

    if has_boundary(p) {
        let bd = build_boundary(p)?;
        out.push(check(
            "boundary_centrally_symmetric",
            "∂B(i,d) is a centrally symmetric 2d-vertex complex",
            is_centrally_symmetric(&bd) && bd.enumerate_faces()?.of_dim(0).len() == 2 * d,
            json!({ "vertices": bd.enumerate_faces()?.of_dim(0).len() }),
        ));
        let inherited = perms.iter().all(|g| preserves(g, &bd));
        out.push(check(
            "symmetries_preserve_boundary",
            "every symmetry of B(i,d) maps ∂B(i,d) to itself",
            inherited,
            json!({ "generators": names }),
        ));

        // the complement is A(B(d-i-2,d)), so A conjugates its symmetries
        // into symmetries of the common boundary
        let dual = p.dual()?;
        let a = gen(Generator::A)?;
        let dual_family: Vec<Generator> = if dual.i % 2 == 0 {
            vec![Generator::D, Generator::E, Generator::R]
        } else {
            vec![Generator::E, Generator::RPrime]
        };
        let conj = dual_family
            .iter()
            .map(|&g| Ok(a.compose(&gen(g)?).compose(&a)))
            .collect::<Result<Vec<_>>>()?;
        let conj_names: Vec<String> = dual_family.iter().map(|g| format!("A{}A", g.name())).collect();
        out.push(check(
            "conjugated_symmetries_preserve_boundary",
            "A conjugates the symmetries of B(d-i-2,d) into symmetries of ∂B(i,d)",
            conj.iter().all(|g| preserves(g, &bd)),
            json!({ "generators": conj_names }),
        ));
        let mut group = group_check(
            "conjugated_group_on_boundary",
            "∂B(i,d) admits a vertex-transitive group of order 4d coming from the complement",
            &conj,
            d,
            expected_group_order(&dual_family, d),
        )?;
        group.detail["generators"] = json!(conj_names);
        out.push(group);
    }
    Ok(out)
}

fn complement_suite(p: BidParams) -> Result<Vec<Check>> {
    let d = p.d;
    let b = build_b(p);
    let c = build_complement(p);
    let dual = p.dual()?;
    let image: BTreeSet<Face> = build_b(dual).facets().iter().map(|&t| complement_iso(t)).collect();
    let target: BTreeSet<Face> = c.facets().iter().copied().collect();
    let mut out = vec![check(
        "complement_isomorphism",
        "A maps the facets of B(d-i-2,d) onto the facets of the complement of B(i,d)",
        image == target,
        json!({ "dual_i": dual.i, "facets": target.len(), "image": image.len() }),
    )];

    let all = PureComplex::cross_polytope(d);
    let full = full_mask(d.saturating_sub(1));
    let bad = all.facets().iter().copied().find(|&t| {
        let s = switch_set_of(t, d).expect("facet").mask();
        let sa = switch_set_of(complement_iso(t), d).expect("facet").mask();
        complement_iso(complement_iso(t)) != t || sa != (!s & full)
    });
    out.push(check(
        "a_complements_switch_sets",
        "A is an involution with S(A(τ)) = [d-1] - S(τ)",
        bad.is_none(),
        json!({ "counterexample": bad.map(|f| f.to_string()) }),
    ));

    out.push(check(
        "facet_counts_sum",
        "B(i,d) and its complement split the 2^d facets of the cross-polytope",
        b.num_facets() + c.num_facets() == 1usize << d,
        json!({ "b": b.num_facets(), "complement": c.num_facets() }),
    ));

    if has_boundary(p) {
        let fb: BTreeSet<Face> = b.enumerate_faces()?.iter().collect();
        let fc: BTreeSet<Face> = c.enumerate_faces()?.iter().collect();
        let meet: BTreeSet<Face> = fb.intersection(&fc).copied().collect();
        let bd = build_boundary(p)?;
        let fbd: BTreeSet<Face> = bd.enumerate_faces()?.iter().collect();
        let from_c = c.boundary_complex()?;
        out.push(check(
            "boundary_is_intersection",
            "∂B(i,d) is the intersection of B(i,d) and its complement",
            meet == fbd && from_c == bd,
            json!({ "faces": fbd.len(), "intersection": meet.len(), "complement_boundary_equal": from_c == bd }),
        ));
    }
    Ok(out)
}

fn shelling_suite(p: BidParams) -> Result<Vec<Check>> {
    let b = build_b(p);
    let mut out = Vec::new();
    for apex in [VertexLabel::x(p.d), VertexLabel::y(p.d)] {
        let order = star_shelling(p, apex)?;
        let star = b.star(Face::from_labels([apex])?)?;
        let verified = verify_shelling(&star, &order.facets)?;
        let (ok, failure) = match &verified {
            Ok(r) => (*r == order.restrictions, None),
            Err(f) => (false, Some(f.clone())),
        };
        out.push(check(
            &format!("star_{apex}_shelling"),
            "ordering the facets of the star of x_d by ≺ on switch sets is a shelling with restrictions SwEl(τ)",
            ok,
            json!({
                "facets": order.facets.len(),
                "restrictions": face_strings(order.restrictions.iter().copied()),
                "failure": failure,
            }),
        ));
        let shape = danaraj_klee(&star, &order.facets);
        out.push(check(
            &format!("star_{apex}_ball"),
            "the star is a shellable pseudomanifold with boundary, hence a combinatorial ball",
            shape == BallOrSphere::Ball,
            json!({ "shape": shape }),
        ));
        let intervals: u64 = order.facets.iter().zip(&order.restrictions).map(|(t, r)| 1u64 << (t.len() - r.len())).sum();
        let faces: u64 = star.f_vector()?.0.iter().sum();
        out.push(check(
            &format!("star_{apex}_partition"),
            "the intervals [R(τ), τ] of a shelling partition the faces of the star",
            intervals == faces,
            json!({ "interval_sizes": intervals, "faces": faces }),
        ));
    }
    Ok(out)
}

fn expected_boundary_betti(i: usize, d: usize) -> Vec<usize> {
    // Poincaré polynomial (1 + t^i)(1 + t^(d-i-2))
    let n = d - 2;
    let mut b = vec![0usize; n + 1];
    for a in [0, i] {
        for c in [0, d - i - 2] {
            b[a + c] += 1;
        }
    }
    b
}

fn manifold_suite(p: BidParams) -> Result<Vec<Check>> {
    let b = build_b(p);
    let rc = ridge_check(&b, false);
    let mut out = vec![check(
        "b_pseudomanifold",
        "every ridge of B(i,d) lies in at most two facets",
        rc.passed,
        serde_json::to_value(&rc)?,
    )];
    let cert = manifold_certificate(p)?;
    out.push(check(
        "b_inductive_certificate",
        "the stars of x_d and y_d in B(i,d) are balls whose links meet in B(i-1,d-1), by induction on i",
        cert.passed,
        serde_json::to_value(&cert)?,
    ));
    if p.d <= HOMOLOGY_D_LIMIT {
        let lc = link_check(&b, false)?;
        out.push(check(
            "b_homology_manifold",
            "every face link of B(i,d) is a homology ball or sphere",
            lc.passed,
            serde_json::to_value(&lc)?,
        ));
    }
    if has_boundary(p) {
        let bd = build_boundary(p)?;
        let rc = ridge_check(&bd, true);
        out.push(check(
            "boundary_closed_pseudomanifold",
            "every ridge of ∂B(i,d) lies in exactly two facets",
            rc.passed,
            serde_json::to_value(&rc)?,
        ));
        if p.d <= HOMOLOGY_D_LIMIT {
            let lc = link_check(&bd, true)?;
            out.push(check(
                "boundary_homology_manifold",
                "every face link of ∂B(i,d) is a homology sphere",
                lc.passed,
                serde_json::to_value(&lc)?,
            ));
        }
    }
    Ok(out)
}

fn homology_suite(p: BidParams) -> Result<Vec<Check>> {
    let b = build_b(p);
    let mut out = Vec::new();
    if p.d <= HOMOLOGY_D_LIMIT {
        let h = reduced_homology(&b)?;
        let ok = h.iter().all(|g| g.torsion.is_empty() && g.rank == usize::from(g.degree == p.i));
        out.push(check(
            "b_homology_sphere",
            "B(i,d) has the integral homology of S^i",
            ok,
            json!({ "reduced": homology_json(&h) }),
        ));
    }
    let chi = b.reduced_euler_characteristic()?;
    let sign = if p.i % 2 == 0 { 1 } else { -1 };
    out.push(check(
        "b_reduced_euler",
        "the reduced Euler characteristic of B(i,d) is (-1)^i",
        chi == sign,
        json!({ "reduced_euler_characteristic": chi }),
    ));
    if has_boundary(p) {
        let bd = build_boundary(p)?;
        let expected = expected_boundary_betti(p.i as usize, p.d);
        let chi: i64 = expected.iter().enumerate().map(|(j, &v)| if j % 2 == 0 { v as i64 } else { -(v as i64) }).sum();
        if p.d <= HOMOLOGY_D_LIMIT {
            let h = reduced_homology(&bd)?;
            let betti = unreduced_betti(&bd)?;
            out.push(check(
                "boundary_homology",
                "∂B(i,d) has the integral homology of S^i × S^(d-i-2)",
                betti == expected && h.iter().all(|g| g.torsion.is_empty()),
                json!({ "betti": betti, "expected_betti": expected, "reduced": homology_json(&h) }),
            ));
        }
        let euler = bd.euler_characteristic()?;
        out.push(check(
            "boundary_euler",
            "the Euler characteristic of ∂B(i,d) equals that of S^i × S^(d-i-2)",
            euler == chi,
            json!({ "euler_characteristic": euler, "expected": chi }),
        ));
    }
    if p.i >= 1 {
        let (meet, smaller) = crate::manifold::links_intersection(p)?;
        out.push(check(
            "links_intersection",
            "the links of x_d and y_d in B(i,d) intersect in B(i-1,d-1)",
            meet == smaller,
            json!({ "faces": meet.len(), "expected_faces": smaller.len() }),
        ));
    }
    Ok(out)
}

fn run_suite(p: BidParams, suite: Suite) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Skeleton => skeleton_suite(p)?,
        Suite::Symmetry => symmetry_suite(p)?,
        Suite::Complement => complement_suite(p)?,
        Suite::Shelling => shelling_suite(p)?,
        Suite::Manifold => manifold_suite(p)?,
        Suite::Homology => homology_suite(p)?,
        Suite::All => unreachable!("expanded before dispatch"),
    };
    Ok(SuiteReport::new(suite, checks))
}

fn collect(source: String, i: Option<isize>, d: usize, suites: Vec<Result<SuiteReport>>) -> Result<VerifyReport> {
    let suites = suites.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { source, i, d, passed: suites.iter().all(|s| s.passed), suites })
}

/// Runs the requested suites on `B(i,d)` for `0 <= i <= d-1`.
pub fn verify_params(p: BidParams, suites: &[Suite]) -> Result<VerifyReport> {
    if p.i < 0 {
        return Err(Error::Parameter("verification needs 0 <= i <= d-1".into()));
    }
    let suites = Suite::expand(suites);
    let results: Vec<Result<SuiteReport>> = suites.par_iter().map(|&s| run_suite(p, s)).collect();
    collect(format!("B({},{})", p.i, p.d), Some(p.i), p.d, results)
}

/// What a complex read from a file is expected to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    /// A manifold with (possibly empty) boundary.
    WithBoundary,
    /// A closed manifold.
    Closed,
}

fn input_suite(k: &PureComplex, order: &[Face], expect: Expect, suite: Suite) -> Result<SuiteReport> {
    let closed = expect == Expect::Closed;
    let checks = match suite {
        Suite::Manifold => {
            let rc = ridge_check(k, closed);
            let mut checks = vec![check(
                "pseudomanifold",
                if closed {
                    "every ridge lies in exactly two facets"
                } else {
                    "every ridge lies in at most two facets"
                },
                rc.passed,
                serde_json::to_value(&rc)?,
            )];
            if k.ambient_d() <= HOMOLOGY_D_LIMIT {
                let lc = link_check(k, closed)?;
                checks.push(check(
                    "homology_manifold",
                    "every face link is a homology ball or sphere",
                    lc.passed,
                    serde_json::to_value(&lc)?,
                ));
            }
            checks
        }
        Suite::Shelling => {
            let verified = verify_shelling(k, order)?;
            let mut checks = vec![check(
                "shelling",
                "each facet meets its predecessors in a pure codimension-one complex",
                verified.is_ok(),
                match &verified {
                    Ok(r) => json!({ "restrictions": face_strings(r.iter().copied()) }),
                    Err(f) => json!({ "failure": f }),
                },
            )];
            if verified.is_ok() {
                let shape = danaraj_klee(k, order);
                checks.push(check(
                    "danaraj_klee",
                    "a shellable pseudomanifold is a ball or a sphere",
                    shape != BallOrSphere::NotApplicable,
                    json!({ "shape": shape }),
                ));
            }
            checks
        }
        Suite::Homology => {
            let h = reduced_homology(k)?;
            let from_h: i64 = h
                .iter()
                .filter(|g| g.degree >= 0)
                .map(|g| if g.degree % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
                .sum();
            let chi = k.reduced_euler_characteristic()?;
            vec![check(
                "euler_consistency",
                "the alternating sum of Betti numbers equals the alternating sum of face numbers",
                from_h == chi,
                json!({ "reduced": homology_json(&h), "reduced_euler_characteristic": chi }),
            )]
        }
        other => {
            return Err(Error::Parameter(format!("suite {other} needs --i and --d rather than an input file")));
        }
    };
    Ok(SuiteReport::new(suite, checks))
}

/// Suites that make sense for an arbitrary complex: `manifold`, `shelling`
/// (using `order`, the facets in file order) and `homology`. `all` expands
/// to these three.
pub fn verify_complex(
    source: &str,
    k: &PureComplex,
    order: &[Face],
    expect: Expect,
    suites: &[Suite],
) -> Result<VerifyReport> {
    if k.is_void() {
        return Err(Error::Parameter("input has no facets".into()));
    }
    let suites: Vec<Suite> = if suites.contains(&Suite::All) {
        vec![Suite::Shelling, Suite::Manifold, Suite::Homology]
    } else {
        Suite::expand(suites)
    };
    let results: Vec<Result<SuiteReport>> = suites.par_iter().map(|&s| input_suite(k, order, expect, s)).collect();
    collect(source.to_string(), None, k.ambient_d(), results)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// Facet-count formula only.
    Counting,
    /// Every suite plus the enumeration identities.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub d: usize,
    pub i: Option<isize>,
    pub check: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub d_max: usize,
    pub suites: String,
    pub total: usize,
    pub failed: usize,
    pub passed: bool,
    pub rows: Vec<SweepRow>,
}

fn row(d: usize, i: Option<isize>, check: &str, passed: bool) -> SweepRow {
    SweepRow { d, i, check: check.to_string(), passed }
}

fn counting_rows(d: usize, i: isize) -> Result<Vec<SweepRow>> {
    let p = BidParams::new(i, d)?;
    let n = build_b(p).num_facets() as u128;
    let mut rows = vec![row(d, Some(i), "facet_count", n == facet_count_formula(p))];
    let special = match i {
        0 => Some(2),
        1 => Some(2 * d as u128),
        _ if i == d as isize - 2 => Some((1u128 << d) - 2),
        _ if i == d as isize - 1 => Some(1u128 << d),
        _ => None,
    };
    if let Some(expected) = special {
        rows.push(row(d, Some(i), "facet_count_special_case", n == expected));
    }
    Ok(rows)
}

fn enumeration_rows(d: usize, i: isize) -> Result<Vec<SweepRow>> {
    let p = BidParams::new(i, d)?;
    let b = build_b(p);
    let mut rows = vec![row(d, Some(i), "h_numbers", h_closed_form(i, d)?.values == b.h_vector()?.0)];
    if has_boundary(p) && i <= (d as isize - 2) / 2 {
        rows.push(row(d, Some(i), "g_numbers", g_boundary_closed_form(i, d)? == g_boundary_brute(i, d)?));
    }
    if has_boundary(p) {
        rows.push(row(d, Some(i), "ns_identity", ns_identity_check(i, d)?));
    }
    let flag_ok = (0..1u32 << d).all(|s| {
        flag_h_prime(&b, s).map(|v| v == usize::from(s.count_ones() as isize <= i + 1)).unwrap_or(false)
    });
    rows.push(row(d, Some(i), "flag_h_prime", flag_ok));
    Ok(rows)
}

fn sparla_rows(r: u64) -> Result<Vec<SweepRow>> {
    let d = (2 * r + 2) as usize;
    (0..=2 * r as isize)
        .map(|i| {
            let m = build_boundary(BidParams::new(i, d)?)?;
            let rep = sparla_check(m.euler_characteristic()?, r, d as u64)?;
            let equality_expected = (i as u64 + r) % 2 == 0;
            Ok(row(d, Some(i), &format!("sparla_r{r}"), rep.holds && rep.equality == equality_expected))
        })
        .collect()
}

/// Runs the chosen sweep for every `d <= d_max` and every `0 <= i <= d-1`.
pub fn sweep(d_max: usize, kind: SweepKind) -> Result<SweepReport> {
    let limit = match kind {
        SweepKind::Counting => COUNTING_D_LIMIT,
        SweepKind::All => HOMOLOGY_D_LIMIT,
    };
    if d_max == 0 || d_max > limit {
        return Err(Error::Parameter(format!("d-max must lie in 1..={limit}, got {d_max}")));
    }
    let params: Vec<(usize, isize)> = (1..=d_max).flat_map(|d| (0..d as isize).map(move |i| (d, i))).collect();
    let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<SweepRow>> + Send + Sync>> = Vec::new();
    for &(d, i) in &params {
        jobs.push(Box::new(move || counting_rows(d, i)));
    }
    if kind == SweepKind::All {
        for &(d, i) in &params {
            jobs.push(Box::new(move || {
                let rep = verify_params(BidParams::new(i, d)?, &[Suite::All])?;
                let mut rows: Vec<SweepRow> =
                    rep.suites.iter().map(|s| row(d, Some(i), &format!("suite_{}", s.suite), s.passed)).collect();
                rows.extend(enumeration_rows(d, i)?);
                Ok(rows)
            }));
        }
        for r in (1..=3u64).filter(|r| (2 * r + 2) as usize <= d_max) {
            jobs.push(Box::new(move || sparla_rows(r)));
        }
    }
    let rows = jobs.par_iter().map(|job| job()).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect::<Vec<_>>();
    let failed = rows.iter().filter(|r| !r.passed).count();
    Ok(SweepReport {
        d_max,
        suites: match kind {
            SweepKind::Counting => "counting",
            SweepKind::All => "all",
        }
        .to_string(),
        total: rows.len(),
        failed,
        passed: failed == 0,
        rows,
    })
}
