//! The equality case of the Sparla inequality on the boundary of B(i,2r+2),
//! and a scan showing it is never violated there.

use xpol::enumeration::{sparla_check, sparla_counterexample_report};
use xpol::{build_boundary, BidParams};

fn main() -> xpol::Result<()> {
    let report = sparla_counterexample_report(2, 0)?;
    println!(
        "r = 2, i = 0, {} vertices: lhs {} rhs {}, 2-skeleton present {:?}, missing face {:?}",
        report.vertices, report.sparla.lhs, report.sparla.rhs, report.sparla.skeleton_present, report.missing_face
    );
    for r in 1..=3u64 {
        let d = 2 * r as usize + 2;
        for i in 0..=d as isize - 2 {
            let chi = build_boundary(BidParams::new(i, d)?)?.euler_characteristic()?;
            let s = sparla_check(chi, r, d as u64)?;
            println!("r = {r} boundary of B({i},{d}): chi {chi:>4}  {} <= {}  {}", s.lhs, s.rhs, s.holds);
        }
    }
    Ok(())
}
