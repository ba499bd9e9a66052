//! The symmetry group of B(i,d): order, transitivity and relations.
//!
//!     cargo run --example symmetry -- 3 7

use xpol::symmetry::{group_closure, Generator};
use xpol::{build_b, BidParams};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (2, 5),
    };
    let b = build_b(BidParams::new(i, d)?);
    let gens: &[Generator] =
        if i % 2 == 0 { &[Generator::D, Generator::E, Generator::R] } else { &[Generator::E, Generator::RPrime] };
    let report = group_closure(gens, d, Some(&b), None)?;
    println!("generators {:?} on B({i},{d})", report.generators);
    println!("order {} (4d = {}), vertex-transitive {}", report.order, 4 * d, report.vertex_transitive);
    println!("preserves B: {:?}", report.preserves_complex);
    for r in &report.relations {
        println!("  {:<14} {}", r.relation, r.holds);
    }
    Ok(())
}
