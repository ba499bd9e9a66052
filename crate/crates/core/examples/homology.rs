//! Integral homology of B(i,d) and of its boundary.
//!
//!     cargo run --release --example homology -- 1 5

use xpol::homology::{reduced_homology, unreduced_betti};
use xpol::{build_b, build_boundary, BidParams};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (1, 4),
    };
    let p = BidParams::new(i, d)?;
    println!("reduced homology of B({i},{d}):");
    for g in reduced_homology(&build_b(p))? {
        println!("  H~_{} = Z^{} torsion {:?}", g.degree, g.rank, g.torsion);
    }
    if i <= d as isize - 2 {
        let t = build_boundary(p)?;
        println!("Betti numbers of the boundary: {:?}", unreduced_betti(&t)?);
    }
    Ok(())
}
