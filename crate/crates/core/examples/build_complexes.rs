//! Builds B(i,d), its complement and its boundary, and prints their sizes.
//!
//!     cargo run --example build_complexes -- 2 6

use xpol::crosspoly::facet_count_formula;
use xpol::io::to_text;
use xpol::{build_b, build_boundary, build_complement, BidParams};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (1, 4),
    };
    let p = BidParams::new(i, d)?;
    let b = build_b(p);
    let c = build_complement(p);
    println!("B({i},{d}): {} facets (formula {})", b.num_facets(), facet_count_formula(p));
    println!("complement: {} facets", c.num_facets());
    println!("f-vector of B: {:?}", b.f_vector()?.0);
    if i <= d as isize - 2 {
        let t = build_boundary(p)?;
        println!("boundary: {} facets of dimension {}", t.num_facets(), t.dim().unwrap());
        if t.num_facets() <= 32 {
            print!("{}", to_text(&t));
        }
    }
    Ok(())
}
