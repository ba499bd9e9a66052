//! Shelling of the star of x_d ordered by switch sets, with restrictions.
//!
//!     cargo run --example shelling -- 2 4

use xpol::crosspoly::switch_set_of;
use xpol::shelling::{danaraj_klee, star_shelling, verify_shelling};
use xpol::{build_b, BidParams, Face, VertexLabel};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (2, 4),
    };
    let p = BidParams::new(i, d)?;
    let apex = VertexLabel::x(d);
    let order = star_shelling(p, apex)?;
    println!("{:<28} {:<14} restriction", "facet", "switch set");
    for (t, r) in order.facets.iter().zip(&order.restrictions) {
        println!("{:<28} {:<14} {}", t.to_string(), switch_set_of(*t, d)?.to_string(), r);
    }
    let star = build_b(p).star(Face::from_labels([apex])?)?;
    let verified = verify_shelling(&star, &order.facets)?;
    println!("shelling verified: {}", verified.as_ref() == Ok(&order.restrictions));
    println!("Danaraj-Klee: {:?}", danaraj_klee(&star, &order.facets));
    Ok(())
}
