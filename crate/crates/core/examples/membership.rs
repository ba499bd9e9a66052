//! Face membership through the filling facet.
//!
//!     cargo run --example membership -- "x1 y3 x5" 6

use xpol::crosspoly::{fill, is_face_of_b, switch_set_of, Word};
use xpol::{BidParams, Face};

fn main() -> xpol::Result<()> {
    let mut args = std::env::args().skip(1);
    let sigma: Face = args.next().as_deref().unwrap_or("x1 y3 x5").parse()?;
    let d: usize = args.next().map_or(6, |s| s.parse().expect("integer d"));
    sigma.check_ambient(d)?;

    let f = fill(sigma, d);
    let s = switch_set_of(f, d)?;
    println!("face {sigma} in C*_{d}");
    println!("fill = {} (word {}), switch set {s}", f, Word::of_facet(f, d)?);
    for i in 0..d as isize {
        let yes = is_face_of_b(sigma, BidParams::new(i, d)?);
        println!("  in B({i},{d}): {yes}");
    }
    Ok(())
}
