//! Inductive manifold certificate for B(i,d), next to the local link test.
//!
//!     cargo run --release --example manifold -- 3 6

use xpol::manifold::{link_check, manifold_certificate, ridge_check};
use xpol::{build_b, BidParams};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (2, 5),
    };
    let p = BidParams::new(i, d)?;
    let cert = manifold_certificate(p)?;
    for s in &cert.steps {
        println!(
            "B({},{}): star x_d {:?}, star y_d {:?}, links meet in B({},{}): {}",
            s.i,
            s.d,
            s.star_x,
            s.star_y,
            s.i - 1,
            s.d - 1,
            s.links_meet_in_smaller_b
        );
    }
    println!("base is two disjoint simplices: {}; certificate {}", cert.base_ok, cert.passed);
    let b = build_b(p);
    println!("ridge test {}, link test {}", ridge_check(&b, false).passed, link_check(&b, false)?.passed);
    Ok(())
}
