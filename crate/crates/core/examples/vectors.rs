//! f-, h-, g-, h'- and flag numbers of B(i,d) as an aligned table.
//!
//!     cargo run --example vectors -- 2 6

use xpol::enumeration::vector_report;
use xpol::{build_b, BidParams};

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (1, 4),
    };
    let p = BidParams::new(i, d)?;
    let report = vector_report(&format!("B({i},{d})"), &build_b(p), Some((p, false)))?;
    print!("{}", report.to_text());
    Ok(())
}
