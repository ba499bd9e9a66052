//! Every verification suite on one B(i,d), one line per check.
//!
//!     cargo run --release --example verify_suites -- 2 6

use xpol::verify::{verify_params, Suite};
use xpol::BidParams;

fn main() -> xpol::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (i, d) = match args[..] {
        [i, d] => (i as isize, d),
        _ => (1, 5),
    };
    let report = verify_params(BidParams::new(i, d)?, &Suite::EACH)?;
    for suite in &report.suites {
        for c in &suite.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            println!("{mark} {:<10} {:<40} {}", suite.suite, c.name, c.anchor);
        }
    }
    println!("overall: {}", report.passed);
    Ok(())
}
