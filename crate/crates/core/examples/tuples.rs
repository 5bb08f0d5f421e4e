//! Smallest N-tuples of distinct Heronian triangles sharing perimeter and
//! area.
//!
//! cargo run --release --example tuples -- 600 5

use heronian::analysis::minimal_tuples;
use heronian::generate::{generate, Algorithm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(600), |s| s.parse())?;
    let max_n: usize = args.next().map_or(Ok(5), |s| s.parse())?;
    let corpus = generate(Algorithm::III, n)?;

    println!(
        "{:>3} {:>10} {:>10} {:>10}",
        "N", "perimeter", "area", "4*area"
    );
    for k in 1..=max_n {
        match minimal_tuples(&corpus, k) {
            Ok(g) => {
                println!(
                    "{k:>3} {:>10} {:>10} {:>10}",
                    g.perimeter, g.area, g.quad_area
                );
                for t in &g.members {
                    println!("{:>14}{}", "", t.triangle());
                }
            }
            Err(e) => println!("{k:>3} {e}"),
        }
    }
    Ok(())
}
