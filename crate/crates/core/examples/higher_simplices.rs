//! 4-simplices all of whose tetrahedral facets are perfect pyramids, built
//! by gluing two pyramids along a common face.
//!
//! cargo run --release --example higher_simplices -- 600

use heronian::generate::{generate, Algorithm};
use heronian::pyramid::{search_higher_simplices, VolumeStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(600), |s| s.parse())?;
    let corpus = generate(Algorithm::III, n)?;
    let found = search_higher_simplices(4, n, &corpus)?;
    println!("{} candidates with diameter <= {n}", found.len());
    for s in &found {
        let e = s.edges;
        let mut flat = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                flat.push(e[i][j].to_string());
            }
        }
        println!("  [{}]  V4: {:?}", flat.join(","), s.status);
    }
    let perfect = found
        .iter()
        .filter(|s| s.status == VolumeStatus::Perfect)
        .count();
    println!("with rational positive 4-volume: {perfect}");
    Ok(())
}
