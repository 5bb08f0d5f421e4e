//! Counts rational medians over all Heronian triangles up to a diameter.
//!
//! cargo run --release --example medians -- 2000

use heronian::analysis::median_scan;
use heronian::generate::{generate, Algorithm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(2000), |s| s.parse())?;
    let corpus = generate(Algorithm::III, n)?;
    let scan = median_scan(&corpus);
    for (k, count) in scan.histogram.iter().enumerate() {
        println!("{k} rational medians: {count}");
    }
    println!("\nprimitive triangles with two rational medians:");
    for (t, m) in &scan.examples {
        let vals: Vec<String> = m
            .values
            .iter()
            .map(|v| v.map_or("-".into(), |r| r.to_string()))
            .collect();
        println!("  {:<22} {}", t.triangle().to_string(), vals.join("  "));
    }
    Ok(())
}
