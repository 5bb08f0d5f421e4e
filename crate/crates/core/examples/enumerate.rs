//! Enumerates Heronian triangles up to a diameter with one of the three
//! generators and prints a summary.
//!
//! cargo run --release --example enumerate -- 200 ii

use heronian::analysis::corpus_stats;
use heronian::generate::{count_candidate_triangles, count_integer_triangles, generate, Algorithm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(200), |s| s.parse())?;
    let algorithm: Algorithm = args.next().map_or(Ok(Algorithm::III), |s| s.parse())?;

    let corpus = generate(algorithm, n)?;
    let stats = corpus_stats(&corpus);
    println!("algorithm {algorithm}: {stats}");
    println!("out of {} integer triangles", count_integer_triangles(n));
    println!(
        "{} non-equilateral triangles have even perimeter <= {n}",
        count_candidate_triangles(n)
    );

    println!("\nfirst primitive triangles (a b c area):");
    for t in corpus
        .triangles()
        .iter()
        .filter(|t| t.is_primitive())
        .take(12)
    {
        let [a, b, c] = t.sides();
        println!("  {a:>4} {b:>4} {c:>4} {:>6}", t.area());
    }

    let busiest = stats
        .per_diameter
        .iter()
        .max_by_key(|(_, (total, _))| *total);
    if let Some((d, (total, primitive))) = busiest {
        println!("\nmost triangles at diameter {d}: {total} ({primitive} primitive)");
    }
    Ok(())
}
