//! Mines primitive perfect pyramids with equal surface area (or volume).
//!
//! cargo run --release --example equal_surface -- 600 surface

use heronian::generate::{generate, Algorithm};
use heronian::pyramid::{mine_equal_sets, minimal_equal_sets, perfect_pyramids, EqualKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(600), |s| s.parse())?;
    let key: EqualKey = args.next().map_or(Ok(EqualKey::Surface), |s| s.parse())?;

    let corpus = generate(Algorithm::III, n)?;
    let pyramids = perfect_pyramids(n, &corpus)?;
    let primitive = pyramids.iter().filter(|p| p.is_primitive()).count();
    println!(
        "{} perfect pyramids with diameter <= {n}, {primitive} primitive",
        pyramids.len()
    );

    println!("\nsmallest sets of k pyramids sharing the key:");
    println!(
        "{:>9} {:>10} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "surface", "volume", "a", "b", "c", "d", "e", "f"
    );
    for group in minimal_equal_sets(&pyramids, key, 3) {
        for p in &group.members {
            let [a, b, c, d, e, f] = p.edges();
            println!(
                "{:>9} {:>10} {a:>6} {b:>6} {c:>6} {d:>6} {e:>6} {f:>6}",
                p.surface(),
                p.volume().to_string()
            );
        }
        println!();
    }

    let groups = mine_equal_sets(&pyramids, key);
    println!("{} groups of two or more", groups.len());
    Ok(())
}
