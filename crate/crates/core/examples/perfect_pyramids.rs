//! Searches perfect pyramids (integral edges, face areas and volume) up to a
//! longest edge, and prints faces and coincidence classes.
//!
//! cargo run --release --example perfect_pyramids -- 300

use heronian::generate::{generate, Algorithm};
use heronian::pyramid::{classify_coincidence, perfect_pyramids};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(300), |s| s.parse())?;
    let corpus = generate(Algorithm::III, n)?;
    let pyramids = perfect_pyramids(n, &corpus)?;
    println!(
        "{} perfect pyramids with longest edge <= {n}\n",
        pyramids.len()
    );
    println!(
        "{:<34} {:<26} {:>8} {:>10} {:>6}",
        "edges (a..f)", "face areas", "surface", "volume", "class"
    );
    for p in &pyramids {
        let t = p.tetrahedron();
        let scale = t.gcd();
        let note = if scale > 1 {
            format!("  (scaled by {scale})")
        } else {
            String::new()
        };
        println!(
            "{:<34} {:<26} {:>8} {:>10} {:>6}{note}",
            t.to_string(),
            format!("{:?}", p.face_areas()),
            p.surface(),
            p.volume().to_string(),
            classify_coincidence(&t).to_string()
        );
    }
    Ok(())
}
