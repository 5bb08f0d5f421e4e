//! Tetrahedra whose edges form an arithmetic progression, with rational
//! volume and at least one Heronian face.
//!
//! cargo run --release --example ap_tetrahedra -- 100

use heronian::pyramid::ap_tetrahedra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(100), |s| s.parse())?;
    let found = ap_tetrahedra(n);
    println!("{} tetrahedra with longest edge <= {n}", found.len());
    for ap in &found {
        println!(
            "  {}  start {} step {}  heronian faces {}  volume {}{}",
            ap.tet,
            ap.start,
            ap.step,
            ap.heronian_faces,
            ap.volume,
            if ap.tet.is_primitive() {
                "  (primitive)"
            } else {
                ""
            }
        );
    }
    Ok(())
}
