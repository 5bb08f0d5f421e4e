//! Checks lattice point sets for integral distances, collinear triples and
//! concyclic quadruples. Without arguments it checks a seven-point set that
//! fails only on one circle, and an eight-point extension.
//!
//! cargo run --example cluster -- points.txt

use std::path::Path;

use heronian::geometry::{verify_cluster, LatticePointSet};

const SEVEN: [(i64, i64); 7] = [
    (0, 0),
    (375360, 0),
    (55860, 106855),
    (187680, 7990),
    (187680, 82688),
    (142800, 190400),
    (232560, 190400),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let set = LatticePointSet::read(Path::new(&path))?;
        println!("{}", verify_cluster(&set));
        return Ok(());
    }
    let seven = LatticePointSet::new(SEVEN.to_vec())?;
    println!("seven points\n{}\n", verify_cluster(&seven));

    let mut eight = SEVEN.to_vec();
    eight.push((319500, 106855));
    let report = verify_cluster(&LatticePointSet::new(eight)?);
    println!(
        "eight points: concyclic quadruples {:?}",
        report.concyclic_quadruples
    );
    Ok(())
}
