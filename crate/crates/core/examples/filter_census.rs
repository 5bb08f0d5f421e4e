//! Census of the mod-420 prefilter: how many residue triples `(a, b, c)`
//! leave the Heron product a square modulo 420.

use heronian::numtheory::{Mod420Filter, FILTER_MODULUS};

fn main() {
    let filter = Mod420Filter::shared();
    let accepted = filter.accepted_count();
    let total = filter.total_count();
    println!("modulus {FILTER_MODULUS}");
    println!(
        "accepted {accepted} of {total} residue triples ({:.4})",
        accepted as f64 / total as f64
    );

    // per prime-power factor of 420 = 4 * 3 * 5 * 7
    for m in [4u64, 3, 5, 7] {
        let squares: Vec<u64> = (0..m).filter(|r| (0..m).any(|x| x * x % m == *r)).collect();
        let mut pass = 0u64;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let p = (a + b + c)
                        * (a + b + 2 * m - c)
                        * (a + 2 * m - b + c)
                        * (2 * m - a + b + c);
                    pass += u64::from(squares.contains(&(p % m)));
                }
            }
        }
        println!("  mod {m}: {pass}/{}", m * m * m);
    }

    println!("\n(5, 4, 3) passes: {}", filter.accepts(5, 4, 3));
    println!("(3, 2, 2) passes: {}", filter.accepts(3, 2, 2));
}
