//! Runs all three generators for a diameter bound and checks they agree.
//!
//! cargo run --release --example cross_validate -- 300

use heronian::generate::cross_validate;

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .map_or(300, |s| s.parse().expect("n"));
    match cross_validate(n) {
        Ok((report, _)) => print!("{report}"),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
