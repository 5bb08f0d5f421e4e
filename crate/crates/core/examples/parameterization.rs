//! Triangles from Brahmagupta's parameters and from the ten-parameter
//! refinement walked by the first generator.

use heronian::generate::AlgorithmI;
use heronian::heron::{classify, BrahmaguptaParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // p/q * (h(i^2+j^2), i(h^2+j^2), (i+h)(ih-j^2))
    let bp = BrahmaguptaParams::new(1, 1, 2, 1, 1)?;
    println!(
        "Brahmagupta (1,1,2,1,1) -> {:?}",
        bp.sides().map(|r| r.to_string())
    );
    if let Some(t) = bp.triangle() {
        println!("  integral: {t}, {:?}", classify(t.a(), t.b(), t.c()));
    }

    let a = 13;
    println!("\nparameter tuples with longest side {a}:");
    let gen = AlgorithmI::new(a)?;
    gen.for_each_state(a..=a, |st| {
        let pt = &st.tuple;
        println!(
            "  sides {:?}  p={} w1={} w4={} s={} t={} u={} v={} alpha={} beta={} gamma={}",
            st.sides, pt.p, pt.w1, pt.w4, pt.s, pt.t, pt.u, pt.v, pt.alpha, pt.beta, pt.gamma
        );
    });
    Ok(())
}
