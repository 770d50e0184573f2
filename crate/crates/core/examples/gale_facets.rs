//! Facets of a cyclic polytope and its f-vector, enumerated and from the closed form.
//!
//! cargo run --example gale_facets -- 5 9

use simplexbound::cyclic::{self, CyclicSpec, DEFAULT_BUDGET};

fn main() -> simplexbound::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (d, n) = match args[..] {
        [d, n] => (d, n),
        _ => (5, 9),
    };
    let spec = CyclicSpec::new(d, n)?;
    let facets = cyclic::enumerate_facets(&spec, DEFAULT_BUDGET)?;
    println!("C_{d}({n}) has {} facets", facets.len());
    for f in facets.iter().take(10) {
        println!("  {}", f.one_based());
    }
    if facets.len() > 10 {
        println!("  ...");
    }
    let enumerated = cyclic::boundary_complex(&spec)?.f_vector();
    let closed = cyclic::f_vector_closed_form(&spec);
    println!("f-vector (enumerated)  {:?}", enumerated.0);
    println!("f-vector (closed form) {:?}", closed.0);
    Ok(())
}
