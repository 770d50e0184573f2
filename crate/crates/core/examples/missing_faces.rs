//! The d-sets that are not faces of C_{2d+1}(n), and why adding one is detected.

use simplexbound::cyclic::{self, CyclicSpec};

fn main() -> simplexbound::Result<()> {
    let spec = CyclicSpec::new(5, 9)?;
    let missing = cyclic::missing_d_faces(&spec, 2)?;
    println!("{} triangles are missing from the boundary of C_5(9):", missing.len());
    for m in &missing {
        let q = cyclic::is_face(&spec, *m)?;
        println!("  {}  (face: {})", m.one_based(), q.is_face);
    }
    // every edge is present: the polytope is 2-neighbourly
    let edges = cyclic::k_faces(&spec, 1, cyclic::DEFAULT_BUDGET)?;
    println!("edges: {} of {}", edges.len(), 9 * 8 / 2);
    Ok(())
}
