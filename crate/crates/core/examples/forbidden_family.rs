//! Members of F_d, their sizes, and which one is (d+1)-partite.

use simplexbound::forbidden::{family_extremes, generate_fd, is_k_partite};

fn main() -> simplexbound::Result<()> {
    for d in 1..=3 {
        println!("F_{d}:");
        for m in generate_fd(d)? {
            let partite = is_k_partite(&m.hypergraph, d + 1).is_some();
            println!(
                "  {:<40} partition {:?}  vertices {:>2}  edges {:>3}  partite {partite}",
                m.name(),
                m.parts.iter().map(|p| p + 1).collect::<Vec<_>>(),
                m.num_vertices(),
                m.num_edges()
            );
        }
        let e = family_extremes(d)?;
        println!("  at most {} vertices, at least {} edges", e.max_vertices, e.min_edges);
    }
    Ok(())
}
