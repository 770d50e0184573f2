//! C4-free polarity graphs of projective planes.

use simplexbound::extremal::{contains_copy, polarity_graph};
use simplexbound::UniformHypergraph;

fn main() -> simplexbound::Result<()> {
    let c4 = UniformHypergraph::from_one_based(4, 2, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])?;
    for q in [2, 3, 5, 7, 11] {
        let g = polarity_graph(q)?;
        let free = contains_copy(&g, &c4)?.is_none();
        println!("q={q:>2}  vertices {:>3}  edges {:>4}  C4-free {free}", g.n(), g.num_edges());
    }
    Ok(())
}
