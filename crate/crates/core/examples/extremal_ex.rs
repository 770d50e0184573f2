//! Exact extremal numbers by exhaustive search, and the Turán bound they match.

use simplexbound::extremal::{exact_ex, FamilySpec};
use simplexbound::UniformHypergraph;

fn main() -> simplexbound::Result<()> {
    let triangle = UniformHypergraph::from_one_based(3, 2, &[&[1, 2], &[2, 3], &[1, 3]])?;
    let c4 = UniformHypergraph::from_one_based(4, 2, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])?;
    for (name, h) in [("K3", triangle), ("C4", c4)] {
        let family = FamilySpec::new(vec![h])?;
        for n in 4..=7 {
            let r = exact_ex(n, &family, 50_000_000)?;
            println!("ex({n}, {name}) = {:>2}   ({} search nodes)", r.value, r.nodes);
        }
    }
    Ok(())
}
