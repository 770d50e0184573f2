//! Random graphs with the copies of K_5 and K_{3,3} deleted, at growing n.

use simplexbound::extremal::{random_free_constructions, FamilySpec};

fn main() -> simplexbound::Result<()> {
    let family = FamilySpec::forbidden(1)?;
    let seeds: Vec<u64> = (0..8).collect();
    for n in [32, 64, 128, 256] {
        let reports = random_free_constructions(n, &family, &seeds)?;
        let mut edges: Vec<usize> = reports.iter().map(|r| r.edges_after).collect();
        edges.sort_unstable();
        let r = &reports[0];
        println!(
            "n={n:>3}  p={:.4}  before {:>4}  copies {:>3}  after {:>4}  median over seeds {}",
            r.p, r.edges_before, r.copies_found, r.edges_after, edges[edges.len() / 2]
        );
    }
    Ok(())
}
