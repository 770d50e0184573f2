//! Reduce the 1-skeleton of C_3(7) plus one missing edge to K_5 by contractions, then replay
//! the trace against the source.

use simplexbound::cyclic::CyclicSpec;
use simplexbound::minor;
use simplexbound::{scx, Simplex};

fn main() -> simplexbound::Result<()> {
    let spec = CyclicSpec::new(3, 7)?;
    let m = Simplex::from_one_based([2, 5])?;
    let source = minor::reduction_source(&spec, m)?;
    let trace = minor::reduce_to_vkflores(&spec, m)?;
    for step in &trace.steps {
        println!("{step}");
    }
    let target = minor::vkflores_complex(1);
    println!("verdict: {:?}", minor::verify_trace(&source, &trace, &target));

    // a truncated trace is caught
    let mut bad = trace.clone();
    bad.steps.pop();
    println!("truncated: {:?}", minor::verify_trace(&source, &bad, &target));
    print!("{}", scx::write(&target));
    Ok(())
}
