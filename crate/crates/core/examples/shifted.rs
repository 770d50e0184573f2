//! Δ(5,n), its shiftedness, and the triangle bound on shifted subcomplexes.

use simplexbound::shifted::{delta5_extension_check, delta5_inequality, delta_dn, is_shifted, sample_shifted_subcomplexes};

fn main() -> simplexbound::Result<()> {
    let k = delta_dn(5, 9)?;
    println!("Δ(5,9): {} facets, shifted {}", k.facets().len(), is_shifted(&k)?.verdict);
    let r = delta5_inequality(&k.skeleton(2))?;
    println!("2-skeleton: f1={} f2={} bound {} holds {}", r.f1, r.f2, r.bound, r.holds);
    let ext = delta5_extension_check(9)?;
    println!("with 567: f1={} f2={} 4*f1={}", ext.f1, ext.f2, 4 * ext.f1);
    let tight = sample_shifted_subcomplexes(9, 50, 1)?
        .iter()
        .map(|s| delta5_inequality(s).map(|r| r.bound - r.f2 as i64))
        .collect::<simplexbound::Result<Vec<_>>>()?;
    println!("slack over 50 samples: min {} max {}", tight.iter().min().unwrap(), tight.iter().max().unwrap());
    Ok(())
}
