//! Sizes admitting packings that meet the Levenstein bound.

use packcert::leven::{antipodal_4_5_sizes, enumerate_sizes, leven_report, leven_srg};

fn main() -> packcert::Result<()> {
    for d in [5, 7, 8, 23] {
        let all = enumerate_sizes(d, false)?;
        let kept = enumerate_sizes(d, true)?;
        println!(
            "d = {d}: sizes {:?}, after integrality {:?}",
            all.iter().map(|e| e.n).collect::<Vec<_>>(),
            kept.iter().map(|e| e.n).collect::<Vec<_>>()
        );
    }
    let r = leven_report(7, 63)?;
    println!("(7, 63): alpha^2 = {}, verdict {}", r.alpha_sq, r.verdict);
    for c in &r.conditions {
        println!("    {:<16} {}", c.id, c.status);
    }
    let (p, s) = leven_srg(7, 63)?;
    println!(
        "    graph ({}, {}, {}, {}), eigenvalues {} (x{}), {} (x{})",
        p.v, p.k, p.lambda, p.mu, s.r1, s.n1, s.r2, s.n2
    );
    let a = antipodal_4_5_sizes(7)?;
    println!(
        "antipodal 4-distance 5-design sizes in R^7: {:?}, odd sizes dropped: {:?}",
        a.sizes, a.dropped_odd
    );
    Ok(())
}
