//! From the E8 root system to the 63-line packing in R^7.

use packcert::constructions::{derived_code, e8_roots};
use packcert::leven::leven_report;
use packcert::pointset::{classify, half};

fn main() -> packcert::Result<()> {
    let e8 = e8_roots();
    let c = classify(&e8)?;
    println!(
        "E8 roots: {} points, strength {} (exact: {}), tight: {:?}",
        e8.len(),
        c.profile.strength.t,
        c.profile.strength.exact,
        c.dgs_tight
    );

    let z = derived_code(&e8, 0)?;
    let zc = classify(&z)?;
    println!(
        "derived code: {} points in R^{}, angles {:?}, strength {}",
        z.len(),
        z.dim(),
        zc.profile
            .angle_set
            .iter()
            .map(|a| a.exact.as_ref().unwrap().to_string())
            .collect::<Vec<_>>(),
        zc.profile.strength.t
    );

    let lines = half(&z)?;
    let lc = classify(&lines)?;
    println!(
        "half: {} lines, coherence^2 = {}, kind {:?}",
        lines.len(),
        lc.profile.coherence_sq_exact.as_ref().unwrap(),
        lc.kind
    );
    let r = leven_report(7, 63)?;
    println!(
        "feasibility report for (7, 63): alpha^2 = {}, verdict {}",
        r.alpha_sq, r.verdict
    );
    Ok(())
}
