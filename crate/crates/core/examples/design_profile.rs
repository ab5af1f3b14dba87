//! Profiling point sets: angle set, design strength, extremal classification.

use packcert::constructions::{cross_polytope, icosahedron, simplex_etf};
use packcert::pointset::{classify, PointSet};

fn describe(name: &str, x: &PointSet) -> packcert::Result<()> {
    let c = classify(x)?;
    let p = &c.profile;
    let angles: Vec<String> = p
        .angle_set
        .iter()
        .map(|a| {
            a.exact
                .as_ref()
                .map(|q| q.to_string())
                .unwrap_or_else(|| format!("{:.6}", a.value))
        })
        .collect();
    println!(
        "{name}: {} points in R^{} ({:?}), angles {angles:?}, strength {}{}, kind {:?}",
        p.size,
        p.dim,
        p.mode,
        p.strength.t,
        if p.strength.capped { "+" } else { "" },
        c.kind
    );
    for n in &c.notes {
        println!("    {n}");
    }
    Ok(())
}

fn main() -> packcert::Result<()> {
    describe("simplex", &simplex_etf(4)?)?;
    describe("cross polytope", &cross_polytope(4)?)?;
    describe("icosahedron", &icosahedron())?;
    let square = PointSet::from_f64(
        vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
        ],
        1e-9,
    )?;
    describe("square", &square)?;
    Ok(())
}
