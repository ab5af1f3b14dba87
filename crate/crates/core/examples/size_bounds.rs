//! Upper bounds on antipodal spherical s-distance t-designs, and the
//! Welch, Levenstein and Gerzon bounds for line packings.

use packcert::bounds::{
    best_known, dgs_antipodal, gerzon_check, levenstein_sq, nozaki_suda, welch_sq, xxy_bound,
};

fn show(label: &str, b: &packcert::bounds::BoundReport) {
    match &b.value {
        Some(v) => println!("    {label:<10} {v:>10}  cap {}", b.integer_cap().unwrap()),
        None => println!("    {label:<10} {:>10}  {}", "-", b.note),
    }
}

fn main() -> packcert::Result<()> {
    for (d, s, t) in [(3, 3, 5), (10, 3, 3), (10, 4, 5), (10, 5, 5), (8, 6, 7)] {
        println!("d = {d}, s = {s}, t = {t}");
        show("dgs", &dgs_antipodal(d, s)?);
        show("nozaki", &nozaki_suda(d, s, t)?);
        show("xxy", &xxy_bound(d, s, t)?);
        show("best", &best_known(d, s, t)?);
    }
    for (d, n) in [(3, 6), (7, 28), (7, 63), (23, 276)] {
        let g = gerzon_check(d, n)?;
        println!(
            "(d, n) = ({d}, {n}): welch^2 = {}, levenstein^2 = {}, gerzon inside = {}",
            welch_sq(d, n)?,
            levenstein_sq(d, n)
                .map(|v| v.to_string())
                .unwrap_or_else(|_| "-".into()),
            g.inside()
        );
    }
    Ok(())
}
