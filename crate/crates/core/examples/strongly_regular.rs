//! Strongly regular graph parameters: spectrum, Krein conditions, conference graphs.

use packcert::srg::{consistency_check, is_conference, krein, spectrum, SrgParams};

fn main() -> packcert::Result<()> {
    for (name, p) in [
        ("Petersen", SrgParams::new(10, 3, 0, 1)),
        ("Paley(13)", SrgParams::new(13, 6, 2, 3)),
        ("Schlaefli complement", SrgParams::new(27, 10, 1, 5)),
        ("Krein violator", SrgParams::new(28, 9, 0, 4)),
    ] {
        let c = consistency_check(&p);
        let s = spectrum(&p)?;
        let (k1, k2) = krein(&p)?;
        println!("{name}: status {}", c.status);
        println!("    r1 = {} (x{}), r2 = {} (x{})", s.r1, s.n1, s.r2, s.n2);
        println!(
            "    K1 = {k1}, K2 = {k2}, conference = {}",
            is_conference(&p)
        );
    }
    Ok(())
}
