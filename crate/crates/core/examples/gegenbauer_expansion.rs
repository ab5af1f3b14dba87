//! Normalized Gegenbauer polynomials and annihilator expansions.

use packcert::arith::{rat, BigRational};
use packcert::gegenbauer::{
    annihilator, gegenbauer_eval, gegenbauer_expand, gegenbauer_poly, harm_dim,
};

fn main() -> packcert::Result<()> {
    let d = 3;
    for k in 0..=5 {
        let g = gegenbauer_poly(d, k)?;
        println!(
            "G_{k}^({d})(x) coefficients {:?}",
            g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
        );
        println!(
            "    G_{k}(1) = {}, h_{k} = {}",
            gegenbauer_eval(d, k, &rat(1, 1))?,
            harm_dim(d, k as u64)?
        );
    }

    // annihilator of the icosahedron's rational-squared angle set, in terms of x^2
    let angles: Vec<BigRational> = vec![rat(-1, 1), rat(0, 1), rat(1, 1) / rat(3, 1)];
    let f = annihilator(&angles)?;
    let e = gegenbauer_expand(&f, 8)?;
    println!("annihilator of {{-1, 0, 1/3}} in R^8:");
    for (k, c) in e.coeffs.iter().enumerate() {
        println!("    f_{k} = {c}");
    }
    assert_eq!(e.recombine(), f);
    Ok(())
}
