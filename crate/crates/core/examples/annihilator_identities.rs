//! Matrix identities for the icosahedron: annihilator expansion, column
//! space dimension and orthogonality of the D_k matrices on a half.

use packcert::constructions::icosahedron;
use packcert::pointset::{
    dim_identity, gegenbauer_moment, half, verify_annihilator_identity, verify_orthogonality,
};

fn main() -> packcert::Result<()> {
    let x = icosahedron();
    let r = 1.0 / 5f64.sqrt();
    let h = half(&x)?;
    let angles = [0.0, -r, r];

    let a = verify_annihilator_identity(&h, Some(&angles))?;
    println!(
        "half: {} points; annihilator coefficients {:?}",
        h.len(),
        a.coeffs
    );
    println!("    max |sum f_k D_k - I| = {:.2e}", a.residual);
    let dim = dim_identity(&h, Some(&angles))?;
    println!("    dimension {} for {} points", dim.dimension, dim.size);
    for (k, l) in [(1, 1), (1, 3), (2, 2)] {
        println!(
            "    D_{k} D_{l} residual {:.2e}",
            verify_orthogonality(&h, k, l)?
        );
    }
    println!("S_6 of the full set = {:.6}", gegenbauer_moment(&x, 6)?);
    Ok(())
}
