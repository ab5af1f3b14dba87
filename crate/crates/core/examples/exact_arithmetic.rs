//! Exact rationals and quadratic surds.

use packcert::arith::{ceil_surd, cmp_surd, parse_rational, rat, Surd};

fn main() -> packcert::Result<()> {
    let r = Surd::sqrt_of(&rat(17, 2))?;
    println!("sqrt(17/2)            = {r}  ~ {:.12}", r.to_f64());

    let a = Surd::new(rat(1, 2), rat(3, 4), &rat(5, 1));
    let b = a.conjugate();
    println!("a = {a}, conj(a) = {b}");
    println!(
        "a * conj(a)           = {}",
        a.checked_mul(&b).expect("same field")
    );
    println!("1 / a                 = {}", a.recip().expect("nonzero"));

    // sqrt(6 + 2 sqrt 5) denests to 1 + sqrt 5
    let nested = Surd::new(rat(6, 1), rat(2, 1), &rat(5, 1));
    println!("sqrt({nested})   = {}", nested.sqrt().expect("denests"));

    let q = parse_rational("22/7").expect("valid");
    println!(
        "22/7 vs 3 + sqrt(1/50): {:?}",
        cmp_surd(&q, &rat(3, 1), &rat(1, 50))?
    );
    println!(
        "ceil(6 + sqrt(73/4))  = {}",
        ceil_surd(&rat(13, 2), &rat(73, 4))?
    );
    Ok(())
}
