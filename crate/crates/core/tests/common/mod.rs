//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// `h_k = (2k+d-2)/(k+d-2) * C(k+d-2, k)`, with `h_0 = 1`.
pub fn harm_dim_oracle(d: u64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(d - 1 + i) / BigInt::from(i + 1);
    }
    // c = C(k+d-2, k)
    c * BigInt::from(2 * k + d - 2) / BigInt::from(k + d - 2)
}

/// Average of `prod x_i^{a_i}` over the unit sphere in `R^d`:
/// `prod (a_i - 1)!! / (d (d+2) ... (d + |a| - 2))` for all `a_i` even,
/// zero otherwise.
pub fn sphere_monomial_average(d: usize, exps: &[u32]) -> BigRational {
    if exps.iter().any(|a| a % 2 == 1) {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    for &a in exps {
        let mut j = 1u32;
        while j < a {
            num *= j;
            j += 2;
        }
    }
    let total: u32 = exps.iter().sum();
    let mut den = BigInt::one();
    for j in 0..total / 2 {
        den *= d as u64 + 2 * j as u64;
    }
    BigRational::new(num, den)
}

fn monomials(d: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; d], &mut out);
    out
}

/// Largest `t <= kmax` such that every monomial of degree `<= t` averages
/// over `points` to its sphere average within `tol`.
pub fn monomial_strength(points: &[Vec<f64>], kmax: u32, tol: f64) -> usize {
    let d = points[0].len();
    let n = points.len() as f64;
    for k in 1..=kmax {
        for m in monomials(d, k) {
            let avg: f64 = points
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(&m)
                        .map(|(x, &a)| x.powi(a as i32))
                        .product::<f64>()
                })
                .sum::<f64>()
                / n;
            let want = sphere_monomial_average(d, &m).to_f64().unwrap();
            if (avg - want).abs() > tol {
                return (k - 1) as usize;
            }
        }
    }
    kmax as usize
}

pub fn random_unit(rng: &mut StdRng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r2: f64 = v.iter().map(|x| x * x).sum();
        if (0.01..=1.0).contains(&r2) {
            let r = r2.sqrt();
            return v.into_iter().map(|x| x / r).collect();
        }
    }
}

pub fn random_set(rng: &mut StdRng, d: usize, n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|_| random_unit(rng, d)).collect()
}

pub fn random_antipodal_set(rng: &mut StdRng, d: usize, half: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(2 * half);
    for _ in 0..half {
        let v = random_unit(rng, d);
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    }
    out
}

/// Random orthogonal matrix from Gram-Schmidt on random vectors.
pub fn random_rotation(rng: &mut StdRng, d: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
    while basis.len() < d {
        let mut v = random_unit(rng, d);
        for b in &basis {
            let c: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let r: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 1e-3 {
            basis.push(v.into_iter().map(|x| x / r).collect());
        }
    }
    basis
}

pub fn rotate(points: &[Vec<f64>], q: &[Vec<f64>]) -> Vec<Vec<f64>> {
    points
        .iter()
        .map(|p| {
            q.iter()
                .map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect()
}
