//! Generators for classical extremal configurations.

use crate::arith::{int, rat, BigRational};
use crate::error::{Error, Result};
use crate::pointset::{PointSet, DEFAULT_TOLERANCE};

/// Reflects so that the unit vector `x` lands on `±e_1`, then drops the
/// first coordinate of each `y` (assumed orthogonal to `x`).
fn project_out(x: &[f64], ys: &[&[f64]]) -> Vec<Vec<f64>> {
    let sign = if x[0] >= 0.0 { 1.0 } else { -1.0 };
    let mut v = x.to_vec();
    v[0] += sign;
    let vv: f64 = v.iter().map(|a| a * a).sum();
    ys.iter()
        .map(|y| {
            let c = 2.0 * v.iter().zip(y.iter()).map(|(a, b)| a * b).sum::<f64>() / vv;
            y.iter().zip(&v).skip(1).map(|(b, a)| b - c * a).collect()
        })
        .collect()
}

/// `d + 1` unit vectors in `R^d` with pairwise inner product `-1/d`.
pub fn simplex_etf(d: usize) -> Result<PointSet> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d as u64));
    }
    let m = d + 1;
    let centre = 1.0 / m as f64;
    let norm = (d as f64 / m as f64).sqrt();
    let raw: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| ((i == j) as u8 as f64 - centre) / norm)
                .collect()
        })
        .collect();
    let axis = vec![1.0 / (m as f64).sqrt(); m];
    let refs: Vec<&[f64]> = raw.iter().map(Vec::as_slice).collect();
    let coords = project_out(&axis, &refs);
    let values = vec![int(1), rat(-1, d as i64)];
    let index = (0..m * m).map(|k| (k / m != k % m) as u32).collect();
    PointSet::with_exact_gram(coords, values, index, DEFAULT_TOLERANCE)
}

/// `e_1, -e_1, e_2, -e_2, ...` in `R^d`.
pub fn cross_polytope(d: usize) -> Result<PointSet> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d as u64));
    }
    let mut rows = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1, -1] {
            rows.push((0..d).map(|j| int(if i == j { s } else { 0 })).collect());
        }
    }
    PointSet::from_rational(rows, int(1), DEFAULT_TOLERANCE)
}

/// Cyclic shifts of `(0, ±1, ±φ) / sqrt(1 + φ^2)`.
pub fn icosahedron() -> PointSet {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = (1.0 + phi * phi).sqrt();
    let mut rows = Vec::with_capacity(12);
    for shift in 0..3 {
        for (a, b) in [(1.0, phi), (-1.0, -phi), (1.0, -phi), (-1.0, phi)] {
            let base = [0.0, a / r, b / r];
            rows.push((0..3).map(|i| base[(i + 3 - shift) % 3]).collect());
        }
    }
    PointSet::from_f64(rows, DEFAULT_TOLERANCE).expect("icosahedron vertices are valid")
}

/// The 240 minimal vectors of E8 scaled to unit length.
pub fn e8_roots() -> PointSet {
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![int(0); 8];
                v[i] = int(a);
                v[j] = int(b);
                rows.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            rows.push(
                (0..8)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            rat(-1, 2)
                        } else {
                            rat(1, 2)
                        }
                    })
                    .collect(),
            );
        }
    }
    PointSet::from_rational(rows, rat(1, 2), DEFAULT_TOLERANCE).expect("E8 roots are valid")
}

/// The points of `x` orthogonal to `x[index]`, in coordinates of the
/// hyperplane `x[index]^⊥`.
pub fn derived_code(x: &PointSet, index: usize) -> Result<PointSet> {
    if index >= x.len() {
        return Err(Error::Precondition(format!("index {index} out of range")));
    }
    if x.dim() < 3 {
        return Err(Error::Precondition(
            "derived code needs dimension at least 3".into(),
        ));
    }
    let tol = 10.0 * x.tolerance();
    let chosen: Vec<usize> = (0..x.len())
        .filter(|&j| match x.exact_inner(index, j) {
            Some(q) => num_traits::Zero::is_zero(q),
            None => x.inner(index, j).abs() <= tol,
        })
        .collect();
    if chosen.is_empty() {
        return Err(Error::Precondition("derived code is empty".into()));
    }
    let refs: Vec<&[f64]> = chosen.iter().map(|&j| x.coords()[j].as_slice()).collect();
    let coords = project_out(&x.coords()[index], &refs);
    x.reembed(&chosen, coords)
}
