//! Finite subsets of the unit sphere and their verification: angle sets,
//! coherence, antipodality, tight-frame test, design strength from
//! Gegenbauer moments of the Gram matrix, and the matrix identities for
//! halves of antipodal designs.
//!
//! A point set is held in one of three modes. `Exact` has rational
//! coordinates of norm exactly 1. `GramExact` has coordinates that share a
//! common irrational scale (or were rotated in floating point) while every
//! inner product is a known rational. `Float` is plain double precision,
//! and all verdicts there are numerical certificates, not proofs.

use std::collections::HashMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{One, Signed, Zero};

use crate::arith::{to_f64, BigInt, BigRational};
use crate::bounds::{dgs_antipodal, levenstein_sq, welch_sq};
use crate::error::{Error, Result};
use crate::gegenbauer::{
    annihilator_f64, gegenbauer_expand, gegenbauer_values, gegenbauer_values_f64, harm_dim,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Float,
    Exact,
    GramExact,
}

/// One input coordinate.
#[derive(Debug, Clone, PartialEq)]
pub enum RawCoord {
    Exact(BigRational),
    Float(f64),
}

/// Distinct inner-product values and, for each ordered pair, the index of
/// its value.
#[derive(Debug, Clone)]
struct ExactGram {
    values: Vec<BigRational>,
    index: Vec<u32>,
}

#[derive(Debug, Clone)]
struct ExactCoords {
    rows: Vec<Vec<BigRational>>,
    scale_sq: BigRational,
}

#[derive(Debug, Clone)]
pub struct PointSet {
    dim: usize,
    tolerance: f64,
    coords: Vec<Vec<f64>>,
    gram: Vec<f64>,
    exact_gram: Option<ExactGram>,
    exact_coords: Option<ExactCoords>,
}

/// Builds a point set from mixed exact/float input.
///
/// All-exact input with `scale_sq * |p|^2 = 1` for every row engages exact
/// (or Gram-exact, when `scale_sq != 1`) mode; anything else is float.
pub fn validate(
    rows: Vec<Vec<RawCoord>>,
    scale_sq: Option<BigRational>,
    tol: f64,
) -> Result<PointSet> {
    let all_exact = rows
        .iter()
        .flatten()
        .all(|c| matches!(c, RawCoord::Exact(_)));
    if all_exact {
        let exact: Vec<Vec<BigRational>> = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| match c {
                        RawCoord::Exact(q) => q,
                        RawCoord::Float(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        return PointSet::from_rational(exact, scale_sq.unwrap_or_else(BigRational::one), tol);
    }
    let scale = scale_sq.as_ref().map(|s| to_f64(s).sqrt()).unwrap_or(1.0);
    let float = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| {
                    scale
                        * match c {
                            RawCoord::Exact(q) => to_f64(&q),
                            RawCoord::Float(x) => x,
                        }
                })
                .collect()
        })
        .collect();
    PointSet::from_f64(float, tol)
}

fn check_shape<T>(rows: &[Vec<T>], tol: f64) -> Result<usize> {
    if rows.is_empty() {
        return Err(Error::InvalidPointSet("empty point set".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidPointSet(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let dim = rows[0].len();
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim as u64));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != dim) {
        return Err(Error::InvalidPointSet(format!(
            "ragged input: point {i} has {} coordinates, expected {dim}",
            rows[i].len()
        )));
    }
    Ok(dim)
}

impl PointSet {
    pub fn from_f64(rows: Vec<Vec<f64>>, tol: f64) -> Result<Self> {
        let dim = check_shape(&rows, tol)?;
        if rows.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPointSet("non-finite coordinate".into()));
        }
        let n = rows.len();
        let mut gram = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let g: f64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum();
                gram[i * n + j] = g;
                gram[j * n + i] = g;
            }
        }
        let set = PointSet {
            dim,
            tolerance: tol,
            coords: rows,
            gram,
            exact_gram: None,
            exact_coords: None,
        };
        set.check_float_norms_and_duplicates()?;
        Ok(set)
    }

    /// Points `sqrt(scale_sq) * p` for rational rows `p`.
    pub fn from_rational(
        rows: Vec<Vec<BigRational>>,
        scale_sq: BigRational,
        tol: f64,
    ) -> Result<Self> {
        let dim = check_shape(&rows, tol)?;
        if !scale_sq.is_positive() {
            return Err(Error::InvalidPointSet("scale_sq must be positive".into()));
        }
        let exact_unit = rows.iter().all(|r| {
            let norm: BigRational = r.iter().map(|x| x * x).sum();
            norm * &scale_sq == BigRational::one()
        });
        let scale = to_f64(&scale_sq).sqrt();
        let float: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| r.iter().map(|x| scale * to_f64(x)).collect())
            .collect();
        if !exact_unit {
            return Self::from_f64(float, tol);
        }
        let exact_gram = exact_gram_of(&rows, &scale_sq);
        let n = rows.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && exact_gram.values[exact_gram.index[i * n + j] as usize].is_one() {
                    return Err(Error::InvalidPointSet(format!(
                        "points {i} and {j} coincide"
                    )));
                }
            }
        }
        let gram = exact_gram
            .index
            .iter()
            .map(|&v| to_f64(&exact_gram.values[v as usize]))
            .collect();
        Ok(PointSet {
            dim,
            tolerance: tol,
            coords: float,
            gram,
            exact_gram: Some(exact_gram),
            exact_coords: Some(ExactCoords { rows, scale_sq }),
        })
    }

    fn check_float_norms_and_duplicates(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            let g = self.gram[i * n + i];
            if (g - 1.0).abs() > self.tolerance {
                return Err(Error::InvalidPointSet(format!(
                    "point {i} has squared norm {g}, not within {} of 1",
                    self.tolerance
                )));
            }
        }
        let dup = 1.0 - 10.0 * self.tolerance;
        for i in 0..n {
            for j in i + 1..n {
                if self.gram[i * n + j] >= dup {
                    return Err(Error::InvalidPointSet(format!(
                        "points {i} and {j} coincide"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn mode(&self) -> Mode {
        match (&self.exact_coords, &self.exact_gram) {
            (Some(c), _) if c.scale_sq.is_one() => Mode::Exact,
            (_, Some(_)) => Mode::GramExact,
            _ => Mode::Float,
        }
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    /// Exact rational coordinates and the common squared scale, if known.
    pub fn exact_coords(&self) -> Option<(&[Vec<BigRational>], &BigRational)> {
        self.exact_coords
            .as_ref()
            .map(|c| (c.rows.as_slice(), &c.scale_sq))
    }

    pub fn inner(&self, i: usize, j: usize) -> f64 {
        self.gram[i * self.len() + j]
    }

    pub fn exact_inner(&self, i: usize, j: usize) -> Option<&BigRational> {
        let n = self.len();
        self.exact_gram
            .as_ref()
            .map(|g| &g.values[g.index[i * n + j] as usize])
    }

    pub fn gram_matrix(&self) -> DMatrix<f64> {
        let n = self.len();
        DMatrix::from_row_slice(n, n, &self.gram)
    }

    /// The points at `indices`, keeping whatever exact data is available.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        let n = self.len();
        let m = indices.len();
        let mut gram = Vec::with_capacity(m * m);
        for &i in indices {
            for &j in indices {
                gram.push(self.gram[i * n + j]);
            }
        }
        let exact_gram = self.exact_gram.as_ref().map(|g| sub_gram(g, n, indices));
        let exact_coords = self.exact_coords.as_ref().map(|c| ExactCoords {
            rows: indices.iter().map(|&i| c.rows[i].clone()).collect(),
            scale_sq: c.scale_sq.clone(),
        });
        PointSet {
            dim: self.dim,
            tolerance: self.tolerance,
            coords: indices.iter().map(|&i| self.coords[i].clone()).collect(),
            gram,
            exact_gram,
            exact_coords,
        }
    }

    /// Float coordinates paired with a known exact Gram matrix, given as a
    /// value table and a row-major index into it.
    pub(crate) fn with_exact_gram(
        coords: Vec<Vec<f64>>,
        values: Vec<BigRational>,
        index: Vec<u32>,
        tol: f64,
    ) -> Result<PointSet> {
        let mut set = PointSet::from_f64(coords, tol)?;
        set.gram = index.iter().map(|&v| to_f64(&values[v as usize])).collect();
        set.exact_gram = Some(ExactGram { values, index });
        Ok(set)
    }

    /// New coordinates for the points at `indices`, keeping their exact
    /// Gram; used after an isometry computed in floating point.
    pub(crate) fn reembed(&self, indices: &[usize], coords: Vec<Vec<f64>>) -> Result<PointSet> {
        match &self.exact_gram {
            Some(g) => {
                let sub = sub_gram(g, self.len(), indices);
                Self::with_exact_gram(coords, sub.values, sub.index, self.tolerance)
            }
            None => PointSet::from_f64(coords, self.tolerance),
        }
    }

    fn near(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= 10.0 * self.tolerance
    }
}

fn sub_gram(g: &ExactGram, n: usize, indices: &[usize]) -> ExactGram {
    let mut remap: HashMap<u32, u32> = HashMap::new();
    let mut values = Vec::new();
    let mut index = Vec::with_capacity(indices.len() * indices.len());
    for &i in indices {
        for &j in indices {
            let old = g.index[i * n + j];
            let new = *remap.entry(old).or_insert_with(|| {
                values.push(g.values[old as usize].clone());
                (values.len() - 1) as u32
            });
            index.push(new);
        }
    }
    ExactGram { values, index }
}

fn exact_gram_of(rows: &[Vec<BigRational>], scale_sq: &BigRational) -> ExactGram {
    // integer rows over a common denominator
    let den = rows.iter().flatten().fold(BigInt::one(), |acc, q| {
        num_integer::Integer::lcm(&acc, q.denom())
    });
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|q| q.numer() * (&den / q.denom())).collect())
        .collect();
    let small: Option<Vec<Vec<i64>>> = ints
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| i64::try_from(x).ok().filter(|v| v.abs() < 1 << 28))
                .collect()
        })
        .collect();
    let n = rows.len();
    let mut raw: Vec<BigInt> = Vec::with_capacity(n * n);
    match small {
        Some(s) if s[0].len() < 1 << 6 => {
            for a in &s {
                for b in &s {
                    let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                    raw.push(BigInt::from(dot));
                }
            }
        }
        _ => {
            for a in &ints {
                for b in &ints {
                    raw.push(a.iter().zip(b).map(|(x, y)| x * y).sum());
                }
            }
        }
    }
    let factor = scale_sq / BigRational::from_integer(&den * &den);
    let mut lookup: HashMap<BigInt, u32> = HashMap::new();
    let mut values = Vec::new();
    let index = raw
        .into_iter()
        .map(|dot| {
            *lookup.entry(dot.clone()).or_insert_with(|| {
                values.push(BigRational::from_integer(dot) * &factor);
                (values.len() - 1) as u32
            })
        })
        .collect();
    ExactGram { values, index }
}

/// A cluster of inner products between distinct points.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleClass {
    pub value: f64,
    pub exact: Option<BigRational>,
    /// Number of unordered pairs.
    pub count: usize,
}

/// Distinct inner products between distinct points, ascending.
///
/// Float values are clustered by a sorted sweep that starts a new cluster
/// at every gap wider than `10 * tolerance`.
pub fn angle_set(x: &PointSet) -> Vec<AngleClass> {
    let n = x.len();
    if let Some(g) = &x.exact_gram {
        let mut counts = vec![0usize; g.values.len()];
        for i in 0..n {
            for j in i + 1..n {
                counts[g.index[i * n + j] as usize] += 1;
            }
        }
        let mut out: Vec<AngleClass> = counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(v, count)| AngleClass {
                value: to_f64(&g.values[v]),
                exact: Some(g.values[v].clone()),
                count,
            })
            .collect();
        out.sort_by(|a, b| a.exact.cmp(&b.exact));
        return out;
    }
    let mut vals: Vec<f64> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            vals.push(x.inner(i, j));
        }
    }
    vals.sort_by(f64::total_cmp);
    let gap = 10.0 * x.tolerance;
    let mut out: Vec<AngleClass> = Vec::new();
    let mut start = 0;
    for k in 0..vals.len() {
        if k + 1 == vals.len() || vals[k + 1] - vals[k] > gap {
            let cluster = &vals[start..=k];
            out.push(AngleClass {
                value: cluster.iter().sum::<f64>() / cluster.len() as f64,
                exact: None,
                count: cluster.len(),
            });
            start = k + 1;
        }
    }
    out
}

/// Largest `|<x, y>|` over distinct pairs; 0 for a single point.
pub fn coherence(x: &PointSet) -> f64 {
    let n = x.len();
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(x.inner(i, j).abs());
        }
    }
    best
}

/// Exact squared coherence when inner products are known exactly.
pub fn coherence_sq_exact(x: &PointSet) -> Option<BigRational> {
    angle_set(x)
        .into_iter()
        .map(|a| a.exact.map(|q| &q * &q))
        .try_fold(BigRational::zero(), |acc, q| q.map(|q| acc.max(q)))
}

fn antipodes(x: &PointSet) -> Option<Vec<usize>> {
    let n = x.len();
    let minus_one = x.exact_gram.as_ref().map(|g| {
        let m1 = -BigRational::one();
        g.values.iter().position(|v| *v == m1)
    });
    let mut partner = Vec::with_capacity(n);
    for i in 0..n {
        let found = match (&minus_one, &x.exact_gram) {
            (Some(None), _) => None,
            (Some(Some(v)), Some(g)) => (0..n).find(|&j| g.index[i * n + j] as usize == *v),
            _ => (0..n).find(|&j| x.near(x.inner(i, j), -1.0)),
        }?;
        partner.push(found);
    }
    Some(partner)
}

pub fn is_antipodal(x: &PointSet) -> bool {
    antipodes(x).is_some()
}

/// One point from each antipodal pair, keeping the member that occurs
/// first.
pub fn half(x: &PointSet) -> Result<PointSet> {
    let partner =
        antipodes(x).ok_or_else(|| Error::Precondition("half() needs an antipodal set".into()))?;
    let mut dropped = vec![false; x.len()];
    let mut keep = Vec::new();
    for i in 0..x.len() {
        if !dropped[i] {
            keep.push(i);
            dropped[partner[i]] = true;
        }
    }
    Ok(x.subset(&keep))
}

/// `S_1, ..., S_kmax` with `S_k = sum_{x,y} G_k(<x,y>)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector {
    pub values: Vec<f64>,
    /// Exact moments in exact and Gram-exact modes.
    pub exact: Option<Vec<BigRational>>,
}

impl MomentVector {
    /// `S_k` for `1 <= k <= kmax`.
    pub fn get(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn kmax(&self) -> usize {
        self.values.len()
    }
}

pub fn moments(x: &PointSet, kmax: usize) -> Result<MomentVector> {
    let d = x.dim as u64;
    if let Some(g) = &x.exact_gram {
        let mut counts = vec![0u64; g.values.len()];
        for &v in &g.index {
            counts[v as usize] += 1;
        }
        let mut sums = vec![BigRational::zero(); kmax];
        for (value, &count) in g.values.iter().zip(&counts) {
            let gv = gegenbauer_values(d, kmax, value)?;
            let c = BigRational::from_integer(count.into());
            for k in 1..=kmax {
                sums[k - 1] += &gv[k] * &c;
            }
        }
        return Ok(MomentVector {
            values: sums.iter().map(to_f64).collect(),
            exact: Some(sums),
        });
    }
    let n = x.len();
    let mut sums = vec![0.0; kmax];
    for i in 0..n {
        let diag = gegenbauer_values_f64(d, kmax, x.inner(i, i))?;
        for k in 1..=kmax {
            sums[k - 1] += diag[k];
        }
        for j in i + 1..n {
            let gv = gegenbauer_values_f64(d, kmax, x.inner(i, j))?;
            for k in 1..=kmax {
                sums[k - 1] += 2.0 * gv[k];
            }
        }
    }
    Ok(MomentVector {
        values: sums,
        exact: None,
    })
}

/// `S_k`; `S_0 = n^2`.
pub fn gegenbauer_moment(x: &PointSet, k: usize) -> Result<f64> {
    if k == 0 {
        return Ok((x.len() * x.len()) as f64);
    }
    Ok(moments(x, k)?.get(k))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Strength {
    pub t: usize,
    /// Every tested moment vanished, so `t = kmax` is only a lower bound.
    pub capped: bool,
    pub kmax: usize,
    /// Decided by exact arithmetic.
    pub exact: bool,
}

fn h_f64(d: usize, k: usize) -> f64 {
    to_f64(&BigRational::from_integer(
        harm_dim(d as u64, k as u64).expect("dimension validated"),
    ))
}

fn moment_vanishes(x: &PointSet, m: &MomentVector, k: usize) -> bool {
    match &m.exact {
        Some(e) => e[k - 1].is_zero(),
        None => {
            let n = x.len() as f64;
            m.get(k).abs() <= x.tolerance * n * n * h_f64(x.dim, k)
        }
    }
}

fn strength_from(x: &PointSet, m: &MomentVector, antipodal: bool) -> Strength {
    let kmax = m.kmax();
    let mut t = 0;
    for k in 1..=kmax {
        if !(antipodal && k % 2 == 1) && !moment_vanishes(x, m, k) {
            return Strength {
                t,
                capped: false,
                kmax,
                exact: m.exact.is_some(),
            };
        }
        t = k;
    }
    Strength {
        t,
        capped: true,
        kmax,
        exact: m.exact.is_some(),
    }
}

/// Default moment cutoff `2s + 2`.
pub fn default_kmax(x: &PointSet) -> usize {
    2 * angle_set(x).len() + 2
}

/// Largest `t <= kmax` with `S_1 = ... = S_t = 0` (within tolerance in
/// float mode). Odd moments of antipodal sets are skipped.
pub fn design_strength(x: &PointSet, kmax: Option<usize>) -> Result<Strength> {
    let kmax = kmax.unwrap_or_else(|| default_kmax(x));
    if kmax == 0 {
        return Err(Error::Precondition("kmax must be at least 1".into()));
    }
    let m = moments(x, kmax)?;
    Ok(strength_from(x, &m, is_antipodal(x)))
}

/// Frame operator `sum x x^T` equal to `(n/d) I`.
pub fn tight_frame_check(x: &PointSet) -> bool {
    let (n, d) = (x.len(), x.dim);
    if let Some(c) = &x.exact_coords {
        let target = BigRational::new(n.into(), d.into()) / &c.scale_sq;
        for a in 0..d {
            for b in a..d {
                let s: BigRational = c.rows.iter().map(|r| &r[a] * &r[b]).sum();
                let want = if a == b {
                    target.clone()
                } else {
                    BigRational::zero()
                };
                if s != want {
                    return false;
                }
            }
        }
        return true;
    }
    let target = n as f64 / d as f64;
    let tol = x.tolerance * n as f64;
    for a in 0..d {
        for b in a..d {
            let s: f64 = x.coords.iter().map(|r| r[a] * r[b]).sum();
            let want = if a == b { target } else { 0.0 };
            if (s - want).abs() > tol {
                return false;
            }
        }
    }
    true
}

/// `D_k(X) = (G_k(<x,y>))_{x,y}`.
pub fn d_matrix(x: &PointSet, k: usize) -> Result<DMatrix<f64>> {
    let n = x.len();
    let d = x.dim as u64;
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = gegenbauer_values_f64(d, k, x.inner(i, j))?[k];
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    Ok(m)
}

fn distinct_angles(x: &PointSet) -> Vec<f64> {
    angle_set(x).into_iter().map(|a| a.value).collect()
}

fn expansion(x: &PointSet, angles: Option<&[f64]>) -> Result<Vec<f64>> {
    let owned;
    let angles = match angles {
        Some(a) => a,
        None => {
            owned = distinct_angles(x);
            &owned
        }
    };
    let f = annihilator_f64(angles)?;
    Ok(gegenbauer_expand(&f, x.dim as u64)?.coeffs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatorCheck {
    /// `f_0, f_1, ...` of the annihilator.
    pub coeffs: Vec<f64>,
    pub residual: f64,
}

/// `max |sum_k f_k D_k - I|` for the annihilator of `angles` (default: the
/// set's own angle set). The identity holds for any superset of the
/// actual angles.
pub fn verify_annihilator_identity(
    x: &PointSet,
    angles: Option<&[f64]>,
) -> Result<AnnihilatorCheck> {
    let coeffs = expansion(x, angles)?;
    let n = x.len();
    let mut total = DMatrix::<f64>::zeros(n, n);
    for (k, f) in coeffs.iter().enumerate() {
        if *f != 0.0 {
            total += d_matrix(x, k)? * *f;
        }
    }
    total -= DMatrix::identity(n, n);
    Ok(AnnihilatorCheck {
        coeffs,
        residual: total.amax(),
    })
}

/// Strength of `X = half ∪ -half`, from the even moments of the half.
pub fn doubled_strength(half: &PointSet, kmax: Option<usize>) -> Result<Strength> {
    let kmax = kmax.unwrap_or_else(|| 2 * (angle_set(half).len() + 1) + 2);
    let m = moments(half, kmax)?;
    Ok(strength_from(half, &m, true))
}

/// Residual of `D_k D_l = |X̂| δ_{kl} D_k` on a half `X̂` of an antipodal
/// `t`-design; requires `k + l <= t` and `k ≡ l (mod 2)`.
pub fn verify_orthogonality(half: &PointSet, k: usize, l: usize) -> Result<f64> {
    if (k + l) % 2 == 1 {
        return Err(Error::Precondition(format!(
            "k = {k} and l = {l} differ in parity"
        )));
    }
    let t = doubled_strength(half, Some(k + l + 1))?.t;
    if k + l > t {
        return Err(Error::Precondition(format!(
            "k + l = {} exceeds the strength {t} of the doubled set",
            k + l
        )));
    }
    let dk = d_matrix(half, k)?;
    let dl = d_matrix(half, l)?;
    let mut lhs = &dk * &dl;
    if k == l {
        lhs -= &dk * half.len() as f64;
    }
    Ok(lhs.amax())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimIdentity {
    pub dimension: usize,
    pub size: usize,
    pub matches: bool,
}

/// Dimension of `sum_{k: f_k > 0} V_k(X)` with `V_k` the column space of
/// `D_k(X)`; equals `|X|` for an s-distance set with that annihilator.
pub fn dim_identity(x: &PointSet, angles: Option<&[f64]>) -> Result<DimIdentity> {
    let coeffs = expansion(x, angles)?;
    let n = x.len();
    let mut columns: Vec<nalgebra::DVector<f64>> = Vec::new();
    for (k, f) in coeffs.iter().enumerate() {
        if *f <= 1e-12 {
            continue;
        }
        let eig = SymmetricEigen::new(d_matrix(x, k)?);
        let top = eig.eigenvalues.amax();
        for (i, &lam) in eig.eigenvalues.iter().enumerate() {
            if lam > 1e-8 * top {
                columns.push(eig.eigenvectors.column(i).into_owned());
            }
        }
    }
    let dimension = if columns.is_empty() {
        0
    } else {
        let m = DMatrix::from_columns(&columns);
        let sv = m.singular_values();
        let top = sv.amax();
        sv.iter().filter(|&&s| s > 1e-8 * top).count()
    };
    Ok(DimIdentity {
        dimension,
        size: n,
        matches: dimension == n,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignProfile {
    pub dim: usize,
    pub size: usize,
    pub mode: Mode,
    pub angle_set: Vec<AngleClass>,
    pub s: usize,
    pub coherence: f64,
    pub coherence_sq_exact: Option<BigRational>,
    pub strength: Strength,
    pub antipodal: bool,
    pub moments: MomentVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    Etf,
    LevensteinEquality,
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub profile: DesignProfile,
    pub kind: ExtremalKind,
    pub welch_equality: bool,
    pub levenstein_equality: bool,
    /// `Some(tight)` for antipodal sets: whether `|X|` meets the absolute
    /// bound for `s` distances.
    pub dgs_tight: Option<bool>,
    pub notes: Vec<String>,
}

fn matches_bound(
    x: &PointSet,
    coherence_sq: f64,
    exact: &Option<BigRational>,
    bound: &BigRational,
) -> bool {
    match exact {
        Some(q) => q == bound,
        None => (coherence_sq - to_f64(bound)).abs() <= x.tolerance,
    }
}

pub fn profile(x: &PointSet, kmax: Option<usize>) -> Result<DesignProfile> {
    let angle_set = angle_set(x);
    let kmax = kmax.unwrap_or(2 * angle_set.len() + 2);
    let antipodal = is_antipodal(x);
    let moments = moments(x, kmax.max(1))?;
    let strength = strength_from(x, &moments, antipodal);
    Ok(DesignProfile {
        dim: x.dim,
        size: x.len(),
        mode: x.mode(),
        s: angle_set.len(),
        coherence: coherence(x),
        coherence_sq_exact: coherence_sq_exact(x),
        angle_set,
        strength,
        antipodal,
        moments,
    })
}

pub fn classify(x: &PointSet) -> Result<Classification> {
    let profile = profile(x, None)?;
    let (d, n) = (x.dim as u64, x.len() as u64);
    let c2 = profile.coherence * profile.coherence;
    let mut notes = Vec::new();
    if profile.mode == Mode::Float {
        notes.push("numerical certificate, not a proof".to_string());
    }
    let equiangular = match profile.angle_set.as_slice() {
        [] => false,
        classes => classes
            .iter()
            .all(|a| x.near(a.value.abs(), profile.coherence)),
    };
    let welch_equality = equiangular
        && welch_sq(d, n).is_ok_and(|w| matches_bound(x, c2, &profile.coherence_sq_exact, &w));
    let levenstein_equality = levenstein_sq(d, n).is_ok_and(|l| {
        let alpha = to_f64(&l).sqrt();
        let vals: Vec<f64> = profile.angle_set.iter().map(|a| a.value).collect();
        vals.len() == 3
            && x.near(vals[0], -alpha)
            && x.near(vals[1], 0.0)
            && x.near(vals[2], alpha)
            && matches_bound(x, c2, &profile.coherence_sq_exact, &l)
    });
    let kind = if welch_equality {
        ExtremalKind::Etf
    } else if levenstein_equality {
        ExtremalKind::LevensteinEquality
    } else {
        ExtremalKind::None
    };
    let dgs_tight = if profile.antipodal {
        let bound = dgs_antipodal(d, profile.s as u64)?;
        let tight = bound.value.as_ref() == Some(&BigRational::from_integer(n.into()));
        notes.push(format!(
            "|X| = {n} against absolute bound {} for s = {}",
            bound.value.map(|v| v.to_string()).unwrap_or_default(),
            profile.s
        ));
        Some(tight)
    } else {
        None
    };
    Ok(Classification {
        profile,
        kind,
        welch_equality,
        levenstein_equality,
        dgs_tight,
        notes,
    })
}
