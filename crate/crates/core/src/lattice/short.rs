//! Fincke–Pohst enumeration of short vectors (and short coset vectors) of a
//! positive definite form.
//!
//! Floating point is used only to bound the search tree, with a small slack
//! on every bound. Each leaf is re-evaluated in exact arithmetic before it is
//! reported, so rounding can only cost time, never correctness.
//!
//! Before enumerating, the basis is pair-reduced (`bᵢ ← bᵢ − round(bᵢ·bⱼ / bⱼ·bⱼ) bⱼ`
//! while some norm drops); results are mapped back to the caller's basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

const SLACK: f64 = 1e-7;

/// All `x ∈ Z^n` with `(x + shift) G (x + shift)ᵀ = target`, sorted.
pub fn short_vectors(
    gram: &RatMatrix,
    target: &BigRational,
    shift: Option<&[BigRational]>,
) -> Result<Vec<Vec<i64>>> {
    Ok(short_vectors_up_to(gram, target, shift)?
        .into_iter()
        .filter(|(_, norm)| norm == target)
        .map(|(x, _)| x)
        .collect())
}

/// All `x` with `0 < (x + shift) G (x + shift)ᵀ ≤ bound` (zero excluded only
/// without a shift), with their exact norms, sorted by vector.
pub fn short_vectors_up_to(
    gram: &RatMatrix,
    bound: &BigRational,
    shift: Option<&[BigRational]>,
) -> Result<Vec<(Vec<i64>, BigRational)>> {
    let n = gram.rows();
    if !gram.is_square() {
        return Err(Error::Dimension("Gram matrix is not square".into()));
    }
    if let Some(s) = shift {
        if s.len() != n {
            return Err(Error::Dimension("shift has the wrong length".into()));
        }
    }
    if !gram.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if bound.is_negative() {
        return Ok(Vec::new());
    }

    let (reduced, t) = pair_reduce(gram);
    // x = y·T, so the shift in reduced coordinates is s·T⁻¹.
    let shift_reduced: Vec<BigRational> = match shift {
        Some(s) => t.to_rational().inverse()?.left_mul_vec(s),
        None => vec![BigRational::zero(); n],
    };
    let exact = ExactNorm::new(&reduced, &shift_reduced);
    let chol = cholesky_form(&reduced)?;
    let center: Vec<f64> = shift_reduced.iter().map(|x| -to_f64(x)).collect();
    let bound_f = to_f64(bound) * (1.0 + SLACK) + SLACK;
    let skip_zero = shift.is_none();

    let mut found: Vec<(Vec<i64>, BigRational)> = if n == 0 {
        Vec::new()
    } else {
        let search = Search {
            n,
            q: &chol,
            center: &center,
            bound: bound_f,
        };
        let split = n.min(3);
        let mut prefixes = Vec::new();
        search.prefixes(n, split, &mut vec![0; n], 0.0, &mut prefixes);
        prefixes
            .into_par_iter()
            .flat_map_iter(|(mut y, partial)| {
                let mut out = Vec::new();
                search.descend(n - split, &mut y, partial, &mut |y| {
                    if skip_zero && y.iter().all(|&v| v == 0) {
                        return;
                    }
                    let norm = exact.eval(y);
                    if &norm <= bound {
                        out.push((y.to_vec(), norm));
                    }
                });
                out
            })
            .collect()
    };

    let t64: Vec<Vec<i64>> = t
        .row_iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small transform")).collect())
        .collect();
    for (y, _) in found.iter_mut() {
        let mut x = vec![0i64; n];
        for (i, &yi) in y.iter().enumerate() {
            if yi != 0 {
                for (xj, tij) in x.iter_mut().zip(&t64[i]) {
                    *xj += yi * tij;
                }
            }
        }
        *y = x;
    }
    found.sort();
    Ok(found)
}

struct Search<'a> {
    n: usize,
    /// Cholesky-style coefficients: `q[i][i]` diagonal, `q[i][j]` (j > i) multipliers.
    q: &'a [Vec<f64>],
    center: &'a [f64],
    bound: f64,
}

impl Search<'_> {
    /// Interval of admissible values at `level` given the coordinates above it.
    fn range(&self, level: usize, y: &[i64], partial: f64) -> Option<(i64, i64, f64)> {
        let rem = self.bound - partial;
        if rem < 0.0 {
            return None;
        }
        let mut c = self.center[level];
        for j in level + 1..self.n {
            c -= self.q[level][j] * (y[j] as f64 - self.center[j]);
        }
        let w = (rem / self.q[level][level]).sqrt() + SLACK;
        Some(((c - w).ceil() as i64, (c + w).floor() as i64, c))
    }

    fn step(&self, level: usize, v: i64, c: f64, partial: f64) -> f64 {
        let d = v as f64 - c;
        partial + self.q[level][level] * d * d
    }

    /// Collect partial assignments of the top `depth` coordinates.
    fn prefixes(&self, level: usize, depth: usize, y: &mut Vec<i64>, partial: f64, out: &mut Vec<(Vec<i64>, f64)>) {
        if depth == 0 {
            out.push((y.clone(), partial));
            return;
        }
        let l = level - 1;
        if let Some((lo, hi, c)) = self.range(l, y, partial) {
            for v in lo..=hi {
                y[l] = v;
                self.prefixes(l, depth - 1, y, self.step(l, v, c, partial), out);
            }
            y[l] = 0;
        }
    }

    fn descend(&self, level: usize, y: &mut [i64], partial: f64, leaf: &mut impl FnMut(&[i64])) {
        if level == 0 {
            leaf(y);
            return;
        }
        let l = level - 1;
        if let Some((lo, hi, c)) = self.range(l, y, partial) {
            for v in lo..=hi {
                y[l] = v;
                let p = self.step(l, v, c, partial);
                if p <= self.bound {
                    self.descend(l, y, p, leaf);
                }
            }
            y[l] = 0;
        }
    }
}

/// `Q(x) = Σᵢ q_ii (xᵢ + Σ_{j>i} q_ij x_j)²` decomposition in floating point.
fn cholesky_form(gram: &RatMatrix) -> Result<Vec<Vec<f64>>> {
    let n = gram.rows();
    let mut q: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| to_f64(&gram[(i, j)])).collect())
        .collect();
    for i in 0..n {
        if q[i][i] <= 0.0 {
            return Err(Error::NotPositiveDefinite);
        }
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    Ok(q)
}

/// Greedy pairwise size reduction. Returns `(T G Tᵀ, T)` with `T` unimodular.
fn pair_reduce(gram: &RatMatrix) -> (RatMatrix, IntMatrix) {
    let n = gram.rows();
    let mut g = gram.clone();
    let mut t = IntMatrix::identity(n);
    let two = BigRational::from_integer(2.into());
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                // ||bᵢ − k bⱼ||² = gᵢᵢ − 2k gᵢⱼ + k² gⱼⱼ is minimized at k = round(gᵢⱼ/gⱼⱼ).
                let k = (&g[(i, j)] / &g[(j, j)]).round();
                if k.is_zero() {
                    continue;
                }
                let new_norm = &g[(i, i)] - &two * &k * &g[(i, j)] + &k * &k * &g[(j, j)];
                if new_norm >= g[(i, i)] {
                    continue;
                }
                let ki = k.to_integer();
                for c in 0..n {
                    let v = &g[(i, c)] - &k * &g[(j, c)];
                    g[(i, c)] = v;
                    let v = &t[(i, c)] - &ki * &t[(j, c)];
                    t[(i, c)] = v;
                }
                for r in 0..n {
                    let v = &g[(r, i)] - &k * &g[(r, j)];
                    g[(r, i)] = v;
                }
                changed = true;
            }
        }
        if !changed {
            return (g, t);
        }
    }
}

/// Exact `(y + s) G (y + s)ᵀ` using integers scaled by the denominators.
struct ExactNorm {
    /// `D·G` as integers.
    g: Vec<Vec<i128>>,
    /// `e·s` as integers.
    s: Vec<i128>,
    e: i128,
    /// `D·e²`.
    scale: BigRational,
    big_g: IntMatrix,
    big_s: Vec<BigInt>,
    big_e: BigInt,
}

impl ExactNorm {
    fn new(gram: &RatMatrix, shift: &[BigRational]) -> Self {
        let (d, gi) = gram.clear_denominators();
        let e = shift.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let er = BigRational::from_integer(e.clone());
        let big_s: Vec<BigInt> = shift.iter().map(|x| (x * &er).to_integer()).collect();
        let scale = BigRational::from_integer(&d * &e * &e);
        ExactNorm {
            g: gi
                .row_iter()
                .map(|r| r.iter().map(|x| x.to_i128().unwrap_or(i128::MAX)).collect())
                .collect(),
            s: big_s.iter().map(|x| x.to_i128().unwrap_or(i128::MAX)).collect(),
            e: e.to_i128().unwrap_or(i128::MAX),
            scale,
            big_g: gi,
            big_s,
            big_e: e,
        }
    }

    fn eval(&self, y: &[i64]) -> BigRational {
        match self.eval_small(y) {
            Some(v) => BigRational::from_integer(v.into()) / &self.scale,
            None => self.eval_big(y),
        }
    }

    fn eval_small(&self, y: &[i64]) -> Option<i128> {
        let z: Vec<i128> = y
            .iter()
            .zip(&self.s)
            .map(|(&yi, &si)| (yi as i128).checked_mul(self.e)?.checked_add(si))
            .collect::<Option<_>>()?;
        let mut total: i128 = 0;
        for (i, zi) in z.iter().enumerate() {
            if *zi == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for (gij, zj) in self.g[i].iter().zip(&z) {
                row = row.checked_add(gij.checked_mul(*zj)?)?;
            }
            total = total.checked_add(zi.checked_mul(row)?)?;
        }
        Some(total)
    }

    fn eval_big(&self, y: &[i64]) -> BigRational {
        let z: Vec<BigInt> = y
            .iter()
            .zip(&self.big_s)
            .map(|(&yi, si)| BigInt::from(yi) * &self.big_e + si)
            .collect();
        BigRational::from_integer(self.big_g.bilinear(&z, &z)) / &self.scale
    }
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::rat;

    #[test]
    fn identity_rank_two_norm_one() {
        let g = RatMatrix::identity(2);
        let v = short_vectors(&g, &rat(1, 1), None).unwrap();
        assert_eq!(v, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn a2_has_six_roots() {
        let g = RatMatrix::from_i64(2, 2, &[2, -1, -1, 2]);
        assert_eq!(short_vectors(&g, &rat(2, 1), None).unwrap().len(), 6);
        assert!(short_vectors(&g, &rat(1, 1), None).unwrap().is_empty());
    }

    #[test]
    fn skewed_basis_is_handled() {
        // Z^2 in the basis (1,0), (7,1).
        let g = RatMatrix::from_i64(2, 2, &[1, 7, 7, 50]);
        let v = short_vectors(&g, &rat(1, 1), None).unwrap();
        assert_eq!(v.len(), 4);
        for x in &v {
            let xr: Vec<BigRational> = x.iter().map(|&c| rat(c, 1)).collect();
            assert_eq!(g.bilinear(&xr, &xr), rat(1, 1));
        }
    }

    #[test]
    fn coset_vectors() {
        // Z with shift 1/2: (x + 1/2)² = 1/4 at x = 0, -1.
        let g = RatMatrix::identity(1);
        let v = short_vectors(&g, &rat(1, 4), Some(&[rat(1, 2)])).unwrap();
        assert_eq!(v, vec![vec![-1], vec![0]]);
        let v = short_vectors(&g, &rat(9, 4), Some(&[rat(1, 2)])).unwrap();
        assert_eq!(v, vec![vec![-2], vec![1]]);
    }

    #[test]
    fn indefinite_is_rejected() {
        let g = RatMatrix::from_i64(2, 2, &[4, 0, 0, -2]);
        assert!(matches!(
            short_vectors(&g, &rat(2, 1), None),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn d4_root_count_up_to_bound() {
        let g = RatMatrix::from_i64(4, 4, &[2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2, 0, 0, -1, 0, 2]);
        let v = short_vectors_up_to(&g, &rat(2, 1), None).unwrap();
        assert_eq!(v.len(), 24);
        assert!(v.iter().all(|(_, n)| n == &rat(2, 1)));
    }
}
