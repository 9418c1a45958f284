//! The 196560 minimal vectors of the Leech lattice.
//!
//! Vectors live in `Z^24` with the form divided by 8, so `e_i² = 1/8`.
//! Coordinates and raw products stay integral; the true value of a raw
//! product is `raw / 8`. The minimal vectors (true norm 4, raw norm 32) come
//! in three shapes:
//!
//! | shape | coordinates | count |
//! |-------|-------------|-------|
//! | S31 | one `∓3`, twenty-three `±1`, upper signs on a codeword | 24 · 4096 = 98304 |
//! | S20 | `±2` on an octad, evenly many `+` | 2^7 · 759 = 97152 |
//! | S40 | `±4` on two positions | 4 · C(24,2) = 1104 |

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::golay::{Codeword, GolayCode, N};
use crate::lattice::{IntegralLattice, Matrix};

/// Raw norm of a minimal vector (true norm 4).
pub const MIN_RAW_NORM: i32 = 32;
/// Divisor turning raw products into true ones.
pub const SCALE: i64 = 8;

pub const SHAPE31_COUNT: usize = 24 * 4096;
pub const SHAPE20_COUNT: usize = 128 * 759;
pub const SHAPE40_COUNT: usize = 4 * 276;
pub const MINIMAL_COUNT: usize = SHAPE31_COUNT + SHAPE20_COUNT + SHAPE40_COUNT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Shape {
    S31,
    S20,
    S40,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeechVector {
    pub coords: [i8; N],
    pub shape: Shape,
}

/// A raw integer product together with its true value `raw / 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledInnerProduct {
    pub raw: i64,
}

impl ScaledInnerProduct {
    pub fn true_value(self) -> num_rational::Rational64 {
        num_rational::Rational64::new(self.raw, SCALE)
    }

    /// The true value when it is an integer.
    pub fn as_integer(self) -> Option<i64> {
        (self.raw % SCALE == 0).then_some(self.raw / SCALE)
    }
}

impl LeechVector {
    pub fn new(coords: [i8; N], shape: Shape) -> Self {
        LeechVector { coords, shape }
    }

    /// Build from coordinates, inferring the shape. `None` if the coordinates
    /// do not have one of the three minimal shapes.
    pub fn from_coords(coords: [i8; N]) -> Option<Self> {
        let count = |v: i8| coords.iter().filter(|&&c| c.abs() == v).count();
        let shape = match (count(1), count(2), count(3), count(4)) {
            (23, 0, 1, 0) => Shape::S31,
            (0, 8, 0, 0) => Shape::S20,
            (0, 0, 0, 2) => Shape::S40,
            _ => return None,
        };
        Some(LeechVector { coords, shape })
    }

    pub fn inner(&self, other: &LeechVector) -> ScaledInnerProduct {
        ScaledInnerProduct {
            raw: raw_dot(&self.coords, &other.coords) as i64,
        }
    }

    pub fn raw_norm(&self) -> i32 {
        raw_dot(&self.coords, &self.coords)
    }

    /// Coordinate at the 1-based position `p`.
    pub fn at(&self, p: usize) -> i8 {
        self.coords[p - 1]
    }

    pub fn negated(&self) -> LeechVector {
        LeechVector {
            coords: self.coords.map(|c| -c),
            shape: self.shape,
        }
    }

    /// The codeword this vector was built from: for S31 the positions carrying
    /// an upper sign (`+1` or `-3`), for S20 the supporting octad.
    pub fn codeword(&self) -> Option<Codeword> {
        let m = match self.shape {
            Shape::S31 => self
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == 1 || c == -3)
                .fold(0u32, |m, (i, _)| m | 1 << i),
            Shape::S20 => self
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .fold(0u32, |m, (i, _)| m | 1 << i),
            Shape::S40 => return None,
        };
        Some(Codeword::from_mask(m))
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl fmt::Debug for LeechVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.shape, self.coords)
    }
}

impl fmt::Display for LeechVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[inline]
pub fn raw_dot(x: &[i8; N], y: &[i8; N]) -> i32 {
    x.iter().zip(y).map(|(&a, &b)| a as i32 * b as i32).sum()
}

/// Inner product of two minimal vectors.
pub fn inner(x: &LeechVector, y: &LeechVector) -> ScaledInnerProduct {
    x.inner(y)
}

/// The 24 shape-S31 vectors for a single codeword, in position order.
pub fn shape31_for(o: Codeword) -> impl Iterator<Item = LeechVector> {
    let base: [i8; N] = std::array::from_fn(|i| if o.contains(i + 1) { 1 } else { -1 });
    (0..N).map(move |k| {
        let mut coords = base;
        coords[k] = if base[k] == 1 { -3 } else { 3 };
        LeechVector::new(coords, Shape::S31)
    })
}

/// The 128 shape-S20 vectors on one octad.
///
/// The first seven signs run through a Gray code; the eighth is fixed by
/// requiring an even number of `+2` entries.
pub fn shape20_for(octad: Codeword) -> impl Iterator<Item = LeechVector> {
    debug_assert_eq!(octad.weight(), 8);
    let support: Vec<usize> = octad.positions().map(|p| p - 1).collect();
    (0u32..128).map(move |i| {
        let gray = i ^ (i >> 1);
        let mut coords = [0i8; N];
        for (bit, &pos) in support[..7].iter().enumerate() {
            coords[pos] = if gray >> bit & 1 == 1 { 2 } else { -2 };
        }
        coords[support[7]] = if gray.count_ones() % 2 == 1 { 2 } else { -2 };
        LeechVector::new(coords, Shape::S20)
    })
}

pub fn shape40() -> impl Iterator<Item = LeechVector> {
    (0..N).flat_map(|i| {
        (i + 1..N).flat_map(move |j| {
            [(4i8, 4i8), (4, -4), (-4, 4), (-4, -4)].into_iter().map(move |(a, b)| {
                let mut coords = [0i8; N];
                coords[i] = a;
                coords[j] = b;
                LeechVector::new(coords, Shape::S40)
            })
        })
    })
}

/// Codeword-major, then position.
pub fn enumerate_shape31(code: &GolayCode) -> Vec<LeechVector> {
    code.words().iter().flat_map(|&o| shape31_for(o)).collect()
}

pub fn enumerate_shape20(code: &GolayCode) -> Vec<LeechVector> {
    code.octads().flat_map(shape20_for).collect()
}

pub fn enumerate_shape40() -> Vec<LeechVector> {
    shape40().collect()
}

/// All minimal vectors: S31, then S20, then S40.
pub fn all_minimal_vectors(code: &GolayCode) -> Vec<LeechVector> {
    let mut v = enumerate_shape31(code);
    v.extend(enumerate_shape20(code));
    v.extend(shape40());
    v
}

/// Stream every minimal vector through `keep` in parallel, sharding by
/// codeword, and collect the accepted ones in the deterministic census order.
pub fn filter_minimal_vectors<F>(code: &GolayCode, keep: F) -> Vec<LeechVector>
where
    F: Fn(&LeechVector) -> bool + Sync,
{
    let mut out: Vec<LeechVector> = code
        .words()
        .par_iter()
        .flat_map_iter(|&o| shape31_for(o).filter(|v| keep(v)).collect::<Vec<_>>())
        .collect();
    let octads: Vec<Codeword> = code.octads().collect();
    out.extend(
        octads
            .par_iter()
            .flat_map_iter(|&o| shape20_for(o).filter(|v| keep(v)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    out.extend(shape40().filter(|v| keep(v)));
    out
}

/// Summary of the census-wide structural checks.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CensusStats {
    pub shape31: usize,
    pub shape20: usize,
    pub shape40: usize,
    pub total: usize,
    pub duplicates: usize,
    pub negation_closed: bool,
    pub all_raw_norm_32: bool,
}

pub fn census_stats(vectors: &[LeechVector]) -> CensusStats {
    let count = |s: Shape| vectors.iter().filter(|v| v.shape == s).count();
    let mut sorted: Vec<[i8; N]> = vectors.iter().map(|v| v.coords).collect();
    sorted.par_sort_unstable();
    let before = sorted.len();
    sorted.dedup();
    let duplicates = before - sorted.len();
    let negation_closed = sorted
        .par_iter()
        .all(|c| sorted.binary_search(&c.map(|x| -x)).is_ok());
    CensusStats {
        shape31: count(Shape::S31),
        shape20: count(Shape::S20),
        shape40: count(Shape::S40),
        total: vectors.len(),
        duplicates,
        negation_closed,
        all_raw_norm_32: vectors.par_iter().all(|v| v.raw_norm() == MIN_RAW_NORM),
    }
}

/// Write vectors as 24 space-separated integers per line, lexicographically sorted.
pub fn export_vectors<W: Write>(vectors: &[LeechVector], mut out: W) -> Result<()> {
    let mut sorted: Vec<[i8; N]> = vectors.iter().map(|v| v.coords).collect();
    sorted.sort_unstable();
    for c in sorted {
        let line: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// A basis of the lattice spanned by the S31 vectors, chosen among those vectors.
///
/// Start from the first 24 independent vectors and repeatedly exchange a basis
/// vector `b_i` for a generator `v` whose `i`-th coordinate in the current
/// basis satisfies `0 < |c_i| < 1`; this shrinks the index of the spanned
/// sublattice by the factor `|c_i|`. Stops at the index of the full span,
/// read off the incremental HNF of all generators.
pub fn leech_basis(generators: &[LeechVector]) -> Result<IntegralLattice> {
    let rows: Vec<Vec<BigInt>> = generators.iter().map(|v| v.to_bigint()).collect();
    let span = crate::lattice::hnf(&Matrix::from_rows(N, rows.clone()));
    if span.rows() != N {
        return Err(Error::construction(format!(
            "generators span rank {} instead of 24",
            span.rows()
        )));
    }
    let target = span.diagonal_product().abs();

    let mut chosen = independent_prefix(&rows)?;
    let mut basis = Matrix::from_rows(N, chosen.iter().map(|&i| rows[i].clone()).collect());
    let mut det = basis.determinant();
    let mut rounds = 0;
    while det.abs() != target {
        rounds += 1;
        if rounds > 200 {
            return Err(Error::construction("basis exchange did not converge"));
        }
        // Hadamard bounds the adjugate entries by 32^(23/2) and the scaled
        // coordinates by 3 * 24 times that, well inside i128.
        let adj: Vec<i128> = basis
            .adjugate()
            .into_data()
            .into_iter()
            .map(|x| i128::try_from(x).map_err(|_| Error::construction("adjugate overflow")))
            .collect::<Result<_>>()?;
        let d_abs = i128::try_from(det.abs()).map_err(|_| Error::construction("det overflow"))?;
        // w = v · adj(B) are the coordinates of v scaled by det(B).
        let best = generators
            .par_iter()
            .enumerate()
            .filter_map(|(gi, v)| {
                (0..N)
                    .map(|i| {
                        let wi: i128 = (0..N).map(|j| v.coords[j] as i128 * adj[j * N + i]).sum();
                        (wi.abs(), i)
                    })
                    .filter(|&(w, _)| w != 0 && w < d_abs)
                    .min()
                    .map(|(w, i)| (w, gi, i))
            })
            .min();
        let Some((_, gi, i)) = best else {
            return Err(Error::construction("no index-reducing exchange exists"));
        };
        chosen[i] = gi;
        basis = Matrix::from_rows(N, chosen.iter().map(|&i| rows[i].clone()).collect());
        det = basis.determinant();
    }
    let lattice = IntegralLattice::scaled_euclidean(basis, SCALE);
    let gram = lattice.gram();
    let det_gram = gram.determinant();
    if det_gram != BigRational::one() {
        return Err(Error::construction(format!(
            "Leech basis Gram has determinant {det_gram}"
        )));
    }
    if !lattice.is_even() {
        return Err(Error::construction("Leech basis Gram is not even"));
    }
    Ok(lattice)
}

fn independent_prefix(rows: &[Vec<BigInt>]) -> Result<Vec<usize>> {
    let mut acc = crate::lattice::HnfAccumulator::new(N);
    let mut chosen = Vec::with_capacity(N);
    for (i, r) in rows.iter().enumerate() {
        let rank = acc.rank();
        acc.insert(r.clone());
        if acc.rank() > rank {
            chosen.push(i);
            if chosen.len() == N {
                return Ok(chosen);
            }
        }
    }
    Err(Error::construction("fewer than 24 independent generators"))
}
