//! Exact integral lattice machinery: normal forms, sublattices and
//! complements, discriminant forms and short-vector enumeration.
//!
//! A lattice is a set of integer row vectors (its basis) inside an ambient
//! rational quadratic space `Q^n` carrying a Gram matrix. For sublattices of
//! the Leech coordinates the ambient form is the standard one divided by 8;
//! abstract lattices use the identity basis and their own Gram matrix.

pub mod fqf;
pub mod io;
pub mod matrix;
pub mod normal_form;
pub mod short;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use fqf::{discriminant_form, fqf_isomorphic, FiniteQuadraticForm, Isometry};
pub use matrix::{int, rat, IntMatrix, Matrix, RatMatrix};
pub use normal_form::{hnf, hnf_with_transform, snf, HnfAccumulator, Smith};
pub use short::{short_vectors, short_vectors_up_to};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralLattice {
    basis: IntMatrix,
    ambient: RatMatrix,
    gram: RatMatrix,
}

impl IntegralLattice {
    /// Lattice with the given basis rows in a space whose form is `Σ xᵢyᵢ / scale`.
    pub fn scaled_euclidean(basis: IntMatrix, scale: i64) -> Self {
        let n = basis.cols();
        let s = rat(1, scale);
        let ambient = RatMatrix::diagonal(&vec![s; n]);
        Self::in_ambient(basis, ambient)
    }

    pub fn in_ambient(basis: IntMatrix, ambient: RatMatrix) -> Self {
        assert_eq!(basis.cols(), ambient.rows(), "basis does not live in the ambient space");
        let b = basis.to_rational();
        let gram = b.mul(&ambient).mul(&b.transpose());
        IntegralLattice {
            basis,
            ambient,
            gram,
        }
    }

    /// `Z^n` with the given Gram matrix.
    pub fn from_gram(gram: RatMatrix) -> Self {
        let n = gram.rows();
        Self::in_ambient(IntMatrix::identity(n), gram)
    }

    pub fn from_int_gram(gram: &IntMatrix) -> Self {
        Self::from_gram(gram.to_rational())
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn ambient(&self) -> &RatMatrix {
        &self.ambient
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// The Gram matrix when every entry is an integer.
    pub fn int_gram(&self) -> Option<IntMatrix> {
        self.gram.to_integer()
    }

    pub fn is_integral(&self) -> bool {
        self.gram.is_integral()
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| self.gram[(i, i)].to_integer().is_even())
    }

    pub fn determinant(&self) -> BigRational {
        self.gram.determinant()
    }

    /// Ambient product of two ambient coordinate vectors.
    pub fn ambient_inner(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        self.ambient.bilinear(x, y)
    }

    /// Ambient coordinates of `Σ cᵢ bᵢ`.
    pub fn embed(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        self.basis.to_rational().left_mul_vec(coeffs)
    }

    /// Same lattice with the ambient form negated.
    pub fn negated(&self) -> Self {
        Self::in_ambient(self.basis.clone(), -&self.ambient)
    }

    /// Integer coordinates of an ambient vector in this basis, if it is a member.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let rv: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let c = self.rational_coordinates(&rv)?;
        c.iter()
            .all(|x| x.is_integer())
            .then(|| c.into_iter().map(|x| x.to_integer()).collect())
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Rational coordinates of an ambient vector in the span of the basis.
    pub fn rational_coordinates(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(v.len(), self.dim());
        // Solve c·B = v on a set of pivot columns, then check the rest.
        let b = self.basis.to_rational();
        let k = self.rank();
        let mut rows: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                let mut r = b.row(i).to_vec();
                r.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                r
            })
            .collect();
        let mut rem = v.to_vec();
        rem.extend(std::iter::repeat(BigRational::zero()).take(k));
        let n = self.dim();
        let mut pivot = 0;
        for col in 0..n {
            let Some(p) = (pivot..k).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot, p);
            let inv = rows[pivot][col].recip();
            rows[pivot].iter_mut().for_each(|x| *x *= &inv);
            for i in 0..k {
                if i != pivot && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    let src = rows[pivot].clone();
                    rows[i].iter_mut().zip(&src).for_each(|(x, y)| *x -= &f * y);
                }
            }
            if !rem[col].is_zero() {
                let f = rem[col].clone();
                rem.iter_mut().zip(&rows[pivot]).for_each(|(x, y)| *x -= &f * y);
            }
            pivot += 1;
        }
        if rem[..n].iter().any(|x| !x.is_zero()) {
            return None;
        }
        // rem tail holds −c.
        Some(rem[n..].iter().map(|x| -x).collect())
    }

    /// Canonical basis (HNF) of the same lattice, for equality tests.
    pub fn hnf_basis(&self) -> IntMatrix {
        hnf(&self.basis)
    }

    /// Whether the two lattices are the same set of vectors in the same ambient space.
    pub fn same_lattice(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.hnf_basis() == other.hnf_basis()
    }

    /// Lattice spanned by the given ambient vectors in this lattice's ambient space.
    pub fn span_in_ambient(&self, rows: Vec<Vec<BigInt>>) -> Self {
        let basis = hnf(&IntMatrix::from_rows(self.dim(), rows));
        Self::in_ambient(basis, self.ambient.clone())
    }
}

/// Repeated coordinate solves against one basis: `c = v_P · B_P⁻¹` on a set
/// `P` of pivot columns, then an exact check `c·B = v`.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    pivots: Vec<usize>,
    inverse: RatMatrix,
    basis: RatMatrix,
}

impl CoordinateSolver {
    pub fn new(lat: &IntegralLattice) -> Result<Self> {
        let basis = lat.basis.to_rational();
        let (k, n) = (basis.rows(), basis.cols());
        let mut work = basis.clone();
        let mut pivots = Vec::with_capacity(k);
        let mut r = 0;
        for col in 0..n {
            if r == k {
                break;
            }
            let Some(p) = (r..k).find(|&i| !work[(i, col)].is_zero()) else {
                continue;
            };
            work.swap_rows(r, p);
            for i in r + 1..k {
                if work[(i, col)].is_zero() {
                    continue;
                }
                let f = &work[(i, col)] / &work[(r, col)];
                for j in col..n {
                    let t = &f * &work[(r, j)];
                    work[(i, j)] = &work[(i, j)] - t;
                }
            }
            pivots.push(col);
            r += 1;
        }
        if pivots.len() < k {
            return Err(Error::Degenerate("basis rows are dependent".into()));
        }
        let square = RatMatrix::from_rows(
            k,
            (0..k)
                .map(|i| pivots.iter().map(|&c| basis[(i, c)].clone()).collect())
                .collect(),
        );
        Ok(CoordinateSolver {
            inverse: square.inverse()?,
            pivots,
            basis,
        })
    }

    pub fn rational_coordinates(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let vp: Vec<BigRational> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let c = self.inverse.left_mul_vec(&vp);
        (self.basis.left_mul_vec(&c) == v).then_some(c)
    }

    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let rv: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let c = self.rational_coordinates(&rv)?;
        c.iter()
            .all(|x| x.is_integer())
            .then(|| c.into_iter().map(|x| x.to_integer()).collect())
    }
}

/// `{x ∈ ambient : x·s = 0 for all s ∈ sub}`, saturated in `ambient`.
///
/// Solves `c · (A·G·Sᵀ) = 0` over `Z` with the unimodular transform of an
/// HNF, which yields a basis of the full integer kernel; the complement is
/// therefore primitive in the ambient lattice.
pub fn orthogonal_complement(sub: &IntegralLattice, ambient: &IntegralLattice) -> Result<IntegralLattice> {
    if sub.ambient != ambient.ambient {
        return Err(Error::Dimension("lattices live in different ambient spaces".into()));
    }
    let a = ambient.basis.to_rational();
    let s = sub.basis.to_rational();
    let pairing = a.mul(&ambient.ambient).mul(&s.transpose());
    let (_, pairing) = pairing.clear_denominators();
    let (h, u) = hnf_with_transform(&pairing);
    let kernel: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(|x| x.is_zero()))
        .map(|i| u.row(i).to_vec())
        .collect();
    let k = IntMatrix::from_rows(ambient.rank(), kernel);
    let basis = hnf(&k.mul(&ambient.basis));
    Ok(IntegralLattice::in_ambient(basis, ambient.ambient.clone()))
}

/// Primitive closure `(sub ⊗ Q) ∩ ambient`.
pub fn saturation(sub: &IntegralLattice, ambient: &IntegralLattice) -> Result<IntegralLattice> {
    // For a nondegenerate ambient form the double complement is the saturation.
    let perp = orthogonal_complement(sub, ambient)?;
    orthogonal_complement(&perp, ambient)
}

pub fn is_primitive(sub: &IntegralLattice, ambient: &IntegralLattice) -> Result<bool> {
    Ok(saturation(sub, ambient)?.same_lattice(&sub.span_in_ambient(sub.basis.to_rows())))
}

/// Overlattice generated by `base` and rational `glue` vectors (in the
/// ambient coordinates of `base`).
///
/// Returned in refined coordinates: with `d` the common denominator of the
/// glue, the ambient basis is divided by `d`, so the result has an integer
/// basis `HNF(d·B ; d·glue)` and ambient Gram `G / d²`. Returns `(lattice, d)`.
pub fn overlattice(base: &IntegralLattice, glue: &[Vec<BigRational>]) -> (IntegralLattice, BigInt) {
    let d = glue
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let dr = BigRational::from_integer(d.clone());
    let mut rows: Vec<Vec<BigInt>> = base
        .basis
        .row_iter()
        .map(|r| r.iter().map(|x| x * &d).collect())
        .collect();
    rows.extend(glue.iter().map(|g| g.iter().map(|x| (x * &dr).to_integer()).collect()));
    let basis = hnf(&IntMatrix::from_rows(base.dim(), rows));
    let d2 = &dr * &dr;
    let ambient = base.ambient.map(|x| x / &d2);
    (IntegralLattice::in_ambient(basis, ambient), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ivec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn complement_of_zero_lattice_is_ambient() {
        let amb = IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[2, 1, 1, 2]));
        let zero = IntegralLattice::in_ambient(IntMatrix::zeros(0, 2), amb.ambient().clone());
        let c = orthogonal_complement(&zero, &amb).unwrap();
        assert!(c.same_lattice(&amb));
    }

    #[test]
    fn complement_in_a2_plus_a1() {
        // Z^3 with Euclidean form: complement of (1,1,0) is spanned by (1,-1,0), (0,0,1).
        let amb = IntegralLattice::scaled_euclidean(IntMatrix::identity(3), 1);
        let sub = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(1, 3, &[1, 1, 0]), 1);
        let c = orthogonal_complement(&sub, &amb).unwrap();
        assert_eq!(c.rank(), 2);
        assert!(c.contains(&ivec(&[1, -1, 0])));
        assert!(c.contains(&ivec(&[0, 0, 1])));
        assert_eq!(c.determinant(), rat(2, 1));
    }

    #[test]
    fn saturation_detects_imprimitive() {
        let amb = IntegralLattice::scaled_euclidean(IntMatrix::identity(2), 1);
        let sub = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(1, 2, &[2, 2]), 1);
        assert!(!is_primitive(&sub, &amb).unwrap());
        let sat = saturation(&sub, &amb).unwrap();
        assert!(sat.contains(&ivec(&[1, 1])));
        let prim = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(1, 2, &[1, 1]), 1);
        assert!(is_primitive(&prim, &amb).unwrap());
    }

    #[test]
    fn coordinates_roundtrip() {
        let l = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(2, 3, &[1, 2, 0, 0, 3, 1]), 1);
        assert_eq!(l.coordinates(&ivec(&[2, 1, -1])), Some(ivec(&[2, -1])));
        assert_eq!(l.coordinates(&ivec(&[1, 0, 0])), None);
        assert_eq!(l.coordinates(&ivec(&[0, 3, 2])), None);
        let half = l.rational_coordinates(&[rat(1, 2), rat(1, 1), rat(0, 1)]).unwrap();
        assert_eq!(half, vec![rat(1, 2), rat(0, 1)]);

        let s = CoordinateSolver::new(&l).unwrap();
        for v in [[2, 1, -1], [1, 0, 0], [0, 3, 2], [3, 3, 1]] {
            assert_eq!(s.coordinates(&ivec(&v)), l.coordinates(&ivec(&v)));
        }
    }

    #[test]
    fn index_two_overlattice() {
        // Z^2 glued by (1/2, 1/2): index 2, determinant divided by 4.
        let base = IntegralLattice::scaled_euclidean(IntMatrix::identity(2), 1);
        let (ext, d) = overlattice(&base, &[vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(d, int(2));
        assert_eq!(ext.determinant(), rat(1, 4));
    }
}
