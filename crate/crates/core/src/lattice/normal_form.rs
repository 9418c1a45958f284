//! Hermite and Smith normal forms over `Z`.
//!
//! Row-style HNF convention: the nonzero rows come first, each pivot (leading
//! entry) is positive and strictly to the right of the one above, and the
//! entries above a pivot lie in `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Replace rows `(p, i)` by `(s·p + t·i, (a/g)·i − (b/g)·p)`; the transform
/// has determinant 1 and zeroes column `col` of row `i`.
fn gcd_combine(rows: &mut [Vec<BigInt>], p: usize, i: usize, col: usize) {
    let a = rows[p][col].clone();
    let b = rows[i][col].clone();
    let (g, s, t) = extended_gcd(&a, &b);
    let (ag, bg) = (&a / &g, &b / &g);
    let n = rows[p].len();
    for j in 0..n {
        let rp = &rows[p][j];
        let ri = &rows[i][j];
        let new_p = &s * rp + &t * ri;
        let new_i = &ag * ri - &bg * rp;
        rows[p][j] = new_p;
        rows[i][j] = new_i;
    }
}

fn row_axpy(rows: &mut [Vec<BigInt>], target: usize, q: &BigInt, src: usize) {
    if q.is_zero() {
        return;
    }
    let src_row = rows[src].clone();
    for (t, s) in rows[target].iter_mut().zip(&src_row) {
        *t -= q * s;
    }
}

/// Hermite normal form `H = U·M` with a unimodular `U`.
///
/// `H` has the shape of `M` (zero rows at the bottom); `U` is square. Rows of
/// `U` paired with zero rows of `H` span the integer left kernel of `M`.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (r, c) = (m.rows(), m.cols());
    // Work on [M | I] so that the transform rides along.
    let mut rows: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut pivot = 0;
    for col in 0..c {
        if pivot == r {
            break;
        }
        for i in pivot + 1..r {
            if !rows[i][col].is_zero() {
                gcd_combine(&mut rows, pivot, i, col);
            }
        }
        if rows[pivot][col].is_zero() {
            continue;
        }
        if rows[pivot][col].is_negative() {
            for x in rows[pivot].iter_mut() {
                *x = -&*x;
            }
        }
        let pv = rows[pivot][col].clone();
        for k in 0..pivot {
            let q = rows[k][col].div_floor(&pv);
            row_axpy(&mut rows, k, &q, pivot);
        }
        pivot += 1;
    }
    let h = IntMatrix::from_rows(c, rows.iter().map(|row| row[..c].to_vec()).collect());
    let u = IntMatrix::from_rows(r, rows.into_iter().map(|row| row[c..].to_vec()).collect());
    (h, u)
}

/// Incremental HNF of a row lattice: rows are inserted one at a time and
/// only the (at most `n`) basis rows are kept. Suited to very tall inputs.
#[derive(Clone, Debug)]
pub struct HnfAccumulator {
    cols: usize,
    /// Basis rows indexed by pivot column.
    pivots: Vec<Option<Vec<BigInt>>>,
}

impl HnfAccumulator {
    pub fn new(cols: usize) -> Self {
        HnfAccumulator {
            cols,
            pivots: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }

    /// Insert a row; returns whether the lattice grew.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut changed = false;
        for col in 0..self.cols {
            if row[col].is_zero() {
                continue;
            }
            match self.pivots[col].take() {
                None => {
                    if row[col].is_negative() {
                        row.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.pivots[col] = Some(row);
                    changed = true;
                    break;
                }
                Some(p) => {
                    if row[col].is_multiple_of(&p[col]) {
                        let q = &row[col] / &p[col];
                        for (x, y) in row.iter_mut().zip(&p) {
                            *x -= &q * y;
                        }
                        self.pivots[col] = Some(p);
                    } else {
                        let mut pair = vec![p, row];
                        gcd_combine(&mut pair, 0, 1, col);
                        row = pair.pop().unwrap();
                        let mut p = pair.pop().unwrap();
                        if p[col].is_negative() {
                            p.iter_mut().for_each(|x| *x = -&*x);
                        }
                        self.pivots[col] = Some(p);
                        changed = true;
                    }
                }
            }
        }
        if changed {
            self.reduce();
        }
        changed
    }

    /// Bring the entries above each pivot into `[0, pivot)`.
    fn reduce(&mut self) {
        for col in 0..self.cols {
            let Some(p) = self.pivots[col].clone() else {
                continue;
            };
            for above in 0..col {
                if let Some(r) = self.pivots[above].as_mut() {
                    let q = r[col].div_floor(&p[col]);
                    if !q.is_zero() {
                        for (x, y) in r.iter_mut().zip(&p) {
                            *x -= &q * y;
                        }
                    }
                }
            }
        }
    }

    /// Reduce `row` modulo the current lattice; zero iff the row is a member.
    pub fn reduce_row(&self, row: &[BigInt]) -> Vec<BigInt> {
        let mut row = row.to_vec();
        for col in 0..self.cols {
            if let Some(p) = &self.pivots[col] {
                let q = row[col].div_floor(&p[col]);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(p) {
                        *x -= &q * y;
                    }
                }
            }
        }
        row
    }

    pub fn into_matrix(self) -> IntMatrix {
        let cols = self.cols;
        IntMatrix::from_rows(cols, self.pivots.into_iter().flatten().collect())
    }
}

/// HNF basis of the row lattice of `m` (zero rows dropped).
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut acc = HnfAccumulator::new(m.cols());
    for r in m.row_iter() {
        acc.insert(r.to_vec());
    }
    acc.into_matrix()
}

/// Smith normal form `L·M·R = D` with unimodular `L`, `R`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub divisors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn snf(m: &IntMatrix) -> Smith {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);

    let mut t = 0;
    while t < r.min(c) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = (t..r)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[(i, j)].is_zero())
            .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
        else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..r {
            if a[(i, t)].is_zero() {
                continue;
            }
            let q = a[(i, t)].div_floor(&a[(t, t)]);
            add_row(&mut a, i, t, &q);
            add_row(&mut left, i, t, &q);
            if !a[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..c {
            if a[(t, j)].is_zero() {
                continue;
            }
            let q = a[(t, j)].div_floor(&a[(t, t)]);
            add_col(&mut a, j, t, &q);
            add_col(&mut right, j, t, &q);
            if !a[(t, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold an offending row into row t and retry.
        let p = a[(t, t)].clone();
        if let Some(i) = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&p))) {
            let one = -BigInt::one();
            add_row(&mut a, t, i, &one);
            add_row(&mut left, t, i, &one);
            continue;
        }
        if p.is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
        t += 1;
    }
    let divisors = (0..t).map(|i| a[(i, i)].clone()).collect();
    Smith {
        divisors,
        left,
        right,
    }
}

/// row_i -= q · row_src
fn add_row(m: &mut IntMatrix, i: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let v = &m[(i, j)] - q * &m[(src, j)];
        m[(i, j)] = v;
    }
}

/// col_j -= q · col_src
fn add_col(m: &mut IntMatrix, j: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let v = &m[(i, j)] - q * &m[(i, src)];
        m[(i, j)] = v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let v = -&m[(i, j)];
        m[(i, j)] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::int;

    fn is_hnf(h: &IntMatrix) -> bool {
        let mut last: Option<usize> = None;
        for i in 0..h.rows() {
            let Some(lead) = (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) else {
                continue;
            };
            if last.is_some_and(|l| lead <= l) || !h[(i, lead)].is_positive() {
                return false;
            }
            for k in 0..i {
                if h[(k, lead)].is_negative() || h[(k, lead)] >= h[(i, lead)] {
                    return false;
                }
            }
            last = Some(lead);
        }
        true
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(4);
        let (h, u) = hnf_with_transform(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
        assert_eq!(snf(&id).divisors, vec![int(1); 4]);
    }

    #[test]
    fn small_hnf_example() {
        let m = IntMatrix::from_i64(2, 2, &[2, 4, 4, 2]);
        let (h, u) = hnf_with_transform(&m);
        assert_eq!(h, IntMatrix::from_i64(2, 2, &[2, 4, 0, 6]));
        assert_eq!(u.mul(&m), h);
        assert_eq!(u.determinant().abs(), int(1));
        assert_eq!(hnf(&m), h);
    }

    #[test]
    fn accumulator_membership() {
        let m = IntMatrix::from_i64(3, 3, &[2, 0, 1, 0, 3, 0, 4, 3, 2]);
        let mut acc = HnfAccumulator::new(3);
        for r in m.row_iter() {
            acc.insert(r.to_vec());
        }
        assert_eq!(acc.rank(), 2);
        assert!(acc.reduce_row(&[int(6), int(-3), int(3)]).iter().all(|x| x.is_zero()));
        assert!(!acc.reduce_row(&[int(1), int(0), int(0)]).iter().all(|x| x.is_zero()));
        assert!(is_hnf(&acc.into_matrix()));
    }

    #[test]
    fn diagonal_snf() {
        let s = snf(&IntMatrix::from_i64(2, 2, &[4, 0, 0, 40]));
        assert_eq!(s.divisors, vec![int(4), int(40)]);
        let s = snf(&IntMatrix::from_i64(2, 2, &[6, 0, 0, 4]));
        assert_eq!(s.divisors, vec![int(2), int(12)]);
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let m = IntMatrix::from_i64(3, 4, &[2, 4, 6, 8, 1, 3, 5, 7, 0, 2, 2, 9]);
        let s = snf(&m);
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j || i >= s.divisors.len() {
                    assert!(d[(i, j)].is_zero());
                } else {
                    assert_eq!(d[(i, j)], s.divisors[i]);
                }
            }
        }
        assert!(s.divisors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        assert_eq!(s.left.determinant().abs(), int(1));
        assert_eq!(s.right.determinant().abs(), int(1));
    }
}
