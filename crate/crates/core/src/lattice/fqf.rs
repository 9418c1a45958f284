//! Finite quadratic forms and discriminant forms of even lattices.
//!
//! A form is stored on a chosen generating set of a direct sum of cyclic
//! groups `⊕ Z/dᵢ`: the values `q(gᵢ) ∈ Q/2Z` and `b(gᵢ, gⱼ) ∈ Q/Z`. All
//! values are kept reduced, `q` in `[0, 2)` and `b` in `[0, 1)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};

use super::matrix::RatMatrix;
use super::normal_form::snf;
use super::IntegralLattice;
use crate::error::{Error, Result};

/// Largest group order accepted by [`fqf_isomorphic`].
pub const ISOMORPHISM_ORDER_LIMIT: u64 = 10_000;

/// Element of `⊕ Z/dᵢ`, coordinates reduced modulo `dᵢ`.
pub type Element = Vec<u64>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    orders: Vec<u64>,
    q: Vec<Rational64>,
    b: Vec<Vec<Rational64>>,
}

/// Reduce `x` into `[0, m)`.
pub fn reduce_mod(x: Rational64, m: i64) -> Rational64 {
    let m = Rational64::from_integer(m);
    let r = x - (x / m).floor() * m;
    debug_assert!(r >= Rational64::zero() && r < m);
    r
}

fn big_to_small(x: &BigRational) -> Result<Rational64> {
    let n = x.numer().to_i64();
    let d = x.denom().to_i64();
    match (n, d) {
        (Some(n), Some(d)) => Ok(Rational64::new(n, d)),
        _ => Err(Error::construction(format!("value {x} too large for a finite form"))),
    }
}

impl FiniteQuadraticForm {
    /// Build from generator orders and a symmetric value matrix whose diagonal
    /// holds `q(gᵢ)` and whose off-diagonal entries hold `b(gᵢ, gⱼ)`.
    ///
    /// ```
    /// use k3_conics::lattice::FiniteQuadraticForm;
    /// use num_rational::Rational64 as Q;
    /// // [1, 1/2; 1/2, 1] on (Z/2)^2
    /// let f = FiniteQuadraticForm::from_matrix(
    ///     vec![2, 2],
    ///     vec![vec![Q::from(1), Q::new(1, 2)], vec![Q::new(1, 2), Q::from(1)]],
    /// ).unwrap();
    /// assert_eq!(f.order(), 4);
    /// ```
    pub fn from_matrix(orders: Vec<u64>, m: Vec<Vec<Rational64>>) -> Result<Self> {
        let k = orders.len();
        if m.len() != k || m.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension("value matrix does not match generator count".into()));
        }
        if orders.iter().any(|&d| d == 0) {
            return Err(Error::construction("generator of infinite order"));
        }
        let q: Vec<Rational64> = (0..k).map(|i| reduce_mod(m[i][i], 2)).collect();
        let mut b = vec![vec![Rational64::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                if reduce_mod(m[i][j] - m[j][i], 1) != Rational64::zero() {
                    return Err(Error::construction("value matrix is not symmetric"));
                }
                b[i][j] = reduce_mod(m[i][j], 1);
            }
        }
        let f = FiniteQuadraticForm { orders, q, b };
        f.validate()?;
        Ok(f)
    }

    /// Cyclic form `[value]` on `Z/order`.
    pub fn cyclic(order: u64, value: Rational64) -> Result<Self> {
        Self::from_matrix(vec![order], vec![vec![value]])
    }

    pub fn trivial() -> Self {
        FiniteQuadraticForm {
            orders: vec![],
            q: vec![],
            b: vec![],
        }
    }

    fn validate(&self) -> Result<()> {
        for (i, &d) in self.orders.iter().enumerate() {
            let d = d as i64;
            if reduce_mod(self.q[i] * d * d, 2) != Rational64::zero() {
                return Err(Error::construction(format!("q(g{i}) incompatible with order {d}")));
            }
            for j in 0..self.orders.len() {
                if reduce_mod(self.b[i][j] * d, 1) != Rational64::zero() {
                    return Err(Error::construction(format!("b(g{i}, g{j}) incompatible with order {d}")));
                }
            }
        }
        Ok(())
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn q_values(&self) -> &[Rational64] {
        &self.q
    }

    pub fn b_values(&self) -> &[Vec<Rational64>] {
        &self.b
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut e = self.zero();
        e[i] = 1 % self.orders[i];
        e
    }

    /// All elements in lexicographic order of coordinates.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.order();
        (0..total).map(move |mut n| {
            let mut e = vec![0; self.rank()];
            for i in (0..self.rank()).rev() {
                e[i] = n % self.orders[i];
                n /= self.orders[i];
            }
            e
        })
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Element {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn scale(&self, k: u64, x: &[u64]) -> Element {
        x.iter().zip(&self.orders).map(|(a, d)| (a * (k % d)) % d).collect()
    }

    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.orders)
            .map(|(&a, &d)| d / a.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// `q(x) ∈ [0, 2)`.
    pub fn q(&self, x: &[u64]) -> Rational64 {
        let mut v = Rational64::zero();
        for i in 0..self.rank() {
            let xi = x[i] as i64;
            if xi == 0 {
                continue;
            }
            v += self.q[i] * (xi * xi);
            for j in i + 1..self.rank() {
                v += self.b[i][j] * (2 * xi * x[j] as i64);
            }
        }
        reduce_mod(v, 2)
    }

    /// `b(x, y) ∈ [0, 1)`.
    pub fn b(&self, x: &[u64], y: &[u64]) -> Rational64 {
        let mut v = Rational64::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                v += self.b[i][j] * (x[i] as i64 * y[j] as i64);
            }
        }
        reduce_mod(v, 1)
    }

    /// The form `−q` on the same group.
    pub fn negated(&self) -> Self {
        FiniteQuadraticForm {
            orders: self.orders.clone(),
            q: self.q.iter().map(|&v| reduce_mod(-v, 2)).collect(),
            b: self
                .b
                .iter()
                .map(|r| r.iter().map(|&v| reduce_mod(-v, 1)).collect())
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let k = self.rank() + other.rank();
        let mut b = vec![vec![Rational64::zero(); k]; k];
        for i in 0..self.rank() {
            b[i][..self.rank()].copy_from_slice(&self.b[i]);
        }
        for i in 0..other.rank() {
            b[self.rank() + i][self.rank()..].copy_from_slice(&other.b[i]);
        }
        FiniteQuadraticForm {
            orders: [self.orders.clone(), other.orders.clone()].concat(),
            q: [self.q.clone(), other.q.clone()].concat(),
            b,
        }
    }
}

impl fmt::Debug for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return f.write_str("0");
        }
        for (i, d) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}[q={}]", self.q[i])?;
        }
        let off: Vec<String> = (0..self.rank())
            .flat_map(|i| (i + 1..self.rank()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.b[i][j].is_zero())
            .map(|(i, j)| format!("b{i}{j}={}", self.b[i][j]))
            .collect();
        if !off.is_empty() {
            write!(f, " ({})", off.join(", "))?;
        }
        Ok(())
    }
}

/// `L∨/L` with its discriminant form, plus the chosen generators as rational
/// coordinate vectors in the lattice basis.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    pub form: FiniteQuadraticForm,
    pub generators: Vec<Vec<BigRational>>,
}

/// Discriminant form of an even nondegenerate lattice.
pub fn discriminant_form(lat: &IntegralLattice) -> Result<FiniteQuadraticForm> {
    Ok(discriminant_group(lat)?.form)
}

/// With `L·G·R = diag(d)`, the columns `R eᵢ / dᵢ` (for `dᵢ > 1`) generate
/// `L∨/L ≅ ⊕ Z/dᵢ`.
pub fn discriminant_group(lat: &IntegralLattice) -> Result<DiscriminantGroup> {
    let gram = lat
        .int_gram()
        .ok_or_else(|| Error::construction("discriminant form needs an integral lattice"))?;
    if !lat.is_even() {
        return Err(Error::construction("discriminant form needs an even lattice"));
    }
    let n = gram.rows();
    let s = snf(&gram);
    if s.divisors.len() < n {
        return Err(Error::Degenerate(format!("Gram matrix has rank {} < {n}", s.divisors.len())));
    }
    let g = gram.to_rational();
    let right = s.right.to_rational();
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (i, d) in s.divisors.iter().enumerate() {
        if d == &BigInt::from(1) {
            continue;
        }
        let dr = BigRational::from_integer(d.clone());
        let col: Vec<BigRational> = (0..n).map(|r| &right[(r, i)] / &dr).collect();
        generators.push(col);
        orders.push(
            d.to_u64()
                .ok_or_else(|| Error::construction("invariant factor too large"))?,
        );
    }
    let k = generators.len();
    let mut m = vec![vec![Rational64::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = big_to_small(&reduce_big(&g.bilinear(&generators[i], &generators[j]), if i == j { 2 } else { 1 }))?;
        }
    }
    Ok(DiscriminantGroup {
        form: FiniteQuadraticForm::from_matrix(orders, m)?,
        generators,
    })
}

fn reduce_big(x: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(m.into());
    x - (x / &m).floor() * &m
}

/// A group isomorphism given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Isometry {
    pub images: Vec<Element>,
}

impl Isometry {
    pub fn identity(f: &FiniteQuadraticForm) -> Self {
        Isometry {
            images: (0..f.rank()).map(|i| f.generator(i)).collect(),
        }
    }

    pub fn apply(&self, target: &FiniteQuadraticForm, x: &[u64]) -> Element {
        self.images
            .iter()
            .zip(x)
            .fold(target.zero(), |acc, (img, &k)| target.add(&acc, &target.scale(k, img)))
    }

    /// Exhaustive re-check: well defined, bijective and `q`-preserving.
    pub fn verify(&self, source: &FiniteQuadraticForm, target: &FiniteQuadraticForm) -> bool {
        if self.images.len() != source.rank() || source.order() != target.order() {
            return false;
        }
        for (img, &d) in self.images.iter().zip(source.orders()) {
            if target.scale(d, img).iter().any(|&c| c != 0) {
                return false;
            }
        }
        let mut seen = HashSet::with_capacity(source.order() as usize);
        for x in source.elements() {
            let y = self.apply(target, &x);
            if target.q(&y) != source.q(&x) {
                return false;
            }
            seen.insert(y);
        }
        seen.len() as u64 == target.order()
    }
}

/// Search for an isometry `f1 → f2`.
///
/// Generators of `f1` are mapped one at a time to elements of `f2` of the
/// same order and `q`-value whose pairings with the earlier images match.
/// Any hit is confirmed by [`Isometry::verify`].
pub fn fqf_isomorphic(f1: &FiniteQuadraticForm, f2: &FiniteQuadraticForm) -> Result<Option<Isometry>> {
    for f in [f1, f2] {
        if f.order() > ISOMORPHISM_ORDER_LIMIT {
            return Err(Error::UnsupportedSize {
                order: f.order(),
                limit: ISOMORPHISM_ORDER_LIMIT,
            });
        }
    }
    if f1.order() != f2.order() {
        return Ok(None);
    }
    let elements: Vec<Element> = f2.elements().collect();
    let gens: Vec<Element> = (0..f1.rank()).map(|i| f1.generator(i)).collect();
    let candidates: Vec<Vec<&Element>> = gens
        .iter()
        .map(|g| {
            let ord = f1.element_order(g);
            let qv = f1.q(g);
            elements
                .iter()
                .filter(|y| f2.element_order(y) == ord && f2.q(y) == qv)
                .collect()
        })
        .collect();

    let mut chosen: Vec<Element> = Vec::with_capacity(gens.len());
    if search(f1, f2, &gens, &candidates, &mut chosen) {
        let iso = Isometry { images: chosen };
        if iso.verify(f1, f2) {
            return Ok(Some(iso));
        }
        return Err(Error::construction("isometry search returned an invalid map"));
    }
    Ok(None)
}

fn search(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    gens: &[Element],
    candidates: &[Vec<&Element>],
    chosen: &mut Vec<Element>,
) -> bool {
    let i = chosen.len();
    if i == gens.len() {
        return Isometry {
            images: chosen.clone(),
        }
        .verify(f1, f2);
    }
    for &y in &candidates[i] {
        let ok = (0..i).all(|j| f2.b(y, &chosen[j]) == f1.b(&gens[i], &gens[j]));
        if !ok {
            continue;
        }
        chosen.push(y.clone());
        if search(f1, f2, gens, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Discriminant group order `|det G|` of a nondegenerate integral Gram matrix.
pub fn discriminant_order(gram: &RatMatrix) -> BigRational {
    let d = gram.determinant();
    if d < BigRational::zero() {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::IntMatrix;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn unit_lattice_has_trivial_form() {
        let a2 = IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[2, 1, 1, 2]));
        let f = discriminant_form(&a2).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.q_values(), &[q(2, 3)]);
        let hyperbolic = IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]));
        let f = discriminant_form(&hyperbolic).unwrap();
        assert_eq!(f.order(), 1);
        assert_eq!(f.rank(), 0);
    }

    #[test]
    fn diagonal_t_form() {
        let t = IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[4, 0, 0, 40]));
        let f = discriminant_form(&t).unwrap();
        assert_eq!(f.orders(), &[4, 40]);
        let expected = FiniteQuadraticForm::cyclic(4, q(1, 4))
            .unwrap()
            .direct_sum(&FiniteQuadraticForm::cyclic(40, q(1, 40)).unwrap());
        assert!(fqf_isomorphic(&f, &expected).unwrap().is_some());
        // dual basis e/4, f/40
        assert_eq!(f.q_values(), &[q(1, 4), q(1, 40)]);
    }

    #[test]
    fn one_eighth_is_not_minus_one_eighth() {
        let a = FiniteQuadraticForm::cyclic(8, q(1, 8)).unwrap();
        let b = FiniteQuadraticForm::cyclic(8, q(-1, 8)).unwrap();
        assert!(fqf_isomorphic(&a, &b).unwrap().is_none());
        // oracle: u²/8 ≡ −1/8 (mod 2) for no unit u of Z/8
        for u in [1i64, 3, 5, 7] {
            assert_ne!(reduce_mod(q(u * u, 8), 2), reduce_mod(q(-1, 8), 2));
        }
    }

    #[test]
    fn reflexive_with_witness() {
        let f = FiniteQuadraticForm::from_matrix(
            vec![2, 2],
            vec![vec![q(1, 1), q(1, 2)], vec![q(1, 2), q(1, 1)]],
        )
        .unwrap()
        .direct_sum(&FiniteQuadraticForm::cyclic(8, q(1, 8)).unwrap())
        .direct_sum(&FiniteQuadraticForm::cyclic(5, q(2, 5)).unwrap());
        assert_eq!(f.order(), 160);
        let iso = fqf_isomorphic(&f, &f).unwrap().unwrap();
        assert!(iso.verify(&f, &f));
        assert!(Isometry::identity(&f).verify(&f, &f));
    }

    #[test]
    fn invalid_values_are_rejected() {
        assert!(FiniteQuadraticForm::cyclic(4, q(1, 8)).is_err());
        assert!(FiniteQuadraticForm::cyclic(0, q(0, 1)).is_err());
    }

    #[test]
    fn oversized_groups_are_refused() {
        let big = FiniteQuadraticForm::cyclic(20_002, q(1, 20_002)).unwrap();
        assert!(matches!(
            fqf_isomorphic(&big, &big),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(reduce_mod(q(-1, 4), 2), q(7, 4));
        assert_eq!(reduce_mod(q(5, 2), 2), q(1, 2));
        assert_eq!(reduce_mod(q(3, 2), 1), q(1, 2));
    }
}
