//! The lattices S ⊂ Λ and N, the polarization h, the conic classes
//! `c(l) = l − ½ħ + ½h`, and the checks on them: parity, discriminant forms
//! and the absence of bad vectors.
//!
//! N is the index-2 overlattice of `M = (−K) ⊕ Zh`, where `K = ħ⊥` in S and
//! `h² = 4`. It is built in the refined coordinates of
//! [`overlattice`](crate::lattice::overlattice) (twice the M-coordinates) and
//! then handed around abstractly as a Gram matrix with h and the classes
//! given in an N-basis.

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::census::{ConicRecord, Generators, Pattern};
use crate::error::{Error, Result};
use crate::lattice::fqf::{discriminant_form, fqf_isomorphic, FiniteQuadraticForm, Isometry};
use crate::lattice::io::write_matrix;
use crate::lattice::{
    hnf_with_transform, int, orthogonal_complement, overlattice, rat, short_vectors, CoordinateSolver,
    IntMatrix, IntegralLattice, RatMatrix,
};
use crate::leech::LeechVector;

pub const DISCRIMINANT_ORDER: u64 = 160;
pub const H_NORM: i64 = 4;

fn to_rat(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

fn leech_row(l: &LeechVector) -> Vec<BigInt> {
    l.to_bigint()
}

/// `Ṽ` spanned by the five generators, in Leech coordinates.
pub fn vtilde(gens: &Generators) -> IntegralLattice {
    let rows = gens.as_array().iter().map(|g| leech_row(g)).collect();
    IntegralLattice::scaled_euclidean(IntMatrix::from_rows(24, rows), 8)
}

/// Lattices of the Leech side of the construction.
#[derive(Clone, Debug)]
pub struct SLattice {
    pub vtilde: IntegralLattice,
    /// `V̄ = ħ⊥` in `Ṽ`.
    pub vbar: IntegralLattice,
    /// `S = V̄⊥` in `Λ`.
    pub s: IntegralLattice,
    /// `K = ħ⊥` in `S`, which equals `Ṽ⊥` in `Λ`.
    pub k: IntegralLattice,
    pub hbar: Vec<BigInt>,
    solver: CoordinateSolver,
}

pub fn build_s(gens: &Generators, leech: &IntegralLattice) -> Result<SLattice> {
    let vt = vtilde(gens);
    let leech_solver = CoordinateSolver::new(leech)?;
    for g in gens.as_array() {
        if leech_solver.coordinates(&leech_row(g)).is_none() {
            return Err(Error::construction(format!("generator {g} is not in the Leech lattice")));
        }
    }
    let hbar = leech_row(&gens.hbar);
    let hbar_span = IntegralLattice::in_ambient(IntMatrix::from_rows(24, vec![hbar.clone()]), vt.ambient().clone());
    let vbar = orthogonal_complement(&hbar_span, &vt)?;
    let s = orthogonal_complement(&vbar, leech)?;
    if s.rank() != 20 {
        return Err(Error::construction(format!("S has rank {} instead of 20", s.rank())));
    }
    let solver = CoordinateSolver::new(&s)?;
    if solver.coordinates(&hbar).is_none() {
        return Err(Error::construction("ħ is not in S"));
    }
    let k = orthogonal_complement(&hbar_span, &s)?;
    if k.rank() != 19 {
        return Err(Error::construction(format!("ħ⊥ in S has rank {} instead of 19", k.rank())));
    }
    Ok(SLattice {
        vtilde: vt,
        vbar,
        s,
        k,
        hbar,
        solver,
    })
}

impl SLattice {
    pub fn contains(&self, l: &LeechVector) -> bool {
        self.solver.coordinates(&leech_row(l)).is_some()
    }

    /// Number of conics lying in S.
    pub fn conics_in_s(&self, conics: &[ConicRecord]) -> usize {
        conics.iter().filter(|c| self.contains(&c.l)).count()
    }

    /// Whether `K` coincides with the complement of `Ṽ` taken directly in `Λ`.
    pub fn k_is_vtilde_perp(&self, leech: &IntegralLattice) -> Result<bool> {
        Ok(orthogonal_complement(&self.vtilde, leech)?.same_lattice(&self.k))
    }

    /// Vectors of S with true norm 2, in S-coordinates.
    pub fn roots(&self) -> Result<Vec<Vec<i64>>> {
        short_vectors(self.s.gram(), &rat(2, 1), None)
    }
}

/// Whether `x·v` is an even integer for every basis vector `x` of `lat`
/// (`v` in ambient coordinates).
pub fn pairs_evenly(lat: &IntegralLattice, v: &[BigRational]) -> bool {
    let gv = lat.ambient().left_mul_vec(v);
    lat.basis().row_iter().all(|row| {
        let p: BigRational = row
            .iter()
            .zip(&gv)
            .fold(BigRational::zero(), |acc, (a, b)| acc + BigRational::from_integer(a.clone()) * b);
        p.is_integer() && p.to_integer().is_even()
    })
}

/// `ħ ∈ 2S∨`.
pub fn check_hbar_parity(s: &IntegralLattice, hbar: &[BigInt]) -> bool {
    pairs_evenly(s, &to_rat(hbar))
}

/// An even lattice with a polarization `h` and a list of distinguished
/// classes, all given in the lattice basis.
#[derive(Clone, Debug)]
pub struct PolarizedLattice {
    pub lattice: IntegralLattice,
    pub h: Vec<BigInt>,
    pub classes: Vec<Vec<BigInt>>,
}

impl PolarizedLattice {
    pub fn new(gram: RatMatrix, h: Vec<BigInt>, classes: Vec<Vec<BigInt>>) -> Self {
        PolarizedLattice {
            lattice: IntegralLattice::from_gram(gram),
            h,
            classes,
        }
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        self.lattice.gram().bilinear(&to_rat(x), &to_rat(y))
    }

    pub fn h_norm(&self) -> BigRational {
        self.pair(&self.h, &self.h)
    }

    /// `(positive, negative)` inertia of the Gram matrix.
    pub fn signature(&self) -> (usize, usize) {
        let (p, n, _) = self.lattice.gram().inertia();
        (p, n)
    }

    /// `h ∈ 2N∨`.
    pub fn check_h_parity(&self) -> bool {
        pairs_evenly(&self.lattice, &to_rat(&self.h))
    }

    /// Indices of classes violating `c² = −2, c·h = 2`.
    pub fn bad_classes(&self) -> Vec<usize> {
        let (m2, two) = (rat(-2, 1), rat(2, 1));
        (0..self.classes.len())
            .filter(|&i| {
                let c = &self.classes[i];
                self.pair(c, c) != m2 || self.pair(c, &self.h) != two
            })
            .collect()
    }

    /// All pairwise products `cᵢ·cⱼ` (machine integers; the entries are tiny).
    pub fn class_products(&self) -> Result<Vec<Vec<i64>>> {
        let g = self
            .lattice
            .int_gram()
            .ok_or_else(|| Error::construction("polarized lattice is not integral"))?;
        let small = |x: &BigInt| x.to_i64().ok_or_else(|| Error::construction("entry overflows i64"));
        let n = self.rank();
        let g: Vec<i64> = g.into_data().iter().map(small).collect::<Result<_>>()?;
        let cs: Vec<Vec<i64>> = self
            .classes
            .iter()
            .map(|c| c.iter().map(small).collect())
            .collect::<Result<_>>()?;
        let gc: Vec<Vec<i64>> = cs
            .iter()
            .map(|c| (0..n).map(|j| (0..n).map(|i| c[i] * g[i * n + j]).sum()).collect())
            .collect();
        Ok(gc
            .iter()
            .map(|x| cs.iter().map(|y| x.iter().zip(y).map(|(a, b)| a * b).sum()).collect())
            .collect())
    }

    /// Export the Gram matrix, `h` and the classes as three text matrices.
    pub fn export<W: Write>(&self, mut out: W) -> Result<()> {
        write_matrix(self.lattice.gram(), &mut out)?;
        write_matrix(&IntMatrix::from_rows(self.rank(), vec![self.h.clone()]), &mut out)?;
        write_matrix(&IntMatrix::from_rows(self.rank(), self.classes.clone()), &mut out)?;
        Ok(())
    }
}

/// N together with the intermediate lattices of its construction.
#[derive(Clone, Debug)]
pub struct NLattice {
    /// `(−K) ⊕ Zh` on the basis of K followed by h.
    pub m: IntegralLattice,
    /// N inside `M ⊗ Q`, in coordinates twice those of M.
    pub refined: IntegralLattice,
    pub polarized: PolarizedLattice,
    /// Index of the conic whose class glued M to N.
    pub glue_conic: usize,
}

impl NLattice {
    /// `[N : M]` from `det M / det N = [N : M]²`.
    pub fn index(&self) -> Option<BigInt> {
        let q = self.m.determinant() / self.refined.determinant();
        if !q.is_integer() {
            return None;
        }
        let q = q.to_integer();
        let r = q.sqrt();
        (&r * &r == q).then_some(r)
    }

    pub fn determinant(&self) -> BigRational {
        self.refined.determinant()
    }
}

/// M-coordinates of `c(l)`: `l − ½ħ` in the basis of K, then `½` for h.
fn class_in_m(s: &SLattice, k_solver: &CoordinateSolver, l: &LeechVector) -> Result<Vec<BigRational>> {
    let half = rat(1, 2);
    let v: Vec<BigRational> = leech_row(l)
        .iter()
        .zip(&s.hbar)
        .map(|(x, y)| BigRational::from_integer(x.clone()) - &half * BigRational::from_integer(y.clone()))
        .collect();
    let mut c = k_solver
        .rational_coordinates(&v)
        .ok_or_else(|| Error::construction(format!("l − ½ħ is not in K ⊗ Q for l = {l}")))?;
    c.push(half);
    Ok(c)
}

fn m_lattice(s: &SLattice) -> IntegralLattice {
    let g = (-s.k.gram()).direct_sum(&RatMatrix::diagonal(&[rat(H_NORM, 1)]));
    IntegralLattice::from_gram(g)
}

fn refined_n(s: &SLattice, k_solver: &CoordinateSolver, m: &IntegralLattice, l: &LeechVector) -> Result<IntegralLattice> {
    let glue = class_in_m(s, k_solver, l)?;
    let (n, d) = overlattice(m, &[glue]);
    if d != int(2) {
        return Err(Error::construction(format!("glue vector has denominator {d}, expected 2")));
    }
    if !n.is_integral() {
        return Err(Error::construction("index-2 extension is not integral"));
    }
    Ok(n)
}

/// Build N by gluing the class of `conics[glue]`.
pub fn build_n(s: &SLattice, conics: &[ConicRecord], glue: usize) -> Result<NLattice> {
    let glue_l = conics
        .get(glue)
        .ok_or_else(|| Error::construction("glue conic index out of range"))?;
    let k_solver = CoordinateSolver::new(&s.k)?;
    let m = m_lattice(s);
    let refined = refined_n(s, &k_solver, &m, &glue_l.l)?;
    if m.determinant().abs() != refined.determinant().abs() * rat(4, 1) {
        return Err(Error::construction(format!(
            "|det N| = {} is not |det M| / 4 = {}",
            refined.determinant().abs(),
            m.determinant().abs() / rat(4, 1)
        )));
    }

    let n_solver = CoordinateSolver::new(&refined)?;
    let r = refined.dim();
    let mut h_refined = vec![BigInt::zero(); r];
    h_refined[r - 1] = int(2);
    let h = n_solver
        .coordinates(&h_refined)
        .ok_or_else(|| Error::construction("h is not in N"))?;
    let classes = conics
        .iter()
        .map(|c| {
            let v: Vec<BigInt> = class_in_m(s, &k_solver, &c.l)?
                .iter()
                .map(|x| (x * rat(2, 1)).to_integer())
                .collect();
            n_solver
                .coordinates(&v)
                .ok_or_else(|| Error::construction(format!("class of {} is not in N", c.l)))
        })
        .collect::<Result<Vec<_>>>()?;
    let polarized = PolarizedLattice::new(refined.gram().clone(), h, classes);
    Ok(NLattice {
        m,
        refined,
        polarized,
        glue_conic: glue,
    })
}

/// Index of the first conic of each pattern.
pub fn pattern_representatives(conics: &[ConicRecord]) -> Vec<(Pattern, usize)> {
    Pattern::ALL
        .iter()
        .filter_map(|&p| conics.iter().position(|c| c.pattern == p).map(|i| (p, i)))
        .collect()
}

/// Rebuild N from each of the given conics and report whether every
/// rebuild equals `n` as a subset of `M ⊗ Q`.
pub fn glue_independent(s: &SLattice, conics: &[ConicRecord], n: &NLattice, others: &[usize]) -> Result<bool> {
    let k_solver = CoordinateSolver::new(&s.k)?;
    for &i in others {
        let other = refined_n(s, &k_solver, &n.m, &conics[i].l)?;
        if !other.same_lattice(&n.refined) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The transcendental model `T = Zb ⊕ Zt_c` with `b² = 4`, `t_c² = 40`.
pub fn t_lattice() -> IntegralLattice {
    IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[4, 0, 0, 40]))
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Reference forms, as direct sums of the displayed blocks.
pub mod reference {
    use super::*;

    fn sum(parts: &[FiniteQuadraticForm]) -> FiniteQuadraticForm {
        parts
            .iter()
            .fold(FiniteQuadraticForm::trivial(), |acc, f| acc.direct_sum(f))
    }

    /// `[1, ½; ½, 1] ⊕ [1/8] ⊕ [2/5]`.
    pub fn vtilde() -> FiniteQuadraticForm {
        sum(&[
            FiniteQuadraticForm::from_matrix(vec![2, 2], vec![vec![q(1, 1), q(1, 2)], vec![q(1, 2), q(1, 1)]])
                .expect("valid block"),
            FiniteQuadraticForm::cyclic(8, q(1, 8)).expect("valid block"),
            FiniteQuadraticForm::cyclic(5, q(2, 5)).expect("valid block"),
        ])
    }

    /// `[5/4] ⊕ [1/8] ⊕ [2/5]`.
    pub fn n_first() -> FiniteQuadraticForm {
        sum(&[
            FiniteQuadraticForm::cyclic(4, q(5, 4)).expect("valid block"),
            FiniteQuadraticForm::cyclic(8, q(1, 8)).expect("valid block"),
            FiniteQuadraticForm::cyclic(5, q(2, 5)).expect("valid block"),
        ])
    }

    /// `[−1/4] ⊕ [−5/8] ⊕ [2/5]`.
    pub fn n_second() -> FiniteQuadraticForm {
        sum(&[
            FiniteQuadraticForm::cyclic(4, q(-1, 4)).expect("valid block"),
            FiniteQuadraticForm::cyclic(8, q(-5, 8)).expect("valid block"),
            FiniteQuadraticForm::cyclic(5, q(2, 5)).expect("valid block"),
        ])
    }
}

/// One isomorphism test between finite quadratic forms.
#[derive(Clone, Debug, Serialize)]
pub struct IsoCheck {
    pub name: String,
    pub source: String,
    pub target: String,
    pub witness: Option<Isometry>,
    /// The witness was re-verified exhaustively.
    pub verified: bool,
}

impl IsoCheck {
    pub fn run(name: &str, source: &FiniteQuadraticForm, target: &FiniteQuadraticForm) -> Result<Self> {
        let witness = fqf_isomorphic(source, target)?;
        let verified = witness.as_ref().is_some_and(|w| w.verify(source, target));
        Ok(IsoCheck {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            witness,
            verified,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscriminantReport {
    pub vtilde_order: u64,
    pub vtilde_det: String,
    pub n_order: u64,
    pub n_det: String,
    pub t_order: u64,
    pub checks: Vec<IsoCheck>,
}

impl DiscriminantReport {
    pub fn all_pass(&self) -> bool {
        self.vtilde_order == DISCRIMINANT_ORDER
            && self.n_order == DISCRIMINANT_ORDER
            && self.checks.iter().all(|c| c.verified)
    }
}

/// Discriminant forms of `Ṽ`, `K = Ṽ⊥`, N and T, and the isomorphisms among
/// them and the reference forms.
pub fn verify_discriminants(
    vtilde: &IntegralLattice,
    k: &IntegralLattice,
    n: &PolarizedLattice,
) -> Result<DiscriminantReport> {
    let dv = discriminant_form(vtilde)?;
    let dk = discriminant_form(k)?;
    let dn = discriminant_form(&n.lattice)?;
    let dt = discriminant_form(&t_lattice())?;
    let checks = vec![
        IsoCheck::run("discr Ṽ ≅ [1,½;½,1]⊕[1/8]⊕[2/5]", &dv, &reference::vtilde())?,
        IsoCheck::run("discr Ṽ⊥ ≅ −discr Ṽ", &dk, &dv.negated())?,
        IsoCheck::run("discr N ≅ [5/4]⊕[1/8]⊕[2/5]", &dn, &reference::n_first())?,
        IsoCheck::run("discr N ≅ [−1/4]⊕[−5/8]⊕[2/5]", &dn, &reference::n_second())?,
        IsoCheck::run("−discr N ≅ discr T", &dn.negated(), &dt)?,
    ];
    Ok(DiscriminantReport {
        vtilde_order: dv.order(),
        vtilde_det: vtilde.determinant().to_string(),
        n_order: dn.order(),
        n_det: n.lattice.determinant().to_string(),
        t_order: dt.order(),
        checks,
    })
}

/// Bad classes found by [`bad_vector_scan`], in the lattice basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BadVectors {
    /// `e² = −2`, `e·h = 0`.
    pub exceptional: Vec<Vec<BigInt>>,
    /// `e² = 0`, `e·h = 2`.
    pub isotropic: Vec<Vec<BigInt>>,
}

impl BadVectors {
    pub fn is_empty(&self) -> bool {
        self.exceptional.is_empty() && self.isotropic.is_empty()
    }
}

/// Some `e` with `e·h = 2`, if one exists.
fn solve_pairing(p: &PolarizedLattice, target: i64) -> Result<Option<Vec<BigInt>>> {
    let gram = p
        .lattice
        .int_gram()
        .ok_or_else(|| Error::construction("polarized lattice is not integral"))?;
    let gh = gram.left_mul_vec(&p.h);
    let col = IntMatrix::from_rows(1, gh.into_iter().map(|x| vec![x]).collect());
    let (hm, u) = hnf_with_transform(&col);
    let g = hm[(0, 0)].clone();
    if g.is_zero() || !(int(target) % &g).is_zero() {
        return Ok(None);
    }
    let f = int(target) / g;
    Ok(Some(u.row(0).iter().map(|x| x * &f).collect()))
}

/// Writing `e = α·h + f` with `f ⊥ h`: exceptional classes are the norm-2
/// vectors of `−h⊥`; 2-isotropic classes have `α = ½` and `f` of norm 1 in
/// the coset `e₀ − ½h + h⊥` of the negative definite `h⊥`.
pub fn bad_vector_scan(p: &PolarizedLattice) -> Result<BadVectors> {
    let n = &p.lattice;
    let r = p.rank();
    let h_span = IntegralLattice::in_ambient(IntMatrix::from_rows(r, vec![p.h.clone()]), n.ambient().clone());
    let w = orthogonal_complement(&h_span, n)?;
    let neg_w = -w.gram();
    let wb = w.basis().to_rational();
    let to_n = |x: &[i64], shift: Option<&[BigRational]>| -> Vec<BigRational> {
        let c: Vec<BigRational> = x
            .iter()
            .enumerate()
            .map(|(i, &v)| rat(v, 1) + shift.map_or(BigRational::zero(), |s| s[i].clone()))
            .collect();
        wb.left_mul_vec(&c)
    };

    let exceptional: Vec<Vec<BigInt>> = short_vectors(&neg_w, &rat(2, 1), None)?
        .iter()
        .map(|x| to_n(x, None).into_iter().map(|v| v.to_integer()).collect())
        .collect();

    let mut isotropic: Vec<Vec<BigInt>> = Vec::new();
    if let Some(e0) = solve_pairing(p, 2)? {
        let half = rat(1, 2);
        let f0: Vec<BigRational> = e0
            .iter()
            .zip(&p.h)
            .map(|(e, h)| BigRational::from_integer(e.clone()) - &half * BigRational::from_integer(h.clone()))
            .collect();
        let shift = CoordinateSolver::new(&w)?
            .rational_coordinates(&f0)
            .ok_or_else(|| Error::construction("e₀ − ½h is not orthogonal to h"))?;
        for x in short_vectors(&neg_w, &BigRational::one(), Some(&shift))? {
            let e: Vec<BigRational> = to_n(&x, Some(&shift))
                .iter()
                .zip(&p.h)
                .map(|(f, h)| f + &half * BigRational::from_integer(h.clone()))
                .collect();
            if !e.iter().all(|v| v.is_integer()) {
                return Err(Error::construction("coset vector is not in the lattice"));
            }
            isotropic.push(e.into_iter().map(|v| v.to_integer()).collect());
        }
    }

    for e in &exceptional {
        debug_assert_eq!(p.pair(e, e), rat(-2, 1));
        debug_assert!(p.pair(e, &p.h).is_zero());
    }
    for e in &isotropic {
        if !p.pair(e, e).is_zero() || p.pair(e, &p.h) != rat(2, 1) {
            return Err(Error::construction("2-isotropic candidate fails re-verification"));
        }
    }
    Ok(BadVectors { exceptional, isotropic })
}

/// `diag(4, −2)` with `h = (1, 0)`: a lattice with a planted exceptional class.
pub fn planted_control() -> PolarizedLattice {
    PolarizedLattice::new(
        RatMatrix::from_i64(2, 2, &[4, 0, 0, -2]),
        vec![int(1), int(0)],
        vec![],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::Generators;

    #[test]
    fn planted_control_is_caught() {
        let bad = bad_vector_scan(&planted_control()).unwrap();
        assert_eq!(bad.exceptional, vec![vec![int(0), int(-1)], vec![int(0), int(1)]]);
        assert!(bad.isotropic.is_empty());
    }

    #[test]
    fn isotropic_control() {
        // Hyperbolic plane U with e·f = 1, h = e + 2f: h² = 4, e² = 0, e·h = 2.
        let p = PolarizedLattice::new(RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]), vec![int(1), int(2)], vec![]);
        let bad = bad_vector_scan(&p).unwrap();
        assert!(bad.isotropic.contains(&vec![int(1), int(0)]));
        assert!(bad.exceptional.is_empty());
    }

    #[test]
    fn clean_lattice_scans_empty() {
        let p = PolarizedLattice::new(RatMatrix::from_i64(2, 2, &[4, 0, 0, -4]), vec![int(1), int(0)], vec![]);
        assert!(bad_vector_scan(&p).unwrap().is_empty());
    }

    #[test]
    fn vtilde_gram_and_det() {
        let v = vtilde(&Generators::standard());
        assert_eq!(v.determinant(), rat(160, 1));
        assert!(v.is_even());
    }

    #[test]
    fn odd_pairing_detected() {
        let hbar = vec![int(4), int(4)];
        let good = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(2, 2, &[4, -4, 8, 0]), 8);
        assert!(check_hbar_parity(&good, &hbar));
        let bad = IntegralLattice::scaled_euclidean(IntMatrix::from_i64(2, 2, &[4, -4, 2, 0]), 8);
        assert!(!check_hbar_parity(&bad, &hbar));
    }

    #[test]
    fn t_discriminant() {
        let d = discriminant_form(&t_lattice()).unwrap();
        let diag = FiniteQuadraticForm::cyclic(4, q(1, 4))
            .unwrap()
            .direct_sum(&FiniteQuadraticForm::cyclic(40, q(1, 40)).unwrap());
        assert_eq!(d.order(), 160);
        assert!(fqf_isomorphic(&d, &diag).unwrap().is_some());
    }

    #[test]
    fn reference_forms_agree() {
        assert!(fqf_isomorphic(&reference::n_first(), &reference::n_second())
            .unwrap()
            .is_some());
        assert_eq!(reference::vtilde().order(), 160);
    }
}
