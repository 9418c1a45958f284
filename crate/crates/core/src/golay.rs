//! The extended binary Golay code on Ω = {1, …, 24}.
//!
//! Codewords are stored as 24-bit masks: position `i ∈ Ω` is bit `i - 1`.
//! The code is expanded from twelve cyclic shifts of the quadratic-residue
//! generator polynomial
//!
//! ```text
//! g(x) = x^11 + x^9 + x^7 + x^6 + x^5 + x + 1
//! ```
//!
//! of the perfect [23, 12, 7] code, each extended by an overall parity bit
//! in position 24. Nothing about the construction is trusted: [`GolayCode::build`]
//! re-checks the weight distribution, complement closure and linearity
//! before handing the code out.
//!
//! | weight | count |
//! |--------|-------|
//! | 0      | 1     |
//! | 8      | 759   |
//! | 12     | 2576  |
//! | 16     | 759   |
//! | 24     | 1     |

use std::collections::HashMap;
use std::fmt;
use std::io::Write;

use crate::error::{Error, Result};

/// Number of points in Ω.
pub const N: usize = 24;

/// Mask of the whole set Ω.
pub const OMEGA: u32 = (1 << N) - 1;

/// Exponents of the generator polynomial of the [23, 12, 7] code.
const GENERATOR_EXPONENTS: [u32; 7] = [0, 1, 5, 6, 7, 9, 11];

/// Expected number of codewords of weight `w`, indexed by `w`.
pub fn expected_weight_count(weight: u32) -> usize {
    match weight {
        0 | 24 => 1,
        8 | 16 => 759,
        12 => 2576,
        _ => 0,
    }
}

/// Mask of a set of positions given 1-based.
///
/// ```
/// use k3_conics::golay::mask;
/// assert_eq!(mask(&[1, 2, 3]), 0b111);
/// ```
pub fn mask(positions: &[usize]) -> u32 {
    positions.iter().fold(0, |m, &p| {
        debug_assert!((1..=N).contains(&p), "position {p} outside Ω");
        m | 1 << (p - 1)
    })
}

/// Positions (1-based, increasing) contained in a mask.
pub fn positions(m: u32) -> impl Iterator<Item = usize> {
    (0..N).filter(move |i| m >> i & 1 == 1).map(|i| i + 1)
}

/// A subset of Ω, viewed as a (potential) Golay codeword.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Codeword(u32);

impl Codeword {
    pub fn from_mask(m: u32) -> Self {
        debug_assert_eq!(m & !OMEGA, 0);
        Codeword(m & OMEGA)
    }

    pub fn from_positions(p: &[usize]) -> Self {
        Codeword(mask(p))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Whether the 1-based position `p` lies in the support.
    pub fn contains(self, p: usize) -> bool {
        self.0 >> (p - 1) & 1 == 1
    }

    pub fn complement(self) -> Self {
        Codeword(OMEGA ^ self.0)
    }

    pub fn sym_diff(self, other: Self) -> Self {
        Codeword(self.0 ^ other.0)
    }

    pub fn intersect(self, window: u32) -> u32 {
        self.0 & window
    }

    pub fn positions(self) -> impl Iterator<Item = usize> {
        positions(self.0)
    }

    /// The word as 24 characters `0`/`1`, position 1 first.
    pub fn to_bit_string(self) -> String {
        (1..=N)
            .map(|p| if self.contains(p) { '1' } else { '0' })
            .collect()
    }

    /// Apply a permutation of Ω given as `perm[old - 1] = new` (1-based images).
    pub fn permute(self, perm: &[usize; N]) -> Self {
        Codeword(self.positions().fold(0, |m, p| m | 1 << (perm[p - 1] - 1)))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.positions().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The 4096 codewords together with a generating set of twelve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolayCode {
    words: Vec<Codeword>,
    basis: [Codeword; 12],
}

impl GolayCode {
    /// Build the code and run the self-test.
    pub fn build() -> Result<Self> {
        let g: u32 = GENERATOR_EXPONENTS.iter().map(|e| 1u32 << e).sum();
        let mut basis = [Codeword::default(); 12];
        for (i, row) in basis.iter_mut().enumerate() {
            let shifted = g << i;
            let parity = shifted.count_ones() & 1;
            *row = Codeword(shifted | parity << 23);
        }
        let code = Self::from_basis(basis);
        code.self_test()?;
        Ok(code)
    }

    fn from_basis(basis: [Codeword; 12]) -> Self {
        let mut words: Vec<Codeword> = (0u32..1 << 12)
            .map(|sel| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sel >> i & 1 == 1)
                    .fold(Codeword(0), |acc, (_, b)| acc.sym_diff(*b))
            })
            .collect();
        words.sort_unstable();
        words.dedup();
        GolayCode { words, basis }
    }

    /// Weight distribution, complement closure, linearity of the basis span
    /// and minimum distance. Cheap enough to run on every construction.
    pub fn self_test(&self) -> Result<()> {
        if self.words.len() != 1 << 12 {
            return Err(Error::construction(format!(
                "expected 4096 codewords, got {}",
                self.words.len()
            )));
        }
        let dist = self.weight_distribution();
        for (w, &count) in dist.iter().enumerate() {
            if count != expected_weight_count(w as u32) {
                return Err(Error::construction(format!(
                    "weight {w}: expected {} codewords, got {count}",
                    expected_weight_count(w as u32)
                )));
            }
        }
        for &w in &self.words {
            if !self.contains(w.complement()) {
                return Err(Error::construction(format!("complement of {w} missing")));
            }
        }
        for &b in &self.basis {
            for &w in &self.words {
                if !self.contains(w.sym_diff(b)) {
                    return Err(Error::construction("code is not closed under addition"));
                }
            }
        }
        Ok(())
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn basis(&self) -> &[Codeword; 12] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: Codeword) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    /// Membership test for an arbitrary subset of Ω.
    pub fn is_codeword(&self, subset: u32) -> bool {
        subset & !OMEGA == 0 && self.contains(Codeword(subset))
    }

    /// Counts indexed by weight 0..=24.
    pub fn weight_distribution(&self) -> [usize; N + 1] {
        let mut dist = [0; N + 1];
        for w in &self.words {
            dist[w.weight() as usize] += 1;
        }
        dist
    }

    pub fn octads(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words.iter().copied().filter(|w| w.weight() == 8)
    }

    pub fn min_nonzero_weight(&self) -> u32 {
        self.words
            .iter()
            .map(|w| w.weight())
            .filter(|&w| w > 0)
            .min()
            .unwrap_or(0)
    }

    /// Codewords `o` with `o ∩ window = pattern`, optionally of a fixed weight,
    /// sorted by mask.
    pub fn codewords_meeting(
        &self,
        window: u32,
        pattern: u32,
        weight: Option<u32>,
    ) -> Vec<Codeword> {
        debug_assert_eq!(pattern & !window, 0, "pattern must lie inside window");
        self.words
            .iter()
            .copied()
            .filter(|w| w.intersect(window) == pattern)
            .filter(|w| weight.map_or(true, |k| w.weight() == k))
            .collect()
    }

    /// Apply a permutation of Ω (`perm[old - 1] = new`) to every codeword.
    pub fn permuted(&self, perm: &[usize; N]) -> Self {
        let basis = self.basis.map(|b| b.permute(perm));
        let mut words: Vec<Codeword> = self.words.iter().map(|w| w.permute(perm)).collect();
        words.sort_unstable();
        GolayCode { words, basis }
    }

    /// Write the generator rows, then all codewords, as 24-character 0/1 lines
    /// sorted lexicographically.
    pub fn export_words<W: Write>(&self, mut out: W) -> Result<()> {
        let mut lines: Vec<String> = self.words.iter().map(|w| w.to_bit_string()).collect();
        lines.sort();
        for l in lines {
            writeln!(out, "{l}")?;
        }
        Ok(())
    }

    pub fn export_generator<W: Write>(&self, mut out: W) -> Result<()> {
        for b in &self.basis {
            writeln!(out, "{}", b.to_bit_string())?;
        }
        Ok(())
    }
}

/// Whether every 5-subset of Ω lies in exactly one octad.
pub fn steiner_check(code: &GolayCode) -> bool {
    let octads: Vec<Codeword> = code.octads().collect();
    steiner_check_octads(&octads)
}

/// [`steiner_check`] on an explicit octad list (used to exercise the negative case).
pub fn steiner_check_octads(octads: &[Codeword]) -> bool {
    let mut cover: HashMap<u32, u8> = HashMap::with_capacity(42504);
    for o in octads {
        for q in subsets_of_size(o.mask(), 5) {
            *cover.entry(q).or_default() += 1;
        }
    }
    cover.len() == 42504 && cover.values().all(|&c| c == 1)
}

/// All `k`-subsets of the bits of `m`, in increasing mask order.
pub fn subsets_of_size(m: u32, k: u32) -> impl Iterator<Item = u32> {
    // Enumerate submasks of m; fine for |m| <= 24 only when called on small sets.
    let mut sub = m;
    let mut done = false;
    std::iter::from_fn(move || {
        while !done {
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & m;
            }
            if cur.count_ones() == k {
                return Some(cur);
            }
        }
        None
    })
}

/// The ordered quintuple φ = (1,2,3,4,5) together with the frame octad κ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub fixed: [usize; 5],
    pub octad: Codeword,
    /// The octads meeting φ in exactly {1,2,4,5}, sorted by mask.
    pub candidates: Vec<Codeword>,
}

impl Frame {
    /// Σ = φ ∪ κ.
    pub fn full(&self) -> u32 {
        mask(&self.fixed) | self.octad.mask()
    }

    /// The four positions of κ outside φ.
    pub fn movable(&self) -> u32 {
        self.octad.mask() & !mask(&self.fixed)
    }
}

/// Which of the admissible octads is moved onto {1,2,4,5,6,7,8,9}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OctadChoice {
    #[default]
    Lex,
    Index(usize),
}

impl fmt::Display for OctadChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OctadChoice::Lex => f.write_str("lex"),
            OctadChoice::Index(i) => write!(f, "{i}"),
        }
    }
}

impl std::str::FromStr for OctadChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OctadChoice::Lex),
            _ => match s.parse::<usize>() {
                Ok(i) if i < 4 => Ok(OctadChoice::Index(i)),
                _ => Err(format!("octad choice must be lex, 0, 1, 2 or 3; got {s:?}")),
            },
        }
    }
}

const FIXED: [usize; 5] = [1, 2, 3, 4, 5];
const KAPPA_FIXED: [usize; 4] = [1, 2, 4, 5];

/// Relabel Ω so that φ = (1,2,3,4,5) and κ = {1,2,4,5,6,7,8,9}.
///
/// The mask-least octad goes to {1,…,9}∖{3}: its four smallest elements onto
/// {1,2,4,5} and the other four onto {6,7,8,9}; the smallest point off the
/// octad becomes 3 and the remaining fifteen points fill {10,…,24} in order.
pub fn normalize_frame(code: &GolayCode) -> Result<(GolayCode, Frame)> {
    normalize_frame_with(code, OctadChoice::Lex)
}

pub fn normalize_frame_with(code: &GolayCode, choice: OctadChoice) -> Result<(GolayCode, Frame)> {
    let first = code
        .octads()
        .min()
        .ok_or_else(|| Error::construction("code has no octads"))?;
    let elems: Vec<usize> = first.positions().collect();
    let outside = (1..=N)
        .find(|p| !first.contains(*p))
        .ok_or_else(|| Error::construction("octad covers Ω"))?;
    let mut images = Vec::with_capacity(N);
    images.extend(elems[..4].iter().zip(KAPPA_FIXED).map(|(&p, q)| (p, q)));
    images.push((outside, 3));
    images.extend(elems[4..].iter().zip(6..=9).map(|(&p, q)| (p, q)));
    let mut code = code.permuted(&complete_permutation(&images)?);

    if let OctadChoice::Index(k) = choice {
        let candidates = frame_candidates(&code);
        let chosen = *candidates.get(k).ok_or_else(|| {
            Error::construction(format!("only {} admissible octads", candidates.len()))
        })?;
        let mut images: Vec<(usize, usize)> = FIXED.iter().map(|&p| (p, p)).collect();
        let movable = chosen.mask() & !mask(&FIXED);
        images.extend(positions(movable).zip(6..=9));
        code = code.permuted(&complete_permutation(&images)?);
    }

    let candidates = frame_candidates(&code);
    let octad = Codeword(mask(&[1, 2, 4, 5, 6, 7, 8, 9]));
    if candidates.len() != 4 || !candidates.contains(&octad) {
        return Err(Error::construction(format!(
            "expected 4 admissible octads including {octad}, found {}",
            candidates.len()
        )));
    }
    code.self_test()?;
    Ok((
        code,
        Frame {
            fixed: FIXED,
            octad,
            candidates,
        },
    ))
}

/// Octads `o` with `o ∩ {1,2,3,4,5} = {1,2,4,5}`.
pub fn frame_candidates(code: &GolayCode) -> Vec<Codeword> {
    code.codewords_meeting(mask(&FIXED), mask(&KAPPA_FIXED), Some(8))
}

/// Extend a partial assignment `old -> new` to a permutation of Ω, sending the
/// unassigned points in increasing order onto the unused images in increasing order.
fn complete_permutation(images: &[(usize, usize)]) -> Result<[usize; N]> {
    let mut perm = [0usize; N];
    let mut used = [false; N + 1];
    for &(old, new) in images {
        if perm[old - 1] != 0 || used[new] {
            return Err(Error::construction("partial relabeling is not injective"));
        }
        perm[old - 1] = new;
        used[new] = true;
    }
    let mut free = (1..=N).filter(|&q| !used[q]);
    for slot in perm.iter_mut().filter(|s| **s == 0) {
        *slot = free.next().expect("counts agree");
    }
    Ok(perm)
}
