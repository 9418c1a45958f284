//! The 800 conics: minimal vectors `l` of the Leech lattice with
//! `(l·ħ, l·a, l·u₁, l·u₂, l·u₃) = (2, 1, 0, 0, 0)`.
//!
//! Conics are classified twice and the two routes must agree: by their
//! coordinate profile on positions 1–9 ([`classify`]), and by counting the
//! inducing codewords directly in the code ([`verify_recount`]).

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::golay::{mask, Codeword, GolayCode, N};
use crate::leech::{self, LeechVector, Shape};

/// Raw products `(l·ħ, l·a, l·u₁, l·u₂, l·u₃)` (true values times 8) of a conic.
pub const CONIC_CONDITIONS: [i64; 5] = [16, 8, 0, 0, 0];

/// Gram matrix of `Ṽ = Zħ + Za + Zu₁ + Zu₂ + Zu₃`.
pub const VTILDE_GRAM: [[i64; 5]; 5] = [
    [4, 2, 0, 0, 0],
    [2, 4, 2, 0, 1],
    [0, 2, 4, 2, -1],
    [0, 0, 2, 4, 0],
    [0, 1, -1, 0, 4],
];

pub const EXPECTED_CONICS: usize = 800;
/// Pattern sizes #1–#4.
pub const EXPECTED_SPLIT: [usize; 4] = [96, 96, 320, 288];

const MOVABLE: [usize; 4] = [6, 7, 8, 9];

/// The five generators of `Ṽ` in the normalized frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub hbar: LeechVector,
    pub a: LeechVector,
    pub u1: LeechVector,
    pub u2: LeechVector,
    pub u3: LeechVector,
}

fn vector(prefix: &[i8]) -> LeechVector {
    let mut c = [0i8; N];
    c[..prefix.len()].copy_from_slice(prefix);
    LeechVector::from_coords(c).expect("generator has a minimal shape")
}

impl Generators {
    pub fn standard() -> Self {
        Generators {
            hbar: vector(&[4, 4]),
            a: vector(&[0, 4, 4]),
            u1: vector(&[0, 0, 4, 4]),
            u2: vector(&[0, 0, 0, 4, 4]),
            u3: vector(&[-2, 2, 0, -2, 2, 2, 2, 2, 2]),
        }
    }

    pub fn as_array(&self) -> [&LeechVector; 5] {
        [&self.hbar, &self.a, &self.u1, &self.u2, &self.u3]
    }

    /// True Gram matrix of the five generators.
    pub fn gram(&self) -> [[i64; 5]; 5] {
        let g = self.as_array();
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                g[i].inner(g[j])
                    .as_integer()
                    .expect("Leech products are integral")
            })
        })
    }

    /// Check the Gram matrix and that `u₃` sits on the frame octad.
    pub fn validate(&self, code: &GolayCode) -> Result<()> {
        if self.gram() != VTILDE_GRAM {
            return Err(Error::construction(format!(
                "generator Gram {:?} differs from the expected matrix",
                self.gram()
            )));
        }
        let kappa = Codeword::from_positions(&[1, 2, 4, 5, 6, 7, 8, 9]);
        if self.u3.shape != Shape::S20 || self.u3.codeword() != Some(kappa) || !code.contains(kappa) {
            return Err(Error::construction("u3 is not a shape-20 vector on the frame octad"));
        }
        Ok(())
    }

    /// Raw products of `l` with the five generators.
    pub fn raw_products(&self, l: &LeechVector) -> [i64; 5] {
        self.as_array().map(|g| l.inner(g).raw)
    }

    pub fn is_conic(&self, l: &LeechVector) -> bool {
        self.raw_products(l) == CONIC_CONDITIONS
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Pattern {
    #[serde(rename = "#1")]
    P1,
    #[serde(rename = "#2")]
    P2,
    #[serde(rename = "#3")]
    P3,
    #[serde(rename = "#4")]
    P4,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::P1, Pattern::P2, Pattern::P3, Pattern::P4];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.index() + 1)
    }
}

/// The starred positions in `{6,7,8,9}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MovablePair {
    None,
    /// Two positions carrying `-1`.
    Unordered { p: usize, q: usize },
    /// `+2` at `p`, `-2` at `q`.
    Ordered { p: usize, q: usize },
}

impl fmt::Display for MovablePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MovablePair::None => f.write_str("-"),
            MovablePair::Unordered { p, q } => write!(f, "{{{p},{q}}}"),
            MovablePair::Ordered { p, q } => write!(f, "({p},{q})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConicRecord {
    pub pattern: Pattern,
    pub l: LeechVector,
    pub movable_pair: MovablePair,
    pub codeword: Codeword,
}

impl fmt::Display for ConicRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {:#08x}",
            self.l,
            self.pattern,
            self.movable_pair,
            self.codeword.mask()
        )
    }
}

/// Pattern and starred pair of a conic, read off positions 1–9.
pub fn classify(l: &LeechVector) -> Result<(Pattern, MovablePair)> {
    let fixed: [i8; 5] = std::array::from_fn(|i| l.coords[i]);
    let movable: [i8; 4] = MOVABLE.map(|p| l.at(p));
    let at = |v: i8| MOVABLE.iter().zip(movable).filter(move |(_, m)| *m == v).map(|(p, _)| *p);
    let unclassified = || Error::construction(format!("conic {l:?} matches no pattern"));

    match (l.shape, fixed) {
        (Shape::S31, [1, 3, -1, 1, -1] | [3, 1, 1, -1, 1]) => {
            let minus: Vec<usize> = at(-1).collect();
            if minus.len() != 2 || at(1).count() != 2 {
                return Err(unclassified());
            }
            let pattern = if fixed[0] == 1 { Pattern::P1 } else { Pattern::P2 };
            Ok((pattern, MovablePair::Unordered { p: minus[0], q: minus[1] }))
        }
        (Shape::S20, [2, 2, 0, 0, 0]) => {
            let plus: Vec<usize> = at(2).collect();
            let minus: Vec<usize> = at(-2).collect();
            match (plus.len(), minus.len()) {
                (0, 0) => Ok((Pattern::P3, MovablePair::None)),
                (1, 1) => Ok((Pattern::P4, MovablePair::Ordered { p: plus[0], q: minus[0] })),
                _ => Err(unclassified()),
            }
        }
        _ => Err(unclassified()),
    }
}

fn record(l: LeechVector) -> Result<ConicRecord> {
    let (pattern, movable_pair) = classify(&l)?;
    let codeword = l
        .codeword()
        .ok_or_else(|| Error::construction("conic of shape 40"))?;
    Ok(ConicRecord {
        pattern,
        l,
        movable_pair,
        codeword,
    })
}

/// Filter and classify conics from an explicit list of minimal vectors.
pub fn find_conics(census: &[LeechVector], gens: &Generators) -> Result<Vec<ConicRecord>> {
    let hits: Vec<LeechVector> = census
        .par_iter()
        .filter(|l| gens.is_conic(l))
        .copied()
        .collect();
    finish(hits)
}

/// Same as [`find_conics`], streaming the census from the code.
pub fn find_conics_in_code(code: &GolayCode, gens: &Generators) -> Result<Vec<ConicRecord>> {
    finish(leech::filter_minimal_vectors(code, |l| gens.is_conic(l)))
}

fn finish(hits: Vec<LeechVector>) -> Result<Vec<ConicRecord>> {
    let mut records = hits.into_iter().map(record).collect::<Result<Vec<_>>>()?;
    records.sort();
    Ok(records)
}

pub fn pattern_split(conics: &[ConicRecord]) -> [usize; 4] {
    let mut split = [0; 4];
    for c in conics {
        split[c.pattern.index()] += 1;
    }
    split
}

/// Redundant coordinate consequences of the conic conditions:
/// `l₁+l₂ = 4`, `l₂+l₃ = 2`, `l₄ = −l₃`, `l₅ = l₃`.
pub fn coordinate_constraints_hold(l: &LeechVector) -> bool {
    let c = |p: usize| l.at(p) as i32;
    c(1) + c(2) == 4 && c(2) + c(3) == 2 && c(4) == -c(3) && c(5) == c(3)
}

/// One row of the codeword-side recount.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecountRow {
    pub row: usize,
    pub condition: String,
    pub octads_only: bool,
    /// Codeword count per admissible pair (or a single entry with no pair).
    pub per_pair: Vec<PairCount>,
    /// The common codeword count per pair, if uniform.
    pub underlined: Option<usize>,
    pub expected_underlined: usize,
    /// Product of the remaining factors.
    pub multiplier: usize,
    pub combinatorial_total: usize,
    /// Conic pattern whose inducing codewords satisfy this row's condition.
    pub matched_pattern: Option<Pattern>,
    pub filtered_total: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub pair: Option<(usize, usize)>,
    pub codewords: usize,
    /// Conics whose inducing codeword meets Σ in this row's pattern for the pair.
    pub conics: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecountReport {
    pub rows: Vec<RecountRow>,
    /// `(pattern, recount row)` as observed.
    pub correspondence: Vec<(Pattern, usize)>,
    pub all_agree: bool,
}

/// Recount each row from the code alone and compare with the filtered conics.
pub fn verify_recount(code: &GolayCode, conics: &[ConicRecord]) -> Result<RecountReport> {
    let sigma = mask(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
    let unordered: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (MOVABLE[i], MOVABLE[j])))
        .collect();
    let ordered: Vec<(usize, usize)> = MOVABLE
        .iter()
        .flat_map(|&p| MOVABLE.iter().filter(move |&&q| q != p).map(move |&q| (p, q)))
        .collect();

    struct RowRule {
        base: &'static [usize],
        pairs: Option<bool>, // None: no pair; Some(ordered)
        octads_only: bool,
        expected_underlined: usize,
        per_codeword: usize,
        multiplier: usize,
    }
    let rules = [
        RowRule { base: &[2, 3, 5], pairs: Some(false), octads_only: false, expected_underlined: 16, per_codeword: 1, multiplier: 6 },
        RowRule { base: &[1, 4], pairs: Some(false), octads_only: false, expected_underlined: 16, per_codeword: 1, multiplier: 6 },
        RowRule { base: &[1, 2], pairs: None, octads_only: true, expected_underlined: 10, per_codeword: 32, multiplier: 32 },
        RowRule { base: &[1, 2], pairs: Some(true), octads_only: true, expected_underlined: 3, per_codeword: 8, multiplier: 8 * 12 },
    ];

    let mut rows = Vec::new();
    let mut correspondence = Vec::new();
    for (idx, rule) in rules.iter().enumerate() {
        let pair_list: Vec<Option<(usize, usize)>> = match rule.pairs {
            None => vec![None],
            Some(false) => unordered.iter().copied().map(Some).collect(),
            Some(true) => ordered.iter().copied().map(Some).collect(),
        };
        let weight = rule.octads_only.then_some(8);
        let mut per_pair = Vec::new();
        for pair in &pair_list {
            let mut pat = mask(rule.base);
            if let Some((p, q)) = pair {
                pat |= mask(&[*p, *q]);
            }
            let codewords = code.codewords_meeting(sigma, pat, weight).len();
            let matching = conics.iter().filter(|c| {
                let shape_ok = (c.l.shape == Shape::S20) == rule.octads_only;
                let pair_ok = match (rule.pairs, pair, c.movable_pair) {
                    (Some(true), Some((p, q)), MovablePair::Ordered { p: cp, q: cq }) => (cp, cq) == (*p, *q),
                    (Some(true), _, _) => false,
                    _ => true,
                };
                shape_ok && pair_ok && c.codeword.intersect(sigma) == pat
            });
            per_pair.push(PairCount {
                pair: *pair,
                codewords,
                conics: matching.count(),
            });
        }
        let underlined = per_pair
            .first()
            .map(|p| p.codewords)
            .filter(|&u| per_pair.iter().all(|p| p.codewords == u));
        let combinatorial_total = underlined.map_or(0, |u| u * rule.multiplier);
        let per_pair_ok = per_pair.iter().all(|p| p.conics == p.codewords * rule.per_codeword);

        // Which classified pattern carries these codewords?
        let patterns: BTreeMap<Pattern, usize> = conics
            .iter()
            .filter(|c| (c.l.shape == Shape::S20) == rule.octads_only)
            .filter(|c| {
                pair_list.iter().any(|pair| {
                    let mut pat = mask(rule.base);
                    if let Some((p, q)) = pair {
                        pat |= mask(&[*p, *q]);
                    }
                    c.codeword.intersect(sigma) == pat
                })
            })
            .fold(BTreeMap::new(), |mut m, c| {
                *m.entry(c.pattern).or_default() += 1;
                m
            });
        let matched_pattern = (patterns.len() == 1).then(|| *patterns.keys().next().unwrap());
        let filtered_total = matched_pattern.map_or(0, |p| pattern_split(conics)[p.index()]);
        if let Some(p) = matched_pattern {
            correspondence.push((p, idx + 1));
        }
        let agrees = underlined == Some(rule.expected_underlined)
            && per_pair_ok
            && matched_pattern.is_some()
            && combinatorial_total == filtered_total;
        rows.push(RecountRow {
            row: idx + 1,
            condition: describe(rule.base, rule.pairs, rule.octads_only),
            octads_only: rule.octads_only,
            per_pair,
            underlined,
            expected_underlined: rule.expected_underlined,
            multiplier: rule.multiplier,
            combinatorial_total,
            matched_pattern,
            filtered_total,
            agrees,
        });
    }
    correspondence.sort();
    let all_agree = rows.iter().all(|r| r.agrees);
    let report = RecountReport {
        rows,
        correspondence,
        all_agree,
    };
    if !report.all_agree {
        return Err(Error::mismatch(format!(
            "codeword recount disagrees with the filtered conics: {:?}",
            report.rows.iter().filter(|r| !r.agrees).map(|r| r.row).collect::<Vec<_>>()
        )));
    }
    Ok(report)
}

fn describe(base: &[usize], pairs: Option<bool>, octads: bool) -> String {
    let mut elems: Vec<String> = base.iter().map(|p| p.to_string()).collect();
    if pairs.is_some() {
        elems.extend(["p".into(), "q".into()]);
    }
    let kind = if octads { "octads" } else { "codewords" };
    format!("{kind} o with o∩Σ = {{{}}}", elems.join(","))
}

/// True products `lᵢ·lⱼ` for all pairs of conics.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    n: usize,
    products: Vec<i8>,
}

impl IntersectionGraph {
    pub fn build(conics: &[ConicRecord]) -> Result<Self> {
        let n = conics.len();
        let products: Vec<i8> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (0..n).map(move |j| {
                    let raw = conics[i].l.inner(&conics[j].l).raw;
                    debug_assert_eq!(raw % 8, 0);
                    (raw / 8) as i8
                })
            })
            .collect();
        let g = IntersectionGraph { n, products };
        if let Some((i, j)) = g.pairs().find(|&(i, j)| g.product(i, j) > 2) {
            return Err(Error::mismatch(format!(
                "conics {i} and {j} have product {} > 2",
                g.product(i, j)
            )));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn product(&self, i: usize, j: usize) -> i64 {
        self.products[i * self.n + j] as i64
    }

    /// Geometric intersection `cᵢ·cⱼ = 2 − lᵢ·lⱼ` (for `i ≠ j`).
    pub fn class_product(&self, i: usize, j: usize) -> i64 {
        if i == j {
            -2
        } else {
            2 - self.product(i, j)
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j)))
    }

    /// Distribution of `lᵢ·lⱼ` over unordered pairs `i < j`.
    pub fn histogram(&self) -> BTreeMap<i64, usize> {
        let mut h = BTreeMap::new();
        for (i, j) in self.pairs() {
            *h.entry(self.product(i, j)).or_default() += 1;
        }
        h
    }

    pub fn diagonal_ok(&self) -> bool {
        (0..self.n).all(|i| self.product(i, i) == 4)
    }

    /// Adjacency bitsets of the disjointness graph (`lᵢ·lⱼ = 2`).
    pub fn disjointness(&self) -> Vec<Bitset> {
        (0..self.n)
            .map(|i| {
                let mut b = Bitset::new(self.n);
                for j in 0..self.n {
                    if i != j && self.product(i, j) == 2 {
                        b.insert(j);
                    }
                }
                b
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(n: usize) -> Self {
        Bitset {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bitset) -> Bitset {
        Bitset {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Elements greater than `i`.
    pub fn above(&self, i: usize) -> Bitset {
        let mut b = self.clone();
        for (w, word) in b.words.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= i + 1 {
                *word = 0;
            } else if lo <= i {
                *word &= !0u64 << (i + 1 - lo);
            }
        }
        b
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Lexicographically least clique of the given size in a graph, by
/// backtracking over vertices in index order with the bound
/// `|clique| + |candidates| ≥ size`.
pub fn find_clique(adj: &[Bitset], size: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut clique = Vec::with_capacity(size);
    fn go(adj: &[Bitset], size: usize, cand: Bitset, clique: &mut Vec<usize>) -> bool {
        if clique.len() == size {
            return true;
        }
        if clique.len() + cand.count() < size {
            return false;
        }
        for v in cand.iter() {
            let next = cand.and(&adj[v]).above(v);
            clique.push(v);
            if go(adj, size, next, clique) {
                return true;
            }
            clique.pop();
            // remaining candidates above v
            if clique.len() + cand.above(v).count() < size {
                break;
            }
        }
        false
    }
    go(adj, size, Bitset::full(n), &mut clique).then_some(clique)
}

/// Count all cliques of the given size, stopping at `budget`.
/// Returns `(count, finished)`.
pub fn count_cliques(adj: &[Bitset], size: usize, budget: Duration) -> (u64, bool) {
    let start = Instant::now();
    let mut count = 0u64;
    let mut finished = true;
    fn go(
        adj: &[Bitset],
        size: usize,
        depth: usize,
        cand: Bitset,
        count: &mut u64,
        start: Instant,
        budget: Duration,
        finished: &mut bool,
    ) {
        if depth == size {
            *count += 1;
            return;
        }
        if depth + cand.count() < size {
            return;
        }
        for v in cand.iter() {
            if start.elapsed() > budget {
                *finished = false;
                return;
            }
            go(adj, size, depth + 1, cand.and(&adj[v]).above(v), count, start, budget, finished);
        }
    }
    go(
        adj,
        size,
        0,
        Bitset::full(adj.len()),
        &mut count,
        start,
        budget,
        &mut finished,
    );
    (count, finished)
}

/// Sixteen pairwise disjoint conics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KummerClique {
    pub indices: Vec<usize>,
    /// Whether some other conic is disjoint from all of them.
    pub extendable: bool,
}

pub const KUMMER_SIZE: usize = 16;

pub fn find_disjoint_16(graph: &IntersectionGraph) -> Result<KummerClique> {
    let adj = graph.disjointness();
    let indices = find_clique(&adj, KUMMER_SIZE)
        .ok_or_else(|| Error::mismatch("no 16 pairwise disjoint conics exist"))?;
    let extendable = (0..graph.len())
        .filter(|v| !indices.contains(v))
        .any(|v| indices.iter().all(|&u| adj[u].contains(v)));
    Ok(KummerClique {
        indices,
        extendable,
    })
}

/// Write one line per conic: coordinates, pattern, movable pair, codeword mask.
pub fn export_conics<W: std::io::Write>(conics: &[ConicRecord], mut out: W) -> Result<()> {
    for c in conics {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_gram() {
        let g = Generators::standard();
        assert_eq!(g.gram(), VTILDE_GRAM);
    }

    #[test]
    fn pattern_prototypes_classify() {
        let mut c = [1i8; N];
        c[..9].copy_from_slice(&[1, 3, -1, 1, -1, 1, 1, -1, -1]);
        let l = LeechVector::from_coords(c).unwrap();
        assert_eq!(
            classify(&l).unwrap(),
            (Pattern::P1, MovablePair::Unordered { p: 8, q: 9 })
        );
        let mut c = [0i8; N];
        c[..9].copy_from_slice(&[2, 2, 0, 0, 0, 0, 0, 2, -2]);
        c[9..13].copy_from_slice(&[2, 2, -2, -2]);
        let l = LeechVector::from_coords(c).unwrap();
        assert_eq!(
            classify(&l).unwrap(),
            (Pattern::P4, MovablePair::Ordered { p: 8, q: 9 })
        );
        assert!(coordinate_constraints_hold(&l));
    }

    #[test]
    fn off_pattern_vector_is_rejected() {
        let l = Generators::standard().hbar;
        assert!(classify(&l).is_err());
    }

    #[test]
    fn bitset_above() {
        let mut b = Bitset::new(130);
        for i in [0, 5, 63, 64, 65, 127, 129] {
            b.insert(i);
        }
        assert_eq!(b.above(63).iter().collect::<Vec<_>>(), vec![64, 65, 127, 129]);
        assert_eq!(b.above(0).count(), 6);
        assert_eq!(b.above(129).count(), 0);
    }

    #[test]
    fn clique_in_small_graph() {
        // 5-cycle plus a chord 0-2: triangles {0,1,2} only.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)];
        let mut adj = vec![Bitset::new(5); 5];
        for (a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        assert_eq!(find_clique(&adj, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&adj, 4), None);
        assert_eq!(count_cliques(&adj, 2, Duration::from_secs(5)), (6, true));
        assert_eq!(count_cliques(&adj, 3, Duration::from_secs(5)), (1, true));
    }
}

#[cfg(test)]
mod full {
    use super::*;
    use crate::golay::normalize_frame;

    fn conics() -> (GolayCode, Vec<ConicRecord>) {
        let (code, _) = normalize_frame(&GolayCode::build().unwrap()).unwrap();
        let gens = Generators::standard();
        gens.validate(&code).unwrap();
        let c = find_conics_in_code(&code, &gens).unwrap();
        (code, c)
    }

    #[test]
    fn eight_hundred_conics() {
        let (code, c) = conics();
        assert_eq!(c.len(), EXPECTED_CONICS);
        assert_eq!(pattern_split(&c), EXPECTED_SPLIT);
        assert!(c.iter().all(|r| coordinate_constraints_hold(&r.l)));
        let t2 = verify_recount(&code, &c).unwrap();
        assert!(t2.all_agree);
        eprintln!("{:?}", t2.correspondence);
        let g = IntersectionGraph::build(&c).unwrap();
        assert!(g.diagonal_ok());
        eprintln!("{:?}", g.histogram());
        let k = find_disjoint_16(&g).unwrap();
        eprintln!("{:?}", k);
        for (a, &i) in k.indices.iter().enumerate() {
            for &j in &k.indices[a + 1..] {
                assert_eq!(g.product(i, j), 2);
            }
        }
    }
}
