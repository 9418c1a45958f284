//! Stage runners and the versioned JSON verification report.
//!
//! A [`Pipeline`] builds the objects lazily (code, census, conics, lattices)
//! and each stage turns them into named checks of the form
//! `expected / computed / pass`. Everything except the `elapsed_ms` fields and
//! the `runtime` block is independent of timing and thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::census::{
    self, count_cliques, find_conics_in_code, find_disjoint_16, pattern_split, verify_recount, ConicRecord,
    Generators, IntersectionGraph, EXPECTED_CONICS, EXPECTED_SPLIT, KUMMER_SIZE, VTILDE_GRAM,
};
use crate::error::{Error, Result};
use crate::golay::{self, normalize_frame, normalize_frame_with, Codeword, Frame, GolayCode, OctadChoice};
use crate::lattice::{rat, short_vectors_up_to, snf, IntMatrix, IntegralLattice};
use crate::leech::{self, LeechVector};
use crate::ns::{self, NLattice, SLattice};

pub const SCHEMA_VERSION: u32 = 1;

const SAMPLE_SEED: u64 = 0x4b33_636f_6e69_6373;
const LINEARITY_SAMPLES: usize = 1000;
const INTEGRALITY_SAMPLES: usize = 10_000;

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A value stated for the construction being verified.
    Published,
    /// A value computed by an independent route.
    Derived,
    /// A definitional consequence or a planted control.
    Structural,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueMode {
    #[default]
    First,
    All,
}

impl FromStr for CliqueMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "first" => Ok(CliqueMode::First),
            "all" => Ok(CliqueMode::All),
            _ => Err(format!("clique mode must be first or all; got {s:?}")),
        }
    }
}

impl fmt::Display for CliqueMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueMode::First => "first",
            CliqueMode::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub octad_choice: OctadChoice,
    pub steiner: bool,
    pub heavy: bool,
    pub clique: CliqueMode,
    pub clique_budget: Duration,
    /// Rerun the conic census for all four admissible octads.
    pub frame_invariance: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            octad_choice: OctadChoice::Lex,
            steiner: true,
            heavy: true,
            clique: CliqueMode::First,
            clique_budget: Duration::from_secs(30),
            frame_invariance: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub source: Source,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub name: String,
    pub pass: bool,
    pub elapsed_ms: f64,
    pub checks: Vec<Check>,
    pub observations: Map<String, Value>,
}

impl Stage {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Environment {
    pub version: String,
    pub octad_choice: String,
    pub steiner: bool,
    pub heavy: bool,
    pub clique: CliqueMode,
}

/// Fields that legitimately vary between runs.
#[derive(Clone, Debug, Serialize)]
pub struct Runtime {
    pub threads: usize,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub environment: Environment,
    pub runtime: Runtime,
    pub stages: Vec<Stage>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report with `runtime` and every `elapsed_ms` removed.
    pub fn without_timing(&self) -> Value {
        strip_timing(serde_json::to_value(self).expect("report serializes"))
    }

    /// Human-readable summary, one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for stage in &self.stages {
            out += &format!("== {} [{}]\n", stage.name, if stage.pass { "pass" } else { "FAIL" });
            for c in &stage.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                if c.pass {
                    out += &format!("  {mark} {}: {}\n", c.name, c.computed);
                } else {
                    out += &format!("  {mark} {}: {} (expected {})\n", c.name, c.computed, c.expected);
                }
            }
        }
        out += &format!("overall: {}\n", if self.overall { "pass" } else { "FAIL" });
        out
    }
}

pub fn strip_timing(v: Value) -> Value {
    match v {
        Value::Object(m) => Value::Object(
            m.into_iter()
                .filter(|(k, _)| k != "elapsed_ms" && k != "runtime")
                .map(|(k, v)| (k, strip_timing(v)))
                .collect(),
        ),
        Value::Array(a) => Value::Array(a.into_iter().map(strip_timing).collect()),
        other => other,
    }
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn json<T: Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("value serializes")
}

struct StageBuilder {
    name: String,
    start: Instant,
    checks: Vec<Check>,
    observations: Map<String, Value>,
}

impl StageBuilder {
    fn new(name: &str) -> Self {
        StageBuilder {
            name: name.to_string(),
            start: Instant::now(),
            checks: Vec::new(),
            observations: Map::new(),
        }
    }

    /// Run `f`, record its value against `expected`, and return it.
    fn check<T, F>(&mut self, name: &str, source: Source, expected: T, f: F) -> Result<T>
    where
        T: Serialize + PartialEq,
        F: FnOnce() -> Result<T>,
    {
        let t = Instant::now();
        let computed = f()?;
        self.checks.push(Check {
            name: name.to_string(),
            expected: json(&expected),
            pass: computed == expected,
            computed: json(&computed),
            source,
            elapsed_ms: ms(t.elapsed()),
        });
        Ok(computed)
    }

    fn observe<T: Serialize>(&mut self, key: &str, value: T) {
        self.observations.insert(key.to_string(), json(value));
    }

    fn finish(self) -> Stage {
        Stage {
            pass: self.checks.iter().all(|c| c.pass),
            name: self.name,
            elapsed_ms: ms(self.start.elapsed()),
            checks: self.checks,
            observations: self.observations,
        }
    }
}

/// Lazily built objects shared by the stages.
pub struct Pipeline {
    opts: Options,
    raw: Option<GolayCode>,
    code: Option<(GolayCode, Frame)>,
    vectors: Option<Vec<LeechVector>>,
    leech: Option<IntegralLattice>,
    conics: Option<Vec<ConicRecord>>,
    graph: Option<IntersectionGraph>,
    s: Option<SLattice>,
    n: Option<NLattice>,
}

impl Pipeline {
    pub fn new(opts: Options) -> Self {
        Pipeline {
            opts,
            raw: None,
            code: None,
            vectors: None,
            leech: None,
            conics: None,
            graph: None,
            s: None,
            n: None,
        }
    }

    pub fn options(&self) -> &Options {
        &self.opts
    }

    pub fn raw_code(&mut self) -> Result<&GolayCode> {
        if self.raw.is_none() {
            self.raw = Some(GolayCode::build()?);
        }
        Ok(self.raw.as_ref().expect("just built"))
    }

    /// The code relabeled to the frame selected by the options.
    pub fn code(&mut self) -> Result<&(GolayCode, Frame)> {
        if self.code.is_none() {
            let choice = self.opts.octad_choice;
            let framed = normalize_frame_with(self.raw_code()?, choice)?;
            self.code = Some(framed);
        }
        Ok(self.code.as_ref().expect("just built"))
    }

    pub fn vectors(&mut self) -> Result<&[LeechVector]> {
        if self.vectors.is_none() {
            let v = leech::all_minimal_vectors(&self.code()?.0);
            self.vectors = Some(v);
        }
        Ok(self.vectors.as_deref().expect("just built"))
    }

    pub fn leech(&mut self) -> Result<&IntegralLattice> {
        if self.leech.is_none() {
            let b = leech::leech_basis(&leech::enumerate_shape31(&self.code()?.0))?;
            self.leech = Some(b);
        }
        Ok(self.leech.as_ref().expect("just built"))
    }

    pub fn conics(&mut self) -> Result<&[ConicRecord]> {
        if self.conics.is_none() {
            let gens = Generators::standard();
            let code = &self.code()?.0;
            gens.validate(code)?;
            let c = find_conics_in_code(code, &gens)?;
            self.conics = Some(c);
        }
        Ok(self.conics.as_deref().expect("just built"))
    }

    pub fn graph(&mut self) -> Result<&IntersectionGraph> {
        if self.graph.is_none() {
            let g = IntersectionGraph::build(self.conics()?)?;
            self.graph = Some(g);
        }
        Ok(self.graph.as_ref().expect("just built"))
    }

    pub fn s_lattice(&mut self) -> Result<&SLattice> {
        if self.s.is_none() {
            let leech = self.leech()?.clone();
            self.s = Some(ns::build_s(&Generators::standard(), &leech)?);
        }
        Ok(self.s.as_ref().expect("just built"))
    }

    pub fn n_lattice(&mut self) -> Result<&NLattice> {
        if self.n.is_none() {
            self.conics()?;
            self.s_lattice()?;
            let n = ns::build_n(self.s.as_ref().expect("built"), self.conics.as_ref().expect("built"), 0)?;
            self.n = Some(n);
        }
        Ok(self.n.as_ref().expect("just built"))
    }

    pub fn golay_stage(&mut self) -> Result<Stage> {
        let mut st = StageBuilder::new("golay");
        let steiner = self.opts.steiner;
        let raw = self.raw_code()?.clone();

        st.check("codewords", Source::Published, 4096, || Ok(raw.len()))?;
        let expected: Vec<(u32, usize)> = vec![(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];
        st.check("weight distribution", Source::Published, expected, || {
            Ok(raw
                .weight_distribution()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(w, &c)| (w as u32, c))
                .collect())
        })?;
        st.check("minimum nonzero weight", Source::Published, 8, || Ok(raw.min_nonzero_weight()))?;
        st.check("contains ∅ and Ω", Source::Published, true, || {
            Ok(raw.is_codeword(0) && raw.is_codeword(golay::OMEGA))
        })?;
        st.check("complement closed", Source::Derived, true, || {
            Ok(raw.words().iter().all(|w| raw.contains(w.complement())))
        })?;
        st.check("linearity on sampled pairs", Source::Derived, LINEARITY_SAMPLES, || {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let words = raw.words();
            Ok((0..LINEARITY_SAMPLES)
                .filter(|_| {
                    let a = words[rng.gen_range(0..words.len())];
                    let b = words[rng.gen_range(0..words.len())];
                    raw.contains(a.sym_diff(b))
                })
                .count())
        })?;
        st.check("intersection patterns with {1..5} partition the code", Source::Derived, 4096, || {
            let window = golay::mask(&[1, 2, 3, 4, 5]);
            Ok(golay::subsets_of_size(window, 0)
                .chain((1..=5).flat_map(|k| golay::subsets_of_size(window, k)))
                .map(|p| raw.codewords_meeting(window, p, None).len())
                .sum::<usize>())
        })?;
        if steiner {
            st.check("Steiner S(5,8,24) over 42504 quintuples", Source::Derived, true, || {
                Ok(golay::steiner_check(&raw))
            })?;
        }

        let (code, frame) = self.code()?.clone();
        st.check("admissible frame octads", Source::Published, 4, || Ok(frame.candidates.len()))?;
        st.check("κ = {1,2,4,5,6,7,8,9} is a codeword", Source::Published, true, || {
            Ok(code.contains(Codeword::from_positions(&[1, 2, 4, 5, 6, 7, 8, 9])))
        })?;
        st.check("normalization is idempotent", Source::Structural, true, || {
            let (again, f2) = normalize_frame(&code)?;
            Ok(f2 == frame && (self.opts.octad_choice != OctadChoice::Lex || again == code))
        })?;
        st.observe("octad_choice", self.opts.octad_choice.to_string());
        st.observe("frame_octad", frame.octad.to_string());
        st.observe(
            "frame_candidates",
            frame.candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        );
        Ok(st.finish())
    }

    pub fn leech_stage(&mut self) -> Result<Stage> {
        let mut st = StageBuilder::new("leech");
        let vectors = self.vectors()?.to_vec();
        let stats = leech::census_stats(&vectors);
        st.check("shape counts (31, 20, 40)", Source::Published, [98304, 97152, 1104], || {
            Ok([stats.shape31, stats.shape20, stats.shape40])
        })?;
        st.check("minimal vectors", Source::Published, leech::MINIMAL_COUNT, || Ok(stats.total))?;
        st.check("duplicates", Source::Derived, 0, || Ok(stats.duplicates))?;
        st.check("closed under negation", Source::Derived, true, || Ok(stats.negation_closed))?;
        st.check("all raw norms 32", Source::Derived, true, || Ok(stats.all_raw_norm_32))?;
        st.check("sampled raw products divisible by 8", Source::Derived, INTEGRALITY_SAMPLES, || {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            Ok((0..INTEGRALITY_SAMPLES)
                .filter(|_| {
                    let x = &vectors[rng.gen_range(0..vectors.len())];
                    let y = &vectors[rng.gen_range(0..vectors.len())];
                    x.inner(y).raw % 8 == 0
                })
                .count())
        })?;

        let leech = self.leech()?.clone();
        st.check("basis rank", Source::Published, 24, || Ok(leech.rank()))?;
        st.check("basis Gram determinant", Source::Published, "1".to_string(), || {
            Ok(leech.determinant().to_string())
        })?;
        st.check("basis Gram even", Source::Published, true, || Ok(leech.is_even()))?;
        if self.opts.heavy {
            st.check("vectors of norm ≤ 4 by enumeration", Source::Derived, leech::MINIMAL_COUNT, || {
                Ok(short_vectors_up_to(leech.gram(), &rat(4, 1), None)?.len())
            })?;
            st.check("vectors of norm 2 by enumeration", Source::Published, 0, || {
                Ok(short_vectors_up_to(leech.gram(), &rat(2, 1), None)?.len())
            })?;
        }
        Ok(st.finish())
    }

    pub fn conics_stage(&mut self) -> Result<Stage> {
        let mut st = StageBuilder::new("conics");
        let gens = Generators::standard();
        let code = self.code()?.0.clone();

        st.check("generator Gram", Source::Published, VTILDE_GRAM, || Ok(gens.gram()))?;
        st.check("u₃ on the frame octad", Source::Published, true, || Ok(gens.validate(&code).is_ok()))?;
        let gram = IntMatrix::from_i64(5, 5, &VTILDE_GRAM.concat());
        st.check("det Gram Ṽ", Source::Derived, "160".to_string(), || {
            Ok(gram.determinant().to_string())
        })?;
        st.check("invariant factors of Gram Ṽ", Source::Derived, ["1", "1", "2", "2", "40"].map(String::from).to_vec(), || {
            Ok(snf(&gram).divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>())
        })?;

        let conics = self.conics()?.to_vec();
        st.check("conics", Source::Published, EXPECTED_CONICS, || Ok(conics.len()))?;
        st.check("pattern split (#1, #2, #3, #4)", Source::Published, EXPECTED_SPLIT, || {
            Ok(pattern_split(&conics))
        })?;
        st.check("shape-40 conics", Source::Published, 0, || {
            Ok(conics.iter().filter(|c| c.l.shape == leech::Shape::S40).count())
        })?;
        st.check("conic conditions re-verified", Source::Structural, EXPECTED_CONICS, || {
            Ok(conics
                .iter()
                .filter(|c| gens.is_conic(&c.l) && c.l.raw_norm() == leech::MIN_RAW_NORM)
                .count())
        })?;
        st.check("coordinate constraints l₁+l₂=4, l₂+l₃=2, l₄=−l₃, l₅=l₃", Source::Derived, EXPECTED_CONICS, || {
            Ok(conics
                .iter()
                .filter(|c| census::coordinate_constraints_hold(&c.l))
                .count())
        })?;

        let t2 = verify_recount(&code, &conics)?;
        for row in &t2.rows {
            st.check(
                &format!("codeword recount row {}: codewords per pair", row.row),
                Source::Published,
                Some(row.expected_underlined),
                || Ok(row.underlined),
            )?;
            st.check(
                &format!("codeword recount row {}: total", row.row),
                Source::Published,
                row.filtered_total,
                || Ok(row.combinatorial_total),
            )?;
        }
        st.observe("recount", &t2.rows);
        st.observe(
            "pattern_to_row",
            t2.correspondence
                .iter()
                .map(|(p, r)| (p.to_string(), *r))
                .collect::<BTreeMap<_, _>>(),
        );

        if self.opts.frame_invariance {
            let raw = self.raw_code()?.clone();
            st.check("pattern split for each admissible octad", Source::Derived, vec![EXPECTED_SPLIT; 4], || {
                (0..4)
                    .map(|k| {
                        let (c, _) = normalize_frame_with(&raw, OctadChoice::Index(k))?;
                        Ok(pattern_split(&find_conics_in_code(&c, &gens)?))
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
        }

        let graph = self.graph()?.clone();
        st.check("lᵢ·lᵢ = 4", Source::Structural, true, || Ok(graph.diagonal_ok()))?;
        let hist = graph.histogram();
        st.check("pairs with lᵢ·lⱼ > 2", Source::Derived, 0, || {
            Ok(hist.range(3..).map(|(_, &n)| n).sum::<usize>())
        })?;
        st.check("pairs counted", Source::Structural, 319_600, || Ok(hist.values().sum::<usize>()))?;
        st.observe("intersection_histogram", &hist);

        let clique = find_disjoint_16(&graph)?;
        st.check("disjoint conics found", Source::Published, KUMMER_SIZE, || Ok(clique.indices.len()))?;
        st.check("pairs with lᵢ·lⱼ = 2 inside the clique", Source::Published, 120, || {
            let idx = &clique.indices;
            Ok(idx
                .iter()
                .enumerate()
                .flat_map(|(a, &i)| idx[a + 1..].iter().map(move |&j| (i, j)))
                .filter(|&(i, j)| graph.product(i, j) == 2)
                .count())
        })?;
        st.observe("clique_indices", &clique.indices);
        st.observe(
            "clique_conics",
            clique.indices.iter().map(|&i| conics[i].to_string()).collect::<Vec<_>>(),
        );
        st.observe("clique_extendable", clique.extendable);
        if self.opts.clique == CliqueMode::All {
            let (count, finished) = count_cliques(&graph.disjointness(), KUMMER_SIZE, self.opts.clique_budget);
            let mut m = Map::new();
            m.insert("finished".into(), json(finished));
            m.insert("count".into(), if finished { json(count) } else { Value::Null });
            m.insert("count_lower_bound".into(), json(count));
            st.observe("clique_count", m);
        }
        Ok(st.finish())
    }

    pub fn ns_stage(&mut self) -> Result<Stage> {
        let mut st = StageBuilder::new("ns");
        let leech = self.leech()?.clone();
        let conics = self.conics()?.to_vec();
        let graph = self.graph()?.clone();
        let s = self.s_lattice()?.clone();

        st.check("rank S", Source::Published, 20, || Ok(s.s.rank()))?;
        st.check("ħ ∈ S", Source::Published, true, || {
            Ok(s.contains(&Generators::standard().hbar))
        })?;
        st.check("conics in S", Source::Published, EXPECTED_CONICS, || Ok(s.conics_in_s(&conics)))?;
        st.check("roots of S", Source::Published, 0, || Ok(s.roots()?.len()))?;
        st.check("ħ ∈ 2S∨", Source::Published, true, || Ok(ns::check_hbar_parity(&s.s, &s.hbar)))?;
        st.check("rank ħ⊥ in S", Source::Structural, 19, || Ok(s.k.rank()))?;
        st.check("ħ⊥ in S equals Ṽ⊥ in Λ", Source::Derived, true, || s.k_is_vtilde_perp(&leech))?;
        st.check("|det Ṽ⊥|", Source::Derived, "160".to_string(), || {
            Ok(abs(s.k.determinant()).to_string())
        })?;

        let n = self.n_lattice()?.clone();
        let p = &n.polarized;
        st.check("|det((−Ṽ⊥) ⊕ Zh)|", Source::Derived, "640".to_string(), || {
            Ok(abs(n.m.determinant()).to_string())
        })?;
        st.check("[N : (−Ṽ⊥) ⊕ Zh]", Source::Published, Some("2".to_string()), || {
            Ok(n.index().map(|i| i.to_string()))
        })?;
        st.check("|det N|", Source::Derived, "160".to_string(), || Ok(abs(n.determinant()).to_string()))?;
        st.check("N even", Source::Published, true, || Ok(p.lattice.is_even()))?;
        st.check("rank N", Source::Published, 20, || Ok(p.rank()))?;
        st.check("signature N", Source::Published, (1, 19), || Ok(p.signature()))?;
        st.check("h²", Source::Published, "4".to_string(), || Ok(p.h_norm().to_string()))?;
        st.check("h ∈ 2N∨", Source::Published, true, || Ok(p.check_h_parity()))?;
        st.check("classes with c² = −2 and c·h = 2", Source::Published, EXPECTED_CONICS, || {
            Ok(p.classes.len() - p.bad_classes().len())
        })?;
        st.check("pairs with cᵢ·cⱼ ≠ 2 − lᵢ·lⱼ", Source::Derived, 0, || {
            let prods = p.class_products()?;
            Ok((0..conics.len())
                .flat_map(|i| (0..conics.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| prods[i][j] != graph.class_product(i, j))
                .count())
        })?;
        st.check("N independent of the glue conic", Source::Derived, true, || {
            let others: Vec<usize> = ns::pattern_representatives(&conics)
                .into_iter()
                .map(|(_, i)| i)
                .chain([conics.len() - 1])
                .filter(|&i| i != n.glue_conic)
                .collect();
            ns::glue_independent(&s, &conics, &n, &others)
        })?;

        let d = ns::verify_discriminants(&s.vtilde, &s.k, p)?;
        st.check("|discr Ṽ|", Source::Published, ns::DISCRIMINANT_ORDER, || Ok(d.vtilde_order))?;
        st.check("|discr N|", Source::Published, ns::DISCRIMINANT_ORDER, || Ok(d.n_order))?;
        st.check("|discr T|", Source::Published, ns::DISCRIMINANT_ORDER, || Ok(d.t_order))?;
        for c in &d.checks {
            st.check(&c.name, Source::Published, true, || Ok(c.verified))?;
        }
        st.observe(
            "discriminant_witnesses",
            d.checks
                .iter()
                .map(|c| (c.name.clone(), json(&c.witness)))
                .collect::<Map<_, _>>(),
        );

        let bad = ns::bad_vector_scan(p)?;
        st.check("exceptional classes e² = −2, e·h = 0", Source::Published, 0, || Ok(bad.exceptional.len()))?;
        st.check("2-isotropic classes e² = 0, e·h = 2", Source::Published, 0, || Ok(bad.isotropic.len()))?;
        st.check("planted control detected", Source::Structural, true, || {
            Ok(!ns::bad_vector_scan(&ns::planted_control())?.exceptional.is_empty())
        })?;

        st.observe("glue_conic", conics[n.glue_conic].to_string());
        Ok(st.finish())
    }

    /// Run the named stages in order.
    pub fn run(&mut self, stages: &[StageName]) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut out = Vec::new();
        for s in stages {
            out.push(match s {
                StageName::Golay => self.golay_stage()?,
                StageName::Leech => self.leech_stage()?,
                StageName::Conics => self.conics_stage()?,
                StageName::Ns => self.ns_stage()?,
            });
        }
        Ok(VerificationReport {
            schema_version: SCHEMA_VERSION,
            environment: Environment {
                version: env!("CARGO_PKG_VERSION").to_string(),
                octad_choice: self.opts.octad_choice.to_string(),
                steiner: self.opts.steiner,
                heavy: self.opts.heavy,
                clique: self.opts.clique,
            },
            runtime: Runtime {
                threads: rayon::current_num_threads(),
                elapsed_ms: ms(start.elapsed()),
            },
            overall: out.iter().all(|s| s.pass),
            stages: out,
        })
    }
}

fn abs(x: BigRational) -> BigRational {
    if x < BigRational::from_integer(BigInt::from(0)) {
        -x
    } else {
        x
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StageName {
    Golay,
    Leech,
    Conics,
    Ns,
}

impl StageName {
    pub const ALL: [StageName; 4] = [StageName::Golay, StageName::Leech, StageName::Conics, StageName::Ns];
}

/// Convenience: every stage with the given options.
pub fn verify_all(opts: Options) -> Result<VerificationReport> {
    Pipeline::new(opts).run(&StageName::ALL)
}

/// Process exit code for a finished run or a library error.
pub fn exit_code(result: &Result<VerificationReport>) -> i32 {
    match result {
        Ok(r) if r.overall => 0,
        Ok(_) | Err(Error::Mismatch(_)) => 1,
        Err(_) => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_timing_removes_only_timing() {
        let v = serde_json::json!({
            "a": 1,
            "runtime": {"threads": 4},
            "stages": [{"elapsed_ms": 3.5, "name": "x"}]
        });
        assert_eq!(strip_timing(v), serde_json::json!({"a": 1, "stages": [{"name": "x"}]}));
    }

    #[test]
    fn clique_mode_parses() {
        assert_eq!("all".parse::<CliqueMode>(), Ok(CliqueMode::All));
        assert!("some".parse::<CliqueMode>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Err(Error::Mismatch("x".into()))), 1);
        assert_eq!(exit_code(&Err(Error::Construction("x".into()))), 3);
    }

    #[test]
    fn golay_stage_passes() {
        let mut p = Pipeline::new(Options::default());
        let s = p.golay_stage().unwrap();
        assert!(s.pass, "{:#?}", s.checks);
        assert_eq!(s.check("admissible frame octads").unwrap().computed, serde_json::json!(4));
    }
}
