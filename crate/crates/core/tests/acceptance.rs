//! The twelve acceptance criteria, one line each. Runs without the libtest
//! harness so the lines are always printed; exits non-zero if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use k3_conics::census::{
    find_conics_in_code, find_disjoint_16, pattern_split, verify_recount, ConicRecord, Generators, IntersectionGraph,
    EXPECTED_SPLIT, VTILDE_GRAM,
};
use k3_conics::golay::{self, normalize_frame, normalize_frame_with, subsets_of_size, GolayCode, OctadChoice};
use k3_conics::lattice::{rat, short_vectors_up_to, IntegralLattice};
use k3_conics::leech::{self, LeechVector, Shape};
use k3_conics::ns::{self, check_hbar_parity, NLattice, SLattice};
use k3_conics::report::{verify_all, Options};
use k3_conics::Result;

struct Ctx {
    raw: GolayCode,
    code: GolayCode,
    vectors: Vec<LeechVector>,
    conics: Vec<ConicRecord>,
    leech: IntegralLattice,
    s: SLattice,
    n: NLattice,
}

fn ctx() -> Result<Ctx> {
    let raw = GolayCode::build()?;
    let (code, _) = normalize_frame(&raw)?;
    let vectors = leech::all_minimal_vectors(&code);
    let gens = Generators::standard();
    let conics = find_conics_in_code(&code, &gens)?;
    let leech = leech::leech_basis(&leech::enumerate_shape31(&code))?;
    let s = ns::build_s(&gens, &leech)?;
    let n = ns::build_n(&s, &conics, 0)?;
    Ok(Ctx {
        raw,
        code,
        vectors,
        conics,
        leech,
        s,
        n,
    })
}

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(t: Instant, budget: Duration) -> String {
    let e = t.elapsed();
    format!("{:.2}s of {}s", e.as_secs_f64(), budget.as_secs())
}

fn c1_golay() -> Outcome {
    let t = Instant::now();
    let code = GolayCode::build().map_err(|e| e.to_string())?;
    let d = code.weight_distribution();
    let weights = [d[0], d[8], d[12], d[16], d[24]];
    let octads: Vec<u32> = code.octads().map(|o| o.mask()).collect();
    let steiner = subsets_of_size(golay::OMEGA, 5).all(|q| octads.iter().filter(|&&o| o & q == q).count() == 1);
    let budget = Duration::from_secs(5);
    ensure(
        code.len() == 4096 && weights == [1, 759, 2576, 759, 1] && d.iter().sum::<usize>() == 4096 && steiner && t.elapsed() < budget,
        format!("{} words, weights {weights:?}, Steiner {steiner}, {}", code.len(), within(t, budget)),
    )
}

fn c2_frame(c: &Ctx) -> Outcome {
    let phi = golay::mask(&[1, 2, 3, 4, 5]);
    let target = golay::mask(&[1, 2, 4, 5]);
    let n = c
        .code
        .words()
        .iter()
        .filter(|w| w.weight() == 8 && w.mask() & phi == target)
        .count();
    ensure(n == 4, format!("{n} octads meet {{1..5}} in {{1,2,4,5}}"))
}

fn c3_leech(c: &Ctx) -> Outcome {
    let t = Instant::now();
    let vectors = leech::all_minimal_vectors(&c.code);
    let shapes = [Shape::S31, Shape::S20, Shape::S40].map(|s| vectors.iter().filter(|v| v.shape == s).count());
    let set: HashSet<[i8; 24]> = vectors.iter().map(|v| v.coords).collect();
    let negation = vectors.iter().all(|v| set.contains(&v.negated().coords));
    let norms = vectors
        .iter()
        .all(|v| v.coords.iter().map(|&x| x as i32 * x as i32).sum::<i32>() == 32);
    let budget = Duration::from_secs(10);
    ensure(
        shapes == [98304, 97152, 1104] && vectors.len() == 196_560 && set.len() == vectors.len() && negation && norms && t.elapsed() < budget,
        format!(
            "shapes {shapes:?}, total {}, duplicates {}, negation {negation}, norms {norms}, {}",
            vectors.len(),
            vectors.len() - set.len(),
            within(t, budget)
        ),
    )
}

fn c4_gram() -> Outcome {
    let gens = Generators::standard();
    let g = gens.as_array();
    let raw: Vec<Vec<i64>> = g
        .iter()
        .map(|x| g.iter().map(|y| x.coords.iter().zip(&y.coords).map(|(&a, &b)| a as i64 * b as i64).sum::<i64>() / 8).collect())
        .collect();
    let expected: Vec<Vec<i64>> = VTILDE_GRAM.iter().map(|r| r.to_vec()).collect();
    // Cofactor expansion along the first row, recursively.
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * det(&minor)
            })
            .sum()
    }
    let d = det(&raw);
    ensure(raw == expected && d == 160, format!("Gram matches {}, det {d}", raw == expected))
}

fn c5_conics(c: &Ctx) -> Outcome {
    let t = Instant::now();
    let conics = find_conics_in_code(&c.code, &Generators::standard()).map_err(|e| e.to_string())?;
    let split = pattern_split(&conics);
    let t2 = verify_recount(&c.code, &conics).map_err(|e| e.to_string())?;
    let rows: Vec<String> = t2
        .rows
        .iter()
        .map(|r| format!("{:?}×{}={}", r.underlined, r.multiplier, r.combinatorial_total))
        .collect();
    let underlined: Vec<Option<usize>> = t2.rows.iter().map(|r| r.underlined).collect();
    let budget = Duration::from_secs(30);
    ensure(
        conics.len() == 800
            && split == EXPECTED_SPLIT
            && t2.all_agree
            && underlined == [Some(16), Some(16), Some(10), Some(3)]
            && t.elapsed() < budget,
        format!("{} conics, split {split:?}, recount [{}], {}", conics.len(), rows.join(", "), within(t, budget)),
    )
}

fn c6_invariance(c: &Ctx) -> Outcome {
    let gens = Generators::standard();
    let splits: Vec<(usize, [usize; 4])> = (0..4)
        .map(|k| {
            let (code, _) = normalize_frame_with(&c.raw, OctadChoice::Index(k))?;
            let conics = find_conics_in_code(&code, &gens)?;
            Ok((conics.len(), pattern_split(&conics)))
        })
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure(
        splits.iter().all(|&(n, s)| n == 800 && s == EXPECTED_SPLIT),
        format!("per octad choice: {splits:?}"),
    )
}

fn c7_kummer(c: &Ctx) -> Outcome {
    let t = Instant::now();
    let graph = IntersectionGraph::build(&c.conics).map_err(|e| e.to_string())?;
    let clique = find_disjoint_16(&graph).map_err(|e| e.to_string())?;
    let idx = &clique.indices;
    let mut pairs = 0;
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let raw: i64 = c.conics[i].l.coords.iter().zip(&c.conics[j].l.coords).map(|(&x, &y)| x as i64 * y as i64).sum();
            if raw == 16 {
                pairs += 1;
            }
        }
    }
    let budget = Duration::from_secs(60);
    ensure(
        idx.len() == 16 && pairs == 120 && t.elapsed() < budget,
        format!("clique {idx:?}, {pairs}/120 pairs at lᵢ·lⱼ = 2, {}", within(t, budget)),
    )
}

fn c8_parity(c: &Ctx) -> Outcome {
    let hbar = check_hbar_parity(&c.s.s, &c.s.hbar);
    let p = &c.n.polarized;
    let h = p.check_h_parity();
    let bad = p.bad_classes().len();
    ensure(
        hbar && h && bad == 0 && p.classes.len() == 800,
        format!("ħ ∈ 2S∨ {hbar}, h ∈ 2N∨ {h}, {} classes with c² = −2, c·h = 2", p.classes.len() - bad),
    )
}

fn c9_discriminants(c: &Ctx) -> Outcome {
    let d = ns::verify_discriminants(&c.s.vtilde, &c.s.k, &c.n.polarized).map_err(|e| e.to_string())?;
    let names: Vec<String> = d
        .checks
        .iter()
        .map(|k| format!("{} {}", k.name, if k.verified { "ok" } else { "FAILED" }))
        .collect();
    ensure(
        d.vtilde_order == 160 && d.n_order == 160 && d.checks.len() == 5 && d.all_pass(),
        format!("|discr Ṽ| = {}, |discr N| = {}; {}", d.vtilde_order, d.n_order, names.join("; ")),
    )
}

fn c10_bad_vectors(c: &Ctx) -> Outcome {
    let bad = ns::bad_vector_scan(&c.n.polarized).map_err(|e| e.to_string())?;
    let control = ns::bad_vector_scan(&ns::planted_control()).map_err(|e| e.to_string())?;
    ensure(
        bad.exceptional.is_empty() && bad.isotropic.is_empty() && !control.exceptional.is_empty(),
        format!(
            "exceptional {}, 2-isotropic {}, control finds {}",
            bad.exceptional.len(),
            bad.isotropic.len(),
            control.exceptional.len()
        ),
    )
}

fn c11_heavy(c: &Ctx) -> Outcome {
    let t = Instant::now();
    let found = short_vectors_up_to(c.leech.gram(), &rat(4, 1), None).map_err(|e| e.to_string())?;
    let four = found.iter().filter(|(_, n)| *n == rat(4, 1)).count();
    let two = found.iter().filter(|(_, n)| *n == rat(2, 1)).count();
    let budget = Duration::from_secs(30 * 60);
    ensure(
        four == 196_560 && two == 0 && found.len() == four && c.vectors.len() == four && t.elapsed() < budget,
        format!("norm 4: {four}, norm 2: {two}, {}", within(t, budget)),
    )
}

fn c12_determinism() -> Outcome {
    let run = |threads: usize| -> std::result::Result<String, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let report = pool.install(|| verify_all(Options::default())).map_err(|e| e.to_string())?;
        if !report.overall {
            return Err(format!("verify-all failed with {threads} threads"));
        }
        Ok(serde_json::to_string_pretty(&report.without_timing()).expect("serializes"))
    };
    let one = run(1)?;
    let four = run(4)?;
    ensure(one == four, format!("{} bytes without timing, identical for 1 and 4 threads: {}", one.len(), one == four))
}

fn main() {
    let c = match ctx() {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL  setup: {e}");
            std::process::exit(1);
        }
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 Golay census", Box::new(c1_golay)),
        ("2 frame octads", Box::new(|| c2_frame(&c))),
        ("3 Leech census", Box::new(|| c3_leech(&c))),
        ("4 generator Gram", Box::new(c4_gram)),
        ("5 conic census", Box::new(|| c5_conics(&c))),
        ("6 frame invariance", Box::new(|| c6_invariance(&c))),
        ("7 Kummer property", Box::new(|| c7_kummer(&c))),
        ("8 parity", Box::new(|| c8_parity(&c))),
        ("9 discriminants", Box::new(|| c9_discriminants(&c))),
        ("10 bad vectors", Box::new(|| c10_bad_vectors(&c))),
        ("11 heavy cross-check", Box::new(|| c11_heavy(&c))),
        ("12 determinism", Box::new(c12_determinism)),
    ];
    let mut failed = 0;
    println!();
    for (name, f) in &criteria {
        match f() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("\n{} of {} acceptance criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
