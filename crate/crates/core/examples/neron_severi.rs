//! Build S and N from the conic census and print the lattice checks.
//!
//!     cargo run --release --example neron_severi

use std::time::Instant;

use k3_conics::census::{find_conics_in_code, Generators};
use k3_conics::golay::{normalize_frame, GolayCode};
use k3_conics::leech::{enumerate_shape31, leech_basis};
use k3_conics::ns::{
    bad_vector_scan, build_n, build_s, check_hbar_parity, glue_independent, pattern_representatives,
    verify_discriminants,
};

fn main() -> k3_conics::Result<()> {
    let t = Instant::now();
    let (code, _) = normalize_frame(&GolayCode::build()?)?;
    let gens = Generators::standard();
    gens.validate(&code)?;
    let conics = find_conics_in_code(&code, &gens)?;
    let leech = leech_basis(&enumerate_shape31(&code))?;
    println!("census and Leech basis: {:.2?}", t.elapsed());

    let t = Instant::now();
    let s = build_s(&gens, &leech)?;
    println!("rank S = {}, rank K = {}, det K = {}", s.s.rank(), s.k.rank(), s.k.determinant());
    println!("conics in S: {}", s.conics_in_s(&conics));
    println!("K = Ṽ⊥ in Λ: {}", s.k_is_vtilde_perp(&leech)?);
    println!("ħ ∈ 2S∨: {}", check_hbar_parity(&s.s, &s.hbar));
    println!("roots of S: {}", s.roots()?.len());
    println!("S built in {:.2?}", t.elapsed());

    let t = Instant::now();
    let n = build_n(&s, &conics, 0)?;
    let p = &n.polarized;
    println!(
        "det M = {}, det N = {}, index {:?}, even {}, signature {:?}",
        n.m.determinant(),
        n.determinant(),
        n.index().map(|i| i.to_string()),
        p.lattice.is_even(),
        p.signature()
    );
    println!("h² = {}, h ∈ 2N∨: {}", p.h_norm(), p.check_h_parity());
    println!("classes off c² = −2, c·h = 2: {}", p.bad_classes().len());
    let others: Vec<usize> = pattern_representatives(&conics).into_iter().map(|(_, i)| i).collect();
    println!("glue independent of the conic: {}", glue_independent(&s, &conics, &n, &others)?);
    println!("N built in {:.2?}", t.elapsed());

    let t = Instant::now();
    let d = verify_discriminants(&s.vtilde, &s.k, p)?;
    for c in &d.checks {
        println!("{:<40} {}", c.name, if c.verified { "ok" } else { "FAILED" });
    }
    println!("discriminants in {:.2?}", t.elapsed());

    let t = Instant::now();
    let bad = bad_vector_scan(p)?;
    println!(
        "exceptional: {}, 2-isotropic: {} ({:.2?})",
        bad.exceptional.len(),
        bad.isotropic.len(),
        t.elapsed()
    );
    Ok(())
}
