//! Filter the Leech minimal vectors down to the 800 conics, split them by
//! coordinate pattern and recount each pattern from codewords.
//!
//!     cargo run --release --example conic_census

use k3_conics::census::{find_conics_in_code, pattern_split, verify_recount, Generators, Pattern};
use k3_conics::golay::{normalize_frame, GolayCode};

fn main() -> k3_conics::Result<()> {
    let (code, _) = normalize_frame(&GolayCode::build()?)?;
    let gens = Generators::standard();
    gens.validate(&code)?;
    println!("generator Gram:");
    for row in gens.gram() {
        println!("  {row:?}");
    }

    let conics = find_conics_in_code(&code, &gens)?;
    println!("{} conics", conics.len());
    for (p, n) in Pattern::ALL.iter().zip(pattern_split(&conics)) {
        println!("  {p}: {n}");
    }
    println!("first three:");
    for c in &conics[..3] {
        println!("  {c}");
    }

    let t2 = verify_recount(&code, &conics)?;
    for r in &t2.rows {
        println!(
            "row {}: {:?} codewords × {} = {} (filter: {}, {})",
            r.row,
            r.underlined,
            r.multiplier,
            r.combinatorial_total,
            r.filtered_total,
            if r.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    Ok(())
}
