//! Enumerate the 196560 minimal vectors of the Leech lattice by shape and
//! recover a Z-basis from the shape (∓3, ±1²³) vectors.
//!
//!     cargo run --release --example leech_census

use std::collections::HashSet;
use std::time::Instant;

use k3_conics::golay::GolayCode;
use k3_conics::leech::{all_minimal_vectors, census_stats, enumerate_shape31, leech_basis};

fn main() -> k3_conics::Result<()> {
    let code = GolayCode::build()?;
    let t = Instant::now();
    let v = all_minimal_vectors(&code);
    let s = census_stats(&v);
    println!("(∓3,±1²³): {}  (±2⁸,0¹⁶): {}  (±4²,0²²): {}", s.shape31, s.shape20, s.shape40);
    println!("total {} in {:.2?}", s.total, t.elapsed());

    let set: HashSet<[i8; 24]> = v.iter().map(|x| x.coords).collect();
    println!("distinct {}, closed under negation {}", set.len(), v.iter().all(|x| set.contains(&x.negated().coords)));

    let t = Instant::now();
    let basis = leech_basis(&enumerate_shape31(&code))?;
    println!(
        "basis: rank {}, det {}, even {}, in {:.2?}",
        basis.rank(),
        basis.determinant(),
        basis.is_even(),
        t.elapsed()
    );
    Ok(())
}
