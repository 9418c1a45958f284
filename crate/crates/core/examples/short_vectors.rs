//! Fincke–Pohst enumeration on the Leech Gram matrix and on a shifted coset.
//!
//!     cargo run --release --example short_vectors

use std::time::Instant;

use k3_conics::golay::GolayCode;
use k3_conics::lattice::{rat, short_vectors_up_to, IntMatrix, IntegralLattice};
use k3_conics::leech::{enumerate_shape31, leech_basis};

fn main() -> k3_conics::Result<()> {
    let a2 = IntegralLattice::from_int_gram(&IntMatrix::from_i64(2, 2, &[2, -1, -1, 2]));
    let roots = short_vectors_up_to(a2.gram(), &rat(2, 1), None)?;
    println!("A2 roots: {}", roots.len());
    let half = [rat(1, 2), rat(0, 1)];
    let coset = short_vectors_up_to(a2.gram(), &rat(2, 1), Some(&half))?;
    println!("A2 + (½,0), norm ≤ 2:");
    for (x, n) in &coset {
        println!("  {x:?}  {n}");
    }

    let leech = leech_basis(&enumerate_shape31(&GolayCode::build()?))?;
    let t = Instant::now();
    let found = short_vectors_up_to(leech.gram(), &rat(4, 1), None)?;
    let two = found.iter().filter(|(_, n)| *n == rat(2, 1)).count();
    println!("Leech: {} vectors of norm ≤ 4, {two} of norm 2, {:.2?}", found.len(), t.elapsed());
    Ok(())
}
