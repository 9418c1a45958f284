//! Scan a polarized lattice for exceptional and 2-isotropic vectors, first on
//! a lattice that has one, then on N.
//!
//!     cargo run --release --example bad_vectors

use k3_conics::census::{find_conics_in_code, Generators};
use k3_conics::golay::{normalize_frame, GolayCode};
use k3_conics::leech::{enumerate_shape31, leech_basis};
use k3_conics::ns::{bad_vector_scan, build_n, build_s, planted_control};

fn main() -> k3_conics::Result<()> {
    let control = bad_vector_scan(&planted_control())?;
    println!("control diag(4,−2): exceptional {:?}", control.exceptional);

    let (code, _) = normalize_frame(&GolayCode::build()?)?;
    let gens = Generators::standard();
    let conics = find_conics_in_code(&code, &gens)?;
    let s = build_s(&gens, &leech_basis(&enumerate_shape31(&code))?)?;
    let n = build_n(&s, &conics, 0)?;
    let bad = bad_vector_scan(&n.polarized)?;
    println!("N: {} exceptional, {} 2-isotropic", bad.exceptional.len(), bad.isotropic.len());
    Ok(())
}
