//! Discriminant forms of Ṽ, its complement K and the polarized lattice N,
//! with explicit isometries between them.
//!
//!     cargo run --release --example discriminant_forms

use k3_conics::census::{find_conics_in_code, Generators};
use k3_conics::golay::{normalize_frame, GolayCode};
use k3_conics::lattice::discriminant_form;
use k3_conics::leech::{enumerate_shape31, leech_basis};
use k3_conics::ns::{build_n, build_s, t_lattice, verify_discriminants};

fn main() -> k3_conics::Result<()> {
    let (code, _) = normalize_frame(&GolayCode::build()?)?;
    let gens = Generators::standard();
    let conics = find_conics_in_code(&code, &gens)?;
    let s = build_s(&gens, &leech_basis(&enumerate_shape31(&code))?)?;
    let n = build_n(&s, &conics, 0)?;

    for (name, lat) in [("Ṽ", &s.vtilde), ("K", &s.k), ("N", &n.polarized.lattice), ("T", &t_lattice())] {
        let f = discriminant_form(lat)?;
        println!("discr {name}: order {}, {f}", f.order());
    }

    let report = verify_discriminants(&s.vtilde, &s.k, &n.polarized)?;
    for c in &report.checks {
        println!("{}: {}", c.name, if c.verified { "isometric" } else { "NOT isometric" });
    }
    Ok(())
}
