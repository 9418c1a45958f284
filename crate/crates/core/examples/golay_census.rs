//! Build the extended Golay code, print its weight distribution, check the
//! Steiner property and show the normalized frame.
//!
//!     cargo run --release --example golay_census

use k3_conics::golay::{self, frame_candidates, normalize_frame, steiner_check, GolayCode};

fn main() -> k3_conics::Result<()> {
    let code = GolayCode::build()?;
    code.self_test()?;
    println!("{} codewords, minimum weight {}", code.len(), code.min_nonzero_weight());
    for (w, n) in code.weight_distribution().iter().enumerate().filter(|(_, &n)| n > 0) {
        println!("  weight {w:>2}: {n}");
    }
    println!("every 5-subset in exactly one octad: {}", steiner_check(&code));

    let (code, frame) = normalize_frame(&code)?;
    let show = |m: u32| golay::positions(m).map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    println!("frame octad {{{}}}", show(frame.octad.mask()));
    println!("movable points {{{}}}", show(frame.movable()));
    for o in frame_candidates(&code) {
        println!("  candidate {{{}}}", show(o.mask()));
    }
    Ok(())
}
