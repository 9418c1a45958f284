//! Build the 800×800 intersection graph and find 16 pairwise disjoint conics.
//!
//!     cargo run --release --example kummer_clique [-- --count]

use std::time::{Duration, Instant};

use k3_conics::census::{count_cliques, find_conics_in_code, find_disjoint_16, Generators, IntersectionGraph, KUMMER_SIZE};
use k3_conics::golay::{normalize_frame, GolayCode};

fn main() -> k3_conics::Result<()> {
    let (code, _) = normalize_frame(&GolayCode::build()?)?;
    let conics = find_conics_in_code(&code, &Generators::standard())?;
    let graph = IntersectionGraph::build(&conics)?;
    println!("l_i·l_j over {} pairs:", graph.pairs().count());
    for (k, n) in graph.histogram() {
        println!("  {k:>2}: {n}");
    }

    let clique = find_disjoint_16(&graph)?;
    println!("16 disjoint conics: {:?}", clique.indices);
    println!("extendable to 17: {}", clique.extendable);
    for &i in &clique.indices[..4] {
        println!("  {}", conics[i]);
    }

    if std::env::args().any(|a| a == "--count") {
        let t = Instant::now();
        let (n, complete) = count_cliques(&graph.disjointness(), KUMMER_SIZE, Duration::from_secs(60));
        println!("{n} cliques of size 16 ({}), {:.2?}", if complete { "complete" } else { "budget hit" }, t.elapsed());
    }
    Ok(())
}
