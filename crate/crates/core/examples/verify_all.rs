//! Run every stage and write the JSON report next to the printed summary.
//!
//!     cargo run --release --example verify_all [-- report.json]

use k3_conics::report::{exit_code, verify_all, Options};

fn main() {
    let result = verify_all(Options::default());
    match &result {
        Ok(report) => {
            print!("{}", report.render());
            if let Some(path) = std::env::args().nth(1) {
                std::fs::write(&path, report.to_json()).expect("write report");
                println!("report written to {path}");
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    std::process::exit(exit_code(&result));
}
