use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use k3_conics::census::export_conics;
use k3_conics::golay::OctadChoice;
use k3_conics::leech::export_vectors;
use k3_conics::report::{exit_code, CliqueMode, Options, Pipeline, StageName, VerificationReport};
use k3_conics::{Error, Result};

/// Exact verification of the 800-conic quartic, from the Golay code to the Néron–Severi lattice.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Which admissible octad becomes {1,2,4,5,6,7,8,9}.
    #[arg(long, global = true, default_value = "lex", value_name = "lex|0|1|2|3")]
    octad_choice: OctadChoice,

    /// Write the JSON report here.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Golay code: weights, complement closure, frame.
    Golay {
        /// Print the weight distribution.
        #[arg(long)]
        stats: bool,
        /// Check the Steiner property on all 42504 quintuples.
        #[arg(long)]
        steiner: bool,
        /// Write the 4096 codewords as 0/1 rows, then the generator matrix to FILE.gen.
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
    /// Leech minimal vectors: shape counts, duplicates, negation, basis.
    Leech {
        /// Print the shape counts.
        #[arg(long)]
        counts: bool,
        /// Recount the minimal vectors by short-vector enumeration.
        #[arg(long)]
        heavy: bool,
        /// Write all minimal vectors, sorted.
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
    /// Conic census, codeword recount, intersection graph and 16 disjoint conics.
    Conics {
        #[command(flatten)]
        clique: CliqueArgs,
        /// Repeat the census for all four admissible octads.
        #[arg(long)]
        frame_invariance: bool,
        /// Write one line per conic.
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
    /// S, N, parity, discriminant forms and bad-vector scans.
    Ns {
        /// Write the Gram matrix of N, h and the conic classes.
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
    /// Every stage in order.
    VerifyAll {
        /// Skip the short-vector recount of the Leech minimal vectors.
        #[arg(long)]
        skip_heavy: bool,
        #[command(flatten)]
        clique: CliqueArgs,
    },
}

#[derive(Args)]
struct CliqueArgs {
    /// Exhibit the first 16-clique, or also count all of them.
    #[arg(long, default_value = "first", value_name = "first|all")]
    clique: CliqueMode,
    /// Time budget in seconds for `--clique all`.
    #[arg(long, default_value_t = 30)]
    clique_budget: u64,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn run(cli: Cli) -> Result<VerificationReport> {
    let mut opts = Options {
        octad_choice: cli.octad_choice,
        steiner: false,
        heavy: false,
        frame_invariance: false,
        ..Options::default()
    };
    let stages: Vec<StageName>;
    let mut after: Box<dyn FnOnce(&mut Pipeline) -> Result<()>> = Box::new(|_| Ok(()));

    match cli.command {
        Command::Golay { stats, steiner, export } => {
            opts.steiner = steiner;
            stages = vec![StageName::Golay];
            after = Box::new(move |p| {
                if stats {
                    let dist = p.code()?.0.weight_distribution();
                    println!("weight  count");
                    for (w, c) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
                        println!("{w:>6}  {c}");
                    }
                }
                if let Some(path) = export {
                    let code = &p.code()?.0;
                    code.export_words(create(&path)?)?;
                    code.export_generator(create(&path.with_extension("gen"))?)?;
                }
                Ok(())
            });
        }
        Command::Leech { counts, heavy, export } => {
            opts.heavy = heavy;
            stages = vec![StageName::Leech];
            after = Box::new(move |p| {
                let v = p.vectors()?;
                if counts {
                    let s = k3_conics::leech::census_stats(v);
                    println!("shape 31: {}\nshape 20: {}\nshape 40: {}\ntotal:    {}", s.shape31, s.shape20, s.shape40, s.total);
                }
                if let Some(path) = export {
                    export_vectors(v, create(&path)?)?;
                }
                Ok(())
            });
        }
        Command::Conics { clique, frame_invariance, export } => {
            opts.clique = clique.clique;
            opts.clique_budget = Duration::from_secs(clique.clique_budget);
            opts.frame_invariance = frame_invariance;
            stages = vec![StageName::Conics];
            after = Box::new(move |p| {
                if let Some(path) = export {
                    export_conics(p.conics()?, create(&path)?)?;
                }
                Ok(())
            });
        }
        Command::Ns { export } => {
            stages = vec![StageName::Ns];
            after = Box::new(move |p| {
                if let Some(path) = export {
                    p.n_lattice()?.polarized.export(create(&path)?)?;
                }
                Ok(())
            });
        }
        Command::VerifyAll { skip_heavy, clique } => {
            opts.steiner = true;
            opts.heavy = !skip_heavy;
            opts.frame_invariance = true;
            opts.clique = clique.clique;
            opts.clique_budget = Duration::from_secs(clique.clique_budget);
            stages = StageName::ALL.to_vec();
        }
    }

    let mut pipeline = Pipeline::new(opts);
    let report = pipeline.run(&stages)?;
    after(&mut pipeline)?;
    print!("{}", report.render());
    eprintln!("elapsed: {:.0} ms", report.runtime.elapsed_ms);
    if let Some(path) = cli.json {
        std::fs::write(path, report.to_json())?;
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let result = run(cli);
    if let Err(e) = &result {
        eprintln!("error: {e}");
        if matches!(e, Error::Io(_)) {
            return ExitCode::from(3);
        }
    }
    ExitCode::from(exit_code(&result) as u8)
}
