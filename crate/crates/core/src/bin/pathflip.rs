//! Command-line interface for flip operations on plane spanning paths.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pathflip::corpus::synth::synthesize_order_types;
use pathflip::corpus::write_order_type_file;

#[derive(Parser)]
#[command(name = "pathflip", version, about = "Plane spanning paths and their flip graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Synthesize the complete order-type corpus and write database files.
    GenCorpus {
        /// Largest point count to enumerate (3..=8).
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Output directory for otypesNN.bin files.
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> pathflip::Result<u8> {
    match cli.cmd {
        Cmd::GenCorpus { max_n, out } => {
            let corpus = synthesize_order_types(max_n)?;
            std::fs::create_dir_all(&out)?;
            for level in &corpus.levels {
                let path = out.join(format!("otypes{:02}.bin", level.n));
                write_order_type_file(&path, level.n, &level.sets)?;
                println!(
                    "n = {}: {} order types ({} with mirrors distinguished) -> {}",
                    level.n,
                    level.sets.len(),
                    level.raw_classes,
                    path.display()
                );
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
