use std::process::ExitCode;

use clap::Parser;

use coringlab_cli::{corpus_list, execute};

/// Exact checks for corings, comodules and Galois comodules.
#[derive(Parser, Debug)]
#[command(name = "coring-lab", version)]
struct Cli {
    /// axioms, firm, galois, theorem:<debil|fuerte|ff|ge|clasico>, diagrams,
    /// correspondences, equivalence, export or list
    command: String,
    /// Instance file, or `random` together with --seed
    instance: Option<String>,
    /// Partial instance file with extra probe objects
    #[arg(long)]
    probes: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Compare the output with this file, or create it when missing
    #[arg(long)]
    golden: Option<String>,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("coring-lab: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.command == "list" {
        for id in corpus_list() {
            println!("{id}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(instance) = cli.instance.as_deref() else {
        return input_error("missing instance file");
    };
    let (output, mut code) = match execute(&cli.command, instance, cli.probes.as_deref(), cli.seed, cli.json) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    print!("{output}");
    if let Some(path) = &cli.golden {
        match std::fs::read_to_string(path) {
            Ok(expected) if expected == output => {}
            Ok(_) => {
                eprintln!("coring-lab: output differs from golden {path}");
                code = 1;
            }
            Err(_) => {
                if let Err(e) = std::fs::write(path, &output) {
                    return input_error(format!("{path}: {e}"));
                }
            }
        }
    }
    ExitCode::from(code)
}
