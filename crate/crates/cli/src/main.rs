mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command};
use commands::{Failure, Outcome};

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    version: &'a str,
    prime: u32,
    seed: u64,
    budget: u64,
    input: Value,
    result: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        // a second initialization only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let name = cli.command.name();
    let (input, outcome) = match &cli.command {
        Command::Chambers(a) => commands::chambers(&cli, a),
        Command::Check(a) => commands::check(&cli, a),
        Command::Embed(a) => commands::embed(&cli, a),
        Command::Constants(a) => commands::constants(&cli, a),
        Command::Certify(a) => commands::certify(&cli, a),
        Command::Construct(a) => commands::construct(&cli, a),
    };
    let (result, code) = match outcome {
        Ok(Outcome { result, code }) => (result, code),
        Err(Failure { message, code }) => {
            eprintln!("gitquot {name}: {message}");
            (serde_json::json!({ "error": message }), code)
        }
    };
    let env = Envelope {
        command: name,
        version: gitquot::VERSION,
        prime: cli.prime,
        seed: cli.seed,
        budget: cli.budget,
        input,
        result,
    };
    let text = serde_json::to_string_pretty(&env).expect("serializable report") + "\n";
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("gitquot {name}: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
