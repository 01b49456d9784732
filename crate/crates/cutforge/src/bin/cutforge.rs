use std::io::{self, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::Rational64;
use serde_json::json;

use cutforge::cutlang::json::to_json_string;
use cutforge::cutlang::repl::run_repl;
use cutforge::cutlang::Session;
use cutforge::oracle::battery::{run_suite, Suite};
use cutforge::oracle::WindowSpec;
use cutforge::GroupSignature;

// a closed pipe downstream (`| head`) is not an error here
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "cutforge", version, about = "Exact arithmetic of final segments and valuation ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a .cut script and print what it prints
    Run {
        file: PathBuf,
        /// One JSON document per printed value
        #[arg(long)]
        json: bool,
    },
    /// Read statements from standard input
    Repl {
        #[arg(long)]
        json: bool,
    },
    /// Check the library against brute force and its own laws
    Verify {
        /// Value group, e.g. Z,Z or Q^2
        #[arg(long)]
        group: String,
        /// Anchor coordinates range over [-k, k]
        #[arg(long = "anchor-bound", value_name = "K")]
        anchor_bound: i64,
        /// Witness box [-m, m]^n
        #[arg(long = "box", value_name = "M")]
        radius: i64,
        /// Random instances per check when the group has a Q factor
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test points stay within the box scaled by this factor
        #[arg(long, default_value = "1/2")]
        margin: Rational64,
        #[arg(long, default_value = "all", value_parser = ["seg", "ideal", "m-properties", "all"])]
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, json } => run(&file, json),
        Command::Repl { json } => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            match run_repl(stdin.lock(), io::stdout(), json, prompt) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("cutforge: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { group, anchor_bound, radius, samples, seed, margin, suite, json } => {
            let suite = Suite::parse(&suite).expect("clap checked the suite name");
            verify(&group, anchor_bound, radius, samples, seed, margin, suite, json)
        }
    }
}

fn run(file: &PathBuf, json: bool) -> ExitCode {
    let src = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cutforge: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let mut session = Session::new();
    let r = session.run_with(&src, &mut |v| {
        if json {
            out!("{}", to_json_string(v));
        } else {
            out!("{v}");
        }
    });
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            ExitCode::from(2)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    group: &str,
    anchor_bound: i64,
    radius: i64,
    samples: usize,
    seed: u64,
    margin: Rational64,
    suite: Suite,
    json: bool,
) -> ExitCode {
    let sig = match GroupSignature::parse(group) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cutforge: {e}");
            return ExitCode::from(2);
        }
    };
    if anchor_bound < 0 {
        eprintln!("cutforge: the anchor bound must be nonnegative");
        return ExitCode::from(2);
    }
    let w = WindowSpec { radius, margin, samples, seed, ..WindowSpec::default() };
    let checks = match run_suite(suite, &sig, anchor_bound, &w) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("cutforge: {e}");
            return ExitCode::from(2);
        }
    };
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if json {
        let items: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "suite": c.suite,
                    "name": c.name,
                    "passed": c.passed(),
                    "instances": c.instances,
                    "failures": c.failure_count,
                    "examples": c.failures,
                })
            })
            .collect();
        let doc = json!({"group": sig.to_string(), "passed": failed == 0, "checks": items});
        out!("{}", serde_json::to_string_pretty(&doc).expect("plain JSON"));
    } else {
        for c in &checks {
            out!("{c}");
        }
        out!("{} checks over {sig}, {failed} failed", checks.len());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
