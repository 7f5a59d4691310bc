mod commands;
mod report;
mod resolve;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::Report;

/// Checks and constructions for finite orthomodular lattices and ring-like
/// structures of events.
///
/// STRUCT is a structure file path, a builtin name (boolean_N, moN,
/// product_2p4_mo2, paper-example-2set, o6), or a file name under
/// OMLKIT_CORPUS_DIR. Exit status: 0 all checks pass, 1 a check failed,
/// 2 parse or usage error.
#[derive(Parser)]
#[command(name = "omlkit", version)]
struct Cli {
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Include counterexample assignments.
    #[arg(long, global = true)]
    witnesses: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a lattice file is an orthomodular lattice.
    CheckOml { structure: String },
    /// Check the RLSE axioms, the consequences (a)-(e), (R4'') and the lattice
    /// correspondence.
    CheckRlse { structure: String },
    /// Emit the orthomodular lattice of an RLSE.
    Derive { structure: String },
    /// Emit the RLSE of an orthomodular lattice with a chosen addition.
    Construct {
        structure: String,
        /// t1, t2, or custom=FILE with an OPLUS table.
        #[arg(long)]
        plus: String,
    },
    /// List the 96 canonical binary terms.
    TermsEnumerate,
    /// Classify the canonical terms usable as an RLSE addition.
    TermsFilter {
        /// Comma-separated structure names.
        #[arg(long, value_delimiter = ',', default_value = "boolean_2,mo2,boolean_3,product_2p4_mo2")]
        corpus: Vec<String>,
    },
    /// Find a full set of states and emit it.
    StatesFind { structure: String },
    /// Check that the STATES of a lattice file form a full set.
    StatesCheckFull { structure: String },
    /// Decide Booleanness: the ring test for RLSEs, the event test otherwise.
    BooleanTest { structure: String },
    /// Run the acceptance suite over the builtin corpus.
    VerifyAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut report = Report::new(argv, cli.witnesses);
    let outcome = match cli.command {
        Command::CheckOml { structure } => commands::check_oml(&structure, &mut report),
        Command::CheckRlse { structure } => commands::check_rlse(&structure, &mut report),
        Command::Derive { structure } => commands::derive(&structure, &mut report),
        Command::Construct { structure, plus } => {
            commands::construct(&structure, &plus, &mut report)
        }
        Command::TermsEnumerate => commands::terms_enumerate(&mut report),
        Command::TermsFilter { corpus } => commands::terms_filter(&corpus, &mut report),
        Command::StatesFind { structure } => commands::states_find(&structure, &mut report),
        Command::StatesCheckFull { structure } => {
            commands::states_check_full(&structure, &mut report)
        }
        Command::BooleanTest { structure } => commands::boolean_test(&structure, &mut report),
        Command::VerifyAll => commands::verify_all(&mut report),
    };
    if let Err(e) = outcome {
        eprintln!("omlkit: {e}");
        return ExitCode::from(2);
    }
    if !report.passed {
        report.structure = None;
    }
    let text = if cli.json {
        report.render_json()
    } else {
        report.render_text()
    };
    print!("{text}");
    ExitCode::from(if report.passed { 0 } else { 1 })
}
