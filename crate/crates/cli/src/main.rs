use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use compaut::group::DEFAULT_ORDER_CAP;
use compaut::mapping::DEFAULT_NODE_BUDGET;
use compaut::report::{
    cmd_mappings, cmd_spectrum, cmd_verify_theorem, cmd_witness_psl2, cmd_witness_wreath, Report,
    RunOptions, SpectrumRequest,
};

const GRAMMAR: &str = "\
Group expressions:
  expr := term ('x' term)*
  term := atom | '(' expr ')'
  atom := NAME '(' INT ')' | NAME INT | 'Q8'
  NAME := C | D | S | A | SL2 | PSL2 | PGL2   (case-insensitive)
Products are left-associative, e.g. \"A5 x C3\", \"PSL2(9)\", \"(C2 x C2) x S3\".
D(n) is the dihedral group of order 2n.

Exit codes: 0 success, 2 theorem-consistency violation, 3 input error,
4 order cap or node budget exceeded.";

#[derive(Parser)]
#[command(name = "compaut", version, about = "k-complete automorphisms and complete mappings of finite groups", after_help = GRAMMAR)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order that may be constructed.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: u64,
    /// Node budget per complete-mapping search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check every automorphism of each group for 1-completeness.
    VerifyTheorem {
        /// Groups to check (default: the nonsolvable catalog).
        #[arg(long, num_args = 1..)]
        scope: Vec<String>,
    },
    /// Tabulate k-completeness over a range of k.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k_min: i64,
        #[arg(long)]
        k_max: i64,
        /// Also test g -> g a(g) a^2(g) ... a^k(g).
        #[arg(long)]
        iterate: bool,
        /// Scan one automorphism per inner-automorphism coset.
        #[arg(long)]
        coset_reps: bool,
    },
    /// Construct and verify an inverted-element witness.
    #[command(subcommand)]
    Witness(WitnessKind),
    /// Search for complete mappings and orthomorphisms.
    Mappings {
        #[arg(long)]
        group: String,
    },
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Element of PSL2(q) inverted by a coset representative built from the i-th Frobenius power.
    Psl2 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        i: u32,
    },
    /// Random automorphism of S^n (drawn with --seed) and an inverted tuple.
    Wreath {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
    },
}

fn run(cli: &Cli) -> Result<Report, compaut::report::CommandError> {
    let opts = RunOptions {
        cap: cli.cap,
        seed: cli.seed,
        budget: cli.budget,
    };
    match &cli.command {
        Command::VerifyTheorem { scope } => cmd_verify_theorem(scope, &opts),
        Command::Spectrum {
            group,
            k_min,
            k_max,
            iterate,
            coset_reps,
        } => cmd_spectrum(
            &SpectrumRequest {
                group: group.clone(),
                k_min: *k_min,
                k_max: *k_max,
                iterate: *iterate,
                coset_representatives: *coset_reps,
            },
            &opts,
        ),
        Command::Witness(WitnessKind::Psl2 { q, i }) => cmd_witness_psl2(*q, *i, &opts),
        Command::Witness(WitnessKind::Wreath { base, n }) => {
            cmd_witness_wreath(base, *n, cli.seed, &opts)
        }
        Command::Mappings { group } => cmd_mappings(group, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.status().code() as u8);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
