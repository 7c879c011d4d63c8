mod commands;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tannaka_core::report::{Report, SuiteReport};

/// Exact checks for amalgamated free products, fibre products of
/// representation categories, the Fr+ functor and local systems on finite
/// spaces.
///
/// Exit status: 0 when every property holds, 1 when one fails, 2 on bad
/// input. Size caps come from TANNAKA_MAX_* environment variables.
#[derive(Parser, Debug)]
#[command(name = "tannaka", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Field: `q`, a prime `p`, or `p^m` with m <= 3.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Truncation degree N.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Seed for every sampled corpus.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    /// Also write the structured report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Named example; see `tannaka presets`.
    #[arg(long, global = true)]
    pub preset: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coherent elements of G1 *_H G2.
    #[command(subcommand)]
    Amalgam(AmalgamCmd),
    /// Representations of amalgams and fibre products.
    #[command(subcommand)]
    Reps(RepsCmd),
    /// The Fr+ functor in characteristic p.
    #[command(subcommand)]
    Frobplus(FrobCmd),
    /// Local systems on finite posets.
    #[command(subcommand)]
    Topo(TopoCmd),
    /// Run the acceptance scenarios.
    Suite {
        /// Run only this scenario (name or criterion number).
        #[arg(long)]
        scenario: Option<String>,
    },
    /// List presets and scenarios.
    Presets,
}

#[derive(Args, Clone, Debug, Default)]
pub struct ElementSource {
    /// Amalgam presentation file (instead of --preset).
    #[arg(long)]
    pub presentation: Option<PathBuf>,
    /// Truncated element document.
    #[arg(long)]
    pub element: Option<PathBuf>,
    /// Parameter a of the V_a preset.
    #[arg(long, default_value_t = 2)]
    pub param: i64,
    /// Matrix entry `i,j` (0-based) of the representation preset; all
    /// entries when omitted.
    #[arg(long)]
    pub entry: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum AmalgamCmd {
    /// Dimension of the degree-N coherent space, with the word-count oracle.
    CoherentDim {
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Coherence, counit law, antipode identity and S^2 = id.
    VerifyHopf(ElementSource),
    /// Rank of the evaluation matrix of an element.
    Rank(ElementSource),
}

#[derive(Subcommand, Debug)]
pub enum RepsCmd {
    /// Glue a triple (V1, V2, c) to a representation of the amalgam.
    Glue {
        /// Triple file; defaults to the V_a preset.
        #[arg(long)]
        triple: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        param: i64,
    },
    /// Hom dimensions in the fibre product and for the glued representations.
    Hom {
        #[arg(long, requires = "b")]
        a: Option<PathBuf>,
        #[arg(long, requires = "a")]
        b: Option<PathBuf>,
        /// V_a parameters to compare pairwise.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2, 3, 5])]
        params: Vec<i64>,
    },
    /// Infinite-order certificate for C4 * C6 acting through SL2(Z).
    Sl2Cert,
}

#[derive(Args, Clone, Debug)]
pub struct CorpusSource {
    /// Representation file; otherwise a corpus of --group.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long, default_value = "C3")]
    pub group: String,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
}

#[derive(Subcommand, Debug)]
pub enum FrobCmd {
    /// dim Fr+ V = dim V and bijectivity of t(V).
    Check {
        #[command(flatten)]
        source: CorpusSource,
        #[arg(long, value_enum, default_value_t = Choice::Cyclic)]
        choice: Choice,
    },
    /// Fr+ on Hom spaces, and cyclic vs symmetric images.
    Faithful {
        #[command(flatten)]
        source: CorpusSource,
        /// Second representation file (with --rep).
        #[arg(long, requires = "rep")]
        other: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Choice {
    Cyclic,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Tree {
    Bfs,
    Dfs,
}

#[derive(Subcommand, Debug)]
pub enum TopoCmd {
    /// Edge-path presentation of pi_1 and, for a local system, its monodromy.
    Monodromy {
        /// Local-system file; otherwise the poset --preset.
        #[arg(long)]
        system: Option<PathBuf>,
        /// Base point name.
        #[arg(long)]
        base: Option<String>,
        #[arg(long, value_enum, default_value_t = Tree::Bfs)]
        tree: Tree,
    },
    /// Seifert-van Kampen checks on the wedge cover.
    Svk {
        #[arg(long, default_value_t = 12)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
    },
    /// Compare the 4-point and 6-point circle models.
    Models {
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

fn emit(text: String, json: String, common: &Common) -> Result<(), String> {
    match common.format {
        Format::Text => print!("{text}"),
        Format::Structured => println!("{json}"),
    }
    if let Some(path) = &common.out {
        fs::write(path, format!("{json}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common.clone();
    let outcome: Result<bool, String> = match &cli.command {
        Command::Suite { scenario } => commands::suite(&common, scenario.as_deref()).and_then(|s: SuiteReport| {
            let text: String = s.scenarios.iter().map(Report::to_text).collect::<String>()
                + &format!("suite: {}\n", if s.passed() { "PASS" } else { "FAIL" });
            let json = serde_json::to_string_pretty(&s).expect("reports serialize");
            emit(text, json, &common)?;
            Ok(s.passed())
        }),
        Command::Presets => {
            print!("{}", commands::presets());
            Ok(true)
        }
        other => {
            let report = match other {
                Command::Amalgam(c) => commands::amalgam(&common, c),
                Command::Reps(c) => commands::reps(&common, c),
                Command::Frobplus(c) => commands::frobplus(&common, c),
                Command::Topo(c) => commands::topo(&common, c),
                Command::Suite { .. } | Command::Presets => unreachable!(),
            };
            report.map_err(|e| e.to_string()).and_then(|r| {
                emit(r.to_text(), r.to_json(), &common)?;
                Ok(r.passed())
            })
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
