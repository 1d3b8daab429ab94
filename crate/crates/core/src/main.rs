use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coopetition::{
    compute_index, paper_table, render_rows, sweep, Coalition, Error, Format, GameFile, IndexKind,
    Model, OutputRow, SimpleGame, SweepSpec, TableId, ValidationOptions,
};

/// Exact coopetition, decisiveness and classical power indices for simple
/// monotone games.
#[derive(Parser)]
#[command(name = "coopetition", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Checks a game file and prints a validation report.
    Validate {
        file: PathBuf,
        /// Accept majority quotas k <= n/2.
        #[arg(long)]
        allow_weak_quota: bool,
    },
    /// Computes one index for one coalition.
    Indices {
        file: PathBuf,
        /// Comma-separated 1-based player ids, e.g. 1,2,3.
        #[arg(long)]
        coalition: String,
        #[arg(long, value_enum)]
        index: IndexArg,
        #[arg(long, value_enum, default_value = "shapley-owen")]
        model: ModelArg,
        /// Outside coalition, for attitude and interaction-indicator.
        #[arg(long)]
        against: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        allow_weak_quota: bool,
    },
    /// Computes one index for every coalition in a size range.
    Sweep {
        file: PathBuf,
        #[arg(long, value_enum)]
        index: IndexArg,
        #[arg(long, value_enum, default_value = "shapley-owen")]
        model: ModelArg,
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        /// One row per size; the game must be symmetric.
        #[arg(long)]
        collapse_symmetric: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        allow_weak_quota: bool,
    },
    /// Recomputes a built-in table and diffs it against the expected values.
    PaperTables {
        #[arg(value_parser = parse_table)]
        which: TableId,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    Coopetition,
    Decisiveness,
    Cooperative,
    Competitive,
    Attitude,
    ShapleyGen,
    Profitability,
    Interaction,
    InteractionIndicator,
}

impl From<IndexArg> for IndexKind {
    fn from(a: IndexArg) -> Self {
        match a {
            IndexArg::Coopetition => IndexKind::Coopetition,
            IndexArg::Decisiveness => IndexKind::Decisiveness,
            IndexArg::Cooperative => IndexKind::Cooperative,
            IndexArg::Competitive => IndexKind::Competitive,
            IndexArg::Attitude => IndexKind::Attitude,
            IndexArg::ShapleyGen => IndexKind::ShapleyGen,
            IndexArg::Profitability => IndexKind::Profitability,
            IndexArg::Interaction => IndexKind::Interaction,
            IndexArg::InteractionIndicator => IndexKind::InteractionIndicator,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Banzhaf,
    ShapleyOwen,
}

impl From<ModelArg> for Model {
    fn from(a: ModelArg) -> Self {
        match a {
            ModelArg::Banzhaf => Model::Banzhaf,
            ModelArg::ShapleyOwen => Model::ShapleyOwen,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(a: FormatArg) -> Self {
        match a {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: 1 for validation failures and mismatches, 2 for usage
/// and parse errors.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidGame(_) | Error::MajorityQuota { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_file(path: &Path) -> Result<GameFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    GameFile::parse(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_game(path: &Path, allow_weak_quota: bool) -> Result<SimpleGame, Failure> {
    Ok(read_file(path)?.into_game(ValidationOptions { allow_weak_quota })?)
}

fn parse_coalition(text: &str, game: &SimpleGame) -> Result<Coalition, Failure> {
    let c: Coalition = text.parse()?;
    game.check_coalition(c)?;
    Ok(c)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate {
            file,
            allow_weak_quota,
        } => {
            let report = read_file(&file)?.validate(ValidationOptions { allow_weak_quota })?;
            println!("{report}");
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Command::Indices {
            file,
            coalition,
            index,
            model,
            against,
            format,
            allow_weak_quota,
        } => {
            let game = load_game(&file, allow_weak_quota)?;
            let s = parse_coalition(&coalition, &game)?;
            let against = against.map(|t| parse_coalition(&t, &game)).transpose()?;
            let (index, model) = (IndexKind::from(index), Model::from(model));
            let value = compute_index(&game, s, index, model, against)?;
            print!(
                "{}",
                render_rows(&[OutputRow::new(s, index, model, &value)], format.into())
            );
            Ok(0)
        }
        Command::Sweep {
            file,
            index,
            model,
            min_size,
            max_size,
            collapse_symmetric,
            format,
            allow_weak_quota,
        } => {
            let game = load_game(&file, allow_weak_quota)?;
            let index = IndexKind::from(index);
            let spec = SweepSpec {
                index,
                model: model.into(),
                min_size: min_size.unwrap_or(if index.uses_model() { 2 } else { 1 }),
                max_size: max_size.unwrap_or(game.n()),
                collapse_symmetric,
            };
            print!("{}", render_rows(&sweep(&game, spec)?, format.into()));
            Ok(0)
        }
        Command::PaperTables { which, format } => {
            let report = paper_table(which)?;
            match format {
                FormatArg::Json => print!("{}", report.to_json()),
                FormatArg::Csv => {
                    println!("row,column,expected,computed,printed,status");
                    for c in &report.cells {
                        let status = serde_json::to_value(c.status).expect("status serializes");
                        println!(
                            "\"{}\",\"{}\",{},{},{},{}",
                            c.row,
                            c.column,
                            c.expected,
                            c.computed,
                            c.printed.as_deref().unwrap_or(""),
                            status.as_str().unwrap_or_default()
                        );
                    }
                }
                FormatArg::Table => print!("{report}"),
            }
            Ok(if report.is_match() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
