use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use revlayer::verify::run_all;
use revlayer::{
    build_diagram, count, enumerate_cyclic, is_cyclic, Composition, CountTable, EngineConfig,
    Error, Kind, Method, Permutation, RenderFormat, TableFormat,
};

/// Cyclic reverse layered permutations: decide, convert, count, draw.
#[derive(Parser)]
#[command(name = "revlayer", version)]
struct Cli {
    /// Worker threads for the counting engines (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print CYCLIC or NOT-CYCLIC; exit status 0 or 1 accordingly.
    Check {
        /// Composition such as 1,2,2 or (1,2|1,2).
        composition: String,
        /// Print the equalization and every reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Composition to permutation.
    Perm { composition: String },
    /// Permutation to composition; exit status 2 if it is not reverse layered.
    Comp { permutation: String },
    /// Count, or list, the cyclic compositions of n.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
        #[arg(long)]
        balanced_only: bool,
        /// List the compositions in lexicographic order instead of counting.
        #[arg(long)]
        list: bool,
    },
    /// Counts for every n up to --max.
    Table {
        #[arg(long)]
        max: u32,
        /// Balanced counts (even n only).
        #[arg(long)]
        balanced: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Draw the cycle diagram of a composition or permutation.
    Diagram {
        /// Digits only (645312) are read as a permutation; anything with a
        /// comma, bar or parenthesis as a composition. Use --as to override.
        input: String,
        #[arg(long = "as", value_enum)]
        read_as: Option<InputKind>,
        #[arg(long, value_enum, default_value_t = DiagramArg::Ascii)]
        format: DiagramArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exhaustive self-checks; exit status 0 iff all pass.
    Verify {
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Filtered,
    Dp,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Filtered => Method::Filtered,
            MethodArg::Dp => Method::Dp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramArg {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputKind {
    Comp,
    Perm,
}

enum Failure {
    Input(Error),
    Limit(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MethodCap { .. } | Error::Overflow { .. } => Failure::Limit(e),
            _ => Failure::Input(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = EngineConfig::default();
    if let Some(t) = cli.threads {
        config = config.with_threads(t);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &config, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, config: &EngineConfig, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match command {
        Command::Check { composition, trace } => {
            let c: Composition = composition.parse()?;
            let report = is_cyclic(&c);
            if trace {
                for line in report.lines() {
                    writeln!(out, "{line}")?;
                }
            }
            let verdict = report.verdict();
            writeln!(out, "{verdict}")?;
            Ok(if verdict.is_cyclic() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Perm { composition } => {
            let c: Composition = composition.parse()?;
            writeln!(out, "{}", Permutation::from_composition(&c))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Comp { permutation } => {
            let p: Permutation = permutation.parse()?;
            writeln!(out, "{}", p.to_composition()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            method,
            balanced_only,
            list,
        } => {
            let kind = if balanced_only {
                Kind::BalancedOnly
            } else {
                Kind::All
            };
            if list {
                for c in enumerate_cyclic(n, kind, config)? {
                    let shown = match c.as_balanced() {
                        Some(b) => b.to_string(),
                        None => c.to_string(),
                    };
                    writeln!(out, "{shown}")?;
                }
            } else {
                writeln!(out, "{}", count(n, method.into(), kind, config)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            max,
            balanced,
            method,
            format,
        } => {
            let kind = if balanced {
                Kind::BalancedOnly
            } else {
                Kind::All
            };
            let format = match format {
                FormatArg::Csv => TableFormat::Csv,
                FormatArg::Tsv => TableFormat::Tsv,
            };
            let table = CountTable::compute(max, method.into(), kind, config)?;
            out.write_all(table.render(format).as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagram {
            input,
            read_as,
            format,
            out: path,
        } => {
            let kind = read_as.unwrap_or_else(|| {
                if input.trim().chars().all(|ch| ch.is_ascii_digit()) {
                    InputKind::Perm
                } else {
                    InputKind::Comp
                }
            });
            let p = match kind {
                InputKind::Perm => input.parse::<Permutation>()?,
                InputKind::Comp => Permutation::from_composition(&input.parse()?),
            };
            let format = match format {
                DiagramArg::Ascii => RenderFormat::Ascii,
                DiagramArg::Svg => RenderFormat::Svg,
            };
            let rendered = build_diagram(&p).render(format);
            match path {
                Some(path) => std::fs::write(path, rendered)?,
                None => out.write_all(rendered.as_bytes())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max } => {
            if max == 0 {
                return Err(Error::ZeroN.into());
            }
            let mut all = true;
            for suite in run_all(max, config) {
                writeln!(out, "{suite}")?;
                all &= suite.passed();
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
