use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hochschild_core::Field;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "hochschild", version, about = "Hochschild cohomology of the algebras A_T")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of dim Im, dim Ker and dim HH against the closed formulas.
    Dims(Common),
    /// Run the verification suite and print a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run a single check family.
        #[arg(long)]
        only: Option<Check>,
        /// Largest word length for products in HH^{4*}(A_0).
        #[arg(long, default_value_t = 4)]
        wmax: usize,
    },
    /// Print the presentation of HH^{4*}(A_0) with verified Hilbert values.
    Ring {
        #[arg(long, default_value_t = 4)]
        wmax: usize,
        #[arg(long, default_value = "0", value_parser = parse_chars)]
        char: Chars,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Values of T: `a..b` (inclusive) or a comma-separated list.
    #[arg(long = "T", default_value = "0", value_parser = parse_range)]
    t: Values,
    /// Characteristics, comma-separated; 0 means the rationals.
    #[arg(long, default_value = "0", value_parser = parse_chars)]
    char: Chars,
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,
    /// Upper bound accepted for --max-n.
    #[arg(long, default_value_t = 12)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    emit: Emit,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Complex,
    Minimality,
    Resolution,
    Koszul,
    Dims,
    Bases,
    Center,
    Sigma,
    Ring,
    Nilpotence,
    Oracle,
}

#[derive(Clone, Debug)]
struct Values(Vec<u32>);

#[derive(Clone, Debug)]
struct Chars(Vec<u64>);

fn parse_range(s: &str) -> Result<Values, String> {
    let bad = |_| format!("cannot read `{s}` as a range a..b or a list");
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(bad)?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(bad)?;
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(Values((a..=b).collect()));
    }
    s.split(',')
        .map(|p| p.trim().parse().map_err(bad))
        .collect::<Result<_, _>>()
        .map(Values)
}

fn parse_chars(s: &str) -> Result<Chars, String> {
    s.split(',')
        .map(|p| {
            let p: u64 = p.trim().parse().map_err(|_| format!("`{p}` is not a characteristic"))?;
            Field::new(p).map(|_| p).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()
        .map(Chars)
}

pub struct Config {
    pub ts: Vec<u32>,
    pub fields: Vec<Field>,
    pub max_n: usize,
    pub emit: Emit,
}

impl Common {
    fn config(&self) -> Result<Config, String> {
        if self.max_n > self.cap {
            return Err(format!(
                "--max-n {} exceeds the cap {}; raise it with --cap",
                self.max_n, self.cap
            ));
        }
        let fields = self
            .char
            .0
            .iter()
            .map(|p| Field::new(*p).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        Ok(Config {
            ts: self.t.0.clone(),
            fields,
            max_n: self.max_n,
            emit: self.emit,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Dims(common) => common.config().map(|c| commands::dims(&c)),
        Command::Verify { common, only, wmax } => common.config().map(|c| commands::verify(&c, *only, *wmax)),
        Command::Ring { wmax, char } => Ok(commands::ring(*wmax, &char.0)),
    };
    match outcome {
        Err(usage) => {
            eprintln!("error: {usage}");
            ExitCode::from(2)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
    }
}
