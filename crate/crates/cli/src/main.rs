use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitgraph::dynamics::{iterate, Budget};
use orbitgraph::formats::{
    emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, GRAPH6_MAX_ORDER,
};
use orbitgraph::operators::{apply_graph, Limits};
use orbitgraph::{Graph, MaybeGraph, OperatorId};

mod family;
mod suites;

#[derive(Parser)]
#[command(
    name = "orbitgraph",
    version,
    about = "Iterate graph operators and classify their orbits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family.
    Generate {
        /// Family name followed by its integer parameters, e.g. `grid 5 2`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Attach a hat at vertex 0 (the input must be triangle-free cubic).
        #[arg(long)]
        hat: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply an operator once.
    Apply {
        operator: OperatorId,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the orbit step by step, then the verdict.
    Iterate {
        operator: OperatorId,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print the full canonical byte string instead of its digest.
        #[arg(long)]
        full_canon: bool,
    },
    /// Print only the verdict line.
    Classify {
        operator: OperatorId,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Cross-check the classifier against the closed-form oracles.
    Check {
        suite: suites::Suite,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Re-encode a graph.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Read a graph from a file (`.g6` is graph6, anything else an edge list).
    #[arg(long = "in", value_name = "FILE", group = "source")]
    input: Option<PathBuf>,
    /// Override the input file format.
    #[arg(long, value_enum, requires = "input")]
    in_format: Option<InFormat>,
    /// A graph6 string.
    #[arg(long, value_name = "STRING", group = "source")]
    g6: Option<String>,
    /// A named family with parameters, e.g. `--gen grid 5 2`.
    #[arg(long = "gen", value_name = "FAMILY", num_args = 1.., group = "source")]
    generate: Option<Vec<String>>,
    /// Attach a hat at vertex 0 of the input graph.
    #[arg(long)]
    hat: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    /// graph6 up to order 62, otherwise an edge list.
    Auto,
    G6,
    Edgelist,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    format: OutFormat,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().max_steps, value_parser = positive())]
    max_steps: usize,
    #[arg(long, default_value_t = Budget::default().max_order, value_parser = positive())]
    max_order: usize,
    #[arg(long, default_value_t = Budget::default().max_substructures, value_parser = positive())]
    max_substructures: usize,
    #[arg(long, default_value_t = Budget::default().max_canon_order, value_parser = positive())]
    max_canon_order: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_steps: self.max_steps,
            max_order: self.max_order,
            max_substructures: self.max_substructures,
            max_canon_order: self.max_canon_order,
        }
    }
}

impl InputArgs {
    fn load(&self) -> Result<Graph> {
        let g = if let Some(path) = &self.input {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g6 = match self.in_format {
                Some(InFormat::G6) => true,
                Some(InFormat::Edgelist) => false,
                None => path.extension().is_some_and(|e| e == "g6"),
            };
            if g6 {
                parse_graph6(&text)?
            } else {
                parse_edgelist(&text)?
            }
        } else if let Some(s) = &self.g6 {
            parse_graph6(s)?
        } else if let Some(spec) = &self.generate {
            family::build(spec)?
        } else {
            bail!("no input graph: use --in, --g6 or --gen");
        };
        if self.hat {
            Ok(orbitgraph::generators::add_default_hat(&g)?)
        } else {
            Ok(g)
        }
    }
}

fn render(g: &MaybeGraph, format: OutFormat) -> Result<String> {
    let MaybeGraph::Present(g) = g else {
        return Ok("empty\n".to_string());
    };
    Ok(match format {
        OutFormat::Auto if g.order() <= GRAPH6_MAX_ORDER => emit_graph6(g)? + "\n",
        OutFormat::Auto | OutFormat::Edgelist => emit_edgelist(g),
        OutFormat::G6 => emit_graph6(g)? + "\n",
        OutFormat::Dot => emit_dot(g, None),
    })
}

fn write_output(text: &str, out: &OutputArgs) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { family, hat, output } => {
            let mut g = family::build(&family)?;
            if hat {
                g = orbitgraph::generators::add_default_hat(&g)?;
            }
            write_output(&render(&g.into(), output.format)?, &output)?;
        }
        Command::Apply {
            operator,
            input,
            output,
        } => {
            let g = input.load()?;
            let result = apply_graph(operator, &g, &Limits::default())?;
            write_output(&render(&result, output.format)?, &output)?;
        }
        Command::Iterate {
            operator,
            input,
            budget,
            full_canon,
        } => {
            let trace = iterate(operator, &input.load()?, &budget.budget());
            let mut out = String::new();
            for s in &trace.steps {
                let canon = match &s.canon {
                    Some(c) if full_canon => c.to_hex(),
                    Some(c) => c.digest_hex(),
                    None => "-".to_string(),
                };
                out.push_str(&format!("{} {} {} {}\n", s.k, s.order, s.size, canon));
            }
            out.push_str(&format!("{}\n", trace.terminal));
            print!("{out}");
        }
        Command::Classify {
            operator,
            input,
            budget,
        } => {
            let trace = iterate(operator, &input.load()?, &budget.budget());
            println!("{}", trace.terminal);
        }
        Command::Check { suite, budget } => {
            let summary = suites::run(suite, &budget.budget(), &mut std::io::stdout())?;
            if summary.disagree > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Convert { input, output } => {
            let g = input.load()?;
            write_output(&render(&g.into(), output.format)?, &output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn positive() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..)
}
