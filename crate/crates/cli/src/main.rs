use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use enthymeme::formula::is_atom_name;
use enthymeme::normal::NormalSet;
use enthymeme::problem::{parse_threshold, Problem, RunConfig};
use enthymeme::quality::{rank, Preset};
use enthymeme::report::Report;
use enthymeme::{parse_formula, Aggregator, QualityConfig, Vocabulary, Weight, WeightedFormula};
use enthymeme_axioms::generate::ATOM_NAMES;
use enthymeme_axioms::{check_matrix, shipped_candidates, Candidate, CheckConfig, Shape};

#[derive(Parser)]
#[command(name = "enthymeme-judge", version, about = "Score, normalize and axiom-check enthymeme decodings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutation {
    /// Replace every measure M by 1 − M.
    Invert,
}

#[derive(clap::Args)]
struct ConfigArgs {
    /// Configuration file (JSON).
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in measure sequence: Ld or Sd.
    #[arg(long)]
    preset: Option<String>,
    /// Aggregation function: average or product.
    #[arg(long)]
    agg: Option<String>,
    /// Upper limit on the number of atoms.
    #[arg(long, env = "ENTHYMEME_JUDGE_MAX_ATOMS")]
    max_atoms: Option<usize>,
    /// Upper limit on the size of premise sets.
    #[arg(long)]
    max_premises: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the decodings of a problem file.
    Score {
        #[arg(long)]
        problem: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        /// Keep only candidates scoring at least this much.
        #[arg(long)]
        threshold: Option<String>,
        #[arg(long)]
        top_k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the weighted clauses of formulas.
    Normalize {
        /// Problem file whose formulas are all normalized.
        #[arg(long, conflicts_with = "formula")]
        problem: Option<PathBuf>,
        #[arg(long, required_unless_present = "problem")]
        formula: Option<String>,
        #[arg(long, default_value = "1")]
        weight: String,
        /// Comma-separated atom enumeration. Defaults to order of appearance.
        #[arg(long)]
        atoms: Option<String>,
    },
    /// Check measures against their axioms on generated instances.
    CheckAxioms {
        /// Measures to test. Without a config or preset every shipped measure is tested.
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exercised samples below which a verdict is inconclusive.
        #[arg(long, default_value_t = 50)]
        floor: usize,
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run_config(args: &ConfigArgs) -> Result<RunConfig> {
    let mut cfg = match (&args.config, &args.preset) {
        (Some(path), _) => {
            let text = read(path)?;
            RunConfig::from_json(&text).with_context(|| format!("invalid config {}", path.display()))?
        }
        (None, Some(name)) => {
            let preset = Preset::parse(name)?;
            RunConfig {
                quality: QualityConfig::preset(preset, Aggregator::default()),
                preset: Some(preset),
                ..RunConfig::default()
            }
        }
        (None, None) => RunConfig::default(),
    };
    if let Some(agg) = &args.agg {
        cfg.quality.aggregator = Aggregator::parse(agg)?;
    }
    if let Some(n) = args.max_atoms {
        cfg.logic.caps.max_atoms = n;
    }
    if let Some(n) = args.max_premises {
        cfg.logic.caps.max_premises = n;
    }
    Ok(cfg)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn score(
    problem: &Path,
    config: &ConfigArgs,
    threshold: Option<&str>,
    top_k: Option<usize>,
    format: Format,
    output: Option<&Path>,
) -> Result<u8> {
    let text = read(problem)?;
    let problem = Problem::from_json(&text).with_context(|| format!("invalid problem {}", problem.display()))?;
    let mut cfg = run_config(config)?;
    if let Some(t) = threshold {
        cfg.quality.threshold = Some(parse_threshold(t)?);
    }
    if top_k.is_some() {
        cfg.quality.top_k = top_k;
    }
    cfg.quality.validate()?;
    let ctx = problem.context(cfg.logic)?;
    let ranking = rank(&ctx, &problem.enthymeme, &problem.decodings, &cfg.quality);
    let report = Report::new(&ranking, &cfg);
    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    emit(&rendered, output)?;
    Ok(if ranking.all_failed() && !ranking.candidates.is_empty() { 2 } else { 0 })
}

fn render_clauses(set: &NormalSet, vocab: &Vocabulary) -> String {
    if set.is_empty() {
        return "{}  (tautology: no clauses)".to_string();
    }
    let items: Vec<String> = set.iter().map(|c| c.display(vocab).to_string()).collect();
    let note = if set.iter().any(|c| c.clause.is_empty()) { "  (contradiction)" } else { "" };
    format!("{{{}}}{note}", items.join(", "))
}

/// Identifiers of `formula` in order of first appearance.
fn atoms_in(formula: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for word in formula.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
        if is_atom_name(word) && !out.iter().any(|w| w == word) {
            out.push(word.to_string());
        }
    }
    out
}

fn normalize(problem: Option<&Path>, formula: Option<&str>, weight: &str, atoms: Option<&str>) -> Result<()> {
    if let Some(path) = problem {
        let text = read(path)?;
        let problem = Problem::from_json(&text).with_context(|| format!("invalid problem {}", path.display()))?;
        let v = &problem.vocabulary;
        let ctx = problem.context(Default::default())?;
        let show = |label: &str, wf: &WeightedFormula| {
            println!("{label}: {}  ↦  {}", wf.display(v), render_clauses(&ctx.normalize_one(wf), v));
        };
        let args = std::iter::once(("enthymeme", &problem.enthymeme))
            .chain(problem.decodings.iter().map(|(id, d)| (id.as_str(), d)));
        for (name, arg) in args {
            for (i, wf) in arg.premises.iter().enumerate() {
                show(&format!("{name} premise {}", i + 1), wf);
            }
            show(&format!("{name} claim"), &arg.claim);
        }
        return Ok(());
    }
    let formula = formula.expect("clap requires a formula without a problem");
    let names = match atoms {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => atoms_in(formula),
    };
    let vocab = Vocabulary::new(names.iter().map(String::as_str))?;
    let f = parse_formula(formula, &vocab).with_context(|| format!("cannot parse `{formula}`"))?;
    let wf = WeightedFormula::new(f, Weight::parse(weight)?);
    let ctx = enthymeme::Context::new(vocab.len(), Default::default())?;
    println!("{}", render_clauses(&ctx.normalize_one(&wf), &vocab));
    Ok(())
}

fn check_axioms(
    config: &ConfigArgs,
    samples: usize,
    seed: u64,
    floor: usize,
    mutate: Option<Mutation>,
    format: Format,
) -> Result<u8> {
    let measures: Vec<Candidate> = if config.config.is_some() || config.preset.is_some() {
        run_config(config)?.quality.sequence.into_iter().map(Candidate::Spec).collect()
    } else {
        shipped_candidates()
    };
    let measures = match mutate {
        Some(Mutation::Invert) => measures
            .into_iter()
            .map(|c| match c {
                Candidate::Spec(m) => Candidate::Inverted(m),
                other => other,
            })
            .collect(),
        None => measures,
    };
    let mut shape = Shape::default();
    if let Some(n) = config.max_atoms {
        if n == 0 || n > ATOM_NAMES.len() {
            bail!("--max-atoms for generated instances must lie in 1..={}", ATOM_NAMES.len());
        }
        shape.max_atoms = n;
    }
    if let Some(n) = config.max_premises {
        shape.max_premises = n;
    }
    let cfg = CheckConfig {
        samples,
        seed,
        shape,
        floor,
        ..CheckConfig::default()
    };
    let report = check_matrix(&measures, &cfg);
    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_text(),
    };
    print!("{rendered}");
    Ok(report.conformance.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Score {
            problem,
            config,
            threshold,
            top_k,
            format,
            output,
        } => score(problem, config, threshold.as_deref(), *top_k, *format, output.as_deref()),
        Command::Normalize {
            problem,
            formula,
            weight,
            atoms,
        } => normalize(problem.as_deref(), formula.as_deref(), weight, atoms.as_deref()).map(|()| 0),
        Command::CheckAxioms {
            config,
            samples,
            seed,
            floor,
            mutate,
            format,
        } => check_axioms(config, *samples, *seed, *floor, *mutate, *format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
