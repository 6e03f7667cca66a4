use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use fintop::axioms::axiom_table;
use fintop::claims::{
    self, search_counterexample, ClaimKind, Fixture, Outcome, RegistryConfig, Report,
};
use fintop::{
    enumerate_topologies, AxiomId, ClassConfig, NamedSpace, Polarity, SetClass, SpaceAnalysis,
    SpaceDocument,
};

/// Finite topological spaces: generalized closed-set classes, separation axioms, and an
/// exhaustive claim checker.
#[derive(Parser)]
#[command(name = "fintop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a space, requested class families, closures/kernels, and its axiom table.
    Analyze(AnalyzeArgs),
    /// Count or list every labeled topology on n points.
    Enumerate {
        #[arg(short, long)]
        n: usize,
        /// Print only the number of spaces.
        #[arg(long)]
        count: bool,
    },
    /// Find the first space satisfying every --holds axiom and failing --fails.
    Search {
        #[arg(long = "holds", num_args = 1.., required = true)]
        holds: Vec<String>,
        #[arg(long)]
        fails: String,
        #[arg(short, long = "n-max", alias = "n", default_value_t = 4)]
        n: usize,
        #[arg(long)]
        strict_hstarg: bool,
    },
    /// Run the claim registry and print the verdicts.
    Claims(ClaimsArgs),
    /// List class families of a space.
    Classes {
        #[command(flatten)]
        input: SpaceInput,
        /// Restrict to these classes (all when omitted).
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long)]
        strict_hstarg: bool,
    },
}

#[derive(Args)]
struct SpaceInput {
    /// Space file (JSON or inline); a built-in fixture name such as `tau2` also works.
    file: Option<PathBuf>,
    /// Space given inline, e.g. "a,b | -; a; *".
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: SpaceInput,
    /// Print this class family (open and closed forms); repeatable.
    #[arg(long = "class")]
    classes: Vec<String>,
    /// Print the closure of this set under every requested class (or plain closure).
    #[arg(long)]
    closure: Option<String>,
    /// Print the kernel of this point under every requested class.
    #[arg(long)]
    kernel: Option<String>,
    /// Also evaluate these axiom instances, e.g. `c0@w`.
    #[arg(long = "axiom")]
    axioms: Vec<String>,
    #[arg(long)]
    strict_hstarg: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClaimsArgs {
    /// Run only these claim ids.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Run only claims of this kind (implication, equivalence, fixture-assertion,
    /// independence, map-preservation).
    #[arg(long = "kind")]
    kinds: Vec<String>,
    #[arg(long, default_value_t = claims::DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, default_value_t = claims::DEFAULT_MAP_N_MAX)]
    map_n_max: usize,
    /// Emit the structured report as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use the strict variant of H*g-closedness.
    #[arg(long)]
    strict_hstarg: bool,
    /// Run both H*g variants and list the claims whose verdict changes.
    #[arg(long)]
    diff_strict: bool,
    /// Exit with status 1 if any verdict differs from the source's statement.
    #[arg(long)]
    expect_paper: bool,
    /// Allow n_max = 6 (long run).
    #[arg(long)]
    allow_long: bool,
    /// List the registry without running it.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<ExitCode> {
    match command {
        Command::Analyze(args) => analyze(args, out)?,
        Command::Enumerate { n, count } => enumerate(n, count, out)?,
        Command::Search {
            holds,
            fails,
            n,
            strict_hstarg,
        } => search(&holds, &fails, n, strict_hstarg, out)?,
        Command::Claims(args) => return run_claims(args, out),
        Command::Classes {
            input,
            classes,
            strict_hstarg,
        } => {
            let named = load(&input)?;
            let s = SpaceAnalysis::with_config(named.space.clone(), class_config(strict_hstarg));
            print_space(&named, out)?;
            let classes = if classes.is_empty() {
                SetClass::ALL.to_vec()
            } else {
                parse_classes(&classes)?
            };
            for c in classes {
                print_class(&named, &s, c, out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn class_config(strict_hstarg: bool) -> ClassConfig {
    ClassConfig { strict_hstarg }
}

fn load(input: &SpaceInput) -> Result<NamedSpace> {
    let (text, origin) = match (&input.inline, &input.file) {
        (Some(s), _) => (s.clone(), "inline space".to_string()),
        (None, Some(path)) => match fs::read_to_string(path) {
            Ok(t) => (t, path.display().to_string()),
            Err(e) => match fixture_for(path) {
                Some(f) => (
                    f.json().to_string(),
                    format!("built-in fixture {}", f.name()),
                ),
                None => return Err(e).with_context(|| format!("cannot read {}", path.display())),
            },
        },
        (None, None) => bail!("give a space file or --inline"),
    };
    let doc = SpaceDocument::parse(&text).with_context(|| format!("cannot parse {origin}"))?;
    doc.bind()
        .with_context(|| format!("invalid space in {origin}"))
}

fn fixture_for(path: &Path) -> Option<Fixture> {
    if path.components().count() != 1 {
        return None;
    }
    let stem = path.file_stem()?.to_str()?;
    Fixture::from_name(stem)
}

fn parse_classes(names: &[String]) -> Result<Vec<SetClass>> {
    names
        .iter()
        .map(|n| n.parse::<SetClass>().map_err(|e| anyhow!("{e}")))
        .collect()
}

fn print_space(named: &NamedSpace, out: &mut impl Write) -> Result<()> {
    if let Some(name) = &named.name {
        writeln!(out, "space {name}")?;
    }
    writeln!(out, "points: {}", named.names.join(", "))?;
    let opens: Vec<String> = named
        .space
        .opens()
        .iter()
        .map(|&u| named.format_set(u))
        .collect();
    writeln!(out, "opens ({}): {}", opens.len(), opens.join(", "))?;
    Ok(())
}

fn polarities(c: SetClass) -> &'static [Polarity] {
    if c.is_complement_symmetric() {
        &[Polarity::Open, Polarity::Closed]
    } else {
        &[Polarity::Raw]
    }
}

fn print_class(
    named: &NamedSpace,
    s: &SpaceAnalysis,
    c: SetClass,
    out: &mut impl Write,
) -> Result<()> {
    for &p in polarities(c) {
        let fam = s.class_family(c, p)?;
        let members: Vec<String> = fam.members.iter().map(|&m| named.format_set(m)).collect();
        writeln!(
            out,
            "{} ({}): {}",
            c.label(p),
            members.len(),
            members.join(", ")
        )?;
    }
    Ok(())
}

fn analyze(args: AnalyzeArgs, out: &mut impl Write) -> Result<()> {
    let named = load(&args.input)?;
    let s = SpaceAnalysis::with_config(named.space.clone(), class_config(args.strict_hstarg));
    let classes = parse_classes(&args.classes)?;
    let extra: Vec<AxiomId> = args
        .axioms
        .iter()
        .map(|a| a.parse::<AxiomId>().map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let table = axiom_table(&s, &extra);

    if args.json {
        let families: Vec<serde_json::Value> = classes
            .iter()
            .flat_map(|&c| polarities(c).iter().map(move |&p| (c, p)))
            .map(|(c, p)| -> Result<serde_json::Value> {
                let fam = s.class_family(c, p)?;
                Ok(serde_json::json!({
                    "family": c.label(p),
                    "members": fam.members.iter().map(|&m| named.format_set(m)).collect::<Vec<_>>(),
                }))
            })
            .collect::<Result<_>>()?;
        let axioms: serde_json::Map<String, serde_json::Value> = table
            .entries
            .iter()
            .map(|(id, v)| (id.name(), serde_json::Value::Bool(*v)))
            .collect();
        let value = serde_json::json!({
            "space": named.document(),
            "families": families,
            "axioms": axioms,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        return Ok(());
    }

    print_space(&named, out)?;
    for &c in &classes {
        print_class(&named, &s, c, out)?;
    }
    let symmetric: Vec<SetClass> = classes
        .iter()
        .copied()
        .filter(|c| c.is_complement_symmetric())
        .collect();
    let symmetric = if symmetric.is_empty() {
        vec![SetClass::Open]
    } else {
        symmetric
    };
    if let Some(set) = &args.closure {
        let a = named.parse_set(set)?;
        for &c in &symmetric {
            let cl = s.class_closure(a, c)?;
            writeln!(
                out,
                "{}-closure of {} = {}",
                c.name(),
                named.format_set(a),
                named.format_set(cl)
            )?;
        }
    }
    if let Some(point) = &args.kernel {
        let x = named
            .point(point)
            .ok_or_else(|| anyhow!("unknown point `{point}`"))?;
        for &c in &symmetric {
            let k = s.class_kernel(x, c)?;
            writeln!(
                out,
                "{}-kernel of {point} = {}",
                c.name(),
                named.format_set(k)
            )?;
        }
    }
    writeln!(out, "axioms:")?;
    let width = table
        .entries
        .iter()
        .map(|(id, _)| id.label().chars().count())
        .max()
        .unwrap_or(0);
    for (id, v) in &table.entries {
        let label = id.label();
        let pad = width - label.chars().count();
        writeln!(
            out,
            "  {label}{} = {v:<5}  [{}]",
            " ".repeat(pad),
            id.name()
        )?;
    }
    Ok(())
}

fn enumerate(n: usize, count: bool, out: &mut impl Write) -> Result<()> {
    let it = enumerate_topologies(n)?;
    if count {
        writeln!(out, "{}", it.count())?;
        return Ok(());
    }
    for space in it {
        writeln!(out, "{}", SpaceDocument::from_space(&space).to_json())?;
    }
    Ok(())
}

fn search(
    holds: &[String],
    fails: &str,
    n: usize,
    strict_hstarg: bool,
    out: &mut impl Write,
) -> Result<()> {
    let premises: Vec<AxiomId> = holds
        .iter()
        .map(|a| a.parse::<AxiomId>().map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let conclusion: AxiomId = fails.parse().map_err(|e| anyhow!("{e}"))?;
    match search_counterexample(&premises, conclusion, n, class_config(strict_hstarg))? {
        Some(space) => {
            let doc = SpaceDocument::from_space(&space);
            writeln!(out, "{}", doc.to_json())?;
            writeln!(out, "inline: {}", doc.to_inline())?;
        }
        None => writeln!(out, "none up to n_max = {n}")?,
    }
    Ok(())
}

fn run_claims(args: ClaimsArgs, out: &mut impl Write) -> Result<ExitCode> {
    let kinds: Vec<ClaimKind> = args
        .kinds
        .iter()
        .map(|k| ClaimKind::from_name(k).ok_or_else(|| anyhow!("unknown claim kind `{k}`")))
        .collect::<Result<_>>()?;
    if args.list {
        for c in claims::registry() {
            if (args.ids.is_empty() || args.ids.iter().any(|i| c.id.eq_ignore_ascii_case(i)))
                && (kinds.is_empty() || kinds.contains(&c.kind()))
            {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    c.id,
                    c.location,
                    c.kind(),
                    c.describe()
                )?;
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let config = RegistryConfig {
        n_max: args.n_max,
        map_n_max: args.map_n_max,
        strict_hstarg: args.strict_hstarg,
        allow_long: args.allow_long,
        ids: args.ids,
        kinds,
    };
    let report = claims::run_registry(&config)?;
    emit_report(&report, args.json, args.out.as_deref(), out)?;

    if args.diff_strict {
        let other = claims::run_registry(&RegistryConfig {
            strict_hstarg: !config.strict_hstarg,
            ..config.clone()
        })?;
        let changes = report.diff(&other);
        let (from, to) = if config.strict_hstarg {
            ("strict", "non-strict")
        } else {
            ("non-strict", "strict")
        };
        if changes.is_empty() {
            writeln!(out, "\nno verdict changes between {from} and {to} H*g")?;
        } else {
            writeln!(out, "\nverdict changes from {from} to {to} H*g:")?;
            for c in changes {
                writeln!(out, "  {}: {} -> {}", c.id, c.before, c.after)?;
            }
        }
    }

    Ok(match report.outcome() {
        Outcome::Errors => ExitCode::from(2),
        Outcome::Divergent if args.expect_paper => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn emit_report(
    report: &Report,
    json: bool,
    path: Option<&Path>,
    out: &mut impl Write,
) -> Result<()> {
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{}", report.to_table())?;
    }
    if let Some(path) = path {
        fs::write(path, report.to_json())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}
