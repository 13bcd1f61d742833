//! `fca` — formal concept analysis from the command line.
//!
//! Exit codes: 0 on success, 1 when `implications --check` finds the
//! implication does not hold, 2 for usage, parse, or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fca_core::io::{parse_context, serialize_context, ContextDocument, ContextFormat};
use fca_core::{
    build_lattice, implication_basis, implication_holds, incidents_to_context, lattice_to_dot,
    pattern_report, read_incidents_csv, AttributeSet, DotOptions, FormalContext, Implication,
    LabelMode, RankDir,
};

#[derive(Parser)]
#[command(
    name = "fca",
    version,
    about = "Concept lattices, attribute implications and pattern reports over object-attribute data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a context file between the xml, csv and cxt formats.
    Convert {
        /// Input context file.
        input: PathBuf,
        /// Output context file.
        output: PathBuf,
        /// Input format (default: inferred from the input extension).
        #[arg(long, value_enum)]
        from: Option<FormatArg>,
        /// Output format (default: inferred from the output extension).
        #[arg(long, value_enum)]
        to: Option<FormatArg>,
        /// Rename the context document on the way through.
        #[arg(long)]
        name: Option<String>,
    },
    /// Print all formal concepts in canonical order, one per line.
    Concepts {
        /// Context file.
        context: PathBuf,
        #[command(flatten)]
        format: FormatOverride,
    },
    /// Build the concept lattice and emit its Hasse diagram as DOT.
    Lattice {
        /// Context file.
        context: PathBuf,
        #[command(flatten)]
        format: FormatOverride,
        /// Write the DOT graph to this file; without it the graph goes to
        /// standard output (and the counts to standard error).
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Node labelling: each name once at its introducing concept
        /// (reduced), or every node fully labelled (full).
        #[arg(long, value_enum, default_value_t = LabelsArg::Reduced)]
        labels: LabelsArg,
        /// Rank direction of the diagram.
        #[arg(long, value_enum, default_value_t = RankDirArg::Tb)]
        rankdir: RankDirArg,
    },
    /// Print the canonical implication basis, or check one implication.
    Implications {
        /// Context file.
        context: PathBuf,
        #[command(flatten)]
        format: FormatOverride,
        /// An implication "P1, P2 -> P6" to test; exit code 0 when it
        /// holds, 1 when it does not.
        #[arg(long)]
        check: Option<String>,
    },
    /// Build a context from an incident CSV (location,crime_type with an
    /// optional timestamp column).
    Ingest {
        /// Incident CSV file.
        incidents: PathBuf,
        /// Output context file.
        #[arg(long)]
        out: PathBuf,
        /// Output format (default: inferred from the output extension).
        #[arg(long, value_enum)]
        to: Option<FormatArg>,
        /// Document name for the written context.
        #[arg(long, default_value = "context")]
        name: String,
        /// Comma-separated object (location) order; labels outside it are
        /// rejected.
        #[arg(long)]
        objects: Option<String>,
        /// Comma-separated attribute (crime type) order.
        #[arg(long)]
        attributes: Option<String>,
    },
    /// Print the concept report: every grouping with its shared profile.
    Report {
        /// Context file.
        context: PathBuf,
        #[command(flatten)]
        format: FormatOverride,
    },
}

#[derive(Args)]
struct FormatOverride {
    /// Context format (default: inferred from the file extension).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Xml,
    Csv,
    Cxt,
}

impl From<FormatArg> for ContextFormat {
    fn from(arg: FormatArg) -> ContextFormat {
        match arg {
            FormatArg::Xml => ContextFormat::Xml,
            FormatArg::Csv => ContextFormat::Csv,
            FormatArg::Cxt => ContextFormat::Burmeister,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelsArg {
    Reduced,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankDirArg {
    #[value(name = "TB")]
    Tb,
    #[value(name = "BT")]
    Bt,
}

fn main() -> ExitCode {
    reset_sigpipe();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("fca: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Die quietly when stdout is a closed pipe (`fca concepts | head`),
/// like other line-oriented tools, instead of panicking mid-print.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Convert {
            input,
            output,
            from,
            to,
            name,
        } => {
            let doc = load_document(&input, from)?;
            let doc = match name {
                Some(name) => doc.renamed(name)?,
                None => doc,
            };
            let format = resolve_format(&output, to)?;
            let bytes = serialize_context(&doc, format)?;
            fs::write(&output, bytes)
                .with_context(|| format!("writing {}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Concepts { context, format } => {
            let ctx = load_document(&context, format.format)?.into_context();
            for concept in fca_core::enumerate_concepts(&ctx) {
                println!(
                    "({}, {})",
                    ctx.format_objects(concept.extent()),
                    ctx.format_attributes(concept.intent())
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice {
            context,
            format,
            dot,
            labels,
            rankdir,
        } => {
            let ctx = load_document(&context, format.format)?.into_context();
            let lattice = build_lattice(&ctx);
            let options = DotOptions {
                label_mode: match labels {
                    LabelsArg::Reduced => LabelMode::Reduced,
                    LabelsArg::Full => LabelMode::Full,
                },
                rankdir: match rankdir {
                    RankDirArg::Tb => RankDir::TopToBottom,
                    RankDirArg::Bt => RankDir::BottomToTop,
                },
            };
            let graph = lattice_to_dot(&lattice, &ctx, &options)?;
            let counts = format!(
                "concepts: {}\nedges: {}",
                lattice.len(),
                lattice.covers().len()
            );
            match dot {
                Some(path) => {
                    fs::write(&path, graph)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!("{counts}");
                }
                None => {
                    print!("{graph}");
                    eprintln!("{counts}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Implications {
            context,
            format,
            check,
        } => {
            let ctx = load_document(&context, format.format)?.into_context();
            match check {
                Some(expr) => {
                    let implication = parse_implication(&ctx, &expr)?;
                    if implication_holds(&ctx, &implication) {
                        println!("holds");
                        Ok(ExitCode::SUCCESS)
                    } else {
                        println!("does not hold");
                        Ok(ExitCode::from(1))
                    }
                }
                None => {
                    for implication in implication_basis(&ctx) {
                        let premise = label_list(&ctx, implication.premise());
                        let conclusion = label_list(&ctx, implication.conclusion());
                        println!("{}", format!("{premise} -> {conclusion}").trim());
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Ingest {
            incidents,
            out,
            to,
            name,
            objects,
            attributes,
        } => {
            let bytes = fs::read(&incidents)
                .with_context(|| format!("reading {}", incidents.display()))?;
            let records = read_incidents_csv(bytes.as_slice())
                .with_context(|| format!("parsing {}", incidents.display()))?;
            let object_order = objects.as_deref().map(split_labels);
            let attribute_order = attributes.as_deref().map(split_labels);
            let ctx = incidents_to_context(
                &records,
                object_order.as_deref(),
                attribute_order.as_deref(),
            )?;
            let format = resolve_format(&out, to)?;
            let doc = ContextDocument::new(name, ctx, format)?;
            let bytes = serialize_context(&doc, format)?;
            fs::write(&out, bytes).with_context(|| format!("writing {}", out.display()))?;
            println!(
                "wrote {}: {} objects, {} attributes, {} incidences",
                out.display(),
                doc.context().object_count(),
                doc.context().attribute_count(),
                doc.context().incidence_count()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { context, format } => {
            let ctx = load_document(&context, format.format)?.into_context();
            let lattice = build_lattice(&ctx);
            print!("{}", pattern_report(&lattice, &ctx)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_format(path: &Path, explicit: Option<FormatArg>) -> anyhow::Result<ContextFormat> {
    if let Some(format) = explicit {
        return Ok(format.into());
    }
    ContextFormat::from_extension(path).with_context(|| {
        format!(
            "cannot infer context format of {} (expected .xml, .csv or .cxt); use a format flag",
            path.display()
        )
    })
}

fn load_document(path: &Path, explicit: Option<FormatArg>) -> anyhow::Result<ContextDocument> {
    let format = resolve_format(path, explicit)?;
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_context(&bytes, format).with_context(|| format!("parsing {}", path.display()))
}

fn split_labels(list: &str) -> Vec<String> {
    list.split(',').map(|s| s.trim().to_string()).collect()
}

/// Parses "P1, P2 -> P6": comma-separated attribute labels around a single
/// `->`, whitespace-insensitive; either side may be empty.
fn parse_implication(ctx: &FormalContext, expr: &str) -> anyhow::Result<Implication> {
    let (lhs, rhs) = expr
        .split_once("->")
        .with_context(|| format!("implication {expr:?} must contain \"->\""))?;
    if rhs.contains("->") {
        bail!("implication {expr:?} must contain exactly one \"->\"");
    }
    let premise = parse_attribute_list(ctx, lhs)?;
    let conclusion = parse_attribute_list(ctx, rhs)?;
    Ok(Implication::new(premise, conclusion)?)
}

fn parse_attribute_list(ctx: &FormalContext, side: &str) -> anyhow::Result<AttributeSet> {
    let side = side.trim();
    let mut set = AttributeSet::empty(ctx.attribute_count());
    if side.is_empty() {
        return Ok(set);
    }
    for token in side.split(',') {
        let label = token.trim();
        if label.is_empty() {
            bail!("empty attribute label in {side:?}");
        }
        let id = ctx
            .attribute_index(label)
            .with_context(|| format!("unknown attribute label {label:?}"))?;
        set.insert(id);
    }
    Ok(set)
}

fn label_list(ctx: &FormalContext, set: &AttributeSet) -> String {
    set.iter()
        .map(|m| ctx.attribute_name(m))
        .collect::<Vec<_>>()
        .join(", ")
}
