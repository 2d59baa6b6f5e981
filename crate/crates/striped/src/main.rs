//! Thin command line front end over the library operations.
//!
//! Documents travel on stdin/stdout by default so subcommands compose in
//! pipelines (`striped gen … | striped reduce | striped check`). Exit codes:
//! 0 success / all checks pass, 1 failed check or invalid atlas, 2 usage or
//! parse error. Diagnostics go to stderr, data to stdout.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use striped::generator::{self, GenParams};
use striped::surgery::extraction_report_to_json;
use striped::theorems::{self, TheoremReport};
use striped::{LeafClass, PairId, StripedAtlas};

#[derive(Parser)]
#[command(name = "striped", version, about = "Striped surface toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Read the atlas document from a file instead of stdin.
    #[arg(short = 'f', long = "file")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Report well-formedness violations of an atlas document.
    Validate(Input),
    /// Emit one record per leaf with its type and predicates.
    Classify(Input),
    /// Export the leaf space.
    Leafspace {
        #[command(flatten)]
        input: Input,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
        /// JSON output (the default).
        #[arg(long)]
        json: bool,
    },
    /// Merge two-strip gluings away and report extracted components.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Write the extraction report here instead of stderr.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Remove gluing pairs, doubling each cut leaf into boundary.
    Cut {
        #[command(flatten)]
        input: Input,
        /// Comma-separated pair ids to remove.
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<String>,
        /// Write the cut map here instead of stderr.
        #[arg(long)]
        cutmap: Option<PathBuf>,
    },
    /// Print the canonical form of an atlas.
    Canon(Input),
    /// Run the characterization checks.
    Check {
        #[command(flatten)]
        input: Input,
        /// Run every check (the default when no check is selected).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        families: bool,
        #[arg(long)]
        fibration: bool,
        #[arg(long)]
        strips: bool,
        /// Treat the input as a stream of documents, one per line.
        #[arg(long)]
        corpus: bool,
    },
    /// Generate atlas documents.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        strips: usize,
        #[arg(long, default_value_t = 2)]
        ivals: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Stream every small atlas class instead: takes STRIPS IVALS.
        #[arg(long, num_args = 2, value_names = ["STRIPS", "IVALS"])]
        enumerate: Option<Vec<usize>>,
    },
    /// Compare two atlases up to relabeling, reordering, flips and swaps.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Compare smoothed leaf spaces instead of canonical forms.
        #[arg(long)]
        leafspace: bool,
    },
}

enum Failure {
    /// Invalid atlas or failed check.
    Data(String),
    /// Parse, IO or usage problem.
    Usage(String),
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(buffer)
        }
    }
}

fn parse_atlas(text: &str) -> Result<StripedAtlas, Failure> {
    StripedAtlas::parse(text).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_valid_atlas(text: &str) -> Result<StripedAtlas, Failure> {
    let atlas = parse_atlas(text)?;
    let report = atlas.validate();
    if report.is_valid() {
        Ok(atlas)
    } else {
        Err(Failure::Data(format!("invalid atlas:\n{report}")))
    }
}

fn load(input: &Input) -> Result<StripedAtlas, Failure> {
    parse_valid_atlas(&read_input(input)?)
}

fn write_sink(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            eprint!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate(input) => {
            let atlas = parse_atlas(&read_input(&input)?)?;
            let report = atlas.validate();
            if report.is_valid() {
                Ok(())
            } else {
                print!("{report}");
                Err(Failure::Data(String::new()))
            }
        }

        Command::Classify(input) => {
            let atlas = load(&input)?;
            for leaf in atlas.leaves() {
                let ty = atlas
                    .classify(&leaf)
                    .map_err(|e| Failure::Data(e.to_string()))?;
                let kind = match &leaf {
                    LeafClass::Interior(_) => "interior",
                    LeafClass::Boundary(_) => "boundary",
                };
                println!(
                    "{{\"leaf\":{},\"kind\":\"{}\",\"type\":\"{}\",\"special\":{},\"singular\":{},\"regular\":{},\"cross_section\":{}}}",
                    serde_json::to_string(&leaf.label()).expect("string encodes"),
                    kind,
                    ty,
                    ty.is_special(),
                    ty.is_singular(),
                    ty.is_regular(),
                    ty.admits_cross_section(),
                );
            }
            Ok(())
        }

        Command::Leafspace { input, dot, json } => {
            if dot && json {
                return Err(Failure::Usage("--dot and --json are exclusive".into()));
            }
            let ls = load(&input)?.leaf_space();
            if dot {
                print!("{}", ls.to_dot());
            } else {
                print!("{}", ls.to_json());
            }
            Ok(())
        }

        Command::Reduce { input, report } => {
            let (reduced, extracted) = load(&input)?.reduce();
            write_sink(&report, &extraction_report_to_json(&extracted))?;
            print!("{}", reduced.serialize());
            Ok(())
        }

        Command::Cut {
            input,
            pairs,
            cutmap,
        } => {
            let atlas = load(&input)?;
            let ids: BTreeSet<PairId> = pairs
                .iter()
                .filter(|p| !p.is_empty())
                .map(|p| PairId::new(p.clone()))
                .collect();
            let (cut, map) = atlas.cut(&ids).map_err(|e| Failure::Usage(e.to_string()))?;
            write_sink(&cutmap, &map.to_json())?;
            print!("{}", cut.serialize());
            Ok(())
        }

        Command::Canon(input) => {
            print!("{}", load(&input)?.canonical_form());
            Ok(())
        }

        Command::Check {
            input,
            all,
            families,
            fibration,
            strips,
            corpus,
        } => {
            let pick_all = all || !(families || fibration || strips);
            let selected = move |atlas: &StripedAtlas| -> Vec<TheoremReport> {
                let mut reports = Vec::new();
                if pick_all || families {
                    reports.push(theorems::check_families(atlas));
                }
                if pick_all || fibration {
                    reports.push(theorems::check_fibration(atlas));
                }
                if pick_all || strips {
                    reports.push(theorems::check_strip_decomposition(atlas));
                }
                reports
            };

            let text = read_input(&input)?;
            let mut failed = false;
            if corpus {
                for (i, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let atlas = parse_valid_atlas(line)?;
                    for report in selected(&atlas) {
                        println!("[{i}] {report}");
                        if let Some(witness) = report.witness() {
                            print!("[{i}] witness: {}", witness.atlas);
                            failed = true;
                        }
                    }
                }
            } else {
                let atlas = parse_valid_atlas(&text)?;
                for report in selected(&atlas) {
                    println!("{report}");
                    if let Some(witness) = report.witness() {
                        print!("witness: {}", witness.atlas);
                        failed = true;
                    }
                }
            }
            if failed {
                Err(Failure::Data(String::new()))
            } else {
                Ok(())
            }
        }

        Command::Gen {
            seed,
            strips,
            ivals,
            density,
            enumerate,
        } => {
            if let Some(bounds) = enumerate {
                for atlas in generator::enumerate_small(bounds[0], bounds[1]) {
                    print!("{}", atlas.serialize());
                }
            } else {
                if !(0.0..=1.0).contains(&density) {
                    return Err(Failure::Usage("density must lie in [0, 1]".into()));
                }
                let atlas = generator::random_atlas(&GenParams {
                    seed,
                    max_strips: strips,
                    max_intervals_per_side: ivals,
                    gluing_density: density,
                });
                print!("{}", atlas.serialize());
            }
            Ok(())
        }

        Command::Iso { a, b, leafspace } => {
            let read = |path: &PathBuf| -> Result<StripedAtlas, Failure> {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                parse_valid_atlas(&text)
            };
            let atlas_a = read(&a)?;
            let atlas_b = read(&b)?;
            let equal = if leafspace {
                atlas_a
                    .leaf_space()
                    .smooth()
                    .isomorphic(&atlas_b.leaf_space().smooth())
            } else {
                atlas_a.canonical_form() == atlas_b.canonical_form()
            };
            if equal {
                println!("equal");
                Ok(())
            } else {
                println!("unequal");
                Err(Failure::Data(String::new()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Data(message)) => {
            if !message.is_empty() {
                eprintln!("{message}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            if !message.is_empty() {
                eprintln!("{message}");
            }
            ExitCode::from(2)
        }
    }
}
