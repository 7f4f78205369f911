use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use neutromagma::atlas::{build_atlas, parse_range, AtlasFamily};
use neutromagma::commands::{self, Recipe};
use neutromagma::constructors::ZnClass;
use neutromagma::ops::Side;
use neutromagma::{corpus, Error, FiniteMagma, Result};

#[derive(Parser)]
#[command(name = "neutromagma", version, about = "Finite loops, groupoids and their neutrosophic extensions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a magma from a family and write its JSON document.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        class: Option<String>,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Basic structure, identity laws and Smarandache kinds.
    Classify { input: PathBuf },
    /// Closed subsets of a species.
    Subsets {
        input: PathBuf,
        #[arg(long, default_value = "subgroupoid")]
        species: String,
    },
    /// The coset of a subset by one element.
    Cosets {
        input: PathBuf,
        #[arg(long)]
        subset: String,
        #[arg(long)]
        by: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Conjugating elements of two subsets, or pairs (a, b) with a·x = y·b.
    Conjugate {
        input: PathBuf,
        #[arg(long, requires = "h2")]
        h1: Option<String>,
        #[arg(long)]
        h2: Option<String>,
        #[arg(long, requires = "y", conflicts_with = "h1")]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    Lagrange {
        input: PathBuf,
        #[arg(long, default_value = "subgroupoid")]
        species: String,
    },
    Sylow {
        input: PathBuf,
        #[arg(long, default_value = "subgroupoid")]
        species: String,
        #[arg(long, default_value = "standard")]
        variant: String,
    },
    Cauchy {
        input: PathBuf,
        /// Test element orders against this subset instead of the carrier.
        #[arg(long)]
        relative: Option<String>,
    },
    /// Build or classify an N-structure from a manifest.
    Nstruct {
        #[command(subcommand)]
        action: NstructCmd,
    },
    /// Sweep a family and tabulate engine results.
    Atlas {
        #[arg(long)]
        family: String,
        #[arg(long)]
        class: Option<String>,
        /// A single n or an inclusive range such as 5..25.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification corpus.
    VerifyCorpus {
        /// Glob over entry ids, e.g. "ex-3.1.13*".
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand)]
enum NstructCmd {
    Build {
        manifest: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Classify { manifest: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn load(path: &Path) -> Result<FiniteMagma> {
    FiniteMagma::from_json(&read(path)?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            write_stdout(&format!("{text}\n"));
            Ok(())
        }
    }
}

fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(3);
    }
}

fn print(v: &Value) -> Result<i32> {
    write_stdout(&format!("{}\n", serde_json::to_string_pretty(v)?));
    Ok(0)
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Construct { family, n, m, t, u, class, out } => {
            let g = Recipe { family, n, m, t, u, class }.build()?;
            emit(&g.to_json(), out.as_deref())?;
            Ok(0)
        }
        Cmd::Classify { input } => print(&commands::classify_json(&load(&input)?)?),
        Cmd::Subsets { input, species } => {
            print(&commands::subsets_json(&load(&input)?, &commands::parse_species(&species)?)?)
        }
        Cmd::Cosets { input, subset, by, side } => {
            let g = load(&input)?;
            let h = commands::parse_subset(&g, &subset)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            print(&commands::cosets_json(&g, &h, g.idx(&by)?, side)?)
        }
        Cmd::Conjugate { input, h1, h2, x, y } => {
            let g = load(&input)?;
            match (h1, h2, x, y) {
                (Some(a), Some(b), _, _) => {
                    print(&commands::conjugate_json(&g, &commands::parse_subset(&g, &a)?, &commands::parse_subset(&g, &b)?)?)
                }
                (_, _, Some(x), Some(y)) => print(&commands::conjugate_pairs_json(&g, g.idx(&x)?, g.idx(&y)?)),
                _ => Err(Error::Parameter("give --h1 and --h2, or --x and --y".into())),
            }
        }
        Cmd::Lagrange { input, species } => {
            print(&commands::lagrange_json(&load(&input)?, &commands::parse_species(&species)?)?)
        }
        Cmd::Sylow { input, species, variant } => print(&commands::sylow_json(
            &load(&input)?,
            &commands::parse_species(&species)?,
            commands::parse_variant(&variant)?,
        )?),
        Cmd::Cauchy { input, relative } => {
            let g = load(&input)?;
            let rel = relative.map(|r| commands::parse_subset(&g, &r)).transpose()?;
            print(&commands::cauchy_json(&g, rel.as_ref())?)
        }
        Cmd::Nstruct { action } => match action {
            NstructCmd::Build { manifest, out } => {
                let ns = commands::load_nstructure(&read(&manifest)?)?;
                emit(&ns.to_json(), out.as_deref())?;
                Ok(0)
            }
            NstructCmd::Classify { manifest } => {
                print(&commands::nstruct_classify_json(&commands::load_nstructure(&read(&manifest)?)?)?)
            }
        },
        Cmd::Atlas { family, class, n, format, out } => {
            let fam = match family.as_str() {
                "ln" => AtlasFamily::Ln,
                "zn" => {
                    let c = class.as_deref().unwrap_or("zstar");
                    AtlasFamily::Zn(ZnClass::parse(c).ok_or_else(|| Error::Parameter(format!("unknown class {c:?}")))?)
                }
                f => return Err(Error::Parameter(format!("atlas family must be ln or zn, got {f:?}"))),
            };
            let atlas = build_atlas(fam, parse_range(&n)?)?;
            let text = match format {
                Format::Csv => atlas.to_csv(),
                Format::Json => atlas.to_json(),
            };
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => write_stdout(&text),
            }
            if atlas.counts_match() {
                Ok(0)
            } else {
                eprintln!("member counts disagree with the closed form");
                Ok(1)
            }
        }
        Cmd::VerifyCorpus { filter } => {
            let summary = corpus::run(filter.as_deref())?;
            write_stdout(&summary.render_table());
            Ok(summary.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
