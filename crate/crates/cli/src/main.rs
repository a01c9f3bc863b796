use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ads_core::ads::{replay_digest, AdsMethod};
use ads_core::catalog::{Catalog, Entry};
use ads_core::census::{census, census_row, to_csv, to_text, Mutant, Property};
use ads_core::decomposition::indecomposable_decomposition;
use ads_core::format;
use ads_core::injectivity::injective_hull;
use ads_core::submodule::{radical, singular, socle, submodule_lattice};
use ads_core::verify::{verify, VerifyOptions};
use ads_core::{Error, Guards};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "adsmod",
    version,
    about = "Decide ADS and related properties of finite modules"
)]
struct Cli {
    /// Largest module the lattice-based deciders accept.
    #[arg(long, global = true)]
    seed_guard: Option<usize>,
    /// Largest module for element-wise operations.
    #[arg(long, global = true)]
    element_guard: Option<usize>,
    /// Largest group enumerated element by element (hom sets, extension cosets).
    #[arg(long, global = true)]
    enumeration_guard: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate properties of one module (`ring:module` or a description file).
    Check {
        target: String,
        #[arg(long, default_value = "all")]
        properties: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Re-check a witness digest `s=..;t=..;c=..` against the module.
        #[arg(long)]
        replay: Option<String>,
        #[arg(long, default_value = "default")]
        catalog: String,
    },
    /// Property table over every catalog module up to a size bound.
    Census {
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long, default_value_t = 64)]
        bound: usize,
        #[arg(long, default_value = "all")]
        properties: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every theorem check over a catalog.
    Verify {
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long, default_value_t = 64)]
        bound: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Test mode: flip the verdicts of one ADS method.
        #[arg(long, hide = true)]
        mutant: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Summarize a ring and module.
    Describe {
        target: String,
        #[arg(long, default_value = "default")]
        catalog: String,
    },
}

fn guards(cli: &Cli) -> Guards {
    let mut g = Guards::default();
    if let Some(n) = cli.seed_guard {
        g.lattice = n;
    }
    if let Some(n) = cli.element_guard {
        g.elements = n;
    }
    if let Some(n) = cli.enumeration_guard {
        g.enumeration = n;
    }
    g
}

fn load_target(target: &str, catalog: &str) -> Result<Entry> {
    let path = Path::new(target);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {target}"))?;
        let parsed = format::parse(&text).with_context(|| format!("in {target}"))?;
        return Ok(Entry {
            ring_id: "file".into(),
            module_id: path
                .file_name()
                .map_or(target.into(), |n| n.to_string_lossy().into_owned()),
            module: parsed.module,
        });
    }
    if !target.contains(':') {
        bail!("`{target}` is neither a file nor a `ring:module` catalog id");
    }
    Ok(Catalog::load(catalog)?.find(target)?)
}

fn emit(out: &str, path: Option<&PathBuf>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, out).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let g = guards(cli);
    match &cli.command {
        Command::Check {
            target,
            properties,
            format,
            replay,
            catalog,
        } => {
            let entry = load_target(target, catalog)?;
            if let Some(d) = replay {
                let fails = replay_digest(&entry.module, d, &g)?;
                println!(
                    "replay {} {}",
                    if fails { "confirmed" } else { "rejected" },
                    d
                );
                return Ok(if fails {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                });
            }
            let props = Property::parse_list(properties)?;
            let row = census_row(&entry, &props, &g, Mutant::default())?;
            match format {
                Format::Text => println!("{}", row.to_text()),
                Format::Csv => print!("{}", to_csv(&props, &[row])),
            }
        }
        Command::Census {
            catalog,
            bound,
            properties,
            format,
            jobs,
            output,
        } => {
            let cat = Catalog::load(catalog)?;
            let props = Property::parse_list(properties)?;
            let rows = match census(&cat.entries(*bound)?, &props, &g, *jobs, Mutant::default()) {
                Err(Error::Disagreement(msg)) => {
                    eprintln!("fatal: ADS methods disagree: {msg}");
                    return Ok(ExitCode::from(2));
                }
                r => r?,
            };
            let out = match format {
                Format::Csv => to_csv(&props, &rows),
                Format::Text => to_text(&rows),
            };
            emit(&out, output.as_ref())?;
        }
        Command::Verify {
            catalog,
            bound,
            jobs,
            mutant,
            output,
        } => {
            let cat = Catalog::load(catalog)?;
            let mutant = match mutant {
                Some(tag) => Mutant(Some(
                    AdsMethod::from_tag(tag).with_context(|| format!("unknown method `{tag}`"))?,
                )),
                None => Mutant::default(),
            };
            let opts = VerifyOptions {
                bound: *bound,
                jobs: *jobs,
                guards: g,
                mutant,
            };
            let report = verify(&cat, &opts)?;
            emit(&report.to_text(), output.as_ref())?;
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Describe { target, catalog } => {
            let e = load_target(target, catalog)?;
            let m = &e.module;
            let r = m.ring();
            println!("module {}", e.qualified_id());
            println!(
                "ring size={} generator-orders={:?} commutative={}",
                r.size(),
                r.orders(),
                r.is_commutative()
            );
            println!("module size={} generator-orders={:?}", m.size(), m.orders());
            println!(
                "socle={} radical={} singular={}",
                socle(m).size(),
                radical(m).size(),
                singular(m).size()
            );
            match submodule_lattice(m, &g) {
                Ok(l) => println!("submodules={}", l.len()),
                Err(err) => println!("submodules {err}"),
            }
            match indecomposable_decomposition(m, &g) {
                Ok(d) => {
                    let sizes: Vec<usize> = d.parts().iter().map(|p| p.size()).collect();
                    println!("indecomposable-parts={sizes:?}");
                }
                Err(err) => println!("indecomposable-parts {err}"),
            }
            match injective_hull(m, &g) {
                Ok(c) => println!(
                    "injective-hull size={} valid={}",
                    c.hull.size(),
                    c.is_valid()
                ),
                Err(err) => println!("injective-hull {err}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
