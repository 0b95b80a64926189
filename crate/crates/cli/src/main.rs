use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use triorient::classes::atlas_with_cap;
use triorient::families::{gen_donut, gen_standard, gen_tjoin, parse_sizes, DonutSpec, TJoinSpec};
use triorient::patterns::DEFAULT_EDGE_CAP;
use triorient::{
    extract_t3_obstruction, parse_graph, parse_orientation, solve, violations, write_graph,
    write_orientation, Certificate, ForbiddenSet, Graph, T3Outcome,
};

/// Decide and certify F-free orientations over three-vertex patterns.
#[derive(Parser)]
#[command(name = "triorient", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether each graph has an F-free orientation.
    ///
    /// Exits 0 if every graph is YES, 1 if any is NO.
    Orient {
        /// Comma-separated patterns from B1, B2, B3, T3.
        #[arg(long, short)]
        forbid: ForbiddenSet,
        /// Print the certificate as JSON.
        #[arg(long)]
        json: bool,
        /// Worker threads for several input files.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Edge-list files; `-` reads standard input.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// List the forbidden triples of an orientation. Exits 0 iff there are none.
    Check {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long, short)]
        forbid: ForbiddenSet,
    },
    /// Find a T3 obstruction, or report that the graph is orientable.
    ///
    /// Exits 0 if orientable, 1 if obstructed.
    Obstruct { file: PathBuf },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Decide every tabulated forbidden set and compare with structural predicates.
    Atlas {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Largest edge count for which oracle rows are decided.
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Two paths joined by a triangulated strip.
    Tjoin(TJoinArgs),
    /// A t-join with its path ends identified.
    Donut {
        #[command(flatten)]
        tjoin: TJoinArgs,
        /// Identify crosswise, giving a Möbius donut.
        #[arg(long)]
        mobius: bool,
    },
    /// A standard family: path, cycle, star, complete, empty, multipartite,
    /// wheel, hajos, grotzsch, mycielski.
    Std {
        name: String,
        /// Size parameters, comma-separated.
        size: Option<String>,
    },
}

#[derive(Args)]
struct TJoinArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// One bit per chord after the first: 0 advances along P, 1 along Q.
    /// Defaults to all of P first.
    #[arg(long)]
    merge: Option<String>,
}

impl TJoinArgs {
    fn spec(&self) -> Result<TJoinSpec> {
        Ok(match &self.merge {
            Some(bits) => TJoinSpec::parse(self.p, self.q, bits)?,
            None => TJoinSpec::p_first(self.p, self.q)?,
        })
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    parse_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn render_certificate(cert: &Certificate, json: bool) -> String {
    if json {
        return format!("{}\n", cert.to_json());
    }
    match cert {
        // comment lines keep the output a valid orientation document
        Certificate::Yes(o) => format!("# yes\n{}", write_orientation(o)),
        Certificate::No { edge: (x, y), path } => {
            let mut out = format!("# no: both orientations of {x} {y} are forced\n# path:");
            for (i, (a, b)) in path.iter().enumerate() {
                let sep = if i == 0 { " " } else { " -> " };
                let _ = write!(out, "{sep}{a},{b}");
            }
            out.push('\n');
            out
        }
    }
}

fn orient_one(path: &PathBuf, forbid: ForbiddenSet, json: bool) -> Result<(bool, String)> {
    let g = read_graph(path)?;
    let cert = solve(&g, forbid)?;
    Ok((cert.is_yes(), render_certificate(&cert, json)))
}

fn orient(forbid: ForbiddenSet, json: bool, jobs: usize, files: &[PathBuf]) -> Result<ExitCode> {
    if !forbid.is_simple() {
        bail!("{forbid} is not a subset of B1,B2,B3,T3; the atlas command covers other sets with the exhaustive oracle");
    }
    if files.iter().filter(|f| f.as_os_str() == "-").count() > 1 {
        bail!("standard input can be read only once");
    }
    let results: Vec<Result<(bool, String)>> = if jobs <= 1 || files.len() <= 1 {
        files.iter().map(|f| orient_one(f, forbid, json)).collect()
    } else {
        let mut slots: Vec<Option<Result<(bool, String)>>> =
            (0..files.len()).map(|_| None).collect();
        let chunk = files.len().div_ceil(jobs);
        std::thread::scope(|s| {
            for (paths, out) in files.chunks(chunk).zip(slots.chunks_mut(chunk)) {
                s.spawn(move || {
                    for (p, slot) in paths.iter().zip(out) {
                        *slot = Some(orient_one(p, forbid, json));
                    }
                });
            }
        });
        slots
            .into_iter()
            .map(|r| r.expect("every slot filled"))
            .collect()
    };
    let mut all_yes = true;
    for (path, result) in files.iter().zip(results) {
        let (yes, text) = result?;
        if files.len() > 1 {
            println!("# {}", path.display());
        }
        print!("{text}");
        all_yes &= yes;
    }
    Ok(if all_yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check(graph: &PathBuf, orientation: &PathBuf, forbid: ForbiddenSet) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let o = parse_orientation(&read_input(orientation)?)
        .with_context(|| format!("parsing {}", orientation.display()))?;
    if o.graph() != &g {
        bail!(
            "{} does not orient the graph in {}",
            orientation.display(),
            graph.display()
        );
    }
    let found = violations(&o, forbid);
    for v in &found {
        let [a, b, c] = v.triple;
        println!("{} {a} {b} {c}", v.pattern.name());
    }
    Ok(if found.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn obstruct(file: &PathBuf) -> Result<ExitCode> {
    let g = read_graph(file)?;
    match extract_t3_obstruction(&g)? {
        T3Outcome::Orientable(_) => {
            println!("orientable");
            Ok(ExitCode::SUCCESS)
        }
        T3Outcome::Obstructed(ob) => {
            println!("{}", ob.to_json());
            Ok(ExitCode::from(1))
        }
    }
}

fn generate(family: &Family) -> Result<Graph> {
    Ok(match family {
        Family::Tjoin(args) => gen_tjoin(&args.spec()?),
        Family::Donut { tjoin, mobius } => gen_donut(&DonutSpec {
            tjoin: tjoin.spec()?,
            mobius: *mobius,
        })?,
        Family::Std { name, size } => {
            let sizes = match size {
                Some(s) => parse_sizes(s).with_context(|| format!("bad size {s:?}"))?,
                None => Vec::new(),
            };
            gen_standard(name, &sizes)?
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Orient {
            forbid,
            json,
            jobs,
            files,
        } => orient(forbid, json, jobs, &files),
        Command::Check {
            graph,
            orientation,
            forbid,
        } => check(&graph, &orientation, forbid),
        Command::Obstruct { file } => obstruct(&file),
        Command::Gen { family } => {
            print!("{}", write_graph(&generate(&family)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Atlas { file, json, cap } => {
            let report = atlas_with_cap(&read_graph(&file)?, cap);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_table());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
