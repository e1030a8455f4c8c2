use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use circol::bounds::bound_table_csv;
use circol::cycles::{circumference, longest_cycle};
use circol::extremal::{build_extremal, check_forced_degree, verify_structural};
use circol::fragment::{colour_bounded_circumference, fragment_colour, ColourOptions};
use circol::graph::{self, Graph};
use circol::oracle::{min_defective_colours, min_fragmentation_colours};
use circol::verify::verify_fragmentation;
use circol::{Colouring, Error, PrecolouredClique};

#[derive(Parser)]
#[command(
    name = "circol",
    version,
    about = "Colour graphs of bounded circumference with small monochromatic components"
)]
struct Cli {
    /// Worker threads for parallel enumerations (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a graph so every monochromatic component has at most k vertices.
    Colour {
        #[arg(long)]
        input: PathBuf,
        /// Defaults to max(circumference, 2).
        #[arg(long)]
        k: Option<usize>,
        /// Precoloured clique as "v:c,v:c".
        #[arg(long)]
        precolour: Option<String>,
        /// Print the recursion trace to stderr.
        #[arg(long)]
        trace: bool,
        /// Lower k one step at a time instead of recomputing the circumference.
        #[arg(long)]
        no_recompute: bool,
        /// Check the circumference precondition and the cycle-deletion bound.
        #[arg(long)]
        assert_circumference: bool,
        /// Write the colouring here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a colouring against the component-order, containment, budget and precolour rules.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        precolour: Option<String>,
    },
    /// Length of a longest cycle (2 for forests).
    Circumference {
        #[arg(long)]
        input: PathBuf,
        /// Also print the vertices of a longest cycle.
        #[arg(long)]
        witness: bool,
    },
    /// Build the extremal graph G_{k,d} and optionally check its properties.
    Extremal {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum)]
        check: Option<Check>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// CSV table of the colour bounds for k = 2..=kmax.
    Bounds {
        #[arg(long)]
        kmax: u64,
    },
    /// Optimal colour count by exhaustive search (at most 16 vertices).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Mode::Fragment)]
        mode: Mode,
    },
    /// Write a graph from one of the built-in families.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated family parameters.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Structural,
    Colourings,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fragment,
    Defective,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Complete,
    Star,
    Bipartite,
    Wheel,
    Cactus,
    Treeclosure,
    Extremal,
    Petersen,
    Gnp,
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            code: 1,
            msg: format!("{}: {e}", path.display()),
        }
    }

    fn verification(msg: impl Into<String>) -> Self {
        Failure {
            code: 3,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::PartialColouring { .. } => 1,
            Error::Assertion(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_graph(path: &Path) -> CliResult<Graph> {
    let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
    Graph::parse_edge_list(&bytes).map_err(|e| Failure {
        code: 1,
        msg: format!("{}: {e}", path.display()),
    })
}

fn read_colouring(path: &Path) -> CliResult<Colouring> {
    let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
    Colouring::parse(&bytes).map_err(|e| Failure {
        code: 1,
        msg: format!("{}: {e}", path.display()),
    })
}

fn clique(g: &Graph, spec: Option<&str>) -> CliResult<PrecolouredClique> {
    match spec {
        None => Ok(PrecolouredClique::empty()),
        Some(s) => {
            let entries = PrecolouredClique::parse_entries(s).map_err(|e| Failure {
                code: 2,
                msg: e.to_string(),
            })?;
            Ok(PrecolouredClique::new(g, entries)?)
        }
    }
}

/// Writes `body` to `path` or stdout; returns whether stdout was used.
fn emit(path: Option<&Path>, body: &str) -> CliResult<bool> {
    match path {
        Some(p) => {
            fs::write(p, body).map_err(|e| Failure::io(p, e))?;
            Ok(false)
        }
        None => {
            io::stdout()
                .write_all(body.as_bytes())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e))?;
            Ok(true)
        }
    }
}

/// Prints to stdout unless stdout already carries the main output.
fn report(stdout_taken: bool, text: &str) {
    if stdout_taken {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
}

fn params<T: std::str::FromStr>(raw: &str, want: usize, family: &str) -> CliResult<Vec<T>> {
    let parts: Vec<&str> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let bad = || Failure {
        code: 2,
        msg: format!("family {family} takes {want} parameter(s), got \"{raw}\""),
    };
    if parts.len() != want {
        return Err(bad());
    }
    parts.iter().map(|p| p.parse().map_err(|_| bad())).collect()
}

fn generate(family: Family, raw: &str, seed: u64) -> CliResult<Graph> {
    let g = match family {
        Family::Cycle => graph::cycle(params(raw, 1, "cycle")?[0])?,
        Family::Path => graph::path(params(raw, 1, "path")?[0])?,
        Family::Complete => graph::complete(params(raw, 1, "complete")?[0])?,
        Family::Star => graph::star(params(raw, 1, "star")?[0])?,
        Family::Wheel => graph::wheel(params(raw, 1, "wheel")?[0])?,
        Family::Bipartite => {
            let p = params(raw, 2, "bipartite")?;
            graph::complete_bipartite(p[0], p[1])?
        }
        Family::Cactus => {
            let p = params(raw, 2, "cactus")?;
            graph::random_cactus(p[0], p[1], seed)?
        }
        Family::Treeclosure => {
            let p = params(raw, 2, "treeclosure")?;
            graph::tree_closure(p[0], p[1])?
        }
        Family::Extremal => {
            let p = params(raw, 2, "extremal")?;
            build_extremal(p[0], p[1])?
        }
        Family::Petersen => {
            params::<usize>(raw, 0, "petersen")?;
            graph::petersen()
        }
        Family::Gnp => {
            let p: Vec<f64> = params(raw, 2, "gnp")?;
            if p[0] < 0.0 || p[0].fract() != 0.0 {
                return Err(Failure {
                    code: 2,
                    msg: "gnp needs a whole vertex count".into(),
                });
            }
            graph::random_gnp(p[0] as usize, p[1], seed)?
        }
    };
    Ok(g)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Colour {
            input,
            k,
            precolour,
            trace,
            no_recompute,
            assert_circumference,
            output,
        } => {
            let g = read_graph(&input)?;
            let pre = clique(&g, precolour.as_deref())?;
            let opts = ColourOptions {
                recompute_circumference: !no_recompute,
                assert_circumference,
                emit_trace: trace,
            };
            let (col, k, tree) = match k {
                Some(k) => {
                    let (col, tree) = fragment_colour(&g, k, &pre, opts)?;
                    (col, k, tree)
                }
                None if pre.is_empty() => colour_bounded_circumference(&g, opts)?,
                None => {
                    let k = circumference(&g);
                    let (col, tree) = fragment_colour(&g, k, &pre, opts)?;
                    (col, k, tree)
                }
            };
            let taken = emit(output.as_deref(), &col.to_text())?;
            if let Some(t) = tree {
                eprint!("{}", t.to_text());
            }
            let r = verify_fragmentation(&g, &col, k, &pre)?;
            report(
                taken,
                &format!(
                    "k={k} colours={} maxcomp={}\n",
                    r.colours_used, r.max_component_order
                ),
            );
            Ok(())
        }
        Command::Verify {
            input,
            colouring,
            k,
            precolour,
        } => {
            let g = read_graph(&input)?;
            let col = read_colouring(&colouring)?;
            let pre = clique(&g, precolour.as_deref())?;
            let r = verify_fragmentation(&g, &col, k, &pre)?;
            print!("{}", r.to_text());
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::verification("colouring failed verification"))
            }
        }
        Command::Circumference { input, witness } => {
            let g = read_graph(&input)?;
            match longest_cycle(&g) {
                Some(q) => {
                    println!("{}", q.len());
                    if witness {
                        let list: Vec<String> = q.vertices().iter().map(usize::to_string).collect();
                        println!("cycle {}", list.join(" "));
                    }
                }
                None => {
                    println!("2");
                    if witness {
                        println!("cycle -");
                    }
                }
            }
            Ok(())
        }
        Command::Extremal {
            k,
            d,
            check,
            output,
        } => {
            let g = build_extremal(k, d)?;
            let mut text = String::new();
            let mut ok = true;
            if matches!(check, Some(Check::Structural | Check::All)) {
                let r = verify_structural(k, d)?;
                ok &= r.passed();
                text += &r.to_text();
            }
            if matches!(check, Some(Check::Colourings | Check::All)) {
                let r = check_forced_degree(k, d).map_err(|e| match e {
                    Error::TooLarge { limit, .. } => Failure {
                        code: 2,
                        msg: format!(
                            "enumeration infeasible: {k}^{} colourings exceed limit {limit}",
                            g.order() - 1
                        ),
                    },
                    e => e.into(),
                })?;
                ok &= r.holds;
                text += &r.to_text();
            }
            let taken = emit(output.as_deref(), &g.to_edge_list())?;
            report(taken, &text);
            if ok {
                Ok(())
            } else {
                Err(Failure::verification("extremal check failed"))
            }
        }
        Command::Bounds { kmax } => {
            print!("{}", bound_table_csv(kmax)?);
            Ok(())
        }
        Command::Oracle { input, d, mode } => {
            let g = read_graph(&input)?;
            let c = match mode {
                Mode::Fragment => min_fragmentation_colours(&g, d)?,
                Mode::Defective => min_defective_colours(&g, d)?,
            };
            println!("{c}");
            Ok(())
        }
        Command::Gen {
            family,
            params,
            seed,
            output,
        } => {
            let g = generate(family, &params, seed)?;
            emit(output.as_deref(), &g.to_edge_list())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
