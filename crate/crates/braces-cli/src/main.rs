//! Command-line surface for the braces toolkit.
//!
//! Exit codes: 0 = success (all properties hold / suite passes), 1 = a
//! property failed, the suite failed, or the input was invalid, 2 = an
//! enumeration or search budget was exceeded somewhere.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use braces::budget::Budgets;
use braces::construct::{self, TrisumSpec};
use braces::error::Error;
use braces::fixtures::{fixture, fixture_bundle, FixtureId};
use braces::graph::Graph;
use braces::scan::{self, PredicateSet, ReportFormat};
use braces::{cuts, graph6, suite};

#[derive(Parser)]
#[command(name = "braces", version, about = "matching-theory graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate properties of graphs (fixture name or graph6 file).
    Check {
        /// Fixture name (e.g. Heawood) or path to a graph6 file.
        input: String,
        /// Property names, e.g. cubic, bipartite, brace, girth>=6, 2fh,
        /// pfaffian, non-pfaffian, order=2mod4, cyc4conn. Repeatable.
        #[arg(long = "prop", required = true)]
        props: Vec<String>,
    },
    /// Tight cut decomposition into bricks and braces.
    Decompose {
        /// Fixture name or path to a graph6 file.
        input: String,
    },
    /// Star product of two graphs at degree-3 vertices.
    Star {
        /// First factor: fixture name or graph6 string.
        g1: String,
        /// Degree-3 vertex of the first factor.
        v1: usize,
        /// Second factor: fixture name or graph6 string.
        g2: String,
        /// Degree-3 vertex of the second factor.
        v2: usize,
        /// Comma-separated images (neighbours of v2) of v1's ascending
        /// neighbours; default pairs the sorted neighbourhoods.
        #[arg(long)]
        pairing: Option<String>,
    },
    /// Trisum of three bipartite graphs over a shared 4-cycle.
    Trisum {
        g1: String,
        g2: String,
        g3: String,
        /// 4-cycle of the first graph, e.g. 0,1,2,3.
        #[arg(long)]
        cycle1: String,
        /// 4-cycle of the second graph.
        #[arg(long)]
        cycle2: String,
        /// 4-cycle of the third graph.
        #[arg(long)]
        cycle3: String,
        /// Cycle edge positions (0..3) to delete, e.g. 0,2.
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Iterated star-product family from a recipe file.
    Family {
        /// Recipe path: `base [vertex [pairing]]`, one step per line.
        recipe: std::path::PathBuf,
    },
    /// Scan a graph6 corpus through filter and check predicates.
    Scan {
        /// Input path; `-` or omitted reads stdin.
        #[arg(long)]
        input: Option<String>,
        /// Comma-separated filter predicates (short-circuit left to right).
        #[arg(long, default_value = "")]
        filter: String,
        /// Comma-separated check predicates (evaluated after the filters).
        #[arg(long, default_value = "")]
        check: String,
        /// Report output path; omitted writes stdout.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        /// json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        /// Worker threads for per-graph evaluation (0 = library default).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Run the bundled statement suite and report PASS/FAIL per entry.
    PaperSuite,
    /// Export the bundled fixtures as graph6 plus a name sidecar.
    Fixtures {
        /// Write the graph6 lines here (stdout if omitted).
        #[arg(long)]
        g6: Option<std::path::PathBuf>,
        /// Write the name index here (one name per graph line).
        #[arg(long)]
        index: Option<std::path::PathBuf>,
    },
}

fn load_graphs(input: &str) -> Result<Vec<(String, Graph)>, Error> {
    if let Ok(id) = input.parse::<FixtureId>() {
        return Ok(vec![(id.name().to_string(), fixture(id))]);
    }
    let path = std::path::Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            if line.is_empty() {
                continue;
            }
            let g = graph6::decode(line)
                .map_err(|e| Error::ScanLine { line: i + 1, source: Box::new(e) })?;
            out.push((line.to_string(), g));
        }
        return Ok(out);
    }
    Err(Error::UnknownFixture(input.to_string()))
}

fn load_one_graph(input: &str) -> Result<Graph, Error> {
    if let Ok(id) = input.parse::<FixtureId>() {
        return Ok(fixture(id));
    }
    if std::path::Path::new(input).exists() {
        let graphs = load_graphs(input)?;
        return match graphs.into_iter().next() {
            Some((_, g)) => Ok(g),
            None => Err(Error::Io("empty graph6 file".into())),
        };
    }
    graph6::decode(input)
}

fn parse_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Io(format!("bad number {t:?} in list")))
        })
        .collect()
}

fn parse_predicates(text: &str) -> Result<PredicateSet, Error> {
    let names: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    PredicateSet::parse(&names)
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    let budgets = Budgets::from_env();
    match cli.command {
        Command::Check { input, props } => {
            let graphs = load_graphs(&input)?;
            let filters = PredicateSet::default();
            let names: Vec<&str> = props.iter().map(String::as_str).collect();
            let checks = PredicateSet::parse(&names)?;
            let mut all_hold = true;
            for (name, g) in &graphs {
                let line = graph6::encode(g)?;
                let report = scan::scan_corpus(
                    format!("{line}\n").as_bytes(),
                    &filters,
                    &checks,
                    &budgets,
                    1,
                )?;
                let rec = &report.records[0];
                if !rec.budget_exceeded.is_empty() {
                    return Err(Error::BudgetExceeded { what: "check", partial: 0 });
                }
                let mut parts = Vec::new();
                for prop in checks.names() {
                    let v = rec
                        .properties
                        .get(&prop)
                        .map(|p| match p {
                            scan::PropValue::Bool(b) => b.to_string(),
                            scan::PropValue::Int(i) => i.to_string(),
                        })
                        .unwrap_or_default();
                    parts.push(format!("{prop}={v}"));
                }
                println!("{name}: {}", parts.join(" "));
                all_hold &= rec.survivor;
            }
            Ok(all_hold)
        }
        Command::Decompose { input } => {
            let graphs = load_graphs(&input)?;
            for (name, g) in &graphs {
                let d = cuts::decompose(g, &budgets)?;
                println!("{name}: {} piece(s)", d.pieces.len());
                for p in &d.pieces {
                    println!("  {} {}", p.kind, graph6::encode(&p.graph)?);
                }
                for t in &d.cut_trace {
                    println!("  cut in {} at X={:?}", t.host_graph6, t.x);
                }
            }
            Ok(true)
        }
        Command::Star { g1, v1, g2, v2, pairing } => {
            let a = load_one_graph(&g1)?;
            let b = load_one_graph(&g2)?;
            let pairing = match pairing {
                None => None,
                Some(text) => {
                    let images = parse_list(&text)?;
                    if images.len() != 3 || v1 >= a.n() || a.degree(v1) != 3 {
                        return Err(Error::PairingNotBijective);
                    }
                    Some(
                        a.adj(v1)
                            .iter()
                            .copied()
                            .zip(images)
                            .collect::<Vec<(usize, usize)>>(),
                    )
                }
            };
            let sp = construct::star_product(&a, v1, &b, v2, pairing.as_deref())?;
            println!("{}", graph6::encode(&sp.graph)?);
            println!("principal cut: {:?}", sp.principal_cut.delta());
            Ok(true)
        }
        Command::Trisum { g1, g2, g3, cycle1, cycle2, cycle3, delete } => {
            let pieces = [load_one_graph(&g1)?, load_one_graph(&g2)?, load_one_graph(&g3)?];
            let mut cycles = [[0usize; 4]; 3];
            for (i, text) in [cycle1, cycle2, cycle3].iter().enumerate() {
                let c = parse_list(text)?;
                if c.len() != 4 {
                    return Err(Error::TrisumNotAFourCycle { piece: i });
                }
                cycles[i] = [c[0], c[1], c[2], c[3]];
            }
            let spec = TrisumSpec { pieces, cycles, delete: parse_list(&delete)? };
            let g = construct::trisum(&spec)?;
            println!("{}", graph6::encode(&g)?);
            Ok(true)
        }
        Command::Family { recipe } => {
            let text = std::fs::read_to_string(recipe)?;
            let steps = construct::parse_recipe(&text)?;
            let result = construct::diwan_family(&steps)?;
            for (i, t) in result.trace.iter().enumerate() {
                match &t.principal_cut {
                    None => println!("step {i}: {}", t.graph6),
                    Some(cut) => println!("step {i}: {} cut {:?}", t.graph6, cut.delta()),
                }
            }
            println!("{}", graph6::encode(&result.graph)?);
            Ok(true)
        }
        Command::Scan { input, filter, check, report, format, workers } => {
            let filters = parse_predicates(&filter)?;
            let checks = parse_predicates(&check)?;
            let format: ReportFormat = format.parse()?;
            let result = match input.as_deref() {
                None | Some("-") => {
                    let mut text = String::new();
                    std::io::stdin().read_to_string(&mut text)?;
                    scan::scan_corpus(text.as_bytes(), &filters, &checks, &budgets, workers)?
                }
                Some(path) => {
                    let file = std::fs::File::open(path)?;
                    let reader = std::io::BufReader::new(file);
                    scan::scan_corpus(reader, &filters, &checks, &budgets, workers)?
                }
            };
            let bytes = scan::emit_report(&result, format);
            match report {
                None => std::io::stdout().write_all(&bytes)?,
                Some(path) => std::fs::write(path, &bytes)?,
            }
            if result.aggregate.inconclusive > 0 {
                return Err(Error::BudgetExceeded {
                    what: "scan",
                    partial: result.aggregate.inconclusive as u64,
                });
            }
            Ok(true)
        }
        Command::PaperSuite => {
            let report = suite::paper_suite();
            print!("{}", report.render());
            if report.any_inconclusive() {
                return Err(Error::BudgetExceeded { what: "paper suite", partial: 0 });
            }
            Ok(report.all_pass())
        }
        Command::Fixtures { g6, index } => {
            let (lines, names) = fixture_bundle();
            match g6 {
                None => print!("{lines}"),
                Some(path) => std::fs::write(path, lines)?,
            }
            match index {
                None => print!("{names}"),
                Some(path) => std::fs::write(path, names)?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_budget() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
