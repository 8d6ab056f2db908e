//! Command-line front end: file ingestion, JSON reporting, and the named
//! verification suites.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or parse error,
//! 3 resource bound exceeded. Errors go to standard error as a JSON object.

mod edgelist;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};
use sgraph::cert;
use sgraph::constructions;
use sgraph::eigen::DEFAULT_TOL;
use sgraph::graph6;
use sgraph::search::{self, CensusPredicate, ConjectureKind, Objective};
use sgraph::spectral;
use sgraph::{Error, SignedGraph, VertexSet};

#[derive(Parser)]
#[command(
    name = "sgraph",
    version,
    about = "Signed-graph spectral toolkit",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where a single input graph comes from.
#[derive(Args, Clone)]
struct InputArgs {
    /// Signed edge-list file (header `n m`, lines `u v s`)
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Named construction, e.g. 'cycle(5,-)', 'complete(4,+)', 'hypercube(3)'
    #[arg(long, value_name = "EXPR")]
    name: Option<String>,
    /// Entry from the bundled catalog, e.g. 'T_8', 'S_14', 'A_1'
    #[arg(long, value_name = "NAME")]
    catalog_entry: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<(SignedGraph, Value), Error> {
        match (&self.input, &self.name, &self.catalog_entry) {
            (Some(path), None, None) => {
                let g = edgelist::read(path)?;
                Ok((g, json!({ "file": path.display().to_string() })))
            }
            (None, Some(expr), None) => {
                let g = constructions::named(expr)?;
                Ok((g, json!({ "name": expr })))
            }
            (None, None, Some(name)) => {
                let cat = constructions::builtin_catalog()?;
                let e = cat
                    .iter()
                    .find(|e| &e.name == name)
                    .ok_or_else(|| Error::NotFound(format!("catalog entry '{name}'")))?;
                Ok((e.graph.clone(), json!({ "catalog_entry": name })))
            }
            _ => Err(Error::BadParams(
                "give exactly one of --input, --name, --catalog-entry".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Adjacency,
    Laplacian,
    Seidel,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Rho,
    Lambda1,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Cyclotomic,
    Hoffman,
    SymNotSignsym,
    Weighing,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureArg {
    BiluLinial,
    MssLambda1,
    GregoryDelta,
    GregoryRho,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the adjacency, Laplacian or Seidel matrix
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "adjacency")]
        matrix: MatrixKind,
        /// Jacobi convergence tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Exact characteristic polynomial, optionally cross-checked against the
    /// basic-figure expansion, plus the matching polynomial on request
    Charpoly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "adjacency")]
        matrix: MatrixKind,
        /// Also compute the basic-figure expansion and cross-check it
        #[arg(long)]
        sachs: bool,
        /// Also report the matching polynomial of the underlying graph
        #[arg(long)]
        matching: bool,
    },
    /// Negate the edges across a vertex cut
    Switch {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex ids forming the switching set
        #[arg(long, value_name = "IDS")]
        set: String,
        /// Write the switched graph to this edge-list file
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Balance via vertex potentials, cross-checked by det(L) = 0
    Balance {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Switching isomorphism with the negated signature
    SignSymmetric {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Largest distance witnessed by a nonzero signed walk difference
    SignedDiameter {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Switching classes of an underlying graph
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Read underlying graphs from a graph6 file instead
        #[arg(long, value_name = "FILE")]
        graph6: Option<PathBuf>,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
        /// Include the class representatives' edge lists in the report
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive signature minimization of rho or lambda1
    Minimize {
        /// graph6 file of underlying graphs (one per line)
        #[arg(long, value_name = "FILE")]
        graph6: PathBuf,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "rho")]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Worker threads (0 = library default); output is identical for any value
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Per-candidate records above this count are dropped from the JSON
        #[arg(long, default_value_t = 4096)]
        max_records: u64,
    },
    /// Scan switching classes for a spectral predicate
    Census {
        #[arg(long, value_name = "FILE")]
        graph6: PathBuf,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Decide a bounded-signature existence statement exhaustively
    Conjecture {
        #[arg(long, value_name = "FILE")]
        graph6: PathBuf,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum)]
        which: ConjectureArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Group signed graphs into cospectral, non-isomorphic classes
    Cospectral {
        /// Signed edge-list files (repeatable)
        #[arg(long = "input", value_name = "FILE")]
        inputs: Vec<PathBuf>,
        /// Additionally scan every switching class of these underlying graphs
        #[arg(long, value_name = "FILE")]
        graph6: Option<PathBuf>,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
    },
    /// Seidel-matrix energy scan or exact rank/kernel check
    Seidel {
        #[arg(long, value_name = "FILE")]
        graph6: PathBuf,
        /// Skip malformed graph6 lines, reporting them with line numbers
        #[arg(long)]
        lenient: bool,
        /// Exact rational rank and kernel instead of the energy scan
        #[arg(long)]
        kernel: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Load, validate and display a graph catalog
    Catalog {
        /// Catalog file (defaults to the bundled one)
        #[arg(long, value_name = "FILE")]
        path: Option<PathBuf>,
        /// Show one entry in full
        #[arg(long, value_name = "NAME")]
        name: Option<String>,
        /// Export the chosen entry as a signed edge-list file
        #[arg(long, value_name = "FILE")]
        write_sg: Option<PathBuf>,
    },
    /// Run a named verification suite (exit 0 iff all checks pass)
    Verify {
        /// One of: coefficient, moments, interlacing, schwenk, spread,
        /// godsil-gutman, gregory, huang, double-cover, seidel-bounds
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let exit = exit_code_for(&e);
            report::print_error(error_kind(&e), &e.to_string(), exit as i32);
            ExitCode::from(exit)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 3,
        Error::ValidationFailed { .. } | Error::NoConvergence(_) => 1,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::LoopEdge(_) => "LoopEdge",
        Error::DuplicateEdge(..) => "DuplicateEdge",
        Error::VertexOutOfRange { .. } => "VertexOutOfRange",
        Error::BadSign(_) => "BadSign",
        Error::TooLarge { .. } => "TooLarge",
        Error::NotFound(_) => "NotFound",
        Error::Disconnected => "Disconnected",
        Error::NoConvergence(_) => "NoConvergence",
        Error::NotRegular => "NotRegular",
        Error::PreconditionFailed(_) => "PreconditionFailed",
        Error::UnknownName(_) => "UnknownName",
        Error::BadParams(_) => "BadParams",
        Error::Parse { .. } => "ParseError",
        Error::ValidationFailed { .. } => "ValidationFailed",
    }
}

fn read_graph6(path: &PathBuf, lenient: bool) -> Result<(Vec<SignedGraph>, Value), Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let parsed = graph6::parse_str(&text, lenient)?;
    let errors: Vec<Value> = parsed
        .errors
        .iter()
        .map(|(line, e)| json!({ "line": line, "message": e.to_string() }))
        .collect();
    let desc = json!({
        "graph6": path.display().to_string(),
        "graphs": parsed.graphs.len(),
        "skipped_lines": errors,
    });
    Ok((parsed.graphs, desc))
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Spectrum { input, matrix, tol } => {
            let (g, input_desc) = input.load()?;
            let spec = match matrix {
                MatrixKind::Adjacency => spectral::spectrum(&g, tol)?,
                MatrixKind::Laplacian => spectral::laplacian_spectrum(&g, tol)?,
                MatrixKind::Seidel => {
                    sgraph::eigen::eigenvalues(&sgraph::matrix::seidel_matrix::<f64>(&g), tol)?
                }
            };
            report::print(&report::envelope(
                "spectrum",
                input_desc,
                json!({ "matrix": matrix_name(matrix), "tol": tol }),
                json!({
                    "spectrum": report::float_group(spec.values().to_vec(), spec.tol()),
                    "lambda1": spec.lambda1(),
                    "lambda_min": spec.lambda_min(),
                    "rho": spec.rho(),
                }),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly {
            input,
            matrix,
            sachs,
            matching,
        } => {
            let (g, input_desc) = input.load()?;
            let p = match matrix {
                MatrixKind::Adjacency => spectral::char_poly(&g),
                MatrixKind::Laplacian => spectral::laplacian_char_poly(&g),
                MatrixKind::Seidel => {
                    sgraph::matrix::char_poly(&sgraph::matrix::seidel_matrix::<sgraph::Int>(&g))?
                }
            };
            let mut result = json!({
                "char_poly": report::int_poly_json(&p),
                "distinct_eigenvalues": p.distinct_root_count(),
            });
            if sachs {
                let s = sgraph::polyalg::sachs_char_poly(&g)?;
                result["sachs_char_poly"] = report::int_poly_json(&s);
                result["sachs_agrees"] = json!(s == spectral::char_poly(&g));
            }
            if matching {
                result["matching_polynomial"] =
                    report::int_poly_json(&sgraph::polyalg::matching_polynomial(&g)?);
            }
            report::print(&report::envelope(
                "charpoly",
                input_desc,
                json!({ "matrix": matrix_name(matrix) }),
                result,
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Switch { input, set, output } => {
            let (g, input_desc) = input.load()?;
            let ids: Result<Vec<usize>, Error> = set
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::BadParams(format!("bad vertex id '{t}'")))
                })
                .collect();
            let u = VertexSet::from_indices(g.n(), &ids?)?;
            let switched = g.switch(&u);
            if let Some(path) = &output {
                edgelist::write(path, &switched)?;
            }
            report::print(&report::envelope(
                "switch",
                input_desc,
                json!({ "set": u.iter().collect::<Vec<_>>() }),
                json!({
                    "graph": report::graph_json(&switched),
                    "char_poly": report::int_poly_json(&spectral::char_poly(&switched)),
                    "written": output.map(|p| p.display().to_string()),
                }),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Balance { input } => {
            let (g, input_desc) = input.load()?;
            let potential = g.is_balanced();
            let laplacian = if g.is_connected() {
                Some(spectral::laplacian_balance_check(&g)?)
            } else {
                None
            };
            report::print(&report::envelope(
                "balance",
                input_desc,
                json!({}),
                json!({
                    "balanced": potential,
                    "laplacian_determinant_zero": laplacian,
                    "agree": laplacian.map(|l| l == potential),
                }),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::SignSymmetric { input } => {
            let (g, input_desc) = input.load()?;
            let answer = cert::is_sign_symmetric(&g)?;
            report::print(&report::envelope(
                "sign-symmetric",
                input_desc,
                json!({}),
                json!({ "sign_symmetric": answer }),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::SignedDiameter { input } => {
            let (g, input_desc) = input.load()?;
            let diam = spectral::signed_diameter(&g)?;
            let distinct = spectral::char_poly(&g).distinct_root_count();
            report::print(&report::envelope(
                "signed-diameter",
                input_desc,
                json!({}),
                json!({
                    "signed_diameter": diam,
                    "distinct_eigenvalues": distinct,
                    "bound_holds": diam < distinct,
                }),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            input,
            graph6: g6,
            lenient,
            list,
        } => {
            let (graphs, input_desc): (Vec<SignedGraph>, Value) = match &g6 {
                Some(path) => read_graph6(path, lenient)?,
                None => {
                    let (g, d) = input.load()?;
                    (vec![g], d)
                }
            };
            let mut reports = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let space = search::SignatureSpace::new(g)?;
                let mut obj = json!({
                    "graph_index": i,
                    "n": g.n(),
                    "m": g.m(),
                    "xi": space.xi(),
                    "classes": space.len(),
                });
                if list {
                    obj["representatives"] =
                        Value::Array(space.iter().map(|rep| report::graph_json(&rep)).collect());
                }
                reports.push(obj);
            }
            report::print(&report::envelope(
                "enumerate",
                input_desc,
                json!({ "list": list }),
                Value::Array(reports),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimize {
            graph6: path,
            lenient,
            objective,
            tol,
            jobs,
            max_records,
        } => {
            let (graphs, input_desc) = read_graph6(&path, lenient)?;
            let objective = match objective {
                ObjectiveArg::Rho => Objective::Rho,
                ObjectiveArg::Lambda1 => Objective::Lambda1,
            };
            let reports: Result<Vec<_>, Error> = with_jobs(jobs, || {
                graphs
                    .iter()
                    .map(|g| search::minimize(g, objective, tol))
                    .collect()
            });
            let reports = reports?;
            let arr: Vec<Value> = reports
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let records: Value = if (r.records.len() as u64) <= max_records {
                        Value::Array(
                            r.records
                                .iter()
                                .map(|c| json!({ "word": c.word, "value": c.value }))
                                .collect(),
                        )
                    } else {
                        Value::Null
                    };
                    json!({
                        "graph_index": i,
                        "objective": r.objective,
                        "n": r.n, "m": r.m, "xi": r.xi,
                        "exhaustive": r.exhaustive,
                        "classes": r.records.len(),
                        "optimum": r.optimum,
                        "maximum": r.maximum,
                        "argmin_words": r.argmin_words,
                        "argmin_certs": r.argmin_certs.iter().map(report::cert_json).collect::<Vec<_>>(),
                        "records": records,
                        "records_truncated": (r.records.len() as u64) > max_records,
                        "timing_ms": r.timing_ms,
                    })
                })
                .collect();
            report::print(&report::envelope(
                "minimize",
                input_desc,
                json!({ "objective": objective.name(), "tol": tol, "jobs": jobs, "limits": limits_json() }),
                Value::Array(arr),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            graph6: path,
            lenient,
            predicate,
            jobs,
        } => {
            let (graphs, input_desc) = read_graph6(&path, lenient)?;
            let predicate = match predicate {
                PredicateArg::Cyclotomic => CensusPredicate::Cyclotomic,
                PredicateArg::Hoffman => CensusPredicate::Hoffman,
                PredicateArg::SymNotSignsym => CensusPredicate::SymNotSignSymmetric,
                PredicateArg::Weighing => CensusPredicate::Weighing,
            };
            let reports = with_jobs(jobs, || search::census(&graphs, predicate));
            let arr: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "graph_index": r.graph_index,
                        "n": r.n, "m": r.m, "xi": r.xi,
                        "hits": r.hits.iter().map(|h| json!({ "word": h.word, "detail": h.detail })).collect::<Vec<_>>(),
                        "flagged": r.flagged.iter().map(|h| json!({ "word": h.word, "detail": h.detail })).collect::<Vec<_>>(),
                        "skipped": r.skipped,
                    })
                })
                .collect();
            report::print(&report::envelope(
                "census",
                input_desc,
                json!({ "predicate": predicate.name(), "jobs": jobs, "limits": limits_json() }),
                Value::Array(arr),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture {
            graph6: path,
            lenient,
            which,
            tol,
        } => {
            let (graphs, input_desc) = read_graph6(&path, lenient)?;
            let kind = match which {
                ConjectureArg::BiluLinial => ConjectureKind::BiluLinial,
                ConjectureArg::MssLambda1 => ConjectureKind::MssLambda1,
                ConjectureArg::GregoryDelta => ConjectureKind::GregoryDelta,
                ConjectureArg::GregoryRho => ConjectureKind::GregoryRho,
            };
            let mut arr = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let r = search::conjecture_check(g, kind, tol)?;
                arr.push(json!({
                    "graph_index": i,
                    "kind": r.kind,
                    "bound": r.bound,
                    "strict": r.strict,
                    "holds": r.holds,
                    "witness_word": r.witness_word,
                    "witness_value": if r.witness_value.is_nan() { Value::Null } else { json!(r.witness_value) },
                    "best_value": r.best_value,
                    "classes": r.classes,
                }));
            }
            report::print(&report::envelope(
                "conjecture",
                input_desc,
                json!({ "which": kind.name(), "tol": tol, "limits": limits_json() }),
                Value::Array(arr),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cospectral {
            inputs,
            graph6: g6,
            lenient,
        } => {
            let mut graphs = Vec::new();
            let mut labels = Vec::new();
            for path in &inputs {
                graphs.push(edgelist::read(path)?);
                labels.push(path.display().to_string());
            }
            if let Some(path) = &g6 {
                for (i, g) in read_graph6(path, lenient)?.0.into_iter().enumerate() {
                    let space = search::SignatureSpace::new(&g)?;
                    for (w, rep) in space.iter().enumerate() {
                        labels.push(format!("{}#{}:word{}", path.display(), i, w));
                        graphs.push(rep);
                    }
                }
            }
            if graphs.is_empty() {
                return Err(Error::BadParams("no input graphs".into()));
            }
            let groups = search::cospectral_mates(&graphs)?;
            let arr: Vec<Value> = groups
                .iter()
                .map(|grp| {
                    json!({
                        "char_poly": report::int_poly_json(&grp.char_poly),
                        "classes": grp.classes.iter().map(|(c, members)| json!({
                            "cert": report::cert_json(c),
                            "members": members.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            report::print(&report::envelope(
                "cospectral",
                json!({ "inputs": labels.len() }),
                json!({}),
                Value::Array(arr),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Seidel {
            graph6: path,
            lenient,
            kernel,
            tol,
        } => {
            let (graphs, input_desc) = read_graph6(&path, lenient)?;
            let result = if kernel {
                let mut arr = Vec::new();
                for (i, g) in graphs.iter().enumerate() {
                    let r = search::seidel_kernel_check(g)?;
                    arr.push(json!({
                        "graph_index": i,
                        "n": r.n,
                        "rank": r.rank,
                        "pm1_kernel": r.pm1_kernel,
                        "kernel": r.kernel.as_ref().map(|v| {
                            json!({
                                "exact": true,
                                "entries": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                            })
                        }),
                    }));
                }
                Value::Array(arr)
            } else {
                let r = search::seidel_scan(&graphs, tol)?;
                json!({
                    "n": r.n,
                    "count": r.count,
                    "min_energy": r.min_energy,
                    "max_energy": r.max_energy,
                    "lower_bound": r.lower_bound,
                    "upper_bound": r.upper_bound,
                    "argmin_indices": r.argmin_indices,
                    "argmin_certs": r.argmin_certs.iter().map(report::cert_json).collect::<Vec<_>>(),
                    "violations": r.violations.iter().map(|(i, e, which)| json!({
                        "graph_index": i, "energy": e, "bound": which,
                    })).collect::<Vec<_>>(),
                })
            };
            report::print(&report::envelope(
                "seidel",
                input_desc,
                json!({ "kernel": kernel, "tol": tol, "limits": limits_json() }),
                result,
            ));
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog {
            path,
            name,
            write_sg,
        } => {
            let entries = match &path {
                Some(p) => constructions::catalog_load(p)?,
                None => constructions::builtin_catalog()?,
            };
            let two = BigRational::from(sgraph::Int::from(2));
            if let Some(wanted) = &name {
                let e = entries
                    .iter()
                    .find(|e| &e.name == wanted)
                    .ok_or_else(|| Error::NotFound(format!("catalog entry '{wanted}'")))?;
                if let Some(out) = &write_sg {
                    edgelist::write(out, &e.graph)?;
                }
                let p = spectral::char_poly(&e.graph);
                report::print(&report::envelope(
                    "catalog",
                    json!({ "entry": wanted }),
                    json!({}),
                    json!({
                        "name": e.name,
                        "provenance": e.provenance,
                        "graph": report::graph_json(&e.graph),
                        "char_poly": report::int_poly_json(&p),
                        "cyclotomic": p.count_roots_outside(&-two.clone(), &two) == 0,
                        "distinct_eigenvalues": p.distinct_root_count(),
                        "written": write_sg.map(|p| p.display().to_string()),
                    }),
                ));
            } else {
                let arr: Vec<Value> = entries
                    .iter()
                    .map(|e| {
                        let p = spectral::char_poly(&e.graph);
                        json!({
                            "name": e.name,
                            "n": e.graph.n(),
                            "m": e.graph.m(),
                            "validated": e.expected_char_poly.is_some(),
                            "char_poly": p.to_string(),
                            "cyclotomic": p.count_roots_outside(&-two.clone(), &two) == 0,
                            "distinct_eigenvalues": p.distinct_root_count(),
                        })
                    })
                    .collect();
                report::print(&report::envelope(
                    "catalog",
                    json!({ "path": path.map(|p| p.display().to_string()) }),
                    json!({}),
                    Value::Array(arr),
                ));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_n,
            samples,
            seed,
            tol,
        } => {
            let opt = verify::Options {
                max_n,
                samples,
                seed,
                tol,
            };
            let Some(outcome) = verify::run(&suite, &opt) else {
                return Err(Error::BadParams(format!(
                    "unknown suite '{suite}'; available: {}",
                    verify::SUITES.join(", ")
                )));
            };
            for c in &outcome.checks {
                println!(
                    "{} {:<55} {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            let all = outcome.passed();
            report::print(&report::envelope(
                "verify",
                json!({ "suite": outcome.suite }),
                json!({ "max_n": max_n, "samples": samples, "seed": seed, "tol": tol }),
                json!({
                    "passed": all,
                    "checks": outcome.checks.iter().map(|c| json!({
                        "name": c.name, "pass": c.pass, "detail": c.detail,
                    })).collect::<Vec<_>>(),
                }),
            ));
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}


fn limits_json() -> Value {
    json!({
        "order": sgraph::MAX_VERTICES,
        "xi": search::MAX_XI,
        "cert_order": sgraph::cert::CERT_MAX_VERTICES,
        "sweep_cap": sgraph::eigen::SWEEP_CAP,
    })
}

fn matrix_name(m: MatrixKind) -> &'static str {
    match m {
        MatrixKind::Adjacency => "adjacency",
        MatrixKind::Laplacian => "laplacian",
        MatrixKind::Seidel => "seidel",
    }
}
