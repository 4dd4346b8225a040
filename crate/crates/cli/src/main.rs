//! `p6c4`: certifying colouring, detection, structure reports, obstruction
//! enumeration and reduction gadgets from the command line.
//!
//! Exit codes: 0 success / coloured, 1 negative answer (not colourable,
//! lookup miss, failed verification), 2 obstructed, 3 consistency
//! trap (uncatalogued obstruction, reduction mismatch), 4 input not
//! (P6, C4)-free under `--strict`, 64 usage, 65 malformed input, 66
//! unreadable input, 70 internal error, 73 output not writable.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use p6c4::coloring::{certify_color, chromatic_number, k_color, Catalog, Certificate, ColoringError};
use p6c4::detect::Pattern;
use p6c4::enumerate::{self, Mode, SearchConfig};
use p6c4::reductions::{
    build_ghi, build_nae, check_equivalence, check_freeness, nice_check, parse_dimacs,
    parse_nae_json, GadgetKind, LabeledGraph,
};
use p6c4::structure::{check_all_c5, check_properties, check_size_bounds, classify, decompose, induced_c5s};
use p6c4::{from_graph6, named, to_graph6, Graph};

const CATALOG_DIR_VAR: &str = "P6C4_CATALOG_DIR";

#[derive(Parser)]
#[command(name = "p6c4", version, about = "Colouring toolkit for (P6, C4)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a graph, or certify it with a colouring or a catalogued obstruction.
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        /// Produce a certificate (k = 3 or 4).
        #[arg(long)]
        certify: bool,
        /// Refuse inputs containing an induced P6 or C4.
        #[arg(long)]
        strict: bool,
        /// Catalog graph6 file; defaults to $P6C4_CATALOG_DIR/catalog_k{k}.g6 or the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for an induced copy of a pattern.
    Detect {
        /// P<t>, C<l>, K<n>, W5, or g6:<graph6>
        #[arg(long)]
        pattern: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Property reports for the partition around induced five-cycles.
    Props {
        #[arg(long = "in")]
        input: PathBuf,
        /// Report every induced C5 in both orientations, not just the first.
        #[arg(long)]
        all_c5: bool,
        /// Also report the size bounds for this palette.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Clique-cutset decomposition tree.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustive search over small graphs.
    Enumerate {
        #[arg(long, value_enum)]
        mode: EnumMode,
        /// Palette (critical mode) or criticality (nice mode); ignored for family.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Comma-separated forbidden patterns; `none` for no restriction.
        #[arg(long, default_value = "P6,C4")]
        forbid: String,
        /// Include disconnected graphs (family mode).
        #[arg(long)]
        disconnected: bool,
        /// Skip the obstruction-containment prune.
        #[arg(long)]
        no_containment_prune: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Checkpoint directory; an existing checkpoint there is resumed.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Worker threads; 0 uses the available parallelism.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Build a hardness gadget from an instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Nice critical component (graph6 or edge-list JSON); default C7.
        #[arg(long)]
        critical: Option<PathBuf>,
        /// DIMACS CNF (ghi) or JSON {"n", "clauses"} (nae).
        #[arg(long)]
        instance: PathBuf,
        /// graph6 output; the role sidecar goes next to it with a .json extension.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare satisfiability with colourability by exhaustive search.
        #[arg(long)]
        check: bool,
    },
    /// Verify a catalog or look a graph up in it.
    Catalog {
        #[arg(value_enum)]
        action: CatalogAction,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMode {
    Family,
    Critical,
    Nice,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Ghi,
    Nae,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogAction {
    Verify,
    Lookup,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

const NEGATIVE: u8 = 1;
const OBSTRUCTED: u8 = 2;
const TRAP: u8 = 3;
const NOT_FREE: u8 = 4;
const USAGE: u8 = 64;
const DATA: u8 = 65;
const NO_INPUT: u8 = 66;
const INTERNAL: u8 = 70;
const CANT_CREATE: u8 = 73;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("p6c4: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(NO_INPUT, format!("{}: {e}", path.display())))
}

/// One graph: edge-list JSON for `.json` files, otherwise the first
/// non-empty graph6 line.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    let bad = |e: &dyn Display| fail(DATA, format!("{}: {e}", path.display()));
    if path.extension().is_some_and(|e| e == "json") {
        return Graph::from_edge_list_json(&text).map_err(|e| bad(&e));
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| bad(&"no graph found"))?;
    from_graph6(line).map_err(|e| bad(&e))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| fail(CANT_CREATE, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn parse_pattern(spec: &str) -> Result<Graph, Failure> {
    let usage = || fail(USAGE, format!("unknown pattern `{spec}`"));
    if let Some(code) = spec.strip_prefix("g6:") {
        return from_graph6(code).map_err(|e| fail(USAGE, format!("pattern `{spec}`: {e}")));
    }
    if spec == "W5" {
        return Ok(named::wheel(5));
    }
    let (head, tail) = spec.split_at(1.min(spec.len()));
    let n: usize = tail.parse().map_err(|_| usage())?;
    match head {
        "P" if n >= 1 => Ok(named::path(n)),
        "C" if n >= 3 => Ok(named::cycle(n)),
        "K" if n >= 1 => Ok(named::complete(n)),
        _ => Err(usage()),
    }
}

fn load_catalog(k: usize, explicit: Option<&Path>) -> Result<Catalog, Failure> {
    let path = match explicit {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(CATALOG_DIR_VAR).map(|d| PathBuf::from(d).join(format!("catalog_k{k}.g6"))),
    };
    match path {
        Some(p) => Catalog::load(&p).map_err(|e| {
            let code = if matches!(e, p6c4::coloring::CatalogError::Io { .. }) { NO_INPUT } else { DATA };
            fail(code, e)
        }),
        None => Catalog::builtin(k).map_err(|e| fail(USAGE, e)),
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Color {
            k,
            input,
            certify,
            strict,
            catalog,
            out,
        } => {
            let g = read_graph(&input)?;
            if !certify {
                if strict {
                    return Err(fail(USAGE, "--strict requires --certify"));
                }
                let c = k_color(&g, k).map_err(|e| fail(USAGE, e))?;
                let code = if c.is_some() { 0 } else { NEGATIVE };
                let body = match c {
                    Some(c) => json!({"result": "colored", "k": k, "coloring": c.as_map()}),
                    None => json!({"result": "not_colorable", "k": k}),
                };
                write_out(out.as_deref(), &to_json(&body))?;
                return Ok(code);
            }
            let cat = load_catalog(k, catalog.as_deref())?;
            let cert = match certify_color(&g, k, &cat, strict) {
                Ok(c) => c,
                Err(ColoringError::NotP6C4Free { pattern, witness }) => {
                    let body = json!({"result": "not_p6c4_free", "k": k, "pattern": pattern, "witness": witness});
                    write_out(out.as_deref(), &to_json(&body))?;
                    eprintln!("p6c4: input contains an induced {pattern}");
                    return Ok(NOT_FREE);
                }
                Err(e) => return Err(fail(USAGE, e)),
            };
            write_out(out.as_deref(), &to_json(&cert.to_json(k)))?;
            Ok(match cert {
                Certificate::Colored { .. } => 0,
                Certificate::Obstructed { .. } => OBSTRUCTED,
                Certificate::Uncataloged { graph6, .. } => {
                    eprintln!("p6c4: minimal obstruction {graph6} is not in the catalog");
                    TRAP
                }
            })
        }
        Command::Detect { pattern, input } => {
            let p = parse_pattern(&pattern)?;
            let g = read_graph(&input)?;
            let body = match Pattern::new(p).find(&g) {
                Some(e) => json!({"pattern": pattern, "free": false, "witness": e.map}),
                None => json!({"pattern": pattern, "free": true}),
            };
            print!("{}", to_json(&body));
            Ok(0)
        }
        Command::Props { input, all_c5, k } => {
            let g = read_graph(&input)?;
            let reports = if all_c5 {
                check_all_c5(&g)
            } else {
                match induced_c5s(&g).into_iter().next() {
                    Some(c) => vec![check_properties(&g, &c, &classify(&g, &c)).map_err(|e| fail(INTERNAL, e))?],
                    None => vec![],
                }
            };
            let bounds: Vec<_> = match k {
                Some(k) => reports
                    .iter()
                    .map(|r| {
                        let c = p6c4::structure::C5Embedding::new(&g, r.cycle).expect("reported cycles are induced");
                        check_size_bounds(&g, &c, &classify(&g, &c), k)
                    })
                    .collect(),
                None => vec![],
            };
            let violated = reports.iter().any(|r| r.violations().next().is_some())
                || bounds.iter().any(|b| b.violations().next().is_some());
            let body = if k.is_some() {
                json!({"properties": reports, "bounds": bounds})
            } else {
                serde_json::to_value(&reports).expect("reports serialize")
            };
            print!("{}", to_json(&body));
            Ok(if violated { TRAP } else { 0 })
        }
        Command::Decompose { input } => {
            let g = read_graph(&input)?;
            print!("{}", to_json(&decompose(&g)));
            Ok(0)
        }
        Command::Enumerate {
            mode,
            k,
            max_n,
            forbid,
            disconnected,
            no_containment_prune,
            out,
            resume,
            workers,
        } => run_enumerate(
            mode,
            k,
            max_n,
            &forbid,
            disconnected,
            no_containment_prune,
            out,
            resume,
            workers,
        ),
        Command::Reduce {
            kind,
            critical,
            instance,
            out,
            check,
        } => run_reduce(kind, critical, instance, out, check),
        Command::Catalog { action, k, file, input } => {
            let cat = load_catalog(k, file.as_deref())?;
            match action {
                CatalogAction::Verify => {
                    let report = cat.verify();
                    print!("{}", to_json(&report));
                    Ok(if report.all_pass { 0 } else { NEGATIVE })
                }
                CatalogAction::Lookup => {
                    let input = input.ok_or_else(|| fail(USAGE, "lookup needs --in"))?;
                    let g = read_graph(&input)?;
                    match cat.lookup(&g) {
                        Some(e) => {
                            print!("{}", to_json(&json!({"found": true, "id": e.id})));
                            Ok(0)
                        }
                        None => {
                            print!("{}", to_json(&json!({"found": false})));
                            Ok(NEGATIVE)
                        }
                    }
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_enumerate(
    mode: EnumMode,
    k: usize,
    max_n: usize,
    forbid: &str,
    disconnected: bool,
    no_containment_prune: bool,
    out: Option<PathBuf>,
    resume: Option<PathBuf>,
    workers: usize,
) -> Result<u8, Failure> {
    let forbidden: Vec<Graph> = if forbid == "none" || forbid.is_empty() {
        vec![]
    } else {
        forbid.split(',').map(|s| parse_pattern(s.trim())).collect::<Result<_, _>>()?
    };
    if max_n == 0 {
        return Err(fail(USAGE, "--max-n must be at least 1"));
    }
    let palette = match mode {
        EnumMode::Nice if k < 2 => return Err(fail(USAGE, "nice mode needs k >= 2")),
        EnumMode::Nice => k - 1,
        _ => k,
    };
    if palette == 0 && !matches!(mode, EnumMode::Family) {
        return Err(fail(USAGE, "palette must be at least 1"));
    }
    let mut cfg = SearchConfig::new(palette, max_n).forbidding(forbidden);
    cfg.connected_only = !disconnected;
    cfg.prune.containment = !no_containment_prune;
    cfg.workers = workers;
    cfg.checkpoint = resume;
    let search_mode = match mode {
        EnumMode::Family => Mode::Family,
        _ => Mode::Critical,
    };
    let started = std::time::Instant::now();
    let outcome = enumerate::run(&cfg, search_mode, &mut |s| {
        eprintln!(
            "order {:>2}: kept {:>8}, emitted {:>4} ({:.1?})",
            s.order,
            s.frontier,
            s.emitted,
            started.elapsed()
        )
    })
    .map_err(|e| match e {
        enumerate::EnumError::Checkpoint(_) => fail(DATA, e),
        e => fail(INTERNAL, e),
    })?;

    let (g6, manifest) = match mode {
        EnumMode::Family => {
            let mut g6 = String::new();
            for g in &outcome.graphs {
                g6.push_str(&to_graph6(g));
                g6.push('\n');
            }
            let manifest = json!({
                "mode": "family",
                "n_max_searched": max_n,
                "forbidden": cfg.forbidden.iter().map(to_graph6).collect::<Vec<_>>(),
                "connected_only": cfg.connected_only,
                "count": outcome.graphs.len(),
                "levels": outcome.levels,
            });
            (g6, to_json(&manifest))
        }
        EnumMode::Critical => {
            let lower = if k >= 4 { load_catalog(k - 1, None).ok() } else { None };
            let cat = enumerate::catalog_from(&cfg, outcome.graphs, lower.as_ref());
            cat.to_texts()
        }
        EnumMode::Nice => {
            let mut g6 = String::new();
            let mut entries = Vec::new();
            for g in &outcome.graphs {
                if let Some(w) = nice_check(g, k) {
                    let line = to_graph6(g);
                    g6.push_str(&line);
                    g6.push('\n');
                    entries.push(json!({"graph6": line, "n": g.order(), "witness": w}));
                }
            }
            let manifest = json!({
                "mode": "nice",
                "k": k,
                "n_max_searched": max_n,
                "forbidden": cfg.forbidden.iter().map(to_graph6).collect::<Vec<_>>(),
                "entries": entries,
            });
            (g6, to_json(&manifest))
        }
    };
    match out {
        Some(path) => {
            write_out(Some(&path), &g6)?;
            write_out(Some(&path.with_extension("json")), &manifest)?;
        }
        None => print!("{manifest}"),
    }
    Ok(0)
}

fn run_reduce(
    kind: ReduceKind,
    critical: Option<PathBuf>,
    instance: PathBuf,
    out: Option<PathBuf>,
    check: bool,
) -> Result<u8, Failure> {
    let text = read(&instance)?;
    let bad = |e: &dyn Display| fail(DATA, format!("{}: {e}", instance.display()));
    let (built, inst, h, k): (LabeledGraph, _, Option<Graph>, usize) = match kind {
        ReduceKind::Ghi => {
            let inst = parse_dimacs(&text).map_err(|e| bad(&e))?;
            let h = match &critical {
                Some(p) => read_graph(p)?,
                None => named::cycle(7),
            };
            let k = chromatic_number(&h);
            let w = nice_check(&h, k)
                .ok_or_else(|| fail(DATA, format!("component is not a nice {k}-critical graph")))?;
            let built = build_ghi(&h, &w, &inst).map_err(|e| fail(DATA, e))?;
            (built, inst, Some(h), k)
        }
        ReduceKind::Nae => {
            if critical.is_some() {
                return Err(fail(USAGE, "--critical applies to ghi only"));
            }
            let inst = parse_nae_json(&text).map_err(|e| bad(&e))?;
            let built = build_nae(&inst).map_err(|e| fail(DATA, e))?;
            (built, inst, None, 4)
        }
    };
    if let Some(path) = &out {
        write_out(Some(path), &format!("{}\n", to_graph6(&built.graph)))?;
        write_out(Some(&path.with_extension("json")), &format!("{}\n", built.roles_json()))?;
    }
    let mut body = json!({
        "kind": match kind { ReduceKind::Ghi => "ghi", ReduceKind::Nae => "nae" },
        "order": built.graph.order(),
        "size": built.graph.size(),
        "palette": built.palette(),
    });
    if out.is_none() {
        body["graph6"] = json!(to_graph6(&built.graph));
    }
    let mut code = 0;
    if check {
        let gadget = match kind {
            ReduceKind::Ghi => GadgetKind::Ghi,
            ReduceKind::Nae => GadgetKind::Nae,
        };
        let eq = check_equivalence(gadget, h.as_ref(), &inst, k).map_err(|e| fail(USAGE, e))?;
        let verdict = match (eq.satisfiable, eq.colorable) {
            (true, true) => "both satisfiable/colorable",
            (false, false) => "both unsatisfiable/non-colorable",
            _ => "mismatch",
        };
        if !eq.holds() {
            code = TRAP;
        }
        let freeness = match kind {
            ReduceKind::Ghi => check_freeness(&built, &[6, 7], &[6, 7, 8, 9]),
            ReduceKind::Nae => check_freeness(&built, &[7], &[5]),
        };
        if !freeness.all_hold() {
            code = TRAP;
        }
        body["satisfiable"] = json!(eq.satisfiable);
        body["colorable"] = json!(eq.colorable);
        body["verdict"] = json!(verdict);
        body["freeness"] = serde_json::to_value(&freeness).expect("report serializes");
        if let Err(e) = built.check_role_laws() {
            body["role_laws"] = json!(e);
            code = TRAP;
        }
    }
    print!("{}", to_json(&body));
    Ok(code)
}
