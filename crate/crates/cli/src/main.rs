use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sipoly::census::{compare_censuses, si_census_expand, si_census_oracle, Census};
use sipoly::document::{export, parse_input, to_json, Format};
use sipoly::duality::{find_dualities, strong_involution, strong_involutions, StrongInvolution};
use sipoly::expansion::{enumerate_expansions, expand_step, ExpansionMove};
use sipoly::polyhedron::wheel_rim;
use sipoly::reduction::reduce_to_wheel;
use sipoly::squares::{graph_of_squares, induced_cell_map, is_fixed_point_free};
use sipoly::{dual, validate, CanonicalCode, Polyhedron};

/// Tools for strongly involutive self-dual polyhedra.
///
/// Map files are JSON: {"vertices": n, "rotations": [[...], ...]} with
/// counterclockwise neighbor lists, or {"adjacency": [[...], ...]}.
#[derive(Parser)]
#[command(name = "sipoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polyhedron and report V, E, F and wheel status
    Check { file: PathBuf },
    /// Print the dual polyhedron as a map document
    Dual { file: PathBuf },
    /// List every duality isomorphism (vertex -> face)
    Dualities {
        file: PathBuf,
        /// Only the strong involutions
        #[arg(long)]
        strong: bool,
    },
    /// Remove-contract down to a wheel
    Reduce {
        file: PathBuf,
        /// Print every step
        #[arg(long)]
        trace: bool,
    },
    /// List the expansions (vertex split plus diagonal of its face)
    Expand {
        file: PathBuf,
        /// Every valid move, not one per distinct result
        #[arg(long)]
        all: bool,
    },
    /// Census of strongly involutive polyhedra up to a vertex bound
    Census {
        #[arg(long, value_parser = clap::value_parser!(u16).range(4..=12))]
        max_vertices: u16,
        /// Build it from all polyhedra instead of by expansion
        #[arg(long)]
        oracle: bool,
        /// Build both ways and compare
        #[arg(long, conflicts_with = "oracle")]
        compare: bool,
        /// Write the census JSON here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check the graph of squares and the cell map of the strong involution
    Squares { file: PathBuf },
    /// Write a polyhedron as json, dot or svg
    Export {
        file: PathBuf,
        #[arg(long)]
        format: String,
    },
}

enum Failure {
    /// Bad invocation or unreadable input; exit code 2.
    Usage(String),
    /// The input or a check failed; exit code 1.
    Invalid(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("sipoly: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("sipoly: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SIPOLY_THREADS") else { return Ok(()) };
    let threads = value
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("SIPOLY_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| Failure::Usage(e.to_string()))
}

fn load(path: &Path) -> Result<Polyhedron, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let map = parse_input(&bytes).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    validate(map).map_err(|e| Failure::Invalid(format!("{}: not a polyhedron: {e}", path.display())))
}

fn require_involution(p: &Polyhedron) -> Result<StrongInvolution, Failure> {
    strong_involution(p).ok_or_else(|| Failure::Invalid("the polyhedron has no strong involution".into()))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Check { file } => check(&load(&file)?),
        Command::Dual { file } => Ok(to_json(&dual(&load(&file)?).polyhedron) + "\n"),
        Command::Dualities { file, strong } => dualities(&load(&file)?, strong),
        Command::Reduce { file, trace } => reduce(&load(&file)?, trace),
        Command::Expand { file, all } => expand(&load(&file)?, all),
        Command::Census { max_vertices, oracle, compare, output } => {
            census(max_vertices.into(), oracle, compare, output.as_deref())
        }
        Command::Squares { file } => squares(&load(&file)?),
        Command::Export { file, format } => {
            let format: Format =
                format.parse().map_err(|e: sipoly::document::DocumentError| Failure::Usage(e.to_string()))?;
            let p = load(&file)?;
            let mut out = export(&p, format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn check(p: &Polyhedron) -> Result<String, Failure> {
    let mut out = String::new();
    let _ = writeln!(out, "polyhedron: V={} E={} F={}", p.vertex_count(), p.edge_count(), p.face_count());
    match wheel_rim(p) {
        Some(n) => {
            let _ = writeln!(out, "wheel: yes (rim {n})");
        }
        None => out.push_str("wheel: no\n"),
    }
    Ok(out)
}

fn face_label(p: &Polyhedron, f: usize) -> String {
    let names: Vec<String> = p.faces().vertex_set(f).iter().map(usize::to_string).collect();
    format!("{{{}}}", names.join(","))
}

fn images_line(p: &Polyhedron, images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().enumerate().map(|(v, &f)| format!("{v}->{}", face_label(p, f))).collect();
    parts.join(" ")
}

fn dualities(p: &Polyhedron, strong: bool) -> Result<String, Failure> {
    let mut out = String::new();
    if strong {
        let found = strong_involutions(p);
        let _ = writeln!(out, "{} strong involution(s)", found.len());
        for t in &found {
            let _ = writeln!(out, "{}", images_line(p, t.images()));
        }
    } else {
        let found = find_dualities(p);
        let _ = writeln!(out, "{} duality isomorphism(s)", found.len());
        for d in &found {
            let _ = writeln!(out, "{}", images_line(p, d.images()));
        }
    }
    Ok(out)
}

fn reduce(p: &Polyhedron, trace: bool) -> Result<String, Failure> {
    let tau = require_involution(p)?;
    let result = reduce_to_wheel(p, &tau).map_err(|e| Failure::Invalid(e.to_string()))?;
    let mut out = String::new();
    if trace {
        for (i, step) in result.steps.iter().enumerate() {
            let q = &step.polyhedron;
            let _ = writeln!(
                out,
                "step {}: contract {}-{}, delete {}-{} -> V={} E={} F={} code {}",
                i + 1,
                step.contracted.0,
                step.contracted.1,
                step.deleted.0,
                step.deleted.1,
                q.vertex_count(),
                q.edge_count(),
                q.face_count(),
                step.code
            );
        }
    }
    let _ = writeln!(out, "reached wheel with rim {} after {} step(s)", result.terminal_rim, result.steps.len());
    Ok(out)
}

fn describe_move(m: &ExpansionMove) -> String {
    format!(
        "split {} keeping {} darts from index {}, diagonal {}-{}, {} side to the old vertex",
        m.vertex,
        m.arc_len,
        m.arc_start,
        m.diagonal.0,
        m.diagonal.1,
        if m.a_takes_forward_side { "forward" } else { "backward" }
    )
}

fn expand(p: &Polyhedron, all: bool) -> Result<String, Failure> {
    let tau = require_involution(p)?;
    let moves = enumerate_expansions(p, &tau);
    let mut results: BTreeMap<CanonicalCode, Vec<&ExpansionMove>> = BTreeMap::new();
    for m in &moves {
        let x = expand_step(p, &tau, m).map_err(|e| Failure::Invalid(e.to_string()))?;
        results.entry(x.polyhedron.canonical_code()).or_default().push(m);
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} valid move(s), {} distinct result(s)", moves.len(), results.len());
    for (code, ms) in &results {
        let _ = writeln!(out, "{code}");
        let shown = if all { ms.len() } else { 1 };
        for m in &ms[..shown] {
            let _ = writeln!(out, "  {}", describe_move(m));
        }
    }
    Ok(out)
}

fn census(max_v: usize, oracle: bool, compare: bool, output: Option<&Path>) -> Result<String, Failure> {
    if compare {
        let a = si_census_expand(max_v);
        let b = si_census_oracle(max_v);
        let report = compare_censuses(&a, &b).map_err(|e| Failure::Invalid(e.to_string()))?;
        let mut out = String::from("  V  expansion  oracle\n");
        for (v, (x, y)) in &report.counts {
            let _ = writeln!(out, "{v:>3}  {x:>9}  {y:>6}");
        }
        if report.is_match() {
            out.push_str("symmetric difference: empty\n");
            write_census(&a, output)?;
            return Ok(out);
        }
        for (label, side) in [("only by expansion", &report.only_in_first), ("only in oracle", &report.only_in_second)]
        {
            for (v, codes) in side {
                for code in codes {
                    let _ = writeln!(out, "{label} (V={v}): {code}");
                }
            }
        }
        print!("{out}");
        return Err(Failure::Invalid("the two censuses differ".into()));
    }
    let c = if oracle { si_census_oracle(max_v) } else { si_census_expand(max_v) };
    match output {
        Some(_) => {
            write_census(&c, output)?;
            let counts: Vec<String> = c.counts().iter().map(|(v, n)| format!("V={v}: {n}")).collect();
            Ok(format!("{} entries ({})\n", c.len(), counts.join(", ")))
        }
        None => Ok(c.to_json() + "\n"),
    }
}

fn write_census(c: &Census, output: Option<&Path>) -> Result<(), Failure> {
    if let Some(path) = output {
        std::fs::write(path, c.to_json() + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn squares(p: &Polyhedron) -> Result<String, Failure> {
    let s = graph_of_squares(p);
    let q = &s.polyhedron;
    let mut out = String::new();
    let mut ok = true;
    let quads = q.faces().lengths().all(|k| k == 4);
    ok &= quads && q.face_count() == 2 * p.edge_count();
    let _ = writeln!(
        out,
        "graph of squares: V={} E={} F={} (all quadrilaterals: {})",
        q.vertex_count(),
        q.edge_count(),
        q.face_count(),
        yes_no(quads)
    );
    match strong_involution(p) {
        None => out.push_str("no strong involution\n"),
        Some(tau) => {
            let m = induced_cell_map(p, &tau);
            let checks = [
                ("automorphism", m.is_automorphism(&s)),
                ("involution", m.is_involution()),
                ("fixed-point-free", is_fixed_point_free(&s, &m)),
            ];
            for (name, pass) in checks {
                ok &= pass;
                let _ = writeln!(out, "cell map {name}: {}", yes_no(pass));
            }
        }
    }
    if ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Invalid("graph of squares check failed".into()))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
