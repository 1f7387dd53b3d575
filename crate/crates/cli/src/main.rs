//! `lcmlat`: command-line front end for LCM lattices, Betti tables, edge
//! ideal lattices and the theorem verification harness.

mod input;

use std::io::IsTerminal;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use lcm_lattice::constructions::{fano_lattice, fixture, mn_lattice, subspace_lattice, Fixture};
use lcm_lattice::resolution::is_pure;
use lcm_lattice::verify::{check_instance, Outcome, VerificationResult, Verifier, VerifyParams, CATALOG};
use lcm_lattice::{
    betti_table_checked, graph::graph_lattice_checks, phan_ideal, projective_dimension,
    taylor_is_minimal, FieldSpec, FiniteLattice, Graph, MonomialIdeal, PropertyReport,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lcmlat", version, about = "LCM lattices, Phan ideals and Betti numbers")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Field characteristic: 0 or a supported prime.
    #[arg(long = "char", global = true, default_value_t = 32003)]
    characteristic: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Commands on a monomial ideal (text or JSON; lattices and graphs are converted).
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Commands on a finite lattice.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Commands on a simple graph and its edge ideal.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Print a constructed lattice or graph as JSON.
    #[command(subcommand)]
    Make(MakeCmd),
    /// Run theorem checks from the catalog.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum IdealCmd {
    /// LCM lattice and its property report.
    Lcm { file: String },
    /// Graded Betti table of S/I.
    Betti {
        file: String,
        #[arg(long)]
        multigraded: bool,
    },
    /// Projective dimension of S/I.
    Pd { file: String },
    /// Height of I (minimum vertex cover of the supports).
    Height { file: String },
    /// Whether S/I is Cohen-Macaulay.
    Cm { file: String },
    /// Whether the Taylor resolution is minimal.
    TaylorMinimal { file: String },
    /// Whether the Betti table is pure, with its degree sequence.
    Pure { file: String },
    /// Squarefree polarization.
    Polarize { file: String },
    /// Whether the ideal is the Phan ideal of its own LCM lattice.
    Minimal { file: String },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Property report.
    Check { file: String },
    /// Phan ideal of an atomic lattice.
    Phan { file: String },
    /// Möbius function, by default from bottom to top.
    Mobius {
        file: String,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
    },
}

#[derive(Args)]
struct GraphSource {
    file: Option<String>,
    /// Named fixture instead of a file.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Lattice properties of the edge ideal and every graph characterization.
    Props(GraphSource),
    /// The edge ideal.
    EdgeIdeal(GraphSource),
}

#[derive(Subcommand)]
enum MakeCmd {
    /// Subspaces of GF(q)^r.
    Subspace {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
    },
    /// Height-two lattice with n atoms.
    Mn {
        #[arg(long)]
        n: usize,
    },
    /// Points and lines of the Fano plane.
    Fano,
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        n: usize,
    },
    /// A named fixture.
    Fixture { id: String },
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog id.
    id: Option<String>,
    /// Run every catalog id.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// List the catalog.
    #[arg(long)]
    list: bool,
    /// Largest graph order; 7 and 8 use isomorphism classes.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Random instances per seeded case.
    #[arg(long)]
    instances: Option<usize>,
    /// Check one serialized instance (as printed with a counterexample).
    #[arg(long, requires = "id")]
    instance: Option<String>,
}

const EXIT_COUNTEREXAMPLE: u8 = 2;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = Out { json: cli.json };
    let field = FieldSpec::new(cli.characteristic)?;
    match cli.command {
        Command::Ideal(cmd) => ideal(cmd, field, &out),
        Command::Lattice(cmd) => lattice(cmd, &out),
        Command::Graph(cmd) => graph(cmd, &out),
        Command::Make(cmd) => make(cmd),
        Command::Verify(args) => verify(args, field, &out),
    }
}

struct Out {
    json: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string(value)?);
        } else {
            print!("{}", text());
        }
        Ok(())
    }

    fn ideal(&self, i: &MonomialIdeal) -> Result<()> {
        self.emit(&i.to_json(), || i.to_text())
    }
}

fn colored(text: &str, code: &str) -> String {
    let enabled = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    if enabled {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn lattice_text(l: &FiniteLattice) -> String {
    let mut s = format!("{} elements, height {}\n", l.size(), l.height());
    if let Some(labels) = l.labels() {
        for (k, m) in labels.iter().enumerate() {
            s.push_str(&format!("{k:>4}  {m}\n"));
        }
    }
    let covers: Vec<String> = l.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
    s.push_str(&format!("covers: {}\n", covers.join(" ")));
    s
}

fn ideal(cmd: IdealCmd, field: FieldSpec, out: &Out) -> Result<ExitCode> {
    match cmd {
        IdealCmd::Lcm { file } => {
            let l = input::load_ideal(&file)?.lcm_lattice();
            let report = PropertyReport::compute(&l);
            out.emit(
                &serde_json::json!({"lattice": l.to_json(), "height": l.height(), "properties": report}),
                || format!("{}{}", lattice_text(&l), report.render_text()),
            )?;
        }
        IdealCmd::Betti { file, multigraded } => {
            let t = betti_table_checked(&input::load_ideal(&file)?, field);
            let json = serde_json::json!({
                "characteristic": field.characteristic(),
                "entries": t.to_json().entries,
                "char0_agrees": t.char0_agrees(),
            });
            out.emit(&json, || {
                let mut s = format!("field {field}\n{}", t.render_text());
                if multigraded {
                    s.push('\n');
                    s.push_str(&t.render_multigraded());
                }
                match t.char0_agrees() {
                    Some(true) => s.push_str("rational check: agrees\n"),
                    Some(false) => s.push_str("rational check: DIFFERS\n"),
                    None => {}
                }
                s
            })?;
        }
        IdealCmd::Pd { file } => {
            let pd = projective_dimension(&input::load_ideal(&file)?, field);
            out.emit(&serde_json::json!({"pd": pd}), || format!("{pd}\n"))?;
        }
        IdealCmd::Height { file } => {
            let h = input::load_ideal(&file)?.height();
            out.emit(&serde_json::json!({"height": h}), || format!("{h}\n"))?;
        }
        IdealCmd::Cm { file } => {
            let i = input::load_ideal(&file)?;
            let (pd, h) = (projective_dimension(&i, field), i.height());
            out.emit(
                &serde_json::json!({"cohen_macaulay": pd == h, "pd": pd, "height": h}),
                || format!("{} (pd {pd}, height {h})\n", pd == h),
            )?;
        }
        IdealCmd::TaylorMinimal { file } => {
            let i = input::load_ideal(&file)?;
            let r = taylor_is_minimal(&i);
            out.emit(&r, || match &r.witness {
                Some((_, g)) => format!(
                    "false (generator {} divides the lcm of the others)\n",
                    i.generators()[*g]
                ),
                None => "true\n".into(),
            })?;
        }
        IdealCmd::Pure { file } => {
            let p = is_pure(&input::load_ideal(&file)?, field);
            out.emit(&p, || {
                let degrees: Vec<String> = p.degrees.iter().flatten().map(u32::to_string).collect();
                if p.pure {
                    format!("true ({})\n", degrees.join(","))
                } else {
                    "false\n".into()
                }
            })?;
        }
        IdealCmd::Polarize { file } => out.ideal(&input::load_ideal(&file)?.polarize())?,
        IdealCmd::Minimal { file } => {
            let m = input::load_ideal(&file)?.is_minimal();
            out.emit(&serde_json::json!({"minimal": m}), || format!("{m}\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn lattice(cmd: LatticeCmd, out: &Out) -> Result<ExitCode> {
    match cmd {
        LatticeCmd::Check { file } => {
            let l = input::load_lattice(&file)?;
            let report = PropertyReport::compute(&l);
            out.emit(
                &serde_json::json!({"n": l.size(), "height": l.height(), "properties": report}),
                || {
                    format!(
                        "{} elements, height {}\n{}",
                        l.size(),
                        l.height(),
                        report.render_text()
                    )
                },
            )?;
        }
        LatticeCmd::Phan { file } => out.ideal(&phan_ideal(&input::load_lattice(&file)?)?)?,
        LatticeCmd::Mobius { file, from, to } => {
            let l = input::load_lattice(&file)?;
            let (x, y) = (from.unwrap_or(l.bottom()), to.unwrap_or(l.top()));
            let mu = l.mobius(x, y)?;
            out.emit(&serde_json::json!({"from": x, "to": y, "mobius": mu}), || format!("{mu}\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph(cmd: GraphCmd, out: &Out) -> Result<ExitCode> {
    match cmd {
        GraphCmd::Props(src) => {
            let g = input::load_graph(src.file.as_deref(), src.fixture.as_deref())?;
            let r = graph_lattice_checks(&g)?;
            let broken = r.violations().count();
            out.emit(&r, || {
                let mut s = format!(
                    "{} vertices, {} edges, lattice of {} elements\n{}",
                    r.n,
                    r.edges.len(),
                    r.lattice_size,
                    r.properties.render_text()
                );
                s.push_str(&format!("linearly presented  {}\n\n", r.linearly_presented));
                for c in &r.checks {
                    let mark = if c.holds() {
                        colored("ok  ", "32")
                    } else {
                        colored("FAIL", "31")
                    };
                    s.push_str(&format!(
                        "{mark}  [{}] {} ({} / {})\n",
                        c.theorem.id(),
                        c.statement,
                        c.left,
                        c.right
                    ));
                }
                s
            })?;
            if broken > 0 {
                return Ok(ExitCode::from(EXIT_COUNTEREXAMPLE));
            }
        }
        GraphCmd::EdgeIdeal(src) => {
            let g = input::load_graph(src.file.as_deref(), src.fixture.as_deref())?;
            out.ideal(&g.edge_ideal()?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

/// Always JSON, so the output can be piped into any other subcommand.
fn make(cmd: MakeCmd) -> Result<ExitCode> {
    let graph = |g: lcm_lattice::Result<Graph>| -> Result<()> { print_json(&g?.to_json()) };
    match cmd {
        MakeCmd::Subspace { q, r } => print_json(&subspace_lattice(q, r)?.to_json())?,
        MakeCmd::Mn { n } => print_json(&mn_lattice(n)?.to_json())?,
        MakeCmd::Fano => print_json(&fano_lattice().to_json())?,
        MakeCmd::Path { n } => graph(Graph::path(n))?,
        MakeCmd::Cycle { n } => graph(Graph::cycle(n))?,
        MakeCmd::Complete { n } => graph(Graph::complete(n))?,
        MakeCmd::Star { n } => graph(Graph::star(n))?,
        MakeCmd::Fixture { id } => match fixture(&id) {
            Some(Fixture::Graph(g)) => print_json(&g.to_json())?,
            Some(Fixture::Lattice(l)) => print_json(&l.to_json())?,
            None => {
                let known: Vec<&str> = lcm_lattice::constructions::fixture_ids().collect();
                return Err(anyhow!("unknown fixture {id}; known: {}", known.join(", ")));
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

const SHOWN_COUNTEREXAMPLES: usize = 5;

fn result_text(r: &VerificationResult) -> String {
    let verdict = match r.verdict {
        Outcome::Pass => colored("PASS", "32"),
        Outcome::Fail => colored("FAIL", "31"),
    };
    let mut s = format!(
        "{verdict} {:<32} {:>6} instances  {:>8.2}s  seed {}  field {}\n",
        r.id,
        r.instances_checked,
        r.elapsed.as_secs_f64(),
        r.seed,
        r.field
    );
    for note in &r.notes {
        s.push_str(&format!("     note: {note}\n"));
    }
    for c in r.counterexamples.iter().take(SHOWN_COUNTEREXAMPLES) {
        s.push_str(&format!("     counterexample {}\n       {}\n       $ {}\n", c.instance, c.detail, c.reproduce));
    }
    if r.counterexamples.len() > SHOWN_COUNTEREXAMPLES {
        s.push_str(&format!(
            "     ... {} more counterexamples (use --json for all)\n",
            r.counterexamples.len() - SHOWN_COUNTEREXAMPLES
        ));
    }
    s
}

fn verify(args: VerifyArgs, field: FieldSpec, out: &Out) -> Result<ExitCode> {
    if args.list {
        let entries: Vec<_> = CATALOG
            .iter()
            .map(|c| serde_json::json!({"id": c.id, "statement": c.statement}))
            .collect();
        out.emit(&entries, || {
            CATALOG
                .iter()
                .map(|c| format!("{:<32} {}\n", c.id, c.statement))
                .collect()
        })?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(path) = &args.instance {
        let id = args.id.as_deref().expect("clap requires an id");
        let value: serde_json::Value = serde_json::from_str(&input::read_source(path)?)?;
        let detail = check_instance(id, &value, field)?;
        out.emit(&serde_json::json!({"id": id, "holds": detail.is_none(), "detail": detail}), || {
            match &detail {
                None => format!("{} {id}\n", colored("PASS", "32")),
                Some(d) => format!("{} {id}: {d}\n", colored("FAIL", "31")),
            }
        })?;
        return Ok(if detail.is_none() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_COUNTEREXAMPLE)
        });
    }
    let verifier = Verifier::new(VerifyParams {
        max_n: args.max_n,
        seed: args.seed,
        field,
        jobs: args.jobs,
        instances: args.instances,
    })?;
    let results = match (&args.id, args.all) {
        (Some(id), false) => vec![verifier.run(id)?],
        (None, true) => verifier.run_all()?,
        _ => return Err(anyhow!("give a catalog id, --all or --list")),
    };
    if out.json {
        if args.all {
            print_json(&results)?;
        } else {
            print_json(&results[0])?;
        }
    } else {
        for r in &results {
            print!("{}", result_text(r));
        }
    }
    let failed = results.iter().any(|r| r.verdict == Outcome::Fail);
    Ok(if failed {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    })
}
