//! `chiefs`: inspect permutation groups, decide embedding predicates and run
//! the statement verifier.
//!
//! Exit codes: 0 success, 1 false verdict or counterexample, 2 usage or
//! parse error, 3 cap exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use chiefs::io::{load_grp, load_sub, parse_inline, write_grp};
use chiefs::{Caps, CharKind, FormationTag, Group, GroupClass, GroupError, PredicateId, SubgroupRef};
use chiefs_verify::corpus::builtin;
use chiefs_verify::runner::{run_group, RunOptions, Suite};
use chiefs_verify::{run_corpus, CorpusReport, Manifest, StatementId};

#[derive(Debug, Parser)]
#[command(name = "chiefs", version, about = "Chief series, embedding predicates and hypercentres of permutation groups")]
struct Cli {
    /// Largest group order the tool will enumerate.
    #[arg(long, global = true)]
    max_order: Option<u64>,

    /// Worker threads for corpus runs.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled diagnostics.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Also write the loaded group to this `.grp` file.
    #[arg(long, global = true)]
    dump: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// A `.grp` file, or `builtin:EXPR` such as `builtin:symmetric(4)`.
#[derive(Debug, Args)]
struct GroupArg {
    group: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the group order.
    Order(GroupArg),
    /// Print the normal-subgroup lattice: nodes and cover edges.
    Lattice(GroupArg),
    /// Print one chief series with its factor orders.
    ChiefSeries(GroupArg),
    /// Decide membership in a class such as `supersolvable` or `p-nilpotent`.
    Classify {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        class: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Compute a characteristic subgroup (`Z`, `Zinf`, `Phi`, `F`, `Op`,
    /// `Op'`, `O^p`, `socle`, `E`, `Fstar`, `Fstarp`, `Omega1`, `Omega2`,
    /// `Psi`) or a hypercentre (`ZF` with `--formation`).
    Char {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        p: Option<u64>,
        /// `U`, `N`, `U<p>` or `N<p>`, for `--kind ZF`.
        #[arg(long)]
        formation: Option<String>,
    },
    /// Decide an embedding predicate for a subgroup.
    Check {
        #[command(flatten)]
        g: GroupArg,
        /// `pi`, `partial_pi`, `cap`, `partial_cap`, `quasinormal`,
        /// `s_quasinormal`, `s_semipermutable`, `ss_quasinormal`,
        /// `s_qn_embedded`, `s_cond_permutable`, `tau_quasinormal`,
        /// `u_hyp_embedded`, `s_embedded`, `pi_normal`, `weakly_s_permutable`,
        /// `weakly_s_semipermutable` or `weakly_tau_quasinormal`
        #[arg(long)]
        predicate: String,
        /// Generators in cycle notation, e.g. `(1 2 3),(4 5)`.
        #[arg(long, conflicts_with = "subgroup_file", required_unless_present = "subgroup_file")]
        subgroup: Option<String>,
        /// A `.sub` file of generators.
        #[arg(long)]
        subgroup_file: Option<PathBuf>,
    },
    /// Run verifier suites on one group.
    Verify {
        #[command(flatten)]
        g: GroupArg,
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "statements")]
        suite: String,
        /// Restrict to these statements, e.g. `P1.3,ThmA`.
        #[arg(long, value_delimiter = ',')]
        statement: Vec<String>,
        /// A `.sub` file for the separation check.
        #[arg(long)]
        separating: Option<PathBuf>,
    },
    /// Corpus operations.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    /// Run suites over every manifest entry.
    Run {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Group(GroupError),
    Usage(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::Group(e)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Group(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(m) = cli.max_order {
        caps.max_order = m;
    }
    caps
}

fn load(cli: &Cli, arg: &GroupArg) -> Result<Group, Failure> {
    let caps = caps(cli);
    let g = match arg.group.strip_prefix("builtin:") {
        Some(expr) => {
            let g = builtin(expr)?;
            Group::with_caps(g.degree(), g.generators().to_vec(), caps)?
        }
        None => load_grp(Path::new(&arg.group), caps)?,
    };
    if let Some(path) = &cli.dump {
        fs::write(path, write_grp(&g)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(g)
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    } else {
        print!("{}", text());
    }
}

fn gens(g: &Group, h: &SubgroupRef) -> Result<Vec<String>, Failure> {
    Ok(g.canonical_generators(h)?.iter().map(|p| p.to_string()).collect())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Order(a) => {
            let g = load(cli, a)?;
            let v = json!({"order": g.order(), "degree": g.degree()});
            emit(cli, &v, || format!("{}\n", g.order()));
            Ok(true)
        }
        Command::Lattice(a) => lattice(cli, &load(cli, a)?),
        Command::ChiefSeries(a) => chief_series(cli, &load(cli, a)?),
        Command::Classify { g, class, p } => {
            let g = load(cli, g)?;
            let c = GroupClass::parse(class, *p)?;
            let verdict = g.group_class(c)?;
            let v = json!({"class": class, "p": p, "verdict": verdict});
            emit(cli, &v, || format!("{verdict}\n"));
            Ok(verdict)
        }
        Command::Char { g, kind, p, formation } => {
            let g = load(cli, g)?;
            let h = if kind == "ZF" {
                let tag: FormationTag = formation
                    .as_deref()
                    .ok_or_else(|| Failure::Usage("--kind ZF needs --formation".into()))?
                    .parse()?;
                g.z_f(tag)?
            } else {
                g.char_subgroup(kind.parse::<CharKind>()?, *p)?
            };
            let generators = gens(&g, &h)?;
            let v = json!({"kind": kind, "p": p, "formation": formation, "order": h.order(), "generators": generators});
            emit(cli, &v, || format!("order {}\ngenerators {}\n", h.order(), if generators.is_empty() { "()".into() } else { generators.join(",") }));
            Ok(true)
        }
        Command::Check {
            g,
            predicate,
            subgroup,
            subgroup_file,
        } => {
            let g = load(cli, g)?;
            let id: PredicateId = predicate.parse()?;
            let perms = match (subgroup, subgroup_file) {
                (Some(s), _) => parse_inline(s, g.degree())?,
                (_, Some(f)) => load_sub(f, g.degree())?,
                _ => unreachable!("clap requires one"),
            };
            let h = g.subgroup(&perms)?;
            let r = g.predicate(&h, id)?;
            let v = serde_json::to_value(&r).unwrap();
            emit(cli, &v, || {
                let mut s = format!("{}: {}\n", r.predicate, r.verdict);
                if !r.witness_chain.is_empty() {
                    let orders: Vec<String> = r.witness_chain.iter().map(u64::to_string).collect();
                    s += &format!("witness {}\n", orders.join(" < "));
                }
                for e in &r.violations {
                    s += &format!(
                        "violation edge {:?} orders {} -> {}, |D| = {}, index {}, pi {:?}\n",
                        e.edge, e.orders.0, e.orders.1, e.d_order, e.index, e.pi
                    );
                }
                s
            });
            Ok(r.verdict)
        }
        Command::Verify {
            g,
            suite,
            statement,
            separating,
        } => {
            let name = group_name(g);
            let g = load(cli, g)?;
            let statements = statement
                .iter()
                .map(|s| s.parse::<StatementId>())
                .collect::<Result<Vec<_>, _>>()?;
            let sep = match separating {
                Some(f) => Some(g.subgroup(&load_sub(f, g.degree())?)?),
                None => None,
            };
            let opts = RunOptions {
                suites: Suite::parse_list(suite)?,
                statements,
                jobs: 1,
                seed: cli.seed,
                caps: caps(cli),
            };
            let rows = run_group(&name, &g, sep.as_ref(), &opts);
            report(cli, &CorpusReport::from_rows(rows, 1), None)
        }
        Command::Corpus {
            command: CorpusCommand::Run { manifest, suite, out },
        } => {
            let m = Manifest::load(manifest)?;
            let opts = RunOptions {
                suites: Suite::parse_list(suite)?,
                statements: Vec::new(),
                jobs: cli.jobs,
                seed: cli.seed,
                caps: caps(cli),
            };
            report(cli, &run_corpus(&m, &opts)?, out.as_deref())
        }
    }
}

fn group_name(arg: &GroupArg) -> String {
    match arg.group.strip_prefix("builtin:") {
        Some(expr) => expr.to_string(),
        None => Path::new(&arg.group)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| arg.group.clone()),
    }
}

fn lattice(cli: &Cli, g: &Group) -> Outcome {
    let l = g.normal_lattice()?;
    let mut nodes = Vec::new();
    for (i, n) in l.nodes().iter().enumerate() {
        nodes.push(json!({"id": i, "order": n.order(), "generators": gens(g, n)?}));
    }
    let v = json!({"nodes": nodes, "edges": l.edges()});
    emit(cli, &v, || {
        let mut s = String::new();
        for n in &nodes {
            let gs: Vec<&str> = n["generators"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
            s += &format!("{:>4}  order {:<6} {}\n", n["id"].as_u64().unwrap(), n["order"].as_u64().unwrap(), gs.join(","));
        }
        for (a, b) in l.edges() {
            s += &format!("{a} -> {b}\n");
        }
        s
    });
    Ok(true)
}

fn chief_series(cli: &Cli, g: &Group) -> Outcome {
    let l = g.normal_lattice()?;
    let chain = g.chief_series()?;
    let orders: Vec<u64> = chain.iter().map(|&n| l.node(n).order()).collect();
    let factors: Vec<u64> = orders.windows(2).map(|w| w[1] / w[0]).collect();
    let v = json!({"nodes": chain, "orders": orders, "factor_orders": factors});
    emit(cli, &v, || {
        let o: Vec<String> = orders.iter().map(u64::to_string).collect();
        let f: Vec<String> = factors.iter().map(u64::to_string).collect();
        format!("{}\nfactors {}\n", o.join(" < "), f.join(" "))
    });
    Ok(true)
}

fn report(cli: &Cli, r: &CorpusReport, out: Option<&Path>) -> Outcome {
    if let Some(path) = out {
        fs::write(path, r.to_json()).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if cli.json {
        println!("{}", r.to_json());
    } else {
        for row in &r.rows {
            if !matches!(row.status, chiefs_verify::Status::Verified | chiefs_verify::Status::HypothesisFailed) {
                println!(
                    "{:?} {} {} {}",
                    row.status,
                    row.group,
                    row.statement,
                    serde_json::to_string(&row.bindings).unwrap()
                );
            }
        }
        let s = &r.summary;
        println!(
            "{} groups, {} rows, {} counterexamples, {} errors",
            s.groups,
            s.rows,
            s.counterexamples(),
            s.errors()
        );
    }
    Ok(r.summary.counterexamples() == 0)
}
