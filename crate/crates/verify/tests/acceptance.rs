//! Acceptance criteria 1 to 8, one PASS/FAIL line each. Exits non-zero if
//! any criterion fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chiefs::io::{load_grp, load_sub};
use chiefs::{builders, Caps, FormationTag, Group};
use chiefs_verify::implications::IMPLICATIONS;
use chiefs_verify::oracles::{CLOSURE_MAX_ORDER, ORACLE_MAX_ORDER};
use chiefs_verify::{run_corpus, CorpusReport, Manifest, RunOptions, Status};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn example_reproduction() -> Outcome {
    let start = Instant::now();
    let dir = corpus_dir();
    let g = load_grp(&dir.join("ex12.grp"), Caps::default()).map_err(|e| e.to_string())?;
    ensure(g.order() == 1875, format!("order {}", g.order()))?;
    let gens = g.generators();
    let (a, b) = (&gens[0], &gens[1]);
    let l1 = g.subgroup(&[a.clone(), b.clone()]).unwrap();
    let hp = g.subgroup(&load_sub(&dir.join("hprime.sub"), 50).unwrap()).unwrap();
    ensure(hp.order() == 25, "H' should have order 25")?;
    let l = g.normal_lattice().unwrap();
    let l1_node = l.node_of(&l1).ok_or("L1 is not normal")?;
    ensure(l.is_cover(l.bottom(), l1_node), "L1 is not minimal normal")?;

    let full = g.pi_property(&hp).unwrap();
    ensure(!full.verdict, "H' has Pi-property")?;
    let v = full
        .violations
        .iter()
        .find(|v| v.edge == (l.bottom(), l1_node))
        .ok_or("edge (1, L1) is not a violation")?;
    ensure(v.index == 3 && v.d_order == 5, format!("index {} d_order {}", v.index, v.d_order))?;
    let na = g.normalizer(&g.subgroup(&[a.clone()]).unwrap()).unwrap();
    ensure(g.order() / na.order() == 3, "|G:N_G(<a>)| != 3")?;

    let partial = g.partial_pi(&hp).unwrap();
    ensure(partial.verdict, "H' lacks partial Pi-property")?;
    let w = &partial.witness_nodes;
    ensure(w.len() == 4, format!("witness length {}", w.len()))?;
    let n = l.node(w[1]);
    let hn = g.join(&hp, n).unwrap();
    ensure(
        g.intersect(&hp, n).unwrap().is_trivial() && *l.node(w[2]) == hn && w[3] == l.top(),
        "witness is not 1 < N < H'N < G",
    )?;

    let p = g.sylow(5).unwrap();
    let order25: Vec<_> = g
        .catalog()
        .unwrap()
        .subgroups()
        .iter()
        .filter(|h| h.order() == 25 && h.is_subgroup_of(&p))
        .cloned()
        .collect();
    ensure(order25.len() >= 20, format!("{} order-25 subgroups", order25.len()))?;
    let bad = order25.iter().filter(|h| !g.partial_pi(h).unwrap().verdict).count();
    ensure(bad == 0, format!("{bad} order-25 subgroups lack partial Pi-property"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), format!("took {t:?}"))?;
    Ok(format!(
        "order 1875, violation (1, L1) index 3, witness {:?}, {} order-25 subgroups, {t:.1?}",
        partial.witness_chain,
        order25.len()
    ))
}

fn separation(r: &CorpusReport) -> Outcome {
    let rows: Vec<_> = r.rows_for("SEP").collect();
    ensure(!rows.is_empty(), "no separating subgroup declared")?;
    for row in &rows {
        ensure(
            row.status == Status::Verified
                && row.details["witness_revalidated"] == true
                && row.details["violations_revalidated"] == true,
            format!("{}: {}", row.group, row.details),
        )?;
    }
    Ok(format!("{} separating pair(s) re-validated", rows.len()))
}

const STATEMENTS: [&str; 17] = [
    "P1.3", "P1.4", "P1.5", "P1.6", "P1.7", "ThmA", "ThmB", "ThmC", "C1.8", "C1.9", "L2.3", "L2.4", "L2.6",
    "L2.12", "L2.13", "L2.14", "L2.15",
];

fn statements(r: &CorpusReport, elapsed: Duration) -> Outcome {
    ensure(r.summary.groups >= 15, format!("{} groups", r.summary.groups))?;
    for s in STATEMENTS {
        let c = r.summary.by_statement.get(s).ok_or(format!("no rows for {s}"))?;
        ensure(c.counterexample == 0, format!("{s}: {} counterexamples", c.counterexample))?;
        ensure(c.error == 0, format!("{s}: {} errors", c.error))?;
    }
    for s in ["P1.3", "P1.5", "P1.6", "L2.14", "L2.15"] {
        let v = r.summary.verified(s);
        ensure(v >= 5, format!("{s}: only {v} instances"))?;
    }
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    Ok(format!(
        "no counterexamples in {} statements over {} groups, {elapsed:.1?} at 4 jobs",
        STATEMENTS.len(),
        r.summary.groups
    ))
}

fn implications(r: &CorpusReport) -> Outcome {
    ensure(r.summary.implications.len() == IMPLICATIONS.len(), "missing implications")?;
    let mut least = u64::MAX;
    for (name, t) in &r.summary.implications {
        ensure(t.violations == 0, format!("{name}: {} violations", t.violations))?;
        ensure(t.premise_hits >= 10, format!("{name}: {} premise hits", t.premise_hits))?;
        least = least.min(t.premise_hits);
    }
    Ok(format!("{} implications, at least {least} premise hits each", IMPLICATIONS.len()))
}

/// Every group at or below `limit` has a verified row, every larger group
/// a skipped one.
fn oracle_rows(r: &CorpusReport, name: &str, limit: u64, orders: &[(String, u64)]) -> Result<usize, String> {
    let mut n = 0;
    for (group, order) in orders {
        let row = r
            .rows
            .iter()
            .find(|row| row.statement == name && &row.group == group)
            .ok_or(format!("{name} missing for {group}"))?;
        let expected = if *order <= limit { Status::Verified } else { Status::Skipped };
        ensure(row.status == expected, format!("{name} on {group}: {:?}", row.status))?;
        n += (expected == Status::Verified) as usize;
    }
    Ok(n)
}

fn oracles(r: &CorpusReport, orders: &[(String, u64)]) -> Outcome {
    let chains = oracle_rows(r, "ORACLE:partial_pi_chains", ORACLE_MAX_ORDER, orders)?;
    let lattices = oracle_rows(r, "ORACLE:normal_lattice", ORACLE_MAX_ORDER, orders)?;
    let closures = oracle_rows(r, "ORACLE:order_closure", CLOSURE_MAX_ORDER, orders)?;
    Ok(format!("chain checks on {chains}, lattices on {lattices}, closures on {closures} groups agree"))
}

fn jordan_holder(r: &CorpusReport) -> Outcome {
    let mut checked = 0;
    for row in r.rows_for("JH") {
        match row.status {
            Status::Verified => checked += 1,
            Status::Skipped => {}
            s => return Err(format!("{}: {s:?}", row.group)),
        }
    }
    let s4 = r.rows_for("JH").find(|row| row.group == "s4").ok_or("no S4 row")?;
    let mut orders: Vec<u64> = serde_json::from_value(s4.details["factor_orders"].clone()).unwrap();
    orders.sort_unstable();
    ensure(orders == [2, 3, 4], format!("S4 factors {orders:?}"))?;
    Ok(format!("{checked} groups invariant, S4 factors {{4,3,2}}"))
}

fn hypercentres(r: &CorpusReport, orders: &[(String, u64)]) -> Outcome {
    let n = oracle_rows(r, "ORACLE:hypercentre_greedy", ORACLE_MAX_ORDER, orders)?;
    let zu = |g: &Group| g.z_f(FormationTag::U).unwrap().order();
    ensure(zu(&builders::symmetric(4)) == 1, "Z_U(S4) != 1")?;
    ensure(zu(&builders::cyclic(6)) == 6, "Z_U(C6) != C6")?;
    Ok(format!("{n} groups agree, Z_U(S4) = 1, Z_U(C6) = C6"))
}

fn determinism(one: &CorpusReport, eight: &CorpusReport) -> Outcome {
    let (a, b) = (one.canonical(), eight.canonical());
    ensure(a == b, "canonical reports differ")?;
    Ok(format!("{} canonical bytes identical", a.len()))
}

fn main() -> ExitCode {
    let manifest = Manifest::load(&corpus_dir().join("corpus.toml")).expect("manifest");
    let orders: Vec<(String, u64)> = manifest
        .groups
        .iter()
        .map(|e| (e.name.clone(), e.order.expect("orders are declared")))
        .collect();
    let run = |jobs| {
        let start = Instant::now();
        let r = run_corpus(&manifest, &RunOptions { jobs, ..RunOptions::default() }).expect("corpus run");
        (r, start.elapsed())
    };
    let (four, elapsed) = run(4);
    let (one, _) = run(1);
    let (eight, _) = run(8);

    let results: [(&str, Outcome); 8] = [
        ("example reproduction", example_reproduction()),
        ("separation witness", separation(&four)),
        ("statement suites", statements(&four, elapsed)),
        ("implication matrix", implications(&four)),
        ("oracle equivalences", oracles(&four, &orders)),
        ("Jordan-Hölder invariance", jordan_holder(&four)),
        ("hypercentre consistency", hypercentres(&four, &orders)),
        ("determinism", determinism(&one, &eight)),
    ];
    let mut failed = false;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg}", i + 1),
            Err(msg) => {
                failed = true;
                println!("FAIL {} {name}: {msg}", i + 1)
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
